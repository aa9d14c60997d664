//! Estimation of the asymptotic profile alpha * n^beta * l^n from integer
//! sequences, plus the summation machinery behind it: the binomial lift of
//! the proper deltas, root-of-unity filter sums, and the binomial growth
//! law for half-integer exponents.
//!
//! This module is the one floating-point surface of the crate. Everything
//! feeding it (codimension tables, delta sequences) is exact; the estimators
//! work in log-space double precision and round to the discrete parameter
//! sets the theory guarantees: integer l, half-integer beta.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::Rat;

mod fm {
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }
    pub fn exp(x: f64) -> f64 {
        libm::exp(x)
    }
    pub fn pow(x: f64, y: f64) -> f64 {
        libm::pow(x, y)
    }
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }
    pub fn round(x: f64) -> f64 {
        libm::round(x)
    }
    pub fn abs(x: f64) -> f64 {
        libm::fabs(x)
    }
    pub fn cos(x: f64) -> f64 {
        libm::cos(x)
    }
    pub fn sin(x: f64) -> f64 {
        libm::sin(x)
    }
    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }
    pub fn ceil(x: f64) -> f64 {
        libm::ceil(x)
    }
}

/// Natural log of a positive big integer, stable far beyond f64 range.
pub fn ln_big(v: &BigInt) -> f64 {
    debug_assert!(v.is_positive());
    let bits = v.bits();
    if bits <= 900 {
        if let Some(f) = v.to_f64() {
            if f.is_finite() && f > 0.0 {
                return fm::ln(f);
            }
        }
    }
    let shift = bits - 53;
    let top = (v >> shift).to_f64().expect("53-bit head fits f64");
    fm::ln(top) + shift as f64 * core::f64::consts::LN_2
}

/// Inclusive range of n-values used by the estimators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: u64,
    pub hi: u64,
}

impl Window {
    pub fn new(lo: u64, hi: u64) -> Self {
        assert!(lo <= hi, "window must be ordered");
        Window { lo, hi }
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Estimator failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AsymError {
    WindowTooShort { have: usize, need: usize },
    /// A zero (or negative) value inside a window that requires positivity.
    NonPositiveWindow { n: u64 },
    DegenerateWindow { detail: String },
    OutOfRange { detail: String },
}

impl core::fmt::Display for AsymError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            AsymError::WindowTooShort { have, need } => {
                write!(f, "window has {have} points, need at least {need}")
            }
            AsymError::NonPositiveWindow { n } => {
                write!(f, "sequence is not positive at n = {n} inside the window")
            }
            AsymError::DegenerateWindow { detail } => write!(f, "degenerate window: {detail}"),
            AsymError::OutOfRange { detail } => write!(f, "window out of range: {detail}"),
        }
    }
}

impl core::error::Error for AsymError {}

/// A sequence slice with an explicit starting degree: `values[i]` is the
/// term at n = first_n + i.
#[derive(Clone, Copy)]
pub struct Sequence<'a> {
    pub values: &'a [BigInt],
    pub first_n: u64,
}

impl<'a> Sequence<'a> {
    pub fn new(values: &'a [BigInt], first_n: u64) -> Self {
        Sequence { values, first_n }
    }

    fn get(&self, n: u64) -> Option<&'a BigInt> {
        if n < self.first_n {
            return None;
        }
        self.values.get((n - self.first_n) as usize)
    }

    fn check_window(&self, w: Window, min_points: usize) -> Result<(), AsymError> {
        if w.len() < min_points {
            return Err(AsymError::WindowTooShort { have: w.len(), need: min_points });
        }
        if self.get(w.lo).is_none() || self.get(w.hi).is_none() {
            return Err(AsymError::OutOfRange {
                detail: format!(
                    "window [{}, {}] vs data n in [{}, {}]",
                    w.lo,
                    w.hi,
                    self.first_n,
                    self.first_n + self.values.len() as u64 - 1
                ),
            });
        }
        Ok(())
    }
}

/// Result of the exponential-base estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct ExponentEstimate {
    pub l: u64,
    /// pre-rounding geometric-mean ratio
    pub raw: f64,
    /// distance from `raw` to the chosen integer
    pub distance: f64,
    pub all_zero: bool,
}

/// Estimates l = lim c_{n+1}/c_n by the geometric mean of consecutive
/// ratios over the window (equivalently the telescoped ratio
/// (c_hi/c_lo)^(1/(hi-lo))), rounded to the nearest integer.
///
/// The n-th-root estimator converges like l * n^(beta/n), far too slowly at
/// desk scale; consecutive ratios converge like l * (1 + beta/n), and the
/// geometric mean averages through parity oscillation.
pub fn estimate_exponent(c: Sequence<'_>, w: Window) -> Result<ExponentEstimate, AsymError> {
    c.check_window(w, 4)?;
    let mut all_zero = true;
    for n in w.lo..=w.hi {
        let v = c.get(n).unwrap();
        if v.is_negative() {
            return Err(AsymError::NonPositiveWindow { n });
        }
        if !v.is_zero() {
            all_zero = false;
        }
    }
    if all_zero {
        return Ok(ExponentEstimate { l: 0, raw: 0.0, distance: 0.0, all_zero: true });
    }
    for n in w.lo..=w.hi {
        if c.get(n).unwrap().is_zero() {
            return Err(AsymError::NonPositiveWindow { n });
        }
    }
    let span = (w.hi - w.lo) as f64;
    let raw = fm::exp((ln_big(c.get(w.hi).unwrap()) - ln_big(c.get(w.lo).unwrap())) / span);
    let l = fm::round(raw).max(0.0) as u64;
    Ok(ExponentEstimate { l, raw, distance: fm::abs(raw - l as f64), all_zero: false })
}

/// Result of the polynomial-degree estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaEstimate {
    /// beta as an integer numerator over 2
    pub beta_num_over_2: i64,
    pub raw_slope: f64,
    /// ~95% confidence interval for the slope
    pub ci: (f64, f64),
    /// set when the interval covers more than one half-integer candidate
    pub ambiguous: bool,
}

impl BetaEstimate {
    pub fn beta(&self) -> f64 {
        self.beta_num_over_2 as f64 / 2.0
    }
}

/// Estimates beta as the least-squares slope of log(c_n / l^n) against
/// log n over the window, rounded to the nearest half-integer. The rounding
/// is principled (the theory puts beta in half-integers) but short windows
/// fail loudly through the `ambiguous` flag.
pub fn estimate_beta(c: Sequence<'_>, l: u64, w: Window) -> Result<BetaEstimate, AsymError> {
    if l < 1 {
        return Err(AsymError::DegenerateWindow { detail: "exponent l must be >= 1".into() });
    }
    c.check_window(w, 3)?;
    let ln_l = fm::ln(l as f64);
    let mut xs = Vec::with_capacity(w.len());
    let mut ys = Vec::with_capacity(w.len());
    for n in w.lo..=w.hi {
        let v = c.get(n).unwrap();
        if !v.is_positive() {
            return Err(AsymError::NonPositiveWindow { n });
        }
        xs.push(fm::ln(n as f64));
        ys.push(ln_big(v) - n as f64 * ln_l);
    }
    let m = xs.len() as f64;
    let xbar = xs.iter().sum::<f64>() / m;
    let ybar = ys.iter().sum::<f64>() / m;
    let sxx: f64 = xs.iter().map(|x| (x - xbar) * (x - xbar)).sum();
    if sxx <= 0.0 {
        return Err(AsymError::DegenerateWindow { detail: "no spread in log n".into() });
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - xbar) * (y - ybar)).sum();
    let slope = sxy / sxx;
    let intercept = ybar - slope * xbar;
    let dof = (xs.len() as i64 - 2).max(1) as f64;
    let ss_res: f64 = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum();
    let se = fm::sqrt(ss_res / dof / sxx);
    let ci = (slope - 2.0 * se, slope + 2.0 * se);
    let beta_num_over_2 = fm::round(2.0 * slope) as i64;
    let lo2 = fm::ceil(2.0 * ci.0);
    let hi2 = fm::floor(2.0 * ci.1);
    let ambiguous = hi2 - lo2 >= 1.0;
    Ok(BetaEstimate { beta_num_over_2, raw_slope: slope, ci, ambiguous })
}

/// Result of the leading-constant estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaEstimate {
    /// mean of c_n / (n^beta l^n) over the window
    pub alpha: f64,
    pub std_dev: f64,
    /// window minimum and maximum of the normalized values
    pub lo: f64,
    pub hi: f64,
    /// set when the last-quartile mean drifts more than 5% from the full mean
    pub nonconvergent: bool,
}

/// Estimates alpha as the window mean of c_n / (n^beta l^n), with the
/// window min/max giving the two-constant interval of the non-unital
/// regime.
pub fn estimate_alpha(
    c: Sequence<'_>,
    l: u64,
    beta_num_over_2: i64,
    w: Window,
) -> Result<AlphaEstimate, AsymError> {
    if l < 1 {
        return Err(AsymError::DegenerateWindow { detail: "exponent l must be >= 1".into() });
    }
    c.check_window(w, 2)?;
    let beta = beta_num_over_2 as f64 / 2.0;
    let ln_l = fm::ln(l as f64);
    let mut vals = Vec::with_capacity(w.len());
    for n in w.lo..=w.hi {
        let v = c.get(n).unwrap();
        if !v.is_positive() {
            return Err(AsymError::NonPositiveWindow { n });
        }
        vals.push(fm::exp(ln_big(v) - n as f64 * ln_l - beta * fm::ln(n as f64)));
    }
    let m = vals.len() as f64;
    let mean = vals.iter().sum::<f64>() / m;
    let var = vals.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (m - 1.0).max(1.0);
    let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let q = vals.len() - vals.len() / 4;
    let tail = &vals[q.min(vals.len() - 1)..];
    let tail_mean = tail.iter().sum::<f64>() / tail.len() as f64;
    let nonconvergent = fm::abs(tail_mean - mean) > 0.05 * fm::abs(mean);
    Ok(AlphaEstimate { alpha: mean, std_dev: fm::sqrt(var), lo, hi, nonconvergent })
}

/// The estimated asymptotic profile alpha * n^beta * l^n.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticFit {
    pub l: u64,
    /// beta stored as an integer numerator over 2
    pub beta_num_over_2: i64,
    pub alpha: f64,
    pub alpha_lo: f64,
    pub alpha_hi: f64,
    pub window: Window,
    /// per-n deviations log c_n - log(alpha n^beta l^n) over the window
    pub residuals: Vec<f64>,
    pub flags: Vec<String>,
}

impl AsymptoticFit {
    pub fn beta(&self) -> f64 {
        self.beta_num_over_2 as f64 / 2.0
    }
}

/// Composes the three estimators.
///
/// With `theorem_b` set (unital algebras) alpha is a point estimate with a
/// standard-error interval; otherwise only the two-constant window interval
/// [alpha_lo, alpha_hi] is claimed and a flag records that.
pub fn fit(c: Sequence<'_>, w: Window, theorem_b: bool) -> Result<AsymptoticFit, AsymError> {
    let exp = estimate_exponent(c, w)?;
    let mut flags = Vec::new();
    if exp.all_zero {
        flags.push("all_zero".into());
        return Ok(AsymptoticFit {
            l: 0,
            beta_num_over_2: 0,
            alpha: 0.0,
            alpha_lo: 0.0,
            alpha_hi: 0.0,
            window: w,
            residuals: Vec::new(),
            flags,
        });
    }
    if exp.distance > 0.45 {
        flags.push(format!("exponent_ratio_far_from_integer:{:.3}", exp.raw));
    }
    let beta = estimate_beta(c, exp.l.max(1), w)?;
    if beta.ambiguous {
        flags.push("beta_ambiguous".into());
    }
    let alpha = estimate_alpha(c, exp.l.max(1), beta.beta_num_over_2, w)?;
    if alpha.nonconvergent {
        flags.push("alpha_nonconvergent".into());
    }
    let (alpha_lo, alpha_hi) = if theorem_b {
        let se = alpha.std_dev / fm::sqrt(w.len() as f64);
        (alpha.alpha - 2.0 * se, alpha.alpha + 2.0 * se)
    } else {
        flags.push("alpha_interval_only".into());
        (alpha.lo, alpha.hi)
    };
    let ln_l = fm::ln(exp.l.max(1) as f64);
    let b = beta.beta_num_over_2 as f64 / 2.0;
    let ln_alpha = fm::ln(alpha.alpha.max(f64::MIN_POSITIVE));
    let mut residuals = Vec::with_capacity(w.len());
    for n in w.lo..=w.hi {
        let v = c.get(n).unwrap();
        residuals.push(ln_big(v) - (ln_alpha + b * fm::ln(n as f64) + n as f64 * ln_l));
    }
    Ok(AsymptoticFit {
        l: exp.l,
        beta_num_over_2: beta.beta_num_over_2,
        alpha: alpha.alpha,
        alpha_lo,
        alpha_hi,
        window: w,
        residuals,
        flags,
    })
}

/// c_n = sum over s of binomial(n, s) * delta_s, exactly.
pub fn binomial_lift(delta: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(delta.len());
    for n in 0..delta.len() {
        let mut c = BigInt::zero();
        for (s, d) in delta.iter().enumerate().take(n + 1) {
            c += binomial(BigInt::from(n), BigInt::from(s)) * d;
        }
        out.push(c);
    }
    out
}

/// Inverse of [`binomial_lift`]: delta_n = sum over s of
/// (-1)^(n-s) binomial(n, s) c_s. No sign checks; the codimension engine
/// wraps this with the unital/non-negativity contract.
pub fn binomial_inverse(c: &[BigInt]) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(c.len());
    for n in 0..c.len() {
        let mut d = BigInt::zero();
        for (s, cs) in c.iter().enumerate().take(n + 1) {
            let b = binomial(BigInt::from(n), BigInt::from(s)) * cs;
            if (n - s) % 2 == 0 {
                d += b;
            } else {
                d -= b;
            }
        }
        out.push(d);
    }
    out
}

#[derive(Clone, Copy, Debug)]
struct Complex {
    re: f64,
    im: f64,
}

impl Complex {
    fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    fn add(self, o: Complex) -> Complex {
        Complex::new(self.re + o.re, self.im + o.im)
    }

    fn scale(self, f: f64) -> Complex {
        Complex::new(self.re * f, self.im * f)
    }
}

fn root_of_unity(d: u64, t: u64) -> Complex {
    let theta = 2.0 * core::f64::consts::PI * (t % d) as f64 / d as f64;
    Complex::new(fm::cos(theta), fm::sin(theta))
}

/// s^beta with the summation convention at s = 0: the term is 1 for
/// beta = 0 and drops out otherwise.
fn pow_term(s: u64, beta: f64) -> f64 {
    if s == 0 {
        if beta == 0.0 {
            1.0
        } else {
            0.0
        }
    } else {
        fm::pow(s as f64, beta)
    }
}

/// Two-path evaluation of the residue-restricted binomial sum.
#[derive(Clone, Debug)]
pub struct FilterCheck {
    /// direct restriction: sum over s = m (mod d)
    pub direct: f64,
    /// root-of-unity filter: (1/d) sum over t of omega^{(s-m)t} weighted sums
    pub filtered: f64,
    /// relative disagreement including any residual imaginary part
    pub rel_err: f64,
    /// exact rational evaluation of both paths, available when beta is a
    /// non-negative integer, x is integral, and d <= 6
    pub exact: Option<(Rat, Rat)>,
}

/// Evaluates sum over {s = m (mod d), 0 <= s <= n} of
/// binomial(n,s) s^beta x^s two ways: direct restriction and the
/// root-of-unity filter. The two must agree; callers assert the tolerance.
pub fn filter_sum_check(d: u64, m: u64, n: u64, beta_num_over_2: i64, x: f64) -> FilterCheck {
    assert!(d >= 1 && m < d, "need d >= 1 and 0 <= m < d");
    let beta = beta_num_over_2 as f64 / 2.0;

    let term = |s: u64| -> f64 {
        let b = binomial(BigInt::from(n), BigInt::from(s));
        b.to_f64().unwrap_or(f64::INFINITY) * pow_term(s, beta) * fm::pow(x, s as f64)
    };

    let mut direct = 0.0;
    let mut s = m;
    while s <= n {
        direct += term(s);
        s += d;
    }

    let mut filtered = Complex::new(0.0, 0.0);
    for t in 0..d {
        let mut inner = Complex::new(0.0, 0.0);
        for s in 0..=n {
            // omega^{(s-m)t} with the exponent taken mod d (shift keeps it non-negative)
            let e = ((s + d - (m % d)) % d) * t;
            inner = inner.add(root_of_unity(d, e).scale(term(s)));
        }
        filtered = filtered.add(inner);
    }
    filtered = filtered.scale(1.0 / d as f64);

    let denom = fm::abs(direct).max(1e-30);
    let rel_err = (fm::abs(direct - filtered.re) + fm::abs(filtered.im)) / denom;

    let exact = exact_filter(d, m, n, beta_num_over_2, x);
    FilterCheck { direct, filtered: filtered.re, rel_err, exact }
}

fn exact_filter(d: u64, m: u64, n: u64, beta_num_over_2: i64, x: f64) -> Option<(Rat, Rat)> {
    if d > crate::cyclotomic::MAX_D as u64 {
        return None;
    }
    if beta_num_over_2 < 0 || beta_num_over_2 % 2 != 0 {
        return None;
    }
    if fm::floor(x) != x || fm::abs(x) > 1e15 {
        return None;
    }
    let beta_int = (beta_num_over_2 / 2) as u32;
    let xi = BigInt::from(x as i64);
    let term = |s: u64| -> BigInt {
        let pw = if s == 0 {
            if beta_int == 0 {
                BigInt::from(1)
            } else {
                BigInt::zero()
            }
        } else {
            BigInt::from(s).pow(beta_int)
        };
        binomial(BigInt::from(n), BigInt::from(s)) * pw * xi.pow(s as u32)
    };

    let mut direct = BigInt::zero();
    let mut s = m;
    while s <= n {
        direct += term(s);
        s += d;
    }

    let du = d as usize;
    let mut acc = Cyclotomic::zero(du);
    for t in 0..d {
        for s in 0..=n {
            let e = ((s + d - m) % d) * t;
            acc = acc.add(&Cyclotomic::omega_pow(du, e).scale(&term(s)));
        }
    }
    let as_int = acc
        .as_integer()
        .expect("filter sum must collapse to an integer in the cyclotomic ring");
    let filtered = Rat::new(as_int, BigInt::from(d));
    Some((Rat::from_integer(direct), filtered))
}

/// Normalized binomial growth ratios r_n =
/// (sum over s of binomial(n,s) s^beta x^s) / (n^beta (x+1)^n), computed in
/// log space. As n grows these stabilize to the constant of the binomial
/// growth law.
pub fn binomial_growth_check(beta_num_over_2: i64, x: f64, n_list: &[u64]) -> Vec<(u64, f64)> {
    assert!(x > 0.0, "growth law needs x > 0");
    let beta = beta_num_over_2 as f64 / 2.0;
    let ln_x = fm::ln(x);
    n_list
        .iter()
        .map(|&n| {
            // log binomial(n, s) built incrementally
            let mut log_terms: Vec<f64> = Vec::with_capacity(n as usize + 1);
            let mut log_binom = 0.0;
            for s in 0..=n {
                let lt = if s == 0 {
                    if beta == 0.0 {
                        0.0
                    } else {
                        f64::NEG_INFINITY
                    }
                } else {
                    log_binom + beta * fm::ln(s as f64) + s as f64 * ln_x
                };
                log_terms.push(lt);
                if s < n {
                    log_binom += fm::ln((n - s) as f64) - fm::ln((s + 1) as f64);
                }
            }
            let peak = log_terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let total: f64 = log_terms.iter().map(|&t| fm::exp(t - peak)).sum();
            let log_sum = peak + fm::ln(total);
            let log_denom = beta * fm::ln(n as f64) + n as f64 * fm::ln(x + 1.0);
            (n, fm::exp(log_sum - log_denom))
        })
        .collect()
}
