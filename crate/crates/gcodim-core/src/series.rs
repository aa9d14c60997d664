//! Truncated symmetric power series, Schur-basis expansions, and the
//! Hilbert-series transforms connecting cocharacter multiplicities to the
//! proper coefficients.
//!
//! A [`SymSeries`] stores a symmetric polynomial in `k` variables truncated
//! at total degree `N`. Symmetry is exploited by keying coefficients on the
//! sorted exponent vector (a [`Partition`]): the stored value is the
//! coefficient of every monomial in that orbit.
//!
//! A [`SchurExpansion`] stores coefficients against Schur functions instead.
//! Conversion is a unitriangular solve against the Kostka matrix in
//! lexicographic-descending order (which refines dominance), so it is exact
//! over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::partition::{kostka, lower_strip_set, partitions_of, KostkaCache, Partition};
use crate::Rat;

/// Symmetric polynomial in `num_vars` variables, truncated at total degree
/// `trunc`, keyed by sorted exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSeries {
    num_vars: usize,
    trunc: u64,
    coeffs: BTreeMap<Partition, Rat>,
}

impl SymSeries {
    pub fn zero(num_vars: usize, trunc: u64) -> Self {
        assert!(num_vars >= 1, "need at least one variable");
        SymSeries { num_vars, trunc, coeffs: BTreeMap::new() }
    }

    pub fn one(num_vars: usize, trunc: u64) -> Self {
        let mut s = Self::zero(num_vars, trunc);
        s.set_coeff(Partition::empty(), Rat::from_integer(1.into()));
        s
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn trunc_degree(&self) -> u64 {
        self.trunc
    }

    /// Coefficient of the monomial whose sorted exponent vector is `key`.
    pub fn coeff(&self, key: &Partition) -> Rat {
        self.coeffs.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    /// Sets a coefficient; keys outside the height/degree box are rejected.
    pub fn set_coeff(&mut self, key: Partition, value: Rat) {
        assert!(key.height() <= self.num_vars, "key height exceeds variable count");
        assert!(key.size() <= self.trunc, "key degree exceeds truncation");
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &SymSeries) -> SymSeries {
        assert_eq!(self.num_vars, other.num_vars);
        assert_eq!(self.trunc, other.trunc);
        let mut out = self.clone();
        for (key, val) in &other.coeffs {
            let sum = out.coeff(key) + val;
            out.set_coeff(key.clone(), sum);
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> SymSeries {
        let mut out = SymSeries::zero(self.num_vars, self.trunc);
        if factor.is_zero() {
            return out;
        }
        for (key, val) in &self.coeffs {
            out.coeffs.insert(key.clone(), val * factor);
        }
        out
    }

    /// Expands the orbit representation into one coefficient per monomial
    /// exponent vector (length `num_vars`, unsorted).
    fn instances(&self) -> BTreeMap<Vec<u32>, Rat> {
        let mut out = BTreeMap::new();
        for (key, val) in &self.coeffs {
            for inst in orbit_instances(key, self.num_vars) {
                out.insert(inst, val.clone());
            }
        }
        out
    }

    /// Product, truncated at the shared truncation degree.
    pub fn mul(&self, other: &SymSeries) -> SymSeries {
        assert_eq!(self.num_vars, other.num_vars);
        assert_eq!(self.trunc, other.trunc);
        let mut out = SymSeries::zero(self.num_vars, self.trunc);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        let left = self.instances();
        let right = other.instances();
        // coefficient of a sorted monomial is the sum over all instance
        // pairs producing exactly that vector; unsorted sums are other
        // orbit members and are skipped
        let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
        for (lv, lc) in &left {
            let ldeg: u64 = lv.iter().map(|&e| e as u64).sum();
            for (rv, rc) in &right {
                let rdeg: u64 = rv.iter().map(|&e| e as u64).sum();
                if ldeg + rdeg > self.trunc {
                    continue;
                }
                let sum: Vec<u32> = lv.iter().zip(rv).map(|(a, b)| a + b).collect();
                if sum.windows(2).all(|w| w[0] >= w[1]) {
                    let key = Partition::from_unsorted(sum);
                    let entry = acc.entry(key).or_insert_with(Rat::zero);
                    *entry += lc * rc;
                }
            }
        }
        for (key, val) in acc {
            if !val.is_zero() {
                out.coeffs.insert(key, val);
            }
        }
        out
    }
}

/// All distinct length-`k` exponent vectors whose sorted form is `key`.
fn orbit_instances(key: &Partition, k: usize) -> Vec<Vec<u32>> {
    debug_assert!(key.height() <= k);
    let mut v: Vec<u32> = key.parts().to_vec();
    v.resize(k, 0);
    v.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(v.clone());
        if !next_permutation(&mut v) {
            break;
        }
    }
    out
}

/// In-place next lexicographic permutation; false when exhausted.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Integer or rational coefficients against Schur functions s_lambda,
/// `lambda` restricted to height <= `num_vars` and size <= `trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurExpansion {
    num_vars: usize,
    trunc: u64,
    coeffs: BTreeMap<Partition, Rat>,
}

impl SchurExpansion {
    pub fn zero(num_vars: usize, trunc: u64) -> Self {
        assert!(num_vars >= 1);
        SchurExpansion { num_vars, trunc, coeffs: BTreeMap::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn trunc_degree(&self) -> u64 {
        self.trunc
    }

    pub fn coeff(&self, key: &Partition) -> Rat {
        self.coeffs.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn set_coeff(&mut self, key: Partition, value: Rat) {
        assert!(key.height() <= self.num_vars, "s_lambda vanishes beyond the variable count");
        assert!(key.size() <= self.trunc);
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.coeffs.keys().cloned().collect()
    }

    /// Reassembles the symmetric series sum of coeff * s_lambda.
    pub fn to_series(&self) -> SymSeries {
        let mut out = SymSeries::zero(self.num_vars, self.trunc);
        for (lambda, c) in &self.coeffs {
            out = out.add(&schur_poly(lambda, self.num_vars, self.trunc).scale(c));
        }
        out
    }
}

/// The Schur polynomial s_lambda in `k` variables truncated at degree `N`:
/// the coefficient of a monomial with sorted content `gamma` is the Kostka
/// number K_{lambda,gamma}. Identically zero when h(lambda) > k.
pub fn schur_poly(lambda: &Partition, k: usize, trunc: u64) -> SymSeries {
    let mut out = SymSeries::zero(k, trunc);
    if lambda.height() > k || lambda.size() > trunc {
        return out;
    }
    for gamma in partitions_of(lambda.size(), Some(k)) {
        let count = kostka(lambda, &to_content(&gamma));
        if count > 0 {
            out.coeffs.insert(gamma, Rat::from_integer(count.into()));
        }
    }
    out
}

fn to_content(p: &Partition) -> Vec<u64> {
    p.parts().iter().map(|&x| x as u64).collect()
}

/// The Hilbert series of a free commutative polynomial ring:
/// prod 1/(1-t_i) truncated at `N`; every monomial has coefficient 1.
pub fn free_poly_series(k: usize, trunc: u64) -> SymSeries {
    let mut out = SymSeries::zero(k, trunc);
    let one = Rat::from_integer(1.into());
    for d in 0..=trunc {
        for key in partitions_of(d, Some(k)) {
            out.coeffs.insert(key, one.clone());
        }
    }
    out
}

/// The polynomial prod (1 - t_i): coefficient (-1)^j on each squarefree
/// monomial of degree j.
pub fn one_minus_vars_product(k: usize, trunc: u64) -> SymSeries {
    let mut out = SymSeries::zero(k, trunc);
    for j in 0..=k.min(trunc as usize) {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let key = Partition::from_unsorted(vec![1; j]);
        out.coeffs.insert(key, Rat::from_integer(sign.into()));
    }
    out
}

/// Expands a symmetric series in the Schur basis.
///
/// The monomial coefficient at a sorted content mu receives contributions
/// only from s_lambda with lambda dominating mu, and lex-descending order
/// refines dominance, so eliminating in that order is a unitriangular solve
/// (K_{lambda,lambda} = 1): always solvable, exactly.
pub fn expand_in_schur(f: &SymSeries) -> SchurExpansion {
    let mut out = SchurExpansion::zero(f.num_vars, f.trunc);
    let mut cache = KostkaCache::new();
    for d in 0..=f.trunc {
        // lex-decreasing list of candidate shapes of this degree
        let shapes = partitions_of(d, Some(f.num_vars));
        let mut solved: Vec<(Partition, Rat)> = Vec::new();
        for mu in &shapes {
            let mut c = f.coeff(mu);
            for (lambda, cl) in &solved {
                let k = cache.get(lambda, mu);
                if k > 0 {
                    c -= cl * Rat::from_integer(k.into());
                }
            }
            if !c.is_zero() {
                out.coeffs.insert(mu.clone(), c.clone());
            }
            solved.push((mu.clone(), c));
        }
    }
    out
}

/// Cocharacter multiplicities from proper coefficients:
/// m_lambda = sum of a_mu over mu in the lower strip set of lambda.
pub fn m_from_a(a: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero(a.num_vars, a.trunc);
    for d in 0..=a.trunc {
        for lambda in partitions_of(d, Some(a.num_vars)) {
            let mut m = Rat::zero();
            for mu in lower_strip_set(&lambda) {
                m += a.coeff(&mu);
            }
            if !m.is_zero() {
                out.coeffs.insert(lambda, m);
            }
        }
    }
    out
}

/// Proper coefficients from cocharacter multiplicities: multiply the series
/// form of `m` by prod (1 - t_i) and re-expand in the Schur basis.
///
/// The result is returned truncated at `N - k`: multiplying by a degree-k
/// polynomial consumes that much truncation headroom, so higher-degree
/// coefficients are not trusted.
pub fn a_from_m(m: &SchurExpansion) -> SchurExpansion {
    let k = m.num_vars;
    let series = m.to_series();
    let product = series.mul(&one_minus_vars_product(k, m.trunc));
    let full = expand_in_schur(&product);
    let horizon = m.trunc.saturating_sub(k as u64);
    let mut out = SchurExpansion::zero(k, horizon);
    for (key, val) in &full.coeffs {
        if key.size() <= horizon {
            out.coeffs.insert(key.clone(), val.clone());
        }
    }
    out
}
