//! Rank computation for sparse rational matrices: exact Gaussian elimination
//! over the rationals, and a fast path modulo 62-bit primes.
//!
//! Reducing a rational matrix modulo a prime can only lower the rank (a
//! nonzero minor may vanish mod p), never raise it, and for a fixed matrix
//! only finitely many primes are bad. The policy below therefore uses exact
//! elimination on small matrices unconditionally, the modular path on large
//! ones, and `RankMode::Both` cross-checks the two.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::Rat;

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(usize, Rat)>;

/// Three 62-bit primes for the modular fast path.
pub const PRIMES: [u64; 3] = [
    4_611_686_018_427_387_847,
    4_611_686_018_427_387_817,
    4_611_686_018_427_387_787,
];

/// Matrices with at most this many conceptual entries always take the exact
/// rational path.
pub const EXACT_THRESHOLD_ENTRIES: u64 = 2000;

/// How ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// Modular fast path on large matrices, exact on small ones.
    Modular,
    /// Exact rational elimination everywhere.
    Exact,
    /// Both paths everywhere; panics on disagreement (which would indicate
    /// an unlucky prime or a bug).
    Both,
}

impl RankMode {
    pub fn parse(s: &str) -> Option<RankMode> {
        match s {
            "modular" => Some(RankMode::Modular),
            "exact" => Some(RankMode::Exact),
            "both" => Some(RankMode::Both),
            _ => None,
        }
    }
}

/// Rank of a sparse rational matrix under the given mode.
///
/// `ncols` is the conceptual column count (used for the small-matrix
/// threshold together with the row count).
pub fn rank(rows: &[SparseRow], ncols: usize, mode: RankMode) -> usize {
    let entries = rows.len() as u64 * ncols as u64;
    match mode {
        RankMode::Exact => rank_exact(rows),
        RankMode::Modular => {
            if entries <= EXACT_THRESHOLD_ENTRIES {
                rank_exact(rows)
            } else {
                rank_modular_first_good(rows)
            }
        }
        RankMode::Both => {
            let exact = rank_exact(rows);
            let modular = rank_modular_first_good(rows);
            assert_eq!(exact, modular, "modular rank disagrees with exact rank");
            exact
        }
    }
}

fn rank_modular_first_good(rows: &[SparseRow]) -> usize {
    for &p in &PRIMES {
        if let Some(r) = rank_modular(rows, p) {
            return r;
        }
    }
    // every prime divided some denominator; fall back to exact
    rank_exact(rows)
}

/// Exact rank by sparse Gaussian elimination over the rationals.
pub fn rank_exact(rows: &[SparseRow]) -> usize {
    // echelon[i] = row with pivot at pivot_cols[i], pivot normalized to 1
    let mut echelon: Vec<SparseRow> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for row in rows {
        let mut cur: SparseRow = row.clone();
        loop {
            let Some(&(lead, _)) = cur.first() else { break };
            match pivot_cols.binary_search(&lead) {
                Ok(idx) => {
                    let factor = cur[0].1.clone();
                    cur = row_sub_scaled(&cur, &echelon[idx], &factor);
                }
                Err(idx) => {
                    let inv = cur[0].1.clone();
                    for (_, v) in cur.iter_mut() {
                        *v = &*v / &inv;
                    }
                    echelon.insert(idx, cur);
                    pivot_cols.insert(idx, lead);
                    break;
                }
            }
        }
    }
    echelon.len()
}

/// a - factor * b on sparse rows (b's leading entry is 1).
fn row_sub_scaled(a: &SparseRow, b: &SparseRow, factor: &Rat) -> SparseRow {
    let mut out = SparseRow::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(factor * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - factor * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank modulo `p`; `None` when some denominator is divisible by `p`.
pub fn rank_modular(rows: &[SparseRow], p: u64) -> Option<usize> {
    let mut mod_rows: Vec<Vec<(usize, u64)>> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::with_capacity(row.len());
        for (col, v) in row {
            let rv = rat_mod(v, p)?;
            if rv != 0 {
                r.push((*col, rv));
            }
        }
        mod_rows.push(r);
    }

    let mut echelon: Vec<Vec<(usize, u64)>> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for row in mod_rows {
        let mut cur = row;
        loop {
            let Some(&(lead, lv)) = cur.first() else { break };
            match pivot_cols.binary_search(&lead) {
                Ok(idx) => {
                    cur = mod_row_sub_scaled(&cur, &echelon[idx], lv, p);
                }
                Err(idx) => {
                    let inv = mod_inv(lv, p);
                    for (_, v) in cur.iter_mut() {
                        *v = mul_mod(*v, inv, p);
                    }
                    echelon.insert(idx, cur);
                    pivot_cols.insert(idx, lead);
                    break;
                }
            }
        }
    }
    Some(echelon.len())
}

fn mod_row_sub_scaled(a: &[(usize, u64)], b: &[(usize, u64)], factor: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = p - mul_mod(factor, b[j].1, p);
            if v != p {
                out.push((b[j].0, v % p));
            }
            j += 1;
        } else {
            let sub = mul_mod(factor, b[j].1, p);
            let v = (a[i].1 + p - sub) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime: Fermat
    pow_mod(a, p - 2, p)
}

fn bigint_mod(v: &BigInt, p: u64) -> u64 {
    let m = v.mod_floor(&BigInt::from(p));
    m.to_u64().expect("mod_floor result fits u64")
}

/// Value of a rational modulo p; `None` when the denominator vanishes mod p.
pub fn rat_mod(v: &Rat, p: u64) -> Option<u64> {
    let num = bigint_mod(v.numer(), p);
    let den = bigint_mod(v.denom(), p);
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, mod_inv(den, p), p))
}

/// Quick structural sanity check used by matrix builders.
pub fn is_sorted_strict(row: &SparseRow) -> bool {
    row.windows(2).all(|w| w[0].0 < w[1].0) && row.iter().all(|(_, v)| !v.is_zero())
}

/// Signed-magnitude helper: true when every coefficient of the row is an
/// integer (used by integrality assertions on solved multiplicities).
pub fn rat_is_integer(v: &Rat) -> bool {
    v.denom().abs() == BigInt::from(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use alloc::vec;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, rat(v, 1))).collect()
    }

    #[test]
    fn rank_of_identity_like() {
        let rows = vec![row(&[(0, 1)]), row(&[(1, 2)]), row(&[(2, -3)])];
        assert_eq!(rank_exact(&rows), 3);
        assert_eq!(rank_modular(&rows, PRIMES[0]), Some(3));
    }

    #[test]
    fn rank_detects_dependence() {
        let rows = vec![
            row(&[(0, 1), (1, 2)]),
            row(&[(0, 2), (1, 4)]),
            row(&[(0, 1), (1, 3)]),
        ];
        assert_eq!(rank_exact(&rows), 2);
        assert_eq!(rank_modular(&rows, PRIMES[1]), Some(2));
        assert_eq!(rank(&rows, 2, RankMode::Both), 2);
    }

    #[test]
    fn rational_entries() {
        let rows = vec![
            vec![(0, rat(1, 2)), (1, rat(1, 3))],
            vec![(0, rat(3, 2)), (1, rat(5, 1))],
            vec![(0, rat(1, 1)), (1, rat(2, 3))],
        ];
        // row3 = 2*row1; row2 is not a multiple of row1
        assert_eq!(rank_exact(&rows), 2);
        assert_eq!(rank(&rows, 2, RankMode::Both), 2);
    }

    #[test]
    fn prime_dividing_denominator_is_skipped() {
        let p = PRIMES[0];
        let bad = Rat::new(BigInt::from(1), BigInt::from(p));
        let rows = vec![vec![(0, bad)]];
        assert_eq!(rank_modular(&rows, p), None);
        // the dispatcher falls back to another prime or exact
        assert_eq!(rank(&rows, 1, RankMode::Modular), 1);
    }

    #[test]
    fn empty_matrix() {
        let rows: Vec<SparseRow> = vec![];
        assert_eq!(rank_exact(&rows), 0);
        assert_eq!(rank(&rows, 10, RankMode::Both), 0);
    }
}
