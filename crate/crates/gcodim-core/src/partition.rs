//! Partitions, Young diagrams, tableau counting, and horizontal-strip
//! combinatorics.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers. The
//! empty partition is a first-class value: it indexes the constant term of
//! Schur expansions and belongs to the lower strip set of every one-row
//! partition.
//!
//! Canonical ordering for all list outputs is lexicographically decreasing,
//! so results are deterministic and diff-friendly.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

/// A partition: weakly decreasing positive parts. `parts` may be empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from its parts.
    ///
    /// Panics if the parts are not weakly decreasing and positive; partitions
    /// from untrusted input should go through [`Partition::try_new`].
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing and positive")
    }

    /// Fallible constructor: checks weak decrease and positivity.
    pub fn try_new(parts: Vec<u32>) -> Option<Self> {
        for i in 0..parts.len() {
            if parts[i] == 0 {
                return None;
            }
            if i + 1 < parts.len() && parts[i] < parts[i + 1] {
                return None;
            }
        }
        Some(Partition { parts })
    }

    /// The empty partition (|lambda| = 0).
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from any multiset of non-negative entries by
    /// sorting decreasingly and dropping zeros.
    pub fn from_unsorted(mut entries: Vec<u32>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        while entries.last() == Some(&0) {
            entries.pop();
        }
        Partition { parts: entries }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Height h(lambda): the number of parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    /// Size |lambda|: the number of boxes.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based index `i`, padded with zeros beyond the height.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 || i > self.parts.len() {
            0
        } else {
            self.parts[i - 1]
        }
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut conj = vec![0u32; cols];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    /// Componentwise containment: self_i <= other_i for all i.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.height()).all(|i| self.part(i) <= other.part(i))
    }

    /// Dominance order: self dominates other (both must have equal size).
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.size(), other.size());
        let mut sa = 0u64;
        let mut sb = 0u64;
        for i in 1..=self.height().max(other.height()) {
            sa += self.part(i) as u64;
            sb += other.part(i) as u64;
            if sa < sb {
                return false;
            }
        }
        true
    }

    /// Number of standard Young tableaux of this shape (the dimension of the
    /// S_n irreducible indexed by it), by the hook length formula.
    pub fn dim_irrep(&self) -> BigUint {
        let n = self.size();
        let mut numer = BigUint::one();
        for i in 2..=n {
            numer *= BigUint::from(i);
        }
        let conj = self.conjugate();
        let mut denom = BigUint::one();
        for (i, &p) in self.parts.iter().enumerate() {
            let row = i as u32 + 1;
            for j in 1..=p {
                // hook = arm + leg + 1
                let hook = (p - j) + (conj.part(j as usize) - row) + 1;
                denom *= BigUint::from(hook);
            }
        }
        numer / denom
    }
}

impl fmt::Display for Partition {
    /// Serializes as a bracketed comma-separated part list, e.g. `[4,3,1]`;
    /// the empty partition prints as `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl core::str::FromStr for Partition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use alloc::string::ToString;
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| "partition must be bracketed, e.g. [4,3,1]".to_string())?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let p: u32 = tok
                .trim()
                .parse()
                .map_err(|_| alloc::format!("bad part {tok:?}"))?;
            parts.push(p);
        }
        Partition::try_new(parts).ok_or_else(|| "parts must be weakly decreasing and positive".to_string())
    }
}

/// All partitions of `n`, optionally restricted to height <= `max_height`,
/// in lexicographically decreasing order.
pub fn partitions_of(n: u64, max_height: Option<usize>) -> Vec<Partition> {
    let cap = max_height.unwrap_or(n as usize);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(n, u32::MAX, cap, &mut stack, &mut out);
    out
}

fn gen_partitions(rem: u64, max_part: u32, rem_height: usize, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    if rem_height == 0 {
        return;
    }
    // largest first parts come first, giving lex-decreasing output
    let hi = (max_part as u64).min(rem) as u32;
    // the remaining rem boxes must fit in rem_height rows of width <= p
    for p in (1..=hi).rev() {
        if (p as u64) * (rem_height as u64) < rem {
            break;
        }
        stack.push(p);
        gen_partitions(rem - p as u64, p, rem_height - 1, stack, out);
        stack.pop();
    }
}

/// Kostka number K_{lambda,alpha}: semistandard fillings of shape `lambda`
/// with `alpha[i]` copies of i+1 (rows weakly increasing, columns strictly
/// increasing). `alpha` is any composition of |lambda|, zeros allowed;
/// the count is invariant under permuting `alpha`.
pub fn kostka(lambda: &Partition, alpha: &[u64]) -> u64 {
    let content: u64 = alpha.iter().sum();
    if content != lambda.size() {
        return 0;
    }
    // invariance under permutation lets us sort the content, which maximizes
    // sharing in the strip recursion
    let sorted = Partition::from_unsorted(alpha.iter().map(|&a| a as u32).collect());
    KostkaCache::new().get(lambda, &sorted)
}

/// Memo table for Kostka numbers, keyed by (shape, sorted content).
///
/// Worth holding onto when many Kostka numbers of related shapes are needed,
/// e.g. during a Schur-basis expansion or a cocharacter solve.
#[derive(Default)]
pub struct KostkaCache {
    memo: alloc::collections::BTreeMap<(Partition, Partition), u64>,
}

impl KostkaCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// K_{lambda,mu} for a partition content `mu` (must satisfy |mu| = |lambda|).
    pub fn get(&mut self, lambda: &Partition, mu: &Partition) -> u64 {
        if lambda.size() != mu.size() {
            return 0;
        }
        self.get_rec(lambda, mu)
    }

    fn get_rec(&mut self, lambda: &Partition, content: &Partition) -> u64 {
        if content.is_empty() {
            return if lambda.is_empty() { 1 } else { 0 };
        }
        let key = (lambda.clone(), content.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // entries equal to the largest letter occupy a horizontal strip at
        // the border: strip mu <= lambda with |lambda| - |mu| = last part
        let last = *content.parts().last().unwrap() as u64;
        let head = Partition::new(content.parts()[..content.height() - 1].to_vec());
        let mut total = 0;
        for mu in strip_predecessors(lambda, last) {
            total += self.get_rec(&mu, &head);
        }
        self.memo.insert(key, total);
        total
    }
}

/// All mu such that lambda/mu is a horizontal strip of exactly `k` boxes.
fn strip_predecessors(lambda: &Partition, k: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let h = lambda.height();
    let mut rows: Vec<u32> = Vec::with_capacity(h);
    fn rec(lambda: &Partition, i: usize, rem: u64, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let h = lambda.height();
        if i > h {
            if rem == 0 {
                out.push(Partition::from_unsorted(rows.clone()));
            }
            return;
        }
        // strip condition with zero padding: lambda_{i+1} <= mu_i <= lambda_i;
        // removing lambda_i - v boxes from row i, bounded by the remaining quota
        let lo = lambda.part(i + 1);
        let hi = lambda.part(i);
        let min_v = if (hi as u64) > rem { hi - rem as u32 } else { 0 }.max(lo);
        for v in min_v..=hi {
            let removed = (hi - v) as u64;
            rows.push(v);
            rec(lambda, i + 1, rem - removed, rows, out);
            rows.pop();
        }
    }
    rec(lambda, 1, k, &mut rows, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Pieri expansion: all partitions obtained from `mu` by adding `k` boxes, no
/// two in the same column (the horizontal-strip condition). Coefficients in
/// Pieri's rule are all 1, so each result is listed exactly once,
/// lexicographically decreasing.
pub fn pieri_expand(mu: &Partition, k: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rows: Vec<u32> = Vec::new();
    // nu_1 in [mu_1, mu_1 + k]; for i >= 2, mu_i <= nu_i <= mu_{i-1} keeps
    // the added boxes of consecutive rows out of shared columns. One extra
    // row below h(mu) is possible, of width <= mu_h.
    fn rec(mu: &Partition, i: usize, rem: u64, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > mu.height() + 1 {
            if rem == 0 {
                out.push(Partition::from_unsorted(rows.clone()));
            }
            return;
        }
        let lo = mu.part(i);
        let cap = if i == 1 { lo as u64 + rem } else { mu.part(i - 1) as u64 };
        let hi = cap.min(lo as u64 + rem) as u32;
        for v in (lo..=hi).rev() {
            let added = (v - lo) as u64;
            rows.push(v);
            rec(mu, i + 1, rem - added, rows, out);
            rows.pop();
        }
    }
    rec(mu, 1, k, &mut rows, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// The lower strip set L_lambda: all mu with
/// `lambda_{i+1} <= mu_i <= lambda_i` for every i >= 1, reading mu padded
/// with zeros. Equivalently, mu is in L_lambda iff lambda/mu is a horizontal
/// strip. Output is lexicographically decreasing.
pub fn lower_strip_set(lambda: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut rows: Vec<u32> = Vec::new();
    fn rec(lambda: &Partition, i: usize, rows: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i > lambda.height() {
            out.push(Partition::from_unsorted(rows.clone()));
            return;
        }
        for v in lambda.part(i + 1)..=lambda.part(i) {
            rows.push(v);
            rec(lambda, i + 1, rows, out);
            rows.pop();
        }
    }
    rec(lambda, 1, &mut rows, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Multinomial coefficient n! / (parts_1! ... parts_s!) with n = sum(parts).
pub fn multinomial(parts: &[u64]) -> BigUint {
    let n: u64 = parts.iter().sum();
    let mut result = BigUint::one();
    let mut i = 1u64;
    for &p in parts {
        for j in 1..=p {
            // multiply by (i)/(j) keeping integrality: n!/(prod) built as
            // prod of binomials
            result = result * BigUint::from(i) / BigUint::from(j);
            i += 1;
        }
    }
    let _ = n;
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partitions_of_zero_is_empty_partition() {
        assert_eq!(partitions_of(0, None), vec![Partition::empty()]);
    }

    #[test]
    fn partitions_of_four_lex_decreasing() {
        let got = partitions_of(4, None);
        let want = vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])];
        assert_eq!(got, want);
    }

    #[test]
    fn partitions_of_four_height_two() {
        let got = partitions_of(4, Some(2));
        assert_eq!(got, vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]);
    }

    #[test]
    fn partition_counts_match_euler() {
        // p(n) for n = 0..=10
        let expect = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(partitions_of(n as u64, None).len(), e, "p({n})");
        }
    }

    #[test]
    fn dim_irrep_examples() {
        for n in 1..=8u32 {
            let row: Vec<u32> = vec![n];
            assert_eq!(p(&row).dim_irrep(), BigUint::from(1u32));
        }
        assert_eq!(p(&[1, 1, 1]).dim_irrep(), BigUint::from(1u32));
        assert_eq!(p(&[2, 1]).dim_irrep(), BigUint::from(2u32));
    }

    #[test]
    fn kostka_examples() {
        // content = shape has the unique row-i-filled-with-i filling
        assert_eq!(kostka(&p(&[3, 2]), &[3, 2]), 1);
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1, 1]), 2);
        assert_eq!(kostka(&p(&[2, 1]), &[2, 1]), 1);
        assert_eq!(kostka(&p(&[2, 1]), &[1, 2]), 1);
        // size mismatch
        assert_eq!(kostka(&p(&[2, 1]), &[1, 1]), 0);
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_expand(&p(&[2, 1]), 0), vec![p(&[2, 1])]);
        assert_eq!(pieri_expand(&p(&[1]), 1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            pieri_expand(&p(&[2, 1]), 2),
            vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])]
        );
        assert_eq!(pieri_expand(&Partition::empty(), 3), vec![p(&[3])]);
    }

    #[test]
    fn lower_strip_set_examples() {
        let got = lower_strip_set(&p(&[3]));
        assert_eq!(got, vec![p(&[3]), p(&[2]), p(&[1]), Partition::empty()]);
        let got = lower_strip_set(&p(&[2, 1]));
        assert_eq!(got, vec![p(&[2, 1]), p(&[2]), p(&[1, 1]), p(&[1])]);
    }

    #[test]
    fn display_and_parse_roundtrip() {
        assert_eq!(p(&[4, 3, 1]).to_string(), "[4,3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[4,3,1]".parse::<Partition>().unwrap(), p(&[4, 3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
    }

    #[test]
    fn multinomial_small() {
        assert_eq!(multinomial(&[2, 1]), BigUint::from(3u32));
        assert_eq!(multinomial(&[3, 3]), BigUint::from(20u32));
        assert_eq!(multinomial(&[1, 1, 1]), BigUint::from(6u32));
        assert_eq!(multinomial(&[0, 0]), BigUint::from(1u32));
    }
}
