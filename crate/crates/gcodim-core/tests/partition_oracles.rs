//! Independent combinatorial oracles for the partition module: brute-force
//! tableau enumeration, conjugate-based strip checks, and exhaustive
//! cross-validation of the Pieri / lower-strip duality.

use gcodim_core::partition::{
    kostka, lower_strip_set, multinomial, partitions_of, pieri_expand, Partition,
};
use num_bigint::BigUint;
use proptest::prelude::*;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

/// Oracle: enumerate standard Young tableaux by placing 1..n row by row.
fn count_syt(shape: &Partition) -> u64 {
    fn rec(shape: &Partition, rows: &mut Vec<u32>, placed: u64, n: u64) -> u64 {
        if placed == n {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.height() {
            let can_extend = rows[i] < shape.part(i + 1) && (i == 0 || rows[i - 1] > rows[i]);
            if can_extend {
                rows[i] += 1;
                total += rec(shape, rows, placed + 1, n);
                rows[i] -= 1;
            }
        }
        total
    }
    let mut rows = vec![0u32; shape.height()];
    rec(shape, &mut rows, 0, shape.size())
}

/// Oracle: count semistandard fillings by brute force over all cell labels.
fn count_ssyt(shape: &Partition, content: &[u64]) -> u64 {
    let cells: Vec<(usize, usize)> = (0..shape.height())
        .flat_map(|i| (0..shape.part(i + 1) as usize).map(move |j| (i, j)))
        .collect();
    let m = content.len();
    fn rec(
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<u8>>,
        used: &mut Vec<u64>,
        content: &[u64],
        m: usize,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (i, j) = cells[idx];
        let mut total = 0;
        for letter in 1..=m as u8 {
            if used[letter as usize - 1] == content[letter as usize - 1] {
                continue;
            }
            if j > 0 && grid[i][j - 1] > letter {
                continue;
            }
            if i > 0 && grid[i - 1][j] >= letter {
                continue;
            }
            grid[i][j] = letter;
            used[letter as usize - 1] += 1;
            total += rec(cells, idx + 1, grid, used, content, m);
            used[letter as usize - 1] -= 1;
            grid[i][j] = 0;
        }
        total
    }
    let mut grid = vec![vec![0u8; shape.part(1) as usize]; shape.height()];
    let mut used = vec![0u64; m];
    rec(&cells, 0, &mut grid, &mut used, content, m)
}

/// Oracle: horizontal-strip test via conjugates (at most one added box per column).
fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    if !inner.contained_in(outer) {
        return false;
    }
    let ci = inner.conjugate();
    let co = outer.conjugate();
    (1..=co.height()).all(|j| co.part(j) - ci.part(j) <= 1)
}

#[test]
fn hook_formula_matches_tableau_enumeration_up_to_8() {
    for n in 0..=8u64 {
        for shape in partitions_of(n, None) {
            let oracle = count_syt(&shape);
            assert_eq!(shape.dim_irrep(), BigUint::from(oracle), "shape {shape}");
        }
    }
}

#[test]
fn dimension_squares_sum_to_factorial_up_to_10() {
    for n in 1..=10u64 {
        let mut total = BigUint::from(0u32);
        for shape in partitions_of(n, None) {
            let d = shape.dim_irrep();
            total += &d * &d;
        }
        let mut fact = BigUint::from(1u32);
        for i in 2..=n {
            fact *= BigUint::from(i);
        }
        assert_eq!(total, fact, "n = {n}");
    }
}

#[test]
fn kostka_matches_brute_force_fillings() {
    for n in 1..=6u64 {
        for shape in partitions_of(n, None) {
            for content in partitions_of(n, None) {
                let alpha: Vec<u64> = content.parts().iter().map(|&x| x as u64).collect();
                assert_eq!(
                    kostka(&shape, &alpha),
                    count_ssyt(&shape, &alpha),
                    "shape {shape} content {content}"
                );
            }
        }
    }
}

#[test]
fn kostka_positive_iff_dominated() {
    for n in 1..=6u64 {
        for shape in partitions_of(n, None) {
            for content in partitions_of(n, None) {
                let alpha: Vec<u64> = content.parts().iter().map(|&x| x as u64).collect();
                let positive = kostka(&shape, &alpha) > 0;
                assert_eq!(positive, shape.dominates(&content), "shape {shape} content {content}");
            }
        }
    }
}

#[test]
fn pieri_matches_conjugate_strip_oracle() {
    for n in 0..=5u64 {
        for mu in partitions_of(n, None) {
            for k in 0..=4u64 {
                let got = pieri_expand(&mu, k);
                let want: Vec<Partition> = partitions_of(n + k, None)
                    .into_iter()
                    .filter(|nu| is_horizontal_strip(&mu, nu))
                    .collect();
                assert_eq!(got, want, "mu {mu} k {k}");
            }
        }
    }
}

#[test]
fn lower_strip_duality_up_to_8() {
    for n in 0..=8u64 {
        for lambda in partitions_of(n, None) {
            let strip_set = lower_strip_set(&lambda);
            // enumerate every contained partition and test both routes
            for m in 0..=n {
                for mu in partitions_of(m, None) {
                    if !mu.contained_in(&lambda) {
                        assert!(!strip_set.contains(&mu));
                        continue;
                    }
                    let in_set = strip_set.contains(&mu);
                    let via_pieri = pieri_expand(&mu, n - m).contains(&lambda);
                    assert_eq!(in_set, via_pieri, "lambda {lambda} mu {mu}");
                    assert_eq!(in_set, is_horizontal_strip(&mu, &lambda));
                }
            }
            // membership of lambda itself, and the containment property
            assert!(strip_set.contains(&lambda));
            for mu in &strip_set {
                assert!(mu.contained_in(&lambda));
            }
        }
    }
}

#[test]
fn one_row_strip_sets() {
    for k in 1..=6u32 {
        let got = lower_strip_set(&p(&[k]));
        assert_eq!(got.len() as u32, k + 1);
        for j in 0..=k {
            let mu = if j == 0 { Partition::empty() } else { p(&[j]) };
            assert!(got.contains(&mu));
        }
    }
}

#[test]
fn multinomial_against_factorials() {
    let fact = |n: u64| (1..=n).product::<u64>().max(1);
    for a in 0..=5u64 {
        for b in 0..=5u64 {
            for c in 0..=3u64 {
                let expect = fact(a + b + c) / (fact(a) * fact(b) * fact(c));
                assert_eq!(multinomial(&[a, b, c]), BigUint::from(expect));
            }
        }
    }
}

proptest! {
    #[test]
    fn partitions_are_valid_and_lex_decreasing(n in 0u64..12, cap in 1usize..6) {
        let list = partitions_of(n, Some(cap));
        for w in list.windows(2) {
            prop_assert!(w[0] > w[1], "not strictly lex-decreasing");
        }
        for q in &list {
            prop_assert_eq!(q.size(), n);
            prop_assert!(q.height() <= cap);
        }
    }

    #[test]
    fn kostka_invariant_under_content_permutation(
        shape_pick in 0usize..10,
        perm_seed in 0u64..1000,
    ) {
        let shapes = partitions_of(5, None);
        let shape = &shapes[shape_pick % shapes.len()];
        let mut alpha: Vec<u64> = vec![2, 1, 1, 1];
        // a cheap deterministic shuffle
        let mut s = perm_seed;
        for i in (1..alpha.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            alpha.swap(i, (s % (i as u64 + 1)) as usize);
        }
        prop_assert_eq!(kostka(shape, &alpha), kostka(shape, &[2, 1, 1, 1]));
    }

    #[test]
    fn pieri_results_contain_mu_and_respect_bounds(
        mu_pick in 0usize..20,
        k in 0u64..5,
    ) {
        let mus = partitions_of(4, None);
        let mu = &mus[mu_pick % mus.len()];
        for nu in pieri_expand(mu, k) {
            prop_assert_eq!(nu.size(), mu.size() + k);
            prop_assert!(mu.contained_in(&nu));
            for i in 1..=nu.height() {
                if i >= 2 {
                    prop_assert!(nu.part(i) <= mu.part(i - 1));
                }
            }
        }
    }
}
