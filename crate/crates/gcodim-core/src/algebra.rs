//! Finite groups by multiplication table and finite-dimensional graded
//! algebras by rational structure constants.
//!
//! Validation happens entirely at construction time and is exhaustive: group
//! axioms on all triples, bilinear associativity on all basis triples,
//! grading compatibility on all basis pairs, and unit laws. A value of
//! [`AlgebraSpec`] therefore always denotes an honest associative graded
//! algebra, and the codimension engine can evaluate in it without rechecks.
//!
//! Scalars are exact rationals. Ranks downstream are computed over the
//! rationals (or modulo large primes), which is insensitive to extending the
//! ground field, so characteristic-zero results are not affected by the
//! field not being algebraically closed.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::Rat;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    labels: Vec<String>,
    /// table[i][j] = index of g_i * g_j
    table: Vec<Vec<usize>>,
    identity: usize,
}

/// Violations of the group axioms, with witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    BadShape { detail: String },
    NotLatinSquare { row_or_col: String, index: usize },
    IdentityLawFails { element: usize },
    NotAssociative { i: usize, j: usize, k: usize },
    UnknownElement { label: String },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::BadShape { detail } => write!(f, "malformed group table: {detail}"),
            GroupError::NotLatinSquare { row_or_col, index } => {
                write!(f, "table is not a Latin square: duplicate in {row_or_col} {index}")
            }
            GroupError::IdentityLawFails { element } => {
                write!(f, "identity law fails on element index {element}")
            }
            GroupError::NotAssociative { i, j, k } => {
                write!(f, "group not associative: witness triple ({i},{j},{k})")
            }
            GroupError::UnknownElement { label } => write!(f, "unknown group element {label:?}"),
        }
    }
}

impl core::error::Error for GroupError {}

impl GroupTable {
    /// Validates and builds a group from an index table.
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self, GroupError> {
        let s = labels.len();
        if s == 0 {
            return Err(GroupError::BadShape { detail: "empty element list".to_string() });
        }
        if identity >= s {
            return Err(GroupError::BadShape { detail: "identity index out of range".to_string() });
        }
        if table.len() != s || table.iter().any(|row| row.len() != s) {
            return Err(GroupError::BadShape { detail: format!("table must be {s}x{s}") });
        }
        for row in &table {
            for &v in row {
                if v >= s {
                    return Err(GroupError::BadShape { detail: format!("entry {v} out of range") });
                }
            }
        }
        // Latin square
        for (i, row) in table.iter().enumerate() {
            let mut seen = vec![false; s];
            for &v in row {
                if seen[v] {
                    return Err(GroupError::NotLatinSquare { row_or_col: "row".to_string(), index: i });
                }
                seen[v] = true;
            }
        }
        for j in 0..s {
            let mut seen = vec![false; s];
            for row in table.iter() {
                let v = row[j];
                if seen[v] {
                    return Err(GroupError::NotLatinSquare { row_or_col: "column".to_string(), index: j });
                }
                seen[v] = true;
            }
        }
        // identity law
        for i in 0..s {
            if table[identity][i] != i || table[i][identity] != i {
                return Err(GroupError::IdentityLawFails { element: i });
            }
        }
        // associativity on all triples
        for i in 0..s {
            for j in 0..s {
                for k in 0..s {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(GroupError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        Ok(GroupTable { labels, table, identity })
    }

    /// The cyclic group of order `n`, elements labelled e, g, g2, ..    .
    pub fn cyclic(n: usize) -> GroupTable {
        assert!(n >= 1);
        let labels: Vec<String> = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        GroupTable::new(labels, table, 0).expect("cyclic table is a group")
    }

    /// The trivial group.
    pub fn trivial() -> GroupTable {
        GroupTable::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Canonical element order for composition indexing: non-identity
    /// elements in table order, identity last.
    pub fn engine_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.order()).filter(|&i| i != self.identity).collect();
        order.push(self.identity);
        order
    }
}

/// Errors from building or using a graded algebra spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    Group(GroupError),
    BadShape { detail: String },
    /// (b_i b_j) b_k != b_i (b_j b_k)
    Associativity { i: usize, j: usize, k: usize },
    /// b_i * b_j has a nonzero coordinate outside the grading(i)*grading(j) component
    Grading { i: usize, j: usize, coord: usize },
    Unit { reason: String },
    Dimension { expected: usize, got: usize },
    UnknownGroupElement { label: String },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Group(e) => write!(f, "{e}"),
            AlgebraError::BadShape { detail } => write!(f, "malformed algebra spec: {detail}"),
            AlgebraError::Associativity { i, j, k } => {
                write!(f, "product not associative: witness basis triple ({i},{j},{k})")
            }
            AlgebraError::Grading { i, j, coord } => write!(
                f,
                "grading violated: b{i}*b{j} has a component at coordinate {coord} outside its homogeneous degree"
            ),
            AlgebraError::Unit { reason } => write!(f, "unit element invalid: {reason}"),
            AlgebraError::Dimension { expected, got } => {
                write!(f, "vector has dimension {got}, expected {expected}")
            }
            AlgebraError::UnknownGroupElement { label } => write!(f, "unknown group element {label:?}"),
        }
    }
}

impl core::error::Error for AlgebraError {}

impl From<GroupError> for AlgebraError {
    fn from(e: GroupError) -> Self {
        AlgebraError::Group(e)
    }
}

/// A finite-dimensional G-graded algebra with rational structure constants.
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    group: GroupTable,
    basis: Vec<String>,
    /// products[i][j] = coordinates of b_i * b_j
    products: Vec<Vec<Vec<Rat>>>,
    /// grading[i] = group element index of b_i
    grading: Vec<usize>,
    unit: Option<Vec<Rat>>,
}

impl AlgebraSpec {
    /// Validates and builds a spec. All invariants are checked exactly:
    /// associativity on every basis triple, grading compatibility on every
    /// basis pair, and (when a unit is supplied) the unit laws plus
    /// e-homogeneity of the unit.
    pub fn new(
        group: GroupTable,
        basis: Vec<String>,
        products: Vec<Vec<Vec<Rat>>>,
        grading: Vec<usize>,
        unit: Option<Vec<Rat>>,
    ) -> Result<Self, AlgebraError> {
        let k = basis.len();
        if k == 0 {
            return Err(AlgebraError::BadShape { detail: "empty basis".to_string() });
        }
        if products.len() != k || products.iter().any(|row| row.len() != k) {
            return Err(AlgebraError::BadShape { detail: format!("products must be {k}x{k}") });
        }
        for row in &products {
            for entry in row {
                if entry.len() != k {
                    return Err(AlgebraError::BadShape {
                        detail: format!("product vector has length {}, expected {k}", entry.len()),
                    });
                }
            }
        }
        if grading.len() != k {
            return Err(AlgebraError::BadShape { detail: "grading must cover every basis element".to_string() });
        }
        for &g in &grading {
            if g >= group.order() {
                return Err(AlgebraError::BadShape { detail: format!("grading index {g} out of range") });
            }
        }
        let spec = AlgebraSpec { group, basis, products, grading, unit: None };

        // grading compatibility: b_i b_j supported on the grading(i)*grading(j) component
        for i in 0..k {
            for j in 0..k {
                let target = spec.group.mul(spec.grading[i], spec.grading[j]);
                for (coord, c) in spec.products[i][j].iter().enumerate() {
                    if !c.is_zero() && spec.grading[coord] != target {
                        return Err(AlgebraError::Grading { i, j, coord });
                    }
                }
            }
        }

        // associativity on all basis triples
        for i in 0..k {
            for j in 0..k {
                let ij = spec.products[i][j].clone();
                for l in 0..k {
                    let left = spec.mul_basis_right(&ij, l);
                    let jl = &spec.products[j][l];
                    let right = spec.mul_basis_left(i, jl);
                    if left != right {
                        return Err(AlgebraError::Associativity { i, j, k: l });
                    }
                }
            }
        }

        // unit checks
        let mut spec = spec;
        if let Some(u) = unit {
            if u.len() != k {
                return Err(AlgebraError::Dimension { expected: k, got: u.len() });
            }
            let e = spec.group.identity();
            for (coord, c) in u.iter().enumerate() {
                if !c.is_zero() && spec.grading[coord] != e {
                    return Err(AlgebraError::Unit {
                        reason: format!("unit has a nonzero coordinate {coord} outside the identity component"),
                    });
                }
            }
            for i in 0..k {
                let mut basis_vec = vec![Rat::zero(); k];
                basis_vec[i] = Rat::from_integer(1.into());
                if spec.multiply_unchecked(&u, &basis_vec) != basis_vec
                    || spec.multiply_unchecked(&basis_vec, &u) != basis_vec
                {
                    return Err(AlgebraError::Unit { reason: format!("u*b{i} or b{i}*u differs from b{i}") });
                }
            }
            spec.unit = Some(u);
        }
        Ok(spec)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    pub fn grading(&self) -> &[usize] {
        &self.grading
    }

    pub fn unit(&self) -> Option<&[Rat]> {
        self.unit.as_deref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    /// Coordinates of b_i * b_j.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rat] {
        &self.products[i][j]
    }

    /// Bilinear product of coordinate vectors.
    pub fn multiply(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, AlgebraError> {
        let k = self.dim();
        if x.len() != k {
            return Err(AlgebraError::Dimension { expected: k, got: x.len() });
        }
        if y.len() != k {
            return Err(AlgebraError::Dimension { expected: k, got: y.len() });
        }
        Ok(self.multiply_unchecked(x, y))
    }

    fn multiply_unchecked(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let k = self.dim();
        let mut out = vec![Rat::zero(); k];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let factor = xi * yj;
                for (c, s) in self.products[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[c] += &factor * s;
                    }
                }
            }
        }
        out
    }

    /// x * b_j for a coordinate vector x.
    fn mul_basis_right(&self, x: &[Rat], j: usize) -> Vec<Rat> {
        let k = self.dim();
        let mut out = vec![Rat::zero(); k];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (c, s) in self.products[i][j].iter().enumerate() {
                if !s.is_zero() {
                    out[c] += xi * s;
                }
            }
        }
        out
    }

    /// b_i * y for a coordinate vector y.
    fn mul_basis_left(&self, i: usize, y: &[Rat]) -> Vec<Rat> {
        let k = self.dim();
        let mut out = vec![Rat::zero(); k];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            for (c, s) in self.products[i][j].iter().enumerate() {
                if !s.is_zero() {
                    out[c] += yj * s;
                }
            }
        }
        out
    }

    /// Indices of basis elements in the homogeneous component of `g`.
    pub fn homogeneous_basis(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.grading[i] == g).collect()
    }

    /// Same, addressed by group element label.
    pub fn homogeneous_basis_by_label(&self, label: &str) -> Result<Vec<usize>, AlgebraError> {
        let g = self
            .group
            .index_of(label)
            .ok_or_else(|| AlgebraError::UnknownGroupElement { label: label.to_string() })?;
        Ok(self.homogeneous_basis(g))
    }
}

/// Ready-made algebras used by tests, the self-test battery, and docs.
pub mod presets {
    use super::*;

    fn one() -> Rat {
        Rat::from_integer(1.into())
    }

    fn basis_vectors(k: usize) -> Vec<Vec<Vec<Rat>>> {
        vec![vec![vec![Rat::zero(); k]; k]; k]
    }

    /// The ground field itself: one-dimensional, trivial group, unital.
    pub fn field() -> AlgebraSpec {
        let mut prod = basis_vectors(1);
        prod[0][0][0] = one();
        AlgebraSpec::new(
            GroupTable::trivial(),
            vec!["1".into()],
            prod,
            vec![0],
            Some(vec![one()]),
        )
        .expect("field preset is valid")
    }

    /// Group algebra of Z2 with its natural Z2-grading: basis 1, u with
    /// u^2 = 1, grading 1 -> e, u -> g.
    pub fn group_algebra_z2() -> AlgebraSpec {
        let mut prod = basis_vectors(2);
        prod[0][0][0] = one(); // 1*1 = 1
        prod[0][1][1] = one(); // 1*u = u
        prod[1][0][1] = one(); // u*1 = u
        prod[1][1][0] = one(); // u*u = 1
        AlgebraSpec::new(
            GroupTable::cyclic(2),
            vec!["1".into(), "u".into()],
            prod,
            vec![0, 1],
            Some(vec![one(), Rat::zero()]),
        )
        .expect("FZ2 preset is valid")
    }

    /// Full 2x2 matrix algebra with the trivial grading. Basis order:
    /// E11, E12, E21, E22.
    pub fn mat2_trivial() -> AlgebraSpec {
        let pairs = [(1, 1), (1, 2), (2, 1), (2, 2)];
        let idx = |r: u32, c: u32| pairs.iter().position(|&p| p == (r, c)).unwrap();
        let mut prod = basis_vectors(4);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate() {
                if b == c {
                    prod[i][j][idx(a, d)] = one();
                }
            }
        }
        let mut unit = vec![Rat::zero(); 4];
        unit[idx(1, 1)] = one();
        unit[idx(2, 2)] = one();
        AlgebraSpec::new(
            GroupTable::trivial(),
            vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
            prod,
            vec![0; 4],
            Some(unit),
        )
        .expect("M2 preset is valid")
    }

    /// 2x2 upper triangular matrices with the Z2-grading that puts the
    /// diagonal in degree e and the strictly upper part in degree g.
    /// Basis order: E11, E22, E12.
    pub fn upper_triangular_z2() -> AlgebraSpec {
        let mut prod = basis_vectors(3);
        prod[0][0][0] = one(); // E11 E11 = E11
        prod[1][1][1] = one(); // E22 E22 = E22
        prod[0][2][2] = one(); // E11 E12 = E12
        prod[2][1][2] = one(); // E12 E22 = E12
        AlgebraSpec::new(
            GroupTable::cyclic(2),
            vec!["E11".into(), "E22".into(), "E12".into()],
            prod,
            vec![0, 0, 1],
            Some(vec![one(), one(), Rat::zero()]),
        )
        .expect("UT2 preset is valid")
    }

    /// Two-dimensional nilpotent algebra of index 3: b1*b1 = b2, all other
    /// products zero. Trivial group, no unit.
    pub fn nilpotent_index3() -> AlgebraSpec {
        let mut prod = basis_vectors(2);
        prod[0][0][1] = one();
        AlgebraSpec::new(
            GroupTable::trivial(),
            vec!["b1".into(), "b2".into()],
            prod,
            vec![0, 0],
            None,
        )
        .expect("nilpotent preset is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn cyclic_groups_are_valid() {
        for n in 1..=6 {
            let g = GroupTable::cyclic(n);
            assert_eq!(g.order(), n);
            assert_eq!(g.identity(), 0);
        }
    }

    #[test]
    fn engine_order_puts_identity_last() {
        let g = GroupTable::cyclic(3);
        assert_eq!(g.engine_order(), alloc::vec![1, 2, 0]);
    }

    #[test]
    fn non_latin_table_rejected() {
        let labels = alloc::vec!["e".to_string(), "a".to_string()];
        let table = alloc::vec![alloc::vec![0, 1], alloc::vec![1, 1]];
        match GroupTable::new(labels, table, 0) {
            Err(GroupError::NotLatinSquare { .. }) => {}
            other => panic!("expected NotLatinSquare, got {other:?}"),
        }
    }

    #[test]
    fn identity_failure_detected() {
        // swap rows so the claimed identity does not act trivially
        let labels = alloc::vec!["e".to_string(), "a".to_string()];
        let table = alloc::vec![alloc::vec![1, 0], alloc::vec![0, 1]];
        match GroupTable::new(labels, table, 0) {
            Err(GroupError::IdentityLawFails { .. }) => {}
            other => panic!("expected IdentityLawFails, got {other:?}"),
        }
    }

    #[test]
    fn order_five_loop_is_not_associative() {
        // a Latin square with two-sided identity that is not a group
        let labels: Vec<String> = ["e", "a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
        let table = alloc::vec![
            alloc::vec![0, 1, 2, 3, 4],
            alloc::vec![1, 0, 3, 4, 2],
            alloc::vec![2, 4, 0, 1, 3],
            alloc::vec![3, 2, 4, 0, 1],
            alloc::vec![4, 3, 1, 2, 0],
        ];
        match GroupTable::new(labels, table, 0) {
            Err(GroupError::NotAssociative { .. }) => {}
            other => panic!("expected NotAssociative, got {other:?}"),
        }
    }

    #[test]
    fn presets_validate() {
        presets::field();
        presets::group_algebra_z2();
        presets::mat2_trivial();
        presets::upper_triangular_z2();
        presets::nilpotent_index3();
    }

    #[test]
    fn fz2_products() {
        let a = presets::group_algebra_z2();
        let u = alloc::vec![rat(0, 1), rat(1, 1)];
        let got = a.multiply(&u, &u).unwrap();
        assert_eq!(got, alloc::vec![rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn unit_law_on_vectors() {
        let a = presets::group_algebra_z2();
        let u = a.unit().unwrap().to_vec();
        let x = alloc::vec![rat(3, 7), rat(-2, 5)];
        assert_eq!(a.multiply(&u, &x).unwrap(), x);
        assert_eq!(a.multiply(&x, &u).unwrap(), x);
    }

    #[test]
    fn homogeneous_components() {
        let a = presets::group_algebra_z2();
        assert_eq!(a.homogeneous_basis(0), alloc::vec![0]);
        assert_eq!(a.homogeneous_basis(1), alloc::vec![1]);
        assert_eq!(a.homogeneous_basis_by_label("g").unwrap(), alloc::vec![1]);
        assert!(a.homogeneous_basis_by_label("h").is_err());

        let m = presets::mat2_trivial();
        assert_eq!(m.homogeneous_basis(0).len(), 4);
    }

    #[test]
    fn grading_violation_detected() {
        // u*u = u with grading(u) = g would land in the g-component while
        // g*g = e demands the e-component
        let mut prod = alloc::vec![alloc::vec![alloc::vec![Rat::zero(); 2]; 2]; 2];
        prod[0][0][0] = rat(1, 1);
        prod[0][1][1] = rat(1, 1);
        prod[1][0][1] = rat(1, 1);
        prod[1][1][1] = rat(1, 1); // u*u = u: wrong component
        let err = AlgebraSpec::new(
            GroupTable::cyclic(2),
            alloc::vec!["1".into(), "u".into()],
            prod,
            alloc::vec![0, 1],
            None,
        )
        .unwrap_err();
        match err {
            AlgebraError::Grading { i: 1, j: 1, coord: 1 } => {}
            other => panic!("expected Grading error, got {other:?}"),
        }
    }

    #[test]
    fn associativity_violation_detected() {
        // (b1 b1) b1 = b2 b1 = b2 while b1 (b1 b1) = b1 b2 = b1
        let mut prod = alloc::vec![alloc::vec![alloc::vec![Rat::zero(); 2]; 2]; 2];
        prod[0][0][1] = rat(1, 1); // b1 b1 = b2
        prod[0][1][0] = rat(1, 1); // b1 b2 = b1
        prod[1][0][1] = rat(1, 1); // b2 b1 = b2
        let err = AlgebraSpec::new(
            GroupTable::trivial(),
            alloc::vec!["b1".into(), "b2".into()],
            prod,
            alloc::vec![0, 0],
            None,
        )
        .unwrap_err();
        match err {
            AlgebraError::Associativity { .. } => {}
            other => panic!("expected Associativity error, got {other:?}"),
        }
    }

    #[test]
    fn wrong_unit_rejected() {
        let mut prod = alloc::vec![alloc::vec![alloc::vec![Rat::zero(); 1]; 1]; 1];
        prod[0][0][0] = rat(1, 1);
        let err = AlgebraSpec::new(
            GroupTable::trivial(),
            alloc::vec!["x".into()],
            prod,
            alloc::vec![0],
            Some(alloc::vec![rat(2, 1)]),
        )
        .unwrap_err();
        match err {
            AlgebraError::Unit { .. } => {}
            other => panic!("expected Unit error, got {other:?}"),
        }
    }

    #[test]
    fn dimension_mismatch() {
        let a = presets::field();
        assert!(matches!(
            a.multiply(&[rat(1, 1), rat(2, 1)], &[rat(1, 1)]),
            Err(AlgebraError::Dimension { expected: 1, got: 2 })
        ));
    }
}
