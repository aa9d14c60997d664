//! Exact-arithmetic engine for G-graded codimension sequences.
//!
//! Given a finite-dimensional algebra graded by a finite group (supplied as a
//! multiplication table plus rational structure constants), this crate computes
//!
//! - multilinear graded codimensions `c_n` and their per-composition blocks,
//! - cocharacter multiplicities `m_lambda` via weight-space dimensions and a
//!   unitriangular Kostka solve,
//! - the "proper" coefficients `a_lambda` and `delta_s` of the commutator
//!   subspace Hilbert series (for unital algebras),
//! - estimates of the asymptotic profile `alpha * n^beta * l^n` of the
//!   codimension sequence.
//!
//! Everything except the [`asymptotics`] module is exact: scalars are
//! arbitrary-precision rationals and ranks are computed over the rationals or
//! modulo 62-bit primes. The crate is `no_std` (with `alloc`); IO, file
//! formats, and the CLI live in the companion `gcodim-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod asymptotics;
pub mod codim;
pub mod cyclotomic;
pub mod linalg;
pub mod partition;
pub mod series;

pub use algebra::{AlgebraError, AlgebraSpec, GroupTable};
pub use asymptotics::AsymptoticFit;
pub use codim::{Budgets, CodimRow, CodimTable, CocharacterRow, EngineError};
pub use linalg::RankMode;
pub use partition::Partition;
pub use series::{SchurExpansion, SymSeries};

/// Exact scalar used throughout: arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for small rational constants.
pub fn rat(n: i64, d: i64) -> Rat {
    use num_bigint::BigInt;
    Rat::new(BigInt::from(n), BigInt::from(d))
}
