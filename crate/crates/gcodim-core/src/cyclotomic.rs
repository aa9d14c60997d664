//! Exact arithmetic in the cyclotomic integer rings Z[omega_d] for d <= 6,
//! represented as Z[x] modulo the d-th cyclotomic polynomial.
//!
//! Used to verify the root-of-unity filter identity and the integer-exponent
//! filter sums exactly, with no floating point.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Supported moduli.
pub const MAX_D: usize = 6;

/// Coefficients of the d-th cyclotomic polynomial, ascending, monic.
fn phi(d: usize) -> Vec<i64> {
    match d {
        1 => vec![-1, 1],
        2 => vec![1, 1],
        3 => vec![1, 1, 1],
        4 => vec![1, 0, 1],
        5 => vec![1, 1, 1, 1, 1],
        6 => vec![1, -1, 1],
        _ => panic!("cyclotomic arithmetic implemented for d <= 6, got {d}"),
    }
}

/// Element of Z[omega_d] in the power basis 1, omega, .., omega^(phi(d)-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    d: usize,
    coeffs: Vec<BigInt>,
}

impl Cyclotomic {
    pub fn zero(d: usize) -> Self {
        let deg = phi(d).len() - 1;
        Cyclotomic { d, coeffs: vec![BigInt::zero(); deg] }
    }

    pub fn from_int(d: usize, v: BigInt) -> Self {
        let mut out = Self::zero(d);
        out.coeffs[0] = v;
        out
    }

    /// A primitive d-th root of unity.
    pub fn omega(d: usize) -> Self {
        let mut out = Self::zero(d);
        if out.coeffs.len() == 1 {
            // phi_1: omega = 1; phi_2: omega = -1
            out.coeffs[0] = if d == 1 { BigInt::one() } else { -BigInt::one() };
        } else {
            out.coeffs[1] = BigInt::one();
        }
        out
    }

    /// omega^e, exponent reduced mod d.
    pub fn omega_pow(d: usize, e: u64) -> Self {
        let e = (e % d as u64) as usize;
        let mut acc = Self::from_int(d, BigInt::one());
        let w = Self::omega(d);
        for _ in 0..e {
            acc = acc.mul(&w);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic { d: self.d, coeffs }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Cyclotomic { d: self.d, coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.d, other.d);
        let deg = self.coeffs.len();
        let mut raw = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        // reduce modulo the monic cyclotomic polynomial
        let p = phi(self.d);
        let pd = p.len() - 1;
        for i in (pd..raw.len()).rev() {
            if raw[i].is_zero() {
                continue;
            }
            let lead = raw[i].clone();
            raw[i] = BigInt::zero();
            for (j, &pc) in p.iter().enumerate().take(pd) {
                raw[i - pd + j] -= &lead * BigInt::from(pc);
            }
        }
        raw.truncate(deg);
        Cyclotomic { d: self.d, coeffs: raw }
    }

    /// The value as a plain integer when all higher power-basis coordinates
    /// vanish (the power basis is a Z-basis, so this is well defined).
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}
