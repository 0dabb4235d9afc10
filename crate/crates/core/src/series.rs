//! Integer power series in one variable `h`, truncated at a fixed order.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `Σ_{k ≤ order} c_k h^k` with exact integer coefficients. Terms of degree
/// above `order` are discarded by every operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Pads with zeros or drops terms above `order`.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `1 + c·h`.
    pub fn linear(order: usize, c: &BigInt) -> Self {
        let mut s = Self::one(order);
        if order >= 1 {
            s.coeffs[1] = c.clone();
        }
        s
    }

    /// `(1 + c·h)^{-1} = Σ (−c)^k h^k`, truncated.
    pub fn inverse_of_linear(order: usize, c: &BigInt) -> Self {
        let ratio = -c;
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigInt::one();
        for _ in 0..=order {
            coeffs.push(term.clone());
            term *= &ratio;
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `h^k`; zero above the truncation order.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.order(), rhs.order(), "truncation orders differ");
        let order = self.order();
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}
