//! Power series truncated at a fixed order.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Rational, Var};

/// Coefficient ring for [`TruncatedSeries`].
pub trait SeriesCoefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
}

impl SeriesCoefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
}

/// `Σ_{k ≤ order} c_k v^k`. Reading a coefficient above `order` is an error.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct TruncatedSeries<T = Rational> {
    var: Var,
    coeffs: Vec<T>,
}

impl<T: SeriesCoefficient> TruncatedSeries<T> {
    pub fn zero(var: Var, order: usize) -> Self {
        TruncatedSeries { var, coeffs: vec![T::zero(); order + 1] }
    }

    pub fn one(var: Var, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = T::one();
        s
    }

    /// Coefficients beyond `order` are dropped; missing ones are zero.
    pub fn from_coeffs(var: Var, order: usize, coeffs: Vec<T>) -> Self {
        let mut s = Self::zero(var, order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&T, AlgebraError> {
        self.coeffs.get(k).ok_or(AlgebraError::OutOfRange { index: k, order: self.order() })
    }

    pub fn set(&mut self, k: usize, c: T) -> Result<(), AlgebraError> {
        let order = self.order();
        let slot = self.coeffs.get_mut(k).ok_or(AlgebraError::OutOfRange { index: k, order })?;
        *slot = c;
        Ok(())
    }

    fn check_order(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.order() != rhs.order() {
            return Err(AlgebraError::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_order(rhs)?;
        Ok(TruncatedSeries {
            var: self.var,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries { var: self.var, coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.mul_with(rhs, T::mul)
    }

    /// Truncated product with a caller-supplied coefficient product.
    pub fn mul_with(&self, rhs: &Self, mul: impl Fn(&T, &T) -> T) -> Result<Self, AlgebraError> {
        self.check_order(rhs)?;
        let n = self.order();
        let mut out = Self::zero(self.var, n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&mul(a, b));
            }
        }
        Ok(out)
    }

    /// Multiply by `v^k`, dropping what falls beyond the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(self.var, n);
        for i in 0..=n.saturating_sub(k) {
            if i + k <= n {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// `exp(self)` given `exp` of the constant term, via `n E_n = Σ_k k f_k E_{n-k}`.
    pub fn exp_with(&self, e0: T, mul: impl Fn(&T, &T) -> T) -> Self {
        let n = self.order();
        let mut e = vec![e0];
        for k in 1..=n {
            let mut acc = T::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let term = mul(&self.coeffs[j], &e[k - j]).scale(&Rational::from(j));
                acc = acc.add(&term);
            }
            e.push(acc.scale(&Rational::frac(1, k as i64)));
        }
        TruncatedSeries { var: self.var, coeffs: e }
    }

    /// `exp(self)` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self, AlgebraError> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::Pole("exp of a series with nonzero constant term".into()));
        }
        Ok(self.exp_with(T::one(), T::mul))
    }
}

impl TruncatedSeries<Rational> {
    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn recip(&self) -> Result<Self, AlgebraError> {
        let inv0 = self.coeffs[0].recip()?;
        let n = self.order();
        let mut out = vec![inv0.clone()];
        for k in 1..=n {
            let acc: Rational = (1..=k).map(|j| &self.coeffs[j] * &out[k - j]).sum();
            out.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { var: self.var, coeffs: out })
    }

    /// Lowest index whose coefficient is nonzero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}
