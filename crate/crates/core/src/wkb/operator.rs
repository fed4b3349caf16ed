//! Polynomials in `∂_y` with coefficients rational in `z`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Rational, RationalFunction, SeriesCoefficient, Var};

/// `Σ_r c_r(z) ∂_y^r`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct YPolyOperator {
    coeffs: BTreeMap<u32, RationalFunction>,
}

impl YPolyOperator {
    pub fn identity() -> Self {
        Self::term(0, RationalFunction::one(Var::Z))
    }

    /// `c ∂_y^r`.
    pub fn term(r: u32, c: RationalFunction) -> Self {
        let mut op = Self::default();
        op.add_term(r, c);
        op
    }

    pub fn add_term(&mut self, r: u32, c: RationalFunction) {
        let sum = match self.coeffs.remove(&r) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(r, sum);
        }
    }

    pub fn coeff(&self, r: u32) -> RationalFunction {
        self.coeffs.get(&r).cloned().unwrap_or_else(|| RationalFunction::zero(Var::Z))
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, RationalFunction> {
        &self.coeffs
    }

    /// Highest power of `∂_y`, or `None` for the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl SeriesCoefficient for YPolyOperator {
    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::identity()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&r, c) in &rhs.coeffs {
            out.add_term(r, c.clone());
        }
        out
    }

    /// Coefficients depend on `z` only, so `∂_y` commutes with them.
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (&r1, a) in &self.coeffs {
            for (&r2, b) in &rhs.coeffs {
                out.add_term(r1 + r2, a * b);
            }
        }
        out
    }

    fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::default();
        for (&r, a) in &self.coeffs {
            out.add_term(r, a.scale(c));
        }
        out
    }
}

impl fmt::Display for YPolyOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(r, c)| format!("[{c}] d_y^{r}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for YPolyOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
