//! Polynomials in power sums `p_1, p_2, …`, indexed by the partition `λ` of `p_λ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::algebra::{Rational, SeriesCoefficient};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PPolynomial {
    terms: BTreeMap<Partition, Rational>,
}

impl PPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    pub fn monomial(lambda: Partition, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(lambda, c);
        out
    }

    /// `p_i`.
    pub fn p(i: u32) -> Self {
        Self::monomial(Partition::row(i), Rational::one())
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Partition::size).max()
    }

    /// Weight-`w` component.
    pub fn component(&self, w: u32) -> PPolynomial {
        self.filter(|l| l.size() == w)
    }

    /// Drops monomials of weight above `w`.
    pub fn truncate(&self, w: u32) -> PPolynomial {
        self.filter(|l| l.size() <= w)
    }

    fn filter(&self, keep: impl Fn(&Partition) -> bool) -> PPolynomial {
        PPolynomial { terms: self.terms.iter().filter(|(l, _)| keep(l)).map(|(l, c)| (l.clone(), c.clone())).collect() }
    }

    pub fn add(&self, rhs: &PPolynomial) -> PPolynomial {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &PPolynomial) -> PPolynomial {
        self.add(&rhs.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> PPolynomial {
        let mut out = Self::zero();
        for (l, a) in &self.terms {
            out.add_term(l.clone(), a * c);
        }
        out
    }

    /// Product keeping weights `≤ w`.
    pub fn mul_truncated(&self, rhs: &PPolynomial, w: u32) -> PPolynomial {
        let mut out = Self::zero();
        for (l1, a) in &self.terms {
            for (l2, b) in &rhs.terms {
                if l1.size() + l2.size() <= w {
                    out.add_term(l1.merge(l2), a * b);
                }
            }
        }
        out
    }

    /// `∂/∂p_i`.
    pub fn d_p(&self, i: u32) -> PPolynomial {
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            if let Some(rest) = l.without(i) {
                out.add_term(rest, c * Rational::from(l.multiplicity(i)));
            }
        }
        out
    }

    /// Multiplication by `p_i`.
    pub fn times_p(&self, i: u32) -> PPolynomial {
        let row = Partition::row(i);
        let mut out = Self::zero();
        for (l, c) in &self.terms {
            out.add_term(l.merge(&row), c.clone());
        }
        out
    }

    /// Substitutes `p_j ↦ values[j−1]`; missing entries are zero.
    pub fn specialize(&self, values: &[Rational]) -> Rational {
        self.terms
            .iter()
            .map(|(l, c)| {
                let v: Rational =
                    l.parts().iter().map(|&j| values.get(j as usize - 1).cloned().unwrap_or_else(Rational::zero)).product();
                c * v
            })
            .sum()
    }
}

impl SeriesCoefficient for PPolynomial {
    fn zero() -> Self {
        PPolynomial::zero()
    }
    fn one() -> Self {
        PPolynomial::constant(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        PPolynomial::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.mul_truncated(rhs, u32::MAX)
    }
    fn scale(&self, c: &Rational) -> Self {
        PPolynomial::scale(self, c)
    }
}

impl fmt::Display for PPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({c}) p{l}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for PPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<(&Partition, &Rational)> = self.terms.iter().collect();
        list.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let list: Vec<(Partition, Rational)> = Vec::deserialize(d)?;
        let mut out = PPolynomial::zero();
        for (l, c) in list {
            out.add_term(Partition::new(l.parts().to_vec()), c);
        }
        Ok(out)
    }
}

/// Polynomials in two power-sum alphabets `p` and `p^y`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct PPolynomial2 {
    terms: BTreeMap<(Partition, Partition), Rational>,
}

impl PPolynomial2 {
    pub fn one() -> Self {
        let mut out = Self::default();
        out.add_term(Partition::empty(), Partition::empty(), Rational::one());
        out
    }

    pub fn add_term(&mut self, a: Partition, b: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (a, b);
        let slot = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// `f(p) g(p^y)`.
    pub fn tensor(f: &PPolynomial, g: &PPolynomial) -> Self {
        let mut out = Self::default();
        for (a, x) in f.terms() {
            for (b, y) in g.terms() {
                out.add_term(a.clone(), b.clone(), x * y);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.terms {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut neg = Self::default();
        for ((a, b), c) in &rhs.terms {
            neg.add_term(a.clone(), b.clone(), -c);
        }
        self.add(&neg)
    }

    /// Product keeping `p`-weights `≤ w`.
    pub fn mul_truncated(&self, rhs: &Self, w: u32) -> Self {
        let mut out = Self::default();
        for ((a1, b1), x) in &self.terms {
            for ((a2, b2), y) in &rhs.terms {
                if a1.size() + a2.size() <= w {
                    out.add_term(a1.merge(a2), b1.merge(b2), x * y);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `p^y_j ↦ values[j−1]`.
    pub fn specialize_second(&self, values: &[Rational]) -> PPolynomial {
        let mut out = PPolynomial::zero();
        for ((a, b), c) in &self.terms {
            let v: Rational =
                b.parts().iter().map(|&j| values.get(j as usize - 1).cloned().unwrap_or_else(Rational::zero)).product();
            out.add_term(a.clone(), c * v);
        }
        out
    }
}
