//! Sparse multivariate Laurent polynomials over the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use super::{AlgebraError, Rational, RationalFunction, Var};

/// Exponent vector; entries may be negative.
pub type Exponents = SmallVec<[i32; 6]>;

/// A finite sum of `c * t_0^e_0 * ... * t_{n-1}^e_{n-1}` with nonzero coefficients.
///
/// Terms are kept in a sorted map so that equality is map equality and the
/// serialized term list is lexicographically ordered.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseLaurent {
    arity: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl SparseLaurent {
    pub fn zero(arity: usize) -> Self {
        SparseLaurent { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(arity, &vec![0; arity], c)
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn monomial(arity: usize, exps: &[i32], c: Rational) -> Self {
        assert_eq!(exps.len(), arity, "exponent vector length must equal arity");
        let mut out = Self::zero(arity);
        out.add_term(Exponents::from_slice(exps), c);
        out
    }

    /// The coordinate function `t_i`.
    pub fn var(arity: usize, i: usize) -> Self {
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(arity, &e, Rational::one())
    }

    /// `t_i^k`, `k` may be negative.
    pub fn var_pow(arity: usize, i: usize, k: i32) -> Self {
        let mut e = vec![0; arity];
        e[i] = k;
        Self::monomial(arity, &e, Rational::one())
    }

    /// A univariate Laurent polynomial placed in variable `i`.
    pub fn univariate(arity: usize, i: usize, terms: &[(i32, Rational)]) -> Self {
        let mut out = Self::zero(arity);
        for (k, c) in terms {
            let mut e = Exponents::from_elem(0, arity);
            e[i] = *k;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Build from integer-coefficient terms.
    pub fn from_int_terms(arity: usize, terms: &[(&[i32], i64)]) -> Self {
        let mut out = Self::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity);
            out.add_term(Exponents::from_slice(e), Rational::from(*c));
        }
        out
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut out = Self::zero(arity);
        for (e, c) in terms {
            assert_eq!(e.len(), arity, "exponent vector length must equal arity");
            out.add_term(e, c);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled(&mut self, other: &SparseLaurent, c: &Rational) {
        debug_assert_eq!(self.arity, other.arity);
        for (e, a) in &other.terms {
            self.add_term(e.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        SparseLaurent {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    /// Multiply by the monomial `t^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        SparseLaurent {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.iter().zip(shift).map(|(x, s)| x + s).collect(), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.arity);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `∂/∂t_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, a) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, a * Rational::from(e[i]));
        }
        out
    }

    /// Antiderivative in `t_i` that vanishes on `t_i = base`.
    pub fn integrate(&self, i: usize, base: &Rational) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(self.arity);
        for (e, a) in &self.terms {
            if e[i] == -1 {
                return Err(AlgebraError::NonzeroResidue {
                    point: "0".into(),
                    residue: a.to_string(),
                });
            }
            let mut ne = e.clone();
            ne[i] += 1;
            out.add_term(ne, a / Rational::from(e[i] + 1));
        }
        let at_base = out.substitute(i, base)?;
        let mut lifted = Self::zero(self.arity);
        for (e, a) in &at_base.terms {
            let mut ne = Exponents::with_capacity(self.arity);
            ne.extend_from_slice(&e[..i]);
            ne.push(0);
            ne.extend_from_slice(&e[i..]);
            lifted.add_term(ne, a.clone());
        }
        Ok(&out - &lifted)
    }

    /// Set `t_i = value`, removing that variable.
    pub fn substitute(&self, i: usize, value: &Rational) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(self.arity - 1);
        let mut powers: BTreeMap<i32, Rational> = BTreeMap::new();
        for (e, a) in &self.terms {
            let k = e[i];
            if k < 0 && value.is_zero() {
                return Err(AlgebraError::Pole(format!("t{i} = 0")));
            }
            let p = powers.entry(k).or_insert_with(|| value.pow(k)).clone();
            let mut ne = e.clone();
            ne.remove(i);
            out.add_term(ne, a * p);
        }
        Ok(out)
    }

    /// Relabel variables into a larger (or equal) arity: variable `k` becomes `positions[k]`.
    pub fn embed(&self, arity: usize, positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.arity);
        let mut out = Self::zero(arity);
        for (e, a) in &self.terms {
            let mut ne = Exponents::from_elem(0, arity);
            for (k, &p) in positions.iter().enumerate() {
                ne[p] += e[k];
            }
            out.add_term(ne, a.clone());
        }
        out
    }

    /// Identify `t_j` with `t_i` and drop `t_j`.
    pub fn merge_into(&self, i: usize, j: usize) -> Self {
        assert_ne!(i, j);
        let mut out = Self::zero(self.arity - 1);
        for (e, a) in &self.terms {
            let mut ne = e.clone();
            ne[i] += e[j];
            ne.remove(j);
            out.add_term(ne, a.clone());
        }
        out
    }

    /// Reorder variables: new variable `k` is old variable `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity);
        SparseLaurent {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (perm.iter().map(|&p| e[p]).collect(), a.clone()))
                .collect(),
        }
    }

    /// Invariance under every transposition `(0 j)`; these generate the symmetric group.
    pub fn is_symmetric(&self) -> bool {
        (1..self.arity).all(|j| {
            let mut perm: Vec<usize> = (0..self.arity).collect();
            perm.swap(0, j);
            self.permute(&perm) == *self
        })
    }

    /// All variables set equal to one variable `var`.
    pub fn principal_specialization(&self, var: Var) -> RationalFunction {
        let mut acc: BTreeMap<i32, Rational> = BTreeMap::new();
        for (e, a) in &self.terms {
            *acc.entry(e.iter().sum()).or_insert_with(Rational::zero) += a;
        }
        let terms: Vec<(i32, Rational)> = acc.into_iter().collect();
        RationalFunction::from_laurent(&terms, var)
    }

    /// Total degree range `(min, max)` over all monomials.
    pub fn total_degree_range(&self) -> Option<(i32, i32)> {
        let degs = self.terms.keys().map(|e| e.iter().sum::<i32>());
        degs.fold(None, |acc, d| match acc {
            None => Some((d, d)),
            Some((lo, hi)) => Some((lo.min(d), hi.max(d))),
        })
    }

    /// Smallest exponent of each variable.
    pub fn min_exponents(&self) -> Exponents {
        let mut m = Exponents::from_elem(i32::MAX, self.arity);
        for e in self.terms.keys() {
            for (k, x) in e.iter().enumerate() {
                m[k] = m[k].min(*x);
            }
        }
        if self.terms.is_empty() {
            m.iter_mut().for_each(|x| *x = 0);
        }
        m
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, AlgebraError> {
        let mut acc = Rational::zero();
        for (e, a) in &self.terms {
            let mut term = a.clone();
            for (k, x) in e.iter().enumerate() {
                if *x < 0 && point[k].is_zero() {
                    return Err(AlgebraError::Pole(format!("t{k} = 0")));
                }
                term *= point[k].pow(*x);
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, a)| {
                e.iter().enumerate().fold(a.to_f64(), |acc, (k, x)| acc * point[k].powi(*x))
            })
            .sum()
    }

    /// Split by the exponent of `t_i`, zeroing that slot.
    fn slices(&self, i: usize) -> BTreeMap<i32, SparseLaurent> {
        let mut out: BTreeMap<i32, SparseLaurent> = BTreeMap::new();
        for (e, a) in &self.terms {
            let mut ne = e.clone();
            ne[i] = 0;
            out.entry(e[i]).or_insert_with(|| Self::zero(self.arity)).add_term(ne, a.clone());
        }
        out
    }

    /// Exact quotient by a linear factor.
    pub fn div_linear(&self, factor: &LinearFactor) -> Result<Self, AlgebraError> {
        assert_eq!(factor.arity(), self.arity);
        let v = factor.var;
        let inv = factor.coeff.recip()?;
        if self.is_zero() {
            return Ok(self.clone());
        }
        if factor.rest.is_zero() {
            let mut shift = vec![0; self.arity];
            shift[v] = -1;
            return Ok(self.shift(&shift).scale(&inv));
        }
        let slices = self.slices(v);
        let (&lo, _) = slices.first_key_value().expect("nonempty");
        let (&hi, _) = slices.last_key_value().expect("nonempty");
        let mut out = Self::zero(self.arity);
        let mut carry = Self::zero(self.arity);
        for e in (lo..=hi).rev() {
            let mut cur = slices.get(&e).cloned().unwrap_or_else(|| Self::zero(self.arity));
            if !carry.is_zero() {
                cur = &cur - &(&factor.rest * &carry);
            }
            carry = cur.scale(&inv);
            if e == lo {
                break;
            }
            let mut shift = vec![0; self.arity];
            shift[v] = e - 1;
            out.add_scaled(&carry.shift(&shift), &Rational::one());
        }
        if !carry.is_zero() {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(out)
    }

    /// Replace `t_i` by `numer/denom` and clear denominators:
    /// returns `denom^d * self(t_i = numer/denom)` with `d` the largest exponent of `t_i`.
    /// All exponents of `t_i` must be non-negative.
    pub fn substitute_fraction(
        &self,
        i: usize,
        numer: &SparseLaurent,
        denom: &SparseLaurent,
    ) -> Result<Self, AlgebraError> {
        let slices = self.slices(i);
        let Some((&lo, _)) = slices.first_key_value() else {
            return Ok(self.clone());
        };
        if lo < 0 {
            return Err(AlgebraError::Pole(format!("negative power of t{i}")));
        }
        let hi = *slices.last_key_value().expect("nonempty").0;
        let mut out = Self::zero(self.arity);
        for (&e, slice) in &slices {
            let term = &(slice * &numer.pow(e as u32)) * &denom.pow((hi - e) as u32);
            out.add_scaled(&term, &Rational::one());
        }
        Ok(out)
    }

    /// Leading term in lexicographic order of exponent vectors.
    fn leading(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.last_key_value()
    }

    /// Exact quotient by an arbitrary nonzero Laurent polynomial.
    pub fn exact_div(&self, divisor: &SparseLaurent) -> Result<Self, AlgebraError> {
        assert_eq!(divisor.arity, self.arity);
        let (lead_e, lead_c) = divisor.leading().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = lead_c.recip()?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        let span = divisor
            .terms
            .keys()
            .map(|e| e.iter().zip(lead_e).map(|(a, b)| b - a).sum::<i32>())
            .max()
            .unwrap_or(0);
        let floor = self.total_degree_range().map(|(lo, _)| lo).unwrap_or(0) - span - 1;
        while let Some((e, c)) = rem.leading().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: Exponents = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().sum::<i32>() < floor {
                return Err(AlgebraError::NotDivisible);
            }
            let qc = &c * &lead_inv;
            let mono = SparseLaurent::from_terms(self.arity, [(qe, qc)]);
            rem = &rem - &(&mono * divisor);
            quot = &quot + &mono;
        }
        Ok(quot)
    }
}

/// `coeff * t_var + rest`, where `rest` does not involve `t_var`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFactor {
    pub var: usize,
    pub coeff: Rational,
    pub rest: SparseLaurent,
}

impl LinearFactor {
    pub fn new(var: usize, coeff: Rational, rest: SparseLaurent) -> Self {
        assert!(!coeff.is_zero());
        assert!(rest.terms().all(|(e, _)| e[var] == 0), "rest must not involve the pivot variable");
        LinearFactor { var, coeff, rest }
    }

    /// `t_a + sign * t_b`.
    pub fn sum_of_vars(arity: usize, a: usize, b: usize, sign: i64) -> Self {
        Self::new(a, Rational::one(), SparseLaurent::var(arity, b).scale(&Rational::from(sign)))
    }

    /// `t_a - c`.
    pub fn shifted_var(arity: usize, a: usize, c: &Rational) -> Self {
        Self::new(a, Rational::one(), SparseLaurent::constant(arity, -c))
    }

    pub fn arity(&self) -> usize {
        self.rest.arity()
    }

    pub fn to_laurent(&self) -> SparseLaurent {
        &SparseLaurent::var(self.arity(), self.var).scale(&self.coeff) + &self.rest
    }
}

/// A sum of fractions whose denominators are products of linear factors.
/// The common denominator is the multiset union, kept as a list.
#[derive(Clone, Debug)]
pub struct FractionSum {
    numer: SparseLaurent,
    denom: Vec<LinearFactor>,
}

impl FractionSum {
    pub fn new(arity: usize) -> Self {
        FractionSum { numer: SparseLaurent::zero(arity), denom: Vec::new() }
    }

    pub fn add(&mut self, numer: &SparseLaurent, denom: &[LinearFactor]) {
        // Multiset difference: factors of `denom` not yet present.
        let mut have: Vec<Option<&LinearFactor>> = self.denom.iter().map(Some).collect();
        let mut missing: Vec<LinearFactor> = Vec::new();
        for f in denom {
            match have.iter_mut().find(|h| h.is_some_and(|h| h == f)) {
                Some(slot) => *slot = None,
                None => missing.push(f.clone()),
            }
        }
        // Cofactor for the incoming term: common factors it does not carry.
        let mut term = numer.clone();
        for f in have.into_iter().flatten() {
            term = &term * &f.to_laurent();
        }
        for f in &missing {
            self.numer = &self.numer * &f.to_laurent();
        }
        self.denom.extend(missing);
        self.numer = &self.numer + &term;
    }

    pub fn numerator(&self) -> &SparseLaurent {
        &self.numer
    }

    pub fn denominator(&self) -> &[LinearFactor] {
        &self.denom
    }

    /// Divide out every denominator factor; errors if the sum is not a Laurent polynomial.
    pub fn reduce(&self) -> Result<SparseLaurent, AlgebraError> {
        let mut out = self.numer.clone();
        for f in &self.denom {
            out = out.div_linear(f)?;
        }
        Ok(out)
    }
}

impl Add for &SparseLaurent {
    type Output = SparseLaurent;
    fn add(self, rhs: &SparseLaurent) -> SparseLaurent {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        out.add_scaled(small, &Rational::one());
        out
    }
}

impl Sub for &SparseLaurent {
    type Output = SparseLaurent;
    fn sub(self, rhs: &SparseLaurent) -> SparseLaurent {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Mul for &SparseLaurent {
    type Output = SparseLaurent;
    fn mul(self, rhs: &SparseLaurent) -> SparseLaurent {
        assert_eq!(self.arity, rhs.arity, "arity mismatch");
        let mut out = SparseLaurent::zero(self.arity);
        for (ea, a) in &self.terms {
            for (eb, b) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, a * b);
            }
        }
        out
    }
}

impl Neg for &SparseLaurent {
    type Output = SparseLaurent;
    fn neg(self) -> SparseLaurent {
        self.scale(&-Rational::one())
    }
}

impl fmt::Debug for SparseLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SparseLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| **x != 0)
                    .map(|(k, x)| if *x == 1 { format!("t{k}") } else { format!("t{k}^{x}") })
                    .collect();
                if mono.is_empty() {
                    format!("{c}")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for SparseLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let list: Vec<(Vec<i32>, &Rational)> =
            self.terms.iter().map(|(e, c)| (e.to_vec(), c)).collect();
        list.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SparseLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let list: Vec<(Vec<i32>, Rational)> = Vec::deserialize(deserializer)?;
        let arity = list.first().map(|(e, _)| e.len()).unwrap_or(0);
        if list.iter().any(|(e, _)| e.len() != arity) {
            return Err(serde::de::Error::custom("inconsistent exponent vector lengths"));
        }
        Ok(SparseLaurent::from_terms(
            arity,
            list.into_iter().map(|(e, c)| (Exponents::from_vec(e), c)),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let a = SparseLaurent::from_int_terms(2, &[(&[1, 0], 1), (&[0, -1], 2)]);
        let b = SparseLaurent::from_int_terms(2, &[(&[1, 0], 1)]);
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_ne!(a, b);
        assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn linear_division() {
        // (t0^2 - t1^2) / (t0 + t1) = t0 - t1
        let n = SparseLaurent::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], -1)]);
        let f = LinearFactor::sum_of_vars(2, 0, 1, 1);
        let quotient = n.div_linear(&f).unwrap();
        assert_eq!(quotient, SparseLaurent::from_int_terms(2, &[(&[1, 0], 1), (&[0, 1], -1)]));
        let g = LinearFactor::shifted_var(2, 0, &q(2));
        assert!(matches!(n.div_linear(&g), Err(AlgebraError::NotDivisible)));
    }

    #[test]
    fn linear_division_with_negative_exponents() {
        // (t0 - 1)(t0^-2 + t1) / (t0 - 1)
        let lf = LinearFactor::shifted_var(2, 0, &q(1));
        let other = SparseLaurent::from_int_terms(2, &[(&[-2, 0], 1), (&[0, 1], 1)]);
        let prod = &lf.to_laurent() * &other;
        assert_eq!(prod.div_linear(&lf).unwrap(), other);
    }

    #[test]
    fn general_division() {
        let a = SparseLaurent::from_int_terms(3, &[(&[1, 1, 0], 2), (&[0, 0, -1], 1)]);
        let b = SparseLaurent::from_int_terms(3, &[(&[0, 1, 1], 1), (&[1, 0, 0], -3), (&[0, 0, 0], 1)]);
        assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        let c = SparseLaurent::from_int_terms(3, &[(&[0, 0, 1], 1), (&[0, 0, 0], 1)]);
        assert!((&(&a * &b) + &SparseLaurent::one(3)).exact_div(&c).is_err());
    }

    #[test]
    fn fraction_sum_reduces() {
        // 1/(t0 - t1) + 1/(t1 - t0) = 0 and t0/(t0-t1) - t1/(t0-t1) = 1
        let mut s = FractionSum::new(2);
        let d = LinearFactor::sum_of_vars(2, 0, 1, -1);
        s.add(&SparseLaurent::var(2, 0), std::slice::from_ref(&d));
        s.add(&-&SparseLaurent::var(2, 1), std::slice::from_ref(&d));
        assert_eq!(s.reduce().unwrap(), SparseLaurent::one(2));
    }

    #[test]
    fn integrate_from_base() {
        let f = SparseLaurent::from_int_terms(2, &[(&[2, 1], 3), (&[-2, 0], 1)]);
        let g = f.integrate(0, &q(-1)).unwrap();
        assert_eq!(g.derivative(0), f);
        assert!(g.substitute(0, &q(-1)).unwrap().is_zero());
        let bad = SparseLaurent::from_int_terms(1, &[(&[-1], 1)]);
        assert!(matches!(bad.integrate(0, &q(1)), Err(AlgebraError::NonzeroResidue { .. })));
    }

    #[test]
    fn relabeling() {
        let f = SparseLaurent::from_int_terms(2, &[(&[1, 2], 1)]);
        assert_eq!(f.embed(3, &[2, 0]), SparseLaurent::from_int_terms(3, &[(&[2, 0, 1], 1)]));
        assert_eq!(f.merge_into(0, 1), SparseLaurent::from_int_terms(1, &[(&[3], 1)]));
        assert_eq!(f.permute(&[1, 0]), SparseLaurent::from_int_terms(2, &[(&[2, 1], 1)]));
        let sym = &f + &f.permute(&[1, 0]);
        assert!(sym.is_symmetric());
        assert!(!f.is_symmetric());
    }

    #[test]
    fn json_sorted_pairs() {
        let f = SparseLaurent::from_terms(
            2,
            [
                (Exponents::from_slice(&[1, -1]), Rational::frac(1, 2)),
                (Exponents::from_slice(&[0, 3]), q(-2)),
            ],
        );
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v, serde_json::json!([[[0, 3], "-2"], [[1, -1], "1/2"]]));
        let back: SparseLaurent = serde_json::from_value(v).unwrap();
        assert_eq!(back, f);
    }
}
