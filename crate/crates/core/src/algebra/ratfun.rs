//! Reduced univariate rational functions tagged with their variable.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{AlgebraError, Poly, Rational};

/// Name of the independent variable of a [`RationalFunction`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    T,
    Z,
    S,
    X,
    Hbar,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::T => "t",
            Var::Z => "z",
            Var::S => "s",
            Var::X => "x",
            Var::Hbar => "hbar",
        };
        f.write_str(s)
    }
}

/// A Möbius map `var -> (a*u + b)/(c*u + d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Mobius {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mobius { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn determinant(&self) -> Rational {
        &self.a * &self.d - &self.b * &self.c
    }

    /// The map `self ∘ inner`, i.e. `u -> self(inner(u))`.
    pub fn after(&self, inner: &Mobius) -> Mobius {
        Mobius {
            a: &self.a * &inner.a + &self.b * &inner.c,
            b: &self.a * &inner.b + &self.b * &inner.d,
            c: &self.c * &inner.a + &self.d * &inner.c,
            d: &self.c * &inner.b + &self.d * &inner.d,
        }
    }
}

/// Numerator and denominator are coprime and the denominator is monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
    var: Var,
}

/// JSON shape: `{"var": tag, "num": [...], "den": [...]}` with coefficients low-to-high.
#[derive(Serialize, Deserialize)]
struct RationalFunctionRepr {
    var: Var,
    num: Vec<Rational>,
    den: Vec<Rational>,
}

impl Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RationalFunctionRepr {
            var: self.var,
            num: self.num.coeffs().to_vec(),
            den: self.den.coeffs().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RationalFunctionRepr::deserialize(deserializer)?;
        RationalFunction::new(Poly::new(repr.num), Poly::new(repr.den), repr.var)
            .map_err(serde::de::Error::custom)
    }
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly, var: Var) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den, var))
    }

    fn normalized(num: Poly, den: Poly, var: Var) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: Poly::one(), var };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        let lead = den.leading();
        if !lead.is_one() {
            let inv = lead.recip().expect("nonzero");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den, var }
    }

    pub fn zero(var: Var) -> Self {
        RationalFunction { num: Poly::zero(), den: Poly::one(), var }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(Rational::one(), var)
    }

    pub fn constant(c: Rational, var: Var) -> Self {
        RationalFunction { num: Poly::constant(c), den: Poly::one(), var }
    }

    pub fn from_poly(p: Poly, var: Var) -> Self {
        RationalFunction { num: p, den: Poly::one(), var }
    }

    /// The identity function of `var`.
    pub fn variable(var: Var) -> Self {
        Self::from_poly(Poly::var(), var)
    }

    /// `sum c * var^e` with integer (possibly negative) exponents.
    pub fn from_laurent(terms: &[(i32, Rational)], var: Var) -> Self {
        let shift = terms.iter().map(|(e, _)| *e).min().unwrap_or(0).min(0);
        let top = terms.iter().map(|(e, _)| e - shift).max().unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); top as usize + 1];
        for (e, c) in terms {
            coeffs[(e - shift) as usize] += c;
        }
        let den = Poly::monomial(Rational::one(), (-shift) as usize);
        Self::normalized(Poly::new(coeffs), den, var)
    }

    /// Ratio of two functions given by integer coefficient lists, low-to-high.
    pub fn from_ints(num: &[i64], den: &[i64], var: Var) -> Self {
        Self::new(Poly::from_ints(num), Poly::from_ints(den), var).expect("nonzero denominator")
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalFunction { num: self.num.scale(c), den: self.den.clone(), var: self.var }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num, self.var))
    }

    pub fn pow(&self, exp: i32) -> Result<Self, AlgebraError> {
        if exp >= 0 {
            let e = exp as u32;
            Ok(RationalFunction { num: self.num.pow(e), den: self.den.pow(e), var: self.var })
        } else {
            if self.is_zero() {
                return Err(AlgebraError::DivisionByZero);
            }
            let e = exp.unsigned_abs();
            Ok(Self::normalized(self.den.pow(e), self.num.pow(e), self.var))
        }
    }

    pub fn differentiate(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::normalized(num, &self.den * &self.den, self.var)
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational, AlgebraError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(AlgebraError::Pole(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// Composition with a Möbius map, producing a function of `new_var`.
    pub fn substitute_mobius(&self, map: &Mobius, new_var: Var) -> Result<Self, AlgebraError> {
        if map.determinant().is_zero() {
            return Err(AlgebraError::DegenerateMap);
        }
        let arr = [map.a.clone(), map.b.clone(), map.c.clone(), map.d.clone()];
        let n = self.num.degree().unwrap_or(0);
        let m = self.den.degree().unwrap_or(0);
        let deg = n.max(m);
        let num = self.num.homogeneous_compose(&arr, deg);
        let den = self.den.homogeneous_compose(&arr, deg);
        Self::new(num, den, new_var)
    }

    /// Composition with an arbitrary rational function of `inner.var()`.
    pub fn compose(&self, inner: &RationalFunction) -> Result<Self, AlgebraError> {
        let horner = |p: &Poly| -> RationalFunction {
            let mut acc = RationalFunction::zero(inner.var);
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * inner) + &RationalFunction::constant(c.clone(), inner.var);
            }
            acc
        };
        horner(&self.num).checked_div(&horner(&self.den))
    }

    /// If every exponent in numerator and denominator is a multiple of `k`,
    /// returns the function of `var^k`.
    pub fn deflate(&self, k: usize, new_var: Var) -> Option<Self> {
        let squash = |p: &Poly| -> Option<Poly> {
            let mut out = Vec::new();
            for (e, c) in p.coeffs().iter().enumerate() {
                if e % k == 0 {
                    out.push(c.clone());
                } else if !c.is_zero() {
                    return None;
                }
            }
            Some(Poly::new(out))
        };
        Some(RationalFunction::normalized(squash(&self.num)?, squash(&self.den)?, new_var))
    }

    /// Antiderivative vanishing at `base`, computed through partial fractions over the
    /// declared linear `factors`. Fails if a logarithm would be needed.
    pub fn integrate_no_log(&self, base: &Rational, factors: &[Poly]) -> Result<Self, AlgebraError> {
        let mut roots = Vec::with_capacity(factors.len());
        for f in factors {
            if f.degree() != Some(1) {
                return Err(AlgebraError::UnfactoredDenominator(f.to_string()));
            }
            roots.push(-(f.coeff(0) / f.coeff(1)));
        }
        let mut rest = self.den.clone();
        let mut poles: Vec<(Rational, usize)> = Vec::new();
        for r in &roots {
            let k = rest.root_multiplicity(r);
            if k > 0 {
                rest = rest.exact_div(&Poly::linear_root(r).pow(k as u32))?;
                poles.push((r.clone(), k));
            }
        }
        if !rest.is_constant() {
            return Err(AlgebraError::UnfactoredDenominator(rest.to_string()));
        }

        let mut principal = RationalFunction::zero(self.var);
        let mut antiderivative = RationalFunction::zero(self.var);
        for (r, k) in &poles {
            let cofactor = self.den.exact_div(&Poly::linear_root(r).pow(*k as u32))?;
            let coeffs = series_quotient(&self.num.taylor_shift(r), &cofactor.taylor_shift(r), *k)?;
            // coeffs[j] multiplies (t - r)^(j - k)
            if !coeffs[k - 1].is_zero() {
                return Err(AlgebraError::NonzeroResidue {
                    point: r.to_string(),
                    residue: coeffs[k - 1].to_string(),
                });
            }
            let lin = RationalFunction::from_poly(Poly::linear_root(r), self.var);
            for (j, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let power = j as i32 - *k as i32;
                principal = &principal + &lin.pow(power)?.scale(c);
                let new_power = power + 1;
                antiderivative =
                    &antiderivative + &lin.pow(new_power)?.scale(&(c / Rational::from(new_power)));
            }
        }
        let poly_part = self - &principal;
        let poly = poly_part
            .as_polynomial()
            .ok_or_else(|| AlgebraError::UnfactoredDenominator(poly_part.den.to_string()))?;
        let integrated = Poly::new(
            std::iter::once(Rational::zero())
                .chain(poly.coeffs().iter().enumerate().map(|(k, c)| c / Rational::from(k + 1)))
                .collect(),
        );
        let total = &antiderivative + &RationalFunction::from_poly(integrated, self.var);
        let at_base = total.eval(base)?;
        Ok(&total - &RationalFunction::constant(at_base, self.var))
    }
}

/// First `k` power-series coefficients of `num/den` at the origin; `den(0) != 0`.
fn series_quotient(num: &Poly, den: &Poly, k: usize) -> Result<Vec<Rational>, AlgebraError> {
    let d0 = den.coeff(0).recip()?;
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    for j in 0..k {
        let mut acc = num.coeff(j);
        for (i, q) in out.iter().enumerate() {
            acc -= den.coeff(j - i) * q;
        }
        out.push(acc * &d0);
    }
    Ok(out)
}

fn combine(lhs: &RationalFunction, rhs: &RationalFunction, sub: bool) -> RationalFunction {
    debug_assert_eq!(lhs.var, rhs.var, "mixing rational functions of different variables");
    if lhs.den == rhs.den {
        let num = if sub { &lhs.num - &rhs.num } else { &lhs.num + &rhs.num };
        return RationalFunction::normalized(num, lhs.den.clone(), lhs.var);
    }
    let g = lhs.den.gcd(&rhs.den);
    let l_co = rhs.den.exact_div(&g).expect("gcd divides");
    let r_co = lhs.den.exact_div(&g).expect("gcd divides");
    let a = &lhs.num * &l_co;
    let b = &rhs.num * &r_co;
    let num = if sub { &a - &b } else { &a + &b };
    RationalFunction::normalized(num, &lhs.den * &l_co, lhs.var)
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        combine(self, rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        combine(self, rhs, true)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        debug_assert_eq!(self.var, rhs.var, "mixing rational functions of different variables");
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den, self.var)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone(), var: self.var }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.to_string();
        let num = self.num.to_string().replace('v', &v);
        if self.den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "[{num}] / [{}]", self.den.to_string().replace('v', &v))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> RationalFunction {
        RationalFunction::variable(Var::T)
    }

    #[test]
    fn normalization_is_canonical() {
        let f = RationalFunction::from_ints(&[2, 2], &[4, 0, -4], Var::T); // (2+2t)/(4-4t^2)
        let g = RationalFunction::from_ints(&[-1], &[-2, 2], Var::T);
        assert_eq!(f, g);
        assert!(f.denom().leading().is_one());
        assert!(matches!(
            RationalFunction::new(Poly::one(), Poly::zero(), Var::T),
            Err(AlgebraError::DivisionByZero)
        ));
    }

    #[test]
    fn power_rule_and_constant() {
        let sq = &t() * &t();
        assert_eq!(sq.differentiate(), RationalFunction::from_ints(&[0, 2], &[1], Var::T));
        assert!(RationalFunction::constant(Rational::from(7), Var::T).differentiate().is_zero());
    }

    #[test]
    fn derivative_matches_finite_difference() {
        // z^4 (9 + z^2) / (12 (1 - z^2)^3)
        let num = Poly::from_ints(&[0, 0, 0, 0, 9, 0, 1]);
        let den = Poly::from_ints(&[1, 0, -1]).pow(3).scale(&Rational::from(12));
        let f = RationalFunction::new(num, den, Var::Z).unwrap();
        let df = f.differentiate();
        let z = 1.0 / 3.0;
        let h = 1e-5;
        let fd = (f.eval_f64(z + h) - f.eval_f64(z - h)) / (2.0 * h);
        assert!((df.eval_f64(z) - fd).abs() < 1e-9);
    }

    #[test]
    fn integrate_polynomial_from_minus_one() {
        let f = RationalFunction::from_ints(&[0, 0, 3], &[1], Var::T);
        let g = f.integrate_no_log(&Rational::from(-1), &[]).unwrap();
        assert_eq!(g, RationalFunction::from_ints(&[1, 0, 0, 1], &[1], Var::T));
    }

    #[test]
    fn integrate_detects_log() {
        let f = RationalFunction::from_ints(&[1], &[0, 1], Var::T);
        let err = f.integrate_no_log(&Rational::one(), &[Poly::var()]).unwrap_err();
        assert!(matches!(err, AlgebraError::NonzeroResidue { .. }));
    }

    #[test]
    fn integrate_requires_declared_factors() {
        let f = RationalFunction::from_ints(&[1], &[1, 0, 1], Var::T);
        let err = f.integrate_no_log(&Rational::zero(), &[Poly::var()]).unwrap_err();
        assert!(matches!(err, AlgebraError::UnfactoredDenominator(_)));
    }

    #[test]
    fn integrate_higher_poles() {
        // d/dt [ 1/(t (t-1)^2) ] vanishes-at-2 normalization
        let g = RationalFunction::from_ints(&[1], &[0, 1, -2, 1], Var::T);
        let dg = g.differentiate();
        let factors = [Poly::var(), Poly::from_ints(&[-1, 1])];
        let back = dg.integrate_no_log(&Rational::from(2), &factors).unwrap();
        let expected = &g - &RationalFunction::constant(g.eval(&Rational::from(2)).unwrap(), Var::T);
        assert_eq!(back, expected);
    }

    #[test]
    fn mobius_examples() {
        let z = RationalFunction::variable(Var::Z);
        let to_t = Mobius::new(1, 1, 1, -1);
        assert_eq!(
            z.substitute_mobius(&to_t, Var::T).unwrap(),
            RationalFunction::from_ints(&[1, 1], &[-1, 1], Var::T)
        );
        let s = RationalFunction::from_ints(&[0, 0, 1], &[-1, 0, 1], Var::Z);
        assert_eq!(
            s.substitute_mobius(&to_t, Var::T).unwrap(),
            RationalFunction::from_ints(&[1, 2, 1], &[0, 4], Var::T)
        );
        assert!(matches!(
            z.substitute_mobius(&Mobius::new(1, 2, 2, 4), Var::T),
            Err(AlgebraError::DegenerateMap)
        ));
    }

    #[test]
    fn json_shape() {
        let f = RationalFunction::from_ints(&[1, 1], &[-1, 1], Var::T);
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v, serde_json::json!({"var": "t", "num": ["1", "1"], "den": ["-1", "1"]}));
        let back: RationalFunction = serde_json::from_value(v).unwrap();
        assert_eq!(back, f);
    }
}
