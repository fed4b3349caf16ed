//! Finite sums `c q^j ħ^k e^{−mw}` with `q = e^ħ`, and the difference-differential checks.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::algebra::Rational;

/// `(j, k, m)` for `q^j ħ^k e^{−mw}`.
pub type QHbarMonomial = (i64, i64, u32);

#[derive(Clone, Default, PartialEq, Eq)]
pub struct QHbarExpr {
    terms: BTreeMap<QHbarMonomial, Rational>,
}

impl QHbarExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(j: i64, k: i64, m: u32, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term((j, k, m), c);
        out
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 0, Rational::one())
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

    pub fn terms(&self) -> impl Iterator<Item = (&QHbarMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: QHbarMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn map_terms(&self, f: impl Fn(QHbarMonomial, &Rational) -> Vec<(QHbarMonomial, Rational)>) -> Self {
        let mut out = Self::zero();
        for (&key, c) in &self.terms {
            for (k2, c2) in f(key, c) {
                out.add_term(k2, c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map_terms(|key, a| vec![(key, a * c)])
    }

    /// `∂_w`: multiplies `e^{−mw}` by `−m`.
    pub fn d_w(&self) -> Self {
        self.map_terms(|(j, k, m), a| vec![((j, k, m), a * Rational::from(-(m as i64)))])
    }

    /// `e^{−ħ∂_w}`: `e^{−mw} ↦ q^m e^{−mw}`.
    pub fn shift_w(&self) -> Self {
        self.map_terms(|(j, k, m), a| vec![((j + m as i64, k, m), a.clone())])
    }

    /// `∂_ħ(q^j ħ^k) = j q^j ħ^k + k q^j ħ^{k−1}`.
    pub fn d_hbar(&self) -> Self {
        self.map_terms(|(j, k, m), a| {
            vec![((j, k, m), a * Rational::from(j)), ((j, k - 1, m), a * Rational::from(k))]
        })
    }

    pub fn times_hbar(&self, p: i64) -> Self {
        self.map_terms(|(j, k, m), a| vec![((j, k + p, m), a.clone())])
    }

    /// Multiplication by `e^{−w}`.
    pub fn times_x(&self) -> Self {
        self.map_terms(|(j, k, m), a| vec![((j, k, m + 1), a.clone())])
    }
}

impl Add for &QHbarExpr {
    type Output = QHbarExpr;
    fn add(self, rhs: &QHbarExpr) -> QHbarExpr {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.add_term(key, c.clone());
        }
        out
    }
}

impl Sub for &QHbarExpr {
    type Output = QHbarExpr;
    fn sub(self, rhs: &QHbarExpr) -> QHbarExpr {
        self + &-rhs
    }
}

impl Neg for &QHbarExpr {
    type Output = QHbarExpr;
    fn neg(self) -> QHbarExpr {
        self.scale(&-Rational::one())
    }
}

impl Mul for &QHbarExpr {
    type Output = QHbarExpr;
    fn mul(self, rhs: &QHbarExpr) -> QHbarExpr {
        let mut out = QHbarExpr::zero();
        for (&(j1, k1, m1), a) in &self.terms {
            for (&(j2, k2, m2), b) in &rhs.terms {
                out.add_term((j1 + j2, k1 + k2, m1 + m2), a * b);
            }
        }
        out
    }
}

impl fmt::Display for QHbarExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|((j, k, m), c)| format!("({c}) q^{j} h^{k} e^(-{m}w)")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for QHbarExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for QHbarExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let list: Vec<([i64; 3], &Rational)> =
            self.terms.iter().map(|(&(j, k, m), c)| ([j, k, m as i64], c)).collect();
        list.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QHbarExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let list: Vec<([i64; 3], Rational)> = Vec::deserialize(d)?;
        let mut out = QHbarExpr::zero();
        for ([j, k, m], c) in list {
            let m = u32::try_from(m).map_err(serde::de::Error::custom)?;
            out.add_term((j, k, m), c);
        }
        Ok(out)
    }
}

/// `a_m = q^{e(m)} ħ^{−m} e^{−mw}` with `e(m) = m(m−1)/2` unless overridden.
pub fn zhou_term(m: u32, exponent: &dyn Fn(i64) -> i64) -> QHbarExpr {
    QHbarExpr::monomial(exponent(m as i64), -(m as i64), m, Rational::one())
}

pub fn zhou_exponent(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// `Z = Σ_{m≤M} a_m/m!`.
pub fn zhou_series(max_m: u32) -> QHbarExpr {
    let mut z = QHbarExpr::zero();
    let mut fact = Rational::one();
    for m in 0..=max_m {
        if m > 0 {
            fact *= Rational::from(m as i64);
        }
        z = &z + &zhou_term(m, &zhou_exponent).scale(&fact.recip().expect("nonzero"));
    }
    z
}

/// `P = ħ∂_w + e^{−w} e^{−ħ∂_w}`.
pub fn apply_p(f: &QHbarExpr) -> QHbarExpr {
    &f.d_w().times_hbar(1) + &f.shift_w().times_x()
}

/// Coefficients of `Q = c_2 ħ∂_w² + (c_0 + c_1 ħ)∂_w − c_h ħ∂_ħ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCoefficients {
    pub c2: Rational,
    pub c0: Rational,
    pub c1: Rational,
    pub ch: Rational,
}

impl Default for QCoefficients {
    fn default() -> Self {
        QCoefficients {
            c2: Rational::frac(1, 2),
            c0: Rational::one(),
            c1: Rational::frac(1, 2),
            ch: Rational::one(),
        }
    }
}

pub fn apply_q(f: &QHbarExpr, q: &QCoefficients) -> QHbarExpr {
    let dw = f.d_w();
    let second = dw.d_w().times_hbar(1).scale(&q.c2);
    let first = &dw.scale(&q.c0) + &dw.times_hbar(1).scale(&q.c1);
    let hbar = f.d_hbar().times_hbar(1).scale(&q.ch);
    &(&second + &first) - &hbar
}

/// Per-`m` residuals of the three Zhou-series identities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZhouReport {
    pub max_m: u32,
    /// `a_{m+1} − q^m a_m e^{−w}/ħ`, for `m < M`.
    pub term_recursion: Vec<QHbarExpr>,
    /// Coefficient of `e^{−mw}` in `P Z`, for `m ≤ M`.
    pub difference_equation: Vec<QHbarExpr>,
    /// `[½∂_w² + (½ + 1/ħ)∂_w − ∂_ħ] a_m`, for `m ≤ M`.
    pub heat_bracket: Vec<QHbarExpr>,
}

impl ZhouReport {
    pub fn pass(&self) -> bool {
        self.term_recursion.iter().chain(&self.difference_equation).chain(&self.heat_bracket).all(QHbarExpr::is_zero)
    }

    pub fn first_failure(&self) -> Option<u32> {
        let bad = |v: &Vec<QHbarExpr>| v.iter().position(|r| !r.is_zero()).map(|i| i as u32);
        [bad(&self.term_recursion), bad(&self.difference_equation), bad(&self.heat_bracket)].into_iter().flatten().min()
    }
}

pub fn zhou_series_checks(max_m: u32) -> ZhouReport {
    zhou_series_checks_with(max_m, &zhou_exponent)
}

/// As [`zhou_series_checks`] with a replacement for the `q` exponent `m(m−1)/2`.
pub fn zhou_series_checks_with(max_m: u32, exponent: &dyn Fn(i64) -> i64) -> ZhouReport {
    let a = |m: u32| zhou_term(m, exponent);
    let mut fact = vec![Rational::one()];
    for m in 1..=max_m + 1 {
        fact.push(&fact[m as usize - 1] * Rational::from(m as i64));
    }
    let term_recursion = (0..max_m)
        .map(|m| {
            let rhs = QHbarExpr::monomial(m as i64, -1, 0, Rational::one());
            &a(m + 1) - &(&rhs * &a(m)).times_x()
        })
        .collect();
    // P Z collected by powers of e^{−w}: ħ∂_w contributes at the same m, the shift at m+1.
    let difference_equation = (0..=max_m)
        .map(|m| {
            let here = a(m).scale(&fact[m as usize].recip().expect("nonzero"));
            let mut r = here.d_w().times_hbar(1);
            if m > 0 {
                let prev = a(m - 1).scale(&fact[m as usize - 1].recip().expect("nonzero"));
                r = &r + &prev.shift_w().times_x();
            }
            r
        })
        .collect();
    let heat_bracket = (0..=max_m)
        .map(|m| {
            let f = a(m);
            let dw = f.d_w();
            let mut r = dw.d_w().scale(&Rational::frac(1, 2));
            r = &r + &dw.scale(&Rational::frac(1, 2));
            r = &r + &dw.times_hbar(-1);
            &r - &f.d_hbar()
        })
        .collect();
    ZhouReport { max_m, term_recursion, difference_equation, heat_bracket }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommutatorRecord {
    pub m: u32,
    pub k: i64,
    pub residual: QHbarExpr,
}

/// `(PQ − QP − P) e^{−mw}ħ^k` for `m ≤ M`, `|k| ≤ 3`.
pub fn pq_commutator_check(max_m: u32, q: &QCoefficients) -> Vec<CommutatorRecord> {
    let mut out = Vec::new();
    for m in 0..=max_m {
        for k in -3..=3 {
            let f = QHbarExpr::monomial(0, k, m, Rational::one());
            let pq = apply_p(&apply_q(&f, q));
            let qp = apply_q(&apply_p(&f), q);
            let residual = &(&pq - &qp) - &apply_p(&f);
            out.push(CommutatorRecord { m, k, residual });
        }
    }
    out
}
