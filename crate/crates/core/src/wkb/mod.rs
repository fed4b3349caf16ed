//! The operator hierarchy `Σ ħ^r 𝔇_r = exp(Σ ħ^n 𝔡_n)` acting on curve symbols.

mod operator;
mod symbol;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Rational, RationalFunction, SeriesCoefficient, TruncatedSeries, Var};
use crate::catalan::{self, CatalanError, CatalanModel};
use crate::hurwitz::{self, HurwitzError, HurwitzModel};

pub use operator::YPolyOperator;
pub use symbol::{CurveModel, CurveSymbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WkbError {
    #[error("order {order} needs S_0..S_{order}, got {got} entries")]
    InsufficientData { order: u32, got: usize },
    #[error("d_y A vanishes identically on the curve")]
    DivisionBySingularSymbol,
    #[error(transparent)]
    Catalan(#[from] CatalanError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Borrowed model supplying `S_m` data.
#[derive(Clone, Copy)]
pub enum ModelRef<'a> {
    Catalan(&'a CatalanModel),
    Hurwitz(&'a HurwitzModel),
}

impl ModelRef<'_> {
    pub fn kind(&self) -> CurveModel {
        match self {
            ModelRef::Catalan(_) => CurveModel::Catalan,
            ModelRef::Hurwitz(_) => CurveModel::Hurwitz,
        }
    }

    pub fn curve(&self) -> CurveSymbol {
        CurveSymbol::for_model(self.kind())
    }

    /// `S_0'..S_order'` from assembled free energies, in `z`.
    pub fn s_primes(&self, order: u32) -> Result<Vec<RationalFunction>, WkbError> {
        Ok(match self {
            ModelRef::Catalan(m) => {
                m.s_sequence_assembled(order)?.iter().map(|s| catalan::t_to_z(&s.dx())).collect()
            }
            ModelRef::Hurwitz(m) => {
                m.s_sequence_assembled(order)?.iter().map(|s| hurwitz::t_to_z(&s.x_dx())).collect()
            }
        })
    }
}

/// `[S', S'', …]` up to the `depth`-th derivative.
fn tower(curve: &CurveSymbol, s_prime: &RationalFunction, depth: u32) -> Vec<RationalFunction> {
    let mut out = vec![s_prime.clone()];
    for _ in 1..depth {
        let next = curve.derive(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

fn factorial(r: u32) -> Rational {
    (1..=r as i64).map(Rational::from).product()
}

/// `𝔡_n = Σ_{r=1}^{n+1} S_{n+1−r}^{(r)}/r! ∂_y^r` for `n = 1..=order`, index 0 unused.
fn small_d(order: u32, s_derivs: &[RationalFunction], curve: &CurveSymbol) -> Result<Vec<YPolyOperator>, WkbError> {
    if s_derivs.len() <= order as usize {
        return Err(WkbError::InsufficientData { order, got: s_derivs.len() });
    }
    let towers: Vec<Vec<RationalFunction>> =
        s_derivs.iter().enumerate().map(|(m, s)| tower(curve, s, order + 1 - m.min(order as usize) as u32)).collect();
    let mut out = vec![YPolyOperator::default()];
    for n in 1..=order {
        let mut d = YPolyOperator::default();
        for r in 1..=n + 1 {
            let m = (n + 1 - r) as usize;
            let c = towers[m][r as usize - 1].scale(&factorial(r).recip()?);
            d.add_term(r, c);
        }
        out.push(d);
    }
    Ok(out)
}

/// `𝔇_0..𝔇_order` from the exponential generating function.
pub fn build_d_operators(
    order: u32,
    s_derivs: &[RationalFunction],
    curve: &CurveSymbol,
) -> Result<Vec<YPolyOperator>, WkbError> {
    let d = small_d(order, s_derivs, curve)?;
    let series = TruncatedSeries::from_coeffs(Var::Hbar, order as usize, d);
    Ok(series.exp()?.coeffs().to_vec())
}

/// `𝔇_r = Σ_k (1/k!) Σ_{n_1+…+n_k=r} 𝔡_{n_1}⋯𝔡_{n_k}`, expanded term by term.
pub fn d_operators_by_compositions(
    order: u32,
    s_derivs: &[RationalFunction],
    curve: &CurveSymbol,
) -> Result<Vec<YPolyOperator>, WkbError> {
    let d = small_d(order, s_derivs, curve)?;
    let mut out = vec![YPolyOperator::identity()];
    for r in 1..=order {
        let mut total = YPolyOperator::default();
        for comp in compositions(r) {
            let prod = comp.iter().fold(YPolyOperator::identity(), |acc, &n| acc.mul(&d[n as usize]));
            total = total.add(&prod.scale(&factorial(comp.len() as u32).recip()?));
        }
        out.push(total);
    }
    Ok(out)
}

/// Ordered tuples of positive integers summing to `r`.
fn compositions(r: u32) -> Vec<Vec<u32>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=r {
        for mut rest in compositions(r - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `Σ_r c_r · ∂_y^r A` on the curve.
pub fn apply_to_symbol(op: &YPolyOperator, curve: &CurveSymbol) -> RationalFunction {
    op.coeffs().iter().fold(RationalFunction::zero(Var::Z), |acc, (&r, c)| &acc + &(c * &curve.on_shell(r)))
}

/// `A_1..A_order` from `𝔇_n A + 𝔇_{n−1} A_1 + … + A_n = 0`, with each `A_k` independent of `y`.
pub fn recover_corrections_from(
    curve: &CurveSymbol,
    s_derivs: &[RationalFunction],
    order: u32,
) -> Result<Vec<RationalFunction>, WkbError> {
    let ops = build_d_operators(order, s_derivs, curve)?;
    let mut corrections: Vec<RationalFunction> = Vec::new();
    for n in 1..=order as usize {
        let mut a = -&apply_to_symbol(&ops[n], curve);
        for (k, ak) in corrections.iter().enumerate() {
            a = &a - &(&ops[n - 1 - k].coeff(0) * ak);
        }
        corrections.push(a);
    }
    Ok(corrections)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorrectionsReport {
    pub model: CurveModel,
    pub order: u32,
    pub corrections: Vec<RationalFunction>,
    pub pass: bool,
}

pub fn recover_corrections(model: ModelRef<'_>, order: u32) -> Result<CorrectionsReport, WkbError> {
    let corrections = recover_corrections_from(&model.curve(), &model.s_primes(order)?, order)?;
    let pass = corrections.iter().all(RationalFunction::is_zero);
    Ok(CorrectionsReport { model: model.kind(), order, corrections, pass })
}

/// `S_n'` from `𝔇_n A = 0` given `S_0'..S_{n−1}'`.
pub fn next_s_prime(curve: &CurveSymbol, lower: &[RationalFunction]) -> Result<RationalFunction, WkbError> {
    let n = lower.len() as u32;
    let dya = curve.on_shell(1);
    if dya.is_zero() {
        return Err(WkbError::DivisionBySingularSymbol);
    }
    let mut data = lower.to_vec();
    data.push(RationalFunction::zero(Var::Z));
    let ops = build_d_operators(n, &data, curve)?;
    let rest = apply_to_symbol(&ops[n as usize], curve);
    Ok((-&rest).checked_div(&dya)?)
}

/// `S_0'..S_n'` from the curve alone, starting at `S_0' = y`.
pub fn hierarchy_s_primes(curve: &CurveSymbol, n: u32) -> Result<Vec<RationalFunction>, WkbError> {
    let mut out = vec![curve.y.clone()];
    for _ in 1..=n {
        let next = next_s_prime(curve, &out)?;
        out.push(next);
    }
    Ok(out)
}

/// `dS_n/dx` in `z` solved from the hierarchy.
pub fn s_prime_from_hierarchy(model: CurveModel, n: u32) -> Result<RationalFunction, WkbError> {
    Ok(hierarchy_s_primes(&CurveSymbol::for_model(model), n)?.pop().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_data() -> Vec<RationalFunction> {
        (0..5).map(|k| RationalFunction::from_ints(&[1, k], &[k + 2, 1], Var::Z)).collect()
    }

    #[test]
    fn low_operators() {
        let curve = CurveSymbol::catalan();
        let data = sample_data();
        let ops = build_d_operators(2, &data, &curve).unwrap();
        assert_eq!(ops[0], YPolyOperator::identity());
        let s0pp = curve.derive(&data[0]);
        assert_eq!(ops[1].coeff(1), data[1]);
        assert_eq!(ops[1].coeff(2), s0pp.scale(&Rational::frac(1, 2)));
        assert_eq!(ops[2].coeff(4), (&s0pp * &s0pp).scale(&Rational::frac(1, 8)));
        assert_eq!(build_d_operators(0, &data, &curve).unwrap(), vec![YPolyOperator::identity()]);
    }

    #[test]
    fn exponential_matches_compositions_and_degree_bound() {
        for curve in [CurveSymbol::catalan(), CurveSymbol::hurwitz()] {
            let data = sample_data();
            let a = build_d_operators(4, &data, &curve).unwrap();
            let b = d_operators_by_compositions(4, &data, &curve).unwrap();
            assert_eq!(a, b);
            for (r, op) in a.iter().enumerate() {
                assert!(op.order().unwrap_or(0) <= 2 * r as u32);
            }
        }
    }

    #[test]
    fn missing_data_is_reported() {
        let err = build_d_operators(3, &sample_data()[..2], &CurveSymbol::catalan()).unwrap_err();
        assert_eq!(err, WkbError::InsufficientData { order: 3, got: 2 });
    }

    #[test]
    fn identity_kills_both_symbols() {
        for curve in [CurveSymbol::catalan(), CurveSymbol::hurwitz()] {
            assert!(apply_to_symbol(&YPolyOperator::identity(), &curve).is_zero());
        }
    }

    #[test]
    fn catalan_hierarchy_values() {
        let s = hierarchy_s_primes(&CurveSymbol::catalan(), 3).unwrap();
        let s2 = RationalFunction::new(
            crate::Poly::from_ints(&[0, 0, 0, 0, 0, 3, 0, 2]),
            crate::Poly::from_ints(&[-1, 0, 1]).pow(5),
            Var::Z,
        )
        .unwrap();
        assert_eq!(s[2], s2);
        let s3 = RationalFunction::new(
            crate::Poly::from_ints(&[0, 0, 0, 0, 0, 0, 0, -15, 0, -35, 0, -10]),
            crate::Poly::from_ints(&[-1, 0, 1]).pow(8),
            Var::Z,
        )
        .unwrap();
        assert_eq!(s[3], s3);
    }
}
