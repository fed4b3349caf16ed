//! `S^H_m`: assembled from free energies and from the integral recursion, plus the heat residual.

use serde::{Deserialize, Serialize};

use super::xi::euler_factor;
use super::{HurwitzError, HurwitzModel};
use crate::algebra::{Mobius, Poly, Rational, RationalFunction, Var};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum SHurwitz {
    Function(RationalFunction),
    TDerivative(RationalFunction),
}

/// `D = x d/dx = t²(t−1) d/dt = −d/dw` on rational functions of `t`.
pub fn big_d(f: &RationalFunction) -> RationalFunction {
    &RationalFunction::from_poly(euler_factor(), Var::T) * &f.differentiate()
}

/// `f(t) ↦ f(1/(1−z))`.
pub fn t_to_z(f: &RationalFunction) -> RationalFunction {
    f.substitute_mobius(&Mobius::new(0, 1, -1, 1), Var::Z).expect("nondegenerate map")
}

impl SHurwitz {
    pub fn dt(&self) -> RationalFunction {
        match self {
            SHurwitz::Function(f) => f.differentiate(),
            SHurwitz::TDerivative(d) => d.clone(),
        }
    }

    /// `x dS/dx` in `t`.
    pub fn x_dx(&self) -> RationalFunction {
        &RationalFunction::from_poly(euler_factor(), Var::T) * &self.dt()
    }

    pub fn function(&self) -> Option<&RationalFunction> {
        match self {
            SHurwitz::Function(f) => Some(f),
            SHurwitz::TDerivative(_) => None,
        }
    }
}

/// `S_0 = ½(1 − 1/t²)` and `dS_1/dt = (t−1)/(2t²)`.
pub fn seed(m: u32) -> SHurwitz {
    match m {
        0 => SHurwitz::Function(RationalFunction::from_ints(&[-1, 0, 1], &[0, 0, 2], Var::T)),
        1 => SHurwitz::TDerivative(RationalFunction::from_ints(&[-1, 1], &[0, 0, 2], Var::T)),
        _ => unreachable!("seeds exist for m ≤ 1"),
    }
}

fn factors() -> [Poly; 2] {
    [Poly::from_ints(&[0, 1]), Poly::from_ints(&[-1, 1])]
}

/// `S_0..S_m` by `(k + t(t−1)d/dt) S_{k+1} = ½[D²S_k + Σ_{a+b=k+1, a,b≥1} DS_a DS_b − DS_k]`,
/// integrated as `d/dt[((t−1)/t)^k S_{k+1}] = ((t−1)/t)^k R_k/(t(t−1))` from `t = 1`.
pub fn s_sequence_recursive(m: u32) -> Result<Vec<SHurwitz>, HurwitzError> {
    let mut seq = vec![seed(0), seed(1)];
    let mut d: Vec<RationalFunction> = seq.iter().map(SHurwitz::x_dx).collect();
    let ratio = RationalFunction::from_ints(&[-1, 1], &[0, 1], Var::T);
    let tt1 = RationalFunction::from_ints(&[0, -1, 1], &[1], Var::T);
    for k in 1..m as usize {
        let mut r = big_d(&d[k]);
        for a in 1..=k {
            r = &r + &(&d[a] * &d[k + 1 - a]);
        }
        r = (&r - &d[k]).scale(&Rational::frac(1, 2));
        let weight = ratio.pow(k as i32)?;
        let integrand = (&weight * &r).checked_div(&tt1)?;
        let integral = integrand.integrate_no_log(&Rational::one(), &factors())?;
        let s = integral.checked_div(&weight)?;
        d.push(big_d(&s));
        seq.push(SHurwitz::Function(s));
    }
    seq.truncate(m as usize + 1);
    Ok(seq)
}

/// `(−D − k) S_{k+1} + ½[D²S_k + Σ_{a+b=k+1} DS_a DS_b − DS_k]` for `k = 0..len−2`.
pub fn heat_residual_from(seq: &[SHurwitz]) -> Vec<RationalFunction> {
    let d: Vec<RationalFunction> = seq.iter().map(SHurwitz::x_dx).collect();
    (0..d.len().saturating_sub(1))
        .map(|k| {
            let mut bracket = &big_d(&d[k]) - &d[k];
            for a in 0..=k + 1 {
                bracket = &bracket + &(&d[a] * &d[k + 1 - a]);
            }
            let mut r = &bracket.scale(&Rational::frac(1, 2)) - &d[k + 1];
            if k > 0 {
                let s = seq[k + 1].function().expect("S_m is rational for m ≥ 2");
                r = &r - &s.scale(&Rational::from(k as i64));
            }
            r
        })
        .collect()
}

/// `S_0 − DS_0 + ½(DS_0)²`, which must vanish.
pub fn s0_identity() -> RationalFunction {
    let s0 = seed(0);
    let d0 = s0.x_dx();
    let f = s0.function().expect("S_0 is rational").clone();
    &(&f - &d0) + &(&d0 * &d0).scale(&Rational::frac(1, 2))
}

impl HurwitzModel {
    /// `S_m = Σ_{2g−2+n=m−1} F^H_{g,n}(t,…,t)/n!`.
    pub fn s_coeff_assembled(&self, m: u32) -> Result<SHurwitz, HurwitzError> {
        if m < 2 {
            return Ok(seed(m));
        }
        let mut acc = RationalFunction::zero(Var::T);
        for (g, n) in crate::stable_topologies(m - 1) {
            let f = self.free_energy(g, n)?;
            let fact: i64 = (1..=n as i64).product();
            acc = &acc + &f.poly.principal_specialization(Var::T).scale(&Rational::frac(1, fact));
        }
        Ok(SHurwitz::Function(acc))
    }

    pub fn s_sequence_assembled(&self, m: u32) -> Result<Vec<SHurwitz>, HurwitzError> {
        (0..=m).map(|k| self.s_coeff_assembled(k)).collect()
    }

    /// Both constructions, checked for equality, degree `3m−3` and vanishing at `t = 1`.
    pub fn s_coeff(&self, m: u32) -> Result<Poly, HurwitzError> {
        if m < 2 {
            return Err(HurwitzError::NoClosedForm(m));
        }
        let assembled = self.s_coeff_assembled(m)?;
        let recursive = s_sequence_recursive(m)?.pop().expect("nonempty");
        if assembled != recursive {
            return Err(HurwitzError::PathMismatch(m));
        }
        let f = assembled.function().expect("m ≥ 2");
        let p = f.as_polynomial().ok_or_else(|| HurwitzError::PropertyViolation(format!("S_{m} is not a polynomial")))?;
        if p.degree() != Some(3 * m as usize - 3) {
            return Err(HurwitzError::PropertyViolation(format!("S_{m} has degree {:?}", p.degree())));
        }
        if !p.eval(&Rational::one()).is_zero() {
            return Err(HurwitzError::PropertyViolation(format!("S_{m}(1) ≠ 0")));
        }
        Ok(p.clone())
    }

    /// Heat residuals for `m = 0..=m_max`.
    pub fn heat_residual(&self, m_max: u32) -> Result<Vec<RationalFunction>, HurwitzError> {
        Ok(heat_residual_from(&self.s_sequence_assembled(m_max + 1)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s0_sector() {
        assert!(s0_identity().is_zero());
        // DS_0 = z and DS_1 = (t−1)²/2.
        let z = RationalFunction::from_ints(&[-1, 1], &[0, 1], Var::T);
        assert_eq!(seed(0).x_dx(), z);
        assert_eq!(seed(1).x_dx(), RationalFunction::from_ints(&[1, -2, 1], &[2], Var::T));
    }

    #[test]
    fn lowest_heat_order_uses_seeds_only() {
        let r = heat_residual_from(&[seed(0), seed(1)]);
        assert_eq!(r.len(), 1);
        assert!(r[0].is_zero());
    }

    #[test]
    fn coordinate_change() {
        let t = RationalFunction::variable(Var::T);
        assert_eq!(t_to_z(&t), RationalFunction::from_ints(&[1], &[1, -1], Var::Z));
    }
}
