//! WKB coefficients `S^C_m` and the Catalan Schrödinger residual.

use serde::{Deserialize, Serialize};

use super::curve::{dx_in_t, t_to_z, x_of_t};
use super::{CatalanError, CatalanModel};
use crate::algebra::{Mobius, Poly, Rational, RationalFunction, Var};

/// `S_m` in `t`. For `m ≤ 1` only `dS_m/dt` is rational.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum SCatalan {
    Function(RationalFunction),
    TDerivative(RationalFunction),
}

impl SCatalan {
    pub fn dt(&self) -> RationalFunction {
        match self {
            SCatalan::Function(f) => f.differentiate(),
            SCatalan::TDerivative(d) => d.clone(),
        }
    }

    /// `dS/dx` as a function of `t`.
    pub fn dx(&self) -> RationalFunction {
        let factor = RationalFunction::from_ints(&[-1, 0, 2, 0, -1], &[0, 8], Var::T);
        &factor * &self.dt()
    }

    pub fn function(&self) -> Option<&RationalFunction> {
        match self {
            SCatalan::Function(f) => Some(f),
            SCatalan::TDerivative(_) => None,
        }
    }

    /// `S_m` rewritten in `z`.
    pub fn in_z(&self) -> Option<RationalFunction> {
        self.function().map(t_to_z)
    }
}

fn factors() -> [Poly; 3] {
    [Poly::from_ints(&[0, 1]), Poly::from_ints(&[-1, 1]), Poly::from_ints(&[1, 1])]
}

/// `S_0`, `S_1` seeds as `t`-derivatives.
fn seed(m: u32) -> SCatalan {
    match m {
        // dS_0/dx = −z and dx/dt = −8t/(t²−1)².
        0 => SCatalan::TDerivative(RationalFunction::from_ints(&[0, 8, 8], &[-1, 1, 2, -2, -1, 1], Var::T)),
        1 => SCatalan::TDerivative(RationalFunction::from_ints(&[1, 1], &[0, -2, 2], Var::T)),
        _ => unreachable!("seeds exist for m ≤ 1"),
    }
}

impl CatalanModel {
    /// `S_m = Σ_{2g−2+n=m−1} F^C_{g,n}(t,…,t)/n!`.
    pub fn s_coeff_assembled(&self, m: u32) -> Result<SCatalan, CatalanError> {
        if m < 2 {
            return Ok(seed(m));
        }
        let mut acc = RationalFunction::zero(Var::T);
        for (g, n) in Self::topologies(m - 1) {
            let f = self.free_energy(g, n)?;
            let fact: u64 = (1..=n as u64).product();
            acc = &acc + &f.poly.principal_specialization(Var::T).scale(&Rational::frac(1, fact as i64));
        }
        Ok(SCatalan::Function(acc))
    }

    /// `S_2..S_m` from the seeds by the ordinary differential recursion.
    pub fn s_coeff_recursive(&self, m: u32) -> Result<SCatalan, CatalanError> {
        Ok(s_sequence_recursive(m)?.pop().expect("nonempty"))
    }

    /// `S_0..S_m` from the assembly path.
    pub fn s_sequence_assembled(&self, m: u32) -> Result<Vec<SCatalan>, CatalanError> {
        (0..=m).map(|k| self.s_coeff_assembled(k)).collect()
    }

    /// Residuals of the Schrödinger equation at orders `ħ^0..ħ^{m_max+1}`.
    pub fn schrodinger_residual(&self, m_max: u32) -> Result<Vec<RationalFunction>, CatalanError> {
        let s = self.s_sequence_assembled(m_max + 1)?;
        let dx: Vec<RationalFunction> = s.iter().map(SCatalan::dx).collect();
        Ok(schrodinger_residual_from(&dx))
    }
}

/// `S_0..S_m`; `dS_{k+1}/dt = −A/32 [S_k'' + Σ_{a+b=k+1, a,b≥1} S_a' S_b'] − (t²−1)²(3t²+1)/(32t³) S_k'`
/// with `A = (t²−1)³/t²` and `' = d/dt`.
pub fn s_sequence_recursive(m: u32) -> Result<Vec<SCatalan>, CatalanError> {
    let a = RationalFunction::from_ints(&[-1, 0, 3, 0, -3, 0, 1], &[0, 0, 32], Var::T);
    let b = RationalFunction::from_ints(&[1, 0, 1, 0, -5, 0, 3], &[0, 0, 0, 32], Var::T);
    let mut seq = vec![seed(0), seed(1)];
    let mut dts: Vec<RationalFunction> = seq.iter().map(SCatalan::dt).collect();
    for k in 1..m as usize {
        let mut bracket = dts[k].differentiate();
        for i in 1..=k {
            bracket = &bracket + &(&dts[i] * &dts[k + 1 - i]);
        }
        let next_dt = -&(&(&a * &bracket) + &(&b * &dts[k]));
        let s = next_dt.integrate_no_log(&Rational::from(-1), &factors())?;
        dts.push(next_dt);
        seq.push(SCatalan::Function(s));
    }
    seq.truncate(m as usize + 1);
    Ok(seq)
}

/// Order-`ħ^k` residuals `S''_{k−1} + Σ_{a+b=k} S'_a S'_b + x S'_k (+1 at k=0)`,
/// with `' = d/dx` and inputs `dS_k/dx` in `t`.
pub fn schrodinger_residual_from(dx: &[RationalFunction]) -> Vec<RationalFunction> {
    let x = x_of_t();
    (0..dx.len())
        .map(|k| {
            let mut r = &x * &dx[k];
            if k == 0 {
                r = &r + &RationalFunction::one(Var::T);
            } else {
                r = &r + &dx_in_t(&dx[k - 1]);
            }
            for a in 0..=k {
                r = &r + &(&dx[a] * &dx[k - a]);
            }
            r
        })
        .collect()
}

/// `S_m` as a function of `s = z²/(z²−1)`, when `S_m(z)` is even in `z`.
pub fn s_polynomial(s_in_z: &RationalFunction) -> Option<RationalFunction> {
    let w = s_in_z.deflate(2, Var::S)?;
    w.substitute_mobius(&Mobius::new(1, 0, 1, -1), Var::S).ok()
}
