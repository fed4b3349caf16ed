//! Curve symbols as towers of on-shell `y`-derivatives.

use serde::{Deserialize, Serialize};

use crate::algebra::{RationalFunction, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveModel {
    Catalan,
    Hurwitz,
}

/// `A(x, y)` on its zero locus, parametrized by `z`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSymbol {
    pub model: CurveModel,
    /// Factor turning `'` into `d/dz`.
    pub dx_to_dz: RationalFunction,
    /// `y = S_0'` on the curve.
    pub y: RationalFunction,
    /// Operators in `ħ d/dx` stand to the right of `x`.
    pub ordering: String,
}

impl CurveSymbol {
    /// `A = y² + xy + 1` with `x = z + 1/z`, `y = −z`; `' = d/dx`.
    pub fn catalan() -> Self {
        CurveSymbol {
            model: CurveModel::Catalan,
            dx_to_dz: RationalFunction::from_ints(&[0, 0, 1], &[-1, 0, 1], Var::Z),
            y: RationalFunction::from_ints(&[0, -1], &[1], Var::Z),
            ordering: "x-left".into(),
        }
    }

    /// `A = −y + x e^y` with `x = z e^{−z}`, `y = z`; `' = x d/dx`.
    pub fn hurwitz() -> Self {
        CurveSymbol {
            model: CurveModel::Hurwitz,
            dx_to_dz: RationalFunction::from_ints(&[0, 1], &[1, -1], Var::Z),
            y: RationalFunction::variable(Var::Z),
            ordering: "x-left".into(),
        }
    }

    pub fn for_model(model: CurveModel) -> Self {
        match model {
            CurveModel::Catalan => Self::catalan(),
            CurveModel::Hurwitz => Self::hurwitz(),
        }
    }

    /// `∂_y^r A` restricted to the curve.
    pub fn on_shell(&self, r: u32) -> RationalFunction {
        match (self.model, r) {
            (_, 0) => RationalFunction::zero(Var::Z),
            (CurveModel::Catalan, 1) => RationalFunction::from_ints(&[1, 0, -1], &[0, 1], Var::Z),
            (CurveModel::Catalan, 2) => RationalFunction::from_ints(&[2], &[1], Var::Z),
            (CurveModel::Catalan, _) => RationalFunction::zero(Var::Z),
            (CurveModel::Hurwitz, 1) => RationalFunction::from_ints(&[-1, 1], &[1], Var::Z),
            (CurveModel::Hurwitz, _) => RationalFunction::variable(Var::Z),
        }
    }

    /// `f ↦ f'` in `z`.
    pub fn derive(&self, f: &RationalFunction) -> RationalFunction {
        &self.dx_to_dz * &f.differentiate()
    }
}
