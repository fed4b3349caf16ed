//! Catalan curve `x = z + 1/z` and the coordinate `z = (t+1)/(t−1)`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Mobius, Rational, RationalFunction, TruncatedSeries, Var};
use crate::catalan::CatalanTable;

/// `f(t) ↦ f(t(z))`; the map `z = (t+1)/(t−1)` is an involution.
pub fn t_to_z(f: &RationalFunction) -> RationalFunction {
    f.substitute_mobius(&Mobius::new(1, 1, 1, -1), Var::Z).expect("nondegenerate map")
}

/// `x = 2(t²+1)/(t²−1)`.
pub fn x_of_t() -> RationalFunction {
    RationalFunction::from_ints(&[2, 0, 2], &[-1, 0, 1], Var::T)
}

/// `d/dx = −((t²−1)²/(8t)) d/dt`.
pub fn dx_in_t(f: &RationalFunction) -> RationalFunction {
    let factor = RationalFunction::from_ints(&[-1, 0, 2, 0, -1], &[0, 8], Var::T);
    &factor * &f.differentiate()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InversionReport {
    pub order: usize,
    pub pass: bool,
    /// Lowest power of `1/x` at which `z + 1/z − x` is nonzero.
    pub first_failure: Option<usize>,
}

/// Checks that `z(x) = Σ_{m≤N} C_m x^{−2m−1}` inverts `x = z + 1/z` through `x^{−2N}`.
pub fn curve_inversion_check(n: usize) -> InversionReport {
    let table = CatalanTable::new();
    let coeffs: Vec<Rational> = (0..=n)
        .map(|m| Rational::from(table.count(0, &[2 * m as u32]).expect("valid profile")))
        .collect();
    curve_inversion_check_with(&coeffs)
}

/// As [`curve_inversion_check`] with caller-supplied `C_0..C_N`.
pub fn curve_inversion_check_with(catalan: &[Rational]) -> InversionReport {
    let n = catalan.len() - 1;
    let order = 2 * n + 1;
    // With u = 1/x write z = u·w(u); then z + 1/z − x = u^{-1}(u²w + 1/w − 1).
    let mut w = TruncatedSeries::zero(Var::X, order);
    for (m, c) in catalan.iter().enumerate() {
        w.set(2 * m, c.clone()).expect("within order");
    }
    let inv = w.recip().expect("C_0 is nonzero");
    let r = w
        .shift(2)
        .add(&inv)
        .and_then(|s| s.sub(&TruncatedSeries::one(Var::X, order)))
        .expect("same order");
    let first_failure = r.valuation().map(|k| k - 1);
    InversionReport { order: order - 1, pass: first_failure.is_none(), first_failure }
}
