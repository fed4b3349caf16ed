//! The polynomial basis `ξ̂_k(t)` and the Lambert-curve series.

use serde::{Deserialize, Serialize};

use crate::algebra::{Poly, Rational, TruncatedSeries, Var};

/// `t²(t−1)`, the coordinate form of `x d/dx`.
pub fn euler_factor() -> Poly {
    Poly::from_ints(&[0, 0, -1, 1])
}

/// `x d/dx` applied to a polynomial in `t`.
pub fn x_dx(p: &Poly) -> Poly {
    &euler_factor() * &p.derivative()
}

/// `ξ̂_0 = t − 1`, `ξ̂_{k+1} = t²(t−1) ξ̂_k'`.
pub fn xi_polynomial(k: u32) -> Poly {
    let mut p = Poly::from_ints(&[-1, 1]);
    for _ in 0..k {
        p = x_dx(&p);
    }
    p
}

/// `ξ̂_0 … ξ̂_k`.
pub fn xi_table(k: u32) -> Vec<Poly> {
    let mut out = vec![Poly::from_ints(&[-1, 1])];
    for _ in 0..k {
        let next = x_dx(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

fn factorial(n: u64) -> Rational {
    (1..=n).map(Rational::from).product()
}

/// `Σ_{μ≥1} μ^{μ+k}/μ! x^μ` truncated at `x^order`; `k` may be `−1`.
pub fn xi_series(k: i32, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|mu| {
            if mu == 0 {
                Rational::zero()
            } else {
                Rational::from(mu as i64).pow(mu as i32 + k) / factorial(mu as u64)
            }
        })
        .collect();
    TruncatedSeries::from_coeffs(Var::X, order, coeffs)
}

/// `t(x) = 1 + ξ̂_0(x)`.
pub fn t_series(order: usize) -> TruncatedSeries {
    xi_series(0, order).add(&TruncatedSeries::one(Var::X, order)).expect("same order")
}

/// `p(t(x))` as a series in `x`.
pub fn compose_with_t(p: &Poly, order: usize) -> TruncatedSeries {
    let t = t_series(order);
    let mut acc = TruncatedSeries::zero(Var::X, order);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&t).expect("same order");
        let c0 = acc.coeff(0).expect("order ≥ 0") + c;
        acc.set(0, c0).expect("order ≥ 0");
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambertReport {
    pub order: usize,
    pub inversion: bool,
    pub t_relation: bool,
}

impl LambertReport {
    pub fn pass(&self) -> bool {
        self.inversion && self.t_relation
    }
}

/// `z(x)e^{−z(x)} = x` and `t(x) = 1/(1 − z(x))` through `x^order`.
pub fn lambert_inversion_check(order: usize) -> LambertReport {
    let z = xi_series(-1, order);
    let e = z.scale(&-Rational::one()).exp().expect("zero constant term");
    let lhs = z.mul(&e).expect("same order");
    let x = TruncatedSeries::one(Var::X, order).shift(1);
    let one_minus_z = TruncatedSeries::one(Var::X, order).sub(&z).expect("same order");
    let t = one_minus_z.recip().expect("unit constant term");
    LambertReport { order, inversion: lhs == x, t_relation: t == t_series(order) }
}

/// The polynomial `ξ̂_k(t(x))` reproduces the defining series for every `k ≤ k_max`.
pub fn xi_series_consistency(k_max: u32, order: usize) -> bool {
    xi_table(k_max)
        .iter()
        .enumerate()
        .all(|(k, p)| compose_with_t(p, order) == xi_series(k as i32, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_polynomials() {
        assert_eq!(xi_polynomial(0), Poly::from_ints(&[-1, 1]));
        assert_eq!(xi_polynomial(1), Poly::from_ints(&[0, 0, -1, 1]));
        assert_eq!(xi_polynomial(2), Poly::from_ints(&[0, 0, 0, 2, -5, 3]));
        for k in 0..6 {
            assert_eq!(xi_polynomial(k).degree(), Some(2 * k as usize + 1));
        }
    }

    #[test]
    fn lambert() {
        assert!(lambert_inversion_check(8).pass());
        let z = xi_series(-1, 4);
        assert_eq!(z.coeff(1).unwrap(), &Rational::one());
        assert_eq!(z.coeff(3).unwrap(), &Rational::frac(3, 2));
    }

    #[test]
    fn derivative_conversion() {
        assert!(xi_series_consistency(6, 8));
    }
}
