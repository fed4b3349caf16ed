//! Free energies `F^C_{g,n}` from the differential recursion in `t_1`.

use serde::{Deserialize, Serialize};

use super::{CatalanError, CatalanModel};
use crate::algebra::{FractionSum, LinearFactor, Rational, SparseLaurent};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FreeEnergyC {
    pub g: u32,
    pub n: u32,
    pub poly: SparseLaurent,
}

impl FreeEnergyC {
    /// Value at `t_1 = … = t_n = 1`, the point `s = 1`.
    pub fn value_at_one(&self) -> Rational {
        self.poly.terms().map(|(_, c)| c.clone()).sum()
    }
}

/// `(t²−1)³/t²` in variable `i`.
fn cubic_factor(arity: usize, i: usize) -> SparseLaurent {
    SparseLaurent::univariate(
        arity,
        i,
        &[(4, Rational::one()), (2, Rational::from(-3)), (0, Rational::from(3)), (-2, Rational::from(-1))],
    )
}

/// `(t²−1)²/t²` in variable `i`.
fn square_factor(arity: usize, i: usize) -> SparseLaurent {
    SparseLaurent::univariate(
        arity,
        i,
        &[(2, Rational::one()), (0, Rational::from(-2)), (-2, Rational::one())],
    )
}

/// `t_a + t_b` with the smaller index as pivot.
fn plus(arity: usize, a: usize, b: usize) -> LinearFactor {
    LinearFactor::sum_of_vars(arity, a.min(b), a.max(b), 1)
}

fn minus(arity: usize, a: usize, b: usize) -> LinearFactor {
    LinearFactor::sum_of_vars(arity, a, b, -1)
}

fn shifted(arity: usize, a: usize, c: i64) -> LinearFactor {
    LinearFactor::shifted_var(arity, a, &Rational::from(c))
}

/// Positions placing a lower-arity function's first slot at `first` and the
/// remaining slots at the indices `1..arity` other than `skip`.
fn slots(arity: usize, first: usize, skip: usize) -> Vec<usize> {
    std::iter::once(first).chain((1..arity).filter(|&k| k != skip)).collect()
}

impl CatalanModel {
    pub(super) fn compute_free_energy(&self, g: u32, n: u32) -> Result<FreeEnergyC, CatalanError> {
        let arity = n as usize;
        let d1 = if (g, n) == (0, 3) {
            self.d1_f03()?
        } else {
            self.d1_general(g, n)?
        };
        let poly = d1.integrate(0, &Rational::from(-1))?;
        if !poly.is_symmetric() {
            return Err(CatalanError::AsymmetricResult { g, n });
        }
        debug_assert_eq!(poly.arity(), arity);
        Ok(FreeEnergyC { g, n, poly })
    }

    fn d1_general(&self, g: u32, n: u32) -> Result<SparseLaurent, CatalanError> {
        let arity = n as usize;
        let a1 = cubic_factor(arity, 0);
        let mut acc = FractionSum::new(arity);
        let mut poly = SparseLaurent::zero(arity);

        if n >= 2 {
            let lower = self.free_energy(g, n - 1)?;
            let dg = lower.poly.derivative(0);
            let sq = square_factor(arity, 0);
            for j in 1..arity {
                let d1_hat_j = dg.embed(arity, &slots(arity, 0, j));
                let dj_hat_1 = dg.embed(arity, &slots(arity, j, j));
                let bracket = &(&a1 * &d1_hat_j) - &(&cubic_factor(arity, j) * &dj_hat_1);
                let q = bracket.div_linear(&minus(arity, 0, j))?;
                let numer = (&SparseLaurent::var(arity, j) * &q).scale(&Rational::frac(-1, 16));
                acc.add(&numer, &[plus(arity, 0, j)]);
                poly = &poly - &(&sq * &d1_hat_j).scale(&Rational::frac(1, 16));
            }
        }

        let mut inner = SparseLaurent::zero(arity);
        if g >= 1 {
            if (g, n) == (1, 1) {
                // Diagonal of ∂u1∂u2 F^C_{0,2} is 1/(4 t²).
                inner = SparseLaurent::var_pow(1, 0, -2).scale(&Rational::frac(1, 4));
            } else {
                let upper = self.free_energy(g - 1, n + 1)?;
                inner = upper.poly.derivative(0).derivative(1).merge_into(0, 1);
            }
        }
        let others: Vec<usize> = (1..arity).collect();
        for mask in 0u32..(1 << others.len()) {
            let left: Vec<usize> = others.iter().copied().filter(|k| mask & (1 << (k - 1)) != 0).collect();
            let right: Vec<usize> = others.iter().copied().filter(|k| mask & (1 << (k - 1)) == 0).collect();
            for g1 in 0..=g {
                let (n1, n2) = (left.len() as u32 + 1, right.len() as u32 + 1);
                let g2 = g - g1;
                if 2 * g1 + n1 <= 2 || 2 * g2 + n2 <= 2 {
                    continue;
                }
                let fl = self.free_energy(g1, n1)?;
                let fr = self.free_energy(g2, n2)?;
                let pl: Vec<usize> = std::iter::once(0).chain(left.iter().copied()).collect();
                let pr: Vec<usize> = std::iter::once(0).chain(right.iter().copied()).collect();
                let el = fl.poly.derivative(0).embed(arity, &pl);
                let er = fr.poly.derivative(0).embed(arity, &pr);
                inner = &inner + &(&el * &er);
            }
        }
        poly = &poly - &(&a1 * &inner).scale(&Rational::frac(1, 32));
        acc.add(&poly, &[]);
        Ok(acc.reduce()?)
    }

    /// `(0,3)`: the lower input is `∂_1 F^C_{0,2}(a,b) = (b+1)/((a+b)(a−1))`.
    fn d1_f03(&self) -> Result<SparseLaurent, CatalanError> {
        let ar = 3;
        let one = |k: usize| &SparseLaurent::var(ar, k) + &SparseLaurent::one(ar);
        let a1 = cubic_factor(ar, 0);
        let mut acc = FractionSum::new(ar);
        for j in 1..3 {
            let k = 3 - j;
            let tj = SparseLaurent::var(ar, j);
            let n1 = (&(&tj * &a1) * &one(k)).scale(&Rational::frac(-1, 16));
            acc.add(&n1, &[minus(ar, 0, j), plus(ar, 0, j), plus(ar, 0, k), shifted(ar, 0, 1)]);
            let n2 = (&(&tj * &cubic_factor(ar, j)) * &one(k)).scale(&Rational::frac(1, 16));
            acc.add(&n2, &[minus(ar, 0, j), plus(ar, 0, j), plus(ar, j, k), shifted(ar, j, 1)]);
            let n3 = (&square_factor(ar, 0) * &one(k)).scale(&Rational::frac(-1, 16));
            acc.add(&n3, &[plus(ar, 0, k), shifted(ar, 0, 1)]);
        }
        let n4 = (&(&a1 * &one(1)) * &one(2)).scale(&Rational::frac(1, 16));
        acc.add(&n4, &[plus(ar, 0, 1), plus(ar, 0, 2), shifted(ar, 0, 1), shifted(ar, 0, 1)]);
        Ok(acc.reduce()?)
    }
}
