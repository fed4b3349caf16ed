//! `F^H_{g,n}` in the `ξ̂` basis and the residual of its polynomial recursion.

use serde::{Deserialize, Serialize};

use super::elsv::{distinct_permutations, ElsvTable};
use super::xi::xi_table;
use super::{HurwitzError, HurwitzModel};
use crate::algebra::{FractionSum, LinearFactor, Poly, Rational, RationalFunction, SparseLaurent, Var};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FreeEnergyH {
    pub g: u32,
    pub n: u32,
    pub poly: SparseLaurent,
}

fn poly_in(arity: usize, i: usize, p: &Poly) -> SparseLaurent {
    let terms: Vec<(i32, Rational)> =
        p.coeffs().iter().enumerate().map(|(k, c)| (k as i32, c.clone())).collect();
    SparseLaurent::univariate(arity, i, &terms)
}

/// `Σ_k c_k ∏ ξ̂_{k_i}(t_i)` over distinct orderings of each `k`.
pub fn assemble(table: &ElsvTable) -> FreeEnergyH {
    let n = table.n as usize;
    let k_top = table.entries.iter().flat_map(|e| e.k.iter().copied()).max().unwrap_or(0);
    let xi = xi_table(k_top);
    let mut poly = SparseLaurent::zero(n);
    for e in &table.entries {
        for perm in distinct_permutations(&e.k) {
            let mut term = SparseLaurent::constant(n, e.value.clone());
            for (i, &k) in perm.iter().enumerate() {
                term = &term * &poly_in(n, i, &xi[k as usize]);
            }
            poly = &poly + &term;
        }
    }
    FreeEnergyH { g: table.g, n: table.n, poly }
}

/// `t_i^a (t_i − 1)^b` in variable `i`.
fn tpow(arity: usize, i: usize, a: u32, b: u32) -> SparseLaurent {
    poly_in(arity, i, &(&Poly::monomial(Rational::one(), a as usize) * &Poly::from_ints(&[-1, 1]).pow(b)))
}

fn slots_without(arity: usize, first: usize, skip: &[usize]) -> Vec<usize> {
    std::iter::once(first).chain((0..arity).filter(|k| *k != first && !skip.contains(k))).collect()
}

impl HurwitzModel {
    /// LHS minus RHS of the polynomial recursion, for the supplied `F_{g,n}` and
    /// lower free energies from this model. Denominators are cleared.
    pub fn fh_recursion_residual_of(&self, f: &FreeEnergyH) -> Result<SparseLaurent, HurwitzError> {
        match (f.g, f.n) {
            (1, 1) => self.residual_11(f),
            (0, 3) => self.residual_03(f),
            _ => self.residual_general(f),
        }
    }

    pub fn fh_recursion_residual(&self, g: u32, n: u32) -> Result<SparseLaurent, HurwitzError> {
        let f = self.free_energy(g, n)?;
        self.fh_recursion_residual_of(&f)
    }

    fn lhs(f: &FreeEnergyH) -> SparseLaurent {
        let arity = f.n as usize;
        let chi = Rational::from(2 * f.g as i64 - 2 + f.n as i64);
        let mut out = f.poly.scale(&chi);
        for i in 0..arity {
            out = &out + &(&tpow(arity, i, 1, 1) * &f.poly.derivative(i));
        }
        out
    }

    fn residual_general(&self, f: &FreeEnergyH) -> Result<SparseLaurent, HurwitzError> {
        let (g, n) = (f.g, f.n);
        let arity = n as usize;
        let mut rhs = SparseLaurent::zero(arity);

        if n >= 2 && 2 * g + n > 3 {
            let lower = self.free_energy(g, n - 1)?;
            let dg = lower.poly.derivative(0);
            for i in 0..arity {
                for j in 0..arity {
                    if i == j {
                        continue;
                    }
                    // ∂_i F_{g,n−1}(t_ĵ)
                    let di = dg.embed(arity, &slots_without(arity, i, &[j]));
                    rhs = &rhs - &(&tpow(arity, i, 3, 1) * &di);
                    if i < j {
                        let dj = dg.embed(arity, &slots_without(arity, j, &[i]));
                        let bracket = &(&tpow(arity, i, 2, 2) * &di) - &(&tpow(arity, j, 2, 2) * &dj);
                        let q = bracket.div_linear(&LinearFactor::sum_of_vars(arity, i, j, -1))?;
                        let titj = &SparseLaurent::var(arity, i) * &SparseLaurent::var(arity, j);
                        rhs = &rhs + &(&titj * &q);
                    }
                }
            }
        }

        for i in 0..arity {
            let mut inner = SparseLaurent::zero(arity);
            if g >= 1 {
                let upper = self.free_energy(g - 1, n + 1)?;
                let diag = upper.poly.derivative(0).derivative(1).merge_into(0, 1);
                inner = diag.embed(arity, &slots_without(arity, i, &[]));
            }
            let others: Vec<usize> = (0..arity).filter(|&k| k != i).collect();
            for mask in 0u32..(1 << others.len()) {
                let left: Vec<usize> =
                    others.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &k)| k).collect();
                let right: Vec<usize> =
                    others.iter().enumerate().filter(|(b, _)| mask & (1 << b) == 0).map(|(_, &k)| k).collect();
                for g1 in 0..=g {
                    let g2 = g - g1;
                    let (n1, n2) = (left.len() as u32 + 1, right.len() as u32 + 1);
                    if 2 * g1 + n1 <= 2 || 2 * g2 + n2 <= 2 {
                        continue;
                    }
                    let fl = self.free_energy(g1, n1)?;
                    let fr = self.free_energy(g2, n2)?;
                    let pl: Vec<usize> = std::iter::once(i).chain(left.iter().copied()).collect();
                    let pr: Vec<usize> = std::iter::once(i).chain(right.iter().copied()).collect();
                    let el = fl.poly.derivative(0).embed(arity, &pl);
                    let er = fr.poly.derivative(0).embed(arity, &pr);
                    inner = &inner + &(&el * &er);
                }
            }
            rhs = &rhs + &(&tpow(arity, i, 4, 2) * &inner).scale(&Rational::frac(1, 2));
        }
        Ok(&Self::lhs(f) - &rhs)
    }

    /// `(1,1)`: the only input is the diagonal `∂_{u1}∂_{u2} F^H_{0,2} = −{x; t}/6`.
    fn residual_11(&self, f: &FreeEnergyH) -> Result<SparseLaurent, HurwitzError> {
        let lhs = Self::lhs(f).principal_specialization(Var::T);
        let rhs = &schwarzian_term() * &RationalFunction::from_poly(Poly::from_ints(&[0, 0, 0, 0, 1, -2, 1]), Var::T);
        let r = &lhs - &rhs.scale(&Rational::frac(1, 2));
        let terms: Vec<(i32, Rational)> =
            r.numer().coeffs().iter().enumerate().map(|(k, c)| (k as i32, c.clone())).collect();
        Ok(SparseLaurent::univariate(1, 0, &terms))
    }

    /// `(0,3)`: `x_i ∂_{x_i} F^H_{0,2}(t_i,t_k) = t_i(t_i−1)t_k/(t_i−t_k) − (t_i−1) − X_{ik}` with
    /// `X_{ik} = x_i/(x_i−x_k)`. The `X` are carried as extra variables and `X_{12}` is
    /// eliminated through `X_{01}X_{02} − X_{01}X_{12} + X_{02}X_{12} − X_{02} = 0`.
    fn residual_03(&self, f: &FreeEnergyH) -> Result<SparseLaurent, HurwitzError> {
        const AR: usize = 6;
        let x_var = |i: usize, k: usize| -> SparseLaurent {
            let (a, b) = (i.min(k), i.max(k));
            let idx = match (a, b) {
                (0, 1) => 3,
                (0, 2) => 4,
                _ => 5,
            };
            let v = SparseLaurent::var(AR, idx);
            if i < k {
                v
            } else {
                &SparseLaurent::one(AR) - &v
            }
        };
        let t = |i: usize| SparseLaurent::var(AR, i);
        let tm1 = |i: usize| &t(i) - &SparseLaurent::one(AR);
        // Canonical `t_a − t_b` with `a < b`, and the sign relating it to `t_i − t_k`.
        let diff = |i: usize, k: usize| -> (LinearFactor, Rational) {
            let lf = LinearFactor::sum_of_vars(AR, i.min(k), i.max(k), -1);
            (lf, Rational::from(if i < k { 1 } else { -1 }))
        };
        // D_i F_{0,2}(t_i,t_k) = num / (t_i − t_k).
        let df = |i: usize, k: usize| -> (SparseLaurent, LinearFactor) {
            let (lf, sign) = diff(i, k);
            let tik = &t(i) - &t(k);
            let num = &(&(&(&t(i) * &tm1(i)) * &t(k)) - &(&tm1(i) * &tik)) - &(&x_var(i, k) * &tik);
            (num.scale(&sign), lf)
        };
        let third = |i: usize, j: usize| 3 - i - j;

        let mut acc = FractionSum::new(AR);
        let lhs = Self::lhs(f).embed(AR, &[0, 1, 2]);
        acc.add(&lhs, &[]);
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let k = third(i, j);
                let (num_ik, den_ik) = df(i, k);
                // Second line: −t_i D_i F(t_i, t_k).
                acc.add(&(&t(i) * &num_ik), std::slice::from_ref(&den_ik));
                if i < j {
                    let (num_jk, den_jk) = df(j, k);
                    let (dij, sij) = diff(i, j);
                    let titj = (&t(i) * &t(j)).scale(&sij);
                    let a = &(&titj * &tm1(i)) * &num_ik;
                    let b = &(&titj * &tm1(j)) * &num_jk;
                    acc.add(&-&a, &[dij.clone(), den_ik.clone()]);
                    acc.add(&b, &[dij, den_jk]);
                }
            }
            let j = (i + 1) % 3;
            let k = third(i, j);
            let (nj, dj) = df(i, j);
            let (nk, dk) = df(i, k);
            acc.add(&(&nj * &nk), &[dj, dk]);
        }
        let numer = acc.numerator().clone();
        let x01 = SparseLaurent::var(AR, 3);
        let x02 = SparseLaurent::var(AR, 4);
        let p = &x02 * &(&SparseLaurent::one(AR) - &x01);
        let q = &x02 - &x01;
        Ok(numer.substitute_fraction(5, &p, &q)?)
    }
}

/// `−{x; t}/6` for `x = z e^{−z}`, `z = (t−1)/t`.
fn schwarzian_term() -> RationalFunction {
    // g = x'/x = 1/(t²(t−1)); x''/x' = g + g'/g.
    let g = RationalFunction::from_ints(&[1], &[0, 0, -1, 1], Var::T);
    let ratio = &g + &g.differentiate().checked_div(&g).expect("g ≠ 0");
    let schwarzian = &ratio.differentiate() - &(&ratio * &ratio).scale(&Rational::frac(1, 2));
    schwarzian.scale(&Rational::frac(-1, 6))
}
