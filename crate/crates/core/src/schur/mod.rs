//! Partitions, characters, Schur functions in power sums and the KP τ-function of Hurwitz numbers.

mod character;
mod partition;
mod ppoly;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Rational, TruncatedSeries, Var};
use crate::hurwitz::{zhou_series, HurwitzError, HurwitzTable, QHbarExpr};

pub use character::CharacterTable;
pub use partition::{partitions, shifted_power_sum, Partition};
pub use ppoly::{PPolynomial, PPolynomial2};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    #[error("|mu| = {} differs from |lambda| = {}", mu.size(), lambda.size())]
    SizeMismatch { mu: Partition, lambda: Partition },
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn ratio(a: BigInt, b: BigInt) -> Rational {
    Rational::new(a, b).expect("nonzero denominator")
}

/// `(dim μ, χ_μ(λ))`; the character is `None` when `λ` is omitted.
pub fn dim_and_character(
    chars: &CharacterTable,
    mu: &Partition,
    lambda: Option<&Partition>,
) -> Result<(BigInt, Option<BigInt>), SchurError> {
    let chi = lambda.map(|l| chars.character(mu, l)).transpose()?;
    Ok((mu.dimension(), chi))
}

/// `s_μ = Σ_{|λ|=|μ|} χ_μ(λ)/z_λ p_λ`.
pub fn schur_in_p(chars: &CharacterTable, mu: &Partition) -> PPolynomial {
    let mut out = PPolynomial::zero();
    for lambda in partitions(mu.size()) {
        let chi = chars.character(mu, &lambda).expect("sizes agree");
        out.add_term(lambda.clone(), ratio(chi, lambda.z()));
    }
    out
}

/// `Δ = ½Σ_{i,j≥1} [(i+j) p_i p_j ∂_{p_{i+j}} + ij p_{i+j} ∂²_{p_i p_j}]`.
pub fn cutjoin_apply(f: &PPolynomial) -> PPolynomial {
    let top = f.max_weight().unwrap_or(0);
    let half = Rational::frac(1, 2);
    let mut out = PPolynomial::zero();
    for k in 2..=top {
        let dk = f.d_p(k);
        if dk.is_zero() {
            continue;
        }
        for i in 1..k {
            out = out.add(&dk.times_p(i).times_p(k - i).scale(&(Rational::from(k) * &half)));
        }
    }
    for i in 1..=top {
        let di = f.d_p(i);
        if di.is_zero() {
            continue;
        }
        for j in 1..=top {
            let dij = di.d_p(j);
            if !dij.is_zero() {
                out = out.add(&dij.times_p(i + j).scale(&(Rational::from(i * j) * &half)));
            }
        }
    }
    out
}

/// `Δ s_μ − ½p₂[μ] s_μ` for every `|μ| ≤ max_size`.
pub fn eigenvalue_residuals(chars: &CharacterTable, max_size: u32) -> Vec<(Partition, PPolynomial)> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        for mu in partitions(n) {
            let s = schur_in_p(chars, &mu);
            let eig = shifted_power_sum(2, &mu) * Rational::frac(1, 2);
            out.push((mu, cutjoin_apply(&s).sub(&s.scale(&eig))));
        }
    }
    out
}

/// `H(s, p) = Σ_{g,n} (1/n!) Σ_{μ ∈ ℤ₊ⁿ} H_{g,n}(μ) p_μ s^r`, truncated at weight `d_max` and `s^{r_max}`.
pub fn h_series(
    numbers: &HurwitzTable,
    d_max: u32,
    r_max: u32,
) -> Result<TruncatedSeries<PPolynomial>, SchurError> {
    let mut coeffs = vec![PPolynomial::zero(); r_max as usize + 1];
    for d in 1..=d_max {
        for mu in partitions(d) {
            let n = mu.len() as u32;
            // Orderings of μ divided by n! leave 1/∏ m_i!.
            let mut aut = BigInt::from(1);
            let mut seen = Vec::new();
            for &p in mu.parts() {
                if !seen.contains(&p) {
                    seen.push(p);
                    aut *= factorial(mu.multiplicity(p));
                }
            }
            let mut g = 0;
            while let Some(r) = (2 * g + n + d).checked_sub(2).filter(|&r| r <= r_max) {
                let h = numbers.number(g, mu.parts())?;
                coeffs[r as usize].add_term(mu.clone(), h / Rational::from(aut.clone()));
                g += 1;
            }
        }
    }
    Ok(TruncatedSeries::from_coeffs(Var::S, r_max as usize, coeffs))
}

/// `exp(p_1)` through weight `w`.
fn exp_p1(w: u32) -> PPolynomial {
    let mut out = PPolynomial::zero();
    let mut power = PPolynomial::constant(Rational::one());
    for k in 0..=w {
        out = out.add(&power.scale(&ratio(BigInt::from(1), factorial(k))));
        power = power.mul_truncated(&PPolynomial::p(1), w);
    }
    out
}

/// `exp H(s, p)` with weights `≤ d_max`.
pub fn exp_h_series(numbers: &HurwitzTable, d_max: u32, r_max: u32) -> Result<TruncatedSeries<PPolynomial>, SchurError> {
    let h = h_series(numbers, d_max, r_max)?;
    Ok(h.exp_with(exp_p1(d_max), |a, b| a.mul_truncated(b, d_max)))
}

/// `Σ_{|μ|≤d_max} (dim μ/|μ|!) e^{½p₂[μ]s} s_μ(p)` through `s^{r_max}`.
pub fn tau_schur_side(chars: &CharacterTable, d_max: u32, r_max: u32) -> TruncatedSeries<PPolynomial> {
    let mut coeffs = vec![PPolynomial::zero(); r_max as usize + 1];
    for d in 0..=d_max {
        for mu in partitions(d) {
            let weight = ratio(mu.dimension(), factorial(d));
            let s = schur_in_p(chars, &mu).scale(&weight);
            let eig = shifted_power_sum(2, &mu) * Rational::frac(1, 2);
            for (r, slot) in coeffs.iter_mut().enumerate() {
                let c = eig.pow(r as i32) * ratio(BigInt::from(1), factorial(r as u32));
                *slot = slot.add(&s.scale(&c));
            }
        }
    }
    TruncatedSeries::from_coeffs(Var::S, r_max as usize, coeffs)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TauReport {
    pub d_max: u32,
    pub r_max: u32,
    /// `[s^r](exp H − Schur side)` for `r ≤ r_max`.
    pub residual: Vec<PPolynomial>,
    /// `(r+1) Z_{r+1} − Δ Z_r` for `r < r_max`.
    pub heat_residual: Vec<PPolynomial>,
}

impl TauReport {
    pub fn pass(&self) -> bool {
        self.residual.iter().chain(&self.heat_residual).all(PPolynomial::is_zero)
    }

    pub fn residual_terms(&self) -> usize {
        self.residual.iter().chain(&self.heat_residual).map(PPolynomial::len).sum()
    }
}

pub fn tau_expansion_residual(
    chars: &CharacterTable,
    numbers: &HurwitzTable,
    d_max: u32,
    r_max: u32,
) -> Result<TauReport, SchurError> {
    let z = exp_h_series(numbers, d_max, r_max)?;
    let schur = tau_schur_side(chars, d_max, r_max);
    let residual = z.coeffs().iter().zip(schur.coeffs()).map(|(a, b)| a.sub(b)).collect();
    let heat_residual = (0..r_max as usize)
        .map(|r| z.coeffs()[r + 1].scale(&Rational::from(r + 1)).sub(&cutjoin_apply(&z.coeffs()[r])))
        .collect();
    Ok(TauReport { d_max, r_max, residual, heat_residual })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CauchyReport {
    pub d_max: u32,
    /// Number of surviving `p_λ p^y_ν` monomials in the two-alphabet difference.
    pub residual_terms: usize,
    /// `e^{p_1} − Σ s_μ(1,0,…) s_μ(p)`.
    pub restriction: PPolynomial,
}

impl CauchyReport {
    pub fn pass(&self) -> bool {
        self.residual_terms == 0 && self.restriction.is_zero()
    }
}

/// `Σ_μ s_μ(p) s_μ(p^y)` against `exp(Σ_m p_m p^y_m/m)`, through weight `d_max`.
pub fn cauchy_residual(chars: &CharacterTable, d_max: u32) -> CauchyReport {
    let mut lhs = PPolynomial2::default();
    let mut restricted = PPolynomial::zero();
    for d in 0..=d_max {
        for mu in partitions(d) {
            let s = schur_in_p(chars, &mu);
            lhs = lhs.add(&PPolynomial2::tensor(&s, &s));
            restricted = restricted.add(&s.scale(&s.specialize(&[Rational::one()])));
        }
    }
    let mut rhs = PPolynomial2::one();
    for m in 1..=d_max {
        // exp(p_m p^y_m / m) through weight d_max.
        let mut factor = PPolynomial2::default();
        for k in 0..=d_max / m {
            let c = ratio(BigInt::from(1), BigInt::from(m).pow(k) * factorial(k));
            let part = Partition::new(vec![m; k as usize]);
            factor.add_term(part.clone(), part, c);
        }
        rhs = rhs.mul_truncated(&factor, d_max);
    }
    let residual = lhs.sub(&rhs);
    let restriction = exp_p1(d_max).sub(&restricted);
    debug_assert_eq!(residual.specialize_second(&[Rational::one()]).is_zero(), restriction.is_zero());
    CauchyReport { d_max, residual_terms: residual.len(), restriction }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CollapseRecord {
    pub mu: Partition,
    pub contribution: QHbarExpr,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub max_m: u32,
    pub records: Vec<CollapseRecord>,
    /// Partitions with more than one part whose contribution survived.
    pub surviving_multirow: Vec<Partition>,
    /// Schur-side total minus the Zhou series.
    pub residual: QHbarExpr,
}

impl CollapseReport {
    pub fn pass(&self) -> bool {
        self.surviving_multirow.is_empty() && self.residual.is_zero()
    }
}

/// Principal specialization `p_j = (x/ħ)^j` of the Schur-side sum for `|μ| ≤ max_m`.
pub fn principal_collapse_check(chars: &CharacterTable, max_m: u32) -> CollapseReport {
    let mut records = Vec::new();
    let mut total = QHbarExpr::zero();
    let mut surviving_multirow = Vec::new();
    for d in 0..=max_m {
        let ones = vec![Rational::one(); d as usize];
        for mu in partitions(d) {
            // s_μ(p_j = y^j) = c_μ y^{|μ|}.
            let c = schur_in_p(chars, &mu).specialize(&ones);
            let weight = ratio(mu.dimension(), factorial(d)) * c;
            let contribution = QHbarExpr::monomial(mu.content_sum(), -(d as i64), d, weight);
            if mu.len() > 1 && !contribution.is_zero() {
                surviving_multirow.push(mu.clone());
            }
            total = &total + &contribution;
            records.push(CollapseRecord { mu, contribution });
        }
    }
    let residual = &total - &zhou_series(max_m);
    CollapseReport { max_m, records, surviving_multirow, residual }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn schur_low_degree() {
        let chars = CharacterTable::new();
        assert_eq!(schur_in_p(&chars, &p(&[1])), PPolynomial::p(1));
        let half = Rational::frac(1, 2);
        let mut s2 = PPolynomial::monomial(p(&[2]), half.clone());
        s2.add_term(p(&[1, 1]), half.clone());
        assert_eq!(schur_in_p(&chars, &p(&[2])), s2);
        let mut s11 = PPolynomial::monomial(p(&[2]), -half.clone());
        s11.add_term(p(&[1, 1]), half);
        assert_eq!(schur_in_p(&chars, &p(&[1, 1])), s11);
    }

    #[test]
    fn cut_and_join_examples() {
        let chars = CharacterTable::new();
        assert!(cutjoin_apply(&PPolynomial::p(1)).is_zero());
        let s2 = schur_in_p(&chars, &p(&[2]));
        assert_eq!(cutjoin_apply(&s2), s2);
    }

    #[test]
    fn burnside_and_contents() {
        let chars = CharacterTable::new();
        let total: BigInt = partitions(4).iter().map(|m| m.dimension().pow(2)).sum();
        assert_eq!(total, BigInt::from(24));
        let (dim, chi) = dim_and_character(&chars, &p(&[2, 1]), None).unwrap();
        assert_eq!((dim, chi), (BigInt::from(2), None));
        for n in 0..=8 {
            for mu in partitions(n) {
                assert_eq!(shifted_power_sum(2, &mu), Rational::from(2 * mu.content_sum()));
            }
        }
    }

    #[test]
    fn h_series_low_coefficients() {
        let numbers = HurwitzTable::new();
        let h = h_series(&numbers, 2, 3).unwrap();
        assert_eq!(h.coeffs()[0].coeff(&p(&[1])), Rational::one());
        assert_eq!(h.coeffs()[1].coeff(&p(&[2])), Rational::frac(1, 2));
        assert_eq!(h.coeffs()[3].coeff(&p(&[2])), Rational::frac(1, 12));
    }

    #[test]
    fn weight_one_tau_and_cauchy() {
        let chars = CharacterTable::new();
        let numbers = HurwitzTable::new();
        assert!(tau_expansion_residual(&chars, &numbers, 1, 2).unwrap().pass());
        assert!(cauchy_residual(&chars, 1).pass());
    }

    #[test]
    fn collapse_kills_two_rows() {
        let chars = CharacterTable::new();
        let r = principal_collapse_check(&chars, 4);
        assert!(r.pass(), "{:?}", r.residual);
        let rec = r.records.iter().find(|c| c.mu == p(&[1, 1])).unwrap();
        assert!(rec.contribution.is_zero());
    }
}
