//! Linear Hodge integrals extracted from Hurwitz numbers by an exact solve.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{HurwitzError, HurwitzModel};
use crate::algebra::{independent_rows, solve_exact, AlgebraError, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElsvEntry {
    /// Sorted descending.
    pub k: Vec<u32>,
    pub value: Rational,
}

/// Coefficients `⟨τ_{k_1}…τ_{k_n} Λ_g^∨(1)⟩` indexed by sorted `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElsvTable {
    pub g: u32,
    pub n: u32,
    pub entries: Vec<ElsvEntry>,
    /// Profiles checked against cut-and-join outside the solve.
    pub verified_points: usize,
}

impl ElsvTable {
    pub fn get(&self, k: &[u32]) -> Rational {
        let mut key = k.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.entries.iter().find(|e| e.k == key).map(|e| e.value.clone()).unwrap_or_else(Rational::zero)
    }

    /// `Σ_k c_k ∏ μ_i^{k_i}` summed over distinct orderings of each `k`.
    pub fn predict(&self, mu: &[u32]) -> Rational {
        self.entries.iter().map(|e| &e.value * symmetric_monomial(&e.k, mu)).sum()
    }
}

/// Distinct permutations of a multiset.
pub fn distinct_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

fn symmetric_monomial(k: &[u32], mu: &[u32]) -> Rational {
    distinct_permutations(k)
        .iter()
        .map(|p| {
            let prod: BigInt = p.iter().zip(mu).map(|(&e, &m)| BigInt::from(m).pow(e)).product();
            Rational::from(prod)
        })
        .sum()
}

/// Non-increasing vectors of length `n` with entries in `lo..=hi`.
fn sorted_tuples(n: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (lo..=hi).rev() {
        for mut tail in sorted_tuples(n - 1, lo, first) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Non-increasing length-`n` vectors of non-negative integers with sum ≤ `total`.
fn exponent_vectors(n: usize, total: u32) -> Vec<Vec<u32>> {
    sorted_tuples(n, 0, total).into_iter().filter(|v| v.iter().sum::<u32>() <= total).collect()
}

/// `H(μ) ∏ μ_i!/μ_i^{μ_i}`.
fn normalized_count(model: &HurwitzModel, g: u32, mu: &[u32]) -> Result<Rational, HurwitzError> {
    let h = model.numbers().number(g, mu)?;
    let scale: Rational = mu
        .iter()
        .map(|&m| {
            let fact: BigInt = (1..=m).map(BigInt::from).product();
            Rational::new(fact, BigInt::from(m).pow(m)).expect("nonzero")
        })
        .product();
    Ok(h * scale)
}

impl HurwitzModel {
    pub(super) fn compute_elsv(&self, g: u32, n: u32) -> Result<ElsvTable, HurwitzError> {
        let nn = n as usize;
        let k_max = 3 * g + n - 3;
        let unknowns = exponent_vectors(nn, k_max);
        let grid = sorted_tuples(nn, 1, k_max + 1);
        let rows: Vec<Vec<Rational>> =
            grid.iter().map(|mu| unknowns.iter().map(|k| symmetric_monomial(k, mu)).collect()).collect();
        let picked = independent_rows(&rows);
        if picked.len() < unknowns.len() {
            return Err(AlgebraError::SingularMatrix.into());
        }
        let matrix: Vec<Vec<Rational>> = picked.iter().map(|&i| rows[i].clone()).collect();
        let rhs: Vec<Rational> =
            picked.iter().map(|&i| normalized_count(self, g, &grid[i])).collect::<Result<_, _>>()?;
        let solution = solve_exact(&matrix, &rhs)?;
        let mut table = ElsvTable {
            g,
            n,
            entries: unknowns
                .into_iter()
                .zip(solution)
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, value)| ElsvEntry { k, value })
                .collect(),
            verified_points: 0,
        };

        let mut checks: Vec<Vec<u32>> =
            (0..grid.len()).filter(|i| !picked.contains(i)).map(|i| grid[i].clone()).collect();
        let mut hi = k_max + 3;
        loop {
            let extra: Vec<Vec<u32>> =
                sorted_tuples(nn, 1, hi).into_iter().filter(|mu| mu[0] > k_max + 1).take(8).collect();
            if extra.len() >= 3 {
                checks.extend(extra);
                break;
            }
            hi += 1;
        }
        for mu in &checks {
            let expect = normalized_count(self, g, mu)?;
            if table.predict(mu) != expect {
                return Err(HurwitzError::OverdeterminedMismatch { g, n, mu: mu.clone() });
            }
        }
        table.verified_points = checks.len();
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_of_multiset() {
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[]).len(), 1);
    }

    #[test]
    fn tuples() {
        assert_eq!(sorted_tuples(2, 1, 2), vec![vec![2, 2], vec![2, 1], vec![1, 1]]);
        assert_eq!(exponent_vectors(2, 1), vec![vec![1, 0], vec![0, 0]]);
    }
}
