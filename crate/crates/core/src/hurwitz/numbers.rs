//! Single Hurwitz numbers from the cut-and-join equation.

use std::collections::BTreeMap;

use dashmap::DashMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::HurwitzError;
use crate::algebra::Rational;
use crate::cache::{format_key, parse_key, CacheWarning};

/// Canonical key: parts of `mu` sorted descending, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HurwitzKey {
    pub g: u32,
    pub mu: Vec<u32>,
}

impl HurwitzKey {
    pub fn new(g: u32, mu: &[u32]) -> Result<Self, HurwitzError> {
        if mu.is_empty() {
            return Err(HurwitzError::InvalidProfile("n must be at least 1".into()));
        }
        if mu.contains(&0) {
            return Err(HurwitzError::InvalidProfile("pole orders must be positive".into()));
        }
        let mut mu = mu.to_vec();
        mu.sort_unstable_by(|a, b| b.cmp(a));
        Ok(HurwitzKey { g, mu })
    }

    /// Number of simple ramification points, `2g − 2 + n + |μ|`.
    pub fn branch_points(&self) -> u32 {
        2 * self.g + self.mu.len() as u32 + self.mu.iter().sum::<u32>() - 2
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `|Aut μ| = ∏ (multiplicity)!`.
pub fn automorphisms(mu: &[u32]) -> BigInt {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    for &m in mu {
        *counts.entry(m).or_default() += 1;
    }
    counts.values().map(|&c| factorial(c)).product()
}

#[derive(Default)]
pub struct HurwitzTable {
    memo: DashMap<HurwitzKey, Rational>,
}

impl HurwitzTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn number(&self, g: u32, mu: &[u32]) -> Result<Rational, HurwitzError> {
        let key = HurwitzKey::new(g, mu)?;
        Ok(self.sorted(key.g, &key.mu))
    }

    /// `h_{g,μ} = r!/|Aut μ| · H_{g,n}(μ)`.
    pub fn labeled(&self, g: u32, mu: &[u32]) -> Result<Rational, HurwitzError> {
        let key = HurwitzKey::new(g, mu)?;
        let h = self.sorted(key.g, &key.mu);
        let r = key.branch_points();
        Ok(h * Rational::new(factorial(r), automorphisms(&key.mu)).expect("nonzero"))
    }

    fn lookup(&self, g: i64, mut mu: Vec<u32>) -> Rational {
        if g < 0 {
            return Rational::zero();
        }
        mu.sort_unstable_by(|a, b| b.cmp(a));
        self.sorted(g as u32, &mu)
    }

    fn sorted(&self, g: u32, mu: &[u32]) -> Rational {
        if g == 0 && mu == [1] {
            return Rational::one();
        }
        let key = HurwitzKey { g, mu: mu.to_vec() };
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let r = key.branch_points();
        let value = self.recurse(g, mu) / Rational::from(r);
        self.memo.insert(key, value.clone());
        value
    }

    fn recurse(&self, g: u32, mu: &[u32]) -> Rational {
        let n = mu.len();
        let g = g as i64;
        let mut total = Rational::zero();
        // Join over unordered pairs.
        for i in 0..n {
            for j in i + 1..n {
                let mut next = vec![mu[i] + mu[j]];
                next.extend((0..n).filter(|&k| k != i && k != j).map(|k| mu[k]));
                total += Rational::from(mu[i] + mu[j]) * self.lookup(g, next);
            }
        }
        // Cut: each part splits as α + β.
        for i in 0..n {
            let others: Vec<u32> = (0..n).filter(|&k| k != i).map(|k| mu[k]).collect();
            let mut inner = Rational::zero();
            for alpha in 1..mu[i] {
                let beta = mu[i] - alpha;
                let weight = Rational::from(alpha * beta);
                let mut bracket = {
                    let mut next = vec![alpha, beta];
                    next.extend_from_slice(&others);
                    self.lookup(g - 1, next)
                };
                for mask in 0u32..(1 << others.len()) {
                    let (mut left, mut right) = (vec![alpha], vec![beta]);
                    for (k, &v) in others.iter().enumerate() {
                        if mask & (1 << k) != 0 {
                            left.push(v);
                        } else {
                            right.push(v);
                        }
                    }
                    for g1 in 0..=g {
                        let a = self.lookup(g1, left.clone());
                        if a.is_zero() {
                            continue;
                        }
                        bracket += a * self.lookup(g - g1, right.clone());
                    }
                }
                inner += weight * bracket;
            }
            total += inner * Rational::frac(1, 2);
        }
        total
    }

    /// Cache snapshot: `"g,n,μ"` mapped to `"p/q"`.
    pub fn export(&self) -> BTreeMap<String, String> {
        self.memo.iter().map(|e| (format_key(e.key().g, &e.key().mu), e.value().to_string())).collect()
    }

    pub fn import(&self, entries: &BTreeMap<String, String>) -> Vec<CacheWarning> {
        let mut warnings = Vec::new();
        for (k, v) in entries {
            let Some((g, mu)) = parse_key(k) else {
                warnings.push(CacheWarning::new(k, "malformed key"));
                continue;
            };
            let Ok(key) = HurwitzKey::new(g, &mu) else {
                warnings.push(CacheWarning::new(k, "invalid profile"));
                continue;
            };
            match v.parse::<Rational>() {
                Ok(x) if !x.is_negative() => {
                    self.memo.insert(key, x);
                }
                _ => warnings.push(CacheWarning::new(k, "value is not a non-negative rational")),
            }
        }
        warnings
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unstable_values() {
        let t = HurwitzTable::new();
        // d^{d−2}/d!
        assert_eq!(t.number(0, &[3]).unwrap(), Rational::frac(1, 2));
        assert_eq!(t.number(0, &[4]).unwrap(), Rational::frac(16, 24));
        assert_eq!(t.number(0, &[1, 1]).unwrap(), Rational::frac(1, 2));
        assert_eq!(t.number(1, &[1]).unwrap(), Rational::zero());
        assert_eq!(t.number(1, &[2]).unwrap(), Rational::frac(1, 12));
    }

    #[test]
    fn labeled_counts() {
        let t = HurwitzTable::new();
        assert_eq!(t.labeled(1, &[2]).unwrap(), Rational::frac(1, 2));
        assert_eq!(t.labeled(0, &[1]).unwrap(), Rational::one());
        assert_eq!(t.labeled(0, &[1, 1, 1]).unwrap(), Rational::from(4));
    }

    #[test]
    fn invalid_keys() {
        let t = HurwitzTable::new();
        assert!(t.number(0, &[]).is_err());
        assert!(t.number(0, &[0, 1]).is_err());
    }
}
