//! Generalized Catalan numbers by edge shrinking.

use std::collections::BTreeMap;

use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::CatalanError;
use crate::algebra::Rational;
use crate::cache::{parse_key, format_key, CacheWarning};

/// Canonical table key: `mu` sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CatalanKey {
    pub g: u32,
    pub mu: Vec<u32>,
}

impl CatalanKey {
    pub fn new(g: u32, mu: &[u32]) -> Result<Self, CatalanError> {
        if mu.is_empty() {
            return Err(CatalanError::InvalidProfile("n must be at least 1".into()));
        }
        let mut mu = mu.to_vec();
        mu.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CatalanKey { g, mu })
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }
}

/// Memoized `C_{g,n}(μ)`; safe to share between threads.
#[derive(Default)]
pub struct CatalanTable {
    memo: DashMap<CatalanKey, BigInt>,
}

impl CatalanTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self, g: u32, mu: &[u32]) -> Result<BigInt, CatalanError> {
        let key = CatalanKey::new(g, mu)?;
        Ok(self.count_sorted(key.g, &key.mu))
    }

    /// `D_{g,n}(μ) = C_{g,n}(μ) / ∏ μ_i`.
    pub fn dessin_number(&self, g: u32, mu: &[u32]) -> Result<Rational, CatalanError> {
        if mu.contains(&0) {
            return Err(CatalanError::InvalidProfile("dessin numbers need every μ_i ≥ 1".into()));
        }
        let c = self.count(g, mu)?;
        let prod: BigInt = mu.iter().map(|&m| BigInt::from(m)).product();
        Ok(Rational::new(c, prod).expect("positive product"))
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    fn count_sorted(&self, g: u32, mu: &[u32]) -> BigInt {
        if g == 0 && mu == [0] {
            return BigInt::one();
        }
        if mu.contains(&0) || mu.iter().sum::<u32>() % 2 == 1 {
            return BigInt::zero();
        }
        let key = CatalanKey { g, mu: mu.to_vec() };
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let value = self.recurse(g, mu);
        self.memo.insert(key, value.clone());
        value
    }

    fn lookup(&self, g: u32, mut mu: Vec<u32>) -> BigInt {
        mu.sort_unstable_by(|a, b| b.cmp(a));
        self.count_sorted(g, &mu)
    }

    fn recurse(&self, g: u32, mu: &[u32]) -> BigInt {
        let m1 = mu[0];
        let rest = &mu[1..];
        let mut total = BigInt::zero();

        for (j, &mj) in rest.iter().enumerate() {
            let mut next = Vec::with_capacity(rest.len());
            next.push(m1 + mj - 2);
            next.extend(rest.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &v)| v));
            total += BigInt::from(mj) * self.lookup(g, next);
        }

        if m1 < 2 {
            return total;
        }
        let subsets = 1u32 << rest.len();
        for alpha in 0..=m1 - 2 {
            let beta = m1 - 2 - alpha;
            if g >= 1 {
                let mut next = vec![alpha, beta];
                next.extend_from_slice(rest);
                total += self.lookup(g - 1, next);
            }
            for mask in 0..subsets {
                let (mut left, mut right) = (vec![alpha], vec![beta]);
                for (k, &v) in rest.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        left.push(v);
                    } else {
                        right.push(v);
                    }
                }
                if left.iter().sum::<u32>() % 2 == 1 {
                    continue;
                }
                for g1 in 0..=g {
                    let a = self.lookup(g1, left.clone());
                    if a.is_zero() {
                        continue;
                    }
                    total += a * self.lookup(g - g1, right.clone());
                }
            }
        }
        total
    }

    /// Cache snapshot: `"g,n,μ_1,…,μ_n"` mapped to decimal integer strings.
    pub fn export(&self) -> BTreeMap<String, String> {
        self.memo
            .iter()
            .map(|e| (format_key(e.key().g, &e.key().mu), e.value().to_string()))
            .collect()
    }

    /// Load a snapshot, skipping entries that fail validation.
    pub fn import(&self, entries: &BTreeMap<String, String>) -> Vec<CacheWarning> {
        let mut warnings = Vec::new();
        for (k, v) in entries {
            let Some((g, mu)) = parse_key(k) else {
                warnings.push(CacheWarning::new(k, "malformed key"));
                continue;
            };
            if mu.contains(&0) {
                warnings.push(CacheWarning::new(k, "zero part in key"));
                continue;
            }
            let value: BigInt = match v.parse() {
                Ok(x) => x,
                Err(_) => {
                    warnings.push(CacheWarning::new(k, "value is not a non-negative integer"));
                    continue;
                }
            };
            if value.is_negative() {
                warnings.push(CacheWarning::new(k, "value is not a non-negative integer"));
                continue;
            }
            if mu.iter().sum::<u32>() % 2 == 1 && !value.is_zero() {
                warnings.push(CacheWarning::new(k, "nonzero count for odd total degree"));
                continue;
            }
            let key = CatalanKey::new(g, &mu).expect("nonempty");
            self.memo.insert(key, value);
        }
        warnings
    }
}
