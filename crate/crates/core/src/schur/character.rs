//! Irreducible characters of symmetric groups by Murnaghan–Nakayama.

use dashmap::DashMap;
use num_bigint::BigInt;

use super::{Partition, SchurError};

/// Memoized `χ_μ(λ)`.
#[derive(Default)]
pub struct CharacterTable {
    memo: DashMap<(Partition, Partition), BigInt>,
}

/// Beta set `{μ_i + ℓ − i}` for `ℓ = len(μ)`.
fn beta_set(mu: &Partition) -> Vec<u32> {
    let l = mu.len() as u32;
    mu.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i as u32).collect()
}

fn from_beta(beta: &[u32]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|a, c| c.cmp(a));
    let l = b.len() as u32;
    Partition::new(b.iter().enumerate().map(|(i, &x)| x + 1 + i as u32 - l).collect())
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn character(&self, mu: &Partition, lambda: &Partition) -> Result<BigInt, SchurError> {
        if mu.size() != lambda.size() {
            return Err(SchurError::SizeMismatch { mu: mu.clone(), lambda: lambda.clone() });
        }
        Ok(self.mn(mu, lambda))
    }

    fn mn(&self, mu: &Partition, lambda: &Partition) -> BigInt {
        if lambda.is_empty() {
            return BigInt::from(1);
        }
        let key = (mu.clone(), lambda.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let k = lambda.parts()[0];
        let rest = Partition::new(lambda.parts()[1..].to_vec());
        let beta = beta_set(mu);
        let mut total = BigInt::from(0);
        // Each rim hook of length k moves one bead from b to b − k.
        for (idx, &b) in beta.iter().enumerate() {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let between = beta.iter().filter(|&&c| c > b - k && c < b).count();
            let mut next = beta.clone();
            next[idx] = b - k;
            let term = self.mn(&from_beta(&next), &rest);
            if between % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}
