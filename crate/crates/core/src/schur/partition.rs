//! Integer partitions and the statistics attached to them.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;

/// Weakly decreasing positive parts; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(m)`.
    pub fn row(m: u32) -> Self {
        Partition::new(vec![m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.0.iter().filter(|&&p| p == part).count() as u32
    }

    /// Union of parts.
    pub fn merge(&self, other: &Partition) -> Partition {
        Partition::new(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Removes one copy of `part`, if present.
    pub fn without(&self, part: u32) -> Option<Partition> {
        let pos = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// `z_λ = ∏ m_i! i^{m_i}`.
    pub fn z(&self) -> BigInt {
        let mut out = BigInt::from(1);
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let m = self.multiplicity(p);
            for k in 1..=m {
                out *= BigInt::from(k) * BigInt::from(p);
            }
            i += m as usize;
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let top = self.0.first().copied().unwrap_or(0);
        Partition((1..=top).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// `Σ (j − i)` over boxes `(i, j)`.
    pub fn content_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| (0..p as i64).map(|j| j - i as i64).sum::<i64>())
            .sum()
    }

    /// `|μ|! / ∏ hook lengths`.
    pub fn dimension(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::from(1);
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p as usize {
                let arm = p as usize - j - 1;
                let leg = conj.0[j] as usize - i - 1;
                hooks *= BigInt::from(arm + leg + 1);
            }
        }
        let fact: BigInt = (1..=self.size()).map(BigInt::from).product();
        fact / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// `p_r[μ] = Σ_i [(μ_i − i + ½)^r − (−i + ½)^r]`.
pub fn shifted_power_sum(r: u32, mu: &Partition) -> Rational {
    let half = Rational::frac(1, 2);
    mu.parts()
        .iter()
        .enumerate()
        .map(|(idx, &m)| {
            let i = Rational::from(idx as i64 + 1);
            let shifted = Rational::from(m) - &i + &half;
            let base = &half - &i;
            shifted.pow(r as i32) - base.pow(r as i32)
        })
        .sum()
}
