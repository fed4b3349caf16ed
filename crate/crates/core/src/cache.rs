//! Shared helpers for persistent memo snapshots.

use serde::{Deserialize, Serialize};

/// An entry rejected while loading a snapshot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheWarning {
    pub key: String,
    pub reason: String,
}

impl CacheWarning {
    pub fn new(key: &str, reason: &str) -> Self {
        CacheWarning { key: key.to_string(), reason: reason.to_string() }
    }
}

impl std::fmt::Display for CacheWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "corrupt cache entry {:?}: {}", self.key, self.reason)
    }
}

/// `"g,n,μ_1,…,μ_n"`.
pub fn format_key(g: u32, mu: &[u32]) -> String {
    let mut parts = vec![g.to_string(), mu.len().to_string()];
    parts.extend(mu.iter().map(u32::to_string));
    parts.join(",")
}

pub fn parse_key(key: &str) -> Option<(u32, Vec<u32>)> {
    let nums: Vec<u32> = key.split(',').map(|s| s.trim().parse().ok()).collect::<Option<_>>()?;
    let (&g, rest) = nums.split_first()?;
    let (&n, mu) = rest.split_first()?;
    (n as usize == mu.len() && n > 0).then(|| (g, mu.to_vec()))
}
