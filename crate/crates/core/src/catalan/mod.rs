//! Generalized Catalan numbers, their free energies and the Catalan quantum curve.

mod count;
mod curve;
mod free_energy;
mod s_coeff;

use std::sync::Arc;

use dashmap::DashMap;
use thiserror::Error;

use crate::algebra::AlgebraError;

pub use count::{CatalanKey, CatalanTable};
pub use curve::{curve_inversion_check, curve_inversion_check_with, dx_in_t, t_to_z, x_of_t, InversionReport};
pub use free_energy::FreeEnergyC;
pub use s_coeff::{s_polynomial, s_sequence_recursive, schrodinger_residual_from, SCatalan};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalanError {
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("(g,n) = ({g},{n}) is unstable: need 2g-2+n > 0")]
    Unstable { g: u32, n: u32 },
    #[error("(g,n) = ({g},{n}) exceeds the configured bound 2g-2+n <= {bound}")]
    BeyondBound { g: u32, n: u32, bound: u32 },
    #[error("F^C_{{{g},{n}}} came out asymmetric")]
    AsymmetricResult { g: u32, n: u32 },
    #[error("S_{0} is stored only through its derivative")]
    NoClosedForm(u32),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Default bound on `2g−2+n` for free energies; enough for `S_4`.
pub const DEFAULT_EULER_BOUND: u32 = 3;

/// Counts and free energies with shared memo tables.
pub struct CatalanModel {
    counts: CatalanTable,
    free: DashMap<(u32, u32), Arc<FreeEnergyC>>,
    bound: u32,
}

impl Default for CatalanModel {
    fn default() -> Self {
        Self::new()
    }
}

impl CatalanModel {
    pub fn new() -> Self {
        Self::with_bound(DEFAULT_EULER_BOUND)
    }

    /// `bound = 4` additionally admits `(0,6)`, `(1,4)` and `(2,2)`.
    pub fn with_bound(bound: u32) -> Self {
        CatalanModel { counts: CatalanTable::new(), free: DashMap::new(), bound }
    }

    pub fn counts(&self) -> &CatalanTable {
        &self.counts
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn free_energy(&self, g: u32, n: u32) -> Result<Arc<FreeEnergyC>, CatalanError> {
        if n == 0 || 2 * g + n <= 2 {
            return Err(CatalanError::Unstable { g, n });
        }
        if 2 * g + n - 2 > self.bound {
            return Err(CatalanError::BeyondBound { g, n, bound: self.bound });
        }
        if let Some(f) = self.free.get(&(g, n)) {
            return Ok(f.clone());
        }
        let f = Arc::new(self.compute_free_energy(g, n)?);
        self.free.insert((g, n), f.clone());
        Ok(f)
    }

    /// All stable `(g,n)` with `2g−2+n = chi`.
    pub fn topologies(chi: u32) -> Vec<(u32, u32)> {
        crate::stable_topologies(chi)
    }
}
