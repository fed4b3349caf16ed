//! Simple Hurwitz numbers, ELSV coefficients, free energies and the Lambert curve.

mod elsv;
mod free_energy;
mod numbers;
pub mod qhbar;
mod s_coeff;
mod xi;

use std::sync::Arc;

use dashmap::DashMap;
use thiserror::Error;

use crate::algebra::AlgebraError;

pub use elsv::{distinct_permutations, ElsvEntry, ElsvTable};
pub use free_energy::{assemble, FreeEnergyH};
pub use numbers::{automorphisms, HurwitzKey, HurwitzTable};
pub use qhbar::{
    apply_p, apply_q, pq_commutator_check, zhou_series, zhou_series_checks, zhou_series_checks_with, CommutatorRecord,
    QCoefficients, QHbarExpr, ZhouReport,
};
pub use s_coeff::{big_d, heat_residual_from, s0_identity, s_sequence_recursive, seed, t_to_z, SHurwitz};
pub use xi::{
    compose_with_t, euler_factor, lambert_inversion_check, t_series, x_dx, xi_polynomial, xi_series,
    xi_series_consistency, xi_table, LambertReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("(g,n) = ({g},{n}) is unstable: need 2g-2+n > 0")]
    Unstable { g: u32, n: u32 },
    #[error("(g,n) = ({g},{n}) exceeds the configured bound 2g-2+n <= {bound}")]
    BeyondBound { g: u32, n: u32, bound: u32 },
    #[error("ELSV fit for ({g},{n}) disagrees with H at mu = {mu:?}")]
    OverdeterminedMismatch { g: u32, n: u32, mu: Vec<u32> },
    #[error("S_{0} differs between the assembled and recursive paths")]
    PathMismatch(u32),
    #[error("{0}")]
    PropertyViolation(String),
    #[error("S_{0} is stored only through its derivative")]
    NoClosedForm(u32),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub use crate::catalan::DEFAULT_EULER_BOUND;

/// Hurwitz numbers, ELSV tables and free energies with shared memo tables.
pub struct HurwitzModel {
    numbers: HurwitzTable,
    elsv: DashMap<(u32, u32), Arc<ElsvTable>>,
    free: DashMap<(u32, u32), Arc<FreeEnergyH>>,
    bound: u32,
}

impl Default for HurwitzModel {
    fn default() -> Self {
        Self::new()
    }
}

impl HurwitzModel {
    pub fn new() -> Self {
        Self::with_bound(DEFAULT_EULER_BOUND)
    }

    pub fn with_bound(bound: u32) -> Self {
        HurwitzModel { numbers: HurwitzTable::new(), elsv: DashMap::new(), free: DashMap::new(), bound }
    }

    pub fn numbers(&self) -> &HurwitzTable {
        &self.numbers
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    fn check_range(&self, g: u32, n: u32) -> Result<(), HurwitzError> {
        if n == 0 || 2 * g + n <= 2 {
            return Err(HurwitzError::Unstable { g, n });
        }
        if 2 * g + n - 2 > self.bound {
            return Err(HurwitzError::BeyondBound { g, n, bound: self.bound });
        }
        Ok(())
    }

    pub fn elsv_coefficients(&self, g: u32, n: u32) -> Result<Arc<ElsvTable>, HurwitzError> {
        self.check_range(g, n)?;
        if let Some(t) = self.elsv.get(&(g, n)) {
            return Ok(t.clone());
        }
        let t = Arc::new(self.compute_elsv(g, n)?);
        self.elsv.insert((g, n), t.clone());
        Ok(t)
    }

    pub fn free_energy(&self, g: u32, n: u32) -> Result<Arc<FreeEnergyH>, HurwitzError> {
        self.check_range(g, n)?;
        if let Some(f) = self.free.get(&(g, n)) {
            return Ok(f.clone());
        }
        let f = Arc::new(assemble(self.elsv_coefficients(g, n)?.as_ref()));
        self.free.insert((g, n), f.clone());
        Ok(f)
    }
}
