//! Exact computation and verification engine for the Catalan and Hurwitz quantum curves.

pub mod algebra;
pub mod cache;
pub mod catalan;
pub mod hurwitz;
pub mod report;
pub mod schur;
pub mod wkb;

pub use algebra::{AlgebraError, Poly, Rational, RationalFunction, SparseLaurent, Var};

/// All stable `(g,n)` with `2g−2+n = chi`.
pub fn stable_topologies(chi: u32) -> Vec<(u32, u32)> {
    (0..=(chi + 2) / 2).filter_map(|g| (chi + 2).checked_sub(2 * g).filter(|&n| n >= 1).map(|n| (g, n))).collect()
}
