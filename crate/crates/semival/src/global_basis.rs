//! Bases of polynomial subalgebras, valued by degree.

use crate::basis::{
    check_monic, compute_basis, minimize, reduce_tails, reduce_with, Basis, Limits, ReduceMode,
    ReductionOutcome, Setting, TieBreak,
};
use crate::error::Result;
use crate::poly::Poly;

pub type GlobalBasis = Basis;

/// Degree reduction of `f` against elements with leading coefficient 1.
/// Degrees strictly drop, so the expression is always complete.
pub fn reduce_degree(f: &Poly, basis: &[Poly], mode: ReduceMode) -> Result<ReductionOutcome> {
    check_monic(Setting::Global, basis)?;
    reduce_with(Setting::Global, f, basis, mode, TieBreak::LexSmallest, 0)
}

/// Basis of `K[gens]` with the default limits.
pub fn global_basis(gens: &[Poly]) -> Result<GlobalBasis> {
    global_basis_with_limits(gens, Limits::default_for(gens, Setting::Global))
}

pub fn global_basis_with_limits(gens: &[Poly], limits: Limits) -> Result<GlobalBasis> {
    compute_basis(Setting::Global, gens, limits)
}

/// Same elements with every non-leading term in a gap of the semigroup.
pub fn reduced_global_basis(b: &GlobalBasis) -> Result<GlobalBasis> {
    reduce_tails(b)
}

pub fn minimal_global_basis(b: &GlobalBasis) -> Result<GlobalBasis> {
    minimize(b)
}
