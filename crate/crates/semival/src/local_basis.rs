//! Bases of subalgebras of formal power series, valued by order.

use crate::basis::{
    check_monic, compute_basis, fallback_bound, minimize, reduce_tails, reduce_with, Basis,
    Limits, ReduceMode, ReductionOutcome, Setting, TieBreak,
};
use crate::error::Result;
use crate::numsgp::NumSgp;
use crate::poly::Poly;

pub type LocalBasis = Basis;

/// Order reduction of `f` against monic elements.
///
/// In [`ReduceMode::Algorithmic`] with a numerical value monoid, anything of
/// order at least the conductor reduces to zero.
pub fn reduce_order(f: &Poly, basis: &[Poly], mode: ReduceMode) -> Result<ReductionOutcome> {
    check_monic(Setting::Local, basis)?;
    let values: Vec<usize> = basis.iter().filter_map(|p| p.order()).collect();
    let sg = NumSgp::from_generators(&values)?;
    let limit = fallback_bound(basis, &sg);
    reduce_with(Setting::Local, f, basis, mode, TieBreak::LexSmallest, limit)
}

/// Basis of `K[[gens]]` with the default limits.
pub fn local_basis(gens: &[Poly]) -> Result<LocalBasis> {
    local_basis_with_limits(gens, Limits::default_for(gens, Setting::Local))
}

pub fn local_basis_with_limits(gens: &[Poly], limits: Limits) -> Result<LocalBasis> {
    compute_basis(Setting::Local, gens, limits)
}

/// Same elements with every tail supported on gaps of the semigroup.
pub fn reduced_basis(b: &LocalBasis) -> Result<LocalBasis> {
    reduce_tails(b)
}

/// The minimal reduced basis.
pub fn minimal_basis(b: &LocalBasis) -> Result<LocalBasis> {
    minimize(b)
}
