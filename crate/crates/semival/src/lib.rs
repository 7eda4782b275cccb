//! Value semigroups of one-variable curve algebras over exact fields.
//!
//! Given series `f_1, ..., f_s` in `K[[x]]` (or polynomials in `K[x]`), the
//! crate computes the monoid of orders (or degrees) of the algebra they
//! generate, a basis whose values generate that monoid, and the flat
//! deformation of the curve onto its monomial curve. Two-generator algebras
//! are also handled through resultants and approximate roots.
//!
//! Coefficients are exact rationals or residues modulo a prime.

pub mod basis;
pub mod coeff;
pub mod deform;
pub mod error;
pub mod global_basis;
pub mod local_basis;
pub mod mpoly;
pub mod numsgp;
pub mod parse;
pub mod plane;
pub mod poly;
pub mod report;
pub mod resultant;
pub mod series;

pub use basis::{Basis, ReduceMode, Setting, TieBreak};
pub use coeff::{Coeff, Field};
pub use error::{Error, Result};
pub use mpoly::{BiPoly, MPoly};
pub use numsgp::{NumSgp, Presentation};
pub use poly::Poly;
