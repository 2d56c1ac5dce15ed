//! Exact dimensions of irreducible representations of SU(N).
//!
//! Three independent routes are provided and cross-checked:
//!
//! * the cubic Eisenstein-lattice function `N(a, b) = Im((a + bω)³) / (3√3) = ab(a − b)/2`,
//!   which gives SU(3) dimensions directly and SU(N) dimensions once the
//!   representation is reduced to its SU(3) content ([`dimensions::dim_via_eisenstein`],
//!   [`dimensions::dim_nested_literal`]);
//! * Weyl's SU(N) → SU(N−1) branching rule, chained down to SU(3) ([`branching`]);
//! * the Weyl product formula ([`irrep::weyl_dim`]), used as the reference.
//!
//! Labels use the shifted convention `Pᵢ = aᵢ + 1 ≥ 1`, where `aᵢ` are Dynkin labels.
//! All arithmetic on dimensions, multiplicities and lattice values is arbitrary precision;
//! irrational factors such as `√3/2` are never materialised.

pub mod branching;
pub mod dimensions;
pub mod eisenstein;
mod error;
pub mod irrep;

pub use branching::{
    branch_step, chain_multiplicity_mass, su3_content, summation_count, summation_indices_counted,
    BranchCache, BranchMultiset,
};
pub use dimensions::{
    dim_nested_literal, dim_via_eisenstein, labels_up_to, verify, verify_sweep, LiteralSum,
    VerificationReport, DEFAULT_TERM_CAP,
};
pub use eisenstein::{harmonic_defect, lattice_number, lattice_number_via_cube, EisensteinInt};
pub use error::{Error, Result};
pub use irrep::{label_to_eisenstein, su2_dim, su3_dim, weyl_dim, Dimension, IrrepLabel};
