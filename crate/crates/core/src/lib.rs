//! Bounds on minimum-entropy couplings and functional representations.
//!
//! Given conditionals `P_{X|Y=y}` (a [`MarginalFamily`]), any variable `Z`
//! independent of `Y` with `X = g(Y, Z)` must carry at least as much
//! information above every level `t` as the worst conditional does. This
//! crate turns that spectrum constraint into entropy lower bounds and puts
//! them next to the classical ones:
//!
//! | bound | function |
//! |-------|----------|
//! | entropy of the greedy spectrum-maximal `Q*` | [`qstar_bound`] |
//! | spectrum integral `K_alpha` | [`k_alpha`] |
//! | entropy of the majorization meet | [`meet_bound`] |
//! | largest conditional entropy | [`sup_conditional_entropy`] |
//! | greedy coupling (upper bound) | [`greedy_coupling`] + [`coupling_entropy`] |
//!
//! ```
//! use mec_core::{catalog, compare_bounds};
//!
//! let family = catalog::example1_family();
//! let report = compare_bounds(&family, 1.0, true).unwrap();
//! assert!(report.qstar_bound >= report.k_alpha_bound);
//! assert!(report.greedy_upper.unwrap() >= report.qstar_bound);
//! ```

pub mod bounds;
pub mod catalog;
pub mod coupling;
pub mod dist;
pub mod error;
pub mod majorization;
pub mod spectrum;

pub use bounds::{compare_bounds, qstar_bound, qstar_greedy, BoundsReport};
pub use coupling::{
    brute_force_min_entropy, coupling_entropy, greedy_coupling, to_functional_representation,
    verify_representation, Coupling, FunctionalRepresentation, RepresentationReport,
};
pub use dist::{
    conditionals_from_joint, renyi_entropy_of, sup_conditional_entropy, Atom, JointPmf,
    MarginalFamily, Pmf, EPS,
};
pub use error::{Error, Result};
pub use majorization::{majorization_meet, majorizes, meet_bound};
pub use spectrum::{
    cdf_envelope, info_spectrum, k_alpha, old_spectrum_lower_bound,
    old_spectrum_lower_bound_with_base, spectrum_dominates, survival_envelope, Piece, StepCdf,
    Survival,
};
