//! Subgroups attached to an action system, identities of the box tensor, the crossed
//! module structure, comp subgroups and homology.

mod comp;
mod crossed;
mod homology;
mod identities;
mod subgroups;

pub use comp::{comp_subgroups, compatible_side, verify_quotient_map, CompSubgroups, QuotientMapReport};
pub use crossed::{crossed_module_phi, AxiomCheck, CrossedModule, CrossedModuleReport};
pub use homology::{homology, Homology, HomologyReport};
pub use identities::{verify_expansion_identities, verify_tensor_identities, FamilyCheck, IdentityReport};
pub use subgroups::{
    check_cyclic_derivative_abelian, derivative, deviational, g_center, verify_deviation_bounds,
    CyclicDerivativeReport, DeviationReport, DeviationSide,
};
