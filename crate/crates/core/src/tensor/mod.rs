//! Box, Brown-Loday and Inassaridze tensor products and the free-product quotient.

mod compute;
mod construction;
mod presentations;

pub use compute::{
    check_relations, commutator_subgroup, compute_tensor, eta_group, induced_automorphism,
    CommutatorSubgroup, Route, TensorActions, TensorFile, TensorKind, TensorResult, TensorSpec,
    TensorStats,
};
pub use construction::{semidirect_reconstruction, verify_free_product_construction, FreeProductReport};
pub use presentations::{
    box_tensor_presentation, eta_presentation, eta_presentation_reduced, inassaridze_presentation, pair_gen, EtaLayout,
};
