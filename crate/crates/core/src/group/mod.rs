//! Finite groups as multiplication tables, with subgroups, quotients, products,
//! homomorphisms and isomorphism testing.

pub mod construct;
mod finite;
mod fingerprint;
mod hom;
mod io;
mod iso;
mod subgroup;

pub use finite::FiniteGroup;
pub use fingerprint::{abelian_invariants, fingerprint, IsoFingerprint};
pub use hom::{
    coset_representatives, direct_product, extend_hom, quotient, semidirect_product, GroupHom,
};
pub use io::GroupFile;
pub use iso::{
    automorphism_group, enumerate_homs, is_isomorphic, AUT_ORDER_LIMIT, HOM_ORDER_LIMIT,
    ISO_ORDER_LIMIT,
};
pub use subgroup::{
    center, derived_subgroup, is_cyclic_subgroup, normal_closure, subgroup_generated, Subgroup,
};

pub(crate) use hom::check_action;
pub(crate) use iso::{automorphisms, composition_group, homs_unbounded};
