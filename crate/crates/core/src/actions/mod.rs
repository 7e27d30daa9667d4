//! Mutual action systems of two groups and their compatibility regimes.

mod compat;
mod io;
mod system;

pub use compat::{
    check_compatibility, check_condition, check_full_compatibility, check_half_compatibility,
    classify, condition_holds, evaluate, verify_fact, CompatReport, ConditionId, Regime, Witness,
};
pub use io::{ActionFile, ActionSpec};
pub use system::{
    action_from_hom, commutator_word, conjugation_action, is_conjugation, trivial_action,
    ActionSystem, ActionTable, Elem, Letter, Side,
};
