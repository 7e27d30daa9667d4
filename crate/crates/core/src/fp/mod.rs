//! Finitely presented groups and coset enumeration.

mod enumerate;
mod group;
mod presentation;

pub use enumerate::{todd_coxeter, CosetTable, EnumLimits, EnumStats};
pub use group::{coset_group, subgroup_of_coset_group, EnumeratedGroup, WordEvaluator};
pub use presentation::{free_reduce, invert_word, Gen, Presentation, Word};
