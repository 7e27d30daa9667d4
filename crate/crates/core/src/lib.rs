pub mod error;
pub mod actions;
pub mod catalog;
pub mod derived;
pub mod fp;
pub mod group;
pub mod sweep;
pub mod tensor;

pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupHom, Subgroup};
