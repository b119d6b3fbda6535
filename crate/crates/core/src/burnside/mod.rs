//! Burnside rings of the permutation groups attached to singular cubic
//! surfaces, and the relation checks carried out in them.

pub mod cases;
pub mod formal;
pub mod group;
pub mod gset;

pub use cases::{SingularCase, SingularType};
pub use group::FiniteGroup;
pub use gset::{match_classes, GSet, GradedBurn, TypeNames, VirtualGSet};
