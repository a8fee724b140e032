//! Exact computation on finite topological spaces: closure-type operators,
//! SC*-closed and related generalized classes, separation axioms, function
//! properties, and exhaustive theorem sweeps over all small spaces.
//!
//! Subsets are bitsets over at most 16 points; every quantified notion is
//! decided by direct evaluation over the finite families involved.

pub mod cli;
pub mod error;
pub mod family;
pub mod fixtures;
pub mod gen_sets;
pub mod lab;
pub mod maps;
pub mod operators;
pub mod profile;
pub mod separation;
pub mod space;
pub mod subset;
pub mod tags;

pub use error::{Error, Result};
pub use family::Family;
pub use maps::{FiniteMap, MapDoc, MapRef, PropertyVector};
pub use profile::SpaceProfile;
pub use separation::{classify_space, AxiomVector};
pub use space::{Space, SpaceDoc};
pub use subset::Subset;
pub use tags::{AltAxiomTag, AxiomTag, GenClassTag, KernelClassTag, MapPropertyTag, VariantTag};
