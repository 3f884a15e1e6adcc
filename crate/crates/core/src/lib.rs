//! Finite-dimensional semigroup-graded algebras over prime fields, and two
//! independent ways of deciding whether they are simple:
//!
//! * structural criteria ([`criterion`], [`partial`]): graded simplicity plus
//!   a field test on the center of a corner subring, for gradings by
//!   semigroups that are cancellative at an idempotent whose local group is
//!   hypercentral;
//! * brute force ([`algebras::Algebra::is_simple`]): every nonzero element
//!   must generate the whole algebra as a two-sided ideal.
//!
//! Running both on the same instance turns each characterization into a
//! falsifiable check. The [`runner`] module drives these checks over
//! instance files, the built-in [`catalog`] and generated [`corpus`] data.

pub mod algebras;
pub mod catalog;
pub mod corpus;
pub mod criterion;
pub mod error;
pub mod fflinalg;
pub mod gradings;
pub mod groups;
pub mod instance;
pub mod partial;
pub mod runner;
pub mod semigroups;

pub use algebras::{Algebra, Ideal, SubAlgebra};
pub use error::{Error, ErrorClass, Result};
pub use fflinalg::{Field, Subspace};
pub use gradings::GradedAlgebra;
pub use groups::GroupTable;
pub use instance::InstanceDocument;
pub use partial::PartialAction;
pub use semigroups::{GroupoidTable, SemigroupTable};

/// Limits on exhaustive enumeration. Exceeding a limit is an error, never a
/// partial answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of elements any single enumeration may visit.
    pub enumeration: u64,
    /// Up to this many lines, simplicity is decided by enumerating every
    /// line of the algebra; above it, by the irreducibility certificate.
    pub exhaustive_simplicity: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            enumeration: 1 << 20,
            exhaustive_simplicity: 1 << 15,
        }
    }
}

impl Budget {
    pub fn with_enumeration(enumeration: u64) -> Self {
        Budget {
            enumeration,
            ..Budget::default()
        }
    }
}
