//! Predicates, approximations and constructions on top of a [`Catalog`].
//!
//! [`Catalog`]: crate::catalog::Catalog

pub mod approximations;
pub mod bijection;
pub mod constructions;
pub mod predicates;
pub mod report;

pub use approximations::{cover, precover, Approximation};
pub use bijection::{bijection_report, BijectionReport, BijectionRow};
pub use constructions::{
    module_from_class, precover_sequence, verify_add_closure_identity, verify_cogen_two_of_three,
    verify_image_cogenerator, verify_sequence_cancellation, PrecoverSequence, ShortSequence,
};
pub use predicates::{
    copres_membership, is_costar, is_cotilting, is_ext_injective_in_cogen, is_faithful,
    is_quasi_cotilting, is_relative_cotilting,
};
pub use report::{CrossCheck, PredicateReport, Relation};
