//! Exact representation theory of finite-dimensional quiver algebras.
//!
//! The crate decides costar, quasi-cotilting, cotilting and faithfulness of
//! finite-dimensional modules, builds precovers and right-minimal covers
//! with respect to torsion-free classes, and enumerates the lattice of
//! torsion-free classes of a representation-finite algebra. Everything is
//! computed with exact arithmetic over the rationals or a prime field.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! threaded drivers live in the `cotilt` companion crate.
//!
//! Layering, bottom up:
//!
//! * [`field`], [`matrix`]: exact scalars and dense linear algebra.
//! * [`quiver`], [`algebra`]: presentations, path bases, ideals.
//! * [`rep`], [`search`]: representations, morphisms, Hom spaces and
//!   existence searches for monomorphisms and epimorphisms.
//! * [`homological`]: projective presentations, Ext¹ and extensions.
//! * [`registry`], [`catalog`], [`classes`]: indecomposables, Krull–Schmidt
//!   bookkeeping and classes of modules.
//! * [`engine`]: the predicates, approximations and the correspondence
//!   between quasi-cotilting modules and torsion-free classes.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod classes;
pub mod engine;
pub mod error;
pub mod field;
pub mod homological;
pub mod matrix;
pub mod quiver;
pub mod registry;
pub mod rep;
pub mod search;

pub use algebra::{Algebra, Ideal};
pub use catalog::{Catalog, Decomposition};
pub use classes::{IndecSet, ModuleClass};
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use quiver::{Path, Quiver, Relation};
pub use registry::{IndecId, IndecRegistry, Provenance};
pub use rep::{Morphism, Representation};
pub use search::{Budgets, SearchVerdict};
