//! Exact machinery for studying the matroids of root systems.
//!
//! Every root system is stored as one representative per antipodal pair of
//! roots (a *line*). The crate builds those line sets over exact arithmetic,
//! derives the linear matroid on them, enumerates its circuits, and computes
//! automorphism groups two ways: from known isometries, and from the
//! element/circuit incidence graph via individualization–refinement. Groups
//! are handled through a deterministic Schreier–Sims base and strong
//! generating set.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod error;
pub mod graphauto;
pub mod incidence;
pub mod matroid;
pub mod perm;
pub mod permgroup;
pub mod roots;
pub mod scalar;

pub use error::{Error, Result};
pub use graphauto::{automorphism_group, AutomorphismSearch, OrderedPartition};
pub use incidence::ColoredGraph;
pub use matroid::{Circuit, LinearMatroid};
pub use perm::Perm;
pub use permgroup::PermGroup;
pub use roots::{Family, RootSystem};
pub use scalar::{QuadExt, Rational, Scalar};
