//! Brute-force ground truth: exact matrices for the algebra action on a
//! degree-truncated standard module, its contravariant form, and checks
//! that refute diagonalizability or unitarity.

pub mod cyc;
pub mod linalg;
pub mod module;
pub mod relations;
pub mod specht;

pub use cyc::{CycField, CycNumber};
pub use linalg::{symmetric_inertia, Inertia, Matrix};
pub use module::{build_truncation, FoldWitness, Mutation, OracleOptions, TruncatedModule};
pub use relations::{verify_relations, RelationReport};
pub use specht::{build_specht, SpechtModel};
