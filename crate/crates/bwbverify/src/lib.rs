//! Exact Lie-theoretic computations for equivariant vector bundles on the
//! adjoint Grassmannian X = E6/P2, and a verification ledger for Lefschetz
//! exceptional collections on it.
//!
//! The kernel is small and fully exact (no floating point anywhere):
//!
//! * [`root_system`] - Cartan-matrix arithmetic, reflections, Weyl orbits,
//!   positive roots and the Weyl dimension formula, for any simply-laced
//!   diagram (E6 and the A-chains are built in).
//! * [`levi`] - a marked Dynkin vertex: restriction to the Levi, central
//!   charges, duals by descent, the canonical index, bundle ranks.
//! * [`bwb`] - the Borel-Weil-Bott reflection loop deciding the cohomology
//!   of any equivariant bundle weight.
//! * [`tensor`] - Littlewood-Richardson decomposition of Levi tensor
//!   products, with an independent Freudenthal-character oracle.
//! * [`bundles`] - bundle expressions, graded Ext, the nilradical grading of
//!   the tangent bundle, named filtered bundles and extension checks.
//! * [`collections`] - Lefschetz-collection obligation ledgers: enumerate,
//!   discharge, report.
//!
//! The `examples/` directory demonstrates each capability; the `bwbverify`
//! binary exposes the same operations as subcommands.

pub mod error;
pub mod root_system;
pub mod levi;
pub mod bwb;
pub mod tensor;
pub mod bundles;
pub mod literal;
pub mod collections;
pub mod cache;
pub mod cli;

pub use bwb::{CohomologyResult, GradedVector};
pub use bundles::{BundleExpr, ExtensionOutcome, FilteredBundle, NilradicalGrading, ObjectSpec};
pub use collections::{LefschetzSpec, Obligation, Report, Script, Status};
pub use error::{KernelError, Result};
pub use levi::ParabolicData;
pub use root_system::{Q, RootSystemData, Weight, WeylWord};
pub use tensor::{Decomposition, Partition};
