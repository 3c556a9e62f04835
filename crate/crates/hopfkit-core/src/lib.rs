//! Exact computer algebra for finite-dimensional (quasitriangular) Hopf
//! algebras over cyclotomic fields.
//!
//! The crate verifies Hopf and quasitriangularity axioms from structure
//! constants, computes Drinfeld maps, transparency ideals and the
//! associated non-degeneracy criteria, builds the usual zoo of examples
//! (Sweedler, Taft, bicharacter group algebras, Drinfeld doubles,
//! bosonizations, small quantum sl2), and exercises Yetter-Drinfeld
//! module theory over braided Hopf algebras. All arithmetic is exact.

pub mod hopf;
pub mod io;
pub mod pointed;
pub mod linalg;
pub mod qt;
pub mod scalar;
pub mod yd;
pub mod zoo;

pub use hopf::{HModule, HopfAlgebra, Report};
pub use linalg::{Mat, Subspace};
pub use qt::QTStructure;
pub use scalar::{CycScalar, ScalarError};
