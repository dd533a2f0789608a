//! Type B Hecke algebras, their regular representation and the KLR presentation.

pub mod algebra;
pub mod disconnected;
pub mod klr;
pub mod regular;
pub mod weyl;

pub use algebra::{Generator, HeckeElement, HeckeParams, WeylBWord};
pub use regular::{hecke_eigenvalue_check, EigenvalueReport, JointDecomposition, RegularRep};
pub use weyl::{SignVector, SignedPerm};
