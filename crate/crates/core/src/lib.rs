//! Combinatorial layer for isolated (quadratic unipotent) blocks of `SO_{2n+1}(q)`.
//!
//! - [`partitions`]: partitions, charged β-sets, hooks, cores, quotients, tableaux
//! - [`symbols`]: charged symbols of type B, d-(co)hooks, (co)cores, the 2d-abacus
//! - [`quiver`]: the quivers `I(q)`, Cartan data, KLR polynomials, specialization
//! - [`fock`]: charged Fock spaces, Chevalley operators, weights, Weyl reflections
//! - [`heckeb`]: two-parameter Hecke algebras of type `B_{m+} x B_{m-}`, X-generators,
//!   the BKR transform and KLR checks
//! - [`blocks`]: modular contexts, character and block labels, Brauer trees, RoCK
//!   detection, weights of characters and the dimZ identity

pub mod blocks;
pub mod error;
pub mod fock;
pub mod heckeb;
pub mod linalg;
pub mod partitions;
pub mod poly;
pub mod quiver;
pub mod symbols;

pub use error::{Error, Result};
