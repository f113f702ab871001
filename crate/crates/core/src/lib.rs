//! Exact computation of unified coloured Jones invariants, coloured Jones
//! polynomials and ADO invariants of braid closures.
//!
//! Values are partial quantum traces of a two-variable Verma-module braid
//! action, assembled into the level-`N` quotient ring
//! `Z[x±, d±] / ⟨∏_{i=1}^N (x d^{i-1} - 1)⟩`.

pub mod braid;
pub mod error;
pub mod invariants;
pub mod knots;
pub mod oracles;
pub mod quotient;
pub mod ring;
pub mod verma;

pub use error::{Error, Result};
