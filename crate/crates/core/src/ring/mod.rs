//! Exact polynomial arithmetic over `Z` and over cyclotomic integers.

pub mod cyclo;
pub mod laurent;
mod parse;
pub mod quantum;
pub mod varset;

pub use cyclo::{evaluate_at_root, CycloContext, CycloElem, CycloPoly, RootImage};
pub use laurent::{Exps, LaurentPoly};
pub use quantum::{cyclotomic_poly, gauss_binomial, gauss_table, quantum_bracket, quantum_factorial};
pub use varset::VarSet;
