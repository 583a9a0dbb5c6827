//! A total combinator calculus of primitive recursive maps over `1`, `N`,
//! and binary products, together with:
//!
//! - Gödel numbering of terms into tagged Cantor-pair codes ([`codec`]);
//! - evaluation of codes on values, recursing on code shape ([`evaluator`]);
//! - an equational proof system on codes with a trusted checker, a total
//!   enumeration of all valid deduction trees, and bounded proof search
//!   ([`proofs`]);
//! - a decision operator that races counterexample search against proof
//!   search over one shared index ([`decision`]);
//! - concrete syntax and a CLI ([`surface`]).
//!
//! All data is immutable and every operation is a pure function; the one
//! internal memo (the tree enumerator) is synchronized and observably pure.

pub mod cantor;
pub mod codec;
pub mod decision;
pub mod error;
pub mod evaluator;
pub mod kernel;
pub mod proofs;
pub mod sampling;
pub mod stdlib;
pub mod surface;

pub use error::{Error, Result};
