//! Exact local volumes of isolated normal singularities.
//!
//! Surface singularities are given by resolution dual graphs ([`graph`]);
//! their volume is `-P²` for `P` the nef part of the relative Zariski
//! decomposition of the log discrepancy divisor ([`envelope`]). Blowup towers
//! ([`tower`]) check that this is independent of the model. Cone
//! singularities over polarized varieties ([`cone`]) are handled from
//! numerical data on the base.

pub mod catalog;
pub mod cone;
pub mod envelope;
pub mod error;
pub mod graph;
pub mod lattice;
pub mod lp;
pub mod polyhedral;
pub mod random;
pub mod tower;

pub use error::{Error, ErrorKind, Result};
pub use lattice::{QVector, Rational, SymForm};
