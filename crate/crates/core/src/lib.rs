//! Exact computations around graph classes with bounded expansion.
//!
//! The crate covers shallow-minor densities (grads and top-grads), queue and
//! stack layouts, non-repetitive colourings, and seeded audits of sparse
//! random graphs. Every inequality that a construction is supposed to satisfy
//! is returned as a [`report::Check`] carrying both sides.

pub mod cli;
pub mod error;
pub mod grads;
pub mod graph;
pub mod layouts;
pub mod nonrep;
pub mod randexp;
pub mod report;

pub use error::{Error, Result};
pub use graph::Graph;
