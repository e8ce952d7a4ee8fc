//! Phylogenetic semigroups of multigraphs.
//!
//! Elements are integer edge labellings of a graph with a degree; they are
//! the labellings whose lift to a cut tree splits into that many networks.
//! The crate tests membership, decomposes elements, certifies
//! indecomposability and enumerates minimal generators, with dedicated
//! support for caterpillar graphs.

pub mod cli;
pub mod decompose;
pub mod error;
pub mod generators;
pub mod graph;
pub mod semigroup;

pub use error::{Error, Result};
pub use graph::{caterpillar, Graph, TreeWithPairs};
pub use semigroup::{member, Labelling, Network};
