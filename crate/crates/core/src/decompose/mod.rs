//! Constructive decomposition: networks of cut trees, decomposition matrices,
//! the entry swap, the general splitter for degrees above `betti + 1` and the
//! even-degree splitter for caterpillar graphs.

mod caterpillar;
mod matrix;
mod split;
mod swap;
mod tree;

pub use caterpillar::caterpillar_split_even;
pub use matrix::{decomp_matrix, dependent_row_subset, subset_glues, DecompMatrix, Decomposition};
pub use split::{certificate, split, split_with_stats, SplitStats};
pub use swap::{swap_entries, SwapOutcome};
pub use tree::tree_decompose;
