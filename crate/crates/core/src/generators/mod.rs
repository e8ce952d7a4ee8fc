//! Enumeration of graded pieces, indecomposability and minimal generators.

mod canonical;
mod enumerate;
mod minimal;
mod table;

pub use canonical::canonical_indecomposable;
pub use enumerate::{enumerate_degree, enumerate_dominated, hilbert, Enumerator};
pub use minimal::{
    is_indecomposable, is_indecomposable_with, minimal_generators, minimal_generators_with, GeneratorSet, Verdict,
};
pub use table::{format_counts, format_table, generator_table, records, tuple_text, GeneratorRecord};
