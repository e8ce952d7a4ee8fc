use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{caterpillar, CaterpillarLayout, Graph};
use crate::semigroup::loop_range;

use super::minimal::{minimal_generators, GeneratorSet};

/// Generators of a caterpillar graph sharing a degree and non-loop labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub degree: u32,
    /// Non-loop labels in left-to-right order.
    pub tuple: Vec<u32>,
    /// Number of generators with this degree and tuple.
    pub loop_multiplicity: u64,
    /// Admissible `(min, max)` label for each loop given its stem.
    pub loop_ranges: Vec<(u32, u32)>,
}

impl GeneratorRecord {
    /// Product of the loop range sizes.
    pub fn range_product(&self) -> u64 {
        self.loop_ranges.iter().map(|&(lo, hi)| u64::from(hi - lo + 1)).product()
    }

    /// `d (t1, t2, ...) #`
    pub fn row_text(&self) -> String {
        format!("{} {} {}", self.degree, tuple_text(&self.tuple), self.loop_multiplicity)
    }
}

pub fn tuple_text(t: &[u32]) -> String {
    let parts: Vec<String> = t.iter().map(u32::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Groups the generators of a caterpillar graph by degree and tuple.
pub fn records(g: &Graph, set: &GeneratorSet) -> Result<Vec<GeneratorRecord>> {
    let layout = CaterpillarLayout::detect(g)?;
    let mut groups: BTreeMap<(u32, Vec<u32>), u64> = BTreeMap::new();
    for w in set.iter() {
        let tuple = layout.tuple_edges.iter().map(|&e| w.get(e)).collect();
        *groups.entry((w.degree(), tuple)).or_default() += 1;
    }
    groups
        .into_iter()
        .map(|((degree, tuple), count)| {
            let mut labels = vec![0; g.edge_count()];
            for (&e, &x) in layout.tuple_edges.iter().zip(&tuple) {
                labels[e] = x;
            }
            let loop_ranges = layout
                .loops
                .iter()
                .map(|&(_, stem)| loop_range(labels[stem], degree).map(|r| (*r.start(), *r.end())))
                .collect::<Result<Vec<_>>>()?;
            Ok(GeneratorRecord { degree, tuple, loop_multiplicity: count, loop_ranges })
        })
        .collect()
}

/// The grouped generator list of the `g`-caterpillar.
pub fn generator_table(g: usize) -> Result<Vec<GeneratorRecord>> {
    let graph = caterpillar(g)?;
    records(&graph, &minimal_generators(&graph, None)?)
}

/// Three right-aligned columns: degree, tuple, multiplicity.
pub fn format_table(records: &[GeneratorRecord]) -> String {
    let tuples: Vec<String> = records.iter().map(|r| tuple_text(&r.tuple)).collect();
    let w1 = records.iter().map(|r| r.degree.to_string().len()).max().unwrap_or(0).max(1);
    let w2 = tuples.iter().map(String::len).max().unwrap_or(0).max("generator".len());
    let w3 = records.iter().map(|r| r.loop_multiplicity.to_string().len()).max().unwrap_or(0).max(1);
    let mut out = String::new();
    let _ = writeln!(out, "{:>w1$} | {:>w2$} | {:>w3$}", "d", "generator", "#");
    let _ = writeln!(out, "{}-+-{}-+-{}", "-".repeat(w1), "-".repeat(w2), "-".repeat(w3));
    for (r, t) in records.iter().zip(&tuples) {
        let _ = writeln!(out, "{:>w1$} | {:>w2$} | {:>w3$}", r.degree, t, r.loop_multiplicity);
    }
    out
}

/// Generator counts per degree with the total first.
pub fn format_counts(set: &GeneratorSet) -> String {
    let mut out = String::from("d\tcount\n");
    let _ = writeln!(out, "all\t{}", set.total());
    for (k, n) in set.counts().iter().enumerate() {
        let _ = writeln!(out, "{}\t{}", k + 1, n);
    }
    out
}
