use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, TreeWithPairs};
use crate::semigroup::{violation, Labelling, Method, Network};

use super::tree::tree_decompose;

/// A tree element written as a list of networks of a cut tree.
#[derive(Debug, Clone)]
pub struct Decomposition {
    parts: Vec<Network>,
    context: TreeWithPairs,
}

impl Decomposition {
    /// Decomposes a member of the graph's semigroup through its default cut.
    pub fn new(g: &Graph, w: &Labelling) -> Result<Self> {
        if let Some(v) = violation(g, w, Method::Auto)? {
            return Err(Error::NotMember(v));
        }
        let context = TreeWithPairs::cut(g, None)?;
        let lift = Labelling::new(w.degree(), context.lift(w.labels()));
        let parts = tree_decompose(&context.tree, &lift)?;
        Ok(Decomposition { parts, context })
    }

    /// Wraps arbitrary networks of the cut tree; they need not glue.
    pub fn from_parts(context: TreeWithPairs, parts: Vec<Network>) -> Self {
        Decomposition { parts, context }
    }

    pub fn parts(&self) -> &[Network] {
        &self.parts
    }

    pub fn context(&self) -> &TreeWithPairs {
        &self.context
    }

    pub fn degree(&self) -> usize {
        self.parts.len()
    }

    pub(crate) fn replace(&mut self, i: usize, part: Network) {
        self.parts[i] = part;
    }

    /// Sum of the chosen parts on the tree.
    pub fn tree_sum(&self, rows: impl IntoIterator<Item = usize>) -> Vec<u32> {
        let mut out = vec![0; self.context.tree.edge_count()];
        for i in rows {
            for e in self.parts[i].edges().iter() {
                out[e] += 1;
            }
        }
        out
    }

    /// The chosen parts summed and glued back to the graph, if they agree on
    /// every pair.
    pub fn glue(&self, rows: &[usize]) -> Option<Labelling> {
        let labels = self.context.descend(&self.tree_sum(rows.iter().copied()))?;
        Some(Labelling::new(rows.len() as u32, labels))
    }

    pub fn matrix(&self) -> DecompMatrix {
        decomp_matrix(self)
    }
}

/// Rows are parts, columns are distinguished pairs; the entry is the lower
/// half's label minus the upper half's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompMatrix {
    entries: Vec<Vec<i8>>,
    cols: usize,
}

pub fn decomp_matrix(d: &Decomposition) -> DecompMatrix {
    let pairs = &d.context.pairs;
    let entries = d
        .parts
        .iter()
        .map(|p| {
            let s = p.edges();
            pairs
                .iter()
                .map(|&(lo, hi)| i8::from(s.contains(lo)) - i8::from(s.contains(hi)))
                .collect()
        })
        .collect();
    DecompMatrix { entries, cols: pairs.len() }
}

impl DecompMatrix {
    pub fn from_entries(entries: Vec<Vec<i8>>, cols: usize) -> Self {
        assert!(entries.iter().all(|r| r.len() == cols));
        DecompMatrix { entries, cols }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> i8 {
        self.entries[i][j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i]
    }

    pub fn column_sums(&self) -> Vec<i32> {
        self.column_sums_over(0..self.rows())
    }

    pub fn column_sums_over(&self, rows: impl IntoIterator<Item = usize> + Clone) -> Vec<i32> {
        (0..self.cols)
            .map(|j| rows.clone().into_iter().map(|i| i32::from(self.entries[i][j])).sum())
            .collect()
    }

    /// Rows reduced mod 2, bit `j` for column `j`.
    pub fn mod2_rows(&self) -> Vec<u64> {
        assert!(self.cols <= 64);
        self.entries
            .iter()
            .map(|r| r.iter().enumerate().fold(0, |acc, (j, &x)| acc | u64::from(x != 0) << j))
            .collect()
    }

    pub fn zero_count(&self) -> usize {
        self.entries.iter().flatten().filter(|&&x| x == 0).count()
    }
}

impl fmt::Display for DecompMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// The chosen rows sum to zero in every column, so their networks glue to an
/// element of the graph's semigroup.
pub fn subset_glues(m: &DecompMatrix, rows: &[usize]) -> bool {
    m.column_sums_over(rows.iter().copied()).iter().all(|&s| s == 0)
}

/// A nonempty strict subset of rows summing to zero over F2.
///
/// Rows are bit vectors of length `g`; such a subset exists once there are at
/// least `g + 2` rows. Rows are reduced in order and the first dependency found
/// is returned, as sorted 0-based indices.
pub fn dependent_row_subset(rows: &[u64], g: usize) -> Result<Vec<usize>> {
    if rows.len() <= g + 1 {
        return Err(Error::Precondition(format!(
            "{} rows over {g} columns need not have a strict dependent subset",
            rows.len()
        )));
    }
    // (pivot bit, reduced vector, combination of original rows)
    let mut basis: Vec<(u32, u64, Vec<bool>)> = Vec::new();
    for (i, &row) in rows.iter().enumerate() {
        let mut v = row;
        let mut combo = vec![false; rows.len()];
        combo[i] = true;
        for (p, b, c) in &basis {
            if v >> p & 1 == 1 {
                v ^= b;
                for (x, y) in combo.iter_mut().zip(c) {
                    *x ^= y;
                }
            }
        }
        if v == 0 {
            return Ok((0..rows.len()).filter(|&k| combo[k]).collect());
        }
        basis.push((v.trailing_zeros(), v, combo));
    }
    Err(Error::Internal("more than g + 1 rows but no dependency".into()))
}
