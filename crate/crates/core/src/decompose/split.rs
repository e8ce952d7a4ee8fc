use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semigroup::{contains, Labelling, Method};

use super::matrix::{dependent_row_subset, Decomposition};
use super::swap::{swap_entries, SwapOutcome};

/// Bookkeeping from one run of [`split_with_stats`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SplitStats {
    pub exchanges: usize,
    /// Swaps that stopped early and forced a new row subset.
    pub restarts: usize,
}

/// Writes a member of degree above `betti + 1` as a sum of two members of
/// positive degree.
pub fn split(g: &Graph, w: &Labelling) -> Result<(Labelling, Labelling)> {
    split_with_stats(g, w).map(|(a, b, _)| (a, b))
}

/// Decompose the tree lift into networks, pick rows that sum to zero over F2
/// in every pair column, and swap entries between the chosen rows and the
/// rest until every column sums to zero over the integers. The chosen rows
/// then glue to a member and so does the remainder.
pub fn split_with_stats(g: &Graph, w: &Labelling) -> Result<(Labelling, Labelling, SplitStats)> {
    w.check_graph(g)?;
    let genus = g.betti();
    let bound = genus as u32 + 1;
    if w.degree() <= bound {
        return Err(Error::NoGuarantee { degree: w.degree(), bound });
    }
    let mut dec = Decomposition::new(g, w)?;
    let mut stats = SplitStats::default();
    let rows = 'restart: loop {
        let m = dec.matrix();
        let rows = dependent_row_subset(&m.mod2_rows(), genus)?;
        let mut in_rows = vec![false; m.rows()];
        for &i in &rows {
            in_rows[i] = true;
        }
        loop {
            let m = dec.matrix();
            let sums = m.column_sums_over(rows.iter().copied());
            let Some(col) = sums.iter().position(|&s| s != 0) else {
                break 'restart rows;
            };
            let sign: i8 = if sums[col] > 0 { 1 } else { -1 };
            let pick = |want_in: bool, value: i8| {
                (0..m.rows()).find(|&r| in_rows[r] == want_in && m.entry(r, col) == value)
            };
            let (Some(i), Some(j)) = (pick(true, sign), pick(false, -sign)) else {
                return Err(Error::Internal("unbalanced column without a partner entry".into()));
            };
            let (next, outcome) = swap_entries(&dec, col, i, j)?;
            dec = next;
            match outcome {
                SwapOutcome::Exchanged => stats.exchanges += 1,
                SwapOutcome::MoreZeros => {
                    stats.restarts += 1;
                    continue 'restart;
                }
            }
        }
    };
    let first = dec
        .glue(&rows)
        .ok_or_else(|| Error::Internal("chosen rows do not glue".into()))?;
    let second = w
        .checked_sub(&first)
        .ok_or_else(|| Error::Internal("part exceeds the whole".into()))?;
    for part in [&first, &second] {
        if !contains(g, part, Method::Auto)? {
            return Err(Error::Internal(format!("split part {part} is not a member")));
        }
    }
    Ok((first, second, stats))
}

/// Both parts in the labelling text format and a closing `sum-check` line.
pub fn certificate(g: &Graph, w: &Labelling, first: &Labelling, second: &Labelling) -> String {
    let ok = &(first + second) == w;
    format!(
        "# part 1\n{}# part 2\n{}sum-check: {}\n",
        first.to_text(g),
        second.to_text(g),
        if ok { "ok" } else { "FAILED" }
    )
}
