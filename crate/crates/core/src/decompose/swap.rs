use crate::error::{Error, Result};
use crate::semigroup::{EdgeSet, Network};

use super::matrix::{decomp_matrix, Decomposition};

/// What a swap achieved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwapOutcome {
    /// The two target entries were interchanged and nothing else changed.
    Exchanged,
    /// The path construction stopped early; the new matrix has strictly more
    /// zero entries than the old one.
    MoreZeros,
}

/// Interchanges the opposite nonzero entries of rows `i` and `j` in column
/// `pair` by moving a set of leaf-to-leaf paths between the two networks.
///
/// The paths live in the symmetric difference `S` of the two networks. The
/// first starts at the upper half of `pair`; each walk takes the lowest
/// unused edge of `S` at every vertex until it reaches a leaf. Reaching the
/// partner of the start finishes the exchange; reaching an unpaired leaf or a
/// pair where row `i` or `j` is nonzero stops early (leaving more zeros);
/// otherwise the walk resumes from the partner of the leaf it reached.
pub fn swap_entries(
    d: &Decomposition,
    pair: usize,
    i: usize,
    j: usize,
) -> Result<(Decomposition, SwapOutcome)> {
    let m = decomp_matrix(d);
    if i == j || i >= m.rows() || j >= m.rows() || pair >= m.cols() {
        return Err(Error::InvalidSwap(format!("rows {i}, {j} and column {pair} out of range")));
    }
    let (x, y) = (m.entry(i, pair), m.entry(j, pair));
    if x == 0 || x != -y {
        return Err(Error::InvalidSwap(format!(
            "entries ({x}, {y}) in column {pair} are not opposite and nonzero"
        )));
    }
    let ctx = d.context();
    let tree = &ctx.tree;
    let (wi, wj) = (d.parts()[i].edges(), d.parts()[j].edges());
    let mut s = wi.symmetric_difference(wj).0;
    let mut b = 0u64;
    let mut start = ctx.pairs[pair].1;
    let outcome = loop {
        if s >> start & 1 == 0 {
            return Err(Error::Internal("path start outside the difference set".into()));
        }
        s &= !(1 << start);
        b |= 1 << start;
        let mut end = start;
        let mut v = tree.edge(start).tail;
        while !tree.is_leaf(v) {
            let next = tree
                .slots(v)
                .iter()
                .map(|sl| sl.edge)
                .filter(|&f| s >> f & 1 == 1)
                .min()
                .ok_or_else(|| Error::Internal("walk stuck at an inner vertex".into()))?;
            s &= !(1 << next);
            b |= 1 << next;
            v = tree.edge(next).other(v);
            end = next;
        }
        match ctx.pair_of(end) {
            None => break SwapOutcome::MoreZeros,
            Some((p, _)) if p == pair => break SwapOutcome::Exchanged,
            Some((p, _)) if m.entry(i, p) != 0 || m.entry(j, p) != 0 => break SwapOutcome::MoreZeros,
            Some((p, upper)) => {
                let (lo, hi) = ctx.pairs[p];
                start = if upper { lo } else { hi };
            }
        }
    };
    let mut out = d.clone();
    out.replace(i, Network::new(tree, EdgeSet(wi.0 ^ b)).ok_or_else(|| Error::Internal("swap broke a network".into()))?);
    out.replace(j, Network::new(tree, EdgeSet(wj.0 ^ b)).ok_or_else(|| Error::Internal("swap broke a network".into()))?);
    let after = decomp_matrix(&out);
    let ok = match outcome {
        SwapOutcome::Exchanged => (0..m.rows()).all(|r| {
            (0..m.cols()).all(|c| {
                let expect = match (r, c == pair) {
                    (r, true) if r == i => y,
                    (r, true) if r == j => x,
                    _ => m.entry(r, c),
                };
                after.entry(r, c) == expect
            })
        }),
        SwapOutcome::MoreZeros => after.zero_count() > m.zero_count(),
    };
    if !ok {
        return Err(Error::Internal(format!("swap outcome {outcome:?} not realised")));
    }
    Ok((out, outcome))
}
