use std::fmt;

use crate::graph::Graph;

/// A set of edges of a graph with at most 64 edges, as a bitmask over edge
/// indices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(pub u64);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    pub fn from_edges(edges: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0u64;
        for e in edges {
            assert!(e < 64, "edge sets hold at most 64 edges");
            bits |= 1 << e;
        }
        EdgeSet(bits)
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < 64, "edge sets hold at most 64 edges");
        self.0 |= 1 << e;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&e| self.0 >> e & 1 == 1)
    }

    pub fn symmetric_difference(self, other: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// 0/1 labels of length `edge_count`.
    pub fn indicator(self, edge_count: usize) -> Vec<u32> {
        (0..edge_count).map(|e| u32::from(self.contains(e))).collect()
    }

    pub fn ids(self, g: &Graph) -> Vec<&str> {
        self.iter().map(|e| g.edge(e).id.as_str()).collect()
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// An edge set whose indicator lies in the parity lattice: a disjoint union
/// of leaf-to-leaf paths and cycles. Only constructible through a check.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Network(EdgeSet);

impl Network {
    pub fn new(g: &Graph, edges: EdgeSet) -> Option<Network> {
        is_network(g, edges).then_some(Network(edges))
    }

    pub fn edges(self) -> EdgeSet {
        self.0
    }

    /// Networks of one graph form a group under symmetric difference.
    pub fn sum_mod2(self, other: Network) -> Network {
        Network(self.0.symmetric_difference(other.0))
    }
}

/// Symmetric difference of two edge sets.
pub fn network_sum_mod2(a: EdgeSet, b: EdgeSet) -> EdgeSet {
    a.symmetric_difference(b)
}

/// Parity of inner-vertex incidence rows: bit `e` is set when edge `e` meets
/// the vertex an odd number of times (loops meet it twice).
pub(crate) fn incidence_rows(g: &Graph) -> Vec<u64> {
    assert!(g.edge_count() <= 64, "graphs with more than 64 edges are not supported");
    g.inner_vertices()
        .map(|v| g.slots(v).iter().fold(0u64, |row, s| row ^ (1 << s.edge)))
        .collect()
}

/// At every inner vertex an even number of selected edge slots.
pub fn is_network(g: &Graph, s: EdgeSet) -> bool {
    incidence_rows(g).iter().all(|row| (row & s.0).count_ones().is_multiple_of(2))
}

/// Basis of the kernel of the inner-vertex incidence map over F2.
fn kernel_basis(rows: &[u64], edge_count: usize) -> Vec<u64> {
    // Reduced row echelon form, pivot per row.
    let mut reduced: Vec<(usize, u64)> = Vec::new();
    for &row in rows {
        let mut r = row;
        for &(p, pr) in &reduced {
            if r >> p & 1 == 1 {
                r ^= pr;
            }
        }
        if r == 0 {
            continue;
        }
        let p = r.trailing_zeros() as usize;
        for entry in reduced.iter_mut() {
            if entry.1 >> p & 1 == 1 {
                entry.1 ^= r;
            }
        }
        reduced.push((p, r));
    }
    let pivots: u64 = reduced.iter().fold(0, |acc, &(p, _)| acc | 1 << p);
    (0..edge_count)
        .filter(|&f| pivots >> f & 1 == 0)
        .map(|f| {
            let mut v = 1u64 << f;
            for &(p, r) in &reduced {
                if r >> f & 1 == 1 {
                    v |= 1 << p;
                }
            }
            v
        })
        .collect()
}

/// All networks of `g`, sorted by bitmask (so the empty network comes first).
pub fn enumerate_networks(g: &Graph) -> Vec<Network> {
    let basis = kernel_basis(&incidence_rows(g), g.edge_count());
    assert!(basis.len() < 32, "too many networks to list");
    let mut out: Vec<Network> = (0u64..1 << basis.len())
        .map(|mask| {
            let bits = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0, |acc, (_, b)| acc ^ b);
            Network(EdgeSet(bits))
        })
        .collect();
    out.sort_unstable();
    out
}
