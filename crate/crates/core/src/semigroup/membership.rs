use std::collections::HashSet;
use std::fmt;
use std::ops::RangeInclusive;

use crate::error::{Error, Result};
use crate::graph::{Graph, TreeWithPairs};

use super::network::{enumerate_networks, incidence_rows, EdgeSet};
use super::Labelling;

/// The first condition a labelling fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Parity { vertex: String },
    Triangle { vertex: String },
    Degree { vertex: String },
    EdgeExceedsDegree { edge: String },
    /// The tree lift admits no decomposition into networks.
    NoDecomposition,
}

impl Violation {
    pub fn condition(&self) -> &'static str {
        match self {
            Violation::Parity { .. } => "parity",
            Violation::Triangle { .. } => "triangle",
            Violation::Degree { .. } => "degree",
            Violation::EdgeExceedsDegree { .. } => "edge-bound",
            Violation::NoDecomposition => "decomposition",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Parity { vertex } => write!(f, "parity condition at vertex {vertex}"),
            Violation::Triangle { vertex } => write!(f, "triangle inequality at vertex {vertex}"),
            Violation::Degree { vertex } => write!(f, "degree inequality at vertex {vertex}"),
            Violation::EdgeExceedsDegree { edge } => write!(f, "label of edge {edge} exceeds the degree"),
            Violation::NoDecomposition => f.write_str("no decomposition into networks"),
        }
    }
}

/// Which membership test to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Inequalities on trivalent graphs, the decomposition oracle otherwise.
    #[default]
    Auto,
    Inequalities,
    Decompose,
}

impl Method {
    pub fn resolve(self, g: &Graph) -> Method {
        match self {
            Method::Auto if g.is_trivalent() => Method::Inequalities,
            Method::Auto => Method::Decompose,
            m => m,
        }
    }
}

fn parity_violation(g: &Graph, labels: &[u32]) -> Option<usize> {
    g.inner_vertices()
        .find(|&v| g.slots(v).iter().map(|s| labels[s.edge]).sum::<u32>() % 2 == 1)
}

/// Every inner vertex has an even slot sum, a loop counted twice.
pub fn in_parity_lattice(g: &Graph, w: &Labelling) -> bool {
    assert_eq!(w.len(), g.edge_count(), "labelling does not fit the graph");
    parity_violation(g, w.labels()).is_none()
}

/// Admissible labels for a loop whose stem carries the even label `c`.
pub fn loop_range(c: u32, d: u32) -> Result<RangeInclusive<u32>> {
    if c % 2 == 1 || c > d {
        return Err(Error::Domain(format!("no loop labels for stem {c} at degree {d}")));
    }
    Ok(c / 2..=d - c / 2)
}

/// Precomputed inequality test for a trivalent graph.
#[derive(Debug, Clone)]
pub struct TrivalentTest {
    vertices: Vec<(usize, [usize; 3])>,
}

impl TrivalentTest {
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.is_trivalent() {
            return Err(Error::UnsupportedGraph(
                "the inequality test needs a trivalent graph".into(),
            ));
        }
        let vertices = g
            .inner_vertices()
            .map(|v| {
                let s = g.slots(v);
                (v, [s[0].edge, s[1].edge, s[2].edge])
            })
            .collect();
        Ok(TrivalentTest { vertices })
    }

    /// Fast yes/no version of [`first_violation`](Self::first_violation).
    pub fn accepts(&self, labels: &[u32], d: u32) -> bool {
        labels.iter().all(|&x| x <= d)
            && self.vertices.iter().all(|&(_, [p, q, r])| {
                vertex_admissible(labels[p], labels[q], labels[r], d)
            })
    }

    pub fn first_violation(&self, g: &Graph, labels: &[u32], d: u32) -> Option<Violation> {
        let name = |v: usize| g.vertex_name(v).to_string();
        let triples = || {
            self.vertices
                .iter()
                .map(|&(v, [p, q, r])| (v, labels[p], labels[q], labels[r]))
        };
        if let Some((v, ..)) = triples().find(|&(_, a, b, c)| (a + b + c) % 2 == 1) {
            return Some(Violation::Parity { vertex: name(v) });
        }
        if let Some((v, ..)) = triples().find(|&(_, a, b, c)| a > b + c || b > a + c || c > a + b) {
            return Some(Violation::Triangle { vertex: name(v) });
        }
        if let Some((v, ..)) = triples().find(|&(_, a, b, c)| a + b + c > 2 * d) {
            return Some(Violation::Degree { vertex: name(v) });
        }
        labels
            .iter()
            .position(|&x| x > d)
            .map(|e| Violation::EdgeExceedsDegree { edge: g.edge(e).id.clone() })
    }
}

/// Parity, triangle and degree conditions at one trivalent vertex.
#[inline]
pub fn vertex_admissible(a: u32, b: u32, c: u32, d: u32) -> bool {
    let s = a + b + c;
    s.is_multiple_of(2) && a <= b + c && b <= a + c && c <= a + b && s <= 2 * d
}

/// Membership in a trivalent graph's semigroup via local inequalities.
pub fn member_trivalent(g: &Graph, w: &Labelling) -> Result<bool> {
    w.check_graph(g)?;
    Ok(TrivalentTest::new(g)?.accepts(w.labels(), w.degree()))
}

/// Decides membership from the definition: lift to a cut tree and search for
/// a decomposition of the lift into `d` networks of the tree.
#[derive(Debug, Clone)]
pub struct Oracle {
    cut: TreeWithPairs,
    /// Tree networks, larger ones first.
    networks: Vec<u64>,
    rows: Vec<u64>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        Self::with_cut(g, None).expect("the default cut is always valid")
    }

    pub fn with_cut(g: &Graph, choice: Option<&[usize]>) -> Result<Self> {
        let cut = TreeWithPairs::cut(g, choice)?;
        let mut networks: Vec<u64> = enumerate_networks(&cut.tree)
            .into_iter()
            .map(|n| n.edges().0)
            .collect();
        networks.sort_by_key(|n| (std::cmp::Reverse(n.count_ones()), *n));
        let rows = incidence_rows(&cut.tree);
        Ok(Oracle { cut, networks, rows })
    }

    pub fn cut(&self) -> &TreeWithPairs {
        &self.cut
    }

    pub fn contains(&self, labels: &[u32], d: u32) -> bool {
        self.decompose_lift(labels, d).is_some()
    }

    /// `d` networks of the cut tree (possibly empty) summing to the lift.
    pub fn decompose_lift(&self, labels: &[u32], d: u32) -> Option<Vec<EdgeSet>> {
        self.decompose_tree(&self.cut.lift(labels), d)
    }

    /// `d` networks of the cut tree summing to the given tree labels.
    pub fn decompose_tree(&self, tree_labels: &[u32], d: u32) -> Option<Vec<EdgeSet>> {
        let mut residual = tree_labels.to_vec();
        let mut parts = Vec::with_capacity(d as usize);
        let mut failed = HashSet::new();
        self.search(&mut residual, d, &mut parts, &mut failed)
            .then(|| parts.into_iter().map(EdgeSet).collect())
    }

    fn parity_ok(&self, residual: &[u32]) -> bool {
        let odd = residual
            .iter()
            .enumerate()
            .fold(0u64, |acc, (e, &x)| acc | u64::from(x & 1) << e);
        self.rows.iter().all(|row| (row & odd).count_ones() % 2 == 0)
    }

    fn search(
        &self,
        residual: &mut Vec<u32>,
        k: u32,
        parts: &mut Vec<u64>,
        failed: &mut HashSet<(u32, Vec<u32>)>,
    ) -> bool {
        if k == 0 {
            return residual.iter().all(|&x| x == 0);
        }
        if residual.iter().any(|&x| x > k) || !self.parity_ok(residual) {
            return false;
        }
        if failed.contains(&(k, residual.clone())) {
            return false;
        }
        let mut required = 0u64;
        let mut allowed = 0u64;
        for (e, &x) in residual.iter().enumerate() {
            if x == k {
                required |= 1 << e;
            }
            if x > 0 {
                allowed |= 1 << e;
            }
        }
        for &n in &self.networks {
            if n & required != required || n & !allowed != 0 {
                continue;
            }
            apply(residual, n, false);
            parts.push(n);
            if self.search(residual, k - 1, parts, failed) {
                return true;
            }
            parts.pop();
            apply(residual, n, true);
        }
        failed.insert((k, residual.clone()));
        false
    }
}

fn apply(residual: &mut [u32], n: u64, add: bool) {
    let mut bits = n;
    while bits != 0 {
        let e = bits.trailing_zeros() as usize;
        if add {
            residual[e] += 1;
        } else {
            residual[e] -= 1;
        }
        bits &= bits - 1;
    }
}

/// Membership from the definition, through the default cut tree.
pub fn member(g: &Graph, w: &Labelling) -> bool {
    assert_eq!(w.len(), g.edge_count(), "labelling does not fit the graph");
    Oracle::new(g).contains(w.labels(), w.degree())
}

/// Membership through an explicit cut.
pub fn member_with_cut(g: &Graph, w: &Labelling, choice: &[usize]) -> Result<bool> {
    w.check_graph(g)?;
    Ok(Oracle::with_cut(g, Some(choice))?.contains(w.labels(), w.degree()))
}

/// The first violated condition, or `None` for members.
pub fn violation(g: &Graph, w: &Labelling, method: Method) -> Result<Option<Violation>> {
    w.check_graph(g)?;
    match method.resolve(g) {
        Method::Inequalities => Ok(TrivalentTest::new(g)?.first_violation(g, w.labels(), w.degree())),
        _ => {
            if let Some(v) = parity_violation(g, w.labels()) {
                return Ok(Some(Violation::Parity { vertex: g.vertex_name(v).to_string() }));
            }
            if let Some(e) = w.labels().iter().position(|&x| x > w.degree()) {
                return Ok(Some(Violation::EdgeExceedsDegree { edge: g.edge(e).id.clone() }));
            }
            Ok((!member(g, w)).then_some(Violation::NoDecomposition))
        }
    }
}

pub fn contains(g: &Graph, w: &Labelling, method: Method) -> Result<bool> {
    Ok(violation(g, w, method)?.is_none())
}
