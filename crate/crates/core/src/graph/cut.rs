use std::collections::{HashSet, VecDeque};

use super::Graph;
use crate::error::{Error, Result};

/// A tree obtained from a graph by cutting cycle edges, together with the
/// distinguished pairs of leaf edges that glue back into the graph.
///
/// Cutting edge `e = (u, v)` replaces it by a *lower* half from `u` to a fresh
/// leaf and an *upper* half from `v` to another fresh leaf. Tree edges keep
/// the order of the source edges, with the two halves of a cut edge in place
/// of the original.
#[derive(Debug, Clone)]
pub struct TreeWithPairs {
    pub tree: Graph,
    /// `(lower, upper)` tree-edge indices, in cut order.
    pub pairs: Vec<(usize, usize)>,
    /// Source edge of every tree edge.
    pub back_map: Vec<usize>,
    /// Source edges that were cut, in cut order.
    pub cut_edges: Vec<usize>,
    /// For every tree edge: the pair it belongs to and whether it is the upper half.
    pair_of: Vec<Option<(usize, bool)>>,
    source_vertices: usize,
    source_edges: usize,
    source_ids: Vec<String>,
}

impl TreeWithPairs {
    /// Cuts `g` into a forest. With `choice = None` the cut edges are the
    /// complement of the breadth-first spanning forest grown from the lowest
    /// vertex of each component, in edge order.
    pub fn cut(g: &Graph, choice: Option<&[usize]>) -> Result<Self> {
        let cuts = match choice {
            Some(c) => {
                let mut removed = vec![false; g.edge_count()];
                for &e in c {
                    if e >= g.edge_count() {
                        return Err(Error::UnknownEdge(format!("#{e}")));
                    }
                    if !g.is_cycle_edge_without(e, &removed) {
                        return Err(Error::InvalidCut(g.edge(e).id.clone()));
                    }
                    removed[e] = true;
                }
                c.to_vec()
            }
            None => default_cut_edges(g),
        };
        Ok(Self::build(g, cuts))
    }

    fn build(g: &Graph, cuts: Vec<usize>) -> Self {
        let mut cut_rank = vec![None; g.edge_count()];
        for (k, &e) in cuts.iter().enumerate() {
            cut_rank[e] = Some(k);
        }
        let mut vertex_names: Vec<String> = g.vertex_names().to_vec();
        let mut taken_vertices: HashSet<String> = vertex_names.iter().cloned().collect();
        let mut taken_edges: HashSet<String> = g.edges().iter().map(|e| e.id.clone()).collect();
        let fresh = |taken: &mut HashSet<String>, base: String| {
            let name = super::fresh_name(&base, |n| taken.contains(n));
            taken.insert(name.clone());
            name
        };

        let mut records = Vec::new();
        let mut back_map = Vec::new();
        let mut halves = vec![(0, 0); cuts.len()];
        for (e, edge) in g.edges().iter().enumerate() {
            let tail = g.vertex_name(edge.tail).to_string();
            let head = g.vertex_name(edge.head).to_string();
            match cut_rank[e] {
                None => {
                    records.push((edge.id.clone(), tail, head));
                    back_map.push(e);
                }
                Some(k) => {
                    let lo_leaf = fresh(&mut taken_vertices, format!("{}_lo", edge.id));
                    let hi_leaf = fresh(&mut taken_vertices, format!("{}_hi", edge.id));
                    vertex_names.push(lo_leaf.clone());
                    vertex_names.push(hi_leaf.clone());
                    let lo_id = fresh(&mut taken_edges, format!("{}_lo", edge.id));
                    let hi_id = fresh(&mut taken_edges, format!("{}_hi", edge.id));
                    halves[k] = (records.len(), records.len() + 1);
                    records.push((lo_id, tail, lo_leaf));
                    records.push((hi_id, head, hi_leaf));
                    back_map.push(e);
                    back_map.push(e);
                }
            }
        }
        let tree = Graph::with_vertices(vertex_names, records).expect("fresh names are unique");
        let mut pair_of = vec![None; tree.edge_count()];
        for (k, &(lo, hi)) in halves.iter().enumerate() {
            pair_of[lo] = Some((k, false));
            pair_of[hi] = Some((k, true));
        }
        TreeWithPairs {
            tree,
            pairs: halves,
            back_map,
            cut_edges: cuts,
            pair_of,
            source_vertices: g.vertex_count(),
            source_edges: g.edge_count(),
            source_ids: g.edges().iter().map(|e| e.id.clone()).collect(),
        }
    }

    /// Number of distinguished pairs.
    pub fn genus(&self) -> usize {
        self.pairs.len()
    }

    /// The pair containing tree edge `e`, and whether `e` is its upper half.
    pub fn pair_of(&self, e: usize) -> Option<(usize, bool)> {
        self.pair_of[e]
    }

    /// Lifts source-edge labels to the tree; both halves of a cut edge get
    /// the label of the edge.
    pub fn lift(&self, labels: &[u32]) -> Vec<u32> {
        debug_assert_eq!(labels.len(), self.source_edges);
        self.back_map.iter().map(|&e| labels[e]).collect()
    }

    /// Inverse of [`lift`](Self::lift); `None` when some pair disagrees.
    pub fn descend(&self, tree_labels: &[u32]) -> Option<Vec<u32>> {
        if self
            .pairs
            .iter()
            .any(|&(lo, hi)| tree_labels[lo] != tree_labels[hi])
        {
            return None;
        }
        let mut out = vec![0; self.source_edges];
        for (t, &e) in self.back_map.iter().enumerate() {
            out[e] = tree_labels[t];
        }
        Some(out)
    }

    /// Glues every pair back into a single edge, reproducing the source graph.
    pub fn reglue(&self) -> Graph {
        let t = &self.tree;
        let mut records: Vec<Option<(String, String, String)>> = vec![None; self.source_edges];
        // Halves run from the original endpoint (tail) to the fresh leaf (head).
        let inner = |e: usize| t.edge(e).tail;
        for (e, edge) in t.edges().iter().enumerate() {
            let source = self.back_map[e];
            match self.pair_of[e] {
                None => {
                    records[source] = Some((
                        self.source_ids[source].clone(),
                        t.vertex_name(edge.tail).to_string(),
                        t.vertex_name(edge.head).to_string(),
                    ))
                }
                Some((k, false)) => {
                    let (lo, hi) = self.pairs[k];
                    records[source] = Some((
                        self.source_ids[source].clone(),
                        t.vertex_name(inner(lo)).to_string(),
                        t.vertex_name(inner(hi)).to_string(),
                    ))
                }
                Some((_, true)) => {}
            }
        }
        let vertices = &t.vertex_names()[..self.source_vertices];
        Graph::with_vertices(vertices, records.into_iter().map(|r| r.expect("every edge restored")))
            .expect("source ids are unique")
    }
}

/// Complement of the breadth-first spanning forest, in edge order.
pub(crate) fn default_cut_edges(g: &Graph) -> Vec<usize> {
    let mut in_forest = vec![false; g.edge_count()];
    let mut seen = vec![false; g.vertex_count()];
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for slot in g.slots(x) {
                let y = g.edge(slot.edge).other(x);
                if !seen[y] {
                    seen[y] = true;
                    in_forest[slot.edge] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    (0..g.edge_count()).filter(|&e| !in_forest[e]).collect()
}

/// Every set of edges whose removal leaves a spanning forest, each listed in
/// edge order. These are exactly the admissible cut choices up to order.
pub fn admissible_cut_choices(g: &Graph) -> Vec<Vec<usize>> {
    let b = g.betti();
    let (components, _) = g.components();
    let m = g.edge_count();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        g: &Graph,
        start: usize,
        need: usize,
        components: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if need == 0 {
            let mut removed = vec![false; g.edge_count()];
            for &e in current.iter() {
                removed[e] = true;
            }
            let (c, _) = g.components_without(Some(&removed));
            if c == components {
                out.push(current.clone());
            }
            return;
        }
        for e in start..g.edge_count() {
            if g.edge_count() - e < need {
                break;
            }
            current.push(e);
            rec(g, e + 1, need - 1, components, current, out);
            current.pop();
        }
    }
    if b <= m {
        rec(g, 0, b, components, &mut current, &mut out);
    }
    out
}
