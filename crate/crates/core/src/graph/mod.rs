//! Finite multigraphs with loops and parallel edges.
//!
//! Every edge occupies two *slots*, one at each endpoint. A loop therefore
//! occupies two slots at the same vertex and contributes 2 to its valency,
//! which is what makes the loop vertices of a caterpillar graph trivalent.
//! Leaves are the vertices of valency 1; every other vertex (including
//! isolated ones) is an inner vertex.

mod caterpillar;
mod cut;
mod iso;
mod transform;

use std::collections::{HashMap, VecDeque};
use std::fmt;

pub use caterpillar::{caterpillar, CaterpillarLayout, TreeVertex};
pub use cut::{admissible_cut_choices, TreeWithPairs};
pub use iso::{canonical_form, is_isomorphic};
pub use transform::{remove_zero_edge, split_vertex, subdivide, suppress_two_valent, MergeMap};

use crate::error::{Error, Result};

/// Which endpoint of an edge a slot refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum End {
    Tail,
    Head,
}

/// One incidence of an edge at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub edge: usize,
    pub end: End,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn endpoint(&self, end: End) -> usize {
        match end {
            End::Tail => self.tail,
            End::Head => self.head,
        }
    }

    /// The endpoint opposite to `v`.
    pub fn other(&self, v: usize) -> usize {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

#[derive(Debug, Clone)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    incidence: Vec<Vec<Slot>>,
    vertex_lookup: HashMap<String, usize>,
    edge_lookup: HashMap<String, usize>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from `(edge-id, u, v)` records. The vertex set is the
    /// union of the endpoints, in order of first appearance.
    pub fn from_edges<I, A, B, C>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B, C)>,
        A: AsRef<str>,
        B: AsRef<str>,
        C: AsRef<str>,
    {
        Self::with_vertices(std::iter::empty::<&str>(), edges)
    }

    /// Like [`Graph::from_edges`] but declares `vertices` first, which allows
    /// isolated vertices and pins the vertex order.
    pub fn with_vertices<V, S, I, A, B, C>(vertices: V, edges: I) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: AsRef<str>,
        I: IntoIterator<Item = (A, B, C)>,
        A: AsRef<str>,
        B: AsRef<str>,
        C: AsRef<str>,
    {
        let mut g = Graph {
            vertices: Vec::new(),
            edges: Vec::new(),
            incidence: Vec::new(),
            vertex_lookup: HashMap::new(),
            edge_lookup: HashMap::new(),
        };
        for v in vertices {
            g.intern_vertex(v.as_ref());
        }
        for (id, u, v) in edges {
            let id = id.as_ref();
            if g.edge_lookup.contains_key(id) {
                return Err(Error::DuplicateEdge(id.to_string()));
            }
            let tail = g.intern_vertex(u.as_ref());
            let head = g.intern_vertex(v.as_ref());
            let idx = g.edges.len();
            g.edge_lookup.insert(id.to_string(), idx);
            g.edges.push(Edge {
                id: id.to_string(),
                tail,
                head,
            });
            g.incidence[tail].push(Slot {
                edge: idx,
                end: End::Tail,
            });
            g.incidence[head].push(Slot {
                edge: idx,
                end: End::Head,
            });
        }
        Ok(g)
    }

    fn intern_vertex(&mut self, name: &str) -> usize {
        if let Some(&i) = self.vertex_lookup.get(name) {
            return i;
        }
        let i = self.vertices.len();
        self.vertices.push(name.to_string());
        self.vertex_lookup.insert(name.to_string(), i);
        self.incidence.push(Vec::new());
        i
    }

    /// Parses the line-oriented graph format: `edge <id> <u> <v>` records,
    /// optional `vertex <id>` records for isolated vertices, `#` comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut edges: Vec<(String, String, String)> = Vec::new();
        let mut seen: HashMap<String, usize> = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let format_err = |message: String| Error::Format { line, message };
            match fields.as_slice() {
                ["edge", id, u, v] => {
                    for word in [id, u, v] {
                        if !is_word(word) {
                            return Err(format_err(format!("`{word}` is not an ASCII word")));
                        }
                    }
                    if let Some(prev) = seen.insert(id.to_string(), line) {
                        return Err(format_err(format!(
                            "duplicate edge id `{id}` (first defined on line {prev})"
                        )));
                    }
                    edges.push((id.to_string(), u.to_string(), v.to_string()));
                }
                ["vertex", id] => {
                    if !is_word(id) {
                        return Err(format_err(format!("`{id}` is not an ASCII word")));
                    }
                    vertices.push(id.to_string());
                }
                _ => {
                    return Err(format_err(format!("unrecognised record `{content}`")));
                }
            }
        }
        Self::with_vertices(vertices, edges)
    }

    /// Writes the graph in the format read by [`Graph::parse`]. Isolated
    /// vertices are emitted as `vertex` records.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            if self.valency(v) == 0 {
                out.push_str(&format!("vertex {}\n", self.vertices[v]));
            }
        }
        for e in &self.edges {
            out.push_str(&format!(
                "edge {} {} {}\n",
                e.id, self.vertices[e.tail], self.vertices[e.head]
            ));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertex_lookup.get(name).copied()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edge_lookup.get(id).copied()
    }

    pub fn require_edge(&self, id: &str) -> Result<usize> {
        self.edge_index(id)
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    pub fn require_vertex(&self, name: &str) -> Result<usize> {
        self.vertex(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// Edge slots at `v`, ordered by edge index (a loop appears twice).
    pub fn slots(&self, v: usize) -> &[Slot] {
        &self.incidence[v]
    }

    pub fn valency(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.valency(v) == 1
    }

    pub fn inner_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&v| !self.is_leaf(v))
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).filter(move |&v| self.is_leaf(v))
    }

    pub fn is_leaf_edge(&self, e: usize) -> bool {
        let edge = &self.edges[e];
        self.is_leaf(edge.tail) || self.is_leaf(edge.head)
    }

    /// Every vertex has valency 1 or 3.
    pub fn is_trivalent(&self) -> bool {
        (0..self.vertex_count()).all(|v| matches!(self.valency(v), 1 | 3))
    }

    /// Edges whose connected component consists of that edge alone.
    pub fn is_isolated_edge(&self, e: usize) -> bool {
        let edge = &self.edges[e];
        !edge.is_loop() && self.is_leaf(edge.tail) && self.is_leaf(edge.head)
    }

    /// Component index of every vertex, numbered in order of the lowest
    /// vertex they contain.
    pub fn components(&self) -> (usize, Vec<usize>) {
        self.components_without(None)
    }

    fn components_without(&self, skip: Option<&[bool]>) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut count = 0;
        for start in 0..self.vertex_count() {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for slot in &self.incidence[x] {
                    if skip.is_some_and(|s| s[slot.edge]) {
                        continue;
                    }
                    let y = self.edges[slot.edge].other(x);
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (count, comp)
    }

    /// First Betti number: `|E| - |V| + #components`.
    pub fn betti(&self) -> usize {
        let (c, _) = self.components();
        self.edge_count() + c - self.vertex_count()
    }

    /// An edge lies on a cycle iff it is a loop or removing it keeps its
    /// endpoints connected.
    pub fn is_cycle_edge(&self, e: usize) -> bool {
        self.is_cycle_edge_without(e, &vec![false; self.edge_count()])
    }

    pub(crate) fn is_cycle_edge_without(&self, e: usize, removed: &[bool]) -> bool {
        if removed[e] {
            return false;
        }
        let edge = &self.edges[e];
        if edge.is_loop() {
            return true;
        }
        let mut skip = removed.to_vec();
        skip[e] = true;
        let (_, comp) = self.components_without(Some(&skip));
        comp[edge.tail] == comp[edge.head]
    }

    /// Non-loop edges in edge order.
    pub fn non_loop_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edge_count()).filter(move |&e| !self.edges[e].is_loop())
    }

    pub fn loop_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edge_count()).filter(move |&e| self.edges[e].is_loop())
    }

    /// For a loop at a vertex of valency 3, the unique other edge there.
    pub fn loop_stem(&self, loop_edge: usize) -> Option<usize> {
        let edge = &self.edges[loop_edge];
        if !edge.is_loop() || self.valency(edge.tail) != 3 {
            return None;
        }
        self.incidence[edge.tail]
            .iter()
            .map(|s| s.edge)
            .find(|&e| e != loop_edge)
    }

    pub(crate) fn fresh_vertex_name(&self, base: &str) -> String {
        fresh_name(base, |n| self.vertex_lookup.contains_key(n))
    }

    pub(crate) fn fresh_edge_name(&self, base: &str) -> String {
        fresh_name(base, |n| self.edge_lookup.contains_key(n))
    }
}

pub(crate) fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{base}_{i}"))
        .find(|n| !taken(n))
        .expect("unbounded search")
}

fn is_word(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_graphic() && c != '#')
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_is_a_path() {
        let g = Graph::from_edges([("e", "a", "b")]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_leaf(0) && g.is_leaf(1));
        assert!(g.is_isolated_edge(0));
        assert_eq!(g.betti(), 0);
    }

    #[test]
    fn loop_counts_twice() {
        let g = Graph::from_edges([("e", "a", "a")]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.valency(0), 2);
        assert_eq!(g.betti(), 1);
        assert!(g.is_cycle_edge(0));
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = Graph::from_edges([("e", "a", "b"), ("e", "b", "c")]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge("e".into()));
        let err = Graph::parse("edge e a b\nedge e b c\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }));
    }

    #[test]
    fn theta_graph_betti() {
        let g = Graph::from_edges([("p", "a", "b"), ("q", "a", "b"), ("r", "a", "b")]).unwrap();
        assert_eq!(g.betti(), 2);
        assert!((0..3).all(|e| g.is_cycle_edge(e)));
    }

    #[test]
    fn tree_betti_zero() {
        let g = Graph::from_edges([("1", "c", "x"), ("2", "c", "y"), ("3", "c", "z")]).unwrap();
        assert_eq!(g.betti(), 0);
        assert!(!g.is_cycle_edge(0));
        assert!(g.is_trivalent());
    }

    #[test]
    fn four_vertex_chain_has_abc_slots() {
        // t - u = v - w with a loop at each end: every vertex is trivalent.
        let g = Graph::from_edges([
            ("lt", "t", "t"),
            ("tu", "t", "u"),
            ("uv1", "u", "v"),
            ("uv2", "u", "v"),
            ("vw", "v", "w"),
            ("lw", "w", "w"),
        ])
        .unwrap();
        assert!(g.is_trivalent());
        for v in 0..4 {
            assert_eq!(g.slots(v).len(), 3);
        }
        assert_eq!(g.betti(), 3);
    }

    #[test]
    fn parse_and_print() {
        let text = "# a comment\nedge e a b # trailing\nvertex z\nedge f b b\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.valency(g.vertex("z").unwrap()), 0);
        let again = Graph::parse(&g.to_text()).unwrap();
        assert_eq!(again.edges(), g.edges());
        assert_eq!(again.vertex_count(), 3);
    }

    #[test]
    fn parse_rejects_garbage() {
        let err = Graph::parse("edge a b\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 1, .. }));
    }
}
