//! Structural transforms: vertex splitting, zero-edge removal and
//! suppression of two-valent vertices.

use std::collections::HashSet;

use super::{Graph, Slot};
use crate::error::{Error, Result};
use crate::semigroup::Labelling;

/// Replaces `v` by two vertices joined by a fresh edge: `v'` carries the two
/// slots in `side`, `v''` carries the rest. The Betti number is unchanged
/// and both new vertices have smaller valency than `v`.
pub fn split_vertex(g: &Graph, v: usize, side: [Slot; 2]) -> Result<Graph> {
    let name = g.vertex_name(v).to_string();
    if g.valency(v) < 4 {
        return Err(Error::NotSplittable(name));
    }
    if side[0] == side[1] || side.iter().any(|s| !g.slots(v).contains(s)) {
        return Err(Error::InvalidSide(name));
    }
    let mut taken: HashSet<String> = g.vertex_names().iter().cloned().collect();
    taken.remove(&name);
    let first = super::fresh_name(&format!("{name}'"), |n| taken.contains(n));
    taken.insert(first.clone());
    let second = super::fresh_name(&format!("{name}''"), |n| taken.contains(n));

    let mut vertices: Vec<String> = g.vertex_names().to_vec();
    vertices[v] = first.clone();
    vertices.push(second.clone());
    let rename = |slot: Slot| {
        let x = g.edge(slot.edge).endpoint(slot.end);
        if x != v {
            g.vertex_name(x).to_string()
        } else if side.contains(&slot) {
            first.clone()
        } else {
            second.clone()
        }
    };
    let mut records: Vec<(String, String, String)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| {
            (
                edge.id.clone(),
                rename(Slot { edge: e, end: super::End::Tail }),
                rename(Slot { edge: e, end: super::End::Head }),
            )
        })
        .collect();
    records.push((g.fresh_edge_name(&format!("{name}~")), first.clone(), second.clone()));
    Graph::with_vertices(vertices, records)
}

/// Deletes an edge labelled 0; the labelling is restricted accordingly.
/// Vertices are kept, so a removed leaf edge leaves an isolated vertex.
pub fn remove_zero_edge(g: &Graph, w: &Labelling, e: usize) -> Result<(Graph, Labelling)> {
    if w.get(e) != 0 {
        return Err(Error::NonzeroEdge(g.edge(e).id.clone()));
    }
    let records = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e)
        .map(|(_, edge)| {
            (
                edge.id.clone(),
                g.vertex_name(edge.tail).to_string(),
                g.vertex_name(edge.head).to_string(),
            )
        });
    let graph = Graph::with_vertices(g.vertex_names(), records)?;
    let labels = w
        .labels()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e)
        .map(|(_, &x)| x)
        .collect();
    Ok((graph, Labelling::new(w.degree(), labels)))
}

/// Splits edge `e` in two through a fresh two-valent vertex.
pub fn subdivide(g: &Graph, e: usize) -> Result<Graph> {
    let edge = g.edge(e);
    let mid = g.fresh_vertex_name(&format!("{}_mid", edge.id));
    let mut taken: HashSet<String> = g.edges().iter().map(|x| x.id.clone()).collect();
    let a = super::fresh_name(&format!("{}_a", edge.id), |n| taken.contains(n));
    taken.insert(a.clone());
    let b = super::fresh_name(&format!("{}_b", edge.id), |n| taken.contains(n));
    let mut records = Vec::new();
    for (i, x) in g.edges().iter().enumerate() {
        let (t, h) = (g.vertex_name(x.tail).to_string(), g.vertex_name(x.head).to_string());
        if i == e {
            records.push((a.clone(), t, mid.clone()));
            records.push((b.clone(), mid.clone(), h));
        } else {
            records.push((x.id.clone(), t, h));
        }
    }
    let mut vertices = g.vertex_names().to_vec();
    vertices.push(mid);
    Graph::with_vertices(vertices, records)
}

/// Source edges of every edge of a suppressed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergeMap {
    /// `(new edge id, source edge ids along the merged path)` in new edge order.
    pub entries: Vec<(String, Vec<String>)>,
}

impl MergeMap {
    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|(id, src)| src.len() == 1 && &src[0] == id)
    }

    /// Carries a labelling of the source graph over to the suppressed graph.
    /// Labels along a merged path agree for members, so the first is taken.
    pub fn push_forward(&self, source: &Graph, w: &Labelling) -> Labelling {
        let labels = self
            .entries
            .iter()
            .map(|(_, src)| w.get(source.edge_index(&src[0]).expect("source edge")))
            .collect();
        Labelling::new(w.degree(), labels)
    }

    /// Inverse of [`push_forward`](Self::push_forward).
    pub fn pull_back(&self, source: &Graph, w: &Labelling) -> Labelling {
        let mut labels = vec![0; source.edge_count()];
        for (k, (_, src)) in self.entries.iter().enumerate() {
            for id in src {
                labels[source.edge_index(id).expect("source edge")] = w.get(k);
            }
        }
        Labelling::new(w.degree(), labels)
    }
}

/// Removes every two-valent vertex, merging its two edges into one.
pub fn suppress_two_valent(g: &Graph) -> Result<(Graph, MergeMap)> {
    struct Work {
        id: String,
        tail: usize,
        head: usize,
        chain: Vec<String>,
    }
    let mut edges: Vec<Option<Work>> = g
        .edges()
        .iter()
        .map(|e| {
            Some(Work {
                id: e.id.clone(),
                tail: e.tail,
                head: e.head,
                chain: vec![e.id.clone()],
            })
        })
        .collect();
    let mut alive = vec![true; g.vertex_count()];
    loop {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
        for (i, w) in edges.iter().enumerate() {
            if let Some(w) = w {
                incident[w.tail].push(i);
                incident[w.head].push(i);
            }
        }
        let Some(v) = (0..g.vertex_count()).find(|&v| alive[v] && incident[v].len() == 2) else {
            break;
        };
        let (e1, e2) = (incident[v][0], incident[v][1]);
        if e1 == e2 {
            return Err(Error::DegenerateCycle(g.vertex_name(v).to_string()));
        }
        let second = edges[e2].take().expect("live edge");
        let first = edges[e1].as_mut().expect("live edge");
        let x = if first.tail == v { first.head } else { first.tail };
        let y = if second.tail == v { second.head } else { second.tail };
        // Orient the chain as x -> v -> y.
        if first.head != v {
            first.chain.reverse();
        }
        let mut tail_chain = second.chain;
        if second.tail != v {
            tail_chain.reverse();
        }
        first.chain.extend(tail_chain);
        first.id = format!("{}+{}", first.id, second.id);
        first.tail = x;
        first.head = y;
        alive[v] = false;
    }
    let vertices: Vec<&str> = (0..g.vertex_count())
        .filter(|&v| alive[v])
        .map(|v| g.vertex_name(v))
        .collect();
    let live: Vec<Work> = edges.into_iter().flatten().collect();
    let records = live.iter().map(|w| {
        (
            w.id.clone(),
            g.vertex_name(w.tail).to_string(),
            g.vertex_name(w.head).to_string(),
        )
    });
    let graph = Graph::with_vertices(vertices, records)?;
    let entries = live.iter().map(|w| (w.id.clone(), w.chain.clone())).collect();
    Ok((graph, MergeMap { entries }))
}
