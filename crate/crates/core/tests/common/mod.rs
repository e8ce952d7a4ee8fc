//! Shared fixtures for the integration suites.
#![allow(dead_code)]

use std::collections::HashSet;

use phylosem::graph::{canonical_form, Graph, TreeWithPairs};

/// Builds a graph on vertices `v0..` with edges `e0..` in the given order.
pub fn graph_from(n: usize, edges: &[(usize, usize)]) -> Graph {
    let vertices: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    let records: Vec<(String, String, String)> = edges
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| (format!("e{k}"), vertices[a].clone(), vertices[b].clone()))
        .collect();
    Graph::with_vertices(vertices, records).unwrap()
}

/// Connected multigraphs (loops allowed) with between 1 and `max_edges`
/// edges, one per isomorphism class, grouped by edge count. Every such graph
/// arises from a smaller one by adding an edge between existing vertices or a
/// pendant edge to a new vertex.
pub fn connected_graphs(max_edges: usize) -> Vec<Graph> {
    let mut layer: Vec<(usize, Vec<(usize, usize)>)> = vec![(1, vec![])];
    let mut out = Vec::new();
    for _ in 0..max_edges {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (n, edges) in &layer {
            let mut extend = |n: usize, e: (usize, usize)| {
                let mut edges = edges.clone();
                edges.push(e);
                let g = graph_from(n, &edges);
                if seen.insert(canonical_form(&g)) {
                    next.push((n, edges));
                    out.push(g);
                }
            };
            for a in 0..*n {
                for b in a..*n {
                    extend(*n, (a, b));
                }
                extend(n + 1, (a, *n));
            }
        }
        layer = next;
    }
    out
}

/// Every labelling with entries in `0..=max`, in lexicographic order.
pub fn all_labellings(edges: usize, max: u32) -> impl Iterator<Item = Vec<u32>> {
    let base = u64::from(max) + 1;
    let total = base.pow(edges as u32);
    (0..total).map(move |mut k| {
        let mut labels = vec![0; edges];
        for x in labels.iter_mut().rev() {
            *x = (k % base) as u32;
            k /= base;
        }
        labels
    })
}

/// Inner-vertex slot sums are even; a loop fills two slots.
pub fn in_lattice(g: &Graph, labels: &[u32]) -> bool {
    g.inner_vertices()
        .all(|v| g.slots(v).iter().map(|s| labels[s.edge]).sum::<u32>() % 2 == 0)
}

/// The vertex inequalities of a trivalent graph, written out directly.
pub fn trivalent_member(g: &Graph, labels: &[u32], d: u32) -> bool {
    assert!(g.is_trivalent());
    labels.iter().all(|&x| x <= d)
        && g.inner_vertices().all(|v| {
            let s = g.slots(v);
            let (a, b, c) = (labels[s[0].edge], labels[s[1].edge], labels[s[2].edge]);
            (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b && a + b + c <= 2 * d
        })
}

/// Indicators of all networks of a tree, by brute force over edge subsets.
pub fn tree_networks(t: &Graph) -> Vec<Vec<u32>> {
    let m = t.edge_count();
    assert!(m <= 20);
    (0u32..1 << m)
        .map(|mask| (0..m).map(|e| mask >> e & 1).collect::<Vec<u32>>())
        .filter(|ind| in_lattice(t, ind))
        .collect()
}

/// Membership straight from the definition: the lift to the default cut
/// tree is a sum of `d` tree networks. Plain memoised search.
pub fn brute_member(g: &Graph, labels: &[u32], d: u32) -> bool {
    let cut = TreeWithPairs::cut(g, None).unwrap();
    let lifted = cut.lift(labels);
    let nets = tree_networks(&cut.tree);
    let mut failed = HashSet::new();
    fn search(
        nets: &[Vec<u32>],
        start: usize,
        k: u32,
        rest: &mut Vec<u32>,
        failed: &mut HashSet<(usize, u32, Vec<u32>)>,
    ) -> bool {
        if k == 0 {
            return rest.iter().all(|&x| x == 0);
        }
        if rest.iter().any(|&x| x > k) || failed.contains(&(start, k, rest.clone())) {
            return false;
        }
        for i in start..nets.len() {
            if nets[i].iter().zip(rest.iter()).all(|(n, r)| n <= r) {
                for (r, n) in rest.iter_mut().zip(&nets[i]) {
                    *r -= n;
                }
                let ok = search(nets, i, k - 1, rest, failed);
                for (r, n) in rest.iter_mut().zip(&nets[i]) {
                    *r += n;
                }
                if ok {
                    return true;
                }
            }
        }
        failed.insert((start, k, rest.clone()));
        false
    }
    let mut rest = lifted;
    search(&nets, 0, d, &mut rest, &mut failed)
}
