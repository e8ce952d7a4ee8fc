//! Exhaustive isomorphism testing for small multigraphs.
//!
//! Vertices are first partitioned by iterated colour refinement, then every
//! ordering consistent with the partition is tried. The canonical form is the
//! lexicographically smallest sorted edge list. Cost grows with the product of
//! the class factorials, which is fine at a dozen vertices.

use std::collections::BTreeMap;

use super::Graph;

/// Vertex count plus the minimal relabelled, sorted list of edge endpoints.
pub type CanonicalForm = (usize, Vec<(usize, usize)>);

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = (0..n)
        .map(|v| {
            let loops = g.slots(v).iter().filter(|s| g.edge(s.edge).is_loop()).count();
            g.valency(v) * 64 + loops
        })
        .collect();
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g
                    .slots(v)
                    .iter()
                    .map(|s| colour[g.edge(s.edge).other(v)])
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &signatures {
            ranks.entry(s).or_insert(0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i;
        }
        let next: Vec<usize> = signatures.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

fn relabelled(g: &Graph, position: &[usize]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (position[e.tail], position[e.head]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let colour = refine(g);
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colour.iter().enumerate() {
        classes.entry(c).or_default().push(v);
    }
    let orderings: Vec<Vec<Vec<usize>>> = classes.values().map(|c| permutations(c)).collect();
    let mut position = vec![0; g.vertex_count()];
    let mut best: Option<Vec<(usize, usize)>> = None;

    fn walk(
        g: &Graph,
        orderings: &[Vec<Vec<usize>>],
        offset: usize,
        position: &mut [usize],
        best: &mut Option<Vec<(usize, usize)>>,
    ) {
        let Some((first, rest)) = orderings.split_first() else {
            let form = relabelled(g, position);
            if best.as_ref().is_none_or(|b| form < *b) {
                *best = Some(form);
            }
            return;
        };
        for order in first {
            for (i, &v) in order.iter().enumerate() {
                position[v] = offset + i;
            }
            walk(g, rest, offset + order.len(), position, best);
        }
    }

    walk(g, &orderings, 0, &mut position, &mut best);
    (g.vertex_count(), best.unwrap_or_default())
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut va: Vec<usize> = (0..a.vertex_count()).map(|v| a.valency(v)).collect();
    let mut vb: Vec<usize> = (0..b.vertex_count()).map(|v| b.valency(v)).collect();
    va.sort_unstable();
    vb.sort_unstable();
    va == vb && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_path_is_isomorphic() {
        let a = Graph::from_edges([("1", "a", "b"), ("2", "b", "c")]).unwrap();
        let b = Graph::from_edges([("x", "q", "r"), ("y", "p", "q")]).unwrap();
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn path_and_star_differ() {
        let path = Graph::from_edges([("1", "a", "b"), ("2", "b", "c"), ("3", "c", "d")]).unwrap();
        let star = Graph::from_edges([("1", "a", "b"), ("2", "a", "c"), ("3", "a", "d")]).unwrap();
        assert!(!is_isomorphic(&path, &star));
    }

    #[test]
    fn loop_placement_matters() {
        // Loop at the end vs. in the middle of a two-edge path.
        let end = Graph::from_edges([("1", "a", "b"), ("2", "b", "c"), ("o", "c", "c")]).unwrap();
        let mid = Graph::from_edges([("1", "a", "b"), ("2", "b", "c"), ("o", "b", "b")]).unwrap();
        assert!(!is_isomorphic(&end, &mid));
    }

    #[test]
    fn cycle_orderings_agree() {
        let a = Graph::from_edges([("1", "a", "b"), ("2", "b", "c"), ("3", "c", "d"), ("4", "d", "a")]).unwrap();
        let b = Graph::from_edges([("1", "a", "c"), ("2", "c", "b"), ("3", "b", "d"), ("4", "d", "a")]).unwrap();
        assert!(is_isomorphic(&a, &b));
    }
}
