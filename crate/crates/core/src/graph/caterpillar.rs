use super::Graph;
use crate::error::{Error, Result};

/// The `g`-caterpillar: a caterpillar tree with `g + 1` leaves and a loop
/// attached to every leaf but the leftmost one.
///
/// Edges come in canonical order: the leaf edge `l`, then for every spine
/// vertex `u_i` its vertical edge `v_i` followed by the horizontal edge `h_i`
/// to the next spine vertex; the last spine vertex carries `v_{g-1}` and the
/// rightmost edge `v_g`. Loops `o_1..o_g` come last, `o_i` sitting at the far
/// end of `v_i`. For `g = 1` the graph is just `l` and `o1`.
pub fn caterpillar(g: usize) -> Result<Graph> {
    if g == 0 {
        return Err(Error::Domain("the caterpillar needs g >= 1".into()));
    }
    let mut edges: Vec<(String, String, String)> = Vec::new();
    if g == 1 {
        edges.push(("l".into(), "x".into(), "w1".into()));
    } else {
        edges.push(("l".into(), "x".into(), "u1".into()));
        for i in 1..g {
            edges.push((format!("v{i}"), format!("u{i}"), format!("w{i}")));
            if i + 1 < g {
                edges.push((format!("h{i}"), format!("u{i}"), format!("u{}", i + 1)));
            }
        }
        edges.push((format!("v{g}"), format!("u{}", g - 1), format!("w{g}")));
    }
    for i in 1..=g {
        edges.push((format!("o{i}"), format!("w{i}"), format!("w{i}")));
    }
    Graph::from_edges(edges)
}

/// A spine vertex of a caterpillar with its left, right and vertical edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeVertex {
    pub vertex: usize,
    pub left: usize,
    pub right: usize,
    pub vertical: usize,
}

/// Structural description of a graph recognised as a `g`-caterpillar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarLayout {
    pub genus: usize,
    pub leaf_edge: usize,
    /// Spine vertices from left to right.
    pub spine: Vec<TreeVertex>,
    /// `(loop, stem)` pairs from left to right.
    pub loops: Vec<(usize, usize)>,
    /// Non-loop edges in canonical (left to right) order.
    pub tuple_edges: Vec<usize>,
}

impl CaterpillarLayout {
    /// Recognises a caterpillar by walking the spine from its unique leaf.
    pub fn detect(g: &Graph) -> Result<Self> {
        let bad = |why: &str| Error::UnsupportedGraph(format!("not a caterpillar graph: {why}"));
        if !g.is_trivalent() {
            return Err(bad("not trivalent"));
        }
        let leaves: Vec<usize> = g.leaves().collect();
        if leaves.len() != 1 {
            return Err(bad("expected exactly one leaf"));
        }
        let loop_at = |v: usize| g.slots(v).iter().map(|s| s.edge).find(|&e| g.edge(e).is_loop());
        let x = leaves[0];
        let leaf_edge = g.slots(x)[0].edge;
        let mut spine = Vec::new();
        let mut verticals = Vec::new();
        let mut prev = leaf_edge;
        let mut cur = g.edge(leaf_edge).other(x);
        if loop_at(cur).is_some() {
            verticals.push(leaf_edge);
        } else {
            loop {
                if spine.len() > g.vertex_count() {
                    return Err(bad("spine does not terminate"));
                }
                let others: Vec<usize> = g
                    .slots(cur)
                    .iter()
                    .map(|s| s.edge)
                    .filter(|&e| e != prev)
                    .collect();
                if others.len() != 2 || others.iter().any(|&e| g.edge(e).is_loop()) {
                    return Err(bad("spine vertex with a loop or a repeated edge"));
                }
                let ends: Vec<usize> = others.iter().map(|&e| g.edge(e).other(cur)).collect();
                let to_loop: Vec<bool> = ends.iter().map(|&v| loop_at(v).is_some()).collect();
                match (to_loop[0], to_loop[1]) {
                    (true, true) => {
                        let (vertical, right) = (others[0].min(others[1]), others[0].max(others[1]));
                        spine.push(TreeVertex { vertex: cur, left: prev, right, vertical });
                        verticals.push(vertical);
                        verticals.push(right);
                        break;
                    }
                    (true, false) | (false, true) => {
                        let (vi, ri) = if to_loop[0] { (0, 1) } else { (1, 0) };
                        spine.push(TreeVertex {
                            vertex: cur,
                            left: prev,
                            right: others[ri],
                            vertical: others[vi],
                        });
                        verticals.push(others[vi]);
                        prev = others[ri];
                        cur = ends[ri];
                    }
                    (false, false) => return Err(bad("spine vertex without a loop branch")),
                }
            }
        }
        let mut loops = Vec::new();
        for &stem in &verticals {
            let edge = g.edge(stem);
            let w = if loop_at(edge.head).is_some() { edge.head } else { edge.tail };
            let o = loop_at(w).ok_or_else(|| bad("vertical edge without loop"))?;
            loops.push((o, stem));
        }
        let genus = loops.len();
        if g.edge_count() != 3 * genus - 1 || g.vertex_count() != 2 * genus {
            return Err(bad("extra edges or vertices"));
        }
        let mut tuple_edges = vec![leaf_edge];
        for tv in &spine {
            tuple_edges.push(tv.vertical);
            tuple_edges.push(tv.right);
        }
        Ok(CaterpillarLayout {
            genus,
            leaf_edge,
            spine,
            loops,
            tuple_edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(g: &Graph, edges: &[usize]) -> Vec<String> {
        edges.iter().map(|&e| g.edge(e).id.clone()).collect()
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(caterpillar(0), Err(Error::Domain(_))));
    }

    #[test]
    fn genus_one() {
        let g = caterpillar(1).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.non_loop_edges().count(), 1);
        assert_eq!(g.loop_edges().count(), 1);
        assert_eq!(g.betti(), 1);
        assert!(g.is_trivalent());
    }

    #[test]
    fn genus_two_order() {
        let g = caterpillar(2).unwrap();
        let nl: Vec<usize> = g.non_loop_edges().collect();
        assert_eq!(ids(&g, &nl), ["l", "v1", "v2"]);
        assert_eq!(g.betti(), 2);
        assert!(g.is_trivalent());
    }

    #[test]
    fn genus_four_order() {
        let g = caterpillar(4).unwrap();
        let nl: Vec<usize> = g.non_loop_edges().collect();
        assert_eq!(ids(&g, &nl), ["l", "v1", "h1", "v2", "h2", "v3", "v4"]);
        assert_eq!(g.loop_edges().count(), 4);
        assert_eq!(g.betti(), 4);
    }

    #[test]
    fn layout_matches_construction() {
        for genus in 1..=6 {
            let g = caterpillar(genus).unwrap();
            let layout = CaterpillarLayout::detect(&g).unwrap();
            assert_eq!(layout.genus, genus);
            assert_eq!(layout.tuple_edges, g.non_loop_edges().collect::<Vec<_>>());
            let loop_ids: Vec<String> = layout.loops.iter().map(|&(o, _)| g.edge(o).id.clone()).collect();
            let expect: Vec<String> = (1..=genus).map(|i| format!("o{i}")).collect();
            assert_eq!(loop_ids, expect);
            assert_eq!(layout.spine.len(), genus.saturating_sub(1));
        }
    }

    #[test]
    fn layout_rejects_other_graphs() {
        let tripod = Graph::from_edges([("1", "c", "x"), ("2", "c", "y"), ("3", "c", "z")]).unwrap();
        assert!(CaterpillarLayout::detect(&tripod).is_err());
    }
}
