mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use phylosem::generators::Enumerator;
use phylosem::graph::{
    admissible_cut_choices, caterpillar, is_isomorphic, remove_zero_edge, split_vertex, subdivide,
    suppress_two_valent, CaterpillarLayout, Graph, TreeWithPairs,
};
use phylosem::semigroup::{is_network, local_view, member, EdgeSet, Labelling, Method};

use common::{all_labellings, brute_member, connected_graphs, in_lattice};

#[test]
fn catalog_matches_known_counts() {
    // Connected multigraphs with loops, by number of edges.
    let mut counts = [0; 6];
    for g in connected_graphs(6) {
        counts[g.edge_count() - 1] += 1;
    }
    assert_eq!(counts, [2, 4, 11, 30, 95, 328]);
}

#[test]
fn member_matches_definition() {
    for g in connected_graphs(5) {
        for d in 1..=3 {
            for labels in all_labellings(g.edge_count(), d + 1) {
                let w = Labelling::new(d, labels.clone());
                let expected = in_lattice(&g, &labels) && brute_member(&g, &labels, d);
                assert_eq!(member(&g, &w), expected, "{}{w}", g.to_text());
            }
        }
    }
}

#[test]
fn degree_one_members_are_networks() {
    for g in connected_graphs(6) {
        for mask in 0u64..1 << g.edge_count() {
            let s = EdgeSet(mask);
            let w = Labelling::new(1, s.indicator(g.edge_count()));
            assert_eq!(member(&g, &w), is_network(&g, s), "{}{s}", g.to_text());
        }
    }
}

fn closure_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=3).map(|g| caterpillar(g).unwrap()).collect();
    out.extend(connected_graphs(5).into_iter().filter(|g| g.betti() >= 1 && g.edge_count() == 5));
    out
}

#[test]
fn sums_of_members_are_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in closure_graphs() {
        let sampler = Enumerator::new(&g, Method::Auto).unwrap();
        let mut pairs = 0;
        for k in 0..1000 {
            let (d1, d2) = (1 + k % 3, 1 + k / 3 % 3);
            let (Some(a), Some(b)) = (sampler.sample(d1, &mut rng, 10_000), sampler.sample(d2, &mut rng, 10_000))
            else {
                continue;
            };
            assert!(member(&g, &(&a + &b)), "{}{a} + {b}", g.to_text());
            pairs += 1;
        }
        assert!(pairs > 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn caterpillar_local_paths_share_parity(genus in 1usize..=5, d in 1u32..=8, seed in any::<u64>()) {
        let g = caterpillar(genus).unwrap();
        let layout = CaterpillarLayout::detect(&g).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = Enumerator::new(&g, Method::Auto).unwrap().sample(d, &mut rng, 100_000).unwrap();
        for t in &layout.spine {
            let view = local_view(&g, &w, t.vertex).unwrap();
            let deg = view.deg.twice() / 2;
            for p in [view.x, view.y, view.z] {
                prop_assert!(p.is_integer());
                prop_assert_eq!(p.twice() / 2 % 2, deg % 2);
            }
            prop_assert_ne!(deg, 1);
        }
    }
}

#[test]
fn reglued_cut_is_the_graph() {
    for g in connected_graphs(6).into_iter().filter(|g| g.betti() <= 2) {
        for choice in admissible_cut_choices(&g) {
            let cut = TreeWithPairs::cut(&g, Some(&choice)).unwrap();
            assert_eq!(cut.tree.betti(), 0);
            assert_eq!(cut.pairs.len(), g.betti());
            assert!(is_isomorphic(&cut.reglue(), &g), "{}cut {choice:?}", g.to_text());
        }
    }
}

#[test]
fn suppression_forgets_subdivision() {
    for g in connected_graphs(5) {
        let base = suppress_two_valent(&g).map(|(s, _)| s);
        for e in 0..g.edge_count() {
            let again = suppress_two_valent(&subdivide(&g, e).unwrap()).map(|(s, _)| s);
            match (&base, &again) {
                (Ok(a), Ok(b)) => assert!(is_isomorphic(a, b), "{}edge {e}", g.to_text()),
                (Err(_), Err(_)) => {}
                _ => panic!("{}edge {e}: {base:?} vs {again:?}", g.to_text()),
            }
        }
    }
}

#[test]
fn vertex_splitting_keeps_betti() {
    for g in connected_graphs(5) {
        for v in (0..g.vertex_count()).filter(|&v| g.valency(v) >= 4) {
            let slots = g.slots(v);
            for i in 0..slots.len() {
                for j in i + 1..slots.len() {
                    let h = split_vertex(&g, v, [slots[i], slots[j]]).unwrap();
                    assert_eq!(h.betti(), g.betti());
                    assert_eq!(h.edge_count(), g.edge_count() + 1);
                    assert_eq!(h.vertex_count(), g.vertex_count() + 1);
                    let (c, _) = h.components();
                    assert_eq!(c, 1);
                }
            }
        }
    }
}

#[test]
fn removing_a_zero_edge_keeps_membership() {
    for g in connected_graphs(5) {
        for d in 1..=2 {
            for labels in all_labellings(g.edge_count(), d) {
                let w = Labelling::new(d, labels);
                if !member(&g, &w) {
                    continue;
                }
                for e in (0..g.edge_count()).filter(|&e| w.get(e) == 0) {
                    let (h, rest) = remove_zero_edge(&g, &w, e).unwrap();
                    assert!(member(&h, &rest), "{}{w} without edge {e}", g.to_text());
                }
            }
        }
    }
}
