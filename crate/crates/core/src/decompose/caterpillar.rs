use crate::error::{Error, Result};
use crate::graph::{CaterpillarLayout, Graph};
use crate::semigroup::{Labelling, LocalView, TrivalentTest};

/// Splits a member of even degree `d >= 6` on a caterpillar graph into a
/// degree-2 part and a degree-`(d - 2)` remainder.
///
/// The degree-2 part is built from left to right along the spine. Its label
/// on each right edge is 2 when the member's label there exceeds `d/2`, 0 when
/// it is below, and chosen by the local path counts at `d/2`: with 2 coming
/// in, two left paths allow 0, else two straight paths give 2; with 0 coming
/// in, 0 is kept while the vertex carries at most `d - 2` paths, else two right
/// paths give 2. Loops get 1 above a stem labelled 2, and otherwise just
/// enough single loops to bring the vertex down to `d - 2` paths.
pub fn caterpillar_split_even(g: &Graph, w: &Labelling) -> Result<(Labelling, Labelling)> {
    w.check_graph(g)?;
    let d = w.degree();
    if d % 2 == 1 || d < 6 {
        return Err(Error::Precondition(format!("need an even degree of at least 6, got {d}")));
    }
    let layout = CaterpillarLayout::detect(g)?;
    let test = TrivalentTest::new(g)?;
    if let Some(v) = test.first_violation(g, w.labels(), d) {
        return Err(Error::NotMember(v));
    }
    let half = d / 2;
    let mut part = vec![0u32; g.edge_count()];
    part[layout.leaf_edge] = if w.get(layout.leaf_edge) > half { 2 } else { 0 };
    for tv in &layout.spine {
        let (a, b, c) = (w.get(tv.left), w.get(tv.right), w.get(tv.vertical));
        let view = LocalView::new(a, b, c);
        let two = |h: crate::semigroup::HalfInt| h.twice() >= 4;
        let a_part = part[tv.left];
        let b_part = if b > half {
            2
        } else if b < half {
            0
        } else if a_part == 2 {
            if two(view.y) {
                0
            } else {
                2
            }
        } else if view.deg.twice() <= 2 * i64::from(d - 2) {
            0
        } else {
            2
        };
        part[tv.right] = b_part;
        part[tv.vertical] = if a_part == b_part { 0 } else { 2 };
    }
    for &(o, stem) in &layout.loops {
        part[o] = if part[stem] == 2 {
            1
        } else {
            // deg at the loop vertex is o + c/2.
            (w.get(o) + w.get(stem) / 2 + 2).saturating_sub(d)
        };
    }
    let first = Labelling::new(2, part);
    let second = w
        .checked_sub(&first)
        .ok_or_else(|| Error::Internal("degree-2 part exceeds the member".into()))?;
    if !test.accepts(first.labels(), 2) || !test.accepts(second.labels(), d - 2) {
        return Err(Error::Internal("caterpillar split produced a non-member".into()));
    }
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::caterpillar;
    use crate::semigroup::member;

    #[test]
    fn caterpillar_two_degree_six() {
        let g = caterpillar(2).unwrap();
        let w = Labelling::from_pairs(&g, 6, &[("l", 6), ("v1", 6), ("o1", 3)]).unwrap();
        let (a, b) = caterpillar_split_even(&g, &w).unwrap();
        assert_eq!(a, Labelling::from_pairs(&g, 2, &[("l", 2), ("v1", 2), ("o1", 1)]).unwrap());
        assert_eq!(b.degree(), 4);
        assert!(member(&g, &a) && member(&g, &b));
    }

    #[test]
    fn caterpillar_three_degree_eight() {
        let g = caterpillar(3).unwrap();
        let w = Labelling::from_pairs(
            &g,
            4,
            &[("l", 2), ("v1", 2), ("h1", 2), ("v2", 2), ("v3", 4), ("o1", 1), ("o2", 1), ("o3", 2)],
        )
        .unwrap()
        .scaled(2);
        let (a, b) = caterpillar_split_even(&g, &w).unwrap();
        assert_eq!(&a + &b, w);
        assert!(member(&g, &a) && member(&g, &b));
    }

    #[test]
    fn preconditions() {
        let g = caterpillar(3).unwrap();
        let w = Labelling::from_pairs(
            &g,
            4,
            &[("l", 2), ("v1", 2), ("h1", 2), ("v2", 2), ("v3", 4), ("o1", 1), ("o2", 1), ("o3", 2)],
        )
        .unwrap();
        assert!(matches!(caterpillar_split_even(&g, &w), Err(Error::Precondition(_))));
        let tripod = Graph::from_edges([("1", "c", "x"), ("2", "c", "y"), ("3", "c", "z")]).unwrap();
        let z = Labelling::zero(&tripod, 6);
        assert!(matches!(caterpillar_split_even(&tripod, &z), Err(Error::UnsupportedGraph(_))));
    }
}
