use crate::error::{Error, Result};
use crate::graph::{caterpillar, CaterpillarLayout};
use crate::semigroup::{loop_range, Labelling};

/// Non-loop labels `(leaf, v1, h1, ..., v_g)` and degree of the canonical
/// element on the `g`-caterpillar.
fn canonical_tuple(g: usize) -> (Vec<u32>, u32) {
    if g == 1 {
        return (vec![2], 2);
    }
    if g % 2 == 1 {
        // Extend the even case by one spine vertex carrying only left paths
        // and a loop of stem 0.
        let (mut t, d) = canonical_tuple(g - 1);
        let last = t.pop().expect("nonempty tuple");
        t.extend([last, last, 0]);
        return (t, d);
    }
    let k = g as u32 / 2;
    // Spine vertex j: for odd j, 2k - j left, j right and one straight path;
    // for even j, 2k - j right and j left paths. Its right edge carries
    // j + 1 (odd j) or 2k - j (even j); every vertical edge carries 2k.
    let mut t = vec![2 * k];
    for j in 1..2 * k {
        t.push(2 * k);
        if j + 1 < 2 * k {
            t.push(if j % 2 == 1 { j + 1 } else { 2 * k - j });
        }
    }
    t.push(2 * k);
    (t, 2 * k + 1)
}

/// An indecomposable element on the `g`-caterpillar of degree `g + 1` for
/// even `g` (and `g = 1`), and of degree `g` for odd `g >= 3`. Loops take the
/// smallest admissible label.
pub fn canonical_indecomposable(g: usize) -> Result<Labelling> {
    if g == 0 {
        return Err(Error::Domain("the caterpillar needs g >= 1".into()));
    }
    let graph = caterpillar(g)?;
    let layout = CaterpillarLayout::detect(&graph)?;
    let (tuple, d) = canonical_tuple(g);
    let mut labels = vec![0; graph.edge_count()];
    for (&e, &x) in layout.tuple_edges.iter().zip(&tuple) {
        labels[e] = x;
    }
    for &(o, stem) in &layout.loops {
        labels[o] = *loop_range(labels[stem], d)?.start();
    }
    Ok(Labelling::new(d, labels))
}
