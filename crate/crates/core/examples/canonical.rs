//! Indecomposable elements of high degree on caterpillars, checked by an
//! exhaustive search for a splitting.

use phylosem::generators::{canonical_indecomposable, is_indecomposable, tuple_text};
use phylosem::caterpillar;

fn main() -> phylosem::Result<()> {
    for genus in 1..=5 {
        let g = caterpillar(genus)?;
        let w = canonical_indecomposable(genus)?;
        let loops: Vec<u32> = g.loop_edges().map(|e| w.get(e)).collect();
        let verdict = is_indecomposable(&g, &w)?;
        println!(
            "g = {genus}: degree {}, tuple {}, loops {}, indecomposable: {}",
            w.degree(),
            tuple_text(&w.non_loop_tuple(&g)),
            tuple_text(&loops),
            verdict.is_indecomposable()
        );
    }
    Ok(())
}
