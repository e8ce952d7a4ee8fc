//! Structural transforms: cutting to a tree and gluing back, vertex
//! splitting, subdivision and suppression.

use phylosem::graph::{is_isomorphic, split_vertex, subdivide, suppress_two_valent, TreeWithPairs};
use phylosem::{caterpillar, Graph};

fn main() -> phylosem::Result<()> {
    // Two loops and a pendant edge at one five-valent vertex.
    let g = Graph::parse("edge p x v\nedge o1 v v\nedge o2 v v\n")?;

    let cut = TreeWithPairs::cut(&g, None)?;
    print!("cut tree:\n{}", cut.tree.to_text());
    for (lo, hi) in &cut.pairs {
        println!("pair {} ~ {}", cut.tree.edge(*lo).id, cut.tree.edge(*hi).id);
    }
    println!("reglued isomorphic: {}", is_isomorphic(&cut.reglue(), &g));

    // Pull each loop off onto its own vertex.
    let v = g.vertex("v").expect("vertex v");
    let once = split_vertex(&g, v, [g.slots(v)[1], g.slots(v)[2]])?;
    let v2 = once.vertex("v''").expect("second half");
    let o2 = once.edge_index("o2").expect("loop o2");
    let loop_slots: Vec<_> = once.slots(v2).iter().copied().filter(|s| s.edge == o2).collect();
    let twice = split_vertex(&once, v2, [loop_slots[0], loop_slots[1]])?;
    print!("\nafter two splits:\n{}", twice.to_text());
    println!("betti {} -> {}", g.betti(), twice.betti());
    println!("is caterpillar(2): {}", is_isomorphic(&twice, &caterpillar(2)?));

    let (merged, map) = suppress_two_valent(&subdivide(&twice, 0)?)?;
    println!("\nsubdivide then suppress isomorphic: {}", is_isomorphic(&merged, &twice));
    for (id, sources) in map.entries.iter().filter(|(_, s)| s.len() > 1) {
        println!("{id} <- {}", sources.join(" "));
    }
    Ok(())
}
