//! Hilbert function of a few graphs: number of members in each degree.

use phylosem::generators::hilbert;
use phylosem::{caterpillar, Graph};

fn main() -> phylosem::Result<()> {
    let graphs = [
        ("tripod", Graph::from_edges([("e1", "c", "x"), ("e2", "c", "y"), ("e3", "c", "z")])?),
        ("theta", Graph::from_edges([("a", "u", "v"), ("b", "u", "v"), ("c", "u", "v")])?),
        ("caterpillar(1)", caterpillar(1)?),
        ("caterpillar(2)", caterpillar(2)?),
    ];
    for (name, g) in &graphs {
        let values: Vec<String> = (0..=6).map(|d| hilbert(g, d).to_string()).collect();
        println!("{name:>15}: {}", values.join(" "));
    }
    Ok(())
}
