//! Minimal generators of the g-caterpillar, grouped by degree and non-loop
//! labels. Pass the genus as the first argument (default 3).

use std::time::Instant;

use phylosem::generators::{format_counts, format_table, minimal_generators_with, records};
use phylosem::semigroup::Method;
use phylosem::caterpillar;

fn main() -> phylosem::Result<()> {
    let genus: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let g = caterpillar(genus)?;
    let start = Instant::now();
    let set = minimal_generators_with(&g, None, Method::Auto, |d, found| {
        eprintln!("degree {d}: {} generators ({:.1?})", found.len(), start.elapsed());
    })?;
    print!("{}", format_table(&records(&g, &set)?));
    print!("\n{}", format_counts(&set));
    Ok(())
}
