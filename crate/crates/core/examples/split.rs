//! Splitting members above degree betti + 1, and the even-degree
//! caterpillar splitter that peels off a degree-2 part.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use phylosem::decompose::{caterpillar_split_even, certificate, split_with_stats, Decomposition};
use phylosem::generators::Enumerator;
use phylosem::semigroup::Method;
use phylosem::caterpillar;

fn main() -> phylosem::Result<()> {
    let g = caterpillar(3)?;
    let sampler = Enumerator::new(&g, Method::Auto)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    let w = sampler.sample(5, &mut rng, 100_000).expect("a member of degree 5");
    println!("omega = {w}");
    let dec = Decomposition::new(&g, &w)?;
    println!("decomposition matrix:\n{}", dec.matrix());
    let (a, b, stats) = split_with_stats(&g, &w)?;
    println!("{} exchanges, {} restarts", stats.exchanges, stats.restarts);
    print!("{}", certificate(&g, &w, &a, &b));

    let w = sampler.sample(8, &mut rng, 100_000).expect("a member of degree 8");
    let (two, rest) = caterpillar_split_even(&g, &w)?;
    println!("\n{w}\n  = {two}\n  + {rest}");
    Ok(())
}
