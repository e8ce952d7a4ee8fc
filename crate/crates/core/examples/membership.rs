//! Membership on a trivalent graph of genus 2 with two leaves, by the vertex
//! inequalities and by decomposing the lift to a cut tree.

use phylosem::semigroup::{violation, Labelling, Method};
use phylosem::Graph;

fn main() -> phylosem::Result<()> {
    let g = Graph::parse(
        "edge l1 x u\n\
         edge a u v\n\
         edge b u w\n\
         edge c v w\n\
         edge d v z\n\
         edge e w z\n\
         edge l2 z y\n",
    )?;
    println!("betti = {}, trivalent = {}", g.betti(), g.is_trivalent());

    let cases = [
        // a leaf-to-leaf path
        "degree 1\nl1 1\na 1\nd 1\nl2 1\n",
        // a cycle
        "degree 1\na 1\nb 1\nc 1\n",
        // path plus a cycle through d: too crowded at degree 1, fine at 2
        "degree 1\nl1 1\na 1\nc 1\nd 2\ne 1\nl2 1\n",
        "degree 2\nl1 1\na 1\nc 1\nd 2\ne 1\nl2 1\n",
        // odd at u
        "degree 3\nl1 1\n",
    ];
    for text in cases {
        let w = Labelling::parse(&g, text)?;
        for method in [Method::Inequalities, Method::Decompose] {
            match violation(&g, &w, method)? {
                None => println!("{w} [{method:?}]: member"),
                Some(v) => println!("{w} [{method:?}]: not a member, {v}"),
            }
        }
    }
    Ok(())
}
