//! The parity lattice, labellings, networks and membership in the semigroup.
//!
//! A labelling belongs to the semigroup of a graph when its lift to a cut tree
//! is a sum of `d` networks of the tree. For trivalent graphs this is
//! equivalent to local conditions at every inner vertex (parity, triangle
//! inequalities, at most `d` paths through the vertex), which is the fast path.
//! Loops are counted twice in every vertex sum.

mod labelling;
mod local;
mod membership;
mod network;

pub use labelling::Labelling;
pub use local::{local_view, HalfInt, LocalView};
pub use membership::{
    contains, in_parity_lattice, loop_range, member, member_trivalent, member_with_cut,
    vertex_admissible, violation, Method, Oracle, TrivalentTest, Violation,
};
pub use network::{enumerate_networks, is_network, network_sum_mod2, EdgeSet, Network};
