use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semigroup::{enumerate_networks, violation, Labelling, Method, Network, Oracle, TrivalentTest};

/// Writes a tree element as a sum of exactly `d` networks (some possibly
/// empty).
///
/// Trivalent trees are peeled greedily: the first network whose removal
/// leaves a member of degree `d - 1` is taken, which always exists since tree
/// semigroups are generated in degree one. Other trees go through the
/// backtracking search.
pub fn tree_decompose(t: &Graph, w: &Labelling) -> Result<Vec<Network>> {
    if t.betti() != 0 {
        return Err(Error::Precondition("tree_decompose needs a forest".into()));
    }
    if let Some(v) = violation(t, w, Method::Auto)? {
        return Err(Error::NotMember(v));
    }
    let d = w.degree();
    if !t.is_trivalent() {
        let parts = Oracle::new(t)
            .decompose_tree(w.labels(), d)
            .ok_or_else(|| Error::Internal("member without a decomposition".into()))?;
        return Ok(parts.into_iter().map(|s| Network::new(t, s).expect("network")).collect());
    }
    let test = TrivalentTest::new(t)?;
    let networks = enumerate_networks(t);
    let mut residual = w.labels().to_vec();
    let mut parts = Vec::with_capacity(d as usize);
    for k in (0..d).rev() {
        let next = networks.iter().find_map(|n| {
            let edges = n.edges();
            if edges.iter().any(|e| residual[e] == 0) {
                return None;
            }
            let mut rest = residual.clone();
            for e in edges.iter() {
                rest[e] -= 1;
            }
            test.accepts(&rest, k).then_some((*n, rest))
        });
        let (n, rest) = next.ok_or_else(|| Error::Internal("greedy network peeling got stuck".into()))?;
        parts.push(n);
        residual = rest;
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::EdgeSet;

    fn tripod() -> Graph {
        Graph::from_edges([("e1", "c", "x"), ("e2", "c", "y"), ("e3", "c", "z")]).unwrap()
    }

    fn sum(parts: &[Network], n: usize) -> Vec<u32> {
        let mut out = vec![0; n];
        for p in parts {
            for e in p.edges().iter() {
                out[e] += 1;
            }
        }
        out
    }

    #[test]
    fn network_is_its_own_decomposition() {
        let t = tripod();
        let w = Labelling::new(1, vec![1, 0, 1]);
        let parts = tree_decompose(&t, &w).unwrap();
        assert_eq!(parts, vec![Network::new(&t, EdgeSet::from_edges([0, 2])).unwrap()]);
    }

    #[test]
    fn tripod_doubled_path() {
        let t = tripod();
        let parts = tree_decompose(&t, &Labelling::new(2, vec![2, 2, 0])).unwrap();
        let path = Network::new(&t, EdgeSet::from_edges([0, 1])).unwrap();
        assert_eq!(parts, vec![path, path]);
    }

    #[test]
    fn non_members_report_the_condition() {
        let t = tripod();
        let err = tree_decompose(&t, &Labelling::new(2, vec![2, 2, 2])).unwrap_err();
        assert!(matches!(err, Error::NotMember(_)));
    }

    #[test]
    fn non_trivalent_tree() {
        // A 4-star: the centre has valency 4.
        let t = Graph::from_edges([("a", "c", "1"), ("b", "c", "2"), ("x", "c", "3"), ("y", "c", "4")]).unwrap();
        let w = Labelling::new(2, vec![1, 1, 1, 1]);
        let parts = tree_decompose(&t, &w).unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(sum(&parts, 4), vec![1, 1, 1, 1]);
    }
}
