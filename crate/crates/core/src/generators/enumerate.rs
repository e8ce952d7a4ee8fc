use std::ops::ControlFlow;

use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semigroup::{Labelling, Method, Oracle};

/// Condition checked when an edge closes a vertex (all its slots assigned).
#[derive(Debug, Clone)]
enum Constraint {
    /// Trivalent vertex; the other two slots carry these edges.
    Triangle(usize, usize),
    /// Trivalent vertex closed by its loop; the stem is the third slot.
    Loop(usize),
    /// Even vertex sum. `single` tells whether the closing edge occupies one
    /// slot (and so fixes its own parity) or two (a loop, which cannot).
    Parity { others: Vec<usize>, single: bool },
}

/// Depth-first enumeration of the degree-`d` part of a graph's semigroup.
///
/// Edges are assigned in a traversal order so vertices close early. When an
/// edge closes a vertex its admissible labels form an interval of fixed
/// parity. On trivalent graphs the local conditions are exact and every
/// complete labelling reached is a member; elsewhere closing a vertex only
/// enforces parity and complete labellings go through the decomposition
/// oracle.
#[derive(Debug, Clone)]
pub struct Enumerator {
    order: Vec<usize>,
    constraints: Vec<Vec<Constraint>>,
    oracle: Option<Box<Oracle>>,
    edge_count: usize,
}

/// `(lo, hi, step)` with `lo` of the right parity.
type Range = (u32, u32, u32);

impl Enumerator {
    pub fn new(g: &Graph, method: Method) -> Result<Self> {
        let method = method.resolve(g);
        let exact = method == Method::Inequalities;
        if exact && !g.is_trivalent() {
            return Err(Error::UnsupportedGraph("the inequality test needs a trivalent graph".into()));
        }
        let order = traversal_order(g);
        let mut position = vec![0; g.edge_count()];
        for (p, &e) in order.iter().enumerate() {
            position[e] = p;
        }
        let mut constraints = vec![Vec::new(); order.len()];
        for v in g.inner_vertices() {
            let slots: Vec<usize> = g.slots(v).iter().map(|s| s.edge).collect();
            let Some(&last) = slots.iter().max_by_key(|&&e| position[e]) else {
                continue;
            };
            let others: Vec<usize> = slots.iter().copied().filter(|&e| e != last).collect();
            let single = slots.len() - others.len() == 1;
            let c = match (exact, single) {
                (true, true) => Constraint::Triangle(others[0], others[1]),
                (true, false) => Constraint::Loop(others[0]),
                (false, _) => Constraint::Parity { others, single },
            };
            constraints[position[last]].push(c);
        }
        let oracle = (!exact).then(|| Box::new(Oracle::new(g)));
        Ok(Enumerator { order, constraints, oracle, edge_count: g.edge_count() })
    }

    /// Whether complete labellings are members without a final check.
    pub fn is_exact(&self) -> bool {
        self.oracle.is_none()
    }

    fn range(&self, pos: usize, labels: &[u32], d: u32, cap: u32) -> Option<Range> {
        let (mut lo, mut hi) = (0u32, cap.min(d));
        let mut parity: Option<u32> = None;
        for c in &self.constraints[pos] {
            let want = match c {
                Constraint::Triangle(p, q) => {
                    let (a, b) = (labels[*p], labels[*q]);
                    if a + b > 2 * d {
                        return None;
                    }
                    lo = lo.max(a.abs_diff(b));
                    hi = hi.min(a + b).min(2 * d - a - b);
                    Some((a + b) % 2)
                }
                Constraint::Loop(stem) => {
                    let c = labels[*stem];
                    if c % 2 == 1 || c / 2 > d {
                        return None;
                    }
                    lo = lo.max(c / 2);
                    hi = hi.min(d - c / 2);
                    None
                }
                Constraint::Parity { others, single } => {
                    let s = others.iter().map(|&f| labels[f]).sum::<u32>() % 2;
                    if !single && s == 1 {
                        return None;
                    }
                    single.then_some(s)
                }
            };
            if let Some(p) = want {
                if parity.is_some_and(|q| q != p) {
                    return None;
                }
                parity = Some(p);
            }
        }
        match parity {
            Some(p) => {
                if lo % 2 != p {
                    lo += 1;
                }
                (lo <= hi).then_some((lo, hi, 2))
            }
            None => (lo <= hi).then_some((lo, hi, 1)),
        }
    }

    fn accept(&self, labels: &[u32], d: u32) -> bool {
        self.oracle.as_ref().is_none_or(|o| o.contains(labels, d))
    }

    /// Visits positions `pos..end`. At `end == order.len()` complete members
    /// are reported; otherwise every consistent prefix is.
    fn walk<F>(&self, pos: usize, end: usize, labels: &mut [u32], d: u32, caps: &[u32], f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        if pos == end {
            if end < self.order.len() || self.accept(labels, d) {
                return f(labels);
            }
            return ControlFlow::Continue(());
        }
        let e = self.order[pos];
        if let Some((lo, hi, step)) = self.range(pos, labels, d, caps[e]) {
            let mut x = lo;
            while x <= hi {
                labels[e] = x;
                self.walk(pos + 1, end, labels, d, caps, f)?;
                x += step;
            }
        }
        labels[e] = 0;
        ControlFlow::Continue(())
    }

    fn caps(&self, d: u32, upper: Option<&[u32]>) -> Vec<u32> {
        match upper {
            Some(u) => {
                assert_eq!(u.len(), self.edge_count);
                u.iter().map(|&x| x.min(d)).collect()
            }
            None => vec![d; self.edge_count],
        }
    }

    /// Calls `f` on every member of degree `d` dominated by `upper` (all
    /// members when `None`) until it breaks. Visiting order is deterministic.
    pub fn try_for_each<F>(&self, d: u32, upper: Option<&[u32]>, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&[u32]) -> ControlFlow<()>,
    {
        let caps = self.caps(d, upper);
        let mut labels = vec![0; self.edge_count];
        self.walk(0, self.order.len(), &mut labels, d, &caps, &mut f)
    }

    pub fn for_each<F: FnMut(&[u32])>(&self, d: u32, upper: Option<&[u32]>, mut f: F) {
        let _ = self.try_for_each(d, upper, |l| {
            f(l);
            ControlFlow::Continue(())
        });
    }

    /// Prefixes of the search tree deep enough to keep all threads busy.
    fn prefixes(&self, d: u32, caps: &[u32]) -> (usize, Vec<Vec<u32>>) {
        let target = 8 * rayon::current_num_threads().max(1);
        let mut depth = 0;
        let mut prefixes = vec![vec![0; self.edge_count]];
        while depth < self.order.len() && prefixes.len() < target {
            let mut next = Vec::new();
            for mut p in prefixes {
                let _ = self.walk(depth, depth + 1, &mut p, d, caps, &mut |l: &[u32]| {
                    next.push(l.to_vec());
                    ControlFlow::Continue(())
                });
            }
            prefixes = next;
            depth += 1;
        }
        (depth, prefixes)
    }

    /// Maps every member through `f` in parallel, keeping the `Some` results
    /// in the sequential visiting order.
    pub fn par_filter_map<T, F>(&self, d: u32, upper: Option<&[u32]>, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&[u32]) -> Option<T> + Sync,
    {
        let caps = self.caps(d, upper);
        let (depth, prefixes) = self.prefixes(d, &caps);
        if depth == self.order.len() {
            return prefixes
                .iter()
                .filter(|p| self.accept(p, d))
                .filter_map(|p| f(p))
                .collect();
        }
        let chunks: Vec<Vec<T>> = prefixes
            .into_par_iter()
            .map(|mut p| {
                let mut out = Vec::new();
                let _ = self.walk(depth, self.order.len(), &mut p, d, &caps, &mut |l: &[u32]| {
                    if let Some(t) = f(l) {
                        out.push(t);
                    }
                    ControlFlow::Continue(())
                });
                out
            })
            .collect();
        chunks.into_iter().flatten().collect()
    }

    /// A random member of degree `d`: labels are drawn uniformly from each
    /// admissible interval along the traversal, restarting on dead ends. The
    /// distribution is not uniform over members.
    pub fn sample<R: Rng + ?Sized>(&self, d: u32, rng: &mut R, attempts: usize) -> Option<Labelling> {
        let caps = self.caps(d, None);
        'attempt: for _ in 0..attempts {
            let mut labels = vec![0; self.edge_count];
            for (pos, &e) in self.order.iter().enumerate() {
                let Some((lo, hi, step)) = self.range(pos, &labels, d, caps[e]) else {
                    continue 'attempt;
                };
                labels[e] = lo + step * rng.gen_range(0..=(hi - lo) / step);
            }
            if self.accept(&labels, d) {
                return Some(Labelling::new(d, labels));
            }
        }
        None
    }

    /// Number of members of degree `d`.
    pub fn count(&self, d: u32) -> u64 {
        let caps = self.caps(d, None);
        let (depth, prefixes) = self.prefixes(d, &caps);
        if depth == self.order.len() {
            return prefixes.iter().filter(|p| self.accept(p, d)).count() as u64;
        }
        prefixes
            .into_par_iter()
            .map(|mut p| {
                let mut n = 0u64;
                let _ = self.walk(depth, self.order.len(), &mut p, d, &caps, &mut |_: &[u32]| {
                    n += 1;
                    ControlFlow::Continue(())
                });
                n
            })
            .sum()
    }

    /// All members of degree `d` dominated by `upper`, sorted.
    pub fn collect(&self, d: u32, upper: Option<&[u32]>) -> Vec<Labelling> {
        let mut out = self.par_filter_map(d, upper, |l| Some(Labelling::new(d, l.to_vec())));
        out.sort_unstable();
        out
    }
}

/// Edge order of a depth-first traversal from vertex 0; each visited vertex
/// lists its not yet ordered edges in slot order. Covers every component.
fn traversal_order(g: &Graph) -> Vec<usize> {
    let mut seen_v = vec![false; g.vertex_count()];
    let mut seen_e = vec![false; g.edge_count()];
    let mut order = Vec::with_capacity(g.edge_count());
    for root in 0..g.vertex_count() {
        if seen_v[root] {
            continue;
        }
        let mut stack = vec![root];
        seen_v[root] = true;
        while let Some(v) = stack.pop() {
            let mut next = Vec::new();
            for s in g.slots(v) {
                if seen_e[s.edge] {
                    continue;
                }
                seen_e[s.edge] = true;
                order.push(s.edge);
                let w = g.edge(s.edge).other(v);
                if !seen_v[w] {
                    seen_v[w] = true;
                    next.push(w);
                }
            }
            stack.extend(next.into_iter().rev());
        }
    }
    order
}

/// All members of degree `d`, sorted by labels in edge order.
pub fn enumerate_degree(g: &Graph, d: u32) -> Vec<Labelling> {
    Enumerator::new(g, Method::Auto)
        .expect("automatic method always applies")
        .collect(d, None)
}

/// Members of degree `d` dominated edgewise by `upper`.
pub fn enumerate_dominated(g: &Graph, d: u32, upper: &[u32]) -> Vec<Labelling> {
    Enumerator::new(g, Method::Auto)
        .expect("automatic method always applies")
        .collect(d, Some(upper))
}

/// Value of the Hilbert function: the number of members of degree `d`.
pub fn hilbert(g: &Graph, d: u32) -> u64 {
    Enumerator::new(g, Method::Auto)
        .expect("automatic method always applies")
        .count(d)
}
