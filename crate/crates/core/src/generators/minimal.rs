use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::semigroup::{violation, Labelling, Method, Oracle, TrivalentTest};

use super::enumerate::Enumerator;

/// Membership test reused across many calls on one graph.
#[derive(Debug, Clone)]
pub(crate) enum Checker {
    Inequalities(TrivalentTest),
    Oracle(Box<Oracle>),
}

impl Checker {
    pub(crate) fn new(g: &Graph, method: Method) -> Result<Self> {
        Ok(match method.resolve(g) {
            Method::Inequalities => Checker::Inequalities(TrivalentTest::new(g)?),
            _ => Checker::Oracle(Box::new(Oracle::new(g))),
        })
    }

    pub(crate) fn contains(&self, labels: &[u32], d: u32) -> bool {
        match self {
            Checker::Inequalities(t) => t.accepts(labels, d),
            Checker::Oracle(o) => o.contains(labels, d),
        }
    }
}

/// Outcome of an indecomposability search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Indecomposable,
    /// Two members of positive degree summing to the input.
    Decomposable(Labelling, Labelling),
}

impl Verdict {
    pub fn is_indecomposable(&self) -> bool {
        matches!(self, Verdict::Indecomposable)
    }
}

/// Searches for a member `γ` of degree `k <= d/2` below `ω` whose complement
/// is a member too.
pub fn is_indecomposable(g: &Graph, w: &Labelling) -> Result<Verdict> {
    is_indecomposable_with(g, w, Method::Auto)
}

pub fn is_indecomposable_with(g: &Graph, w: &Labelling, method: Method) -> Result<Verdict> {
    if let Some(v) = violation(g, w, method)? {
        return Err(Error::NotMember(v));
    }
    let d = w.degree();
    if d == 0 {
        return Err(Error::Domain("the degree-0 element is not a generator".into()));
    }
    let enumerator = Enumerator::new(g, method)?;
    let checker = Checker::new(g, method)?;
    for k in 1..=d / 2 {
        let mut witness = None;
        let _ = enumerator.try_for_each(k, Some(w.labels()), |gamma| {
            let rest: Vec<u32> = w.labels().iter().zip(gamma).map(|(a, b)| a - b).collect();
            if checker.contains(&rest, d - k) {
                witness = Some((Labelling::new(k, gamma.to_vec()), Labelling::new(d - k, rest)));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if let Some((a, b)) = witness {
            return Ok(Verdict::Decomposable(a, b));
        }
    }
    Ok(Verdict::Indecomposable)
}

/// Minimal generators up to some degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub max_degree: u32,
    /// Set when `max_degree >= betti + 1`, which bounds generator degrees.
    pub complete: bool,
    /// Generators of degree `k + 1` at index `k`, sorted.
    pub by_degree: Vec<Vec<Labelling>>,
}

impl GeneratorSet {
    pub fn counts(&self) -> Vec<usize> {
        self.by_degree.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.by_degree.iter().map(Vec::len).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Labelling> {
        self.by_degree.iter().flatten()
    }
}

/// Minimal generators of degree at most `dmax` (default `betti + 1`).
pub fn minimal_generators(g: &Graph, dmax: Option<u32>) -> Result<GeneratorSet> {
    minimal_generators_with(g, dmax, Method::Auto, |_, _| {})
}

/// As [`minimal_generators`], reporting each finished degree to `progress`.
///
/// A member of degree `d` is decomposable exactly when some generator `γ` of
/// degree at most `d/2` lies below it with `ω - γ` a member: any split has a
/// part of degree at most `d/2`, and that part sits above a generator.
pub fn minimal_generators_with<P>(g: &Graph, dmax: Option<u32>, method: Method, mut progress: P) -> Result<GeneratorSet>
where
    P: FnMut(u32, &[Labelling]),
{
    let bound = g.betti() as u32 + 1;
    let max_degree = dmax.unwrap_or(bound);
    let enumerator = Enumerator::new(g, method)?;
    let checker = Checker::new(g, method)?;
    let mut by_degree: Vec<Vec<Labelling>> = Vec::new();
    for d in 1..=max_degree {
        let lower = &by_degree;
        let mut found = enumerator.par_filter_map(d, None, |omega| {
            let decomposable = (1..=d / 2).any(|k| {
                lower[k as usize - 1].iter().any(|gamma| {
                    let gl = gamma.labels();
                    if omega.iter().zip(gl).any(|(a, b)| a < b) {
                        return false;
                    }
                    let rest: Vec<u32> = omega.iter().zip(gl).map(|(a, b)| a - b).collect();
                    checker.contains(&rest, d - k)
                })
            });
            (!decomposable).then(|| Labelling::new(d, omega.to_vec()))
        });
        found.sort_unstable();
        progress(d, &found);
        by_degree.push(found);
    }
    Ok(GeneratorSet { max_degree, complete: max_degree >= bound, by_degree })
}
