use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// An element of the graded lattice: a degree plus a nonnegative label per
/// edge, stored densely in the graph's edge order.
///
/// Labellings order by degree first, then lexicographically by labels, which
/// for caterpillar graphs is the canonical left-to-right tuple order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Labelling {
    degree: u32,
    labels: Vec<u32>,
}

impl Labelling {
    pub fn new(degree: u32, labels: Vec<u32>) -> Self {
        Labelling { degree, labels }
    }

    pub fn zero(g: &Graph, degree: u32) -> Self {
        Labelling::new(degree, vec![0; g.edge_count()])
    }

    /// Builds a labelling from `(edge-id, value)` pairs; omitted edges are 0.
    pub fn from_pairs(g: &Graph, degree: u32, pairs: &[(&str, u32)]) -> Result<Self> {
        let mut labels = vec![0; g.edge_count()];
        for &(id, value) in pairs {
            labels[g.require_edge(id)?] = value;
        }
        Ok(Labelling::new(degree, labels))
    }

    /// Indicator of an edge set, in degree 1.
    pub fn indicator(g: &Graph, edges: impl IntoIterator<Item = usize>) -> Self {
        let mut labels = vec![0; g.edge_count()];
        for e in edges {
            labels[e] = 1;
        }
        Labelling::new(1, labels)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn get(&self, e: usize) -> u32 {
        self.labels[e]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// All labels vanish (the degree may be anything).
    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&x| x == 0)
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.labels.len() != g.edge_count() {
            return Err(Error::LabelCount {
                expected: g.edge_count(),
                found: self.labels.len(),
            });
        }
        Ok(())
    }

    /// Edgewise and degreewise `self >= other`.
    pub fn dominates(&self, other: &Labelling) -> bool {
        self.degree >= other.degree && self.labels.iter().zip(&other.labels).all(|(a, b)| a >= b)
    }

    pub fn checked_sub(&self, other: &Labelling) -> Option<Labelling> {
        if !self.dominates(other) {
            return None;
        }
        let labels = self.labels.iter().zip(&other.labels).map(|(a, b)| a - b).collect();
        Some(Labelling::new(self.degree - other.degree, labels))
    }

    pub fn scaled(&self, k: u32) -> Labelling {
        Labelling::new(self.degree * k, self.labels.iter().map(|x| x * k).collect())
    }

    /// Non-loop labels in edge order.
    pub fn non_loop_tuple(&self, g: &Graph) -> Vec<u32> {
        g.non_loop_edges().map(|e| self.labels[e]).collect()
    }

    /// Parses `degree <d>` followed by `<edge-id> <value>` lines.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut degree = None;
        let mut labels = vec![0; g.edge_count()];
        let mut seen = HashSet::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| Error::Format { line, message };
            let fields: Vec<&str> = content.split_whitespace().collect();
            let [key, value] = fields.as_slice() else {
                return Err(err(format!("expected two fields, found `{content}`")));
            };
            let value: u32 = value
                .parse()
                .map_err(|_| err(format!("`{value}` is not a nonnegative integer")))?;
            match degree {
                None if *key == "degree" => degree = Some(value),
                None => return Err(err("the first record must be `degree <d>`".into())),
                Some(_) => {
                    let e = g
                        .edge_index(key)
                        .ok_or_else(|| err(format!("unknown edge `{key}`")))?;
                    if !seen.insert(e) {
                        return Err(err(format!("edge `{key}` labelled twice")));
                    }
                    labels[e] = value;
                }
            }
        }
        let degree = degree.ok_or(Error::Format {
            line: 1,
            message: "missing `degree <d>` record".into(),
        })?;
        Ok(Labelling::new(degree, labels))
    }

    /// Writes every edge, in edge order, in the format read by [`parse`](Self::parse).
    pub fn to_text(&self, g: &Graph) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for (e, edge) in g.edges().iter().enumerate() {
            out.push_str(&format!("{} {}\n", edge.id, self.labels[e]));
        }
        out
    }
}

impl Add for &Labelling {
    type Output = Labelling;

    fn add(self, rhs: &Labelling) -> Labelling {
        assert_eq!(self.labels.len(), rhs.labels.len(), "labellings of different graphs");
        Labelling::new(
            self.degree + rhs.degree,
            self.labels.iter().zip(&rhs.labels).map(|(a, b)| a + b).collect(),
        )
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} (", self.degree)?;
        for (i, x) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::caterpillar;
    use proptest::prelude::*;

    #[test]
    fn parse_with_omitted_edges() {
        let g = caterpillar(2).unwrap();
        let w = Labelling::parse(&g, "degree 3\nl 2\n# comment\nv1 2\n").unwrap();
        assert_eq!(w.degree(), 3);
        assert_eq!(w.labels(), &[2, 2, 0, 0, 0]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let g = caterpillar(1).unwrap();
        let bad = |t: &str| match Labelling::parse(&g, t).unwrap_err() {
            Error::Format { line, .. } => line,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(bad("l 2\n"), 1);
        assert_eq!(bad("degree 2\nzz 1\n"), 2);
        assert_eq!(bad("degree 2\nl -1\n"), 2);
        assert_eq!(bad("degree 2\nl 1\nl 1\n"), 3);
        assert_eq!(bad(""), 1);
    }

    #[test]
    fn subtraction_and_domination() {
        let a = Labelling::new(3, vec![2, 2]);
        let b = Labelling::new(1, vec![0, 1]);
        assert_eq!(a.checked_sub(&b).unwrap(), Labelling::new(2, vec![2, 1]));
        assert!(b.checked_sub(&a).is_none());
        assert_eq!(&b + &b, Labelling::new(2, vec![0, 2]));
    }

    proptest! {
        #[test]
        fn text_round_trip(degree in 0u32..20, labels in proptest::collection::vec(0u32..40, 5)) {
            let g = caterpillar(2).unwrap();
            let w = Labelling::new(degree, labels);
            let text = w.to_text(&g);
            let back = Labelling::parse(&g, &text).unwrap();
            prop_assert_eq!(&back, &w);
            prop_assert_eq!(back.to_text(&g), text);
        }
    }
}
