use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::Labelling;

/// A number in `Z/2`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn is_nonnegative(self) -> bool {
        self.0 >= 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// Labels around a trivalent vertex and the local path counts they force.
///
/// `a`, `b`, `c` are the labels of the three slots in local order. The path
/// counts solve `a = y + z`, `b = x + z`, `c = x + y`: on a caterpillar spine
/// with `(a, b, c) = (left, right, vertical)`, `z` counts paths going straight
/// along the spine, `y` paths turning left and `x` paths turning right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalView {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub deg: HalfInt,
    pub x: HalfInt,
    pub y: HalfInt,
    pub z: HalfInt,
}

impl LocalView {
    pub fn new(a: u32, b: u32, c: u32) -> Self {
        let (ai, bi, ci) = (i64::from(a), i64::from(b), i64::from(c));
        LocalView {
            a,
            b,
            c,
            deg: HalfInt(ai + bi + ci),
            x: HalfInt(bi + ci - ai),
            y: HalfInt(ai + ci - bi),
            z: HalfInt(ai + bi - ci),
        }
    }

    /// Path counts are nonnegative integers and at most `d` paths pass.
    pub fn admissible(&self, d: u32) -> bool {
        self.x.is_integer()
            && [self.x, self.y, self.z].iter().all(|h| h.is_nonnegative())
            && self.deg.twice() <= 2 * i64::from(d)
    }
}

/// Local view at a trivalent inner vertex, slots taken in incidence order
/// (a loop contributes its label to two slots).
pub fn local_view(g: &Graph, w: &Labelling, v: usize) -> Result<LocalView> {
    let slots = g.slots(v);
    if slots.len() != 3 {
        return Err(Error::UnsupportedVertex(g.vertex_name(v).to_string()));
    }
    w.check_graph(g)?;
    Ok(LocalView::new(w.get(slots[0].edge), w.get(slots[1].edge), w.get(slots[2].edge)))
}
