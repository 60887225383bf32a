//! Arcs between marked points, crossing, suspension and the two
//! distinguished triangles induced by a pair of crossing arcs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::circle::{cyclic_between, interior_count, InteriorCount, PointIndex};
use crate::error::{Error, Result};

/// An unordered pair of non-adjacent marked points. Endpoints are stored
/// sorted so that equal arcs compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(
    try_from = "(PointIndex, PointIndex)",
    into = "(PointIndex, PointIndex)"
)]
pub struct Arc {
    lo: PointIndex,
    hi: PointIndex,
}

/// A pair of endpoints that is either an arc or a zero object (equal or
/// adjacent endpoints, i.e. a boundary segment).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MaybeArc {
    Arc(Arc),
    Zero,
}

/// The distinguished triangle `first -> (+)middle -> third -> Σ first`.
/// Zero summands are dropped from `middle`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InducedTriangle {
    pub first: Arc,
    pub middle: Vec<Arc>,
    pub third: Arc,
}

impl Arc {
    pub fn new(p: PointIndex, q: PointIndex) -> Result<Arc> {
        if p == q || p.is_adjacent(q) {
            return Err(Error::InvalidArc(p, q));
        }
        let (lo, hi) = if p < q { (p, q) } else { (q, p) };
        Ok(Arc { lo, hi })
    }

    pub fn endpoints(&self) -> (PointIndex, PointIndex) {
        (self.lo, self.hi)
    }

    pub fn lo(&self) -> PointIndex {
        self.lo
    }

    pub fn hi(&self) -> PointIndex {
        self.hi
    }

    pub fn has_endpoint(&self, p: PointIndex) -> bool {
        self.lo == p || self.hi == p
    }

    pub fn shares_endpoint(&self, other: &Arc) -> bool {
        self.has_endpoint(other.lo) || self.has_endpoint(other.hi)
    }

    /// The endpoint that is not `p`, if `p` is an endpoint.
    pub fn other_endpoint(&self, p: PointIndex) -> Option<PointIndex> {
        if self.lo == p {
            Some(self.hi)
        } else if self.hi == p {
            Some(self.lo)
        } else {
            None
        }
    }

    pub fn is_same_segment(&self) -> bool {
        self.lo.segment == self.hi.segment
    }

    pub fn interior_count(&self) -> InteriorCount {
        interior_count(self.lo, self.hi)
    }

    /// Strict interleaving of endpoints. Arcs sharing an endpoint never cross.
    pub fn crosses(&self, other: &Arc) -> bool {
        if self.shares_endpoint(other) {
            return false;
        }
        cyclic_between(self.lo, other.lo, self.hi) != cyclic_between(self.lo, other.hi, self.hi)
    }

    /// `Σ^k`: both endpoints move `k` steps clockwise.
    pub fn suspend(&self, k: i64) -> Arc {
        // validity is translation invariant, and translation keeps the order
        // of two points in the same segment; across segments order is fixed
        Arc {
            lo: self.lo.step(-k),
            hi: self.hi.step(-k),
        }
    }
}

/// Dimension of `Ext¹(a, b)`: 1 when the arcs cross, 0 otherwise.
pub fn ext1_dim(a: &Arc, b: &Arc) -> u8 {
    u8::from(a.crosses(b))
}

impl TryFrom<(PointIndex, PointIndex)> for Arc {
    type Error = Error;

    fn try_from((p, q): (PointIndex, PointIndex)) -> Result<Arc> {
        Arc::new(p, q)
    }
}

impl From<Arc> for (PointIndex, PointIndex) {
    fn from(a: Arc) -> Self {
        (a.lo, a.hi)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl MaybeArc {
    pub fn from_pair(p: PointIndex, q: PointIndex) -> MaybeArc {
        Arc::new(p, q).map_or(MaybeArc::Zero, MaybeArc::Arc)
    }

    pub fn arc(self) -> Option<Arc> {
        match self {
            MaybeArc::Arc(a) => Some(a),
            MaybeArc::Zero => None,
        }
    }

    pub fn is_zero(self) -> bool {
        self == MaybeArc::Zero
    }
}

/// The four endpoints of crossing arcs `m`, `n` in cyclic order, starting
/// from the least endpoint of `m`: `m = {v0, v2}`, `n = {v1, v3}`.
fn cyclic_vertices(m: &Arc, n: &Arc) -> Result<[PointIndex; 4]> {
    if !m.crosses(n) {
        return Err(Error::NotCrossing(m.to_string(), n.to_string()));
    }
    let (v0, v2) = (m.lo, m.hi);
    let (v1, v3) = if cyclic_between(v0, n.lo, v2) {
        (n.lo, n.hi)
    } else {
        (n.hi, n.lo)
    };
    Ok([v0, v1, v2, v3])
}

/// Sides `[{v0,v1}, {v1,v2}, {v2,v3}, {v3,v0}]` of the quadrilateral whose
/// diagonals are the crossing arcs `m` and `n`.
pub fn quadrilateral_sides(m: &Arc, n: &Arc) -> Result<[MaybeArc; 4]> {
    let v = cyclic_vertices(m, n)?;
    Ok([
        MaybeArc::from_pair(v[0], v[1]),
        MaybeArc::from_pair(v[1], v[2]),
        MaybeArc::from_pair(v[2], v[3]),
        MaybeArc::from_pair(v[3], v[0]),
    ])
}

/// The triangles `m -> {v1,v2} (+) {v3,v0} -> n -> Σm` and
/// `n -> {v0,v1} (+) {v2,v3} -> m -> Σn`.
pub fn induced_triangles(m: &Arc, n: &Arc) -> Result<(InducedTriangle, InducedTriangle)> {
    let [s01, s12, s23, s30] = quadrilateral_sides(m, n)?;
    let middle = |a: MaybeArc, b: MaybeArc| a.arc().into_iter().chain(b.arc()).collect::<Vec<_>>();
    Ok((
        InducedTriangle {
            first: *m,
            middle: middle(s12, s30),
            third: *n,
        },
        InducedTriangle {
            first: *n,
            middle: middle(s01, s23),
            third: *m,
        },
    ))
}
