//! The marked circle.
//!
//! An admissible marked set with `n` two-sided accumulation points is stored
//! lazily: the accumulation points split the circle into `n` segments and
//! every segment is a copy of the integers. A marked point is a pair
//! `(segment, offset)`. Going anticlockwise means increasing the offset
//! inside a segment; running off the top of segment `i` passes one
//! accumulation point and lands at the bottom of segment `i + 1 (mod n)`.
//!
//! The derived `Ord` on [`PointIndex`] is the cyclic order cut open just
//! after the accumulation point that sits below segment 0.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The marked circle with `num_segments` accumulation points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CircleModel {
    num_segments: usize,
}

/// A marked point: offset within a segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, i64)", into = "(usize, i64)")]
pub struct PointIndex {
    pub segment: usize,
    pub offset: i64,
}

/// Number of marked points strictly between two endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InteriorCount {
    Finite(u64),
    /// The endpoints lie in different segments, so both sides pass an
    /// accumulation point.
    Infinite,
}

impl InteriorCount {
    pub fn finite(self) -> Option<u64> {
        match self {
            InteriorCount::Finite(k) => Some(k),
            InteriorCount::Infinite => None,
        }
    }
}

impl PointIndex {
    pub const fn new(segment: usize, offset: i64) -> Self {
        PointIndex { segment, offset }
    }

    /// Moves `k` marked points anticlockwise (clockwise for negative `k`).
    /// Never leaves the segment: accumulation points are not marked.
    pub const fn step(self, k: i64) -> Self {
        PointIndex {
            segment: self.segment,
            offset: self.offset + k,
        }
    }

    pub fn succ(self) -> Self {
        self.step(1)
    }

    pub fn pred(self) -> Self {
        self.step(-1)
    }

    /// Successor or predecessor of `other`.
    pub fn is_adjacent(self, other: PointIndex) -> bool {
        self.segment == other.segment && (self.offset - other.offset).abs() == 1
    }
}

impl From<(usize, i64)> for PointIndex {
    fn from((segment, offset): (usize, i64)) -> Self {
        PointIndex { segment, offset }
    }
}

impl From<PointIndex> for (usize, i64) {
    fn from(p: PointIndex) -> Self {
        (p.segment, p.offset)
    }
}

impl fmt::Display for PointIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.segment, self.offset)
    }
}

impl CircleModel {
    pub fn new(num_segments: usize) -> Result<Self> {
        if num_segments == 0 {
            return Err(Error::NoSegments);
        }
        Ok(CircleModel { num_segments })
    }

    pub fn num_segments(&self) -> usize {
        self.num_segments
    }

    pub fn point(&self, segment: usize, offset: i64) -> Result<PointIndex> {
        let p = PointIndex::new(segment, offset);
        self.check(p)?;
        Ok(p)
    }

    pub fn check(&self, p: PointIndex) -> Result<()> {
        if p.segment < self.num_segments {
            Ok(())
        } else {
            Err(Error::SegmentOutOfRange {
                point: p,
                segments: self.num_segments,
            })
        }
    }

    pub fn step(&self, p: PointIndex, k: i64) -> PointIndex {
        p.step(k)
    }

    /// True iff `b` lies strictly inside the anticlockwise interval from `a`
    /// to `c`.
    pub fn in_open_interval(&self, a: PointIndex, b: PointIndex, c: PointIndex) -> Result<bool> {
        for p in [a, b, c] {
            self.check(p)?;
        }
        if a == c {
            return Err(Error::EmptyInterval(a));
        }
        Ok(cyclic_between(a, b, c))
    }

    /// Marked points strictly between `x` and `y` on the side that does not
    /// pass an accumulation point.
    pub fn interior_count(&self, x: PointIndex, y: PointIndex) -> Result<InteriorCount> {
        self.check(x)?;
        self.check(y)?;
        if x == y {
            return Err(Error::EmptyInterval(x));
        }
        Ok(interior_count(x, y))
    }

    /// All marked points with offset in `[-window, window]`, in cyclic order.
    pub fn window_points(&self, window: i64) -> Vec<PointIndex> {
        (0..self.num_segments)
            .flat_map(|s| (-window..=window).map(move |o| PointIndex::new(s, o)))
            .collect()
    }
}

/// Cyclic betweenness without model checks. `a != c` is assumed.
pub(crate) fn cyclic_between(a: PointIndex, b: PointIndex, c: PointIndex) -> bool {
    if a < c {
        a < b && b < c
    } else {
        b > a || b < c
    }
}

pub(crate) fn interior_count(x: PointIndex, y: PointIndex) -> InteriorCount {
    if x.segment == y.segment {
        InteriorCount::Finite((x.offset - y.offset).unsigned_abs() - 1)
    } else {
        InteriorCount::Infinite
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: usize, o: i64) -> PointIndex {
        PointIndex::new(s, o)
    }

    #[test]
    fn step_examples() {
        assert_eq!(p(0, 3).step(1), p(0, 4));
        assert_eq!(p(2, 0).step(-2), p(2, -2));
        assert_eq!(p(1, 7).step(5).step(-5), p(1, 7));
    }

    #[test]
    fn interval_examples() {
        let two = CircleModel::new(2).unwrap();
        assert!(two.in_open_interval(p(0, 5), p(1, -3), p(0, 2)).unwrap());
        let one = CircleModel::new(1).unwrap();
        assert!(one.in_open_interval(p(0, 0), p(0, 3), p(0, 7)).unwrap());
        assert!(!one.in_open_interval(p(0, 0), p(0, 9), p(0, 7)).unwrap());
        // the wrap-around side of (0,7)..(0,0) contains (0,9)
        assert!(one.in_open_interval(p(0, 7), p(0, 9), p(0, 0)).unwrap());
    }

    #[test]
    fn interval_rejects_empty() {
        let m = CircleModel::new(1).unwrap();
        assert_eq!(
            m.in_open_interval(p(0, 1), p(0, 2), p(0, 1)),
            Err(Error::EmptyInterval(p(0, 1)))
        );
    }

    #[test]
    fn segment_checks() {
        assert_eq!(CircleModel::new(0), Err(Error::NoSegments));
        let m = CircleModel::new(2).unwrap();
        assert!(m.point(2, 0).is_err());
        assert!(m.in_open_interval(p(0, 0), p(3, 0), p(1, 0)).is_err());
    }

    #[test]
    fn interior_examples() {
        let m = CircleModel::new(2).unwrap();
        assert_eq!(
            m.interior_count(p(0, 0), p(0, 2)).unwrap(),
            InteriorCount::Finite(1)
        );
        assert_eq!(
            m.interior_count(p(0, 0), p(0, 1)).unwrap(),
            InteriorCount::Finite(0)
        );
        assert_eq!(
            m.interior_count(p(0, 0), p(1, 0)).unwrap(),
            InteriorCount::Infinite
        );
        assert!(m.interior_count(p(1, 4), p(1, 4)).is_err());
    }

    #[test]
    fn json_pair() {
        assert_eq!(serde_json::to_string(&p(1, -3)).unwrap(), "[1,-3]");
        let q: PointIndex = serde_json::from_str("[2,5]").unwrap();
        assert_eq!(q, p(2, 5));
    }

    #[test]
    fn window_points_are_sorted() {
        let m = CircleModel::new(3).unwrap();
        let pts = m.window_points(2);
        assert_eq!(pts.len(), 15);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
    }
}
