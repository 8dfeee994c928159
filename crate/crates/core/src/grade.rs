//! Points of the grade plane.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A grade `(s, t)` in the plane, partially ordered coordinate-wise.
///
/// The first coordinate is typically a negated density, the second an edge
/// length. [`Grade::NEVER`] is `(+∞, +∞)` and stands for "not present at any
/// finite grade"; it is a valid query result but never a stored edge grade.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grade {
    pub s: f64,
    pub t: f64,
}

impl Grade {
    pub const NEVER: Grade = Grade { s: f64::INFINITY, t: f64::INFINITY };

    pub const fn new(s: f64, t: f64) -> Self {
        Grade { s, t }
    }

    /// Coordinate-wise `≤`.
    #[inline]
    pub fn leq(self, other: Grade) -> bool {
        self.s <= other.s && self.t <= other.t
    }

    /// Least upper bound: the coordinate-wise maximum. `NEVER` absorbs.
    #[inline]
    pub fn join(self, other: Grade) -> Grade {
        Grade { s: self.s.max(other.s), t: self.t.max(other.t) }
    }

    pub fn is_finite(self) -> bool {
        self.s.is_finite() && self.t.is_finite()
    }

    pub fn is_never(self) -> bool {
        self.s == f64::INFINITY && self.t == f64::INFINITY
    }

    /// Dictionary order on `(s, t)`.
    pub fn cmp_lex(&self, other: &Grade) -> Ordering {
        self.s.total_cmp(&other.s).then(self.t.total_cmp(&other.t))
    }

    /// Dictionary order on `(t, s)`.
    pub fn cmp_colex(&self, other: &Grade) -> Ordering {
        self.t.total_cmp(&other.t).then(self.s.total_cmp(&other.s))
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_never() {
            write!(f, "never")
        } else {
            write!(f, "({}, {})", self.s, self.t)
        }
    }
}

/// Join of any number of grades; `None` for an empty iterator.
pub fn join_all<I: IntoIterator<Item = Grade>>(grades: I) -> Option<Grade> {
    grades.into_iter().reduce(Grade::join)
}
