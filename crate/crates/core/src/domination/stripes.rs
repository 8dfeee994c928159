//! Δ-regions and their decomposition into merged stripes.
//!
//! `Δ(p, q) = { r : p ≤ r and not q ≤ r }` is the union of a vertical stripe
//! `[p.s, q.s) × [p.t, ∞)` and a horizontal stripe `[p.s, ∞) × [p.t, q.t)`.
//! A [`StripeSet`] stores the union of many such regions as two sorted lists
//! of interior-disjoint stripes and answers membership by binary search.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use ordered_float::OrderedFloat;

use crate::grade::Grade;

/// The set `Δ(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeltaRegion {
    pub p: Grade,
    pub q: Grade,
}

impl DeltaRegion {
    pub fn new(p: Grade, q: Grade) -> Self {
        DeltaRegion { p, q }
    }

    pub fn is_empty(&self) -> bool {
        self.q.leq(self.p)
    }

    pub fn contains(&self, r: Grade) -> bool {
        self.p.leq(r) && !self.q.leq(r)
    }

    /// Vertical part: s-range `[p.s, q.s)`, lower t-bound `p.t`.
    pub fn vertical(&self) -> Option<Stripe> {
        Stripe::new(self.p.s, self.q.s, self.p.t)
    }

    /// Horizontal part: t-range `[p.t, q.t)`, lower s-bound `p.s`.
    pub fn horizontal(&self) -> Option<Stripe> {
        Stripe::new(self.p.t, self.q.t, self.p.s)
    }
}

/// A stripe `[start, end) × [floor, ∞)` in its own axis frame.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stripe {
    pub start: f64,
    pub end: f64,
    pub floor: f64,
}

impl Stripe {
    fn new(start: f64, end: f64, floor: f64) -> Option<Self> {
        (start < end).then_some(Stripe { start, end, floor })
    }

    fn contains(&self, along: f64, across: f64) -> bool {
        self.start <= along && along < self.end && across >= self.floor
    }
}

/// Union of Δ-regions as merged vertical and horizontal stripes.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct StripeSet {
    vertical: Vec<Stripe>,
    horizontal: Vec<Stripe>,
}

impl StripeSet {
    pub fn from_regions<I: IntoIterator<Item = DeltaRegion>>(regions: I) -> Self {
        let mut vertical = Vec::new();
        let mut horizontal = Vec::new();
        for region in regions {
            vertical.extend(region.vertical());
            horizontal.extend(region.horizontal());
        }
        StripeSet { vertical: merge(vertical), horizontal: merge(horizontal) }
    }

    pub fn is_empty(&self) -> bool {
        self.vertical.is_empty() && self.horizontal.is_empty()
    }

    pub fn vertical(&self) -> &[Stripe] {
        &self.vertical
    }

    pub fn horizontal(&self) -> &[Stripe] {
        &self.horizontal
    }

    /// Whether `g` lies in the union. `O(log r)`.
    pub fn contains(&self, g: Grade) -> bool {
        lookup(&self.vertical, g.s, g.t) || lookup(&self.horizontal, g.t, g.s)
    }
}

fn lookup(stripes: &[Stripe], along: f64, across: f64) -> bool {
    let idx = stripes.partition_point(|st| st.start <= along);
    idx > 0 && stripes[idx - 1].contains(along, across)
}

/// Sweeps stripe endpoints left to right, keeping the lowest floor among the
/// stripes covering each elementary interval.
fn merge(mut stripes: Vec<Stripe>) -> Vec<Stripe> {
    if stripes.len() <= 1 {
        return stripes;
    }
    stripes.sort_by(|a, b| a.start.total_cmp(&b.start));
    let mut cuts: Vec<f64> = stripes.iter().flat_map(|st| [st.start, st.end]).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let mut out: Vec<Stripe> = Vec::new();
    // min-heap on floor, entries carry their end for lazy deletion
    let mut active: BinaryHeap<(Reverse<OrderedFloat<f64>>, OrderedFloat<f64>)> = BinaryHeap::new();
    let mut next = 0;
    for window in cuts.windows(2) {
        let (lo, hi) = (window[0], window[1]);
        while next < stripes.len() && stripes[next].start <= lo {
            active.push((Reverse(OrderedFloat(stripes[next].floor)), OrderedFloat(stripes[next].end)));
            next += 1;
        }
        while active.peek().is_some_and(|&(_, end)| end.0 <= lo) {
            active.pop();
        }
        let Some(&(Reverse(OrderedFloat(floor)), _)) = active.peek() else {
            continue;
        };
        match out.last_mut() {
            Some(last) if last.end == lo && last.floor == floor => last.end = hi,
            _ => out.push(Stripe { start: lo, end: hi, floor }),
        }
    }
    out
}
