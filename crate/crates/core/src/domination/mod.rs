//! Strong and full filtration-domination tests for a single edge.
//!
//! Both tests start from the edge neighborhood of `e = {a, b}`: the common
//! neighbors `w` of `a` and `b` with their entry grades `crit_e(w)`.
//!
//! * Strong: `v` strongly dominates `e` iff it is a neighbor already at
//!   `crit(e)` and `crit({v, w}) ≤ crit_e(w)` for every other neighbor `w`.
//! * Full: for every neighbor `v` the grades where `v` fails to dominate form
//!   a union of Δ-regions ([`StripeSet`]). `e` is filtration-dominated iff
//!   every grade of the critical query set (`crit(e)` and all pairwise joins
//!   of entry grades) lies outside the region of some neighbor.

mod stripes;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use stripes::{DeltaRegion, Stripe, StripeSet};

use crate::error::Result;
use crate::exec::Exec;
use crate::grade::Grade;
use crate::graph::{BifilteredGraph, Edge, EdgeNeighbor, Vertex};

/// Which removal predicate the greedy driver uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strong,
    Full,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Strong => "strong",
            Mode::Full => "full",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strong" => Ok(Mode::Strong),
            "full" => Ok(Mode::Full),
            _ => Err(format!("unknown mode `{s}` (expected strong or full)")),
        }
    }
}

/// Reusable buffers for repeated checks on one graph.
#[derive(Debug, Default)]
pub struct Checker {
    neighbors: Vec<EdgeNeighbor>,
}

impl Checker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Evaluates `mode`'s predicate; `edge` must be in `graph` with its stored grade.
    pub fn check(&mut self, graph: &BifilteredGraph, edge: Edge, mode: Mode) -> bool {
        graph.edge_neighborhood_into(edge, &mut self.neighbors);
        match mode {
            Mode::Strong => strong_dominator(graph, edge, &self.neighbors).is_some(),
            Mode::Full => filtration_dominated(graph, edge, &self.neighbors),
        }
    }

    pub fn strong_dominator(&mut self, graph: &BifilteredGraph, edge: Edge) -> Option<Vertex> {
        graph.edge_neighborhood_into(edge, &mut self.neighbors);
        strong_dominator(graph, edge, &self.neighbors)
    }

    pub fn dominator_at(&mut self, graph: &BifilteredGraph, edge: Edge, grade: Grade) -> Option<Vertex> {
        graph.edge_neighborhood_into(edge, &mut self.neighbors);
        dominator_at(graph, &self.neighbors, grade)
    }
}

/// Smallest vertex strongly filtration-dominating `{a, b}`, if any.
pub fn is_strongly_dominated(graph: &BifilteredGraph, a: Vertex, b: Vertex) -> Result<Option<Vertex>> {
    let edge = graph.edge(a, b)?;
    Ok(Checker::new().strong_dominator(graph, edge))
}

/// Whether `{a, b}` is dominated at every grade where it is present.
pub fn is_filtration_dominated(graph: &BifilteredGraph, a: Vertex, b: Vertex) -> Result<bool> {
    let edge = graph.edge(a, b)?;
    Ok(Checker::new().check(graph, edge, Mode::Full))
}

/// Smallest vertex dominating `{a, b}` in the subgraph at `grade`, if any.
/// Returns `None` when the edge itself is absent at `grade`.
pub fn is_dominated_at(graph: &BifilteredGraph, a: Vertex, b: Vertex, grade: Grade) -> Result<Option<Vertex>> {
    let edge = graph.edge(a, b)?;
    if !edge.grade.leq(grade) {
        return Ok(None);
    }
    Ok(Checker::new().dominator_at(graph, edge, grade))
}

/// Region of grades where `v` does not dominate `{a, b}`. `v` that never
/// becomes an edge neighbor yields the whole upper quadrant at `crit(e)`.
pub fn non_domination_region(graph: &BifilteredGraph, a: Vertex, b: Vertex, v: Vertex) -> Result<StripeSet> {
    let edge = graph.edge(a, b)?;
    let neighbors = graph.edge_neighborhood(a, b)?;
    let entry = neighbors.iter().find(|n| n.w == v).map_or(Grade::NEVER, |n| n.entry);
    Ok(region_of(graph, edge, &neighbors, v, entry))
}

/// Membership query on a region of non-domination.
pub fn region_query(region: &StripeSet, grade: Grade) -> bool {
    region.contains(grade)
}

/// `{crit(e)} ∪ {crit_e(w1) ⋆ crit_e(w2)}`, sorted lexicographically, no duplicates.
pub fn critical_query_set(graph: &BifilteredGraph, a: Vertex, b: Vertex) -> Result<Vec<Grade>> {
    let edge = graph.edge(a, b)?;
    let neighbors = graph.edge_neighborhood(a, b)?;
    Ok(critical_grades(edge, &neighbors))
}

/// Evaluates `mode` on every edge of an unchanging graph, in `(u, v)` order.
pub fn evaluate_all(graph: &BifilteredGraph, mode: Mode, exec: Exec) -> Vec<(Edge, bool)> {
    let edges = graph.edges();
    exec.map_slice(&edges, |&e| (e, Checker::new().check(graph, e, mode)))
}

fn critical_grades(edge: Edge, neighbors: &[EdgeNeighbor]) -> Vec<Grade> {
    let mut out = Vec::with_capacity(1 + neighbors.len() * (neighbors.len() + 1) / 2);
    out.push(edge.grade);
    for (i, x) in neighbors.iter().enumerate() {
        for y in &neighbors[i..] {
            out.push(x.entry.join(y.entry));
        }
    }
    out.sort_by(Grade::cmp_lex);
    out.dedup();
    out
}

/// Whether `v`'s edges to the other neighbors satisfy `crit({v, w}) ≤ bound(w)`.
/// `neighbors` must be sorted by vertex and contain only relevant vertices.
fn adjacent_to_all<'a, I, F>(graph: &BifilteredGraph, v: Vertex, neighbors: I, bound: F) -> bool
where
    I: IntoIterator<Item = &'a EdgeNeighbor>,
    F: Fn(&EdgeNeighbor) -> Grade,
{
    let adj = graph.neighbors(v);
    let mut k = 0;
    for n in neighbors {
        if n.w == v {
            continue;
        }
        while k < adj.len() && adj[k].0 < n.w {
            k += 1;
        }
        match adj.get(k) {
            Some(&(w, g)) if w == n.w && g.leq(bound(n)) => k += 1,
            _ => return false,
        }
    }
    true
}

/// Potential strong dominators are neighbors with `crit_e(v) = crit(e)`;
/// each is checked by one in-order scan of its adjacency list against the
/// neighborhood, in ascending id.
fn strong_dominator(graph: &BifilteredGraph, edge: Edge, neighbors: &[EdgeNeighbor]) -> Option<Vertex> {
    let others = neighbors.len().saturating_sub(1);
    neighbors
        .iter()
        .filter(|n| n.entry == edge.grade)
        .map(|n| n.w)
        .find(|&v| graph.degree(v) >= others && adjacent_to_all(graph, v, neighbors, |n| n.entry))
}

fn dominator_at(graph: &BifilteredGraph, neighbors: &[EdgeNeighbor], grade: Grade) -> Option<Vertex> {
    let present: Vec<EdgeNeighbor> = neighbors.iter().copied().filter(|n| n.entry.leq(grade)).collect();
    present.iter().map(|n| n.w).find(|&v| adjacent_to_all(graph, v, &present, |_| grade))
}

/// Union of `Δ(crit(e), crit_e(v))` and `Δ(crit_e(w), crit({v, w}))` over
/// the other neighbors `w`.
fn region_of(graph: &BifilteredGraph, edge: Edge, neighbors: &[EdgeNeighbor], v: Vertex, entry: Grade) -> StripeSet {
    let adj = graph.neighbors(v);
    let mut k = 0;
    let mut regions = Vec::with_capacity(neighbors.len());
    regions.push(DeltaRegion::new(edge.grade, entry));
    for n in neighbors {
        if n.w == v {
            continue;
        }
        while k < adj.len() && adj[k].0 < n.w {
            k += 1;
        }
        let link = match adj.get(k) {
            Some(&(w, g)) if w == n.w => g,
            _ => Grade::NEVER,
        };
        let region = DeltaRegion::new(n.entry, link);
        if !region.is_empty() {
            regions.push(region);
        }
    }
    StripeSet::from_regions(regions)
}

fn filtration_dominated(graph: &BifilteredGraph, edge: Edge, neighbors: &[EdgeNeighbor]) -> bool {
    if neighbors.is_empty() {
        return false;
    }
    if strong_dominator(graph, edge, neighbors).is_some() {
        return true;
    }
    let queries = critical_grades(edge, neighbors);
    let mut regions: Vec<Option<StripeSet>> = vec![None; neighbors.len()];
    queries.iter().all(|&c| {
        neighbors.iter().enumerate().any(|(i, n)| {
            n.entry.leq(c)
                && !regions[i].get_or_insert_with(|| region_of(graph, edge, neighbors, n.w, n.entry)).contains(c)
        })
    })
}
