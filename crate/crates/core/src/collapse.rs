//! Greedy removal of (strongly) filtration-dominated edges.
//!
//! One pass visits every edge once in a fixed [`EdgeOrder`] and removes it
//! if the [`Mode`] predicate holds in the current, already reduced graph.
//! Edges are not revisited within a pass; [`collapse_iterated`] repeats
//! passes on the output.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::domination::Checker;
pub use crate::domination::Mode;
use crate::exec::Exec;
use crate::grade::Grade;
use crate::graph::{BifilteredGraph, Edge};
use crate::orders::EdgeOrder;

/// Statistics of one (possibly iterated) collapse run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub edges_before: usize,
    pub edges_after: usize,
    pub removed_per_iteration: Vec<usize>,
    pub wall_time_per_iteration: Vec<Duration>,
    pub mode: Mode,
    pub order: EdgeOrder,
}

impl CollapseReport {
    pub fn removed(&self) -> usize {
        self.edges_before - self.edges_after
    }

    /// Share of the original edges removed, in percent.
    pub fn removed_percent(&self) -> f64 {
        percent(self.removed(), self.edges_before)
    }

    pub fn remaining_percent(&self) -> f64 {
        percent(self.edges_after, self.edges_before)
    }

    pub fn total_time(&self) -> Duration {
        self.wall_time_per_iteration.iter().sum()
    }

    /// Percentage of the original edges removed in iteration `i` (0-based);
    /// iterations skipped by the early stop count as zero.
    pub fn removed_percent_in(&self, i: usize) -> f64 {
        percent(self.removed_per_iteration.get(i).copied().unwrap_or(0), self.edges_before)
    }
}

fn percent(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        0.0
    } else {
        100.0 * part as f64 / whole as f64
    }
}

/// One pass over the edges of `graph`; removes edges in place. Returns the
/// number removed. Removed edges are appended to `log` if given.
fn pass(graph: &mut BifilteredGraph, order: &EdgeOrder, mode: Mode, mut log: Option<&mut Vec<Edge>>) -> usize {
    let mut edges = graph.edges();
    order.sort(&mut edges);
    let mut checker = Checker::new();
    let mut removed = 0;
    for edge in edges {
        if checker.check(graph, edge, mode) {
            graph.remove_edge(edge.u, edge.v).expect("edge visited once");
            removed += 1;
            if let Some(log) = log.as_deref_mut() {
                log.push(edge);
            }
        }
    }
    removed
}

fn run(
    graph: &BifilteredGraph,
    order: &EdgeOrder,
    mode: Mode,
    iterations: usize,
    mut log: Option<&mut Vec<Edge>>,
) -> (BifilteredGraph, CollapseReport) {
    let mut reduced = graph.clone();
    let mut removed_per_iteration = Vec::new();
    let mut wall_time_per_iteration = Vec::new();
    for _ in 0..iterations.max(1) {
        let start = Instant::now();
        let removed = pass(&mut reduced, order, mode, log.as_deref_mut());
        wall_time_per_iteration.push(start.elapsed());
        removed_per_iteration.push(removed);
        if removed == 0 {
            break;
        }
    }
    let report = CollapseReport {
        edges_before: graph.edge_count(),
        edges_after: reduced.edge_count(),
        removed_per_iteration,
        wall_time_per_iteration,
        mode,
        order: *order,
    };
    (reduced, report)
}

/// A single pass of the greedy removal.
pub fn collapse_once(graph: &BifilteredGraph, order: &EdgeOrder, mode: Mode) -> (BifilteredGraph, CollapseReport) {
    run(graph, order, mode, 1, None)
}

/// Like [`collapse_once`], also returning the removed edges in removal order.
pub fn collapse_once_traced(
    graph: &BifilteredGraph,
    order: &EdgeOrder,
    mode: Mode,
) -> (BifilteredGraph, CollapseReport, Vec<Edge>) {
    let mut log = Vec::new();
    let (reduced, report) = run(graph, order, mode, 1, Some(&mut log));
    (reduced, report, log)
}

/// Up to `iterations` passes, each re-sorting the surviving edges. Stops
/// early after a pass that removes nothing.
pub fn collapse_iterated(
    graph: &BifilteredGraph,
    order: &EdgeOrder,
    mode: Mode,
    iterations: usize,
) -> (BifilteredGraph, CollapseReport) {
    run(graph, order, mode, iterations, None)
}

/// Transformations of the first grade coordinate used to study how grade
/// structure affects removal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GradeMode {
    Original,
    /// Every first coordinate set to 0.
    Zeroed,
    /// An independent uniform `[0, 1)` value per edge.
    Random,
    /// One uniform `[0, 1)` value per vertex; an edge takes the larger of its
    /// endpoints' values. Keeps the vertex-driven structure of densities.
    RandomVertex,
    /// Single-parameter stand-in; identical to `Zeroed` for the algorithms.
    Drop,
}

impl GradeMode {
    pub const ALL: [GradeMode; 5] =
        [GradeMode::Original, GradeMode::Zeroed, GradeMode::Random, GradeMode::RandomVertex, GradeMode::Drop];

    pub fn name(self) -> &'static str {
        match self {
            GradeMode::Original => "original",
            GradeMode::Zeroed => "zeroed",
            GradeMode::Random => "random",
            GradeMode::RandomVertex => "random-vertex",
            GradeMode::Drop => "drop",
        }
    }
}

impl fmt::Display for GradeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GradeMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GradeMode::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| {
            format!("unknown grade mode `{s}` (expected original, zeroed, random, random-vertex or drop)")
        })
    }
}

/// Rewrites first coordinates according to `mode`; second coordinates are kept.
pub fn apply_grade_mode(graph: &BifilteredGraph, mode: GradeMode, seed: u64) -> BifilteredGraph {
    match mode {
        GradeMode::Original => graph.clone(),
        GradeMode::Zeroed | GradeMode::Drop => graph.map_grades(|_, _, g| Grade::new(0.0, g.t)),
        GradeMode::Random => {
            // edges are visited in (u, v) order, so the draw is reproducible
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            graph.map_grades(|_, _, g| Grade::new(rng.gen::<f64>(), g.t))
        }
        GradeMode::RandomVertex => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let values: Vec<f64> = (0..graph.n_vertices()).map(|_| rng.gen::<f64>()).collect();
            graph.map_grades(|u, v, g| Grade::new(values[u].max(values[v]), g.t))
        }
    }
}

/// Number of edges not dominated in the subgraph at their own critical grade.
pub fn count_free_at_birth(graph: &BifilteredGraph) -> usize {
    count_free_at_birth_with(graph, Exec::default())
}

pub fn count_free_at_birth_with(graph: &BifilteredGraph, exec: Exec) -> usize {
    let edges = graph.edges();
    exec.map_slice(&edges, |&e| Checker::new().dominator_at(graph, e, e.grade).is_none())
        .into_iter()
        .filter(|&free| free)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::orders::OrderKind;

    fn all_orders() -> Vec<EdgeOrder> {
        OrderKind::ALL.iter().map(|&k| EdgeOrder::new(k, 3)).collect()
    }

    #[test]
    fn triangle_loses_exactly_one_edge() {
        for order in all_orders() {
            for mode in [Mode::Strong, Mode::Full] {
                let (out, report) = collapse_once(&k3(), &order, mode);
                assert_eq!(report.removed(), 1);
                assert_eq!(out.edge_count(), 2);
                assert!(evaluate_none(&out));
            }
        }
    }

    fn evaluate_none(g: &BifilteredGraph) -> bool {
        crate::domination::evaluate_all(g, Mode::Full, Exec::Sequential).iter().all(|(_, d)| !d)
    }

    #[test]
    fn single_edge_survives() {
        let g = BifilteredGraph::from_edges(2, vec![Edge::new(0, 1, Grade::new(0., 0.))]).unwrap();
        let (out, report) = collapse_once(&g, &EdgeOrder::reverse_lexicographic(), Mode::Strong);
        assert_eq!(out, g);
        assert_eq!(report.removed_per_iteration, vec![0]);
    }

    #[test]
    fn iterated_matches_once_for_one_iteration() {
        let order = EdgeOrder::reverse_lexicographic();
        let (a, ra) = collapse_once(&fix6(), &order, Mode::Full);
        let (b, rb) = collapse_iterated(&fix6(), &order, Mode::Full, 1);
        assert_eq!(a, b);
        assert_eq!(ra.removed_per_iteration, rb.removed_per_iteration);

        let (c, rc) = collapse_iterated(&fix6(), &order, Mode::Full, 2);
        assert!(rc.removed() <= rc.edges_before);
        assert_eq!(rc.removed_per_iteration.iter().sum::<usize>(), rc.removed());
        assert!(c.edge_count() <= a.edge_count());
        c.check_invariants();
    }

    #[test]
    fn fix6_ab_removed_only_when_visited_first() {
        // lex visits {a, b} first, while it is filtration-dominated
        let (_, _, log) = collapse_once_traced(&fix6(), &EdgeOrder::lexicographic(), Mode::Full);
        assert_eq!((log[0].u, log[0].v), (A, B));
        let (_, _, strong) = collapse_once_traced(&fix6(), &EdgeOrder::lexicographic(), Mode::Strong);
        assert!(strong.iter().all(|e| (e.u, e.v) != (A, B)));
        // revlex visits it last, after its neighborhood has been emptied
        let (out, _, log) = collapse_once_traced(&fix6(), &EdgeOrder::reverse_lexicographic(), Mode::Full);
        assert!(log.iter().all(|e| (e.u, e.v) != (A, B)));
        assert!(out.edge_neighborhood(A, B).unwrap().is_empty());
    }

    #[test]
    fn grade_modes() {
        let f = fix6();
        assert_eq!(apply_grade_mode(&f, GradeMode::Original, 1), f);
        let z = apply_grade_mode(&f, GradeMode::Zeroed, 1);
        assert!(z.edge_iter().all(|e| e.grade.s == 0.0));
        assert_eq!(z, apply_grade_mode(&f, GradeMode::Drop, 9));
        let r1 = apply_grade_mode(&f, GradeMode::Random, 5);
        let r2 = apply_grade_mode(&f, GradeMode::Random, 5);
        assert_eq!(r1, r2);
        assert!(r1.edge_iter().zip(f.edge_iter()).all(|(a, b)| a.grade.t == b.grade.t));
        assert_ne!(r1, apply_grade_mode(&f, GradeMode::Random, 6));
        let rv = apply_grade_mode(&f, GradeMode::RandomVertex, 5);
        assert_eq!(rv, apply_grade_mode(&f, GradeMode::RandomVertex, 5));
        // per-vertex maxima: in a triangle the largest value occurs on two edges
        let mut tri = [rv.grade(A, B).unwrap().s, rv.grade(A, V).unwrap().s, rv.grade(B, V).unwrap().s];
        tri.sort_by(f64::total_cmp);
        assert_eq!(tri[1], tri[2]);
        for m in GradeMode::ALL {
            assert_eq!(m.name().parse::<GradeMode>().unwrap(), m);
        }
    }

    #[test]
    fn free_at_birth_examples() {
        assert_eq!(count_free_at_birth(&k3()), 0);
        assert_eq!(count_free_at_birth(&path3()), 2);
        assert_eq!(count_free_at_birth(&cycle4()), 4);
    }
}
