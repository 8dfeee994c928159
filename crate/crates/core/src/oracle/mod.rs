//! Brute-force verifiers, independent of the fast algorithms.
//!
//! Domination is checked literally on the plain subgraph at every point of
//! the critical grid. Between consecutive critical coordinates the subgraph
//! does not change, so the grid covers every grade. Homology is compared via
//! F₂ Betti numbers and one-step inclusion ranks of the clique complexes.

mod homology;

pub use homology::{
    betti_at, betti_table, betti_table_on, verify_collapse, BettiTable, Discrepancy, VerifyReport,
    DEFAULT_SIMPLEX_BUDGET,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grade::Grade;
use crate::graph::{BifilteredGraph, Edge, PlainGraph, Vertex};

/// Sorted distinct coordinates of all edge grades; the grid is `xs × ys`.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalGrid {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

impl CriticalGrid {
    pub fn of(graph: &BifilteredGraph) -> Self {
        let mut xs: Vec<f64> = graph.edge_iter().map(|e| e.grade.s).collect();
        let mut ys: Vec<f64> = graph.edge_iter().map(|e| e.grade.t).collect();
        for v in [&mut xs, &mut ys] {
            v.sort_by(f64::total_cmp);
            v.dedup();
        }
        CriticalGrid { xs, ys }
    }

    pub fn len(&self) -> usize {
        self.xs.len() * self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid point `(xs[i], ys[j])`.
    pub fn point(&self, i: usize, j: usize) -> Grade {
        Grade::new(self.xs[i], self.ys[j])
    }

    /// All grid points, row-major in `i`.
    pub fn points(&self) -> impl Iterator<Item = Grade> + '_ {
        (0..self.xs.len()).flat_map(move |i| (0..self.ys.len()).map(move |j| self.point(i, j)))
    }
}

/// Common neighbors of `{a, b}` in a plain graph, by exhaustive scan.
fn common_neighbors(graph: &PlainGraph, a: Vertex, b: Vertex) -> Vec<Vertex> {
    (0..graph.n_vertices()).filter(|&w| w != a && w != b && graph.has_edge(a, w) && graph.has_edge(b, w)).collect()
}

/// Some vertex dominating `{a, b}` in `graph`, checked by definition.
pub fn dominating_vertex(graph: &PlainGraph, a: Vertex, b: Vertex) -> Option<Vertex> {
    if !graph.has_edge(a, b) {
        return None;
    }
    let neighbors = common_neighbors(graph, a, b);
    neighbors.iter().copied().find(|&v| neighbors.iter().all(|&w| w == v || graph.has_edge(v, w)))
}

/// Whether `v` dominates `{a, b}` in `graph`.
pub fn dominates(graph: &PlainGraph, a: Vertex, b: Vertex, v: Vertex) -> bool {
    let neighbors = common_neighbors(graph, a, b);
    neighbors.contains(&v) && neighbors.iter().all(|&w| w == v || graph.has_edge(v, w))
}

/// Grid points `≥ crit(e)`.
fn grades_above(graph: &BifilteredGraph, edge: Edge) -> Vec<Grade> {
    CriticalGrid::of(graph).points().filter(|g| edge.grade.leq(*g)).collect()
}

/// Filtration-domination by definition: dominated at every grid grade where present.
pub fn brute_force_filtration_dominated(graph: &BifilteredGraph, edge: Edge) -> bool {
    grades_above(graph, edge).into_iter().all(|g| dominating_vertex(&graph.subgraph_at(g), edge.u, edge.v).is_some())
}

/// Whether `v` dominates `edge` at every grid grade where the edge is present.
pub fn brute_force_strongly_dominated_by(graph: &BifilteredGraph, edge: Edge, v: Vertex) -> bool {
    grades_above(graph, edge).into_iter().all(|g| dominates(&graph.subgraph_at(g), edge.u, edge.v, v))
}

/// Smallest vertex strongly dominating `edge`, by definition.
pub fn brute_force_strong_dominator(graph: &BifilteredGraph, edge: Edge) -> Option<Vertex> {
    (0..graph.n_vertices())
        .filter(|&v| v != edge.u && v != edge.v)
        .find(|&v| brute_force_strongly_dominated_by(graph, edge, v))
}

/// Erdős–Rényi graphs with grades drawn from a small integer grid.
#[derive(Clone, Debug, PartialEq)]
pub struct RandomGraphConfig {
    pub min_vertices: usize,
    pub max_vertices: usize,
    /// Grades are `(i, j)` with `i, j ∈ 0..grid`.
    pub grid: u32,
    pub edge_probabilities: Vec<f64>,
}

impl Default for RandomGraphConfig {
    fn default() -> Self {
        RandomGraphConfig { min_vertices: 3, max_vertices: 10, grid: 4, edge_probabilities: vec![0.3, 0.5, 0.8] }
    }
}

impl RandomGraphConfig {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        RandomGraphConfig { max_vertices, ..Default::default() }
    }

    pub fn sample(&self, rng: &mut impl Rng) -> BifilteredGraph {
        let n = rng.gen_range(self.min_vertices..=self.max_vertices);
        let p = self.edge_probabilities[rng.gen_range(0..self.edge_probabilities.len())];
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    let grade = Grade::new(rng.gen_range(0..self.grid) as f64, rng.gen_range(0..self.grid) as f64);
                    edges.push(Edge::new(u, v, grade));
                }
            }
        }
        BifilteredGraph::from_edges(n, edges).expect("generated edges are valid")
    }

    /// `count` graphs from one seeded stream.
    pub fn corpus(&self, seed: u64, count: usize) -> Vec<BifilteredGraph> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| self.sample(&mut rng)).collect()
    }
}
