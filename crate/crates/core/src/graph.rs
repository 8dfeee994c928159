//! The 1-critical bifiltered graph in sorted adjacency-list form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grade::Grade;

/// Vertex identifier. The fixed total order on vertices is the integer order.
pub type Vertex = usize;

/// An edge `{u, v}` with `u < v` and its critical grade.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub grade: Grade,
}

impl Edge {
    /// Builds an edge, swapping the endpoints if needed so that `u <= v`.
    pub fn new(u: Vertex, v: Vertex, grade: Grade) -> Self {
        if u <= v {
            Edge { u, v, grade }
        } else {
            Edge { u: v, v: u, grade }
        }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }
}

/// A common neighbor `w` of an edge `e` together with the grade at which it
/// becomes an edge neighbor: the join of `crit({a, w})`, `crit({b, w})` and
/// `crit(e)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EdgeNeighbor {
    pub w: Vertex,
    pub entry: Grade,
}

/// A 1-critical bifiltered graph.
///
/// Every vertex is present at every grade; edge `e` is present at `(s, t)`
/// iff `crit(e) <= (s, t)`. Adjacency lists are sorted strictly by neighbor
/// id and are symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct BifilteredGraph {
    adjacency: Vec<Vec<(Vertex, Grade)>>,
    edge_count: usize,
}

impl BifilteredGraph {
    /// A graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        BifilteredGraph { adjacency: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds the graph from an edge list.
    ///
    /// Rejects self-loops, vertices `>= n`, non-finite grades and repeated
    /// unordered pairs.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adjacency: Vec<Vec<(Vertex, Grade)>> = vec![Vec::new(); n];
        let mut edge_count = 0;
        for edge in edges {
            let Edge { u, v, grade } = Edge::new(edge.u, edge.v, edge.grade);
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !grade.is_finite() {
                return Err(Error::NonFiniteGrade(u, v));
            }
            adjacency[u].push((v, grade));
            adjacency[v].push((u, grade));
            edge_count += 1;
        }
        for (x, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable_by_key(|&(w, _)| w);
            if let Some(pair) = list.windows(2).find(|p| p[0].0 == p[1].0) {
                return Err(Error::DuplicateEdge(x.min(pair[0].0), x.max(pair[0].0)));
            }
        }
        Ok(BifilteredGraph { adjacency, edge_count })
    }

    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted `(neighbor, crit)` pairs of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, Grade)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Critical grade of `{u, v}`, or `None` if the edge is absent.
    pub fn grade(&self, u: Vertex, v: Vertex) -> Option<Grade> {
        let list = self.adjacency.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    /// Like [`grade`](Self::grade) but returns [`Grade::NEVER`] for absent edges.
    pub fn grade_or_never(&self, u: Vertex, v: Vertex) -> Grade {
        self.grade(u, v).unwrap_or(Grade::NEVER)
    }

    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.grade(u, v).is_some()
    }

    /// Looks up `{u, v}` and returns it as an [`Edge`] with its stored grade.
    pub fn edge(&self, u: Vertex, v: Vertex) -> Result<Edge> {
        self.grade(u, v).map(|g| Edge::new(u, v, g)).ok_or_else(|| Error::EdgeNotFound(u.min(v), u.max(v)))
    }

    /// All edges with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        self.edge_iter().collect()
    }

    pub fn edge_iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&(v, _)| v > u).map(move |&(v, g)| Edge { u, v, grade: g }))
    }

    /// Removes `{u, v}`, keeping both adjacency lists sorted.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Result<Grade> {
        let missing = || Error::EdgeNotFound(u.min(v), u.max(v));
        if u >= self.n_vertices() || v >= self.n_vertices() {
            return Err(missing());
        }
        let i = self.adjacency[u].binary_search_by_key(&v, |&(w, _)| w).map_err(|_| missing())?;
        let (_, grade) = self.adjacency[u].remove(i);
        let j = self.adjacency[v].binary_search_by_key(&u, |&(w, _)| w).expect("adjacency lists are symmetric");
        self.adjacency[v].remove(j);
        self.edge_count -= 1;
        Ok(grade)
    }

    /// Common neighbors of the edge `{a, b}` with their entry grades, sorted
    /// by vertex id.
    pub fn edge_neighborhood(&self, a: Vertex, b: Vertex) -> Result<Vec<EdgeNeighbor>> {
        let edge = self.edge(a, b)?;
        let mut out = Vec::new();
        self.edge_neighborhood_into(edge, &mut out);
        Ok(out)
    }

    /// Merged scan of the two sorted adjacency lists of `edge`'s endpoints.
    /// `edge` must be present; its stored grade is used as `crit(e)`.
    pub(crate) fn edge_neighborhood_into(&self, edge: Edge, out: &mut Vec<EdgeNeighbor>) {
        out.clear();
        let left = &self.adjacency[edge.u];
        let right = &self.adjacency[edge.v];
        let (mut i, mut j) = (0, 0);
        while i < left.len() && j < right.len() {
            let (x, gx) = left[i];
            let (y, gy) = right[j];
            match x.cmp(&y) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(EdgeNeighbor { w: x, entry: gx.join(gy).join(edge.grade) });
                    i += 1;
                    j += 1;
                }
            }
        }
    }

    /// The plain graph of edges present at `grade`.
    pub fn subgraph_at(&self, grade: Grade) -> PlainGraph {
        let adjacency = self
            .adjacency
            .iter()
            .map(|list| list.iter().filter(|(_, g)| g.leq(grade)).map(|&(w, _)| w).collect())
            .collect();
        PlainGraph { adjacency }
    }

    /// Applies `f` to every edge grade. `f` must map finite grades to finite grades.
    pub fn map_grades<F>(&self, mut f: F) -> BifilteredGraph
    where
        F: FnMut(Vertex, Vertex, Grade) -> Grade,
    {
        let mut out = self.clone();
        for u in 0..out.adjacency.len() {
            for k in 0..out.adjacency[u].len() {
                let (v, g) = out.adjacency[u][k];
                if u < v {
                    let new = f(u, v, g);
                    out.adjacency[u][k].1 = new;
                    let j =
                        out.adjacency[v].binary_search_by_key(&u, |&(w, _)| w).expect("adjacency lists are symmetric");
                    out.adjacency[v][j].1 = new;
                }
            }
        }
        out
    }

    /// Whether `other` has the same vertex set and a subset of the edges of
    /// `self`, each with the same grade.
    pub fn is_subgraph_of(&self, other: &BifilteredGraph) -> bool {
        self.n_vertices() == other.n_vertices() && self.edge_iter().all(|e| other.grade(e.u, e.v) == Some(e.grade))
    }

    #[cfg(test)]
    pub(crate) fn check_invariants(&self) {
        let mut count = 0;
        for (v, list) in self.adjacency.iter().enumerate() {
            assert!(list.windows(2).all(|p| p[0].0 < p[1].0), "list of {v} not sorted");
            for &(w, g) in list {
                assert_ne!(v, w);
                assert_eq!(self.grade(w, v), Some(g), "asymmetric {v} {w}");
                if v < w {
                    count += 1;
                }
            }
        }
        assert_eq!(count, self.edge_count);
    }
}

/// An unfiltered simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainGraph {
    adjacency: Vec<Vec<Vertex>>,
}

impl PlainGraph {
    pub fn n_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in sorted order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub const A: Vertex = 0;
    pub const B: Vertex = 1;
    pub const V: Vertex = 2;
    pub const W: Vertex = 3;
    pub const X: Vertex = 4;
    pub const Y: Vertex = 5;

    fn e(u: Vertex, v: Vertex, s: f64, t: f64) -> Edge {
        Edge::new(u, v, Grade::new(s, t))
    }

    /// Six vertices a, b, v, w, x, y; `{a, b}` is filtration-dominated but
    /// not strongly.
    pub fn fix6() -> BifilteredGraph {
        BifilteredGraph::from_edges(
            6,
            vec![
                e(A, B, 0., 0.),
                e(A, V, 0., 0.),
                e(B, V, 0., 0.),
                e(A, W, 0., 0.),
                e(B, W, 0., 0.),
                e(V, W, 0., 0.),
                e(A, X, 2., 0.),
                e(B, X, 2., 0.),
                e(V, X, 2., 0.),
                e(A, Y, 0., 2.),
                e(B, Y, 0., 2.),
                e(W, Y, 0., 2.),
                e(W, X, 2., 2.),
                e(X, Y, 2., 2.),
            ],
        )
        .unwrap()
    }

    pub fn k3() -> BifilteredGraph {
        BifilteredGraph::from_edges(3, vec![e(0, 1, 0., 0.), e(0, 2, 0., 0.), e(1, 2, 0., 0.)]).unwrap()
    }

    pub fn path3() -> BifilteredGraph {
        BifilteredGraph::from_edges(3, vec![e(0, 1, 0., 0.), e(1, 2, 0., 0.)]).unwrap()
    }

    pub fn cycle4() -> BifilteredGraph {
        BifilteredGraph::from_edges(4, vec![e(0, 1, 0., 0.), e(1, 2, 0., 0.), e(2, 3, 0., 0.), e(0, 3, 0., 0.)])
            .unwrap()
    }
}
