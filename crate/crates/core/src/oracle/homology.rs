//! F₂ Betti numbers of clique complexes by Gaussian elimination.

use std::collections::HashMap;

use super::CriticalGrid;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grade::Grade;
use crate::graph::{BifilteredGraph, Vertex};

/// Homology dimensions covered by the tables.
pub const DIMS: usize = 3;

pub const DEFAULT_SIMPLEX_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn xor(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn highest(&self) -> Option<usize> {
        self.0.iter().enumerate().rev().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }
}

/// Row-echelon basis keyed by highest set bit.
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<Bits>,
    pivot: HashMap<usize, usize>,
}

impl Echelon {
    /// Adds `v` to the span; returns whether it was independent.
    fn insert(&mut self, mut v: Bits) -> bool {
        while let Some(p) = v.highest() {
            match self.pivot.get(&p) {
                Some(&r) => v.xor(&self.rows[r]),
                None => {
                    self.pivot.insert(p, self.rows.len());
                    self.rows.push(v);
                    return true;
                }
            }
        }
        false
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// All cliques of the graph up to dimension 3, each with its entry grade.
struct CliqueComplex {
    /// `simplices[p]` lists sorted vertex tuples of dimension `p`, sorted.
    simplices: [Vec<(Vec<Vertex>, Grade)>; DIMS + 1],
    /// `boundary[p][k]`: indices into `simplices[p - 1]` of the facets.
    boundary: [Vec<Vec<usize>>; DIMS + 1],
}

impl CliqueComplex {
    fn build(graph: &BifilteredGraph, budget: usize) -> Result<Self> {
        let n = graph.n_vertices();
        let mut simplices: [Vec<(Vec<Vertex>, Grade)>; DIMS + 1] = Default::default();
        simplices[0] = (0..n).map(|v| (vec![v], Grade::new(f64::NEG_INFINITY, f64::NEG_INFINITY))).collect();
        for p in 1..=DIMS {
            let mut next = Vec::new();
            for (face, grade) in &simplices[p - 1] {
                let last = *face.last().unwrap();
                for w in last + 1..n {
                    let mut grade = *grade;
                    let mut ok = true;
                    for &x in face {
                        match graph.grade(x, w) {
                            Some(g) => grade = grade.join(g),
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        let mut s = face.clone();
                        s.push(w);
                        next.push((s, grade));
                    }
                }
            }
            simplices[p] = next;
            let total: usize = simplices.iter().map(Vec::len).sum();
            if total > budget {
                return Err(Error::SimplexBudget { budget });
            }
        }
        let mut boundary: [Vec<Vec<usize>>; DIMS + 1] = Default::default();
        for p in 1..=DIMS {
            let index: HashMap<&[Vertex], usize> =
                simplices[p - 1].iter().enumerate().map(|(i, (s, _))| (s.as_slice(), i)).collect();
            boundary[p] = simplices[p]
                .iter()
                .map(|(s, _)| {
                    (0..s.len())
                        .map(|skip| {
                            let face: Vec<Vertex> =
                                s.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
                            index[face.as_slice()]
                        })
                        .collect()
                })
                .collect();
        }
        Ok(CliqueComplex { simplices, boundary })
    }

    fn boundary_bits(&self, p: usize, k: usize) -> Bits {
        let mut b = Bits::zeros(self.simplices[p - 1].len());
        for &i in &self.boundary[p][k] {
            b.set(i);
        }
        b
    }

    /// Cycle basis of `C_p` and boundary space `B_p` of the subcomplex at `grade`.
    fn cycles_and_boundaries(&self, grade: Grade) -> [(Vec<Bits>, Echelon); DIMS] {
        std::array::from_fn(|p| {
            let present: Vec<usize> =
                (0..self.simplices[p].len()).filter(|&k| self.simplices[p][k].1.leq(grade)).collect();
            let cycles = if p == 0 {
                present
                    .iter()
                    .map(|&k| {
                        let mut b = Bits::zeros(self.simplices[0].len());
                        b.set(k);
                        b
                    })
                    .collect()
            } else {
                kernel(self, p, &present)
            };
            let mut boundaries = Echelon::default();
            for k in (0..self.simplices[p + 1].len()).filter(|&k| self.simplices[p + 1][k].1.leq(grade)) {
                boundaries.insert(self.boundary_bits(p + 1, k));
            }
            (cycles, boundaries)
        })
    }
}

/// Kernel of `∂_p` restricted to the simplices `present`, by reduction with
/// tracked combinations.
fn kernel(complex: &CliqueComplex, p: usize, present: &[usize]) -> Vec<Bits> {
    let width = complex.simplices[p].len();
    let mut rows: Vec<(Bits, Bits)> = Vec::new();
    let mut pivot: HashMap<usize, usize> = HashMap::new();
    let mut cycles = Vec::new();
    for &k in present {
        let mut b = complex.boundary_bits(p, k);
        let mut combo = Bits::zeros(width);
        combo.set(k);
        loop {
            match b.highest() {
                None => {
                    cycles.push(combo);
                    break;
                }
                Some(h) => match pivot.get(&h) {
                    Some(&r) => {
                        b.xor(&rows[r].0);
                        combo.xor(&rows[r].1);
                    }
                    None => {
                        pivot.insert(h, rows.len());
                        rows.push((b, combo));
                        break;
                    }
                },
            }
        }
    }
    cycles
}

fn betti(cycles: &[Bits], boundaries: &Echelon) -> usize {
    cycles.len() - boundaries.rank()
}

/// Rank of `H_p(K) → H_p(L)` for `K ⊆ L`: `dim(Z_p(K) + B_p(L)) - dim B_p(L)`.
fn map_rank(cycles_k: &[Bits], boundaries_l: &Echelon) -> usize {
    let mut span = boundaries_l.clone();
    cycles_k.iter().filter(|z| span.insert((*z).clone())).count()
}

/// Betti numbers in dimensions 0..3 and one-step inclusion ranks on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct BettiTable {
    pub grid: CriticalGrid,
    /// `betti[i * ys.len() + j][p]` at grid point `(xs[i], ys[j])`.
    pub betti: Vec<[usize; DIMS]>,
    /// Rank of the map to `(xs[i + 1], ys[j])`; `None` on the last column.
    pub right: Vec<Option<[usize; DIMS]>>,
    /// Rank of the map to `(xs[i], ys[j + 1])`; `None` on the last row.
    pub up: Vec<Option<[usize; DIMS]>>,
}

impl BettiTable {
    pub fn at(&self, i: usize, j: usize) -> [usize; DIMS] {
        self.betti[i * self.grid.ys.len() + j]
    }
}

/// Betti table of `graph` on its own critical grid.
pub fn betti_table(graph: &BifilteredGraph) -> Result<BettiTable> {
    betti_table_on(graph, &CriticalGrid::of(graph), DEFAULT_SIMPLEX_BUDGET, Exec::default())
}

/// Betti table of `graph` evaluated on `grid`.
pub fn betti_table_on(graph: &BifilteredGraph, grid: &CriticalGrid, budget: usize, exec: Exec) -> Result<BettiTable> {
    let complex = CliqueComplex::build(graph, budget)?;
    let (nx, ny) = (grid.xs.len(), grid.ys.len());
    let spaces = exec.map_range(nx * ny, |idx| complex.cycles_and_boundaries(grid.point(idx / ny, idx % ny)));
    let betti = spaces.iter().map(|sp| std::array::from_fn(|p| betti(&sp[p].0, &sp[p].1))).collect();
    let ranks_to = |from: usize, to: usize| -> [usize; DIMS] {
        std::array::from_fn(|p| map_rank(&spaces[from][p].0, &spaces[to][p].1))
    };
    let right = exec.map_range(nx * ny, |idx| (idx / ny + 1 < nx).then(|| ranks_to(idx, idx + ny)));
    let up = exec.map_range(nx * ny, |idx| (idx % ny + 1 < ny).then(|| ranks_to(idx, idx + 1)));
    Ok(BettiTable { grid: grid.clone(), betti, right, up })
}

/// Betti numbers of the clique complex of the subgraph at `grade`.
pub fn betti_at(graph: &BifilteredGraph, grade: Grade) -> Result<[usize; DIMS]> {
    let complex = CliqueComplex::build(graph, DEFAULT_SIMPLEX_BUDGET)?;
    let sp = complex.cycles_and_boundaries(grade);
    Ok(std::array::from_fn(|p| betti(&sp[p].0, &sp[p].1)))
}

/// First place where two tables disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy {
    pub grade: Grade,
    /// `"betti"`, `"right"` or `"up"`.
    pub kind: &'static str,
    pub dimension: usize,
    pub original: usize,
    pub reduced: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub grid_points: usize,
    pub discrepancy: Option<Discrepancy>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.discrepancy.is_none()
    }
}

/// Compares the Betti tables of `original` and `reduced` on the critical grid
/// of `original`, including one-step inclusion ranks.
pub fn verify_collapse(original: &BifilteredGraph, reduced: &BifilteredGraph) -> Result<VerifyReport> {
    if !reduced.is_subgraph_of(original) {
        return Err(Error::NotSubgraph(format!(
            "{} vertices / {} edges is not contained in {} vertices / {} edges",
            reduced.n_vertices(),
            reduced.edge_count(),
            original.n_vertices(),
            original.edge_count()
        )));
    }
    let grid = CriticalGrid::of(original);
    let a = betti_table_on(original, &grid, DEFAULT_SIMPLEX_BUDGET, Exec::default())?;
    let b = betti_table_on(reduced, &grid, DEFAULT_SIMPLEX_BUDGET, Exec::default())?;
    let ny = grid.ys.len();
    let mut discrepancy = None;
    'outer: for idx in 0..grid.len() {
        let grade = grid.point(idx / ny, idx % ny);
        let pairs = [
            ("betti", Some(a.betti[idx]), Some(b.betti[idx])),
            ("right", a.right[idx], b.right[idx]),
            ("up", a.up[idx], b.up[idx]),
        ];
        for (kind, x, y) in pairs {
            if let (Some(x), Some(y)) = (x, y) {
                if let Some(p) = (0..DIMS).find(|&p| x[p] != y[p]) {
                    discrepancy = Some(Discrepancy { grade, kind, dimension: p, original: x[p], reduced: y[p] });
                    break 'outer;
                }
            }
        }
    }
    Ok(VerifyReport { grid_points: grid.len(), discrepancy })
}
