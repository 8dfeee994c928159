//! Triangles of the clique bifiltration and export in scc2020 format.
//!
//! The exported chain complex covers dimensions 0 to 2, which is what a
//! minimal presentation in homology dimension 1 needs:
//!
//! ```text
//! scc2020
//! 2
//! <#triangles> <#edges> <#vertices>
//! s t ; i j k      one line per triangle, indices into the edge block
//! s t ; a b        one line per edge, indices into the vertex block
//! 0 0 ;            one line per vertex
//! ```
//!
//! Grades are translated so the coordinate-wise minimum over all edges is
//! `(0, 0)`; vertices sit at `(0, 0)`. Edges are listed by `(u, v)`,
//! triangles by `(u, v, w)`.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::grade::Grade;
use crate::graph::{BifilteredGraph, Edge, Vertex};

/// A 3-clique `u < v < w` entering at the join of its edge grades.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GradedTriangle {
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
    pub grade: Grade,
}

/// Calls `f(w, crit(u,w), crit(v,w))` for each common neighbor `w > v` of `u` and `v`.
fn for_each_apex<F: FnMut(Vertex, Grade, Grade)>(graph: &BifilteredGraph, u: Vertex, v: Vertex, mut f: F) {
    let left = graph.neighbors(u);
    let right = graph.neighbors(v);
    let mut i = left.partition_point(|&(x, _)| x <= v);
    let mut j = right.partition_point(|&(x, _)| x <= v);
    while i < left.len() && j < right.len() {
        match left[i].0.cmp(&right[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                f(left[i].0, left[i].1, right[j].1);
                i += 1;
                j += 1;
            }
        }
    }
}

fn triangles_at(graph: &BifilteredGraph, u: Vertex) -> Vec<GradedTriangle> {
    let mut out = Vec::new();
    for &(v, uv) in graph.neighbors(u).iter().filter(|&&(v, _)| v > u) {
        for_each_apex(graph, u, v, |w, uw, vw| {
            out.push(GradedTriangle { u, v, w, grade: uv.join(uw).join(vw) });
        });
    }
    out
}

/// Every triangle exactly once, sorted by `(u, v, w)`.
pub fn enumerate_triangles(graph: &BifilteredGraph) -> Vec<GradedTriangle> {
    enumerate_triangles_with(graph, Exec::default())
}

pub fn enumerate_triangles_with(graph: &BifilteredGraph, exec: Exec) -> Vec<GradedTriangle> {
    exec.map_range(graph.n_vertices(), |u| triangles_at(graph, u)).concat()
}

/// Number of triangles without materializing them.
pub fn count_triangles(graph: &BifilteredGraph, exec: Exec) -> u64 {
    exec.sum_range(graph.n_vertices(), |u| {
        let mut count = 0u64;
        for &(v, _) in graph.neighbors(u).iter().filter(|&&(v, _)| v > u) {
            for_each_apex(graph, u, v, |_, _, _| count += 1);
        }
        count
    })
}

/// Sizes of the exported blocks and the translation applied to grades.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExportSummary {
    pub triangles: usize,
    pub edges: usize,
    pub vertices: usize,
    pub shift: Grade,
}

/// Writes the 0-, 1- and 2-dimensional part of the clique bifiltration.
pub fn export_scc2020<W: Write>(
    graph: &BifilteredGraph,
    triangles: &[GradedTriangle],
    mut sink: W,
) -> Result<ExportSummary> {
    let edges: Vec<Edge> = graph.edges();
    let shift = edges
        .iter()
        .map(|e| e.grade)
        .reduce(|a, b| Grade::new(a.s.min(b.s), a.t.min(b.t)))
        .unwrap_or(Grade::new(0.0, 0.0));
    let index_of = |a: Vertex, b: Vertex| -> Option<usize> { edges.binary_search_by(|e| (e.u, e.v).cmp(&(a, b))).ok() };

    writeln!(sink, "scc2020")?;
    writeln!(sink, "2")?;
    writeln!(sink, "{} {} {}", triangles.len(), edges.len(), graph.n_vertices())?;
    for t in triangles {
        let missing = || Error::MissingFacet(t.u, t.v, t.w);
        let i = index_of(t.u, t.v).ok_or_else(missing)?;
        let j = index_of(t.u, t.w).ok_or_else(missing)?;
        let k = index_of(t.v, t.w).ok_or_else(missing)?;
        writeln!(sink, "{} {} ; {} {} {}", t.grade.s - shift.s, t.grade.t - shift.t, i, j, k)?;
    }
    for e in &edges {
        writeln!(sink, "{} {} ; {} {}", e.grade.s - shift.s, e.grade.t - shift.t, e.u, e.v)?;
    }
    for _ in 0..graph.n_vertices() {
        writeln!(sink, "0 0 ;")?;
    }
    sink.flush()?;
    Ok(ExportSummary { triangles: triangles.len(), edges: edges.len(), vertices: graph.n_vertices(), shift })
}

/// One generator: its grade and boundary indices into the next block.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub grade: Grade,
    pub boundary: Vec<usize>,
}

/// A parsed two-parameter scc2020 file; `blocks[0]` is the highest dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Scc2020 {
    pub blocks: Vec<Vec<Generator>>,
}

/// Reads a two-parameter scc2020 file. `#` comments and blank lines are skipped.
pub fn read_scc2020<R: BufRead>(reader: R) -> Result<Scc2020> {
    let mut lines = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.split('#').next().unwrap_or("").trim().to_string();
        if !trimmed.is_empty() {
            lines.push((i + 1, trimmed));
        }
    }
    let mut it = lines.into_iter();
    let (lno, tag) = it.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    if tag != "scc2020" {
        return Err(Error::parse(lno, format!("expected `scc2020`, found `{tag}`")));
    }
    let (lno, params) = it.next().ok_or_else(|| Error::parse(lno, "missing parameter count"))?;
    if params != "2" {
        return Err(Error::parse(lno, "only two parameters are supported"));
    }
    let (lno, sizes) = it.next().ok_or_else(|| Error::parse(lno, "missing block sizes"))?;
    let sizes = sizes
        .split_whitespace()
        .map(|f| f.parse::<usize>().map_err(|_| Error::parse(lno, format!("invalid block size `{f}`"))))
        .collect::<Result<Vec<_>>>()?;
    let mut blocks = Vec::with_capacity(sizes.len());
    for (b, &size) in sizes.iter().enumerate() {
        let next_size = sizes.get(b + 1).copied().unwrap_or(0);
        let mut block = Vec::with_capacity(size);
        for _ in 0..size {
            let (lno, text) = it.next().ok_or_else(|| Error::parse(lno, "file ends inside a block"))?;
            let (grade, boundary) = text.split_once(';').ok_or_else(|| Error::parse(lno, "missing `;` separator"))?;
            let coords = grade
                .split_whitespace()
                .map(|f| f.parse::<f64>().map_err(|_| Error::parse(lno, format!("invalid grade `{f}`"))))
                .collect::<Result<Vec<_>>>()?;
            if coords.len() != 2 {
                return Err(Error::parse(lno, "expected two grade coordinates"));
            }
            let boundary = boundary
                .split_whitespace()
                .map(|f| f.parse::<usize>().map_err(|_| Error::parse(lno, format!("invalid index `{f}`"))))
                .collect::<Result<Vec<_>>>()?;
            if let Some(&bad) = boundary.iter().find(|&&i| i >= next_size) {
                return Err(Error::parse(lno, format!("boundary index {bad} out of range")));
            }
            block.push(Generator { grade: Grade::new(coords[0], coords[1]), boundary });
        }
        blocks.push(block);
    }
    if let Some((lno, _)) = it.next() {
        return Err(Error::parse(lno, "trailing content after the last block"));
    }
    Ok(Scc2020 { blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn g(s: f64, t: f64) -> Grade {
        Grade::new(s, t)
    }

    fn brute_force(graph: &BifilteredGraph) -> Vec<GradedTriangle> {
        let n = graph.n_vertices();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                for w in v + 1..n {
                    if let (Some(a), Some(b), Some(c)) = (graph.grade(u, v), graph.grade(u, w), graph.grade(v, w)) {
                        out.push(GradedTriangle { u, v, w, grade: a.join(b).join(c) });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn small_examples() {
        let tri = BifilteredGraph::from_edges(
            3,
            vec![Edge::new(0, 1, g(0., 0.)), Edge::new(0, 2, g(1., 0.)), Edge::new(1, 2, g(0., 1.))],
        )
        .unwrap();
        assert_eq!(enumerate_triangles(&tri), vec![GradedTriangle { u: 0, v: 1, w: 2, grade: g(1., 1.) }]);

        let k4 =
            BifilteredGraph::from_edges(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| Edge::new(u, v, g(0., 0.)))))
                .unwrap();
        assert_eq!(enumerate_triangles(&k4).len(), 4);
        assert_eq!(count_triangles(&k4, Exec::Sequential), 4);
    }

    #[test]
    fn fix6_matches_brute_force() {
        let f = fix6();
        let fast = enumerate_triangles(&f);
        assert_eq!(fast, brute_force(&f));
        assert!(fast.contains(&GradedTriangle { u: A, v: B, w: X, grade: g(2., 0.) }));
        assert!(fast.contains(&GradedTriangle { u: A, v: B, w: V, grade: g(0., 0.) }));
        assert_eq!(count_triangles(&f, Exec::Parallel), fast.len() as u64);
    }

    #[test]
    fn export_k3() {
        let mut buf = Vec::new();
        let summary = export_scc2020(&k3(), &enumerate_triangles(&k3()), &mut buf).unwrap();
        assert_eq!((summary.triangles, summary.edges, summary.vertices), (1, 3, 3));
        let text = String::from_utf8(buf).unwrap();
        let expected = "scc2020\n2\n1 3 3\n0 0 ; 0 1 2\n0 0 ; 0 1\n0 0 ; 0 2\n0 0 ; 1 2\n0 0 ;\n0 0 ;\n0 0 ;\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn export_edges_only_and_round_trip() {
        let mut buf = Vec::new();
        export_scc2020(&path3(), &[], &mut buf).unwrap();
        let parsed = read_scc2020(buf.as_slice()).unwrap();
        assert_eq!(parsed.blocks.iter().map(Vec::len).collect::<Vec<_>>(), vec![0, 2, 3]);

        let f = fix6().map_grades(|_, _, gr| g(gr.s - 3.5, gr.t + 0.25));
        let tris = enumerate_triangles(&f);
        let mut buf = Vec::new();
        let summary = export_scc2020(&f, &tris, &mut buf).unwrap();
        assert_eq!(summary.shift, g(-3.5, 0.25));
        let parsed = read_scc2020(buf.as_slice()).unwrap();
        let edges = &parsed.blocks[1];
        for (tri, gen) in tris.iter().zip(&parsed.blocks[0]) {
            let join = gen.boundary.iter().map(|&i| edges[i].grade).reduce(Grade::join).unwrap();
            assert_eq!(gen.grade, join);
            assert_eq!(gen.grade, g(tri.grade.s + 3.5, tri.grade.t - 0.25));
        }
    }

    #[test]
    fn missing_facet_is_rejected() {
        let bogus = [GradedTriangle { u: 0, v: 1, w: 2, grade: g(0., 0.) }];
        assert!(matches!(export_scc2020(&path3(), &bogus, Vec::new()), Err(Error::MissingFacet(0, 1, 2))));
    }

    #[test]
    fn reader_rejects_malformed() {
        assert!(read_scc2020("firep\n".as_bytes()).is_err());
        assert!(read_scc2020("scc2020\n2\n0 1 1\n0 0 ; 3\n0 0 ;\n".as_bytes()).is_err());
        assert!(read_scc2020("scc2020\n2\n0 0 1\n".as_bytes()).is_err());
    }
}
