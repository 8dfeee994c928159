//! Plain-text formats: edge lists, point clouds, lower distance matrices and
//! density files.
//!
//! Edge list: a header line `n m` followed by `m` lines `u v s t`
//! (whitespace separated, 0-based ids). Blank lines and lines starting with
//! `#` are ignored by every reader.

use std::io::{BufRead, Write};

use crate::build::{DistanceMatrix, PointCloud};
use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::graph::{BifilteredGraph, Edge};

fn content_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader.lines().enumerate().map(|(i, line)| line.map(|l| (i + 1, l)).map_err(Error::from)).filter(|r| match r {
        Ok((_, l)) => {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        }
        Err(_) => true,
    })
}

fn fields(line: &str) -> impl Iterator<Item = &str> {
    line.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty())
}

fn parse_field<T: std::str::FromStr>(line: usize, field: Option<&str>, what: &str) -> Result<T> {
    let field = field.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    field.parse().map_err(|_| Error::parse(line, format!("invalid {what} `{field}`")))
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<BifilteredGraph> {
    let mut lines = content_lines(reader);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `n m`"))??;
    let mut it = fields(&header);
    let n: usize = parse_field(hline, it.next(), "vertex count")?;
    let m: usize = parse_field(hline, it.next(), "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let (lno, text) = line?;
        let mut it = fields(&text);
        let u = parse_field(lno, it.next(), "vertex")?;
        let v = parse_field(lno, it.next(), "vertex")?;
        let s = parse_field(lno, it.next(), "grade")?;
        let t = parse_field(lno, it.next(), "grade")?;
        if it.next().is_some() {
            return Err(Error::parse(lno, "expected `u v s t`"));
        }
        edges.push(Edge::new(u, v, Grade::new(s, t)));
    }
    if edges.len() != m {
        return Err(Error::parse(hline, format!("header announces {m} edges, found {}", edges.len())));
    }
    BifilteredGraph::from_edges(n, edges)
}

/// Writes edges sorted by `(u, v)`. Floats use the shortest representation
/// that round-trips.
pub fn write_edge_list<W: Write>(graph: &BifilteredGraph, mut out: W) -> Result<()> {
    writeln!(out, "{} {}", graph.n_vertices(), graph.edge_count())?;
    for e in graph.edge_iter() {
        writeln!(out, "{} {} {} {}", e.u, e.v, e.grade.s, e.grade.t)?;
    }
    Ok(())
}

/// One point per line; coordinates separated by commas or whitespace.
pub fn read_point_cloud<R: BufRead>(reader: R) -> Result<PointCloud> {
    let mut points = Vec::new();
    for line in content_lines(reader) {
        let (lno, text) = line?;
        let coords =
            fields(&text).map(|f| parse_field::<f64>(lno, Some(f), "coordinate")).collect::<Result<Vec<_>>>()?;
        points.push(coords);
    }
    PointCloud::new(points)
}

pub fn write_point_cloud<W: Write>(cloud: &PointCloud, mut out: W) -> Result<()> {
    for p in cloud.points() {
        let row: Vec<String> = p.iter().map(f64::to_string).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}

/// Strictly lower-triangular distance matrix, one row per point.
///
/// Row `i` carries the `i` distances to points `0..i`. The empty first row
/// may be omitted, as it usually is in published files.
pub fn read_lower_distance_matrix<R: BufRead>(reader: R) -> Result<DistanceMatrix> {
    let mut rows: Vec<(usize, Vec<f64>)> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim_start().starts_with('#') {
            continue;
        }
        let row = fields(&line).map(|f| parse_field::<f64>(i + 1, Some(f), "distance")).collect::<Result<Vec<_>>>()?;
        rows.push((i + 1, row));
    }
    while rows.last().is_some_and(|(_, r)| r.is_empty()) {
        rows.pop();
    }
    // Leading empty row is point 0; otherwise it was omitted.
    let offset = match rows.first() {
        Some((_, r)) if r.is_empty() => 0,
        _ => 1,
    };
    let n = rows.len() + offset;
    let mut condensed = vec![0.0; n * n.saturating_sub(1) / 2];
    for (k, (lno, row)) in rows.iter().enumerate() {
        let i = k + offset;
        if row.len() != i {
            return Err(Error::parse(*lno, format!("row {i} must have {i} entries, found {}", row.len())));
        }
        for (j, &d) in row.iter().enumerate() {
            if !d.is_finite() || d < 0.0 {
                return Err(Error::parse(*lno, format!("invalid distance {d}")));
            }
            condensed[DistanceMatrix::condensed_index(n, j, i)] = d;
        }
    }
    DistanceMatrix::from_condensed(n, condensed)
}

/// One non-negative value per line.
pub fn read_densities<R: BufRead>(reader: R) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for line in content_lines(reader) {
        let (lno, text) = line?;
        let value: f64 = parse_field(lno, Some(text.trim()), "density")?;
        if !value.is_finite() || value < 0.0 {
            return Err(Error::parse(lno, format!("density must be finite and non-negative, got {value}")));
        }
        out.push(value);
    }
    Ok(out)
}
