use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use clap::Args;
use fdom::build::{density_rips_pipeline, pairwise_distances, DistanceMatrix};
use fdom::build::{generate_dataset, DatasetKind, DatasetParams};
use fdom::{io, BifilteredGraph};
use serde::Serialize;

use crate::{CliError, CliResult};

/// Exactly one input source.
#[derive(Debug, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Point cloud, one point per line (comma or whitespace separated).
    #[arg(long, value_name = "FILE")]
    pub points: Option<PathBuf>,
    /// Lower-triangular distance matrix.
    #[arg(long, value_name = "FILE")]
    pub distances: Option<PathBuf>,
    /// Bifiltered edge list (`n m` header, then `u v s t` lines).
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    /// Generated dataset: sphere, uniform, circle, torus or swiss-roll.
    #[arg(long, requires = "n")]
    pub dataset: Option<DatasetKind>,
}

#[derive(Debug, Args, Serialize)]
pub struct InputArgs {
    #[command(flatten)]
    pub source: Source,
    /// Number of generated points.
    #[arg(long, requires = "dataset")]
    pub n: Option<usize>,
    /// One density per point, replacing the kernel density estimate.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["edges"])]
    pub densities: Option<PathBuf>,
}

impl InputArgs {
    /// Short label for reports.
    pub fn label(&self) -> String {
        let s = &self.source;
        match (&s.points, &s.distances, &s.edges, s.dataset) {
            (Some(p), ..) => p.display().to_string(),
            (_, Some(p), ..) => p.display().to_string(),
            (_, _, Some(p), _) => p.display().to_string(),
            (.., Some(kind)) => format!("{}-{}", kind.name(), self.n.unwrap_or(0)),
            _ => String::new(),
        }
    }
}

pub fn open(path: &Path) -> CliResult<BufReader<File>> {
    File::open(path).map(BufReader::new).map_err(|e| input_error(path, e.into()))
}

pub fn input_error(path: &Path, source: fdom::Error) -> CliError {
    CliError::Input { path: path.display().to_string(), source }
}

pub fn read_edges(path: &Path) -> CliResult<BifilteredGraph> {
    io::read_edge_list(open(path)?).map_err(|e| input_error(path, e))
}

fn read_densities(path: Option<&Path>) -> CliResult<Option<Vec<f64>>> {
    path.map(|p| io::read_densities(open(p)?).map_err(|e| input_error(p, e))).transpose()
}

fn rips(dist: &DistanceMatrix, densities: Option<Vec<f64>>, source: &Path) -> CliResult<BifilteredGraph> {
    density_rips_pipeline(dist, densities).map_err(|e| input_error(source, e))
}

/// Builds the bifiltered graph described by `args`. `seed` drives dataset generation.
pub fn load(args: &InputArgs, seed: u64) -> CliResult<BifilteredGraph> {
    let densities = read_densities(args.densities.as_deref())?;
    let source = &args.source;
    if let Some(path) = &source.edges {
        return read_edges(path);
    }
    if let Some(path) = &source.points {
        let cloud = io::read_point_cloud(open(path)?).map_err(|e| input_error(path, e))?;
        return rips(&pairwise_distances(&cloud), densities, path);
    }
    if let Some(path) = &source.distances {
        let dist = io::read_lower_distance_matrix(open(path)?).map_err(|e| input_error(path, e))?;
        return rips(&dist, densities, path);
    }
    let kind = source.dataset.expect("clap enforces one input source");
    let n = args.n.expect("clap ties --n to --dataset");
    let cloud = generate_dataset(kind, n, seed, &DatasetParams::default())
        .map_err(|e| CliError::Usage(format!("--dataset {}: {e}", kind.name())))?;
    density_rips_pipeline(&pairwise_distances(&cloud), densities).map_err(|e| match &args.densities {
        Some(p) => input_error(p, e),
        None => CliError::Other(e.into()),
    })
}
