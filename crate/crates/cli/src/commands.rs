use std::time::Instant;

use fdom::build::{density_rips_pipeline, generate_dataset, pairwise_distances, DatasetParams};
use fdom::expand::{count_triangles, enumerate_triangles, export_scc2020};
use fdom::{apply_grade_mode, collapse_iterated, io, BifilteredGraph, EdgeOrder, Exec, OrderKind};
use serde::Serialize;

use crate::report::{emit, millis, pct, write_atomic, ConfigEcho, Table};
use crate::{
    input, BenchOrdersArgs, CliError, CliResult, CollapseArgs, CollapseOptions, Emit, ExpandArgs, GenerateArgs,
};

fn prepare(args: &input::InputArgs, options: &CollapseOptions) -> CliResult<BifilteredGraph> {
    let graph = input::load(args, options.seed)?;
    Ok(apply_grade_mode(&graph, options.grade_mode, options.seed))
}

fn save_edges(graph: &BifilteredGraph, path: &std::path::Path) -> CliResult {
    write_atomic(path, |w| io::write_edge_list(graph, w).map_err(Into::into))?;
    Ok(())
}

const COLLAPSE_COLUMNS: &[&str] = &[
    "input",
    "order",
    "mode",
    "grade_mode",
    "iteration",
    "vertices",
    "edges_before",
    "edges_after",
    "removed",
    "removed_pct",
    "remaining_pct",
    "time_ms",
];

pub fn collapse<C: Serialize>(args: &CollapseArgs, config: &ConfigEcho<C>) -> CliResult {
    let o = &args.options;
    let graph = prepare(&args.input, o)?;
    let order = EdgeOrder::new(o.order, o.seed);
    let (reduced, run) = collapse_iterated(&graph, &order, o.mode, o.iterations as usize);
    if let Some(path) = &args.output {
        save_edges(&reduced, path)?;
    }

    let mut table = Table::new("collapse", COLLAPSE_COLUMNS);
    let mut remaining = run.edges_before;
    for (i, (&removed, &time)) in run.removed_per_iteration.iter().zip(&run.wall_time_per_iteration).enumerate() {
        remaining -= removed;
        table.push(vec![
            args.input.label(),
            o.order.to_string(),
            o.mode.to_string(),
            o.grade_mode.to_string(),
            (i + 1).to_string(),
            graph.n_vertices().to_string(),
            run.edges_before.to_string(),
            remaining.to_string(),
            removed.to_string(),
            pct(run.removed_percent_in(i)),
            pct(100.0 * remaining as f64 / run.edges_before.max(1) as f64),
            millis(time),
        ]);
    }
    emit(&table, args.report.format, o.seed, config, args.report.report.as_deref())
}

const BENCH_COLUMNS: &[&str] =
    &["input", "order", "mode", "grade_mode", "vertices", "edges_before", "edges_after", "removed_pct", "time_ms"];

pub fn bench_orders<C: Serialize>(args: &BenchOrdersArgs, config: &ConfigEcho<C>) -> CliResult {
    let o = &args.options;
    let graph = prepare(&args.input, o)?;
    let mut table = Table::new("bench-orders", BENCH_COLUMNS);
    for kind in OrderKind::ALL {
        let (_, run) = collapse_iterated(&graph, &EdgeOrder::new(kind, o.seed), o.mode, o.iterations as usize);
        table.push(vec![
            args.input.label(),
            kind.to_string(),
            o.mode.to_string(),
            o.grade_mode.to_string(),
            graph.n_vertices().to_string(),
            run.edges_before.to_string(),
            run.edges_after.to_string(),
            pct(run.removed_percent()),
            millis(run.total_time()),
        ]);
    }
    let path = args.report.report.as_deref().or(args.output.as_deref());
    emit(&table, args.report.format, o.seed, config, path)
}

const EXPAND_COLUMNS: &[&str] = &[
    "input",
    "vertices",
    "edges_before",
    "edges_after",
    "triangles_before",
    "triangles_after",
    "collapse_ms",
    "export_ms",
];

pub fn expand<C: Serialize>(args: &ExpandArgs, config: &ConfigEcho<C>) -> CliResult {
    let o = &args.options;
    let graph = prepare(&args.input, o)?;
    let exec = Exec::default();
    let triangles_before = count_triangles(&graph, exec);

    let start = Instant::now();
    let reduced = if args.no_collapse {
        graph.clone()
    } else {
        collapse_iterated(&graph, &EdgeOrder::new(o.order, o.seed), o.mode, o.iterations as usize).0
    };
    let collapse_time = start.elapsed();

    let triangles_after = if args.no_collapse { triangles_before } else { count_triangles(&reduced, exec) };
    if triangles_after > args.max_simplices {
        return Err(CliError::Budget(format!(
            "{triangles_after} triangles exceed --max-simplices {}",
            args.max_simplices
        )));
    }

    let start = Instant::now();
    let triangles = enumerate_triangles(&reduced);
    write_atomic(&args.output, |w| export_scc2020(&reduced, &triangles, w).map(drop).map_err(Into::into))?;
    let export_time = start.elapsed();

    let mut table = Table::new("expand", EXPAND_COLUMNS);
    table.push(vec![
        args.input.label(),
        graph.n_vertices().to_string(),
        graph.edge_count().to_string(),
        reduced.edge_count().to_string(),
        triangles_before.to_string(),
        triangles_after.to_string(),
        millis(collapse_time),
        millis(export_time),
    ]);
    emit(&table, args.report_format, o.seed, config, args.report.as_deref())
}

pub fn generate(args: &GenerateArgs) -> CliResult {
    let cloud = generate_dataset(args.dataset, args.n, args.seed, &DatasetParams::default())
        .map_err(|e| CliError::Usage(format!("--dataset {}: {e}", args.dataset.name())))?;
    match args.emit {
        Emit::Points => write_atomic(&args.output, |w| io::write_point_cloud(&cloud, w).map_err(Into::into))?,
        Emit::Edges => {
            let graph = density_rips_pipeline(&pairwise_distances(&cloud), None).map_err(anyhow::Error::from)?;
            let graph = apply_grade_mode(&graph, args.grade_mode, args.seed);
            save_edges(&graph, &args.output)?;
        }
    }
    Ok(())
}
