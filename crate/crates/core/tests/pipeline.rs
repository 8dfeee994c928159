use fdom::build::{
    density_rips_pipeline, generate_dataset, kde_bandwidth, kde_density_from_distances, pairwise_distances,
    pairwise_distances_with, DatasetKind, DatasetParams,
};
use fdom::expand::{enumerate_triangles, enumerate_triangles_with, export_scc2020, read_scc2020};
use fdom::oracle::{dominating_vertex, verify_collapse};
use fdom::{collapse_once, count_free_at_birth, io, BifilteredGraph, Edge, EdgeOrder, Exec, Grade, Mode, OrderKind};

fn fix6() -> BifilteredGraph {
    let e = |u, v, s, t| Edge::new(u, v, Grade::new(s, t));
    BifilteredGraph::from_edges(
        6,
        vec![
            e(0, 1, 0., 0.),
            e(0, 2, 0., 0.),
            e(1, 2, 0., 0.),
            e(0, 3, 0., 0.),
            e(1, 3, 0., 0.),
            e(2, 3, 0., 0.),
            e(0, 4, 2., 0.),
            e(1, 4, 2., 0.),
            e(2, 4, 2., 0.),
            e(0, 5, 0., 2.),
            e(1, 5, 0., 2.),
            e(3, 5, 0., 2.),
            e(3, 4, 2., 2.),
            e(4, 5, 2., 2.),
        ],
    )
    .unwrap()
}

#[test]
fn free_at_birth_matches_oracle() {
    let g = fix6();
    let expected = g.edges().iter().filter(|e| dominating_vertex(&g.subgraph_at(e.grade), e.u, e.v).is_none()).count();
    assert_eq!(count_free_at_birth(&g), expected);
}

#[test]
fn sequential_and_parallel_builds_agree() {
    let cloud = generate_dataset(DatasetKind::Sphere, 120, 4, &DatasetParams::default()).unwrap();
    let seq = pairwise_distances_with(&cloud, Exec::Sequential);
    let par = pairwise_distances_with(&cloud, Exec::default());
    assert_eq!(seq, par);
    let h = kde_bandwidth(seq.condensed()).unwrap();
    assert_eq!(
        kde_density_from_distances(&seq, h, Exec::Sequential).unwrap(),
        kde_density_from_distances(&seq, h, Exec::default()).unwrap()
    );
    let g = density_rips_pipeline(&seq, None).unwrap();
    let a = enumerate_triangles_with(&g, Exec::Sequential);
    let b = enumerate_triangles_with(&g, Exec::default());
    assert_eq!(a, b);
}

#[test]
fn edge_list_round_trip_after_collapse() {
    let cloud = generate_dataset(DatasetKind::Torus, 80, 2, &DatasetParams::default()).unwrap();
    let g = density_rips_pipeline(&pairwise_distances(&cloud), None).unwrap();
    let (reduced, _) = collapse_once(&g, &EdgeOrder::reverse_lexicographic(), Mode::Strong);
    let mut buf = Vec::new();
    io::write_edge_list(&reduced, &mut buf).unwrap();
    let back = io::read_edge_list(buf.as_slice()).unwrap();
    assert_eq!(back.edges(), reduced.edges());
}

#[test]
fn exported_complex_round_trips() {
    let cloud = generate_dataset(DatasetKind::Circle, 60, 6, &DatasetParams::default()).unwrap();
    let g = density_rips_pipeline(&pairwise_distances(&cloud), None).unwrap();
    let (reduced, _) = collapse_once(&g, &EdgeOrder::reverse_lexicographic(), Mode::Full);
    let triangles = enumerate_triangles(&reduced);
    let mut buf = Vec::new();
    let summary = export_scc2020(&reduced, &triangles, &mut buf).unwrap();
    let parsed = read_scc2020(buf.as_slice()).unwrap();
    assert_eq!(parsed.blocks[0].len(), summary.triangles);
    assert_eq!(parsed.blocks[1].len(), summary.edges);
    for t in &parsed.blocks[0] {
        let facets: Vec<Grade> = t.boundary.iter().map(|&i| parsed.blocks[1][i].grade).collect();
        let join = facets.iter().fold(Grade::new(f64::NEG_INFINITY, f64::NEG_INFINITY), |a, b| a.join(*b));
        assert_eq!(t.grade, join);
    }
}

#[test]
fn small_point_cloud_collapses_preserve_homology() {
    for seed in 0..3 {
        let cloud = generate_dataset(DatasetKind::Circle, 12, seed, &DatasetParams::default()).unwrap();
        let g = density_rips_pipeline(&pairwise_distances(&cloud), None).unwrap();
        for kind in [OrderKind::RevLex, OrderKind::Lex] {
            for mode in [Mode::Strong, Mode::Full] {
                let (reduced, _) = collapse_once(&g, &EdgeOrder::new(kind, seed), mode);
                let report = verify_collapse(&g, &reduced).unwrap();
                assert!(report.passed(), "seed {seed} {kind} {mode}: {:?}", report.discrepancy);
            }
        }
    }
}
