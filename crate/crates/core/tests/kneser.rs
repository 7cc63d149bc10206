use skelproj_core::kneser::{
    lovasz_kneser_chi, sarkaria_index, sind_polygon_coskeleton, sind_simplex_coskeleton,
};
use skelproj_core::{CombinatorialType, ColoringConfig, KneserGraph, SarkariaConfig};

#[test]
fn exact_chromatic_numbers_match_lovasz() {
    let config = ColoringConfig {
        max_vertices: 80,
        ..ColoringConfig::default()
    };
    for n in 1..=8 {
        for l in 1..=n {
            let g = KneserGraph::complete(n, l);
            let c = g.chromatic_number(&config).unwrap();
            assert!(c.is_proper(g.adjacency()));
            assert_eq!(c.num_colors, lovasz_kneser_chi(n, l).unwrap(), "KG({n},{l})");
        }
    }
}

#[test]
fn polygon_closed_form_matches_pipeline() {
    for m in 3..=9 {
        let p = CombinatorialType::polygon(m).unwrap();
        for k in 0..=2 {
            let s = sarkaria_index(&p.coskeleton(k as isize).unwrap(), &SarkariaConfig::default()).unwrap();
            assert_eq!(s.value, sind_polygon_coskeleton(m, k).unwrap(), "m={m} k={k}");
        }
    }
}

#[test]
fn simplex_closed_form_matches_pipeline() {
    for n in 2..=7 {
        let p = CombinatorialType::simplex(n).unwrap();
        for k in 0..n {
            let s = sarkaria_index(&p.coskeleton(k as isize).unwrap(), &SarkariaConfig::default()).unwrap();
            assert_eq!(s.value, sind_simplex_coskeleton(n, k).unwrap(), "n={n} k={k}");
        }
    }
}
