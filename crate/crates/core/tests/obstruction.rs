use skelproj_core::obstruction::{
    brute_force_lower, edim_lower_polygon_products, edim_lower_simplex_products, edim_upper_polygon_products,
    edim_upper_simplex_products, polygon_mu_star, polygon_products_threshold, simplex_products_threshold,
    wedge_skeleton_threshold, wedge_special_faces_threshold, KnapsackInstance, KnapsackOutcome, Outcome,
};
use skelproj_core::{
    analyze, BoundSource, ColoringConfig, CombinatorialType, EngineConfig, ProductType, SarkariaConfig, Target,
};

fn wide_budget() -> SarkariaConfig {
    SarkariaConfig {
        coloring: ColoringConfig { max_vertices: 1024, ..ColoringConfig::default() },
        ..SarkariaConfig::default()
    }
}

fn optimum(inst: &KnapsackInstance) -> i64 {
    match inst.solve() {
        KnapsackOutcome::Optimal { value, .. } => value,
        KnapsackOutcome::Infeasible => panic!("infeasible: {inst:?}"),
    }
}

fn polygon_sizes(r_e: usize, r_o: usize) -> Vec<usize> {
    let evens = [4, 6];
    let odds = [3, 5, 7];
    (0..r_e).map(|i| evens[i % 2]).chain((0..r_o).map(|i| odds[i % 3])).collect()
}

#[test]
fn knapsack_matches_simplex_closed_form() {
    for n in 2..=6 {
        for r in 1..=4 {
            for k in 0..r * (n - 1) {
                let s = optimum(&KnapsackInstance::simplex_power(n, r, k).unwrap());
                assert_eq!(
                    s + r as i64 - 1,
                    edim_lower_simplex_products(n, r, k).unwrap(),
                    "n={n} r={r} k={k}"
                );
            }
        }
    }
}

#[test]
fn knapsack_matches_polygon_closed_form() {
    for r_e in 0..=4 {
        for r_o in 0..=4 {
            let r = r_e + r_o;
            if r == 0 {
                continue;
            }
            for k in 0..=2 * r {
                let s = optimum(&KnapsackInstance::polygon_product(r_e, r_o, k).unwrap());
                let mu = 2 * r as i64 - s;
                assert_eq!(mu, polygon_mu_star(r_e, r_o, k), "r_e={r_e} r_o={r_o} k={k}");
                for m in [polygon_sizes(r_e, r_o).iter().sum::<usize>(), 3 * r + 2 * r_e + 7] {
                    assert_eq!(m as i64 - 1 - mu, edim_lower_polygon_products(m, r_e, r_o, k).unwrap());
                }
            }
        }
    }
}

#[test]
fn lower_bounds_never_exceed_upper_bounds() {
    for r_e in 0..=4 {
        for r_o in 0..=4 {
            let r = r_e + r_o;
            if r == 0 {
                continue;
            }
            let m: usize = polygon_sizes(r_e, r_o).iter().sum();
            for k in 0..2 * r {
                let lo = edim_lower_polygon_products(m, r_e, r_o, k).unwrap();
                let hi = edim_upper_polygon_products(m, r_e, r_o, k).unwrap();
                assert!(lo <= hi, "r_e={r_e} r_o={r_o} k={k}: {lo} > {hi}");
            }
        }
    }
    for n in 2..=8 {
        for r in 1..=5 {
            for k in 0..r * (n - 1) {
                let lo = edim_lower_simplex_products(n, r, k).unwrap();
                let hi = edim_upper_simplex_products(n, r, k).unwrap();
                assert!(lo <= hi, "n={n} r={r} k={k}: {lo} > {hi}");
            }
        }
    }
}

#[test]
fn thresholds_grow_with_k() {
    for r_e in 0..=4 {
        for r_o in 0..=4 {
            let r = r_e + r_o;
            for k in 1..2 * r {
                assert!(
                    polygon_products_threshold(r_e, r_o, k - 1).unwrap() <= polygon_products_threshold(r_e, r_o, k).unwrap()
                );
            }
        }
    }
    for n in 2..=8 {
        for r in 1..=5 {
            for k in 1..r * (n - 1) {
                assert!(simplex_products_threshold(n, r, k - 1).unwrap() <= simplex_products_threshold(n, r, k).unwrap());
            }
        }
    }
    let t = |o: Outcome| o.verdict().unwrap().threshold_e;
    for r in 4..=7 {
        for n in 2..=6 {
            let d = r * (n - 1) + 2;
            for k in 1..d {
                assert!(t(wedge_skeleton_threshold(r, n, k - 1).unwrap()) <= t(wedge_skeleton_threshold(r, n, k).unwrap()));
                if k >= 3 {
                    assert!(
                        t(wedge_special_faces_threshold(r, n, k - 1).unwrap())
                            <= t(wedge_special_faces_threshold(r, n, k).unwrap())
                    );
                }
            }
        }
    }
}

fn small_products() -> Vec<ProductType> {
    let poly = |m| CombinatorialType::polygon(m).unwrap();
    let simp = |n| CombinatorialType::simplex(n).unwrap();
    let mut out: Vec<Vec<CombinatorialType>> = Vec::new();
    for a in 3..=7 {
        out.push(vec![poly(a)]);
        for b in a..=(14 - a).min(11) {
            out.push(vec![poly(a), poly(b)]);
        }
    }
    for sizes in [[3, 3, 3], [3, 3, 4], [3, 4, 4], [4, 4, 4], [3, 4, 5], [3, 3, 5], [4, 5, 5]] {
        out.push(sizes.iter().map(|&m| poly(m)).collect());
    }
    for sizes in [[3, 3, 3, 3], [3, 3, 3, 4], [3, 3, 4, 4], [3, 3, 3, 5]] {
        out.push(sizes.iter().map(|&m| poly(m)).collect());
    }
    for n in 2..=7 {
        for r in 1..=7 {
            if n * r <= 14 {
                out.push(vec![simp(n); r]);
            }
        }
    }
    out.into_iter()
        .filter(|f| f.iter().map(CombinatorialType::num_facets).sum::<usize>() <= 14)
        .map(|f| ProductType::new(f).unwrap())
        .collect()
}

#[test]
fn brute_force_matches_closed_forms_up_to_fourteen_facets() {
    let cfg = wide_budget();
    for p in small_products() {
        let m = p.num_facets();
        for k in 0..p.dim() {
            let brute = brute_force_lower(&p, k as isize, &cfg).unwrap().sind;
            let closed = match p.factors() {
                [CombinatorialType::Simplex(s), ..] => edim_lower_simplex_products(s.facets(), p.factors().len(), k),
                fs => {
                    let r_o = fs.iter().filter(|f| matches!(f, CombinatorialType::Polygon(q) if q.is_odd())).count();
                    edim_lower_polygon_products(m, fs.len() - r_o, r_o, k)
                }
            }
            .unwrap();
            assert_eq!(brute, closed, "{p:?} k={k}");
        }
    }
}

#[test]
fn engine_certificates_recheck_and_paths_agree() {
    let cfg = EngineConfig { sarkaria: wide_budget() };
    for p in small_products() {
        let t = CombinatorialType::Product(p.clone());
        for k in 0..p.dim() {
            for e in 0..=p.dim() as i64 {
                let a = analyze(&t, Target::Skeleton(k), e, &BoundSource::ALL, &cfg).unwrap();
                a.check().unwrap();
                assert_eq!(a.agreement, Some(true));
                assert!(a.certificate.as_ref().unwrap().recheck());
            }
        }
    }
}

#[test]
fn wedge_closed_forms_match_their_pipeline() {
    let cfg = EngineConfig::default();
    let fast = [BoundSource::ClosedForm, BoundSource::Ilp];
    for r in 3..=6 {
        for n in 2..=5 {
            let w = CombinatorialType::wedge(r, n).unwrap();
            let d = w.dim();
            for e in [1, r as i64, r as i64 + 1] {
                for k in 0..d {
                    let a = analyze(&w, Target::Skeleton(k), e, &fast, &cfg).unwrap();
                    a.check().unwrap();
                    assert_eq!(a.verdict.is_some(), r >= 4);
                    if k >= 2 {
                        analyze(&w, Target::Special(k), e, &fast, &cfg).unwrap().check().unwrap();
                    }
                }
                analyze(&w, Target::Surface, e, &BoundSource::ALL, &cfg).unwrap().check().unwrap();
            }
        }
    }
}
