use proptest::prelude::*;
use skelproj_cli::{parse_spec, run_query, Mode, PolytopeSpec, Query, Report};
use skelproj_core::{EngineConfig, Target};

fn spec_strategy() -> impl Strategy<Value = PolytopeSpec> {
    let leaf = prop_oneof![
        (3usize..50).prop_map(PolytopeSpec::Polygon),
        (2usize..50).prop_map(PolytopeSpec::Simplex),
        (3usize..10, 2usize..10).prop_map(|(r, n)| PolytopeSpec::Wedge(r, n)),
    ];
    leaf.prop_recursive(3, 16, 4, |inner| prop::collection::vec(inner, 1..4).prop_map(PolytopeSpec::Product))
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(spec in spec_strategy()) {
        prop_assert_eq!(parse_spec(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn whitespace_is_ignored(spec in spec_strategy()) {
        let spaced = spec.to_string().replace(',', " , ").replace('(', "( ").replace(')', " )");
        prop_assert_eq!(parse_spec(&spaced).unwrap(), spec);
    }

    #[test]
    fn parser_never_panics(text in "[a-z:(),0-9 ]{0,30}") {
        let _ = parse_spec(&text);
    }

    #[test]
    fn polygon_reports_round_trip(sizes in prop::collection::vec(3usize..8, 1..3), k in 0usize..4, e in -1i64..7) {
        let spec = PolytopeSpec::Product(sizes.iter().copied().map(PolytopeSpec::Polygon).collect());
        prop_assume!(k < 2 * sizes.len());
        let q = Query { polytope_spec: spec, target: Target::Skeleton(k), e, mode: Mode::All };
        let r = run_query(&q, &EngineConfig::default()).unwrap();
        prop_assert_eq!(Report::from_json(&r.to_json()).unwrap(), r.clone());
        prop_assert!(r.agreement.pairs.iter().all(|p| p.agree));
        prop_assert_eq!(r.obstructed, r.threshold_e.map(|t| e < t));
    }
}
