use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skelproj_core::kneser::sarkaria_index;
use skelproj_core::{CombinatorialType, Face, FaceType, ProductType, SarkariaConfig, SimplicialComplex};

fn sind(k: &SimplicialComplex) -> i64 {
    sarkaria_index(k, &SarkariaConfig::default()).unwrap().value
}

fn random_complex(rng: &mut impl Rng, n: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=5);
    let gens = (0..count).map(|_| Face::from_mask(rng.gen_range(0..(1u64 << n))));
    SimplicialComplex::new(n, gens).unwrap()
}

#[test]
fn join_adds_indices() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let a = rng.gen_range(1..=8);
        let b = rng.gen_range(1..=16 - a);
        let k = random_complex(&mut rng, a);
        let l = random_complex(&mut rng, b);
        assert_eq!(sind(&k.join(&l)), sind(&k) + sind(&l) + 1, "{k:?} * {l:?}");
    }
}

#[test]
fn cotype_index_is_linear() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let mut factors = Vec::new();
        let mut m = 0;
        while factors.is_empty() || (m < 12 && rng.gen_bool(0.6)) {
            let f = if rng.gen_bool(0.5) {
                CombinatorialType::polygon(rng.gen_range(3..=5)).unwrap()
            } else {
                CombinatorialType::simplex(rng.gen_range(2..=5)).unwrap()
            };
            if m + f.num_facets() > 16 {
                break;
            }
            m += f.num_facets();
            factors.push(f);
        }
        let p = ProductType::new(factors).unwrap();
        let lambda = FaceType(p.factors().iter().map(|f| rng.gen_range(0..=f.dim())).collect());
        let expected: i64 = p
            .factors()
            .iter()
            .zip(lambda.parts())
            .map(|(f, &l)| sind(&f.coskeleton(l as isize).unwrap()))
            .sum::<i64>()
            + p.factors().len() as i64
            - 1;
        assert_eq!(sind(&p.cotype_complex(&lambda).unwrap()), expected, "{p:?} {lambda}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn index_is_at_most_twice_the_dimension_plus_one(
        n in 1usize..=9,
        masks in prop::collection::vec(any::<u64>(), 1..6),
    ) {
        let k = SimplicialComplex::new(n, masks.into_iter().map(|x| Face::from_mask(x & ((1 << n) - 1)))).unwrap();
        let s = sarkaria_index(&k, &SarkariaConfig::default()).unwrap();
        prop_assert!(s.value <= 2 * k.dim() as i64 + 1);
        prop_assert_eq!(s.coloring.num_colors, s.chromatic_number);
    }
}
