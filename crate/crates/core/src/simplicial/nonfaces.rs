use serde::{Deserialize, Serialize};

use super::{minimal_elements, Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Largest ground set for which a full subset table is materialized
/// (2^30 bits = 128 MiB).
const HARD_TABLE_LIMIT: usize = 30;

/// Ground size up to which `f_vector` counts faces through the table.
pub(crate) const TABLE_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonFaceStrategy {
    /// Exhaustive scan up to `exhaustive_limit`, transversals above it.
    #[default]
    Auto,
    Exhaustive,
    Transversal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonFaceConfig {
    pub strategy: NonFaceStrategy,
    /// Largest ground set scanned exhaustively.
    pub exhaustive_limit: usize,
    /// Cap on intermediate transversal families.
    pub max_transversals: usize,
}

impl Default for NonFaceConfig {
    fn default() -> Self {
        Self {
            strategy: NonFaceStrategy::Auto,
            exhaustive_limit: 24,
            max_transversals: 200_000,
        }
    }
}

pub(crate) fn minimal_non_faces(k: &SimplicialComplex, config: &NonFaceConfig) -> Result<Vec<Face>> {
    let n = k.ground_size();
    let limit = config.exhaustive_limit.min(HARD_TABLE_LIMIT);
    match config.strategy {
        NonFaceStrategy::Auto if n <= limit => Ok(exhaustive(k)),
        NonFaceStrategy::Auto | NonFaceStrategy::Transversal => {
            let edges: Vec<Face> = k.facets().iter().map(|f| f.complement(n)).collect();
            minimal_transversals(&edges, config.max_transversals)
        }
        NonFaceStrategy::Exhaustive if n <= limit => Ok(exhaustive(k)),
        NonFaceStrategy::Exhaustive => Err(Error::Resource(format!(
            "exhaustive non-face scan refused for ground size {n} (limit {limit})"
        ))),
    }
}

/// Downward-closed membership table over all `2^n` subsets, bit-packed.
pub(crate) struct FaceTable {
    n: usize,
    words: Vec<u64>,
}

// Bit positions whose index has bit `i` clear, for the in-word passes.
const LOW_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

impl FaceTable {
    pub(crate) fn build(k: &SimplicialComplex) -> Self {
        let n = k.ground_size();
        debug_assert!(n <= HARD_TABLE_LIMIT);
        let n_words = if n >= 6 { 1usize << (n - 6) } else { 1 };
        let mut words = vec![0u64; n_words];
        for f in k.facets() {
            let m = f.to_mask().expect("ground below 64") as usize;
            words[m >> 6] |= 1u64 << (m & 63);
        }
        // Close downwards one coordinate at a time: T[S] |= T[S ∪ {i}].
        for i in 0..n {
            if i < 6 {
                let shift = 1u32 << i;
                for w in words.iter_mut() {
                    *w |= (*w >> shift) & LOW_MASKS[i];
                }
            } else {
                let step = 1usize << (i - 6);
                for w in 0..n_words {
                    if w & step == 0 {
                        words[w] |= words[w | step];
                    }
                }
            }
        }
        Self { n, words }
    }

    #[inline]
    pub(crate) fn is_face(&self, mask: u64) -> bool {
        let m = mask as usize;
        self.words[m >> 6] & (1u64 << (m & 63)) != 0
    }

    pub(crate) fn for_each_face(&self, mut f: impl FnMut(u64)) {
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let b = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                f(((wi as u64) << 6) | b);
            }
        }
    }

    fn for_each_non_face(&self, mut f: impl FnMut(u64)) {
        let total = 1u64 << self.n;
        for (wi, &w) in self.words.iter().enumerate() {
            let mut bits = !w;
            while bits != 0 {
                let b = bits.trailing_zeros() as u64;
                bits &= bits - 1;
                let mask = ((wi as u64) << 6) | b;
                if mask < total {
                    f(mask);
                }
            }
        }
    }
}

fn exhaustive(k: &SimplicialComplex) -> Vec<Face> {
    let table = FaceTable::build(k);
    // A minimal non-face exceeds a facet by exactly one element.
    let max_size = (k.dim() + 2) as u32;
    let mut out = Vec::new();
    table.for_each_non_face(|mask| {
        if mask.count_ones() > max_size {
            return;
        }
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if !table.is_face(mask ^ bit) {
                return;
            }
            rest ^= bit;
        }
        out.push(Face::from_mask(mask));
    });
    out.sort();
    out
}

/// Minimal transversals (hitting sets) of a hypergraph, by Berge's
/// edge-at-a-time multiplication. An empty edge has no transversal.
pub fn minimal_transversals(edges: &[Face], max_family: usize) -> Result<Vec<Face>> {
    let mut edges: Vec<&Face> = edges.iter().collect();
    edges.sort_by_key(|e| e.len());
    let mut family = vec![Face::empty()];
    for edge in edges {
        if edge.is_empty() {
            return Ok(Vec::new());
        }
        let mut next = Vec::with_capacity(family.len());
        for t in family {
            if !t.is_disjoint(edge) {
                next.push(t);
            } else {
                for v in edge.iter() {
                    let mut grown = t.clone();
                    grown.insert(v);
                    next.push(grown);
                }
            }
            if next.len() > max_family {
                return Err(Error::Resource(format!(
                    "transversal family exceeded {max_family} sets"
                )));
            }
        }
        family = minimal_elements(next);
    }
    Ok(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg(strategy: NonFaceStrategy) -> NonFaceConfig {
        NonFaceConfig {
            strategy,
            ..NonFaceConfig::default()
        }
    }

    fn both(k: &SimplicialComplex) -> Vec<Face> {
        let a = k.minimal_non_faces(&cfg(NonFaceStrategy::Exhaustive)).unwrap();
        let b = k.minimal_non_faces(&cfg(NonFaceStrategy::Transversal)).unwrap();
        assert_eq!(a, b, "strategies disagree on {k:?}");
        a
    }

    /// Oracle: test every subset directly against the facets.
    fn brute(k: &SimplicialComplex) -> Vec<Face> {
        let n = k.ground_size();
        let is_face = |m: u64| k.contains_unchecked(&Face::from_mask(m));
        let mut out = Vec::new();
        for m in 0..(1u64 << n) {
            if !is_face(m) && (0..n).filter(|i| m >> i & 1 == 1).all(|i| is_face(m ^ (1 << i))) {
                out.push(Face::from_mask(m));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn square_sigma0() {
        let k = SimplicialComplex::new(4, [[2, 3], [3, 0], [0, 1], [1, 2]].map(Face::from)).unwrap();
        assert_eq!(both(&k), vec![Face::from([0, 2]), Face::from([1, 3])]);
    }

    #[test]
    fn pentagon_sigma0() {
        let k = SimplicialComplex::new(
            5,
            [[2, 3, 4], [3, 4, 0], [4, 0, 1], [0, 1, 2], [1, 2, 3]].map(Face::from),
        )
        .unwrap();
        let nf = both(&k);
        assert_eq!(nf.len(), 5);
        assert!(nf.iter().all(|f| f.len() == 3));
        assert!(nf.contains(&Face::from([0, 2, 3])));
    }

    #[test]
    fn full_simplex_and_empty_complex() {
        assert!(both(&SimplicialComplex::simplex(6)).is_empty());
        assert!(both(&SimplicialComplex::simplex(0)).is_empty());
        let singles: Vec<Face> = (0..3).map(|i| Face::from([i])).collect();
        assert_eq!(both(&SimplicialComplex::empty(3)), singles);
    }

    #[test]
    fn ghost_vertices_are_minimal_non_faces() {
        let k = SimplicialComplex::new(3, [Face::from([0, 1])]).unwrap();
        assert_eq!(both(&k), vec![Face::from([2])]);
    }

    #[test]
    fn exhaustive_guard_is_enforced() {
        let k = SimplicialComplex::simplex(10);
        let config = NonFaceConfig {
            strategy: NonFaceStrategy::Exhaustive,
            exhaustive_limit: 8,
            ..NonFaceConfig::default()
        };
        assert!(matches!(k.minimal_non_faces(&config), Err(Error::Resource(_))));
        let auto = NonFaceConfig {
            exhaustive_limit: 8,
            ..NonFaceConfig::default()
        };
        assert!(k.minimal_non_faces(&auto).unwrap().is_empty());
    }

    #[test]
    fn transversal_guard_is_enforced() {
        // Twelve disjoint pairs: one choice per pair gives 2^12 transversals.
        let edges: Vec<Face> = (0..12).map(|i| Face::from([2 * i, 2 * i + 1])).collect();
        assert!(matches!(minimal_transversals(&edges, 1000), Err(Error::Resource(_))));
        assert_eq!(minimal_transversals(&edges, 5000).unwrap().len(), 4096);
    }

    #[test]
    fn wide_ground_uses_transversals() {
        let facets: Vec<Face> = (0..70).map(|i| Face::from([i, (i + 1) % 70])).collect();
        let cycle = SimplicialComplex::new(70, facets).unwrap();
        let nf = cycle.minimal_non_faces(&NonFaceConfig::default()).unwrap();
        // Non-edges of the 70-cycle plus nothing larger (triangles need an edge pair sharing a vertex).
        assert_eq!(nf.len(), 70 * 69 / 2 - 70);
        assert!(nf.iter().all(|f| f.len() == 2));
    }

    fn small_complex() -> impl Strategy<Value = SimplicialComplex> {
        (1usize..=9).prop_flat_map(|n| {
            prop::collection::vec(0u64..(1u64 << n), 1..6)
                .prop_map(move |masks| SimplicialComplex::new(n, masks.into_iter().map(Face::from_mask)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn both_strategies_match_brute_force(k in small_complex()) {
            let nf = both(&k);
            prop_assert_eq!(&nf, &brute(&k));
            for f in &nf {
                prop_assert!(!k.contains_unchecked(f));
                for v in f.iter() {
                    let mut sub = f.clone();
                    sub.remove(v);
                    prop_assert!(k.contains_unchecked(&sub));
                }
            }
        }
    }
}
