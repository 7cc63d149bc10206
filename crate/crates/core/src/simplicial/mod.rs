//! Finite simplicial complexes on an indexed ground set.
//!
//! A complex is stored by its facets (inclusion-maximal faces), kept sorted
//! so that structural equality is complex equality. The void complex is not
//! representable: the smallest complex is `{∅}`.

mod face;
mod nonfaces;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

pub use face::{subsets_of_size, Face, Members};
pub use nonfaces::{minimal_transversals, NonFaceConfig, NonFaceStrategy};

use crate::error::{ensure_input, input_err, Result};

/// Labeled elements `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroundSet {
    size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl GroundSet {
    pub fn new(size: usize) -> Self {
        Self { size, labels: None }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        Self {
            size: labels.len(),
            labels: Some(labels),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    /// `self` followed by `other`, with `other`'s indices shifted.
    pub fn concat(&self, other: &GroundSet) -> GroundSet {
        let labels = match (&self.labels, &other.labels) {
            (None, None) => None,
            _ => Some(
                (0..self.size)
                    .map(|i| self.label(i))
                    .chain((0..other.size).map(|i| other.label(i)))
                    .collect(),
            ),
        };
        GroundSet {
            size: self.size + other.size,
            labels,
        }
    }

    pub fn check(&self, face: &Face) -> Result<()> {
        match face.max_element() {
            Some(top) if top >= self.size => Err(input_err!(
                "face {face} is not contained in a ground set of size {}",
                self.size
            )),
            _ => Ok(()),
        }
    }
}

impl From<usize> for GroundSet {
    fn from(size: usize) -> Self {
        GroundSet::new(size)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    ground: GroundSet,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex generated by `generators`: its facets are the
    /// inclusion-maximal generators.
    pub fn new(ground: impl Into<GroundSet>, generators: impl IntoIterator<Item = Face>) -> Result<Self> {
        let ground = ground.into();
        let mut gens: Vec<Face> = generators.into_iter().collect();
        ensure_input!(
            !gens.is_empty(),
            "a complex needs at least one generator (use {{∅}} for the empty complex)"
        );
        for g in &gens {
            ground.check(g)?;
        }
        gens.sort();
        gens.dedup();
        Ok(Self {
            ground,
            facets: maximal_elements(gens),
        })
    }

    /// `{∅}` on the given ground set.
    pub fn empty(ground: impl Into<GroundSet>) -> Self {
        Self {
            ground: ground.into(),
            facets: vec![Face::empty()],
        }
    }

    /// The full simplex `2^[n]`.
    pub fn simplex(n: usize) -> Self {
        Self {
            ground: GroundSet::new(n),
            facets: vec![Face::range(0, n)],
        }
    }

    pub(crate) fn from_maximal_unchecked(ground: GroundSet, mut facets: Vec<Face>) -> Self {
        facets.sort();
        facets.dedup();
        Self { ground, facets }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn ground_size(&self) -> usize {
        self.ground.size
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Largest facet size minus one; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Face::len).max().unwrap_or(0) as isize - 1
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == self.ground.size
    }

    pub fn contains_face(&self, face: &Face) -> Result<bool> {
        self.ground.check(face)?;
        Ok(self.contains_unchecked(face))
    }

    pub(crate) fn contains_unchecked(&self, face: &Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// Every facet of `self` is a face of `other` (ground sets must agree).
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.ground.size == other.ground.size
            && self.facets.iter().all(|f| other.contains_unchecked(f))
    }

    /// `K * L` on the concatenated ground set, `L` shifted past `K`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let offset = self.ground.size;
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.union(&g.shifted(offset)));
            }
        }
        Self::from_maximal_unchecked(self.ground.concat(&other.ground), facets)
    }

    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        ensure_input!(
            self.ground.size == other.ground.size,
            "cannot unite complexes on ground sets of sizes {} and {}",
            self.ground.size,
            other.ground.size
        );
        let mut gens = self.facets.clone();
        gens.extend(other.facets.iter().cloned());
        gens.sort();
        gens.dedup();
        Ok(Self {
            ground: self.ground.clone(),
            facets: maximal_elements(gens),
        })
    }

    /// All faces with at most `j + 1` elements.
    pub fn skeleton(&self, j: isize) -> Result<SimplicialComplex> {
        ensure_input!(j >= -1, "skeleton dimension must be at least -1, got {j}");
        let cap = (j + 1) as usize;
        let mut gens = Vec::new();
        for f in &self.facets {
            if f.len() <= cap {
                gens.push(f.clone());
            } else {
                gens.extend(subsets_of_size(f, cap));
            }
        }
        gens.sort();
        gens.dedup();
        Ok(Self {
            ground: self.ground.clone(),
            facets: maximal_elements(gens),
        })
    }

    /// `(f_0, …, f_dim)`; empty for `{∅}`.
    pub fn f_vector(&self) -> Vec<u64> {
        let dim = self.dim();
        let mut f = vec![0u64; (dim + 1) as usize];
        if self.ground.size <= nonfaces::TABLE_LIMIT {
            let table = nonfaces::FaceTable::build(self);
            table.for_each_face(|mask| {
                let size = mask.count_ones() as usize;
                if size > 0 {
                    f[size - 1] += 1;
                }
            });
        } else {
            let mut seen: HashSet<Face> = HashSet::new();
            for facet in &self.facets {
                for size in 1..=facet.len() {
                    for s in subsets_of_size(facet, size) {
                        if seen.insert(s) {
                            f[size - 1] += 1;
                        }
                    }
                }
            }
        }
        f
    }

    /// Alternating sum `f_0 − f_1 + f_2 − …`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Inclusion-minimal subsets of the ground set that are not faces.
    pub fn minimal_non_faces(&self, config: &NonFaceConfig) -> Result<Vec<Face>> {
        nonfaces::minimal_non_faces(self, config)
    }
}

/// Keeps the inclusion-maximal sets of a sorted, deduplicated list.
pub(crate) fn maximal_elements(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort();
    sets.dedup();
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    // Distinct sets of equal size are never nested, so only the strictly
    // larger prefix of `kept` needs a subset check.
    let mut larger = 0;
    for s in sets {
        while larger < kept.len() && kept[larger].len() > s.len() {
            larger += 1;
        }
        if !kept[..larger].iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Keeps the inclusion-minimal sets.
pub(crate) fn minimal_elements(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort();
    sets.dedup();
    sets.sort_by_key(Face::len);
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    let mut smaller = 0;
    for s in sets {
        while smaller < kept.len() && kept[smaller].len() < s.len() {
            smaller += 1;
        }
        if !kept[..smaller].iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon_sigma0() -> SimplicialComplex {
        SimplicialComplex::new(
            5,
            [[2, 3, 4], [3, 4, 0], [4, 0, 1], [0, 1, 2], [1, 2, 3]].map(Face::from),
        )
        .unwrap()
    }

    fn facets(k: &SimplicialComplex) -> Vec<Vec<usize>> {
        k.facets().iter().map(|f| f.iter().collect()).collect()
    }

    #[test]
    fn make_complex_keeps_maximal_generators() {
        let k = SimplicialComplex::new(4, [Face::from([0, 1]), Face::from([0]), Face::from([2, 3])]).unwrap();
        assert_eq!(facets(&k), vec![vec![0, 1], vec![2, 3]]);

        let e = SimplicialComplex::new(3, [Face::empty()]).unwrap();
        assert_eq!(e.dim(), -1);
        assert_eq!(e, SimplicialComplex::empty(3));

        assert_eq!(pentagon_sigma0().dim(), 2);
        assert_eq!(pentagon_sigma0().facets().len(), 5);
    }

    #[test]
    fn make_complex_rejects_out_of_range_and_void() {
        assert!(matches!(
            SimplicialComplex::new(3, [Face::from([0, 3])]),
            Err(crate::Error::Input(_))
        ));
        assert!(SimplicialComplex::new(3, Vec::<Face>::new()).is_err());
    }

    #[test]
    fn contains_face_examples() {
        let k = pentagon_sigma0();
        assert!(k.contains_face(&Face::from([0, 1])).unwrap());
        assert!(!k.contains_face(&Face::from([0, 1, 2, 3])).unwrap());
        assert!(k.contains_face(&Face::empty()).unwrap());
        assert!(SimplicialComplex::empty(2).contains_face(&Face::empty()).unwrap());
        assert!(k.contains_face(&Face::from([5])).is_err());
    }

    #[test]
    fn join_examples() {
        let l = pentagon_sigma0();
        let e = SimplicialComplex::empty(0);
        assert_eq!(e.join(&l), l);

        let s0 = SimplicialComplex::new(2, [Face::from([0]), Face::from([1])]).unwrap();
        let square = s0.join(&s0);
        assert_eq!(square.ground_size(), 4);
        assert_eq!(facets(&square), vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);

        // Σ1(Δ1) * Σ0(Δ2): three triangles around the edge {0,1}.
        let edge = SimplicialComplex::simplex(2);
        let points = SimplicialComplex::new(3, (0..3).map(|i| Face::from([i]))).unwrap();
        let desargues = edge.join(&points);
        assert_eq!(facets(&desargues), vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]);
    }

    #[test]
    fn join_concatenates_labels() {
        let a = SimplicialComplex::empty(GroundSet::with_labels(vec!["a".into()]));
        let b = SimplicialComplex::simplex(2);
        let j = a.join(&b);
        assert_eq!(j.ground().labels().unwrap(), ["a", "0", "1"]);
    }

    #[test]
    fn union_examples() {
        let k = pentagon_sigma0();
        assert_eq!(k.union(&k).unwrap(), k);
        let a = SimplicialComplex::new(3, [Face::from([0, 1])]).unwrap();
        let b = SimplicialComplex::new(3, [Face::from([1, 2])]).unwrap();
        assert_eq!(facets(&a.union(&b).unwrap()), vec![vec![0, 1], vec![1, 2]]);
        assert!(a.union(&SimplicialComplex::simplex(4)).is_err());
    }

    #[test]
    fn skeleton_examples() {
        let pts = SimplicialComplex::simplex(4).skeleton(0).unwrap();
        assert_eq!(pts.facets().len(), 4);
        assert_eq!(pts.dim(), 0);

        let edges = pentagon_sigma0().skeleton(1).unwrap();
        assert_eq!(edges.facets().len(), 10);

        let k = pentagon_sigma0();
        assert_eq!(k.skeleton(k.dim()).unwrap(), k);
        assert_eq!(k.skeleton(-1).unwrap(), SimplicialComplex::empty(5));
        assert!(k.skeleton(-2).is_err());
    }

    #[test]
    fn f_vector_examples() {
        let k = pentagon_sigma0();
        assert_eq!(k.f_vector(), vec![5, 10, 5]);
        assert_eq!(k.euler_characteristic(), 0);
        assert_eq!(SimplicialComplex::simplex(4).f_vector(), vec![4, 6, 4, 1]);
        assert!(SimplicialComplex::empty(3).f_vector().is_empty());
    }

    #[test]
    fn f_vector_wide_path_matches_table_path() {
        // Same complex embedded in a ground set too large for the table.
        let narrow = pentagon_sigma0();
        let wide = SimplicialComplex::new(90, narrow.facets().iter().cloned()).unwrap();
        assert_eq!(wide.f_vector(), narrow.f_vector());
    }
}
