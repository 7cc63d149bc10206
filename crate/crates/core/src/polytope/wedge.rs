//! Wedge products of an `r`-gon with the simplex `Δ^{n-1}`.
//!
//! Faces are tuples `(H_1, …, H_r)` of subsets of `[n]`. The positions with
//! `H_i = [n]` must form the facet incidence of a polygon face `G`; the face
//! then has dimension `dim G + Σ_{H_i ≠ [n]} (n - 1 - |H_i|)`. Facet `(i, j)`
//! is linearized as `i·n + j`.

use serde::{Deserialize, Serialize};

use super::compositions;
use crate::error::{ensure_input, Error, Result};
use crate::simplicial::{subsets_of_size, Face, GroundSet, SimplicialComplex};

/// Largest `r·n` for which [`WedgeProductType::full_lattice`] enumerates all tuples.
pub const FULL_LATTICE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WedgeProductType {
    r: usize,
    n: usize,
}

/// A face of a wedge product as its tuple `(H_1, …, H_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WedgeTuple(pub Vec<Face>);

impl WedgeProductType {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        ensure_input!(r >= 3, "wedge products need a polygon with r >= 3, got {r}");
        ensure_input!(n >= 2, "wedge products need a simplex with n >= 2 facets, got {n}");
        Ok(Self { r, n })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.r * (self.n - 1) + 2
    }

    pub fn num_facets(&self) -> usize {
        self.r * self.n
    }

    /// Dimension of the polygon face whose incidence is `full` (positions
    /// with `H_i = [n]`), or `None` if `full` is not a polygon incidence.
    fn polygon_face_dim(&self, full: &Face) -> Option<isize> {
        let r = self.r;
        match full.len() {
            0 => Some(2),
            1 => Some(1),
            2 => {
                let a: Vec<usize> = full.iter().collect();
                (a[1] == a[0] + 1 || (a[0] == 0 && a[1] == r - 1)).then_some(0)
            }
            l if l == r => Some(-1),
            _ => None,
        }
    }

    /// The dimension of an admissible tuple, `None` if it is not a face.
    pub fn tuple_dimension(&self, t: &WedgeTuple) -> Option<isize> {
        if t.0.len() != self.r {
            return None;
        }
        let top = Face::range(0, self.n);
        let mut full = Face::empty();
        let mut product_dim = 0isize;
        for (i, h) in t.0.iter().enumerate() {
            if !h.is_subset(&top) {
                return None;
            }
            if *h == top {
                full.insert(i);
            } else {
                product_dim += (self.n - 1 - h.len()) as isize;
            }
        }
        let g = self.polygon_face_dim(&full)?;
        Some(if g == -1 { -1 } else { g + product_dim })
    }

    /// `{i·n + j : j ∈ H_i}`.
    pub fn incidence(&self, t: &WedgeTuple) -> Face {
        t.0.iter()
            .enumerate()
            .flat_map(|(i, h)| h.iter().map(move |j| i * self.n + j))
            .collect()
    }

    /// Polygon faces `(dim, incidence over [r])` in the polygon's own labeling.
    fn polygon_faces(&self) -> Vec<(isize, Face)> {
        let r = self.r;
        let mut out = vec![(-1, Face::range(0, r)), (2, Face::empty())];
        out.extend((0..r).map(|i| (0, Face::from([i, (i + 1) % r]))));
        out.extend((0..r).map(|i| (1, Face::from([i]))));
        out
    }

    /// All tuples of dimension `k`, built per polygon face without touching
    /// other dimensions.
    pub fn tuples_of_dim(&self, k: isize) -> Vec<WedgeTuple> {
        let (r, n) = (self.r, self.n);
        let top = Face::range(0, n);
        let proper_by_dim: Vec<Vec<Face>> = (0..n).map(|d| subsets_of_size(&top, n - 1 - d)).collect();
        let mut out = Vec::new();
        for (g, full) in self.polygon_faces() {
            if g == -1 {
                if k == -1 {
                    out.push(WedgeTuple(vec![top.clone(); r]));
                }
                continue;
            }
            if k < g {
                continue;
            }
            let free: Vec<usize> = (0..r).filter(|i| !full.contains(*i)).collect();
            for dims in compositions(&vec![n - 1; free.len()], (k - g) as usize) {
                let mut partial = vec![vec![top.clone(); r]];
                for (&pos, &d) in free.iter().zip(&dims) {
                    partial = partial
                        .into_iter()
                        .flat_map(|p| {
                            proper_by_dim[d].iter().map(move |h| {
                                let mut q = p.clone();
                                q[pos] = h.clone();
                                q
                            })
                        })
                        .collect();
                }
                out.extend(partial.into_iter().map(WedgeTuple));
            }
        }
        out
    }

    pub(crate) fn faces_of_dim(&self, k: isize) -> Vec<Face> {
        let mut out: Vec<Face> = self.tuples_of_dim(k).iter().map(|t| self.incidence(t)).collect();
        out.sort();
        out
    }

    /// Every admissible tuple with its dimension, by scanning all `2^{rn}`
    /// tuples. Intended as an oracle for small cases.
    pub fn full_lattice(&self) -> Result<Vec<(isize, WedgeTuple)>> {
        let (r, n) = (self.r, self.n);
        if r * n > FULL_LATTICE_LIMIT {
            return Err(Error::Resource(format!(
                "full wedge lattice refused for r·n = {} (limit {FULL_LATTICE_LIMIT})",
                r * n
            )));
        }
        let block = (1u64 << n) - 1;
        let mut out = Vec::new();
        for mask in 0..(1u64 << (r * n)) {
            let t = WedgeTuple((0..r).map(|i| Face::from_mask((mask >> (i * n)) & block)).collect());
            if let Some(d) = self.tuple_dimension(&t) {
                out.push((d, t));
            }
        }
        Ok(out)
    }

    /// Incidence sets of the faces `(H_1, …, H_r)` with every `H_i ≠ [n]` and
    /// `Σ (n - 1 - |H_i|) = k`. These are the `k`-faces of `(Δ^{n-1})^r`
    /// lifted to wedge faces of dimension `k + 2`.
    pub fn special_faces(&self, k: isize) -> Result<Vec<Face>> {
        let max = (self.r * (self.n - 1)) as isize;
        ensure_input!(
            (0..=max).contains(&k),
            "special faces need 0 <= k <= {max}, got {k}"
        );
        let mut out: Vec<Face> = self
            .tuples_of_dim(k + 2)
            .iter()
            .filter(|t| t.0.iter().all(|h| h.len() < self.n))
            .map(|t| self.incidence(t))
            .collect();
        out.sort();
        Ok(out)
    }

    /// The `(j_1, …, j_r) ∈ [n]^r` with `Σ j_i ≡ 0 or 1 (mod n)`, in
    /// lexicographic order.
    pub fn surface_selections(&self) -> Vec<Vec<usize>> {
        let (r, n) = (self.r, self.n);
        let mut out = Vec::new();
        let mut j = vec![0usize; r];
        loop {
            let s = j.iter().sum::<usize>() % n;
            if s == 0 || s == 1 {
                out.push(j.clone());
            }
            let mut pos = r;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                j[pos] += 1;
                if j[pos] < n {
                    break;
                }
                j[pos] = 0;
            }
        }
    }

    /// The equivelar surface: generated by the complements `{(i, j_i)}` of
    /// the `r`-gons `([n]∖{j_1}, …, [n]∖{j_r})` selected by
    /// [`surface_selections`](Self::surface_selections). Ground elements are
    /// labeled `i:j`.
    pub fn surface(&self) -> SimplicialComplex {
        let n = self.n;
        let generators = self
            .surface_selections()
            .into_iter()
            .map(|j| j.iter().enumerate().map(|(i, &ji)| i * n + ji).collect::<Face>());
        SimplicialComplex::new(self.ground(), generators).expect("selections are nonempty and in range")
    }

    /// The facet ground set with `i:j` labels.
    pub fn ground(&self) -> GroundSet {
        let labels = (0..self.r)
            .flat_map(|i| (0..self.n).map(move |j| format!("{i}:{j}")))
            .collect();
        GroundSet::with_labels(labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{CombinatorialType, ProductType};

    fn w(r: usize, n: usize) -> WedgeProductType {
        WedgeProductType::new(r, n).unwrap()
    }

    #[test]
    fn parameters_are_validated() {
        assert!(WedgeProductType::new(2, 3).is_err());
        assert!(WedgeProductType::new(3, 1).is_err());
        assert_eq!(w(4, 3).dim(), 10);
        assert_eq!(w(4, 3).num_facets(), 12);
    }

    #[test]
    fn vertices_of_w43() {
        let wp = w(4, 3);
        let tuples = wp.tuples_of_dim(0);
        assert_eq!(tuples.len(), 36);
        for t in &tuples {
            let full: Vec<usize> = (0..4).filter(|&i| t.0[i].len() == 3).collect();
            assert_eq!(full.len(), 2);
            assert!(full[1] == full[0] + 1 || full == [0, 3]);
            assert!(t.0.iter().all(|h| h.len() >= 2));
        }
    }

    #[test]
    fn vertex_count_formula() {
        for (r, n) in [(3usize, 2usize), (4, 2), (4, 3), (5, 3), (3, 4), (6, 2)] {
            let expected = r * n.pow(r as u32 - 2);
            assert_eq!(w(r, n).faces_of_dim(0).len(), expected, "W({r},{n})");
        }
    }

    #[test]
    fn lazy_enumeration_matches_full_lattice() {
        for (r, n) in [(3, 2), (4, 2), (3, 3), (5, 2), (4, 3), (6, 2)] {
            let wp = w(r, n);
            let lattice = wp.full_lattice().unwrap();
            for k in -1..=wp.dim() as isize {
                let mut oracle: Vec<Face> =
                    lattice.iter().filter(|(d, _)| *d == k).map(|(_, t)| wp.incidence(t)).collect();
                oracle.sort();
                assert_eq!(wp.faces_of_dim(k), oracle, "W({r},{n}) k={k}");
            }
            for t in wp.tuples_of_dim(1) {
                assert_eq!(wp.tuple_dimension(&t), Some(1));
            }
        }
    }

    #[test]
    fn extreme_faces_and_euler_relation() {
        for (r, n) in [(3, 2), (4, 2), (3, 3), (4, 3), (3, 4)] {
            let wp = w(r, n);
            let d = wp.dim() as isize;
            assert_eq!(wp.faces_of_dim(d), vec![Face::empty()]);
            assert_eq!(wp.faces_of_dim(-1), vec![Face::range(0, r * n)]);
            // Σ_{k=-1}^{d} (-1)^k f_k = 0 for the face lattice of any polytope.
            let sum: i64 = (-1..=d)
                .map(|k| {
                    let f = wp.faces_of_dim(k).len() as i64;
                    if k.rem_euclid(2) == 0 { f } else { -f }
                })
                .sum();
            assert_eq!(sum, 0, "W({r},{n})");
            // Facets are exactly the (rn) faces of dimension d-1, each with a single incidence.
            let facets = wp.faces_of_dim(d - 1);
            assert_eq!(facets, (0..r * n).map(|i| Face::from([i])).collect::<Vec<_>>());
        }
    }

    #[test]
    fn incidences_are_reverse_inclusion_ordered() {
        let wp = w(4, 2);
        for k in 0..=wp.dim() as isize {
            let lower = wp.faces_of_dim(k - 1);
            for upper in wp.faces_of_dim(k) {
                let below = lower.iter().filter(|l| upper.is_subset(l)).count();
                // Every face of dimension >= 1 has at least two faces of codimension one below it.
                assert!(k == 0 || below >= 2, "k={k} {upper}");
                assert!(below >= 1);
            }
        }
    }

    #[test]
    fn special_faces_examples() {
        assert_eq!(w(4, 3).special_faces(0).unwrap().len(), 81);
        assert_eq!(w(3, 2).special_faces(0).unwrap().len(), 8);
        assert!(w(3, 2).special_faces(4).is_err());
        assert_eq!(w(3, 2).special_faces(3).unwrap(), vec![Face::empty()]);
    }

    #[test]
    fn special_complements_are_the_product_coskeleton() {
        for (r, n) in [(3, 2), (4, 2), (4, 3), (3, 4)] {
            let wp = w(r, n);
            let simplices = vec![CombinatorialType::simplex(n).unwrap(); r];
            let product = CombinatorialType::Product(ProductType::new(simplices).unwrap());
            for k in 0..(r * (n - 1)) as isize {
                let gens = wp.special_faces(k).unwrap().into_iter().map(|f| f.complement(r * n));
                let lifted = SimplicialComplex::new(r * n, gens).unwrap();
                assert_eq!(lifted, product.coskeleton(k).unwrap(), "W({r},{n}) k={k}");
            }
        }
    }

    #[test]
    fn surface_examples() {
        let s = w(4, 3).surface();
        assert_eq!(s.facets().len(), 54);
        assert!(s.facets().iter().all(|f| f.len() == 4));
        assert_eq!(s.ground().label(5), "1:2");

        // With n = 2 every residue is 0 or 1, so all special 2-faces are selected.
        let s = w(3, 2).surface();
        assert_eq!(s.facets().len(), 8);
        let special = SimplicialComplex::new(
            6,
            w(3, 2).special_faces(0).unwrap().into_iter().map(|f| f.complement(6)),
        )
        .unwrap();
        assert_eq!(special.facets(), s.facets());
        let s = w(4, 3).surface();
        let special = SimplicialComplex::new(
            12,
            w(4, 3).special_faces(0).unwrap().into_iter().map(|f| f.complement(12)),
        )
        .unwrap();
        assert!(s.is_subcomplex_of(&special));
    }

    #[test]
    fn surface_generator_count() {
        for (r, n) in [(3usize, 2usize), (4, 2), (4, 3), (5, 3), (4, 4), (6, 3)] {
            assert_eq!(w(r, n).surface().facets().len(), 2 * n.pow(r as u32 - 1), "W({r},{n})");
        }
    }
}
