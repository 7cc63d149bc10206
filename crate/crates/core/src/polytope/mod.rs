//! Combinatorial types of polygons, simplices, products and wedge products.
//!
//! Every face is reported by its facet-incidence set, the indices of the
//! facets containing it. Faces are ordered by reverse inclusion of these
//! sets: the empty face has incidence `[m]`, the polytope itself `∅`.

mod wedge;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use wedge::{WedgeProductType, WedgeTuple};

use crate::error::{ensure_input, Result};
use crate::simplicial::{subsets_of_size, Face, GroundSet, SimplicialComplex};

/// An `m`-gon. Facet `i` is the edge between vertices `i` and `i+1 (mod m)`,
/// so vertex `i+1` has incidence `{i, i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolygonType {
    m: usize,
}

impl PolygonType {
    pub fn new(m: usize) -> Result<Self> {
        ensure_input!(m >= 3, "a polygon needs at least 3 edges, got {m}");
        Ok(Self { m })
    }

    pub fn edges(&self) -> usize {
        self.m
    }

    pub fn is_odd(&self) -> bool {
        self.m % 2 == 1
    }

    fn faces_of_dim(&self, k: isize) -> Vec<Face> {
        let m = self.m;
        match k {
            -1 => vec![Face::range(0, m)],
            0 => {
                let mut v: Vec<Face> = (0..m).map(|i| Face::from([i, (i + 1) % m])).collect();
                v.sort();
                v
            }
            1 => (0..m).map(|i| Face::from([i])).collect(),
            _ => vec![Face::empty()],
        }
    }
}

/// The `(n-1)`-simplex on `n` facets; facet `j` is opposite vertex `j`, so a
/// face with vertex set `S` has incidence `[n] \ S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplexType {
    n: usize,
}

impl SimplexType {
    pub fn new(n: usize) -> Result<Self> {
        ensure_input!(n >= 1, "a simplex needs at least one facet");
        Ok(Self { n })
    }

    pub fn facets(&self) -> usize {
        self.n
    }

    fn faces_of_dim(&self, k: isize) -> Vec<Face> {
        let size = self.n - (k + 1) as usize;
        let mut out = subsets_of_size(&Face::range(0, self.n), size);
        out.sort();
        out
    }
}

/// A product `P_1 × … × P_r`. Factor `i` owns the contiguous facet block
/// starting at `offsets()[i]`. Nested products are flattened on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductType {
    factors: Vec<CombinatorialType>,
}

/// A composition `(λ_1, …, λ_r)` assigning a face dimension to each factor
/// of a product.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceType(pub Vec<usize>);

impl FaceType {
    pub fn dim(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for FaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

impl ProductType {
    pub fn new(factors: Vec<CombinatorialType>) -> Result<Self> {
        ensure_input!(!factors.is_empty(), "a product needs at least one factor");
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                CombinatorialType::Product(p) => flat.extend(p.factors),
                other => flat.push(other),
            }
        }
        Ok(Self { factors: flat })
    }

    pub fn factors(&self) -> &[CombinatorialType] {
        &self.factors
    }

    pub fn offsets(&self) -> Vec<usize> {
        self.factors
            .iter()
            .scan(0, |acc, f| {
                let o = *acc;
                *acc += f.num_facets();
                Some(o)
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(CombinatorialType::dim).sum()
    }

    pub fn num_facets(&self) -> usize {
        self.factors.iter().map(CombinatorialType::num_facets).sum()
    }

    fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(CombinatorialType::dim).collect()
    }

    /// All face types of dimension `k`, for `0 <= k < dim`, in lexicographic order.
    pub fn face_types(&self, k: isize) -> Result<Vec<FaceType>> {
        let d = self.dim() as isize;
        ensure_input!(
            (0..d).contains(&k),
            "face types need 0 <= k < {d}, got {k}"
        );
        Ok(compositions(&self.factor_dims(), k as usize)
            .into_iter()
            .map(FaceType)
            .collect())
    }

    /// `Σ_{λ_1}(P_1) * … * Σ_{λ_r}(P_r)` on the product's facet blocks.
    pub fn cotype_complex(&self, lambda: &FaceType) -> Result<SimplicialComplex> {
        ensure_input!(
            lambda.0.len() == self.factors.len(),
            "face type {lambda} has {} parts but the product has {} factors",
            lambda.0.len(),
            self.factors.len()
        );
        let mut joined = SimplicialComplex::empty(0);
        for (factor, &l) in self.factors.iter().zip(&lambda.0) {
            ensure_input!(
                l <= factor.dim(),
                "face type {lambda} exceeds the factor dimension {}",
                factor.dim()
            );
            joined = joined.join(&factor.coskeleton(l as isize)?);
        }
        Ok(joined)
    }

    /// `Σ_k` as the union of all cotype complexes of dimension `k`.
    pub fn coskeleton_product(&self, k: isize) -> Result<SimplicialComplex> {
        let mut types = self.face_types(k)?.into_iter();
        let first = types.next().expect("k < dim admits a face type");
        let mut acc = self.cotype_complex(&first)?;
        for t in types {
            acc = acc.union(&self.cotype_complex(&t)?)?;
        }
        Ok(acc)
    }

    fn faces_of_dim(&self, k: isize) -> Result<Vec<Face>> {
        if k == -1 {
            return Ok(vec![Face::range(0, self.num_facets())]);
        }
        let offsets = self.offsets();
        let mut out = Vec::new();
        for lambda in compositions(&self.factor_dims(), k as usize) {
            let mut partial = vec![Face::empty()];
            for ((factor, &l), &off) in self.factors.iter().zip(&lambda).zip(&offsets) {
                let faces = factor.faces_of_dim(l as isize)?;
                partial = partial
                    .iter()
                    .flat_map(|p| faces.iter().map(move |f| p.union(&f.shifted(off))))
                    .collect();
            }
            out.extend(partial);
        }
        out.sort();
        Ok(out)
    }
}

/// Compositions of `total` into `bounds.len()` parts with `0 <= part_i <= bounds[i]`,
/// in lexicographic order.
pub fn compositions(bounds: &[usize], total: usize) -> Vec<Vec<usize>> {
    fn go(bounds: &[usize], remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&first, rest)) = bounds.split_first() else {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        };
        let rest_cap: usize = rest.iter().sum();
        let lo = remaining.saturating_sub(rest_cap);
        for part in lo..=first.min(remaining) {
            cur.push(part);
            go(rest, remaining - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(bounds, total, &mut Vec::with_capacity(bounds.len()), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CombinatorialType {
    Polygon(PolygonType),
    Simplex(SimplexType),
    Product(ProductType),
    Wedge(WedgeProductType),
}

impl CombinatorialType {
    pub fn polygon(m: usize) -> Result<Self> {
        PolygonType::new(m).map(Self::Polygon)
    }

    pub fn simplex(n: usize) -> Result<Self> {
        SimplexType::new(n).map(Self::Simplex)
    }

    pub fn product(factors: Vec<CombinatorialType>) -> Result<Self> {
        ProductType::new(factors).map(Self::Product)
    }

    pub fn wedge(r: usize, n: usize) -> Result<Self> {
        WedgeProductType::new(r, n).map(Self::Wedge)
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Polygon(_) => 2,
            Self::Simplex(s) => s.n - 1,
            Self::Product(p) => p.dim(),
            Self::Wedge(w) => w.dim(),
        }
    }

    pub fn num_facets(&self) -> usize {
        match self {
            Self::Polygon(p) => p.m,
            Self::Simplex(s) => s.n,
            Self::Product(p) => p.num_facets(),
            Self::Wedge(w) => w.num_facets(),
        }
    }

    /// Facet-incidence sets of all `k`-faces, sorted, for `-1 <= k <= dim`.
    pub fn faces_of_dim(&self, k: isize) -> Result<Vec<Face>> {
        let d = self.dim() as isize;
        ensure_input!(
            (-1..=d).contains(&k),
            "face dimension must lie in -1..={d}, got {k}"
        );
        match self {
            Self::Polygon(p) => Ok(p.faces_of_dim(k)),
            Self::Simplex(s) => Ok(s.faces_of_dim(k)),
            Self::Product(p) => p.faces_of_dim(k),
            Self::Wedge(w) => Ok(w.faces_of_dim(k)),
        }
    }

    /// `Σ_k`: generated by the complements `[m] \ I(G)` over all `k`-faces `G`.
    pub fn coskeleton(&self, k: isize) -> Result<SimplicialComplex> {
        let m = self.num_facets();
        let generators = self.faces_of_dim(k)?.into_iter().map(|f| f.complement(m));
        SimplicialComplex::new(GroundSet::new(m), generators)
    }

    /// Views any type as a product (a single non-product is a one-factor product).
    pub fn to_product(&self) -> ProductType {
        match self {
            Self::Product(p) => p.clone(),
            other => ProductType {
                factors: vec![other.clone()],
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn polygon(m: usize) -> CombinatorialType {
        CombinatorialType::polygon(m).unwrap()
    }

    fn simplex(n: usize) -> CombinatorialType {
        CombinatorialType::simplex(n).unwrap()
    }

    fn product(f: Vec<CombinatorialType>) -> ProductType {
        ProductType::new(f).unwrap()
    }

    fn sets(faces: &[Face]) -> Vec<Vec<usize>> {
        faces.iter().map(|f| f.iter().collect()).collect()
    }

    #[test]
    fn polygon_vertices_are_cyclic_pairs() {
        let v = polygon(5).faces_of_dim(0).unwrap();
        assert_eq!(sets(&v), vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]);
        assert_eq!(polygon(5).faces_of_dim(2).unwrap(), vec![Face::empty()]);
        assert_eq!(polygon(5).faces_of_dim(-1).unwrap(), vec![Face::range(0, 5)]);
        assert!(polygon(5).faces_of_dim(3).is_err());
        assert!(CombinatorialType::polygon(2).is_err());
    }

    #[test]
    fn simplex_edges_are_pairs() {
        let e = simplex(4).faces_of_dim(1).unwrap();
        assert_eq!(e.len(), 6);
        assert!(e.iter().all(|f| f.len() == 2));
    }

    #[test]
    fn pentagon_coskeleton_is_the_moebius_strip() {
        let k = polygon(5).coskeleton(0).unwrap();
        let expected = SimplicialComplex::new(
            5,
            [[2, 3, 4], [3, 4, 0], [4, 0, 1], [0, 1, 2], [1, 2, 3]].map(Face::from),
        )
        .unwrap();
        assert_eq!(k, expected);
    }

    #[test]
    fn simplex_coskeleton_is_a_skeleton() {
        for n in 2..7 {
            for k in 0..n as isize {
                let c = simplex(n).coskeleton(k).unwrap();
                assert_eq!(c, SimplicialComplex::simplex(n).skeleton(k).unwrap());
            }
        }
    }

    #[test]
    fn codimension_one_coskeleton_is_the_simplex_boundary() {
        let types = [
            polygon(6),
            simplex(5),
            CombinatorialType::product(vec![polygon(4), simplex(3)]).unwrap(),
            CombinatorialType::wedge(4, 2).unwrap(),
        ];
        for t in types {
            let m = t.num_facets();
            let boundary = SimplicialComplex::simplex(m).skeleton(m as isize - 2).unwrap();
            assert_eq!(t.coskeleton(t.dim() as isize - 1).unwrap(), boundary, "{t:?}");
            assert!(t.coskeleton(t.dim() as isize).unwrap().is_full_simplex());
            assert_eq!(t.coskeleton(-1).unwrap(), SimplicialComplex::empty(m));
        }
    }

    #[test]
    fn face_types_examples() {
        let prism = product(vec![simplex(2), simplex(3)]);
        assert_eq!(prism.face_types(1).unwrap(), vec![FaceType(vec![0, 1]), FaceType(vec![1, 0])]);
        let sq = product(vec![polygon(4), polygon(4)]);
        assert_eq!(
            sq.face_types(2).unwrap(),
            vec![FaceType(vec![0, 2]), FaceType(vec![1, 1]), FaceType(vec![2, 0])]
        );
        let tri3 = product(vec![simplex(3), simplex(3), simplex(3)]);
        assert_eq!(tri3.face_types(2).unwrap().len(), 6);
        assert!(sq.face_types(4).is_err());
        assert!(sq.face_types(-1).is_err());
    }

    #[test]
    fn desargues_cotype_complex() {
        let prism = product(vec![simplex(2), simplex(3)]);
        let c = prism.cotype_complex(&FaceType(vec![1, 0])).unwrap();
        assert_eq!(sets(c.facets()), vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]);
        assert!(prism.cotype_complex(&FaceType(vec![1, 2])).unwrap().is_full_simplex());
        assert!(prism.cotype_complex(&FaceType(vec![2, 0])).is_err());
        assert!(prism.cotype_complex(&FaceType(vec![0])).is_err());
    }

    #[test]
    fn square_square_vertex_cotype_non_faces() {
        let sq = product(vec![polygon(4), polygon(4)]);
        let c = sq.cotype_complex(&FaceType(vec![0, 0])).unwrap();
        let nf = c.minimal_non_faces(&Default::default()).unwrap();
        assert_eq!(sets(&nf), vec![vec![0, 2], vec![1, 3], vec![4, 6], vec![5, 7]]);
    }

    #[test]
    fn coskeleton_product_examples() {
        let prism = product(vec![simplex(2), simplex(3)]);
        let v = prism.coskeleton_product(0).unwrap();
        assert_eq!(v.facets().len(), 6);
        assert!(v.facets().iter().all(|f| f.len() == 2));

        let sq = CombinatorialType::product(vec![polygon(4), polygon(4)]).unwrap();
        let CombinatorialType::Product(p) = &sq else { unreachable!() };
        assert_eq!(p.coskeleton_product(1).unwrap(), sq.coskeleton(1).unwrap());
    }

    #[test]
    fn nested_products_flatten() {
        let inner = CombinatorialType::product(vec![polygon(3), polygon(4)]).unwrap();
        let p = product(vec![inner, simplex(2)]);
        assert_eq!(p.factors().len(), 3);
        assert_eq!(p.offsets(), vec![0, 3, 7]);
        assert_eq!(p.num_facets(), 9);
        assert_eq!(p.dim(), 5);
    }

    #[test]
    fn compositions_are_lexicographic_and_bounded() {
        assert_eq!(compositions(&[2, 2, 2], 2).len(), 6);
        assert_eq!(compositions(&[1, 2], 1), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(compositions(&[], 0), vec![Vec::<usize>::new()]);
        assert!(compositions(&[1, 1], 3).is_empty());
    }
}
