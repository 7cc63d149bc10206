//! Benchmark fixtures shared by the criterion benches.

use skelproj_core::{CombinatorialType, ProductType, SimplicialComplex};

/// Product of polygons with the given edge counts.
pub fn polygon_product(sizes: &[usize]) -> ProductType {
    ProductType::new(sizes.iter().map(|&m| CombinatorialType::polygon(m).expect("m >= 3")).collect())
        .expect("nonempty product")
}

/// `r` copies of the simplex with `n` facets.
pub fn simplex_power(n: usize, r: usize) -> ProductType {
    ProductType::new(vec![CombinatorialType::simplex(n).expect("n >= 1"); r]).expect("r >= 1")
}

/// The vertex coskeleton of a product, a typical input for non-face search.
pub fn vertex_coskeleton(p: &ProductType) -> SimplicialComplex {
    CombinatorialType::Product(p.clone()).coskeleton(0).expect("products have vertices")
}
