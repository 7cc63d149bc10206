//! The explicit path: build every cotype complex and compute its Sarkaria
//! index from minimal non-faces and an exact coloring.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::kneser::{sarkaria_index, SarkariaConfig, SarkariaIndex};
use crate::polytope::{FaceType, ProductType};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceBound {
    /// `max_λ Sind Σ_λ`, a lower bound on `Edim Σ_k`.
    pub sind: i64,
    /// The lexicographically least face type attaining the maximum.
    pub face_type: FaceType,
    pub index: SarkariaIndex,
    /// Number of cotype complexes actually built.
    pub complexes_evaluated: usize,
}

/// Maximizes the Sarkaria index over all face types of dimension `k`.
/// Face types that permute parts among equal factors give isomorphic
/// complexes and are evaluated once.
pub fn brute_force_lower(product: &ProductType, k: isize, config: &SarkariaConfig) -> Result<BruteForceBound> {
    let factors = product.factors();
    let class_of: Vec<usize> = (0..factors.len())
        .map(|i| (0..=i).find(|&j| factors[j] == factors[i]).expect("i matches itself"))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut best: Option<BruteForceBound> = None;
    let mut evaluated = 0;
    for lambda in product.face_types(k)? {
        let mut key: Vec<(usize, usize)> = class_of.iter().copied().zip(lambda.parts().iter().copied()).collect();
        key.sort_unstable();
        if !seen.insert(key) {
            continue;
        }
        let index = sarkaria_index(&product.cotype_complex(&lambda)?, config)?;
        evaluated += 1;
        if best.as_ref().map_or(true, |b| index.value > b.sind) {
            best = Some(BruteForceBound {
                sind: index.value,
                face_type: lambda,
                index,
                complexes_evaluated: 0,
            });
        }
    }
    let mut best = best.expect("0 <= k < dim admits a face type");
    best.complexes_evaluated = evaluated;
    Ok(best)
}
