//! Kneser graphs of set systems, exact chromatic numbers and the Sarkaria index.

mod coloring;

use serde::{Deserialize, Serialize};

pub use coloring::{chromatic_number, Coloring, ColoringConfig};

use crate::error::{ensure_input, Result};
use crate::simplicial::{Face, NonFaceConfig, SimplicialComplex};

/// Vertices are sets; two are adjacent iff disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KneserGraph {
    sets: Vec<Face>,
    adjacency: Vec<Vec<usize>>,
}

impl KneserGraph {
    pub fn new(sets: Vec<Face>) -> Self {
        let n = sets.len();
        let mut adjacency = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if sets[u].is_disjoint(&sets[v]) {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self { sets, adjacency }
    }

    /// The Kneser graph `KG_{n,ℓ}` on all `ℓ`-subsets of `[n]`.
    pub fn complete(n: usize, l: usize) -> Self {
        Self::new(crate::simplicial::subsets_of_size(&Face::range(0, n), l))
    }

    pub fn sets(&self) -> &[Face] {
        &self.sets
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn num_vertices(&self) -> usize {
        self.sets.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Exact chromatic number with witness; the graph without vertices has χ = 0.
    pub fn chromatic_number(&self, config: &ColoringConfig) -> Result<Coloring> {
        chromatic_number(&self.adjacency, config)
    }
}

/// `χ(KG_{n,ℓ}) = n - 2ℓ + 2` when `ℓ <= (n+1)/2`, else 1.
pub fn lovasz_kneser_chi(n: usize, l: usize) -> Result<usize> {
    ensure_input!(1 <= l && l <= n, "Kneser parameters need 1 <= l <= n, got n={n}, l={l}");
    Ok(if 2 * l <= n + 1 { n + 2 - 2 * l } else { 1 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SarkariaConfig {
    pub nonfaces: NonFaceConfig,
    pub coloring: ColoringConfig,
}

/// `Sind K = m - χ(KG(nf K)) - 1` with the data it was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SarkariaIndex {
    pub ground_size: usize,
    pub nonfaces: Vec<Face>,
    pub chromatic_number: usize,
    pub coloring: Coloring,
    pub value: i64,
}

pub fn sarkaria_index(k: &SimplicialComplex, config: &SarkariaConfig) -> Result<SarkariaIndex> {
    let nonfaces = k.minimal_non_faces(&config.nonfaces)?;
    let graph = KneserGraph::new(nonfaces);
    let coloring = graph.chromatic_number(&config.coloring)?;
    let m = k.ground_size();
    Ok(SarkariaIndex {
        ground_size: m,
        chromatic_number: coloring.num_colors,
        value: m as i64 - coloring.num_colors as i64 - 1,
        nonfaces: graph.sets,
        coloring,
    })
}

/// `Sind Σ_k(P_m)` for an `m`-gon.
pub fn sind_polygon_coskeleton(m: usize, k: usize) -> Result<i64> {
    ensure_input!(m >= 3, "a polygon needs at least 3 edges, got {m}");
    ensure_input!(k <= 2, "polygon faces have dimension at most 2, got {k}");
    let m = m as i64;
    Ok(match k {
        0 if m % 2 == 0 => m - 3,
        0 => m - 2,
        1 => m - 2,
        _ => m - 1,
    })
}

/// `Sind Σ_k(Δ^{n-1})`, the `k`-skeleton of the simplex on `n` vertices.
pub fn sind_simplex_coskeleton(n: usize, k: usize) -> Result<i64> {
    ensure_input!(n >= 2, "simplex index needs n >= 2, got {n}");
    ensure_input!(k < n, "simplex faces need k <= {}, got {k}", n - 1);
    let (n, k) = (n as i64, k as i64);
    Ok(if 2 * k + 3 <= n {
        2 * k + 1
    } else if k <= n - 2 {
        n - 2
    } else {
        n - 1
    })
}
