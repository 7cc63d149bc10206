//! Embeddability bounds, the knapsack program, and projection obstructions.
//!
//! A projection of a `d`-polytope with `m` facets to `R^e` that retains a
//! family of faces forces a complex containing the matching coskeleton
//! complex to embed in a sphere of dimension `m - d - 2 + e`. Any lower
//! bound `L` on its embeddability dimension therefore obstructs every
//! `e < L + d - m + 2`.

mod bounds;
mod brute;
mod engine;
mod knapsack;

use serde::{Deserialize, Serialize};

pub use bounds::{
    edim_lower_polygon_products, edim_lower_simplex_products, edim_upper_polygon_products,
    edim_upper_simplex_products, obstruct_neighborly_polygons, obstruct_polygon_products,
    obstruct_simplex_products, obstruct_wedge_skeleton, obstruct_wedge_special_faces,
    obstruct_wedge_surface, polygon_mu_star, polygon_products_threshold, simplex_products_threshold,
    van_kampen_flores, wedge_skeleton_threshold, wedge_special_faces_threshold, wedge_surface_threshold,
    Outcome, Rule, Verdict,
};
pub use brute::{brute_force_lower, BruteForceBound};
pub use engine::{analyze, Analysis, EngineConfig, Family, PathReport, PathStatus, SubBound, Target};
pub use knapsack::{knapsack_bound, KnapsackClass, KnapsackInstance, KnapsackOutcome};

use crate::error::{ensure_input, Result};
use crate::polytope::FaceType;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    ClosedForm,
    Ilp,
    BruteForce,
}

impl BoundSource {
    pub const ALL: [BoundSource; 3] = [BoundSource::ClosedForm, BoundSource::Ilp, BoundSource::BruteForce];

    pub fn name(self) -> &'static str {
        match self {
            BoundSource::ClosedForm => "closed_form",
            BoundSource::Ilp => "ilp",
            BoundSource::BruteForce => "brute_force",
        }
    }
}

/// Bounds on the embeddability dimension of a coskeleton complex. When the
/// lower bound is a Sarkaria index it is repeated in `sind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundResult {
    pub edim_lower: i64,
    pub edim_upper: Option<i64>,
    pub sind: Option<i64>,
    pub source: BoundSource,
}

/// Everything needed to re-derive a verdict: `obstructed ⟺ e < threshold_e`
/// with `threshold_e = bound.edim_lower + d - m + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub d: usize,
    pub m: usize,
    pub k: usize,
    pub e: i64,
    pub threshold_e: i64,
    pub obstructed: bool,
    pub face_type: Option<FaceType>,
    pub bound: BoundResult,
    pub note: Option<String>,
}

impl ObstructionCertificate {
    /// Re-evaluates the inequality from the stored fields.
    pub fn recheck(&self) -> bool {
        let t = self.bound.edim_lower + self.d as i64 - self.m as i64 + 2;
        t == self.threshold_e && self.obstructed == (self.e < t)
    }
}

pub fn obstruction_verdict(d: usize, m: usize, k: usize, e: i64, bound: BoundResult) -> Result<ObstructionCertificate> {
    ensure_input!(d < m, "a {d}-polytope needs more than {d} facets, got {m}");
    ensure_input!(k < d, "skeleton dimension must lie in 0..{d}, got {k}");
    if let Some(u) = bound.edim_upper {
        ensure_input!(bound.edim_lower <= u, "lower bound {} exceeds upper bound {u}", bound.edim_lower);
    }
    let threshold_e = bound.edim_lower + d as i64 - m as i64 + 2;
    Ok(ObstructionCertificate {
        d,
        m,
        k,
        e,
        threshold_e,
        obstructed: e < threshold_e,
        face_type: None,
        bound,
        note: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lower(edim_lower: i64) -> BoundResult {
        BoundResult {
            edim_lower,
            edim_upper: None,
            sind: Some(edim_lower),
            source: BoundSource::BruteForce,
        }
    }

    #[test]
    fn desargues_verdict() {
        let c = obstruction_verdict(3, 5, 1, 2, lower(3)).unwrap();
        assert!(c.obstructed);
        assert_eq!(c.threshold_e, 3);
        assert!(c.recheck());
    }

    #[test]
    fn two_triangles_verdicts() {
        assert!(obstruction_verdict(4, 6, 0, 2, lower(3)).unwrap().obstructed);
        assert!(!obstruction_verdict(4, 6, 0, 3, lower(3)).unwrap().obstructed);
    }

    #[test]
    fn boundary_is_not_obstructed() {
        let (d, m, e) = (4usize, 10usize, 5i64);
        let c = obstruction_verdict(d, m, 0, e, lower(m as i64 - d as i64 - 2 + e)).unwrap();
        assert!(!c.obstructed);
    }

    #[test]
    fn invalid_inputs() {
        assert!(obstruction_verdict(4, 4, 0, 1, lower(1)).is_err());
        assert!(obstruction_verdict(4, 6, 4, 1, lower(1)).is_err());
        let bad = BoundResult { edim_upper: Some(0), ..lower(2) };
        assert!(obstruction_verdict(4, 6, 0, 1, bad).is_err());
    }

    #[test]
    fn tampered_certificates_fail_recheck() {
        let mut c = obstruction_verdict(4, 6, 0, 2, lower(3)).unwrap();
        c.obstructed = false;
        assert!(!c.recheck());
    }
}
