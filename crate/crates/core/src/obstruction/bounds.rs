//! Closed-form embeddability bounds and the obstruction thresholds they imply.
//!
//! A threshold is the least target dimension `e` that a bound does not
//! exclude: the projection is obstructed exactly when `e < threshold`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_input, Result};

pub(crate) fn check_polygon_params(m: usize, r_e: usize, r_o: usize) -> Result<()> {
    let r = r_e + r_o;
    ensure_input!(r >= 1, "a polygon product needs at least one factor");
    ensure_input!(m >= 3 * r, "{r} polygons need at least {} facets, got {m}", 3 * r);
    Ok(())
}

fn floor_half(x: i64) -> i64 {
    x.div_euclid(2)
}

fn ceil_half(x: i64) -> i64 {
    -(-x).div_euclid(2)
}

/// Lower bound on `Edim Σ_k` of a product of `r_e` even and `r_o` odd
/// polygons with `m` facets in total, `0 <= k <= 2r`.
pub fn edim_lower_polygon_products(m: usize, r_e: usize, r_o: usize, k: usize) -> Result<i64> {
    check_polygon_params(m, r_e, r_o)?;
    let r = (r_e + r_o) as i64;
    let k = k as i64;
    ensure_input!(k <= 2 * r, "k must lie in 0..={}, got {k}", 2 * r);
    Ok(m as i64 - 1 - r + floor_half(k) + (ceil_half(k) - r_e as i64).min(0))
}

/// Upper bound on `Edim Σ_k` of a polygon product, `0 <= k < 2r`.
pub fn edim_upper_polygon_products(m: usize, r_e: usize, r_o: usize, k: usize) -> Result<i64> {
    check_polygon_params(m, r_e, r_o)?;
    let r = r_e + r_o;
    ensure_input!(k < 2 * r, "k must lie in 0..{}, got {k}", 2 * r);
    let (m, r, r_e) = (m as i64, r as i64, r_e as i64);
    Ok(match k {
        0 => m - r - r_e - 1,
        1 => m - r - 1,
        _ => m - 2,
    })
}

/// The optimum `μ*` of the polygon knapsack: `r - ⌊k/2⌋ + max(0, r_e - ⌈k/2⌉)`.
pub fn polygon_mu_star(r_e: usize, r_o: usize, k: usize) -> i64 {
    let r = (r_e + r_o) as i64;
    let k = k as i64;
    r - floor_half(k) + (r_e as i64 - ceil_half(k)).max(0)
}

fn check_simplex_params(n: usize, r: usize, k: usize) -> Result<()> {
    ensure_input!(n >= 2, "simplex products need n >= 2, got {n}");
    ensure_input!(r >= 1, "a product needs at least one factor");
    ensure_input!(
        k < r * (n - 1),
        "k must lie in 0..{}, got {k}",
        r * (n - 1)
    );
    Ok(())
}

/// `(r⌊(n-3)/2⌋, r⌊(n-2)/2⌋, ⌊(n+1)/2⌋)`: the case boundaries of the simplex
/// product bounds and the step of the last case.
fn simplex_breaks(n: i64, r: i64) -> (i64, i64, i64) {
    (r * (n - 3).div_euclid(2), r * (n - 2).div_euclid(2), (n + 1) / 2)
}

/// Lower bound on `Edim Σ_k` of `(Δ^{n-1})^r`, `0 <= k < r(n-1)`.
pub fn edim_lower_simplex_products(n: usize, r: usize, k: usize) -> Result<i64> {
    check_simplex_params(n, r, k)?;
    let (n, r, k) = (n as i64, r as i64, k as i64);
    let (a, b, step) = simplex_breaks(n, r);
    Ok(if k <= a {
        2 * r + 2 * k - 1
    } else if k <= b {
        r * n / 2 + k - 1
    } else {
        r * (n - 1) + (k - b) / step - 1
    })
}

/// Upper bound `min(2k + 2r - 1, rn - 1)` on `Edim Σ_k` of `(Δ^{n-1})^r`.
pub fn edim_upper_simplex_products(n: usize, r: usize, k: usize) -> Result<i64> {
    check_simplex_params(n, r, k)?;
    let (n, r, k) = (n as i64, r as i64, k as i64);
    Ok((2 * k + 2 * r - 1).min(r * n - 1))
}

/// Which predicate produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    PolygonProducts,
    NeighborlyPolygons,
    SimplexProducts,
    VanKampenFlores,
    WedgeSpecialFaces,
    WedgeSkeleton,
    WedgeSurface,
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub obstructed: bool,
    pub threshold_e: i64,
    pub rule: Rule,
}

impl Verdict {
    fn new(rule: Rule, threshold_e: i64, e: i64) -> Self {
        Self {
            obstructed: e < threshold_e,
            threshold_e,
            rule,
        }
    }
}

/// A predicate either decides or declines; declining is an answer, not an error.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Verdict(Verdict),
    Unavailable { reason: String },
}

impl Outcome {
    pub fn verdict(&self) -> Option<&Verdict> {
        match self {
            Outcome::Verdict(v) => Some(v),
            Outcome::Unavailable { .. } => None,
        }
    }

    pub fn is_obstructed(&self) -> bool {
        self.verdict().is_some_and(|v| v.obstructed)
    }
}

/// `r + 1 + ⌊k/2⌋ + min(0, ⌈k/2⌉ - r_e)`; the polygon sizes cancel.
pub fn polygon_products_threshold(r_e: usize, r_o: usize, k: usize) -> Result<i64> {
    let r = r_e + r_o;
    ensure_input!(r >= 1, "a polygon product needs at least one factor");
    ensure_input!(k < 2 * r, "k must lie in 0..{}, got {k}", 2 * r);
    let (r, k) = (r as i64, k as i64);
    Ok(r + 1 + floor_half(k) + (ceil_half(k) - r_e as i64).min(0))
}

pub fn obstruct_polygon_products(r_e: usize, r_o: usize, k: usize, e: i64) -> Result<Verdict> {
    let t = polygon_products_threshold(r_e, r_o, k)?;
    Ok(Verdict::new(Rule::PolygonProducts, t, e))
}

/// The neighborly specialization `k = ⌊e/2⌋ - 1`:
/// `(r_e < ⌊e/4⌋ ∧ ⌈(3e-2)/4⌉ < r) ∨ (r_e >= ⌊e/4⌋ ∧ ⌊e/2⌋ < r_o)`.
///
/// This agrees with [`obstruct_polygon_products`] at `k = ⌊e/2⌋ - 1` for
/// every even `e`; for odd `e` it can claim an obstruction the product
/// bound does not give.
pub fn obstruct_neighborly_polygons(r_e: usize, r_o: usize, e: i64) -> Result<bool> {
    ensure_input!(e >= 1, "target dimension must be positive, got {e}");
    ensure_input!(r_e + r_o >= 1, "a polygon product needs at least one factor");
    let (r_e, r_o) = (r_e as i64, r_o as i64);
    let r = r_e + r_o;
    let quarter = e.div_euclid(4);
    let ceil_34 = -(-(3 * e - 2)).div_euclid(4);
    Ok((r_e < quarter && ceil_34 < r) || (r_e >= quarter && floor_half(e) < r_o))
}

/// The three-case threshold for `(Δ^{n-1})^r`, `0 <= k < r(n-1)`.
pub fn simplex_products_threshold(n: usize, r: usize, k: usize) -> Result<i64> {
    check_simplex_params(n, r, k)?;
    let (n, r, k) = (n as i64, r as i64, k as i64);
    let (a, b, step) = simplex_breaks(n, r);
    Ok(if k <= a {
        r + 2 * k + 1
    } else if k <= b {
        r * (n - 2) / 2 + k + 1
    } else {
        r * (n - 2) + (k - b) / step + 1
    })
}

pub fn obstruct_simplex_products(n: usize, r: usize, k: usize, e: i64) -> Result<Verdict> {
    let t = simplex_products_threshold(n, r, k)?;
    Ok(Verdict::new(Rule::SimplexProducts, t, e))
}

/// The `k`-skeleton of a simplex with at least `2k + 3` vertices does not
/// embed in `R^{2k}`; as a projection statement, `e <= 2k + 1` is obstructed.
pub fn van_kampen_flores(k: usize, e: i64) -> bool {
    e <= 2 * k as i64 + 1
}

fn check_wedge(r: usize, n: usize) -> Result<()> {
    ensure_input!(r >= 3, "wedge products need r >= 3, got {r}");
    ensure_input!(n >= 2, "wedge products need n >= 2, got {n}");
    Ok(())
}

const R3_REASON: &str = "no obstruction available for r = 3: the sub-bounds used for wedge products need r >= 4";

/// Threshold for projections preserving the special `k`-faces, `2 <= k < r(n-1) + 2`.
/// These faces carry `Σ_{k-2}((Δ^{n-1})^r)`, so with `j = k - 2` the cases
/// are `r + 2k - 1`, `r(n-2)/2 + k + 1` and `r(n-2) + α + 3` where
/// `α = ⌊(j - r⌊(n-2)/2⌋) / ⌊(n+1)/2⌋⌋`.
pub fn wedge_special_faces_threshold(r: usize, n: usize, k: usize) -> Result<Outcome> {
    check_wedge(r, n)?;
    let d = r * (n - 1) + 2;
    ensure_input!((2..d).contains(&k), "special faces need 2 <= k < {d}, got {k}");
    if r == 3 {
        return Ok(Outcome::Unavailable { reason: R3_REASON.into() });
    }
    let (ni, ri, ki) = (n as i64, r as i64, k as i64);
    let j = ki - 2;
    let (a, b, step) = simplex_breaks(ni, ri);
    let t = if j <= a {
        ri + 2 * ki - 1
    } else if j <= b {
        ri * (ni - 2) / 2 + ki + 1
    } else {
        ri * (ni - 2) + (j - b) / step + 3
    };
    Ok(Outcome::Verdict(Verdict {
        obstructed: false,
        threshold_e: t,
        rule: Rule::WedgeSpecialFaces,
    }))
}

/// Threshold for projections preserving the `k`-skeleton, `0 <= k < r(n-1) + 2`.
///
/// For `k = 0` and `k = 1` the skeleton contains `Σ_0((Δ^{n-1})^{r-2})` and
/// `Σ_0((Δ^{n-1})^{r-1})`, giving `r - 1` and `r + 1` when `n >= 3`. For
/// `n = 2` those complexes are cross-polytope boundaries of lower
/// dimension and the thresholds drop to 1 and 2.
pub fn wedge_skeleton_threshold(r: usize, n: usize, k: usize) -> Result<Outcome> {
    check_wedge(r, n)?;
    let d = r * (n - 1) + 2;
    ensure_input!(k < d, "skeleton dimension must lie in 0..{d}, got {k}");
    if r == 3 {
        return Ok(Outcome::Unavailable { reason: R3_REASON.into() });
    }
    let r_i = r as i64;
    let t = match (k, n) {
        (0, 2) => 1,
        (1, 2) => 2,
        (0, _) => r_i - 1,
        (1, _) => r_i + 1,
        _ => {
            let Outcome::Verdict(v) = wedge_special_faces_threshold(r, n, k)? else {
                unreachable!("r >= 4 always yields a special-face threshold")
            };
            v.threshold_e
        }
    };
    Ok(Outcome::Verdict(Verdict {
        obstructed: false,
        threshold_e: t,
        rule: Rule::WedgeSkeleton,
    }))
}

/// Threshold `r + 1` for strictly preserving the equivelar surface, valid for
/// `r >= 4`, `n >= 3`.
pub fn wedge_surface_threshold(r: usize, n: usize) -> Result<Outcome> {
    check_wedge(r, n)?;
    if n == 2 {
        return Ok(Outcome::Unavailable {
            reason: "no obstruction available for n = 2: these surfaces have realizations whose projection to R^4 preserves them".into(),
        });
    }
    if r == 3 {
        return Ok(Outcome::Unavailable { reason: R3_REASON.into() });
    }
    Ok(Outcome::Verdict(Verdict {
        obstructed: false,
        threshold_e: r as i64 + 1,
        rule: Rule::WedgeSurface,
    }))
}

fn decide(outcome: Outcome, e: i64) -> Outcome {
    match outcome {
        Outcome::Verdict(v) => Outcome::Verdict(Verdict::new(v.rule, v.threshold_e, e)),
        other => other,
    }
}

pub fn obstruct_wedge_special_faces(r: usize, n: usize, k: usize, e: i64) -> Result<Outcome> {
    Ok(decide(wedge_special_faces_threshold(r, n, k)?, e))
}

pub fn obstruct_wedge_skeleton(r: usize, n: usize, k: usize, e: i64) -> Result<Outcome> {
    Ok(decide(wedge_skeleton_threshold(r, n, k)?, e))
}

pub fn obstruct_wedge_surface(r: usize, n: usize, e: i64) -> Result<Outcome> {
    Ok(decide(wedge_surface_threshold(r, n)?, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn threshold(o: Outcome) -> i64 {
        o.verdict().expect("a verdict").threshold_e
    }

    #[test]
    fn polygon_bounds_examples() {
        assert_eq!(edim_lower_polygon_products(10, 0, 2, 0).unwrap(), 7);
        assert_eq!(edim_lower_polygon_products(8, 2, 0, 0).unwrap(), 3);
        assert_eq!(edim_upper_polygon_products(8, 2, 0, 0).unwrap(), 3);
        assert_eq!(edim_upper_polygon_products(10, 0, 2, 1).unwrap(), 7);
        assert_eq!(edim_upper_polygon_products(10, 0, 2, 2).unwrap(), 8);
        assert!(edim_lower_polygon_products(8, 2, 1, 0).is_err());
        assert!(edim_upper_polygon_products(10, 0, 2, 4).is_err());
    }

    #[test]
    fn simplex_bounds_examples() {
        assert_eq!(edim_lower_simplex_products(3, 2, 0).unwrap(), 3);
        assert_eq!(edim_lower_simplex_products(4, 2, 2).unwrap(), 5);
        assert_eq!(edim_lower_simplex_products(3, 2, 3).unwrap(), 4);
        assert_eq!(edim_upper_simplex_products(3, 2, 0).unwrap(), 3);
        assert_eq!(edim_upper_simplex_products(3, 2, 3).unwrap(), 5);
        assert_eq!(edim_upper_simplex_products(2, 3, 0).unwrap(), 5);
        assert!(edim_lower_simplex_products(3, 2, 4).is_err());
    }

    #[test]
    fn polygon_verdicts() {
        let v = obstruct_polygon_products(0, 2, 0, 2).unwrap();
        assert!(v.obstructed);
        assert_eq!(v.threshold_e, 3);
        for r in 1..8 {
            assert!(obstruct_polygon_products(0, r, 0, r as i64).unwrap().obstructed);
        }
        // Two squares: Edim Σ_0 >= 3, so the threshold is 3 + 4 - 8 + 2 = 1.
        let v = obstruct_polygon_products(2, 0, 0, 3).unwrap();
        assert!(!v.obstructed);
        assert_eq!(v.threshold_e, 1);
    }

    #[test]
    fn neighborly_examples() {
        assert!(obstruct_neighborly_polygons(0, 4, 4).unwrap());
        assert!(!obstruct_neighborly_polygons(1, 2, 4).unwrap());
        assert!(obstruct_neighborly_polygons(1, 3, 4).unwrap());
    }

    #[test]
    fn simplex_verdicts() {
        for k in 0..5 {
            let n = 2 * k + 3;
            assert!(obstruct_simplex_products(n, 1, k, 2 * k as i64 + 1).unwrap().obstructed);
            assert!(!obstruct_simplex_products(n, 1, k, 2 * k as i64 + 2).unwrap().obstructed);
        }
        let v = obstruct_simplex_products(3, 2, 0, 2).unwrap();
        assert!(v.obstructed);
        assert_eq!(v.threshold_e, 3);
        // Two points per factor: Σ_0 is a cross-polytope boundary, threshold 1.
        let v = obstruct_simplex_products(2, 3, 0, 4).unwrap();
        assert!(!v.obstructed);
        assert_eq!(v.threshold_e, 1);
    }

    #[test]
    fn van_kampen_flores_examples() {
        assert!(van_kampen_flores(0, 1));
        assert!(van_kampen_flores(1, 3));
        assert!(!van_kampen_flores(1, 4));
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(threshold(wedge_special_faces_threshold(4, 3, 2).unwrap()), 7);
        assert!(obstruct_wedge_special_faces(4, 3, 2, 4).unwrap().is_obstructed());
        assert_eq!(threshold(wedge_special_faces_threshold(4, 2, 2).unwrap()), 3);
        assert_eq!(threshold(wedge_special_faces_threshold(5, 4, 6).unwrap()), 12);
        assert!(obstruct_wedge_skeleton(5, 3, 0, 3).unwrap().is_obstructed());
        assert!(obstruct_wedge_skeleton(4, 3, 1, 4).unwrap().is_obstructed());
        assert!(!obstruct_wedge_skeleton(4, 3, 2, 7).unwrap().is_obstructed());
        assert!(obstruct_wedge_surface(4, 3, 4).unwrap().is_obstructed());
        assert_eq!(threshold(wedge_surface_threshold(4, 3).unwrap()), 5);
        assert!(obstruct_wedge_surface(6, 4, 6).unwrap().is_obstructed());
        assert!(matches!(obstruct_wedge_surface(4, 2, 4).unwrap(), Outcome::Unavailable { .. }));
        assert!(matches!(obstruct_wedge_surface(3, 3, 1).unwrap(), Outcome::Unavailable { .. }));
        assert!(matches!(obstruct_wedge_skeleton(3, 3, 0, 1).unwrap(), Outcome::Unavailable { .. }));
        assert!(obstruct_wedge_special_faces(4, 3, 1, 1).is_err());
    }
}
