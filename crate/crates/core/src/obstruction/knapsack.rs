//! The knapsack-type integer program behind product lower bounds.
//!
//! Choose multiplicities `μ_i` of face classes maximizing `Σ s_i μ_i`
//! subject to `Σ w_i μ_i = k`, `Σ μ_i = r` and `0 <= μ_i <= cap_i`.

use serde::{Deserialize, Serialize};

use super::bounds::check_polygon_params;
use crate::error::{ensure_input, Result};
use crate::kneser::sind_simplex_coskeleton;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnapsackClass {
    pub sind: i64,
    pub weight: usize,
    pub cap: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnapsackInstance {
    pub classes: Vec<KnapsackClass>,
    pub k: usize,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum KnapsackOutcome {
    Optimal { value: i64, multiplicities: Vec<usize> },
    Infeasible,
}

impl KnapsackInstance {
    pub fn new(classes: Vec<KnapsackClass>, k: usize, r: usize) -> Result<Self> {
        ensure_input!(
            classes.iter().all(|c| c.sind >= 0),
            "knapsack coefficients must be nonnegative"
        );
        Ok(Self { classes, k, r })
    }

    /// Class `j` is the `j`-faces of one `Δ^{n-1}` factor, valued by `Sind Σ_j(Δ^{n-1})`.
    pub fn simplex_power(n: usize, r: usize, k: usize) -> Result<Self> {
        ensure_input!(r >= 1, "a product needs at least one factor");
        let classes = (0..n)
            .map(|j| {
                Ok(KnapsackClass {
                    sind: sind_simplex_coskeleton(n, j)?,
                    weight: j,
                    cap: r,
                })
            })
            .collect::<Result<_>>()?;
        Self::new(classes, k, r)
    }

    /// Classes measure the gain of a factor's face over `Sind Σ_0` of an even
    /// polygon (`m_i - 3`): vertex of an even polygon 0, vertex of an odd
    /// polygon 1, edge 1, polygon 2. Vertex classes are capped by the number
    /// of polygons of matching parity.
    pub fn polygon_product(r_e: usize, r_o: usize, k: usize) -> Result<Self> {
        let r = r_e + r_o;
        check_polygon_params(3 * r, r_e, r_o)?;
        let class = |sind, weight, cap| KnapsackClass { sind, weight, cap };
        Self::new(
            vec![class(0, 0, r_e), class(1, 0, r_o), class(1, 1, r), class(2, 2, r)],
            k,
            r,
        )
    }

    /// Exact optimum by enumerating bounded compositions; among optimal
    /// multiplicity vectors the lexicographically least is returned.
    pub fn solve(&self) -> KnapsackOutcome {
        let mut best: Option<(i64, Vec<usize>)> = None;
        let mut mu = Vec::with_capacity(self.classes.len());
        self.search(0, self.r, self.k, 0, &mut mu, &mut best);
        match best {
            Some((value, multiplicities)) => KnapsackOutcome::Optimal { value, multiplicities },
            None => KnapsackOutcome::Infeasible,
        }
    }

    fn search(
        &self,
        i: usize,
        count: usize,
        weight: usize,
        value: i64,
        mu: &mut Vec<usize>,
        best: &mut Option<(i64, Vec<usize>)>,
    ) {
        let Some(class) = self.classes.get(i) else {
            if count == 0 && weight == 0 && best.as_ref().map_or(true, |(b, _)| value > *b) {
                *best = Some((value, mu.clone()));
            }
            return;
        };
        for take in 0..=class.cap.min(count) {
            let used = take * class.weight;
            if used > weight {
                break;
            }
            mu.push(take);
            self.search(i + 1, count - take, weight - used, value + class.sind * take as i64, mu, best);
            mu.pop();
        }
    }
}

pub fn knapsack_bound(instance: &KnapsackInstance) -> KnapsackOutcome {
    instance.solve()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn optimal(o: KnapsackOutcome) -> (i64, Vec<usize>) {
        match o {
            KnapsackOutcome::Optimal { value, multiplicities } => (value, multiplicities),
            KnapsackOutcome::Infeasible => panic!("unexpected infeasible instance"),
        }
    }

    #[test]
    fn two_triangles_vertices() {
        let inst = KnapsackInstance::simplex_power(3, 2, 0).unwrap();
        assert_eq!(inst.classes.iter().map(|c| c.sind).collect::<Vec<_>>(), vec![1, 1, 2]);
        assert_eq!(optimal(inst.solve()), (2, vec![2, 0, 0]));
    }

    #[test]
    fn two_odd_polygons_vertices() {
        let (s, mu) = optimal(KnapsackInstance::polygon_product(0, 2, 0).unwrap().solve());
        assert_eq!(mu, vec![0, 2, 0, 0]);
        // μ* = 2r - s* = r - ⌊k/2⌋ + max(0, r_e - ⌈k/2⌉) = 2.
        assert_eq!(4 - s, 2);
    }

    #[test]
    fn single_factor_at_full_dimension() {
        let (s, mu) = optimal(KnapsackInstance::simplex_power(4, 1, 3).unwrap().solve());
        assert_eq!(mu, vec![0, 0, 0, 1]);
        assert_eq!(s, 3);
    }

    #[test]
    fn infeasible_and_invalid_instances() {
        assert_eq!(
            KnapsackInstance::simplex_power(3, 2, 5).unwrap().solve(),
            KnapsackOutcome::Infeasible
        );
        let neg = KnapsackClass { sind: -1, weight: 0, cap: 1 };
        assert!(KnapsackInstance::new(vec![neg], 0, 1).is_err());
    }

    #[test]
    fn ties_resolve_to_lexicographically_least() {
        let c = |weight| KnapsackClass { sind: 1, weight, cap: 2 };
        let inst = KnapsackInstance::new(vec![c(0), c(1), c(2)], 2, 2).unwrap();
        assert_eq!(optimal(inst.solve()), (2, vec![0, 2, 0]));
    }
}
