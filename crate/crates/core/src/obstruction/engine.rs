//! One query, every applicable path: closed forms, the knapsack program and
//! the explicit Sarkaria computation, cross-checked against each other and
//! against the closed-form predicates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::bounds::{
    edim_lower_polygon_products, edim_lower_simplex_products, edim_upper_polygon_products,
    edim_upper_simplex_products, obstruct_neighborly_polygons, obstruct_polygon_products,
    obstruct_simplex_products, obstruct_wedge_skeleton, obstruct_wedge_special_faces,
    obstruct_wedge_surface, van_kampen_flores, Outcome, Rule, Verdict,
};
use super::brute::brute_force_lower;
use super::knapsack::{KnapsackInstance, KnapsackOutcome};
use super::{obstruction_verdict, BoundResult, BoundSource, ObstructionCertificate};
use crate::error::{ensure_input, input_err, Error, Result};
use crate::kneser::SarkariaConfig;
use crate::polytope::{CombinatorialType, FaceType, ProductType};

/// Which faces the projection must retain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "k", rename_all = "snake_case")]
pub enum Target {
    Skeleton(usize),
    /// Special `k`-faces of a wedge product.
    Special(usize),
    /// The equivelar surface of a wedge product.
    Surface,
    /// The `(⌊e/2⌋ - 1)`-skeleton of a polygon product.
    Neighborly,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Skeleton(k) => write!(f, "skeleton:{k}"),
            Target::Special(k) => write!(f, "special:{k}"),
            Target::Surface => f.write_str("surface"),
            Target::Neighborly => f.write_str("neighborly"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_k = |k: &str| {
            k.parse::<usize>()
                .map_err(|_| input_err!("target dimension must be a nonnegative integer, got {k:?}"))
        };
        match s.split_once(':') {
            Some(("skeleton", k)) => Ok(Target::Skeleton(parse_k(k)?)),
            Some(("special", k)) => Ok(Target::Special(parse_k(k)?)),
            None if s == "surface" => Ok(Target::Surface),
            None if s == "neighborly" => Ok(Target::Neighborly),
            _ => Err(input_err!(
                "unknown target {s:?}; expected skeleton:K, special:K, surface or neighborly"
            )),
        }
    }
}

/// The shape of polytope a query runs on, deciding which closed forms apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    Polygons { r_e: usize, r_o: usize },
    Simplices { n: usize, r: usize },
    Wedge { r: usize, n: usize },
    Mixed,
}

impl Family {
    pub fn of(poly: &CombinatorialType) -> Family {
        if let CombinatorialType::Wedge(w) = poly {
            return Family::Wedge { r: w.r(), n: w.n() };
        }
        let product = poly.to_product();
        let factors = product.factors();
        let polygons: Vec<bool> = factors
            .iter()
            .filter_map(|f| match f {
                CombinatorialType::Polygon(p) => Some(p.is_odd()),
                _ => None,
            })
            .collect();
        if polygons.len() == factors.len() {
            let r_o = polygons.iter().filter(|&&odd| odd).count();
            return Family::Polygons { r_e: polygons.len() - r_o, r_o };
        }
        match factors {
            [CombinatorialType::Simplex(s), rest @ ..]
                if s.facets() >= 2 && rest.iter().all(|f| f == &factors[0]) =>
            {
                Family::Simplices {
                    n: s.facets(),
                    r: factors.len(),
                }
            }
            _ => Family::Mixed,
        }
    }
}

/// For wedge products: the product coskeleton `Σ_k((Δ^{n-1})^r)` that sits
/// inside the retained faces and supplies the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubBound {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub description: String,
}

impl SubBound {
    fn new(n: usize, r: usize, k: usize) -> Self {
        Self {
            n,
            r,
            k,
            description: format!("Σ_{k}((Δ^{})^{r})", n - 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EngineConfig {
    pub sarkaria: SarkariaConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PathStatus {
    Ok,
    NotApplicable { reason: String },
    ResourceExceeded { message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathReport {
    pub source: BoundSource,
    pub status: PathStatus,
    pub bound: Option<BoundResult>,
    pub face_type: Option<FaceType>,
    pub multiplicities: Option<Vec<usize>>,
    pub nonface_count: Option<usize>,
    pub chromatic_number: Option<usize>,
}

impl PathReport {
    fn empty(source: BoundSource, status: PathStatus) -> Self {
        Self {
            source,
            status,
            bound: None,
            face_type: None,
            multiplicities: None,
            nonface_count: None,
            chromatic_number: None,
        }
    }

    fn ok(source: BoundSource, bound: BoundResult) -> Self {
        Self {
            bound: Some(bound),
            ..Self::empty(source, PathStatus::Ok)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub d: usize,
    pub m: usize,
    pub target: Target,
    /// Skeleton or special-face dimension; `None` for the surface.
    pub k: Option<usize>,
    pub e: i64,
    pub family: Family,
    pub sub_bound: Option<SubBound>,
    pub paths: Vec<PathReport>,
    /// The closed-form predicate, when one covers the query.
    pub theorem: Option<Outcome>,
    pub verdict: Option<Verdict>,
    pub certificate: Option<ObstructionCertificate>,
    pub van_kampen_flores: Option<bool>,
    pub neighborly_corollary: Option<bool>,
    /// Whether all lower bounds agree; `None` unless at least two paths ran.
    pub agreement: Option<bool>,
    pub inconsistencies: Vec<String>,
    pub notes: Vec<String>,
}

impl Analysis {
    pub fn obstructed(&self) -> Option<bool> {
        self.verdict.as_ref().map(|v| v.obstructed)
    }

    pub fn threshold_e(&self) -> Option<i64> {
        self.verdict.as_ref().map(|v| v.threshold_e)
    }

    pub fn unavailable_reason(&self) -> Option<&str> {
        match &self.theorem {
            Some(Outcome::Unavailable { reason }) => Some(reason),
            _ => None,
        }
    }

    pub fn resource_errors(&self) -> Vec<&str> {
        self.paths
            .iter()
            .filter_map(|p| match &p.status {
                PathStatus::ResourceExceeded { message } => Some(message.as_str()),
                _ => None,
            })
            .collect()
    }

    /// Fails with a consistency error if any cross-check disagreed.
    pub fn check(&self) -> Result<()> {
        if self.inconsistencies.is_empty() {
            Ok(())
        } else {
            Err(Error::Consistency(self.inconsistencies.join("; ")))
        }
    }
}

/// The problem a query reduces to once the target is resolved.
struct Plan {
    k: Option<usize>,
    certificate_k: usize,
    theorem: Option<Outcome>,
    sub_bound: Option<SubBound>,
}

fn plan(poly: &CombinatorialType, family: Family, target: Target, e: i64) -> Result<Plan> {
    let d = poly.dim();
    let wedge_only = |what: &str| input_err!("target {what} applies to wedge products only");
    let skeleton_k = |k: usize| -> Result<usize> {
        ensure_input!(k < d, "skeleton dimension must lie in 0..{d}, got {k}");
        Ok(k)
    };
    let simple = |k: usize, theorem: Option<Outcome>| Plan {
        k: Some(k),
        certificate_k: k,
        theorem,
        sub_bound: None,
    };
    match (family, target) {
        (Family::Wedge { r, n }, Target::Skeleton(k)) => {
            let k = skeleton_k(k)?;
            let sub = match k {
                0 => SubBound::new(n, r.saturating_sub(2), 0),
                1 => SubBound::new(n, r - 1, 0),
                _ => SubBound::new(n, r, k - 2),
            };
            Ok(Plan {
                sub_bound: Some(sub),
                ..simple(k, Some(obstruct_wedge_skeleton(r, n, k, e)?))
            })
        }
        (Family::Wedge { r, n }, Target::Special(k)) => Ok(Plan {
            sub_bound: (k >= 2).then(|| SubBound::new(n, r, k - 2)),
            ..simple(k, Some(obstruct_wedge_special_faces(r, n, k, e)?))
        }),
        (Family::Wedge { r, n }, Target::Surface) => Ok(Plan {
            k: None,
            certificate_k: 2,
            theorem: Some(obstruct_wedge_surface(r, n, e)?),
            sub_bound: Some(SubBound::new(n, r - 1, 0)),
        }),
        (Family::Wedge { .. }, Target::Neighborly) => Err(input_err!(
            "target neighborly applies to polygon products only"
        )),
        (_, Target::Special(_)) => Err(wedge_only("special")),
        (_, Target::Surface) => Err(wedge_only("surface")),
        (Family::Polygons { r_e, r_o }, Target::Neighborly) => {
            ensure_input!(e >= 2, "neighborly targets need e >= 2, got {e}");
            let k = (e / 2 - 1) as usize;
            ensure_input!(
                k < d,
                "neighborly target e = {e} asks for the {k}-skeleton of a {d}-polytope"
            );
            Ok(simple(k, Some(Outcome::Verdict(obstruct_polygon_products(r_e, r_o, k, e)?))))
        }
        (_, Target::Neighborly) => Err(input_err!(
            "target neighborly applies to polygon products only"
        )),
        (Family::Polygons { r_e, r_o }, Target::Skeleton(k)) => {
            let k = skeleton_k(k)?;
            Ok(simple(k, Some(Outcome::Verdict(obstruct_polygon_products(r_e, r_o, k, e)?))))
        }
        (Family::Simplices { n, r }, Target::Skeleton(k)) => {
            let k = skeleton_k(k)?;
            Ok(simple(k, Some(Outcome::Verdict(obstruct_simplex_products(n, r, k, e)?))))
        }
        (Family::Mixed, Target::Skeleton(k)) => Ok(simple(skeleton_k(k)?, None)),
    }
}

/// Runs the requested paths for `target` at target dimension `e`.
pub fn analyze(
    poly: &CombinatorialType,
    target: Target,
    e: i64,
    modes: &[BoundSource],
    config: &EngineConfig,
) -> Result<Analysis> {
    let (d, m) = (poly.dim(), poly.num_facets());
    let family = Family::of(poly);
    let plan = plan(poly, family, target, e)?;
    let mut analysis = Analysis {
        d,
        m,
        target,
        k: plan.k,
        e,
        family,
        sub_bound: plan.sub_bound.clone(),
        paths: Vec::new(),
        theorem: plan.theorem.clone(),
        verdict: None,
        certificate: None,
        van_kampen_flores: None,
        neighborly_corollary: None,
        agreement: None,
        inconsistencies: Vec::new(),
        notes: Vec::new(),
    };
    if let Some(Outcome::Unavailable { reason }) = &plan.theorem {
        analysis.notes.push(reason.clone());
        return Ok(analysis);
    }

    let mut modes = modes.to_vec();
    modes.sort();
    modes.dedup();
    for source in modes {
        let report = match source {
            BoundSource::ClosedForm => closed_form_path(poly, family, &plan),
            BoundSource::Ilp => ilp_path(poly, family, &plan),
            BoundSource::BruteForce => brute_force_path(poly, &plan, config),
        }?;
        analysis.paths.push(report);
    }

    let ok: Vec<&PathReport> = analysis.paths.iter().filter(|p| p.bound.is_some()).collect();
    if ok.len() >= 2 {
        let lows: Vec<i64> = ok.iter().map(|p| p.bound.as_ref().unwrap().edim_lower).collect();
        let agree = lows.windows(2).all(|w| w[0] == w[1]);
        analysis.agreement = Some(agree);
        if !agree {
            let listing: Vec<String> = ok
                .iter()
                .map(|p| format!("{}={}", p.source.name(), p.bound.as_ref().unwrap().edim_lower))
                .collect();
            analysis
                .inconsistencies
                .push(format!("lower bounds disagree: {}", listing.join(", ")));
        }
    }

    // The most explicit evidence backs the certificate.
    let witness = ok.iter().max_by_key(|p| p.source).copied();
    if let Some(p) = witness {
        let mut cert = obstruction_verdict(d, m, plan.certificate_k, e, p.bound.clone().unwrap())?;
        cert.face_type = p.face_type.clone();
        cert.note = Some(match &plan.sub_bound {
            Some(sub) => format!(
                "lower bound of {} whose coskeleton embeds in the strict projection complex",
                sub.description
            ),
            None => "lower bound on the embeddability dimension; Edim itself is not computed".into(),
        });
        analysis.certificate = Some(cert);
    }

    let theorem = plan.theorem.as_ref().and_then(Outcome::verdict);
    analysis.verdict = match (&analysis.certificate, theorem) {
        (Some(cert), Some(t)) => {
            if cert.threshold_e != t.threshold_e {
                analysis.inconsistencies.push(format!(
                    "closed-form threshold {} differs from the pipeline threshold {}",
                    t.threshold_e, cert.threshold_e
                ));
            }
            Some(Verdict {
                obstructed: cert.obstructed,
                threshold_e: cert.threshold_e,
                rule: t.rule,
            })
        }
        (Some(cert), None) => Some(Verdict {
            obstructed: cert.obstructed,
            threshold_e: cert.threshold_e,
            rule: Rule::Generic,
        }),
        (None, Some(t)) => Some(t.clone()),
        (None, None) => None,
    };

    extra_checks(&mut analysis, family, target);
    Ok(analysis)
}

fn extra_checks(a: &mut Analysis, family: Family, target: Target) {
    let obstructed = a.obstructed();
    match (family, a.k) {
        (Family::Simplices { n, r: 1 }, Some(k)) if 2 * k + 3 <= n => {
            let vkf = van_kampen_flores(k, a.e);
            a.van_kampen_flores = Some(vkf);
            if obstructed.is_some_and(|o| o != vkf) {
                a.inconsistencies
                    .push(format!("Van Kampen–Flores says {vkf} for k={k}, e={}", a.e));
            }
        }
        _ => {}
    }
    if let (Target::Neighborly, Family::Polygons { r_e, r_o }) = (target, family) {
        if let Ok(c) = obstruct_neighborly_polygons(r_e, r_o, a.e) {
            a.neighborly_corollary = Some(c);
            if a.e % 2 == 0 {
                if obstructed.is_some_and(|o| o != c) {
                    a.inconsistencies
                        .push(format!("neighborly corollary says {c} for e={}", a.e));
                }
            } else {
                a.notes.push(
                    "the neighborly corollary is only checked for even e; for odd e the verdict comes from the k-skeleton bound".into(),
                );
            }
        }
    }
    match family {
        Family::Polygons { .. } => a.notes.push(
            "for polygon products the threshold does not depend on the polygon sizes".into(),
        ),
        Family::Mixed => a.notes.push(
            "closed forms and the knapsack program cover products of polygons or of copies of one simplex; only the explicit path applies".into(),
        ),
        Family::Wedge { n: 2, .. } if matches!(a.k, Some(0 | 1)) && matches!(target, Target::Skeleton(_)) => {
            a.notes.push(
                "for n = 2 the low-dimensional skeleta carry cross-polytope boundaries, giving thresholds 1 and 2".into(),
            )
        }
        _ => {}
    }
}

fn not_applicable(source: BoundSource, reason: &str) -> PathReport {
    PathReport::empty(
        source,
        PathStatus::NotApplicable {
            reason: reason.into(),
        },
    )
}

const MIXED_REASON: &str = "no closed form for this product";

fn closed_form_path(poly: &CombinatorialType, family: Family, plan: &Plan) -> Result<PathReport> {
    let source = BoundSource::ClosedForm;
    let m = poly.num_facets();
    let (lower, upper) = match (family, &plan.sub_bound, plan.k) {
        (Family::Wedge { .. }, Some(sub), _) => (edim_lower_simplex_products(sub.n, sub.r, sub.k)?, None),
        (Family::Polygons { r_e, r_o }, _, Some(k)) => (
            edim_lower_polygon_products(m, r_e, r_o, k)?,
            Some(edim_upper_polygon_products(m, r_e, r_o, k)?),
        ),
        (Family::Simplices { n, r }, _, Some(k)) => (
            edim_lower_simplex_products(n, r, k)?,
            Some(edim_upper_simplex_products(n, r, k)?),
        ),
        _ => return Ok(not_applicable(source, MIXED_REASON)),
    };
    Ok(PathReport::ok(
        source,
        BoundResult {
            edim_lower: lower,
            edim_upper: upper,
            sind: Some(lower),
            source,
        },
    ))
}

fn ilp_path(poly: &CombinatorialType, family: Family, plan: &Plan) -> Result<PathReport> {
    let source = BoundSource::Ilp;
    let m = poly.num_facets() as i64;
    let (instance, to_bound): (KnapsackInstance, Box<dyn Fn(i64) -> i64>) = match (family, &plan.sub_bound, plan.k) {
        (Family::Wedge { .. }, Some(sub), _) => {
            let r = sub.r as i64;
            (KnapsackInstance::simplex_power(sub.n, sub.r, sub.k)?, Box::new(move |s| s + r - 1))
        }
        (Family::Polygons { r_e, r_o }, _, Some(k)) => {
            let r = (r_e + r_o) as i64;
            (
                KnapsackInstance::polygon_product(r_e, r_o, k)?,
                Box::new(move |s| m - 1 - (2 * r - s)),
            )
        }
        (Family::Simplices { n, r }, _, Some(k)) => {
            let r_i = r as i64;
            (KnapsackInstance::simplex_power(n, r, k)?, Box::new(move |s| s + r_i - 1))
        }
        _ => return Ok(not_applicable(source, MIXED_REASON)),
    };
    let KnapsackOutcome::Optimal { value, multiplicities } = instance.solve() else {
        return Err(Error::Consistency(format!(
            "knapsack program infeasible for a valid query (k={}, r={})",
            instance.k, instance.r
        )));
    };
    let lower = to_bound(value);
    let face_type = match family {
        Family::Polygons { .. } => Some(polygon_face_type(&poly.to_product(), &multiplicities)),
        _ => Some(FaceType(
            multiplicities
                .iter()
                .enumerate()
                .flat_map(|(j, &mu)| std::iter::repeat(j).take(mu))
                .collect(),
        )),
    };
    Ok(PathReport {
        face_type,
        multiplicities: Some(multiplicities),
        ..PathReport::ok(
            source,
            BoundResult {
                edim_lower: lower,
                edim_upper: None,
                sind: Some(lower),
                source,
            },
        )
    })
}

/// Spreads polygon knapsack multiplicities (even vertex, odd vertex, edge,
/// polygon) over the factors in order.
fn polygon_face_type(product: &ProductType, mu: &[usize]) -> FaceType {
    let (mut even, mut odd, mut edges) = (mu[0], mu[1], mu[2]);
    let parts = product
        .factors()
        .iter()
        .map(|f| {
            let quota = match f {
                CombinatorialType::Polygon(p) if p.is_odd() => &mut odd,
                _ => &mut even,
            };
            if *quota > 0 {
                *quota -= 1;
                0
            } else if edges > 0 {
                edges -= 1;
                1
            } else {
                2
            }
        })
        .collect();
    FaceType(parts)
}

fn brute_force_path(poly: &CombinatorialType, plan: &Plan, config: &EngineConfig) -> Result<PathReport> {
    let source = BoundSource::BruteForce;
    let (product, k) = match (&plan.sub_bound, plan.k) {
        (Some(sub), _) => (
            ProductType::new(vec![CombinatorialType::simplex(sub.n)?; sub.r])?,
            sub.k,
        ),
        (None, Some(k)) => (poly.to_product(), k),
        (None, None) => return Ok(not_applicable(source, "no complex to evaluate")),
    };
    match brute_force_lower(&product, k as isize, &config.sarkaria) {
        Ok(b) => Ok(PathReport {
            face_type: Some(b.face_type),
            nonface_count: Some(b.index.nonfaces.len()),
            chromatic_number: Some(b.index.chromatic_number),
            ..PathReport::ok(
                source,
                BoundResult {
                    edim_lower: b.sind,
                    edim_upper: None,
                    sind: Some(b.sind),
                    source,
                },
            )
        }),
        Err(Error::Resource(message)) => Ok(PathReport::empty(source, PathStatus::ResourceExceeded { message })),
        Err(other) => Err(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(poly: &CombinatorialType, target: Target, e: i64) -> Analysis {
        let a = analyze(poly, target, e, &BoundSource::ALL, &EngineConfig::default()).unwrap();
        a.check().unwrap();
        a
    }

    fn product(f: Vec<CombinatorialType>) -> CombinatorialType {
        CombinatorialType::product(f).unwrap()
    }

    #[test]
    fn targets_round_trip() {
        for t in [Target::Skeleton(3), Target::Special(2), Target::Surface, Target::Neighborly] {
            assert_eq!(t.to_string().parse::<Target>().unwrap(), t);
        }
        assert!("skeleton:-1".parse::<Target>().is_err());
        assert!("faces".parse::<Target>().is_err());
    }

    #[test]
    fn two_pentagons() {
        let p = CombinatorialType::polygon(5).unwrap();
        let a = run(&product(vec![p.clone(), p]), Target::Skeleton(0), 2);
        assert_eq!(a.obstructed(), Some(true));
        assert_eq!(a.threshold_e(), Some(3));
        assert_eq!(a.agreement, Some(true));
        assert!(a.certificate.as_ref().unwrap().recheck());
    }

    #[test]
    fn desargues_is_generic() {
        let prism = product(vec![CombinatorialType::simplex(2).unwrap(), CombinatorialType::simplex(3).unwrap()]);
        assert_eq!(Family::of(&prism), Family::Mixed);
        let a = run(&prism, Target::Skeleton(1), 2);
        assert_eq!(a.obstructed(), Some(true));
        assert_eq!(a.verdict.as_ref().unwrap().rule, Rule::Generic);
        assert_eq!(a.certificate.as_ref().unwrap().face_type, Some(FaceType(vec![1, 0])));
        assert!(matches!(a.paths[0].status, PathStatus::NotApplicable { .. }));
    }

    #[test]
    fn wedge_surface() {
        let w = CombinatorialType::wedge(4, 3).unwrap();
        let a = run(&w, Target::Surface, 4);
        assert_eq!(a.obstructed(), Some(true));
        assert_eq!(a.threshold_e(), Some(5));
        let a = run(&CombinatorialType::wedge(4, 2).unwrap(), Target::Surface, 4);
        assert!(a.verdict.is_none());
        assert!(a.unavailable_reason().is_some());
    }

    #[test]
    fn van_kampen_flores_is_reported() {
        let a = run(&CombinatorialType::simplex(5).unwrap(), Target::Skeleton(1), 3);
        assert_eq!(a.obstructed(), Some(true));
        assert_eq!(a.van_kampen_flores, Some(true));
    }

    #[test]
    fn neighborly_uses_the_skeleton_bound() {
        let p = CombinatorialType::polygon(5).unwrap();
        let a = run(&product(vec![p.clone(), p.clone(), p.clone(), p]), Target::Neighborly, 4);
        assert_eq!(a.k, Some(1));
        assert_eq!(a.neighborly_corollary, Some(true));
        assert_eq!(a.obstructed(), Some(true));
    }

    #[test]
    fn invalid_targets() {
        let p = CombinatorialType::polygon(5).unwrap();
        let cfg = EngineConfig::default();
        assert!(analyze(&p, Target::Surface, 1, &BoundSource::ALL, &cfg).is_err());
        assert!(analyze(&p, Target::Skeleton(2), 1, &BoundSource::ALL, &cfg).is_err());
        let w = CombinatorialType::wedge(4, 3).unwrap();
        assert!(analyze(&w, Target::Neighborly, 4, &BoundSource::ALL, &cfg).is_err());
        assert!(analyze(&w, Target::Special(1), 4, &BoundSource::ALL, &cfg).is_err());
    }

    #[test]
    fn resource_errors_keep_the_closed_form() {
        let p = CombinatorialType::polygon(5).unwrap();
        let config = EngineConfig {
            sarkaria: SarkariaConfig {
                coloring: crate::kneser::ColoringConfig {
                    max_vertices: 1,
                    ..Default::default()
                },
                ..Default::default()
            },
        };
        let a = analyze(&product(vec![p.clone(), p]), Target::Skeleton(0), 2, &BoundSource::ALL, &config).unwrap();
        assert_eq!(a.resource_errors().len(), 1);
        assert_eq!(a.obstructed(), Some(true));
    }
}
