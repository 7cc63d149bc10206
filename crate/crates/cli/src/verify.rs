//! The self-verification suite: every cross-check over its parameter grid,
//! with counterexamples reported by full input.

use std::fmt::{self, Debug, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use skelproj_core::kneser::{sarkaria_index, KneserGraph};
use skelproj_core::obstruction::{
    edim_lower_polygon_products, edim_lower_simplex_products, edim_upper_polygon_products,
    edim_upper_simplex_products, polygon_products_threshold, simplex_products_threshold,
    wedge_skeleton_threshold, KnapsackInstance, KnapsackOutcome,
};
use skelproj_core::{
    analyze, Analysis, BoundSource, ColoringConfig, CombinatorialType, EngineConfig, Face, FaceType, NonFaceConfig,
    NonFaceStrategy, ProductType, SarkariaConfig, SimplicialComplex, Target,
};

use crate::commands::{sarkaria, SarkariaSubject};
use crate::report::{run_query, Mode, Query};
use crate::spec::{parse_spec, PolytopeSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    SimplicialCore,
    PolytopeTypes,
    KneserColoring,
    ObstructionEngine,
    CliReports,
    All,
}

impl Scope {
    pub const MODULES: [Scope; 5] = [
        Scope::SimplicialCore,
        Scope::PolytopeTypes,
        Scope::KneserColoring,
        Scope::ObstructionEngine,
        Scope::CliReports,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scope::SimplicialCore => "simplicial_core",
            Scope::PolytopeTypes => "polytope_types",
            Scope::KneserColoring => "kneser_coloring",
            Scope::ObstructionEngine => "obstruction_engine",
            Scope::CliReports => "cli_reports",
            Scope::All => "all",
        }
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Scope::MODULES
            .into_iter()
            .chain([Scope::All])
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                format!("unknown scope {s:?}; expected simplicial_core, polytope_types, kneser_coloring, obstruction_engine, cli_reports or all")
            })
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Counterexamples kept per check; further failures are only counted.
const MAX_DUMPED: usize = 20;

/// Case counter and counterexample collector for one check.
#[derive(Default)]
struct Cx {
    cases: usize,
    failed: usize,
    dumps: Vec<String>,
}

impl Cx {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(describe());
        }
    }

    fn eq<T: PartialEq + Debug>(&mut self, got: T, want: T, input: impl FnOnce() -> String) {
        self.cases += 1;
        if got != want {
            self.fail(format!("{}: got {got:?}, expected {want:?}", input()));
        }
    }

    /// Unwraps an engine result, recording errors as failures.
    fn ok<T, E: fmt::Display>(&mut self, r: Result<T, E>, input: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.fail(format!("{}: {e}", input()));
                None
            }
        }
    }

    fn fail(&mut self, dump: String) {
        self.failed += 1;
        if self.dumps.len() < MAX_DUMPED {
            self.dumps.push(dump);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub scope: Scope,
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    pub counterexamples: Vec<String>,
    pub elapsed: Duration,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub scope: Scope,
    pub checks: Vec<CheckOutcome>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {}/{} ({} cases, {} failed, {:.2}s)",
                c.scope,
                c.name,
                c.cases,
                c.failed,
                c.elapsed.as_secs_f64()
            );
            for dump in &c.counterexamples {
                let _ = writeln!(out, "    counterexample: {dump}");
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        let _ = writeln!(
            out,
            "{} checks, {} passed, {failed} failed",
            self.checks.len(),
            self.checks.len() - failed
        );
        out
    }
}

type CheckFn = fn(&mut Cx);

const CHECKS: &[(Scope, &str, CheckFn)] = &[
    (Scope::SimplicialCore, "nonface_strategies_agree", nonface_strategies_agree),
    (Scope::SimplicialCore, "join_f_vector", join_f_vector),
    (Scope::SimplicialCore, "skeleton_truncates_f_vector", skeleton_truncates_f_vector),
    (Scope::SimplicialCore, "mobius_fingerprint", mobius_fingerprint),
    (Scope::PolytopeTypes, "product_face_counts", product_face_counts),
    (Scope::PolytopeTypes, "euler_relation", euler_relation),
    (Scope::PolytopeTypes, "coskeleton_tower", coskeleton_tower),
    (Scope::PolytopeTypes, "coskeleton_is_union_of_cotypes", coskeleton_is_union_of_cotypes),
    (Scope::PolytopeTypes, "wedge_counts", wedge_counts),
    (Scope::PolytopeTypes, "special_face_complements", special_face_complements),
    (Scope::KneserColoring, "kneser_chromatic_numbers", kneser_chromatic_numbers),
    (Scope::KneserColoring, "coloring_matches_backtracking", coloring_matches_backtracking),
    (Scope::KneserColoring, "polygon_sind_table", polygon_sind_table),
    (Scope::KneserColoring, "simplex_sind_table", simplex_sind_table),
    (Scope::KneserColoring, "join_additivity", join_additivity),
    (Scope::KneserColoring, "cotype_linearity", cotype_linearity),
    (Scope::ObstructionEngine, "three_path_agreement", three_path_agreement),
    (Scope::ObstructionEngine, "knapsack_matches_closed_forms", knapsack_matches_closed_forms),
    (Scope::ObstructionEngine, "bounds_ordered", bounds_ordered),
    (Scope::ObstructionEngine, "thresholds_monotone", thresholds_monotone),
    (Scope::ObstructionEngine, "certificates_recheck", certificates_recheck),
    (Scope::ObstructionEngine, "headline_verdicts", headline_verdicts),
    (Scope::ObstructionEngine, "wedge_consistency", wedge_consistency),
    (Scope::CliReports, "spec_round_trip", spec_round_trip),
    (Scope::CliReports, "spec_examples", spec_examples),
    (Scope::CliReports, "report_determinism", report_determinism),
    (Scope::CliReports, "query_examples", query_examples),
];

/// Runs every check in `scope`, in parallel, and lists outcomes in a fixed order.
pub fn verify_suite(scope: Scope) -> VerifySummary {
    let selected: Vec<&(Scope, &str, CheckFn)> = CHECKS
        .iter()
        .filter(|(s, _, _)| scope == Scope::All || *s == scope)
        .collect();
    let checks = std::thread::scope(|threads| {
        let handles: Vec<_> = selected
            .iter()
            .map(|&&(s, name, f)| {
                let handle = threads.spawn(move || {
                    let start = Instant::now();
                    let mut cx = Cx::default();
                    f(&mut cx);
                    (cx, start.elapsed())
                });
                (s, name, handle)
            })
            .collect();
        handles
            .into_iter()
            .map(|(s, name, handle)| {
                let (cx, elapsed) = handle.join().unwrap_or_else(|panic| {
                    let msg = panic
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_default();
                    let mut cx = Cx::default();
                    cx.check(false, || format!("check panicked: {msg}"));
                    (cx, Duration::ZERO)
                });
                CheckOutcome {
                    scope: s,
                    name: name.to_string(),
                    cases: cx.cases,
                    failed: cx.failed,
                    counterexamples: cx.dumps,
                    elapsed,
                }
            })
            .collect()
    });
    VerifySummary { scope, checks }
}

// ---------------------------------------------------------------- fixtures

fn polygon(m: usize) -> CombinatorialType {
    CombinatorialType::polygon(m).expect("m >= 3")
}

fn simplex(n: usize) -> CombinatorialType {
    CombinatorialType::simplex(n).expect("n >= 1")
}

fn product(factors: Vec<CombinatorialType>) -> ProductType {
    ProductType::new(factors).expect("nonempty product")
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Face numbers `f_0, …, f_d` of a polygon or simplex, the top face included.
fn factor_f_vector(t: &CombinatorialType) -> Vec<u64> {
    match t {
        CombinatorialType::Polygon(p) => vec![p.edges() as u64, p.edges() as u64, 1],
        CombinatorialType::Simplex(s) => (1..=s.facets()).map(|j| binomial(s.facets(), j)).collect(),
        other => panic!("no direct face count for {other:?}"),
    }
}

/// Nondecreasing size sequences from `sizes` of length `r`.
fn multisets(sizes: &[usize], r: usize) -> Vec<Vec<usize>> {
    fn go(sizes: &[usize], r: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in from..sizes.len() {
            cur.push(sizes[i]);
            go(sizes, r, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(sizes, r, 0, &mut Vec::new(), &mut out);
    out
}

/// Small products used across checks: polygon products up to three factors
/// and simplex powers, with at most `max_facets` facets.
fn small_products(max_facets: usize) -> Vec<ProductType> {
    let mut out = Vec::new();
    for r in 1..=3 {
        for sizes in multisets(&[3, 4, 5, 6], r) {
            if sizes.iter().sum::<usize>() <= max_facets {
                out.push(product(sizes.into_iter().map(polygon).collect()));
            }
        }
    }
    for n in 2..=5 {
        for r in 1..=3 {
            if n * r <= max_facets && (n >= 3 || r >= 2) {
                out.push(product(vec![simplex(n); r]));
            }
        }
    }
    out.push(product(vec![simplex(2), simplex(3)]));
    out.push(product(vec![polygon(4), simplex(3)]));
    out
}

fn random_complex(rng: &mut ChaCha8Rng, ground: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=5);
    let gens: Vec<Face> = (0..count)
        .map(|_| (0..ground).filter(|_| rng.gen_bool(0.55)).collect())
        .collect();
    SimplicialComplex::new(ground, gens).expect("generators lie in the ground set")
}

fn wide_sarkaria() -> SarkariaConfig {
    SarkariaConfig {
        coloring: ColoringConfig {
            max_vertices: 1024,
            ..ColoringConfig::default()
        },
        ..SarkariaConfig::default()
    }
}

fn wide_engine() -> EngineConfig {
    EngineConfig {
        sarkaria: wide_sarkaria(),
    }
}

fn sind(k: &SimplicialComplex) -> skelproj_core::Result<i64> {
    sarkaria_index(k, &wide_sarkaria()).map(|s| s.value)
}

// ---------------------------------------------------------- simplicial_core

fn nonface_strategies_agree(cx: &mut Cx) {
    let exhaustive = NonFaceConfig {
        strategy: NonFaceStrategy::Exhaustive,
        ..NonFaceConfig::default()
    };
    let transversal = NonFaceConfig {
        strategy: NonFaceStrategy::Transversal,
        ..NonFaceConfig::default()
    };
    let mut complexes: Vec<(String, SimplicialComplex)> = Vec::new();
    for m in 3..=9 {
        for k in 0..=1 {
            complexes.push((format!("coskeleton(polygon:{m}, {k})"), polygon(m).coskeleton(k).unwrap()));
        }
    }
    for n in 2..=7 {
        for k in 0..n as isize {
            complexes.push((format!("coskeleton(simplex:{n}, {k})"), simplex(n).coskeleton(k).unwrap()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..80 {
        let g = rng.gen_range(1..=12);
        complexes.push((format!("random complex #{i} on {g}"), random_complex(&mut rng, g)));
    }
    for (name, k) in complexes {
        let (Some(a), Some(b)) = (
            cx.ok(k.minimal_non_faces(&exhaustive), || name.clone()),
            cx.ok(k.minimal_non_faces(&transversal), || name.clone()),
        ) else {
            continue;
        };
        cx.eq(&a, &b, || format!("{name} with facets {:?}", k.facets()));
        for nf in &a {
            let minimal = !k.contains_face(nf).unwrap()
                && nf.iter().all(|i| {
                    let mut sub = nf.clone();
                    sub.remove(i);
                    k.contains_face(&sub).unwrap()
                });
            cx.check(minimal, || format!("{name}: {nf} is not a minimal non-face"));
        }
    }
}

/// `f_{-1} = 1` prepended, for convolution.
fn augmented_f(k: &SimplicialComplex) -> Vec<u64> {
    let mut f = vec![1];
    f.extend(k.f_vector());
    f
}

fn join_f_vector(cx: &mut Cx) {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..100 {
        let (a, b) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
        let (k, l) = (random_complex(&mut rng, a), random_complex(&mut rng, b));
        let (fk, fl) = (augmented_f(&k), augmented_f(&l));
        let mut want = vec![0u64; fk.len() + fl.len() - 1];
        for (i, x) in fk.iter().enumerate() {
            for (j, y) in fl.iter().enumerate() {
                want[i + j] += x * y;
            }
        }
        while want.last() == Some(&0) {
            want.pop();
        }
        let joined = k.join(&l);
        let input = || format!("case {i}: K={:?} on {a}, L={:?} on {b}", k.facets(), l.facets());
        cx.eq(augmented_f(&joined), want, input);
        let reduced = |c: &SimplicialComplex| c.euler_characteristic() - 1;
        cx.eq(reduced(&joined), -reduced(&k) * reduced(&l), input);
    }
}

fn skeleton_truncates_f_vector(cx: &mut Cx) {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..60 {
        let g = rng.gen_range(1..=10);
        let k = random_complex(&mut rng, g);
        let f = k.f_vector();
        for j in 0..=k.dim().max(0) {
            let Some(s) = cx.ok(k.skeleton(j), || format!("case {i}")) else { continue };
            let want: Vec<u64> = f.iter().copied().take(j as usize + 1).collect();
            cx.eq(s.f_vector(), want, || format!("case {i}: {:?} on {g}, j={j}", k.facets()));
        }
    }
}

fn mobius_fingerprint(cx: &mut Cx) {
    let k = polygon(5).coskeleton(0).unwrap();
    cx.eq(k.f_vector(), vec![5, 10, 5], || "f-vector of the pentagon vertex coskeleton".into());
    cx.eq(k.euler_characteristic(), 0, || "Euler characteristic".into());
    let nf = k.minimal_non_faces(&NonFaceConfig::default()).unwrap();
    cx.eq(nf.len(), 5, || format!("minimal non-faces {nf:?}"));
    cx.check(nf.iter().all(|f| f.len() == 3), || format!("non-face sizes {nf:?}"));
    let edges = k.skeleton(1).unwrap();
    cx.eq(edges.f_vector(), vec![5, 10], || "1-skeleton".into());
}

// ----------------------------------------------------------- polytope_types

fn product_face_counts(cx: &mut Cx) {
    let mut cases: Vec<Vec<CombinatorialType>> = Vec::new();
    for a in 3..=10 {
        for b in a..=(20 - a) {
            cases.push(vec![polygon(a), polygon(b)]);
            if b <= 7 {
                cases.push(vec![polygon(a), simplex(b)]);
            }
        }
    }
    for sizes in multisets(&[3, 4, 5, 6], 3) {
        cases.push(sizes.into_iter().map(polygon).collect());
    }
    for n in 2..=5 {
        for r in 2..=4 {
            if n * r <= 20 {
                cases.push(vec![simplex(n); r]);
            }
        }
    }
    for factors in cases {
        let fs: Vec<Vec<u64>> = factors.iter().map(factor_f_vector).collect();
        let mut want = vec![1u64];
        for f in &fs {
            let mut next = vec![0u64; want.len() + f.len() - 1];
            for (i, x) in want.iter().enumerate() {
                for (j, y) in f.iter().enumerate() {
                    next[i + j] += x * y;
                }
            }
            want = next;
        }
        let p = product(factors);
        let t = CombinatorialType::Product(p.clone());
        for (k, &count) in want.iter().enumerate().take(p.dim()) {
            let got = t.faces_of_dim(k as isize).map(|f| f.len() as u64);
            cx.eq(got, Ok(count), || format!("{} faces of dim {k}", describe(&p)));
        }
    }
}

fn describe(p: &ProductType) -> String {
    let parts: Vec<String> = p
        .factors()
        .iter()
        .map(|f| match f {
            CombinatorialType::Polygon(q) => format!("polygon:{}", q.edges()),
            CombinatorialType::Simplex(s) => format!("simplex:{}", s.facets()),
            CombinatorialType::Wedge(w) => format!("wedge:{},{}", w.r(), w.n()),
            CombinatorialType::Product(_) => "product".into(),
        })
        .collect();
    format!("product:({})", parts.join(","))
}


fn euler_relation(cx: &mut Cx) {
    let mut polys: Vec<(String, CombinatorialType)> = small_products(14)
        .into_iter()
        .map(|p| (describe(&p), CombinatorialType::Product(p)))
        .collect();
    for (r, n) in [(3, 2), (4, 2), (3, 3), (4, 3), (5, 2)] {
        polys.push((format!("wedge:{r},{n}"), CombinatorialType::wedge(r, n).unwrap()));
    }
    for (name, p) in polys {
        let d = p.dim() as isize;
        let alternating: i64 = (0..d)
            .map(|k| {
                let f = p.faces_of_dim(k).unwrap().len() as i64;
                if k % 2 == 0 {
                    f
                } else {
                    -f
                }
            })
            .sum();
        cx.eq(alternating, 1 - (-1i64).pow(d as u32), || format!("{name}: alternating face sum"));
    }
}

fn coskeleton_tower(cx: &mut Cx) {
    for p in small_products(14) {
        let t = CombinatorialType::Product(p.clone());
        for k in 0..p.dim() as isize - 1 {
            let (lo, hi) = (t.coskeleton(k).unwrap(), t.coskeleton(k + 1).unwrap());
            cx.check(lo.is_subcomplex_of(&hi), || format!("{}: Σ_{k} not inside Σ_{}", describe(&p), k + 1));
        }
    }
}

fn coskeleton_is_union_of_cotypes(cx: &mut Cx) {
    for p in small_products(14) {
        let t = CombinatorialType::Product(p.clone());
        for k in 0..p.dim() as isize {
            let direct = t.coskeleton(k).unwrap();
            let union = p.coskeleton_product(k).unwrap();
            cx.check(
                direct.is_subcomplex_of(&union) && union.is_subcomplex_of(&direct),
                || format!("{} k={k}", describe(&p)),
            );
        }
    }
}

fn wedge_counts(cx: &mut Cx) {
    for (r, n) in [(3, 2), (4, 2), (4, 3), (5, 3)] {
        let w = CombinatorialType::wedge(r, n).unwrap();
        let vertices = w.faces_of_dim(0).unwrap().len() as u64;
        cx.eq(vertices, (r * n.pow(r as u32 - 2)) as u64, || format!("vertices of wedge:{r},{n}"));
    }
    for r in 3..=6 {
        for n in 2..=4 {
            let CombinatorialType::Wedge(w) = CombinatorialType::wedge(r, n).unwrap() else {
                unreachable!()
            };
            let s = w.surface();
            cx.eq(s.facets().len(), 2 * n.pow(r as u32 - 1), || format!("surface of wedge:{r},{n}"));
            cx.check(s.facets().iter().all(|f| f.len() == r), || format!("surface faces of wedge:{r},{n}"));
        }
    }
}

fn special_face_complements(cx: &mut Cx) {
    for (r, n) in [(3, 2), (4, 2), (4, 3), (5, 3), (3, 4)] {
        let CombinatorialType::Wedge(w) = CombinatorialType::wedge(r, n).unwrap() else {
            unreachable!()
        };
        let power = CombinatorialType::Product(product(vec![simplex(n); r]));
        for k in 0..(r * (n - 1)) as isize {
            let gens = w.special_faces(k).unwrap().into_iter().map(|f| f.complement(r * n));
            let lifted = SimplicialComplex::new(r * n, gens).unwrap();
            cx.eq(lifted, power.coskeleton(k).unwrap(), || format!("wedge:{r},{n} special faces k={k}"));
        }
    }
}

// ---------------------------------------------------------- kneser_coloring

fn kneser_chromatic_numbers(cx: &mut Cx) {
    let config = ColoringConfig {
        max_vertices: 128,
        ..ColoringConfig::default()
    };
    for n in 1..=8usize {
        for l in 1..=n {
            let want = if 2 * l <= n + 1 { n + 2 - 2 * l } else { 1 };
            let g = KneserGraph::complete(n, l);
            if let Some(c) = cx.ok(g.chromatic_number(&config), || format!("KG({n},{l})")) {
                cx.eq(c.num_colors, want, || format!("χ(KG({n},{l}))"));
                cx.check(c.is_proper(g.adjacency()), || format!("coloring of KG({n},{l})"));
            }
        }
    }
}

/// Smallest `k` admitting a proper coloring, by plain backtracking in vertex order.
fn chromatic_by_backtracking(adj: &[Vec<usize>]) -> usize {
    fn colorable(adj: &[Vec<usize>], k: usize, v: usize, colors: &mut Vec<usize>) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 0..k {
            if adj[v].iter().all(|&u| u >= v || colors[u] != c) {
                colors[v] = c;
                if colorable(adj, k, v + 1, colors) {
                    return true;
                }
            }
        }
        false
    }
    let n = adj.len();
    (0..=n).find(|&k| colorable(adj, k, 0, &mut vec![0; n])).unwrap_or(n)
}

fn coloring_matches_backtracking(cx: &mut Cx) {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for i in 0..200 {
        let n = rng.gen_range(0..=10);
        let p = rng.gen_range(0.1..0.9);
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        let want = chromatic_by_backtracking(&adj);
        let input = || format!("case {i}: adjacency {adj:?}");
        if let Some(c) = cx.ok(skelproj_core::kneser::chromatic_number(&adj, &ColoringConfig::default()), input) {
            cx.eq(c.num_colors, want, input);
            cx.check(c.is_proper(&adj), input);
        }
    }
}

fn polygon_sind_table(cx: &mut Cx) {
    for m in 3..=9usize {
        let want = if m % 2 == 0 { m as i64 - 3 } else { m as i64 - 2 };
        let k = polygon(m).coskeleton(0).unwrap();
        if let Some(s) = cx.ok(sind(&k), || format!("polygon:{m}")) {
            cx.eq(s, want, || format!("Sind Σ_0(polygon:{m})"));
        }
        for (j, want) in [(1, m as i64 - 2), (2, m as i64 - 1)] {
            if let Some(s) = cx.ok(sind(&polygon(m).coskeleton(j).unwrap()), || format!("polygon:{m}")) {
                cx.eq(s, want, || format!("Sind Σ_{j}(polygon:{m})"));
            }
        }
    }
}

fn simplex_sind_table(cx: &mut Cx) {
    for n in 2..=7i64 {
        for k in 0..n {
            let want = if 2 * k + 3 <= n {
                2 * k + 1
            } else if k <= n - 2 {
                n - 2
            } else {
                n - 1
            };
            let c = simplex(n as usize).coskeleton(k as isize).unwrap();
            if let Some(s) = cx.ok(sind(&c), || format!("simplex:{n}")) {
                cx.eq(s, want, || format!("Sind Σ_{k}(simplex:{n})"));
            }
        }
    }
}

fn join_additivity(cx: &mut Cx) {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for i in 0..200 {
        let a = rng.gen_range(1..=8);
        let b = rng.gen_range(1..=16 - a);
        let (k, l) = (random_complex(&mut rng, a), random_complex(&mut rng, b));
        let input = || format!("case {i}: K={:?} on {a}, L={:?} on {b}", k.facets(), l.facets());
        let (Some(sk), Some(sl), Some(sj)) = (
            cx.ok(sind(&k), input),
            cx.ok(sind(&l), input),
            cx.ok(sind(&k.join(&l)), input),
        ) else {
            continue;
        };
        cx.eq(sj, sk + sl + 1, input);
    }
}

fn cotype_linearity(cx: &mut Cx) {
    for p in small_products(16) {
        let r = p.factors().len() as i64;
        for k in 0..p.dim() as isize {
            for lambda in p.face_types(k).unwrap() {
                let input = || format!("{} λ={lambda}", describe(&p));
                let parts: Option<i64> = p
                    .factors()
                    .iter()
                    .zip(lambda.parts())
                    .map(|(f, &l)| cx.ok(sind(&f.coskeleton(l as isize).unwrap()), input))
                    .sum();
                let whole = cx.ok(sind(&p.cotype_complex(&lambda).unwrap()), input);
                if let (Some(parts), Some(whole)) = (parts, whole) {
                    cx.eq(whole, parts + r - 1, input);
                }
            }
        }
    }
}

// ------------------------------------------------------- obstruction_engine

fn run_analysis(cx: &mut Cx, poly: &CombinatorialType, name: &str, target: Target, e: i64, modes: &[BoundSource]) -> Option<Analysis> {
    let a = cx.ok(analyze(poly, target, e, modes, &wide_engine()), || format!("{name} {target} e={e}"))?;
    cx.check(a.inconsistencies.is_empty(), || format!("{name} {target} e={e}: {:?}", a.inconsistencies));
    cx.check(a.resource_errors().is_empty(), || format!("{name} {target} e={e}: {:?}", a.resource_errors()));
    Some(a)
}

/// Polygon products with up to three factors of sizes 3..6 and simplex
/// powers with `n <= 5`, `r <= 3`.
fn agreement_grid() -> Vec<ProductType> {
    let mut out = Vec::new();
    for r in 1..=3 {
        for sizes in multisets(&[3, 4, 5, 6], r) {
            out.push(product(sizes.into_iter().map(polygon).collect()));
        }
    }
    for n in 2..=5 {
        for r in 1..=3 {
            out.push(product(vec![simplex(n); r]));
        }
    }
    out
}

fn three_path_agreement(cx: &mut Cx) {
    for p in agreement_grid() {
        let name = describe(&p);
        let t = CombinatorialType::Product(p.clone());
        for k in 0..p.dim() {
            let Some(a) = run_analysis(cx, &t, &name, Target::Skeleton(k), 0, &BoundSource::ALL) else {
                continue;
            };
            let ran = a.paths.iter().filter(|p| p.bound.is_some()).count();
            cx.eq(ran, 3, || format!("{name} k={k}: paths that produced a bound"));
            cx.eq(a.agreement, Some(true), || format!("{name} k={k}: {:?}", a.paths));
        }
    }
}

fn knapsack_matches_closed_forms(cx: &mut Cx) {
    let value = |inst: KnapsackInstance| match inst.solve() {
        KnapsackOutcome::Optimal { value, .. } => Some(value),
        KnapsackOutcome::Infeasible => None,
    };
    for n in 2..=6 {
        for r in 1..=4 {
            for k in 0..r * (n - 1) {
                let s = value(KnapsackInstance::simplex_power(n, r, k).unwrap());
                cx.eq(
                    s.map(|s| s + r as i64 - 1),
                    edim_lower_simplex_products(n, r, k).ok(),
                    || format!("simplex knapsack n={n} r={r} k={k}"),
                );
            }
        }
    }
    for r_e in 0..=4 {
        for r_o in 0..=4 {
            let r = r_e + r_o;
            if r == 0 {
                continue;
            }
            let m = 4 * r_e + 5 * r_o;
            for k in 0..2 * r {
                let s = value(KnapsackInstance::polygon_product(r_e, r_o, k).unwrap());
                cx.eq(
                    s.map(|s| m as i64 - 1 - (2 * r as i64 - s)),
                    edim_lower_polygon_products(m, r_e, r_o, k).ok(),
                    || format!("polygon knapsack r_e={r_e} r_o={r_o} k={k}"),
                );
            }
        }
    }
}

fn bounds_ordered(cx: &mut Cx) {
    for r_e in 0..=5 {
        for r_o in 0..=5 {
            let r = r_e + r_o;
            let m = 4 * r_e + 3 * r_o;
            for k in 0..2 * r {
                let lo = edim_lower_polygon_products(m, r_e, r_o, k).unwrap();
                let hi = edim_upper_polygon_products(m, r_e, r_o, k).unwrap();
                cx.check(lo <= hi, || format!("polygons r_e={r_e} r_o={r_o} k={k}: {lo} > {hi}"));
            }
        }
    }
    for n in 2..=9 {
        for r in 1..=5 {
            for k in 0..r * (n - 1) {
                let lo = edim_lower_simplex_products(n, r, k).unwrap();
                let hi = edim_upper_simplex_products(n, r, k).unwrap();
                cx.check(lo <= hi, || format!("simplices n={n} r={r} k={k}: {lo} > {hi}"));
            }
        }
    }
}

fn thresholds_monotone(cx: &mut Cx) {
    for r_e in 0..=5 {
        for r_o in 0..=5 {
            for k in 1..2 * (r_e + r_o) {
                let (a, b) = (
                    polygon_products_threshold(r_e, r_o, k - 1).unwrap(),
                    polygon_products_threshold(r_e, r_o, k).unwrap(),
                );
                cx.check(a <= b, || format!("polygons r_e={r_e} r_o={r_o}: k={} gives {a}, k={k} gives {b}", k - 1));
            }
        }
    }
    for n in 2..=9 {
        for r in 1..=5 {
            for k in 1..r * (n - 1) {
                let (a, b) = (
                    simplex_products_threshold(n, r, k - 1).unwrap(),
                    simplex_products_threshold(n, r, k).unwrap(),
                );
                cx.check(a <= b, || format!("simplices n={n} r={r}: k={} gives {a}, k={k} gives {b}", k - 1));
            }
        }
    }
    for r in 4..=7 {
        for n in 2..=6 {
            let t = |k| wedge_skeleton_threshold(r, n, k).ok().and_then(|o| o.verdict().map(|v| v.threshold_e));
            for k in 1..r * (n - 1) + 2 {
                let (a, b) = (t(k - 1), t(k));
                cx.check(a.is_some() && a <= b, || format!("wedge:{r},{n}: k={} gives {a:?}, k={k} gives {b:?}", k - 1));
            }
        }
    }
}

fn certificates_recheck(cx: &mut Cx) {
    for p in small_products(12) {
        let name = describe(&p);
        let t = CombinatorialType::Product(p.clone());
        for k in 0..p.dim() {
            for e in 0..=p.dim() as i64 {
                let Some(a) = run_analysis(cx, &t, &name, Target::Skeleton(k), e, &BoundSource::ALL) else {
                    continue;
                };
                let Some(c) = &a.certificate else {
                    cx.check(false, || format!("{name} k={k} e={e}: no certificate"));
                    continue;
                };
                cx.check(c.recheck(), || format!("{name} k={k} e={e}: {c:?}"));
                let mut tampered = c.clone();
                tampered.obstructed = !tampered.obstructed;
                cx.check(!tampered.recheck(), || format!("{name} k={k} e={e}: flipped verdict still rechecks"));
                cx.eq(a.obstructed(), Some(e < c.threshold_e), || format!("{name} k={k} e={e}"));
            }
        }
    }
}

fn verdict_of(cx: &mut Cx, poly: &CombinatorialType, name: &str, target: Target, e: i64) -> Option<bool> {
    let modes: &[BoundSource] = if poly.num_facets() <= 15 {
        &BoundSource::ALL
    } else {
        &[BoundSource::ClosedForm, BoundSource::Ilp]
    };
    run_analysis(cx, poly, name, target, e, modes)?.obstructed()
}

fn headline_verdicts(cx: &mut Cx) {
    // Two odd polygons, vertices, e = 2.
    for (a, b) in [(3, 3), (3, 5), (5, 5), (5, 7), (7, 9)] {
        let p = CombinatorialType::Product(product(vec![polygon(a), polygon(b)]));
        let name = format!("polygon:{a} x polygon:{b}");
        let v = verdict_of(cx, &p, &name, Target::Skeleton(0), 2);
        cx.eq(v, Some(true), || name.clone());
    }
    // r odd polygons, vertices, e = r.
    for r in 1..=6 {
        for m in [3, 5] {
            let p = CombinatorialType::Product(product(vec![polygon(m); r]));
            let name = format!("{r} copies of polygon:{m}");
            let v = verdict_of(cx, &p, &name, Target::Skeleton(0), r as i64);
        cx.eq(v, Some(true), || name.clone());
        }
    }
    // Two triangles, vertices.
    let tt = CombinatorialType::Product(product(vec![simplex(3), simplex(3)]));
    let v = verdict_of(cx, &tt, "simplex:3 x simplex:3", Target::Skeleton(0), 2);
        cx.eq(v, Some(true), || "Δ2×Δ2 e=2".into());
    let v = verdict_of(cx, &tt, "simplex:3 x simplex:3", Target::Skeleton(0), 3);
        cx.eq(v, Some(false), || "Δ2×Δ2 e=3".into());
    // Desargues prism: cotype (1,0), Sind 3, obstructed at e = 2.
    let prism_spec = parse_spec("product:(simplex:2,simplex:3)").unwrap();
    let subject = SarkariaSubject::Cotype {
        face_type: FaceType(vec![1, 0]),
    };
    if let Some(s) = cx.ok(sarkaria(&prism_spec, &subject, &wide_sarkaria()), || "Desargues cotype".into()) {
        cx.eq(s.sind, 3, || "Sind of the Desargues cotype complex".into());
    }
    let prism = prism_spec.to_type().unwrap();
    let v = verdict_of(cx, &prism, "Δ1×Δ2", Target::Skeleton(1), 2);
        cx.eq(v, Some(true), || "Desargues e=2".into());
    // A single simplex: obstructed exactly for e <= 2k + 1.
    for k in 0..=3usize {
        for n in 2 * k + 3..=2 * k + 5 {
            let s = simplex(n);
            for e in 0..=2 * k as i64 + 4 {
                let name = format!("simplex:{n} k={k} e={e}");
                let v = verdict_of(cx, &s, &name, Target::Skeleton(k), e);
        cx.eq(v, Some(e <= 2 * k as i64 + 1), || name.clone());
            }
        }
    }
    // Wedge surfaces: obstructed for e <= r, not at e = r + 1.
    for r in 4..=6 {
        for n in 3..=4 {
            let w = CombinatorialType::wedge(r, n).unwrap();
            for e in 1..=r as i64 + 1 {
                let name = format!("wedge:{r},{n} surface e={e}");
                let v = verdict_of(cx, &w, &name, Target::Surface, e);
        cx.eq(v, Some(e <= r as i64), || name.clone());
            }
        }
    }
    // n = 2 surfaces have no obstruction statement.
    for r in 3..=6 {
        let w = CombinatorialType::wedge(r, 2).unwrap();
        let name = format!("wedge:{r},2 surface e=4");
        if let Some(a) = run_analysis(cx, &w, &name, Target::Surface, 4, &BoundSource::ALL) {
            cx.check(a.unavailable_reason().is_some() && a.obstructed().is_none(), || name.clone());
        }
    }
}

fn wedge_consistency(cx: &mut Cx) {
    for r in 3..=6 {
        for n in 2..=4 {
            let w = CombinatorialType::wedge(r, n).unwrap();
            let modes: &[BoundSource] = if r * n <= 12 {
                &BoundSource::ALL
            } else {
                &[BoundSource::ClosedForm, BoundSource::Ilp]
            };
            let name = format!("wedge:{r},{n}");
            for e in [1, r as i64, r as i64 + 2] {
                for k in 0..w.dim() {
                    if let Some(a) = run_analysis(cx, &w, &name, Target::Skeleton(k), e, modes) {
                        cx.eq(a.obstructed().is_some(), r >= 4, || format!("{name} skeleton:{k} e={e}"));
                    }
                    if k >= 2 {
                        run_analysis(cx, &w, &name, Target::Special(k), e, modes);
                    }
                }
                run_analysis(cx, &w, &name, Target::Surface, e, modes);
            }
        }
    }
}

// ------------------------------------------------------------- cli_reports

fn random_spec(rng: &mut ChaCha8Rng, depth: usize) -> PolytopeSpec {
    match rng.gen_range(0..if depth == 0 { 3 } else { 4 }) {
        0 => PolytopeSpec::Polygon(rng.gen_range(3..=40)),
        1 => PolytopeSpec::Simplex(rng.gen_range(2..=40)),
        2 => PolytopeSpec::Wedge(rng.gen_range(3..=9), rng.gen_range(2..=9)),
        _ => PolytopeSpec::Product((0..rng.gen_range(1..=4)).map(|_| random_spec(rng, depth - 1)).collect()),
    }
}

fn spec_round_trip(cx: &mut Cx) {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..500 {
        let spec = random_spec(&mut rng, 3);
        let text = spec.to_string();
        cx.eq(parse_spec(&text).ok(), Some(spec), || text.clone());
    }
}

fn spec_examples(cx: &mut Cx) {
    for (text, dm) in [
        ("product:(polygon:5,polygon:5)", Some((4, 10))),
        ("wedge:4,3", Some((10, 12))),
        ("polygon:2", None),
        ("simplex:1", None),
        ("wedge:2,3", None),
        ("product:()", None),
    ] {
        let got = parse_spec(text).ok().and_then(|s| s.to_type().ok()).map(|t| (t.dim(), t.num_facets()));
        cx.eq(got, dm, || text.to_string());
    }
}

fn sample_queries() -> Vec<Query> {
    [
        ("product:(polygon:5,polygon:5)", "skeleton:0", 2),
        ("wedge:4,3", "surface", 4),
        ("wedge:4,2", "surface", 4),
        ("simplex:5", "skeleton:1", 3),
        ("product:(simplex:2,simplex:3)", "skeleton:1", 2),
        ("product:(polygon:4,polygon:4)", "neighborly", 4),
        ("wedge:5,3", "special:3", 6),
    ]
    .into_iter()
    .map(|(spec, target, e)| Query {
        polytope_spec: parse_spec(spec).unwrap(),
        target: target.parse().unwrap(),
        e,
        mode: Mode::All,
    })
    .collect()
}

fn report_determinism(cx: &mut Cx) {
    for q in sample_queries() {
        let input = || format!("{q:?}");
        let (Some(a), Some(b)) = (
            cx.ok(run_query(&q, &EngineConfig::default()), input),
            cx.ok(run_query(&q, &EngineConfig::default()), input),
        ) else {
            continue;
        };
        let json = a.to_json();
        cx.eq(&json, &b.to_json(), input);
        cx.eq(crate::report::Report::from_json(&json).ok().as_ref(), Some(&a), input);
        let pairs_agree = a.agreement.pairs.iter().all(|p| p.agree);
        cx.check(pairs_agree, || format!("{}: {:?}", input(), a.agreement));
    }
}

fn query_examples(cx: &mut Cx) {
    let run = |cx: &mut Cx, spec: &str, target: &str, e: i64| {
        let q = Query {
            polytope_spec: parse_spec(spec).unwrap(),
            target: target.parse().unwrap(),
            e,
            mode: Mode::All,
        };
        cx.ok(run_query(&q, &EngineConfig::default()), || format!("{spec} {target} e={e}"))
    };
    if let Some(r) = run(cx, "product:(polygon:5,polygon:5)", "skeleton:0", 2) {
        cx.eq((r.obstructed, r.threshold_e, r.agreement.all), (Some(true), Some(3), Some(true)), || {
            "two pentagons".into()
        });
    }
    if let Some(r) = run(cx, "wedge:4,3", "surface", 4) {
        cx.eq((r.obstructed, r.threshold_e), (Some(true), Some(5)), || "wedge:4,3 surface".into());
    }
    if let Some(r) = run(cx, "simplex:5", "skeleton:1", 3) {
        cx.eq((r.obstructed, r.checks.van_kampen_flores), (Some(true), Some(true)), || {
            "simplex:5 edges".into()
        });
    }
    let bad = Query {
        polytope_spec: parse_spec("polygon:5").unwrap(),
        target: Target::Surface,
        e: 2,
        mode: Mode::All,
    };
    cx.check(run_query(&bad, &EngineConfig::default()).is_err(), || "surface target on a polygon".into());
}
