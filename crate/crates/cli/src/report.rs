//! Queries, structured reports, and their JSON and table renderings.

use std::fmt::{self, Display, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use skelproj_core::obstruction::{Family, PathStatus, Rule, SubBound};
use skelproj_core::{analyze, Analysis, BoundSource, EngineConfig, FaceType, Target};

use crate::error::CliError;
use crate::spec::PolytopeSpec;

pub const SCHEMA_VERSION: &str = "skelproj.report/v1";
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    ClosedForm,
    Ilp,
    BruteForce,
    #[default]
    All,
}

impl Mode {
    pub fn sources(self) -> Vec<BoundSource> {
        match self {
            Mode::ClosedForm => vec![BoundSource::ClosedForm],
            Mode::Ilp => vec![BoundSource::Ilp],
            Mode::BruteForce => vec![BoundSource::BruteForce],
            Mode::All => BoundSource::ALL.to_vec(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::ClosedForm => "closed_form",
            Mode::Ilp => "ilp",
            Mode::BruteForce => "brute_force",
            Mode::All => "all",
        }
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [Mode::ClosedForm, Mode::Ilp, Mode::BruteForce, Mode::All]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode {s:?}; expected closed_form, ilp, brute_force or all"))
    }
}

impl Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Serializes a value through its `Display` and `FromStr` forms.
mod as_string {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(value: &T, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, T, D>(deserializer: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub polytope_spec: PolytopeSpec,
    #[serde(with = "as_string")]
    pub target: Target,
    pub e: i64,
    pub mode: Mode,
}

/// What one path produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeBounds {
    pub mode: BoundSource,
    /// `ok`, `not_applicable` or `resource_exceeded`.
    pub status: String,
    pub detail: Option<String>,
    pub sind: Option<i64>,
    pub edim_lower: Option<i64>,
    pub edim_upper: Option<i64>,
    pub face_type: Option<FaceType>,
    pub nonface_count: Option<usize>,
    pub chromatic_number: Option<usize>,
    pub multiplicities: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDetails {
    /// The path whose bound backs the verdict.
    pub source: BoundSource,
    /// Dimension of the faces whose coskeleton carries the bound.
    pub k: usize,
    pub face_type: Option<FaceType>,
    pub edim_lower: i64,
    pub threshold_e: i64,
    pub obstructed: bool,
    /// `threshold_e == edim_lower + d - m + 2` and the verdict re-derived from it.
    pub recheck: bool,
    pub nonface_count: Option<usize>,
    pub chromatic_number: Option<usize>,
    pub multiplicities: Option<Vec<usize>>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairAgreement {
    pub modes: [BoundSource; 2],
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Agreement {
    /// `None` unless at least two paths produced a bound.
    pub all: Option<bool>,
    pub pairs: Vec<PairAgreement>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub van_kampen_flores: Option<bool>,
    pub neighborly_corollary: Option<bool>,
    pub inconsistencies: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub engine_version: String,
    pub query: Query,
    pub d: usize,
    pub m: usize,
    pub k: Option<usize>,
    pub family: Family,
    pub sub_bound: Option<SubBound>,
    /// False when no obstruction statement covers the query.
    pub available: bool,
    pub unavailable_reason: Option<String>,
    pub bounds: Vec<ModeBounds>,
    pub obstructed: Option<bool>,
    pub threshold_e: Option<i64>,
    pub rule: Option<Rule>,
    pub certificate: Option<CertificateDetails>,
    pub agreement: Agreement,
    pub checks: Checks,
    pub notes: Vec<String>,
}

pub fn run_query(query: &Query, config: &EngineConfig) -> Result<Report, CliError> {
    let poly = query.polytope_spec.to_type()?;
    let analysis = analyze(&poly, query.target, query.e, &query.mode.sources(), config)?;
    Ok(Report::from_analysis(query.clone(), &analysis))
}

impl Report {
    pub fn from_analysis(query: Query, a: &Analysis) -> Report {
        let bounds: Vec<ModeBounds> = a
            .paths
            .iter()
            .map(|p| {
                let (status, detail) = match &p.status {
                    PathStatus::Ok => ("ok", None),
                    PathStatus::NotApplicable { reason } => ("not_applicable", Some(reason.clone())),
                    PathStatus::ResourceExceeded { message } => ("resource_exceeded", Some(message.clone())),
                };
                ModeBounds {
                    mode: p.source,
                    status: status.into(),
                    detail,
                    sind: p.bound.as_ref().and_then(|b| b.sind),
                    edim_lower: p.bound.as_ref().map(|b| b.edim_lower),
                    edim_upper: p.bound.as_ref().and_then(|b| b.edim_upper),
                    face_type: p.face_type.clone(),
                    nonface_count: p.nonface_count,
                    chromatic_number: p.chromatic_number,
                    multiplicities: p.multiplicities.clone(),
                }
            })
            .collect();

        let ran: Vec<&ModeBounds> = bounds.iter().filter(|b| b.edim_lower.is_some()).collect();
        let mut pairs = Vec::new();
        for (i, x) in ran.iter().enumerate() {
            for y in &ran[i + 1..] {
                pairs.push(PairAgreement {
                    modes: [x.mode, y.mode],
                    agree: x.edim_lower == y.edim_lower,
                });
            }
        }

        let certificate = a.certificate.as_ref().map(|c| {
            let path = bounds.iter().find(|b| b.mode == c.bound.source);
            CertificateDetails {
                source: c.bound.source,
                k: c.k,
                face_type: c.face_type.clone(),
                edim_lower: c.bound.edim_lower,
                threshold_e: c.threshold_e,
                obstructed: c.obstructed,
                recheck: c.recheck(),
                nonface_count: path.and_then(|p| p.nonface_count),
                chromatic_number: path.and_then(|p| p.chromatic_number),
                multiplicities: path.and_then(|p| p.multiplicities.clone()),
                note: c.note.clone(),
            }
        });

        Report {
            schema: SCHEMA_VERSION.into(),
            engine_version: ENGINE_VERSION.into(),
            query,
            d: a.d,
            m: a.m,
            k: a.k,
            family: a.family,
            sub_bound: a.sub_bound.clone(),
            available: a.unavailable_reason().is_none(),
            unavailable_reason: a.unavailable_reason().map(str::to_owned),
            bounds,
            obstructed: a.obstructed(),
            threshold_e: a.threshold_e(),
            rule: a.verdict.as_ref().map(|v| v.rule),
            certificate,
            agreement: Agreement {
                all: a.agreement,
                pairs,
            },
            checks: Checks {
                van_kampen_flores: a.van_kampen_flores,
                neighborly_corollary: a.neighborly_corollary,
                inconsistencies: a.inconsistencies.clone(),
            },
            notes: a.notes.clone(),
        }
    }

    pub fn has_resource_errors(&self) -> bool {
        self.bounds.iter().any(|b| b.status == "resource_exceeded")
    }

    /// 0 when the query ran cleanly, 3 when a path hit a resource guard,
    /// 4 when cross-checks disagreed.
    pub fn exit_code(&self) -> i32 {
        if !self.checks.inconsistencies.is_empty() {
            4
        } else if self.has_resource_errors() {
            3
        } else {
            0
        }
    }

    /// Canonical form: pretty JSON with fields in declaration order.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let q = &self.query;
        let mut row = |key: &str, value: &dyn Display| {
            let _ = writeln!(out, "{key:<12} {value}");
        };
        row("polytope", &q.polytope_spec);
        row("target", &q.target);
        row("e", &q.e);
        row("mode", &q.mode);
        row("d, m", &format!("{}, {}", self.d, self.m));
        if let Some(sub) = &self.sub_bound {
            row("bounded by", &sub.description);
        }
        let verdict = match (self.obstructed, self.threshold_e, &self.unavailable_reason) {
            (Some(true), Some(t), _) => format!("obstructed (every e < {t})"),
            (Some(false), Some(t), _) => format!("not obstructed (obstruction needs e < {t})"),
            (_, _, Some(reason)) => format!("no obstruction available: {reason}"),
            _ => "no verdict".into(),
        };
        row("verdict", &verdict);
        if let Some(rule) = self.rule {
            row("rule", &serde_json::to_value(rule).expect("rules serialize").as_str().unwrap_or("?"));
        }
        if let Some(all) = self.agreement.all {
            row("agreement", &if all { "all paths agree" } else { "PATHS DISAGREE" });
        }
        if !self.bounds.is_empty() {
            let opt = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
            let _ = writeln!(
                out,
                "\n{:<12} {:<18} {:>5} {:>6} {:>6}  face type",
                "path", "status", "sind", "lower", "upper"
            );
            for b in &self.bounds {
                let _ = writeln!(
                    out,
                    "{:<12} {:<18} {:>5} {:>6} {:>6}  {}",
                    b.mode.name(),
                    b.status,
                    opt(b.sind),
                    opt(b.edim_lower),
                    opt(b.edim_upper),
                    b.face_type.as_ref().map_or("-".to_string(), ToString::to_string),
                );
            }
        }
        for b in &self.bounds {
            if let Some(detail) = &b.detail {
                let _ = writeln!(out, "{}: {detail}", b.mode.name());
            }
        }
        for issue in &self.checks.inconsistencies {
            let _ = writeln!(out, "inconsistency: {issue}");
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}
