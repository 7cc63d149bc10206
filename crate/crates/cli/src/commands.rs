//! Payloads of the `coskeleton`, `sarkaria` and `sweep` subcommands.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use skelproj_core::kneser::sarkaria_index;
use skelproj_core::{EngineConfig, Face, FaceType, SarkariaConfig, SimplicialComplex, Target};

use crate::error::CliError;
use crate::report::{run_query, Mode, Query};
use crate::spec::PolytopeSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoskeletonOut {
    Facets,
    Fvector,
    Nonfaces,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoskeletonOutput {
    pub polytope_spec: PolytopeSpec,
    pub k: isize,
    pub ground_size: usize,
    pub dim: isize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Face>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub euler_characteristic: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_non_faces: Option<Vec<Face>>,
}

pub fn coskeleton(
    spec: &PolytopeSpec,
    k: isize,
    out: CoskeletonOut,
    config: &SarkariaConfig,
) -> Result<CoskeletonOutput, CliError> {
    let complex = spec.to_type()?.coskeleton(k)?;
    let mut output = CoskeletonOutput {
        polytope_spec: spec.clone(),
        k,
        ground_size: complex.ground_size(),
        dim: complex.dim(),
        facets: None,
        f_vector: None,
        euler_characteristic: None,
        minimal_non_faces: None,
    };
    match out {
        CoskeletonOut::Facets => output.facets = Some(complex.facets().to_vec()),
        CoskeletonOut::Fvector => {
            output.f_vector = Some(complex.f_vector());
            output.euler_characteristic = Some(complex.euler_characteristic());
        }
        CoskeletonOut::Nonfaces => output.minimal_non_faces = Some(complex.minimal_non_faces(&config.nonfaces)?),
    }
    Ok(output)
}

/// Which complex a Sarkaria computation runs on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SarkariaSubject {
    Coskeleton { k: isize },
    Cotype { face_type: FaceType },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SarkariaOutput {
    pub polytope_spec: PolytopeSpec,
    pub complex: SarkariaSubject,
    pub ground_size: usize,
    pub nonface_count: usize,
    pub minimal_non_faces: Vec<Face>,
    pub kneser_edges: usize,
    pub chromatic_number: usize,
    /// Color of each minimal non-face, in the order listed.
    pub coloring: Vec<usize>,
    pub sind: i64,
}

pub fn sarkaria(
    spec: &PolytopeSpec,
    subject: &SarkariaSubject,
    config: &SarkariaConfig,
) -> Result<SarkariaOutput, CliError> {
    let poly = spec.to_type()?;
    let complex: SimplicialComplex = match subject {
        SarkariaSubject::Coskeleton { k } => poly.coskeleton(*k)?,
        SarkariaSubject::Cotype { face_type } => poly.to_product().cotype_complex(face_type)?,
    };
    let index = sarkaria_index(&complex, config)?;
    let kneser_edges = index
        .nonfaces
        .iter()
        .enumerate()
        .map(|(i, a)| index.nonfaces[i + 1..].iter().filter(|b| a.is_disjoint(b)).count())
        .sum();
    Ok(SarkariaOutput {
        polytope_spec: spec.clone(),
        complex: subject.clone(),
        ground_size: index.ground_size,
        nonface_count: index.nonfaces.len(),
        kneser_edges,
        chromatic_number: index.chromatic_number,
        coloring: index.coloring.colors,
        minimal_non_faces: index.nonfaces,
        sind: index.value,
    })
}

/// Parses `A..B` or `A..=B`; both are inclusive of `B`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<i64>, CliError> {
    let bad = || CliError::Usage(format!("expected a range A..B, got {text:?}"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(CliError::Usage(format!("empty range {text:?}")));
    }
    Ok(a..=b)
}

/// Kind of target swept over; skeleton and special targets vary `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepTarget {
    Skeleton,
    Special,
    Surface,
    Neighborly,
}

impl std::str::FromStr for SweepTarget {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.split_once(':').map_or(s, |(kind, _)| kind) {
            "skeleton" => Ok(SweepTarget::Skeleton),
            "special" => Ok(SweepTarget::Special),
            "surface" => Ok(SweepTarget::Surface),
            "neighborly" => Ok(SweepTarget::Neighborly),
            _ => Err(CliError::Usage(format!(
                "unknown sweep target {s:?}; expected skeleton, special, surface or neighborly"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub target: String,
    pub e: i64,
    pub available: bool,
    pub obstructed: Option<bool>,
    pub threshold_e: Option<i64>,
    pub agreement: Option<bool>,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOutput {
    pub polytope_spec: PolytopeSpec,
    pub mode: Mode,
    pub rows: Vec<SweepRow>,
}

impl SweepOutput {
    /// The most severe resource or consistency exit code among the rows.
    /// Cells outside a target's valid range are reported per row only.
    pub fn exit_code(&self) -> i32 {
        self.rows
            .iter()
            .map(|r| r.exit_code)
            .filter(|&c| c != crate::error::EXIT_INPUT)
            .max()
            .unwrap_or(0)
    }

    /// One line per target, one column per `e`: `X` obstructed, `.` not,
    /// `?` no verdict.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mut es: Vec<i64> = self.rows.iter().map(|r| r.e).collect();
        es.sort_unstable();
        es.dedup();
        let width = self.rows.iter().map(|r| r.target.len()).max().unwrap_or(0).max(6);
        let _ = write!(out, "{:<width$}", "e");
        for e in &es {
            let _ = write!(out, " {e:>3}");
        }
        let mut targets: Vec<&str> = Vec::new();
        for r in &self.rows {
            if !targets.contains(&r.target.as_str()) {
                targets.push(&r.target);
            }
        }
        for t in targets {
            let _ = write!(out, "\n{t:<width$}");
            for e in &es {
                let cell = self
                    .rows
                    .iter()
                    .find(|r| r.target == t && r.e == *e)
                    .map_or("", |r| match r.obstructed {
                        Some(true) => "X",
                        Some(false) => ".",
                        None => "?",
                    });
                let _ = write!(out, " {cell:>3}");
            }
        }
        out.push('\n');
        out
    }
}

pub fn sweep(
    spec: &PolytopeSpec,
    target: SweepTarget,
    e_range: RangeInclusive<i64>,
    k_range: Option<RangeInclusive<i64>>,
    mode: Mode,
    config: &EngineConfig,
) -> Result<SweepOutput, CliError> {
    let targets: Vec<Target> = match target {
        SweepTarget::Surface => vec![Target::Surface],
        SweepTarget::Neighborly => vec![Target::Neighborly],
        SweepTarget::Skeleton | SweepTarget::Special => {
            let ks = k_range.ok_or_else(|| CliError::Usage("skeleton and special sweeps need --k-range".into()))?;
            if *ks.start() < 0 {
                return Err(CliError::Usage("k must be nonnegative".into()));
            }
            ks.map(|k| {
                if target == SweepTarget::Skeleton {
                    Target::Skeleton(k as usize)
                } else {
                    Target::Special(k as usize)
                }
            })
            .collect()
        }
    };
    let mut rows = Vec::new();
    for t in targets {
        for e in e_range.clone() {
            let query = Query {
                polytope_spec: spec.clone(),
                target: t,
                e,
                mode,
            };
            rows.push(match run_query(&query, config) {
                Ok(r) => SweepRow {
                    target: t.to_string(),
                    e,
                    available: r.available,
                    obstructed: r.obstructed,
                    threshold_e: r.threshold_e,
                    agreement: r.agreement.all,
                    exit_code: r.exit_code(),
                    error: None,
                },
                // Invalid cells (for example a neighborly target at odd small e) are reported, not fatal.
                Err(err) => SweepRow {
                    target: t.to_string(),
                    e,
                    available: false,
                    obstructed: None,
                    threshold_e: None,
                    agreement: None,
                    exit_code: err.exit_code(),
                    error: Some(err.to_string()),
                },
            });
        }
    }
    Ok(SweepOutput {
        polytope_spec: spec.clone(),
        mode,
        rows,
    })
}
