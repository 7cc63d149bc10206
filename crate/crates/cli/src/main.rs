use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use skelproj_cli::commands::{self, CoskeletonOut, SarkariaSubject, SweepTarget};
use skelproj_cli::error::{CliError, EXIT_CONSISTENCY, EXIT_OK};
use skelproj_cli::{parse_spec, run_query, verify_suite, Mode, PolytopeSpec, Query, Scope};
use skelproj_core::{ColoringConfig, EngineConfig, FaceType, SarkariaConfig, Target};

#[derive(Parser)]
#[command(name = "skelproj", version, about = "Combinatorial obstructions to skeleton-preserving projections of polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutKind {
    Facets,
    Fvector,
    Nonfaces,
}

#[derive(clap::Args)]
struct Budget {
    /// Largest Kneser graph colored exactly.
    #[arg(long, default_value_t = ColoringConfig::default().max_vertices)]
    max_kneser_vertices: usize,
    /// Largest ground set scanned exhaustively for minimal non-faces.
    #[arg(long, default_value_t = skelproj_core::NonFaceConfig::default().exhaustive_limit)]
    exhaustive_limit: usize,
}

impl Budget {
    fn sarkaria(&self) -> SarkariaConfig {
        let mut cfg = SarkariaConfig::default();
        cfg.coloring.max_vertices = self.max_kneser_vertices;
        cfg.nonfaces.exhaustive_limit = self.exhaustive_limit;
        cfg
    }

    fn engine(&self) -> EngineConfig {
        EngineConfig { sarkaria: self.sarkaria() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a projection to R^e can retain the target faces.
    Obstruct {
        /// Polytope, e.g. product:(polygon:5,polygon:5) or wedge:4,3.
        spec: String,
        /// skeleton:K, special:K, surface or neighborly.
        #[arg(long)]
        target: String,
        /// Target dimension of the projection.
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        /// closed_form, ilp, brute_force or all.
        #[arg(long, default_value = "all")]
        mode: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        budget: Budget,
    },
    /// The coskeleton complex Σ_k on the facet indices.
    Coskeleton {
        spec: String,
        #[arg(long, allow_negative_numbers = true)]
        k: isize,
        #[arg(long, value_enum, default_value = "facets")]
        out: OutKind,
        #[command(flatten)]
        budget: Budget,
    },
    /// Sarkaria index of a coskeleton or of a cotype complex.
    Sarkaria {
        spec: String,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "cotype", required_unless_present = "cotype")]
        k: Option<isize>,
        /// Face type of a product, e.g. 1,0.
        #[arg(long)]
        cotype: Option<String>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Replay every cross-check over its parameter grid.
    Verify {
        /// simplicial_core, polytope_types, kneser_coloring, obstruction_engine, cli_reports or all.
        #[arg(long, default_value = "all")]
        scope: String,
    },
    /// Verdicts over a grid of target dimensions and face dimensions.
    Sweep {
        spec: String,
        /// skeleton, special, surface or neighborly; a :K suffix is ignored.
        #[arg(long)]
        target: String,
        /// Inclusive range A..B of target dimensions e.
        #[arg(long, allow_hyphen_values = true)]
        e_range: String,
        /// Inclusive range C..D of face dimensions, for skeleton and special targets.
        #[arg(long)]
        k_range: Option<String>,
        #[arg(long, default_value = "all")]
        mode: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        budget: Budget,
    },
}

/// Writes the payload; a closed pipe (for example `| head`) is not an error.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("payloads serialize")
}

fn spec_of(text: &str) -> Result<PolytopeSpec, CliError> {
    let spec = parse_spec(text)?;
    spec.to_type()?;
    Ok(spec)
}

fn mode_of(text: &str) -> Result<Mode, CliError> {
    text.parse().map_err(CliError::Usage)
}

/// Runs a subcommand, printing its payload; returns the exit status.
fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Obstruct {
            spec,
            target,
            e,
            mode,
            format,
            budget,
        } => {
            let query = Query {
                polytope_spec: spec_of(&spec)?,
                target: target.parse::<Target>()?,
                e,
                mode: mode_of(&mode)?,
            };
            let report = run_query(&query, &budget.engine())?;
            match format {
                Format::Json => emit(&(report.to_json() + "\n")),
                Format::Table => emit(&report.to_table()),
            }
            for msg in report.bounds.iter().filter_map(|b| b.detail.as_ref().filter(|_| b.status == "resource_exceeded")) {
                eprintln!("resource guard exceeded: {msg}");
            }
            for issue in &report.checks.inconsistencies {
                eprintln!("internal consistency failure: {issue}");
            }
            Ok(report.exit_code())
        }
        Command::Coskeleton { spec, k, out, budget } => {
            let out = match out {
                OutKind::Facets => CoskeletonOut::Facets,
                OutKind::Fvector => CoskeletonOut::Fvector,
                OutKind::Nonfaces => CoskeletonOut::Nonfaces,
            };
            emit(&(json(&commands::coskeleton(&spec_of(&spec)?, k, out, &budget.sarkaria())?) + "\n"));
            Ok(EXIT_OK)
        }
        Command::Sarkaria { spec, k, cotype, budget } => {
            let subject = match (k, cotype) {
                (Some(k), None) => SarkariaSubject::Coskeleton { k },
                (None, Some(parts)) => {
                    let parts = parts
                        .split(',')
                        .map(|p| p.trim().parse::<usize>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| CliError::Usage(format!("expected a face type like 1,0, got {parts:?}")))?;
                    SarkariaSubject::Cotype { face_type: FaceType(parts) }
                }
                _ => return Err(CliError::Usage("give exactly one of --k and --cotype".into())),
            };
            emit(&(json(&commands::sarkaria(&spec_of(&spec)?, &subject, &budget.sarkaria())?) + "\n"));
            Ok(EXIT_OK)
        }
        Command::Verify { scope } => {
            let scope: Scope = scope.parse().map_err(CliError::Usage)?;
            let summary = verify_suite(scope);
            emit(&summary.render());
            Ok(if summary.passed() { EXIT_OK } else { EXIT_CONSISTENCY })
        }
        Command::Sweep {
            spec,
            target,
            e_range,
            k_range,
            mode,
            format,
            budget,
        } => {
            let target: SweepTarget = target.parse()?;
            let e_range = commands::parse_range(&e_range)?;
            let k_range = k_range.as_deref().map(commands::parse_range).transpose()?;
            let out = commands::sweep(&spec_of(&spec)?, target, e_range, k_range, mode_of(&mode)?, &budget.engine())?;
            match format {
                Format::Json => emit(&(json(&out) + "\n")),
                Format::Table => emit(&out.to_table()),
            }
            for row in out.rows.iter().filter(|r| r.exit_code != EXIT_OK) {
                eprintln!(
                    "{} e={}: exit status {}{}",
                    row.target,
                    row.e,
                    row.exit_code,
                    row.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default()
                );
            }
            Ok(out.exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli.command).unwrap_or_else(|err| {
        eprintln!("error: {err}");
        err.exit_code()
    });
    ExitCode::from(code as u8)
}
