//! Front end for skelproj: the polytope specification language, query
//! reports, subcommand payloads and the self-verification suite.

pub mod commands;
pub mod error;
pub mod report;
pub mod spec;
pub mod verify;

pub use error::CliError;
pub use report::{run_query, Mode, Query, Report};
pub use spec::{parse_spec, PolytopeSpec, SpecError};
pub use verify::{verify_suite, Scope, VerifySummary};
