//! Text job specs, the built-in example catalog and report rendering for the
//! `semica` command.

pub mod catalog;
pub mod error;
pub mod literal;
pub mod report;
pub mod run;
pub mod spec;

pub use catalog::{example, examples_catalog, Example};
pub use error::{CliError, Result};
pub use report::{emit_report, Format};
pub use run::{run_job, Item, Outcome};
pub use spec::{emit_spec, parse_spec, parse_spec_in, Job, JobSpec, Overrides};
