//! Companion crate to `zerosum-core`: the named verification checks with
//! their witness catalog, the on-disk atom cache, JSON report formats, and
//! the `zerosum` CLI.

pub mod cache;
pub mod checks;
pub mod groups;
pub mod report;
pub mod sweeps;
pub mod witness;

pub use checks::{list_checks, run_check, CheckCtx};
pub use report::{CheckReport, CheckStatus};
