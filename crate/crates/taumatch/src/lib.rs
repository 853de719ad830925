//! Workspace files, report formats and the `taumatch` command line.

pub mod cli;
pub mod report;
pub mod workspace;

pub use cli::run;
pub use workspace::{Workspace, WorkspaceError};
