//! Batch verification of the zeta-core identities over parameter grids,
//! with CSV and JSON reports.

pub mod closed_form;
pub mod config;
pub mod error;
pub mod eval;
pub mod grid;
pub mod oracle;
pub mod report;
pub mod run;
pub mod suites;

pub use config::FileConfig;
pub use error::{Result, VerifyError};
pub use grid::{Axis, GridSpec, Point, Spacing};
pub use report::{ReportFile, Row, Status, CSV_HEADER};
pub use run::{run_suite, Overrides, SuiteSpec};
pub use suites::{lookup, registry, Gate, SuiteDef, SuiteInfo, Tolerance};
