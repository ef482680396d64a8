//! Command-line front end: subcommands, the Zahid-family generator and the
//! JSON report document.

pub mod commands;
pub mod report;

pub use commands::{run_args, zahid_document, Outcome};
pub use report::ReportDocument;
