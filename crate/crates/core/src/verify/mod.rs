//! Batch verification: expands case specifications into decompositions,
//! runs the requested checks and assembles deterministic reports.

mod case;
mod run;

pub use case::{CaseReport, CaseSpec, Check, CheckOutcome, Report, Verdict, SCHEMA_VERSION};
pub use run::{closed_form_witnesses, load_group, run_cases, VerifyConfig};
