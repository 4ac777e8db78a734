//! Named verification checks and their reports.

pub mod checks;
pub mod report;
pub mod rng;
pub mod sampling;

pub use checks::{check, run_all, CheckParams, CHECK_IDS, DEFAULT_N_LIST};
pub use report::{all_pass, render_table, Params, Report};
