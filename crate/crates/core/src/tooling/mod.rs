//! File formats, run reports, instance generators and the benchmark harness.

mod bench;
mod format;
mod generate;
mod report;

pub use bench::{bench, default_suite, render_csv, suite_instances, BenchRow, Suite, SuiteEntry};
pub use format::{target_spec, Format, GraphDocument, InstanceDocument, FORMAT_VERSION};
pub use generate::{
    generate_instance, plant_free_graph, random_graph, random_instance, GenConfig, Generated, PlantMode,
    PLANT_RESTARTS,
};
pub use report::{run, ReportVerdict, RunReport};

use crate::exact::DEFAULT_BUDGET;

/// Environment variable overriding the default node budget.
pub const BUDGET_ENV: &str = "SANDWICH_BUDGET_NODES";

/// Node budget from the environment, or the library default when unset or
/// unparsable.
pub fn default_budget() -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}
