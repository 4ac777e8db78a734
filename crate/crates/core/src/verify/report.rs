//! Check reports, their JSON-lines form and a plain-text table.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: Option<i64>,
    pub seed: u64,
    pub samples: usize,
    pub height: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check_id: String,
    pub params: Params,
    pub pass: bool,
    pub trials: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Value>,
    pub runtime_ms: u64,
}

impl Report {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("serializable report")
    }

    /// Same report with the timing zeroed, for determinism comparisons.
    pub fn without_runtime(&self) -> Report {
        Report {
            runtime_ms: 0,
            ..self.clone()
        }
    }
}

pub fn render_table(reports: &[Report]) -> String {
    let mut out = format!(
        "{:<18} {:>5} {:>6} {:>7} {:>8}\n",
        "check", "n", "result", "trials", "ms"
    );
    for r in reports {
        let n = r.params.n.map_or_else(|| "-".to_string(), |n| n.to_string());
        out.push_str(&format!(
            "{:<18} {:>5} {:>6} {:>7} {:>8}\n",
            r.check_id,
            n,
            if r.pass { "PASS" } else { "FAIL" },
            r.trials,
            r.runtime_ms
        ));
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    out.push_str(&format!("{} checks, {} failed\n", reports.len(), failed));
    out
}

pub fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.pass)
}
