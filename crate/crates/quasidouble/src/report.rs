//! Structured verification reports shared by the library suites and the CLI.

use serde::{Deserialize, Serialize};

/// Result of a single verified identity.
///
/// `pass` is derived from `max_defect < tolerance` at construction; the
/// `anchor` is the identity itself written as a formula.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub max_defect: f64,
    pub mean_defect: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub samples: usize,
    pub seed: u64,
}

impl CheckRecord {
    pub fn new(
        id: impl Into<String>,
        anchor: impl Into<String>,
        defects: &[f64],
        tolerance: f64,
        seed: u64,
    ) -> Self {
        let max_defect = defects.iter().copied().fold(0.0, f64::max);
        let mean_defect = if defects.is_empty() {
            0.0
        } else {
            defects.iter().sum::<f64>() / defects.len() as f64
        };
        CheckRecord {
            id: id.into(),
            anchor: anchor.into(),
            max_defect,
            mean_defect,
            tolerance,
            pass: max_defect < tolerance,
            samples: defects.len(),
            seed,
        }
    }

    /// Record for a single measured defect.
    pub fn single(
        id: impl Into<String>,
        anchor: impl Into<String>,
        defect: f64,
        tolerance: f64,
    ) -> Self {
        CheckRecord::new(id, anchor, &[defect], tolerance, 0)
    }
}

/// Environment block attached to every report: the knobs that influence the
/// numbers.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnvBlock {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub scale: f64,
    pub tol: f64,
    pub fd_step: f64,
    pub radius: f64,
}

impl Default for EnvBlock {
    fn default() -> Self {
        EnvBlock {
            n: 2,
            samples: 64,
            seed: 7,
            scale: 0.3,
            tol: 1e-10,
            fd_step: 1e-2,
            radius: 0.5,
        }
    }
}

/// A named suite of checks. Records are kept sorted by id so report emission
/// does not depend on evaluation order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub env: EnvBlock,
    pub checks: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, env: EnvBlock, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        SuiteReport {
            suite: suite.into(),
            env,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}
