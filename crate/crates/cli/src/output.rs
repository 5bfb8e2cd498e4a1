use std::fs;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use crate::cli::Command;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_BUDGET: u8 = 3;

/// What a command produced: text for stdout, named files for `--out`, and
/// an exit code.
pub struct Execution {
    pub stdout: String,
    pub files: Vec<(String, String)>,
    pub code: u8,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct RunManifest {
    pub command: String,
    pub params: Command,
    pub tool_version: String,
    pub deterministic_order: bool,
    /// Seconds since the Unix epoch; the only field that differs on replay.
    pub timestamp: u64,
}

impl RunManifest {
    pub fn new(params: &Command) -> RunManifest {
        RunManifest {
            command: params.name().to_string(),
            params: params.clone(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            deterministic_order: true,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
        }
    }

    pub fn load(path: &Path) -> Result<RunManifest> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading manifest {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing manifest {}", path.display()))
    }
}

pub fn persist(dir: &Path, exec: &Execution, manifest: &RunManifest) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for (name, contents) in &exec.files {
        fs::write(dir.join(name), contents).with_context(|| format!("writing {name}"))?;
    }
    fs::write(
        dir.join("manifest.json"),
        serde_json::to_string_pretty(manifest)? + "\n",
    )?;
    Ok(())
}

pub fn csv_string<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn json_string<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// Where an expected value comes from: a closed formula, or an independent
/// computation (enumeration, brute force, a second method).
#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Formula,
    Oracle,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
}

impl Check {
    pub fn compare(
        name: impl Into<String>,
        expected: impl ToString,
        computed: impl ToString,
        provenance: Provenance,
    ) -> Check {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Check {
            name: name.into(),
            status,
            expected,
            computed,
            provenance,
        }
    }

    pub fn skipped(
        name: impl Into<String>,
        reason: impl Into<String>,
        provenance: Provenance,
    ) -> Check {
        Check {
            name: name.into(),
            status: CheckStatus::Skipped,
            expected: String::new(),
            computed: reason.into(),
            provenance,
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>) -> VerificationReport {
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        VerificationReport {
            suite: suite.into(),
            passed: count(CheckStatus::Pass),
            failed: count(CheckStatus::Fail),
            skipped: count(CheckStatus::Skipped),
            checks,
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.failed > 0 {
            EXIT_VERIFICATION
        } else {
            EXIT_OK
        }
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            s += &format!(
                "{tag}  {}: expected {} computed {}\n",
                c.name, c.expected, c.computed
            );
        }
        s += &format!(
            "{}: {} passed, {} failed, {} skipped\n",
            self.suite, self.passed, self.failed, self.skipped
        );
        s
    }

    pub fn files(&self, stem: &str) -> Result<Vec<(String, String)>> {
        Ok(vec![
            (format!("{stem}.json"), json_string(self)?),
            (format!("{stem}.csv"), csv_string(&self.checks)?),
        ])
    }
}
