//! Claim lines and report files for the verification suites.
//!
//! A suite emits one line per claim, `<suite>.<claim> = pass|fail|skip # detail`,
//! in a fixed order.  Budget exhaustion is always reported as `skip`: an
//! out-of-budget computation says nothing about the claim.  Reports carry
//! no timings, so identical inputs give byte-identical output.

use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use cutideal_core::hilbert::{is_hilbertian, regularity, HilbertSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// Accumulates claim lines for one run of `verify`.
pub struct Log {
    lines: Vec<String>,
    fail_count: usize,
    skip_count: usize,
    pass_count: usize,
    out_dir: Option<PathBuf>,
}

impl Log {
    pub fn new(out_dir: Option<PathBuf>) -> Log {
        Log {
            lines: Vec::new(),
            fail_count: 0,
            skip_count: 0,
            pass_count: 0,
            out_dir,
        }
    }

    pub fn claim(&mut self, suite: &str, id: &str, status: Status, detail: &str) {
        match status {
            Status::Pass => self.pass_count += 1,
            Status::Fail => self.fail_count += 1,
            Status::Skip => self.skip_count += 1,
        }
        let line = format!("{suite}.{id} = {status} # {detail}");
        println!("{line}");
        self.lines.push(line);
    }

    /// Pass/fail shorthand for a boolean check.
    pub fn check(&mut self, suite: &str, id: &str, ok: bool, detail: &str) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.claim(suite, id, status, detail);
    }

    pub fn any_fail(&self) -> bool {
        self.fail_count > 0
    }

    pub fn summary(&self) -> String {
        format!(
            "pass {} fail {} skip {}",
            self.pass_count, self.fail_count, self.skip_count
        )
    }

    /// Write this suite's lines to `<out>/report_<suite>.txt`.
    pub fn flush_suite(&mut self, suite: &str) -> io::Result<()> {
        if let Some(dir) = &self.out_dir {
            let body = self.lines.join("\n") + "\n";
            fs::create_dir_all(dir)?;
            fs::write(dir.join(format!("report_{suite}.txt")), body)?;
        }
        self.lines.clear();
        Ok(())
    }

    pub fn out_dir(&self) -> Option<&Path> {
        self.out_dir.as_deref()
    }
}

/// Key-value series report: stable key order for golden-file diffs.
pub fn series_report(series: &HilbertSeries, edge_count: usize, window: u32) -> String {
    let h: Vec<String> = series.numerator().iter().map(|c| c.to_string()).collect();
    let reg = regularity(series, edge_count);
    format!(
        "h_vector = {}\ndegree = {}\nreg_variety = {}\nhilbertian = {}\nsymmetric = {}\n",
        h.join(","),
        series.degree(),
        reg.regularity,
        is_hilbertian(series, window),
        series.is_symmetric(),
    )
}

/// Write one named artifact under the output directory, if any.
pub fn write_artifact(out_dir: Option<&Path>, name: &str, body: &str) -> io::Result<()> {
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)?;
        fs::write(dir.join(name), body)?;
    }
    Ok(())
}
