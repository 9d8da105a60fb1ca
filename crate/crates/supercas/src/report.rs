//! Check records, per-instance reports and matrix dumps.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::Instant;

use serde::Serialize;
use supercas_core::{Rational, SuperMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub expected: Option<String>,
    pub computed: Option<String>,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Series {
    pub direct: Vec<String>,
    pub universal: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub algebra: String,
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub omega: i64,
    pub checks: Vec<CheckRecord>,
    pub dims: BTreeMap<String, [i64; 2]>,
    pub series: Series,
}

impl Report {
    pub fn new(algebra: String, m: usize, n: usize, omega: i64) -> Self {
        Report {
            algebra,
            m,
            n,
            omega,
            checks: Vec::new(),
            dims: BTreeMap::new(),
            series: Series::default(),
        }
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }

    pub fn find(&self, suite: &str, check: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.suite == suite && c.check == check)
    }

    /// Whether every non-skipped check of `suite` passed and at least one ran.
    pub fn suite_ok(&self, suite: &str) -> bool {
        let mut ran = false;
        for c in self.checks.iter().filter(|c| c.suite == suite) {
            match c.status {
                Status::Fail => return false,
                Status::Pass => ran = true,
                Status::Skipped => {}
            }
        }
        ran
    }
}

/// Appends timed records for one suite.
pub struct Recorder<'a> {
    pub suite: &'static str,
    pub out: &'a mut Vec<CheckRecord>,
}

impl<'a> Recorder<'a> {
    pub fn new(suite: &'static str, out: &'a mut Vec<CheckRecord>) -> Self {
        Recorder { suite, out }
    }

    fn push(&mut self, check: String, status: Status, reason: Option<String>, expected: Option<String>, computed: Option<String>, t0: Instant) {
        self.out.push(CheckRecord {
            suite: self.suite.to_string(),
            check,
            status,
            reason,
            expected,
            computed,
            elapsed_ms: t0.elapsed().as_secs_f64() * 1e3,
        });
    }

    /// Records `expected == computed`.
    pub fn eq<T: PartialEq + Display>(&mut self, check: impl Into<String>, t0: Instant, expected: T, computed: T) {
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        self.push(check.into(), status, None, Some(expected.to_string()), Some(computed.to_string()), t0);
    }

    /// Records a boolean outcome.
    pub fn flag(&mut self, check: impl Into<String>, t0: Instant, ok: bool) {
        self.eq(check, t0, true, ok);
    }

    /// Runs `f` and records its boolean outcome; errors become failures.
    pub fn time<E: Display>(&mut self, check: impl Into<String>, f: impl FnOnce() -> Result<bool, E>) {
        let t0 = Instant::now();
        match f() {
            Ok(ok) => self.flag(check, t0, ok),
            Err(e) => self.error(check, t0, e),
        }
    }

    pub fn error(&mut self, check: impl Into<String>, t0: Instant, e: impl Display) {
        self.push(check.into(), Status::Fail, None, Some("no error".into()), Some(format!("error: {e}")), t0);
    }

    pub fn skip(&mut self, check: impl Into<String>, reason: impl Into<String>) {
        self.push(check.into(), Status::Skipped, Some(reason.into()), None, None, Instant::now());
    }

    /// Named boolean relations, one record each.
    pub fn relations(&mut self, prefix: &str, t0: Instant, rel: &[(String, bool)]) {
        for (name, ok) in rel {
            self.flag(format!("{prefix}{name}"), t0, *ok);
        }
    }
}

pub fn dims_string(d: (i64, i64)) -> String {
    format!("({}, {})", d.0, d.1)
}

/// `{rows, cols, parities, entries: [[r, c, "p/q"]]}`, entries sorted by `(r, c)`.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixDump {
    pub rows: usize,
    pub cols: usize,
    pub parities: Vec<u8>,
    pub entries: Vec<(usize, usize, String)>,
}

impl MatrixDump {
    pub fn new(a: &SuperMatrix) -> Self {
        let mut entries: Vec<(usize, usize, String)> = a
            .iter_nonzero()
            .map(|(r, c, x)| (r, c, x.to_string()))
            .collect();
        entries.sort_by_key(|e| (e.0, e.1));
        MatrixDump {
            rows: a.nrows(),
            cols: a.ncols(),
            parities: a.rows().parities().to_vec(),
            entries,
        }
    }
}

pub fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
