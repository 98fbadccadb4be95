//! Structured JSON reports: every pass/fail is certified (decided on interval
//! endpoints), and intervals serialize as outward-rounded decimal endpoint
//! pairs with explicit width metadata.

use crate::bounds::{ChainReport, Check};
use crate::error::Result;
use crate::numerics::{decimal_str, CertifiedComplex, CertifiedReal};
use serde::Serialize;
use serde_json::Value;

pub const REPORT_DIGITS: u32 = 40;

#[derive(Clone, Debug, Serialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    pub width_le: String,
}

impl IntervalJson {
    pub fn of(v: &CertifiedReal) -> Self {
        let (lo, hi) = v.to_decimal_pair(REPORT_DIGITS);
        IntervalJson {
            lo,
            hi,
            width_le: decimal_str(&v.width(), REPORT_DIGITS, true),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexIntervalJson {
    pub re: IntervalJson,
    pub im: IntervalJson,
}

impl ComplexIntervalJson {
    pub fn of(v: &CertifiedComplex) -> Self {
        ComplexIntervalJson {
            re: IntervalJson::of(&v.re),
            im: IntervalJson::of(&v.im),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckJson {
    pub label: String,
    pub lhs: IntervalJson,
    pub rhs: IntervalJson,
    pub strict: bool,
    pub pass: bool,
}

impl CheckJson {
    pub fn of(c: &Check) -> Self {
        CheckJson {
            label: c.label.clone(),
            lhs: IntervalJson::of(&c.lhs),
            rhs: IntervalJson::of(&c.rhs),
            strict: c.strict,
            pass: c.pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: Value,
    pub results: Value,
    pub checks: Vec<CheckJson>,
    pub timing_ms: u128,
    pub max_bits: u32,
}

impl RunReport {
    pub fn new(command: &str, input: Value) -> Self {
        RunReport {
            command: command.to_string(),
            input,
            results: Value::Null,
            checks: Vec::new(),
            timing_ms: 0,
            max_bits: 0,
        }
    }

    pub fn with_results(mut self, results: Value) -> Self {
        self.results = results;
        self
    }

    pub fn push_chain(&mut self, chain: &ChainReport) {
        for c in &chain.checks {
            self.checks.push(CheckJson::of(c));
        }
    }

    pub fn push_check(
        &mut self,
        label: &str,
        lhs: &CertifiedReal,
        rhs: &CertifiedReal,
        strict: bool,
        pass: bool,
    ) {
        self.checks.push(CheckJson::of(&Check {
            label: label.to_string(),
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            strict,
            pass,
        }));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn write_to(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    #[test]
    fn report_schema_is_stable() {
        let mut r = RunReport::new("demo", serde_json::json!({"x": 1}));
        r.push_check(
            "1 <= 2",
            &CertifiedReal::exact(rat(1, 1)),
            &CertifiedReal::exact(rat(2, 1)),
            false,
            true,
        );
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in [
            "command",
            "input",
            "results",
            "checks",
            "timing_ms",
            "max_bits",
        ] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let check = &v["checks"][0];
        for key in ["label", "lhs", "rhs", "strict", "pass"] {
            assert!(check.get(key).is_some(), "missing check key {key}");
        }
        for key in ["lo", "hi", "width_le"] {
            assert!(check["lhs"].get(key).is_some());
        }
        assert_eq!(v["checks"][0]["pass"], Value::Bool(true));
    }

    #[test]
    fn interval_json_is_outward() {
        let v = CertifiedReal::exact(rat(1, 3));
        let j = IntervalJson::of(&v);
        assert!(j.lo.starts_with("0.3333"));
        assert!(j.hi.ends_with('4'));
    }
}
