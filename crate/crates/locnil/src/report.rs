//! Check records and report rendering. Records serialize to one JSON
//! object per line plus a trailing summary, or to line-oriented text.
//! The comparison form strips timings so reruns with identical inputs
//! produce byte-identical output.

use serde::Serialize;

/// One verification step: a named check on a rendered instance.
/// `witness` is present when the check fails (the replay handle) or when
/// the record carries a computed value rather than a pass/fail verdict.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub millis: u128,
}

impl CheckRecord {
    pub fn pass(check: impl Into<String>, instance: impl Into<String>) -> Self {
        CheckRecord {
            check: check.into(),
            instance: instance.into(),
            pass: true,
            witness: None,
            millis: 0,
        }
    }

    pub fn fail(
        check: impl Into<String>,
        instance: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        CheckRecord {
            check: check.into(),
            instance: instance.into(),
            pass: false,
            witness: Some(witness.into()),
            millis: 0,
        }
    }

    pub fn value(
        check: impl Into<String>,
        instance: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        CheckRecord {
            check: check.into(),
            instance: instance.into(),
            pass: true,
            witness: Some(witness.into()),
            millis: 0,
        }
    }

    pub fn with_millis(mut self, millis: u128) -> Self {
        self.millis = millis;
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

pub fn summarize(records: &[CheckRecord]) -> Summary {
    let passed = records.iter().filter(|r| r.pass).count();
    Summary { total: records.len(), passed, failed: records.len() - passed }
}

/// Output format for the harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Render records plus summary. `with_timing = false` gives the
/// deterministic comparison form.
pub fn render(records: &[CheckRecord], format: Format, with_timing: bool) -> String {
    let summary = summarize(records);
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in records {
                let status = if r.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("{} {} [{}]", status, r.check, r.instance));
                if let Some(w) = &r.witness {
                    out.push_str(&format!(" :: {}", w));
                }
                if with_timing {
                    out.push_str(&format!(" ({} ms)", r.millis));
                }
                out.push('\n');
            }
            out.push_str(&format!(
                "summary: {} checks, {} passed, {} failed\n",
                summary.total, summary.passed, summary.failed
            ));
            out
        }
        Format::Json => {
            let mut out = String::new();
            for r in records {
                let line = if with_timing {
                    serde_json::to_string(r).expect("record serializes")
                } else {
                    let mut v = serde_json::to_value(r).expect("record serializes");
                    v.as_object_mut().expect("record is an object").remove("millis");
                    serde_json::to_string(&v).expect("record serializes")
                };
                out.push_str(&line);
                out.push('\n');
            }
            out.push_str(&serde_json::to_string(&serde_json::json!({ "summary": summary })).unwrap());
            out.push('\n');
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<CheckRecord> {
        vec![
            CheckRecord::pass("radical-property", "Z/8, a=2").with_millis(3),
            CheckRecord::fail("sum-theorem", "Z/9, a=3", "lhs Z/3 vs rhs 0").with_millis(5),
            CheckRecord::value("agamma", "Z/8, a=2", "Z/4"),
        ]
    }

    #[test]
    fn text_format_lists_and_summarizes() {
        let out = render(&sample(), Format::Text, true);
        assert!(out.contains("PASS radical-property [Z/8, a=2] (3 ms)"));
        assert!(out.contains("FAIL sum-theorem [Z/9, a=3] :: lhs Z/3 vs rhs 0"));
        assert!(out.ends_with("summary: 3 checks, 2 passed, 1 failed\n"));
    }

    #[test]
    fn json_format_has_one_object_per_record() {
        let out = render(&sample(), Format::Json, true);
        let lines: Vec<&str> = out.trim_end().lines().collect();
        assert_eq!(lines.len(), 4);
        let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(first["check"], "radical-property");
        assert_eq!(first["millis"], 3);
        let last: serde_json::Value = serde_json::from_str(lines[3]).unwrap();
        assert_eq!(last["summary"]["failed"], 1);
    }

    #[test]
    fn comparison_form_is_timing_free() {
        let mut a = sample();
        let b = sample();
        a[0].millis = 999;
        assert_eq!(
            render(&a, Format::Json, false),
            render(&b, Format::Json, false)
        );
        assert!(!render(&a, Format::Json, false).contains("millis"));
        assert_eq!(
            render(&a, Format::Text, false),
            render(&b, Format::Text, false)
        );
    }

    #[test]
    fn witness_iff_fail_or_value() {
        assert!(CheckRecord::pass("x", "y").witness.is_none());
        assert!(CheckRecord::fail("x", "y", "w").witness.is_some());
        assert!(CheckRecord::value("x", "y", "w").witness.is_some());
    }
}
