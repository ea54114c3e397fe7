//! Verification reports as `key=value` lines or JSON.

use qgalilei_core::{Check, Report};
use serde::Serialize;

#[derive(Serialize)]
struct FailureRecord<'a> {
    element: &'a str,
    residual: &'a str,
}

#[derive(Serialize)]
struct CheckRecord<'a> {
    id: &'a str,
    status: &'a str,
    cases: usize,
    failed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
    failures: Vec<FailureRecord<'a>>,
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    suite: &'a str,
    degree: u32,
    passed: bool,
    checks: Vec<CheckRecord<'a>>,
}

fn record<'a>(suite: &'a str, degree: u32, r: &'a Report) -> ReportRecord<'a> {
    let check = |c: &'a Check| CheckRecord {
        id: &c.id,
        status: c.status.as_str(),
        cases: c.cases,
        failed: c.failed_cases,
        note: c.note.as_deref(),
        failures: c.failures.iter().map(|f| FailureRecord { element: &f.element, residual: &f.residual }).collect(),
    };
    ReportRecord { suite, degree, passed: r.passed(), checks: r.checks.iter().map(check).collect() }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

/// One record per line. Free text values are JSON-quoted.
///
/// ```text
/// suite=hopf degree=3
/// check=fq.antipode status=pass cases=35 failed=0
/// failure check=fq.antipode.printed element="mu" residual="-v*x + x"
/// overall=pass
/// ```
pub fn to_text(suite: &str, degree: u32, r: &Report) -> String {
    let mut out = format!("suite={} degree={}\n", suite, degree);
    for c in &r.checks {
        out.push_str(&format!("check={} status={} cases={} failed={}", c.id, c.status, c.cases, c.failed_cases));
        if let Some(n) = &c.note {
            out.push_str(&format!(" note={}", quote(n)));
        }
        out.push('\n');
        for f in &c.failures {
            out.push_str(&format!("failure check={} element={} residual={}\n", c.id, quote(&f.element), quote(&f.residual)));
        }
    }
    out.push_str(&format!("overall={}\n", if r.passed() { "pass" } else { "fail" }));
    out
}

pub fn to_json(suite: &str, degree: u32, r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(&record(suite, degree, r)).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo");
        let mut c = Check::new("demo.one");
        c.case(true, || unreachable!());
        c.case(false, || ("x \"y\"".into(), "1".into()));
        r.push(c.with_note("a note"));
        r
    }

    #[test]
    fn text_lines() {
        let t = to_text("demo", 2, &sample());
        assert_eq!(
            t,
            "suite=demo degree=2\n\
             check=demo.one status=fail cases=2 failed=1 note=\"a note\"\n\
             failure check=demo.one element=\"x \\\"y\\\"\" residual=\"1\"\n\
             overall=fail\n"
        );
    }

    #[test]
    fn json_round_trips() {
        let v: serde_json::Value = serde_json::from_str(&to_json("demo", 2, &sample())).unwrap();
        assert_eq!(v["passed"], false);
        assert_eq!(v["checks"][0]["failures"][0]["element"], "x \"y\"");
    }
}
