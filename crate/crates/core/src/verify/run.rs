use std::time::Instant;

use serde::Serialize;

use super::registry::{registry, Expected, TheoremCase};
use crate::error::Result;
use crate::fieldcodes::{analyze_with, default_workers, CodeReport};
use crate::rootsys::Family;

/// Resource bounds for a suite run. Cases beyond them are skipped, never failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest n for sl(n) cases.
    pub max_n: usize,
    /// Largest m for o(2m) cases.
    pub max_m: usize,
    /// Largest code dimension to enumerate.
    pub max_k: usize,
    /// Largest n·p^k to enumerate.
    pub max_work: u64,
    pub include_optional: bool,
    /// `None` uses [`default_workers`].
    pub workers: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 15,
            max_m: 11,
            max_k: 14,
            max_work: 1 << 31,
            include_optional: false,
            workers: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Per-field agreement between expected and computed values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldPass {
    pub n: bool,
    pub k: bool,
    pub d: bool,
    pub self_orthogonal: bool,
    pub doubly_even: bool,
}

impl FieldPass {
    pub fn all(&self) -> bool {
        self.n && self.k && self.d && self.self_orthogonal && self.doubly_even
    }
}

/// Compares a report against claimed values; unclaimed flags always pass.
pub fn compare(expected: &Expected, computed: &CodeReport) -> FieldPass {
    FieldPass {
        n: expected.n == computed.n,
        k: expected.k == computed.k,
        d: computed.d == Some(expected.d),
        self_orthogonal: expected
            .self_orthogonal
            .is_none_or(|so| so == computed.self_orthogonal),
        doubly_even: expected
            .doubly_even
            .is_none_or(|de| Some(de) == computed.doubly_even),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case_id: String,
    pub citation: String,
    pub module: String,
    pub expected: Expected,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub printed: Option<Expected>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annotation: Option<String>,
    pub computed: Option<CodeReport>,
    pub fields: Option<FieldPass>,
    pub status: Status,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    /// Wall-clock time; zeroed in stable output.
    pub millis: u64,
}

fn family_bound(case: &TheoremCase, limits: &Limits) -> Option<String> {
    let r = case.spec.rank;
    match case.spec.family {
        Family::A if r > limits.max_n => Some(format!("n = {r} exceeds max-n {}", limits.max_n)),
        Family::D if r > limits.max_m => Some(format!("m = {r} exceeds max-m {}", limits.max_m)),
        _ => None,
    }
}

/// Builds, reduces and analyzes one case, then compares.
pub fn run_case(case: &TheoremCase, limits: &Limits) -> Result<CaseResult> {
    let start = Instant::now();
    let mut result = CaseResult {
        case_id: case.id.clone(),
        citation: case.citation.clone(),
        module: case.spec.to_string(),
        expected: case.expected,
        printed: case.annotation.as_ref().map(|a| a.printed),
        annotation: case.annotation.as_ref().map(|a| a.note.clone()),
        computed: None,
        fields: None,
        status: Status::Skipped,
        pass: false,
        skip_reason: None,
        millis: 0,
    };
    let skip = |mut r: CaseResult, why: String| {
        r.skip_reason = Some(why);
        Ok(r)
    };
    if case.optional && !limits.include_optional {
        return skip(result, "optional case; enable with --optional".into());
    }
    if let Some(why) = family_bound(case, limits) {
        return skip(result, why);
    }
    let code = case.spec.code()?;
    let k = code.k();
    let work =
        (code.n() as u64).saturating_mul((case.spec.p.modulus() as u64).saturating_pow(k as u32));
    if k > limits.max_k {
        return skip(result, format!("k = {k} exceeds max-k {}", limits.max_k));
    }
    if work > limits.max_work {
        return skip(
            result,
            format!("n*p^k = {work} exceeds max-work {}", limits.max_work),
        );
    }
    let report = analyze_with(&code, Some(limits.workers.unwrap_or_else(default_workers)));
    let fields = compare(&case.expected, &report);
    result.pass = fields.all();
    result.status = if result.pass {
        Status::Pass
    } else {
        Status::Fail
    };
    result.fields = Some(fields);
    result.computed = Some(report);
    result.millis = start.elapsed().as_millis() as u64;
    Ok(result)
}

/// A field where print and computation (or expectation and computation) differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub case_id: String,
    pub field: String,
    pub printed: String,
    pub computed: String,
    /// True when registered as a known misprint.
    pub annotated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Totals {
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub annotated: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub results: Vec<CaseResult>,
    pub totals: Totals,
    pub discrepancies: Vec<Discrepancy>,
}

impl SuiteReport {
    /// True when no case failed.
    pub fn ok(&self) -> bool {
        self.totals.failed == 0
    }

    /// Zeroes timings so repeated runs serialize identically.
    pub fn stabilize(&mut self) {
        for r in &mut self.results {
            r.millis = 0;
        }
    }
}

fn field_diffs(
    id: &str,
    claimed: &Expected,
    got: &CodeReport,
    annotated: bool,
) -> Vec<Discrepancy> {
    let mut out = Vec::new();
    let mut push = |field: &str, printed: String, computed: String| {
        if printed != computed {
            out.push(Discrepancy {
                case_id: id.to_string(),
                field: field.to_string(),
                printed,
                computed,
                annotated,
            });
        }
    };
    push("n", claimed.n.to_string(), got.n.to_string());
    push("k", claimed.k.to_string(), got.k.to_string());
    push(
        "d",
        claimed.d.to_string(),
        got.d.map_or("undefined".to_string(), |d| d.to_string()),
    );
    if let Some(so) = claimed.self_orthogonal {
        push(
            "self_orthogonal",
            so.to_string(),
            got.self_orthogonal.to_string(),
        );
    }
    if let Some(de) = claimed.doubly_even {
        push(
            "doubly_even",
            de.to_string(),
            got.doubly_even.map_or("n/a".to_string(), |x| x.to_string()),
        );
    }
    out
}

/// True when `id` matches the filter: a pattern containing `*` is a
/// whole-id glob, anything else is an id prefix.
pub fn matches_filter(id: &str, filter: &str) -> bool {
    if !filter.contains('*') {
        return id.starts_with(filter);
    }
    let parts: Vec<&str> = filter.split('*').collect();
    let (first, last) = (parts[0], parts[parts.len() - 1]);
    if !id.starts_with(first) || id.len() < first.len() + last.len() || !id.ends_with(last) {
        return false;
    }
    let mut rest = &id[first.len()..id.len() - last.len()];
    for mid in &parts[1..parts.len() - 1] {
        match rest.find(mid) {
            Some(i) => rest = &rest[i + mid.len()..],
            None => return false,
        }
    }
    true
}

/// Runs every registered case matching `filter`, in registry order.
pub fn run_suite(filter: Option<&str>, limits: &Limits) -> Result<SuiteReport> {
    let cases: Vec<TheoremCase> = registry()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| matches_filter(&c.id, f)))
        .collect();
    let mut results = Vec::with_capacity(cases.len());
    let mut totals = Totals::default();
    let mut discrepancies = Vec::new();
    for case in &cases {
        let r = run_case(case, limits)?;
        totals.cases += 1;
        match r.status {
            Status::Pass => totals.passed += 1,
            Status::Fail => totals.failed += 1,
            Status::Skipped => totals.skipped += 1,
        }
        if case.annotation.is_some() {
            totals.annotated += 1;
        }
        if let Some(report) = &r.computed {
            discrepancies.extend(field_diffs(
                &case.id,
                &case.printed(),
                report,
                case.annotation.is_some(),
            ));
            if case.annotation.is_some() && !r.pass {
                discrepancies.extend(field_diffs(&case.id, &case.expected, report, false));
            }
        }
        results.push(r);
    }
    Ok(SuiteReport {
        results,
        totals,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters() {
        assert!(matches_filter("thm3.1/m=4", "thm3.*"));
        assert!(matches_filter("thm3.1/m=4", "thm3"));
        assert!(!matches_filter("thm2.1/m=4", "thm3.*"));
        assert!(matches_filter("thm2.3/ext3/n=6", "*ext3*"));
        assert!(matches_filter("thm2.3/ext3/n=6", "*n=6"));
        assert!(!matches_filter("thm2.3/ext3/n=6", "*n=7"));
        assert!(matches_filter("thm4.1", "thm4.1"));
    }

    #[test]
    fn empty_filter_match() {
        let r = run_suite(Some("nothing-matches"), &Limits::default()).unwrap();
        assert!(r.results.is_empty());
        assert_eq!(r.totals, Totals::default());
        assert!(r.ok());
    }

    #[test]
    fn exceptional_cases_pass() {
        let r = run_suite(Some("thm4"), &Limits::default()).unwrap();
        assert_eq!(r.totals.passed, 2);
        let r = run_suite(Some("thm6.2"), &Limits::default()).unwrap();
        let c = r.results[0].computed.as_ref().unwrap();
        assert_eq!(c.params(), "[63,7,27]");
    }

    #[test]
    fn limits_skip_not_fail() {
        let limits = Limits {
            max_n: 10,
            ..Limits::default()
        };
        let r = run_suite(Some("thm2.2/n=1"), &limits).unwrap();
        assert_eq!((r.totals.passed, r.totals.skipped), (1, 3));
        let r = run_suite(Some("cor3.4/m=11"), &Limits::default()).unwrap();
        assert_eq!(r.results[0].status, Status::Skipped);
    }

    #[test]
    fn annotated_case_lists_printed_discrepancy() {
        let r = run_suite(Some("thm2.3/ext3/n=6"), &Limits::default()).unwrap();
        assert!(r.ok());
        assert_eq!(r.discrepancies.len(), 1);
        let d = &r.discrepancies[0];
        assert_eq!(
            (d.field.as_str(), d.printed.as_str(), d.computed.as_str()),
            ("n", "15", "20")
        );
        assert!(d.annotated);
    }
}
