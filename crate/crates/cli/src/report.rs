use halldisk::hall::{HallTerm, Status};
use halldisk::presentation::{RelationSet, VerifyReport};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
pub struct Outcome {
    pub q: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diff: Vec<HallTerm>,
}

#[derive(Serialize)]
pub struct RelationLine {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub results: Vec<Outcome>,
}

impl RelationLine {
    fn passed(&self) -> bool {
        self.results.iter().all(|o| o.status == Status::Pass)
    }
}

#[derive(Serialize)]
pub struct Suite {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub relations: Vec<RelationLine>,
}

impl Suite {
    pub fn new(rs: &RelationSet, rep: VerifyReport) -> Self {
        let mut by_label: BTreeMap<String, Vec<Outcome>> = BTreeMap::new();
        for o in rep.outcomes {
            by_label.entry(o.label).or_default().push(Outcome { q: o.q, status: o.status, diff: o.diff });
        }
        let relations = rs
            .relations
            .iter()
            .map(|r| RelationLine {
                label: r.label.clone(),
                lhs: r.lhs.to_string(),
                rhs: r.rhs.to_string(),
                results: by_label.remove(&r.label).unwrap_or_default(),
            })
            .collect();
        Suite { name: rep.name, passed: rep.passed, failed: rep.failed, relations }
    }
}

/// A check that is not a relation instance, such as φ∘ψ = id.
#[derive(Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub q: Vec<u64>,
    pub shifts: [i32; 2],
    pub suites: Vec<Suite>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(command: &str, q: &[u64], shifts: (i32, i32)) -> Self {
        Report {
            schema: SCHEMA,
            command: command.into(),
            q: q.to_vec(),
            shifts: [shifts.0, shifts.1],
            suites: Vec::new(),
            checks: Vec::new(),
            passed: 0,
            failed: 0,
        }
    }

    pub fn push_suite(&mut self, s: Suite) {
        self.passed += s.passed;
        self.failed += s.failed;
        self.suites.push(s);
    }

    pub fn push_check(&mut self, name: &str, ok: bool, detail: String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { name: name.into(), status, detail });
    }

    pub fn text(&self) -> String {
        let qs: Vec<String> = self.q.iter().map(|q| q.to_string()).collect();
        let mut out = String::new();
        for s in &self.suites {
            writeln!(out, "== {} (q = {})", s.name, qs.join(", ")).unwrap();
            for r in &s.relations {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{tag}  {}: {} = {}", r.label, r.lhs, r.rhs).unwrap();
                for o in r.results.iter().filter(|o| o.status == Status::Fail) {
                    writeln!(out, "      q={} lhs - rhs = {}", o.q, terms(&o.diff)).unwrap();
                }
            }
            writeln!(out, "-- {} passed, {} failed", s.passed, s.failed).unwrap();
        }
        for c in &self.checks {
            let tag = if c.status == Status::Pass { "PASS" } else { "FAIL" };
            writeln!(out, "{tag}  {}: {}", c.name, c.detail).unwrap();
        }
        writeln!(out, "total: {} passed, {} failed", self.passed, self.failed).unwrap();
        out
    }
}

pub fn terms(ts: &[HallTerm]) -> String {
    if ts.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = ts.iter().map(|t| format!("{}*[{}]", t.coeff, t.object)).collect();
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use halldisk::freealg::NCPolynomial;
    use halldisk::par::Parallelism;
    use halldisk::presentation::{quiver_relations, verify_relation_set};

    #[test]
    fn failures_are_reported() {
        let mut rs = quiver_relations(2, 0, 1);
        rs.relations[0].rhs = rs.relations[0].rhs.add(&NCPolynomial::parse("z[1,0]").unwrap());
        let rep = verify_relation_set(&rs, &[2], Parallelism::Sequential).unwrap();
        let mut r = Report::new("verify-quiver", &[2], (0, 1));
        r.push_suite(Suite::new(&rs, rep));
        r.push_check("extra", true, String::new());
        assert_eq!(r.failed, 1);
        let text = r.text();
        assert!(text.lines().any(|l| l.starts_with("FAIL  ") && l.contains(&rs.relations[0].label)));
        assert!(text.contains("q=2 lhs - rhs = "));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["suites"][0]["relations"][0]["results"][0]["status"], "fail");
        assert!(v["suites"][0]["relations"][0]["results"][0]["diff"].is_array());
        assert_eq!(v["checks"][0]["status"], "pass");
    }
}
