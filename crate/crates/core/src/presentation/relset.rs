use crate::error::{Error, Result};
use crate::freealg::{Family, Generator, Label, NCPolynomial, Relation};
use crate::hall::{Assignment, HallAlgebra, HallTerm, Status};
use crate::par::{self, Parallelism};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// `E[2,*]`, `z[1,*]`, `P[1,3]`.
pub fn label_name(l: &Label) -> String {
    match l.family {
        Family::Pbw => format!("P[{},{}]", l.index, l.aux),
        _ => format!("{}[{},*]", l.family_name(), l.index),
    }
}

/// How a relation set is sent into the quiver Hall algebra: each label goes
/// to a polynomial in the `z` generators at shift 0, suspended along with
/// the generator. `invert_v` first applies `v ↦ v^{−1}` to the relation's
/// own coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMap {
    pub quiver_m: usize,
    pub invert_v: bool,
    pub images: BTreeMap<Label, NCPolynomial>,
}

impl OracleMap {
    pub fn new(quiver_m: usize) -> Self {
        OracleMap { quiver_m, invert_v: false, images: BTreeMap::new() }
    }

    /// `z_i ↦ z_i` for the quiver generators.
    pub fn identity(quiver_m: usize) -> Self {
        let mut o = OracleMap::new(quiver_m);
        for i in 1..quiver_m as u32 {
            o.images.insert(Label::z(i), NCPolynomial::gen(Generator::z(i, 0)));
        }
        o
    }

    pub fn image(&self, g: &Generator) -> Result<NCPolynomial> {
        self.images.get(&g.label).map(|p| p.suspend(g.shift)).ok_or_else(|| Error::Unassigned(g.to_string()))
    }

    pub fn apply(&self, p: &NCPolynomial) -> Result<NCPolynomial> {
        let p = if self.invert_v { p.map_scalars(|c| c.invert_variable()) } else { p.clone() };
        p.substitute(|g| self.image(g))
    }
}

/// A finite slice of a presentation: generators, labelled relations, and an
/// optional map into the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    pub name: String,
    pub generators: BTreeSet<Label>,
    pub relations: Vec<Relation>,
    pub oracle: Option<OracleMap>,
}

impl RelationSet {
    pub fn new(name: impl Into<String>) -> Self {
        RelationSet { name: name.into(), generators: BTreeSet::new(), relations: Vec::new(), oracle: None }
    }

    /// Adds a relation and declares its generators.
    pub fn push(&mut self, r: Relation) {
        for p in [&r.lhs, &r.rhs] {
            self.generators.extend(p.generators().into_iter().map(|g| g.label));
        }
        self.relations.push(r);
    }

    pub fn extend(&mut self, other: RelationSet) {
        self.generators.extend(other.generators);
        for r in other.relations {
            self.relations.push(r);
        }
    }

    pub fn with_oracle(mut self, o: OracleMap) -> Self {
        self.oracle = Some(o);
        self
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Relations labelled `label`.
    pub fn get(&self, label: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.label == label)
    }

    /// Checks that labels are unique.
    pub fn validate(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for r in &self.relations {
            if !seen.insert(r.label.as_str()) {
                return Err(Error::Mismatch(format!("duplicate relation label {}", r.label)));
            }
        }
        Ok(())
    }

    /// Renames every generator.
    pub fn rename<F: Fn(&Label) -> Label>(&self, f: F) -> RelationSet {
        let sub = |p: &NCPolynomial| {
            p.substitute(|g| Ok(NCPolynomial::gen(Generator::new(f(&g.label), g.shift)))).expect("renaming is total")
        };
        let mut out = RelationSet::new(self.name.clone());
        for r in &self.relations {
            out.push(Relation::new(r.label.clone(), sub(&r.lhs), sub(&r.rhs)));
        }
        out.oracle = self.oracle.clone();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rels: Vec<_> = self
            .relations
            .iter()
            .map(|r| serde_json::json!({"label": r.label, "lhs": r.lhs.to_string(), "rhs": r.rhs.to_string()}))
            .collect();
        let assignment = self.oracle.as_ref().map(|o| {
            let images: serde_json::Map<String, serde_json::Value> =
                o.images.iter().map(|(l, p)| (label_name(l), p.to_string().into())).collect();
            serde_json::json!({"quiver_m": o.quiver_m, "invert_v": o.invert_v, "images": images})
        });
        serde_json::json!({
            "name": self.name,
            "generators": self.generators.iter().map(label_name).collect::<Vec<_>>(),
            "relations": rels,
            "assignment": assignment,
        })
    }
}

impl fmt::Display for RelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.name)?;
        let gens: Vec<String> = self.generators.iter().map(label_name).collect();
        writeln!(f, "generators: {}", gens.join(" "))?;
        for r in &self.relations {
            writeln!(f, "{r}")?;
        }
        if let Some(o) = &self.oracle {
            for (l, p) in &o.images {
                writeln!(f, "{} -> {}", label_name(l), p)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct RelationOutcome {
    pub label: String,
    pub q: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub diff: Vec<HallTerm>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub name: String,
    pub q: Vec<u64>,
    pub passed: usize,
    pub failed: usize,
    pub outcomes: Vec<RelationOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationOutcome> {
        self.outcomes.iter().filter(|o| o.status == Status::Fail)
    }

    pub fn merge(name: &str, reports: Vec<VerifyReport>) -> VerifyReport {
        let mut out = VerifyReport { name: name.into(), q: Vec::new(), passed: 0, failed: 0, outcomes: Vec::new() };
        for r in reports {
            for q in r.q {
                if !out.q.contains(&q) {
                    out.q.push(q);
                }
            }
            out.passed += r.passed;
            out.failed += r.failed;
            out.outcomes.extend(r.outcomes);
        }
        out
    }
}

/// Evaluates every relation of `rs` at every field size in `qs`.
pub fn verify_relation_set(rs: &RelationSet, qs: &[u64], p: Parallelism) -> Result<VerifyReport> {
    let oracle = rs.oracle.as_ref().ok_or_else(|| Error::NoAssignment(rs.name.clone()))?;
    let mapped: Vec<Result<(NCPolynomial, NCPolynomial)>> =
        par::map(p, &rs.relations, |r| Ok((oracle.apply(&r.lhs)?, oracle.apply(&r.rhs)?)));
    let mapped: Vec<(NCPolynomial, NCPolynomial)> = mapped.into_iter().collect::<Result<_>>()?;
    let assign = Assignment::standard(oracle.quiver_m);
    let mut outcomes = Vec::new();
    for &q in qs {
        let hall = HallAlgebra::new(oracle.quiver_m, q)?.with_parallelism(p);
        let idx: Vec<usize> = (0..mapped.len()).collect();
        let res = par::map(p, &idx, |&i| {
            let (l, r) = &mapped[i];
            hall.verify_identity(l, r, &assign).map(|rep| RelationOutcome {
                label: rs.relations[i].label.clone(),
                q,
                status: rep.status,
                diff: rep.diff,
            })
        });
        for o in res {
            outcomes.push(o?);
        }
    }
    let failed = outcomes.iter().filter(|o| o.status == Status::Fail).count();
    Ok(VerifyReport { name: rs.name.clone(), q: qs.to_vec(), passed: outcomes.len() - failed, failed, outcomes })
}
