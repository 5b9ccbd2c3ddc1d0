//! Homomorphic evaluation of free-algebra expressions into the Hall algebra.

use super::algebra::HallAlgebra;
use super::element::{HallElement, HallTerm};
use crate::error::{Error, Result};
use crate::freealg::{Generator, Label, NCPolynomial};
use crate::repq::DerivedObject;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Images of unshifted generators. A generator with shift `n` is sent to the
/// image of its label shifted by `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    images: BTreeMap<Label, DerivedObject>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// `z_i ↦ S_i` for `1 ≤ i < m`.
    pub fn standard(m: usize) -> Self {
        let mut a = Self::new();
        for i in 1..m as u32 {
            a.insert(Label::z(i), DerivedObject::simple(i, 0));
        }
        a
    }

    pub fn insert(&mut self, l: Label, x: DerivedObject) {
        self.images.insert(l, x);
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.images.keys()
    }

    pub fn image(&self, g: &Generator) -> Result<DerivedObject> {
        self.images.get(&g.label).map(|x| x.shift(g.shift)).ok_or_else(|| Error::Unassigned(g.to_string()))
    }

    /// Parses `{"z[1,0]": "M[1,2)", …}`; keys must be single generators.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("assignment must be a JSON object".into()))?;
        let mut a = Self::new();
        for (k, x) in obj {
            let g = single_generator(k)?;
            let x = match x {
                serde_json::Value::String(s) => DerivedObject::parse(s)?,
                other => serde_json::from_value(other.clone()).map_err(|e| Error::Parse(e.to_string()))?,
            };
            a.insert(g.label, x.shift(-g.shift));
        }
        Ok(a)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map = self
            .images
            .iter()
            .map(|(l, x)| (Generator::new(*l, 0).to_string(), serde_json::Value::String(x.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }
}

fn single_generator(s: &str) -> Result<Generator> {
    let p = NCPolynomial::parse(s)?;
    match p.terms().iter().next() {
        Some((w, c)) if p.len() == 1 && w.len() == 1 && c.is_one() => Ok(w[0]),
        _ => Err(Error::Parse(format!("expected a single generator, got {s:?}"))),
    }
}

impl HallAlgebra {
    /// Evaluates `x` with words multiplied right to left, so every product
    /// has a single generator image on the left. Shared suffixes are reused.
    pub fn evaluate(&self, x: &NCPolynomial, assign: &Assignment) -> Result<HallElement> {
        let q = self.q();
        let mut memo: HashMap<Vec<Generator>, HallElement> = HashMap::new();
        let mut out = HallElement::zero(q);
        for (w, c) in x.terms() {
            let c = c.evaluate_at(q)?;
            let v = self.word_value(w, assign, &mut memo)?;
            out = out.add(&v.scale(&c));
        }
        Ok(out)
    }

    fn word_value(
        &self,
        w: &[Generator],
        assign: &Assignment,
        memo: &mut HashMap<Vec<Generator>, HallElement>,
    ) -> Result<HallElement> {
        let q = self.q();
        if w.is_empty() {
            return Ok(HallElement::one(q));
        }
        // longest already known suffix
        let mut start = w.len();
        let mut acc = HallElement::one(q);
        for i in 0..w.len() {
            if let Some(v) = memo.get(&w[i..]) {
                start = i;
                acc = v.clone();
                break;
            }
        }
        for i in (0..start).rev() {
            let x = self.evaluate_generator(&w[i], assign)?;
            acc = self.product(&x, &acc);
            memo.insert(w[i..].to_vec(), acc.clone());
        }
        Ok(acc)
    }

    fn evaluate_generator(&self, g: &Generator, assign: &Assignment) -> Result<HallElement> {
        let x = assign.image(g)?;
        x.validate(self.m())?;
        Ok(HallElement::basis(x, self.q()))
    }

    /// Evaluates both sides and compares exactly.
    pub fn verify_identity(
        &self,
        lhs: &NCPolynomial,
        rhs: &NCPolynomial,
        assign: &Assignment,
    ) -> Result<IdentityReport> {
        let l = self.evaluate(lhs, assign)?;
        let r = self.evaluate(rhs, assign)?;
        Ok(IdentityReport::new(&l, &r))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdentityReport {
    pub status: Status,
    pub lhs: Vec<HallTerm>,
    pub rhs: Vec<HallTerm>,
    pub diff: Vec<HallTerm>,
}

impl IdentityReport {
    pub fn new(l: &HallElement, r: &HallElement) -> Self {
        let d = l.sub(r);
        IdentityReport {
            status: if d.is_zero() { Status::Pass } else { Status::Fail },
            lhs: l.to_terms(),
            rhs: r.to_terms(),
            diff: d.to_terms(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::zab;
    use crate::scalar::QuadraticScalar;
    use num_rational::BigRational;

    fn p(s: &str) -> NCPolynomial {
        NCPolynomial::parse(s).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn generator_and_unassigned() {
        let h = HallAlgebra::new(3, 2).unwrap();
        let a = Assignment::standard(3);
        let e = h.evaluate(&p("z[1,0]"), &a).unwrap();
        assert_eq!(e, HallElement::basis(DerivedObject::simple(1, 0), 2));
        let e = h.evaluate(&p("z[2,-1]"), &a).unwrap();
        assert_eq!(e, HallElement::basis(DerivedObject::simple(2, -1), 2));
        assert!(matches!(h.evaluate(&p("E[1,0]"), &a), Err(Error::Unassigned(_))));
    }

    #[test]
    fn self_extension_in_rank_one() {
        // the field size is v², so v = 2 and v = 3 give exact rationals
        for (q, want) in [(4, rat(1, 6)), (9, rat(1, 24))] {
            let h = HallAlgebra::new(2, q).unwrap();
            let a = Assignment::standard(2);
            let e = h.evaluate(&p("z[1,0] z[1,1] - v^-2 * z[1,1] z[1,0]"), &a).unwrap();
            assert_eq!(e, HallElement::monomial(DerivedObject::zero(), QuadraticScalar::rational(q, want)));
            let r = h.verify_identity(&p("[z[1,0], z[1,1]]_{v^-2}"), &p("v^-1/(v^2-1)"), &a).unwrap();
            assert!(r.passed());
        }
    }

    #[test]
    fn finger_relation_and_negative_control() {
        let h = HallAlgebra::new(4, 2).unwrap();
        let a = Assignment::standard(4);
        let lhs = NCPolynomial::q_bracket(&zab(2, 3, 0, 4).unwrap(), &zab(1, 2, 0, 4).unwrap(), &crate::freealg::qp());
        let rhs = zab(1, 3, 0, 4).unwrap();
        assert!(h.verify_identity(&lhs, &rhs, &a).unwrap().passed());
        let bad =
            NCPolynomial::q_bracket(&zab(2, 3, 0, 4).unwrap(), &zab(1, 2, 0, 4).unwrap(), &crate::freealg::qp_pow(2));
        let r = h.verify_identity(&bad, &rhs, &a).unwrap();
        assert!(!r.passed());
        assert!(!r.diff.is_empty());
    }

    #[test]
    fn assignment_json_round_trip() {
        let a = Assignment::standard(3);
        let b = Assignment::from_json(&a.to_json()).unwrap();
        assert_eq!(a, b);
        let j = serde_json::json!({"z[1,1]": "M[1,3)[1]"});
        let c = Assignment::from_json(&j).unwrap();
        assert_eq!(c.image(&Generator::z(1, 0)).unwrap(), DerivedObject::single(1, 3, 0));
    }
}
