use crate::repq::DerivedObject;
use crate::scalar::QuadraticScalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A finite combination of isomorphism classes with coefficients in ℚ(√q).
/// No stored coefficient is zero; `[0]` is the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallElement {
    q: u64,
    terms: BTreeMap<DerivedObject, QuadraticScalar>,
}

/// Wire form of one term.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HallTerm {
    pub object: DerivedObject,
    pub coeff: QuadraticScalar,
}

impl HallElement {
    pub fn zero(q: u64) -> Self {
        HallElement { q, terms: BTreeMap::new() }
    }

    pub fn one(q: u64) -> Self {
        Self::basis(DerivedObject::zero(), q)
    }

    pub fn basis(x: DerivedObject, q: u64) -> Self {
        Self::monomial(x, QuadraticScalar::one(q))
    }

    pub fn monomial(x: DerivedObject, c: QuadraticScalar) -> Self {
        let mut e = Self::zero(c.q());
        e.add_term(x, &c);
        e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn terms(&self) -> &BTreeMap<DerivedObject, QuadraticScalar> {
        &self.terms
    }

    pub fn coefficient(&self, x: &DerivedObject) -> QuadraticScalar {
        self.terms.get(x).cloned().unwrap_or_else(|| QuadraticScalar::zero(self.q))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, x: DerivedObject, c: &QuadraticScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(x) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in &o.terms {
            out.add_term(x.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        HallElement { q: self.q, terms: self.terms.iter().map(|(x, c)| (x.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &QuadraticScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.q);
        }
        HallElement { q: self.q, terms: self.terms.iter().map(|(x, d)| (x.clone(), d.mul(c))).collect() }
    }

    /// Shifts every basis object by `n`.
    pub fn shift(&self, n: i32) -> Self {
        HallElement { q: self.q, terms: self.terms.iter().map(|(x, c)| (x.shift(n), c.clone())).collect() }
    }

    pub fn to_terms(&self) -> Vec<HallTerm> {
        self.terms.iter().map(|(x, c)| HallTerm { object: x.clone(), coeff: c.clone() }).collect()
    }
}

impl fmt::Display for HallElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(x, c)| match c.to_string().as_str() {
                "1" => format!("[{x}]"),
                "-1" => format!("-[{x}]"),
                c => format!("{c}*[{x}]"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for HallElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_terms().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn cancellation_drops_terms() {
        let x = DerivedObject::simple(1, 0);
        let a = HallElement::basis(x.clone(), 2);
        assert!(a.sub(&a).is_zero());
        let half = QuadraticScalar::rational(2, BigRational::new(1.into(), 2.into()));
        let b = a.scale(&half).add(&a.scale(&half));
        assert_eq!(b, a);
        assert_eq!(a.shift(1).terms().keys().next(), Some(&x.shift(1)));
    }

    #[test]
    fn display() {
        let x = DerivedObject::simple(1, 0);
        let a = HallElement::basis(x.clone(), 2);
        assert_eq!(a.to_string(), "[M[1,2)[0]]");
        assert_eq!(a.neg().to_string(), "-[M[1,2)[0]]");
        let y =
            HallElement::monomial(x.shift(1), QuadraticScalar::sqrt_q(2).scale(&BigRational::from_integer(3.into())));
        assert_eq!(a.add(&y).to_string(), "[M[1,2)[0]] + 3*v*[M[1,2)[1]]");
        assert_eq!(HallElement::zero(2).to_string(), "0");
    }
}
