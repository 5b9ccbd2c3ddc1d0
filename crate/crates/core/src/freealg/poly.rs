use super::generator::Generator;
use crate::error::{Error, Result};
use crate::scalar::RationalFunctionV;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub type Word = Vec<Generator>;

/// A finite linear combination of words in shifted generators, with
/// coefficients in ℚ(v). No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, RationalFunctionV>,
}

/// The quantum parameter of every relation family: `v`, the square root of
/// the field size.
pub fn qp() -> RationalFunctionV {
    RationalFunctionV::v()
}

/// `qp()^k`.
pub fn qp_pow(k: i64) -> RationalFunctionV {
    RationalFunctionV::v_pow(k)
}

impl NCPolynomial {
    pub fn zero() -> Self {
        NCPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(RationalFunctionV::one())
    }

    pub fn scalar(c: RationalFunctionV) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn gen(g: Generator) -> Self {
        Self::monomial(vec![g], RationalFunctionV::one())
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, RationalFunctionV::one())
    }

    pub fn monomial(w: Word, c: RationalFunctionV) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPolynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, RationalFunctionV)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }

    pub fn terms(&self) -> &BTreeMap<Word, RationalFunctionV> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &[Generator]) -> RationalFunctionV {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, c: &RationalFunctionV) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = &*x + c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        NCPolynomial { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn scale(&self, f: &RationalFunctionV) -> Self {
        if f.is_zero() {
            return Self::zero();
        }
        NCPolynomial { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * f)).collect() }
    }

    /// Concatenation product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, &(c1 * c2));
            }
        }
        out
    }

    /// `[x, y]_f = xy − f·yx`.
    pub fn q_bracket(x: &Self, y: &Self, f: &RationalFunctionV) -> Self {
        x.mul(y).sub(&y.mul(x).scale(f))
    }

    /// Right-nested bracket `[a_n, [a_{n−1}, … [a_2, a_1]_f … ]_f]_f` of
    /// `items = [a_n, …, a_1]`.
    pub fn iterated_bracket(items: &[Self], f: &RationalFunctionV) -> Result<Self> {
        let (last, rest) = items.split_last().ok_or(Error::EmptyBracket)?;
        let mut acc = last.clone();
        for x in rest.iter().rev() {
            acc = Self::q_bracket(x, &acc, f);
        }
        Ok(acc)
    }

    /// Raises every generator's shift by `n`.
    pub fn suspend(&self, n: i32) -> Self {
        if n == 0 {
            return self.clone();
        }
        NCPolynomial {
            terms: self.terms.iter().map(|(w, c)| (w.iter().map(|g| g.shifted(n)).collect(), c.clone())).collect(),
        }
    }

    /// Algebra homomorphism determined by an image for every generator.
    pub fn substitute<F>(&self, mut image: F) -> Result<Self>
    where
        F: FnMut(&Generator) -> Result<Self>,
    {
        let mut cache: BTreeMap<Generator, Self> = BTreeMap::new();
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut acc = Self::scalar(c.clone());
            for g in w {
                if !cache.contains_key(g) {
                    let img = image(g)?;
                    cache.insert(*g, img);
                }
                acc = acc.mul(&cache[g]);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Applies a map to every coefficient (used for `v ↦ v^{-1}`).
    pub fn map_scalars<F: Fn(&RationalFunctionV) -> RationalFunctionV>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        self.terms.keys().flatten().copied().collect()
    }

    /// Largest word length.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_element(s)
    }
}

fn fmt_word(w: &[Generator]) -> String {
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains([' ', '/']) => (true, rest.to_string()),
                _ => (false, cs),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let compound = mag.contains([' ', '/']);
            let coef = if compound { format!("({mag})") } else { mag };
            match (w.is_empty(), coef.as_str()) {
                (true, _) => f.write_str(&coef)?,
                (false, "1") => f.write_str(&fmt_word(w))?,
                (false, _) => write!(f, "{}*{}", coef, fmt_word(w))?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for NCPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for NCPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        NCPolynomial::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// `z_{(a,b),n} = [z_{b−1,n}, …, z_{a,n}]_q`, for `1 ≤ a < b ≤ m`.
pub fn zab(a: u32, b: u32, n: i32, m: u32) -> Result<NCPolynomial> {
    if !(1 <= a && a < b && b <= m) {
        return Err(Error::InvalidInterval { a: a as i64, b: b as i64, m: m as usize });
    }
    let items: Vec<_> = (a..b).rev().map(|i| NCPolynomial::gen(Generator::z(i, n))).collect();
    NCPolynomial::iterated_bracket(&items, &qp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(i: u32, n: i32) -> NCPolynomial {
        NCPolynomial::gen(Generator::z(i, n))
    }

    #[test]
    fn unit_and_bilinearity() {
        let x = z(1, 0);
        let y = z(2, 0);
        let w = z(3, 1);
        assert_eq!(NCPolynomial::one().mul(&x), x);
        assert_eq!(x.add(&y).mul(&w), x.mul(&w).add(&y.mul(&w)));
        assert_eq!(x.mul(&y), NCPolynomial::word(vec![Generator::z(1, 0), Generator::z(2, 0)]));
    }

    #[test]
    fn bracket_examples() {
        let x = z(1, 0);
        let y = z(2, 0);
        let q = qp();
        assert_eq!(NCPolynomial::q_bracket(&x, &y, &RationalFunctionV::one()), x.mul(&y).sub(&y.mul(&x)));
        assert_eq!(NCPolynomial::q_bracket(&x, &x, &q), x.mul(&x).scale(&(&RationalFunctionV::one() - &q)));
        let anti =
            NCPolynomial::q_bracket(&x, &y, &q).add(&NCPolynomial::q_bracket(&y, &x, &q.inv().unwrap()).scale(&q));
        assert!(anti.is_zero());
    }

    #[test]
    fn iterated_expansion() {
        let q = qp();
        let (a1, a2, a3) = (z(1, 0), z(2, 0), z(3, 0));
        assert_eq!(NCPolynomial::iterated_bracket(std::slice::from_ref(&a1), &q).unwrap(), a1);
        assert!(NCPolynomial::iterated_bracket(&[], &q).is_err());
        let got = NCPolynomial::iterated_bracket(&[a3.clone(), a2.clone(), a1.clone()], &q).unwrap();
        let want = a3
            .mul(&a2)
            .mul(&a1)
            .sub(&a3.mul(&a1).mul(&a2).scale(&q))
            .sub(&a2.mul(&a1).mul(&a3).scale(&q))
            .add(&a1.mul(&a2).mul(&a3).scale(&(&q * &q)));
        assert_eq!(got, want);
    }

    #[test]
    fn zab_and_suspend() {
        assert_eq!(zab(1, 2, 0, 4).unwrap(), z(1, 0));
        let z13 = zab(1, 3, 0, 4).unwrap();
        assert_eq!(z13, z(2, 0).mul(&z(1, 0)).sub(&z(1, 0).mul(&z(2, 0)).scale(&qp())));
        assert_eq!(zab(1, 4, 0, 4).unwrap().len(), 4);
        assert_eq!(z13.suspend(1), zab(1, 3, 1, 4).unwrap());
        assert_eq!(z13.suspend(0), z13);
        assert_eq!(z13.suspend(2).suspend(-3), z13.suspend(-1));
        assert!(zab(3, 3, 0, 4).is_err());
        assert!(zab(1, 5, 0, 4).is_err());
    }

    #[test]
    fn display_roundtrip() {
        let p = zab(1, 4, -1, 4).unwrap().add(&NCPolynomial::scalar(RationalFunctionV::parse("v^-1/(v^2-1)").unwrap()));
        let s = p.to_string();
        assert_eq!(NCPolynomial::parse(&s).unwrap(), p, "{s}");
    }
}
