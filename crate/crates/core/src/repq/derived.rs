//! Objects of D^b(rep A_{m−1}) as multisets of shifted interval modules.

use super::rep::{interval_ext1_dim, interval_hom_dim, Interval};
use crate::error::{Error, Result};
use crate::scalar::Cursor;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// `M[a,b)[n]`: the interval module placed in cohomological degree `−n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Summand {
    pub iv: Interval,
    pub shift: i32,
}

impl Summand {
    pub fn new(a: u32, b: u32, shift: i32) -> Self {
        Summand { iv: Interval { a, b }, shift }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.iv, self.shift)
    }
}

/// An isomorphism class in the derived category, kept as a sorted multiset.
/// The empty multiset is the zero object.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DerivedObject {
    summands: Vec<Summand>,
}

impl DerivedObject {
    pub fn zero() -> Self {
        DerivedObject { summands: Vec::new() }
    }

    pub fn new(mut summands: Vec<Summand>) -> Self {
        summands.sort_unstable();
        DerivedObject { summands }
    }

    pub fn single(a: u32, b: u32, shift: i32) -> Self {
        DerivedObject { summands: vec![Summand::new(a, b, shift)] }
    }

    /// `S_i[n]`.
    pub fn simple(i: u32, shift: i32) -> Self {
        Self::single(i, i + 1, shift)
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn shift(&self, n: i32) -> Self {
        DerivedObject { summands: self.summands.iter().map(|s| Summand { iv: s.iv, shift: s.shift + n }).collect() }
    }

    pub fn direct_sum(&self, o: &Self) -> Self {
        let mut s = self.summands.clone();
        s.extend_from_slice(&o.summands);
        Self::new(s)
    }

    /// Checks every interval against `m`.
    pub fn validate(&self, m: usize) -> Result<()> {
        for s in &self.summands {
            Interval::new(s.iv.a, s.iv.b, m)?;
        }
        Ok(())
    }

    /// Class in K₀ = ℤ^{m−1}: `(−1)^n` times the dimension vector.
    pub fn k0_class(&self, m: usize) -> Vec<i64> {
        let mut c = vec![0i64; m - 1];
        for s in &self.summands {
            let sign = if s.shift.rem_euclid(2) == 0 { 1 } else { -1 };
            for v in s.iv.a..s.iv.b {
                c[v as usize - 1] += sign;
            }
        }
        c
    }

    /// Distinct summands with multiplicities.
    pub fn multiplicities(&self) -> Vec<(Summand, usize)> {
        let mut out: Vec<(Summand, usize)> = Vec::new();
        for s in &self.summands {
            match out.last_mut() {
                Some((t, k)) if t == s => *k += 1,
                _ => out.push((*s, 1)),
            }
        }
        out
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        if c.eat(b'0') {
            if !c.at_end() {
                return Err(c.err("trailing input"));
            }
            return Ok(Self::zero());
        }
        let mut out = Vec::new();
        loop {
            let mut k = 1;
            if c.peek().is_some_and(|b| b.is_ascii_digit()) {
                k = c.integer()?;
                c.expect(b'*')?;
            }
            if c.ident().as_deref() != Some("M") {
                return Err(c.err("expected M[a,b)"));
            }
            c.expect(b'[')?;
            let a = c.integer()?;
            c.expect(b',')?;
            let b = c.integer()?;
            c.expect(b')')?;
            let n = if c.eat(b'[') {
                let n = c.integer()?;
                c.expect(b']')?;
                n
            } else {
                0
            };
            if a < 1 || b <= a || k < 0 {
                return Err(Error::InvalidInterval { a, b, m: 0 });
            }
            for _ in 0..k {
                out.push(Summand::new(a as u32, b as u32, n as i32));
            }
            if c.at_end() {
                break;
            }
            c.expect(b'+')?;
        }
        Ok(Self::new(out))
    }
}

impl fmt::Display for DerivedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct WireSummand {
    a: u32,
    b: u32,
    n: i32,
    mult: usize,
}

impl Serialize for DerivedObject {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<WireSummand> = self
            .multiplicities()
            .into_iter()
            .map(|(x, k)| WireSummand { a: x.iv.a, b: x.iv.b, n: x.shift, mult: k })
            .collect();
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DerivedObject {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = Vec::<WireSummand>::deserialize(d)?;
        let mut out = Vec::new();
        for w in wire {
            if w.a < 1 || w.b <= w.a {
                return Err(serde::de::Error::custom(format!("invalid interval [{},{})", w.a, w.b)));
            }
            for _ in 0..w.mult {
                out.push(Summand::new(w.a, w.b, w.n));
            }
        }
        Ok(DerivedObject::new(out))
    }
}

/// `k ↦ dim Hom(X, Y[k])`, with zero entries omitted.
pub fn dhom_dims(x: &DerivedObject, y: &DerivedObject) -> BTreeMap<i32, usize> {
    let mut out = BTreeMap::new();
    for s in x.summands() {
        for t in y.summands() {
            // Hom(M[i], N[j][k]) = Ext^{j+k−i}(M, N)
            let h = interval_hom_dim(s.iv, t.iv);
            if h > 0 {
                *out.entry(s.shift - t.shift).or_insert(0) += h;
            }
            let e = interval_ext1_dim(s.iv, t.iv);
            if e > 0 {
                *out.entry(s.shift - t.shift + 1).or_insert(0) += e;
            }
        }
    }
    out
}

/// `Σ_k (−1)^k dim Hom^k(X, Y)`.
pub fn euler_form(x: &DerivedObject, y: &DerivedObject) -> i64 {
    dhom_dims(x, y).into_iter().map(|(k, d)| if k.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
}

/// Euler form on K₀ classes: `Σ_v x_v y_v − Σ_{v→v+1} x_v y_{v+1}`.
pub fn euler_form_k0(x: &[i64], y: &[i64]) -> i64 {
    let diag: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let off: i64 = (0..x.len().saturating_sub(1)).map(|v| x[v] * y[v + 1]).sum();
    diag - off
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let x = DerivedObject::parse("M[1,3)[1] + M[2,3) + 2*M[1,2)[-1]").unwrap();
        assert_eq!(x.len(), 4);
        assert_eq!(x.to_string(), "M[1,2)[-1] + M[1,2)[-1] + M[1,3)[1] + M[2,3)[0]");
        assert_eq!(DerivedObject::parse(&x.to_string()).unwrap(), x);
        assert_eq!(DerivedObject::parse("0").unwrap(), DerivedObject::zero());
        assert!(DerivedObject::parse("M[3,1)").is_err());
        let j = serde_json::to_value(&x).unwrap();
        assert_eq!(j[0], serde_json::json!({"a": 1, "b": 2, "n": -1, "mult": 2}));
        assert_eq!(serde_json::from_value::<DerivedObject>(j).unwrap(), x);
    }

    #[test]
    fn dims_examples() {
        let s1 = DerivedObject::simple(1, 0);
        assert_eq!(dhom_dims(&s1, &s1), BTreeMap::from([(0, 1)]));
        let s2 = DerivedObject::simple(2, 1);
        assert_eq!(dhom_dims(&s1, &s2), BTreeMap::from([(0, 1)]));
        let x = DerivedObject::parse("M[1,3) + M[2,3)[1]").unwrap();
        let y = DerivedObject::parse("M[1,2)[-1] + M[2,4)").unwrap();
        let base = dhom_dims(&x, &y);
        let shifted: BTreeMap<i32, usize> = base.iter().map(|(k, d)| (k + 1, *d)).collect();
        assert_eq!(dhom_dims(&x.shift(1), &y), shifted);
    }

    #[test]
    fn euler_examples() {
        for m in 2..=5u32 {
            for i in 1..m {
                let si = DerivedObject::simple(i, 0);
                assert_eq!(euler_form(&si, &si), 1);
                assert_eq!(euler_form(&si.shift(1), &si), -1);
                for j in 1..m {
                    let sj = DerivedObject::simple(j, 0);
                    let cartan = match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    };
                    assert_eq!(euler_form(&si, &sj) + euler_form(&sj, &si), cartan);
                }
            }
        }
    }
}
