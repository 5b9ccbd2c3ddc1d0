use super::poly::Poly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// `a + b·√q` with rational `a`, `b`.
///
/// When `q` is a perfect square the radical is folded into `a`, so `b = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticScalar {
    q: u64,
    a: BigRational,
    b: BigRational,
}

fn perfect_sqrt(q: u64) -> Option<u64> {
    let r = q.sqrt();
    (r * r == q).then_some(r)
}

impl QuadraticScalar {
    pub fn new(q: u64, a: BigRational, b: BigRational) -> Self {
        match perfect_sqrt(q) {
            Some(r) => {
                let a = a + b * BigRational::from_integer(BigInt::from(r));
                QuadraticScalar { q, a, b: BigRational::zero() }
            }
            None => QuadraticScalar { q, a, b },
        }
    }

    pub fn rational(q: u64, a: BigRational) -> Self {
        QuadraticScalar { q, a, b: BigRational::zero() }
    }

    pub fn zero(q: u64) -> Self {
        Self::rational(q, BigRational::zero())
    }

    pub fn one(q: u64) -> Self {
        Self::rational(q, BigRational::one())
    }

    /// `√q`.
    pub fn sqrt_q(q: u64) -> Self {
        Self::new(q, BigRational::zero(), BigRational::one())
    }

    /// `q^{e/2}` for any integer `e`.
    pub fn half_power(q: u64, e: i64) -> Self {
        let qr = BigRational::from_integer(BigInt::from(q));
        let whole = e.div_euclid(2);
        let base = if whole >= 0 {
            num_traits::pow(qr.clone(), whole as usize)
        } else {
            num_traits::pow(qr.recip(), (-whole) as usize)
        };
        if e.rem_euclid(2) == 0 {
            Self::rational(q, base)
        } else {
            Self::new(q, BigRational::zero(), base)
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn qr(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.q))
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.q, o.q);
        QuadraticScalar { q: self.q, a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.q, o.q);
        QuadraticScalar { q: self.q, a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn neg(&self) -> Self {
        QuadraticScalar { q: self.q, a: -&self.a, b: -&self.b }
    }

    /// `(a + b√q)(c + d√q) = (ac + bdq) + (ad + bc)√q`.
    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.q, o.q);
        let a = &self.a * &o.a + &self.b * &o.b * self.qr();
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadraticScalar { q: self.q, a, b }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QuadraticScalar { q: self.q, a: &self.a * c, b: &self.b * c }
    }

    pub fn inv(&self) -> Result<Self> {
        // Norm a^2 - b^2 q is nonzero unless both parts vanish, since √q is
        // irrational whenever b is kept.
        let norm = &self.a * &self.a - &self.b * &self.b * self.qr();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadraticScalar { q: self.q, a: &self.a / &norm, b: -&self.b / &norm })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Value of a polynomial in `v` at `v = √q`.
    pub fn eval_poly(p: &Poly, q: u64) -> Self {
        let (e, o) = p.even_odd();
        let qr = BigRational::from_integer(BigInt::from(q));
        Self::new(q, e.eval(&qr), o.eval(&qr))
    }
}

impl fmt::Display for QuadraticScalar {
    /// `v` stands for `√q` in the rendering.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if self.b.is_one() {
                    write!(f, "v")
                } else if (-&self.b).is_one() {
                    write!(f, "-v")
                } else {
                    write!(f, "{}*v", self.b)
                }
            }
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                let mag = self.b.abs();
                if mag.is_one() {
                    write!(f, "({} {} v)", self.a, sign)
                } else {
                    write!(f, "({} {} {}*v)", self.a, sign, mag)
                }
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    a: String,
    b: String,
    q: u64,
}

impl Serialize for QuadraticScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { a: self.a.to_string(), b: self.b.to_string(), q: self.q }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadraticScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let a: BigRational = w.a.parse().map_err(serde::de::Error::custom)?;
        let b: BigRational = w.b.parse().map_err(serde::de::Error::custom)?;
        Ok(QuadraticScalar::new(w.q, a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn product_rule() {
        let x = QuadraticScalar::new(2, rat(1, 1), rat(1, 1));
        let y = QuadraticScalar::new(2, rat(3, 1), rat(-2, 1));
        // (1 + √2)(3 - 2√2) = 3 - 4 + (-2 + 3)√2
        assert_eq!(x.mul(&y), QuadraticScalar::new(2, rat(-1, 1), rat(1, 1)));
        assert_eq!(x.mul(&x.inv().unwrap()), QuadraticScalar::one(2));
    }

    #[test]
    fn folding_and_half_powers() {
        assert_eq!(QuadraticScalar::sqrt_q(9), QuadraticScalar::rational(9, rat(3, 1)));
        assert_eq!(QuadraticScalar::half_power(2, 3), QuadraticScalar::new(2, rat(0, 1), rat(2, 1)));
        assert_eq!(QuadraticScalar::half_power(2, -1), QuadraticScalar::new(2, rat(0, 1), rat(1, 2)));
        assert_eq!(QuadraticScalar::half_power(3, -2), QuadraticScalar::rational(3, rat(1, 3)));
    }

    #[test]
    fn json_shape() {
        let x = QuadraticScalar::new(2, rat(0, 1), rat(3, 1));
        let j = serde_json::to_value(&x).unwrap();
        assert_eq!(j, serde_json::json!({"a": "0", "b": "3", "q": 2}));
        let back: QuadraticScalar = serde_json::from_value(j).unwrap();
        assert_eq!(back, x);
        assert_eq!(x.to_string(), "3*v");
    }
}
