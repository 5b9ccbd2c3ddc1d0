use super::poly::Poly;
use super::quadratic::QuadraticScalar;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of ℚ(v), where `v^2 = q`.
///
/// Canonical form: the denominator is monic and coprime to the numerator,
/// so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunctionV {
    num: Poly,
    den: Poly,
}

impl RationalFunctionV {
    pub fn normalize(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.div_rem(&g);
        let (mut d, _) = den.div_rem(&g);
        let l = d.lead().recip();
        n = n.scale(&l);
        d = d.scale(&l);
        Ok(RationalFunctionV { num: n, den: d })
    }

    pub fn zero() -> Self {
        RationalFunctionV { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RationalFunctionV { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        RationalFunctionV { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunctionV { num: p, den: Poly::one() }
    }

    /// `v^k` for any integer `k`.
    pub fn v_pow(k: i64) -> Self {
        if k >= 0 {
            RationalFunctionV { num: Poly::monomial(BigRational::one(), k as usize), den: Poly::one() }
        } else {
            RationalFunctionV { num: Poly::one(), den: Poly::monomial(BigRational::one(), (-k) as usize) }
        }
    }

    pub fn v() -> Self {
        Self::v_pow(1)
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i64) -> Self {
        Self::v_pow(2 * k)
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self> {
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The automorphism `v ↦ v^{-1}`.
    pub fn invert_variable(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let n = self.num.reversed(dn);
        let d = self.den.reversed(dd);
        let (n, d) = if dd >= dn { (n.shift_up(dd - dn), d) } else { (n, d.shift_up(dn - dd)) };
        Self::normalize(n, d).expect("reversed denominator is nonzero")
    }

    /// Specializes `v ↦ √q`.
    pub fn evaluate_at(&self, q: u64) -> Result<QuadraticScalar> {
        let n = QuadraticScalar::eval_poly(&self.num, q);
        let d = QuadraticScalar::eval_poly(&self.den, q);
        if d.is_zero() {
            return Err(Error::Pole { q });
        }
        Ok(n.div(&d).expect("nonzero denominator"))
    }

    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_scalar(s)
    }
}

impl Default for RationalFunctionV {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a RationalFunctionV> for &'a RationalFunctionV {
    type Output = RationalFunctionV;
    fn add(self, o: &RationalFunctionV) -> RationalFunctionV {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RationalFunctionV::normalize(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        RationalFunctionV::normalize(n, self.den.mul(&o.den)).unwrap()
    }
}

impl<'a> Sub<&'a RationalFunctionV> for &'a RationalFunctionV {
    type Output = RationalFunctionV;
    fn sub(self, o: &RationalFunctionV) -> RationalFunctionV {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RationalFunctionV> for &'a RationalFunctionV {
    type Output = RationalFunctionV;
    fn mul(self, o: &RationalFunctionV) -> RationalFunctionV {
        if self.is_zero() || o.is_zero() {
            return RationalFunctionV::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        RationalFunctionV::normalize(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }
}

impl<'a> Div<&'a RationalFunctionV> for &'a RationalFunctionV {
    type Output = Result<RationalFunctionV>;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &RationalFunctionV) -> Result<RationalFunctionV> {
        Ok(self * &o.inv()?)
    }
}

impl Neg for &RationalFunctionV {
    type Output = RationalFunctionV;
    fn neg(self) -> RationalFunctionV {
        RationalFunctionV { num: self.num.neg(), den: self.den.clone() }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunctionV {
            type Output = RationalFunctionV;
            fn $m(self, o: RationalFunctionV) -> Self::Output {
                (&self).$m(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for RationalFunctionV {
    type Output = RationalFunctionV;
    fn neg(self) -> RationalFunctionV {
        -&self
    }
}

impl fmt::Display for RationalFunctionV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Pull the v^s factor out of the denominator so Laurent monomials print
        // as negative powers.
        let s = self.den.valuation().unwrap_or(0);
        let rest = self.den.shift_down(s);
        let top = self.num.fmt_laurent(-(s as i64), "v");
        if rest.is_one() {
            return f.write_str(&top);
        }
        let multi = self.num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        let top = if multi { format!("({top})") } else { top };
        write!(f, "{}/({})", top, rest.fmt_laurent(0, "v"))
    }
}

impl serde::Serialize for RationalFunctionV {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for RationalFunctionV {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        RationalFunctionV::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RationalFunctionV {
        RationalFunctionV::parse(s).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let x = RationalFunctionV::normalize(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(x, RationalFunctionV::from_poly(Poly::from_ints(&[1, 1])));
        let z = RationalFunctionV::normalize(Poly::zero(), Poly::from_ints(&[0, 0, 0, 1])).unwrap();
        assert_eq!(z.denominator(), &Poly::one());
        let h = RationalFunctionV::normalize(Poly::from_ints(&[0, 2]), Poly::from_ints(&[4])).unwrap();
        assert_eq!(h.denominator(), &Poly::one());
        assert_eq!(h, &RationalFunctionV::v() * &r("1/2"));
        assert_eq!(RationalFunctionV::normalize(Poly::one(), Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn evaluation_examples() {
        let a = r("q - q^-1").evaluate_at(2).unwrap();
        assert_eq!(a, QuadraticScalar::rational(2, BigRational::new(3.into(), 2.into())));
        let b = r("q^-1/(q^2-1)").evaluate_at(3).unwrap();
        assert_eq!(b, QuadraticScalar::rational(3, BigRational::new(1.into(), 24.into())));
        let c = r("v").evaluate_at(4).unwrap();
        assert_eq!(c, QuadraticScalar::rational(4, BigRational::from_integer(2.into())));
        assert_eq!(r("1/(v^2-2)").evaluate_at(2), Err(Error::Pole { q: 2 }));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["v^-1/(v^2 - 1)", "v - v^-1", "-3*v^2 + 1/2", "0", "(v + 1)/(v^2 + 3)"] {
            let x = r(s);
            assert_eq!(r(&x.to_string()), x, "{s} -> {x}");
        }
        assert_eq!(r("q^-1/(q^2-1)").to_string(), "v^-2/(v^4 - 1)");
    }

    #[test]
    fn invert_variable_is_involution() {
        let x = r("(v^3 + 2*v)/(v^2 - 5)");
        let y = x.invert_variable();
        assert_eq!(y, r("(v^-3 + 2*v^-1)/(v^-2 - 5)"));
        assert_eq!(y.invert_variable(), x);
    }
}
