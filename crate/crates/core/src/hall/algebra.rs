//! Toën's structure constants and the Euler-twisted product.

use super::element::HallElement;
use crate::error::Result;
use crate::par::{self, Parallelism};
use crate::repq::{dhom_dims, euler_form, DerivedCategory, DerivedObject};
use crate::scalar::QuadraticScalar;
use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

type ConeTally = Arc<BTreeMap<DerivedObject, u64>>;

/// The derived Hall algebra of `D^b(rep_𝔽q A_{m−1})`, with memo tables for
/// basis products and cone distributions.
pub struct HallAlgebra {
    dc: DerivedCategory,
    par: Parallelism,
    products: DashMap<(DerivedObject, DerivedObject), Arc<HallElement>>,
    cones: DashMap<(DerivedObject, DerivedObject), ConeTally>,
}

/// `q^e` as an exact rational.
fn q_power(q: u64, e: i64) -> BigRational {
    let base = BigInt::from(q).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

/// `{X, Y} = Π_{n>0} |Hom(X, Y[−n])|^{(−1)^n}`.
pub fn braces(x: &DerivedObject, y: &DerivedObject, q: u64) -> BigRational {
    let e: i64 = dhom_dims(x, y)
        .into_iter()
        .filter(|&(k, _)| k < 0)
        .map(|(k, d)| if k.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
        .sum();
    q_power(q, e)
}

impl HallAlgebra {
    pub fn new(m: usize, q: u64) -> Result<Self> {
        Ok(Self::from_category(DerivedCategory::new(m, q)?))
    }

    pub fn from_category(dc: DerivedCategory) -> Self {
        HallAlgebra { dc, par: Parallelism::default(), products: DashMap::new(), cones: DashMap::new() }
    }

    pub fn with_parallelism(mut self, p: Parallelism) -> Self {
        self.par = p;
        self
    }

    pub fn parallelism(&self) -> Parallelism {
        self.par
    }

    pub fn category(&self) -> &DerivedCategory {
        &self.dc
    }

    pub fn m(&self) -> usize {
        self.dc.m()
    }

    pub fn q(&self) -> u64 {
        self.dc.q()
    }

    /// Number of memoized basis products.
    pub fn cache_len(&self) -> usize {
        self.products.len()
    }

    pub fn clear_cache(&self) {
        self.products.clear();
        self.cones.clear();
    }

    fn cone_tally(&self, x: &DerivedObject, l: &DerivedObject) -> ConeTally {
        let key = (x.clone(), l.clone());
        if let Some(t) = self.cones.get(&key) {
            return t.clone();
        }
        let t = Arc::new(self.dc.cone_distribution(x, l, Parallelism::Sequential));
        self.cones.insert(key, t.clone());
        t
    }

    /// `F^L_{X,Y} = |{f: X → L : cone f ≅ Y}| / |Aut X| · {X,L} / {X,X}`.
    pub fn structure_constant(&self, x: &DerivedObject, y: &DerivedObject, l: &DerivedObject) -> BigRational {
        let count = self.cone_tally(x, l).get(y).copied().unwrap_or(0);
        if count == 0 {
            return BigRational::from_integer(0.into());
        }
        let aut: BigUint = self.dc.aut_count(x);
        let q = self.q();
        BigRational::new(BigInt::from(count), BigInt::from(aut)) * braces(x, l, q) / braces(x, x, q)
    }

    /// Every `L` with `F^L_{X,Y} ≠ 0`: the cones of `Y[−1] → X`.
    pub fn candidates(&self, x: &DerivedObject, y: &DerivedObject) -> BTreeSet<DerivedObject> {
        self.cone_tally(&y.shift(-1), x).keys().cloned().collect()
    }

    /// `[X]*[Y] = q^{⟨Y,X⟩/2} Σ_L F^L_{X,Y} [L]`, memoized.
    pub fn basis_product(&self, x: &DerivedObject, y: &DerivedObject) -> Arc<HallElement> {
        let key = (x.clone(), y.clone());
        if let Some(p) = self.products.get(&key) {
            return p.clone();
        }
        let q = self.q();
        let out = if x.is_zero() {
            HallElement::basis(y.clone(), q)
        } else if y.is_zero() {
            HallElement::basis(x.clone(), q)
        } else {
            let twist = QuadraticScalar::half_power(q, euler_form(y, x));
            let ls: Vec<DerivedObject> = self.candidates(x, y).into_iter().collect();
            let coeffs = par::map(self.par, &ls, |l| self.structure_constant(x, y, l));
            let mut e = HallElement::zero(q);
            for (l, c) in ls.into_iter().zip(coeffs) {
                e.add_term(l, &twist.scale(&c));
            }
            e
        };
        let out = Arc::new(out);
        self.products.insert(key, out.clone());
        out
    }

    /// Bilinear extension of the basis product.
    pub fn product(&self, a: &HallElement, b: &HallElement) -> HallElement {
        let pairs: Vec<(&DerivedObject, &QuadraticScalar, &DerivedObject, &QuadraticScalar)> =
            a.terms().iter().flat_map(|(x, c)| b.terms().iter().map(move |(y, d)| (x, c, y, d))).collect();
        let parts = par::map(self.par, &pairs, |(x, c, y, d)| self.basis_product(x, y).scale(&c.mul(d)));
        parts.iter().fold(HallElement::zero(self.q()), |acc, p| acc.add(p))
    }
}
