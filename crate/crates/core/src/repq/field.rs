use crate::error::{Error, Result};
use std::fmt;

/// Field element, an index into the arithmetic tables of its field.
pub type Fq = u8;

/// A finite field 𝔽_q with `q = p^k < 256`, backed by full arithmetic tables.
///
/// Elements of an extension field are polynomials over 𝔽_p of degree `< k`
/// in the basis `1, x, …, x^{k−1}`, encoded in base `p`.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<Fq>,
    mul: Vec<Fq>,
    neg: Vec<Fq>,
    inv: Vec<Fq>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, o: &Self) -> bool {
        self.q == o.q && self.modulus == o.modulus
    }
}

impl Eq for FiniteField {}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// `Some((p, k))` when `q = p^k`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut r = q;
    let mut k = 0;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1 && is_prime(p)).then_some((p as u32, k))
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // modulus is monic of degree k
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c != 0 {
            for (j, m) in modulus.iter().enumerate() {
                let idx = d - k + j;
                prod[idx] = (prod[idx] + (p - c) * m % p) % p;
            }
        }
    }
    prod.truncate(k);
    prod
}

fn digits(mut x: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Monic polynomial of degree `k` over 𝔽_p with no roots and no proper factor;
/// checked by brute force over all monic polynomials of lower degree.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = modulus.len() - 1;
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut f = digits(low, p, d as u32);
            f.push(1);
            if poly_rem(modulus, &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(a: &[u32], d: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dd = d.len() - 1;
    let inv_lead = inverse_mod(d[dd], p);
    while r.len() > dd {
        let c = r[r.len() - 1] * inv_lead % p;
        let shift = r.len() - 1 - dd;
        for (j, x) in d.iter().enumerate() {
            r[shift + j] = (r[shift + j] + (p - c) * x % p) % p;
        }
        r.pop();
    }
    r
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|x| a * x % p == 1).expect("nonzero element of a prime field")
}

impl FiniteField {
    /// 𝔽_q. Prime powers use the first irreducible monic modulus in
    /// lexicographic order of coefficients (for q = 4 this is x² + x + 1).
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).filter(|_| q < 256).ok_or(Error::NotPrimePower(q))?;
        if k == 1 {
            return Self::with_modulus(p, &[0, 1]);
        }
        for low in 0..p.pow(k) {
            let mut m = digits(low, p, k);
            m.push(1);
            if is_irreducible(&m, p) {
                return Self::with_modulus(p, &m);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// 𝔽_{p^k} as 𝔽_p[x]/(modulus), coefficients low degree first, monic.
    pub fn with_modulus(p: u32, modulus: &[u32]) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrimePower(p as u64));
        }
        let k = modulus.len().saturating_sub(1) as u32;
        if k == 0 || modulus[k as usize] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!("{modulus:?} is not a monic polynomial over GF({p})")));
        }
        if k > 1 && !is_irreducible(modulus, p) {
            return Err(Error::InvalidModulus(format!("{modulus:?} is reducible over GF({p})")));
        }
        let q = p.pow(k);
        if q >= 256 {
            return Err(Error::InvalidModulus(format!("field of size {q} is too large")));
        }
        let n = q as usize;
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = undigits(&s, p) as Fq;
                let m = if k == 1 { vec![da[0] * db[0] % p] } else { poly_mulmod(&da, &db, modulus, p) };
                mul[(a * q + b) as usize] = undigits(&m, p) as Fq;
            }
        }
        let mut neg = vec![0; n];
        let mut inv = vec![0; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == 0).unwrap() as Fq;
            if a != 0 {
                inv[a] = (1..n).find(|&b| mul[a * n + b] == 1).unwrap() as Fq;
            }
        }
        Ok(FiniteField { p, k, q, modulus: modulus.to_vec(), add, mul, neg, inv })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Fq) -> Fq {
        assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Fq> {
        (0..self.q).map(|x| x as Fq)
    }
}
