use crate::error::{Error, Result};
use crate::freealg::{Family, Generator, Label, NCPolynomial};
use serde::{Deserialize, Serialize};

/// Foliation data `h : ℤ/m → ℤ` of a disk with `m` marked intervals and a
/// minimal arc system `E_1, …, E_m`. Arcs are indexed from 1 and every
/// accessor reduces its index cyclically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct FoliationData {
    h: Vec<i32>,
}

impl TryFrom<Vec<i32>> for FoliationData {
    type Error = Error;

    fn try_from(h: Vec<i32>) -> Result<Self> {
        FoliationData::new(h)
    }
}

impl From<FoliationData> for Vec<i32> {
    fn from(f: FoliationData) -> Vec<i32> {
        f.h
    }
}

impl FoliationData {
    /// Requires `m ≥ 2` and `Σ h = m − 2`.
    pub fn new(h: Vec<i32>) -> Result<Self> {
        let m = h.len();
        if m < 2 {
            return Err(Error::Foliation(format!("need at least 2 marked intervals, got {m}")));
        }
        let s: i64 = h.iter().map(|&x| x as i64).sum();
        if s != m as i64 - 2 {
            return Err(Error::Foliation(format!("sum of h must equal m - 2 = {}, got {s}", m as i64 - 2)));
        }
        Ok(FoliationData { h })
    }

    /// The standard form on the square, `h = (0, 1, 0, 1)`.
    pub fn standard_form() -> Self {
        FoliationData { h: vec![0, 1, 0, 1] }
    }

    pub fn m(&self) -> usize {
        self.h.len()
    }

    pub fn values(&self) -> &[i32] {
        &self.h
    }

    /// Reduces any integer to the range `1..=m`.
    pub fn wrap(&self, i: i64) -> u32 {
        (i - 1).rem_euclid(self.m() as i64) as u32 + 1
    }

    pub fn h(&self, i: i64) -> i32 {
        self.h[self.wrap(i) as usize - 1]
    }

    /// `⟨k⟩ = Σ_{j=1}^{k−1} (1 − h(j))` for `1 ≤ k ≤ m`.
    pub fn angle(&self, k: u32) -> Result<i32> {
        if k < 1 || k as usize > self.m() {
            return Err(Error::Index(format!("angle index {k} outside 1..={}", self.m())));
        }
        Ok(self.span(1, k as i64))
    }

    /// `⟨j,k⟩ = Σ_{ℓ=j}^{k−1} (1 − h(ℓ))`, walking forward cyclically from `j`
    /// to `k`. Equal endpoints give 0.
    pub fn span(&self, j: i64, k: i64) -> i32 {
        let (j, k) = (self.wrap(j) as i64, self.wrap(k) as i64);
        let len = (k - j).rem_euclid(self.m() as i64);
        (0..len).map(|t| 1 - self.h(j + t)).sum()
    }

    /// `τ^i⟨k⟩`, the angle computed from arc `i + 1` instead of arc 1.
    pub fn tau_angle(&self, i: i64, k: i64) -> i32 {
        (1..k).map(|j| 1 - self.h(i + j)).sum()
    }

    /// `h'(i) = h(i + r)`.
    pub fn rotate(&self, r: i64) -> Self {
        FoliationData { h: (1..=self.m() as i64).map(|i| self.h(i + r)).collect() }
    }
}

/// A disk with a minimal arc system whose arcs are named by `family`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedDisk {
    pub foliation: FoliationData,
    pub family: Family,
}

impl MarkedDisk {
    pub fn new(foliation: FoliationData, family: Family) -> Self {
        MarkedDisk { foliation, family }
    }

    pub fn with_h(h: Vec<i32>) -> Result<Self> {
        Ok(MarkedDisk::new(FoliationData::new(h)?, Family::E))
    }

    pub fn m(&self) -> usize {
        self.foliation.m()
    }

    /// `E_{i,n}` with the arc index reduced cyclically.
    pub fn gen(&self, i: i64, n: i32) -> Generator {
        Generator::new(Label::new(self.family, self.foliation.wrap(i)), n)
    }

    pub fn arc(&self, i: i64, n: i32) -> NCPolynomial {
        NCPolynomial::gen(self.gen(i, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FoliationData::new(vec![0, 0, 0, 0]).is_err());
        assert!(FoliationData::new(vec![0]).is_err());
        assert!(FoliationData::new(vec![0, 0]).is_ok());
        let err = FoliationData::new(vec![1, 1, 1]).unwrap_err();
        assert!(err.to_string().contains("m - 2"));
        assert!(serde_json::from_str::<FoliationData>("[1,1,1]").is_err());
        let f: FoliationData = serde_json::from_str("[1,0,0]").unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), "[1,0,0]");
    }

    #[test]
    fn standard_form_angles() {
        let e0 = FoliationData::standard_form();
        let got: Vec<i32> = (1..=4).map(|k| e0.angle(k).unwrap()).collect();
        assert_eq!(got, vec![0, 1, 1, 2]);
        assert!(e0.angle(0).is_err());
        assert!(e0.angle(5).is_err());
        assert_eq!(e0.span(2, 4) + e0.span(4, 2), 2);
        assert_eq!(e0.span(3, 3), 0);
        for k in 1..=4 {
            assert_eq!(e0.span(1, k as i64), e0.angle(k).unwrap());
            assert_eq!(e0.tau_angle(4, k as i64), e0.angle(k).unwrap());
        }
    }

    #[test]
    fn shift_identities() {
        // τ^i⟨k+1⟩ − τ^i⟨k⟩ = 1 − h(i+k), τ^i⟨m−1⟩ − h(i) = h(i−1),
        // τ^k⟨m−k+1⟩ + ⟨k⟩ = 1 + h(k).
        for h in [vec![1, 0, 0], vec![0, 1, 0, 1], vec![2, -1, 0, 1, 1], vec![0, 0, 3, 0, 0]] {
            let f = FoliationData::new(h).unwrap();
            let m = f.m() as i64;
            for i in 1..=m {
                for k in 1..m - 1 {
                    assert_eq!(f.tau_angle(i, k + 1) - f.tau_angle(i, k), 1 - f.h(i + k));
                }
                assert_eq!(f.tau_angle(i, m - 1) - f.h(i), f.h(i - 1));
            }
            for k in 2..=m {
                assert_eq!(f.tau_angle(k, m - k + 1) + f.angle(k as u32).unwrap(), 1 + f.h(k));
            }
        }
    }
}
