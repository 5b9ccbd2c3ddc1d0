use super::quiver::self_extension_constant;
use super::relset::{OracleMap, RelationSet};
use crate::error::{Error, Result};
use crate::freealg::{qp, qp_pow, zab, Generator, Label, NCPolynomial, Relation};
use crate::scalar::RationalFunctionV;
use crate::surface::MarkedDisk;
use std::collections::BTreeMap;

fn one() -> RationalFunctionV {
    RationalFunctionV::one()
}

fn bracket(items: &[NCPolynomial]) -> NCPolynomial {
    NCPolynomial::iterated_bracket(items, &qp()).expect("non-empty bracket")
}

/// `[E_{i+m−1,τ^i⟨m−1⟩}, …, E_{i+1,τ^i⟨1⟩}]_q`, the convolution that
/// equals `E_{i,h(i)}`.
pub fn convolution_rhs(disk: &MarkedDisk, i: i64) -> NCPolynomial {
    let m = disk.m() as i64;
    let f = &disk.foliation;
    let items: Vec<_> = (1..m).rev().map(|k| disk.arc(i + k, f.tau_angle(i, k))).collect();
    bracket(&items)
}

/// The rungs of the cyclic convolution ladder for arc `i`: for
/// `k = 0, …, m−2`, `[X_k, …, X_1, E_{i,h(i)}]_q = [E_{i+m−1,τ^i⟨m−1⟩}, …, E_{i+k+1,τ^i⟨k+1⟩}]_q`
/// with `X_j = E_{i+j,τ^i⟨j⟩+1}`.
pub fn cyclic_family(disk: &MarkedDisk, i: i64) -> RelationSet {
    let m = disk.m() as i64;
    let f = &disk.foliation;
    let i = f.wrap(i) as i64;
    let mut rs = RelationSet::new(format!("cyclic ladder i={i} h={:?}", f.values()));
    for k in 0..m - 1 {
        let mut left: Vec<_> = (1..=k).rev().map(|j| disk.arc(i + j, f.tau_angle(i, j) + 1)).collect();
        left.push(disk.arc(i, f.h(i)));
        let right: Vec<_> = (k + 1..m).rev().map(|j| disk.arc(i + j, f.tau_angle(i, j))).collect();
        rs.push(Relation::new(format!("ladder i={i} rung={k}"), bracket(&left), bracket(&right)));
    }
    rs.with_oracle(psi_map(disk))
}

/// The minimal-disk presentation on `E_{i,n}` with base shifts in `lo..=hi`.
pub fn minimal_disk_relations(disk: &MarkedDisk, lo: i32, hi: i32) -> RelationSet {
    let f = &disk.foliation;
    let m = disk.m() as i64;
    let name = disk.gen(1, 0).label.family_name();
    let mut rs = RelationSet::new(format!("disk {name} h={:?} shifts={lo}..{hi}", f.values()));
    for i in 1..=m {
        for n in lo..=hi {
            for k in 1..=hi - n {
                let e = qp_pow(if k % 2 == 0 { 2 } else { -2 });
                let lhs = NCPolynomial::q_bracket(&disk.arc(i, n), &disk.arc(i, n + k), &e);
                let rhs = if k == 1 { self_extension_constant() } else { NCPolynomial::zero() };
                rs.push(Relation::new(format!("R1 {name}{i} n={n} k={k}"), lhs, rhs));
            }
        }
    }
    for i in 1..=m {
        let hi_i = f.h(i);
        for n in lo..=hi {
            for k in lo - n..=hi - n {
                if k == 1 {
                    continue;
                }
                // exponent (−1)^{k+1} for k > 1, (−1)^k for k < 1
                let e = if (k > 1) == (k % 2 == 0) { -1 } else { 1 };
                let lhs = NCPolynomial::q_bracket(&disk.arc(i + 1, n + k), &disk.arc(i, n + hi_i), &qp_pow(e));
                rs.push(Relation::new(format!("R2 {name}{i} n={n} k={k}"), lhs, NCPolynomial::zero()));
            }
            let lhs = disk.arc(i, n + hi_i);
            let rhs = convolution_rhs(disk, i).suspend(n);
            rs.push(Relation::new(format!("R2 convolution {name}{i} n={n}"), lhs, rhs));
        }
    }
    for i in 1..=m {
        for j in i + 1..=m {
            if (j - i).min(m - (j - i)) < 2 {
                continue;
            }
            for n in lo..=hi {
                for k in lo - n..=hi - n {
                    let lhs = NCPolynomial::q_bracket(&disk.arc(i, n), &disk.arc(j, n + k), &one());
                    rs.push(Relation::new(format!("R3 {name}{i} {name}{j} n={n} k={k}"), lhs, NCPolynomial::zero()));
                }
            }
        }
    }
    rs.with_oracle(psi_map(disk))
}

/// `ψ(E_{i,0}) = z_{i,−⟨i⟩}` for `i < m` and `ψ(E_{m,0}) = z_{(1,m),−h(m)}`.
pub fn psi_map(disk: &MarkedDisk) -> OracleMap {
    let f = &disk.foliation;
    let m = disk.m();
    let mut o = OracleMap::new(m);
    for i in 1..m as u32 {
        let a = f.angle(i).expect("index in range");
        o.images.insert(disk.gen(i as i64, 0).label, NCPolynomial::gen(Generator::z(i, -a)));
    }
    let top = zab(1, m as u32, -f.h(m as i64), m as u32).expect("m ≥ 2");
    o.images.insert(disk.gen(m as i64, 0).label, top);
    o
}

/// `φ(z_{i,0}) = E_{i,⟨i⟩}` for `1 ≤ i < m`.
pub fn phi_map(disk: &MarkedDisk) -> BTreeMap<Label, NCPolynomial> {
    let f = &disk.foliation;
    (1..disk.m() as u32).map(|i| (Label::z(i), disk.arc(i as i64, f.angle(i).expect("index in range")))).collect()
}

fn apply(map: &BTreeMap<Label, NCPolynomial>, p: &NCPolynomial) -> Result<NCPolynomial> {
    p.substitute(|g| map.get(&g.label).map(|x| x.suspend(g.shift)).ok_or_else(|| Error::Unassigned(g.to_string())))
}

/// Composites on generators: `ψφ(z_{i,0})` for each `i`, and `φψ(E_{i,0})`
/// paired with what it must equal (`E_{i,0}`, or for `i = m` the
/// convolution suspended by `−h(m)`).
pub struct InverseCheck {
    pub psi_phi: Vec<(NCPolynomial, NCPolynomial)>,
    pub phi_psi: Vec<(NCPolynomial, NCPolynomial)>,
}

impl InverseCheck {
    pub fn holds(&self) -> bool {
        self.psi_phi.iter().chain(&self.phi_psi).all(|(a, b)| a == b)
    }
}

pub fn inverse_check(disk: &MarkedDisk) -> Result<InverseCheck> {
    let psi = psi_map(disk).images;
    let phi = phi_map(disk);
    let m = disk.m() as i64;
    let mut psi_phi = Vec::new();
    for i in 1..m as u32 {
        let z = NCPolynomial::gen(Generator::z(i, 0));
        psi_phi.push((apply(&psi, &apply(&phi, &z)?)?, z));
    }
    let mut phi_psi = Vec::new();
    for i in 1..=m {
        let e = disk.arc(i, 0);
        let want = if i < m { e.clone() } else { convolution_rhs(disk, m).suspend(-disk.foliation.h(m)) };
        phi_psi.push((apply(&phi, &apply(&psi, &e)?)?, want));
    }
    Ok(InverseCheck { psi_phi, phi_psi })
}

/// The local skein computation on a square:
/// `[X, σ^ℓ Y]_1 = (q−q^{−1}) δ_{ℓ1} E_{2,1} E_{4,h(4)+h(1)} + (q^{−1}−q) δ_{ℓ0} E_{1,h(1)} E_{3,1−h(2)}`
/// with `X = [E_{2,1}, E_{1,h(1)}]_q` and `Y = [E_{3,1−h(2)}, E_{2,0}]_q`.
pub fn local_skein_relations(disk: &MarkedDisk, ells: impl IntoIterator<Item = i32>) -> Result<RelationSet> {
    if disk.m() != 4 {
        return Err(Error::Foliation(format!("local skein needs a square, got m = {}", disk.m())));
    }
    let h = |i| disk.foliation.h(i);
    let x = bracket(&[disk.arc(2, 1), disk.arc(1, h(1))]);
    let y = bracket(&[disk.arc(3, 1 - h(2)), disk.arc(2, 0)]);
    let diff = &qp() - &qp_pow(-1);
    let mut rs = RelationSet::new(format!("local skein h={:?}", disk.foliation.values()));
    for l in ells {
        let lhs = NCPolynomial::q_bracket(&x, &y.suspend(l), &one());
        let rhs = match l {
            1 => disk.arc(2, 1).mul(&disk.arc(4, h(4) + h(1))).scale(&diff),
            0 => disk.arc(1, h(1)).mul(&disk.arc(3, 1 - h(2))).scale(&-&diff),
            _ => NCPolynomial::zero(),
        };
        rs.push(Relation::new(format!("local skein l={l}"), lhs, rhs));
    }
    Ok(rs.with_oracle(psi_map(disk)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::FoliationData;

    fn e0() -> MarkedDisk {
        MarkedDisk::new(FoliationData::standard_form(), crate::freealg::Family::E)
    }

    #[test]
    fn psi_phi_examples() {
        let d = e0();
        let psi = psi_map(&d);
        assert_eq!(psi.images[&Label::e(2)], NCPolynomial::parse("z[2,-1]").unwrap());
        assert_eq!(psi.images[&Label::e(1)], NCPolynomial::parse("z[1,0]").unwrap());
        assert_eq!(psi.images[&Label::e(4)], NCPolynomial::parse("[z[3,-1], z[2,-1], z[1,-1]]_v").unwrap());
        let phi = phi_map(&d);
        assert_eq!(phi[&Label::z(1)], NCPolynomial::parse("E[1,0]").unwrap());
        assert_eq!(phi[&Label::z(3)], NCPolynomial::parse("E[3,1]").unwrap());
        assert!(inverse_check(&d).unwrap().holds());
    }

    #[test]
    fn convolution_on_standard_form() {
        let rs = minimal_disk_relations(&e0(), 0, 0);
        let r = rs.get("R2 convolution E4 n=0").unwrap();
        assert_eq!(r.lhs, NCPolynomial::parse("E[4,1]").unwrap());
        assert_eq!(r.rhs, NCPolynomial::parse("[E[3,1], E[2,1], E[1,0]]_v").unwrap());
        rs.validate().unwrap();
        let rs = minimal_disk_relations(&e0(), 0, 1);
        let r1 = rs.get("R1 E1 n=0 k=1").unwrap();
        assert_eq!(r1.lhs, NCPolynomial::parse("[E[1,0], E[1,1]]_{v^-2}").unwrap());
        assert!(rs.get("R3 E1 E3 n=0 k=1").is_some());
        assert!(rs.get("R3 E1 E2 n=0 k=1").is_none());
    }

    #[test]
    fn ladder_shape() {
        let d = MarkedDisk::with_h(vec![0, 1, 0]).unwrap();
        let rs = cyclic_family(&d, 1);
        assert_eq!(rs.len(), 2);
        assert_eq!(rs.relations[0].rhs, convolution_rhs(&d, 1));
        // last rung: [E_{2,τ⟨1⟩+1}, E_{1,h(1)}]_q = E_{3,τ⟨2⟩}
        let last = &rs.relations[1];
        assert_eq!(last.lhs, NCPolynomial::parse("[E[2,1], E[1,0]]_v").unwrap());
        assert_eq!(last.rhs, NCPolynomial::parse("E[3,0]").unwrap());
    }

    #[test]
    fn local_skein_terms() {
        let rs = local_skein_relations(&e0(), [1, 0, 2]).unwrap();
        let r = rs.get("local skein l=1").unwrap();
        assert_eq!(r.rhs, NCPolynomial::parse("(v - v^-1) E[2,1] E[4,1]").unwrap());
        assert!(rs.get("local skein l=2").unwrap().rhs.is_zero());
        assert!(local_skein_relations(&MarkedDisk::with_h(vec![1, 0, 0]).unwrap(), [0]).is_err());
    }
}
