use super::relset::{OracleMap, RelationSet};
use crate::error::{Error, Result};
use crate::freealg::{zab, Family, Generator, Label, NCPolynomial, Relation};
use crate::scalar::RationalFunctionV;
use std::collections::BTreeMap;

fn v_pow(k: i64) -> RationalFunctionV {
    RationalFunctionV::v_pow(k)
}

fn f(i: u32, j: u32) -> NCPolynomial {
    NCPolynomial::gen(Generator::new(Label::pbw(i, j), 0))
}

/// `F_{i₁,j₁} F_{i₂,j₂} ⋯`.
pub fn pbw_word(pairs: &[(u32, u32)]) -> NCPolynomial {
    NCPolynomial::word(pairs.iter().map(|&(i, j)| Generator::new(Label::pbw(i, j), 0)).collect())
}

/// The PBW presentation on `F_{i,j}`, `1 ≤ i < j ≤ m`, written in the
/// quantum-group variable `v`. The oracle map sends `F_{i,j} ↦ z_{(i,j),0}`
/// and `v ↦ v^{−1}`.
pub fn pbw_relations(m: usize) -> RelationSet {
    let mu = m as u32;
    let mut rs = RelationSet::new(format!("pbw m={m}"));
    let one = RationalFunctionV::one();
    let vinv = v_pow(-1);
    let c = &vinv - &v_pow(1);
    for a in 1..=mu {
        for b in a + 1..=mu {
            for cc in b + 1..=mu {
                for d in cc + 1..=mu {
                    let t = format!("({a},{b},{cc},{d})");
                    let lhs = NCPolynomial::q_bracket(&f(a, cc), &f(b, d), &one);
                    rs.push(Relation::new(format!("Ls a {t}"), lhs, f(a, d).mul(&f(b, cc)).scale(&c)));
                    let lhs = NCPolynomial::q_bracket(&f(a, b), &f(cc, d), &one);
                    rs.push(Relation::new(format!("Ls b {t}"), lhs, NCPolynomial::zero()));
                    let lhs = NCPolynomial::q_bracket(&f(a, d), &f(b, cc), &one);
                    rs.push(Relation::new(format!("Ls c {t}"), lhs, NCPolynomial::zero()));
                }
                let t = format!("({a},{b},{cc})");
                let lhs = NCPolynomial::q_bracket(&f(b, cc), &f(a, b), &vinv);
                rs.push(Relation::new(format!("Ls d {t}"), lhs, f(a, cc)));
                let lhs = NCPolynomial::q_bracket(&f(a, cc), &f(b, cc), &vinv);
                rs.push(Relation::new(format!("Ls e {t}"), lhs, NCPolynomial::zero()));
                // The mirror image of (e); the opposite bracket order fails
                // in the Hall algebra.
                let lhs = NCPolynomial::q_bracket(&f(a, b), &f(a, cc), &vinv);
                rs.push(Relation::new(format!("Ls f {t}"), lhs, NCPolynomial::zero()));
            }
        }
    }
    let mut o = OracleMap::new(m);
    o.invert_v = true;
    for i in 1..=mu {
        for j in i + 1..=mu {
            o.images.insert(Label::pbw(i, j), zab(i, j, 0, mu).expect("ordered pair"));
        }
    }
    rs.with_oracle(o)
}

/// Which out-of-order adjacent pair to rewrite first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RewriteOrder {
    #[default]
    Rightmost,
    Leftmost,
}

type Key = (u32, u32);

/// `XY` for `X > Y` as a combination of words, each either `YX` or shorter
/// or with the pair already sorted.
fn swap(x: Key, y: Key) -> Vec<(Vec<Key>, RationalFunctionV)> {
    let ((i, j), (k, l)) = (y, x);
    let yx = vec![y, x];
    let one = RationalFunctionV::one();
    if i == k || j == l {
        return vec![(yx, v_pow(1))];
    }
    if j == k {
        return vec![(yx, v_pow(-1)), (vec![(i, l)], one)];
    }
    if k < j && j < l {
        let c = &v_pow(1) - &v_pow(-1);
        return vec![(yx, one), (vec![(i, l), (k, j)], c)];
    }
    vec![(yx, one)]
}

fn inversion(w: &[Key], order: RewriteOrder) -> Option<usize> {
    let mut it = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]);
    match order {
        RewriteOrder::Leftmost => it.next(),
        RewriteOrder::Rightmost => it.next_back(),
    }
}

/// Rewrites a polynomial in the `F_{i,j}` into lexicographically ordered
/// monomials.
pub fn pbw_normal_form(p: &NCPolynomial, order: RewriteOrder) -> Result<NCPolynomial> {
    let mut work: BTreeMap<Vec<Key>, RationalFunctionV> = BTreeMap::new();
    for (w, c) in p.terms() {
        let mut key = Vec::with_capacity(w.len());
        for g in w {
            if g.label.family != Family::Pbw || g.shift != 0 || g.label.index >= g.label.aux {
                return Err(Error::Parse(format!("{g} is not a PBW generator")));
            }
            key.push((g.label.index, g.label.aux));
        }
        work.insert(key, c.clone());
    }
    let mut done: Vec<(Vec<Key>, RationalFunctionV)> = Vec::new();
    while let Some((w, c)) = work.pop_first() {
        let Some(pos) = inversion(&w, order) else {
            done.push((w, c));
            continue;
        };
        for (mid, d) in swap(w[pos], w[pos + 1]) {
            let mut nw = w[..pos].to_vec();
            nw.extend(mid);
            nw.extend_from_slice(&w[pos + 2..]);
            let coeff = &c * &d;
            let e = work.entry(nw).or_insert_with(RationalFunctionV::zero);
            *e = &*e + &coeff;
        }
        work.retain(|_, c| !c.is_zero());
    }
    Ok(NCPolynomial::from_terms(
        done.into_iter().map(|(w, c)| (w.into_iter().map(|(i, j)| Generator::new(Label::pbw(i, j), 0)).collect(), c)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_examples() {
        let rs = pbw_relations(4);
        rs.validate().unwrap();
        let a = rs.get("Ls a (1,2,3,4)").unwrap();
        assert_eq!(a.lhs, NCPolynomial::parse("[P[1,3], P[2,4]]_1").unwrap());
        assert_eq!(a.rhs, NCPolynomial::parse("(v^-1 - v) P[1,4] P[2,3]").unwrap());
        let d = rs.get("Ls d (1,2,3)").unwrap();
        assert_eq!(d.lhs, NCPolynomial::parse("[P[2,3], P[1,2]]_{v^-1}").unwrap());
        assert_eq!(d.rhs, NCPolynomial::parse("P[1,3]").unwrap());
        assert!(rs.get("Ls b (1,2,3,4)").unwrap().rhs.is_zero());
        assert_eq!(rs.len(), 3 + 4 * 3);
    }

    #[test]
    fn normal_form_examples() {
        let nf = |w: &[(u32, u32)]| pbw_normal_form(&pbw_word(w), RewriteOrder::Rightmost).unwrap();
        assert_eq!(nf(&[(3, 4), (1, 2)]), pbw_word(&[(1, 2), (3, 4)]));
        let want = NCPolynomial::parse("P[1,3] P[2,4] + (v - v^-1) P[1,4] P[2,3]").unwrap();
        assert_eq!(nf(&[(2, 4), (1, 3)]), want);
        assert_eq!(nf(&[(2, 3), (1, 2)]), NCPolynomial::parse("v^-1 P[1,2] P[2,3] + P[1,3]").unwrap());
        let sorted = pbw_word(&[(1, 2), (1, 3), (2, 4)]);
        assert_eq!(pbw_normal_form(&sorted, RewriteOrder::Leftmost).unwrap(), sorted);
        assert!(pbw_normal_form(&NCPolynomial::parse("z[1,0]").unwrap(), RewriteOrder::Rightmost).is_err());
    }

    #[test]
    fn rewrite_order_does_not_matter() {
        let keys: Vec<Key> = (1..=4).flat_map(|i| (i + 1..=4).map(move |j| (i, j))).collect();
        for &x in &keys {
            for &y in &keys {
                for &z in &keys {
                    let w = pbw_word(&[x, y, z]);
                    let r = pbw_normal_form(&w, RewriteOrder::Rightmost).unwrap();
                    let l = pbw_normal_form(&w, RewriteOrder::Leftmost).unwrap();
                    assert_eq!(r, l, "{w}");
                }
            }
        }
    }
}
