use super::relset::{OracleMap, RelationSet};
use crate::freealg::{qp, qp_pow, Generator, NCPolynomial, Relation};
use crate::scalar::RationalFunctionV;
use crate::surface::GradedChord;

fn z(i: u32, n: i32) -> NCPolynomial {
    NCPolynomial::gen(Generator::z(i, n))
}

fn chord(a: u32, b: u32, n: i32) -> NCPolynomial {
    GradedChord { a, b, shift: n }.element()
}

/// `q^{−1}/(q² − 1)`.
pub fn self_extension_constant() -> NCPolynomial {
    let q = qp();
    let den = &(&q * &q) - &RationalFunctionV::one();
    NCPolynomial::scalar((&qp_pow(-1) / &den).expect("q² ≠ 1"))
}

fn one() -> RationalFunctionV {
    RationalFunctionV::one()
}

/// Entry `i·j` of the Cartan matrix of type A.
pub fn cartan(i: u32, j: u32) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

/// The quiver presentation on `z_{i,n}`, `1 ≤ i < m`, with every shift in
/// `lo..=hi`: commutation and Serre relations at equal shift, and
/// `[z_{i,n}, z_{j,n+k}]_{q^{(−1)^k i·j}} = δ_{ij} δ_{k1} q^{−1}/(q²−1)` for `k ≥ 1`.
pub fn quiver_relations(m: usize, lo: i32, hi: i32) -> RelationSet {
    let mut rs = RelationSet::new(format!("quiver m={m} shifts={lo}..{hi}"));
    let r = m as u32;
    let q = qp();
    let q_plus = &q + &qp_pow(-1);
    for n in lo..=hi {
        for i in 1..r {
            for j in 1..r {
                if i.abs_diff(j) >= 2 && i < j {
                    let lhs = NCPolynomial::q_bracket(&z(i, n), &z(j, n), &one());
                    rs.push(Relation::new(format!("H1 [z{i},z{j}] n={n}"), lhs, NCPolynomial::zero()));
                }
                if i.abs_diff(j) == 1 {
                    let (zi, zj) = (z(i, n), z(j, n));
                    let lhs = zi.mul(&zi).mul(&zj).sub(&zi.mul(&zj).mul(&zi).scale(&q_plus)).add(&zj.mul(&zi).mul(&zi));
                    rs.push(Relation::new(format!("H1 serre i={i} j={j} n={n}"), lhs, NCPolynomial::zero()));
                }
            }
        }
    }
    for n in lo..=hi {
        for k in 1..=hi - n {
            for i in 1..r {
                for j in 1..r {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let f = qp_pow(sign * cartan(i, j));
                    let lhs = NCPolynomial::q_bracket(&z(i, n), &z(j, n + k), &f);
                    let rhs = if i == j && k == 1 { self_extension_constant() } else { NCPolynomial::zero() };
                    let fam = if k == 1 { "H2" } else { "H3" };
                    rs.push(Relation::new(format!("{fam} i={i} j={j} n={n} k={k}"), lhs, rhs));
                }
            }
        }
    }
    rs.with_oracle(OracleMap::identity(m))
}

/// The arc relations among `z_{(a,b),n}`, `1 ≤ a < b < c < d ≤ m`, with all
/// shifts in `lo..=hi`.
pub fn s_relations(m: usize, lo: i32, hi: i32) -> RelationSet {
    let mut rs = RelationSet::new(format!("arcs m={m} shifts={lo}..{hi}"));
    let mu = m as u32;
    let q = qp();
    let win = |n: i32| (lo..=hi).contains(&n);
    let triples = (1..=mu).flat_map(|a| (a + 1..=mu).flat_map(move |b| (b + 1..=mu).map(move |c| (a, b, c))));
    for (a, b, c) in triples {
        for n in lo..=hi {
            let lhs = NCPolynomial::q_bracket(&chord(b, c, n), &chord(a, b, n), &q);
            rs.push(Relation::new(format!("S0 ({a},{b},{c}) n={n}"), lhs, chord(a, c, n)));
            if win(n - 1) {
                let lhs = NCPolynomial::q_bracket(&chord(a, c, n), &chord(b, c, n - 1), &q);
                rs.push(Relation::new(format!("S1 ({a},{b},{c}) n={n}"), lhs, chord(a, b, n)));
            }
            if win(n + 1) {
                let lhs = NCPolynomial::q_bracket(&chord(a, b, n + 1), &chord(a, c, n), &q);
                rs.push(Relation::new(format!("S1' ({a},{b},{c}) n={n}"), lhs, chord(b, c, n)));
            }
        }
    }
    for a in 1..=mu {
        for b in a + 1..=mu {
            for c in b + 1..=mu {
                for d in c + 1..=mu {
                    for n in lo..=hi {
                        if win(n - 1) {
                            let lhs = NCPolynomial::q_bracket(&chord(a, d, n), &chord(b, c, n - 1), &one());
                            rs.push(Relation::new(format!("S2 ({a},{b},{c},{d}) n={n}"), lhs, NCPolynomial::zero()));
                        }
                        for k in lo..=hi {
                            let lhs = NCPolynomial::q_bracket(&chord(a, b, n), &chord(c, d, k), &one());
                            rs.push(Relation::new(
                                format!("S3 ({a},{b},{c},{d}) n={n} k={k}"),
                                lhs,
                                NCPolynomial::zero(),
                            ));
                        }
                    }
                }
            }
        }
    }
    for a in 1..=mu {
        for b in a + 1..=mu {
            for n in lo..=hi {
                for k in 1..=hi - n {
                    let f = qp_pow(if k % 2 == 0 { 2 } else { -2 });
                    let lhs = NCPolynomial::q_bracket(&chord(a, b, n), &chord(a, b, n + k), &f);
                    let rhs = if k == 1 { self_extension_constant() } else { NCPolynomial::zero() };
                    rs.push(Relation::new(format!("S4 ({a},{b}) n={n} k={k}"), lhs, rhs));
                }
            }
        }
    }
    rs.with_oracle(OracleMap::identity(m))
}
