//! Bounded complexes of indecomposable projectives and the derived-category
//! oracle built on them.
//!
//! The indecomposable projectives are `P_i = M[i,m)`. `Hom(P_s, P_t)` is one
//! dimensional when `t ≤ s` and zero otherwise, with composition given by
//! multiplying scalars, so a map between sums of projectives is just a matrix
//! with a prescribed zero pattern.

use super::derived::{dhom_dims, DerivedObject, Summand};
use super::field::{FiniteField, Fq};
use super::matrix::{Echelon, Matrix};
use super::rep::{barcode_from_ranks, Interval};
use crate::error::{Error, Result};
use crate::par::{self, Parallelism};
use num_bigint::BigUint;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// `… → C^d → C^{d+1} → …` with `C^d` a list of projective labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    lo: i32,
    terms: Vec<Vec<u32>>,
    /// `diffs[k]` maps `terms[k]` to `terms[k+1]`; shape `|C^{d+1}| × |C^d|`.
    diffs: Vec<Matrix>,
}

impl ProjComplex {
    /// The minimal projective resolution of each summand, placed in the right
    /// degrees: `M[a,b)[n]` is `P_b → P_a` in degrees `−n−1, −n`.
    pub fn from_object(x: &DerivedObject, m: usize) -> Self {
        if x.is_zero() {
            return ProjComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() };
        }
        let lo = x.summands().iter().map(|s| -s.shift - 1).min().unwrap();
        let hi = x.summands().iter().map(|s| -s.shift).max().unwrap();
        let len = (hi - lo + 1) as usize;
        let mut terms = vec![Vec::new(); len];
        let mut edges = Vec::new();
        for s in x.summands() {
            let top = (-s.shift - lo) as usize;
            terms[top].push(s.iv.a);
            let ti = terms[top].len() - 1;
            if (s.iv.b as usize) < m {
                terms[top - 1].push(s.iv.b);
                edges.push((top - 1, terms[top - 1].len() - 1, ti));
            }
        }
        let mut diffs: Vec<Matrix> =
            (0..len).map(|k| Matrix::zeros(terms.get(k + 1).map_or(0, |t| t.len()), terms[k].len())).collect();
        for (k, src, dst) in edges {
            diffs[k].set(dst, src, 1);
        }
        let mut c = ProjComplex { lo, terms, diffs };
        c.trim();
        c
    }

    pub fn term(&self, d: i32) -> &[u32] {
        let k = d - self.lo;
        if k < 0 {
            return &[];
        }
        self.terms.get(k as usize).map_or(&[], |t| t.as_slice())
    }

    /// `d^d : C^d → C^{d+1}`, or `None` when either side is empty.
    pub fn diff(&self, d: i32) -> Option<&Matrix> {
        let k = d - self.lo;
        if k < 0 {
            return None;
        }
        self.diffs.get(k as usize).filter(|m| m.rows() > 0 && m.cols() > 0)
    }

    /// Degrees with a nonzero term, as an inclusive range `(lo, hi)`.
    pub fn support(&self) -> Option<(i32, i32)> {
        if self.terms.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.terms.len() as i32 - 1))
        }
    }

    pub fn total_rank(&self) -> usize {
        self.terms.iter().map(|t| t.len()).sum()
    }

    fn trim(&mut self) {
        while self.terms.last().is_some_and(|t| t.is_empty()) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(|t| t.is_empty()) {
            self.terms.remove(0);
            self.diffs.remove(0);
            self.lo += 1;
        }
        // last differential always targets the empty term
        if let Some(last) = self.diffs.last_mut() {
            *last = Matrix::zeros(0, last.cols());
        }
    }

    /// Cancels every isomorphic component `P_i → P_i` of the differential.
    /// The result is homotopy equivalent and minimal.
    pub fn minimize(&mut self, f: &FiniteField) {
        'outer: loop {
            for k in 0..self.diffs.len().saturating_sub(1) {
                let dk = &self.diffs[k];
                for s in 0..dk.cols() {
                    for t in 0..dk.rows() {
                        if dk.get(t, s) != 0 && self.terms[k][s] == self.terms[k + 1][t] {
                            self.cancel(k, s, t, f);
                            continue 'outer;
                        }
                    }
                }
            }
            break;
        }
        self.trim();
    }

    /// Gaussian elimination of the invertible entry `(t, s)` of `diffs[k]`.
    fn cancel(&mut self, k: usize, s: usize, t: usize, f: &FiniteField) {
        let d = &self.diffs[k];
        let ainv = f.inv(d.get(t, s));
        let rows: Vec<usize> = (0..d.rows()).filter(|&r| r != t).collect();
        let cols: Vec<usize> = (0..d.cols()).filter(|&c| c != s).collect();
        let mut nd = Matrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            let g = f.mul(d.get(r, s), ainv);
            for (j, &c) in cols.iter().enumerate() {
                let mut x = d.get(r, c);
                if g != 0 {
                    x = f.sub(x, f.mul(g, d.get(t, c)));
                }
                nd.set(i, j, x);
            }
        }
        self.diffs[k] = nd;
        if k > 0 {
            self.diffs[k - 1] = drop_row(&self.diffs[k - 1], s);
        }
        self.diffs[k + 1] = drop_col(&self.diffs[k + 1], t);
        self.terms[k].remove(s);
        self.terms[k + 1].remove(t);
    }

    /// Reads off the isomorphism class from cohomology. Over a hereditary
    /// algebra every complex is the sum of its shifted cohomology modules.
    pub fn identify(&self, m: usize, f: &FiniteField) -> DerivedObject {
        let mut out = Vec::new();
        let Some((lo, hi)) = self.support() else { return DerivedObject::zero() };
        let top = m as u32 - 1;
        for d in lo..=hi {
            let here = self.term(d);
            if here.is_empty() {
                continue;
            }
            let next = self.term(d + 1);
            let prev = self.term(d - 1);
            // per vertex: cycles and boundaries in the coordinates {k : here[k] ≤ v}
            let mut cycles: Vec<Vec<Vec<Fq>>> = Vec::with_capacity(top as usize + 1);
            let mut bounds: Vec<Echelon> = Vec::with_capacity(top as usize + 1);
            let mut coords: Vec<Vec<usize>> = Vec::with_capacity(top as usize + 1);
            cycles.push(Vec::new());
            bounds.push(Echelon::new(0));
            coords.push(Vec::new());
            for v in 1..=top {
                let cols: Vec<usize> = (0..here.len()).filter(|&k| here[k] <= v).collect();
                let rows: Vec<usize> = (0..next.len()).filter(|&k| next[k] <= v).collect();
                let z = match self.diff(d) {
                    Some(dm) if !rows.is_empty() => submatrix(dm, &rows, &cols).nullspace(f),
                    _ => unit_basis(cols.len()),
                };
                let mut b = Echelon::new(cols.len());
                if let Some(dm) = self.diff(d - 1) {
                    let pcols: Vec<usize> = (0..prev.len()).filter(|&k| prev[k] <= v).collect();
                    let sub = submatrix(dm, &cols, &pcols);
                    for j in 0..pcols.len() {
                        let col: Vec<Fq> = (0..cols.len()).map(|i| sub.get(i, j)).collect();
                        b.insert(&col, f);
                    }
                }
                cycles.push(z);
                bounds.push(b);
                coords.push(cols);
            }
            let rank = |i: u32, j: u32| -> usize {
                let (ci, cj) = (&coords[i as usize], &coords[j as usize]);
                let mut e = bounds[j as usize].clone();
                let base = e.dim();
                for z in &cycles[i as usize] {
                    let mut w = vec![0; cj.len()];
                    // coordinates at vertex i are a prefix-compatible subset of those at j
                    for (a, &k) in ci.iter().enumerate() {
                        let pos = cj.binary_search(&k).expect("coordinate inclusion");
                        w[pos] = z[a];
                    }
                    e.insert(&w, f);
                }
                e.dim() - base
            };
            for iv in barcode_from_ranks(m, rank) {
                out.push(Summand { iv, shift: -d });
            }
        }
        DerivedObject::new(out)
    }
}

fn unit_basis(n: usize) -> Vec<Vec<Fq>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()
}

fn submatrix(m: &Matrix, rows: &[usize], cols: &[usize]) -> Matrix {
    let mut out = Matrix::zeros(rows.len(), cols.len());
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            out.set(i, j, m.get(r, c));
        }
    }
    out
}

fn drop_row(m: &Matrix, r: usize) -> Matrix {
    let rows: Vec<usize> = (0..m.rows()).filter(|&i| i != r).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    submatrix(m, &rows, &cols)
}

fn drop_col(m: &Matrix, c: usize) -> Matrix {
    let rows: Vec<usize> = (0..m.rows()).collect();
    let cols: Vec<usize> = (0..m.cols()).filter(|&j| j != c).collect();
    submatrix(m, &rows, &cols)
}

/// One coordinate of a chain map: the entry `(t, s)` of `f^deg`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Var {
    deg: i32,
    t: usize,
    s: usize,
}

/// `Hom_{K}(X, L)` in degree 0: chain maps modulo null-homotopic ones, with
/// a fixed set of representatives for a basis of the quotient.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Arc<ProjComplex>,
    target: Arc<ProjComplex>,
    vars: Vec<Var>,
    basis: Vec<Vec<Fq>>,
}

/// A chain map `X → L`, stored per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub components: BTreeMap<i32, Matrix>,
}

impl HomSpace {
    pub fn new(source: Arc<ProjComplex>, target: Arc<ProjComplex>, f: &FiniteField) -> Self {
        let (x, l) = (&*source, &*target);
        let degrees = hull(x, l);
        let mut vars = Vec::new();
        let mut index = HashMap::new();
        for d in degrees.clone() {
            for (t, &pt) in l.term(d).iter().enumerate() {
                for (s, &ps) in x.term(d).iter().enumerate() {
                    if pt <= ps {
                        index.insert((d, t, s), vars.len());
                        vars.push(Var { deg: d, t, s });
                    }
                }
            }
        }
        let n = vars.len();
        // chain condition d_L f^d − f^{d+1} d_X = 0, entry (t ∈ L^{d+1}, s ∈ X^d)
        let mut eqs: Vec<Vec<Fq>> = Vec::new();
        for d in degrees.clone() {
            let (xd, ld1) = (x.term(d), l.term(d + 1));
            for (t, &pt) in ld1.iter().enumerate() {
                for (s, &ps) in xd.iter().enumerate() {
                    if pt > ps {
                        continue;
                    }
                    let mut row = vec![0; n];
                    if let Some(dl) = l.diff(d) {
                        for u in 0..l.term(d).len() {
                            let c = dl.get(t, u);
                            if c != 0 {
                                if let Some(&i) = index.get(&(d, u, s)) {
                                    row[i] = f.add(row[i], c);
                                }
                            }
                        }
                    }
                    if let Some(dx) = x.diff(d) {
                        for w in 0..x.term(d + 1).len() {
                            let c = dx.get(w, s);
                            if c != 0 {
                                if let Some(&i) = index.get(&(d + 1, t, w)) {
                                    row[i] = f.sub(row[i], c);
                                }
                            }
                        }
                    }
                    if row.iter().any(|&c| c != 0) {
                        eqs.push(row);
                    }
                }
            }
        }
        let cycles =
            if eqs.is_empty() { unit_basis(n) } else { Matrix::from_rows(eqs.len(), n, eqs.concat()).nullspace(f) };
        // null-homotopic maps: images of the unit homotopies h^d: X^d → L^{d−1}
        let mut bounds = Echelon::new(n);
        for d in degrees {
            for (t, &pt) in l.term(d - 1).iter().enumerate() {
                for (s, &ps) in x.term(d).iter().enumerate() {
                    if pt > ps {
                        continue;
                    }
                    let mut img = vec![0; n];
                    if let Some(dl) = l.diff(d - 1) {
                        for u in 0..l.term(d).len() {
                            let c = dl.get(u, t);
                            if c != 0 {
                                let i = index[&(d, u, s)];
                                img[i] = f.add(img[i], c);
                            }
                        }
                    }
                    if let Some(dx) = x.diff(d - 1) {
                        for w in 0..x.term(d - 1).len() {
                            let c = dx.get(s, w);
                            if c != 0 {
                                let i = index[&(d - 1, t, w)];
                                img[i] = f.add(img[i], c);
                            }
                        }
                    }
                    bounds.insert(&img, f);
                }
            }
        }
        let mut basis = Vec::new();
        for z in cycles {
            if bounds.insert(&z, f) {
                basis.push(z);
            }
        }
        HomSpace { source, target, vars, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn source(&self) -> &ProjComplex {
        &self.source
    }

    pub fn target(&self) -> &ProjComplex {
        &self.target
    }

    /// Number of classes, `q^dim`.
    pub fn count(&self, f: &FiniteField) -> u64 {
        (f.size() as u64).pow(self.dim() as u32)
    }

    /// Coefficients of the `idx`-th class in base `q`.
    pub fn coefficients(&self, idx: u64, f: &FiniteField) -> Vec<Fq> {
        let q = f.size() as u64;
        let mut r = idx;
        (0..self.dim())
            .map(|_| {
                let c = (r % q) as Fq;
                r /= q;
                c
            })
            .collect()
    }

    fn combine(&self, coeffs: &[Fq], f: &FiniteField) -> Vec<Fq> {
        let mut v = vec![0; self.vars.len()];
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if *c == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                if *y != 0 {
                    *x = f.add(*x, f.mul(*c, *y));
                }
            }
        }
        v
    }

    pub fn chain_map(&self, coeffs: &[Fq], f: &FiniteField) -> ChainMap {
        let v = self.combine(coeffs, f);
        let mut components: BTreeMap<i32, Matrix> = BTreeMap::new();
        for (var, &c) in self.vars.iter().zip(&v) {
            let m = components
                .entry(var.deg)
                .or_insert_with(|| Matrix::zeros(self.target.term(var.deg).len(), self.source.term(var.deg).len()));
            m.set(var.t, var.s, c);
        }
        ChainMap { components }
    }

    /// `cone(f)` for the class with the given coefficients, unminimized.
    pub fn cone_complex(&self, coeffs: &[Fq], f: &FiniteField) -> ProjComplex {
        let v = self.combine(coeffs, f);
        let (x, l) = (&*self.source, &*self.target);
        let (lo, hi) = match (x.support(), l.support()) {
            (None, None) => return ProjComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() },
            (Some((a, b)), None) => (a - 1, b - 1),
            (None, Some((a, b))) => (a, b),
            (Some((a, b)), Some((c, d))) => ((a - 1).min(c), (b - 1).max(d)),
        };
        // Cone^d = X^{d+1} ⊕ L^d, differential [[−d_X, 0], [f, d_L]]
        let mut terms = Vec::new();
        for d in lo..=hi {
            let mut t = x.term(d + 1).to_vec();
            t.extend_from_slice(l.term(d));
            terms.push(t);
        }
        let mut diffs = Vec::new();
        for d in lo..=hi {
            let (nx1, nl) = (x.term(d + 1).len(), l.term(d).len());
            let (nx2, nl1) = (x.term(d + 2).len(), l.term(d + 1).len());
            let mut m = Matrix::zeros(nx2 + nl1, nx1 + nl);
            if let Some(dx) = x.diff(d + 1) {
                for i in 0..nx2 {
                    for j in 0..nx1 {
                        m.set(i, j, f.neg(dx.get(i, j)));
                    }
                }
            }
            if let Some(dl) = l.diff(d) {
                for i in 0..nl1 {
                    for j in 0..nl {
                        m.set(nx2 + i, nx1 + j, dl.get(i, j));
                    }
                }
            }
            diffs.push(m);
        }
        for (var, &c) in self.vars.iter().zip(&v) {
            if c != 0 {
                // f^{deg} sits in the cone differential of degree deg − 1
                let k = (var.deg - 1 - lo) as usize;
                let nx = x.term(var.deg + 1).len();
                diffs[k].set(nx + var.t, var.s, c);
            }
        }
        let mut c = ProjComplex { lo, terms, diffs };
        c.trim();
        c
    }
}

fn hull(x: &ProjComplex, l: &ProjComplex) -> std::ops::RangeInclusive<i32> {
    match (x.support(), l.support()) {
        (Some((a, b)), Some((c, d))) => a.min(c) - 1..=b.max(d) + 1,
        #[allow(clippy::reversed_empty_ranges)]
        _ => 1..=0,
    }
}

/// `D^b(rep_𝔽q A_{m−1})` with linear orientation `i → i+1`.
#[derive(Clone, Debug)]
pub struct DerivedCategory {
    m: usize,
    field: FiniteField,
}

impl DerivedCategory {
    pub fn new(m: usize, q: u64) -> Result<Self> {
        Self::with_field(m, FiniteField::new(q)?)
    }

    pub fn with_field(m: usize, field: FiniteField) -> Result<Self> {
        if m < 2 {
            return Err(Error::Config(format!("need m >= 2, got {m}")));
        }
        Ok(DerivedCategory { m, field })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.size() as u64
    }

    pub fn complex(&self, x: &DerivedObject) -> ProjComplex {
        ProjComplex::from_object(x, self.m)
    }

    /// `Hom(X, Y)` in degree 0.
    pub fn hom_space(&self, x: &DerivedObject, y: &DerivedObject) -> HomSpace {
        HomSpace::new(Arc::new(self.complex(x)), Arc::new(self.complex(y)), &self.field)
    }

    pub fn cone(&self, h: &HomSpace, coeffs: &[Fq]) -> DerivedObject {
        let mut c = h.cone_complex(coeffs, &self.field);
        c.minimize(&self.field);
        c.identify(self.m, &self.field)
    }

    /// Isomorphism class of `cone(f)` for every `f ∈ Hom(X, L)`, tallied.
    pub fn cone_distribution(
        &self,
        x: &DerivedObject,
        l: &DerivedObject,
        p: Parallelism,
    ) -> BTreeMap<DerivedObject, u64> {
        let h = self.hom_space(x, l);
        let f = &self.field;
        let tally = par::fold_range(
            p,
            h.count(f),
            HashMap::<DerivedObject, u64>::new,
            |mut acc, i| {
                *acc.entry(self.cone(&h, &h.coefficients(i, f))).or_insert(0) += 1;
                acc
            },
            |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            },
        );
        tally.into_iter().collect()
    }

    /// `|Aut X| = q^{dim End X − Σ m_i²} · Π |GL_{m_i}(𝔽_q)|`, where `m_i` are
    /// the multiplicities of the indecomposable summands.
    pub fn aut_count(&self, x: &DerivedObject) -> BigUint {
        let q = BigUint::from(self.q());
        let end = dhom_dims(x, x).get(&0).copied().unwrap_or(0);
        let mults = x.multiplicities();
        let sq: usize = mults.iter().map(|(_, k)| k * k).sum();
        let mut out = q.pow((end - sq) as u32);
        for (_, k) in mults {
            out *= gl_order(&q, k);
        }
        out
    }

    /// `|Aut X|` by counting endomorphisms with zero cone.
    pub fn aut_count_enumerated(&self, x: &DerivedObject, p: Parallelism) -> u64 {
        self.cone_distribution(x, x, p).get(&DerivedObject::zero()).copied().unwrap_or(0)
    }
}

/// `|GL_k(𝔽_q)| = Π_{i<k} (q^k − q^i)`.
pub fn gl_order(q: &BigUint, k: usize) -> BigUint {
    let qk = q.pow(k as u32);
    (0..k).map(|i| &qk - q.pow(i as u32)).product()
}

/// Convenience for tests and examples: every indecomposable `M[a,b)[n]` with
/// `n` in the given range.
pub fn indecomposables(m: usize, shifts: std::ops::RangeInclusive<i32>) -> Vec<DerivedObject> {
    let mut out = Vec::new();
    for n in shifts {
        for a in 1..m as u32 {
            for b in a + 1..=m as u32 {
                out.push(DerivedObject::single(a, b, n));
            }
        }
    }
    out
}

impl Interval {
    /// `P_a` when `b = m`.
    pub fn is_projective(&self, m: usize) -> bool {
        self.b as usize == m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obj(s: &str) -> DerivedObject {
        DerivedObject::parse(s).unwrap()
    }

    #[test]
    fn resolutions_are_minimal_and_identify_back() {
        let dc = DerivedCategory::new(5, 2).unwrap();
        for x in indecomposables(5, -1..=1) {
            let c = dc.complex(&x);
            let mut c2 = c.clone();
            c2.minimize(dc.field());
            assert_eq!(c, c2);
            assert_eq!(c.identify(5, dc.field()), x);
        }
        let x = obj("M[1,3)[1] + M[2,4) + M[2,4) + M[3,5)[-1]");
        assert_eq!(dc.complex(&x).identify(5, dc.field()), x);
    }

    #[test]
    fn hom_dims_match_closed_forms() {
        for q in [2, 3] {
            let dc = DerivedCategory::new(4, q).unwrap();
            let ind = indecomposables(4, -1..=1);
            for x in &ind {
                for y in &ind {
                    let want = dhom_dims(x, y).get(&0).copied().unwrap_or(0);
                    assert_eq!(dc.hom_space(x, y).dim(), want, "{x} -> {y}");
                }
            }
        }
    }

    #[test]
    fn cones_of_simple_extensions() {
        let dc = DerivedCategory::new(3, 3).unwrap();
        // S2 → M[1,3) → S1 → S2[1]: the nonzero map S1 → S2[1] has cone M[1,3)[1]
        let dist = dc.cone_distribution(&obj("M[1,2)"), &obj("M[2,3)[1]"), Parallelism::Sequential);
        assert_eq!(dist.get(&obj("M[1,3)[1]")), Some(&2));
        assert_eq!(dist.get(&obj("M[1,2)[1] + M[2,3)[1]")), Some(&1));
        // S2 ↪ M[1,3) has cokernel S1
        let dist = dc.cone_distribution(&obj("M[2,3)"), &obj("M[1,3)"), Parallelism::Sequential);
        assert_eq!(dist.get(&obj("M[1,2)")), Some(&2));
    }

    #[test]
    fn aut_counts_agree() {
        for q in [2, 3] {
            let dc = DerivedCategory::new(3, q).unwrap();
            for s in ["M[1,2)", "M[1,2) + M[1,2)", "M[1,3) + M[2,3)", "M[1,2) + M[2,3)[1]", "M[1,3) + M[1,2) + M[2,3)"]
            {
                let x = obj(s);
                let formula = dc.aut_count(&x);
                let counted = dc.aut_count_enumerated(&x, Parallelism::Sequential);
                assert_eq!(formula, BigUint::from(counted), "{s} at q={q}");
            }
        }
    }
}
