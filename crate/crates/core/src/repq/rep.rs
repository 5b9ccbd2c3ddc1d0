//! Representations of the linearly oriented quiver A_{m−1}: vertices 1..m−1,
//! arrows i → i+1.

use super::field::{FiniteField, Fq};
use super::matrix::{Echelon, Matrix};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The indecomposable `M[a,b)`, supported on vertices `a..b−1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub a: u32,
    pub b: u32,
}

impl Interval {
    pub fn new(a: u32, b: u32, m: usize) -> Result<Self> {
        if a >= 1 && a < b && b as usize <= m {
            Ok(Interval { a, b })
        } else {
            Err(Error::InvalidInterval { a: a as i64, b: b as i64, m })
        }
    }

    /// The simple `S_i = M[i, i+1)`.
    pub fn simple(i: u32) -> Self {
        Interval { a: i, b: i + 1 }
    }

    pub fn contains(&self, v: u32) -> bool {
        self.a <= v && v < self.b
    }

    pub fn rep(&self, m: usize) -> QuiverRep {
        QuiverRep::from_intervals(m, &[*self])
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{},{})", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    m: usize,
    dims: Vec<usize>,
    arrows: Vec<Matrix>,
}

impl QuiverRep {
    /// `dims[v−1]` is the dimension at vertex v; `arrows[v−1]` is the map at
    /// the arrow v → v+1, shaped `dims[v] × dims[v−1]`.
    pub fn new(m: usize, dims: Vec<usize>, arrows: Vec<Matrix>) -> Result<Self> {
        if m < 2 || dims.len() != m - 1 || arrows.len() != m - 2 {
            return Err(Error::Mismatch(format!("A_{} representation needs {} vertices", m - 1, m - 1)));
        }
        for (i, a) in arrows.iter().enumerate() {
            if a.rows() != dims[i + 1] || a.cols() != dims[i] {
                return Err(Error::Mismatch(format!("arrow {} has shape {}x{}", i + 1, a.rows(), a.cols())));
            }
        }
        Ok(QuiverRep { m, dims, arrows })
    }

    pub fn zero(m: usize) -> Self {
        let dims = vec![0; m - 1];
        let arrows = (0..m.saturating_sub(2)).map(|_| Matrix::zeros(0, 0)).collect();
        QuiverRep { m, dims, arrows }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Dimension at vertex `v` (1-based); zero outside `1..m−1`.
    pub fn dim_at(&self, v: u32) -> usize {
        if v >= 1 && (v as usize) < self.m {
            self.dims[v as usize - 1]
        } else {
            0
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Map at the arrow `v → v+1`.
    pub fn arrow(&self, v: u32) -> &Matrix {
        &self.arrows[v as usize - 1]
    }

    pub fn arrows(&self) -> &[Matrix] {
        &self.arrows
    }

    /// Direct sum of interval modules, in the given order.
    pub fn from_intervals(m: usize, ivs: &[Interval]) -> Self {
        let reps: Vec<QuiverRep> = ivs.iter().map(|iv| Self::single_interval(m, *iv)).collect();
        Self::direct_sum(m, &reps)
    }

    fn single_interval(m: usize, iv: Interval) -> Self {
        let dims: Vec<usize> = (1..m as u32).map(|v| iv.contains(v) as usize).collect();
        let arrows = (1..m as u32 - 1)
            .map(|v| {
                let mut a = Matrix::zeros(dims[v as usize], dims[v as usize - 1]);
                if iv.contains(v) && iv.contains(v + 1) {
                    a.set(0, 0, 1);
                }
                a
            })
            .collect();
        QuiverRep { m, dims, arrows }
    }

    pub fn direct_sum(m: usize, reps: &[QuiverRep]) -> Self {
        let mut out = Self::zero(m);
        for r in reps {
            out = out.sum2(r);
        }
        out
    }

    fn sum2(&self, o: &QuiverRep) -> QuiverRep {
        let dims: Vec<usize> = self.dims.iter().zip(&o.dims).map(|(a, b)| a + b).collect();
        let arrows = self
            .arrows
            .iter()
            .zip(&o.arrows)
            .enumerate()
            .map(|(i, (x, y))| {
                let mut a = Matrix::zeros(dims[i + 1], dims[i]);
                for r in 0..x.rows() {
                    for c in 0..x.cols() {
                        a.set(r, c, x.get(r, c));
                    }
                }
                for r in 0..y.rows() {
                    for c in 0..y.cols() {
                        a.set(self.dims[i + 1] + r, self.dims[i] + c, y.get(r, c));
                    }
                }
                a
            })
            .collect();
        QuiverRep { m: self.m, dims, arrows }
    }

    /// Conjugates by invertible matrices `g[v−1]` at each vertex:
    /// arrow `v → v+1` becomes `g_{v+1} · A · g_v^{−1}`.
    pub fn base_change(&self, g: &[Matrix], f: &FiniteField) -> Result<QuiverRep> {
        if g.len() != self.dims.len() {
            return Err(Error::Mismatch("one base change per vertex".into()));
        }
        let invs = g
            .iter()
            .map(|x| inverse(x, f).ok_or_else(|| Error::Mismatch("singular base change".into())))
            .collect::<Result<Vec<_>>>()?;
        let arrows = self.arrows.iter().enumerate().map(|(i, a)| g[i + 1].mul(a, f).mul(&invs[i], f)).collect();
        Ok(QuiverRep { m: self.m, dims: self.dims.clone(), arrows })
    }

    /// Composite arrow map from vertex `i` to vertex `j ≥ i`.
    pub fn composite(&self, i: u32, j: u32, f: &FiniteField) -> Matrix {
        let mut acc = Matrix::identity(self.dim_at(i));
        for v in i..j {
            acc = self.arrow(v).mul(&acc, f);
        }
        acc
    }
}

/// Inverse of a square matrix, if it exists.
pub fn inverse(a: &Matrix, f: &FiniteField) -> Option<Matrix> {
    let n = a.rows();
    if a.cols() != n {
        return None;
    }
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j));
        }
        aug.set(i, n + i, 1);
    }
    let piv = aug.rref(f);
    if (0..n).any(|i| piv.get(i) != Some(&i)) {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, aug.get(i, n + j));
        }
    }
    Some(inv)
}

/// Linear map `δ : ⊕_v Hom(M_v, N_v) → ⊕_{v→v+1} Hom(M_v, N_{v+1})`,
/// `δ(φ) = N_α φ_v − φ_{v+1} M_α`. Hom is its kernel, Ext¹ its cokernel.
struct Standard {
    /// Offsets of the per-vertex unknown blocks.
    src_off: Vec<usize>,
    src_dim: usize,
    tgt_off: Vec<usize>,
    tgt_dim: usize,
    delta: Matrix,
}

fn standard_complex(mr: &QuiverRep, nr: &QuiverRep, f: &FiniteField) -> Result<Standard> {
    if mr.m != nr.m {
        return Err(Error::Mismatch(format!("m = {} vs m = {}", mr.m, nr.m)));
    }
    let nv = mr.dims.len();
    let mut src_off = Vec::with_capacity(nv);
    let mut acc = 0;
    for v in 0..nv {
        src_off.push(acc);
        acc += nr.dims[v] * mr.dims[v];
    }
    let src_dim = acc;
    let mut tgt_off = Vec::new();
    acc = 0;
    for v in 0..nv.saturating_sub(1) {
        tgt_off.push(acc);
        acc += nr.dims[v + 1] * mr.dims[v];
    }
    let tgt_dim = acc;
    let mut delta = Matrix::zeros(tgt_dim, src_dim);
    for v in 0..nv.saturating_sub(1) {
        let (na, ma) = (&nr.arrows[v], &mr.arrows[v]);
        let (dm0, dn1, dm1) = (mr.dims[v], nr.dims[v + 1], mr.dims[v + 1]);
        let dn0 = nr.dims[v];
        // row (r, c) of block v: Σ_k Nα[r,k] φ_v[k,c] − Σ_k φ_{v+1}[r,k] Mα[k,c]
        for r in 0..dn1 {
            for c in 0..dm0 {
                let row = tgt_off[v] + r * dm0 + c;
                for k in 0..dn0 {
                    let x = na.get(r, k);
                    if x != 0 {
                        let col = src_off[v] + k * dm0 + c;
                        delta.set(row, col, f.add(delta.get(row, col), x));
                    }
                }
                for k in 0..dm1 {
                    let x = ma.get(k, c);
                    if x != 0 {
                        let col = src_off[v + 1] + r * dm1 + k;
                        delta.set(row, col, f.sub(delta.get(row, col), x));
                    }
                }
            }
        }
    }
    Ok(Standard { src_off, src_dim, tgt_off, tgt_dim, delta })
}

/// A morphism of representations, one matrix per vertex.
pub type RepMap = Vec<Matrix>;

/// Basis of `Hom(M, N)`.
pub fn hom_space(mr: &QuiverRep, nr: &QuiverRep, f: &FiniteField) -> Result<Vec<RepMap>> {
    let st = standard_complex(mr, nr, f)?;
    let kernel = if st.tgt_dim == 0 {
        (0..st.src_dim)
            .map(|i| {
                let mut e = vec![0; st.src_dim];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        st.delta.nullspace(f)
    };
    Ok(kernel
        .into_iter()
        .map(|x| {
            (0..mr.dims.len())
                .map(|v| {
                    let (r, c) = (nr.dims[v], mr.dims[v]);
                    Matrix::from_rows(r, c, x[st.src_off[v]..st.src_off[v] + r * c].to_vec())
                })
                .collect()
        })
        .collect())
}

/// `Ext¹(M, N)` with explicit classes: `classes[t][v−1]` is the component of
/// the t-th basis cocycle at the arrow `v → v+1`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub dim: usize,
    pub classes: Vec<Vec<Matrix>>,
    m_rep: QuiverRep,
    n_rep: QuiverRep,
}

impl Ext1 {
    /// Middle term `E` of the extension `0 → N → E → M → 0` for the class
    /// `Σ coeffs[t] · classes[t]`.
    pub fn middle_term(&self, coeffs: &[Fq], f: &FiniteField) -> QuiverRep {
        let (mr, nr) = (&self.m_rep, &self.n_rep);
        let dims: Vec<usize> = mr.dims.iter().zip(&nr.dims).map(|(a, b)| a + b).collect();
        let arrows = (0..dims.len().saturating_sub(1))
            .map(|v| {
                let mut a = Matrix::zeros(dims[v + 1], dims[v]);
                let (na, ma) = (&nr.arrows[v], &mr.arrows[v]);
                for r in 0..na.rows() {
                    for c in 0..na.cols() {
                        a.set(r, c, na.get(r, c));
                    }
                }
                for r in 0..ma.rows() {
                    for c in 0..ma.cols() {
                        a.set(nr.dims[v + 1] + r, nr.dims[v] + c, ma.get(r, c));
                    }
                }
                for (t, &k) in coeffs.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    let z = &self.classes[t][v];
                    for r in 0..z.rows() {
                        for c in 0..z.cols() {
                            let x = a.get(r, nr.dims[v] + c);
                            a.set(r, nr.dims[v] + c, f.add(x, f.mul(k, z.get(r, c))));
                        }
                    }
                }
                a
            })
            .collect();
        QuiverRep { m: mr.m, dims, arrows }
    }
}

pub fn ext1_space(mr: &QuiverRep, nr: &QuiverRep, f: &FiniteField) -> Result<Ext1> {
    let st = standard_complex(mr, nr, f)?;
    let mut image = Echelon::new(st.tgt_dim);
    let dt = st.delta.transpose();
    for i in 0..dt.rows() {
        image.insert(dt.row(i), f);
    }
    let mut span = image.clone();
    let mut classes = Vec::new();
    for i in 0..st.tgt_dim {
        let mut e = vec![0; st.tgt_dim];
        e[i] = 1;
        if span.insert(&e, f) {
            let comps = (0..st.tgt_off.len())
                .map(|v| {
                    let (r, c) = (nr.dims[v + 1], mr.dims[v]);
                    Matrix::from_rows(r, c, e[st.tgt_off[v]..st.tgt_off[v] + r * c].to_vec())
                })
                .collect();
            classes.push(comps);
        }
    }
    Ok(Ext1 { dim: classes.len(), classes, m_rep: mr.clone(), n_rep: nr.clone() })
}

/// Multiplicities of `M[a,b)` from composite ranks `r(i, j)`, `1 ≤ i ≤ j ≤ m−1`.
pub fn barcode_from_ranks<R: Fn(u32, u32) -> usize>(m: usize, rank: R) -> Vec<Interval> {
    let top = m as u32 - 1;
    let r = |i: u32, j: u32| -> i64 {
        if i < 1 || j > top || i > j {
            0
        } else {
            rank(i, j) as i64
        }
    };
    let mut out = Vec::new();
    for a in 1..=top {
        for b in a + 1..=m as u32 {
            let mult = r(a, b - 1) - r(a - 1, b - 1) - r(a, b) + r(a - 1, b);
            debug_assert!(mult >= 0, "negative barcode multiplicity");
            for _ in 0..mult.max(0) {
                out.push(Interval { a, b });
            }
        }
    }
    out
}

/// Interval decomposition by rank inclusion–exclusion.
pub fn barcode(rep: &QuiverRep, f: &FiniteField) -> Vec<Interval> {
    let top = rep.m as u32 - 1;
    let mut ranks = vec![vec![0usize; top as usize + 1]; top as usize + 1];
    for i in 1..=top {
        let mut acc = Matrix::identity(rep.dim_at(i));
        ranks[i as usize][i as usize] = rep.dim_at(i);
        for j in i + 1..=top {
            acc = rep.arrow(j - 1).mul(&acc, f);
            ranks[i as usize][j as usize] = acc.rank(f);
        }
    }
    barcode_from_ranks(rep.m, |i, j| ranks[i as usize][j as usize])
}

/// Closed-form `dim Hom(M[a,b), M[c,d))`: nonzero exactly when `c ≤ a < d ≤ b`.
pub fn interval_hom_dim(x: Interval, y: Interval) -> usize {
    (y.a <= x.a && x.a < y.b && y.b <= x.b) as usize
}

/// `dim Ext¹(M[a,b), N)` from `0 → P_b → P_a → M[a,b) → 0`:
/// `dim Hom(M,N) − dim N_a + dim N_b`.
pub fn interval_ext1_dim(x: Interval, y: Interval) -> usize {
    let n_at = |v: u32| y.contains(v) as i64;
    (interval_hom_dim(x, y) as i64 - n_at(x.a) + n_at(x.b)) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> FiniteField {
        FiniteField::new(q).unwrap()
    }

    #[test]
    fn hom_examples() {
        let f = gf(2);
        let s1 = Interval::simple(1).rep(2);
        assert_eq!(hom_space(&s1, &s1, &f).unwrap().len(), 1);
        let a = Interval { a: 1, b: 2 }.rep(3);
        let b = Interval { a: 2, b: 3 }.rep(3);
        assert_eq!(hom_space(&a, &b, &f).unwrap().len(), 0);
        let c = Interval { a: 1, b: 3 }.rep(3);
        assert_eq!(hom_space(&c, &a, &f).unwrap().len(), 1);
        assert!(hom_space(&s1, &a, &f).is_err());
    }

    #[test]
    fn ext_examples() {
        let f = gf(2);
        let s1 = Interval::simple(1).rep(3);
        let s2 = Interval::simple(2).rep(3);
        let e = ext1_space(&s1, &s2, &f).unwrap();
        assert_eq!(e.dim, 1);
        assert_eq!(barcode(&e.middle_term(&[1], &f), &f), vec![Interval { a: 1, b: 3 }]);
        assert_eq!(barcode(&e.middle_term(&[0], &f), &f).len(), 2);
        assert_eq!(ext1_space(&s2, &s1, &f).unwrap().dim, 0);
    }

    #[test]
    fn closed_forms_match_linear_algebra() {
        let f = gf(3);
        for m in 2..=5usize {
            let ivs: Vec<Interval> =
                (1..m as u32).flat_map(|a| (a + 1..=m as u32).map(move |b| Interval { a, b })).collect();
            for &x in &ivs {
                for &y in &ivs {
                    let (rx, ry) = (x.rep(m), y.rep(m));
                    assert_eq!(hom_space(&rx, &ry, &f).unwrap().len(), interval_hom_dim(x, y), "{x} {y}");
                    assert_eq!(ext1_space(&rx, &ry, &f).unwrap().dim, interval_ext1_dim(x, y), "{x} {y}");
                }
                assert_eq!(interval_ext1_dim(x, x), 0);
            }
        }
    }

    #[test]
    fn barcode_examples() {
        let f = gf(2);
        let one = QuiverRep::new(3, vec![1, 1], vec![Matrix::from_rows(1, 1, vec![1])]).unwrap();
        assert_eq!(barcode(&one, &f), vec![Interval { a: 1, b: 3 }]);
        let zero = QuiverRep::new(3, vec![1, 1], vec![Matrix::from_rows(1, 1, vec![0])]).unwrap();
        assert_eq!(barcode(&zero, &f), vec![Interval { a: 1, b: 2 }, Interval { a: 2, b: 3 }]);
        let r = QuiverRep::new(
            4,
            vec![1, 2, 1],
            vec![Matrix::from_rows(2, 1, vec![1, 0]), Matrix::from_rows(1, 2, vec![0, 1])],
        )
        .unwrap();
        // e1 at vertex 1 dies at vertex 3; the second basis vector at vertex 2 survives
        assert_eq!(barcode(&r, &f), vec![Interval { a: 1, b: 3 }, Interval { a: 2, b: 4 }]);
    }
}
