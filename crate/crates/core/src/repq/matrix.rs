//! Dense linear algebra over a finite field.

use super::field::{FiniteField, Fq};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<Fq>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fq {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Fq) {
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Fq] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, o: &Matrix, f: &FiniteField) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b != 0 {
                        let cur = out.get(i, j);
                        out.set(i, j, f.add(cur, f.mul(a, b)));
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self, f: &FiniteField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            for j in 0..self.cols {
                let x = self.get(r, j);
                self.set(r, j, f.mul(x, inv));
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let x = f.sub(self.get(i, j), f.mul(factor, self.get(r, j)));
                    self.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &FiniteField) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.clone().rref(f).len()
    }

    /// Basis of `{x : self · x = 0}`.
    pub fn nullspace(&self, f: &FiniteField) -> Vec<Vec<Fq>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[Fq], f: &FiniteField) -> Vec<Fq> {
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for (j, &xj) in x.iter().enumerate() {
                    let a = self.get(i, j);
                    if a != 0 && xj != 0 {
                        acc = f.add(acc, f.mul(a, xj));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_invertible(&self, f: &FiniteField) -> bool {
        self.rows == self.cols && self.rank(f) == self.rows
    }
}

/// Incrementally built echelon basis of a subspace of 𝔽_q^n.
#[derive(Clone, Debug)]
pub struct Echelon {
    n: usize,
    rows: Vec<(usize, Vec<Fq>)>,
}

impl Echelon {
    pub fn new(n: usize) -> Self {
        Echelon { n, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis.
    pub fn reduce(&self, v: &[Fq], f: &FiniteField) -> Vec<Fq> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for j in 0..self.n {
                    if row[j] != 0 {
                        v[j] = f.sub(v[j], f.mul(c, row[j]));
                    }
                }
            }
        }
        v
    }

    /// Adds `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: &[Fq], f: &FiniteField) -> bool {
        let mut v = self.reduce(v, f);
        let Some(p) = v.iter().position(|&x| x != 0) else { return false };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // keep existing rows reduced at the new pivot
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for j in 0..self.n {
                    if v[j] != 0 {
                        row[j] = f.sub(row[j], f.mul(c, v[j]));
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[Fq], f: &FiniteField) -> bool {
        self.reduce(v, f).iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let f = FiniteField::new(3).unwrap();
        let m = Matrix::from_rows(2, 3, vec![1, 2, 0, 2, 1, 0]);
        // second row is 2 * first row mod 3
        assert_eq!(m.rank(&f), 1);
        let ns = m.nullspace(&f);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.apply(v, &f).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn echelon_tracks_span() {
        let f = FiniteField::new(2).unwrap();
        let mut e = Echelon::new(3);
        assert!(e.insert(&[1, 1, 0], &f));
        assert!(e.insert(&[0, 1, 1], &f));
        assert!(!e.insert(&[1, 0, 1], &f));
        assert!(e.contains(&[1, 0, 1], &f));
        assert!(!e.contains(&[0, 0, 1], &f));
        assert_eq!(e.dim(), 2);
    }
}
