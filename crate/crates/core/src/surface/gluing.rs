use super::foliation::FoliationData;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Gluing of arc `arc_i` of disk `left` to arc `arc_j` of disk `right`.
/// Disks are numbered from 0, arcs from 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GluingSpec {
    pub left: usize,
    pub arc_i: u32,
    pub right: usize,
    pub arc_j: u32,
}

/// Two disks glued along one arc each.
///
/// Internally both disks are relabelled so the left disk `E` has `n` arcs
/// with the glued arc last (`E_n`), and the right disk `F` has arcs
/// `F_{n−1}, …, F_{n+m−2}` with the glued arc first (`F_{n−1}`). The glued
/// disk has arcs `G_1, …, G_{n+m−2}`, where `G_k` comes from `E_k` for
/// `k ≤ n − 1` and from `F_k` for `k ≥ n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gluing {
    e: FoliationData,
    f: FoliationData,
    arc_i: u32,
    arc_j: u32,
    g: FoliationData,
}

impl Gluing {
    pub fn new(e: &FoliationData, arc_i: u32, f: &FoliationData, arc_j: u32) -> Result<Self> {
        if arc_i < 1 || arc_i as usize > e.m() {
            return Err(Error::Index(format!("left arc {arc_i} outside 1..={}", e.m())));
        }
        if arc_j < 1 || arc_j as usize > f.m() {
            return Err(Error::Index(format!("right arc {arc_j} outside 1..={}", f.m())));
        }
        let mut out = Gluing { e: e.clone(), f: f.clone(), arc_i, arc_j, g: e.clone() };
        let (n, m) = (out.n() as i64, out.m() as i64);
        let mut g = Vec::with_capacity((n + m - 2) as usize);
        for k in 1..=n + m - 2 {
            g.push(if k <= n - 2 {
                out.e_h(k)
            } else if k == n - 1 {
                out.e_h(n - 1) + out.f_h(n - 1)
            } else if k <= n + m - 3 {
                out.f_h(k)
            } else {
                out.e_h(n) + out.f_h(k)
            });
        }
        out.g = FoliationData::new(g)?;
        Ok(out)
    }

    /// Arc count of the left disk.
    pub fn n(&self) -> usize {
        self.e.m()
    }

    /// Arc count of the right disk.
    pub fn m(&self) -> usize {
        self.f.m()
    }

    pub fn left(&self) -> &FoliationData {
        &self.e
    }

    pub fn right(&self) -> &FoliationData {
        &self.f
    }

    pub fn glued(&self) -> &FoliationData {
        &self.g
    }

    /// The left disk's own arc number for relabelled index `k`.
    pub fn e_own(&self, k: i64) -> u32 {
        self.e.wrap(self.arc_i as i64 + k - self.n() as i64)
    }

    /// The right disk's own arc number for relabelled index `k ∈ n−1..n+m−2`.
    pub fn f_own(&self, k: i64) -> u32 {
        self.f.wrap(self.arc_j as i64 + k - (self.n() as i64 - 1))
    }

    /// `e(k)` in the relabelled indexing.
    pub fn e_h(&self, k: i64) -> i32 {
        self.e.h(self.e_own(k) as i64)
    }

    /// `f(k)` in the relabelled indexing.
    pub fn f_h(&self, k: i64) -> i32 {
        self.f.h(self.f_own(k) as i64)
    }

    /// Glued-disk arc of a left arc; `None` for the glued arc.
    pub fn e_to_g(&self, own: u32) -> Option<u32> {
        let n = self.n() as i64;
        let k = (own as i64 - self.arc_i as i64 + n - 1).rem_euclid(n) + 1;
        (k != n).then_some(k as u32)
    }

    /// Glued-disk arc of a right arc; `None` for the glued arc.
    pub fn f_to_g(&self, own: u32) -> Option<u32> {
        let t = (own as i64 - self.arc_j as i64).rem_euclid(self.m() as i64);
        (t != 0).then_some((self.n() as i64 - 1 + t) as u32)
    }

    /// Which side a glued-disk arc came from: `(true, own)` for the left disk.
    pub fn g_source(&self, k: u32) -> (bool, u32) {
        if (k as usize) < self.n() {
            (true, self.e_own(k as i64))
        } else {
            (false, self.f_own(k as i64))
        }
    }

    /// `⟨j,k⟩_g` on the glued disk.
    pub fn g_span(&self, j: i64, k: i64) -> i32 {
        self.g.span(j, k)
    }
}

/// Glues two disks and returns the foliation data of the result.
pub fn glue(e: &FoliationData, arc_i: u32, f: &FoliationData, arc_j: u32) -> Result<FoliationData> {
    Ok(Gluing::new(e, arc_i, f, arc_j)?.g)
}

/// Cuts a disk with `n + m − 2` arcs along the internal arc running from the
/// marked interval before `G_{n−1}` to the one after `G_{n+m−2}`. The cut is
/// determined by the value `f(n−1)` that the right piece assigns to the new
/// arc. Returns both pieces in the relabelled indexing: the left piece has
/// the new arc last, the right piece has it first.
pub fn cut(g: &FoliationData, n: usize, f_new: i32) -> Result<(FoliationData, FoliationData)> {
    let total = g.m();
    if n < 2 || n >= total + 2 - 1 {
        return Err(Error::Index(format!("cannot cut {total} arcs into a {n}-gon and the rest")));
    }
    let m = total + 2 - n;
    let ni = n as i64;
    let mut e: Vec<i32> = (1..=ni - 2).map(|k| g.h(k)).collect();
    e.push(g.h(ni - 1) - f_new);
    let e_last = ni - 2 - e.iter().map(|&x| x as i64).sum::<i64>();
    e.push(e_last as i32);
    let mut f = vec![f_new];
    f.extend((ni..=ni + m as i64 - 3).map(|k| g.h(k)));
    f.push(g.h(ni + m as i64 - 2) - e_last as i32);
    Ok((FoliationData::new(e)?, FoliationData::new(f)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd(h: &[i32]) -> FoliationData {
        FoliationData::new(h.to_vec()).unwrap()
    }

    #[test]
    fn triangles_to_square() {
        let g = Gluing::new(&fd(&[0, 1, 0]), 3, &fd(&[1, 0, 0]), 1).unwrap();
        assert_eq!(g.glued().values(), &[0, 2, 0, 0]);
        assert_eq!(g.e_to_g(3), None);
        assert_eq!(g.e_to_g(1), Some(1));
        assert_eq!(g.f_to_g(1), None);
        assert_eq!(g.f_to_g(2), Some(3));
        assert_eq!(g.f_to_g(3), Some(4));
        assert_eq!(g.g_source(2), (true, 2));
        assert_eq!(g.g_source(4), (false, 3));
        assert!(Gluing::new(&fd(&[0, 1, 0]), 4, &fd(&[1, 0, 0]), 1).is_err());
    }

    #[test]
    fn rotated_arc_choice() {
        // Gluing at another arc is the same as rotating first.
        let e = fd(&[2, -1, 0, 1, 1]);
        let f = fd(&[0, 1, 0, 1]);
        for i in 1..=5u32 {
            for j in 1..=4u32 {
                let a = glue(&e, i, &f, j).unwrap();
                let b = glue(&e.rotate(i as i64 - 5), 5, &f.rotate(j as i64 - 1), 1).unwrap();
                assert_eq!(a, b);
                assert_eq!(a.m(), 7);
            }
        }
    }

    #[test]
    fn cut_inverts_glue() {
        let e = fd(&[0, 1, 0, 1]);
        let f = fd(&[1, 0, 2, -1, 1]);
        let g = Gluing::new(&e, 4, &f, 1).unwrap();
        let (e2, f2) = cut(g.glued(), 4, f.h(1)).unwrap();
        assert_eq!(e2, e);
        assert_eq!(f2, f);
        assert!(cut(g.glued(), 1, 0).is_err());
    }
}
