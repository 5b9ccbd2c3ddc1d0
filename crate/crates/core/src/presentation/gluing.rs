use super::disk::{convolution_rhs, minimal_disk_relations, psi_map};
use super::relset::{OracleMap, RelationSet};
use crate::error::{Error, Result};
use crate::freealg::{qp, Family, Generator, Label, NCPolynomial, Relation};
use crate::scalar::RationalFunctionV;
use crate::surface::{FoliationData, Gluing, MarkedDisk, Slot, Surface};
use std::collections::{BTreeMap, HashSet};

/// Generator family of disk `d` in a surface: `E`, `F`, then `D2`, `D3`, ….
pub fn family_for(d: usize) -> Family {
    match d {
        0 => Family::E,
        1 => Family::F,
        _ => Family::Disk(d as u16),
    }
}

fn g_arc(k: u32, s: i32) -> NCPolynomial {
    NCPolynomial::gen(Generator::new(Label::new(Family::G, k), s))
}

fn bracket(items: &[NCPolynomial]) -> NCPolynomial {
    NCPolynomial::iterated_bracket(items, &qp()).expect("non-empty bracket")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `β`: arcs of either disk in terms of the glued disk's arcs `G_k`. Arcs
/// that survive map to themselves; the glued arc becomes
/// `σ^{s−e(n)}[G_{n−1,⟨1,n−1⟩_g}, …, G_{1,⟨1,1⟩_g}]_q` from the left, and
/// `σ^{s−f(n−1)}[G_{n+m−2,⟨n,n+m−2⟩_g}, …, G_{n,⟨n,n⟩_g}]_q` from the right.
pub fn beta_image(gl: &Gluing, side: Side, own: u32, s: i32) -> NCPolynomial {
    let (n, m) = (gl.n() as i64, gl.m() as i64);
    match side {
        Side::Left => match gl.e_to_g(own) {
            Some(k) => g_arc(k, s),
            None => {
                let items: Vec<_> = (1..n).rev().map(|k| g_arc(k as u32, gl.g_span(1, k))).collect();
                bracket(&items).suspend(s - gl.e_h(n))
            }
        },
        Side::Right => match gl.f_to_g(own) {
            Some(k) => g_arc(k, s),
            None => {
                let items: Vec<_> = (n..=n + m - 2).rev().map(|k| g_arc(k as u32, gl.g_span(n, k))).collect();
                bracket(&items).suspend(s - gl.f_h(n - 1))
            }
        },
    }
}

/// `α(G_k)`: the arc of the left (`E`) or right (`F`) disk it came from.
pub fn alpha_image(gl: &Gluing, k: u32, s: i32) -> NCPolynomial {
    let (left, own) = gl.g_source(k);
    let fam = if left { Family::E } else { Family::F };
    NCPolynomial::gen(Generator::new(Label::new(fam, own), s))
}

fn substitute_beta(gl: &Gluing, p: &NCPolynomial) -> NCPolynomial {
    p.substitute(|g| {
        let side = match g.label.family {
            Family::E => Side::Left,
            Family::F => Side::Right,
            _ => return Err(Error::Unassigned(g.to_string())),
        };
        Ok(beta_image(gl, side, g.label.index, g.shift))
    })
    .expect("β is defined on E and F")
}

fn substitute_alpha(gl: &Gluing, p: &NCPolynomial) -> NCPolynomial {
    p.substitute(|g| Ok(alpha_image(gl, g.label.index, g.shift))).expect("α is defined on G")
}

/// Pairs `(composite, expected)` for `αβ` on every arc of both disks and
/// `βα` on every arc of the glued disk. For the glued arcs, `αβ` must give
/// the disk's own convolution suspended by `−h`, which equals the arc there.
pub fn alpha_beta_pairs(gl: &Gluing) -> Vec<(NCPolynomial, NCPolynomial)> {
    let mut out = Vec::new();
    let left = MarkedDisk::new(gl.left().clone(), Family::E);
    let right = MarkedDisk::new(gl.right().clone(), Family::F);
    for (side, disk) in [(Side::Left, &left), (Side::Right, &right)] {
        for own in 1..=disk.m() as u32 {
            let arc = disk.arc(own as i64, 0);
            let got = substitute_alpha(gl, &substitute_beta(gl, &arc));
            let glued = match side {
                Side::Left => gl.e_to_g(own).is_none(),
                Side::Right => gl.f_to_g(own).is_none(),
            };
            let want =
                if glued { convolution_rhs(disk, own as i64).suspend(-disk.foliation.h(own as i64)) } else { arc };
            out.push((got, want));
        }
    }
    for k in 1..=gl.glued().m() as u32 {
        let got = substitute_beta(gl, &alpha_image(gl, k, 0));
        out.push((got, g_arc(k, 0)));
    }
    out
}

/// A disk-only surface glued into one disk, with every original arc
/// expressed in the glued disk's arcs `G_k` at shift 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComposedDisk {
    pub foliation: FoliationData,
    pub images: BTreeMap<Slot, NCPolynomial>,
    /// Position of each surviving boundary arc on the glued disk.
    pub boundary: BTreeMap<Slot, u32>,
}

impl ComposedDisk {
    pub fn disk(&self) -> MarkedDisk {
        MarkedDisk::new(self.foliation.clone(), Family::G)
    }

    /// Sends each original arc through `ψ` of the glued disk.
    pub fn oracle(&self) -> Result<OracleMap> {
        let psi = psi_map(&self.disk());
        let mut o = OracleMap::new(psi.quiver_m);
        for (&(d, k), p) in &self.images {
            o.images.insert(Label::new(family_for(d), k), psi.apply(p)?);
        }
        Ok(o)
    }
}

struct Piece {
    g: FoliationData,
    images: BTreeMap<Slot, NCPolynomial>,
    boundary: BTreeMap<Slot, u32>,
}

/// Glues a disk-only surface in the order its gluings are listed.
pub fn compose(surface: &Surface) -> Result<ComposedDisk> {
    if !surface.is_disk() {
        return Err(Error::Config("only disk-only configs can be composed into one disk".into()));
    }
    let mut pieces: Vec<Option<Piece>> = surface
        .disks
        .iter()
        .enumerate()
        .map(|(d, f)| {
            let arcs = 1..=f.m() as u32;
            Some(Piece {
                g: f.clone(),
                images: arcs.clone().map(|k| ((d, k), g_arc(k, 0))).collect(),
                boundary: arcs.map(|k| ((d, k), k)).collect(),
            })
        })
        .collect();
    let owner = |pieces: &[Option<Piece>], s: Slot| {
        pieces.iter().position(|p| p.as_ref().is_some_and(|p| p.boundary.contains_key(&s)))
    };
    for g in &surface.gluings {
        let (l, r) = ((g.left, g.arc_i), (g.right, g.arc_j));
        let pl = owner(&pieces, l).ok_or_else(|| Error::Config(format!("arc {l:?} is not on the boundary")))?;
        let pr = owner(&pieces, r).ok_or_else(|| Error::Config(format!("arc {r:?} is not on the boundary")))?;
        if pl == pr {
            return Err(Error::Config("gluing closes a loop".into()));
        }
        let a = pieces[pl].take().unwrap();
        let b = pieces[pr].take().unwrap();
        let gl = Gluing::new(&a.g, a.boundary[&l], &b.g, b.boundary[&r])?;
        let mut piece = Piece { g: gl.glued().clone(), images: BTreeMap::new(), boundary: BTreeMap::new() };
        for (side, p) in [(Side::Left, &a), (Side::Right, &b)] {
            let image_of = |x: &NCPolynomial| {
                x.substitute(|g| Ok(beta_image(&gl, side, g.label.index, g.shift))).expect("β is total")
            };
            for (s, x) in &p.images {
                piece.images.insert(*s, image_of(x));
            }
            for (s, &k) in &p.boundary {
                let to = match side {
                    Side::Left => gl.e_to_g(k),
                    Side::Right => gl.f_to_g(k),
                };
                if let Some(t) = to {
                    piece.boundary.insert(*s, t);
                }
            }
        }
        pieces[pl] = Some(piece);
    }
    let p = pieces.into_iter().flatten().next().expect("connected");
    Ok(ComposedDisk { foliation: p.g, images: p.images, boundary: p.boundary })
}

/// The naive presentation of a surface together with any warnings.
#[derive(Clone, Debug)]
pub struct NaivePresentation {
    pub relations: RelationSet,
    pub warnings: Vec<String>,
    pub composed: Option<ComposedDisk>,
}

/// Free product of the disk presentations, with glued arcs identified and
/// arcs that end on no common marked interval of the surface commuting.
/// Disk-only surfaces carry an oracle map through the composed disk.
pub fn naive_presentation(surface: &Surface, lo: i32, hi: i32) -> Result<NaivePresentation> {
    let disks: Vec<MarkedDisk> =
        surface.disks.iter().enumerate().map(|(d, f)| MarkedDisk::new(f.clone(), family_for(d))).collect();
    let mut rs = RelationSet::new(format!("naive surface disks={} gluings={}", disks.len(), surface.gluings.len()));
    for d in &disks {
        let mut part = minimal_disk_relations(d, lo, hi);
        part.oracle = None;
        rs.extend(part);
    }
    for g in &surface.gluings {
        let (a, b) = (&disks[g.left], &disks[g.right]);
        for s in lo..=hi {
            let (x, y) = (a.arc(g.arc_i as i64, s), b.arc(g.arc_j as i64, s));
            rs.push(Relation::new(format!("G1 {} = {}", a.gen(g.arc_i as i64, s), b.gen(g.arc_j as i64, s)), x, y));
        }
    }
    for (d1, a) in disks.iter().enumerate() {
        for (d2, b) in disks.iter().enumerate().skip(d1 + 1) {
            for k in 1..=a.m() as u32 {
                for l in 1..=b.m() as u32 {
                    if surface.partner(d1, k) == Some((d2, l)) {
                        continue;
                    }
                    let (ea, eb) = (surface.arc_ends(d1, k), surface.arc_ends(d2, l));
                    if ea.iter().any(|x| eb.contains(x)) {
                        continue;
                    }
                    for s in lo..=hi {
                        for t in lo..=hi {
                            let lhs = NCPolynomial::q_bracket(
                                &a.arc(k as i64, s),
                                &b.arc(l as i64, t),
                                &RationalFunctionV::one(),
                            );
                            let label = format!("G3 {} {}", a.gen(k as i64, s), b.gen(l as i64, t));
                            rs.push(Relation::new(label, lhs, NCPolynomial::zero()));
                        }
                    }
                }
            }
        }
    }
    let mut warnings = Vec::new();
    if !surface.has_enough_marked_intervals() {
        warnings.push(
            "some disk has two marked intervals that meet in the surface; the naive algebra may not embed".into(),
        );
    }
    let composed = if surface.is_disk() { Some(compose(surface)?) } else { None };
    if let Some(c) = &composed {
        rs.oracle = Some(c.oracle()?);
    } else {
        warnings.push("not a disk: presentation emitted without an oracle map".into());
    }
    Ok(NaivePresentation { relations: rs, warnings, composed })
}

/// Two-disk gluing presentation: both disk presentations, `G1` on the glued
/// arcs and `G3` on the remaining far pairs.
pub fn gluing_relations(
    e: &FoliationData,
    arc_i: u32,
    f: &FoliationData,
    arc_j: u32,
    lo: i32,
    hi: i32,
) -> Result<NaivePresentation> {
    let cfg = crate::surface::SurfaceConfig {
        disks: [e, f].iter().map(|x| crate::surface::DiskSpec { m: x.m(), h: x.values().to_vec() }).collect(),
        gluings: vec![crate::surface::GluingSpec { left: 0, arc_i, right: 1, arc_j }],
    };
    naive_presentation(&cfg.validate()?, lo, hi)
}

/// Scales a polynomial so its first coefficient is 1.
fn normalized(p: &NCPolynomial) -> NCPolynomial {
    match p.terms().values().next() {
        Some(c) => p.scale(&c.inv().expect("stored coefficients are non-zero")),
        None => p.clone(),
    }
}

/// Compares the presentations of two composed disks after renaming the
/// arcs of `b` along the boundary correspondence. Relations are compared
/// as sets of residuals up to scalars.
pub fn same_presentation(a: &ComposedDisk, b: &ComposedDisk, lo: i32, hi: i32) -> bool {
    if a.foliation.m() != b.foliation.m() || a.boundary.keys().ne(b.boundary.keys()) {
        return false;
    }
    let rename: BTreeMap<u32, u32> = a.boundary.iter().map(|(s, &k)| (b.boundary[s], k)).collect();
    if rename.len() != b.foliation.m() {
        return false;
    }
    let ra = minimal_disk_relations(&a.disk(), lo, hi);
    let rb = minimal_disk_relations(&b.disk(), lo, hi).rename(|l| Label::new(l.family, rename[&l.index]));
    let set = |rs: &RelationSet| -> HashSet<NCPolynomial> {
        rs.relations.iter().map(|r| normalized(&r.residual())).collect()
    };
    set(&ra) == set(&rb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::SurfaceConfig;

    fn fd(h: &[i32]) -> FoliationData {
        FoliationData::new(h.to_vec()).unwrap()
    }

    #[test]
    fn beta_on_triangles() {
        let gl = Gluing::new(&fd(&[0, 1, 0]), 3, &fd(&[1, 0, 0]), 1).unwrap();
        assert_eq!(beta_image(&gl, Side::Left, 1, 2), g_arc(1, 2));
        // σ^{1−e(3)}[G_{2,⟨1,2⟩}, G_{1,0}]_q with ⟨1,2⟩_g = 1 − g(1) = 1
        let want = bracket(&[g_arc(2, 1), g_arc(1, 0)]).suspend(1);
        assert_eq!(beta_image(&gl, Side::Left, 3, 1), want);
        assert_eq!(alpha_image(&gl, 3, 0), NCPolynomial::parse("F[2,0]").unwrap());
        for (got, want) in alpha_beta_pairs(&gl) {
            assert_eq!(got, want);
        }
    }

    #[test]
    fn far_pairs_match_the_neighbor_set() {
        // Relabelled indices: E_1..E_n, F_{n−1}..F_{n+m−2}; the excluded
        // pairs are the six neighbours plus the glued pair itself.
        for (e, f) in [(vec![0, 1, 0], vec![1, 0, 0]), (vec![0, 1, 0, 1], vec![2, 0, 1, 0, 0])] {
            let (n, m) = (e.len() as u32, f.len() as u32);
            let np = gluing_relations(&fd(&e), n, &fd(&f), 1, 0, 0).unwrap();
            let mut excluded = Vec::new();
            for k in 1..=n {
                for t in 0..m {
                    let l = n - 1 + t;
                    let label = format!("G3 E[{k},0] F[{},0]", t + 1);
                    if np.relations.get(&label).is_none() {
                        excluded.push((k, l));
                    }
                }
            }
            excluded.sort();
            let mut want =
                vec![(1, n - 1), (1, m + n - 2), (n - 1, n - 1), (n - 1, n), (n, n), (n, n + m - 2), (n, n - 1)];
            want.sort();
            want.dedup();
            assert_eq!(excluded, want);
        }
    }

    #[test]
    fn pentagon_orders_agree() {
        let tri = r#"{"m":3,"h":[1,0,0]}"#;
        let one = format!(
            r#"{{"disks":[{tri},{tri},{tri}],"gluings":[{{"left":0,"arc_i":2,"right":1,"arc_j":1}},{{"left":1,"arc_i":3,"right":2,"arc_j":1}}]}}"#
        );
        let two = format!(
            r#"{{"disks":[{tri},{tri},{tri}],"gluings":[{{"left":1,"arc_i":3,"right":2,"arc_j":1}},{{"left":0,"arc_i":2,"right":1,"arc_j":1}}]}}"#
        );
        let a = compose(&SurfaceConfig::from_json(&one).unwrap().validate().unwrap()).unwrap();
        let b = compose(&SurfaceConfig::from_json(&two).unwrap().validate().unwrap()).unwrap();
        assert_eq!(a.foliation.m(), 5);
        assert_eq!(a.boundary.len(), 5);
        assert!(same_presentation(&a, &b, 0, 1));
    }

    #[test]
    fn annulus_is_emission_only() {
        let cfg = SurfaceConfig::from_json(
            r#"{"disks":[{"m":4,"h":[0,1,0,1]},{"m":4,"h":[0,1,0,1]}],
            "gluings":[{"left":0,"arc_i":2,"right":1,"arc_j":4},{"left":0,"arc_i":4,"right":1,"arc_j":2}]}"#,
        )
        .unwrap();
        let np = naive_presentation(&cfg.validate().unwrap(), 0, 1).unwrap();
        assert!(np.relations.oracle.is_none());
        assert!(np.relations.get("G1 E[2,0] = F[4,0]").is_some());
        assert!(np.relations.get("G1 E[4,1] = F[2,1]").is_some());
        assert!(np.relations.get("G3 E[2,0] F[2,1]").is_some());
        assert!(np.relations.get("G3 E[1,0] F[1,0]").is_none());
    }
}
