use super::foliation::FoliationData;
use super::gluing::GluingSpec;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiskSpec {
    pub m: usize,
    pub h: Vec<i32>,
}

/// A surface cut into disks by a full arc system: the disks with their
/// foliation data, and which arcs are glued together.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceConfig {
    pub disks: Vec<DiskSpec>,
    #[serde(default)]
    pub gluings: Vec<GluingSpec>,
}

/// `(disk, index)`, with both the arc and marked-interval indices from 1.
pub type Slot = (usize, u32);

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a.max(b)] = a.min(b);
    }
}

/// A validated surface config.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surface {
    pub disks: Vec<FoliationData>,
    pub gluings: Vec<GluingSpec>,
    /// Marked intervals of the glued surface, as classes of disk intervals.
    intervals: Vec<Vec<Slot>>,
    /// Class of each disk interval.
    interval_class: BTreeMap<Slot, usize>,
}

impl SurfaceConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn single(h: Vec<i32>) -> Self {
        SurfaceConfig { disks: vec![DiskSpec { m: h.len(), h }], gluings: Vec::new() }
    }

    pub fn validate(&self) -> Result<Surface> {
        if self.disks.is_empty() {
            return Err(Error::Config("no disks".into()));
        }
        let mut disks = Vec::new();
        for (k, d) in self.disks.iter().enumerate() {
            if d.h.len() != d.m {
                return Err(Error::Config(format!("disk {k}: h has {} entries but m = {}", d.h.len(), d.m)));
            }
            let f = FoliationData::new(d.h.clone()).map_err(|e| Error::Config(format!("disk {k}: {e}")))?;
            disks.push(f);
        }
        let mut used = BTreeMap::new();
        for (t, g) in self.gluings.iter().enumerate() {
            for (d, a) in [(g.left, g.arc_i), (g.right, g.arc_j)] {
                let Some(f) = disks.get(d) else {
                    return Err(Error::Config(format!("gluing {t}: no disk {d}")));
                };
                if a < 1 || a as usize > f.m() {
                    return Err(Error::Config(format!("gluing {t}: arc {a} outside 1..={} on disk {d}", f.m())));
                }
                if let Some(prev) = used.insert((d, a), t) {
                    return Err(Error::Config(format!("arc {a} of disk {d} is glued twice (gluings {prev} and {t})")));
                }
            }
        }
        let mut uf = UnionFind::new(disks.len());
        for g in &self.gluings {
            uf.union(g.left, g.right);
        }
        if (0..disks.len()).any(|d| uf.find(d) != 0) {
            return Err(Error::Config("surface is not connected".into()));
        }

        // Arc E_k joins intervals k and k+1; gluing E_k to F_l matches
        // interval k with l+1 and k+1 with l.
        let mut offset = vec![0usize];
        for f in &disks {
            offset.push(offset.last().unwrap() + f.m());
        }
        let slot_id = |d: usize, i: i64| offset[d] + disks[d].wrap(i) as usize - 1;
        let mut uf = UnionFind::new(*offset.last().unwrap());
        for g in &self.gluings {
            let (k, l) = (g.arc_i as i64, g.arc_j as i64);
            uf.union(slot_id(g.left, k), slot_id(g.right, l + 1));
            uf.union(slot_id(g.left, k + 1), slot_id(g.right, l));
        }
        let mut classes: BTreeMap<usize, Vec<Slot>> = BTreeMap::new();
        for (d, f) in disks.iter().enumerate() {
            for i in 1..=f.m() as u32 {
                classes.entry(uf.find(slot_id(d, i as i64))).or_default().push((d, i));
            }
        }
        let intervals: Vec<Vec<Slot>> = classes.into_values().collect();
        let mut interval_class = BTreeMap::new();
        for (c, slots) in intervals.iter().enumerate() {
            for &s in slots {
                interval_class.insert(s, c);
            }
            // Every arc beside a marked interval is glued: the interval closes
            // up into a boundary circle with no endpoints.
            let closed = slots.iter().all(|&(d, i)| {
                let prev = disks[d].wrap(i as i64 - 1);
                used.contains_key(&(d, prev)) && used.contains_key(&(d, i))
            });
            if closed {
                return Err(Error::Config(format!(
                    "closed boundary component through marked interval {} of disk {}: every boundary component needs a marked interval",
                    slots[0].1, slots[0].0
                )));
            }
        }
        Ok(Surface { disks, gluings: self.gluings.clone(), intervals, interval_class })
    }
}

impl Surface {
    /// Disk-only configs: connected with one gluing fewer than disks.
    pub fn is_disk(&self) -> bool {
        self.gluings.len() + 1 == self.disks.len()
    }

    pub fn intervals(&self) -> &[Vec<Slot>] {
        &self.intervals
    }

    pub fn interval_of(&self, s: Slot) -> usize {
        self.interval_class[&s]
    }

    /// Surface marked intervals at the two ends of arc `(d, k)`.
    pub fn arc_ends(&self, d: usize, k: u32) -> [usize; 2] {
        let next = self.disks[d].wrap(k as i64 + 1);
        [self.interval_of((d, k)), self.interval_of((d, next))]
    }

    /// The arc `(d, k)` is glued to, if any.
    pub fn partner(&self, d: usize, k: u32) -> Option<Slot> {
        self.gluings.iter().find_map(|g| {
            if (g.left, g.arc_i) == (d, k) {
                Some((g.right, g.arc_j))
            } else if (g.right, g.arc_j) == (d, k) {
                Some((g.left, g.arc_i))
            } else {
                None
            }
        })
    }

    /// Every disk's marked intervals stay distinct in the surface.
    pub fn has_enough_marked_intervals(&self) -> bool {
        self.disks.iter().enumerate().all(|(d, f)| {
            let mut seen: Vec<usize> = (1..=f.m() as u32).map(|i| self.interval_of((d, i))).collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == f.m()
        })
    }
}
