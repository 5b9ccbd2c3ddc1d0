use super::relset::{OracleMap, RelationSet};
use crate::surface::{boundary_skein, crossing, skein_commutator, Crossing, GradedChord};

fn chords(m: u32) -> Vec<(u32, u32)> {
    (1..=m).flat_map(|a| (a + 1..=m).map(move |b| (a, b))).collect()
}

/// `[x, y]_1` for every interleaved pair of chords on `m` marked intervals,
/// with `y` at shift 0 and `x` at every shift in `ks`.
pub fn interleaved_skein_relations(m: usize, ks: impl IntoIterator<Item = i32> + Clone) -> RelationSet {
    let mut rs = RelationSet::new(format!("interleaved skein m={m}"));
    for (a, b) in chords(m as u32) {
        for (c, d) in chords(m as u32) {
            for k in ks.clone() {
                let x = GradedChord { a, b, shift: k };
                let y = GradedChord { a: c, b: d, shift: 0 };
                if crossing(&x, &y) == Crossing::Interleaved {
                    rs.push(skein_commutator(&x, &y).expect("interleaved"));
                }
            }
        }
    }
    rs.with_oracle(OracleMap::identity(m))
}

/// The boundary skein relation for every ordered pair of chords sharing a
/// marked interval, with `y` at shift 0 and `x` at every shift in `ks`.
pub fn boundary_skein_relations(m: usize, ks: impl IntoIterator<Item = i32> + Clone) -> RelationSet {
    let mut rs = RelationSet::new(format!("boundary skein m={m}"));
    for (a, b) in chords(m as u32) {
        for (c, d) in chords(m as u32) {
            for k in ks.clone() {
                let x = GradedChord { a, b, shift: k };
                let y = GradedChord { a: c, b: d, shift: 0 };
                if let Crossing::SharedEndpoint(_) = crossing(&x, &y) {
                    rs.push(boundary_skein(&x, &y).expect("shared endpoint"));
                }
            }
        }
    }
    rs.with_oracle(OracleMap::identity(m))
}
