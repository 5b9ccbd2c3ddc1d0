use serde::{Deserialize, Serialize};
use std::fmt;

/// Which family of abstract generators a label belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Quiver generators `z_{i,n}`.
    Z,
    /// Arcs of a (first) disk.
    E,
    /// Arcs of a second disk in a gluing.
    F,
    /// Arcs of a glued disk.
    G,
    /// Arcs of the k-th disk of a surface config.
    Disk(u16),
    /// PBW root vectors `F_{i,j}`.
    Pbw,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Label {
    pub family: Family,
    pub index: u32,
    /// Second index, used only by PBW root vectors.
    pub aux: u32,
}

impl Label {
    pub fn new(family: Family, index: u32) -> Self {
        Label { family, index, aux: 0 }
    }

    pub fn z(i: u32) -> Self {
        Label::new(Family::Z, i)
    }

    pub fn e(i: u32) -> Self {
        Label::new(Family::E, i)
    }

    pub fn pbw(i: u32, j: u32) -> Self {
        Label { family: Family::Pbw, index: i, aux: j }
    }

    pub fn family_name(&self) -> String {
        match self.family {
            Family::Z => "z".into(),
            Family::E => "E".into(),
            Family::F => "F".into(),
            Family::G => "G".into(),
            Family::Disk(k) => format!("D{k}"),
            Family::Pbw => "P".into(),
        }
    }
}

/// A shifted generator `(label, n)`; ordered label-major, shift-minor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub label: Label,
    pub shift: i32,
}

impl Generator {
    pub fn new(label: Label, shift: i32) -> Self {
        Generator { label, shift }
    }

    pub fn z(i: u32, n: i32) -> Self {
        Generator::new(Label::z(i), n)
    }

    pub fn e(i: u32, n: i32) -> Self {
        Generator::new(Label::e(i), n)
    }

    pub fn shifted(&self, n: i32) -> Self {
        Generator { label: self.label, shift: self.shift + n }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.label.family == Family::Pbw {
            if self.shift == 0 {
                write!(f, "P[{},{}]", self.label.index, self.label.aux)
            } else {
                write!(f, "s^{}(P[{},{}])", self.shift, self.label.index, self.label.aux)
            }
        } else {
            write!(f, "{}[{},{}]", self.label.family_name(), self.label.index, self.shift)
        }
    }
}
