use crate::error::{Error, Result};
use crate::freealg::{qp, qp_pow, zab, NCPolynomial, Relation};
use crate::scalar::RationalFunctionV;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A graded chord between marked intervals `a < b`, standing for `z_{(a,b),n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GradedChord {
    pub a: u32,
    pub b: u32,
    pub shift: i32,
}

impl GradedChord {
    pub fn new(a: u32, b: u32, shift: i32) -> Result<Self> {
        if a < 1 || b <= a {
            return Err(Error::InvalidInterval { a: a as i64, b: b as i64, m: 0 });
        }
        Ok(GradedChord { a, b, shift })
    }

    pub fn shifted(&self, n: i32) -> Self {
        GradedChord { shift: self.shift + n, ..*self }
    }

    /// `z_{(a,b),n}` in the quiver generators.
    pub fn element(&self) -> NCPolynomial {
        zab(self.a, self.b, self.shift, self.b).expect("chord endpoints are ordered")
    }
}

impl fmt::Display for GradedChord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z[({},{}),{}]", self.a, self.b, self.shift)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Crossing {
    Disjoint,
    /// The chords end on a common marked interval.
    SharedEndpoint(u32),
    /// Endpoints alternate around the boundary.
    Interleaved,
    Equal,
}

/// Classifies two chords of the same disk by their endpoints; shifts are ignored.
pub fn crossing(x: &GradedChord, y: &GradedChord) -> Crossing {
    if (x.a, x.b) == (y.a, y.b) {
        return Crossing::Equal;
    }
    for e in [x.a, x.b] {
        if e == y.a || e == y.b {
            return Crossing::SharedEndpoint(e);
        }
    }
    let inside = |p: u32| x.a < p && p < x.b;
    if inside(y.a) != inside(y.b) {
        Crossing::Interleaved
    } else {
        Crossing::Disjoint
    }
}

fn chord(a: u32, b: u32, n: i32) -> NCPolynomial {
    GradedChord { a, b, shift: n }.element()
}

/// `[x, y]_1` for interleaved chords, expanded on the quiver side.
///
/// With `x = (a,c)` at shift `n` and `y = (b,d)` at shift `n − k`:
/// `k = 0` gives `(q − q^{−1}) z_{(a,d),n} z_{(b,c),n}`, `k = 1` gives
/// `(q^{−1} − q) z_{(a,b),n} z_{(c,d),n−1}`, and every other `k` gives 0.
/// When `x` starts after `y` the roles swap and the sign flips.
pub fn skein_commutator(x: &GradedChord, y: &GradedChord) -> Result<Relation> {
    if crossing(x, y) != Crossing::Interleaved {
        return Err(Error::NoCrossing(x.to_string(), y.to_string()));
    }
    let lhs = NCPolynomial::q_bracket(&x.element(), &y.element(), &RationalFunctionV::one());
    let (first, second, sign) = if x.a < y.a { (x, y, 1) } else { (y, x, -1) };
    let (a, c, b, d) = (first.a, first.b, second.a, second.b);
    let n = first.shift;
    let diff = &qp() - &qp_pow(-1);
    let rhs = match n - second.shift {
        0 => chord(a, d, n).mul(&chord(b, c, n)).scale(&diff),
        1 => chord(a, b, n).mul(&chord(c, d, n - 1)).scale(&-&diff),
        _ => NCPolynomial::zero(),
    };
    let rhs = if sign < 0 { rhs.neg() } else { rhs };
    Ok(Relation::new(format!("skein {x} {y}"), lhs, rhs))
}

/// The three ways two chords `a < b < c` can share an endpoint, in the
/// orientation `(X, Y)` for which the relation is stated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Corner {
    /// `X = (a,c)`, `Y = (b,c)`.
    Right,
    /// `X = (a,b)`, `Y = (a,c)`.
    Left,
    /// `X = (b,c)`, `Y = (a,b)`.
    Middle,
}

fn corner(x: &GradedChord, y: &GradedChord) -> Option<Corner> {
    if x.b == y.b && x.a < y.a {
        Some(Corner::Right)
    } else if x.a == y.a && x.b < y.b {
        Some(Corner::Left)
    } else if x.a == y.b {
        Some(Corner::Middle)
    } else {
        None
    }
}

/// `XY − q^r YX = R` for chords ending on a common marked interval.
///
/// In the stated orientation let `j` be the shift of `Y` minus that of `X`
/// and `i = −j`, plus one in the middle corner. Then `r = −(−1)^i` for
/// `i ≥ 1` and `r = (−1)^i` otherwise, and `R` vanishes unless `i = 1`,
/// where it is the third side of the triangle the chords cut out (the
/// finger and the two skein relations). The opposite orientation is
/// rescaled from this one.
pub fn boundary_skein(x: &GradedChord, y: &GradedChord) -> Result<Relation> {
    if !matches!(crossing(x, y), Crossing::SharedEndpoint(_)) {
        return Err(Error::NoSharedEndpoint(x.to_string(), y.to_string()));
    }
    let (cx, cy, swapped, kind) = match corner(x, y) {
        Some(k) => (x, y, false, k),
        None => (y, x, true, corner(y, x).expect("shared endpoint has a corner")),
    };
    let mut i = cx.shift - cy.shift;
    if kind == Corner::Middle {
        i += 1;
    }
    let parity = if i.rem_euclid(2) == 0 { 1 } else { -1 };
    let r = if i >= 1 { -parity } else { parity };
    let third = if i == 1 {
        match kind {
            Corner::Right => chord(cx.a, cy.a, cx.shift),
            Corner::Left => chord(cx.b, cy.b, cy.shift),
            Corner::Middle => chord(cy.a, cx.b, cx.shift),
        }
    } else {
        NCPolynomial::zero()
    };
    let (r, rhs) = if swapped {
        // YX − q^r XY = R  ⇔  XY − q^{−r} YX = −q^{−r} R
        (-r, third.scale(&-&qp_pow(-r as i64)))
    } else {
        (r, third)
    };
    let lhs = NCPolynomial::q_bracket(&x.element(), &y.element(), &qp_pow(r as i64));
    Ok(Relation::new(format!("boundary {x} {y}"), lhs, rhs))
}

/// `i(c₂,c₁)` from `i(c₁,c₂)`, using `i(c₁,c₂) + i(c₂,c₁) = 1`.
pub fn reverse_index(i12: i32) -> i32 {
    1 - i12
}

/// `i(c₁[n], c₂[k]) = i(c₁,c₂) + n − k`.
pub fn shifted_index(i12: i32, n: i32, k: i32) -> i32 {
    i12 + n - k
}

/// Intersection indices `i(E_k, a_j)` between the boundary arcs and the
/// resolution curves of the standard-form square.
pub const STANDARD_FORM_INDICES: [(u32, u32, i32); 8] =
    [(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 2, 0), (3, 3, 1), (4, 3, 1), (4, 4, 1), (1, 4, 0)];
