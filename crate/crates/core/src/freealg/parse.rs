//! Element syntax: `z[i,n]`, `z[(a,b),n]`, `E[i,n]`, `P[i,j]`, brackets
//! `[x,y]_{f}` and `[x3,x2,x1]_q`, suspension `s^n(x)`, scalars, `+ - * /`
//! and juxtaposition.

use super::generator::{Family, Generator, Label};
use super::poly::{zab, NCPolynomial};
use crate::error::Result;
use crate::scalar::{scalar_expr, Cursor, RationalFunctionV};

pub fn parse_element(s: &str) -> Result<NCPolynomial> {
    let mut c = Cursor::new(s);
    let x = expr(&mut c)?;
    if !c.at_end() {
        return Err(c.err("trailing input"));
    }
    Ok(x)
}

fn expr(c: &mut Cursor) -> Result<NCPolynomial> {
    let mut acc = term(c)?;
    loop {
        if c.eat(b'+') {
            acc = acc.add(&term(c)?);
        } else if c.peek() == Some(b'-') {
            c.pos += 1;
            acc = acc.sub(&term(c)?);
        } else {
            return Ok(acc);
        }
    }
}

fn starts_factor(b: Option<u8>) -> bool {
    matches!(b, Some(x) if x == b'[' || x == b'(' || x.is_ascii_alphanumeric())
}

fn as_scalar(p: &NCPolynomial, c: &Cursor) -> Result<RationalFunctionV> {
    if p.is_zero() {
        return Ok(RationalFunctionV::zero());
    }
    match p.terms().iter().next() {
        Some((w, coef)) if p.len() == 1 && w.is_empty() => Ok(coef.clone()),
        _ => Err(c.err("expected a scalar")),
    }
}

fn term(c: &mut Cursor) -> Result<NCPolynomial> {
    let mut acc = unary(c)?;
    loop {
        if c.eat(b'*') {
            acc = acc.mul(&unary(c)?);
        } else if c.eat(b'/') {
            let d = unary(c)?;
            let d = as_scalar(&d, c)?;
            acc = acc.scale(&d.inv()?);
        } else if starts_factor(c.peek()) {
            acc = acc.mul(&unary(c)?);
        } else {
            return Ok(acc);
        }
    }
}

fn unary(c: &mut Cursor) -> Result<NCPolynomial> {
    if c.peek() == Some(b'-') {
        c.pos += 1;
        return Ok(unary(c)?.neg());
    }
    let base = atom(c)?;
    if c.eat(b'^') {
        let e = if c.eat(b'(') {
            let e = c.integer()?;
            c.expect(b')')?;
            e
        } else {
            c.integer()?
        };
        if e < 0 {
            let s = as_scalar(&base, c)?;
            return Ok(NCPolynomial::scalar(s.pow(e)?));
        }
        let mut acc = NCPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        return Ok(acc);
    }
    Ok(base)
}

fn subscript(c: &mut Cursor) -> Result<RationalFunctionV> {
    if c.eat(b'{') {
        let f = scalar_expr(c)?;
        c.expect(b'}')?;
        return Ok(f);
    }
    match c.peek() {
        Some(b'q') => {
            c.pos += 1;
            Ok(RationalFunctionV::q_pow(1))
        }
        Some(b'v') => {
            c.pos += 1;
            Ok(RationalFunctionV::v())
        }
        _ => Ok(RationalFunctionV::from_int(c.integer()?)),
    }
}

fn atom(c: &mut Cursor) -> Result<NCPolynomial> {
    match c.peek() {
        Some(b'(') => {
            c.pos += 1;
            let x = expr(c)?;
            c.expect(b')')?;
            Ok(x)
        }
        Some(b'[') => {
            c.pos += 1;
            let mut items = vec![expr(c)?];
            while c.eat(b',') {
                items.push(expr(c)?);
            }
            c.expect(b']')?;
            if items.len() < 2 {
                return Err(c.err("bracket needs at least two entries"));
            }
            c.expect(b'_')?;
            let f = subscript(c)?;
            NCPolynomial::iterated_bracket(&items, &f)
        }
        Some(d) if d.is_ascii_digit() => Ok(NCPolynomial::scalar(RationalFunctionV::from_int(c.integer()?))),
        Some(_) => {
            let id = c.ident().ok_or_else(|| c.err("unexpected character"))?;
            ident_atom(c, &id)
        }
        None => Err(c.err("unexpected end of input")),
    }
}

fn ident_atom(c: &mut Cursor, id: &str) -> Result<NCPolynomial> {
    match id {
        "q" => return Ok(NCPolynomial::scalar(RationalFunctionV::q_pow(1))),
        "v" => return Ok(NCPolynomial::scalar(RationalFunctionV::v())),
        "s" => {
            c.expect(b'^')?;
            let n = if c.eat(b'{') {
                let n = c.integer()?;
                c.expect(b'}')?;
                n
            } else {
                c.integer()?
            };
            c.expect(b'(')?;
            let x = expr(c)?;
            c.expect(b')')?;
            return Ok(x.suspend(n as i32));
        }
        _ => {}
    }
    let family = match id {
        "z" => Family::Z,
        "E" => Family::E,
        "F" => Family::F,
        "G" => Family::G,
        "P" => Family::Pbw,
        _ => match id.strip_prefix('D').and_then(|k| k.parse::<u16>().ok()) {
            Some(k) => Family::Disk(k),
            None => return Err(c.err(&format!("unknown identifier '{id}'"))),
        },
    };
    c.expect(b'[')?;
    if family == Family::Z && c.eat(b'(') {
        let a = c.integer()?;
        c.expect(b',')?;
        let b = c.integer()?;
        c.expect(b')')?;
        c.expect(b',')?;
        let n = c.integer()?;
        c.expect(b']')?;
        if a < 1 || b < 1 {
            return Err(c.err("chord endpoints must be positive"));
        }
        return zab(a as u32, b as u32, n as i32, b as u32);
    }
    let i = c.integer()?;
    c.expect(b',')?;
    let n = c.integer()?;
    c.expect(b']')?;
    if i < 0 {
        return Err(c.err("negative generator index"));
    }
    if family == Family::Pbw {
        if n < 0 {
            return Err(c.err("negative generator index"));
        }
        return Ok(NCPolynomial::gen(Generator::new(Label::pbw(i as u32, n as u32), 0)));
    }
    Ok(NCPolynomial::gen(Generator::new(Label::new(family, i as u32), n as i32)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::poly::qp;

    #[test]
    fn parses_brackets_and_suspension() {
        let a = parse_element("[z[2,0], z[1,0]]_v").unwrap();
        assert_eq!(a, zab(1, 3, 0, 3).unwrap());
        let b = parse_element("s^1([z[2,0],z[1,0]]_{v})").unwrap();
        assert_eq!(b, zab(1, 3, 1, 3).unwrap());
        let c = parse_element("z[(1,4),-1]").unwrap();
        assert_eq!(c, zab(1, 4, -1, 4).unwrap());
        let d = parse_element("[E[1,0], E[1,1]]_{v^-2} - v^-1/(v^2-1)").unwrap();
        assert_eq!(d.len(), 3);
        let e = parse_element("2 z[1,0] z[2,0] - v*z[2,0]*z[1,0]").unwrap();
        assert_eq!(e.coefficient(&[Generator::z(2, 0), Generator::z(1, 0)]), -qp());
    }

    #[test]
    fn rejects_garbage() {
        for s in ["z[1", "[z[1,0]]_q", "foo[1,2]", "z[1,0] +", "(z[1,0]", "z[1,0]/z[2,0]"] {
            assert!(parse_element(s).is_err(), "{s}");
        }
    }
}
