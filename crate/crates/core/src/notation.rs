//! Text notation: polynomials, ideals, ring descriptors, order descriptors and degrees.
//!
//! Polynomial grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := unary ('^' integer)?
//! unary  := '-' unary | atom
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Division is only allowed by nonzero constants.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::rational::Q;
use crate::ring::{GradedRing, Ideal, Monomial, Multidegree, Polynomial};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                b'-' => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    if !d.is_constant() || d.is_zero() {
                        self.pos = at;
                        return self.err("division only by nonzero constants");
                    }
                    acc = acc.scale(&d.terms()[0].1.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                return Ok(-&self.factor()?);
            }
            Some(b'+') => {
                self.pos += 1;
                return self.factor();
            }
            _ => {}
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected exponent");
            }
            let e: u32 = core::str::from_utf8(&self.src[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .filter(|&e| e < 256)
                .ok_or(Error::Syntax { pos: start, msg: "exponent too large".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let q: Q = s.parse().map_err(|_| Error::Syntax { pos: start, msg: "bad number".into() })?;
                Ok(Polynomial::constant(q))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_' || self.src[self.pos] == b'\'')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(Polynomial::var(i)),
                    None => Err(Error::UnknownVariable(name.to_string())),
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses with an explicit variable list.
pub fn parse_with_names(text: &str, names: &[String]) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, names };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Polynomial in the variables of `S`.
pub fn parse_polynomial(text: &str, ring: &GradedRing) -> Result<Polynomial> {
    parse_with_names(text, ring.var_names())
}

/// Polynomial in the dual variables of `T`.
pub fn parse_dual_polynomial(text: &str, ring: &GradedRing) -> Result<Polynomial> {
    parse_with_names(text, ring.dual_var_names())
}

/// Comma-separated generators, commas inside parentheses respected.
pub fn split_list(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out.into_iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect()
}

pub fn parse_ideal(text: &str, ring: &Arc<GradedRing>) -> Result<Ideal> {
    let text = text.trim();
    let text = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).filter(|t| balanced(t)).unwrap_or(text);
    let mut gens = Vec::new();
    for part in split_list(text) {
        gens.push(parse_polynomial(part, ring)?);
    }
    Ideal::new(ring, gens)
}

fn balanced(s: &str) -> bool {
    let mut d = 0i32;
    for c in s.chars() {
        match c {
            '(' => d += 1,
            ')' => {
                d -= 1;
                if d < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    d == 0
}

/// `P2`, `P1xP1`, `P2xP2xP2`, or `blocks=[3,3,3]` (variable counts per block).
pub fn parse_ring(desc: &str) -> Result<GradedRing> {
    let d = desc.trim();
    if let Some(rest) = d.strip_prefix("blocks=") {
        let inner = rest.trim().trim_start_matches('[').trim_end_matches(']');
        let sizes: core::result::Result<Vec<usize>, _> = inner.split(',').map(|s| s.trim().parse::<usize>()).collect();
        let sizes = sizes.map_err(|_| Error::Ring(format!("bad block list `{}`", desc)))?;
        return GradedRing::from_block_sizes(&sizes);
    }
    let mut dims = Vec::new();
    for part in d.split(['x', 'X', '×']) {
        let part = part.trim();
        let n = part
            .strip_prefix('P')
            .or_else(|| part.strip_prefix("ℙ"))
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| Error::Ring(format!("bad ring descriptor `{}`", desc)))?;
        dims.push(n);
    }
    GradedRing::product(&dims)
}

fn var_list(spec: &str, ring: &GradedRing) -> Result<Vec<usize>> {
    let (sep, largest_first) = if spec.contains('<') { ('<', false) } else { ('>', true) };
    let mut vars = Vec::new();
    for name in spec.split(sep) {
        let name = name.trim();
        vars.push(ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?);
    }
    if !largest_first {
        vars.reverse();
    }
    if vars.len() != ring.nvars() {
        return Err(Error::Invalid("an order ranking must list every variable".into()));
    }
    Ok(vars)
}

/// `grevlex`, `lex`, `grevlex:y0<y1<y2`, `lex:c3<c2<c1<…`, `weight:[1,2,3]`, `weight:[…]:y2<y1<y0`.
pub fn parse_order(desc: &str, ring: &GradedRing) -> Result<MonomialOrder> {
    let n = ring.nvars();
    let d = desc.trim();
    let (kind, rest) = match d.split_once(':') {
        Some((k, r)) => (k.trim(), Some(r.trim())),
        None => (d, None),
    };
    let (base, ranking) = match kind {
        "grevlex" => (MonomialOrder::grevlex(n), rest),
        "lex" => (MonomialOrder::lex(n), rest),
        "weight" => {
            let rest = rest.ok_or_else(|| Error::Invalid("weight order needs a vector".into()))?;
            let close = rest.find(']').ok_or_else(|| Error::Invalid("weight vector needs `[...]`".into()))?;
            let inner = rest[..close].trim_start_matches('[');
            let w: core::result::Result<Vec<i64>, _> = inner.split(',').map(|s| s.trim().parse::<i64>()).collect();
            let w = w.map_err(|_| Error::Invalid(format!("bad weight vector `{}`", inner)))?;
            if w.len() != n {
                return Err(Error::Invalid(format!("weight vector has {} entries, ring has {} variables", w.len(), n)));
            }
            let tail = rest[close + 1..].trim().trim_start_matches(':').trim();
            (MonomialOrder::weight(w).map_err(Error::Invalid)?, if tail.is_empty() { None } else { Some(tail) })
        }
        _ => return Err(Error::Invalid(format!("unknown order `{}`", kind))),
    };
    match ranking {
        None => Ok(base),
        Some(r) => base.with_ranking(var_list(r, ring)?).map_err(Error::Invalid),
    }
}

/// `3`, `(1,1,0)` or `1,1,0`.
pub fn parse_degree(text: &str) -> Result<Multidegree> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    let v: core::result::Result<Vec<i32>, _> = t.split(',').map(|s| s.trim().parse::<i32>()).collect();
    v.map(Multidegree).map_err(|_| Error::Invalid(format!("bad degree `{}`", text)))
}

/// Monomial from an exponent list such as `[1,2,3]`.
pub fn monomial_from_exponents(exps: &[u32]) -> Monomial {
    Monomial::from_exps(exps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternary_quintic() {
        let r = GradedRing::projective(3);
        let f = parse_dual_polynomial("x0^3*x1*x2 + x0*x1^3*x3 + x2^3*x3^2", &r).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.multidegree(&r), Some(Multidegree(alloc::vec![5])));
    }

    #[test]
    fn zero_and_errors() {
        let r = GradedRing::projective(2);
        assert!(parse_polynomial("0", &r).unwrap().is_zero());
        assert_eq!(parse_polynomial("y0 + z0", &r), Err(Error::UnknownVariable("z0".into())));
        assert!(matches!(parse_polynomial("y0 +", &r), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_polynomial("y0 / y1", &r), Err(Error::Syntax { .. })));
    }

    #[test]
    fn minus_binds_looser_than_power() {
        let r = GradedRing::projective(2);
        let p = parse_polynomial("-y1^2", &r).unwrap();
        assert_eq!(p, -&parse_polynomial("y1^2", &r).unwrap());
        assert_eq!(parse_polynomial("y0^2 - -y1^2", &r).unwrap(), parse_polynomial("y0^2 + y1^2", &r).unwrap());
    }

    #[test]
    fn round_trip() {
        let r = GradedRing::projective(2);
        let p = parse_polynomial("-3/4*y0^2*y1 + (y1 - 2*y2)^2 - 7", &r).unwrap();
        let s = p.to_string_with(r.var_names());
        assert_eq!(parse_polynomial(&s, &r).unwrap(), p);
    }

    #[test]
    fn rings_and_orders() {
        assert_eq!(parse_ring("P2xP2xP2").unwrap().nvars(), 9);
        assert_eq!(parse_ring("blocks=[3,3,3]").unwrap(), parse_ring("P2xP2xP2").unwrap());
        assert_eq!(parse_ring("P1xP1").unwrap().rank(), 2);
        assert!(parse_ring("Q2").is_err());
        let r = parse_ring("P2xP2xP2").unwrap();
        let o = parse_order("lex:c3<c2<c1<b3<b2<b1<a3<a2<a1", &r).unwrap();
        assert_eq!(o.ranking(), &[0, 1, 2, 3, 4, 5, 6, 7, 8]);
        let w = parse_order("weight:[1,2,3,1,2,3,1,2,3]", &r).unwrap();
        assert!(matches!(w.kind(), crate::order::OrderKind::Weight(_)));
        let p2 = GradedRing::projective(2);
        assert_eq!(parse_order("grevlex:y0<y1<y2", &p2).unwrap().ranking(), &[2, 1, 0]);
    }
}
