//! Ring inference and loading of forms, ideals, degree ranges and tensor files.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde_json::Value;

use borderline_core::notation::{self, parse_degree};
use borderline_core::{DualForm, GradedRing, Ideal, MonomialOrder, Multidegree, Q};

use crate::error::{usage, CliError, Result};

/// Identifiers of the form `letter digits` in `text`.
fn identifiers(text: &str) -> Vec<(char, usize)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_ascii_alphabetic() && (i == 0 || !chars[i - 1].is_ascii_alphanumeric()) {
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j > i + 1 && (j == chars.len() || !chars[j].is_ascii_alphabetic()) {
                let n: usize = chars[i + 1..j].iter().collect::<String>().parse().unwrap_or(usize::MAX);
                out.push((c, n));
            }
            i = j;
        } else {
            i += 1;
        }
    }
    out
}

/// `P^n` from `x0..xn` (or `y0..yn`), or a product from `A1.., B1..` (or `a1.., b1..`).
pub fn infer_ring(texts: &[&str], dual: bool) -> Result<GradedRing> {
    let ids: Vec<(char, usize)> = texts.iter().flat_map(|t| identifiers(t)).collect();
    let single = if dual { 'x' } else { 'y' };
    if !ids.is_empty() && ids.iter().all(|(c, _)| *c == single) {
        let n = ids.iter().map(|(_, k)| *k).max().unwrap_or(0);
        return Ok(GradedRing::projective(n.max(1)));
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for (c, k) in &ids {
        let letter = if dual { c.is_ascii_uppercase() } else { c.is_ascii_lowercase() };
        let b = (c.to_ascii_lowercase() as u8).wrapping_sub(b'a') as usize;
        if !letter || b >= 8 || *k == 0 {
            return usage(format!("cannot infer the ring from `{}{}`; pass --ring", c, k));
        }
        let e = sizes.entry(b).or_default();
        *e = (*e).max(*k);
    }
    if sizes.is_empty() {
        return usage("cannot infer the ring from a constant; pass --ring");
    }
    let blocks = sizes.keys().max().unwrap() + 1;
    let list: Vec<usize> = (0..blocks).map(|b| sizes.get(&b).copied().unwrap_or(0)).collect();
    if list.contains(&0) {
        return usage("block letters must be consecutive from a/A; pass --ring");
    }
    Ok(GradedRing::from_block_sizes(&list)?)
}

pub fn ring(desc: Option<&str>, texts: &[&str], dual: bool) -> Result<Arc<GradedRing>> {
    let r = match desc {
        Some(d) => notation::parse_ring(d)?,
        None => infer_ring(texts, dual)?,
    };
    Ok(Arc::new(r))
}

pub fn order(desc: Option<&str>, ring: &GradedRing) -> Result<MonomialOrder> {
    match desc {
        Some(d) => Ok(notation::parse_order(d, ring)?),
        None => Ok(MonomialOrder::grevlex(ring.nvars())),
    }
}

pub fn form(text: &str, ring: &Arc<GradedRing>) -> Result<DualForm> {
    let p = notation::parse_dual_polynomial(text, ring)?;
    if p.is_zero() {
        return usage("the form is zero");
    }
    Ok(DualForm::new(ring, p)?)
}

pub fn ideal(text: &str, ring: &Arc<GradedRing>) -> Result<Ideal> {
    Ok(notation::parse_ideal(text, ring)?)
}

/// `lo..hi` (inclusive), both ends in the notation of `parse_degree`.
pub fn range(text: Option<&str>, ring: &GradedRing, default_top: i32) -> Result<(Multidegree, Multidegree)> {
    let s = ring.rank();
    let (lo, hi) = match text {
        None => (Multidegree::zero(s), Multidegree(vec![default_top; s])),
        Some(t) => {
            let Some((a, b)) = t.split_once("..") else {
                return usage(format!("bad range `{}`; expected a..b", t));
            };
            let b = b.trim_start_matches('=');
            (parse_degree(a)?, parse_degree(b)?)
        }
    };
    if lo.len() != s || hi.len() != s {
        return usage(format!("range ends must have {} entries", s));
    }
    if !lo.leq(&hi) || !lo.is_nonnegative() {
        return usage("range must satisfy 0 ≤ lo ≤ hi");
    }
    Ok((lo, hi))
}

/// Dense nested array, inline JSON or `@path` relative to `base`.
pub fn tensor(text: &str, base: &Path) -> Result<DualForm> {
    let raw = match text.strip_prefix('@') {
        Some(p) => {
            let path = base.join(p);
            std::fs::read_to_string(&path).map_err(|source| CliError::Io { path, source })?
        }
        None => text.to_string(),
    };
    let value: Value = serde_json::from_str(&raw)?;
    let mut shape = Vec::new();
    let mut cur = &value;
    while let Value::Array(items) = cur {
        if items.is_empty() {
            return usage("tensor arrays must be nonempty");
        }
        shape.push(items.len());
        cur = &items[0];
    }
    let mut entries = Vec::new();
    flatten(&value, &shape, &mut entries)?;
    Ok(DualForm::from_tensor(&shape, &entries)?)
}

fn flatten(v: &Value, shape: &[usize], out: &mut Vec<Q>) -> Result<()> {
    match (v, shape.split_first()) {
        (Value::Array(items), Some((&n, rest))) if items.len() == n => {
            for it in items {
                flatten(it, rest, out)?;
            }
            Ok(())
        }
        (Value::Number(x), None) => match x.as_i64() {
            Some(k) => {
                out.push(Q::from_int(k));
                Ok(())
            }
            None => usage(format!("tensor entry {} is not an integer; write rationals as strings", x)),
        },
        (Value::String(s), None) => {
            out.push(Q::from_str(s.trim()).map_err(|_| CliError::Usage(format!("bad rational `{}`", s)))?);
            Ok(())
        }
        _ => usage("tensor is not a rectangular array of numbers"),
    }
}

/// Tensor entries as a dense nested JSON array.
pub fn tensor_json(f: &DualForm) -> Value {
    let ring = f.ring();
    let sizes: Vec<usize> = ring.blocks().iter().map(|b| b.size).collect();
    fn build(prefix: &mut Vec<usize>, sizes: &[usize], f: &DualForm) -> Value {
        if prefix.len() == sizes.len() {
            let ring = f.ring();
            let mut m = borderline_core::Monomial::one();
            for (b, &i) in prefix.iter().enumerate() {
                m = m.mul(&borderline_core::Monomial::var(ring.block_vars(b)[i]));
            }
            let c = f.poly().coefficient(&m);
            return match c.is_integer() {
                true => Value::from(c.to_string().parse::<i64>().unwrap_or(0)),
                false => Value::from(c.to_string()),
            };
        }
        let k = sizes[prefix.len()];
        Value::Array(
            (0..k)
                .map(|i| {
                    prefix.push(i);
                    let v = build(prefix, sizes, f);
                    prefix.pop();
                    v
                })
                .collect(),
        )
    }
    build(&mut Vec::new(), &sizes, f)
}
