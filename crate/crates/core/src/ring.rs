//! Multigraded polynomial rings over the rationals.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Upper bound on the number of variables of any ring (auxiliary variables included).
pub const MAX_VARS: usize = 16;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Multidegree(pub Vec<i32>);

impl Multidegree {
    pub fn zero(s: usize) -> Multidegree {
        Multidegree(vec![0; s])
    }

    pub fn unit(s: usize, i: usize) -> Multidegree {
        let mut v = vec![0; s];
        v[i] = 1;
        Multidegree(v)
    }

    pub fn ones(s: usize) -> Multidegree {
        Multidegree(vec![1; s])
    }

    pub fn from_slice(v: &[i32]) -> Multidegree {
        Multidegree(v.to_vec())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Componentwise `≤`.
    pub fn leq(&self, o: &Multidegree) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().map(|&a| a as i64).sum()
    }

    pub fn sub(&self, o: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn join(&self, o: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// All `u` with `lo ≤ u ≤ hi`, in lexicographic order.
    pub fn box_range(lo: &Multidegree, hi: &Multidegree) -> Vec<Multidegree> {
        let mut out = Vec::new();
        if !lo.leq(hi) {
            return out;
        }
        let mut cur = lo.clone();
        loop {
            out.push(cur.clone());
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur.0[i] < hi.0[i] {
                    cur.0[i] += 1;
                    break;
                }
                cur.0[i] = lo.0[i];
            }
        }
    }
}

impl Add for &Multidegree {
    type Output = Multidegree;
    fn add(self, o: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, ")")
    }
}

pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub size: usize,
}

/// Cox ring of a product of projective spaces (or, unvalidated, a general grading).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRing {
    blocks: Vec<Block>,
    names: Vec<String>,
    dual_names: Vec<String>,
    grading: Vec<Multidegree>,
    block_of: Vec<usize>,
    product: bool,
}

const BLOCK_LETTERS: &[u8] = b"abcdefgh";

impl GradedRing {
    /// `ℙ^{n}`: variables `y0..yn`, dual variables `x0..xn`.
    pub fn projective(n: usize) -> GradedRing {
        GradedRing::product(&[n]).expect("valid projective space")
    }

    /// `ℙ^{n_1} × … × ℙ^{n_s}`.
    pub fn product(dims: &[usize]) -> Result<GradedRing> {
        let sizes: Vec<usize> = dims.iter().map(|n| n + 1).collect();
        GradedRing::from_block_sizes(&sizes)
    }

    /// Blocks given by their variable counts, so `[3,3,3]` is `ℙ²×ℙ²×ℙ²`.
    pub fn from_block_sizes(sizes: &[usize]) -> Result<GradedRing> {
        if sizes.is_empty() || sizes.iter().any(|&k| k == 0) {
            return Err(Error::Ring("every block needs at least one variable".into()));
        }
        if sizes.len() > BLOCK_LETTERS.len() {
            return Err(Error::Ring(format!("at most {} blocks", BLOCK_LETTERS.len())));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_VARS - 1 {
            return Err(Error::Ring(format!("at most {} variables", MAX_VARS - 1)));
        }
        let s = sizes.len();
        let mut blocks = Vec::new();
        let mut names = Vec::new();
        let mut dual_names = Vec::new();
        let mut grading = Vec::new();
        let mut block_of = Vec::new();
        for (b, &k) in sizes.iter().enumerate() {
            if s == 1 {
                blocks.push(Block { name: "y".into(), size: k });
                for i in 0..k {
                    names.push(format!("y{}", i));
                    dual_names.push(format!("x{}", i));
                }
            } else {
                let c = BLOCK_LETTERS[b] as char;
                blocks.push(Block { name: c.to_string(), size: k });
                for i in 1..=k {
                    names.push(format!("{}{}", c, i));
                    dual_names.push(format!("{}{}", c.to_ascii_uppercase(), i));
                }
            }
            for _ in 0..k {
                grading.push(Multidegree::unit(s, b));
                block_of.push(b);
            }
        }
        Ok(GradedRing { blocks, names, dual_names, grading, block_of, product: true })
    }

    /// Arbitrary grading with nonnegative, nonzero variable degrees; flagged unvalidated.
    pub fn general(names: Vec<String>, grading: Vec<Multidegree>) -> Result<GradedRing> {
        if names.len() != grading.len() || names.is_empty() || names.len() > MAX_VARS - 1 {
            return Err(Error::Ring("bad variable list".into()));
        }
        let s = grading[0].len();
        for g in &grading {
            if g.len() != s || !g.is_nonnegative() || g.total() == 0 {
                return Err(Error::Ring(format!("unsupported variable degree {}", g)));
            }
        }
        let dual_names = names.iter().map(|n| format!("{}'", n)).collect();
        Ok(GradedRing {
            blocks: vec![Block { name: "v".into(), size: names.len() }],
            block_of: vec![0; names.len()],
            names,
            dual_names,
            grading,
            product: false,
        })
    }

    pub fn is_validated(&self) -> bool {
        self.product
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Picard rank `s`.
    pub fn rank(&self) -> usize {
        self.grading[0].len()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn dual_var_names(&self) -> &[String] {
        &self.dual_names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn dual_var_index(&self, name: &str) -> Option<usize> {
        self.dual_names.iter().position(|n| n == name)
    }

    pub fn var_degree(&self, i: usize) -> &Multidegree {
        &self.grading[i]
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// Variable indices belonging to block `b`.
    pub fn block_vars(&self, b: usize) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.block_of[i] == b).collect()
    }

    pub fn zero_degree(&self) -> Multidegree {
        Multidegree::zero(self.rank())
    }

    pub fn one_degree(&self) -> Multidegree {
        Multidegree::ones(self.rank())
    }

    /// Degree built from an integer (single grading) for convenience.
    pub fn deg(&self, v: &[i32]) -> Multidegree {
        Multidegree::from_slice(v)
    }

    /// Generators of the nef cone: the standard basis vectors.
    pub fn nef_gens(&self) -> Vec<Multidegree> {
        (0..self.rank()).map(|i| Multidegree::unit(self.rank(), i)).collect()
    }

    /// Products of one variable per block.
    pub fn irrelevant_gens(&self) -> Vec<Monomial> {
        let mut acc = vec![Monomial::one()];
        for b in 0..self.blocks.len() {
            let vars = self.block_vars(b);
            let mut next = Vec::new();
            for m in &acc {
                for &v in &vars {
                    next.push(m.mul(&Monomial::var(v)));
                }
            }
            acc = next;
        }
        acc.sort_by(|a, b| b.cmp(a));
        acc
    }

    pub fn multidegree(&self, m: &Monomial) -> Multidegree {
        let mut d = vec![0i32; self.rank()];
        for i in 0..self.nvars() {
            let e = m.exp(i) as i32;
            if e != 0 {
                for (k, g) in self.grading[i].0.iter().enumerate() {
                    d[k] += e * g;
                }
            }
        }
        Multidegree(d)
    }

    pub fn graded_piece_dimension(&self, v: &Multidegree) -> u64 {
        if !v.is_nonnegative() {
            return 0;
        }
        if self.product {
            self.blocks
                .iter()
                .zip(&v.0)
                .map(|(b, &d)| binomial(b.size as i64 - 1 + d as i64, b.size as i64 - 1))
                .product()
        } else {
            self.monomial_basis(v).len() as u64
        }
    }

    /// Monomials of degree `v`, largest first in the canonical order.
    pub fn monomial_basis(&self, v: &Multidegree) -> Vec<Monomial> {
        if !v.is_nonnegative() || v.len() != self.rank() {
            return Vec::new();
        }
        let mut out = Vec::new();
        if self.product {
            let mut acc = vec![Monomial::one()];
            for (b, &d) in v.0.iter().enumerate() {
                let vars = self.block_vars(b);
                let pieces = monomials_of_degree(&vars, d as u32);
                let mut next = Vec::with_capacity(acc.len() * pieces.len());
                for m in &acc {
                    for p in &pieces {
                        next.push(m.mul(p));
                    }
                }
                acc = next;
            }
            out = acc;
        } else {
            let all: Vec<usize> = (0..self.nvars()).collect();
            for t in 0..=v.total() as u32 {
                for m in monomials_of_degree(&all, t) {
                    if self.multidegree(&m) == *v {
                        out.push(m);
                    }
                }
            }
        }
        out.sort_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }

    /// Total-degree monomials in all variables (ℤ-grading by number of factors).
    pub fn monomials_of_total_degree(&self, d: u32) -> Vec<Monomial> {
        let all: Vec<usize> = (0..self.nvars()).collect();
        let mut v = monomials_of_degree(&all, d);
        v.sort_by(|a, b| b.cmp(a));
        v
    }
}

/// All monomials of total degree `d` in the listed variables.
pub fn monomials_of_degree(vars: &[usize], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = Monomial::one();
    fn rec(vars: &[usize], d: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if vars.len() == 1 {
            let mut m = *cur;
            m.set_exp(vars[0], d);
            out.push(m);
            return;
        }
        if vars.is_empty() {
            if d == 0 {
                out.push(*cur);
            }
            return;
        }
        for e in (0..=d).rev() {
            cur.set_exp(vars[0], e);
            rec(&vars[1..], d - e, cur, out);
        }
        cur.set_exp(vars[0], 0);
    }
    rec(vars, d, &mut cur, &mut out);
    out
}

/// Exponent vector; ordered by graded reverse lexicographic order with `v0 > v1 > …`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    e: [u8; MAX_VARS],
    deg: u16,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { e: [0; MAX_VARS], deg: 0 }
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::one();
        m.e[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::one();
        for (i, &x) in exps.iter().enumerate() {
            m.set_exp(i, x);
        }
        m
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.e[i] as u32
    }

    pub fn set_exp(&mut self, i: usize, x: u32) {
        assert!(x < 256, "exponent overflow");
        self.deg = self.deg - self.e[i] as u16 + x as u16;
        self.e[i] = x as u8;
    }

    pub fn exps(&self, n: usize) -> Vec<u32> {
        self.e[..n].iter().map(|&x| x as u32).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            let s = self.e[i] as u16 + o.e[i] as u16;
            assert!(s < 256, "exponent overflow");
            m.e[i] = s as u8;
        }
        m.deg = self.deg + o.deg;
        m
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.deg <= o.deg && (0..MAX_VARS).all(|i| self.e[i] <= o.e[i])
    }

    /// `o / self` when `self | o`.
    pub fn quotient_of(&self, o: &Monomial) -> Option<Monomial> {
        if !self.divides(o) {
            return None;
        }
        let mut m = *o;
        for i in 0..MAX_VARS {
            m.e[i] -= self.e[i];
        }
        m.deg = o.deg - self.deg;
        Some(m)
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        let mut d = 0u16;
        for i in 0..MAX_VARS {
            m.e[i] = self.e[i].max(o.e[i]);
            d += m.e[i] as u16;
        }
        m.deg = d;
        m
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        let mut d = 0u16;
        for i in 0..MAX_VARS {
            m.e[i] = self.e[i].min(o.e[i]);
            d += m.e[i] as u16;
        }
        m.deg = d;
        m
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.e[i] == 0 || o.e[i] == 0)
    }

    /// Bitmask of variables that occur.
    pub fn support(&self) -> u32 {
        let mut s = 0u32;
        for i in 0..MAX_VARS {
            if self.e[i] != 0 {
                s |= 1 << i;
            }
        }
        s
    }

    pub fn raw(&self) -> &[u8; MAX_VARS] {
        &self.e
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, names }
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Monomial) -> Ordering {
        self.deg.cmp(&o.deg).then_with(|| {
            for i in (0..MAX_VARS).rev() {
                if self.e[i] != o.e[i] {
                    return o.e[i].cmp(&self.e[i]);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Monomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&i| self.e[i] != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.e[..last])
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, name) in self.names.iter().enumerate() {
            let e = self.m.exp(i);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", name)?;
            } else {
                write!(f, "{}^{}", name, e)?;
            }
        }
        Ok(())
    }
}

/// Polynomial with exact rational coefficients; terms sorted by the canonical order, largest first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Q)>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: Q) -> Polynomial {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Q::ONE)
    }

    pub fn term(m: Monomial, c: Q) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Polynomial {
        Polynomial::term(m, Q::ONE)
    }

    pub fn var(i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(i))
    }

    /// Collects like terms; order of the input is irrelevant.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Q)>>(it: I) -> Polynomial {
        let mut map: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            let e = map.entry(m).or_insert(Q::ZERO);
            *e += &c;
        }
        let mut terms: Vec<(Monomial, Q)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.reverse();
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Q)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Q)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Q::ZERO,
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    /// Leading term in the canonical order.
    pub fn leading(&self) -> Option<&(Monomial, Q)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a.clone())).collect() }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => Polynomial::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn is_homogeneous(&self, ring: &GradedRing) -> bool {
        self.multidegree(ring).is_some() || self.is_zero()
    }

    /// Common multidegree of the terms, if there is one.
    pub fn multidegree(&self, ring: &GradedRing) -> Option<Multidegree> {
        let mut it = self.terms.iter();
        let d = ring.multidegree(&it.next()?.0);
        for (m, _) in it {
            if ring.multidegree(m) != d {
                return None;
            }
        }
        Some(d)
    }

    pub fn homogeneous_components(&self, ring: &GradedRing) -> BTreeMap<Multidegree, Polynomial> {
        let mut map: BTreeMap<Multidegree, Vec<(Monomial, Q)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            map.entry(ring.multidegree(m)).or_default().push((*m, c.clone()));
        }
        map.into_iter().map(|(d, t)| (d, Polynomial { terms: t })).collect()
    }

    /// `∂/∂v_i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().filter(|(m, _)| m.exp(i) > 0).map(|(m, c)| {
            let mut q = *m;
            let e = m.exp(i);
            q.set_exp(i, e - 1);
            (q, c * &Q::from_int(e as i64))
        }))
    }

    /// Substitutes `v_i ↦ images[i]` for every variable `i < images.len()`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            let mut rest = *m;
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = &t * &img.pow(e);
                    rest.set_exp(i, 0);
                }
            }
            acc = &acc + &t.mul_monomial(&rest);
        }
        acc
    }

    pub fn evaluate(&self, point: &[Q]) -> Q {
        let mut acc = Q::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Largest variable index that occurs, plus one.
    pub fn var_span(&self) -> usize {
        self.terms
            .iter()
            .map(|(m, _)| (0..MAX_VARS).rev().find(|&i| m.exp(i) > 0).map_or(0, |i| i + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolynomialDisplay<'a> {
        PolynomialDisplay { p: self, names }
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        format!("{}", self.display(names))
    }
}

fn merge(a: &[(Monomial, Q)], b: &[(Monomial, Q)], negate_b: bool) -> Vec<(Monomial, Q)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = if negate_b { -&t.1 } else { t.1.clone() };
        out.push((t.0, c));
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        Polynomial { terms: merge(&self.terms, &o.terms, false) }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        Polynomial { terms: merge(&self.terms, &o.terms, true) }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        for (m, c) in &small.terms {
            acc = &acc + &big.mul_term(m, c);
        }
        acc
    }
}

impl Ord for Polynomial {
    fn cmp(&self, o: &Polynomial) -> Ordering {
        for (a, b) in self.terms.iter().zip(&o.terms) {
            let c = a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1));
            if c != Ordering::Equal {
                return c;
            }
        }
        self.terms.len().cmp(&o.terms.len())
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, o: &Polynomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.var_span().max(1)).map(|i| format!("v{}", i)).collect();
        write!(f, "{}", self.display(&names))
    }
}

pub struct PolynomialDisplay<'a> {
    p: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.p.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m.display(self.names))?;
            } else {
                write!(f, "{}*{}", a, m.display(self.names))?;
            }
        }
        Ok(())
    }
}

/// Homogeneous ideal, generators canonicalized (monic, deduplicated, sorted).
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<GradedRing>,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: &Arc<GradedRing>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if g.var_span() > ring.nvars() {
                return Err(Error::Invalid("generator uses variables outside the ring".into()));
            }
            if !g.is_homogeneous(ring) {
                return Err(Error::NotHomogeneous(g.to_string_with(ring.var_names())));
            }
        }
        Ok(Ideal::from_homogeneous(ring, gens))
    }

    /// Caller guarantees homogeneity.
    pub(crate) fn from_homogeneous(ring: &Arc<GradedRing>, gens: Vec<Polynomial>) -> Ideal {
        let mut gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
        gens.sort_by(|a, b| b.cmp(a));
        gens.dedup();
        Ideal { ring: ring.clone(), gens }
    }

    pub fn zero(ring: &Arc<GradedRing>) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Arc<GradedRing>) -> Ideal {
        Ideal { ring: ring.clone(), gens: vec![Polynomial::one()] }
    }

    pub fn monomial(ring: &Arc<GradedRing>, ms: &[Monomial]) -> Ideal {
        Ideal::from_homogeneous(ring, ms.iter().map(|m| Polynomial::monomial(*m)).collect())
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.len() == 1)
    }

    pub fn sum(&self, o: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(o.gens.iter().cloned());
        Ideal::from_homogeneous(&self.ring, g)
    }

    pub fn with_gens(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut g = self.gens.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(&self.ring, g)
    }

    pub fn product(&self, o: &Ideal) -> Ideal {
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &o.gens {
                g.push(a * b);
            }
        }
        Ideal::from_homogeneous(&self.ring, g)
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// Generator degrees, in generator order.
    pub fn gen_degrees(&self) -> Vec<Multidegree> {
        self.gens.iter().map(|g| g.multidegree(&self.ring).unwrap_or_else(|| self.ring.zero_degree())).collect()
    }

    /// Maximal total degree of a generator.
    pub fn max_gen_degree(&self) -> u32 {
        self.gens.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0)
    }

    pub fn display(&self) -> String {
        let mut s = String::from("(");
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                s.push_str(", ");
            }
            s.push_str(&g.to_string_with(self.ring.var_names()));
        }
        s.push(')');
        s
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piece_dimensions() {
        let p2 = GradedRing::projective(2);
        assert_eq!(p2.graded_piece_dimension(&Multidegree(vec![2])), 6);
        let p222 = GradedRing::product(&[2, 2, 2]).unwrap();
        assert_eq!(p222.graded_piece_dimension(&Multidegree(vec![1, 1, 1])), 27);
        let p11 = GradedRing::product(&[1, 1]).unwrap();
        assert_eq!(p11.graded_piece_dimension(&Multidegree(vec![-1, 2])), 0);
    }

    #[test]
    fn bases() {
        let p1 = GradedRing::projective(1);
        let b = p1.monomial_basis(&Multidegree(vec![2]));
        let shown: Vec<String> = b.iter().map(|m| m.display(p1.var_names()).to_string()).collect();
        assert_eq!(shown, ["y0^2", "y0*y1", "y1^2"]);
        let p11 = GradedRing::product(&[1, 1]).unwrap();
        assert_eq!(p11.monomial_basis(&Multidegree(vec![1, 1])).len(), 4);
        let p2 = GradedRing::projective(2);
        assert_eq!(p2.monomial_basis(&Multidegree(vec![0])), vec![Monomial::one()]);
    }

    #[test]
    fn components() {
        let p11 = GradedRing::product(&[1, 1]).unwrap();
        let p = &Polynomial::var(0) + &Polynomial::var(2);
        let c = p.homogeneous_components(&p11);
        assert_eq!(c.len(), 2);
        assert_eq!(c[&Multidegree(vec![1, 0])], Polynomial::var(0));
        assert!(Polynomial::zero().homogeneous_components(&p11).is_empty());
    }

    #[test]
    fn irrelevant() {
        let p11 = GradedRing::product(&[1, 1]).unwrap();
        assert_eq!(p11.irrelevant_gens().len(), 4);
        let p2 = GradedRing::projective(2);
        assert_eq!(p2.irrelevant_gens().len(), 3);
        assert_eq!(p11.var_names(), ["a1", "a2", "b1", "b2"]);
    }

    #[test]
    fn general_grading_flagged() {
        let r = GradedRing::general(
            vec!["u".into(), "w".into()],
            vec![Multidegree(vec![1]), Multidegree(vec![2])],
        )
        .unwrap();
        assert!(!r.is_validated());
        assert_eq!(r.graded_piece_dimension(&Multidegree(vec![4])), 3);
    }

    #[test]
    fn box_enumeration() {
        let b = Multidegree::box_range(&Multidegree(vec![0, 0]), &Multidegree(vec![1, 2]));
        assert_eq!(b.len(), 6);
        assert_eq!(b[1], Multidegree(vec![0, 1]));
    }
}
