//! Buchberger's algorithm on submodules of graded free modules.
//!
//! Ideals are the rank-one case. Pairs are pruned with the Gebauer–Möller
//! criteria and selected by degree, so a run can stop at a degree bound and be
//! resumed later with more generators.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::order::ModuleOrder;
use crate::rational::Q;
use crate::ring::{Monomial, Polynomial};

/// Element of a free module, terms `c·m·e_comp` sorted decreasingly in the module order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    pub terms: Vec<(Monomial, u32, Q)>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_terms(order: &ModuleOrder, mut t: Vec<(Monomial, u32, Q)>) -> Vector {
        t.retain(|x| !x.2.is_zero());
        t.sort_by(|a, b| order.cmp(&b.0, b.1, &a.0, a.1));
        let mut out: Vec<(Monomial, u32, Q)> = Vec::with_capacity(t.len());
        for (m, c, q) in t {
            if let Some(last) = out.last_mut() {
                if last.0 == m && last.1 == c {
                    last.2 += &q;
                    if last.2.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            out.push((m, c, q));
        }
        Vector { terms: out }
    }

    pub fn from_poly(order: &ModuleOrder, p: &Polynomial, comp: u32) -> Vector {
        Vector::from_terms(order, p.terms().iter().map(|(m, c)| (*m, comp, c.clone())).collect())
    }

    /// Component `comp` as a polynomial.
    pub fn component(&self, comp: u32) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().filter(|t| t.1 == comp).map(|t| (t.0, t.2.clone())))
    }

    pub fn to_poly(&self) -> Polynomial {
        self.component(0)
    }

    pub fn lead(&self) -> Option<(Monomial, u32)> {
        self.terms.first().map(|t| (t.0, t.1))
    }

    pub fn scale(&self, c: &Q) -> Vector {
        Vector { terms: self.terms.iter().map(|t| (t.0, t.1, &t.2 * c)).collect() }
    }

    pub fn monic(&self) -> Vector {
        match self.terms.first() {
            Some(t) if !t.2.is_one() => self.scale(&t.2.recip()),
            _ => self.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Vector {
        Vector { terms: self.terms.iter().map(|t| (t.0.mul(m), t.1, t.2.clone())).collect() }
    }

    pub fn add(&self, order: &ModuleOrder, o: &Vector) -> Vector {
        Vector { terms: sub_scaled(order, &self.terms, &Q::from_int(-1), &Monomial::one(), &o.terms) }
    }

    pub fn sub(&self, order: &ModuleOrder, o: &Vector) -> Vector {
        Vector { terms: sub_scaled(order, &self.terms, &Q::ONE, &Monomial::one(), &o.terms) }
    }

    /// `self + p·o` for a polynomial multiplier.
    pub fn add_mul(&self, order: &ModuleOrder, p: &Polynomial, o: &Vector) -> Vector {
        let mut acc = self.clone();
        for (m, c) in p.terms() {
            acc = Vector { terms: sub_scaled(order, &acc.terms, &-c, m, &o.terms) };
        }
        acc
    }

    /// Resorts under another order.
    pub fn reorder(&self, order: &ModuleOrder) -> Vector {
        Vector::from_terms(order, self.terms.clone())
    }
}

/// `a − c·q·b` where both inputs are sorted; the result is sorted.
pub(crate) fn sub_scaled(
    order: &ModuleOrder,
    a: &[(Monomial, u32, Q)],
    c: &Q,
    q: &Monomial,
    b: &[(Monomial, u32, Q)],
) -> Vec<(Monomial, u32, Q)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|t| (t.0.mul(q), t.1, &t.2)).peekable();
    while i < a.len() {
        let Some(nb) = bi.peek() else { break };
        match order.cmp(&a[i].0, a[i].1, &nb.0, nb.1) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((nb.0, nb.1, -&(c * nb.2)));
                bi.next();
            }
            Ordering::Equal => {
                let v = &a[i].2 - &(c * nb.2);
                if !v.is_zero() {
                    out.push((a[i].0, a[i].1, v));
                }
                i += 1;
                bi.next();
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in bi {
        out.push((t.0, t.1, -&(c * t.2)));
    }
    out
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    deg: u32,
}

/// One reduction step `(basis index, monomial, coefficient)`: the reduced vector lost `c·m·g_k`.
pub type Quotient = (usize, Monomial, Q);

#[derive(Clone, Debug)]
pub struct Engine {
    order: ModuleOrder,
    weights: Vec<u32>,
    shifts: Vec<u32>,
    ideal_case: bool,
    polys: Vec<Vector>,
    leads: Vec<(Monomial, u32)>,
    sev: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    pending: Vec<Vector>,
}

impl Engine {
    /// `weights[i]` is the selection degree of variable `i`; `shifts[c]` that of basis vector `c`.
    pub fn new(order: ModuleOrder, weights: Vec<u32>, shifts: Vec<u32>) -> Engine {
        let ideal_case = shifts.len() <= 1;
        Engine {
            order,
            weights,
            shifts,
            ideal_case,
            polys: Vec::new(),
            leads: Vec::new(),
            sev: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            pending: Vec::new(),
        }
    }

    pub fn for_ideal(order: ModuleOrder, nvars: usize) -> Engine {
        Engine::new(order, vec![1; nvars], vec![0])
    }

    /// Wraps an existing Gröbner basis for reduction only; no pairs are formed.
    pub fn from_basis(order: ModuleOrder, weights: Vec<u32>, shifts: Vec<u32>, basis: Vec<Vector>) -> Engine {
        let mut e = Engine::new(order, weights, shifts);
        for v in basis {
            let v = v.monic();
            let (t, c) = v.lead().expect("nonzero basis element");
            e.polys.push(v);
            e.leads.push((t, c));
            e.sev.push(t.support());
            e.active.push(true);
        }
        e
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    fn term_degree(&self, m: &Monomial, c: u32) -> u32 {
        let mut d = self.shifts.get(c as usize).copied().unwrap_or(0);
        let e = m.raw();
        for (i, w) in self.weights.iter().enumerate() {
            d += w * e[i] as u32;
        }
        d
    }

    pub fn degree(&self, v: &Vector) -> u32 {
        v.terms.first().map_or(0, |t| self.term_degree(&t.0, t.1))
    }

    pub fn add_generators<I: IntoIterator<Item = Vector>>(&mut self, gens: I) {
        for g in gens {
            if !g.is_zero() {
                self.pending.push(g);
            }
        }
    }

    fn find_reducer(&self, m: &Monomial, c: u32) -> Option<usize> {
        let s = m.support();
        let mut best: Option<usize> = None;
        for k in 0..self.polys.len() {
            let (lm, lc) = &self.leads[k];
            if *lc != c || self.sev[k] & !s != 0 || !lm.divides(m) {
                continue;
            }
            match best {
                Some(b) if self.polys[b].terms.len() <= self.polys[k].terms.len() => {}
                _ => best = Some(k),
            }
        }
        best
    }

    /// Reduces `v`; with `full` also reduces non-leading terms. Quotients are appended to `track`.
    pub fn reduce(&self, v: &Vector, full: bool, mut track: Option<&mut Vec<Quotient>>) -> Vector {
        let mut t = v.terms.clone();
        let mut pos = 0;
        while pos < t.len() {
            let (m, c) = (t[pos].0, t[pos].1);
            match self.find_reducer(&m, c) {
                Some(k) => {
                    let q = self.leads[k].0.quotient_of(&m).expect("divides");
                    let coef = t[pos].2.clone();
                    let tail = sub_scaled(&self.order, &t[pos..], &coef, &q, &self.polys[k].terms);
                    t.truncate(pos);
                    t.extend(tail);
                    if let Some(tr) = track.as_deref_mut() {
                        tr.push((k, q, coef));
                    }
                }
                None => {
                    if !full {
                        break;
                    }
                    pos += 1;
                }
            }
        }
        Vector { terms: t }
    }

    fn insert(&mut self, h: Vector) {
        let h = h.monic();
        let (t, c) = h.lead().expect("nonzero");
        let k = self.polys.len();
        self.polys.push(h);
        self.leads.push((t, c));
        self.sev.push(t.support());
        self.active.push(true);

        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(p.comp == c
                && t.divides(&p.lcm)
                && leads[p.i].0.lcm(&t) != p.lcm
                && leads[p.j].0.lcm(&t) != p.lcm)
        });

        let mut new: Vec<(usize, Monomial, bool)> = Vec::new();
        for i in 0..k {
            if !self.active[i] || self.leads[i].1 != c {
                continue;
            }
            let l = self.leads[i].0.lcm(&t);
            new.push((i, l, self.leads[i].0.is_coprime(&t)));
        }
        // Chain criterion among the new pairs.
        let keep: Vec<bool> = new
            .iter()
            .map(|(_, l, _)| !new.iter().any(|(_, l2, _)| l2 != l && l2.divides(l)))
            .collect();
        let mut survivors: Vec<(usize, Monomial, bool)> =
            new.into_iter().zip(keep).filter(|(_, k)| *k).map(|(x, _)| x).collect();
        // One pair per lcm; drop the whole class when a coprime pair certifies it.
        survivors.sort_by(|a, b| self.order.mono.cmp(&a.1, &b.1).then(a.0.cmp(&b.0)));
        let mut idx = 0;
        while idx < survivors.len() {
            let mut end = idx + 1;
            while end < survivors.len() && survivors[end].1 == survivors[idx].1 {
                end += 1;
            }
            let coprime = self.ideal_case && survivors[idx..end].iter().any(|s| s.2);
            if !coprime {
                let (i, l, _) = survivors[idx];
                let deg = self.term_degree(&l, c);
                self.pairs.push(Pair { i, j: k, lcm: l, comp: c, deg });
            }
            idx = end;
        }

        for i in 0..k {
            if self.active[i] && self.leads[i].1 == c && t.divides(&self.leads[i].0) {
                self.active[i] = false;
            }
        }
    }

    fn spoly(&self, p: &Pair) -> Vector {
        let qi = self.leads[p.i].0.quotient_of(&p.lcm).expect("lcm");
        let qj = self.leads[p.j].0.quotient_of(&p.lcm).expect("lcm");
        let a = self.polys[p.i].mul_monomial(&qi);
        Vector { terms: sub_scaled(&self.order, &a.terms, &Q::ONE, &qj, &self.polys[p.j].terms) }
    }

    /// Processes every pending generator and pair of degree at most `limit` (all when `None`).
    pub fn run(&mut self, limit: Option<u32>) {
        loop {
            let pend = self
                .pending
                .iter()
                .enumerate()
                .map(|(i, v)| (self.degree(v), i))
                .min();
            let pair = self.pairs.iter().enumerate().map(|(i, p)| (p.deg, i)).min();
            let take_pending = match (pend, pair) {
                (None, None) => return,
                (Some(a), Some(b)) => a.0 <= b.0,
                (Some(_), None) => true,
                (None, Some(_)) => false,
            };
            let d = if take_pending { pend.unwrap().0 } else { pair.unwrap().0 };
            if let Some(l) = limit {
                if d > l {
                    return;
                }
            }
            let v = if take_pending {
                self.pending.remove(pend.unwrap().1)
            } else {
                let p = self.pairs.remove(pair.unwrap().1);
                self.spoly(&p)
            };
            let r = self.reduce(&v, true, None);
            if !r.is_zero() {
                self.insert(r);
            }
        }
    }

    /// Whether all pairs and generators up to `limit` have been processed.
    pub fn is_complete(&self) -> bool {
        self.pairs.is_empty() && self.pending.is_empty()
    }

    /// Leading terms of the minimal basis.
    pub fn lead_terms(&self) -> Vec<(Monomial, u32)> {
        (0..self.polys.len()).filter(|&k| self.active[k]).map(|k| self.leads[k]).collect()
    }

    /// Reduced basis (monic, tails reduced), sorted by increasing leading term.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        let idx: Vec<usize> = (0..self.polys.len()).filter(|&k| self.active[k]).collect();
        let mut sub = Engine::new(self.order.clone(), self.weights.clone(), self.shifts.clone());
        for &k in &idx {
            sub.polys.push(self.polys[k].clone());
            sub.leads.push(self.leads[k]);
            sub.sev.push(self.sev[k]);
            sub.active.push(true);
        }
        let mut out: Vec<Vector> = Vec::with_capacity(idx.len());
        for &k in &idx {
            let v = &self.polys[k];
            let head = Vector { terms: v.terms[..1].to_vec() };
            let tail = Vector { terms: v.terms[1..].to_vec() };
            let tail = sub.reduce(&tail, true, None);
            let mut terms = head.terms;
            terms.extend(tail.terms);
            out.push(Vector { terms });
        }
        out.sort_by(|a, b| {
            let (ma, ca) = a.lead().unwrap();
            let (mb, cb) = b.lead().unwrap();
            self.order.cmp(&ma, ca, &mb, cb)
        });
        out
    }

    /// Elements currently in the basis (possibly non-minimal), for replaying reductions.
    pub fn elements(&self) -> &[Vector] {
        &self.polys
    }
}

/// Checks the Buchberger criterion for an explicit list: every S-pair reduces to zero.
pub fn satisfies_buchberger_criterion(order: &ModuleOrder, elems: &[Vector], nvars: usize) -> bool {
    let elems: Vec<Vector> = elems.iter().filter(|v| !v.is_zero()).cloned().collect();
    let e = Engine::from_basis(order.clone(), vec![1; nvars], vec![0], elems);
    let n = e.polys.len();
    for i in 0..n {
        for j in i + 1..n {
            if e.leads[i].1 != e.leads[j].1 {
                continue;
            }
            let l = e.leads[i].0.lcm(&e.leads[j].0);
            let p = Pair { i, j, lcm: l, comp: e.leads[i].1, deg: 0 };
            if !e.reduce(&e.spoly(&p), false, None).is_zero() {
                return false;
            }
        }
    }
    true
}
