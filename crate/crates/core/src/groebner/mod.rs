//! Gröbner bases of homogeneous ideals and the ideal operations built on them.

pub mod engine;

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::order::{ModuleOrder, MonomialOrder, OrderKind};
use crate::rational::Q;
use crate::ring::{GradedRing, Ideal, Monomial, Multidegree, Polynomial, MAX_VARS};

pub use engine::{Engine, Vector};

/// Reduced Gröbner basis with its leading monomials.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    leads: Vec<Monomial>,
    source: Ideal,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leads
    }

    pub fn source(&self) -> &Ideal {
        &self.source
    }

    pub fn ring(&self) -> &GradedRing {
        self.source.ring()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.leads.iter().any(|m| m.is_one())
    }

    /// The ideal generated by the basis elements.
    pub fn to_ideal(&self) -> Ideal {
        Ideal::from_homogeneous(self.source.ring_arc(), self.elements.clone())
    }

    /// Whether `m` is a standard monomial (divisible by no leading monomial).
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leads.iter().any(|l| l.divides(m))
    }

    pub fn standard_monomials(&self, v: &Multidegree) -> Vec<Monomial> {
        self.ring().monomial_basis(v).into_iter().filter(|m| self.is_standard(m)).collect()
    }

    fn engine(&self) -> Engine {
        let mo = ModuleOrder::top(self.order.clone());
        let n = self.ring().nvars();
        let basis = self.elements.iter().map(|g| Vector::from_poly(&mo, g, 0)).collect();
        Engine::from_basis(mo, vec![1; n], vec![0], basis)
    }
}

fn vec_of(order: &MonomialOrder, p: &Polynomial) -> Vector {
    Vector::from_poly(&ModuleOrder::top(order.clone()), p, 0)
}

pub(crate) fn check_order(ring: &GradedRing, ord: &MonomialOrder) -> Result<()> {
    if ord.nvars() != ring.nvars() {
        return Err(Error::Invalid(alloc::format!(
            "order on {} variables used in a ring with {}",
            ord.nvars(),
            ring.nvars()
        )));
    }
    Ok(())
}

/// Reduced Gröbner basis, elements sorted by increasing leading monomial.
pub fn buchberger(i: &Ideal, ord: &MonomialOrder) -> GroebnerBasis {
    check_order(i.ring(), ord).expect("order matches ring");
    let mo = ModuleOrder::top(ord.clone());
    let mut e = Engine::for_ideal(mo.clone(), i.ring().nvars());
    e.add_generators(i.gens().iter().map(|g| Vector::from_poly(&mo, g, 0)));
    e.run(None);
    from_engine(i, ord, &e)
}

fn from_engine(i: &Ideal, ord: &MonomialOrder, e: &Engine) -> GroebnerBasis {
    let red = e.reduced_basis();
    let leads = red.iter().map(|v| v.lead().unwrap().0).collect();
    let elements = red.iter().map(|v| v.to_poly()).collect();
    GroebnerBasis { order: ord.clone(), elements, leads, source: i.clone() }
}

pub fn grevlex_basis(i: &Ideal) -> GroebnerBasis {
    buchberger(i, &MonomialOrder::grevlex(i.ring().nvars()))
}

/// Remainder of `p` on division by the basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    Reducer::new(gb).normal_form(p)
}

/// Reusable reducer for many normal forms against one basis.
pub struct Reducer {
    engine: Engine,
    order: MonomialOrder,
    len: usize,
}

impl Reducer {
    pub fn new(gb: &GroebnerBasis) -> Reducer {
        Reducer { engine: gb.engine(), order: gb.order.clone(), len: gb.len() }
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.engine.reduce(&vec_of(&self.order, p), true, None).to_poly()
    }

    /// Normal form together with quotients: `p − NF(p) = Σ q_k g_k` over the basis elements.
    pub fn divide(&self, p: &Polynomial) -> (Polynomial, Vec<Polynomial>) {
        let mut track = Vec::new();
        let r = self.engine.reduce(&vec_of(&self.order, p), true, Some(&mut track));
        let mut q = vec![Vec::new(); self.len];
        for (k, m, c) in track {
            q[k].push((m, c));
        }
        (r.to_poly(), q.into_iter().map(Polynomial::from_terms).collect())
    }
}

pub fn contains(i: &Ideal, p: &Polynomial) -> bool {
    normal_form(p, &grevlex_basis(i)).is_zero()
}

pub fn is_subset(i: &Ideal, j: &Ideal) -> bool {
    let gb = grevlex_basis(j);
    let r = Reducer::new(&gb);
    i.gens().iter().all(|g| r.normal_form(g).is_zero())
}

/// Equality of ideals via reduced grevlex bases.
pub fn ideals_equal(i: &Ideal, j: &Ideal) -> bool {
    grevlex_basis(i).elements == grevlex_basis(j).elements
}

/// Whether the listed polynomials already form a Gröbner basis under `ord`.
pub fn is_groebner_basis(polys: &[Polynomial], ord: &MonomialOrder) -> bool {
    let mo = ModuleOrder::top(ord.clone());
    let v: Vec<Vector> = polys.iter().map(|p| Vector::from_poly(&mo, p, 0)).collect();
    engine::satisfies_buchberger_criterion(&mo, &v, ord.nvars())
}

/// Leading monomial under `ord`.
pub fn leading_monomial(p: &Polynomial, ord: &MonomialOrder) -> Option<Monomial> {
    p.monomials().copied().max_by(|a, b| ord.cmp(a, b))
}

pub fn initial_ideal(i: &Ideal, ord: &MonomialOrder) -> Ideal {
    let gb = buchberger(i, ord);
    Ideal::monomial(i.ring_arc(), &gb.leads)
}

/// Sum of the terms of maximal `w`-weight.
pub fn initial_form(p: &Polynomial, w: &[i64]) -> Polynomial {
    let wt = |m: &Monomial| -> i64 { w.iter().enumerate().map(|(i, x)| x * m.exp(i) as i64).sum() };
    let Some(top) = p.monomials().map(wt).max() else { return Polynomial::zero() };
    Polynomial::from_terms(p.terms().iter().filter(|(m, _)| wt(m) == top).cloned())
}

/// The `w`-initial ideal, from a basis under the weight order refined by grevlex.
pub fn initial_forms_ideal(i: &Ideal, ord: &MonomialOrder) -> Result<Ideal> {
    let OrderKind::Weight(w) = ord.kind() else {
        return Err(Error::Invalid("w-initial forms need a weight order".into()));
    };
    let gb = buchberger(i, ord);
    Ok(Ideal::from_homogeneous(i.ring_arc(), gb.elements.iter().map(|g| initial_form(g, w)).collect()))
}

/// Basis of `I_v` obtained from products `m·g` by elimination.
pub fn graded_piece(i: &Ideal, v: &Multidegree) -> Vec<Polynomial> {
    let ring = i.ring();
    let basis = ring.monomial_basis(v);
    let index = |m: &Monomial| basis.binary_search_by(|b| m.cmp(b)).ok();
    let mut ech = Echelon::new();
    for (g, d) in i.gens().iter().zip(i.gen_degrees()) {
        if !d.leq(v) {
            continue;
        }
        for m in ring.monomial_basis(&v.sub(&d)) {
            let p = g.mul_monomial(&m);
            let mut row: Vec<(usize, Q)> = p.terms().iter().map(|(t, c)| (index(t).unwrap(), c.clone())).collect();
            row.sort_by_key(|x| x.0);
            ech.insert(row);
        }
    }
    ech.rows()
        .map(|r| Polynomial::from_terms(r.iter().map(|(k, c)| (basis[*k], c.clone()))))
        .collect()
}

/// A minimal homogeneous generating set, chosen from the given generators.
pub fn minimal_generators(i: &Ideal) -> Vec<Polynomial> {
    let mut order: Vec<(Polynomial, Multidegree)> = i.gens().iter().cloned().zip(i.gen_degrees()).collect();
    order.sort_by_key(|(_, d)| (d.total(), d.clone()));
    let mut kept: Vec<Polynomial> = Vec::new();
    for (g, d) in order {
        let cur = Ideal::from_homogeneous(i.ring_arc(), kept.clone());
        let piece = graded_piece(&cur, &d);
        let basis = i.ring().monomial_basis(&d);
        let row = |p: &Polynomial| -> Vec<(usize, Q)> {
            let mut r: Vec<(usize, Q)> =
                p.terms().iter().map(|(m, c)| (basis.binary_search_by(|b| m.cmp(b)).unwrap(), c.clone())).collect();
            r.sort_by_key(|x| x.0);
            r
        };
        let mut ech = Echelon::new();
        for p in &piece {
            ech.insert(row(p));
        }
        if !ech.contains(&row(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// `I_{≥u}` for multidegree `u`.
pub fn truncate(i: &Ideal, u: &Multidegree) -> Ideal {
    let ring = i.ring();
    let mut gens = Vec::new();
    for (g, d) in i.gens().iter().zip(i.gen_degrees()) {
        let target = d.join(u);
        for m in ring.monomial_basis(&target.sub(&d)) {
            gens.push(g.mul_monomial(&m));
        }
    }
    Ideal::from_homogeneous(i.ring_arc(), gens)
}

/// Ideal generated by `I_v` alone.
pub fn degree_part_ideal(i: &Ideal, v: &Multidegree) -> Ideal {
    Ideal::from_homogeneous(i.ring_arc(), graded_piece(i, v))
}

fn lift(p: &Polynomial, t: usize, one_minus: bool) -> Polynomial {
    let t = Polynomial::var(t);
    let f = if one_minus { &Polynomial::one() - &t } else { t };
    p * &f
}

/// `I ∩ J` through `t·I + (1−t)·J` and elimination of `t`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Ideal {
    assert_eq!(i.ring(), j.ring(), "intersection across rings");
    if i.is_zero() || j.is_zero() {
        return Ideal::zero(i.ring_arc());
    }
    let n = i.ring().nvars();
    assert!(n < MAX_VARS, "no room for the auxiliary variable");
    let ord = MonomialOrder::eliminate_last(n);
    let mo = ModuleOrder::top(ord);
    let mut weights = vec![1u32; n];
    weights.push(0);
    let mut e = Engine::new(mo.clone(), weights, vec![0]);
    e.add_generators(i.gens().iter().map(|g| Vector::from_poly(&mo, &lift(g, n, false), 0)));
    e.add_generators(j.gens().iter().map(|g| Vector::from_poly(&mo, &lift(g, n, true), 0)));
    e.run(None);
    let gens = e
        .reduced_basis()
        .into_iter()
        .map(|v| v.to_poly())
        .filter(|p| p.monomials().all(|m| m.exp(n) == 0))
        .collect();
    Ideal::from_homogeneous(i.ring_arc(), gens)
}

/// `(I : f)`.
pub fn colon(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::Invalid("colon by the zero polynomial".into()));
    }
    if !f.is_homogeneous(i.ring()) {
        return Err(Error::NotHomogeneous(f.to_string_with(i.ring().var_names())));
    }
    if f.is_constant() {
        return Ok(i.clone());
    }
    if f.len() == 1 && f.terms()[0].0.total_degree() == 1 {
        let v = (0..i.ring().nvars()).find(|&k| f.terms()[0].0.exp(k) == 1).unwrap();
        return Ok(colon_var(i, v, false));
    }
    let fi = Ideal::from_homogeneous(i.ring_arc(), vec![f.clone()]);
    let inter = intersect(i, &fi);
    let gens = inter.gens().iter().map(|g| exact_divide(g, f).expect("element of (f) divides by f")).collect();
    Ok(Ideal::from_homogeneous(i.ring_arc(), gens))
}

/// `(I : J) = ∩_g (I : g)`.
pub fn colon_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for g in j.gens() {
        let c = colon(i, g)?;
        acc = Some(match acc {
            None => c,
            Some(a) => intersect(&a, &c),
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(i.ring_arc())))
}

/// Polynomial division with zero remainder required.
pub fn exact_divide(p: &Polynomial, f: &Polynomial) -> Option<Polynomial> {
    let n = MAX_VARS;
    let ord = MonomialOrder::grevlex(n);
    let mo = ModuleOrder::top(ord);
    let mut e = Engine::for_ideal(mo.clone(), n);
    e.add_generators([Vector::from_poly(&mo, f, 0)]);
    e.run(None);
    let mut track = Vec::new();
    let r = e.reduce(&Vector::from_poly(&mo, p, 0), true, Some(&mut track));
    if !r.is_zero() {
        return None;
    }
    let lead_c = f.terms()[0].1.clone();
    Some(Polynomial::from_terms(track.into_iter().map(|(_, m, c)| (m, &c / &lead_c))))
}

/// `(I : v)` or, with `infinite`, `(I : v^∞)` for the variable with index `v` (grevlex with `v` last).
pub fn colon_var(i: &Ideal, v: usize, infinite: bool) -> Ideal {
    let n = i.ring().nvars();
    let ord = MonomialOrder::grevlex_with_last(n, v);
    let gb = buchberger(i, &ord);
    let gens = gb
        .elements
        .iter()
        .map(|g| {
            let k = g.monomials().map(|m| m.exp(v)).min().unwrap_or(0);
            let k = if infinite { k } else { k.min(1) };
            let mut d = Monomial::one();
            d.set_exp(v, k);
            Polynomial::from_terms(g.terms().iter().map(|(m, c)| (d.quotient_of(m).unwrap(), c.clone())))
        })
        .collect();
    Ideal::from_homogeneous(i.ring_arc(), gens)
}

/// `(I : f^∞)` by iterated colons, stopping when the reduced bases agree.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let mut cur = i.clone();
    let mut gb = grevlex_basis(&cur);
    loop {
        let next = colon(&cur, f)?;
        let ngb = grevlex_basis(&next);
        if ngb.elements == gb.elements {
            return Ok(gb.to_ideal());
        }
        cur = next;
        gb = ngb;
    }
}

/// `(I : B^∞)`, block by block, each block as the intersection of `(· : y^∞)` over its variables.
pub fn saturate_irrelevant(i: &Ideal) -> Ideal {
    let ring = i.ring();
    let mut cur = i.clone();
    for b in 0..ring.blocks().len() {
        let mut acc: Option<Ideal> = None;
        for v in ring.block_vars(b) {
            let s = colon_var(&cur, v, true);
            if s.gens().iter().any(|g| g.is_constant()) {
                continue;
            }
            acc = Some(match acc {
                None => s,
                Some(a) => intersect(&a, &s),
            });
        }
        cur = acc.unwrap_or_else(|| Ideal::unit(i.ring_arc()));
    }
    grevlex_basis(&cur).to_ideal()
}

pub fn is_saturated(i: &Ideal) -> bool {
    ideals_equal(i, &saturate_irrelevant(i))
}

/// Incrementally computed basis truncated at a degree, for repeated Hilbert function queries.
#[derive(Clone, Debug)]
pub struct TruncatedBasis {
    engine: Engine,
    ring: Arc<GradedRing>,
    done: Option<u32>,
}

impl TruncatedBasis {
    pub fn new(i: &Ideal) -> TruncatedBasis {
        let mo = ModuleOrder::top(MonomialOrder::grevlex(i.ring().nvars()));
        let mut engine = Engine::for_ideal(mo.clone(), i.ring().nvars());
        engine.add_generators(i.gens().iter().map(|g| Vector::from_poly(&mo, g, 0)));
        TruncatedBasis { engine, ring: i.ring_arc().clone(), done: None }
    }

    pub fn add(&mut self, gens: &[Polynomial]) {
        let mo = self.engine.order().clone();
        self.engine.add_generators(gens.iter().map(|g| Vector::from_poly(&mo, g, 0)));
        self.done = None;
    }

    /// Completes the basis through total degree `d`.
    pub fn extend_to(&mut self, d: u32) {
        if self.done.is_some_and(|x| x >= d) {
            return;
        }
        self.engine.run(Some(d));
        self.done = Some(d);
    }

    /// Quotient dimension in total degree `d ≤` the completed degree.
    pub fn hilbert(&mut self, d: u32) -> u64 {
        self.extend_to(d);
        let leads: Vec<Monomial> =
            self.engine.lead_terms().into_iter().map(|x| x.0).filter(|m| m.total_degree() <= d).collect();
        self.ring
            .monomials_of_total_degree(d)
            .iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count() as u64
    }

    /// Normal form of a homogeneous polynomial of total degree `≤ d`, completing the basis through `d`.
    pub fn normal_form(&mut self, p: &Polynomial, d: u32) -> Polynomial {
        self.extend_to(d);
        let mo = self.engine.order().clone();
        self.engine.reduce(&Vector::from_poly(&mo, p, 0), true, None).to_poly()
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn leading_monomials(&mut self, d: u32) -> Vec<Monomial> {
        self.extend_to(d);
        self.engine.lead_terms().into_iter().map(|x| x.0).filter(|m| m.total_degree() <= d).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_ideal;

    fn p2() -> Arc<GradedRing> {
        Arc::new(GradedRing::projective(2))
    }

    #[test]
    fn trivial_basis() {
        let r = p2();
        let i = parse_ideal("y0, y1", &r).unwrap();
        let gb = grevlex_basis(&i);
        assert_eq!(gb.len(), 2);
        assert!(gb.elements().iter().all(|g| g.len() == 1));
    }

    #[test]
    fn normal_forms() {
        let r = p2();
        let i = parse_ideal("y0^2, y1^2", &r).unwrap();
        let gb = grevlex_basis(&i);
        let m = crate::notation::parse_polynomial("y0*y1", &r).unwrap();
        assert_eq!(normal_form(&m, &gb), m);
        for g in i.gens() {
            assert!(normal_form(g, &gb).is_zero());
        }
    }

    #[test]
    fn colon_examples() {
        let r = p2();
        let y0 = crate::notation::parse_polynomial("y0", &r).unwrap();
        let i = parse_ideal("y0*y1", &r).unwrap();
        assert!(ideals_equal(&colon(&i, &y0).unwrap(), &parse_ideal("y1", &r).unwrap()));
        assert!(ideals_equal(&colon(&i, &Polynomial::one()).unwrap(), &i));
        let j = parse_ideal("y0^2, y0*y1", &r).unwrap();
        assert!(ideals_equal(&colon(&j, &y0).unwrap(), &parse_ideal("y0, y1", &r).unwrap()));
        assert!(colon(&j, &Polynomial::zero()).is_err());
    }

    #[test]
    fn colon_by_form_uses_intersection() {
        let r = p2();
        let f = crate::notation::parse_polynomial("y0+y1", &r).unwrap();
        let i = parse_ideal("y0^2 - y1^2, y2^3", &r).unwrap();
        let c = colon(&i, &f).unwrap();
        assert!(ideals_equal(&c, &parse_ideal("y0 - y1, y2^3", &r).unwrap()));
    }

    #[test]
    fn saturation_examples() {
        let r = p2();
        let y0 = crate::notation::parse_polynomial("y0", &r).unwrap();
        let s = saturate(&parse_ideal("y0^2", &r).unwrap(), &y0).unwrap();
        assert!(s.gens().iter().any(|g| g.is_constant()));
        let s = saturate(&parse_ideal("y0^2*y1", &r).unwrap(), &y0).unwrap();
        assert!(ideals_equal(&s, &parse_ideal("y1", &r).unwrap()));
    }

    #[test]
    fn intersection_of_coordinate_hyperplanes() {
        let r = p2();
        let i = intersect(&parse_ideal("y0", &r).unwrap(), &parse_ideal("y1", &r).unwrap());
        assert!(ideals_equal(&i, &parse_ideal("y0*y1", &r).unwrap()));
    }

    #[test]
    fn product_saturation_example() {
        let r = Arc::new(GradedRing::product(&[1, 1]).unwrap());
        let i = parse_ideal("a1*b1, a1*b2, b1 - b2", &r).unwrap();
        let s = saturate_irrelevant(&i);
        assert!(ideals_equal(&s, &parse_ideal("a1, b1 - b2", &r).unwrap()));
    }

    #[test]
    fn truncation() {
        let r = p2();
        let i = parse_ideal("y0^2, y1^3", &r).unwrap();
        let t = truncate(&i, &Multidegree(vec![3]));
        assert_eq!(t.gens().len(), 4);
        assert!(t.gen_degrees().iter().all(|d| d.0 == [3]));
    }

    #[test]
    fn weight_initial_forms() {
        let r = p2();
        let i = parse_ideal("y0*y1 + y2^2", &r).unwrap();
        let ord = MonomialOrder::weight(vec![0, 0, 1]).unwrap();
        let w = initial_forms_ideal(&i, &ord).unwrap();
        assert!(ideals_equal(&w, &parse_ideal("y2^2", &r).unwrap()));
    }
}
