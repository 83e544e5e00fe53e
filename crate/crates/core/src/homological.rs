//! Syzygies, presentations of subquotients, and degree-0 `Hom` and `Ext¹` into quotient rings.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{self, Engine, GroebnerBasis, Reducer, Vector};
use crate::hilbert;
use crate::linalg::{Echelon, SparseRow};
use crate::order::{ModuleOrder, MonomialOrder};
use crate::rational::Q;
use crate::ring::{GradedRing, Ideal, Monomial, Multidegree, Polynomial};

/// Graded free module `⊕ S(−shift_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    pub shifts: Vec<Multidegree>,
}

impl FreeModule {
    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn graded_piece_dimension(&self, ring: &GradedRing, v: &Multidegree) -> u64 {
        self.shifts.iter().map(|s| ring.graded_piece_dimension(&v.sub(s))).sum()
    }
}

/// Generators with degrees and a relation matrix; row `k` says `Σ_j relations[k][j]·generators[j] = 0`.
#[derive(Clone, Debug)]
pub struct ModulePresentation {
    pub ring: Arc<GradedRing>,
    pub generators: Vec<Polynomial>,
    pub free: FreeModule,
    pub relations: Vec<Vec<Polynomial>>,
}

impl ModulePresentation {
    /// Whether every relation annihilates the generator column modulo `carrier`.
    pub fn relations_hold(&self, carrier: &Ideal) -> bool {
        let red = Reducer::new(&groebner::grevlex_basis(carrier));
        self.relations.iter().all(|row| {
            let s = row.iter().zip(&self.generators).fold(Polynomial::zero(), |acc, (a, g)| &acc + &(a * g));
            red.normal_form(&s).is_zero()
        })
    }
}

fn total_shifts(shifts: &[Multidegree]) -> Vec<u32> {
    shifts.iter().map(|s| s.total().max(0) as u32).collect()
}

fn to_vector(order: &ModuleOrder, row: &[Polynomial]) -> Vector {
    let mut t = Vec::new();
    for (c, p) in row.iter().enumerate() {
        for (m, q) in p.terms() {
            t.push((*m, c as u32, q.clone()));
        }
    }
    Vector::from_terms(order, t)
}

/// Submodule of a graded free module with a Gröbner basis (TOP grevlex).
#[derive(Clone, Debug)]
struct Submodule {
    order: ModuleOrder,
    shifts: Vec<Multidegree>,
    basis: Vec<Vector>,
    nvars: usize,
}

impl Submodule {
    fn new(ring: &GradedRing, shifts: Vec<Multidegree>, gens: Vec<Vector>) -> Submodule {
        let order = ModuleOrder::top(MonomialOrder::grevlex(ring.nvars()));
        let mut e = Engine::new(order.clone(), vec![1; ring.nvars()], total_shifts(&shifts));
        e.add_generators(gens.into_iter().map(|g| g.reorder(&order)));
        e.run(None);
        Submodule { order, shifts, basis: e.reduced_basis().into_iter().map(|v| v.monic()).collect(), nvars: ring.nvars() }
    }

    fn degree(&self, ring: &GradedRing, k: usize) -> Multidegree {
        let (m, c) = self.basis[k].lead().unwrap();
        &ring.multidegree(&m) + &self.shifts[c as usize]
    }

    /// Schreyer syzygies of the basis, sparse as `(index, coefficient)` lists.
    fn syzygies(&self) -> Vec<Vec<(usize, Polynomial)>> {
        let n = self.basis.len();
        let leads: Vec<(Monomial, u32)> = self.basis.iter().map(|v| v.lead().unwrap()).collect();
        let rank_one = self.shifts.len() == 1;
        let eng = Engine::from_basis(self.order.clone(), vec![1; self.nvars], vec![0; self.shifts.len()], self.basis.clone());
        let mut out = Vec::new();
        for i in 0..n {
            for k in i + 1..n {
                if leads[i].1 != leads[k].1 {
                    continue;
                }
                let l = leads[i].0.lcm(&leads[k].0);
                let redundant = (0..n).any(|j| {
                    j != i
                        && j != k
                        && leads[j].1 == leads[i].1
                        && leads[j].0.divides(&l)
                        && leads[j].0.lcm(&leads[i].0) != l
                        && leads[j].0.lcm(&leads[k].0) != l
                });
                if redundant {
                    continue;
                }
                if rank_one && leads[i].0.is_coprime(&leads[k].0) {
                    out.push(vec![(i, self.basis[k].to_poly()), (k, -&self.basis[i].to_poly())]);
                    continue;
                }
                let qi = leads[i].0.quotient_of(&l).unwrap();
                let qk = leads[k].0.quotient_of(&l).unwrap();
                let s = self.basis[i].mul_monomial(&qi).sub(&self.order, &self.basis[k].mul_monomial(&qk));
                let mut track = Vec::new();
                let r = eng.reduce(&s, false, Some(&mut track));
                debug_assert!(r.is_zero());
                let mut coeffs: BTreeMap<usize, Vec<(Monomial, Q)>> = BTreeMap::new();
                coeffs.entry(i).or_default().push((qi, Q::ONE));
                coeffs.entry(k).or_default().push((qk, -Q::ONE));
                for (j, m, c) in track {
                    coeffs.entry(j).or_default().push((m, -c));
                }
                let syz: Vec<(usize, Polynomial)> = coeffs
                    .into_iter()
                    .map(|(j, t)| (j, Polynomial::from_terms(t)))
                    .filter(|(_, p)| !p.is_zero())
                    .collect();
                out.push(syz);
            }
        }
        out
    }
}

/// Generators of the first syzygy module of `gens`, by elimination in a position-over-term order.
pub fn syzygies(ring: &Arc<GradedRing>, gens: &[Polynomial]) -> Result<ModulePresentation> {
    let mut degs = Vec::new();
    for g in gens {
        match g.multidegree(ring) {
            Some(d) => degs.push(d),
            None => return Err(Error::NotHomogeneous(g.to_string_with(ring.var_names()))),
        }
    }
    let nz: Vec<usize> = (0..gens.len()).filter(|&j| !gens[j].is_zero()).collect();
    let mut relations = Vec::new();
    for &j in (0..gens.len()).filter(|j| gens[*j].is_zero()).collect::<Vec<_>>().iter() {
        let mut row = vec![Polynomial::zero(); gens.len()];
        row[j] = Polynomial::one();
        relations.push(row);
    }
    let order = ModuleOrder::pot(MonomialOrder::grevlex(ring.nvars()));
    let mut shifts = vec![0u32];
    shifts.extend(nz.iter().map(|&j| gens[j].total_degree().unwrap()));
    let mut e = Engine::new(order.clone(), vec![1; ring.nvars()], shifts);
    e.add_generators(nz.iter().enumerate().map(|(k, &j)| {
        let mut t: Vec<(Monomial, u32, Q)> = gens[j].terms().iter().map(|(m, c)| (*m, 0, c.clone())).collect();
        t.push((Monomial::one(), k as u32 + 1, Q::ONE));
        Vector::from_terms(&order, t)
    }));
    e.run(None);
    for v in e.reduced_basis() {
        if v.lead().unwrap().1 == 0 {
            continue;
        }
        let mut row = vec![Polynomial::zero(); gens.len()];
        for (k, &j) in nz.iter().enumerate() {
            row[j] = v.component(k as u32 + 1);
        }
        relations.push(row);
    }
    Ok(ModulePresentation {
        ring: ring.clone(),
        generators: gens.to_vec(),
        free: FreeModule { shifts: degs },
        relations,
    })
}

/// Standard-monomial coordinates of `S/J` with cached normal forms.
struct Quotient<'a> {
    gb: &'a GroebnerBasis,
    reducer: Reducer,
    bases: BTreeMap<Multidegree, Vec<Monomial>>,
    nf: BTreeMap<Monomial, Polynomial>,
}

impl<'a> Quotient<'a> {
    fn new(gb: &'a GroebnerBasis) -> Quotient<'a> {
        Quotient { gb, reducer: Reducer::new(gb), bases: BTreeMap::new(), nf: BTreeMap::new() }
    }

    fn basis(&mut self, v: &Multidegree) -> &Vec<Monomial> {
        if !self.bases.contains_key(v) {
            let b = if v.is_nonnegative() { self.gb.standard_monomials(v) } else { Vec::new() };
            self.bases.insert(v.clone(), b);
        }
        &self.bases[v]
    }

    fn normal_form(&mut self, m: &Monomial) -> Polynomial {
        if let Some(p) = self.nf.get(m) {
            return p.clone();
        }
        let p = self.reducer.normal_form(&Polynomial::monomial(*m));
        self.nf.insert(*m, p.clone());
        p
    }

    /// Coordinates of `NF(p)` in the standard basis of degree `v`.
    fn coords(&mut self, p: &Polynomial, v: &Multidegree) -> Vec<(usize, Q)> {
        let mut acc: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (m, c) in p.terms() {
            for (s, d) in self.normal_form(m).terms() {
                let e = acc.entry(*s).or_insert(Q::ZERO);
                *e += &(c * d);
            }
        }
        let basis = self.basis(v).clone();
        let mut row: Vec<(usize, Q)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (basis.binary_search_by(|b| m.cmp(b)).expect("standard monomial of the right degree"), c))
            .collect();
        row.sort_by_key(|x| x.0);
        row
    }
}

/// Linear system for `Hom_S(K, S/J)_0`, `K` given by a Gröbner basis.
struct HomSystem {
    degrees: Vec<Multidegree>,
    offsets: Vec<usize>,
    unknowns: usize,
    equations: Echelon,
}

impl HomSystem {
    fn dimension(&self) -> usize {
        self.unknowns - self.equations.rank()
    }
}

fn hom_system(ring: &GradedRing, sub: &Submodule, q: &mut Quotient) -> HomSystem {
    let n = sub.basis.len();
    let degrees: Vec<Multidegree> = (0..n).map(|k| sub.degree(ring, k)).collect();
    let mut offsets = Vec::with_capacity(n);
    let mut unknowns = 0;
    for d in &degrees {
        offsets.push(unknowns);
        unknowns += q.basis(d).len();
    }
    let mut equations = Echelon::new();
    for syz in sub.syzygies() {
        let (j0, t0) = &syz[0];
        let target = &degrees[*j0] + &ring.multidegree(&t0.terms()[0].0);
        let tb = q.basis(&target).len();
        if tb == 0 {
            continue;
        }
        let mut rows: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); tb];
        for (j, t) in &syz {
            let b = q.basis(&degrees[*j]).clone();
            for (bi, bm) in b.iter().enumerate() {
                let img = t.mul_monomial(bm);
                for (s, c) in q.coords(&img, &target) {
                    let e = rows[s].entry(offsets[*j] + bi).or_insert(Q::ZERO);
                    *e += &c;
                }
            }
        }
        for r in rows {
            let row: SparseRow = r.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !row.is_empty() {
                equations.insert(row);
            }
        }
    }
    HomSystem { degrees, offsets, unknowns, equations }
}

/// `dim Hom_S(I, S/I)_0`.
pub fn hom_degree0_dim(i: &Ideal) -> usize {
    let gb = groebner::grevlex_basis(i);
    hom_degree0_dim_gb(&gb)
}

pub fn hom_degree0_dim_gb(gb: &GroebnerBasis) -> usize {
    let ring = gb.ring();
    let order = ModuleOrder::top(MonomialOrder::grevlex(ring.nvars()));
    let sub = Submodule {
        order: order.clone(),
        shifts: vec![ring.zero_degree()],
        basis: gb.elements().iter().map(|g| Vector::from_poly(&order, g, 0)).collect(),
        nvars: ring.nvars(),
    };
    let mut q = Quotient::new(gb);
    hom_system(ring, &sub, &mut q).dimension()
}

/// `dim Hom_S(I, S/J)_0` for ideals `I`, `J`.
pub fn hom_degree0_dim_into(i: &Ideal, j: &Ideal) -> usize {
    let gi = groebner::grevlex_basis(i);
    let gj = groebner::grevlex_basis(j);
    let ring = i.ring();
    let order = ModuleOrder::top(MonomialOrder::grevlex(ring.nvars()));
    let sub = Submodule {
        order: order.clone(),
        shifts: vec![ring.zero_degree()],
        basis: gi.elements().iter().map(|g| Vector::from_poly(&order, g, 0)).collect(),
        nvars: ring.nvars(),
    };
    let mut q = Quotient::new(&gj);
    hom_system(ring, &sub, &mut q).dimension()
}

/// Presentation `F1 → F0 → J/I → 0` with `F0` on the reduced basis of `J`.
pub fn presentation_of_quotient(j: &Ideal, i: &Ideal) -> Result<ModulePresentation> {
    let gj = groebner::grevlex_basis(j);
    let ring = j.ring_arc().clone();
    let gens: Vec<Polynomial> = gj.elements().to_vec();
    let shifts: Vec<Multidegree> = gens.iter().map(|g| g.multidegree(&ring).unwrap()).collect();
    let order = ModuleOrder::top(MonomialOrder::grevlex(ring.nvars()));
    let sub = Submodule {
        order: order.clone(),
        shifts: vec![ring.zero_degree()],
        basis: gens.iter().map(|g| Vector::from_poly(&order, g, 0)).collect(),
        nvars: ring.nvars(),
    };
    let mut relations = Vec::new();
    for syz in sub.syzygies() {
        let mut row = vec![Polynomial::zero(); gens.len()];
        for (k, p) in syz {
            row[k] = p;
        }
        relations.push(row);
    }
    let red = Reducer::new(&gj);
    for g in i.gens() {
        let (r, q) = red.divide(g);
        if !r.is_zero() {
            return Err(Error::Invalid(format!(
                "{} is not in the larger ideal",
                g.to_string_with(ring.var_names())
            )));
        }
        relations.push(q);
    }
    Ok(ModulePresentation { ring, generators: gens, free: FreeModule { shifts }, relations })
}

/// `dim Ext¹_S(J/I, S/J)_0` for `I ⊆ J`.
pub fn ext1_degree0_dim(j: &Ideal, i: &Ideal) -> Result<usize> {
    let pres = presentation_of_quotient(j, i)?;
    let ring = pres.ring.clone();
    let gj = groebner::grevlex_basis(j);
    let order = ModuleOrder::top(MonomialOrder::grevlex(ring.nvars()));
    let rels: Vec<Vector> = pres.relations.iter().map(|r| to_vector(&order, r)).filter(|v| !v.is_zero()).collect();
    let kprime = Submodule::new(&ring, pres.free.shifts.clone(), rels);
    let mut q = Quotient::new(&gj);
    let sys = hom_system(&ring, &kprime, &mut q);
    let dim = sys.dimension();
    // Image of Hom(F0, S/J)_0 → Hom(K', S/J)_0 by restriction.
    let mut image = Echelon::new();
    for (jdx, s) in pres.free.shifts.iter().enumerate() {
        let b = q.basis(s).clone();
        for bm in &b {
            let mut row: SparseRow = Vec::new();
            for (l, gamma) in kprime.basis.iter().enumerate() {
                let comp = gamma.component(jdx as u32);
                if comp.is_zero() {
                    continue;
                }
                let img = comp.mul_monomial(bm);
                for (s_idx, c) in q.coords(&img, &sys.degrees[l]) {
                    row.push((sys.offsets[l] + s_idx, c));
                }
            }
            if !row.is_empty() {
                row.sort_by_key(|x| x.0);
                image.insert(row);
            }
        }
    }
    Ok(dim - image.rank())
}

/// `dim J_d / (I_d + (J²)_d)`, for a complete intersection `J` on `ℙⁿ`.
pub fn ext1_ci_formula(j: &Ideal, i: &Ideal, d: i32) -> Result<usize> {
    let ring = j.ring();
    if !is_complete_intersection(j) {
        return Err(Error::Invalid("not a complete intersection of codimension n on ℙⁿ".into()));
    }
    let v = Multidegree(vec![d]);
    let jd = groebner::graded_piece(j, &v);
    let basis = ring.monomial_basis(&v);
    let row = |p: &Polynomial| -> SparseRow {
        let mut r: SparseRow =
            p.terms().iter().map(|(m, c)| (basis.binary_search_by(|b| m.cmp(b)).unwrap(), c.clone())).collect();
        r.sort_by_key(|x| x.0);
        r
    };
    let mut jspan = Echelon::new();
    for p in &jd {
        jspan.insert(row(p));
    }
    let mut small = Echelon::new();
    for p in groebner::graded_piece(i, &v) {
        if !jspan.contains(&row(&p)) {
            return Err(Error::Invalid("I_d is not contained in J_d".into()));
        }
        small.insert(row(&p));
    }
    for p in groebner::graded_piece(&j.product(j), &v) {
        small.insert(row(&p));
    }
    Ok(jspan.rank() - small.rank())
}

/// Codimension-`n` complete intersection on `ℙⁿ`: `n` minimal generators cutting out finitely many points.
pub fn is_complete_intersection(j: &Ideal) -> bool {
    let ring = j.ring();
    if ring.rank() != 1 {
        return false;
    }
    let n = ring.nvars() - 1;
    let mins = groebner::minimal_generators(j);
    if mins.len() != n {
        return false;
    }
    let prod: u64 = mins.iter().map(|g| g.total_degree().unwrap() as u64).product();
    match hilbert::stable_value(j) {
        Ok(h) => h == prod,
        Err(_) => false,
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
    fn koszul_syzygies() {
        let r = p2();
        let i = parse_ideal("y0^2, y1^3", &r).unwrap();
        let p = syzygies(&r, i.gens()).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert!(p.relations_hold(&Ideal::zero(&r)));
        let i = parse_ideal("y0, y1, y2", &r).unwrap();
        let p = syzygies(&r, i.gens()).unwrap();
        assert_eq!(p.relations.len(), 3);
        assert!(p.relations_hold(&Ideal::zero(&r)));
    }

    #[test]
    fn hom_of_points() {
        let r = p2();
        // One reduced point: tangent space of dimension 2.
        assert_eq!(hom_degree0_dim(&parse_ideal("y1, y2", &r).unwrap()), 2);
        let two = groebner::intersect(&parse_ideal("y1, y2", &r).unwrap(), &parse_ideal("y0, y2", &r).unwrap());
        assert_eq!(hom_degree0_dim(&two), 4);
        // Complete intersection of degrees 2, 2: four points, tangent dimension 8.
        assert_eq!(hom_degree0_dim(&parse_ideal("y0^2 - y2^2, y1^2 - y2^2", &r).unwrap()), 8);
    }

    #[test]
    fn ext_trivial_cases() {
        let r = p2();
        let j = parse_ideal("y0^2, y1^4", &r).unwrap();
        assert_eq!(ext1_degree0_dim(&j, &j).unwrap(), 0);
        assert!(ext1_degree0_dim(&parse_ideal("y0^2", &r).unwrap(), &j).is_err());
    }

    #[test]
    fn ci_formula_small() {
        let r = p2();
        let j = parse_ideal("y0^2, y1^4", &r).unwrap();
        assert!(is_complete_intersection(&j));
        let j3 = groebner::graded_piece(&j, &Multidegree(vec![3]));
        let mut w = j3.clone();
        w.pop();
        let mut gens = w.clone();
        gens.extend(groebner::truncate(&j, &Multidegree(vec![4])).gens().iter().cloned());
        let i = Ideal::new(j.ring_arc(), gens).unwrap();
        assert_eq!(ext1_ci_formula(&j, &i, 3).unwrap(), 1);
        assert_eq!(ext1_degree0_dim(&j, &i).unwrap(), 1);
        let full = groebner::truncate(&j, &Multidegree(vec![3]));
        assert_eq!(ext1_ci_formula(&j, &full, 3).unwrap(), 0);
        assert!(!is_complete_intersection(&parse_ideal("y0", &r).unwrap()));
    }
}
