//! The dual ring, the differentiation action of `S` on `T`, catalecticants and annihilators.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner;
use crate::hilbert;
use crate::linalg::{sparse_from_dense, Echelon, Matrix};
use crate::rational::Q;
use crate::ring::{GradedRing, Ideal, Monomial, Multidegree, Polynomial};

/// Homogeneous element of the dual ring `T`; variable `i` of `T` pairs with variable `i` of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualForm {
    ring: Arc<GradedRing>,
    poly: Polynomial,
    degree: Multidegree,
}

impl DualForm {
    pub fn new(ring: &Arc<GradedRing>, poly: Polynomial) -> Result<DualForm> {
        if poly.var_span() > ring.nvars() {
            return Err(Error::Invalid("form uses variables outside the ring".into()));
        }
        let degree = match poly.multidegree(ring) {
            Some(d) => d,
            None if poly.is_zero() => ring.zero_degree(),
            None => return Err(Error::NotHomogeneous(poly.to_string_with(ring.dual_var_names()))),
        };
        Ok(DualForm { ring: ring.clone(), poly, degree })
    }

    /// Order-`k` tensor as a multilinear form; `entries` is row-major over `shape`.
    pub fn from_tensor(shape: &[usize], entries: &[Q]) -> Result<DualForm> {
        let total: usize = shape.iter().product();
        if entries.len() != total {
            return Err(Error::Invalid(format!("tensor has {} entries, shape needs {}", entries.len(), total)));
        }
        if shape.len() < 2 {
            return Err(Error::Invalid("tensors need at least two factors".into()));
        }
        let ring = Arc::new(GradedRing::from_block_sizes(shape)?);
        let offsets: Vec<usize> = (0..shape.len()).map(|b| shape[..b].iter().sum()).collect();
        let mut terms = Vec::new();
        for (flat, c) in entries.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut rest = flat;
            let mut m = Monomial::one();
            for b in (0..shape.len()).rev() {
                let i = rest % shape[b];
                rest /= shape[b];
                m = m.mul(&Monomial::var(offsets[b] + i));
            }
            terms.push((m, c.clone()));
        }
        let poly = Polynomial::from_terms(terms);
        if poly.is_zero() {
            let degree = ring.one_degree();
            return Ok(DualForm { ring, poly, degree });
        }
        DualForm::new(&ring, poly)
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn degree(&self) -> &Multidegree {
        &self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn display(&self) -> String {
        self.poly.to_string_with(self.ring.dual_var_names())
    }
}

fn falling(a: u32, k: u32) -> i64 {
    (0..k).map(|i| (a - i) as i64).product()
}

/// `m ∘ x` on monomials: the derivative coefficient and the resulting monomial.
fn act_monomial(m: &Monomial, x: &Monomial) -> Option<(Monomial, Q)> {
    let q = m.quotient_of(x)?;
    let mut c = 1i64;
    for i in 0..crate::ring::MAX_VARS {
        let k = m.exp(i);
        if k > 0 {
            c *= falling(x.exp(i), k);
        }
    }
    Some((q, Q::from_int(c)))
}

/// `ψ ∘ F` as polynomials (no homogeneity required).
pub fn apply(psi: &Polynomial, f: &Polynomial) -> Polynomial {
    let mut terms = Vec::new();
    for (m, a) in psi.terms() {
        for (x, b) in f.terms() {
            if let Some((q, c)) = act_monomial(m, x) {
                terms.push((q, &(a * b) * &c));
            }
        }
    }
    Polynomial::from_terms(terms)
}

/// `ψ ∘ F`.
pub fn contract(psi: &Polynomial, f: &DualForm) -> Result<DualForm> {
    let Some(u) = psi.multidegree(&f.ring) else {
        if psi.is_zero() {
            return DualForm::new(&f.ring, Polynomial::zero());
        }
        return Err(Error::NotHomogeneous(psi.to_string_with(f.ring.var_names())));
    };
    let r = apply(psi, &f.poly);
    if r.is_zero() {
        let mut z = DualForm::new(&f.ring, r)?;
        z.degree = f.degree.sub(&u);
        return Ok(z);
    }
    DualForm::new(&f.ring, r)
}

/// Matrix of `S_u → T_{v−u}`, rows indexed by `S_u`, columns by `T_{v−u}`.
#[derive(Clone, Debug)]
pub struct Catalecticant {
    pub source_degree: Multidegree,
    pub rows: Vec<Monomial>,
    pub cols: Vec<Monomial>,
    pub matrix: Matrix,
}

impl Catalecticant {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Basis of the kernel, i.e. of `Ann(F)_u`.
    pub fn kernel(&self) -> Vec<Polynomial> {
        self.matrix
            .transpose()
            .kernel()
            .into_iter()
            .map(|v| Polynomial::from_terms(self.rows.iter().copied().zip(v)))
            .collect()
    }
}

pub fn catalecticant(f: &DualForm, u: &Multidegree) -> Catalecticant {
    let ring = &f.ring;
    let rows = ring.monomial_basis(u);
    let target = f.degree.sub(u);
    let cols = ring.monomial_basis(&target);
    let mut matrix = Matrix::zeros(rows.len(), cols.len());
    for (i, m) in rows.iter().enumerate() {
        let img = apply(&Polynomial::monomial(*m), &f.poly);
        for (x, c) in img.terms() {
            let j = cols.binary_search_by(|b| x.cmp(b)).expect("image lies in T_{v-u}");
            matrix.set(i, j, c.clone());
        }
    }
    Catalecticant { source_degree: u.clone(), rows, cols, matrix }
}

fn row_of(p: &Polynomial, basis: &[Monomial]) -> Vec<(usize, Q)> {
    let mut row: Vec<(usize, Q)> =
        p.terms().iter().map(|(m, c)| (basis.binary_search_by(|b| m.cmp(b)).expect("in basis"), c.clone())).collect();
    row.sort_by_key(|x| x.0);
    row
}

/// Generators of `Ann(F)`, certified by comparing Hilbert function and catalecticant ranks on `u ≤ v+𝟙`.
pub fn annihilator(f: &DualForm) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::Invalid("the annihilator of 0 is the whole ring".into()));
    }
    let ring = &f.ring;
    let v = &f.degree;
    let top = v + &ring.one_degree();
    let mut degrees = Multidegree::box_range(&ring.zero_degree(), &top);
    degrees.sort_by_key(|d| (d.total(), d.clone()));
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut gen_degs: Vec<Multidegree> = Vec::new();
    let mut ranks = Vec::new();
    for u in &degrees {
        let basis = ring.monomial_basis(u);
        let mut span = Echelon::new();
        for (g, d) in gens.iter().zip(&gen_degs) {
            if !d.leq(u) {
                continue;
            }
            for m in ring.monomial_basis(&u.sub(d)) {
                span.insert(row_of(&g.mul_monomial(&m), &basis));
            }
        }
        let candidates: Vec<Polynomial> = if u.leq(v) {
            let cat = catalecticant(f, u);
            ranks.push((u.clone(), cat.rank()));
            cat.kernel()
        } else {
            ranks.push((u.clone(), 0));
            basis.iter().map(|m| Polynomial::monomial(*m)).collect()
        };
        for k in candidates {
            if span.insert(row_of(&k, &basis)) {
                gens.push(k);
                gen_degs.push(u.clone());
            }
        }
    }
    let ideal = Ideal::new(ring, gens)?;
    let gb = groebner::grevlex_basis(&ideal);
    for (u, r) in &ranks {
        let h = hilbert::hilbert_function_gb(&gb, u);
        if h != *r as u64 {
            return Err(Error::Certificate(format!(
                "HF(S/Ann F, {}) = {} but the catalecticant has rank {}",
                u, h, r
            )));
        }
    }
    Ok(ideal)
}

/// Generators of `Ann(F)` of degree at most `d` (ℤ-graded), i.e. `(Ann(F)_{≤d})`.
pub fn annihilator_up_to(f: &DualForm, d: i32) -> Result<Ideal> {
    let ann = annihilator(f)?;
    let gens = ann.gens().iter().filter(|g| g.total_degree().unwrap_or(0) as i32 <= d).cloned().collect();
    Ideal::new(f.ring_arc(), gens)
}

/// Conciseness per block: full rank of the catalecticant at the block's unit degree.
pub fn is_concise(f: &DualForm) -> Vec<bool> {
    let ring = &f.ring;
    (0..ring.rank())
        .map(|b| {
            let e = Multidegree::unit(ring.rank(), b);
            if !e.leq(&f.degree) {
                return false;
            }
            catalecticant(f, &e).rank() == ring.blocks()[b].size
        })
        .collect()
}

/// Whether every element of the ideal annihilates `F`, tested on generators.
pub fn is_apolar(i: &Ideal, f: &DualForm) -> bool {
    i.gens().iter().zip(i.gen_degrees()).all(|(g, d)| !d.leq(&f.degree) || apply(g, &f.poly).is_zero())
}

/// Same test through the single degree `v`: `I_v ⊆ Ann(F)_v`.
pub fn is_apolar_in_degree(i: &Ideal, f: &DualForm) -> bool {
    groebner::graded_piece(i, &f.degree).iter().all(|g| apply(g, &f.poly).is_zero())
}

fn poly_det(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect()).collect();
        let t = &m[0][j] * &poly_det(&minor);
        acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// Determinant of the matrix of second partial derivatives (a polynomial in `T`).
pub fn hessian(f: &DualForm) -> Result<Polynomial> {
    if f.ring.rank() != 1 {
        return Err(Error::Invalid("the Hessian is defined here for a single block".into()));
    }
    let n = f.ring.nvars();
    let first: Vec<Polynomial> = (0..n).map(|i| f.poly.derivative(i)).collect();
    let m: Vec<Vec<Polynomial>> = (0..n).map(|i| (0..n).map(|j| first[i].derivative(j)).collect()).collect();
    Ok(poly_det(&m))
}

/// `Ann(F)_{≤p−1} = 0` for a form of degree `2p−2` on a single block.
pub fn is_nondegenerate_even(f: &DualForm, p: i32) -> Result<bool> {
    if f.ring.rank() != 1 || f.degree.0[0] != 2 * p - 2 {
        return Err(Error::Invalid(format!("expected a form of degree {} on one block", 2 * p - 2)));
    }
    for k in 0..p {
        let u = Multidegree(vec![k]);
        if (catalecticant(f, &u).rank() as u64) < f.ring.graded_piece_dimension(&u) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A form written in fewer variables: `F(x) = G(ℓ_1(x), …, ℓ_k(x))`.
#[derive(Clone, Debug)]
pub struct EssentialForm {
    /// `G` on `ℙ^{k−1}`.
    pub form: DualForm,
    /// Linear forms `ℓ_i` in the original dual variables.
    pub linear_forms: Vec<Polynomial>,
}

/// Rewrites a single-block form in its essential variables (the span of its `(d−1)`-st derivatives).
pub fn essential_variables(f: &DualForm) -> Result<EssentialForm> {
    let ring = &f.ring;
    if ring.rank() != 1 || f.is_zero() {
        return Err(Error::Invalid("essential variables need a nonzero single-block form".into()));
    }
    let n = ring.nvars();
    let d = f.degree.0[0];
    if d == 0 {
        return Err(Error::Invalid("constant form".into()));
    }
    let cat = catalecticant(f, &Multidegree(vec![d - 1]));
    let mut ech = Echelon::new();
    let mut span: Vec<Vec<Q>> = Vec::new();
    for i in 0..cat.matrix.rows {
        let row = cat.matrix.row(i).to_vec();
        if ech.insert(sparse_from_dense(&row)) {
            span.push(row);
        }
    }
    // Columns of `cat` are indexed by x0 > x1 > …, i.e. the canonical basis of T_1.
    let col_var: Vec<usize> = cat.cols.iter().map(|m| (0..n).find(|&i| m.exp(i) == 1).unwrap()).collect();
    let k = span.len();
    let mut basis = span.clone();
    for j in 0..n {
        let mut e = vec![Q::ZERO; n];
        e[j] = Q::ONE;
        if basis.len() < n && ech.insert(sparse_from_dense(&e)) {
            basis.push(e);
        }
    }
    // Rows of `m` are the new coordinates in terms of x; x = m⁻¹ z.
    let m = Matrix::from_rows(basis);
    let inv = invert(&m);
    let mut images = vec![Polynomial::zero(); n];
    for (j, &var) in col_var.iter().enumerate() {
        images[var] = Polynomial::from_terms((0..n).map(|c| (Monomial::var(c), inv.get(j, c).clone())));
    }
    let g = f.poly.substitute(&images);
    if g.var_span() > k {
        return Err(Error::Certificate("form does not live in the span of its derivatives".into()));
    }
    let small = Arc::new(GradedRing::projective(k - 1));
    let linear_forms = (0..k)
        .map(|c| Polynomial::from_terms((0..n).map(|j| (Monomial::var(col_var[j]), m.get(c, j).clone()))))
        .collect();
    Ok(EssentialForm { form: DualForm::new(&small, g)?, linear_forms })
}

fn invert(m: &Matrix) -> Matrix {
    let n = m.rows;
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, Q::ONE);
    }
    let (r, _) = aug.rref();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, r.get(i, n + j).clone());
        }
    }
    out
}
