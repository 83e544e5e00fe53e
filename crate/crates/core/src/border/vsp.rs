//! Shapes of `VSP̲(F, r)` for binary forms, ternary cubics, forms with an apolar complete intersection,
//! reducible cubics, and plateau identifiability.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::report::{ideal_certificates, Certificate, Shape, VspBarReport};
use crate::apolarity::{self, DualForm, EssentialForm};
use crate::error::{Error, Result};
use crate::groebner;
use crate::hilbert;
use crate::homological;
use crate::linalg::{sparse_from_dense, Echelon, Matrix};
use crate::notation;
use crate::rational::Q;
use crate::ring::{binomial, GradedRing, Ideal, Monomial, Multidegree, Polynomial};

fn deg1(k: i32) -> Multidegree {
    Multidegree(vec![k])
}

/// Replaces the shape by "unresolved" when a certificate failed.
fn finalize(mut rep: VspBarReport) -> VspBarReport {
    if let Some(bad) = rep.certificates.iter().find(|c| !c.holds) {
        if !matches!(rep.shape, Shape::Unresolved { .. }) {
            rep.shape = Shape::Unresolved { reason: format!("certificate failed: {}", bad.name) };
        }
    }
    rep
}

fn sorted_gens(i: &Ideal) -> Vec<Polynomial> {
    let mut g = groebner::minimal_generators(i);
    g.sort_by_key(|p| p.total_degree().unwrap_or(0));
    g
}

/// `Ann(F)` of a binary form is `(g1, g2)`; `rk̲ = deg g1`, and `VSP̲` is `ℙ¹` exactly when the degrees agree.
pub fn sylvester_binary(f: &DualForm) -> Result<VspBarReport> {
    let ring = f.ring_arc();
    if ring.rank() != 1 || ring.nvars() != 2 {
        return Err(Error::Invalid("Sylvester's theorem needs a binary form".into()));
    }
    if f.is_zero() {
        return Err(Error::Invalid("the zero form has no border rank".into()));
    }
    let d = f.degree().0[0];
    let gens = sorted_gens(&apolarity::annihilator(f)?);
    let degs: Vec<i32> = gens.iter().map(|g| g.total_degree().unwrap_or(0) as i32).collect();
    let mut certs = vec![Certificate::new(
        "Ann(F) is a complete intersection of two forms",
        gens.len() == 2 && degs.iter().sum::<i32>() == d + 2,
        format!("generator degrees {:?}, d = {}", degs, d),
    )];
    if gens.len() != 2 {
        return Ok(VspBarReport::unresolved(f.display(), None, "unexpected annihilator", certs));
    }
    let r = degs[0] as u64;
    let top = d + 1;
    let single = |g: &Polynomial| Ideal::new(ring, vec![g.clone()]).expect("homogeneous");
    let shape = if degs[0] < degs[1] {
        let ideal = single(&gens[0]);
        certs.extend(ideal_certificates("(g1)", &ideal, f, r, top));
        Shape::Point { ideal, criterion: "the only apolar form of degree rk̲ is g1 (deg g1 < deg g2)".into() }
    } else {
        let members = vec![single(&gens[0]), single(&gens[1]), single(&(&gens[0] + &gens[1]))];
        for (k, m) in members.iter().enumerate() {
            certs.extend(ideal_certificates(&format!("pencil member {}", k), m, f, r, top));
        }
        Shape::Projective { n: 1, members }
    };
    Ok(finalize(VspBarReport { input: f.display(), r: Some(r), shape, certificates: certs }))
}

/// Dual basis of the essential linear forms, as linear forms in `y`.
fn derivations(ess: &EssentialForm, n: usize) -> Vec<Polynomial> {
    let k = ess.linear_forms.len();
    let mut rows: Vec<Vec<Q>> = ess.linear_forms.iter().map(|l| (0..n).map(|j| l.coefficient(&Monomial::var(j))).collect()).collect();
    let mut ech = Echelon::new();
    for r in &rows {
        ech.insert(sparse_from_dense(r));
    }
    for j in 0..n {
        let mut e = vec![Q::ZERO; n];
        e[j] = Q::ONE;
        if rows.len() < n && ech.insert(sparse_from_dense(&e)) {
            rows.push(e);
        }
    }
    let m = Matrix::from_rows(rows);
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, Q::ONE);
    }
    let (red, _) = aug.rref();
    (0..k).map(|c| Polynomial::from_terms((0..n).map(|j| (Monomial::var(j), red.get(j, n + c).clone())))).collect()
}

/// Pulls an ideal on the essential variables back to the original ring, adding `Ann(F)_1`.
fn pull_back(f: &DualForm, ess: &EssentialForm, i: &Ideal) -> Result<Ideal> {
    let n = f.ring().nvars();
    let ders = derivations(ess, n);
    let mut gens: Vec<Polynomial> = i.gens().iter().map(|g| g.substitute(&ders)).collect();
    gens.extend(apolarity::catalecticant(f, &deg1(1)).kernel());
    Ideal::new(f.ring_arc(), gens)
}

fn reduce_to_essential(f: &DualForm, ess: &EssentialForm) -> Result<VspBarReport> {
    let k = ess.form.ring().nvars();
    if k == 1 {
        let ideal = Ideal::new(f.ring_arc(), apolarity::catalecticant(f, &deg1(1)).kernel())?;
        let certs = ideal_certificates("(Ann(F)_1)", &ideal, f, 1, f.degree().0[0] + 1);
        let shape = Shape::Point { ideal, criterion: "F is a power of a linear form".into() };
        return Ok(finalize(VspBarReport { input: f.display(), r: Some(1), shape, certificates: certs }));
    }
    if k != 2 {
        return Ok(VspBarReport::unresolved(f.display(), None, "essential variables beyond the binary case", Vec::new()));
    }
    let small = sylvester_binary(&ess.form)?;
    let mut certs = vec![Certificate::new(
        "F is a binary form in disguise",
        true,
        format!("F = {} in {}", ess.form.display(), ess.linear_forms.iter().map(|l| l.to_string_with(f.ring().dual_var_names())).collect::<Vec<_>>().join(", ")),
    )];
    certs.extend(small.certificates.iter().cloned());
    let r = small.r.unwrap_or(0);
    let top = f.degree().0[0] + 1;
    let shape = match small.shape {
        Shape::Point { ideal, criterion } => {
            let big = pull_back(f, ess, &ideal)?;
            certs.extend(ideal_certificates("pulled-back ideal", &big, f, r, top));
            Shape::Point { ideal: big, criterion: format!("{} (after removing inessential variables)", criterion) }
        }
        Shape::Projective { n, members } => {
            let mut big = Vec::new();
            for (j, m) in members.iter().enumerate() {
                let p = pull_back(f, ess, m)?;
                certs.extend(ideal_certificates(&format!("pulled-back member {}", j), &p, f, r, top));
                big.push(p);
            }
            Shape::Projective { n, members: big }
        }
        other => other,
    };
    Ok(finalize(VspBarReport { input: f.display(), r: Some(r), shape, certificates: certs }))
}

fn pencil_witness(ring: &Arc<GradedRing>, quadrics: &[Polynomial], f: &DualForm, r: u64) -> Option<(Ideal, Vec<Certificate>)> {
    let mut tries: Vec<Vec<Polynomial>> = Vec::new();
    for a in 0..quadrics.len() {
        for b in a + 1..quadrics.len() {
            tries.push(vec![quadrics[a].clone(), quadrics[b].clone()]);
        }
    }
    if quadrics.len() == 3 {
        let q = |k: i64| Q::from_int(k);
        tries.push(vec![&quadrics[0] + &quadrics[2].scale(&q(2)), &quadrics[1] + &quadrics[2].scale(&q(3))]);
    }
    for t in tries {
        let ideal = Ideal::new(ring, t).ok()?;
        let certs = ideal_certificates("pencil", &ideal, f, r, 5);
        if certs.iter().all(|c| c.holds) {
            return Some((ideal, certs));
        }
    }
    None
}

/// Ternary cubics: binary in disguise, `ℙ²` when `Ann(F)` is generated by three quadrics, a point when the border rank is minimal.
pub fn ternary_cubic_vspbar(f: &DualForm) -> Result<VspBarReport> {
    let ring = f.ring_arc();
    if ring.rank() != 1 || ring.nvars() != 3 || f.degree().0[0] != 3 {
        return Err(Error::Invalid("expected a ternary cubic".into()));
    }
    if !apolarity::is_concise(f)[0] {
        let ess = apolarity::essential_variables(f)?;
        return reduce_to_essential(f, &ess);
    }
    let ann = apolarity::annihilator(f)?;
    let gens = sorted_gens(&ann);
    let quadrics: Vec<Polynomial> = gens.iter().filter(|g| g.total_degree() == Some(2)).cloned().collect();
    let row: Vec<u64> = (0..4).map(|k| hilbert::hilbert_function(&ann, &deg1(k))).collect();
    let mut certs = vec![Certificate::new("concise", true, format!("HF(S/Ann F) = {:?}", row))];
    if gens.len() == 3 && quadrics.len() == 3 {
        let q2 = Ideal::new(ring, quadrics.clone())?;
        let h3 = hilbert::hilbert_function(&q2, &deg1(3));
        certs.push(Certificate::new("Ann(F) generated by three quadrics", true, q2.display()));
        certs.push(Certificate::new(
            "border rank exceeds 3",
            h3 < 3,
            format!("an ideal of VSP̲(F,3) would contain Ann(F)_2, but HF(S/(Ann(F)_2), 3) = {}", h3),
        ));
        let shape = match pencil_witness(ring, &quadrics, f, 4) {
            Some((ideal, c)) => {
                certs.extend(c);
                certs.push(Certificate::new("witness pencil", true, ideal.display()));
                Shape::Projective { n: 2, members: vec![ideal] }
            }
            None => Shape::Unresolved { reason: "no pencil of apolar conics with four base points found".into() },
        };
        return Ok(finalize(VspBarReport { input: f.display(), r: Some(4), shape, certificates: certs }));
    }
    certs.push(Certificate::new("Ann(F) needs a cubic generator", true, ann.display()));
    let hess = apolarity::hessian(f)?;
    certs.push(Certificate::new("Hessian nonzero", !hess.is_zero(), hess.to_string_with(ring.dual_var_names())));
    if hess.is_zero() {
        return Ok(VspBarReport::unresolved(f.display(), Some(3), "vanishing Hessian", certs));
    }
    let ideal = Ideal::new(ring, quadrics)?;
    certs.extend(ideal_certificates("(Ann(F)_2)", &ideal, f, 3, 5));
    let shape = Shape::Point {
        ideal,
        criterion: "minimal border rank with nonvanishing Hessian: the unique point is the saturated ideal (Ann(F)_2)".into(),
    };
    Ok(finalize(VspBarReport { input: f.display(), r: Some(3), shape, certificates: certs }))
}

/// Whether `W ⊆ J_d` has codimension one and contains `(J²)_d`.
pub fn ci_subspace_test(j: &Ideal, w: &[Polynomial], d: i32) -> bool {
    let ring = j.ring();
    let basis = ring.monomial_basis(&deg1(d));
    let row = |p: &Polynomial| {
        let mut r: Vec<(usize, Q)> = p
            .terms()
            .iter()
            .map(|(m, c)| (basis.binary_search_by(|b| m.cmp(b)).unwrap_or(usize::MAX), c.clone()))
            .collect();
        r.sort_by_key(|x| x.0);
        r
    };
    let jd = groebner::graded_piece(j, &deg1(d));
    let mut ew = Echelon::new();
    for p in w {
        if p.terms().iter().any(|(m, _)| basis.binary_search_by(|b| m.cmp(b)).is_err()) {
            return false;
        }
        ew.insert(row(p));
    }
    let mut ej = Echelon::new();
    for p in &jd {
        ej.insert(row(p));
    }
    let inside = w.iter().all(|p| ej.contains(&row(p)));
    let j2 = groebner::graded_piece(&j.product(j), &deg1(d));
    inside && ew.rank() + 1 == ej.rank() && j2.iter().all(|p| ew.contains(&row(p)))
}

/// `VSP̲(F, r)` when `Ann(F)` contains a complete intersection `J` of codimension `n` on `ℙⁿ`.
pub fn ci_vspbar(f: &DualForm, j: &Ideal) -> Result<VspBarReport> {
    let ring = f.ring_arc();
    if ring.rank() != 1 || j.ring() != f.ring() {
        return Err(Error::Invalid("complete intersections are handled on a single projective space".into()));
    }
    let n = ring.nvars() - 1;
    let gens = sorted_gens(j);
    let a: Vec<u64> = gens.iter().map(|g| g.total_degree().unwrap_or(0) as u64 - 1).collect();
    let r: u64 = a.iter().map(|x| x + 1).product();
    let d = a.iter().sum::<u64>() as i64 - 1;
    let mut certs = vec![
        Certificate::new(
            "J is a complete intersection of codimension n",
            gens.len() == n && homological::is_complete_intersection(j),
            format!("{} with a = {:?}", j.display(), a),
        ),
        Certificate::new("J apolar to F", apolarity::is_apolar(j, f), f.display()),
    ];
    if certs.iter().any(|c| !c.holds) {
        return Ok(VspBarReport::unresolved(f.display(), Some(r), "J is not an apolar complete intersection", certs));
    }
    let ann = apolarity::annihilator(f)?;
    let hf_top = hilbert::hilbert_function(&ann, &deg1(d as i32 + 1));
    certs.push(Certificate::new(
        "Ann(F) agrees with J in degree d+1",
        hf_top == r,
        format!("HF(S/Ann F, {}) = {}, r = {}", d + 1, hf_top, r),
    ));
    let below = binomial(d - 1 + n as i64, n as i64);
    certs.push(Certificate::new("C(d-1+n, n) ≤ r", below <= r, format!("{} vs {}", below, r)));
    if certs.iter().any(|c| !c.holds) {
        return Ok(VspBarReport::unresolved(f.display(), Some(r), "hypotheses of the complete-intersection criterion fail", certs));
    }
    let top = d as i32 + 4;
    let lo = deg1(0);
    let at = binomial(d + n as i64, n as i64);
    if at <= r {
        let ideal = groebner::truncate(j, &deg1(d as i32 + 1));
        certs.push(Certificate::new("C(d+n, n) ≤ r", true, format!("{} vs {}", at, r)));
        certs.push(Certificate::new("J_{≥d+1} apolar", apolarity::is_apolar(&ideal, f), ideal.display()));
        let g = hilbert::has_generic_hf(&ideal, r, &lo, &deg1(top));
        certs.push(Certificate::new("J_{≥d+1} generic Hilbert function", g.is_ok(), format!("{:?}", g)));
        let shape = Shape::Point { ideal, criterion: "dim S_d ≤ r forces I_d = 0, hence I = J_{≥d+1}".into() };
        return Ok(finalize(VspBarReport { input: f.display(), r: Some(r), shape, certificates: certs }));
    }
    let hj = hilbert::hilbert_function(j, &deg1(d as i32));
    let j2 = j.product(j);
    let hj2 = hilbert::hilbert_function(&j2, &deg1(d as i32));
    let nn = hj2 - r;
    certs.push(Certificate::new("HF(S/J, d) = r - 1", hj + 1 == r, format!("{}", hj)));
    certs.push(Certificate::new("N = HF(S/J², d) - r", true, format!("{} - {} = {}", hj2, r, nn)));
    let member = sample_member(j, &j2, d as i32)?;
    let w: Vec<Polynomial> = member.1.clone();
    certs.push(Certificate::new("sample W contains (J²)_d", ci_subspace_test(j, &w, d as i32), format!("{} forms", w.len())));
    certs.push(Certificate::new("sample member apolar", apolarity::is_apolar(&member.0, f), member.0.display()));
    let g = hilbert::has_generic_hf(&member.0, r, &lo, &deg1(top));
    certs.push(Certificate::new("sample member generic Hilbert function", g.is_ok(), format!("{:?}", g)));
    let shape = Shape::Projective { n: nn, members: vec![member.0] };
    Ok(finalize(VspBarReport { input: f.display(), r: Some(r), shape, certificates: certs }))
}

/// `(W) + J_{≥d+1}` for a codimension-one `W ⊇ (J²)_d` obtained by dropping one complement vector.
fn sample_member(j: &Ideal, j2: &Ideal, d: i32) -> Result<(Ideal, Vec<Polynomial>)> {
    let ring = j.ring_arc();
    let basis = ring.monomial_basis(&deg1(d));
    let row = |p: &Polynomial| {
        let mut r: Vec<(usize, Q)> =
            p.terms().iter().map(|(m, c)| (basis.binary_search_by(|b| m.cmp(b)).expect("degree d"), c.clone())).collect();
        r.sort_by_key(|x| x.0);
        r
    };
    let mut ech = Echelon::new();
    let mut w = Vec::new();
    for p in groebner::graded_piece(j2, &deg1(d)) {
        if ech.insert(row(&p)) {
            w.push(p);
        }
    }
    let mut extra = Vec::new();
    for p in groebner::graded_piece(j, &deg1(d)) {
        if ech.insert(row(&p)) {
            extra.push(p);
        }
    }
    extra.pop();
    w.extend(extra);
    let mut gens = w.clone();
    gens.extend(groebner::truncate(j, &deg1(d + 1)).gens().iter().cloned());
    Ok((Ideal::new(ring, gens)?, w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CwKind {
    A,
    B,
    C,
}

/// The reducible cubic of the given kind on `ℙⁿ`.
pub fn cw_cubic(kind: CwKind, n: usize) -> Result<DualForm> {
    let ring = Arc::new(GradedRing::projective(n));
    let squares = |from: usize| (from..=n).map(|i| format!("x{}^2", i)).collect::<Vec<_>>().join(" + ");
    let text = match kind {
        CwKind::A => format!("x0*(x0^2 + {})", squares(1)),
        CwKind::B => format!("x0*({})", squares(1)),
        CwKind::C if n >= 2 => format!("x0*(x0*x1 + {})", squares(2)),
        CwKind::C => "x0^2*x1".to_string(),
    };
    DualForm::new(&ring, notation::parse_dual_polynomial(&text, &ring)?)
}

/// The ideal `(y_i y_j, y_i² − y_n² : 1 ≤ i < j ≤ n)`.
pub fn cw_point_ideal(ring: &Arc<GradedRing>) -> Result<Ideal> {
    let n = ring.nvars() - 1;
    let mut parts = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            parts.push(format!("y{}*y{}", i, j));
        }
        if i < n {
            parts.push(format!("y{}^2 - y{}^2", i, n));
        }
    }
    notation::parse_ideal(&parts.join(", "), ring)
}

pub fn cw_cubic_vspbar(kind: CwKind, n: usize) -> Result<VspBarReport> {
    if n < 2 {
        return Err(Error::Invalid("reducible cubics are classified for n ≥ 2".into()));
    }
    let f = cw_cubic(kind, n)?;
    let ring = f.ring_arc().clone();
    if n == 2 && kind != CwKind::C {
        return ternary_cubic_vspbar(&f);
    }
    let ann = apolarity::annihilator(&f)?;
    let gens = sorted_gens(&ann);
    let mut certs = vec![Certificate::new("concise", apolarity::is_concise(&f)[0], f.display())];
    if kind == CwKind::C {
        let r = n as u64 + 1;
        let hess = apolarity::hessian(&f)?;
        certs.push(Certificate::new("Hessian nonzero", !hess.is_zero(), hess.to_string_with(ring.dual_var_names())));
        let h1 = hilbert::hilbert_function(&ann, &deg1(1));
        certs.push(Certificate::new("minimal border rank lower bound", h1 == r, format!("HF(S/Ann F, 1) = {}", h1)));
        let quadrics: Vec<Polynomial> = gens.iter().filter(|g| g.total_degree() == Some(2)).cloned().collect();
        let ideal = Ideal::new(&ring, quadrics)?;
        certs.extend(ideal_certificates("(Ann(F)_2)", &ideal, &f, r, 5));
        let shape = Shape::Point {
            ideal,
            criterion: "minimal border rank with nonvanishing Hessian: the unique point is the saturated ideal (Ann(F)_2)".into(),
        };
        return Ok(finalize(VspBarReport { input: f.display(), r: Some(r), shape, certificates: certs }));
    }
    let r = n as u64 + 2;
    let all_quadrics = gens.iter().all(|g| g.total_degree() == Some(2));
    let len: u64 = (0..=3).map(|k| hilbert::hilbert_function(&ann, &deg1(k))).sum();
    certs.push(Certificate::new(
        "cactus lower bound from quadratic generation",
        all_quadrics && len == 2 * r,
        format!("Ann(F) generated in degree 2, length {} = 2·{}", len, r),
    ));
    let ideal = cw_point_ideal(&ring)?;
    certs.extend(ideal_certificates("(y_iy_j, y_i^2 - y_n^2)", &ideal, &f, r, 5));
    let shape = Shape::Point {
        ideal,
        criterion: "y0² is excluded from the initial ideal of any apolar ideal with generic Hilbert function".into(),
    };
    Ok(finalize(VspBarReport { input: f.display(), r: Some(r), shape, certificates: certs }))
}

#[derive(Clone, Debug)]
pub enum PlateauVerdict {
    Identifiable { degree: Multidegree, ideal: Ideal },
    PlateauWithoutWitness { degree: Multidegree },
    NoPlateau,
}

impl PlateauVerdict {
    pub fn label(&self) -> String {
        match self {
            PlateauVerdict::Identifiable { .. } => "border identifiable".into(),
            PlateauVerdict::PlateauWithoutWitness { .. } => "plateau found, no saturated witness".into(),
            PlateauVerdict::NoPlateau => "no plateau".into(),
        }
    }
}

/// Looks for `u` with `HF(S/Ann F, u) = HF(S/Ann F, u+𝟙) = r` and a saturated apolar witness of length `r`.
pub fn plateau_identifiability(f: &DualForm, r: u64) -> Result<PlateauVerdict> {
    let ring = f.ring_arc();
    let ann = apolarity::annihilator(f)?;
    let gb = groebner::grevlex_basis(&ann);
    let one = ring.one_degree();
    let mut box_ = Multidegree::box_range(&ring.zero_degree(), f.degree());
    box_.sort_by_key(|d| (d.total(), d.clone()));
    let mut first = None;
    for u in box_ {
        let up = &u + &one;
        if hilbert::hilbert_function_gb(&gb, &u) != r || hilbert::hilbert_function_gb(&gb, &up) != r {
            continue;
        }
        first.get_or_insert(u.clone());
        let gens: Vec<Polynomial> =
            ann.gens().iter().zip(ann.gen_degrees()).filter(|(_, d)| d.leq(&up)).map(|(g, _)| g.clone()).collect();
        let k = groebner::saturate_irrelevant(&Ideal::new(ring, gens)?);
        let top = f.degree() + &one;
        let ok = apolarity::is_apolar(&k, f)
            && hilbert::stable_value(&k).ok() == Some(r)
            && hilbert::has_generic_hf(&k, r, &ring.zero_degree(), &top).is_ok();
        if ok {
            return Ok(PlateauVerdict::Identifiable { degree: u, ideal: k });
        }
    }
    Ok(match first {
        Some(degree) => PlateauVerdict::PlateauWithoutWitness { degree },
        None => PlateauVerdict::NoPlateau,
    })
}
