//! Border rank and apolar schemes of monomials.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::enumerate::{enumerate_monomial_apolar_ideals, EnumerationConfig};
use super::report::Certificate;
use crate::apolarity::{self, DualForm};
use crate::error::{Error, Result};
use crate::groebner;
use crate::hilbert;
use crate::ring::{GradedRing, Ideal, Monomial, Multidegree, Polynomial};

#[derive(Clone, Debug)]
pub struct MonomialBorderRank {
    pub value: u64,
    /// Exponents in the original variable order.
    pub exponents: Vec<u32>,
    /// The apolar complete intersection `(y_i^{a_i+1})` over all but the largest exponent.
    pub upper_ideal: Ideal,
    /// `Some(true)` when the search for `r* − 1` came back empty.
    pub search_empty: Option<bool>,
    pub certificates: Vec<Certificate>,
}

fn monomial_exponents(f: &DualForm) -> Result<Vec<u32>> {
    let ring = f.ring();
    if ring.rank() != 1 {
        return Err(Error::Invalid("monomial border rank is computed on a single projective space".into()));
    }
    let terms = f.poly().terms();
    if terms.len() != 1 {
        return Err(Error::Invalid(format!("{} is not a monomial", f.display())));
    }
    let exps = terms[0].0.exps(ring.nvars());
    if exps.iter().any(|&e| e == 0) {
        return Err(Error::Invalid("every variable must occur; drop the unused ones first".into()));
    }
    Ok(exps)
}

/// `r* = ∏_{i<n}(a_i+1)` with a certified upper bound; with `search` the `r* − 1` lower-bound search is run too.
pub fn monomial_border_rank_with(f: &DualForm, search: bool) -> Result<MonomialBorderRank> {
    let exps = monomial_exponents(f)?;
    let ring = f.ring_arc();
    let n = exps.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (exps[i], i));
    let sorted: Vec<u32> = order.iter().map(|&i| exps[i]).collect();
    let r: u64 = sorted[..n - 1].iter().map(|&a| a as u64 + 1).product();
    let gens: Vec<Polynomial> = order[..n - 1]
        .iter()
        .map(|&i| {
            let mut m = Monomial::one();
            m.set_exp(i, exps[i] + 1);
            Polynomial::monomial(m)
        })
        .collect();
    let upper = Ideal::new(ring, gens)?;
    let mut certs = vec![
        Certificate::new("upper ideal apolar", apolarity::is_apolar(&upper, f), upper.display()),
        Certificate::new("upper ideal saturated", groebner::is_saturated(&upper), ""),
        Certificate::new(
            "upper ideal has length r*",
            hilbert::stable_value(&upper).ok() == Some(r),
            format!("r* = {}", r),
        ),
    ];
    let an = sorted[n - 1] as i64;
    let rest: i64 = sorted[..n - 1].iter().map(|&a| a as i64).sum();
    if an >= rest - 1 {
        certs.push(Certificate::new("closed form: a_n ≥ Σ a_i − 1", true, format!("a_n = {}, Σ = {}", an, rest)));
    } else if an == rest - 2 {
        let ann = apolarity::annihilator(f)?;
        let h = hilbert::hilbert_function(&ann, &Multidegree(vec![an as i32 + 1]));
        certs.push(Certificate::new(
            "closed form: a_n = Σ a_i − 2, counting certificate",
            h + 2 == r,
            format!("HF(S/Ann F, {}) = {} = r* − 2", an + 1, h),
        ));
    }
    let mut search_empty = None;
    if search && r > 1 {
        let cfg = EnumerationConfig::new(Ideal::zero(ring), r - 1, Some(f.clone()))?;
        let found = enumerate_monomial_apolar_ideals(&cfg)?;
        search_empty = Some(found.is_empty());
        certs.push(Certificate::new(
            "no monomial apolar ideal with generic Hilbert function of length r* − 1",
            found.is_empty(),
            format!("{} found up to degree {}", found.len(), cfg.cap),
        ));
    }
    Ok(MonomialBorderRank { value: r, exponents: exps, upper_ideal: upper, search_empty, certificates: certs })
}

pub fn monomial_border_rank(f: &DualForm) -> Result<MonomialBorderRank> {
    monomial_border_rank_with(f, true)
}

/// Smallest `r` for which the search finds a monomial apolar ideal with generic Hilbert function `h_r`.
pub fn monomial_border_rank_by_search(f: &DualForm) -> Result<u64> {
    let ring = f.ring_arc();
    for r in 1.. {
        let cfg = EnumerationConfig::new(Ideal::zero(ring), r, Some(f.clone()))?;
        if !enumerate_monomial_apolar_ideals(&cfg)?.is_empty() {
            return Ok(r);
        }
    }
    unreachable!()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VpsRegime {
    /// `c ≥ a+b`.
    Wide,
    /// `c = a+b−1`.
    Edge,
    /// `c ≤ a+b−2`.
    Narrow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VpsShape {
    Unique,
    /// `(y0^{a+1}, s·y1^{b+1} + t·y2^{b+1})`.
    Pencil,
    /// Two-dimensional subspaces of a three-dimensional space of forms.
    Net,
}

#[derive(Clone, Debug)]
pub struct MonomialVpsReport {
    pub exponents: (u32, u32, u32),
    pub r: u64,
    pub regime: VpsRegime,
    pub shape: VpsShape,
    pub description: String,
    pub fiber_type: bool,
    /// `VSP = VPS` is known in this case.
    pub vsp_equals_vps: bool,
    pub members: Vec<Ideal>,
    pub certificates: Vec<Certificate>,
}

impl MonomialVpsReport {
    pub fn certified(&self) -> bool {
        self.certificates.iter().all(|c| c.holds)
    }

    pub fn dimension(&self) -> u32 {
        match self.shape {
            VpsShape::Unique => 0,
            VpsShape::Pencil => 1,
            VpsShape::Net => 2,
        }
    }
}

fn pure_power(i: usize, e: u32) -> Polynomial {
    let mut m = Monomial::one();
    m.set_exp(i, e);
    Polynomial::monomial(m)
}

fn member(ring: &Arc<GradedRing>, gens: Vec<Polynomial>) -> Ideal {
    Ideal::new(ring, gens).expect("homogeneous generators")
}

/// Closed-form description of `VPS(x0^a x1^b x2^c, (a+1)(b+1))` with certificates on sample members.
pub fn monomial_vps_report(a: u32, b: u32, c: u32) -> Result<MonomialVpsReport> {
    if !(0 < a && a <= b && b <= c) {
        return Err(Error::Invalid("expected exponents 0 < a ≤ b ≤ c".into()));
    }
    let ring = Arc::new(GradedRing::projective(2));
    let mut m = Monomial::one();
    m.set_exp(0, a);
    m.set_exp(1, b);
    m.set_exp(2, c);
    let f = DualForm::new(&ring, Polynomial::monomial(m))?;
    let r = (a as u64 + 1) * (b as u64 + 1);
    let (s, t) = (a + b, c as i64 - (a + b) as i64);
    let y0 = pure_power(0, a + 1);
    let y1 = pure_power(1, b + 1);
    let y2 = pure_power(2, b + 1);
    let ci = || member(&ring, vec![y0.clone(), y1.clone()]);
    let pencil = || {
        vec![
            member(&ring, vec![y0.clone(), y1.clone()]),
            member(&ring, vec![y0.clone(), y2.clone()]),
            member(&ring, vec![y0.clone(), &y1 + &y2]),
            member(&ring, vec![y0.clone(), &y1 - &y2.scale(&crate::rational::Q::from_int(3))]),
        ]
    };
    let net = |e: u32| {
        let p = [pure_power(0, e), pure_power(1, e), pure_power(2, e)];
        vec![
            member(&ring, vec![p[0].clone(), p[1].clone()]),
            member(&ring, vec![p[0].clone(), p[2].clone()]),
            member(&ring, vec![p[1].clone(), p[2].clone()]),
            member(&ring, vec![&p[0] + &p[2], &p[1] + &p[2]]),
            member(&ring, vec![&p[0] - &p[1], &p[1] + &p[2].scale(&crate::rational::Q::from_int(2))]),
        ]
    };
    let (regime, shape, members, description) = if t >= 0 {
        (VpsRegime::Wide, VpsShape::Unique, vec![ci()], format!("unique: Proj S/(y0^{}, y1^{})", a + 1, b + 1))
    } else if t == -1 {
        if a == 1 && b == 1 {
            (VpsRegime::Edge, VpsShape::Net, net(2), "P^2 of codimension-one subspaces of Ann(F)_2".into())
        } else if a == 1 {
            (VpsRegime::Edge, VpsShape::Pencil, pencil(), format!("P^1: (y0^2, s*y1^{0} + t*y2^{0})", b + 1))
        } else {
            (VpsRegime::Edge, VpsShape::Unique, vec![ci()], format!("unique: Proj S/(y0^{}, y1^{})", a + 1, b + 1))
        }
    } else if b < c {
        (VpsRegime::Narrow, VpsShape::Unique, vec![ci()], format!("unique: Proj S/(y0^{}, y1^{})", a + 1, b + 1))
    } else if a < b {
        (VpsRegime::Narrow, VpsShape::Pencil, pencil(), format!("P^1: (y0^{}, s*y1^{1} + t*y2^{1})", a + 1, b + 1))
    } else {
        (VpsRegime::Narrow, VpsShape::Net, net(a + 1), format!("P^2: G(2, <y0^{0}, y1^{0}, y2^{0}>)", a + 1))
    };
    let mut certs = Vec::new();
    for (k, i) in members.iter().enumerate() {
        let sat = groebner::is_saturated(i);
        let apolar = apolarity::is_apolar_in_degree(i, &f);
        let low = i.max_gen_degree() <= s;
        let stable = hilbert::stable_value(i).ok();
        let gb = groebner::grevlex_basis(i);
        let row: Vec<u64> = (s..=s + 3).map(|e| hilbert::hilbert_function_gb(&gb, &Multidegree(vec![e as i32]))).collect();
        let tag = |what: &str| format!("member {} {}", k, what);
        certs.push(Certificate::new(&tag("saturated"), sat, i.display()));
        certs.push(Certificate::new(&tag("apolar"), apolar, "I_v ⊆ Ann(F)_v"));
        certs.push(Certificate::new(&tag("generated in degree ≤ a+b"), low, format!("max degree {}", i.max_gen_degree())));
        certs.push(Certificate::new(&tag("stable value"), stable == Some(r), format!("{:?} (expected {})", stable, r)));
        certs.push(Certificate::new(
            &tag("Hilbert function r from degree a+b"),
            row.iter().all(|&h| h == r),
            format!("{:?}", row),
        ));
    }
    Ok(MonomialVpsReport {
        exponents: (a, b, c),
        r,
        regime,
        shape: shape.clone(),
        description,
        fiber_type: true,
        vsp_equals_vps: shape == VpsShape::Net && a == b && b == c,
        members,
        certificates: certs,
    })
}

/// Monomial subspaces `V ⊆ Ann(F)_{a+b}` with `HF(S/(V), a+b) = HF(S/(V), a+b+1) = r`, as ideals `(V)`.
pub fn degree_ab_monomial_subspaces(a: u32, b: u32, c: u32) -> Result<Vec<Ideal>> {
    let ring = Arc::new(GradedRing::projective(2));
    let s = a + b;
    let r = (a as u64 + 1) * (b as u64 + 1);
    let ann: Vec<Monomial> = ring
        .monomials_of_total_degree(s)
        .into_iter()
        .filter(|m| m.exp(0) > a || m.exp(1) > b || m.exp(2) > c)
        .collect();
    let dim = ring.graded_piece_dimension(&Multidegree(vec![s as i32]));
    if dim < r || ((dim - r) as usize) > ann.len() {
        return Ok(Vec::new());
    }
    let k = (dim - r) as usize;
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..k).collect();
    let n = ann.len();
    loop {
        let ms: Vec<Monomial> = pick.iter().map(|&i| ann[i]).collect();
        let ideal = Ideal::monomial(&ring, &ms);
        if hilbert::hilbert_function(&ideal, &Multidegree(vec![s as i32 + 1])) == r {
            out.push(ideal);
        }
        let mut j = k;
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            if pick[j] != j + n - k {
                break;
            }
            if j == 0 {
                return Ok(out);
            }
        }
        pick[j] += 1;
        for t in j + 1..k {
            pick[t] = pick[t - 1] + 1;
        }
    }
}
