//! Wildness of concise minimal border rank 3-tensors, and the replay of the wild `ℙ³` family.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::report::{Certificate, Shape, VspBarReport};
use crate::apolarity::{self, DualForm};
use crate::error::{Error, Result};
use crate::groebner;
use crate::hilbert;
use crate::homological;
use crate::notation;
use crate::ring::{GradedRing, Ideal, Multidegree, Polynomial};

/// The seven degrees on which `I` and its saturation are compared.
pub const SHARPNESS_DEGREES: [[i32; 3]; 7] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wildness {
    Wild,
    NotWild,
    Inconclusive,
}

impl Wildness {
    pub fn label(self) -> &'static str {
        match self {
            Wildness::Wild => "wild",
            Wildness::NotWild => "not wild",
            Wildness::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct WildnessReport {
    pub concise: Vec<bool>,
    pub m: u64,
    pub hf_one: u64,
    pub sharp: bool,
    /// `(degree, dim I_s, dim K_s)` over the seven degrees, empty when `HF(S/I, 𝟙) ≠ m`.
    pub comparisons: Vec<(Multidegree, u64, u64)>,
    pub verdict: Wildness,
    pub i: Ideal,
    pub k: Ideal,
    /// `VSP̲(F, m) = {K}` when the tensor is not wild.
    pub vspbar: Option<VspBarReport>,
}

/// `I = (Ann(F)_{110}) + (Ann(F)_{101}) + (Ann(F)_{011})`.
pub fn mixed_annihilator_ideal(f: &DualForm) -> Result<Ideal> {
    let mut gens = Vec::new();
    for d in [[1, 1, 0], [1, 0, 1], [0, 1, 1]] {
        gens.extend(apolarity::catalecticant(f, &Multidegree(d.to_vec())).kernel());
    }
    Ideal::new(f.ring_arc(), gens)
}

/// Decides wildness of a concise tensor whose border rank `m` is supplied by the caller.
pub fn tensor_wildness(f: &DualForm, m: u64) -> Result<WildnessReport> {
    let ring = f.ring_arc();
    if ring.rank() != 3 || f.degree().0 != [1, 1, 1] {
        return Err(Error::Invalid("expected an order-3 tensor".into()));
    }
    let concise = apolarity::is_concise(f);
    if let Some(b) = concise.iter().position(|c| !c) {
        return Err(Error::Invalid(format!("tensor is not concise in block {}", ring.blocks()[b].name)));
    }
    let i = mixed_annihilator_ideal(f)?;
    let k = groebner::saturate_irrelevant(&i);
    let one = ring.one_degree();
    let gi = groebner::grevlex_basis(&i);
    let gk = groebner::grevlex_basis(&k);
    let hf_one = hilbert::hilbert_function_gb(&gi, &one);
    let sharp = hf_one == m;
    let mut comparisons = Vec::new();
    let mut verdict = Wildness::Wild;
    let mut vspbar = None;
    if sharp {
        for s in SHARPNESS_DEGREES {
            let v = Multidegree(s.to_vec());
            let dim = ring.graded_piece_dimension(&v);
            comparisons.push((v.clone(), dim - hilbert::hilbert_function_gb(&gi, &v), dim - hilbert::hilbert_function_gb(&gk, &v)));
        }
        if comparisons.iter().all(|(_, a, b)| a == b) {
            let top = Multidegree(vec![3; 3]);
            let generic = hilbert::has_generic_hf_gb(&gk, m, &ring.zero_degree(), &top);
            let apolar = apolarity::is_apolar(&k, f);
            let certs = vec![
                Certificate::new("HF(S/I, 1) = m", true, format!("{}", hf_one)),
                Certificate::new("I and K agree on the seven degrees", true, ""),
                Certificate::new(
                    "K generic Hilbert function",
                    generic.is_ok(),
                    match &generic {
                        Ok(()) => format!("h_{} on degrees up to {}", m, top),
                        Err(v) => format!("differs at {}", v),
                    },
                ),
                Certificate::new("K apolar", apolar, k.display()),
            ];
            if generic.is_ok() && apolar {
                verdict = Wildness::NotWild;
                vspbar = Some(VspBarReport {
                    input: f.display(),
                    r: Some(m),
                    shape: Shape::Point { ideal: k.clone(), criterion: "nonwild concise minimal border rank: VSP̲(F, m) = {K}".into() },
                    certificates: certs,
                });
            } else {
                verdict = Wildness::Inconclusive;
            }
        }
    }
    Ok(WildnessReport { concise, m, hf_one, sharp, comparisons, verdict, i, k, vspbar })
}

pub const WILD_TENSOR: &str = "A2*B1*C2 + A2*B2*C1 + A1*B1*C3 + A1*B3*C1 + A3*B1*C1";
pub const WILD_ORDER: &str = "lex:c3<c2<c1<b3<b2<b1<a3<a2<a1";
pub const WILD_WEIGHTS: [i64; 9] = [1, 2, 3, 1, 2, 3, 1, 2, 3];

const WILD_QUADRICS: &str = "c3^2, c2*c3, c2^2, b3*c3, b3*c2, b2*c3, b2*c2, b1*c3 - b3*c1, b1*c2 - b2*c1, b3^2, b2*b3, b2^2, \
     a3*c3, a3*c2, a3*b3, a3*b2, a2*c3, a2*c2 - a3*c1, a2*b3, a2*b2 - a3*b1, a1*c3 - a3*c1, \
     a1*c2, a1*b3 - a3*b1, a1*b2, a3^2, a2*a3, a1*a3";

const EXTRA_QUADRICS: &str = "a1*a3, a2*a3, a3^2, b2^2, b2*b3, b3^2, c2^2, c2*c3, c3^2";

/// Coefficient patterns `(x, y, z, w)` for the cubic `x·a1³ + y·a1²a2 + z·a1a2² + w·a2³`.
pub const CUBIC_PATTERNS: [[i64; 4]; 4] = [[1, 2, 3, 5], [0, 2, 3, 5], [0, 0, 3, 5], [0, 0, 0, 5]];

#[derive(Clone, Debug)]
pub struct WildReplay {
    pub form: DualForm,
    pub wildness: WildnessReport,
    pub quadrics: Vec<Polynomial>,
    pub i_prime: Ideal,
    /// One entry per pattern: whether the 28 elements are a Gröbner basis.
    pub groebner_checks: Vec<bool>,
    /// `(ideal, hom_degree0_dim, generic HF on the box)` for `I' + (cubic monomial)`.
    pub distinguished: Vec<(Ideal, usize, bool)>,
    /// Same data for the monomial initial ideals.
    pub monomial: Vec<(Ideal, usize, bool)>,
    pub certificates: Vec<Certificate>,
}

impl WildReplay {
    pub fn certified(&self) -> bool {
        self.certificates.iter().all(|c| c.holds)
    }
}

fn cubic(ring: &GradedRing, c: [i64; 4]) -> Result<Polynomial> {
    let text = format!("{}*a1^3 + {}*a1^2*a2 + {}*a1*a2^2 + {}*a2^3", c[0], c[1], c[2], c[3]);
    notation::parse_polynomial(&text, ring)
}

fn box_check(i: &Ideal, r: u64) -> bool {
    let ring = i.ring();
    hilbert::has_generic_hf(i, r, &ring.zero_degree(), &Multidegree(vec![3; 3])).is_ok()
}

/// Replays the certificates that make `VSP̲(F, 3)` a `ℙ³` for the wild tensor.
pub fn wild_tensor_replay() -> Result<WildReplay> {
    let ring = Arc::new(GradedRing::from_block_sizes(&[3, 3, 3])?);
    let form = DualForm::new(&ring, notation::parse_dual_polynomial(WILD_TENSOR, &ring)?)?;
    let wildness = tensor_wildness(&form, 3)?;
    let ord = notation::parse_order(WILD_ORDER, &ring)?;
    let quadrics: Vec<Polynomial> =
        notation::split_list(WILD_QUADRICS).iter().map(|t| notation::parse_polynomial(t, &ring)).collect::<Result<_>>()?;
    let extra = notation::parse_ideal(EXTRA_QUADRICS, &ring)?;
    let i_prime = wildness.i.sum(&extra);
    let quad_ideal = Ideal::new(&ring, quadrics.clone())?;
    let mut certs = vec![
        Certificate::new("wild", wildness.verdict == Wildness::Wild, format!("HF(S/I, 1) = {}", wildness.hf_one)),
        Certificate::new("I' is generated by the 27 quadrics", groebner::ideals_equal(&i_prime, &quad_ideal), i_prime.display()),
        Certificate::new(
            "HF(S/I', (3,0,0)) = 4",
            hilbert::hilbert_function(&i_prime, &Multidegree(vec![3, 0, 0])) == 4,
            "",
        ),
    ];
    let leads: Vec<_> = quadrics.iter().map(|q| groebner::leading_monomial(q, &ord).expect("nonzero")).collect();
    let homogeneous = quadrics.iter().all(|q| &groebner::initial_form(q, &WILD_WEIGHTS) == q);
    certs.push(Certificate::new("quadrics are w-homogeneous", homogeneous, format!("w = {:?}", WILD_WEIGHTS)));
    let mut groebner_checks = Vec::new();
    let mut distinguished = Vec::new();
    let mut monomial = Vec::new();
    for (k, pat) in CUBIC_PATTERNS.iter().enumerate() {
        let c = cubic(&ring, *pat)?;
        let mut set = quadrics.clone();
        set.push(c.clone());
        let is_gb = groebner::is_groebner_basis(&set, &ord);
        groebner_checks.push(is_gb);
        certs.push(Certificate::new(&format!("28-element set is a Gröbner basis, pattern {:?}", pat), is_gb, ""));
        let member = Ideal::new(&ring, set)?;
        certs.push(Certificate::new(&format!("I' + (C) apolar, pattern {:?}", pat), apolarity::is_apolar(&member, &form), ""));
        let lead = groebner::leading_monomial(&c, &ord).expect("nonzero cubic");
        let mut mono = leads.clone();
        mono.push(lead);
        let mono_ideal = Ideal::monomial(&ring, &mono);
        certs.push(Certificate::new(
            &format!("initial ideal {} matches pattern", k),
            groebner::ideals_equal(&groebner::initial_ideal(&member, &ord), &mono_ideal),
            mono_ideal.display(),
        ));
        let mono_hom = homological::hom_degree0_dim(&mono_ideal);
        let mono_box = box_check(&mono_ideal, 3);
        certs.push(Certificate::new(&format!("monomial degeneration {} generic Hilbert function", k), mono_box, "box ≤ (3,3,3)"));
        monomial.push((mono_ideal, mono_hom, mono_box));
        let point = i_prime.with_gens(&[Polynomial::monomial(lead)])?;
        let hom = homological::hom_degree0_dim(&point);
        let gen = box_check(&point, 3);
        certs.push(Certificate::new(&format!("distinguished point {} tangent dimension 18", k), hom == 18, format!("{}", hom)));
        certs.push(Certificate::new(&format!("distinguished point {} generic Hilbert function", k), gen, "box ≤ (3,3,3)"));
        distinguished.push((point, hom, gen));
    }
    Ok(WildReplay { form, wildness, quadrics, i_prime, groebner_checks, distinguished, monomial, certificates: certs })
}

/// The diagonal tensor `Σ a_i⊗b_i⊗c_i` on `ℂ^k⊗ℂ^k⊗ℂ^k`.
pub fn diagonal_tensor(k: usize) -> Result<DualForm> {
    let ring = Arc::new(GradedRing::from_block_sizes(&[k, k, k])?);
    let text: Vec<String> = (1..=k).map(|i| format!("A{0}*B{0}*C{0}", i)).collect();
    DualForm::new(&ring, notation::parse_dual_polynomial(&text.join(" + "), &ring)?)
}

pub fn wildness_summary(r: &WildnessReport) -> String {
    let mut s = format!("{}: HF(S/I, 1) = {} (m = {})", r.verdict.label(), r.hf_one, r.m);
    for (v, a, b) in &r.comparisons {
        s.push_str(&format!("; {}: {} vs {}", v, a, b));
    }
    s
}
