use std::sync::Arc;

use borderline_core::apolarity::DualForm;
use borderline_core::border::monomial::{
    degree_ab_monomial_subspaces, monomial_border_rank, monomial_border_rank_by_search, monomial_border_rank_with, monomial_vps_report,
    VpsShape,
};
use borderline_core::border::vsp::{ci_vspbar, plateau_identifiability, PlateauVerdict};
use borderline_core::border::wild::{diagonal_tensor, tensor_wildness, wild_tensor_replay, Wildness};
use borderline_core::groebner;
use borderline_core::notation::{parse_dual_polynomial, parse_ideal};
use borderline_core::GradedRing;

fn form(n: usize, s: &str) -> DualForm {
    let r = Arc::new(GradedRing::projective(n));
    let p = parse_dual_polynomial(s, &r).unwrap();
    DualForm::new(&r, p).unwrap()
}

#[test]
fn diagonal_tensor_is_tame() {
    let f = diagonal_tensor(3).unwrap();
    let rep = tensor_wildness(&f, 3).unwrap();
    assert_eq!(rep.verdict, Wildness::NotWild);
    let ring = f.ring_arc();
    let pts = ["a2, a3, b2, b3, c2, c3", "a1, a3, b1, b3, c1, c3", "a1, a2, b1, b2, c1, c2"];
    let mut inter = parse_ideal(pts[0], ring).unwrap();
    for p in &pts[1..] {
        inter = groebner::intersect(&inter, &parse_ideal(p, ring).unwrap());
    }
    assert!(groebner::ideals_equal(&rep.k, &inter));
    let vsp = rep.vspbar.unwrap();
    assert_eq!(vsp.verdict(), "single point");
    assert!(vsp.certified());
}

#[test]
fn wild_replay() {
    let rep = wild_tensor_replay().unwrap();
    for c in &rep.certificates {
        assert!(c.holds, "{:?}", c);
    }
    assert_eq!(rep.groebner_checks, vec![true; 4]);
}

#[test]
fn monomial_border_ranks() {
    for (s, r) in [("x0*x1*x2", 4), ("x0*x1^2*x2^3", 6), ("x0^2*x1^2*x2^2", 9), ("x2^3*x0*x1^2", 6)] {
        let rep = monomial_border_rank(&form(2, s)).unwrap();
        assert_eq!(rep.value, r, "{}", s);
        assert_eq!(rep.search_empty, Some(true), "{}", s);
        assert!(rep.certificates.iter().all(|c| c.holds), "{:?}", rep.certificates);
    }
}

#[test]
fn vps_regimes() {
    let cases = [
        ((1, 2, 4), VpsShape::Unique),
        ((1, 3, 3), VpsShape::Pencil),
        ((2, 3, 4), VpsShape::Unique),
        ((2, 2, 2), VpsShape::Net),
        ((1, 1, 1), VpsShape::Net),
        ((1, 2, 2), VpsShape::Pencil),
        ((2, 3, 3), VpsShape::Pencil),
        ((2, 3, 3), VpsShape::Pencil),
    ];
    for ((a, b, c), shape) in cases {
        let rep = monomial_vps_report(a, b, c).unwrap();
        assert_eq!(rep.shape, shape, "{:?}", (a, b, c));
        assert!(rep.certified(), "{:?}: {:?}", (a, b, c), rep.certificates);
    }
}

#[test]
fn degree_ab_classification_of_monomial_subspaces() {
    for (a, b, c) in [(1, 2, 4), (1, 3, 3), (2, 3, 4), (2, 2, 2), (1, 1, 1), (1, 2, 2)] {
        let rep = monomial_vps_report(a, b, c).unwrap();
        let found = degree_ab_monomial_subspaces(a, b, c).unwrap();
        assert!(!found.is_empty());
        for i in found {
            let sat = groebner::saturate_irrelevant(&i);
            assert!(rep.members.iter().any(|m| groebner::ideals_equal(m, &sat)), "{:?}: {}", (a, b, c), sat.display());
        }
    }
}

#[test]
fn complete_intersections() {
    for a in 1..=4u32 {
        for b in [a + 1, a + 3] {
            let f = form(2, &format!("x0*x1^{}*x2^{}", a, b));
            let j = parse_ideal(&format!("y0^2, y1^{}", a + 1), f.ring_arc()).unwrap();
            let rep = ci_vspbar(&f, &j).unwrap();
            assert_eq!(rep.r, Some(2 * (a as u64 + 1)));
            assert!(rep.certified(), "{} {}: {:?}", a, b, rep.certificates);
            if a <= 2 {
                assert!(rep.is_point());
            } else {
                assert_eq!(rep.projective_dim(), Some(2 * (a as u64 - 2)));
            }
        }
    }
}

#[test]
fn plateaus() {
    match plateau_identifiability(&form(2, "x0^3 + x1^3 + x2^3"), 3).unwrap() {
        PlateauVerdict::Identifiable { ideal, .. } => {
            let want = parse_ideal("y0*y1, y0*y2, y1*y2", ideal.ring_arc()).unwrap();
            assert!(groebner::ideals_equal(&ideal, &want));
        }
        other => panic!("{:?}", other),
    }
    assert!(matches!(plateau_identifiability(&form(2, "x0*x1^2*x2^3"), 6).unwrap(), PlateauVerdict::NoPlateau));
    let v = plateau_identifiability(&form(1, "x0^5 + x1^5 + (x0 + 2*x1)^5"), 3).unwrap();
    assert!(matches!(v, PlateauVerdict::Identifiable { .. }), "{:?}", v);
}

#[test]
fn omega_ranks() {
    use borderline_core::border::omega::{generic_omega_rank, omega_rank, OmegaOutcome, OMEGA_TRIPLES};
    for (a, e, t) in OMEGA_TRIPLES {
        for seed in [1, 2, 3] {
            assert_eq!(generic_omega_rank(a, e, t, seed), OmegaOutcome::Holds, "{:?}", (a, e, t));
        }
    }
    let r = Arc::new(GradedRing::projective(2));
    let degenerate = parse_dual_polynomial("x0^2*x1^3", &r).unwrap();
    assert!(omega_rank(&degenerate, 5, 1) < 3);
}

#[test]
fn monomial_formula_matches_search() {
    for a in 1..=2u32 {
        for b in a..=2 {
            for c in b..=4 {
                let f = form(2, &format!("x0^{a}*x1^{b}*x2^{c}"));
                let rep = monomial_border_rank_with(&f, false).unwrap();
                assert!(rep.certificates.iter().all(|c| c.holds));
                assert_eq!(rep.value, monomial_border_rank_by_search(&f).unwrap(), "({a}, {b}, {c})");
            }
        }
    }
}
