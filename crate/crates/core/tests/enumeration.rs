use std::collections::BTreeSet;
use std::sync::Arc;

use borderline_core::apolarity::{self, DualForm};
use borderline_core::border::enumerate::{canonical_key, default_cap, hf_row};
use borderline_core::border::{enumerate_monomial_apolar_ideals, slip_ext_filter, EnumerationConfig};
use borderline_core::groebner;
use borderline_core::hilbert::{has_generic_hf, stable_value};
use borderline_core::homological::hom_degree0_dim;
use borderline_core::notation::{parse_dual_polynomial, parse_ideal};
use borderline_core::{GradedRing, Ideal, Multidegree, Polynomial};

fn form(ring: &Arc<GradedRing>, text: &str) -> DualForm {
    DualForm::new(ring, parse_dual_polynomial(text, ring).unwrap()).unwrap()
}

fn keys(ideals: &[Ideal]) -> BTreeSet<Vec<Polynomial>> {
    ideals.iter().map(canonical_key).collect()
}

#[test]
fn squares_of_the_triple_product() {
    let ring = Arc::new(GradedRing::projective(2));
    let f = form(&ring, "x0*x1*x2");
    let cfg = EnumerationConfig::new(Ideal::zero(&ring), 4, Some(f.clone())).unwrap();
    let out = enumerate_monomial_apolar_ideals(&cfg).unwrap();
    let expected: Vec<Ideal> = ["y0^2, y1^2", "y0^2, y2^2", "y1^2, y2^2"]
        .iter()
        .map(|t| parse_ideal(t, &ring).unwrap())
        .collect();
    assert_eq!(keys(&out), keys(&expected));
    for i in &out {
        assert!(apolarity::is_apolar(i, &f));
    }
}

#[test]
fn single_point_on_the_line() {
    let ring = Arc::new(GradedRing::projective(1));
    let cfg = EnumerationConfig::new(Ideal::zero(&ring), 1, None).unwrap();
    let out = enumerate_monomial_apolar_ideals(&cfg).unwrap();
    let expected = vec![parse_ideal("y0", &ring).unwrap(), parse_ideal("y1", &ring).unwrap()];
    assert_eq!(keys(&out), keys(&expected));
}

#[test]
fn outputs_have_generic_hilbert_function() {
    let ring = Arc::new(GradedRing::projective(2));
    for (text, r) in [("x0^2*x1^2", 4u64), ("x0*x1^2*x2^3", 6), ("x0^3*x1*x2", 5)] {
        let f = form(&ring, text);
        let base = apolarity::annihilator_up_to(&f, 2).unwrap();
        let cfg = EnumerationConfig::new(base.clone(), r, Some(f.clone())).unwrap();
        let cap = cfg.cap as i32;
        for i in enumerate_monomial_apolar_ideals(&cfg).unwrap() {
            assert!(groebner::is_subset(&base, &i));
            assert!(apolarity::is_apolar(&i, &f));
            assert_eq!(stable_value(&i).unwrap(), r);
            assert!(has_generic_hf(&i, r, &Multidegree(vec![0]), &Multidegree(vec![cap + 2])).is_ok(), "{}", i.display());
        }
    }
}

#[test]
fn output_does_not_depend_on_variable_order() {
    let ring = Arc::new(GradedRing::projective(2));
    let perm = [2usize, 0, 1];
    let images: Vec<Polynomial> = perm.iter().map(|&k| Polynomial::var(k)).collect();
    let f = form(&ring, "x0*x1^2*x2^3 + x0^3*x1^3");
    let g = DualForm::new(&ring, f.poly().substitute(&images)).unwrap();
    let run = |f: &DualForm| {
        let cfg = EnumerationConfig::new(apolarity::annihilator_up_to(f, 3).unwrap(), 6, Some(f.clone())).unwrap();
        enumerate_monomial_apolar_ideals(&cfg).unwrap()
    };
    let moved: Vec<Ideal> = run(&f)
        .iter()
        .map(|i| Ideal::new(&ring, i.gens().iter().map(|p| p.substitute(&images)).collect()).unwrap())
        .collect();
    assert_eq!(keys(&moved), keys(&run(&g)));
}

#[test]
fn quintic_pipeline() {
    let ring = Arc::new(GradedRing::projective(3));
    let f = form(&ring, "x0^3*x1*x2 + x0*x1^3*x3 + x2^3*x3^2");
    let j0 = apolarity::annihilator_up_to(&f, 3).unwrap();
    assert_eq!(hf_row(&j0, 8), vec![1, 4, 10, 10, 10, 10, 10, 11, 12]);
    let cfg = EnumerationConfig::new(j0.clone(), 10, None).unwrap();
    assert_eq!(cfg.cap, default_cap(&j0, 10));
    let out = enumerate_monomial_apolar_ideals(&cfg).unwrap();
    assert_eq!(out.len(), 81);
    let (keep, drop) = slip_ext_filter(&out).unwrap();
    assert_eq!(drop.len(), 73);
    let expected: Vec<Ideal> = (0..=7u32)
        .map(|a| {
            let m = parse_ideal(&format!("y0^{}*y1^{}", a, 7 - a), &ring).unwrap();
            j0.sum(&m)
        })
        .collect();
    assert_eq!(keys(&keep), keys(&expected));
    for i in &keep {
        assert_eq!(hom_degree0_dim(i), 30);
    }
}
