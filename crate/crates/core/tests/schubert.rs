use std::sync::Arc;

use borderline_core::groebner::{self, truncate};
use borderline_core::homological::{ext1_degree0_dim, hom_degree0_dim};
use borderline_core::notation::{parse_ideal, parse_order};
use borderline_core::{GradedRing, Multidegree};

fn p2() -> Arc<GradedRing> {
    Arc::new(GradedRing::projective(2))
}

#[test]
fn cell_ideal_has_no_ext() {
    let r = p2();
    let j = parse_ideal("y0^2*y1, y0^2*y2, y1*y2^5, y0*y2^5", &r).unwrap();
    let k = parse_ideal("y0^2*y1^2, y0^2*y1*y2, y0^2*y2^2", &r).unwrap().sum(&truncate(&j, &Multidegree(vec![5])));
    assert!(groebner::ideals_equal(&groebner::saturate_irrelevant(&k), &j));
    assert_eq!(ext1_degree0_dim(&j, &k).unwrap(), 0);
}

#[test]
fn tangent_space_of_khat() {
    let r = p2();
    let j = parse_ideal("y0^2*y1, y0^2*y2, y1*y2^5, y0*y2^5", &r).unwrap();
    let khat = parse_ideal("y0^2*y1^2, y0^2*y2^2, y0^3*y2", &r).unwrap().sum(&truncate(&j, &Multidegree(vec![5])));
    assert_eq!(hom_degree0_dim(&khat), 25);
}

#[test]
fn initial_ideals_of_the_reducible_example() {
    let r = p2();
    let lex = parse_order("lex:y0<y1<y2", &r).unwrap();
    let l = parse_ideal("y0*y2^2 + y1^3, y0^2*y2, y0^2*y1", &r).unwrap();
    let k = parse_ideal("y0*y2^2, y0^2*y2, y0^2*y1, y0*y1^3, y1^6", &r).unwrap();
    assert!(groebner::ideals_equal(&groebner::initial_ideal(&l, &lex), &k));
    let lp = parse_ideal("y0^2*y2 + y0*y1^2, y0*y1*y2 + y1^3, y0*y2^2 + y1^2*y2 + y0^2*y1", &r).unwrap();
    let kp = parse_ideal("y0*y2^2, y0*y1*y2, y0^2*y2, y0^2*y1^2, y0^3*y1, y0*y1^4, y1^6", &r).unwrap();
    assert!(groebner::ideals_equal(&groebner::initial_ideal(&lp, &lex), &kp));
    assert!(groebner::is_saturated(&l));
    assert!(groebner::is_saturated(&lp));
}

#[test]
fn khat_degenerates_from_ihat() {
    let r = p2();
    let ihat = parse_ideal("y0^2*y1^2 + y0*y2^3, y0^3*y2, y0^2*y2^2, y0^4*y1, y1*y2^5, y0*y2^5", &r).unwrap();
    let j = parse_ideal("y0^2*y1, y0^2*y2, y1*y2^5, y0*y2^5", &r).unwrap();
    let khat = parse_ideal("y0^2*y1^2, y0^2*y2^2, y0^3*y2", &r).unwrap().sum(&truncate(&j, &Multidegree(vec![5])));
    let ord = parse_order("grevlex:y2<y1<y0", &r).unwrap();
    assert!(groebner::ideals_equal(&groebner::initial_ideal(&ihat, &ord), &khat));
}
