use std::sync::Arc;

use borderline_core::apolarity::DualForm;
use borderline_core::border::ternary::{admissible_hf_rows, even_ternary_check, form_gcd, has_linear_factor, LinearFactor};
use borderline_core::hilbert::macaulay_upper;
use borderline_core::notation::{parse_dual_polynomial, parse_polynomial};
use borderline_core::GradedRing;

fn p2() -> Arc<GradedRing> {
    Arc::new(GradedRing::projective(2))
}

#[test]
fn gcd_of_forms() {
    let r = p2();
    let f: Vec<_> = ["y0*y1*y2 + y0^2*y2", "y0*y2^2", "y0^2*y2 - y0*y1^2"].iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
    let g = form_gcd(&r, &f).unwrap();
    assert_eq!(g, parse_polynomial("y0", &r).unwrap());
    assert_eq!(has_linear_factor(&g), LinearFactor::Present);
    let q = parse_polynomial("y0^2 + y1^2 + y2^2", &r).unwrap();
    assert_eq!(has_linear_factor(&q), LinearFactor::Absent);
    let q = parse_polynomial("y0^2 - y1^2", &r).unwrap();
    assert_eq!(has_linear_factor(&q), LinearFactor::Present);
    let h: Vec<_> = ["y0^2*y1 - y1^3", "y0^2*y2 - y1^2*y2"].iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
    assert_eq!(form_gcd(&r, &h).unwrap(), parse_polynomial("y0^2 - y1^2", &r).unwrap());
}

#[test]
fn nondegenerate_even_forms_have_no_common_linear_factor() {
    let r = p2();
    let cases = [
        (3, "x0^4 + x1^4 + x2^4 + (x0 + x1 + x2)^4 + (x0 - 2*x1 + 3*x2)^4 + (2*x0 + x1 - x2)^4"),
        (4, "x0^6 + x1^6 + x2^6 + (x0+x1+x2)^6 + (x0-x1+2*x2)^6 + (x0+2*x1-x2)^6 + (3*x0+x1+x2)^6 + (x0-3*x1+x2)^6 + (x0+x1-3*x2)^6 + (2*x0-x1+5*x2)^6"),
    ];
    for (p, s) in cases {
        let f = DualForm::new(&r, parse_dual_polynomial(s, &r).unwrap()).unwrap();
        let c = even_ternary_check(&f, p).unwrap();
        assert!(c.nondegenerate);
        assert_eq!(c.ann_p_dim, 2 * p as usize + 1);
        assert_eq!(c.linear_factor, LinearFactor::Absent, "{:?}", c.gcd);
    }
}

#[test]
fn macaulay_strata_respect_the_bound() {
    let rows = admissible_hf_rows(&[1, 3], 4, 6);
    assert!(rows.contains(&vec![1, 3, 6, 6, 6]));
    assert!(rows.contains(&vec![1, 3, 4, 5, 6]));
    for row in &rows {
        for k in 2..row.len() {
            assert!(row[k] <= macaulay_upper(row[k - 1], k as u32 - 1) && row[k] <= 6);
        }
    }
    assert!(!rows.contains(&vec![1, 3, 1, 3, 0]));
}
