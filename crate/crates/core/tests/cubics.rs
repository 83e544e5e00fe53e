use std::sync::Arc;

use borderline_core::apolarity::DualForm;
use borderline_core::border::vsp::{cw_cubic_vspbar, sylvester_binary, ternary_cubic_vspbar, CwKind};
use borderline_core::notation::parse_dual_polynomial;
use borderline_core::GradedRing;

fn form(n: usize, s: &str) -> DualForm {
    let r = Arc::new(GradedRing::projective(n));
    let p = parse_dual_polynomial(s, &r).unwrap();
    DualForm::new(&r, p).unwrap()
}

#[test]
fn table_of_plane_cubics() {
    let rows: &[(&str, u64, &str)] = &[
        ("x0^3", 1, "single point"),
        ("x0*x1*(x0+x1)", 2, "single point"),
        ("x0^2*x1", 2, "single point"),
        ("x1^2*x2 - x0^3 - x2^3", 3, "single point"),
        ("x1^2*x2 - x0^3", 3, "single point"),
        ("x1*(x0^2 + x1*x2)", 3, "single point"),
        ("x1^2*x2 - x0^3 - x0*x2^2", 4, "P^2"),
        ("x0*x1*x2", 4, "P^2"),
        ("x0*(x0^2 + x1*x2)", 4, "P^2"),
        ("x1^2*x2 - x0^3 - x0*x2^2 - x2^3", 4, "P^2"),
        ("x1^2*x2 - x0^3 - x0^2*x2", 4, "P^2"),
    ];
    for (s, r, shape) in rows {
        let rep = ternary_cubic_vspbar(&form(2, s)).unwrap();
        assert_eq!(rep.r, Some(*r), "{}: {:?}", s, rep);
        assert_eq!(rep.verdict(), *shape, "{}: {:?}", s, rep.certificates);
        assert!(rep.certified(), "{}: {:?}", s, rep.certificates);
    }
}

#[test]
fn binary_forms() {
    let rep = sylvester_binary(&form(1, "x0^5 + x1^5 + (x0+x1)^5")).unwrap();
    assert_eq!((rep.r, rep.verdict().as_str()), (Some(3), "single point"));
    let rep = sylvester_binary(&form(1, "x0^4 + x1^4 + (x0+x1)^4")).unwrap();
    assert_eq!((rep.r, rep.verdict().as_str()), (Some(3), "P^1"));
    assert!(rep.certified());
    let rep = sylvester_binary(&form(1, "x0^3*x1")).unwrap();
    assert_eq!((rep.r, rep.verdict().as_str()), (Some(2), "single point"));
}

#[test]
fn reducible_cubics() {
    for n in 2..=4 {
        let rep = cw_cubic_vspbar(CwKind::C, n).unwrap();
        assert_eq!(rep.r, Some(n as u64 + 1));
        assert!(rep.is_point() && rep.certified(), "{:?}", rep.certificates);
        for kind in [CwKind::A, CwKind::B] {
            let rep = cw_cubic_vspbar(kind, n).unwrap();
            assert_eq!(rep.r, Some(n as u64 + 2), "{:?} {}", kind, n);
            let want = if n == 2 { "P^2" } else { "single point" };
            assert_eq!(rep.verdict(), want, "{:?} {} {:?}", kind, n, rep.certificates);
            assert!(rep.certified());
        }
    }
}
