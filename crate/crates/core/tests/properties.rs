use std::sync::Arc;

use proptest::prelude::*;

use borderline_core::apolarity::{self, apply, DualForm};
use borderline_core::groebner;
use borderline_core::hilbert::{hilbert_function, hilbert_function_linear};
use borderline_core::homological::{ext1_ci_formula, ext1_degree0_dim, hom_degree0_dim};
use borderline_core::rational::Q;
use borderline_core::ring::{monomials_of_degree, Monomial, Polynomial};
use borderline_core::{GradedRing, Ideal, MonomialOrder, Multidegree};

fn p2() -> Arc<GradedRing> {
    Arc::new(GradedRing::projective(2))
}

fn form_strategy(nvars: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let monos = monomials_of_degree(&(0..nvars).collect::<Vec<_>>(), deg);
    let k = monos.len();
    prop::collection::vec((0..k, -4i64..=4), 1..=max_terms)
        .prop_map(move |ts| Polynomial::from_terms(ts.into_iter().map(|(i, c)| (monos[i], Q::from_int(c)))))
}

fn small_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec((1u32..=3).prop_flat_map(|d| form_strategy(3, d, 3)), 1..=3)
}

fn ideal(gens: Vec<Polynomial>) -> Ideal {
    let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    Ideal::new(&p2(), gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn multidegree_is_additive(a in prop::collection::vec(0u32..3, 6), b in prop::collection::vec(0u32..3, 6)) {
        let ring = GradedRing::from_block_sizes(&[2, 3, 1]).unwrap();
        let (ma, mb) = (Monomial::from_exps(&a), Monomial::from_exps(&b));
        prop_assert_eq!(ring.multidegree(&ma.mul(&mb)), &ring.multidegree(&ma) + &ring.multidegree(&mb));
    }

    #[test]
    fn basis_size_matches_dimension(v in prop::collection::vec(0i32..=4, 1..=3), sizes in prop::collection::vec(1usize..=3, 3)) {
        let ring = GradedRing::from_block_sizes(&sizes[..v.len()]).unwrap();
        let v = Multidegree(v);
        prop_assert_eq!(ring.monomial_basis(&v).len() as u64, ring.graded_piece_dimension(&v));
    }

    #[test]
    fn distributivity(p in form_strategy(3, 2, 4), q in form_strategy(3, 2, 4), r in form_strategy(3, 1, 3)) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
    }

    #[test]
    fn saturation_contains_and_is_idempotent(gens in small_ideal()) {
        let i = ideal(gens);
        let s = groebner::saturate_irrelevant(&i);
        prop_assert!(groebner::is_subset(&i, &s));
        prop_assert!(groebner::ideals_equal(&s, &groebner::saturate_irrelevant(&s)));
    }

    #[test]
    fn initial_ideal_has_the_same_hilbert_function(gens in small_ideal()) {
        let i = ideal(gens);
        let lex = MonomialOrder::lex(3);
        let init = groebner::initial_ideal(&i, &lex);
        for d in 0..=5 {
            let v = Multidegree(vec![d]);
            let oracle = hilbert_function_linear(&i, &v);
            prop_assert_eq!(hilbert_function(&i, &v), oracle);
            prop_assert_eq!(hilbert_function(&init, &v), oracle);
        }
    }

    #[test]
    fn normal_form_is_idempotent(gens in small_ideal(), p in form_strategy(3, 3, 5)) {
        let gb = groebner::grevlex_basis(&ideal(gens));
        let nf = groebner::normal_form(&p, &gb);
        prop_assert_eq!(groebner::normal_form(&nf, &gb), nf);
    }

    #[test]
    fn colon_and_intersection(a in small_ideal(), b in small_ideal()) {
        let (i, j) = (ideal(a), ideal(b));
        let c = groebner::colon_ideal(&i, &j).unwrap();
        prop_assert!(groebner::is_subset(&c.product(&j), &i));
        let m = groebner::intersect(&i, &j);
        prop_assert!(groebner::is_subset(&m, &i) && groebner::is_subset(&m, &j));
    }

    #[test]
    fn action_is_bilinear_and_multiplicative(
        psi in form_strategy(3, 1, 3), phi in form_strategy(3, 1, 3), chi in form_strategy(3, 2, 3), f in form_strategy(3, 4, 6)
    ) {
        prop_assert_eq!(apply(&(&psi + &phi), &f), &apply(&psi, &f) + &apply(&phi, &f));
        prop_assert_eq!(apply(&(&psi * &chi), &f), apply(&psi, &apply(&chi, &f)));
    }

    #[test]
    fn annihilator_and_gorenstein_symmetry(f in (2u32..=4).prop_flat_map(|d| form_strategy(3, d, 5))) {
        prop_assume!(!f.is_zero());
        let ring = p2();
        let form = DualForm::new(&ring, f.clone()).unwrap();
        let ann = apolarity::annihilator(&form).unwrap();
        for g in ann.gens() {
            prop_assert!(apply(g, &f).is_zero());
        }
        let d = form.degree().0[0];
        for k in 0..=d {
            prop_assert_eq!(hilbert_function(&ann, &Multidegree(vec![k])), hilbert_function(&ann, &Multidegree(vec![d - k])));
        }
    }

    #[test]
    fn apolarity_tests_agree(gens in prop::collection::vec(form_strategy(3, 2, 2), 1..=3), f in form_strategy(3, 3, 4)) {
        prop_assume!(!f.is_zero());
        let ring = p2();
        let form = DualForm::new(&ring, f).unwrap();
        let i = Ideal::new(&ring, gens.into_iter().filter(|g| !g.is_zero()).collect()).unwrap();
        prop_assert_eq!(apolarity::is_apolar(&i, &form), apolarity::is_apolar_in_degree(&i, &form));
    }

    #[test]
    fn hom_is_invariant_under_permutation(gens in prop::collection::vec(form_strategy(3, 2, 2), 2..=3), perm in Just(vec![2usize, 0, 1])) {
        let i = ideal(gens);
        prop_assume!(!i.is_zero());
        let images: Vec<Polynomial> = perm.iter().map(|&k| Polynomial::var(k)).collect();
        let j = ideal(i.gens().iter().map(|g| g.substitute(&images)).collect());
        prop_assert_eq!(hom_degree0_dim(&i), hom_degree0_dim(&j));
    }
}

#[test]
fn ext_formula_agrees_on_random_complete_intersections() {
    use rand::{Rng, SeedableRng};
    let ring = p2();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 20 {
        let (d1, d2) = (rng.gen_range(1..=3u32), rng.gen_range(1..=4u32));
        let d = (d1 + d2) as i32 - 3;
        if d < 1 {
            continue;
        }
        let mut rand_form = |deg: u32| {
            Polynomial::from_terms(monomials_of_degree(&[0, 1, 2], deg).into_iter().map(|m| (m, Q::from_int(rng.gen_range(-3..=3)))))
        };
        let (g1, g2) = (rand_form(d1), rand_form(d2));
        if g1.is_zero() || g2.is_zero() {
            continue;
        }
        let j = Ideal::new(&ring, vec![g1, g2]).unwrap();
        if !borderline_core::homological::is_complete_intersection(&j) {
            continue;
        }
        let jd = groebner::graded_piece(&j, &Multidegree(vec![d]));
        if jd.is_empty() {
            continue;
        }
        let keep = jd.len() - rng.gen_range(0..=1usize);
        let w: Vec<Polynomial> = (0..keep)
            .map(|_| {
                jd.iter().fold(Polynomial::zero(), |acc, p| &acc + &p.scale(&Q::from_int(rng.gen_range(-3..=3))))
            })
            .filter(|p| !p.is_zero())
            .collect();
        let mut gens = w;
        gens.extend(groebner::truncate(&j, &Multidegree(vec![d + 1])).gens().iter().cloned());
        let i = Ideal::new(&ring, gens).unwrap();
        if jd.len() - groebner::graded_piece(&i, &Multidegree(vec![d])).len() > 1 {
            continue;
        }
        assert_eq!(ext1_degree0_dim(&j, &i).unwrap(), ext1_ci_formula(&j, &i, d).unwrap(), "{} / {}", j.display(), i.display());
        checked += 1;
    }
}
