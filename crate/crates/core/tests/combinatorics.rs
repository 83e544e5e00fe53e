use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use borderline_core::groebner;
use borderline_core::hilbert::{hilbert_function, macaulay_bound_holds, macaulay_rep, macaulay_upper};
use borderline_core::ring::binomial;
use borderline_core::{GradedRing, Ideal, Monomial, Multidegree, Polynomial, Q};

/// `table[h][d] = h^{⟨d⟩}` for `h ≤ hmax`, `1 ≤ d ≤ dmax`.
fn upper_table(hmax: u64, dmax: u32) -> Vec<Vec<u64>> {
    (0..=hmax).map(|h| (0..=dmax).map(|d| if d == 0 { 0 } else { macaulay_upper(h, d) }).collect()).collect()
}

fn dim_p2(k: i64) -> u64 {
    binomial(k + 2, 2)
}

fn lex_greater(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).find(|(x, y)| x != y).is_some_and(|(x, y)| x > y)
}

fn exps_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|a| exps_of_degree(n - 1, d - a).into_iter().map(move |mut t| {
            t.insert(0, a);
            t
        }))
        .collect()
}

#[test]
fn macaulay_representation_is_greedy() {
    for d in 1..=8u32 {
        for h in 0..=200u64 {
            let rep = macaulay_rep(h, d);
            let sum: u64 = rep.terms.iter().map(|&(k, i)| binomial(k as i64, i as i64)).sum();
            assert_eq!(sum, h);
            assert!(rep.terms.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 == w[1].1 + 1));
            assert!(rep.terms.iter().all(|&(k, i)| k >= i as u64));
        }
    }
}

#[test]
fn macaulay_growth_is_attained_by_lex_segments() {
    let n = 4;
    for d in 1..=4u32 {
        let all = exps_of_degree(n, d);
        for h in 0..=all.len() {
            let gens: Vec<&Vec<u32>> = all[..all.len() - h].iter().collect();
            let next = exps_of_degree(n, d + 1);
            let standard = next
                .iter()
                .filter(|m| !gens.iter().any(|g| g.iter().zip(m.iter()).all(|(a, b)| a <= b)))
                .count();
            assert_eq!(standard as u64, macaulay_upper(h as u64, d), "h = {h}, d = {d}");
        }
        assert!(all.windows(2).all(|w| lex_greater(&w[0], &w[1])));
    }
}

#[test]
fn superadditivity_of_macaulay_upper_bounds() {
    let table = upper_table(120, 60);
    for e in 1..=60usize {
        for l in e..=60usize {
            for q in 0..=60usize {
                for r in 0..=60usize {
                    assert!(table[q][l] + table[r][e] <= table[q + r][e], "q={q} r={r} l={l} e={e}");
                }
            }
        }
    }
}

#[test]
fn strict_split_bound() {
    for d in 2..=12i64 {
        let n = dim_p2(d - 1);
        for s in 1..n {
            let t = n - s;
            assert!(macaulay_upper(s, d as u32 - 1) + macaulay_upper(t, d as u32 - 1) < dim_p2(d), "d={d} s={s}");
        }
        assert_eq!(macaulay_upper(n, d as u32 - 1), dim_p2(d));
    }
}

#[test]
fn higher_index_bound_drops() {
    for d in 2..=8i64 {
        let n = dim_p2(d - 1);
        for l in d as u32..=12 {
            assert!(macaulay_upper(n, l) < macaulay_upper(n, d as u32 - 1), "d={d} l={l}");
        }
    }
}

#[test]
fn three_part_split_is_concentrated() {
    for c in 2..=12u32 {
        for b in 2..=c {
            for a in 2..=b {
                if c + 2 > a + b {
                    continue;
                }
                let d = a + b - c;
                let n = dim_p2(d as i64 - 1);
                let target = dim_p2(d as i64);
                for h0 in 0..=n {
                    for h1 in 0..=n - h0 {
                        let h2 = n - h0 - h1;
                        let lhs = macaulay_upper(h0, b - 1) + macaulay_upper(h1, a - 1) + macaulay_upper(h2, d - 1);
                        if lhs < target {
                            continue;
                        }
                        let mut hs = [h0, h1, h2];
                        hs.sort();
                        assert_eq!(hs, [0, 0, n], "a={a} b={b} c={c} h=({h0},{h1},{h2})");
                        if b < c {
                            assert!(h0 == 0 && h1 == 0);
                        }
                        if a < b {
                            assert_eq!(h0, 0);
                        }
                    }
                }
            }
        }
    }
}

fn standard_count(degs: &[u32], nvars: usize, s: u32) -> u64 {
    exps_of_degree(nvars, s).iter().filter(|m| degs.iter().zip(m.iter()).all(|(a, e)| e < a)).count() as u64
}

#[test]
fn complete_intersection_symmetry() {
    for n in 1..=3usize {
        let ring = Arc::new(GradedRing::projective(n));
        let mut degs = vec![1u32; n];
        loop {
            let r: u64 = degs.iter().map(|&a| a as u64).product();
            let d = degs.iter().sum::<u32>() as i32 - (n as i32 + 1);
            let gens: Vec<Polynomial> = degs
                .iter()
                .enumerate()
                .map(|(i, &a)| {
                    let mut m = Monomial::one();
                    m.set_exp(i, a);
                    Polynomial::monomial(m)
                })
                .collect();
            let j = Ideal::new(&ring, gens).unwrap();
            for s in 0..=d.max(-1) {
                let hf = |k: i32| hilbert_function(&j, &Multidegree(vec![k]));
                assert_eq!(hf(s) + hf(d - s), r, "degrees {degs:?}, s = {s}");
                assert_eq!(hf(s), standard_count(&degs, n + 1, s as u32));
            }
            let Some(k) = degs.iter().position(|&a| a < 6) else { break };
            degs[k] += 1;
            for x in &mut degs[..k] {
                *x = 1;
            }
        }
    }
}

fn random_point(rng: &mut ChaCha8Rng, size: usize) -> Vec<i64> {
    loop {
        let p: Vec<i64> = (0..size).map(|_| rng.gen_range(-4..=4)).collect();
        if p.iter().any(|&c| c != 0) {
            return p;
        }
    }
}

fn proportional(p: &[i64], q: &[i64]) -> bool {
    (0..p.len()).all(|i| (0..p.len()).all(|j| p[i] * q[j] == p[j] * q[i]))
}

fn point_ideal(ring: &Arc<GradedRing>, coords: &[Vec<i64>]) -> Ideal {
    let mut gens = Vec::new();
    for (b, p) in coords.iter().enumerate() {
        let vars = ring.block_vars(b);
        for i in 0..vars.len() {
            for j in i + 1..vars.len() {
                let g = &Polynomial::var(vars[j]).scale(&Q::from_int(p[i])) - &Polynomial::var(vars[i]).scale(&Q::from_int(p[j]));
                if !g.is_zero() {
                    gens.push(g);
                }
            }
        }
    }
    Ideal::new(ring, gens).unwrap()
}

#[test]
fn hilbert_functions_of_points_in_products() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let shapes: [&[usize]; 4] = [&[1, 1], &[1, 2], &[2, 1], &[1, 1, 1]];
    for round in 0..50 {
        let dims = shapes[round % shapes.len()];
        let ring = Arc::new(GradedRing::product(dims).unwrap());
        let count = rng.gen_range(1..=5usize);
        let mut points: Vec<Vec<Vec<i64>>> = Vec::new();
        for _ in 0..count {
            let p: Vec<Vec<i64>> = dims.iter().map(|&n| random_point(&mut rng, n + 1)).collect();
            if !points.iter().any(|q| q.iter().zip(&p).all(|(a, b)| proportional(a, b))) {
                points.push(p);
            }
        }
        let length = points.len() as u64;
        let ideal = points.iter().map(|p| point_ideal(&ring, p)).reduce(|a, b| groebner::intersect(&a, &b)).unwrap();
        assert!(groebner::is_saturated(&ideal));
        let s = dims.len();
        let top = Multidegree(vec![3; s]);
        for v in Multidegree::box_range(&Multidegree::zero(s), &top) {
            let hv = hilbert_function(&ideal, &v);
            assert!(hv <= length);
            for j in 0..s {
                let e = Multidegree::unit(s, j);
                let v1 = &v + &e;
                let v2 = &v1 + &e;
                let h1 = hilbert_function(&ideal, &v1);
                assert!(hv <= h1, "{} at {:?}", ideal.display(), v);
                if hv == h1 {
                    assert_eq!(h1, hilbert_function(&ideal, &v2));
                }
            }
        }
        assert_eq!(hilbert_function(&ideal, &Multidegree(vec![length as i32; s])), length);
    }
}

#[test]
fn macaulay_bound_on_annihilators() {
    let ring = Arc::new(GradedRing::projective(2));
    for text in ["x0*x1^2*x2^3", "x0^2*x1^2*x2^2", "x0^3 + x1^3 + x2^3", "x0^2*x1 + x1^2*x2", "x0^4*x1*x2 + x2^6"] {
        let f = borderline_core::notation::parse_dual_polynomial(text, &ring).unwrap();
        let f = borderline_core::DualForm::new(&ring, f).unwrap();
        let ann = borderline_core::apolarity::annihilator(&f).unwrap();
        assert_eq!(macaulay_bound_holds(&ann, 10), Ok(()), "{text}");
    }
}
