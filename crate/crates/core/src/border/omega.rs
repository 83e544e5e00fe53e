//! Randomized genericity witnesses for derivative spaces of forms divisible by `x0²` but not `x0⁴`.

use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::linalg::Matrix;
use crate::rational::Q;
use crate::ring::{monomials_of_degree, Monomial, Polynomial};

/// The `(a, e, target)` triples checked for `5 ≤ a ≤ 8`.
pub const OMEGA_TRIPLES: [(u32, u32, usize); 8] =
    [(5, 1, 3), (6, 1, 3), (6, 2, 5), (7, 1, 3), (7, 2, 5), (8, 1, 3), (8, 2, 5), (8, 3, 7)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaOutcome {
    Holds,
    Inconclusive,
}

/// Degree-`a` monomials in three variables with `x0`-exponent 2 or 3.
pub fn omega_support(a: u32) -> Vec<Monomial> {
    monomials_of_degree(&[0, 1, 2], a).into_iter().filter(|m| (2..=3).contains(&m.exp(0))).collect()
}

/// Rank of the matrix whose columns are the order-`e` derivatives of `ω`, on monomials divisible by `x0²`.
pub fn omega_rank(omega: &Polynomial, a: u32, e: u32) -> usize {
    let rows: Vec<Monomial> = monomials_of_degree(&[0, 1, 2], a - e).into_iter().filter(|m| m.exp(0) >= 2).collect();
    let ders = monomials_of_degree(&[0, 1, 2], e);
    let mut m = Matrix::zeros(rows.len(), ders.len());
    for (j, d) in ders.iter().enumerate() {
        let mut p = omega.clone();
        for v in 0..3 {
            for _ in 0..d.exp(v) {
                p = p.derivative(v);
            }
        }
        for (i, r) in rows.iter().enumerate() {
            m.set(i, j, p.coefficient(r));
        }
    }
    m.rank()
}

fn sample(a: u32, rng: &mut ChaCha8Rng) -> Polynomial {
    Polynomial::from_terms(omega_support(a).into_iter().map(|m| {
        let c = (rng.next_u32() % 201) as i64 - 100;
        (m, Q::from_int(c))
    }))
}

/// Rank of a single random sample: at least `target` proves the generic bound by semicontinuity.
fn seed_holds(a: u32, e: u32, target: usize, seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..3).any(|_| omega_rank(&sample(a, &mut rng), a, e) >= target)
}

/// Three independent seeds must each reach rank `target` within three samples.
pub fn generic_omega_rank(a: u32, e: u32, target: usize, seed: u64) -> OmegaOutcome {
    if e == 0 || e >= a {
        return OmegaOutcome::Inconclusive;
    }
    let all = (0..3u64).all(|k| seed_holds(a, e, target, seed.wrapping_mul(0x9e37_79b9).wrapping_add(k)));
    if all {
        OmegaOutcome::Holds
    } else {
        OmegaOutcome::Inconclusive
    }
}
