//! Nondegenerate ternary forms of even degree: the common-linear-factor test and Macaulay strata.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::apolarity::{self, DualForm};
use crate::error::{Error, Result};
use crate::groebner;
use crate::hilbert::macaulay_upper;
use crate::linalg::Matrix;
use crate::rational::Q;
use crate::ring::{binomial, GradedRing, Ideal, Multidegree, Polynomial};

/// `gcd` of a list of forms, through `lcm(f, g) = generator of (f) ∩ (g)`.
pub fn form_gcd(ring: &Arc<GradedRing>, forms: &[Polynomial]) -> Result<Polynomial> {
    let mut it = forms.iter().filter(|f| !f.is_zero());
    let Some(first) = it.next() else {
        return Err(Error::Invalid("gcd of no nonzero forms".into()));
    };
    let mut g = first.monic();
    for f in it {
        if g.is_constant() {
            break;
        }
        let a = Ideal::new(ring, vec![g.clone()])?;
        let b = Ideal::new(ring, vec![f.clone()])?;
        let inter = groebner::intersect(&a, &b);
        let lcm = inter.gens().iter().min_by_key(|p| p.total_degree()).cloned().expect("principal");
        let prod = &g * f;
        g = groebner::exact_divide(&prod, &lcm).expect("lcm divides the product").monic();
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearFactor {
    Absent,
    Present,
    /// The gcd has degree at least three and was not factored.
    Undetermined,
}

/// Whether a linear form (over `ℂ`) divides the ternary form `g`, decided for `deg g ≤ 2`.
pub fn has_linear_factor(g: &Polynomial) -> LinearFactor {
    match g.total_degree() {
        None | Some(0) => LinearFactor::Absent,
        Some(1) => LinearFactor::Present,
        Some(2) => {
            let mut m = Matrix::zeros(3, 3);
            let half = Q::new(1, 2);
            for (mon, c) in g.terms() {
                let vars: Vec<usize> = (0..3).flat_map(|i| core::iter::repeat_n(i, mon.exp(i) as usize)).collect();
                let (i, j) = (vars[0], vars[1]);
                if i == j {
                    m.set(i, i, c.clone());
                } else {
                    m.set(i, j, c * &half);
                    m.set(j, i, c * &half);
                }
            }
            if m.determinant().is_zero() {
                LinearFactor::Present
            } else {
                LinearFactor::Absent
            }
        }
        _ => LinearFactor::Undetermined,
    }
}

#[derive(Clone, Debug)]
pub struct EvenTernaryCheck {
    pub p: i32,
    pub r_p: u64,
    pub nondegenerate: bool,
    /// `dim Ann(F)_p`, which is `2p + 1` for a nondegenerate form.
    pub ann_p_dim: usize,
    pub gcd: Polynomial,
    pub linear_factor: LinearFactor,
}

/// Nondegeneracy of `F` of degree `2p−2` and the gcd test on a basis of `Ann(F)_p`.
pub fn even_ternary_check(f: &DualForm, p: i32) -> Result<EvenTernaryCheck> {
    if f.ring().nvars() != 3 {
        return Err(Error::Invalid("expected a ternary form".into()));
    }
    let nondegenerate = apolarity::is_nondegenerate_even(f, p)?;
    let basis = apolarity::catalecticant(f, &Multidegree(vec![p])).kernel();
    let gcd = form_gcd(f.ring_arc(), &basis)?;
    let linear_factor = has_linear_factor(&gcd);
    Ok(EvenTernaryCheck {
        p,
        r_p: binomial(p as i64 + 1, 2),
        nondegenerate,
        ann_p_dim: basis.len(),
        gcd,
        linear_factor,
    })
}

/// All continuations of a Hilbert function row of a quotient of `k[y0, y1, y2]` through degree `to`
/// that respect Macaulay's bound and stay at most `cap`.
pub fn admissible_hf_rows(prefix: &[u64], to: usize, cap: u64) -> Vec<Vec<u64>> {
    let dim = |k: usize| binomial(k as i64 + 2, 2);
    let mut rows = vec![prefix.to_vec()];
    for k in prefix.len()..=to {
        let mut next = Vec::new();
        for row in rows {
            let hi = match row.last() {
                None => 1,
                Some(&h) if k == 1 => h.min(1) * 3,
                Some(&h) => macaulay_upper(h, k as u32 - 1),
            }
            .min(dim(k))
            .min(cap);
            for v in 0..=hi {
                let mut r = row.clone();
                r.push(v);
                next.push(r);
            }
        }
        rows = next;
    }
    rows
}

