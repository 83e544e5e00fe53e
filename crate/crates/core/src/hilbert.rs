//! Multigraded Hilbert functions, the generic Hilbert function, stabilization and Macaulay bounds.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::ring::{binomial, GradedRing, Ideal, Multidegree};

/// `HF(S/I, v)` from the standard monomials of a basis.
pub fn hilbert_function_gb(gb: &GroebnerBasis, v: &Multidegree) -> u64 {
    if !v.is_nonnegative() {
        return 0;
    }
    gb.ring().monomial_basis(v).iter().filter(|m| gb.is_standard(m)).count() as u64
}

pub fn hilbert_function(i: &Ideal, v: &Multidegree) -> u64 {
    hilbert_function_gb(&groebner::grevlex_basis(i), v)
}

/// `dim S_v − dim I_v` by linear algebra, without a Gröbner basis.
pub fn hilbert_function_linear(i: &Ideal, v: &Multidegree) -> u64 {
    i.ring().graded_piece_dimension(v) - groebner::graded_piece(i, v).len() as u64
}

/// Values of `HF(S/I, ·)` on a box of degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunctionTable {
    pub values: BTreeMap<Multidegree, u64>,
}

impl HilbertFunctionTable {
    pub fn new(i: &Ideal, lo: &Multidegree, hi: &Multidegree) -> HilbertFunctionTable {
        let gb = groebner::grevlex_basis(i);
        let values = Multidegree::box_range(lo, hi).into_iter().map(|v| {
            let h = hilbert_function_gb(&gb, &v);
            (v, h)
        });
        HilbertFunctionTable { values: values.collect() }
    }

    pub fn get(&self, v: &Multidegree) -> Option<u64> {
        self.values.get(v).copied()
    }

    /// Values in degree order, for ℤ-graded rows.
    pub fn row(&self) -> Vec<u64> {
        self.values.values().copied().collect()
    }
}

/// `min(r, dim S_v)`.
pub fn generic_hilbert_function(ring: &GradedRing, r: u64, v: &Multidegree) -> u64 {
    r.min(ring.graded_piece_dimension(v))
}

/// `Ok(())` when `HF(S/I, ·)` agrees with `h_r` on the box, otherwise the first failing degree.
pub fn has_generic_hf(i: &Ideal, r: u64, lo: &Multidegree, hi: &Multidegree) -> core::result::Result<(), Multidegree> {
    let gb = groebner::grevlex_basis(i);
    has_generic_hf_gb(&gb, r, lo, hi)
}

pub fn has_generic_hf_gb(gb: &GroebnerBasis, r: u64, lo: &Multidegree, hi: &Multidegree) -> core::result::Result<(), Multidegree> {
    let mut box_ = Multidegree::box_range(lo, hi);
    box_.sort_by_key(|d| (d.total(), d.clone()));
    for v in box_ {
        if hilbert_function_gb(gb, &v) != generic_hilbert_function(gb.ring(), r, &v) {
            return Err(v);
        }
    }
    Ok(())
}

/// The eventual constant value of `HF(S/Ī, ·)` along the diagonal of the nef cone.
pub fn stable_value(i: &Ideal) -> Result<u64> {
    let sat = groebner::saturate_irrelevant(i);
    let gb = groebner::grevlex_basis(&sat);
    stable_value_saturated(&gb)
}

/// As [`stable_value`], for the basis of an ideal that is already saturated.
pub fn stable_value_saturated(gb: &GroebnerBasis) -> Result<u64> {
    if gb.is_unit() {
        return Ok(0);
    }
    let ring = gb.ring();
    let s = ring.rank();
    let maxdeg = gb.elements().iter().filter_map(|g| g.total_degree()).max().unwrap_or(0) as i32;
    let cap = 2 * maxdeg + 4;
    let mut streak = 0;
    let mut last = None;
    for k in 0..=cap {
        let u = Multidegree(alloc::vec![k; s]);
        let h = hilbert_function_gb(gb, &u);
        let flat = (0..s).all(|j| hilbert_function_gb(gb, &(&u + &Multidegree::unit(s, j))) == h);
        if flat && last == Some(h) {
            streak += 1;
            if streak >= 2 {
                return Ok(h);
            }
        } else if flat {
            streak = 1;
        } else {
            streak = 0;
        }
        last = if flat { Some(h) } else { None };
    }
    Err(Error::NotZeroDimensional(format!(
        "Hilbert function does not stabilize up to degree {}",
        cap
    )))
}

/// Greedy expansion `h = C(k_d, d) + C(k_{d−1}, d−1) + … + C(k_j, j)` with `k_d > k_{d−1} > … ≥ k_j ≥ j ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayRep {
    pub h: u64,
    pub d: u32,
    /// Pairs `(k_i, i)` from `i = d` downwards.
    pub terms: Vec<(u64, u32)>,
}

pub fn macaulay_rep(h: u64, d: u32) -> MacaulayRep {
    assert!(d >= 1, "Macaulay representation needs d ≥ 1");
    let mut rest = h;
    let mut terms = Vec::new();
    let mut i = d;
    while rest > 0 && i >= 1 {
        let mut k = i as u64;
        while binomial(k as i64 + 1, i as i64) <= rest {
            k += 1;
        }
        rest -= binomial(k as i64, i as i64);
        terms.push((k, i));
        i -= 1;
    }
    MacaulayRep { h, d, terms }
}

/// `h^{⟨d⟩} = Σ C(k_i + 1, i + 1)`.
pub fn macaulay_upper(h: u64, d: u32) -> u64 {
    macaulay_rep(h, d).terms.iter().map(|&(k, i)| binomial(k as i64 + 1, i as i64 + 1)).sum()
}

/// Checks `HF(k+1) ≤ HF(k)^{⟨k⟩}` for `1 ≤ k < top` on a single-block ideal; returns the first violation.
pub fn macaulay_bound_holds(i: &Ideal, top: i32) -> core::result::Result<(), i32> {
    let gb = groebner::grevlex_basis(i);
    let mut prev = hilbert_function_gb(&gb, &Multidegree(alloc::vec![1]));
    for k in 1..top {
        let next = hilbert_function_gb(&gb, &Multidegree(alloc::vec![k + 1]));
        if next > macaulay_upper(prev, k as u32) {
            return Err(k + 1);
        }
        prev = next;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_ideal;
    use alloc::sync::Arc;
    use alloc::vec;

    fn d(k: i32) -> Multidegree {
        Multidegree(vec![k])
    }

    #[test]
    fn hf_rows() {
        let r = Arc::new(GradedRing::projective(2));
        let i = parse_ideal("y0^2, y1^3, y2^4", &r).unwrap();
        let t = HilbertFunctionTable::new(&i, &d(0), &d(6));
        assert_eq!(t.row(), [1, 3, 5, 6, 5, 3, 1]);
        for k in 0..8 {
            assert_eq!(hilbert_function(&i, &d(k)), hilbert_function_linear(&i, &d(k)));
        }
        assert_eq!(hilbert_function(&Ideal::zero(&r), &d(4)), 15);
        assert_eq!(hilbert_function(&i, &d(-1)), 0);
    }

    #[test]
    fn generic_values() {
        let r = GradedRing::projective(2);
        let row: Vec<u64> = (0..5).map(|k| generic_hilbert_function(&r, 4, &d(k))).collect();
        assert_eq!(row, [1, 3, 4, 4, 4]);
        let r3 = GradedRing::product(&[2, 2, 2]).unwrap();
        assert_eq!(generic_hilbert_function(&r3, 3, &Multidegree(vec![1, 1, 0])), 3);
    }

    #[test]
    fn generic_hf_checks() {
        let r = Arc::new(GradedRing::projective(2));
        let j = parse_ideal("y0^2, y1^3", &r).unwrap();
        let jt = groebner::truncate(&j, &d(3));
        assert!(has_generic_hf(&jt, 6, &d(0), &d(7)).is_ok());
        let lin = parse_ideal("y0, y1", &r).unwrap();
        assert_eq!(has_generic_hf(&lin, 2, &d(0), &d(4)), Err(d(1)));
    }

    #[test]
    fn stable_values() {
        let r = Arc::new(GradedRing::projective(2));
        assert_eq!(stable_value(&parse_ideal("y0*y1, y0*y2, y1^6", &r).unwrap()).unwrap(), 7);
        assert_eq!(stable_value(&parse_ideal("y0^2, y1^3", &r).unwrap()).unwrap(), 6);
        assert!(stable_value(&parse_ideal("y0", &r).unwrap()).is_err());
        let pp = Arc::new(GradedRing::product(&[1, 1]).unwrap());
        let pts = parse_ideal("a2, b2", &pp).unwrap();
        let pts = groebner::intersect(&pts, &parse_ideal("a1, b1", &pp).unwrap());
        let pts = groebner::intersect(&pts, &parse_ideal("a1 - a2, b1 - b2", &pp).unwrap());
        assert_eq!(stable_value(&pts).unwrap(), 3);
    }

    #[test]
    fn macaulay() {
        assert_eq!(macaulay_upper(0, 3), 0);
        assert_eq!(macaulay_upper(3, 1), 6);
        assert_eq!(macaulay_upper(6, 2), 10);
        assert_eq!(macaulay_upper(5, 2), 7);
        let rep = macaulay_rep(5, 2);
        assert_eq!(rep.terms, [(3, 2), (2, 1)]);
    }
}
