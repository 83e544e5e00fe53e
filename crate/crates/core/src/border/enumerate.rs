//! Degree-by-degree search for ideals with the generic Hilbert function obtained by adding monomials.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::apolarity::{self, DualForm};
use crate::error::{Error, Result};
use crate::groebner::{self, TruncatedBasis};
use crate::hilbert;
use crate::linalg::{Echelon, SparseRow};
use crate::ring::{Ideal, Monomial, Multidegree, Polynomial};

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub base: Ideal,
    pub r: u64,
    pub cap: u32,
    pub filter: Option<DualForm>,
    pub branch_limit: usize,
}

impl EnumerationConfig {
    /// Cap defaults to [`default_cap`].
    pub fn new(base: Ideal, r: u64, filter: Option<DualForm>) -> Result<EnumerationConfig> {
        let cap = default_cap(&base, r);
        EnumerationConfig::with_cap(base, r, cap, filter)
    }

    pub fn with_cap(base: Ideal, r: u64, cap: u32, filter: Option<DualForm>) -> Result<EnumerationConfig> {
        if base.ring().rank() != 1 {
            return Err(Error::Invalid("enumeration needs a single-block ring".into()));
        }
        if cap < base.max_gen_degree() {
            return Err(Error::Invalid("degree cap below the largest generator degree of the base ideal".into()));
        }
        if let Some(f) = &filter {
            if f.ring() != base.ring() {
                return Err(Error::Invalid("filter form lives in a different ring".into()));
            }
        }
        Ok(EnumerationConfig { base, r, cap, filter, branch_limit: 1 << 20 })
    }

    pub fn branch_limit(mut self, limit: usize) -> Result<EnumerationConfig> {
        if limit == 0 {
            return Err(Error::Invalid("branch limit must be positive".into()));
        }
        self.branch_limit = limit;
        Ok(self)
    }
}

/// Smallest cap that makes the search complete: `max(r, largest generator degree of J0)`.
///
/// From degree `r` on, `r^{⟨D⟩} = r`, so Gotzmann persistence fixes `HF = r` in every later degree.
pub fn default_cap(base: &Ideal, r: u64) -> u32 {
    base.max_gen_degree().max(r as u32)
}

/// A partial ideal: the base plus the monomials added so far.
#[derive(Clone, Debug)]
pub struct Branch {
    pub added: Vec<Monomial>,
    basis: TruncatedBasis,
}

impl Branch {
    pub fn root(cfg: &EnumerationConfig) -> Branch {
        Branch { added: Vec::new(), basis: TruncatedBasis::new(&cfg.base) }
    }

    pub fn ideal(&self, cfg: &EnumerationConfig) -> Ideal {
        let extra: Vec<Polynomial> = self.added.iter().map(|m| Polynomial::monomial(*m)).collect();
        cfg.base.with_gens(&extra).expect("monomials are homogeneous")
    }
}

fn h(cfg: &EnumerationConfig, i: u32) -> u64 {
    hilbert::generic_hilbert_function(cfg.base.ring(), cfg.r, &Multidegree(alloc::vec![i as i32]))
}

fn to_row(p: &Polynomial, index: &mut BTreeMap<Monomial, usize>) -> SparseRow {
    let mut row: SparseRow = p
        .terms()
        .iter()
        .map(|(m, c)| {
            let n = index.len();
            (*index.entry(*m).or_insert(n), c.clone())
        })
        .collect();
    row.sort_by_key(|e| e.0);
    row
}

fn subsets(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut j = k;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if idx[j] != j + n - k {
                break;
            }
            if j == 0 {
                return;
            }
        }
        idx[j] += 1;
        for t in j + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

/// Children of a branch in degree `i`: one per admissible set of added monomials.
pub fn expand(cfg: &EnumerationConfig, branch: &Branch, i: u32) -> Vec<Branch> {
    let mut b = branch.clone();
    let have = b.basis.hilbert(i);
    let want = h(cfg, i);
    if have < want {
        return Vec::new();
    }
    let k = (have - want) as usize;
    let next_have = b.basis.hilbert(i + 1);
    let next_want = h(cfg, i + 1);
    if k == 0 {
        return if next_have >= next_want { alloc::vec![b] } else { Vec::new() };
    }
    let ring = cfg.base.ring_arc().clone();
    let nv = ring.nvars();
    let mut index = BTreeMap::new();
    let mut cands: Vec<(Monomial, SparseRow, Vec<SparseRow>)> = Vec::new();
    for m in ring.monomials_of_total_degree(i) {
        if let Some(f) = &cfg.filter {
            if !apolarity::apply(&Polynomial::monomial(m), f.poly()).is_zero() {
                continue;
            }
        }
        let nf = b.basis.normal_form(&Polynomial::monomial(m), i + 1);
        if nf.is_zero() {
            continue;
        }
        let row = to_row(&nf, &mut index);
        let ups = (0..nv)
            .map(|j| {
                let p = Polynomial::monomial(m.mul(&Monomial::var(j)));
                to_row(&b.basis.normal_form(&p, i + 1), &mut index)
            })
            .collect();
        cands.push((m, row, ups));
    }
    let room = next_have.saturating_sub(next_want) as usize;
    let mut out = Vec::new();
    subsets(cands.len(), k, |pick| {
        let mut e = Echelon::new();
        if !pick.iter().all(|&c| e.insert(cands[c].1.clone())) {
            return;
        }
        let mut up = Echelon::new();
        for &c in pick {
            for row in &cands[c].2 {
                up.insert(row.clone());
                if up.rank() > room {
                    return;
                }
            }
        }
        let mut child = b.clone();
        let ms: Vec<Monomial> = pick.iter().map(|&c| cands[c].0).collect();
        child.basis.add(&ms.iter().map(|m| Polynomial::monomial(*m)).collect::<Vec<_>>());
        child.added.extend(ms);
        out.push(child);
    });
    out
}

/// Completed search: candidates after the last degree, before the Hilbert polynomial filter.
pub fn search(cfg: &EnumerationConfig) -> Result<Vec<Branch>> {
    let mut level = alloc::vec![Branch::root(cfg)];
    for i in 0..=cfg.cap {
        let mut next = Vec::new();
        for b in &level {
            next.extend(expand(cfg, b, i));
            if next.len() > cfg.branch_limit {
                return Err(Error::BranchLimit(cfg.branch_limit));
            }
        }
        level = next;
    }
    Ok(level)
}

/// Keeps branches whose ideal has constant Hilbert polynomial `r`, removes duplicates and sorts.
pub fn finish(cfg: &EnumerationConfig, branches: Vec<Branch>) -> Vec<Ideal> {
    let mut seen: BTreeMap<Vec<Polynomial>, Ideal> = BTreeMap::new();
    for b in branches {
        let ideal = b.ideal(cfg);
        if hilbert::stable_value(&ideal).ok() != Some(cfg.r) {
            continue;
        }
        let key = canonical_key(&ideal);
        seen.entry(key).or_insert(ideal);
    }
    seen.into_values().collect()
}

/// The reduced grevlex basis, which identifies an ideal.
pub fn canonical_key(i: &Ideal) -> Vec<Polynomial> {
    let mut v = groebner::grevlex_basis(i).elements().to_vec();
    v.sort();
    v
}

/// All ideals `J0 + (monomials)` reachable by the degreewise search, filtered to Hilbert polynomial `r`.
pub fn enumerate_monomial_apolar_ideals(cfg: &EnumerationConfig) -> Result<Vec<Ideal>> {
    Ok(finish(cfg, search(cfg)?))
}

/// `HF(S/I, i)` for `i ≤ d`, used by callers that want the row of an enumerated ideal.
pub fn hf_row(i: &Ideal, d: u32) -> Vec<u64> {
    let mut tb = TruncatedBasis::new(i);
    (0..=d).map(|k| tb.hilbert(k)).collect()
}
