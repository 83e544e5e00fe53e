//! Monomial orders: lex, grevlex and weight orders refined by grevlex, each under a variable ranking.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::ring::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Compare `w·m` first, ties broken by grevlex.
    Weight(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    /// Variables listed from largest to smallest.
    ranking: Vec<usize>,
}

impl MonomialOrder {
    /// Grevlex with `v0 > v1 > … > v_{n-1}`.
    pub fn grevlex(n: usize) -> MonomialOrder {
        MonomialOrder { kind: OrderKind::Grevlex, ranking: (0..n).collect() }
    }

    pub fn lex(n: usize) -> MonomialOrder {
        MonomialOrder { kind: OrderKind::Lex, ranking: (0..n).collect() }
    }

    pub fn weight(w: Vec<i64>) -> Result<MonomialOrder, String> {
        if w.iter().any(|&x| x < 0) {
            return Err("weights must be nonnegative for a global order".into());
        }
        let n = w.len();
        Ok(MonomialOrder { kind: OrderKind::Weight(w), ranking: (0..n).collect() })
    }

    /// Same kind with variables ranked by `ranking` (largest first), which must be a permutation.
    pub fn with_ranking(&self, ranking: Vec<usize>) -> Result<MonomialOrder, String> {
        let mut seen = ranking.clone();
        seen.sort_unstable();
        if seen != (0..self.ranking.len()).collect::<Vec<_>>() {
            return Err("ranking is not a permutation of the variables".into());
        }
        Ok(MonomialOrder { kind: self.kind.clone(), ranking })
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    /// Grevlex on `n` variables with `last` the smallest variable.
    pub fn grevlex_with_last(n: usize, last: usize) -> MonomialOrder {
        let mut r: Vec<usize> = (0..n).filter(|&i| i != last).collect();
        r.push(last);
        MonomialOrder { kind: OrderKind::Grevlex, ranking: r }
    }

    /// Order on `n+1` variables eliminating variable `n`, grevlex on the rest.
    pub fn eliminate_last(n: usize) -> MonomialOrder {
        let mut w = alloc::vec![0i64; n + 1];
        w[n] = 1;
        MonomialOrder { kind: OrderKind::Weight(w), ranking: (0..=n).collect() }
    }

    pub fn weight_of(&self, m: &Monomial) -> Option<i64> {
        match &self.kind {
            OrderKind::Weight(w) => Some(w.iter().enumerate().map(|(i, x)| x * m.exp(i) as i64).sum()),
            _ => None,
        }
    }

    fn grevlex_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.total_degree().cmp(&b.total_degree()).then_with(|| {
            let (ea, eb) = (a.raw(), b.raw());
            for &v in self.ranking.iter().rev() {
                if ea[v] != eb[v] {
                    return eb[v].cmp(&ea[v]);
                }
            }
            Ordering::Equal
        })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match &self.kind {
            OrderKind::Grevlex => self.grevlex_cmp(a, b),
            OrderKind::Lex => {
                let (ea, eb) = (a.raw(), b.raw());
                for &v in &self.ranking {
                    if ea[v] != eb[v] {
                        return ea[v].cmp(&eb[v]);
                    }
                }
                Ordering::Equal
            }
            OrderKind::Weight(w) => {
                let (ea, eb) = (a.raw(), b.raw());
                let mut wa = 0i64;
                let mut wb = 0i64;
                for (i, x) in w.iter().enumerate() {
                    wa += x * ea[i] as i64;
                    wb += x * eb[i] as i64;
                }
                wa.cmp(&wb).then_with(|| self.grevlex_cmp(a, b))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    /// Monomial first, then component.
    TermOverPosition,
    /// Component first, then monomial.
    PositionOverTerm,
}

/// Order on terms `m·e_c` of a free module; lower component indices are larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    pub position: Position,
}

impl ModuleOrder {
    pub fn top(mono: MonomialOrder) -> ModuleOrder {
        ModuleOrder { mono, position: Position::TermOverPosition }
    }

    pub fn pot(mono: MonomialOrder) -> ModuleOrder {
        ModuleOrder { mono, position: Position::PositionOverTerm }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, ca: u32, b: &Monomial, cb: u32) -> Ordering {
        match self.position {
            Position::TermOverPosition => self.mono.cmp(a, b).then_with(|| cb.cmp(&ca)),
            Position::PositionOverTerm => cb.cmp(&ca).then_with(|| self.mono.cmp(a, b)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(v: &[u32]) -> Monomial {
        Monomial::from_exps(v)
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::grevlex(3);
        assert_eq!(o.cmp(&mono(&[1, 0, 1]), &mono(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&mono(&[2, 0, 0]), &mono(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_ranking() {
        let o = MonomialOrder::lex(3).with_ranking(alloc::vec![2, 1, 0]).unwrap();
        assert_eq!(o.cmp(&mono(&[5, 0, 0]), &mono(&[0, 0, 1])), Ordering::Less);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 4).prop_map(|v| Monomial::from_exps(&v))
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        let perm = Just((0..4usize).collect::<Vec<_>>()).prop_shuffle();
        (0..3usize, perm, proptest::collection::vec(0i64..4, 4)).prop_map(|(k, p, w)| {
            let base = match k {
                0 => MonomialOrder::lex(4),
                1 => MonomialOrder::grevlex(4),
                _ => MonomialOrder::weight(w).unwrap(),
            };
            base.with_ranking(p).unwrap()
        })
    }

    proptest! {
        #[test]
        fn multiplicative_and_global(o in arb_order(), a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            let ab = o.cmp(&a, &b);
            prop_assert_eq!(ab, o.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert!(o.cmp(&Monomial::one(), &a) != Ordering::Greater);
            prop_assert_eq!(ab == Ordering::Equal, a == b);
        }
    }
}
