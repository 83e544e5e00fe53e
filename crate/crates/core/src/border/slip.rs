//! The `Ext¹` obstruction to membership in the smoothable component.

use alloc::vec::Vec;

use crate::error::Result;
use crate::groebner;
use crate::homological;
use crate::ring::Ideal;

#[derive(Clone, Debug)]
pub struct ExtVerdict {
    pub ideal: Ideal,
    pub saturated: bool,
    /// `dim Ext¹(Ī/I, S/Ī)_0`; `None` for saturated ideals.
    pub ext1: Option<usize>,
}

impl ExtVerdict {
    pub fn possibly_in_slip(&self) -> bool {
        self.saturated || self.ext1 != Some(0)
    }
}

pub fn ext_verdict(i: &Ideal) -> Result<ExtVerdict> {
    let sat = groebner::saturate_irrelevant(i);
    if groebner::ideals_equal(i, &sat) {
        return Ok(ExtVerdict { ideal: i.clone(), saturated: true, ext1: None });
    }
    let e = homological::ext1_degree0_dim(&sat, i)?;
    Ok(ExtVerdict { ideal: i.clone(), saturated: false, ext1: Some(e) })
}

/// Splits candidates into `(possibly in Slip, excluded)`; excluded ones are nonsaturated with vanishing `Ext¹`.
pub fn slip_ext_filter(candidates: &[Ideal]) -> Result<(Vec<Ideal>, Vec<Ideal>)> {
    let mut keep = Vec::new();
    let mut drop = Vec::new();
    for c in candidates {
        if ext_verdict(c)?.possibly_in_slip() {
            keep.push(c.clone());
        } else {
            drop.push(c.clone());
        }
    }
    Ok((keep, drop))
}
