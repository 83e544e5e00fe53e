//! Structured outcomes of the classification procedures.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::apolarity::{self, DualForm};
use crate::groebner;
use crate::hilbert;
use crate::ring::{Ideal, Multidegree};

/// A named check together with its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Certificate {
    pub fn new(name: &str, holds: bool, detail: impl Into<String>) -> Certificate {
        Certificate { name: name.to_string(), holds, detail: detail.into() }
    }
}

#[derive(Clone, Debug)]
pub enum Shape {
    /// The unique ideal and the criterion that forces uniqueness.
    Point { ideal: Ideal, criterion: String },
    Projective { n: u64, members: Vec<Ideal> },
    /// An irreducible component birational to `ℙ^n`.
    BirationalComponent { n: u64 },
    Reducible { witnesses: (Ideal, Ideal) },
    Unresolved { reason: String },
}

impl Shape {
    pub fn label(&self) -> String {
        match self {
            Shape::Point { .. } => "single point".into(),
            Shape::Projective { n, .. } => format!("P^{}", n),
            Shape::BirationalComponent { n } => format!("component birational to P^{}", n),
            Shape::Reducible { .. } => "reducible witness".into(),
            Shape::Unresolved { .. } => "unresolved".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VspBarReport {
    pub input: String,
    pub r: Option<u64>,
    pub shape: Shape,
    pub certificates: Vec<Certificate>,
}

impl VspBarReport {
    pub fn unresolved(input: String, r: Option<u64>, reason: impl Into<String>, certificates: Vec<Certificate>) -> VspBarReport {
        VspBarReport { input, r, shape: Shape::Unresolved { reason: reason.into() }, certificates }
    }

    pub fn verdict(&self) -> String {
        self.shape.label()
    }

    pub fn certified(&self) -> bool {
        !matches!(self.shape, Shape::Unresolved { .. }) && self.certificates.iter().all(|c| c.holds)
    }

    pub fn is_point(&self) -> bool {
        matches!(self.shape, Shape::Point { .. })
    }

    pub fn projective_dim(&self) -> Option<u64> {
        match self.shape {
            Shape::Projective { n, .. } => Some(n),
            _ => None,
        }
    }

    pub fn point_ideal(&self) -> Option<&Ideal> {
        match &self.shape {
            Shape::Point { ideal, .. } => Some(ideal),
            _ => None,
        }
    }
}

/// Checks that `I` is saturated, apolar to `F`, has stable value `r` and agrees with `h_r` up to degree `top`.
pub fn ideal_certificates(label: &str, i: &Ideal, f: &DualForm, r: u64, top: i32) -> Vec<Certificate> {
    let ring = i.ring();
    let s = ring.rank();
    let sat = groebner::saturate_irrelevant(i);
    let saturated = groebner::ideals_equal(i, &sat);
    let apolar = apolarity::is_apolar(i, f);
    let stable = hilbert::stable_value(i);
    let lo = Multidegree::zero(s);
    let hi = Multidegree(alloc::vec![top; s]);
    let generic = hilbert::has_generic_hf(i, r, &lo, &hi);
    alloc::vec![
        Certificate::new(&format!("{} saturated", label), saturated, i.display()),
        Certificate::new(&format!("{} apolar", label), apolar, f.display()),
        Certificate::new(
            &format!("{} stable value", label),
            stable.as_ref().ok() == Some(&r),
            match &stable {
                Ok(v) => format!("{} (expected {})", v, r),
                Err(e) => e.to_string(),
            },
        ),
        Certificate::new(
            &format!("{} generic Hilbert function", label),
            generic.is_ok(),
            match &generic {
                Ok(()) => format!("h_{} on degrees up to {}", r, hi),
                Err(v) => format!("differs at {}", v),
            },
        ),
    ]
}
