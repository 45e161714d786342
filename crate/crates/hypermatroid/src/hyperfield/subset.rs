//! Outputs of hyperaddition: finite sets, tropical down-sets, phase regions.

use super::phase::PhaseRegion;
use super::{Element, Hyperfield, Trop};
use crate::error::{Error, Result};
use num_rational::BigRational;
use std::collections::BTreeSet;

/// A subset of a hyperfield carrier, in the canonical representation for its kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperSubset {
    /// Explicit finite set (Krasner, signs, tables, and tropical singletons).
    Finite(BTreeSet<Element>),
    /// Tropical down-set `[-inf, bound]` with a finite rational bound.
    TropicalDown(BigRational),
    /// Region of the phase circle.
    Phase(PhaseRegion),
}

impl HyperSubset {
    pub fn singleton(e: Element) -> Self {
        match e {
            Element::Phase(p) => HyperSubset::Phase(match p {
                super::PhaseEl::Zero => PhaseRegion::zero_only(),
                super::PhaseEl::Turn(t) => PhaseRegion::single_turn(&t),
            }),
            other => {
                let mut s = BTreeSet::new();
                s.insert(other);
                HyperSubset::Finite(s)
            }
        }
    }

    pub fn from_elements(elems: impl IntoIterator<Item = Element>) -> Self {
        let mut phase = PhaseRegion::empty();
        let mut finite = BTreeSet::new();
        let mut any_phase = false;
        for e in elems {
            match e {
                Element::Phase(super::PhaseEl::Zero) => {
                    any_phase = true;
                    phase.zero = true;
                }
                Element::Phase(super::PhaseEl::Turn(t)) => {
                    any_phase = true;
                    phase.points.insert(t);
                }
                other => {
                    finite.insert(other);
                }
            }
        }
        if any_phase {
            HyperSubset::Phase(phase)
        } else {
            HyperSubset::Finite(finite)
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (HyperSubset::Finite(s), e) => s.contains(e),
            (HyperSubset::TropicalDown(bound), Element::Tropical(t)) => match t {
                Trop::Bottom => true,
                Trop::Val(q) => q <= bound,
            },
            (HyperSubset::Phase(r), Element::Phase(p)) => match p {
                super::PhaseEl::Zero => r.zero,
                super::PhaseEl::Turn(t) => r.contains_turn(t),
            },
            _ => false,
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            HyperSubset::Finite(s) => s.is_empty(),
            HyperSubset::TropicalDown(_) => false,
            HyperSubset::Phase(r) => r.is_empty(),
        }
    }

    /// Whether the subset contains any nonzero element of `h`.
    pub fn contains_nonzero(&self, h: &Hyperfield) -> bool {
        match self {
            HyperSubset::Finite(s) => {
                let z = h.zero();
                s.iter().any(|e| *e != z)
            }
            HyperSubset::TropicalDown(_) => true,
            HyperSubset::Phase(r) => r.has_nonzero(),
        }
    }

    /// Scale every member by a unit of `h`.
    pub fn scale(&self, h: &Hyperfield, a: &Element) -> Result<HyperSubset> {
        if *a == h.zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match self {
            HyperSubset::Finite(s) => {
                let mut out = BTreeSet::new();
                for e in s {
                    out.insert(h.mul(a, e)?);
                }
                HyperSubset::Finite(out)
            }
            HyperSubset::TropicalDown(bound) => match a {
                Element::Tropical(Trop::Val(q)) => HyperSubset::TropicalDown(bound + q),
                _ => return Err(Error::HyperfieldMismatch),
            },
            HyperSubset::Phase(r) => match a {
                Element::Phase(super::PhaseEl::Turn(t)) => HyperSubset::Phase(r.rotate(t)),
                _ => return Err(Error::HyperfieldMismatch),
            },
        })
    }

    /// Enumerate the members of a finite subset. Tropical down-sets and phase
    /// regions with arcs have no finite enumeration and return an error.
    pub fn elements(&self, h: &Hyperfield) -> Result<Vec<Element>> {
        match self {
            HyperSubset::Finite(s) => Ok(s.iter().cloned().collect()),
            HyperSubset::Phase(r) if r.arcs.is_empty() => {
                let mut out = Vec::new();
                if r.zero {
                    out.push(Element::Phase(super::PhaseEl::Zero));
                }
                out.extend(
                    r.points
                        .iter()
                        .map(|t| Element::Phase(super::PhaseEl::Turn(t.clone()))),
                );
                Ok(out)
            }
            _ => Err(Error::InfiniteHyperfield {
                op: "elements",
                hyperfield: h.name(),
            }),
        }
    }

    /// Exact intersection; the result may be empty.
    pub fn intersect(&self, other: &HyperSubset) -> HyperSubset {
        match (self, other) {
            (HyperSubset::Finite(a), b) => {
                HyperSubset::Finite(a.iter().filter(|e| b.contains(e)).cloned().collect())
            }
            (a, HyperSubset::Finite(b)) => {
                HyperSubset::Finite(b.iter().filter(|e| a.contains(e)).cloned().collect())
            }
            (HyperSubset::TropicalDown(a), HyperSubset::TropicalDown(b)) => {
                HyperSubset::TropicalDown(a.min(b).clone())
            }
            (HyperSubset::Phase(a), HyperSubset::Phase(b)) => HyperSubset::Phase(a.intersect(b)),
            _ => HyperSubset::Finite(BTreeSet::new()),
        }
    }
}
