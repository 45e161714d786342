//! Circuit vectors of a matroid over a hyperfield.
//!
//! A circuit is a function from the ground set to `H`; the family is closed
//! under scaling by units, so a circuit set stores one normalized
//! representative per orbit (value 1 at the least support position). The
//! orthogonality notions and the brute-force perpendicular computation used
//! for duality both live here.

use crate::error::{Error, Result};
use crate::hyperfield::{Element, HyperSubset, Hyperfield};
use crate::matroid::{GPFunction, GroundSet};
use std::collections::BTreeSet;

/// Default bound on brute-force enumerations of `H^n`.
pub const DEFAULT_PERP_CAP: u128 = 10_000_000;

/// Enumeration bound, overridable through the `HYPERMATROID_MAX_PERP`
/// environment variable.
pub fn perp_cap() -> u128 {
    std::env::var("HYPERMATROID_MAX_PERP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_PERP_CAP)
}

/// A dense vector over a hyperfield carrier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HVector {
    coords: Vec<Element>,
}

impl HVector {
    pub fn new(h: &Hyperfield, coords: Vec<Element>) -> Result<HVector> {
        for c in &coords {
            h.check(c)?;
        }
        Ok(HVector { coords })
    }

    pub fn zero(h: &Hyperfield, n: usize) -> HVector {
        HVector {
            coords: vec![h.zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, i: usize) -> &Element {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, v: Element) {
        self.coords[i] = v;
    }

    pub fn coords(&self) -> &[Element] {
        &self.coords
    }

    pub fn support(&self, h: &Hyperfield) -> Vec<usize> {
        let z = h.zero();
        (0..self.coords.len())
            .filter(|&i| self.coords[i] != z)
            .collect()
    }

    pub fn is_zero(&self, h: &Hyperfield) -> bool {
        let z = h.zero();
        self.coords.iter().all(|c| *c == z)
    }

    pub fn scale(&self, h: &Hyperfield, a: &Element) -> Result<HVector> {
        if h.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        let coords = self
            .coords
            .iter()
            .map(|c| h.mul(a, c))
            .collect::<Result<_>>()?;
        Ok(HVector { coords })
    }

    /// Scale so the least support position takes value 1.
    pub fn normalize(&self, h: &Hyperfield) -> Result<HVector> {
        let lead = self
            .coords
            .iter()
            .find(|c| !h.is_zero(c))
            .ok_or(Error::IdenticallyZero)?;
        self.scale(h, &h.inv(lead)?)
    }

    /// The restriction to sorted positions, reindexed to `0..positions.len()`.
    pub fn restrict(&self, positions: &[usize]) -> HVector {
        HVector {
            coords: positions.iter().map(|&i| self.coords[i].clone()).collect(),
        }
    }

    /// The dot product, a subset of `H`.
    pub fn dot(&self, h: &Hyperfield, other: &HVector) -> Result<HyperSubset> {
        h.hypersum(&self.products(h, other)?)
    }

    fn products(&self, h: &Hyperfield, other: &HVector) -> Result<Vec<Element>> {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        let z = h.zero();
        let mut terms = Vec::new();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if *a != z && *b != z {
                terms.push(h.mul(a, b)?);
            }
        }
        Ok(terms)
    }

    /// Strong orthogonality: the dot product contains zero.
    pub fn strong_orthogonal(&self, h: &Hyperfield, other: &HVector) -> Result<bool> {
        h.contains_zero(&self.products(h, other)?)
    }

    /// Weak orthogonality: strong orthogonality, or supports sharing more
    /// than three positions.
    pub fn weak_orthogonal(&self, h: &Hyperfield, other: &HVector) -> Result<bool> {
        if self.strong_orthogonal(h, other)? {
            return Ok(true);
        }
        let z = h.zero();
        let common = self
            .coords
            .iter()
            .zip(&other.coords)
            .filter(|(a, b)| **a != z && **b != z)
            .count();
        Ok(common > 3)
    }
}

/// Which orthogonality relation to use in perpendicular computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orthogonality {
    Weak,
    Strong,
}

impl Orthogonality {
    pub fn holds(self, h: &Hyperfield, x: &HVector, y: &HVector) -> Result<bool> {
        match self {
            Orthogonality::Weak => x.weak_orthogonal(h, y),
            Orthogonality::Strong => x.strong_orthogonal(h, y),
        }
    }
}

/// A family of circuit orbits: normalized representatives, sorted and
/// deduplicated. May be empty (a matroid with no circuits).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitSet {
    h: Hyperfield,
    ground: GroundSet,
    vectors: Vec<HVector>,
}

impl CircuitSet {
    pub fn from_vectors(
        h: Hyperfield,
        ground: GroundSet,
        vectors: impl IntoIterator<Item = HVector>,
    ) -> Result<CircuitSet> {
        let mut normalized = Vec::new();
        for v in vectors {
            if v.len() != ground.len() {
                return Err(Error::ShapeMismatch);
            }
            normalized.push(v.normalize(&h)?);
        }
        normalized.sort_by(|a, b| {
            (a.support(&h), &a.coords).cmp(&(b.support(&h), &b.coords))
        });
        normalized.dedup();
        Ok(CircuitSet {
            h,
            ground,
            vectors: normalized,
        })
    }

    pub fn hyperfield(&self) -> &Hyperfield {
        &self.h
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn vectors(&self) -> &[HVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// The distinct supports, the circuits of the underlying matroid.
    pub fn supports(&self) -> Vec<Vec<usize>> {
        let set: BTreeSet<Vec<usize>> = self
            .vectors
            .iter()
            .map(|v| v.support(&self.h))
            .collect();
        set.into_iter().collect()
    }

    /// Perpendicular set with minimal support: the cocircuit orbits.
    /// Brute force over `H^n`; requires a finite hyperfield.
    pub fn perp_minimal(&self, ortho: Orthogonality) -> Result<CircuitSet> {
        let survivors = perp_vectors(&self.h, self.ground.len(), &self.vectors, ortho)?;
        let minimal = minimal_support(&self.h, survivors);
        CircuitSet::from_vectors(self.h.clone(), self.ground.clone(), minimal)
    }
}

/// All nonzero vectors in `H^n` orthogonal to every vector in `against`.
pub fn perp_vectors(
    h: &Hyperfield,
    n: usize,
    against: &[HVector],
    ortho: Orthogonality,
) -> Result<Vec<HVector>> {
    let carrier = h.carrier()?;
    let base = carrier.len() as u128;
    let total = base
        .checked_pow(n as u32)
        .ok_or(Error::CapExceeded {
            op: "perp",
            needed: u128::MAX,
            cap: perp_cap(),
        })?;
    if total > perp_cap() {
        return Err(Error::CapExceeded {
            op: "perp",
            needed: total,
            cap: perp_cap(),
        });
    }
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    for step in 0..total {
        if step > 0 {
            let mut i = 0;
            while i < n {
                digits[i] += 1;
                if digits[i] < carrier.len() {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
        let v = HVector {
            coords: digits.iter().map(|&d| carrier[d].clone()).collect(),
        };
        if v.is_zero(h) {
            continue;
        }
        let mut ok = true;
        for y in against {
            if !ortho.holds(h, &v, y)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(v);
        }
    }
    Ok(out)
}

/// Keep the vectors whose support is minimal within the collection.
pub fn minimal_support(h: &Hyperfield, vectors: Vec<HVector>) -> Vec<HVector> {
    let supports: Vec<Vec<usize>> = vectors.iter().map(|v| v.support(h)).collect();
    vectors
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !supports.iter().enumerate().any(|(j, s)| {
                j != *i
                    && s.len() < supports[*i].len()
                    && super::underlying::is_subset(s, &supports[*i])
            })
        })
        .map(|(_, v)| v.clone())
        .collect()
}

/// The circuit orbits of a Grassmann-Plucker function: for every basis `B`
/// of the support and every `e` outside it, the fundamental circuit vector
/// determined by alternation, normalized and deduplicated.
pub fn circuits_from_gpf(phi: &GPFunction) -> Result<CircuitSet> {
    let h = phi.hyperfield().clone();
    let ground = phi.ground().clone();
    let n = ground.len();
    let mut vectors = Vec::new();
    for basis in phi.support() {
        let inv_phi = h.inv(&phi.value(&basis))?;
        for e in 0..n {
            if basis.contains(&e) {
                continue;
            }
            let mut x = HVector::zero(&h, n);
            x.set(e, h.one());
            for (i, &b) in basis.iter().enumerate() {
                // 1-based position of b in the ordered basis.
                let sign = h.sign_unit((i + 1) % 2 == 1)?;
                let mut tuple = Vec::with_capacity(basis.len());
                tuple.push(e);
                tuple.extend(basis.iter().copied().filter(|&c| c != b));
                let val = phi.value_tuple(&tuple)?;
                x.set(b, h.mul(&sign, &h.mul(&val, &inv_phi)?)?);
            }
            vectors.push(x);
        }
    }
    CircuitSet::from_vectors(h, ground, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::sorted_subsets;

    fn signs(v: &[i8]) -> HVector {
        HVector {
            coords: v.iter().map(|&s| Element::Sign(s)).collect(),
        }
    }

    #[test]
    fn fundamental_circuits_of_uniform_signs() {
        let ground = GroundSet::from_size(4);
        let phi =
            GPFunction::indicator(Hyperfield::Signs, ground, 2, &sorted_subsets(4, 2)).unwrap();
        let c = circuits_from_gpf(&phi).unwrap();
        // Uniform rank 2 on 4 elements: one circuit orbit per 3-subset.
        assert_eq!(c.len(), 4);
        assert_eq!(c.supports(), sorted_subsets(4, 3));
        let expected = signs(&[1, -1, 1, 0]);
        assert!(c.vectors().contains(&expected));
    }

    #[test]
    fn orthogonality_over_signs() {
        let h = Hyperfield::Signs;
        let x = signs(&[1, -1, 1, 0]);
        let y = signs(&[1, 1, 0, -1]);
        // Products: +1, -1: mixed signs, so the dot product contains zero.
        assert!(x.strong_orthogonal(&h, &y).unwrap());
        let z = signs(&[1, 0, 1, 0]);
        assert!(!x.strong_orthogonal(&h, &z).unwrap());
        assert!(!x.weak_orthogonal(&h, &z).unwrap());
        // Four common support positions always count as weakly orthogonal.
        let w = signs(&[1, 1, 1, 1]);
        let v = signs(&[1, 1, 1, 1]);
        assert!(w.weak_orthogonal(&h, &v).unwrap());
        assert!(!w.strong_orthogonal(&h, &v).unwrap());
    }

    #[test]
    fn perp_of_uniform_circuits_gives_cocircuits() {
        let ground = GroundSet::from_size(4);
        let phi = GPFunction::indicator(
            Hyperfield::Signs,
            ground,
            2,
            &sorted_subsets(4, 2),
        )
        .unwrap();
        let c = circuits_from_gpf(&phi).unwrap();
        let cocircuits = c.perp_minimal(Orthogonality::Strong).unwrap();
        // The dual is uniform of rank 2 again: supports are the 3-subsets.
        assert_eq!(cocircuits.supports(), sorted_subsets(4, 3));
        let dual_circuits = circuits_from_gpf(&phi.dual().unwrap()).unwrap();
        assert_eq!(cocircuits, dual_circuits);
    }

    #[test]
    fn normalization_and_dedup_collapse_orbits() {
        let h = Hyperfield::Signs;
        let ground = GroundSet::from_size(3);
        let a = signs(&[1, -1, 0]);
        let b = signs(&[-1, 1, 0]);
        let c = CircuitSet::from_vectors(h, ground, [a.clone(), b]).unwrap();
        assert_eq!(c.vectors(), &[a]);
    }

    #[test]
    fn tropical_dot_products() {
        let h = Hyperfield::Tropical;
        let x = HVector::new(
            &h,
            vec![Element::tropical(0, 1), Element::tropical(1, 1)],
        )
        .unwrap();
        let y = HVector::new(
            &h,
            vec![Element::tropical(1, 1), Element::tropical(0, 1)],
        )
        .unwrap();
        // Both products hit the maximum 1, so zero is attainable.
        assert!(x.strong_orthogonal(&h, &y).unwrap());
        let z = HVector::new(
            &h,
            vec![Element::tropical(0, 1), Element::tropical(0, 1)],
        )
        .unwrap();
        assert!(!x.strong_orthogonal(&h, &z).unwrap());
    }
}
