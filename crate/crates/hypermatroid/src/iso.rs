//! Isomorphism of matroids over a hyperfield: a ground bijection combined
//! with a global unit rescaling.
//!
//! `find_isomorphism` searches all bijections, forcing the unit from the
//! first nonzero value, so it is exact but exponential; it refuses ground
//! sets past a small cap. `canonical_form` produces a string that two
//! functions share exactly when they are isomorphic, which scales no better
//! but gives a hashable class key.

use crate::error::{Error, Result};
use crate::hyperfield::Element;
use crate::matroid::{sorted_subsets, sorted_with_parity, GPFunction};
use itertools::Itertools;

/// Largest ground set `find_isomorphism` and `canonical_form` accept.
pub const ISO_GROUND_CAP: usize = 8;

/// A hashable isomorphism-class key: the canonical string plus the grading
/// data it already determines.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoClassKey {
    pub text: String,
    pub size: usize,
    pub rank: usize,
}

impl IsoClassKey {
    /// Rebuilds a key from its string form, which embeds the hyperfield
    /// name, ground size, rank, and value list separated by `|`.
    pub fn parse(text: &str) -> Result<IsoClassKey> {
        let parts: Vec<&str> = text.split('|').collect();
        if parts.len() != 4 || parts.iter().any(|p| p.is_empty()) {
            return Err(Error::BadDocument(format!(
                "class key `{text}` does not have four fields"
            )));
        }
        let size: usize = parts[1].parse().map_err(|_| {
            Error::BadDocument(format!("class key `{text}` has a bad size field"))
        })?;
        let rank: usize = parts[2].parse().map_err(|_| {
            Error::BadDocument(format!("class key `{text}` has a bad rank field"))
        })?;
        Ok(IsoClassKey {
            text: text.to_string(),
            size,
            rank,
        })
    }
}

fn check_cap(n: usize) -> Result<()> {
    if n > ISO_GROUND_CAP {
        return Err(Error::IsoSizeCap {
            size: n,
            cap: ISO_GROUND_CAP,
        });
    }
    Ok(())
}

/// The value of `phi` after relabeling by `perm` (old position `i` becomes
/// `perm[i]`), read at the sorted subset `b`. Alternation supplies the sign
/// of the unsorting permutation.
fn relabeled_value(phi: &GPFunction, perm_inv: &[usize], b: &[usize]) -> Result<Element> {
    let tuple: Vec<usize> = b.iter().map(|&j| perm_inv[j]).collect();
    phi.value_tuple(&tuple)
}

fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

/// Searches for a bijection `f` and unit `a` with `phi2(f(..)) = a *
/// phi1(..)`. Returns the bijection as a position map together with the
/// unit. Both functions must share the hyperfield, ground size, and rank.
pub fn find_isomorphism(
    phi1: &GPFunction,
    phi2: &GPFunction,
) -> Result<Option<(Vec<usize>, Element)>> {
    let h = phi1.hyperfield();
    if h != phi2.hyperfield() {
        return Err(Error::HyperfieldMismatch);
    }
    let n = phi1.ground().len();
    check_cap(n)?;
    if n != phi2.ground().len() || phi1.rank() != phi2.rank() {
        return Ok(None);
    }
    if phi1.support().len() != phi2.support().len() {
        return Ok(None);
    }
    let r = phi1.rank();
    let subsets = sorted_subsets(n, r);
    let anchor = &phi1.support()[0];
    let anchor_inv = h.inv(&phi1.value(anchor))?;
    'perms: for perm in (0..n).permutations(n) {
        // Force the unit at the anchor subset.
        let mapped: Vec<usize> = anchor.iter().map(|&i| perm[i]).collect();
        let (sorted, odd) = sorted_with_parity(&mapped).expect("bijection keeps distinctness");
        let image = h.mul(&h.sign_unit(odd)?, &phi2.value(&sorted))?;
        if h.is_zero(&image) {
            continue;
        }
        let alpha = h.mul(&image, &anchor_inv)?;
        for b in &subsets {
            let mapped: Vec<usize> = b.iter().map(|&i| perm[i]).collect();
            let lhs = phi2.value_tuple(&mapped)?;
            let rhs = h.mul(&alpha, &phi1.value(b))?;
            if lhs != rhs {
                continue 'perms;
            }
        }
        return Ok(Some((perm, alpha)));
    }
    Ok(None)
}

/// The canonical class string: over all relabelings, the lexicographically
/// least list of values, rescaled so the first nonzero value is 1.
pub fn canonical_form(phi: &GPFunction) -> Result<IsoClassKey> {
    let h = phi.hyperfield();
    let n = phi.ground().len();
    check_cap(n)?;
    let r = phi.rank();
    let subsets = sorted_subsets(n, r);
    let mut best: Option<String> = None;
    for perm in (0..n).permutations(n) {
        let perm_inv = invert(&perm);
        let mut values = Vec::with_capacity(subsets.len());
        for b in &subsets {
            values.push(relabeled_value(phi, &perm_inv, b)?);
        }
        let lead = values
            .iter()
            .find(|v| !h.is_zero(v))
            .expect("a nonzero value exists");
        let alpha = h.inv(lead)?;
        let mut parts = Vec::with_capacity(values.len());
        for v in &values {
            parts.push(h.format_element(&h.mul(&alpha, v)?));
        }
        let text = parts.join(",");
        if best.as_ref().map_or(true, |b| text < *b) {
            best = Some(text);
        }
    }
    Ok(IsoClassKey {
        text: format!("{}|{}|{}|{}", h.name(), n, r, best.unwrap()),
        size: n,
        rank: r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::Hyperfield;
    use crate::matroid::GroundSet;
    use std::collections::BTreeMap;

    fn uniform_signs(n: usize, r: usize) -> GPFunction {
        GPFunction::indicator(
            Hyperfield::Signs,
            GroundSet::from_size(n),
            r,
            &sorted_subsets(n, r),
        )
        .unwrap()
    }

    fn flip(phi: &GPFunction, pair: Vec<usize>) -> GPFunction {
        let mut values: BTreeMap<Vec<usize>, Element> = phi
            .entries()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        values.insert(pair, Element::Sign(-1));
        GPFunction::new(
            Hyperfield::Signs,
            phi.ground().clone(),
            phi.rank(),
            values,
        )
        .unwrap()
    }

    #[test]
    fn identity_and_scaling_are_isomorphisms() {
        let phi = uniform_signs(4, 2);
        let (perm, alpha) = find_isomorphism(&phi, &phi).unwrap().unwrap();
        assert_eq!(perm, vec![0, 1, 2, 3]);
        assert_eq!(alpha, Element::Sign(1));
        let scaled = phi.scale(&Element::Sign(-1)).unwrap();
        let (_, alpha) = find_isomorphism(&phi, &scaled).unwrap().unwrap();
        assert_eq!(alpha, Element::Sign(-1));
        assert_eq!(canonical_form(&phi).unwrap(), canonical_form(&scaled).unwrap());
    }

    #[test]
    fn transposition_relabels_the_adjacent_flip() {
        // Swapping two elements of the all-ones orientation negates exactly
        // the values whose sort parity changed, which is the adjacent flip.
        let phi = uniform_signs(4, 2);
        let flipped = flip(&phi, vec![0, 1]);
        let (perm, _) = find_isomorphism(&phi, &flipped).unwrap().unwrap();
        assert_eq!(perm[2..], [2, 3]);
        assert_eq!(&perm[..2], &[1, 0]);
        assert_eq!(
            canonical_form(&phi).unwrap(),
            canonical_form(&flipped).unwrap()
        );
    }

    #[test]
    fn crossing_flip_is_a_different_class() {
        let phi = uniform_signs(4, 2);
        let crossed = flip(&phi, vec![0, 2]);
        assert!(find_isomorphism(&phi, &crossed).unwrap().is_none());
        assert_ne!(
            canonical_form(&phi).unwrap(),
            canonical_form(&crossed).unwrap()
        );
    }

    #[test]
    fn loop_and_parallel_matroids_are_distinguished() {
        // Both have three bases at rank two on four elements; one has a
        // loop, the other a rank-one class of three parallel elements.
        let ground = GroundSet::from_size(4);
        let with_loop = GPFunction::indicator(
            Hyperfield::Krasner,
            ground.clone(),
            2,
            &[vec![1, 2], vec![1, 3], vec![2, 3]],
        )
        .unwrap();
        let with_parallel = GPFunction::indicator(
            Hyperfield::Krasner,
            ground,
            2,
            &[vec![0, 3], vec![1, 3], vec![2, 3]],
        )
        .unwrap();
        assert!(find_isomorphism(&with_loop, &with_parallel)
            .unwrap()
            .is_none());
        assert_ne!(
            canonical_form(&with_loop).unwrap(),
            canonical_form(&with_parallel).unwrap()
        );
    }

    #[test]
    fn ground_cap_is_enforced() {
        let phi = GPFunction::indicator(
            Hyperfield::Krasner,
            GroundSet::from_size(9),
            1,
            &[vec![0]],
        )
        .unwrap();
        assert!(matches!(
            canonical_form(&phi),
            Err(Error::IsoSizeCap { size: 9, cap: 8 })
        ));
    }

    #[test]
    fn key_embeds_grading() {
        let key = canonical_form(&uniform_signs(3, 1)).unwrap();
        assert_eq!(key.size, 3);
        assert_eq!(key.rank, 1);
        assert!(key.text.starts_with("signs|3|1|"));
    }
}
