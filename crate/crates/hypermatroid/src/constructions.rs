//! Minors, direct sums, and pushforwards.
//!
//! Restriction and contraction of a Grassmann-Plucker function both work by
//! freezing a reference base: restriction to `S` appends a fixed base of the
//! contraction by `S`, contraction by `S` prepends a fixed base of the
//! restriction to `S`. Different reference bases give the same class, so the
//! lex-least one is used to keep outputs deterministic.

use crate::error::{Error, Result};
use crate::hyperfield::Homomorphism;
use crate::matroid::circuits::{minimal_support, perp_vectors, CircuitSet, Orthogonality};
use crate::matroid::{sorted_subsets, GPFunction, GroundSet};
use std::collections::BTreeMap;

/// Validates that `subset` is a strictly increasing list of positions in a
/// ground set of size `n`.
fn check_positions(ground: &GroundSet, subset: &[usize]) -> Result<()> {
    for w in subset.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::BadSubset {
                subset: subset.iter().map(|i| i.to_string()).collect(),
                rank: ground.len(),
            });
        }
    }
    if let Some(&last) = subset.last() {
        if last >= ground.len() {
            return Err(Error::BadSubset {
                subset: ground
                    .labels()
                    .iter()
                    .map(|s| s.to_string())
                    .collect(),
                rank: ground.len(),
            });
        }
    }
    Ok(())
}

/// The restriction to the positions in `subset`. Rank drops to the rank of
/// `subset` in the underlying matroid.
pub fn restrict(phi: &GPFunction, subset: &[usize]) -> Result<GPFunction> {
    let ground = phi.ground();
    check_positions(ground, subset)?;
    let h = phi.hyperfield().clone();
    let m = phi.underlying();
    let new_rank = m.rank_of(subset);

    // Reference base: lex-least base of the contraction by the subset,
    // mapped back to original positions.
    let rest = ground.complement(subset);
    let contraction = m.contract(subset);
    let base: Vec<usize> = contraction
        .lex_least_basis()
        .into_iter()
        .map(|i| rest[i])
        .collect();
    debug_assert_eq!(base.len(), phi.rank() - new_rank);

    let new_ground = GroundSet::new(ground.labels_of(subset))?;
    let mut values = BTreeMap::new();
    for x in sorted_subsets(subset.len(), new_rank) {
        let mut tuple: Vec<usize> = x.iter().map(|&i| subset[i]).collect();
        tuple.extend_from_slice(&base);
        let v = phi.value_tuple(&tuple)?;
        if !phi.hyperfield().is_zero(&v) {
            values.insert(x, v);
        }
    }
    GPFunction::new(h, new_ground, new_rank, values)
}

/// The deletion of the positions in `subset`: restriction to the complement.
pub fn delete(phi: &GPFunction, subset: &[usize]) -> Result<GPFunction> {
    check_positions(phi.ground(), subset)?;
    restrict(phi, &phi.ground().complement(subset))
}

/// The contraction by the positions in `subset`. Rank drops by the rank of
/// `subset` in the underlying matroid.
pub fn contract(phi: &GPFunction, subset: &[usize]) -> Result<GPFunction> {
    let ground = phi.ground();
    check_positions(ground, subset)?;
    let h = phi.hyperfield().clone();
    let m = phi.underlying();
    let sub_rank = m.rank_of(subset);
    let new_rank = phi.rank() - sub_rank;

    // Reference base: lex-least base of the restriction to the subset,
    // mapped back to original positions.
    let base: Vec<usize> = m
        .restrict(subset)
        .lex_least_basis()
        .into_iter()
        .map(|i| subset[i])
        .collect();
    debug_assert_eq!(base.len(), sub_rank);

    let rest = ground.complement(subset);
    let new_ground = GroundSet::new(ground.labels_of(&rest))?;
    let mut values = BTreeMap::new();
    for x in sorted_subsets(rest.len(), new_rank) {
        let mut tuple = base.clone();
        tuple.extend(x.iter().map(|&i| rest[i]));
        let v = phi.value_tuple(&tuple)?;
        if !phi.hyperfield().is_zero(&v) {
            values.insert(x, v);
        }
    }
    GPFunction::new(h, new_ground, new_rank, values)
}

/// The direct sum on the concatenated ground set, left labels first. A
/// subset gets a nonzero value only when it splits into a base-sized part
/// on each side, and then the value is the product of the parts.
pub fn direct_sum(left: &GPFunction, right: &GPFunction) -> Result<GPFunction> {
    if left.hyperfield() != right.hyperfield() {
        return Err(Error::HyperfieldMismatch);
    }
    let h = left.hyperfield().clone();
    let nl = left.ground().len();
    let mut labels: Vec<String> = left.ground().labels().to_vec();
    for lab in right.ground().labels() {
        if left.ground().index_of(lab).is_ok() {
            return Err(Error::OverlappingGround(lab.clone()));
        }
        labels.push(lab.clone());
    }
    let ground = GroundSet::new(labels)?;
    let rank = left.rank() + right.rank();
    let mut values = BTreeMap::new();
    for (a, va) in left.entries() {
        for (c, vc) in right.entries() {
            let mut key = a.clone();
            key.extend(c.iter().map(|&i| i + nl));
            values.insert(key, h.mul(va, vc)?);
        }
    }
    GPFunction::new(h, ground, rank, values)
}

/// A copy of `phi` with every ground label prefixed. Useful for forming
/// direct sums of identically labeled pieces.
pub fn prefix_labels(phi: &GPFunction, prefix: &str) -> Result<GPFunction> {
    let labels = phi
        .ground()
        .labels()
        .iter()
        .map(|l| format!("{prefix}{l}"))
        .collect();
    GPFunction::new(
        phi.hyperfield().clone(),
        GroundSet::new(labels)?,
        phi.rank(),
        phi.entries().map(|(k, v)| (k.clone(), v.clone())).collect(),
    )
}

/// The pushforward along a hyperfield homomorphism: values map entrywise.
pub fn pushforward(f: &Homomorphism, phi: &GPFunction) -> Result<GPFunction> {
    if f.source() != phi.hyperfield() {
        return Err(Error::HyperfieldMismatch);
    }
    let mut values = BTreeMap::new();
    for (k, v) in phi.entries() {
        let image = f.apply(v)?;
        if !f.target().is_zero(&image) {
            values.insert(k.clone(), image);
        }
    }
    GPFunction::new(
        f.target().clone(),
        phi.ground().clone(),
        phi.rank(),
        values,
    )
}

/// Circuit-side restriction: keep circuits supported inside `subset` and
/// project their coordinates.
pub fn restrict_circuits(c: &CircuitSet, subset: &[usize]) -> Result<CircuitSet> {
    let ground = c.ground();
    check_positions(ground, subset)?;
    let h = c.hyperfield();
    let new_ground = GroundSet::new(ground.labels_of(subset))?;
    let kept = c
        .vectors()
        .iter()
        .filter(|v| v.support(h).iter().all(|e| subset.contains(e)))
        .map(|v| v.restrict(subset));
    CircuitSet::from_vectors(h.clone(), new_ground, kept.collect::<Vec<_>>())
}

/// Circuit-side deletion.
pub fn delete_circuits(c: &CircuitSet, subset: &[usize]) -> Result<CircuitSet> {
    check_positions(c.ground(), subset)?;
    restrict_circuits(c, &c.ground().complement(subset))
}

/// Circuit-side contraction by a double perpendicular, available over finite
/// hyperfields only: vectors orthogonal to every circuit and supported off
/// `subset` are restricted to the remaining positions, and the circuits of
/// the contraction are the minimal-support vectors orthogonal to all of
/// those restrictions.
pub fn contract_circuits(
    c: &CircuitSet,
    subset: &[usize],
    ortho: Orthogonality,
) -> Result<CircuitSet> {
    let ground = c.ground();
    check_positions(ground, subset)?;
    let h = c.hyperfield();
    let rest = ground.complement(subset);
    let off: Vec<_> = perp_vectors(h, ground.len(), c.vectors(), ortho)?
        .into_iter()
        .filter(|v| v.support(h).iter().all(|e| rest.contains(e)))
        .map(|v| v.restrict(&rest))
        .collect();
    let survivors = perp_vectors(h, rest.len(), &off, ortho)?;
    let minimal = minimal_support(h, survivors);
    CircuitSet::from_vectors(
        h.clone(),
        GroundSet::new(ground.labels_of(&rest))?,
        minimal,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::{Element, Hyperfield};
    use crate::matroid::axioms::{verify_strong_gpf, verify_weak_gpf};
    use crate::matroid::circuits::circuits_from_gpf;

    fn uniform_signs(n: usize, r: usize) -> GPFunction {
        GPFunction::indicator(
            Hyperfield::Signs,
            GroundSet::from_size(n),
            r,
            &sorted_subsets(n, r),
        )
        .unwrap()
    }

    #[test]
    fn restriction_of_uniform_is_uniform() {
        let phi = uniform_signs(5, 2);
        let r = restrict(&phi, &[0, 2, 4]).unwrap();
        assert_eq!(r.rank(), 2);
        assert_eq!(r.ground().labels(), &["1", "3", "5"]);
        assert_eq!(r.support().len(), 3);
        assert!(verify_strong_gpf(&r).unwrap().pass);
    }

    #[test]
    fn contraction_drops_rank_by_subset_rank() {
        let phi = uniform_signs(5, 3);
        let c = contract(&phi, &[1, 3]).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.ground().labels(), &["1", "3", "5"]);
        assert!(verify_strong_gpf(&c).unwrap().pass);
        // Contracting a spanning set leaves rank zero with the empty
        // subset as the only entry.
        let full = contract(&phi, &[0, 1, 2]).unwrap();
        assert_eq!(full.rank(), 0);
        assert_eq!(full.support(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn empty_minors_are_identities() {
        let phi = uniform_signs(4, 2);
        assert!(phi.same_class(&restrict(&phi, &[0, 1, 2, 3]).unwrap()).unwrap());
        assert!(phi.same_class(&delete(&phi, &[]).unwrap()).unwrap());
        assert!(phi.same_class(&contract(&phi, &[]).unwrap()).unwrap());
    }

    #[test]
    fn minors_with_loops_present() {
        // Rank one on three elements where only the first is independent:
        // the other two are loops.
        let ground = GroundSet::from_size(3);
        let phi = GPFunction::indicator(Hyperfield::Krasner, ground, 1, &[vec![0]])
            .unwrap();
        let r = restrict(&phi, &[0, 1]).unwrap();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.support(), vec![vec![0]]);
        let loops_only = restrict(&phi, &[1, 2]).unwrap();
        assert_eq!(loops_only.rank(), 0);
        let c = contract(&phi, &[1]).unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.support(), vec![vec![0]]);
    }

    #[test]
    fn direct_sum_blocks_multiply() {
        let left = uniform_signs(2, 1);
        let right = {
            let phi = uniform_signs(2, 1);
            phi.scale(&Element::Sign(-1)).unwrap()
        };
        let mut relabeled: Vec<String> =
            vec!["a".to_string(), "b".to_string()];
        let right = GPFunction::new(
            Hyperfield::Signs,
            GroundSet::new(relabeled.drain(..).collect()).unwrap(),
            1,
            right
                .entries()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        )
        .unwrap();
        let sum = direct_sum(&left, &right).unwrap();
        assert_eq!(sum.rank(), 2);
        assert_eq!(sum.ground().labels(), &["1", "2", "a", "b"]);
        assert_eq!(sum.value(&[0, 2]), Element::Sign(-1));
        assert_eq!(sum.value(&[0, 1]), Element::Sign(0));
        assert!(verify_weak_gpf(&sum).unwrap().pass);
        assert!(verify_strong_gpf(&sum).unwrap().pass);
    }

    #[test]
    fn direct_sum_rejects_shared_labels() {
        let left = uniform_signs(2, 1);
        let right = uniform_signs(3, 1);
        assert!(matches!(
            direct_sum(&left, &right),
            Err(Error::OverlappingGround(_))
        ));
    }

    #[test]
    fn pushforward_to_krasner_forgets_signs() {
        let phi = uniform_signs(4, 2);
        let f = crate::hyperfield::canonical_to_krasner(&Hyperfield::Signs);
        let k = pushforward(&f, &phi).unwrap();
        assert_eq!(k.hyperfield(), &Hyperfield::Krasner);
        assert_eq!(k.support().len(), 6);
        assert!(k
            .entries()
            .all(|(_, v)| *v == Element::Krasner(true)));
    }

    #[test]
    fn minors_commute_with_pushforward() {
        let phi = uniform_signs(5, 3);
        let f = crate::hyperfield::canonical_to_krasner(&Hyperfield::Signs);
        let s = vec![1, 4];
        let a = pushforward(&f, &restrict(&phi, &s).unwrap()).unwrap();
        let b = restrict(&pushforward(&f, &phi).unwrap(), &s).unwrap();
        assert!(a.same_class(&b).unwrap());
        let a = pushforward(&f, &contract(&phi, &s).unwrap()).unwrap();
        let b = contract(&pushforward(&f, &phi).unwrap(), &s).unwrap();
        assert!(a.same_class(&b).unwrap());
    }

    #[test]
    fn circuit_routes_match_gpf_routes() {
        let phi = uniform_signs(4, 2);
        let c = circuits_from_gpf(&phi).unwrap();
        let s = vec![0, 1, 3];
        let via_gpf = circuits_from_gpf(&restrict(&phi, &s).unwrap()).unwrap();
        let via_circuits = restrict_circuits(&c, &s).unwrap();
        assert_eq!(via_gpf, via_circuits);
        let t = vec![2];
        let via_gpf = circuits_from_gpf(&contract(&phi, &t).unwrap()).unwrap();
        let via_perp = contract_circuits(&c, &t, Orthogonality::Strong).unwrap();
        assert_eq!(via_gpf, via_perp);
    }
}
