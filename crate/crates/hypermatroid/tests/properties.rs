//! Randomized properties. The headline test checks the sorted-subset
//! axiom checkers against a brute-force oracle that ranges over every
//! tuple, repeats and all orderings included.

mod common;

use common::uniform;
use hypermatroid::hyperfield::{Element, Hyperfield, HyperSubset};
use hypermatroid::iso::canonical_form;
use hypermatroid::matroid::axioms::{verify_strong_gpf, verify_weak_gpf};
use hypermatroid::matroid::{sorted_subsets, GPFunction, GroundSet};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn all_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |e| {
                    let mut u = t.clone();
                    u.push(e);
                    u
                })
            })
            .collect();
    }
    out
}

/// Three-term relation over every tuple, not just sorted representatives.
fn oracle_weak(phi: &GPFunction) -> bool {
    let h = phi.hyperfield();
    let n = phi.ground().len();
    let r = phi.rank();
    if r < 2 {
        return true;
    }
    let prod = |first: &[usize], ctx: &[usize], second: &[usize], ctx2: &[usize]| {
        let mut t1 = first.to_vec();
        t1.extend_from_slice(ctx);
        let mut t2 = second.to_vec();
        t2.extend_from_slice(ctx2);
        h.mul(&phi.value_tuple(&t1).unwrap(), &phi.value_tuple(&t2).unwrap())
            .unwrap()
    };
    for quad in all_tuples(n, 4) {
        let (a, b, c, d) = (quad[0], quad[1], quad[2], quad[3]);
        for x in all_tuples(n, r - 2) {
            let p1 = prod(&[a, b], &x, &[c, d], &x);
            let p2 = prod(&[a, c], &x, &[b, d], &x);
            let p3 = prod(&[b, c], &x, &[a, d], &x);
            let terms = [p1, h.neg(&p2).unwrap(), p3];
            if !h.hypersum(&terms).unwrap().contains(&h.zero()) {
                return false;
            }
        }
    }
    true
}

/// Full contraction relation over every pair of tuples.
fn oracle_strong(phi: &GPFunction) -> bool {
    let h = phi.hyperfield();
    let n = phi.ground().len();
    let r = phi.rank();
    if r < 1 {
        return true;
    }
    for x in all_tuples(n, r + 1) {
        for y in all_tuples(n, r - 1) {
            let mut terms = Vec::new();
            for k in 0..=r {
                let mut left: Vec<usize> = x.clone();
                left.remove(k);
                let mut right = vec![x[k]];
                right.extend_from_slice(&y);
                let p = h
                    .mul(
                        &phi.value_tuple(&left).unwrap(),
                        &phi.value_tuple(&right).unwrap(),
                    )
                    .unwrap();
                terms.push(if k % 2 == 0 { p } else { h.neg(&p).unwrap() });
            }
            if !h.hypersum(&terms).unwrap().contains(&h.zero()) {
                return false;
            }
        }
    }
    true
}

fn sign_function(n: usize, r: usize, signs: &[i8]) -> Option<GPFunction> {
    let subsets = sorted_subsets(n, r);
    assert_eq!(subsets.len(), signs.len());
    let mut values = BTreeMap::new();
    for (subset, s) in subsets.into_iter().zip(signs) {
        if *s != 0 {
            values.insert(subset, Element::Sign(*s));
        }
    }
    if values.is_empty() {
        return None;
    }
    Some(GPFunction::new(Hyperfield::Signs, GroundSet::from_size(n), r, values).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn sorted_checkers_agree_with_full_tuple_oracle(
        signs in proptest::collection::vec(-1i8..=1, 6),
    ) {
        if let Some(phi) = sign_function(4, 2, &signs) {
            prop_assert_eq!(verify_weak_gpf(&phi).unwrap().pass, oracle_weak(&phi));
            prop_assert_eq!(verify_strong_gpf(&phi).unwrap().pass, oracle_strong(&phi));
        }
    }

    #[test]
    fn rank_three_checkers_agree_with_oracle(
        signs in proptest::collection::vec(-1i8..=1, 4),
    ) {
        if let Some(phi) = sign_function(4, 3, &signs) {
            prop_assert_eq!(verify_weak_gpf(&phi).unwrap().pass, oracle_weak(&phi));
            prop_assert_eq!(verify_strong_gpf(&phi).unwrap().pass, oracle_strong(&phi));
        }
    }

    #[test]
    fn tropical_addition_keeps_the_maximum(
        a in -20i64..20, b in -20i64..20, d in 1i64..6,
    ) {
        let h = Hyperfield::Tropical;
        let x = Element::tropical(a, d);
        let y = Element::tropical(b, d);
        let sum = h.hyperadd(&x, &y).unwrap();
        let max = if a >= b { x.clone() } else { y.clone() };
        prop_assert!(sum.contains(&max));
        if a != b {
            // distinct values add to the larger one only
            prop_assert!(!sum.contains(&h.zero()));
            let other = if a >= b { y } else { x };
            prop_assert!(!sum.contains(&other));
        } else {
            // equal values absorb everything below
            prop_assert!(sum.contains(&h.zero()));
            prop_assert!(sum.contains(&Element::tropical(a - 1, d)));
            prop_assert!(!sum.contains(&Element::tropical(a + 1, d)));
        }
    }

    #[test]
    fn phase_addition_is_an_arc_between_the_summands(
        p in 0i64..12, q in 0i64..12,
    ) {
        let h = Hyperfield::Phase;
        let x = Element::phase_turn(p, 12);
        let y = Element::phase_turn(q, 12);
        let sum = h.hyperadd(&x, &y).unwrap();
        let antipodal = (p - q).rem_euclid(12) == 6;
        prop_assert_eq!(sum.contains(&h.zero()), antipodal);
        if p == q {
            // equal phases stay put
            prop_assert!(sum.contains(&x));
            prop_assert!(!sum.contains(&Element::phase_turn(p + 1, 12)));
        } else if antipodal {
            // opposite phases can cancel or tilt either way
            prop_assert!(sum.contains(&x));
            prop_assert!(sum.contains(&y));
        } else {
            // otherwise the sum is the open arc strictly between the two
            prop_assert!(!sum.contains(&x));
            prop_assert!(!sum.contains(&y));
            let wraps = (p - q).abs() > 6;
            let mid = Element::phase_turn(p + q + if wraps { 12 } else { 0 }, 24);
            prop_assert!(sum.contains(&mid));
            prop_assert!(!sum.contains(&h.neg(&mid).unwrap()));
        }
    }

    #[test]
    fn elements_round_trip_through_text(
        num in -40i64..40, den in 1i64..9, twelfth in 0i64..12, s in -1i8..=1,
    ) {
        for (h, e) in [
            (Hyperfield::Tropical, Element::tropical(num, den)),
            (Hyperfield::Phase, Element::phase_turn(twelfth, 12)),
            (Hyperfield::Signs, Element::Sign(s)),
            (Hyperfield::Krasner, Element::Krasner(s != 0)),
        ] {
            let text = h.format_element(&e);
            prop_assert_eq!(h.parse_element(&text).unwrap(), e);
        }
    }

    #[test]
    fn matroid_documents_round_trip_exactly(
        signs in proptest::collection::vec(-1i8..=1, 6),
    ) {
        if let Some(phi) = sign_function(4, 2, &signs) {
            let doc = hypermatroid::io::matroid_to_doc(&phi);
            let json = hypermatroid::io::to_canonical_json(&doc).unwrap();
            let back = hypermatroid::io::parse_matroid(&json).unwrap();
            prop_assert_eq!(back, phi);
        }
    }

    #[test]
    fn canonical_form_is_invariant_under_scaling_and_relabeling(
        signs in proptest::collection::vec(-1i8..=1, 6),
        flip in any::<bool>(),
        rot in 0usize..4,
    ) {
        if let Some(phi) = sign_function(4, 2, &signs) {
            let unit = Element::Sign(if flip { -1 } else { 1 });
            let scaled = phi.scale(&unit).unwrap();
            prop_assert_eq!(canonical_form(&scaled).unwrap(), canonical_form(&phi).unwrap());

            // relabel by a rotation: push every value through the permutation
            let n = 4usize;
            let perm: Vec<usize> = (0..n).map(|i| (i + rot) % n).collect();
            let mut values = BTreeMap::new();
            for subset in sorted_subsets(n, 2) {
                let src: Vec<usize> = subset.iter().map(|&i| perm[i]).collect();
                let v = phi.value_tuple(&src).unwrap();
                if !Hyperfield::Signs.is_zero(&v) {
                    values.insert(subset, v);
                }
            }
            let relabeled =
                GPFunction::new(Hyperfield::Signs, GroundSet::from_size(n), 2, values).unwrap();
            prop_assert_eq!(canonical_form(&relabeled).unwrap(), canonical_form(&phi).unwrap());
        }
    }
}

#[test]
fn finite_hyperfield_addition_laws_hold_everywhere() {
    for h in [Hyperfield::Krasner, Hyperfield::Signs] {
        let carrier = h.carrier().unwrap();
        for a in &carrier {
            for b in &carrier {
                let ab = h.hyperadd(a, b).unwrap();
                let ba = h.hyperadd(b, a).unwrap();
                assert_eq!(
                    ab.elements(&h).unwrap(),
                    ba.elements(&h).unwrap(),
                    "{}: commutativity at {a:?} {b:?}",
                    h.name()
                );
                // reversibility: zero appears exactly against the negation
                assert_eq!(
                    ab.contains(&h.zero()),
                    *b == h.neg(a).unwrap(),
                    "{}: reversibility at {a:?} {b:?}",
                    h.name()
                );
                for c in &carrier {
                    let left: Vec<Element> = {
                        let mut out = Vec::new();
                        for x in ab.elements(&h).unwrap() {
                            out.extend(h.hyperadd(&x, c).unwrap().elements(&h).unwrap());
                        }
                        out.sort();
                        out.dedup();
                        out
                    };
                    let bc = h.hyperadd(b, c).unwrap();
                    let right: Vec<Element> = {
                        let mut out = Vec::new();
                        for x in bc.elements(&h).unwrap() {
                            out.extend(h.hyperadd(a, &x).unwrap().elements(&h).unwrap());
                        }
                        out.sort();
                        out.dedup();
                        out
                    };
                    assert_eq!(left, right, "{}: associativity", h.name());
                }
            }
        }
    }
}

#[test]
fn hypersum_agrees_with_folded_pairwise_sums() {
    let h = Hyperfield::Signs;
    let carrier = h.carrier().unwrap();
    for a in &carrier {
        for b in &carrier {
            for c in &carrier {
                let direct = h.hypersum(&[a.clone(), b.clone(), c.clone()]).unwrap();
                let mut folded = HyperSubset::from_elements([a.clone()]);
                for next in [b, c] {
                    let mut out = Vec::new();
                    for x in folded.elements(&h).unwrap() {
                        out.extend(h.hyperadd(&x, next).unwrap().elements(&h).unwrap());
                    }
                    folded = HyperSubset::from_elements(out);
                }
                assert_eq!(
                    direct.elements(&h).unwrap(),
                    folded.elements(&h).unwrap(),
                    "fold mismatch at {a:?} {b:?} {c:?}"
                );
            }
        }
    }
}

#[test]
fn duality_is_an_involution_on_random_valid_functions() {
    // exhaustively walk the rank-two sign functions on four elements and
    // keep the valid ones; the checkers and the oracle agree per the
    // property above, so validity here means the real thing
    let mut valid = 0usize;
    for mask in 0..3u32.pow(6) {
        let mut m = mask;
        let mut signs = [0i8; 6];
        for s in signs.iter_mut() {
            *s = (m % 3) as i8 - 1;
            m /= 3;
        }
        let Some(phi) = sign_function(4, 2, &signs) else {
            continue;
        };
        if !verify_strong_gpf(&phi).unwrap().pass {
            continue;
        }
        valid += 1;
        let dd = phi.dual().unwrap().dual().unwrap();
        assert!(dd.same_class(&phi).unwrap());
        assert_eq!(
            canonical_form(&phi.dual().unwrap()).unwrap().rank,
            phi.ground().len() - phi.rank()
        );
    }
    assert!(valid > 20, "expected plenty of valid orientations, saw {valid}");
    let u24 = uniform(Hyperfield::Signs, 4, 2);
    assert!(u24.dual().unwrap().dual().unwrap().same_class(&u24).unwrap());
}
