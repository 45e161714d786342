//! Two antipode constructions that must agree.
//!
//! The summation formula expands iterated coproducts, projects away the
//! unit component in every slot, multiplies back down, and alternates
//! signs; grading truncates the sum. The recursive formula solves the
//! antipode identity degree by degree on generators and extends
//! multiplicatively.

use super::{AlgebraElement, ClassRegistry, Coeff, Monomial};
use crate::error::Result;
use crate::iso::IsoClassKey;
use num_traits::One;
use std::collections::BTreeMap;

/// The summation antipode, extended linearly.
pub fn takeuchi_antipode(
    reg: &ClassRegistry,
    elt: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::zero();
    for (m, c) in elt.terms() {
        out = out.add(&takeuchi_monomial(reg, m)?.scale(c));
    }
    Ok(out)
}

fn takeuchi_monomial(reg: &ClassRegistry, m: &Monomial) -> Result<AlgebraElement> {
    let degree = m.degree();
    // Width zero contributes the counit part.
    let mut result = if m.is_unit() {
        AlgebraElement::unit()
    } else {
        AlgebraElement::zero()
    };
    // Width-i tensors of the iterated coproduct, expanded in the last slot.
    let mut tensors: BTreeMap<Vec<Monomial>, Coeff> =
        BTreeMap::from([(vec![m.clone()], Coeff::one())]);
    for width in 1..=degree {
        if width > 1 {
            let mut next: BTreeMap<Vec<Monomial>, Coeff> = BTreeMap::new();
            for (tuple, c) in &tensors {
                let last = tuple.last().expect("width is positive");
                for ((a, b), dc) in reg.coproduct_monomial(last)?.terms() {
                    let mut t = tuple[..tuple.len() - 1].to_vec();
                    t.push(a.clone());
                    t.push(b.clone());
                    let entry = next.entry(t).or_insert_with(num_traits::Zero::zero);
                    *entry += c * dc;
                }
            }
            tensors = next;
        }
        // Project every slot away from the unit, multiply, alternate sign.
        let sign = if width % 2 == 1 {
            -Coeff::one()
        } else {
            Coeff::one()
        };
        for (tuple, c) in &tensors {
            if tuple.iter().any(|slot| slot.is_unit()) {
                continue;
            }
            let product = tuple
                .iter()
                .fold(Monomial::unit(), |acc, slot| acc.mul(slot));
            result.add_term(product, c * &sign);
        }
        // A tuple with a unit slot keeps one under every further
        // expansion, so it can never contribute again.
        tensors.retain(|tuple, _| !tuple.iter().any(|slot| slot.is_unit()));
    }
    Ok(result)
}

/// The recursive antipode, extended multiplicatively over generators.
pub fn recursive_antipode(
    reg: &ClassRegistry,
    elt: &AlgebraElement,
) -> Result<AlgebraElement> {
    let mut memo: BTreeMap<IsoClassKey, AlgebraElement> = BTreeMap::new();
    let mut out = AlgebraElement::zero();
    for (m, c) in elt.terms() {
        out = out.add(&recursive_monomial(reg, m, &mut memo)?.scale(c));
    }
    Ok(out)
}

fn recursive_monomial(
    reg: &ClassRegistry,
    m: &Monomial,
    memo: &mut BTreeMap<IsoClassKey, AlgebraElement>,
) -> Result<AlgebraElement> {
    let mut out = AlgebraElement::unit();
    for key in m.keys() {
        let s = recursive_generator(reg, key, memo)?;
        out = out.mul(&s);
    }
    Ok(out)
}

fn recursive_generator(
    reg: &ClassRegistry,
    key: &IsoClassKey,
    memo: &mut BTreeMap<IsoClassKey, AlgebraElement>,
) -> Result<AlgebraElement> {
    if let Some(s) = memo.get(key) {
        return Ok(s.clone());
    }
    let g = Monomial::generator(key.clone());
    // S(g) = -g - sum of S(a) * b over the proper coproduct terms: the
    // slots of a proper term both have degree strictly below g.
    let mut s = AlgebraElement::from_monomial(g.clone()).neg();
    for ((a, b), c) in reg.generator_coproduct(key)?.terms() {
        if a.is_unit() || b.is_unit() {
            continue;
        }
        let sa = recursive_monomial(reg, a, memo)?;
        let term = sa.mul(&AlgebraElement::from_monomial(b.clone()));
        s = s.add(&term.scale(&-c.clone()));
    }
    memo.insert(key.clone(), s.clone());
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::tests::{empty_matroid, uniform_krasner};

    #[test]
    fn antipode_of_unit_is_unit() {
        let reg = ClassRegistry::new();
        reg.register(&empty_matroid()).unwrap();
        let one = AlgebraElement::unit();
        assert_eq!(takeuchi_antipode(&reg, &one).unwrap(), one);
        assert_eq!(recursive_antipode(&reg, &one).unwrap(), one);
    }

    #[test]
    fn antipode_of_a_primitive_is_its_negative() {
        let reg = ClassRegistry::new();
        let g = reg.register(&uniform_krasner(1, 1)).unwrap();
        let x = AlgebraElement::from_monomial(g);
        let expected = x.neg();
        assert_eq!(takeuchi_antipode(&reg, &x).unwrap(), expected);
        assert_eq!(recursive_antipode(&reg, &x).unwrap(), expected);
    }

    #[test]
    fn antipode_of_the_parallel_pair() {
        // S on the two-element rank-one class picks up twice the product
        // of the free class and the loop class.
        let reg = ClassRegistry::new();
        let pair = reg.register(&uniform_krasner(2, 1)).unwrap();
        let free = reg.register(&uniform_krasner(1, 1)).unwrap();
        let looped = reg.register(&uniform_krasner(1, 0)).unwrap();
        let x = AlgebraElement::from_monomial(pair.clone());
        let mut expected = x.neg();
        expected.add_term(free.mul(&looped), Coeff::from_integer(2.into()));
        let s = takeuchi_antipode(&reg, &x).unwrap();
        assert_eq!(s, expected);
        assert_eq!(recursive_antipode(&reg, &x).unwrap(), s);
    }

    #[test]
    fn antipode_identity_on_small_classes() {
        // mu (S tensor id) Delta collapses to the counit part.
        let reg = ClassRegistry::new();
        for phi in [
            uniform_krasner(2, 1),
            uniform_krasner(3, 1),
            uniform_krasner(3, 2),
        ] {
            let m = reg.register(&phi).unwrap();
            let delta = reg.coproduct_monomial(&m).unwrap();
            let mut folded = AlgebraElement::zero();
            for ((a, b), c) in delta.terms() {
                let sa = takeuchi_antipode(&reg, &AlgebraElement::from_monomial(a.clone()))
                    .unwrap();
                folded = folded
                    .add(&sa.mul(&AlgebraElement::from_monomial(b.clone())).scale(c));
            }
            assert!(folded.is_zero(), "identity fails on degree {}", m.degree());
        }
    }
}
