//! Structural checks for the coalgebra and Hopf laws on a finite window of
//! the algebra: every monomial in the given generators up to a degree cap.

use super::antipode::{recursive_antipode, takeuchi_antipode};
use super::{AlgebraElement, ClassRegistry, Monomial, Tensor2, Tensor3};
use crate::constructions::{direct_sum, prefix_labels};
use crate::error::Result;
use crate::iso::IsoClassKey;
use crate::report::{Report, ReportBuilder};
use std::fmt;

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .keys()
            .iter()
            .map(|k| format!("[{}]", k.text))
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Every monomial over the generator keys with total degree at most
/// `max_degree`, the unit included.
pub fn monomials_up_to(gens: &[IsoClassKey], max_degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current: Vec<IsoClassKey> = Vec::new();
    fn rec(
        gens: &[IsoClassKey],
        idx: usize,
        remaining: usize,
        current: &mut Vec<IsoClassKey>,
        out: &mut Vec<Monomial>,
    ) {
        out.push(Monomial::from_keys(current.clone()));
        for i in idx..gens.len() {
            if gens[i].size == 0 || gens[i].size > remaining {
                continue;
            }
            current.push(gens[i].clone());
            rec(gens, i, remaining - gens[i].size, current, out);
            current.pop();
        }
    }
    rec(gens, 0, max_degree, &mut current, &mut out);
    out.sort();
    out.dedup();
    out
}

fn expand_left(reg: &ClassRegistry, t: &Tensor2) -> Result<Tensor3> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.terms() {
        for ((x, y), d) in reg.coproduct_monomial(a)?.terms() {
            out.add_term(x.clone(), y.clone(), b.clone(), c * d);
        }
    }
    Ok(out)
}

fn expand_right(reg: &ClassRegistry, t: &Tensor2) -> Result<Tensor3> {
    let mut out = Tensor3::zero();
    for ((a, b), c) in t.terms() {
        for ((x, y), d) in reg.coproduct_monomial(b)?.terms() {
            out.add_term(a.clone(), x.clone(), y.clone(), c * d);
        }
    }
    Ok(out)
}

/// Runs all Hopf-structure checks over the monomial window and returns one
/// report per law.
pub fn verify_bialgebra(
    reg: &ClassRegistry,
    seeds: &[crate::matroid::GPFunction],
    max_degree: usize,
) -> Result<Vec<Report>> {
    // Register the seeds and warm every coproduct so the generator list is
    // closed under taking minors.
    for phi in seeds {
        let m = reg.register(phi)?;
        reg.coproduct_monomial(&m)?;
    }
    let gens: Vec<IsoClassKey> = reg
        .generator_keys()
        .into_iter()
        .filter(|k| k.size <= max_degree)
        .collect();
    let window = monomials_up_to(&gens, max_degree);

    let mut grading = ReportBuilder::new();
    let mut coassoc = ReportBuilder::new();
    let mut counit = ReportBuilder::new();
    let mut antipode = ReportBuilder::new();
    let mut methods = ReportBuilder::new();

    for m in &window {
        let delta = reg.coproduct_monomial(m)?;
        for ((a, b), _) in delta.terms() {
            if a.degree() + b.degree() != m.degree() {
                grading.violation(
                    m.to_string(),
                    format!(
                        "coproduct term has degrees {} + {}, expected {}",
                        a.degree(),
                        b.degree(),
                        m.degree()
                    ),
                );
            }
        }
        if expand_left(reg, &delta)? != expand_right(reg, &delta)? {
            coassoc.violation(
                m.to_string(),
                "expanding the left and right slots disagrees".to_string(),
            );
        }
        let id = AlgebraElement::from_monomial(m.clone());
        if delta.counit_left() != id || delta.counit_right() != id {
            counit.violation(
                m.to_string(),
                "counit applied to a coproduct slot does not give the identity"
                    .to_string(),
            );
        }
        // Antipode identity, with the summation antipode on the left and
        // on the right.
        let expected = if m.is_unit() {
            AlgebraElement::unit()
        } else {
            AlgebraElement::zero()
        };
        let mut left_fold = AlgebraElement::zero();
        let mut right_fold = AlgebraElement::zero();
        for ((a, b), c) in delta.terms() {
            let sa = takeuchi_antipode(reg, &AlgebraElement::from_monomial(a.clone()))?;
            left_fold =
                left_fold.add(&sa.mul(&AlgebraElement::from_monomial(b.clone())).scale(c));
            let sb = takeuchi_antipode(reg, &AlgebraElement::from_monomial(b.clone()))?;
            right_fold =
                right_fold.add(&AlgebraElement::from_monomial(a.clone()).mul(&sb).scale(c));
        }
        if left_fold != expected {
            antipode.violation(
                m.to_string(),
                "mu (S tensor id) Delta misses the counit part".to_string(),
            );
        }
        if right_fold != expected {
            antipode.violation(
                m.to_string(),
                "mu (id tensor S) Delta misses the counit part".to_string(),
            );
        }
        let t = takeuchi_antipode(reg, &id)?;
        let r = recursive_antipode(reg, &id)?;
        if t != r {
            methods.violation(
                m.to_string(),
                "summation and recursive antipodes disagree".to_string(),
            );
        }
    }

    // The coproduct must turn direct sums into products.
    let mut multiplicative = ReportBuilder::new();
    for k1 in &gens {
        for k2 in &gens {
            if k1 > k2 || k1.size + k2.size > max_degree {
                continue;
            }
            let (r1, r2) = match (reg.representative(k1), reg.representative(k2)) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            if r1.hyperfield() != r2.hyperfield() {
                continue;
            }
            let sum = direct_sum(&prefix_labels(&r1, "l")?, &prefix_labels(&r2, "r")?)?;
            let raw = reg.coproduct_raw(&sum)?;
            let product = reg
                .generator_coproduct(k1)?
                .mul(&reg.generator_coproduct(k2)?);
            if raw != product {
                multiplicative.violation(
                    format!("[{}] and [{}]", k1.text, k2.text),
                    "coproduct of the direct sum is not the product of coproducts"
                        .to_string(),
                );
            }
        }
    }

    Ok(vec![
        grading.finish("hopf-grading"),
        coassoc.finish("hopf-coassociativity"),
        counit.finish("hopf-counit"),
        multiplicative.finish("hopf-coproduct-multiplicative"),
        antipode.finish("hopf-antipode-identity"),
        methods.finish("hopf-antipode-methods"),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::tests::uniform_krasner;
    use crate::hyperfield::Hyperfield;
    use crate::matroid::{sorted_subsets, GPFunction, GroundSet};

    #[test]
    fn window_enumeration_counts() {
        let reg = ClassRegistry::new();
        let g1 = reg.register(&uniform_krasner(1, 1)).unwrap();
        let g2 = reg.register(&uniform_krasner(2, 1)).unwrap();
        let gens: Vec<IsoClassKey> = [g1, g2]
            .iter()
            .flat_map(|m| m.keys().to_vec())
            .collect();
        // Degree 2 window over a degree-1 and a degree-2 generator:
        // 1, a, a^2, b.
        let window = monomials_up_to(&gens, 2);
        assert_eq!(window.len(), 4);
    }

    #[test]
    fn bialgebra_laws_hold_on_a_small_window() {
        let reg = ClassRegistry::new();
        let seeds = vec![uniform_krasner(2, 1), uniform_krasner(3, 2)];
        let reports = verify_bialgebra(&reg, &seeds, 3).unwrap();
        for r in &reports {
            assert!(r.pass, "failed {}: {:?}", r.check, r.violations);
        }
    }

    #[test]
    fn signs_seed_passes_too() {
        let phi = GPFunction::indicator(
            Hyperfield::Signs,
            GroundSet::from_size(3),
            1,
            &sorted_subsets(3, 1),
        )
        .unwrap();
        let reg = ClassRegistry::new();
        let reports = verify_bialgebra(&reg, &[phi], 3).unwrap();
        for r in &reports {
            assert!(r.pass, "failed {}: {:?}", r.check, r.violations);
        }
    }
}
