//! Hyperfield homomorphisms.
//!
//! A homomorphism sends 0 to 0, 1 to 1, respects multiplication exactly, and
//! maps each hyperaddition output into the hyperaddition of the images. Every
//! hyperfield has a canonical homomorphism to the Krasner hyperfield that
//! remembers only whether an element is zero.

use crate::error::{Error, Result};
use crate::hyperfield::{Element, Hyperfield};
use crate::report::{Report, ReportBuilder};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomRule {
    Identity,
    /// Zero to zero, everything else to one.
    ToKrasner,
    /// Finite source: an explicit image for every carrier element.
    Explicit(BTreeMap<Element, Element>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    source: Hyperfield,
    target: Hyperfield,
    rule: HomRule,
}

impl Homomorphism {
    pub fn new(source: Hyperfield, target: Hyperfield, rule: HomRule) -> Result<Homomorphism> {
        match &rule {
            HomRule::Identity => {
                if source != target {
                    return Err(Error::HyperfieldMismatch);
                }
            }
            HomRule::ToKrasner => {
                if target != Hyperfield::Krasner {
                    return Err(Error::NoCanonicalHom {
                        from: source.name(),
                        to: target.name(),
                    });
                }
            }
            HomRule::Explicit(map) => {
                for e in source.carrier()? {
                    match map.get(&e) {
                        Some(img) => target.check(img)?,
                        None => return Err(Error::PartialHom(e.canonical_str())),
                    }
                }
                for k in map.keys() {
                    source.check(k)?;
                }
            }
        }
        Ok(Homomorphism {
            source,
            target,
            rule,
        })
    }

    pub fn identity(h: Hyperfield) -> Homomorphism {
        Homomorphism {
            source: h.clone(),
            target: h,
            rule: HomRule::Identity,
        }
    }

    pub fn source(&self) -> &Hyperfield {
        &self.source
    }

    pub fn target(&self) -> &Hyperfield {
        &self.target
    }

    pub fn apply(&self, e: &Element) -> Result<Element> {
        self.source.check(e)?;
        Ok(match &self.rule {
            HomRule::Identity => e.clone(),
            HomRule::ToKrasner => Element::Krasner(!self.source.is_zero(e)),
            HomRule::Explicit(map) => map.get(e).cloned().expect("map is total by construction"),
        })
    }

    /// Check the homomorphism conditions exhaustively over a finite source.
    pub fn verify(&self) -> Result<Report> {
        let carrier = self.source.carrier()?;
        let mut b = ReportBuilder::new();
        let f0 = self.apply(&self.source.zero())?;
        if !self.target.is_zero(&f0) {
            b.violation("0", format!("f(0) must be 0, got {f0}"));
        }
        let f1 = self.apply(&self.source.one())?;
        if f1 != self.target.one() {
            b.violation("1", format!("f(1) must be 1, got {f1}"));
        }
        for a in &carrier {
            for c in &carrier {
                let lhs = self.apply(&self.source.mul(a, c)?)?;
                let rhs = self.target.mul(&self.apply(a)?, &self.apply(c)?)?;
                if lhs != rhs {
                    b.violation(
                        format!("a={a}, b={c}"),
                        format!("f(ab)={lhs} but f(a)f(b)={rhs}"),
                    );
                }
                let sum = self.source.hyperadd(a, c)?;
                let img_sum = self.target.hyperadd(&self.apply(a)?, &self.apply(c)?)?;
                for x in sum.elements(&self.source)? {
                    let fx = self.apply(&x)?;
                    if !img_sum.contains(&fx) {
                        b.violation(
                            format!("a={a}, b={c}, x={x}"),
                            format!("x in a+b but f(x)={fx} is not in f(a)+f(b)"),
                        );
                    }
                }
            }
        }
        Ok(b.finish("hyperfield-hom"))
    }
}

/// The canonical homomorphism onto the Krasner hyperfield.
pub fn canonical_to_krasner(h: &Hyperfield) -> Homomorphism {
    Homomorphism {
        source: h.clone(),
        target: Hyperfield::Krasner,
        rule: HomRule::ToKrasner,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn krasner_quotients_verify() {
        for h in [Hyperfield::Krasner, Hyperfield::Signs] {
            let f = canonical_to_krasner(&h);
            let report = f.verify().unwrap();
            assert!(report.pass, "{h}: {:?}", report.violations);
        }
    }

    #[test]
    fn sign_flip_over_signs_is_not_multiplicative() {
        let h = Hyperfield::Signs;
        let map: BTreeMap<Element, Element> = [
            (Element::Sign(-1), Element::Sign(1)),
            (Element::Sign(0), Element::Sign(0)),
            (Element::Sign(1), Element::Sign(-1)),
        ]
        .into();
        let f = Homomorphism::new(h.clone(), h, HomRule::Explicit(map)).unwrap();
        // x -> -x respects multiplication only on the subgroup it fixes; over
        // the signs it fails, since (-1)(-1) = 1 maps to -1 while images give 1.
        let report = f.verify().unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn identity_requires_matching_hyperfields() {
        assert!(Homomorphism::new(
            Hyperfield::Krasner,
            Hyperfield::Signs,
            HomRule::Identity
        )
        .is_err());
    }

    #[test]
    fn to_krasner_from_infinite_sources_applies() {
        let h = Hyperfield::Tropical;
        let f = canonical_to_krasner(&h);
        let x = f.apply(&Element::tropical(5, 2)).unwrap();
        assert_eq!(x, Element::Krasner(true));
        let z = f.apply(&h.zero()).unwrap();
        assert_eq!(z, Element::Krasner(false));
        assert!(f.verify().is_err());
    }
}
