//! The minor Hopf algebra of isomorphism classes.
//!
//! The algebra is the free commutative algebra over the rationals on the
//! classes of connected nonempty matroids; an arbitrary class factors as the
//! product of the classes of its connected components. The coproduct of a
//! class sums restriction-tensor-contraction over all ground subsets, the
//! counit projects onto the empty class, and both antipode constructions
//! live in [`antipode`].
//!
//! A [`ClassRegistry`] interns one representative per class key, so classes
//! can be compared and minors recomputed later without re-deciding
//! isomorphism.

pub mod antipode;
pub mod verify;

use crate::constructions::{contract, restrict};
use crate::error::{Error, Result};
use crate::iso::{canonical_form, IsoClassKey};
use crate::matroid::{sorted_subsets, GPFunction};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::RwLock;

pub type Coeff = BigRational;

/// A commutative monomial: a multiset of connected class keys, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    keys: Vec<IsoClassKey>,
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial::default()
    }

    pub fn generator(key: IsoClassKey) -> Monomial {
        Monomial { keys: vec![key] }
    }

    pub fn from_keys(mut keys: Vec<IsoClassKey>) -> Monomial {
        keys.sort();
        Monomial { keys }
    }

    pub fn is_unit(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[IsoClassKey] {
        &self.keys
    }

    /// Total ground size of the underlying class: the grading degree.
    pub fn degree(&self) -> usize {
        self.keys.iter().map(|k| k.size).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut keys = self.keys.clone();
        keys.extend(other.keys.iter().cloned());
        Monomial::from_keys(keys)
    }
}

/// A finite rational linear combination of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Coeff>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    pub fn unit() -> AlgebraElement {
        AlgebraElement::from_monomial(Monomial::unit())
    }

    pub fn from_monomial(m: Monomial) -> AlgebraElement {
        let mut terms = BTreeMap::new();
        terms.insert(m, Coeff::one());
        AlgebraElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Coeff::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("a zero entry exists");
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// The counit: the coefficient of the unit monomial.
    pub fn counit(&self) -> Coeff {
        self.coefficient(&Monomial::unit())
    }
}

/// A rational linear combination of two-fold tensors of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor2 {
    terms: BTreeMap<(Monomial, Monomial), Coeff>,
}

impl Tensor2 {
    pub fn zero() -> Tensor2 {
        Tensor2::default()
    }

    pub fn unit() -> Tensor2 {
        let mut t = Tensor2::zero();
        t.add_term(Monomial::unit(), Monomial::unit(), Coeff::one());
        t
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(Coeff::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("a zero entry exists");
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Coeff)> {
        self.terms.iter()
    }

    pub fn mul(&self, other: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                out.add_term(a1.mul(a2), b1.mul(b2), c1 * c2);
            }
        }
        out
    }

    /// Applies the counit to the left slot.
    pub fn counit_left(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in self.terms() {
            if a.is_unit() {
                out.add_term(b.clone(), c.clone());
            }
        }
        out
    }

    /// Applies the counit to the right slot.
    pub fn counit_right(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for ((a, b), c) in self.terms() {
            if b.is_unit() {
                out.add_term(a.clone(), c.clone());
            }
        }
        out
    }
}

/// A rational linear combination of three-fold tensors of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor3 {
    terms: BTreeMap<(Monomial, Monomial, Monomial), Coeff>,
}

impl Tensor3 {
    pub fn zero() -> Tensor3 {
        Tensor3::default()
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b, m)).or_insert_with(Coeff::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("a zero entry exists");
            self.terms.remove(&key);
        }
    }
}

#[derive(Default)]
struct RegistryInner {
    reps: BTreeMap<IsoClassKey, GPFunction>,
    coproducts: BTreeMap<IsoClassKey, Tensor2>,
}

/// Interns one representative per connected class and caches coproducts.
#[derive(Default)]
pub struct ClassRegistry {
    inner: RwLock<RegistryInner>,
}

impl ClassRegistry {
    pub fn new() -> ClassRegistry {
        ClassRegistry::default()
    }

    /// The class of `phi` as a monomial: one generator per connected
    /// component. Newly seen components are interned.
    pub fn register(&self, phi: &GPFunction) -> Result<Monomial> {
        let mut keys = Vec::new();
        for comp in phi.underlying().components() {
            let piece = if comp.len() == phi.ground().len() {
                phi.clone()
            } else {
                restrict(phi, &comp)?
            };
            let key = canonical_form(&piece)?;
            let mut inner = self.inner.write().expect("registry lock");
            inner.reps.entry(key.clone()).or_insert(piece);
            drop(inner);
            keys.push(key);
        }
        Ok(Monomial::from_keys(keys))
    }

    /// The interned representative for a generator key.
    pub fn representative(&self, key: &IsoClassKey) -> Option<GPFunction> {
        self.inner
            .read()
            .expect("registry lock")
            .reps
            .get(key)
            .cloned()
    }

    /// All interned generator keys.
    pub fn generator_keys(&self) -> Vec<IsoClassKey> {
        self.inner
            .read()
            .expect("registry lock")
            .reps
            .keys()
            .cloned()
            .collect()
    }

    /// The coproduct of a generator, cached after the first computation.
    pub fn generator_coproduct(&self, key: &IsoClassKey) -> Result<Tensor2> {
        if let Some(t) = self
            .inner
            .read()
            .expect("registry lock")
            .coproducts
            .get(key)
        {
            return Ok(t.clone());
        }
        let rep = self.representative(key).ok_or(Error::RegistryMismatch)?;
        let t = self.coproduct_raw(&rep)?;
        self.inner
            .write()
            .expect("registry lock")
            .coproducts
            .insert(key.clone(), t.clone());
        Ok(t)
    }

    /// The subset-sum coproduct of an explicit matroid: restriction tensor
    /// contraction over every ground subset. Works on any representative,
    /// not only interned ones.
    pub fn coproduct_raw(&self, phi: &GPFunction) -> Result<Tensor2> {
        let n = phi.ground().len();
        let mut t = Tensor2::zero();
        for size in 0..=n {
            for subset in sorted_subsets(n, size) {
                let left = self.register(&restrict(phi, &subset)?)?;
                let right = self.register(&contract(phi, &subset)?)?;
                t.add_term(left, right, Coeff::one());
            }
        }
        Ok(t)
    }

    /// The coproduct of a monomial: the product of its generators'
    /// coproducts.
    pub fn coproduct_monomial(&self, m: &Monomial) -> Result<Tensor2> {
        let mut t = Tensor2::unit();
        for key in m.keys() {
            t = t.mul(&self.generator_coproduct(key)?);
        }
        Ok(t)
    }

    /// The coproduct extended linearly.
    pub fn coproduct(&self, elt: &AlgebraElement) -> Result<Tensor2> {
        let mut out = Tensor2::zero();
        for (m, c) in elt.terms() {
            for ((a, b), tc) in self.coproduct_monomial(m)?.terms() {
                out.add_term(a.clone(), b.clone(), c * tc);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperfield::Hyperfield;
    use crate::matroid::GroundSet;

    pub(crate) fn uniform_krasner(n: usize, r: usize) -> GPFunction {
        GPFunction::indicator(
            Hyperfield::Krasner,
            GroundSet::from_size(n),
            r,
            &sorted_subsets(n, r),
        )
        .unwrap()
    }

    pub(crate) fn empty_matroid() -> GPFunction {
        GPFunction::indicator(
            Hyperfield::Krasner,
            GroundSet::new(vec![]).unwrap(),
            0,
            &[vec![]],
        )
        .unwrap()
    }

    #[test]
    fn empty_matroid_is_the_unit_class() {
        let reg = ClassRegistry::new();
        let m = reg.register(&empty_matroid()).unwrap();
        assert!(m.is_unit());
        assert_eq!(m.degree(), 0);
    }

    #[test]
    fn single_element_coproduct_is_primitive() {
        let reg = ClassRegistry::new();
        let u11 = uniform_krasner(1, 1);
        let m = reg.register(&u11).unwrap();
        assert_eq!(m.keys().len(), 1);
        let delta = reg.coproduct_monomial(&m).unwrap();
        let terms: Vec<_> = delta.terms().collect();
        assert_eq!(terms.len(), 2);
        let unit = Monomial::unit();
        assert_eq!(delta.terms.get(&(unit.clone(), m.clone())), Some(&Coeff::one()));
        assert_eq!(delta.terms.get(&(m.clone(), unit)), Some(&Coeff::one()));
    }

    #[test]
    fn parallel_pair_coproduct_has_middle_multiplicity_two() {
        // Restricting a two-element rank-one matroid to either singleton
        // leaves a free element; contracting that singleton leaves a loop.
        let reg = ClassRegistry::new();
        let u12 = uniform_krasner(2, 1);
        let m = reg.register(&u12).unwrap();
        let delta = reg.coproduct_monomial(&m).unwrap();
        let free = reg.register(&uniform_krasner(1, 1)).unwrap();
        let looped = reg.register(&uniform_krasner(1, 0)).unwrap();
        assert_eq!(
            delta.terms.get(&(free, looped)),
            Some(&Coeff::from_integer(2.into()))
        );
        assert_eq!(delta.terms.len(), 3);
    }

    #[test]
    fn disconnected_matroids_factor() {
        // Two parallel classes of two elements each: the class is the
        // square of the two-element class.
        let m1 = uniform_krasner(2, 1);
        let sum = crate::constructions::direct_sum(
            &m1,
            &crate::constructions::prefix_labels(&m1, "b").unwrap(),
        )
        .unwrap();
        let reg = ClassRegistry::new();
        let mono = reg.register(&sum).unwrap();
        assert_eq!(mono.keys().len(), 2);
        assert_eq!(mono.keys()[0], mono.keys()[1]);
        assert_eq!(mono.degree(), 4);
    }

    #[test]
    fn coproduct_respects_products() {
        let reg = ClassRegistry::new();
        let u11 = reg.register(&uniform_krasner(1, 1)).unwrap();
        let u12 = reg.register(&uniform_krasner(2, 1)).unwrap();
        let product = u11.mul(&u12);
        let direct = reg.coproduct_monomial(&product).unwrap();
        let factored = reg
            .coproduct_monomial(&u11)
            .unwrap()
            .mul(&reg.coproduct_monomial(&u12).unwrap());
        assert_eq!(direct, factored);
    }

    #[test]
    fn algebra_scalars_behave() {
        let reg = ClassRegistry::new();
        let g = reg.register(&uniform_krasner(1, 1)).unwrap();
        let x = AlgebraElement::from_monomial(g.clone());
        let two = Coeff::from_integer(2.into());
        assert_eq!(x.add(&x), x.scale(&two));
        assert!(x.add(&x.neg()).is_zero());
        assert_eq!(x.mul(&AlgebraElement::unit()), x);
        assert_eq!(x.counit(), Coeff::zero());
        assert_eq!(AlgebraElement::unit().counit(), Coeff::one());
        let m2 = g.mul(&g);
        assert_eq!(m2.degree(), 2);
    }
}
