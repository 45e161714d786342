//! Matroids over a hyperfield, presented by Grassmann-Plucker functions.
//!
//! A rank-`r` Grassmann-Plucker function assigns an element of `H` to every
//! ordered `r`-tuple over the ground set, alternating under permutations and
//! vanishing on repeats. We store one value per sorted `r`-subset; tuple
//! values are recovered through the sign of the sorting permutation. Two
//! functions present the same matroid when they differ by a global unit.

pub mod axioms;
pub mod circuits;
pub mod underlying;

pub use underlying::UnderlyingMatroid;

use crate::error::{Error, Result};
use crate::hyperfield::{Element, Hyperfield};
use itertools::Itertools;
use std::collections::BTreeMap;
use std::fmt;

/// An ordered finite ground set of distinct labels.
///
/// Elements are addressed by position; the label order fixes the sign
/// conventions in duality and direct sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<GroundSet> {
        for l in &labels {
            if l.is_empty() || l.len() > 32 {
                return Err(Error::BadDocument(format!(
                    "ground label `{l}` must be 1 to 32 characters"
                )));
            }
            if l.chars()
                .any(|c| c == ',' || c.is_whitespace() || c.is_control())
            {
                return Err(Error::BadDocument(format!(
                    "ground label `{l}` contains a comma or whitespace"
                )));
            }
        }
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    pub fn from_size(n: usize) -> GroundSet {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        GroundSet::new(labels).expect("numeric labels are valid")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Translate labels to sorted distinct positions.
    pub fn positions(&self, labels: &[String]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(labels.len());
        for l in labels {
            out.push(self.index_of(l)?);
        }
        out.sort_unstable();
        if out.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadSubset {
                subset: labels.to_vec(),
                rank: labels.len(),
            });
        }
        Ok(out)
    }

    /// Labels of a sorted position subset.
    pub fn labels_of(&self, subset: &[usize]) -> Vec<String> {
        subset.iter().map(|&i| self.labels[i].clone()).collect()
    }

    pub fn format_subset(&self, subset: &[usize]) -> String {
        format!("{{{}}}", self.labels_of(subset).join(","))
    }

    /// Sorted positions of the complement of a sorted subset.
    pub fn complement(&self, subset: &[usize]) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() - subset.len());
        let mut it = subset.iter().peekable();
        for i in 0..self.len() {
            if it.peek() == Some(&&i) {
                it.next();
            } else {
                out.push(i);
            }
        }
        out
    }
}

/// All sorted `r`-subsets of `0..n`, in lexicographic order.
pub fn sorted_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(r).collect()
}

/// Sort a tuple of positions, tracking the permutation parity.
/// Returns `None` when the tuple has a repeated entry.
pub fn sorted_with_parity(tuple: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = tuple.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, odd))
    }
}

/// Parity of the concatenated word `(left, right)` as a permutation of the
/// union, where both halves are sorted and disjoint.
pub fn shuffle_parity(left: &[usize], right: &[usize]) -> bool {
    // Inversions are exactly the pairs (l, r) with l > r.
    let mut odd = false;
    for &l in left {
        for &r in right {
            if l > r {
                odd = !odd;
            }
        }
    }
    odd
}

/// A Grassmann-Plucker function, stored as its nonzero values on sorted
/// `rank`-subsets of the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPFunction {
    h: Hyperfield,
    ground: GroundSet,
    rank: usize,
    values: BTreeMap<Vec<usize>, Element>,
}

impl GPFunction {
    /// Build from values on sorted subsets; zero values may be included and
    /// are dropped. At least one value must be nonzero.
    pub fn new(
        h: Hyperfield,
        ground: GroundSet,
        rank: usize,
        values: BTreeMap<Vec<usize>, Element>,
    ) -> Result<GPFunction> {
        let n = ground.len();
        if rank > n {
            return Err(Error::RankTooLarge { rank, size: n });
        }
        let mut kept = BTreeMap::new();
        for (subset, v) in values {
            let sorted = subset.len() == rank
                && subset.iter().all(|&i| i < n)
                && subset.windows(2).all(|w| w[0] < w[1]);
            if !sorted {
                return Err(Error::BadSubset {
                    subset: subset.iter().map(|i| i.to_string()).collect(),
                    rank,
                });
            }
            h.check(&v)?;
            if !h.is_zero(&v) && kept.insert(subset.clone(), v).is_some() {
                return Err(Error::DuplicateSubset(ground.labels_of(&subset)));
            }
        }
        if kept.is_empty() {
            return Err(Error::IdenticallyZero);
        }
        Ok(GPFunction {
            h,
            ground,
            rank,
            values: kept,
        })
    }

    /// The indicator function: one on each listed subset, zero elsewhere.
    pub fn indicator(
        h: Hyperfield,
        ground: GroundSet,
        rank: usize,
        subsets: &[Vec<usize>],
    ) -> Result<GPFunction> {
        let one = h.one();
        let values = subsets.iter().map(|s| (s.clone(), one.clone())).collect();
        GPFunction::new(h, ground, rank, values)
    }

    pub fn hyperfield(&self) -> &Hyperfield {
        &self.h
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Nonzero values on sorted subsets.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Element)> {
        self.values.iter()
    }

    /// The sorted subsets with nonzero value: the bases of the underlying
    /// matroid.
    pub fn support(&self) -> Vec<Vec<usize>> {
        self.values.keys().cloned().collect()
    }

    /// Value on a sorted `rank`-subset.
    pub fn value(&self, subset: &[usize]) -> Element {
        debug_assert!(subset.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(subset.len(), self.rank);
        self.values
            .get(subset)
            .cloned()
            .unwrap_or_else(|| self.h.zero())
    }

    /// Value on an arbitrary tuple, by alternation: zero on repeats, the
    /// sign-adjusted subset value otherwise.
    pub fn value_tuple(&self, tuple: &[usize]) -> Result<Element> {
        debug_assert_eq!(tuple.len(), self.rank);
        match sorted_with_parity(tuple) {
            None => Ok(self.h.zero()),
            Some((sorted, odd)) => {
                let v = self.value(&sorted);
                self.h.mul(&self.h.sign_unit(odd)?, &v)
            }
        }
    }

    /// Multiply every value by a unit.
    pub fn scale(&self, a: &Element) -> Result<GPFunction> {
        if self.h.is_zero(a) {
            return Err(Error::ZeroInverse);
        }
        let mut values = BTreeMap::new();
        for (k, v) in &self.values {
            values.insert(k.clone(), self.h.mul(a, v)?);
        }
        Ok(GPFunction {
            h: self.h.clone(),
            ground: self.ground.clone(),
            rank: self.rank,
            values,
        })
    }

    /// Whether `other` is a unit multiple of `self` on the same shape:
    /// the two functions then present the same matroid.
    pub fn same_class(&self, other: &GPFunction) -> Result<bool> {
        if self.h != other.h
            || self.ground != other.ground
            || self.rank != other.rank
        {
            return Err(Error::ShapeMismatch);
        }
        if self.values.keys().ne(other.values.keys()) {
            return Ok(false);
        }
        let first = self.values.keys().next().expect("nonzero somewhere");
        let alpha = self
            .h
            .mul(&other.value(first), &self.h.inv(&self.value(first))?)?;
        for (k, v) in &self.values {
            if other.value(k) != self.h.mul(&alpha, v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The dual function on the same ground set, of complementary rank:
    /// each cobasis takes the sign of the shuffle `(cobasis, basis)` times
    /// the value at the complementary basis.
    pub fn dual(&self) -> Result<GPFunction> {
        let n = self.ground.len();
        let mut values = BTreeMap::new();
        for (basis, v) in &self.values {
            let co = self.ground.complement(basis);
            let sign = self.h.sign_unit(shuffle_parity(&co, basis))?;
            values.insert(co, self.h.mul(&sign, v)?);
        }
        GPFunction::new(
            self.h.clone(),
            self.ground.clone(),
            n - self.rank,
            values,
        )
    }

    /// The underlying ordinary matroid, from the support.
    pub fn underlying(&self) -> UnderlyingMatroid {
        UnderlyingMatroid::from_bases(self.ground.len(), self.rank, self.support())
            .expect("support of a Grassmann-Plucker function is a valid basis family")
    }
}

impl fmt::Display for GPFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank-{} function over {} on {}",
            self.rank,
            self.h,
            self.ground.format_subset(&(0..self.ground.len()).collect::<Vec<_>>())
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u24_signs_all_ones() -> GPFunction {
        let ground = GroundSet::from_size(4);
        GPFunction::indicator(Hyperfield::Signs, ground, 2, &sorted_subsets(4, 2)).unwrap()
    }

    #[test]
    fn value_tuple_signs() {
        let phi = u24_signs_all_ones();
        assert_eq!(phi.value_tuple(&[0, 1]).unwrap(), Element::Sign(1));
        assert_eq!(phi.value_tuple(&[1, 0]).unwrap(), Element::Sign(-1));
        assert_eq!(phi.value_tuple(&[2, 2]).unwrap(), Element::Sign(0));
    }

    #[test]
    fn parity_helpers() {
        assert_eq!(sorted_with_parity(&[2, 0, 1]), Some((vec![0, 1, 2], false)));
        assert_eq!(sorted_with_parity(&[1, 0]), Some((vec![0, 1], true)));
        assert_eq!(sorted_with_parity(&[1, 1]), None);
        assert!(!shuffle_parity(&[0, 1], &[2, 3]));
        assert!(shuffle_parity(&[1], &[0]));
        assert!(!shuffle_parity(&[], &[0, 1]));
    }

    #[test]
    fn same_class_detects_global_scaling() {
        let phi = u24_signs_all_ones();
        let psi = phi.scale(&Element::Sign(-1)).unwrap();
        assert!(phi.same_class(&psi).unwrap());
        // Flip a single value: no longer a unit multiple.
        let mut values: BTreeMap<Vec<usize>, Element> =
            phi.entries().map(|(k, v)| (k.clone(), v.clone())).collect();
        values.insert(vec![0, 1], Element::Sign(-1));
        let chi = GPFunction::new(
            Hyperfield::Signs,
            GroundSet::from_size(4),
            2,
            values,
        )
        .unwrap();
        assert!(!phi.same_class(&chi).unwrap());
    }

    #[test]
    fn dual_of_dual_is_sign_adjusted_original() {
        // The double dual equals the original up to the unit (-1)^(r(n-r)).
        let phi = u24_signs_all_ones();
        let dd = phi.dual().unwrap().dual().unwrap();
        assert!(phi.same_class(&dd).unwrap());
        let ground = GroundSet::from_size(3);
        let psi = GPFunction::indicator(
            Hyperfield::Signs,
            ground,
            1,
            &sorted_subsets(3, 1),
        )
        .unwrap();
        let dd = psi.dual().unwrap().dual().unwrap();
        assert!(psi.same_class(&dd).unwrap());
    }

    #[test]
    fn rank_zero_and_full_rank_duals() {
        let ground = GroundSet::from_size(3);
        let mut values = BTreeMap::new();
        values.insert(vec![], Element::Sign(-1));
        let phi = GPFunction::new(Hyperfield::Signs, ground, 0, values).unwrap();
        let dual = phi.dual().unwrap();
        assert_eq!(dual.rank(), 3);
        assert_eq!(dual.value(&[0, 1, 2]), Element::Sign(-1));
        assert!(phi.same_class(&dual.dual().unwrap()).unwrap());
    }

    #[test]
    fn ground_set_rejects_bad_labels() {
        assert!(GroundSet::new(vec!["a".into(), "a".into()]).is_err());
        assert!(GroundSet::new(vec!["a,b".into()]).is_err());
        assert!(GroundSet::new(vec!["".into()]).is_err());
    }
}
