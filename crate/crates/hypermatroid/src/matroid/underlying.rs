//! Ordinary matroids given by their bases, used as the combinatorial
//! skeleton underneath a Grassmann-Plucker function and as an independent
//! oracle in tests.

use crate::error::{Error, Result};
use crate::matroid::{sorted_subsets, GroundSet};
use crate::report::{Report, ReportBuilder};
use std::collections::BTreeSet;

/// A matroid on positions `0..n`, stored as its set of bases.
///
/// Construction checks shape only; [`UnderlyingMatroid::verify_basis_exchange`]
/// decides whether the family actually satisfies the basis axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderlyingMatroid {
    n: usize,
    rank: usize,
    bases: BTreeSet<Vec<usize>>,
}

impl UnderlyingMatroid {
    pub fn from_bases(
        n: usize,
        rank: usize,
        bases: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<UnderlyingMatroid> {
        if rank > n {
            return Err(Error::RankTooLarge { rank, size: n });
        }
        let mut set = BTreeSet::new();
        for b in bases {
            let ok = b.len() == rank
                && b.iter().all(|&i| i < n)
                && b.windows(2).all(|w| w[0] < w[1]);
            if !ok {
                return Err(Error::BadSubset {
                    subset: b.iter().map(|i| i.to_string()).collect(),
                    rank,
                });
            }
            set.insert(b);
        }
        if set.is_empty() {
            return Err(Error::IdenticallyZero);
        }
        Ok(UnderlyingMatroid {
            n,
            rank,
            bases: set,
        })
    }

    pub fn uniform(n: usize, rank: usize) -> UnderlyingMatroid {
        UnderlyingMatroid::from_bases(n, rank, sorted_subsets(n, rank))
            .expect("uniform bases are valid")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.bases.iter()
    }

    pub fn is_basis(&self, set: &[usize]) -> bool {
        self.bases.contains(set)
    }

    /// Rank of a sorted subset: the largest overlap with a basis.
    pub fn rank_of(&self, set: &[usize]) -> usize {
        self.bases
            .iter()
            .map(|b| intersect_size(b, set))
            .max()
            .expect("at least one basis")
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.rank_of(set) == set.len()
    }

    /// All circuits: minimal dependent subsets, ordered by size then
    /// lexicographically.
    pub fn circuits(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = Vec::new();
        for size in 1..=(self.rank + 1).min(self.n) {
            for c in sorted_subsets(self.n, size) {
                if self.is_independent(&c) {
                    continue;
                }
                if !found.iter().any(|f| is_subset(f, &c)) {
                    found.push(c);
                }
            }
        }
        found
    }

    /// The fundamental circuit of `e` with respect to a basis containing its
    /// span: the unique circuit inside `basis + e`.
    pub fn fundamental_circuit(&self, basis: &[usize], e: usize) -> Vec<usize> {
        debug_assert!(self.is_basis(basis) && !basis.contains(&e));
        let mut circuit = vec![e];
        for &b in basis {
            // b belongs to the circuit exactly when swapping it out keeps a basis.
            let mut candidate: Vec<usize> = basis
                .iter()
                .copied()
                .filter(|&x| x != b)
                .chain(std::iter::once(e))
                .collect();
            candidate.sort_unstable();
            if self.is_basis(&candidate) {
                circuit.push(b);
            }
        }
        circuit.sort_unstable();
        circuit
    }

    pub fn dual(&self) -> UnderlyingMatroid {
        let ground = (0..self.n).collect::<Vec<_>>();
        let bases = self.bases.iter().map(|b| complement(&ground, b));
        UnderlyingMatroid::from_bases(self.n, self.n - self.rank, bases)
            .expect("complements of bases are valid")
    }

    /// Restriction to a sorted subset, on positions `0..subset.len()`.
    pub fn restrict(&self, subset: &[usize]) -> UnderlyingMatroid {
        let r = self.rank_of(subset);
        let bases = sorted_subsets(subset.len(), r)
            .into_iter()
            .filter(|b| {
                let lifted: Vec<usize> = b.iter().map(|&i| subset[i]).collect();
                self.is_independent(&lifted)
            })
            .collect::<Vec<_>>();
        UnderlyingMatroid::from_bases(subset.len(), r, bases)
            .expect("restriction bases are valid")
    }

    pub fn delete(&self, subset: &[usize]) -> UnderlyingMatroid {
        let ground = (0..self.n).collect::<Vec<_>>();
        self.restrict(&complement(&ground, subset))
    }

    /// Contraction of a sorted subset, on the complement relabeled to
    /// `0..n - subset.len()`.
    pub fn contract(&self, subset: &[usize]) -> UnderlyingMatroid {
        let ground = (0..self.n).collect::<Vec<_>>();
        let rest = complement(&ground, subset);
        let k = self.rank_of(subset);
        let r = self.rank - k;
        let bases = sorted_subsets(rest.len(), r)
            .into_iter()
            .filter(|b| {
                let mut lifted: Vec<usize> = b.iter().map(|&i| rest[i]).collect();
                lifted.extend_from_slice(subset);
                lifted.sort_unstable();
                self.rank_of(&lifted) == k + b.len()
            })
            .collect::<Vec<_>>();
        UnderlyingMatroid::from_bases(rest.len(), r, bases)
            .expect("contraction bases are valid")
    }

    /// The lexicographically least basis, used to pin representatives in
    /// minor constructions.
    pub fn lex_least_basis(&self) -> Vec<usize> {
        self.bases
            .iter()
            .next()
            .expect("at least one basis")
            .clone()
    }

    pub fn direct_sum(&self, other: &UnderlyingMatroid) -> UnderlyingMatroid {
        let mut bases = Vec::new();
        for a in &self.bases {
            for b in &other.bases {
                let mut joined = a.clone();
                joined.extend(b.iter().map(|&i| i + self.n));
                bases.push(joined);
            }
        }
        UnderlyingMatroid::from_bases(self.n + other.n, self.rank + other.rank, bases)
            .expect("direct sum bases are valid")
    }

    /// Connected components as sorted position sets: positions joined
    /// whenever some circuit contains both. Loops and coloops are singletons.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for c in self.circuits() {
            for w in c.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for i in 0..self.n {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(i);
        }
        groups.into_values().collect()
    }

    /// Check the basis axioms: equal cardinality (structural) and the
    /// exchange property, reporting every failing pair.
    pub fn verify_basis_exchange(&self, ground: &GroundSet) -> Report {
        let mut builder = ReportBuilder::new();
        for b1 in &self.bases {
            for b2 in &self.bases {
                for &x in b1.iter().filter(|x| !b2.contains(x)) {
                    let found = b2.iter().any(|&y| {
                        if b1.contains(&y) {
                            return false;
                        }
                        let mut swapped: Vec<usize> = b1
                            .iter()
                            .copied()
                            .filter(|&z| z != x)
                            .chain(std::iter::once(y))
                            .collect();
                        swapped.sort_unstable();
                        self.is_basis(&swapped)
                    });
                    if !found {
                        builder.violation(
                            format!(
                                "B1={}, B2={}, x={}",
                                ground.format_subset(b1),
                                ground.format_subset(b2),
                                ground.label(x)
                            ),
                            "no y in B2 - B1 with B1 - x + y a basis".to_string(),
                        );
                    }
                }
            }
        }
        builder.finish("basis-exchange")
    }
}

fn intersect_size(a: &[usize], b: &[usize]) -> usize {
    // Both sorted.
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    intersect_size(a, b) == a.len()
}

pub fn complement(ground: &[usize], subset: &[usize]) -> Vec<usize> {
    ground.iter().copied().filter(|i| !subset.contains(i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_circuits_and_rank() {
        let m = UnderlyingMatroid::uniform(4, 2);
        assert_eq!(m.rank_of(&[0, 1, 2]), 2);
        assert_eq!(m.circuits(), sorted_subsets(4, 3));
        let ground = GroundSet::from_size(4);
        assert!(m.verify_basis_exchange(&ground).pass);
    }

    #[test]
    fn non_matroid_family_fails_exchange() {
        let m = UnderlyingMatroid::from_bases(4, 2, [vec![0, 1], vec![2, 3]]).unwrap();
        let ground = GroundSet::from_size(4);
        assert!(!m.verify_basis_exchange(&ground).pass);
    }

    #[test]
    fn minors_of_uniform() {
        let m = UnderlyingMatroid::uniform(4, 2);
        let r = m.restrict(&[0, 2, 3]);
        assert_eq!(r, UnderlyingMatroid::uniform(3, 2));
        let c = m.contract(&[1]);
        assert_eq!(c, UnderlyingMatroid::uniform(3, 1));
        assert_eq!(m.delete(&[0]), UnderlyingMatroid::uniform(3, 2));
        assert_eq!(m.dual(), UnderlyingMatroid::uniform(4, 2));
    }

    #[test]
    fn contraction_with_loops_and_rank_zero() {
        // Ground 0,1,2 where 2 is a loop: bases {0},{1}.
        let m = UnderlyingMatroid::from_bases(3, 1, [vec![0], vec![1]]).unwrap();
        assert_eq!(m.rank_of(&[2]), 0);
        assert_eq!(m.circuits(), vec![vec![2], vec![0, 1]]);
        let c = m.contract(&[0]);
        assert_eq!(c.rank(), 0);
        assert_eq!(c.bases().next().unwrap(), &Vec::<usize>::new());
        let r = m.restrict(&[2]);
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn fundamental_circuit_matches_definition() {
        let m = UnderlyingMatroid::uniform(4, 2);
        assert_eq!(m.fundamental_circuit(&[0, 1], 3), vec![0, 1, 3]);
        let loopy = UnderlyingMatroid::from_bases(3, 1, [vec![0], vec![1]]).unwrap();
        assert_eq!(loopy.fundamental_circuit(&[0], 2), vec![2]);
        assert_eq!(loopy.fundamental_circuit(&[0], 1), vec![0, 1]);
    }

    #[test]
    fn components_split_direct_sums() {
        let m = UnderlyingMatroid::uniform(2, 1).direct_sum(&UnderlyingMatroid::uniform(3, 2));
        assert_eq!(m.components(), vec![vec![0, 1], vec![2, 3, 4]]);
        // A coloop and a loop are their own components.
        let m = UnderlyingMatroid::from_bases(2, 1, [vec![0]]).unwrap();
        assert_eq!(m.components(), vec![vec![0], vec![1]]);
    }
}
