//! Axiom checkers for Grassmann-Plucker functions and circuit sets.
//!
//! Relations quantified over arbitrary tuples reduce to strictly increasing
//! tuples: repeated entries make every term vanish or cancel in opposite
//! pairs, and permutations only change a global sign, which never affects
//! membership of zero. The checkers therefore enumerate sorted tuples; tests
//! keep a full-tuple oracle to witness the reduction at small sizes.

use crate::error::Result;
use crate::hyperfield::{Element, Hyperfield};
use crate::matroid::circuits::{CircuitSet, HVector};
use crate::matroid::underlying::{is_subset, UnderlyingMatroid};
use crate::matroid::{sorted_subsets, GPFunction};
use crate::report::{Report, ReportBuilder};
use std::collections::BTreeSet;

/// The three-term relation on sorted quadruples against disjoint sorted
/// context tuples.
pub fn verify_weak_gpf(phi: &GPFunction) -> Result<Report> {
    let h = phi.hyperfield();
    let ground = phi.ground();
    let n = ground.len();
    let r = phi.rank();
    let mut b = ReportBuilder::new();
    if r >= 2 && n >= 4 {
        for quad in sorted_subsets(n, 4) {
            let rest: Vec<usize> = (0..n).filter(|i| !quad.contains(i)).collect();
            for ctx in sorted_subsets(rest.len(), r - 2) {
                let x: Vec<usize> = ctx.iter().map(|&i| rest[i]).collect();
                let (a, bb, c, d) = (quad[0], quad[1], quad[2], quad[3]);
                let t1 = h.mul(&pair_value(phi, a, bb, &x)?, &pair_value(phi, c, d, &x)?)?;
                let t2 = h.mul(&pair_value(phi, a, c, &x)?, &pair_value(phi, bb, d, &x)?)?;
                let t3 = h.mul(&pair_value(phi, bb, c, &x)?, &pair_value(phi, a, d, &x)?)?;
                let terms = vec![t1, h.neg(&t2)?, t3];
                if !h.contains_zero(&terms)? {
                    b.violation(
                        format!(
                            "quadruple={}, context={}",
                            ground.format_subset(&quad),
                            ground.format_subset(&x)
                        ),
                        "three-term relation misses zero".to_string(),
                    );
                }
            }
        }
    }
    Ok(b.finish("weak-gpf-axioms"))
}

fn pair_value(phi: &GPFunction, a: usize, b: usize, x: &[usize]) -> Result<Element> {
    let mut tuple = Vec::with_capacity(x.len() + 2);
    tuple.push(a);
    tuple.push(b);
    tuple.extend_from_slice(x);
    phi.value_tuple(&tuple)
}

/// The full exchange relation on sorted `(r+1)`-tuples against sorted
/// `(r-1)`-tuples, which may intersect.
pub fn verify_strong_gpf(phi: &GPFunction) -> Result<Report> {
    let h = phi.hyperfield();
    let ground = phi.ground();
    let n = ground.len();
    let r = phi.rank();
    let mut b = ReportBuilder::new();
    if r >= 1 && r + 1 <= n {
        for x in sorted_subsets(n, r + 1) {
            for y in sorted_subsets(n, r - 1) {
                let mut terms = Vec::with_capacity(r + 1);
                for k in 0..=r {
                    // Sign (-1)^(k+1) for the 1-based index k+1.
                    let sign = h.sign_unit(k % 2 == 0)?;
                    let left: Vec<usize> = x
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != k)
                        .map(|(_, &e)| e)
                        .collect();
                    let mut right = Vec::with_capacity(r);
                    right.push(x[k]);
                    right.extend_from_slice(&y);
                    let term = h.mul(&phi.value(&left), &phi.value_tuple(&right)?)?;
                    terms.push(h.mul(&sign, &term)?);
                }
                if !h.contains_zero(&terms)? {
                    b.violation(
                        format!(
                            "upper={}, lower={}",
                            ground.format_subset(&x),
                            ground.format_subset(&y)
                        ),
                        "exchange relation misses zero".to_string(),
                    );
                }
            }
        }
    }
    Ok(b.finish("strong-gpf-axioms"))
}

/// Structural circuit axioms on stored representatives: no zero vector, each
/// vector normalized to lead with 1 (one representative per unit orbit), and
/// support incomparability.
pub fn verify_pre_circuits(c: &CircuitSet) -> Result<Report> {
    let h = c.hyperfield();
    let ground = c.ground();
    let mut b = ReportBuilder::new();
    for v in c.vectors() {
        if v.is_zero(h) {
            b.violation("0", "the zero vector is not a circuit".to_string());
            continue;
        }
        let lead = v.support(h)[0];
        if *v.get(lead) != h.one() {
            b.violation(
                format!("X supported on {}", ground.format_subset(&v.support(h))),
                "representative is not normalized at its least support position"
                    .to_string(),
            );
        }
    }
    for (i, x) in c.vectors().iter().enumerate() {
        for (j, y) in c.vectors().iter().enumerate() {
            if i == j {
                continue;
            }
            let (sx, sy) = (x.support(h), y.support(h));
            if is_subset(&sx, &sy) {
                b.violation(
                    format!(
                        "supports {} and {}",
                        ground.format_subset(&sx),
                        ground.format_subset(&sy)
                    ),
                    "distinct circuit orbits with nested supports".to_string(),
                );
            }
        }
    }
    Ok(b.finish("pre-circuit-axioms"))
}

/// Modular pairs of supports: distinct `S`, `T` such that no union of two
/// distinct supports fits strictly inside `S` together with `T`.
fn is_modular_pair(supports: &BTreeSet<Vec<usize>>, s: &[usize], t: &[usize]) -> bool {
    let union: BTreeSet<usize> = s.iter().chain(t).copied().collect();
    for a in supports {
        for b in supports {
            if a >= b {
                continue;
            }
            let ab: BTreeSet<usize> = a.iter().chain(b).copied().collect();
            if ab.is_subset(&union) && ab != union {
                return false;
            }
        }
    }
    true
}

/// The elimination axiom on modular pairs. For every modular pair `X`, `Y`
/// and every common support position `e`, some unit multiple of a stored
/// vector must land in `X(e) Y - Y(e) X` with a zero at `e`. The unit is
/// solved for exactly by intersecting per-position constraint sets.
pub fn verify_weak_circuits(c: &CircuitSet) -> Result<Report> {
    let pre = verify_pre_circuits(c)?;
    if !pre.pass {
        return Ok(Report::new("weak-circuit-axioms", pre.violations));
    }
    let h = c.hyperfield();
    let ground = c.ground();
    let n = ground.len();
    let supports: BTreeSet<Vec<usize>> = c.supports().into_iter().collect();
    let mut b = ReportBuilder::new();
    for x in c.vectors() {
        for y in c.vectors() {
            let (sx, sy) = (x.support(h), y.support(h));
            if sx >= sy || !is_modular_pair(&supports, &sx, &sy) {
                continue;
            }
            for &e in sx.iter().filter(|e| sy.contains(e)) {
                // Target sets W(f) = X(e)Y(f) - Y(e)X(f) per position f.
                let mut targets = Vec::with_capacity(n);
                for f in 0..n {
                    let s = h.mul(x.get(e), y.get(f))?;
                    let t = h.neg(&h.mul(y.get(e), x.get(f))?)?;
                    targets.push(h.hyperadd(&s, &t)?);
                }
                let mut found = false;
                'candidates: for z in c.vectors() {
                    if !h.is_zero(z.get(e)) {
                        continue;
                    }
                    // Solve for a unit a with a * Z inside the targets.
                    let mut allowed: Option<crate::hyperfield::HyperSubset> = None;
                    for f in 0..n {
                        if h.is_zero(z.get(f)) {
                            if !targets[f].contains(&h.zero()) {
                                continue 'candidates;
                            }
                        } else {
                            let constraint = targets[f].scale(h, &h.inv(z.get(f))?)?;
                            allowed = Some(match allowed {
                                None => constraint,
                                Some(prev) => prev.intersect(&constraint),
                            });
                        }
                    }
                    let ok = match allowed {
                        None => true,
                        Some(set) => set.contains_nonzero(h),
                    };
                    if ok {
                        found = true;
                        break;
                    }
                }
                if !found {
                    b.violation(
                        format!(
                            "X on {}, Y on {}, e={}",
                            ground.format_subset(&sx),
                            ground.format_subset(&sy),
                            ground.label(e)
                        ),
                        "no circuit eliminates e from the modular pair".to_string(),
                    );
                }
            }
        }
    }
    Ok(b.finish("weak-circuit-axioms"))
}

/// The ordinary circuit axioms on supports, plus the fundamental-circuit
/// decomposition against every basis.
pub fn verify_strong_circuits(c: &CircuitSet) -> Result<Report> {
    let pre = verify_pre_circuits(c)?;
    if !pre.pass {
        return Ok(Report::new("strong-circuit-axioms", pre.violations));
    }
    let h = c.hyperfield();
    let ground = c.ground();
    let n = ground.len();
    let supports: Vec<Vec<usize>> = c.supports();
    let mut b = ReportBuilder::new();

    // Ordinary circuit elimination on supports.
    for (i, s1) in supports.iter().enumerate() {
        for s2 in supports.iter().skip(i + 1) {
            for &e in s1.iter().filter(|e| s2.contains(e)) {
                let union_minus: Vec<usize> = s1
                    .iter()
                    .chain(s2.iter())
                    .copied()
                    .filter(|&f| f != e)
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
                if !supports.iter().any(|s3| is_subset(s3, &union_minus)) {
                    b.violation(
                        format!(
                            "supports {} and {}, e={}",
                            ground.format_subset(s1),
                            ground.format_subset(s2),
                            ground.label(e)
                        ),
                        "support family fails circuit elimination".to_string(),
                    );
                }
            }
        }
    }
    if !b.is_clean() {
        return Ok(b.finish("strong-circuit-axioms"));
    }

    // Decomposition axiom over the bases of the support matroid.
    let m = matroid_of_supports(n, &supports);
    for basis in m.bases() {
        // Fundamental circuit vectors rescaled to take value 1 at e.
        let mut fundamentals = Vec::new();
        for e in 0..n {
            if basis.contains(&e) {
                continue;
            }
            let circuit = m.fundamental_circuit(basis, e);
            let y = c
                .vectors()
                .iter()
                .find(|v| v.support(h) == circuit)
                .expect("every circuit support has a stored orbit");
            fundamentals.push((e, y.scale(h, &h.inv(y.get(e))?)?));
        }
        for x in c.vectors() {
            for f in 0..n {
                let mut terms = Vec::new();
                for (e, y) in &fundamentals {
                    terms.push(h.mul(x.get(*e), y.get(f))?);
                }
                let sum = h.hypersum(&terms)?;
                if !sum.contains(x.get(f)) {
                    b.violation(
                        format!(
                            "B={}, X on {}, f={}",
                            ground.format_subset(basis),
                            ground.format_subset(&x.support(h)),
                            ground.label(f)
                        ),
                        "fundamental-circuit decomposition misses X(f)".to_string(),
                    );
                }
            }
        }
    }
    Ok(b.finish("strong-circuit-axioms"))
}

/// The matroid whose circuits are the given supports: independent sets are
/// those containing no support.
fn matroid_of_supports(n: usize, supports: &[Vec<usize>]) -> UnderlyingMatroid {
    let mut best = 0;
    let mut independents: Vec<Vec<usize>> = Vec::new();
    for size in 0..=n {
        let layer: Vec<Vec<usize>> = sorted_subsets(n, size)
            .into_iter()
            .filter(|s| !supports.iter().any(|c| is_subset(c, s)))
            .collect();
        if layer.is_empty() {
            break;
        }
        best = size;
        independents = layer;
    }
    UnderlyingMatroid::from_bases(n, best, independents)
        .expect("maximal independent sets are valid bases")
}

/// Convenience wrapper: reports for the requested circuit axiom level.
pub fn circuit_reports(c: &CircuitSet, strong: bool) -> Result<Vec<Report>> {
    let mut reports = vec![verify_pre_circuits(c)?];
    if strong {
        reports.push(verify_strong_circuits(c)?);
    } else {
        reports.push(verify_weak_circuits(c)?);
    }
    Ok(reports)
}

/// Every stored circuit against every stored cocircuit, with the given
/// orthogonality.
pub fn verify_orthogonality(
    circuits: &CircuitSet,
    cocircuits: &CircuitSet,
    strong: bool,
) -> Result<Report> {
    let h = circuits.hyperfield();
    let ground = circuits.ground();
    let mut b = ReportBuilder::new();
    for x in circuits.vectors() {
        for y in cocircuits.vectors() {
            let ok = if strong {
                x.strong_orthogonal(h, y)?
            } else {
                x.weak_orthogonal(h, y)?
            };
            if !ok {
                b.violation(
                    format!(
                        "circuit on {}, cocircuit on {}",
                        ground.format_subset(&x.support(h)),
                        ground.format_subset(&y.support(h))
                    ),
                    "pair is not orthogonal".to_string(),
                );
            }
        }
    }
    Ok(b.finish("circuit-cocircuit-orthogonality"))
}

/// Helper shared by tests and the command line: an `HVector` from element
/// strings.
pub fn vector_from_strs(h: &Hyperfield, coords: &[&str]) -> Result<HVector> {
    let parsed = coords
        .iter()
        .map(|s| h.parse_element(s))
        .collect::<Result<Vec<_>>>()?;
    HVector::new(h, parsed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::circuits::circuits_from_gpf;
    use crate::matroid::GroundSet;

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
    fn alternating_uniform_is_weak_and_strong() {
        let phi = uniform_signs(4, 2);
        assert!(verify_weak_gpf(&phi).unwrap().pass);
        assert!(verify_strong_gpf(&phi).unwrap().pass);
    }

    #[test]
    fn non_matroid_indicator_fails_both() {
        let ground = GroundSet::from_size(4);
        let phi = GPFunction::indicator(
            Hyperfield::Krasner,
            ground,
            2,
            &[vec![0, 1], vec![2, 3]],
        )
        .unwrap();
        assert!(!verify_weak_gpf(&phi).unwrap().pass);
        assert!(!verify_strong_gpf(&phi).unwrap().pass);
    }

    #[test]
    fn sign_flips_split_into_valid_and_invalid_orientations() {
        // Negating an adjacent pair realizes a reordering of collinear
        // points, so it stays valid; negating a crossing pair makes all
        // three products in some quadruple relation agree in sign.
        let phi = uniform_signs(4, 2);
        let flip = |pair: Vec<usize>| {
            let mut values: std::collections::BTreeMap<Vec<usize>, Element> = phi
                .entries()
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            values.insert(pair, Element::Sign(-1));
            GPFunction::new(Hyperfield::Signs, GroundSet::from_size(4), 2, values)
                .unwrap()
        };
        let still_fine = flip(vec![0, 1]);
        assert!(verify_weak_gpf(&still_fine).unwrap().pass);
        assert!(verify_strong_gpf(&still_fine).unwrap().pass);
        let broken = flip(vec![0, 2]);
        assert!(!verify_weak_gpf(&broken).unwrap().pass);
        assert!(!verify_strong_gpf(&broken).unwrap().pass);
    }

    #[test]
    fn circuits_of_uniform_pass_both_levels() {
        let phi = uniform_signs(4, 2);
        let c = circuits_from_gpf(&phi).unwrap();
        assert!(verify_pre_circuits(&c).unwrap().pass);
        assert!(verify_weak_circuits(&c).unwrap().pass);
        assert!(verify_strong_circuits(&c).unwrap().pass);
    }

    #[test]
    fn tampered_circuit_value_is_caught() {
        let phi = uniform_signs(4, 2);
        let c = circuits_from_gpf(&phi).unwrap();
        let mut vectors: Vec<HVector> = c.vectors().to_vec();
        // Flip one interior sign of one circuit: supports stay a matroid but
        // the decomposition and elimination conditions now fail.
        let broken = vectors[0].clone();
        let h = Hyperfield::Signs;
        let mut coords = broken.coords().to_vec();
        let support = broken.support(&h);
        coords[support[1]] = h.neg(&coords[support[1]]).unwrap();
        vectors[0] = HVector::new(&h, coords).unwrap();
        let tampered =
            CircuitSet::from_vectors(h, GroundSet::from_size(4), vectors).unwrap();
        assert!(!verify_strong_circuits(&tampered).unwrap().pass);
        assert!(!verify_weak_circuits(&tampered).unwrap().pass);
    }

    #[test]
    fn empty_circuit_set_passes() {
        // A free matroid has no circuits at all.
        let ground = GroundSet::from_size(3);
        let c = CircuitSet::from_vectors(Hyperfield::Signs, ground, []).unwrap();
        assert!(verify_pre_circuits(&c).unwrap().pass);
        assert!(verify_weak_circuits(&c).unwrap().pass);
        assert!(verify_strong_circuits(&c).unwrap().pass);
    }
}
