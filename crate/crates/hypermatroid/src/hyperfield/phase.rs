//! Exact arithmetic on the phase circle.
//!
//! Angles are rational turns in `[0, 1)`. A phase hypersum is a region of the
//! circle: a zero flag, finitely many isolated angles, and finitely many open
//! arcs. Regions are kept canonical: arcs are maximal, pairwise disjoint, and
//! no stored point is interior to a stored arc.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

pub type Turn = BigRational;

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Reduce a rational to `[0, 1)` modulo full turns.
pub fn mod1(q: &BigRational) -> BigRational {
    q - q.floor()
}

fn half() -> BigRational {
    rat(1, 2)
}

fn quarter() -> BigRational {
    rat(1, 4)
}

/// Open arc `(start, start+len)` counterclockwise, `0 < len < 1`; excludes endpoints.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arc {
    pub start: Turn,
    pub len: Turn,
}

impl Arc {
    fn contains(&self, t: &Turn) -> bool {
        let d = mod1(&(t - &self.start));
        !d.is_zero() && d < self.len
    }

    fn end(&self) -> Turn {
        mod1(&(&self.start + &self.len))
    }
}

/// Canonical subset of the phase carrier arising from hypersums.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PhaseRegion {
    pub zero: bool,
    pub points: BTreeSet<Turn>,
    pub arcs: Vec<Arc>,
}

impl PhaseRegion {
    pub fn empty() -> Self {
        PhaseRegion {
            zero: false,
            points: BTreeSet::new(),
            arcs: Vec::new(),
        }
    }

    pub fn zero_only() -> Self {
        PhaseRegion {
            zero: true,
            ..PhaseRegion::empty()
        }
    }

    pub fn single_turn(t: &Turn) -> Self {
        let mut points = BTreeSet::new();
        points.insert(mod1(t));
        PhaseRegion {
            zero: false,
            points,
            arcs: Vec::new(),
        }
    }

    pub fn contains_turn(&self, t: &Turn) -> bool {
        let t = mod1(t);
        self.points.contains(&t) || self.arcs.iter().any(|a| a.contains(&t))
    }

    pub fn is_empty(&self) -> bool {
        !self.zero && self.points.is_empty() && self.arcs.is_empty()
    }

    pub fn has_nonzero(&self) -> bool {
        !self.points.is_empty() || !self.arcs.is_empty()
    }

    /// Rotate the whole region by `t` turns (multiplication by a unit phase).
    pub fn rotate(&self, t: &Turn) -> PhaseRegion {
        PhaseRegion {
            zero: self.zero,
            points: self.points.iter().map(|p| mod1(&(p + t))).collect(),
            arcs: canonical_arcs(
                self.arcs
                    .iter()
                    .map(|a| Arc {
                        start: mod1(&(&a.start + t)),
                        len: a.len.clone(),
                    })
                    .collect(),
            ),
        }
    }

    /// Intersection of two canonical regions.
    pub fn intersect(&self, other: &PhaseRegion) -> PhaseRegion {
        let mut critical: BTreeSet<Turn> = BTreeSet::new();
        for r in [self, other] {
            critical.extend(r.points.iter().cloned());
            for a in &r.arcs {
                critical.insert(a.start.clone());
                critical.insert(a.end());
            }
        }
        from_membership(self.zero && other.zero, &critical, |t| {
            self.contains_turn(t) && other.contains_turn(t)
        })
    }
}

fn canonical_arcs(mut arcs: Vec<Arc>) -> Vec<Arc> {
    arcs.sort();
    arcs
}

/// Raw, not-yet-canonical pieces accumulated during a sum.
#[derive(Default, Debug)]
struct RawPieces {
    zero: bool,
    points: Vec<Turn>,
    arcs: Vec<Arc>,
}

impl RawPieces {
    fn point(&mut self, t: Turn) {
        self.points.push(mod1(&t));
    }

    fn arc(&mut self, start: Turn, len: Turn) {
        debug_assert!(len.is_positive() && len < BigRational::one());
        self.arcs.push(Arc {
            start: mod1(&start),
            len,
        });
    }
}

/// Build the canonical region whose membership on the circle is `member`,
/// given that membership is constant on the open gaps between `critical` angles.
fn from_membership(
    zero: bool,
    critical: &BTreeSet<Turn>,
    member: impl Fn(&Turn) -> bool,
) -> PhaseRegion {
    if critical.is_empty() {
        return PhaseRegion {
            zero,
            points: BTreeSet::new(),
            arcs: Vec::new(),
        };
    }
    let ds: Vec<Turn> = critical.iter().cloned().collect();
    let n = ds.len();
    // Item 2i is the critical point ds[i]; item 2i+1 is the open gap after it.
    let mut item_member = Vec::with_capacity(2 * n);
    for i in 0..n {
        item_member.push(member(&ds[i]));
        let next = if i + 1 < n {
            ds[i + 1].clone()
        } else {
            &ds[0] + BigRational::one()
        };
        let mid = mod1(&((&ds[i] + &next) / BigRational::from(BigInt::from(2))));
        item_member.push(member(&mid));
    }
    let total = 2 * n;
    if item_member.iter().all(|&m| m) {
        // Full circle: split at the least critical angle and its antipode.
        let d0 = ds[0].clone();
        let h = mod1(&(&d0 + half()));
        let mut points = BTreeSet::new();
        points.insert(d0.clone());
        points.insert(h.clone());
        let arcs = canonical_arcs(vec![
            Arc {
                start: d0,
                len: half(),
            },
            Arc {
                start: h,
                len: half(),
            },
        ]);
        return PhaseRegion { zero, points, arcs };
    }
    let start_scan = item_member.iter().position(|&m| !m).unwrap();
    let mut points = BTreeSet::new();
    let mut arcs = Vec::new();
    let mut k = 0;
    while k < total {
        let idx = (start_scan + 1 + k) % total;
        if !item_member[idx] {
            k += 1;
            continue;
        }
        // Maximal member run starting at idx.
        let mut run = vec![idx];
        while run.len() < total {
            let nxt = (idx + run.len()) % total;
            if item_member[nxt] {
                run.push(nxt);
            } else {
                break;
            }
        }
        k += run.len();
        emit_run(&ds, &run, &mut points, &mut arcs);
    }
    PhaseRegion {
        zero,
        points,
        arcs: canonical_arcs(arcs),
    }
}

/// Emit one maximal member run (a circular component) as canonical points/arcs.
fn emit_run(ds: &[Turn], run: &[usize], points: &mut BTreeSet<Turn>, arcs: &mut Vec<Arc>) {
    let n = ds.len();
    let first = run[0];
    let last = *run.last().unwrap();
    if run.len() == 1 && first % 2 == 0 {
        points.insert(ds[first / 2].clone());
        return;
    }
    // Start angle: a point item starts closed at itself; a gap item starts open
    // at the gap's left endpoint.
    let (start, closed_start) = if first % 2 == 0 {
        (ds[first / 2].clone(), true)
    } else {
        (ds[first / 2].clone(), false)
    };
    let (end, closed_end) = if last % 2 == 0 {
        (ds[last / 2].clone(), true)
    } else {
        (ds[(last / 2 + 1) % n].clone(), false)
    };
    if closed_start {
        points.insert(start.clone());
    }
    if closed_end {
        points.insert(end.clone());
    }
    let len = mod1(&(&end - &start));
    if len.is_zero() {
        // The run wraps the whole circle except one critical point: split the
        // stored arc at the least interior critical angle (n >= 2 here).
        let m = ds
            .iter()
            .find(|d| **d != start)
            .expect("wrap run requires a second critical angle")
            .clone();
        points.insert(m.clone());
        arcs.push(Arc {
            start: start.clone(),
            len: mod1(&(&m - &start)),
        });
        arcs.push(Arc {
            start: m.clone(),
            len: mod1(&(&start - &m)),
        });
        return;
    }
    arcs.push(Arc { start, len });
}

fn canonicalize(raw: RawPieces) -> PhaseRegion {
    let mut critical: BTreeSet<Turn> = BTreeSet::new();
    for p in &raw.points {
        critical.insert(p.clone());
    }
    for a in &raw.arcs {
        critical.insert(a.start.clone());
        critical.insert(a.end());
    }
    let points = raw.points.clone();
    let arcs = raw.arcs.clone();
    from_membership(raw.zero, &critical, move |t| {
        points.contains(t) || arcs.iter().any(|a| a.contains(t))
    })
}

/// Open-arc intersection on the circle; at most two components.
fn arc_intersect(a: &Arc, window_start: &Turn, window_len: &Turn) -> Vec<Arc> {
    let s = mod1(&a.start);
    let a_lo = s.clone();
    let a_hi = &s + &a.len;
    let w = mod1(window_start);
    let mut out = Vec::new();
    for k in -1..=1 {
        let shift = BigRational::from(BigInt::from(k));
        let w_lo = &w + &shift;
        let w_hi = &w_lo + window_len;
        let lo = if a_lo > w_lo { a_lo.clone() } else { w_lo };
        let hi = if a_hi < w_hi { a_hi.clone() } else { w_hi };
        if lo < hi {
            out.push(Arc {
                start: mod1(&lo),
                len: &hi - &lo,
            });
        }
    }
    out
}

/// Hyperaddition of two nonzero phases, as raw pieces.
///
/// Antipodal phases sum to `{a, 0, -a}`; equal phases to `{a}`; otherwise the
/// sum is the open shorter arc between the two, endpoints excluded.
fn point_add_point(raw: &mut RawPieces, a: &Turn, b: &Turn) {
    let d = mod1(&(b - a));
    if d.is_zero() {
        raw.point(a.clone());
    } else if d == half() {
        raw.point(a.clone());
        raw.point(b.clone());
        raw.zero = true;
    } else if d < half() {
        raw.arc(a.clone(), d);
    } else {
        raw.arc(b.clone(), BigRational::one() - d);
    }
}

/// Region plus one nonzero phase point, exactly.
pub fn region_add_point(region: &PhaseRegion, c: &Turn) -> PhaseRegion {
    let c = mod1(c);
    let neg_c = mod1(&(&c + half()));
    let mut raw = RawPieces::default();
    if region.zero {
        raw.point(c.clone());
    }
    for p in &region.points {
        point_add_point(&mut raw, p, &c);
    }
    for a in &region.arcs {
        if a.contains(&c) {
            raw.point(c.clone());
        }
        if a.contains(&neg_c) {
            raw.point(c.clone());
            raw.point(neg_c.clone());
            raw.zero = true;
        }
        // Arc points within the half turn before c sweep out arcs ending at c;
        // those within the half turn after c sweep out arcs starting at c.
        let before = mod1(&(&c - half()));
        for piece in arc_intersect(a, &before, &half()) {
            raw.arc(piece.start.clone(), mod1(&(&c - &piece.start)));
        }
        for piece in arc_intersect(a, &c, &half()) {
            raw.arc(c.clone(), mod1(&(piece.end() - &c)));
        }
    }
    canonicalize(raw)
}

/// Sign of `cos(2*pi*t)` for a rational turn `t`.
fn cos_sign(t: &Turn) -> i8 {
    let m = mod1(t);
    let q = quarter();
    let tq = rat(3, 4);
    if m == q || m == tq {
        0
    } else if m < q || m > tq {
        1
    } else {
        -1
    }
}

/// Whether some strictly positive combination of the given unit phases is zero.
///
/// Dual certificate search: the combination fails to exist exactly when some
/// direction `u` has `<x_i, u> >= 0` for all terms with at least one strict
/// inequality, and in the plane such a `u` can be found among the term
/// directions and their quarter-turn rotations.
pub fn positive_span_contains_zero(turns: &[Turn]) -> bool {
    if turns.is_empty() {
        return true;
    }
    let dirs: BTreeSet<Turn> = turns.iter().map(mod1).collect();
    let mut candidates: Vec<Turn> = Vec::new();
    for d in &dirs {
        candidates.push(d.clone());
        candidates.push(mod1(&(d + quarter())));
        candidates.push(mod1(&(d - quarter())));
    }
    for u in &candidates {
        let mut all_nonneg = true;
        let mut some_pos = false;
        for d in &dirs {
            match cos_sign(&(d - u)) {
                1 => some_pos = true,
                0 => {}
                _ => {
                    all_nonneg = false;
                    break;
                }
            }
        }
        if all_nonneg && some_pos {
            return false;
        }
    }
    true
}

/// Whether the hypersum of the given nonzero phases contains the phase `theta`.
pub fn positive_span_contains_turn(turns: &[Turn], theta: &Turn) -> bool {
    if turns.is_empty() {
        return false;
    }
    let mut with_opposite = turns.to_vec();
    with_opposite.push(mod1(&(theta + half())));
    positive_span_contains_zero(&with_opposite)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn region_of(turns: &[(i64, i64)]) -> PhaseRegion {
        let mut r = PhaseRegion::zero_only();
        for (n, d) in turns {
            r = region_add_point(&r, &rat(*n, *d));
        }
        r
    }

    #[test]
    fn shorter_arc_between_two_points() {
        // 1 + i: open arc strictly between turn 0 and turn 1/4.
        let r = region_of(&[(0, 1), (1, 4)]);
        assert!(!r.zero);
        assert!(r.points.is_empty());
        assert_eq!(
            r.arcs,
            vec![Arc {
                start: rat(0, 1),
                len: rat(1, 4)
            }]
        );
        assert!(r.contains_turn(&rat(1, 8)));
        assert!(!r.contains_turn(&rat(0, 1)));
        assert!(!r.contains_turn(&rat(1, 4)));
    }

    #[test]
    fn antipodal_pair_gives_points_and_zero() {
        let r = region_of(&[(0, 1), (1, 2)]);
        assert!(r.zero);
        assert_eq!(
            r.points.iter().cloned().collect::<Vec<_>>(),
            vec![rat(0, 1), rat(1, 2)]
        );
        assert!(r.arcs.is_empty());
    }

    #[test]
    fn equal_points_sum_to_singleton() {
        let r = region_of(&[(1, 3), (1, 3)]);
        assert!(!r.zero);
        assert_eq!(
            r.points.iter().cloned().collect::<Vec<_>>(),
            vec![rat(1, 3)]
        );
        assert!(r.arcs.is_empty());
    }

    #[test]
    fn three_cube_roots_contain_zero() {
        let r = region_of(&[(0, 1), (1, 3), (2, 3)]);
        assert!(r.zero);
        assert!(positive_span_contains_zero(&[rat(0, 1), rat(1, 3), rat(2, 3)]));
    }

    #[test]
    fn antipodal_pair_plus_third_does_not_contain_zero() {
        // {v, -v, w} admits no all-positive vanishing combination.
        let r = region_of(&[(0, 1), (1, 2), (1, 4)]);
        assert!(!r.zero);
        assert!(!positive_span_contains_zero(&[rat(0, 1), rat(1, 2), rat(1, 4)]));
        // It sweeps the open half circle through w.
        assert_eq!(
            r.arcs,
            vec![Arc {
                start: rat(0, 1),
                len: rat(1, 2)
            }]
        );
    }

    #[test]
    fn arc_merging_across_shared_endpoint() {
        // {1, -1} then + i: (0,1/4) + {1/4} + (1/4,1/2) merge to (0,1/2).
        let r = region_of(&[(0, 1), (1, 2), (1, 4)]);
        assert_eq!(r.arcs.len(), 1);
        assert!(r.contains_turn(&rat(1, 4)));
    }

    #[test]
    fn membership_matches_predicate_on_twelfths() {
        let twelfths: Vec<Turn> = (0..12).map(|k| rat(k, 12)).collect();
        let lists: Vec<Vec<Turn>> = vec![
            vec![rat(0, 1)],
            vec![rat(0, 1), rat(5, 12)],
            vec![rat(1, 12), rat(7, 12)],
            vec![rat(0, 1), rat(4, 12), rat(8, 12)],
            vec![rat(0, 1), rat(6, 12), rat(3, 12)],
            vec![rat(1, 12), rat(2, 12), rat(3, 12), rat(11, 12)],
        ];
        for terms in &lists {
            let mut r = PhaseRegion::zero_only();
            for t in terms {
                r = region_add_point(&r, t);
            }
            assert_eq!(
                r.zero,
                positive_span_contains_zero(terms),
                "zero membership mismatch for {terms:?}"
            );
            for theta in &twelfths {
                assert_eq!(
                    r.contains_turn(theta),
                    positive_span_contains_turn(terms, theta),
                    "membership mismatch at {theta} for {terms:?}"
                );
            }
        }
    }
}
