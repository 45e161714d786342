//! Shared corpus of known matroids over assorted hyperfields, each built
//! from first principles (indicator bases, hand-checked values, or an
//! integer determinant oracle) rather than from the library's own
//! constructions.

#![allow(dead_code)]

use hypermatroid::hyperfield::{Element, Hyperfield};
use hypermatroid::matroid::{sorted_subsets, GPFunction, GroundSet};
use std::collections::BTreeMap;

pub fn indicator(h: Hyperfield, n: usize, rank: usize, bases: &[Vec<usize>]) -> GPFunction {
    GPFunction::indicator(h, GroundSet::from_size(n), rank, bases).unwrap()
}

pub fn uniform(h: Hyperfield, n: usize, rank: usize) -> GPFunction {
    indicator(h, n, rank, &sorted_subsets(n, rank))
}

/// Spanning trees of the complete graph on four vertices: every edge
/// triple except the four triangles.
pub fn k4_bases() -> Vec<Vec<usize>> {
    let triangles = [
        vec![0, 1, 3],
        vec![0, 2, 4],
        vec![1, 2, 5],
        vec![3, 4, 5],
    ];
    sorted_subsets(6, 3)
        .into_iter()
        .filter(|s| !triangles.contains(s))
        .collect()
}

pub fn k4_krasner() -> GPFunction {
    let bases = k4_bases();
    assert_eq!(bases.len(), 16);
    indicator(Hyperfield::Krasner, 6, 3, &bases)
}

/// The signed graphic matroid of the complete graph on four vertices,
/// via exact 3x3 determinants of reduced incidence columns.
pub fn k4_signs() -> GPFunction {
    let edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let column = |(u, v): (usize, usize)| -> [i64; 3] {
        let mut c = [0i64; 3];
        if u < 3 {
            c[u] = 1;
        }
        if v < 3 {
            c[v] = -1;
        }
        c
    };
    let det3 = |a: [i64; 3], b: [i64; 3], c: [i64; 3]| -> i64 {
        a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0])
    };
    let mut values = BTreeMap::new();
    for triple in sorted_subsets(6, 3) {
        let d = det3(
            column(edges[triple[0]]),
            column(edges[triple[1]]),
            column(edges[triple[2]]),
        );
        if d != 0 {
            values.insert(triple, Element::Sign(d.signum() as i8));
        }
    }
    assert_eq!(values.len(), 16);
    GPFunction::new(Hyperfield::Signs, GroundSet::from_size(6), 3, values).unwrap()
}

/// A valuated uniform matroid: rational values on the three bases.
pub fn u23_tropical() -> GPFunction {
    let mut values = BTreeMap::new();
    values.insert(vec![0, 1], Element::tropical(0, 1));
    values.insert(vec![0, 2], Element::tropical(1, 1));
    values.insert(vec![1, 2], Element::tropical(2, 1));
    GPFunction::new(Hyperfield::Tropical, GroundSet::from_size(3), 2, values).unwrap()
}

/// The phase matroid of three points on the unit circle at equally spaced
/// angles: the value on a pair is the direction of the chord between the
/// two points, computed by hand as exact turns.
pub fn u23_phase() -> GPFunction {
    let mut values = BTreeMap::new();
    values.insert(vec![0, 1], Element::phase_turn(5, 12));
    values.insert(vec![0, 2], Element::phase_turn(7, 12));
    values.insert(vec![1, 2], Element::phase_turn(3, 4));
    GPFunction::new(Hyperfield::Phase, GroundSet::from_size(3), 2, values).unwrap()
}

/// At least ten named matroids spanning all built-in hyperfields, ranks 0
/// through 3, with loops, parallel elements, and a graphic example.
pub fn corpus() -> Vec<(&'static str, GPFunction)> {
    vec![
        ("free-point", uniform(Hyperfield::Krasner, 1, 1)),
        ("loop", uniform(Hyperfield::Krasner, 1, 0)),
        ("u12-signs", uniform(Hyperfield::Signs, 2, 1)),
        ("u13-signs", uniform(Hyperfield::Signs, 3, 1)),
        ("u23-signs", uniform(Hyperfield::Signs, 3, 2)),
        ("u24-signs", uniform(Hyperfield::Signs, 4, 2)),
        ("u25-krasner", uniform(Hyperfield::Krasner, 5, 2)),
        ("u35-krasner", uniform(Hyperfield::Krasner, 5, 3)),
        ("u34-krasner", uniform(Hyperfield::Krasner, 4, 3)),
        ("k4-krasner", k4_krasner()),
        ("k4-signs", k4_signs()),
        ("u23-tropical", u23_tropical()),
        ("u23-phase", u23_phase()),
        (
            "point-with-loops",
            indicator(Hyperfield::Krasner, 3, 1, &[vec![0]]),
        ),
    ]
}

pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_hypermatroid")
}
