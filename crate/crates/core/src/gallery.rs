//! Ready-made frameworks used by the test suites and the CLI examples:
//! small instances with known rigidity behavior under the various
//! constraint models.

use crate::exactla::{rat, rint, Rat};
use crate::matrices::{Configuration, Hyperplane};
use crate::phgraph::{EdgeSubset, PointHyperplaneGraph};
use std::collections::{BTreeMap, BTreeSet};

/// 7-vertex, 11-edge graph that is generically rigid in the plane but
/// cannot be realized rigidly with its three designated vertices
/// collinear. Returns the graph (points 0-3, lines 4-6) and the
/// designated set X = {4, 5, 6}.
///
/// Two doubly-braced bars share the middle line vertex, and the outer
/// line vertices are tied by one extra edge.
pub fn three_collinear_counterexample() -> (PointHyperplaneGraph, BTreeSet<usize>) {
    let edges = [
        (0usize, 1usize), // bar of the first block
        (2, 3),           // bar of the second block
        (0, 4),
        (0, 5),
        (1, 4),
        (1, 5),
        (2, 5),
        (2, 6),
        (3, 5),
        (3, 6),
        (4, 6), // tie between the outer designated vertices
    ];
    let g = PointHyperplaneGraph::new(4, 3, &edges).unwrap();
    let x = [4, 5, 6].into_iter().collect();
    (g, x)
}

/// The three blocks of the witness partition for
/// [`three_collinear_counterexample`]: edges induced by {4,0,1,5},
/// {5,2,3,6} and {4,6}.
pub fn three_collinear_blocks(g: &PointHyperplaneGraph) -> [EdgeSubset; 3] {
    [
        EdgeSubset::new(g, vec![0, 2, 3, 4, 5]).unwrap(),
        EdgeSubset::new(g, vec![1, 6, 7, 8, 9]).unwrap(),
        EdgeSubset::new(g, vec![10]).unwrap(),
    ]
}

/// Rational point-line placement for [`three_collinear_counterexample`]
/// with exact unit normals, suitable for the exact transfer pipeline.
pub fn three_collinear_config() -> Configuration<Rat> {
    let mut points = BTreeMap::new();
    points.insert(0, vec![rat(-1, 2), rat(2, 5)]);
    points.insert(1, vec![rat(-1, 4), rat(7, 20)]);
    points.insert(2, vec![rat(-1, 10), rat(-7, 10)]);
    points.insert(3, vec![rat(-1, 5), rat(-1, 5)]);
    let mut lines = BTreeMap::new();
    lines.insert(
        4,
        Hyperplane {
            normal: vec![rint(0), rint(1)],
            offset: rat(-3, 2),
        },
    );
    lines.insert(
        5,
        Hyperplane {
            normal: vec![rat(3, 5), rat(-4, 5)],
            offset: rat(1, 10),
        },
    );
    lines.insert(
        6,
        Hyperplane {
            normal: vec![rat(-4, 5), rat(3, 5)],
            offset: rat(1, 5),
        },
    );
    Configuration {
        dim: 2,
        points,
        lines,
    }
}

/// Four bodies linked in a chain through five sliders, modeled as a
/// point-line graph: each body is a bar (two points with a distance
/// constraint) and each slider is a line linked to its incident bodies.
/// Points are 0-7 (bodies B1..B4 in order), lines are 8-12.
///
/// Returns the graph and the partition of the edge set by body.
pub fn sliding_pair_chain() -> (PointHyperplaneGraph, Vec<EdgeSubset>) {
    // Lines: 8 = l1, 9 = l2, 10 = l3, 11 = l4, 12 = l5.
    // B1 = {0,1} on l2, l5, l3; B2 = {2,3} on l4, l3;
    // B3 = {4,5} on l1, l5, l4; B4 = {6,7} on l2, l1.
    let edges = [
        // body B1
        (0usize, 1usize),
        (0, 9),
        (0, 12),
        (0, 10),
        (1, 9),
        (1, 12),
        (1, 10),
        // body B2
        (2, 3),
        (2, 11),
        (2, 10),
        (3, 11),
        (3, 10),
        // body B3
        (4, 5),
        (4, 8),
        (4, 12),
        (4, 11),
        (5, 8),
        (5, 12),
        (5, 11),
        // body B4
        (6, 7),
        (6, 9),
        (6, 8),
        (7, 9),
        (7, 8),
    ];
    let g = PointHyperplaneGraph::new(8, 5, &edges).unwrap();
    let blocks = vec![
        EdgeSubset::new(&g, (0..7).collect()).unwrap(),
        EdgeSubset::new(&g, (7..12).collect()).unwrap(),
        EdgeSubset::new(&g, (12..19).collect()).unwrap(),
        EdgeSubset::new(&g, (19..24).collect()).unwrap(),
    ];
    (g, blocks)
}

/// Braced quadrilateral with two points tied to each of two fixed lines:
/// minimally infinitesimally fixed-line rigid at the returned placement.
/// Points 0-3, lines 4 (the x-axis) and 5.
pub fn fixed_line_quad() -> (PointHyperplaneGraph, Configuration<Rat>) {
    let edges = [
        (0usize, 2usize),
        (1, 3),
        (0, 3),
        (1, 2),
        (0, 4),
        (1, 4),
        (2, 5),
        (3, 5),
    ];
    let g = PointHyperplaneGraph::new(4, 2, &edges).unwrap();
    let mut points = BTreeMap::new();
    points.insert(0, vec![rint(2), rat(1, 2)]);
    points.insert(1, vec![rat(7, 2), rat(3, 5)]);
    points.insert(2, vec![rint(2), rat(6, 5)]);
    points.insert(3, vec![rat(7, 2), rat(17, 10)]);
    let mut lines = BTreeMap::new();
    lines.insert(
        4,
        Hyperplane {
            normal: vec![rint(0), rint(1)],
            offset: rint(0),
        },
    );
    lines.insert(
        5,
        Hyperplane {
            normal: vec![rat(3, 5), rat(4, 5)],
            offset: rint(-2),
        },
    );
    (g, points_lines_config(points, lines))
}

/// Triangle of points, each tied to one of three lines: one constraint
/// short of fixed-normal rigidity (6 edges, the count needs 7).
/// Points 0-2, lines 3-5.
pub fn fixed_normal_triangle() -> PointHyperplaneGraph {
    let edges = [
        (0usize, 1usize),
        (0, 2),
        (1, 2),
        (0, 3),
        (1, 4),
        (2, 5),
    ];
    PointHyperplaneGraph::new(3, 3, &edges).unwrap()
}

/// Two bars, each tied to both of two concurrent lines, plus one extra
/// point-line tie: 9 = 2*4 + 2 - 1 edges. Minimally fixed-intercept
/// rigid for distinct line normals; with equal normals the 8-edge subset
/// returned alongside violates the component-corrected count (bound 7).
/// Points 0-3, lines 4-5.
pub fn intercept_two_bars() -> (PointHyperplaneGraph, EdgeSubset) {
    let edges = [
        (0usize, 1usize), // bar one
        (2, 3),           // bar two
        (0, 4),
        (0, 5),
        (1, 4),
        (1, 5), // the extra tie; dropping it gives the violating subset
        (2, 4),
        (2, 5),
        (3, 5),
    ];
    let g = PointHyperplaneGraph::new(4, 2, &edges).unwrap();
    let f = EdgeSubset::new(&g, vec![0, 1, 2, 3, 4, 6, 7, 8]).unwrap();
    (g, f)
}

/// Distinct unit normals for [`intercept_two_bars`].
pub fn intercept_distinct_normals() -> BTreeMap<usize, Vec<Rat>> {
    let mut m = BTreeMap::new();
    m.insert(4, vec![rint(0), rint(1)]);
    m.insert(5, vec![rat(3, 5), rat(4, 5)]);
    m
}

/// Equal unit normals for [`intercept_two_bars`] (the degenerate case).
pub fn intercept_equal_normals() -> BTreeMap<usize, Vec<Rat>> {
    let mut m = BTreeMap::new();
    m.insert(4, vec![rint(0), rint(1)]);
    m.insert(5, vec![rint(0), rint(1)]);
    m
}

/// Mixed-constraint demo: two points joined by a bar, eight lines with
/// every constraint flavor. Lines 2, 3 have fixed normals; line 4 is
/// fully fixed; {5, 6, 7} and {8, 9} rotate about fixed centres.
pub struct MixedDemo {
    pub g: PointHyperplaneGraph,
    pub fixed: Vec<usize>,
    pub fixed_normal: Vec<usize>,
    pub rotation_classes: Vec<Vec<usize>>,
}

pub fn mixed_constraint_demo() -> MixedDemo {
    let edges = [
        (0usize, 1usize),
        (0, 2),
        (1, 3),
        (0, 4),
        (1, 4),
        (0, 5),
        (1, 6),
        (0, 7),
        (1, 8),
        (0, 9),
        (1, 9),
    ];
    let g = PointHyperplaneGraph::new(2, 8, &edges).unwrap();
    MixedDemo {
        g,
        fixed: vec![4],
        fixed_normal: vec![2, 3],
        rotation_classes: vec![vec![5, 6, 7], vec![8, 9]],
    }
}

fn points_lines_config(
    points: BTreeMap<usize, Vec<Rat>>,
    lines: BTreeMap<usize, Hyperplane<Rat>>,
) -> Configuration<Rat> {
    Configuration {
        dim: 2,
        points,
        lines,
    }
}
