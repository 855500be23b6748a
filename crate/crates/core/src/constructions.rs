//! Graph surgeries that reduce constrained point-line models to the
//! unconstrained one: tying the line vertices together with a tree,
//! pinning the residual rotation, and the mixed-constraint augmentation
//! that absorbs fixed lines, fixed normals, and rotation centres into a
//! rigid block.

use crate::error::{Error, Result};
use crate::exactla::{perp_cw, ColPart, LabeledMatrix, Rat, RowLabel, Scalar};
use crate::matrices::Configuration;
use crate::phgraph::PointHyperplaneGraph;
use num::{One, Zero};
use std::collections::BTreeSet;

/// `G + T`: add a spanning tree on the line vertices as line-line edges.
/// With no tree given, the path in ascending vertex order is used. A
/// single line vertex leaves the graph unchanged.
pub fn add_normal_tree(
    g: &PointHyperplaneGraph,
    tree_edges: Option<&[(usize, usize)]>,
) -> Result<PointHyperplaneGraph> {
    let lv = g.line_vertices();
    if lv.is_empty() {
        return Err(Error::NotATree("graph has no line vertices".into()));
    }
    let tree: Vec<(usize, usize)> = match tree_edges {
        Some(t) => t.to_vec(),
        None => lv.windows(2).map(|w| (w[0], w[1])).collect(),
    };
    if tree.len() != lv.len() - 1 {
        return Err(Error::NotATree(format!(
            "a spanning tree on {} line vertices has {} edges, got {}",
            lv.len(),
            lv.len() - 1,
            tree.len()
        )));
    }
    for &(u, v) in &tree {
        if !g.is_line(u) || !g.is_line(v) {
            return Err(Error::NotATree(format!(
                "tree edge {{{u},{v}}} leaves the line vertices"
            )));
        }
    }
    // Connectivity: a tree with |V_L| - 1 edges spans iff it connects.
    {
        let mut reach: BTreeSet<usize> = [lv[0]].into_iter().collect();
        let mut grew = true;
        while grew {
            grew = false;
            for &(u, v) in &tree {
                let (ru, rv) = (reach.contains(&u), reach.contains(&v));
                if ru != rv {
                    reach.insert(if ru { v } else { u });
                    grew = true;
                }
            }
        }
        if reach.len() != lv.len() {
            return Err(Error::NotATree(
                "tree edges do not connect the line vertices".into(),
            ));
        }
    }
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.a, e.b)).collect();
    edges.extend_from_slice(&tree);
    PointHyperplaneGraph::from_vertex_sets(
        g.point_vertices().to_vec(),
        g.line_vertices().to_vec(),
        &edges,
    )
    .map_err(|e| Error::NotATree(format!("tree edge already present: {e}")))
}

/// Append the rotation-pinning row `<a_pivot-perp, a_dot_pivot> = 0` to a
/// point-hyperplane system (the layout of
/// [`crate::matrices::euclidean_ph_matrix`]). Plane-only.
pub fn pin_rotation_row<T: Scalar>(
    m: &LabeledMatrix<T>,
    c: &Configuration<T>,
    pivot: usize,
) -> Result<LabeledMatrix<T>> {
    if c.dim != 2 {
        return Err(Error::InvalidInput("rotation pinning is two-dimensional".into()));
    }
    let h = c.line(pivot)?;
    let start = m
        .col_index(pivot, ColPart::NormalCoord(0))
        .ok_or(Error::InvalidInput(format!(
            "matrix has no normal-velocity block for vertex {pivot}"
        )))?;
    let mut row = vec![T::zero(); m.ncols()];
    let perp = perp_cw(&h.normal);
    row[start] = perp[0].clone();
    row[start + 1] = perp[1].clone();
    let mut out = m.clone();
    out.push_row(RowLabel::Pin(pivot), row);
    Ok(out)
}

/// Result of the mixed-constraint augmentation: the unconstrained graph,
/// the vertices of the added rigid block, and where each rotation class
/// must be anchored (its centre is the placement of the listed point).
#[derive(Debug, Clone)]
pub struct MixedAugmentation {
    pub graph: PointHyperplaneGraph,
    /// Point vertices of the added block, ascending.
    pub block_points: Vec<usize>,
    /// Line vertex of the added block.
    pub block_line: usize,
    /// `(class index, anchor point vertex)` per rotation class.
    pub class_anchors: Vec<(usize, usize)>,
}

/// Absorb mixed line constraints into an unconstrained point-line graph:
/// add a minimally rigid block `K` (a fan of `max(2, #classes)` points
/// over one line vertex), tie fixed-normal lines to the block line, tie
/// each rotation class to its own block point, and tie fixed lines to the
/// block line and a block point.
///
/// Supported when `#fixed + #classes >= 1` and
/// `#fixed + #classes + #fixed-normal >= 2`; the remaining patterns admit
/// simpler reductions and are rejected.
pub fn mixed_augment(
    g: &PointHyperplaneGraph,
    fixed: &[usize],
    fixed_normal: &[usize],
    rotation_classes: &[Vec<usize>],
) -> Result<MixedAugmentation> {
    let mut seen = BTreeSet::new();
    for &v in fixed
        .iter()
        .chain(fixed_normal.iter())
        .chain(rotation_classes.iter().flatten())
    {
        if !g.is_line(v) {
            return Err(Error::InvalidInput(format!(
                "constrained vertex {v} is not a line vertex"
            )));
        }
        if !seen.insert(v) {
            return Err(Error::OverlappingClasses { vertex: v });
        }
    }
    if rotation_classes.iter().any(|c| c.is_empty()) {
        return Err(Error::InvalidInput("empty rotation class".into()));
    }
    if fixed.len() + rotation_classes.len() < 1 {
        return Err(Error::UnsupportedCase(
            "no fixed line or rotation class: pin nothing, or use the fixed-normal tree \
             construction directly"
                .into(),
        ));
    }
    if fixed.len() + rotation_classes.len() + fixed_normal.len() < 2 {
        return Err(Error::UnsupportedCase(
            "a single constrained line leaves a trivial motion; this reduction needs at \
             least two constrained lines"
                .into(),
        ));
    }

    let k = rotation_classes.len().max(2);
    let fresh = g.vertices().into_iter().max().map_or(0, |v| v + 1);
    let block_points: Vec<usize> = (fresh..fresh + k).collect();
    let block_line = fresh + k;

    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.a, e.b)).collect();
    // The fan: line joined to every block point, block points chained.
    for &u in &block_points {
        edges.push((u, block_line));
    }
    for w in block_points.windows(2) {
        edges.push((w[0], w[1]));
    }
    // Fixed-normal lines hang off the block line.
    for &v in fixed_normal {
        edges.push((v, block_line));
    }
    // Each rotation class gets its own anchor point.
    let mut class_anchors = Vec::new();
    for (i, class) in rotation_classes.iter().enumerate() {
        let anchor = block_points[i];
        class_anchors.push((i, anchor));
        for &v in class {
            edges.push((v, anchor));
        }
    }
    // Fixed lines are tied to the block line and the first block point.
    for &v in fixed {
        edges.push((v, block_line));
        edges.push((v, block_points[0]));
    }

    let mut points = g.point_vertices().to_vec();
    points.extend_from_slice(&block_points);
    let mut lines = g.line_vertices().to_vec();
    lines.push(block_line);
    let graph = PointHyperplaneGraph::from_vertex_sets(points, lines, &edges)?;
    Ok(MixedAugmentation {
        graph,
        block_points,
        block_line,
        class_anchors,
    })
}

/// Constraint system of a mixed-constraint framework: the unconstrained
/// point-hyperplane rows plus, per line, the rows its constraint class
/// dictates (normal frozen, offset frozen, or rotation about a centre).
/// `centres` runs parallel to `rotation_classes`.
pub fn mixed_constraint_matrix(
    g: &PointHyperplaneGraph,
    c: &Configuration<Rat>,
    fixed: &[usize],
    fixed_normal: &[usize],
    rotation_classes: &[Vec<usize>],
    centres: &[Vec<Rat>],
) -> Result<LabeledMatrix<Rat>> {
    if centres.len() != rotation_classes.len() {
        return Err(Error::InvalidInput(
            "one rotation centre per class is required".into(),
        ));
    }
    let mut m = crate::matrices::euclidean_ph_matrix(g, c)?;
    let d = c.dim;
    let freeze_normal = |m: &mut LabeledMatrix<Rat>, v: usize| -> Result<()> {
        let start = m
            .col_index(v, ColPart::NormalCoord(0))
            .ok_or(Error::MissingPlacement { vertex: v })?;
        for k in 0..d {
            let mut row = vec![Rat::zero(); m.ncols()];
            row[start + k] = Rat::one();
            m.push_row(RowLabel::Pin(v), row);
        }
        Ok(())
    };
    for &v in fixed_normal {
        freeze_normal(&mut m, v)?;
    }
    for &v in fixed {
        freeze_normal(&mut m, v)?;
        let rcol = m
            .col_index(v, ColPart::OffsetRate)
            .ok_or(Error::MissingPlacement { vertex: v })?;
        let mut row = vec![Rat::zero(); m.ncols()];
        row[rcol] = Rat::one();
        m.push_row(RowLabel::Pin(v), row);
    }
    for (class, centre) in rotation_classes.iter().zip(centres) {
        for &v in class {
            // The centre stays on the line: <c_S, a-dot> + r-dot = 0.
            let start = m
                .col_index(v, ColPart::NormalCoord(0))
                .ok_or(Error::MissingPlacement { vertex: v })?;
            let rcol = m.col_index(v, ColPart::OffsetRate).unwrap();
            let mut row = vec![Rat::zero(); m.ncols()];
            for k in 0..d {
                row[start + k] = centre[k].clone();
            }
            row[rcol] = Rat::one();
            m.push_row(RowLabel::Pin(v), row);
        }
    }
    Ok(m)
}
