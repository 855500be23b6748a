//! Constraint matrices and rigidity verdicts for every supported model:
//! Euclidean bar-joint, spherical, affine and Euclidean point-hyperplane,
//! fixed-normal, fixed-line, fixed-intercept (full and reduced), and
//! bar-joint with horizontal sliders.

use crate::error::{Error, Result};
use crate::exactla::{
    dot, nullity, perp_cw, rank, vneg, vsub, BuildNote, ColLabel, ColPart, LabeledMatrix,
    RowLabel, Scalar,
};
use crate::phgraph::{EdgeKind, PointHyperplaneGraph};
use num::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Hyperplane `{x : <a, x> + r = 0}` with unit normal `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane<T> {
    pub normal: Vec<T>,
    pub offset: T,
}

/// Geometric placement of a point-hyperplane graph: points for the point
/// vertices (or for every vertex in pure bar-joint use), hyperplanes for
/// the line vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration<T> {
    pub dim: usize,
    pub points: BTreeMap<usize, Vec<T>>,
    pub lines: BTreeMap<usize, Hyperplane<T>>,
}

impl<T: Scalar> Configuration<T> {
    pub fn point(&self, v: usize) -> Result<&Vec<T>> {
        self.points.get(&v).ok_or(Error::MissingPlacement { vertex: v })
    }

    pub fn line(&self, v: usize) -> Result<&Hyperplane<T>> {
        let h = self.lines.get(&v).ok_or(Error::MissingPlacement { vertex: v })?;
        if !T::unit_norm2_ok(&dot(&h.normal, &h.normal)) {
            return Err(Error::NonUnitNormal { vertex: v });
        }
        Ok(h)
    }

    /// Check dimensions and unit normals against a graph's vertex split.
    pub fn validate(&self, g: &PointHyperplaneGraph) -> Result<()> {
        for &v in g.point_vertices() {
            let p = self.point(v)?;
            if p.len() != self.dim {
                return Err(Error::InvalidInput(format!(
                    "point {v} has {} coordinates, expected {}",
                    p.len(),
                    self.dim
                )));
            }
        }
        for &v in g.line_vertices() {
            let h = self.line(v)?;
            if h.normal.len() != self.dim {
                return Err(Error::InvalidInput(format!(
                    "normal of line {v} has {} coordinates, expected {}",
                    h.normal.len(),
                    self.dim
                )));
            }
        }
        Ok(())
    }
}

/// Point on the sphere S^d, stored as a scaled representative: the actual
/// position is `rep / sqrt(<rep, rep>)`. In float mode `rep` must itself
/// be a unit vector; in exact mode any nonzero rational representative is
/// allowed, which keeps the whole transfer pipeline rational. Ranks of
/// spherical rigidity matrices are unchanged by this scaling (each row and
/// block column is scaled by a nonzero factor).
#[derive(Debug, Clone, PartialEq)]
pub struct SpherePoint<T> {
    pub rep: Vec<T>,
}

impl<T: Scalar> SpherePoint<T> {
    /// Squared norm of the representative.
    pub fn norm2(&self) -> T {
        dot(&self.rep, &self.rep)
    }

    /// On the equator: last coordinate zero (scale-invariant).
    pub fn equatorial(&self) -> bool {
        self.rep.last().map(|v| v.is_zero()).unwrap_or(false)
    }
}

/// Placement of a framework on the sphere S^dim inside R^{dim+1}.
#[derive(Debug, Clone, PartialEq)]
pub struct SphericalConfiguration<T> {
    pub dim: usize,
    pub positions: BTreeMap<usize, SpherePoint<T>>,
}

impl<T: Scalar> SphericalConfiguration<T> {
    pub fn position(&self, v: usize) -> Result<&SpherePoint<T>> {
        let q = self
            .positions
            .get(&v)
            .ok_or(Error::MissingPlacement { vertex: v })?;
        if q.rep.len() != self.dim + 1 || q.norm2().is_zero() {
            return Err(Error::OffSphere { vertex: v });
        }
        Ok(q)
    }

    /// Float configurations must carry genuinely unit representatives.
    pub fn validate_unit(&self) -> Result<()> {
        for (&v, q) in &self.positions {
            if !T::unit_norm2_ok(&q.norm2()) {
                return Err(Error::OffSphere { vertex: v });
            }
        }
        Ok(())
    }
}

/// Constraint model a matrix was built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    BarJoint,
    Spherical,
    PointHyperplane,
    FixedNormal,
    FixedLine,
    FixedIntercept,
    Slider,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Model::BarJoint => "barjoint",
            Model::Spherical => "spherical",
            Model::PointHyperplane => "pointline",
            Model::FixedNormal => "fixed-normal",
            Model::FixedLine => "fixed-line",
            Model::FixedIntercept => "fixed-intercept",
            Model::Slider => "slider",
        };
        f.write_str(s)
    }
}

/// Dimension of the space of trivial motions when the framework spans.
pub fn trivial_dim(model: Model, dim: usize) -> usize {
    match model {
        Model::BarJoint | Model::Spherical | Model::PointHyperplane => dim * (dim + 1) / 2,
        Model::FixedNormal => dim,
        Model::FixedLine => 0,
        Model::FixedIntercept | Model::Slider => 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    MinimallyRigid,
    Rigid,
    Flexible,
    NotSpanning,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Classification::MinimallyRigid => "minimally-rigid",
            Classification::Rigid => "rigid",
            Classification::Flexible => "flexible",
            Classification::NotSpanning => "not-spanning",
        };
        f.write_str(s)
    }
}

/// Rank, kernel dimension, and classification of a constraint matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityVerdict {
    pub model: Model,
    pub rank: usize,
    pub nullity: usize,
    pub trivial_dim: usize,
    pub classification: Classification,
}

/// Classify a constraint matrix. `spanning` is the result of the model's
/// spanning precondition (always `true` for the constrained models, whose
/// trivial-motion counts do not depend on it).
pub fn verdict<T: Scalar>(
    m: &LabeledMatrix<T>,
    model: Model,
    dim: usize,
    tol: f64,
    spanning: bool,
) -> Result<RigidityVerdict> {
    let rank = rank(m, tol)?;
    let nullity = m.ncols() - rank;
    let trivial = trivial_dim(model, dim);
    let classification = if !spanning {
        Classification::NotSpanning
    } else if nullity == trivial {
        if m.nrows() == rank {
            Classification::MinimallyRigid
        } else {
            Classification::Rigid
        }
    } else {
        Classification::Flexible
    };
    Ok(RigidityVerdict {
        model,
        rank,
        nullity,
        trivial_dim: trivial,
        classification,
    })
}

fn point_block_cols<T: Scalar>(vertices: &[usize], dim: usize) -> Vec<ColLabel> {
    let mut cols = Vec::with_capacity(vertices.len() * dim);
    for &v in vertices {
        for k in 0..dim {
            cols.push(ColLabel {
                vertex: v,
                part: ColPart::PointCoord(k),
            });
        }
    }
    let _ = std::marker::PhantomData::<T>;
    cols
}

fn write_block<T: Scalar>(
    m: &mut LabeledMatrix<T>,
    row: usize,
    vertex: usize,
    part0: ColPart,
    values: &[T],
) {
    let start = m
        .col_index(vertex, part0)
        .expect("column block missing for vertex");
    for (k, v) in values.iter().enumerate() {
        m.set(row, start + k, v.clone());
    }
}

/// Standard bar-joint rigidity matrix: one row per edge, `p_i - p_j` in
/// block `i` and the negative in block `j`. Every vertex must be placed as
/// a point.
pub fn euclidean_rigidity_matrix<T: Scalar>(
    g: &PointHyperplaneGraph,
    c: &Configuration<T>,
) -> Result<LabeledMatrix<T>> {
    let d = c.dim;
    let verts = g.vertices();
    let cols = point_block_cols::<T>(&verts, d);
    let rows: Vec<RowLabel> = (0..g.edges().len()).map(RowLabel::Edge).collect();
    let mut m = LabeledMatrix::zeros(rows, cols);
    for (idx, e) in g.edges().iter().enumerate() {
        let pa = c.point(e.a)?.clone();
        let pb = c.point(e.b)?.clone();
        let diff = vsub(&pa, &pb);
        write_block(&mut m, idx, e.a, ColPart::PointCoord(0), &diff);
        write_block(&mut m, idx, e.b, ColPart::PointCoord(0), &vneg(&diff));
    }
    Ok(m)
}

/// Spherical rigidity matrix over S^d: edge rows carry the opposite
/// endpoint's representative; one tangency row per vertex carries its own.
pub fn spherical_rigidity_matrix<T: Scalar>(
    g: &PointHyperplaneGraph,
    sc: &SphericalConfiguration<T>,
) -> Result<LabeledMatrix<T>> {
    let d1 = sc.dim + 1;
    let verts = g.vertices();
    let cols = point_block_cols::<T>(&verts, d1);
    let mut labels: Vec<RowLabel> = (0..g.edges().len()).map(RowLabel::Edge).collect();
    labels.extend(verts.iter().map(|&v| RowLabel::Vertex(v)));
    let mut m = LabeledMatrix::zeros(labels, cols);
    for (idx, e) in g.edges().iter().enumerate() {
        let qa = sc.position(e.a)?.rep.clone();
        let qb = sc.position(e.b)?.rep.clone();
        write_block(&mut m, idx, e.a, ColPart::PointCoord(0), &qb);
        write_block(&mut m, idx, e.b, ColPart::PointCoord(0), &qa);
    }
    for (i, &v) in verts.iter().enumerate() {
        let q = sc.position(v)?.rep.clone();
        write_block(&mut m, g.edges().len() + i, v, ColPart::PointCoord(0), &q);
    }
    Ok(m)
}

fn lifted<T: Scalar>(p: &[T]) -> Vec<T> {
    let mut v = p.to_vec();
    v.push(T::one());
    v
}

fn embedded_normal<T: Scalar>(a: &[T]) -> Vec<T> {
    let mut v = a.to_vec();
    v.push(T::zero());
    v
}

/// Point-hyperplane rigidity matrix in the affine picture: points lifted
/// to `(p, 1)`, hyperplanes embedded as equator representatives `(a, 0)`,
/// one tangency row per vertex. `(|E| + |V|) x (d+1)|V|`.
pub fn affine_ph_matrix<T: Scalar>(
    g: &PointHyperplaneGraph,
    c: &Configuration<T>,
) -> Result<LabeledMatrix<T>> {
    c.validate(g)?;
    let d1 = c.dim + 1;
    let verts = g.vertices();
    let cols = point_block_cols::<T>(&verts, d1);
    let mut labels: Vec<RowLabel> = (0..g.edges().len()).map(RowLabel::Edge).collect();
    labels.extend(verts.iter().map(|&v| RowLabel::Vertex(v)));
    let mut m = LabeledMatrix::zeros(labels, cols);
    for (idx, e) in g.edges().iter().enumerate() {
        match e.kind {
            EdgeKind::PP => {
                let pa = lifted(c.point(e.a)?);
                let pb = lifted(c.point(e.b)?);
                let diff = vsub(&pa, &pb);
                write_block(&mut m, idx, e.a, ColPart::PointCoord(0), &diff);
                write_block(&mut m, idx, e.b, ColPart::PointCoord(0), &vneg(&diff));
            }
            EdgeKind::PL => {
                let (pv, lv) = if g.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
                let p_hat = lifted(c.point(pv)?);
                let a_emb = embedded_normal(&c.line(lv)?.normal);
                write_block(&mut m, idx, pv, ColPart::PointCoord(0), &a_emb);
                write_block(&mut m, idx, lv, ColPart::PointCoord(0), &p_hat);
            }
            EdgeKind::LL => {
                let aa = embedded_normal(&c.line(e.a)?.normal);
                let ab = embedded_normal(&c.line(e.b)?.normal);
                write_block(&mut m, idx, e.a, ColPart::PointCoord(0), &ab);
                write_block(&mut m, idx, e.b, ColPart::PointCoord(0), &aa);
            }
        }
    }
    let ne = g.edges().len();
    for (i, &v) in verts.iter().enumerate() {
        let row = if g.is_point(v) {
            let mut e_vec = vec![T::zero(); d1];
            e_vec[d1 - 1] = T::one();
            e_vec
        } else {
            embedded_normal(&c.line(v)?.normal)
        };
        write_block(&mut m, ne + i, v, ColPart::PointCoord(0), &row);
    }
    Ok(m)
}

/// Point-hyperplane rigidity matrix in Euclidean variables
/// `(p-dot, a-dot, r-dot)`: `d` columns per point, `d+1` per hyperplane.
pub fn euclidean_ph_matrix<T: Scalar>(
    g: &PointHyperplaneGraph,
    c: &Configuration<T>,
) -> Result<LabeledMatrix<T>> {
    c.validate(g)?;
    let d = c.dim;
    let mut cols = point_block_cols::<T>(g.point_vertices(), d);
    for &v in g.line_vertices() {
        for k in 0..d {
            cols.push(ColLabel {
                vertex: v,
                part: ColPart::NormalCoord(k),
            });
        }
        cols.push(ColLabel {
            vertex: v,
            part: ColPart::OffsetRate,
        });
    }
    let mut labels: Vec<RowLabel> = (0..g.edges().len()).map(RowLabel::Edge).collect();
    labels.extend(g.line_vertices().iter().map(|&v| RowLabel::Vertex(v)));
    let mut m = LabeledMatrix::zeros(labels, cols);
    for (idx, e) in g.edges().iter().enumerate() {
        match e.kind {
            EdgeKind::PP => {
                let diff = vsub(c.point(e.a)?, c.point(e.b)?);
                write_block(&mut m, idx, e.a, ColPart::PointCoord(0), &diff);
                write_block(&mut m, idx, e.b, ColPart::PointCoord(0), &vneg(&diff));
            }
            EdgeKind::PL => {
                let (pv, lv) = if g.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
                let p = c.point(pv)?.clone();
                let a = c.line(lv)?.normal.clone();
                write_block(&mut m, idx, pv, ColPart::PointCoord(0), &a);
                write_block(&mut m, idx, lv, ColPart::NormalCoord(0), &p);
                let rcol = m.col_index(lv, ColPart::OffsetRate).unwrap();
                m.set(idx, rcol, T::one());
            }
            EdgeKind::LL => {
                let aa = c.line(e.a)?.normal.clone();
                let ab = c.line(e.b)?.normal.clone();
                write_block(&mut m, idx, e.a, ColPart::NormalCoord(0), &ab);
                write_block(&mut m, idx, e.b, ColPart::NormalCoord(0), &aa);
            }
        }
    }
    let ne = g.edges().len();
    for (i, &v) in g.line_vertices().iter().enumerate() {
        let a = c.line(v)?.normal.clone();
        write_block(&mut m, ne + i, v, ColPart::NormalCoord(0), &a);
    }
    Ok(m)
}

/// Fixed-normal system: normals frozen, hyperplanes may only translate.
/// Columns are point velocities plus one offset rate per hyperplane.
/// Hyperplane-hyperplane rows are identically zero (angles between fixed
/// normals cannot change) and are emitted as explicit zero rows.
pub fn fixed_normal_matrix<T: Scalar>(
    g: &PointHyperplaneGraph,
    c: &Configuration<T>,
) -> Result<LabeledMatrix<T>> {
    c.validate(g)?;
    let d = c.dim;
    let mut cols = point_block_cols::<T>(g.point_vertices(), d);
    for &v in g.line_vertices() {
        cols.push(ColLabel {
            vertex: v,
            part: ColPart::OffsetRate,
        });
    }
    let labels: Vec<RowLabel> = (0..g.edges().len()).map(RowLabel::Edge).collect();
    let mut m = LabeledMatrix::zeros(labels, cols);
    for (idx, e) in g.edges().iter().enumerate() {
        match e.kind {
            EdgeKind::PP => {
                let diff = vsub(c.point(e.a)?, c.point(e.b)?);
                write_block(&mut m, idx, e.a, ColPart::PointCoord(0), &diff);
                write_block(&mut m, idx, e.b, ColPart::PointCoord(0), &vneg(&diff));
            }
            EdgeKind::PL => {
                let (pv, lv) = if g.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
                let a = c.line(lv)?.normal.clone();
                write_block(&mut m, idx, pv, ColPart::PointCoord(0), &a);
                let rcol = m.col_index(lv, ColPart::OffsetRate).unwrap();
                m.set(idx, rcol, T::one());
            }
            EdgeKind::LL => {}
        }
    }
    Ok(m)
}

/// Fixed-line system: hyperplanes frozen entirely; only point velocities
/// remain. Hyperplane-hyperplane rows are zero rows.
pub fn fixed_line_matrix<T: Scalar>(
    g: &PointHyperplaneGraph,
    c: &Configuration<T>,
) -> Result<LabeledMatrix<T>> {
    c.validate(g)?;
    let d = c.dim;
    let cols = point_block_cols::<T>(g.point_vertices(), d);
    let labels: Vec<RowLabel> = (0..g.edges().len()).map(RowLabel::Edge).collect();
    let mut m = LabeledMatrix::zeros(labels, cols);
    for (idx, e) in g.edges().iter().enumerate() {
        match e.kind {
            EdgeKind::PP => {
                let diff = vsub(c.point(e.a)?, c.point(e.b)?);
                write_block(&mut m, idx, e.a, ColPart::PointCoord(0), &diff);
                write_block(&mut m, idx, e.b, ColPart::PointCoord(0), &vneg(&diff));
            }
            EdgeKind::PL => {
                let (pv, lv) = if g.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
                let a = c.line(lv)?.normal.clone();
                write_block(&mut m, idx, pv, ColPart::PointCoord(0), &a);
            }
            EdgeKind::LL => {}
        }
    }
    Ok(m)
}

fn require_concurrent<T: Scalar>(g: &PointHyperplaneGraph, c: &Configuration<T>) -> Result<()> {
    for &v in g.line_vertices() {
        let h = c.line(v)?;
        if !h.offset.is_zero() {
            return Err(Error::NonConcurrent {
                vertex: v,
                offset: format!("{}", h.offset),
            });
        }
    }
    Ok(())
}

/// Full fixed-intercept matrix for a line-concurrent framework (all lines
/// through the origin, offsets pinned): `(|E| + |V_L|) x (2|V_P| + 2|V_L|)`.
/// Plane-only model.
pub fn fixed_intercept_matrix<T: Scalar>(
    g: &PointHyperplaneGraph,
    c: &Configuration<T>,
) -> Result<LabeledMatrix<T>> {
    if c.dim != 2 {
        return Err(Error::InvalidInput(
            "fixed-intercept model is two-dimensional".into(),
        ));
    }
    c.validate(g)?;
    require_concurrent(g, c)?;
    let mut cols = point_block_cols::<T>(g.point_vertices(), 2);
    for &v in g.line_vertices() {
        for k in 0..2 {
            cols.push(ColLabel {
                vertex: v,
                part: ColPart::NormalCoord(k),
            });
        }
    }
    let mut labels: Vec<RowLabel> = (0..g.edges().len()).map(RowLabel::Edge).collect();
    labels.extend(g.line_vertices().iter().map(|&v| RowLabel::Vertex(v)));
    let mut m = LabeledMatrix::zeros(labels, cols);
    for (idx, e) in g.edges().iter().enumerate() {
        match e.kind {
            EdgeKind::PP => {
                let diff = vsub(c.point(e.a)?, c.point(e.b)?);
                write_block(&mut m, idx, e.a, ColPart::PointCoord(0), &diff);
                write_block(&mut m, idx, e.b, ColPart::PointCoord(0), &vneg(&diff));
            }
            EdgeKind::PL => {
                let (pv, lv) = if g.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
                write_block(
                    &mut m,
                    idx,
                    pv,
                    ColPart::PointCoord(0),
                    &c.line(lv)?.normal.clone(),
                );
                write_block(
                    &mut m,
                    idx,
                    lv,
                    ColPart::NormalCoord(0),
                    &c.point(pv)?.clone(),
                );
            }
            EdgeKind::LL => {
                let aa = c.line(e.a)?.normal.clone();
                let ab = c.line(e.b)?.normal.clone();
                write_block(&mut m, idx, e.a, ColPart::NormalCoord(0), &ab);
                write_block(&mut m, idx, e.b, ColPart::NormalCoord(0), &aa);
            }
        }
    }
    let ne = g.edges().len();
    for (i, &v) in g.line_vertices().iter().enumerate() {
        let a = c.line(v)?.normal.clone();
        write_block(&mut m, ne + i, v, ColPart::NormalCoord(0), &a);
    }
    Ok(m)
}

/// Reduced fixed-intercept matrix R': `|E|` rows over `2|V_P| + |V_L|`
/// columns. Point-line rows carry the normal in the point block and
/// `<p, a-perp>` in the line column; line-line rows carry +1/-1, or a zero
/// row (flagged) when the two normals coincide.
pub fn reduced_intercept_matrix<T: Scalar>(
    g: &PointHyperplaneGraph,
    c: &Configuration<T>,
) -> Result<LabeledMatrix<T>> {
    if c.dim != 2 {
        return Err(Error::InvalidInput(
            "fixed-intercept model is two-dimensional".into(),
        ));
    }
    c.validate(g)?;
    require_concurrent(g, c)?;
    let mut cols = point_block_cols::<T>(g.point_vertices(), 2);
    for &v in g.line_vertices() {
        cols.push(ColLabel {
            vertex: v,
            part: ColPart::RotationRate,
        });
    }
    let labels: Vec<RowLabel> = (0..g.edges().len()).map(RowLabel::Edge).collect();
    let mut m = LabeledMatrix::zeros(labels, cols);
    let mut notes = Vec::new();
    for (idx, e) in g.edges().iter().enumerate() {
        match e.kind {
            EdgeKind::PP => {
                let diff = vsub(c.point(e.a)?, c.point(e.b)?);
                write_block(&mut m, idx, e.a, ColPart::PointCoord(0), &diff);
                write_block(&mut m, idx, e.b, ColPart::PointCoord(0), &vneg(&diff));
            }
            EdgeKind::PL => {
                let (pv, lv) = if g.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
                let a = c.line(lv)?.normal.clone();
                let p = c.point(pv)?.clone();
                write_block(&mut m, idx, pv, ColPart::PointCoord(0), &a);
                let wcol = m.col_index(lv, ColPart::RotationRate).unwrap();
                m.set(idx, wcol, dot(&p, &perp_cw(&a)));
            }
            EdgeKind::LL => {
                let aa = c.line(e.a)?.normal.clone();
                let ab = c.line(e.b)?.normal.clone();
                if aa == ab {
                    notes.push(BuildNote::CoincidentNormals { edge: idx });
                } else {
                    let ca = m.col_index(e.a, ColPart::RotationRate).unwrap();
                    let cb = m.col_index(e.b, ColPart::RotationRate).unwrap();
                    m.set(idx, ca, T::one());
                    m.set(idx, cb, -T::one());
                }
            }
        }
    }
    m.notes = notes;
    Ok(m)
}

/// Bar-joint framework with horizontal slider joints: Euclidean rows for
/// all edges plus one row per slider vertex pinning its vertical velocity.
/// Sliders must sit on the line y = 0.
pub fn slider_matrix<T: Scalar>(
    g: &PointHyperplaneGraph,
    sliders: &BTreeSet<usize>,
    c: &Configuration<T>,
) -> Result<LabeledMatrix<T>> {
    if c.dim != 2 {
        return Err(Error::InvalidInput("slider model is two-dimensional".into()));
    }
    for &v in sliders {
        let p = c.point(v)?;
        if !p[1].is_zero() {
            return Err(Error::SliderOffLine { vertex: v });
        }
    }
    let mut m = euclidean_rigidity_matrix(g, c)?;
    for &v in sliders {
        let mut row = vec![T::zero(); m.ncols()];
        let y = m.col_index(v, ColPart::PointCoord(1)).unwrap();
        row[y] = T::one();
        m.push_row(RowLabel::Pin(v), row);
    }
    Ok(m)
}

/// Whether the points (plus, for point-hyperplane models, the hyperplane
/// point sets) affinely span R^dim. Decided by an exact or tolerance rank
/// of the difference matrix.
pub fn affinely_spans<T: Scalar>(
    g: &PointHyperplaneGraph,
    c: &Configuration<T>,
    include_lines: bool,
    tol: f64,
) -> Result<bool> {
    let d = c.dim;
    let mut generators: Vec<Vec<T>> = Vec::new();
    for &v in g.vertices().iter() {
        if let Some(p) = c.points.get(&v) {
            generators.push(p.clone());
        }
    }
    if include_lines {
        for &v in g.line_vertices() {
            let h = c.line(v)?;
            // Foot of the origin on the hyperplane, then one point per
            // tangent generator e_k - <e_k, a> a.
            let base: Vec<T> = h
                .normal
                .iter()
                .map(|a| -(h.offset.clone() * a.clone()))
                .collect();
            generators.push(base.clone());
            for k in 0..d {
                let mut w: Vec<T> = h
                    .normal
                    .iter()
                    .map(|a| -(h.normal[k].clone() * a.clone()))
                    .collect();
                w[k] = w[k].clone() + T::one();
                generators.push(base.iter().zip(&w).map(|(b, w)| b.clone() + w.clone()).collect());
            }
        }
    }
    if generators.is_empty() {
        return Ok(d == 0);
    }
    let base = generators[0].clone();
    let rows: Vec<Vec<T>> = generators[1..]
        .iter()
        .map(|p| vsub(p, &base))
        .collect();
    if rows.is_empty() {
        return Ok(d == 0);
    }
    let cols = point_block_cols::<T>(&[0], d);
    let labels = (0..rows.len()).map(RowLabel::Edge).collect();
    let m = LabeledMatrix::from_rows(labels, cols, rows);
    Ok(rank(&m, tol)? == d)
}

/// Whether the sphere representatives linearly span R^{dim+1}.
pub fn linearly_spans<T: Scalar>(sc: &SphericalConfiguration<T>, tol: f64) -> Result<bool> {
    let d1 = sc.dim + 1;
    let rows: Vec<Vec<T>> = sc.positions.values().map(|q| q.rep.clone()).collect();
    if rows.is_empty() {
        return Ok(false);
    }
    let cols = point_block_cols::<T>(&[0], d1);
    let labels = (0..rows.len()).map(RowLabel::Edge).collect();
    let m = LabeledMatrix::from_rows(labels, cols, rows);
    Ok(rank(&m, tol)? == d1)
}

/// Build the model's constraint matrix and classify it in one step.
/// Constrained models skip the spanning test.
pub fn analyze<T: Scalar>(
    g: &PointHyperplaneGraph,
    c: &Configuration<T>,
    sliders: Option<&BTreeSet<usize>>,
    model: Model,
    tol: f64,
) -> Result<(LabeledMatrix<T>, RigidityVerdict)> {
    let (m, spanning) = match model {
        Model::BarJoint => {
            let m = euclidean_rigidity_matrix(g, c)?;
            let s = affinely_spans(g, c, false, tol)?;
            (m, s)
        }
        Model::PointHyperplane => {
            let m = euclidean_ph_matrix(g, c)?;
            let s = affinely_spans(g, c, true, tol)?;
            (m, s)
        }
        Model::FixedNormal => (fixed_normal_matrix(g, c)?, true),
        Model::FixedLine => (fixed_line_matrix(g, c)?, true),
        Model::FixedIntercept => (reduced_intercept_matrix(g, c)?, true),
        Model::Slider => {
            let empty = BTreeSet::new();
            let x = sliders.unwrap_or(&empty);
            (slider_matrix(g, x, c)?, true)
        }
        Model::Spherical => {
            return Err(Error::InvalidInput(
                "spherical analysis needs a spherical configuration".into(),
            ))
        }
    };
    let v = verdict(&m, model, c.dim, tol, spanning)?;
    Ok((m, v))
}

/// Nullity shorthand used throughout the tests.
pub fn system_nullity<T: Scalar>(m: &LabeledMatrix<T>, tol: f64) -> Result<usize> {
    nullity(m, tol)
}

/// Random rational placement simulating a generic one: coordinates with
/// denominator 10^4, exact rational unit normals, random offsets.
pub fn random_configuration<R: rand::Rng>(
    g: &PointHyperplaneGraph,
    dim: usize,
    rng: &mut R,
) -> Configuration<crate::exactla::Rat> {
    use crate::exactla::sampling;
    let points = g
        .point_vertices()
        .iter()
        .map(|&v| (v, (0..dim).map(|_| sampling::generic_rat(rng)).collect()))
        .collect();
    let lines = g
        .line_vertices()
        .iter()
        .map(|&v| {
            (
                v,
                Hyperplane {
                    normal: random_unit_normal(dim, rng),
                    offset: sampling::generic_rat(rng),
                },
            )
        })
        .collect();
    Configuration { dim, points, lines }
}

/// As [`random_configuration`] but with all offsets zero (lines through
/// the origin) and pairwise distinct normals.
pub fn random_concurrent_configuration<R: rand::Rng>(
    g: &PointHyperplaneGraph,
    rng: &mut R,
) -> Configuration<crate::exactla::Rat> {
    let mut c = random_configuration(g, 2, rng);
    loop {
        let normals: Vec<_> = c.lines.values().map(|h| h.normal.clone()).collect();
        let distinct = normals
            .iter()
            .enumerate()
            .all(|(i, a)| normals[i + 1..].iter().all(|b| a != b));
        if distinct {
            break;
        }
        for h in c.lines.values_mut() {
            h.normal = random_unit_normal(2, rng);
        }
    }
    for h in c.lines.values_mut() {
        h.offset = crate::exactla::Rat::zero();
    }
    c
}

/// Exact rational unit normal. In the plane this is a rational circle
/// point; in higher dimensions a coordinate rotation of one.
pub fn random_unit_normal<R: rand::Rng>(dim: usize, rng: &mut R) -> Vec<crate::exactla::Rat> {
    use crate::exactla::{rational_unit_vector, sampling, Rat};
    assert!(dim >= 1);
    if dim == 1 {
        return vec![if rng.gen_bool(0.5) { Rat::one() } else { -Rat::one() }];
    }
    let mut v = vec![Rat::zero(); dim];
    let [x, y] = rational_unit_vector(&sampling::generic_rat(rng));
    v[0] = x;
    v[1] = y;
    // Spread onto the remaining coordinates by stereographic steps so the
    // normal is not stuck in a plane.
    for k in 2..dim {
        let [c, s] = rational_unit_vector(&sampling::generic_rat(rng));
        let prev = v[k - 1].clone();
        v[k - 1] = &prev * &c;
        v[k] = prev * s;
    }
    v
}
