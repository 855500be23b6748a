//! Scene analysis: incidence-respecting arrangements of points and
//! hyperplanes, the trivial (all-points-coincident) construction, and the
//! realization-space dimension test that ties parallel drawing to
//! fixed-normal rigidity.

use crate::error::{Error, Result};
use crate::exactla::{dot, ColLabel, ColPart, LabeledMatrix, Rat, RowLabel};
use crate::matrices::Hyperplane;
use crate::phgraph::{EdgeKind, PointHyperplaneGraph};
use num::{One, Zero};
use std::collections::BTreeMap;

/// A d-scene: points and hyperplanes whose incidences follow the edges of
/// a bipartite point-hyperplane graph, `<p_i, a_j> + r_j = 0` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub graph: PointHyperplaneGraph,
    pub dim: usize,
    pub points: BTreeMap<usize, Vec<Rat>>,
    pub hyperplanes: BTreeMap<usize, Hyperplane<Rat>>,
}

impl Scene {
    pub fn new(
        graph: PointHyperplaneGraph,
        dim: usize,
        points: BTreeMap<usize, Vec<Rat>>,
        hyperplanes: BTreeMap<usize, Hyperplane<Rat>>,
    ) -> Result<Self> {
        ensure_bipartite(&graph)?;
        let scene = Scene {
            graph,
            dim,
            points,
            hyperplanes,
        };
        scene.check_incidence()?;
        Ok(scene)
    }

    /// Verify every incidence exactly.
    pub fn check_incidence(&self) -> Result<()> {
        for e in self.graph.edges() {
            let (pv, lv) = if self.graph.is_point(e.a) {
                (e.a, e.b)
            } else {
                (e.b, e.a)
            };
            let p = self
                .points
                .get(&pv)
                .ok_or(Error::MissingPlacement { vertex: pv })?;
            let h = self
                .hyperplanes
                .get(&lv)
                .ok_or(Error::MissingPlacement { vertex: lv })?;
            let residual = dot(p, &h.normal) + h.offset.clone();
            if !residual.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "incidence violated on edge {{{pv},{lv}}}: residual {residual}"
                )));
            }
        }
        Ok(())
    }
}

fn ensure_bipartite(g: &PointHyperplaneGraph) -> Result<()> {
    if g.edges().iter().any(|e| e.kind != EdgeKind::PL) {
        return Err(Error::NotBipartite(
            "scenes are defined on naturally bipartite graphs".into(),
        ));
    }
    Ok(())
}

/// The trivial scene with the given normals: all points at `t`, offsets
/// `r_j = -<t, a_j>`. Never fails to satisfy the incidences.
pub fn trivial_scene(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    t: &[Rat],
) -> Result<Scene> {
    ensure_bipartite(g)?;
    let points = g
        .point_vertices()
        .iter()
        .map(|&v| (v, t.to_vec()))
        .collect();
    let hyperplanes = g
        .line_vertices()
        .iter()
        .map(|&v| {
            let a = normals
                .get(&v)
                .ok_or(Error::MissingPlacement { vertex: v })?;
            Ok((
                v,
                Hyperplane {
                    normal: a.clone(),
                    offset: -dot(t, a),
                },
            ))
        })
        .collect::<Result<_>>()?;
    Scene::new(g.clone(), t.len(), points, hyperplanes)
}

/// Coefficient matrix of the realization system: one row per incidence,
/// unknowns are a point per point-vertex and an offset per hyperplane.
pub fn realization_matrix(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    dim: usize,
) -> Result<LabeledMatrix<Rat>> {
    ensure_bipartite(g)?;
    let mut cols = Vec::new();
    for &v in g.point_vertices() {
        for k in 0..dim {
            cols.push(ColLabel {
                vertex: v,
                part: ColPart::PointCoord(k),
            });
        }
    }
    for &v in g.line_vertices() {
        cols.push(ColLabel {
            vertex: v,
            part: ColPart::OffsetRate,
        });
    }
    let labels: Vec<RowLabel> = (0..g.edges().len()).map(RowLabel::Edge).collect();
    let mut m = LabeledMatrix::zeros(labels, cols);
    for (idx, e) in g.edges().iter().enumerate() {
        let (pv, lv) = if g.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
        let a = normals
            .get(&lv)
            .ok_or(Error::MissingPlacement { vertex: lv })?;
        if a.len() != dim {
            return Err(Error::InvalidInput(format!(
                "normal of line {lv} has {} coordinates, expected {dim}",
                a.len()
            )));
        }
        let start = m.col_index(pv, ColPart::PointCoord(0)).unwrap();
        for (k, v) in a.iter().enumerate() {
            m.set(idx, start + k, v.clone());
        }
        let t_col = m.col_index(lv, ColPart::OffsetRate).unwrap();
        m.set(idx, t_col, Rat::one());
    }
    Ok(m)
}

/// Dimension of the space of scenes with the given normals. Always at
/// least `dim` when a point exists (the trivial scenes).
pub fn realization_space_dim(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    dim: usize,
) -> Result<usize> {
    let m = realization_matrix(g, normals, dim)?;
    crate::exactla::nullity(&m, 0.0)
}

/// Whether every scene with these normals is trivial: the realization
/// space has the minimum dimension `dim`.
pub fn has_only_trivial_realizations(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    dim: usize,
) -> Result<bool> {
    Ok(realization_space_dim(g, normals, dim)? == dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, rint, sampling};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn unit_normals(g: &PointHyperplaneGraph, seed: u64) -> BTreeMap<usize, Vec<Rat>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        g.line_vertices()
            .iter()
            .map(|&v| (v, sampling::generic_unit_vector(&mut rng).to_vec()))
            .collect()
    }

    #[test]
    fn trivial_scene_at_origin_and_random_t() {
        let g = PointHyperplaneGraph::new(2, 2, &[(0, 2), (0, 3), (1, 2)]).unwrap();
        let normals = unit_normals(&g, 1);
        let s = trivial_scene(&g, &normals, &[rint(0), rint(0)]).unwrap();
        assert!(s.hyperplanes.values().all(|h| h.offset.is_zero()));
        let t = vec![rat(3, 7), rat(-2, 5)];
        let s = trivial_scene(&g, &normals, &t).unwrap();
        s.check_incidence().unwrap();
    }

    #[test]
    fn unconstrained_dimensions() {
        let g = PointHyperplaneGraph::new(2, 2, &[]).unwrap();
        let normals = unit_normals(&g, 2);
        // No incidences: every placement is a scene.
        assert_eq!(realization_space_dim(&g, &normals, 2).unwrap(), 2 * 2 + 2);
    }

    #[test]
    fn single_incidence_pins_down_to_trivial() {
        let g = PointHyperplaneGraph::new(1, 1, &[(0, 1)]).unwrap();
        let normals = unit_normals(&g, 3);
        assert_eq!(realization_space_dim(&g, &normals, 2).unwrap(), 2);
        assert!(has_only_trivial_realizations(&g, &normals, 2).unwrap());
    }

    #[test]
    fn realization_dim_is_at_least_d_with_points_present() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..50 {
            let np = rand::Rng::gen_range(&mut rng, 1..=3usize);
            let nl = rand::Rng::gen_range(&mut rng, 1..=3usize);
            let mut edges = Vec::new();
            for p in 0..np {
                for l in 0..nl {
                    if rand::Rng::gen_bool(&mut rng, 0.5) {
                        edges.push((p, np + l));
                    }
                }
            }
            let g = PointHyperplaneGraph::new(np, nl, &edges).unwrap();
            let normals = g
                .line_vertices()
                .iter()
                .map(|&v| (v, sampling::generic_unit_vector(&mut rng).to_vec()))
                .collect();
            assert!(realization_space_dim(&g, &normals, 2).unwrap() >= 2);
        }
    }

    #[test]
    fn non_bipartite_is_rejected() {
        let g = PointHyperplaneGraph::new(2, 1, &[(0, 1)]).unwrap();
        let normals = BTreeMap::new();
        assert!(matches!(
            realization_space_dim(&g, &normals, 2),
            Err(Error::NotBipartite(_))
        ));
    }
}
