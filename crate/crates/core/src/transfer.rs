//! Rigidity-preserving transformations between the affine chart, the
//! sphere, and back: central projection, its tangent map, rotations and
//! inversions on the sphere, and the composite pipeline that realizes a
//! point-hyperplane framework as a bar-joint framework with the line
//! vertices on a common hyperplane.
//!
//! The pipeline is kept exactly rational by working with scaled sphere
//! representatives: positions `u / sqrt(<u,u>)` are stored as `u`, and the
//! irrational normalizations cancel in every decision the crate makes
//! (ranks, signs, incidences, transported velocities).

use crate::error::{Error, Result};
use crate::exactla::{
    cayley_rotation, dot, is_orthogonal_rat, matmul_rat, rank_rat_rows, rat, Rat,
};
use crate::matrices::{Configuration, SpherePoint, SphericalConfiguration};
use crate::phgraph::PointHyperplaneGraph;
use num::{One, Signed, Zero};
use rand::Rng;
use std::collections::{BTreeMap, BTreeSet};

/// Central projection of the affine chart onto the open upper hemisphere:
/// `x -> x / |x|`. Float-only; exact-mode work stays on representatives.
pub fn central_project(x: &[f64]) -> Result<Vec<f64>> {
    let last = *x.last().ok_or_else(|| Error::InvalidInput("empty point".into()))?;
    if (last - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidInput(
            "central projection expects a point of the affine chart (last coordinate 1)".into(),
        ));
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    Ok(x.iter().map(|v| v / norm).collect())
}

/// Tangent map of the central projection at `x`:
/// `m -> (m - <m, x> e) / |x|`. Requires `<m, e> = 0`.
pub fn psi(x: &[f64], m: &[f64]) -> Result<Vec<f64>> {
    if m.last().map(|v| v.abs() > 1e-12).unwrap_or(true) {
        return Err(Error::NotTangent(
            "tangent vectors of the affine chart have last coordinate 0".into(),
        ));
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    let mx: f64 = m.iter().zip(x).map(|(a, b)| a * b).sum();
    let mut out: Vec<f64> = m.iter().map(|v| v / norm).collect();
    let last = out.len() - 1;
    out[last] -= mx / norm;
    Ok(out)
}

/// Exact tangent transport: `m` (last coordinate 0) at the affine point
/// `x` (last coordinate 1) maps to the representative `m - <m, x> e` with
/// the same scale `sqrt(<x, x>)` as the projected base point. The output
/// is exactly orthogonal to `x`.
pub fn psi_rep(x: &[Rat], m: &[Rat]) -> Result<Vec<Rat>> {
    if x.last().map(|v| !v.is_one()).unwrap_or(true) {
        return Err(Error::InvalidInput(
            "affine points have last coordinate 1".into(),
        ));
    }
    if m.last().map(|v| !v.is_zero()).unwrap_or(true) {
        return Err(Error::NotTangent(
            "tangent vectors of the affine chart have last coordinate 0".into(),
        ));
    }
    let mx = dot(m, x);
    let mut out = m.to_vec();
    let last = out.len() - 1;
    out[last] = &out[last] - &mx;
    Ok(out)
}

/// Lift a point of R^d to the affine chart: `p -> (p, 1)`.
pub fn lift(p: &[Rat]) -> Vec<Rat> {
    let mut v = p.to_vec();
    v.push(Rat::one());
    v
}

/// Drop the last coordinate of an affine-chart point.
pub fn unlift(p: &[Rat]) -> Vec<Rat> {
    p[..p.len() - 1].to_vec()
}

/// Spherical image of a point-hyperplane framework: points project
/// centrally (stored as lifted representatives, strictly above the
/// equator) and each hyperplane becomes its normal's equator point.
pub fn sphere_image(
    g: &PointHyperplaneGraph,
    c: &Configuration<Rat>,
) -> Result<SphericalConfiguration<Rat>> {
    c.validate(g)?;
    let mut positions = BTreeMap::new();
    for &v in g.point_vertices() {
        positions.insert(
            v,
            SpherePoint {
                rep: lift(c.point(v)?),
            },
        );
    }
    for &v in g.line_vertices() {
        let mut rep = c.line(v)?.normal.clone();
        rep.push(Rat::zero());
        positions.insert(v, SpherePoint { rep });
    }
    Ok(SphericalConfiguration {
        dim: c.dim,
        positions,
    })
}

/// Apply an exactly orthogonal rotation to every representative.
pub fn rotate(
    sc: &SphericalConfiguration<Rat>,
    r: &[Vec<Rat>],
) -> Result<SphericalConfiguration<Rat>> {
    if !is_orthogonal_rat(r) || r.len() != sc.dim + 1 {
        return Err(Error::NotOrthogonal);
    }
    let positions = sc
        .positions
        .iter()
        .map(|(&v, q)| {
            let col: Vec<Vec<Rat>> = q.rep.iter().map(|x| vec![x.clone()]).collect();
            let rotated = matmul_rat(r, &col);
            (
                v,
                SpherePoint {
                    rep: rotated.into_iter().map(|mut row| row.pop().unwrap()).collect(),
                },
            )
        })
        .collect();
    Ok(SphericalConfiguration {
        dim: sc.dim,
        positions,
    })
}

/// Flip the listed vertices to their antipodes.
pub fn invert(
    sc: &SphericalConfiguration<Rat>,
    flip: &BTreeSet<usize>,
) -> SphericalConfiguration<Rat> {
    let positions = sc
        .positions
        .iter()
        .map(|(&v, q)| {
            let rep = if flip.contains(&v) {
                q.rep.iter().map(|x| -x.clone()).collect()
            } else {
                q.rep.clone()
            };
            (v, SpherePoint { rep })
        })
        .collect();
    SphericalConfiguration {
        dim: sc.dim,
        positions,
    }
}

/// Vertices whose representatives sit strictly below the equator; flipping
/// exactly these moves the configuration into the closed upper hemisphere.
pub fn lower_hemisphere(sc: &SphericalConfiguration<Rat>) -> BTreeSet<usize> {
    sc.positions
        .iter()
        .filter(|(_, q)| q.rep.last().map(|v| v.is_negative()).unwrap_or(false))
        .map(|(&v, _)| v)
        .collect()
}

/// Inverse central projection applied to every vertex: `q -> q / <q, e>`,
/// then the chart coordinate is read off by dropping the final 1. Fails
/// with `EquatorHit` on any equatorial vertex.
pub fn lower_to_affine(sc: &SphericalConfiguration<Rat>) -> Result<Configuration<Rat>> {
    let mut points = BTreeMap::new();
    for (&v, q) in &sc.positions {
        let h = q.rep.last().unwrap().clone();
        if h.is_zero() {
            return Err(Error::EquatorHit { vertex: v });
        }
        let affine: Vec<Rat> = q.rep.iter().map(|x| x / &h).collect();
        points.insert(v, unlift(&affine));
    }
    Ok(Configuration {
        dim: sc.dim,
        points,
        lines: BTreeMap::new(),
    })
}

/// The composite transfer: project the framework to the sphere, rotate by
/// `r`, flip anything that landed below the equator, and project back to
/// the chart. The result is a bar-joint configuration in which all former
/// line vertices lie on one hyperplane. Entirely rational: the output
/// point for vertex `v` is `R u_v / <R u_v, e>` with `u_v` the lifted
/// point or equator representative.
pub fn transfer_to_collinear(
    g: &PointHyperplaneGraph,
    c: &Configuration<Rat>,
    r: &[Vec<Rat>],
) -> Result<Configuration<Rat>> {
    let sc = sphere_image(g, c)?;
    let rotated = rotate(&sc, r)?;
    let flipped = invert(&rotated, &lower_hemisphere(&rotated));
    lower_to_affine(&flipped)
}

/// Small random rational Cayley rotation of R^{d+1}.
pub fn random_rotation<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<Rat>> {
    loop {
        let params: Vec<Rat> = (0..n * (n - 1) / 2)
            .map(|_| rat(rng.gen_range(-30i64..=30), rng.gen_range(1i64..=30)))
            .collect();
        if let Ok(r) = cayley_rotation(&params, n) {
            return r;
        }
    }
}

/// Transfer with a randomly drawn rotation, retrying when an image lands
/// on the equator. Returns the configuration and the rotation used.
pub fn transfer_with_random_rotation<R: Rng>(
    g: &PointHyperplaneGraph,
    c: &Configuration<Rat>,
    rng: &mut R,
    retries: usize,
) -> Result<(Configuration<Rat>, Vec<Vec<Rat>>)> {
    for _ in 0..retries {
        let r = random_rotation(rng, c.dim + 1);
        match transfer_to_collinear(g, c, &r) {
            Ok(out) => return Ok((out, r)),
            Err(Error::EquatorHit { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::RetryBudgetExhausted {
        what: "transfer rotation draw",
        budget: retries,
    })
}

/// Rank of the lifted images of the former line vertices; at most `dim`
/// exactly when they lie on a common hyperplane of the chart.
pub fn hyperplane_image_rank(g: &PointHyperplaneGraph, out: &Configuration<Rat>) -> Result<usize> {
    let rows: Vec<Vec<Rat>> = g
        .line_vertices()
        .iter()
        .map(|&v| Ok(lift(out.point(v)?)))
        .collect::<Result<_>>()?;
    Ok(rank_rat_rows(&rows))
}

/// Exact collinearity test for three transferred images in the plane.
pub fn collinear3(p1: &[Rat], p2: &[Rat], p3: &[Rat]) -> bool {
    let rows = vec![lift(p1), lift(p2), lift(p3)];
    crate::exactla::det_rat(&rows).is_zero()
}

// ---- motion transport ----

/// Velocity assignment of a Euclidean point-hyperplane framework.
#[derive(Debug, Clone, PartialEq)]
pub struct PhMotion {
    pub p_dot: BTreeMap<usize, Vec<Rat>>,
    pub a_dot: BTreeMap<usize, Vec<Rat>>,
    pub r_dot: BTreeMap<usize, Rat>,
}

/// Velocity assignment on the sphere, stored as representatives that share
/// each base point's scale factor.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereMotion {
    pub v_dot: BTreeMap<usize, Vec<Rat>>,
}

/// Flatten a point-hyperplane motion into the column order of
/// [`crate::matrices::euclidean_ph_matrix`].
pub fn ph_motion_vector(g: &PointHyperplaneGraph, m: &PhMotion, dim: usize) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    for &v in g.point_vertices() {
        let pd = m
            .p_dot
            .get(&v)
            .ok_or(Error::MissingPlacement { vertex: v })?;
        out.extend(pd.iter().cloned());
    }
    for &v in g.line_vertices() {
        let ad = m
            .a_dot
            .get(&v)
            .ok_or(Error::MissingPlacement { vertex: v })?;
        if ad.len() != dim {
            return Err(Error::InvalidInput(format!(
                "normal velocity of line {v} has wrong dimension"
            )));
        }
        out.extend(ad.iter().cloned());
        out.push(
            m.r_dot
                .get(&v)
                .ok_or(Error::MissingPlacement { vertex: v })?
                .clone(),
        );
    }
    Ok(out)
}

/// Rebuild a structured motion from a flat kernel vector.
pub fn ph_motion_from_vector(
    g: &PointHyperplaneGraph,
    vec: &[Rat],
    dim: usize,
) -> PhMotion {
    let mut p_dot = BTreeMap::new();
    let mut a_dot = BTreeMap::new();
    let mut r_dot = BTreeMap::new();
    let mut idx = 0;
    for &v in g.point_vertices() {
        p_dot.insert(v, vec[idx..idx + dim].to_vec());
        idx += dim;
    }
    for &v in g.line_vertices() {
        a_dot.insert(v, vec[idx..idx + dim].to_vec());
        idx += dim;
        r_dot.insert(v, vec[idx].clone());
        idx += 1;
    }
    PhMotion { p_dot, a_dot, r_dot }
}

/// Transport a point-hyperplane motion to the spherical image: point
/// velocities go through the tangent map of the central projection, line
/// velocities become `(a-dot, r-dot)`.
pub fn motion_to_sphere(
    g: &PointHyperplaneGraph,
    c: &Configuration<Rat>,
    m: &PhMotion,
) -> Result<SphereMotion> {
    let mut v_dot = BTreeMap::new();
    for &v in g.point_vertices() {
        let p_hat = lift(c.point(v)?);
        let mut pd_hat = m
            .p_dot
            .get(&v)
            .ok_or(Error::MissingPlacement { vertex: v })?
            .clone();
        pd_hat.push(Rat::zero());
        v_dot.insert(v, psi_rep(&p_hat, &pd_hat)?);
    }
    for &v in g.line_vertices() {
        let mut rep = m
            .a_dot
            .get(&v)
            .ok_or(Error::MissingPlacement { vertex: v })?
            .clone();
        rep.push(
            m.r_dot
                .get(&v)
                .ok_or(Error::MissingPlacement { vertex: v })?
                .clone(),
        );
        v_dot.insert(v, rep);
    }
    Ok(SphereMotion { v_dot })
}

/// Inverse transport from the spherical image back to the Euclidean
/// variables. Exact by cancellation of the shared scale factors.
pub fn motion_from_sphere(
    g: &PointHyperplaneGraph,
    m: &SphereMotion,
) -> Result<PhMotion> {
    let mut p_dot = BTreeMap::new();
    let mut a_dot = BTreeMap::new();
    let mut r_dot = BTreeMap::new();
    for &v in g.point_vertices() {
        let w = m
            .v_dot
            .get(&v)
            .ok_or(Error::MissingPlacement { vertex: v })?;
        // psi^{-1} on representatives removes the e-component; the chart
        // velocity is the remaining first block.
        p_dot.insert(v, unlift(w));
    }
    for &v in g.line_vertices() {
        let w = m
            .v_dot
            .get(&v)
            .ok_or(Error::MissingPlacement { vertex: v })?;
        a_dot.insert(v, unlift(w));
        r_dot.insert(v, w.last().unwrap().clone());
    }
    Ok(PhMotion { p_dot, a_dot, r_dot })
}

/// Spherical constraint residuals, cleared of the irrational scale
/// factors: edge `ij` contributes `<u_i, w_j> + <u_j, w_i>`, each vertex
/// contributes `<u_i, w_i>`. Zero exactly when the motion satisfies the
/// spherical system.
pub fn sphere_residuals(
    g: &PointHyperplaneGraph,
    sc: &SphericalConfiguration<Rat>,
    m: &SphereMotion,
) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    for e in g.edges() {
        let ua = &sc.position(e.a)?.rep;
        let ub = &sc.position(e.b)?.rep;
        let wa = m
            .v_dot
            .get(&e.a)
            .ok_or(Error::MissingPlacement { vertex: e.a })?;
        let wb = m
            .v_dot
            .get(&e.b)
            .ok_or(Error::MissingPlacement { vertex: e.b })?;
        out.push(dot(ua, wb) + dot(ub, wa));
    }
    for &v in g.vertices().iter() {
        let u = &sc.position(v)?.rep;
        let w = m
            .v_dot
            .get(&v)
            .ok_or(Error::MissingPlacement { vertex: v })?;
        out.push(dot(u, w));
    }
    Ok(out)
}

/// Push a point-hyperplane motion through the full collinearizing
/// pipeline: rotate the spherical velocity representatives, then apply the
/// inverse tangent map at each image. The output assigns a chart velocity
/// to every vertex of the transferred bar-joint framework:
/// `m_v = drop_last(R w_v - <R w_v, e> e) / <R u_v, e>`.
pub fn transport_collinear_motion(
    g: &PointHyperplaneGraph,
    c: &Configuration<Rat>,
    r: &[Vec<Rat>],
    m: &PhMotion,
) -> Result<BTreeMap<usize, Vec<Rat>>> {
    let sm = motion_to_sphere(g, c, m)?;
    let sc = sphere_image(g, c)?;
    let mut out = BTreeMap::new();
    for &v in g.vertices().iter() {
        let u = &sc.position(v)?.rep;
        let w = &sm.v_dot[&v];
        let ru = apply_rat(r, u);
        let rw = apply_rat(r, w);
        let h = ru.last().unwrap().clone();
        if h.is_zero() {
            return Err(Error::EquatorHit { vertex: v });
        }
        let wh = rw.last().unwrap().clone();
        let mut vel = rw;
        let last = vel.len() - 1;
        vel[last] = &vel[last] - &wh;
        let scaled: Vec<Rat> = vel.iter().map(|x| x / &h).collect();
        out.insert(v, unlift(&scaled));
    }
    Ok(out)
}

fn apply_rat(r: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    r.iter().map(|row| dot(row, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rint, sampling};
    use crate::matrices::euclidean_rigidity_matrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn central_projection_fixes_the_pole() {
        let e = vec![0.0, 0.0, 1.0];
        assert_eq!(central_project(&e).unwrap(), e);
        let q = central_project(&[3.0, 0.0, 1.0]).unwrap();
        let n = (10.0f64).sqrt();
        assert!((q[0] - 3.0 / n).abs() < 1e-15 && (q[2] - 1.0 / n).abs() < 1e-15);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..1000 {
            let x = vec![
                rand::Rng::gen_range(&mut rng, -5.0..5.0),
                rand::Rng::gen_range(&mut rng, -5.0..5.0),
                1.0,
            ];
            let q = central_project(&x).unwrap();
            let n2: f64 = q.iter().map(|v| v * v).sum();
            assert!((n2 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn tangent_map_at_the_pole_is_identity() {
        let out = psi(&[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(out, vec![1.0, 0.0, 0.0]);
        assert_eq!(
            psi(&[0.0, 0.0, 1.0], &[0.0, 0.0, 0.0]).unwrap(),
            vec![0.0, 0.0, 0.0]
        );
    }

    #[test]
    fn exact_tangent_transport_is_orthogonal_after_cancellation() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..200 {
            let x = vec![
                sampling::generic_rat(&mut rng),
                sampling::generic_rat(&mut rng),
                rint(1),
            ];
            let m = vec![
                sampling::generic_rat(&mut rng),
                sampling::generic_rat(&mut rng),
                rint(0),
            ];
            let rep = psi_rep(&x, &m).unwrap();
            // <phi(x), psi_x(m)> vanishes iff <x, rep> does.
            assert!(dot(&x, &rep).is_zero());
        }
    }

    #[test]
    fn identity_rotation_on_points_is_identity_transfer() {
        let g = PointHyperplaneGraph::new(3, 0, &[(0, 1), (1, 2)]).unwrap();
        let c = Configuration {
            dim: 2,
            points: [
                (0, vec![rint(0), rint(0)]),
                (1, vec![rint(2), rint(1)]),
                (2, vec![rat(1, 3), rat(-5, 7)]),
            ]
            .into_iter()
            .collect(),
            lines: BTreeMap::new(),
        };
        let out = transfer_to_collinear(&g, &c, &crate::exactla::identity_rat(3)).unwrap();
        assert_eq!(out.points, c.points);
    }

    #[test]
    fn identity_rotation_hits_the_equator_on_any_line() {
        let (g, c) = (
            PointHyperplaneGraph::new(1, 1, &[(0, 1)]).unwrap(),
            Configuration {
                dim: 2,
                points: [(0, vec![rint(0), rint(0)])].into_iter().collect(),
                lines: [(
                    1,
                    crate::matrices::Hyperplane {
                        normal: vec![rint(0), rint(1)],
                        offset: rint(0),
                    },
                )]
                .into_iter()
                .collect(),
            },
        );
        assert!(matches!(
            transfer_to_collinear(&g, &c, &crate::exactla::identity_rat(3)),
            Err(Error::EquatorHit { vertex: 1 })
        ));
    }

    #[test]
    fn inversion_is_an_involution_and_rank_invariant() {
        let (g, _) = crate::gallery::three_collinear_counterexample();
        let c = crate::gallery::three_collinear_config();
        let sc = sphere_image(&g, &c).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let r = random_rotation(&mut rng, 3);
        let rotated = rotate(&sc, &r).unwrap();
        let flip: BTreeSet<usize> = [1, 4].into_iter().collect();
        let twice = invert(&invert(&rotated, &flip), &flip);
        assert_eq!(twice, rotated);

        let m0 = crate::matrices::spherical_rigidity_matrix(&g, &sc).unwrap();
        let m1 = crate::matrices::spherical_rigidity_matrix(&g, &rotated).unwrap();
        let m2 = crate::matrices::spherical_rigidity_matrix(&g, &invert(&rotated, &flip)).unwrap();
        let r0 = crate::exactla::rank(&m0, 0.0).unwrap();
        assert_eq!(r0, crate::exactla::rank(&m1, 0.0).unwrap());
        assert_eq!(r0, crate::exactla::rank(&m2, 0.0).unwrap());
    }

    #[test]
    fn transferred_line_vertices_are_exactly_collinear() {
        let (g, _) = crate::gallery::three_collinear_counterexample();
        let c = crate::gallery::three_collinear_config();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (out, _r) = transfer_with_random_rotation(&g, &c, &mut rng, 20).unwrap();
        assert!(hyperplane_image_rank(&g, &out).unwrap() <= 2);
        let l: Vec<Vec<Rat>> = g
            .line_vertices()
            .iter()
            .map(|&v| out.point(v).unwrap().clone())
            .collect();
        assert!(collinear3(&l[0], &l[1], &l[2]));
    }

    #[test]
    fn motion_transport_round_trips_and_preserves_kernels() {
        let (g, _) = crate::gallery::three_collinear_counterexample();
        let c = crate::gallery::three_collinear_config();
        let m = crate::matrices::euclidean_ph_matrix(&g, &c).unwrap();
        let kernel = crate::exactla::kernel_basis(&m);
        assert!(!kernel.is_empty());
        let sc = sphere_image(&g, &c).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let (out, r) = transfer_with_random_rotation(&g, &c, &mut rng, 20).unwrap();
        let target = euclidean_rigidity_matrix(&g, &out).unwrap();
        for vec in &kernel {
            let motion = ph_motion_from_vector(&g, vec, 2);
            // Forward to the sphere: all residuals vanish exactly.
            let sm = motion_to_sphere(&g, &c, &motion).unwrap();
            for res in sphere_residuals(&g, &sc, &sm).unwrap() {
                assert!(res.is_zero());
            }
            // Back: exact round trip.
            let back = motion_from_sphere(&g, &sm).unwrap();
            assert_eq!(back, motion);
            // Through the pipeline: a motion of the transferred framework.
            let vel = transport_collinear_motion(&g, &c, &r, &motion).unwrap();
            let flat: Vec<Rat> = g
                .vertices()
                .into_iter()
                .flat_map(|v| vel[&v].clone())
                .collect();
            for res in target.apply(&flat) {
                assert!(res.is_zero(), "transferred velocity must be a motion");
            }
        }
    }

    #[test]
    fn zero_motion_transports_to_zero() {
        let (g, _) = crate::gallery::three_collinear_counterexample();
        let c = crate::gallery::three_collinear_config();
        let zero = PhMotion {
            p_dot: g
                .point_vertices()
                .iter()
                .map(|&v| (v, vec![rint(0), rint(0)]))
                .collect(),
            a_dot: g
                .line_vertices()
                .iter()
                .map(|&v| (v, vec![rint(0), rint(0)]))
                .collect(),
            r_dot: g.line_vertices().iter().map(|&v| (v, rint(0))).collect(),
        };
        let sm = motion_to_sphere(&g, &c, &zero).unwrap();
        assert!(sm.v_dot.values().all(|w| w.iter().all(|x| x.is_zero())));
        assert_eq!(motion_from_sphere(&g, &sm).unwrap(), zero);
    }
}
