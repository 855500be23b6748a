//! Subspace families over loop graphs and the machinery behind the
//! fixed-intercept characterization: closed-form ranks for the cycle,
//! loop-span and bicircular families, the transversal-hyperplane
//! experiment that realizes the Dilworth truncation geometrically, and a
//! synthesizer that turns a passing count into a row-independent
//! realization.

use crate::counts;
use crate::error::{Error, Result};
use crate::exactla::{dot, perp_ccw, rank_rat_rows, rat, Rat};
use crate::matrices::{Configuration, Hyperplane};
use crate::phgraph::{EdgeKind, EdgeSubset, EnumCaps, LoopGraph, PointHyperplaneGraph};
use num::Zero;
use rand::Rng;
use std::collections::{BTreeMap, BTreeSet};

/// A family of linear subspaces indexed by the edges of a graph, each
/// given by an explicit basis in a common ambient space.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceFamily {
    pub ambient: usize,
    /// One basis per edge, in family order.
    pub bases: Vec<Vec<Vec<Rat>>>,
}

fn vertex_slot(lg: &LoopGraph, v: usize) -> usize {
    lg.vertices
        .binary_search(&v)
        .expect("vertex not in loop graph")
}

fn unit_vec(ambient: usize, idx: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); ambient];
    v[idx] = num::One::one();
    v
}

impl SubspaceFamily {
    /// Cycle family: a non-loop edge `ij` gets the d-dimensional space of
    /// opposite-sign pairs on blocks `i`, `j`; a loop at `i` gets the full
    /// block at `i`. Family order: non-loop edges, then loops.
    pub fn cycle(lg: &LoopGraph, d: usize) -> Self {
        let ambient = d * lg.vertices.len();
        let mut bases = Vec::new();
        for &(i, j) in &lg.edges {
            let (si, sj) = (vertex_slot(lg, i), vertex_slot(lg, j));
            let mut basis = Vec::new();
            for k in 0..d {
                let mut v = vec![Rat::zero(); ambient];
                v[si * d + k] = crate::exactla::rint(1);
                v[sj * d + k] = crate::exactla::rint(-1);
                basis.push(v);
            }
            bases.push(basis);
        }
        for l in &lg.loops {
            let s = vertex_slot(lg, l.vertex);
            bases.push((0..d).map(|k| unit_vec(ambient, s * d + k)).collect());
        }
        SubspaceFamily { ambient, bases }
    }

    /// Loop-span family: like the cycle family, except a loop carries only
    /// the line spanned by its assigned vector. `loop_vectors` runs
    /// parallel to `lg.loops`.
    pub fn loop_span(lg: &LoopGraph, d: usize, loop_vectors: &[Vec<Rat>]) -> Result<Self> {
        if loop_vectors.len() != lg.loops.len() {
            return Err(Error::MissingLoopVector {
                loop_index: loop_vectors.len().min(lg.loops.len()),
            });
        }
        let ambient = d * lg.vertices.len();
        let mut bases = Vec::new();
        for &(i, j) in &lg.edges {
            let (si, sj) = (vertex_slot(lg, i), vertex_slot(lg, j));
            let mut basis = Vec::new();
            for k in 0..d {
                let mut v = vec![Rat::zero(); ambient];
                v[si * d + k] = crate::exactla::rint(1);
                v[sj * d + k] = crate::exactla::rint(-1);
                basis.push(v);
            }
            bases.push(basis);
        }
        for (l, a) in lg.loops.iter().zip(loop_vectors) {
            let s = vertex_slot(lg, l.vertex);
            let mut v = vec![Rat::zero(); ambient];
            for k in 0..d {
                v[s * d + k] = a[k].clone();
            }
            bases.push(vec![v]);
        }
        Ok(SubspaceFamily { ambient, bases })
    }

    /// Bicircular family: a non-loop edge `ij` gets the two-dimensional
    /// space on coordinates `i`, `j`; a loop the one-dimensional space on
    /// its vertex.
    pub fn bicircular(lg: &LoopGraph) -> Self {
        let ambient = lg.vertices.len();
        let mut bases = Vec::new();
        for &(i, j) in &lg.edges {
            bases.push(vec![
                unit_vec(ambient, vertex_slot(lg, i)),
                unit_vec(ambient, vertex_slot(lg, j)),
            ]);
        }
        for l in &lg.loops {
            bases.push(vec![unit_vec(ambient, vertex_slot(lg, l.vertex))]);
        }
        SubspaceFamily { ambient, bases }
    }

    /// Intercept family of a point-line graph in the plane: the direct
    /// sums `U_e = U_e^P + U_e^L` over `(R^2)^{V_P} x R^{V_L}`, indexed in
    /// the graph's edge order.
    pub fn intercept(
        g: &PointHyperplaneGraph,
        normals: &BTreeMap<usize, Vec<Rat>>,
    ) -> Result<Self> {
        let np = g.point_vertices().len();
        let ambient = 2 * np + g.line_vertices().len();
        let pslot = |v: usize| {
            g.point_vertices()
                .binary_search(&v)
                .expect("point vertex")
        };
        let lslot = |v: usize| {
            2 * np
                + g.line_vertices()
                    .binary_search(&v)
                    .expect("line vertex")
        };
        let mut bases = Vec::new();
        for e in g.edges() {
            match e.kind {
                EdgeKind::PP => {
                    let (si, sj) = (pslot(e.a), pslot(e.b));
                    let mut basis = Vec::new();
                    for k in 0..2 {
                        let mut v = vec![Rat::zero(); ambient];
                        v[si * 2 + k] = crate::exactla::rint(1);
                        v[sj * 2 + k] = crate::exactla::rint(-1);
                        basis.push(v);
                    }
                    bases.push(basis);
                }
                EdgeKind::PL => {
                    let (pv, lv) = if g.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
                    let a = normals
                        .get(&lv)
                        .ok_or(Error::MissingPlacement { vertex: lv })?;
                    let mut v = vec![Rat::zero(); ambient];
                    let s = pslot(pv);
                    v[s * 2] = a[0].clone();
                    v[s * 2 + 1] = a[1].clone();
                    bases.push(vec![v, unit_vec(ambient, lslot(lv))]);
                }
                EdgeKind::LL => {
                    bases.push(vec![
                        unit_vec(ambient, lslot(e.a)),
                        unit_vec(ambient, lslot(e.b)),
                    ]);
                }
            }
        }
        Ok(SubspaceFamily { ambient, bases })
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// Dimension of the span of the subspaces indexed by `subset`.
    pub fn span_dim(&self, subset: &[usize]) -> usize {
        let rows: Vec<Vec<Rat>> = subset
            .iter()
            .flat_map(|&e| self.bases[e].iter().cloned())
            .collect();
        rank_rat_rows(&rows)
    }
}

/// Closed-form rank of the cycle family over the full edge set:
/// `d |V| - d * (loop-free components)`.
pub fn predicted_cycle_rank(lg: &LoopGraph, d: usize) -> usize {
    let loops_at: BTreeSet<usize> = lg.loops.iter().map(|l| l.vertex).collect();
    let mut total = d * lg.vertices.len();
    for comp in lg.components() {
        if comp.iter().all(|v| !loops_at.contains(v)) {
            total -= d;
        }
    }
    total
}

/// Closed-form rank of the loop-span family:
/// `d |V| - sum over components (d - dim of that component's loop vectors)`.
pub fn predicted_loop_span_rank(
    lg: &LoopGraph,
    d: usize,
    loop_vectors: &[Vec<Rat>],
) -> Result<usize> {
    if loop_vectors.len() != lg.loops.len() {
        return Err(Error::MissingLoopVector {
            loop_index: loop_vectors.len().min(lg.loops.len()),
        });
    }
    let mut total = (d * lg.vertices.len()) as i64;
    for comp in lg.components() {
        let comp_set: BTreeSet<usize> = comp.into_iter().collect();
        let vecs: Vec<Vec<Rat>> = lg
            .loops
            .iter()
            .zip(loop_vectors)
            .filter(|(l, _)| comp_set.contains(&l.vertex))
            .map(|(_, a)| a.clone())
            .collect();
        let dim = if vecs.is_empty() { 0 } else { rank_rat_rows(&vecs) };
        total -= d as i64 - dim as i64;
    }
    Ok(total as usize)
}

/// Closed-form rank of the bicircular family: the number of vertices
/// touched by an edge or loop.
pub fn predicted_bicircular_rank(lg: &LoopGraph) -> usize {
    let mut touched = BTreeSet::new();
    for &(i, j) in &lg.edges {
        touched.insert(i);
        touched.insert(j);
    }
    for l in &lg.loops {
        touched.insert(l.vertex);
    }
    touched.len()
}

/// Closed-form dimension of the intercept family span over a subset,
/// `2 nu_P + nu_L - sum over components (2 - normal span)`.
pub fn intercept_predicted_dim(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    f: &EdgeSubset,
) -> i64 {
    let (_, rhs) = counts::intercept_general_bound(g, normals, f);
    rhs + 1
}

/// Basis of `U_e ∩ H` for every edge, where `H` is the hyperplane with
/// normal `s`. Fails with the offending edge when some `U_e` lies inside
/// `H` (the draw is not transversal).
pub fn intersect_family(
    family: &SubspaceFamily,
    s: &[Rat],
) -> std::result::Result<Vec<Vec<Vec<Rat>>>, usize> {
    let mut out = Vec::with_capacity(family.len());
    for (e, basis) in family.bases.iter().enumerate() {
        let weights: Vec<Rat> = basis.iter().map(|b| dot(b, s)).collect();
        let Some(pivot) = weights.iter().position(|w| !w.is_zero()) else {
            return Err(e);
        };
        let mut cut = Vec::new();
        for (i, b) in basis.iter().enumerate() {
            if i == pivot {
                continue;
            }
            // <pivot, s> * b - <b, s> * pivot lies in U_e and in H.
            let v: Vec<Rat> = b
                .iter()
                .zip(&basis[pivot])
                .map(|(bi, pi)| &weights[pivot] * bi - &weights[i] * pi)
                .collect();
            cut.push(v);
        }
        out.push(cut);
    }
    Ok(out)
}

/// Outcome of the transversal-hyperplane experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct DilworthOutcome {
    /// Exact minimum of `sum (dim span of block - 1)` over all partitions.
    pub partition_min: i64,
    /// Best intersection dimension achieved over the trial draws.
    pub best_achieved: i64,
    /// Normal of the best hyperplane drawn.
    pub witness: Vec<Rat>,
    /// Whether some draw attained the partition minimum.
    pub achieved_equality: bool,
    pub trials_run: usize,
}

/// Draw random hyperplanes and compare `dim <U_e ∩ H>` with the partition
/// minimum. The intersection dimension never exceeds the minimum; a
/// generic draw attains it.
pub fn dilworth_experiment<R: Rng>(
    family: &SubspaceFamily,
    trials: usize,
    rng: &mut R,
) -> Result<DilworthOutcome> {
    if family.len() > 10 {
        return Err(Error::CapExceeded {
            what: "subspace family for the partition oracle",
            size: family.len(),
            cap: 10,
        });
    }
    for (e, basis) in family.bases.iter().enumerate() {
        if basis.is_empty() || basis.iter().all(|b| b.iter().all(|x| x.is_zero())) {
            return Err(Error::InvalidInput(format!(
                "subspace {e} of the family is zero"
            )));
        }
    }
    let caps = EnumCaps {
        max_edges: 16,
        max_partition: 10,
    };
    let all: Vec<usize> = (0..family.len()).collect();
    let (best, _) = counts::min_partition_value(
        &all,
        |block| family.span_dim(block) as i64 - 1,
        &caps,
        None,
    )?;
    let (partition_min, _) = best.expect("unbounded minimization always yields a value");

    let mut best_achieved = -1i64;
    let mut witness = Vec::new();
    let mut trials_run = 0;
    for _ in 0..trials {
        trials_run += 1;
        let s = draw_transversal(family, rng, 50)?;
        let cut = intersect_family(family, &s).expect("draw was checked transversal");
        let rows: Vec<Vec<Rat>> = cut.into_iter().flatten().collect();
        let achieved = if rows.is_empty() { 0 } else { rank_rat_rows(&rows) } as i64;
        debug_assert!(achieved <= partition_min);
        if achieved > best_achieved {
            best_achieved = achieved;
            witness = s;
        }
        if best_achieved == partition_min {
            break;
        }
    }
    Ok(DilworthOutcome {
        partition_min,
        best_achieved,
        witness,
        achieved_equality: best_achieved == partition_min,
        trials_run,
    })
}

fn draw_transversal<R: Rng>(
    family: &SubspaceFamily,
    rng: &mut R,
    budget: usize,
) -> Result<Vec<Rat>> {
    for _ in 0..budget {
        let s: Vec<Rat> = (0..family.ambient)
            .map(|_| rat(rng.gen_range(-10_000i64..=10_000), 10_000))
            .collect();
        let transversal = family
            .bases
            .iter()
            .all(|basis| basis.iter().any(|b| !dot(b, &s).is_zero()));
        if transversal {
            return Ok(s);
        }
    }
    Err(Error::NoTransversalHyperplane { attempts: budget })
}

/// Build a line-concurrent realization whose reduced fixed-intercept
/// matrix is row-independent, from a graph and normals that pass the
/// general count. Points are perpendicular lifts of a transversal
/// hyperplane normal, redrawn until the rank confirms independence.
pub fn synthesize_intercept_realization<R: Rng>(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    rng: &mut R,
    budget: usize,
) -> Result<Configuration<Rat>> {
    let caps = EnumCaps::default();
    let report = counts::check_fixed_intercept_general(g, normals, &caps)?;
    if !report.holds {
        return Err(Error::CountsFail(Box::new(report)));
    }
    let family = SubspaceFamily::intercept(g, normals)?;
    let np = g.point_vertices().len();
    for _ in 0..budget {
        let s: Vec<Rat> = (0..family.ambient)
            .map(|_| rat(rng.gen_range(-10_000i64..=10_000), 10_000))
            .collect();
        // The proof's non-degeneracy: distinct point blocks, nonzero line
        // coordinates, and transversality.
        let blocks: Vec<&[Rat]> = (0..np).map(|i| &s[2 * i..2 * i + 2]).collect();
        let distinct = (0..np).all(|i| (i + 1..np).all(|j| blocks[i] != blocks[j]));
        let lines_nonzero = s[2 * np..].iter().all(|x| !x.is_zero());
        if !distinct || !lines_nonzero || intersect_family(&family, &s).is_err() {
            continue;
        }
        let config = realization_from_normal(g, normals, &s);
        let m = crate::matrices::reduced_intercept_matrix(g, &config)?;
        if crate::exactla::rank(&m, 0.0)? == g.edges().len() {
            return Ok(config);
        }
    }
    Err(Error::RetryBudgetExhausted {
        what: "intercept realization synthesis",
        budget,
    })
}

/// Placement induced by a hyperplane normal `s`: each point is the
/// counterclockwise quarter-turn of its block of `s`, lines keep the given
/// normals with offset zero.
pub fn realization_from_normal(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    s: &[Rat],
) -> Configuration<Rat> {
    let points = g
        .point_vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, perp_ccw(&s[2 * i..2 * i + 2])))
        .collect();
    let lines = g
        .line_vertices()
        .iter()
        .map(|&v| {
            (
                v,
                Hyperplane {
                    normal: normals[&v].clone(),
                    offset: Rat::zero(),
                },
            )
        })
        .collect();
    Configuration {
        dim: 2,
        points,
        lines,
    }
}
