//! Combinatorial characterizations, decided by exhaustive enumeration at
//! desk scale. Every negative verdict carries a certificate (a violating
//! edge set, optionally a partition, and both sides of the failed bound)
//! that re-evaluates to the same numbers.

use crate::error::{Error, Result};
use crate::exactla::{rank_rat_rows, Rat};
use crate::phgraph::{
    enumerate_subsets, EdgeKind, EdgeSubset, EnumCaps, PointHyperplaneGraph,
};
use itertools::Itertools;
use std::collections::{BTreeMap, BTreeSet};

/// Which characterization a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    CollinearRealizable,
    SceneSpanning,
    ScenePartition,
    FixedNormalPlane,
    FixedLine,
    FixedIntercept,
    FixedInterceptGeneral,
    Slider,
}

/// Enumeration effort behind a verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub subsets_checked: u64,
    pub partitions_checked: u64,
}

/// Why a condition fails. `lhs` and `rhs` are the two sides of the failed
/// comparison; for subset bounds the violation is `lhs > rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// The exact edge-count requirement is missed.
    EdgeCount { actual: i64, required: i64 },
    /// A subset (with the minimizing partition, where the bound has one)
    /// beats its bound.
    Subset {
        edges: Vec<usize>,
        partition: Option<Vec<Vec<usize>>>,
        lhs: i64,
        rhs: i64,
    },
    /// An LL edge whose endpoints carry the same normal (or the same
    /// slider coordinate).
    DuplicateOnEdge { edge: usize },
}

/// Verdict of one characterization check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub theorem: Theorem,
    pub holds: bool,
    pub certificate: Option<Violation>,
    pub stats: EnumStats,
}

impl CountReport {
    fn pass(theorem: Theorem, stats: EnumStats) -> Self {
        CountReport {
            theorem,
            holds: true,
            certificate: None,
            stats,
        }
    }

    fn fail(theorem: Theorem, violation: Violation, stats: EnumStats) -> Self {
        CountReport {
            theorem,
            holds: false,
            certificate: Some(violation),
            stats,
        }
    }
}

// ---- partition minimization engine ----

/// Exact minimum of `sum f(block)` over all set partitions of `items`,
/// by branch-and-bound in restricted-growth order. `f` must be
/// nonnegative on nonempty blocks and monotone under block growth (every
/// bound in this module is). With `upper = Some(u)` only partitions
/// strictly below `u` are reported; the first partition attaining the
/// minimum (in enumeration order) is returned.
pub fn min_partition_value<F>(
    items: &[usize],
    f: F,
    caps: &EnumCaps,
    upper: Option<i64>,
) -> Result<(Option<(i64, Vec<Vec<usize>>)>, u64)>
where
    F: FnMut(&[usize]) -> i64,
{
    if items.len() > caps.max_partition {
        return Err(Error::CapExceeded {
            what: "set for partition minimization",
            size: items.len(),
            cap: caps.max_partition,
        });
    }
    struct State<'a, F> {
        items: &'a [usize],
        f: F,
        blocks: Vec<Vec<usize>>,
        fvals: Vec<i64>,
        partial: i64,
        incumbent: i64,
        best: Option<(i64, Vec<Vec<usize>>)>,
        leaves: u64,
    }
    fn dfs<F: FnMut(&[usize]) -> i64>(s: &mut State<F>, k: usize) {
        if k == s.items.len() {
            s.leaves += 1;
            if s.partial < s.incumbent {
                s.incumbent = s.partial;
                s.best = Some((s.partial, s.blocks.clone()));
            }
            return;
        }
        let item = s.items[k];
        let nblocks = s.blocks.len();
        for j in 0..=nblocks {
            let old = if j == nblocks {
                s.blocks.push(vec![item]);
                s.fvals.push(0);
                0
            } else {
                s.blocks[j].push(item);
                s.fvals[j]
            };
            let new = (s.f)(&s.blocks[j]);
            debug_assert!(new >= old, "block value must be monotone");
            s.fvals[j] = new;
            s.partial += new - old;
            if s.partial < s.incumbent {
                dfs(s, k + 1);
            }
            s.partial -= new - old;
            if j == nblocks {
                s.blocks.pop();
                s.fvals.pop();
            } else {
                s.blocks[j].pop();
                s.fvals[j] = old;
            }
        }
    }
    if items.is_empty() {
        // The empty partition has value 0.
        let below = upper.map_or(true, |u| 0 < u);
        return Ok((below.then(|| (0, Vec::new())), 1));
    }
    let mut state = State {
        items,
        f,
        blocks: Vec::new(),
        fvals: Vec::new(),
        partial: 0,
        incumbent: upper.unwrap_or(i64::MAX),
        best: None,
        leaves: 0,
    };
    dfs(&mut state, 0);
    Ok((state.best, state.leaves))
}

/// Sum of `f` over the blocks of a given partition (no enumeration; used
/// for witness partitions too large to minimize over).
pub fn partition_sum<F>(partition: &[Vec<usize>], mut f: F) -> i64
where
    F: FnMut(&[usize]) -> i64,
{
    partition.iter().map(|b| f(b)).sum()
}

// ---- shared counting helpers ----

fn touched_of(g: &PointHyperplaneGraph, indices: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &i in indices {
        out.insert(g.edges()[i].a);
        out.insert(g.edges()[i].b);
    }
    out
}

fn nu_in(g: &PointHyperplaneGraph, indices: &[usize], mark: &BTreeSet<usize>) -> i64 {
    touched_of(g, indices)
        .iter()
        .filter(|v| mark.contains(v))
        .count() as i64
}

fn nu_points_of(g: &PointHyperplaneGraph, indices: &[usize]) -> i64 {
    touched_of(g, indices)
        .iter()
        .filter(|&&v| g.is_point(v))
        .count() as i64
}

fn nu_lines_of(g: &PointHyperplaneGraph, indices: &[usize]) -> i64 {
    touched_of(g, indices)
        .iter()
        .filter(|&&v| g.is_line(v))
        .count() as i64
}

/// Subsets of the given (sorted) index list, in lexicographic order on the
/// global indices.
fn subsets_within(members: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = members.len();
    let mut iter = crate::phgraph::SubsetPositions::new(n);
    std::iter::from_fn(move || {
        iter.next()
            .map(|pos| pos.iter().map(|&p| members[p]).collect())
    })
}

// ---- Theorem: collinear realizability (bar-joint with X on a hyperplane) ----

/// Value of `sum_i (2 nu_{V-X}(A_i) + nu_X(A_i) - 2) + nu_X(A) - 1` for a
/// given partition of `a`.
pub fn collinear_partition_value(
    g: &PointHyperplaneGraph,
    x: &BTreeSet<usize>,
    a: &EdgeSubset,
    partition: &[Vec<usize>],
) -> i64 {
    let not_x: BTreeSet<usize> = g.vertices().into_iter().filter(|v| !x.contains(v)).collect();
    let sum = partition_sum(partition, |block| {
        2 * nu_in(g, block, &not_x) + nu_in(g, block, x) - 2
    });
    sum + nu_in(g, a.members(), x) - 1
}

/// Can the graph be realized as an infinitesimally rigid bar-joint
/// framework in the plane with the vertices of `x` on one line?
/// Requires a spanning edge set of size `2|V| - 3` in which every
/// nonempty subset, under every partition, respects the mixed count.
pub fn check_collinear_realizability(
    g: &PointHyperplaneGraph,
    x: &BTreeSet<usize>,
    caps: &EnumCaps,
) -> Result<CountReport> {
    let theorem = Theorem::CollinearRealizable;
    let m = g.edges().len();
    let required = 2 * g.n_vertices() as i64 - 3;
    let mut stats = EnumStats::default();
    if (m as i64) < required || required < 0 {
        return Ok(CountReport::fail(
            theorem,
            Violation::EdgeCount {
                actual: m as i64,
                required,
            },
            stats,
        ));
    }
    if m > caps.max_edges {
        return Err(Error::CapExceeded {
            what: "edge set for spanning-subset search",
            size: m,
            cap: caps.max_edges,
        });
    }
    let not_x: BTreeSet<usize> = g.vertices().into_iter().filter(|v| !x.contains(v)).collect();
    let mut first_violation: Option<Violation> = None;
    'candidates: for cand in (0..m).combinations(required as usize) {
        for a in subsets_within(&cand) {
            stats.subsets_checked += 1;
            let nu_x_a = nu_in(g, &a, x);
            let threshold = a.len() as i64 - nu_x_a + 1;
            if threshold <= 0 {
                continue;
            }
            let (best, leaves) = min_partition_value(
                &a,
                |block| 2 * nu_in(g, block, &not_x) + nu_in(g, block, x) - 2,
                caps,
                Some(threshold),
            )?;
            stats.partitions_checked += leaves;
            if let Some((val, partition)) = best {
                if first_violation.is_none() {
                    first_violation = Some(Violation::Subset {
                        edges: a.clone(),
                        partition: Some(partition),
                        lhs: a.len() as i64,
                        rhs: val + nu_x_a - 1,
                    });
                }
                continue 'candidates;
            }
        }
        return Ok(CountReport::pass(theorem, stats));
    }
    Ok(CountReport::fail(
        theorem,
        first_violation.expect("every candidate failed with a witness"),
        stats,
    ))
}

// ---- Theorem: scene counts (parallel drawing / fixed-normal, bipartite) ----

/// Reports for the two equivalent forms of the scene characterization:
/// the spanning-subset form and the partition form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SceneReport {
    pub spanning_form: CountReport,
    pub partition_form: CountReport,
}

impl SceneReport {
    pub fn agree(&self) -> bool {
        self.spanning_form.holds == self.partition_form.holds
    }
}

/// Check the d-scene realizability counts of a bipartite point-hyperplane
/// graph: a spanning subset with `|E'| = d|V_P| + |V_L| - d` whose subsets
/// obey `|A| <= d nu_P(A) + nu_L(A) - d`, and the partition form
/// `sum_i (d nu_P(A_i) + nu_L(A_i) - d) >= d|V_P| + |V_L| - d`.
pub fn check_scene_count(
    g: &PointHyperplaneGraph,
    d: usize,
    caps: &EnumCaps,
) -> Result<SceneReport> {
    if g.edges().iter().any(|e| e.kind != EdgeKind::PL) {
        return Err(Error::NotBipartite(
            "scene counts need a naturally bipartite graph (only point-hyperplane edges)".into(),
        ));
    }
    let di = d as i64;
    let required = di * g.point_vertices().len() as i64 + g.line_vertices().len() as i64 - di;
    let m = g.edges().len();
    let bound = |block: &[usize]| di * nu_points_of(g, block) + nu_lines_of(g, block) - di;

    // Spanning-subset form.
    let mut stats = EnumStats::default();
    let spanning_form = if required < 0 || (m as i64) < required {
        CountReport::fail(
            Theorem::SceneSpanning,
            Violation::EdgeCount {
                actual: m as i64,
                required,
            },
            stats,
        )
    } else if m > caps.max_edges {
        return Err(Error::CapExceeded {
            what: "edge set for spanning-subset search",
            size: m,
            cap: caps.max_edges,
        });
    } else {
        let mut first_violation: Option<Violation> = None;
        let mut passed = false;
        'cands: for cand in (0..m).combinations(required as usize) {
            for a in subsets_within(&cand) {
                stats.subsets_checked += 1;
                let rhs = bound(&a);
                if (a.len() as i64) > rhs {
                    if first_violation.is_none() {
                        first_violation = Some(Violation::Subset {
                            edges: a.clone(),
                            partition: None,
                            lhs: a.len() as i64,
                            rhs,
                        });
                    }
                    continue 'cands;
                }
            }
            passed = true;
            break;
        }
        if passed {
            CountReport::pass(Theorem::SceneSpanning, stats)
        } else {
            CountReport::fail(
                Theorem::SceneSpanning,
                first_violation.expect("every candidate failed with a witness"),
                stats,
            )
        }
    };

    // Partition form over the full edge set.
    let all: Vec<usize> = (0..m).collect();
    let (best, leaves) = min_partition_value(&all, bound, caps, Some(required))?;
    let partition_form = match best {
        Some((val, partition)) => CountReport::fail(
            Theorem::ScenePartition,
            Violation::Subset {
                edges: all,
                partition: Some(partition),
                lhs: required,
                rhs: val,
            },
            EnumStats {
                subsets_checked: 1,
                partitions_checked: leaves,
            },
        ),
        None => CountReport::pass(
            Theorem::ScenePartition,
            EnumStats {
                subsets_checked: 1,
                partitions_checked: leaves,
            },
        ),
    };

    Ok(SceneReport {
        spanning_form,
        partition_form,
    })
}

// ---- Theorem: fixed-normal rigidity in the plane ----

/// Minimal fixed-normal rigidity counts for a plane point-line graph:
/// `|E| = 2|V_P| + |V_L| - 2`, point-only subsets obey the Laman bound
/// `2 nu_P - 3`, and every subset obeys `2 nu_P + nu_L - 2`.
pub fn check_fixed_normal_plane(
    g: &PointHyperplaneGraph,
    caps: &EnumCaps,
) -> Result<CountReport> {
    let theorem = Theorem::FixedNormalPlane;
    let m = g.edges().len();
    let required = 2 * g.point_vertices().len() as i64 + g.line_vertices().len() as i64 - 2;
    let mut stats = EnumStats::default();
    if m as i64 != required {
        return Ok(CountReport::fail(
            theorem,
            Violation::EdgeCount {
                actual: m as i64,
                required,
            },
            stats,
        ));
    }
    for f in enumerate_subsets(g, 1, m, caps)? {
        stats.subsets_checked += 1;
        let np = nu_points_of(g, f.members());
        let nl = nu_lines_of(g, f.members());
        let rhs = if nl == 0 { 2 * np - 3 } else { 2 * np + nl - 2 };
        if (f.len() as i64) > rhs {
            return Ok(CountReport::fail(
                theorem,
                Violation::Subset {
                    edges: f.members().to_vec(),
                    partition: None,
                    lhs: f.len() as i64,
                    rhs,
                },
                stats,
            ));
        }
    }
    Ok(CountReport::pass(theorem, stats))
}

// ---- Theorem: fixed-line rigidity (arbitrary normals) ----

/// Dimension of the span of the normals assigned to the given line
/// vertices.
pub fn normal_span_dim(normals: &BTreeMap<usize, Vec<Rat>>, lines: &[usize]) -> usize {
    let rows: Vec<Vec<Rat>> = lines
        .iter()
        .filter_map(|v| normals.get(v).cloned())
        .collect();
    if rows.is_empty() {
        return 0;
    }
    rank_rat_rows(&rows)
}

/// Minimal fixed-line rigidity counts: `|E| = 2|V_P|` and
/// `|F| <= 2 nu_P(F) - 3 + min(3, 2 a(F))` with `a(F)` the span dimension
/// of the normals on the lines touched by `F`.
pub fn check_fixed_line(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    caps: &EnumCaps,
) -> Result<CountReport> {
    let theorem = Theorem::FixedLine;
    validate_line_data(g, normals)?;
    let m = g.edges().len();
    let required = 2 * g.point_vertices().len() as i64;
    let mut stats = EnumStats::default();
    if m as i64 != required {
        return Ok(CountReport::fail(
            theorem,
            Violation::EdgeCount {
                actual: m as i64,
                required,
            },
            stats,
        ));
    }
    for f in enumerate_subsets(g, 1, m, caps)? {
        stats.subsets_checked += 1;
        let lines = g.lines_of(&f);
        let a_f = normal_span_dim(normals, &lines) as i64;
        let rhs = 2 * nu_points_of(g, f.members()) - 3 + 3.min(2 * a_f);
        if (f.len() as i64) > rhs {
            return Ok(CountReport::fail(
                theorem,
                Violation::Subset {
                    edges: f.members().to_vec(),
                    partition: None,
                    lhs: f.len() as i64,
                    rhs,
                },
                stats,
            ));
        }
    }
    Ok(CountReport::pass(theorem, stats))
}

// ---- Theorems: fixed-intercept rigidity ----

fn validate_line_data<T>(
    g: &PointHyperplaneGraph,
    data: &BTreeMap<usize, T>,
) -> Result<()> {
    for &v in g.line_vertices() {
        if !data.contains_key(&v) {
            return Err(Error::MissingPlacement { vertex: v });
        }
    }
    Ok(())
}

/// The distinct-normal fixed-intercept count (simple form):
/// `|E| = 2|V_P| + |V_L| - 1` and
/// `|F| <= 2 nu_P(F) + nu_L(F) - 3 + min(2, |V_L(F)|)`.
pub fn check_fixed_intercept(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    caps: &EnumCaps,
) -> Result<CountReport> {
    let theorem = Theorem::FixedIntercept;
    validate_line_data(g, normals)?;
    if g.line_vertices().len() < 2 {
        return Err(Error::InvalidInput(
            "fixed-intercept counts need at least two lines".into(),
        ));
    }
    let lv = g.line_vertices();
    for i in 0..lv.len() {
        for j in i + 1..lv.len() {
            if normals[&lv[i]] == normals[&lv[j]] {
                return Err(Error::DuplicateNormals { a: lv[i], b: lv[j] });
            }
        }
    }
    let m = g.edges().len();
    let required = 2 * g.point_vertices().len() as i64 + lv.len() as i64 - 1;
    let mut stats = EnumStats::default();
    if m as i64 != required {
        return Ok(CountReport::fail(
            theorem,
            Violation::EdgeCount {
                actual: m as i64,
                required,
            },
            stats,
        ));
    }
    for f in enumerate_subsets(g, 1, m, caps)? {
        stats.subsets_checked += 1;
        let np = nu_points_of(g, f.members());
        let nl = nu_lines_of(g, f.members());
        let rhs = 2 * np + nl - 3 + 2.min(nl);
        if (f.len() as i64) > rhs {
            return Ok(CountReport::fail(
                theorem,
                Violation::Subset {
                    edges: f.members().to_vec(),
                    partition: None,
                    lhs: f.len() as i64,
                    rhs,
                },
                stats,
            ));
        }
    }
    Ok(CountReport::pass(theorem, stats))
}

/// Component correction of the general fixed-intercept bound: for each
/// connected component `H` of `(G[F])^P`, `2 - dim` of the line data seen
/// by `H`'s loops. `span_dim` maps a set of line vertices to that
/// dimension (capped at 2).
fn component_correction(
    g: &PointHyperplaneGraph,
    f: &EdgeSubset,
    span_dim: &dyn Fn(&[usize]) -> usize,
) -> i64 {
    let sub = g.induced_subgraph(f);
    let lg = sub.derive_point_loop_graph(&EdgeSubset::full(&sub));
    let mut total = 0i64;
    for comp in lg.components() {
        let comp_set: BTreeSet<usize> = comp.iter().copied().collect();
        let mut lines: Vec<usize> = lg
            .loops_at(&comp_set)
            .iter()
            .map(|l| l.label)
            .collect();
        lines.sort_unstable();
        lines.dedup();
        let dim = span_dim(&lines).min(2) as i64;
        total += 2 - dim;
    }
    total
}

/// Both sides of the general fixed-intercept bound for one subset:
/// `(|F|, 2 nu_P + nu_L - 1 - correction)`.
pub fn intercept_general_bound(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    f: &EdgeSubset,
) -> (i64, i64) {
    let span = |lines: &[usize]| normal_span_dim(normals, lines);
    let rhs = 2 * nu_points_of(g, f.members()) + nu_lines_of(g, f.members())
        - 1
        - component_correction(g, f, &span);
    (f.len() as i64, rhs)
}

/// Both sides of the slider bound for one subset: the span dimension is
/// replaced by the number of distinct slider coordinates.
pub fn slider_bound(
    g: &PointHyperplaneGraph,
    xs: &BTreeMap<usize, Rat>,
    f: &EdgeSubset,
) -> (i64, i64) {
    let span = |lines: &[usize]| {
        lines
            .iter()
            .filter_map(|v| xs.get(v))
            .collect::<BTreeSet<_>>()
            .len()
    };
    let rhs = 2 * nu_points_of(g, f.members()) + nu_lines_of(g, f.members())
        - 1
        - component_correction(g, f, &span);
    (f.len() as i64, rhs)
}

fn intercept_style_check(
    g: &PointHyperplaneGraph,
    caps: &EnumCaps,
    theorem: Theorem,
    duplicate_on: &dyn Fn(usize, usize) -> bool,
    span_dim: &dyn Fn(&[usize]) -> usize,
) -> Result<CountReport> {
    if g.line_vertices().len() < 2 {
        return Err(Error::InvalidInput(
            "fixed-intercept counts need at least two lines".into(),
        ));
    }
    let m = g.edges().len();
    let required =
        2 * g.point_vertices().len() as i64 + g.line_vertices().len() as i64 - 1;
    let mut stats = EnumStats::default();
    if m as i64 != required {
        return Ok(CountReport::fail(
            theorem,
            Violation::EdgeCount {
                actual: m as i64,
                required,
            },
            stats,
        ));
    }
    for (idx, e) in g.edges().iter().enumerate() {
        if e.kind == EdgeKind::LL && duplicate_on(e.a, e.b) {
            return Ok(CountReport::fail(
                theorem,
                Violation::DuplicateOnEdge { edge: idx },
                stats,
            ));
        }
    }
    for f in enumerate_subsets(g, 1, m, caps)? {
        stats.subsets_checked += 1;
        let rhs = 2 * nu_points_of(g, f.members()) + nu_lines_of(g, f.members())
            - 1
            - component_correction(g, &f, span_dim);
        if (f.len() as i64) > rhs {
            return Ok(CountReport::fail(
                theorem,
                Violation::Subset {
                    edges: f.members().to_vec(),
                    partition: None,
                    lhs: f.len() as i64,
                    rhs,
                },
                stats,
            ));
        }
    }
    Ok(CountReport::pass(theorem, stats))
}

/// The general fixed-intercept count (arbitrary normals): the simple edge
/// count, distinct normals across every LL edge, and the component-
/// corrected subset bound.
pub fn check_fixed_intercept_general(
    g: &PointHyperplaneGraph,
    normals: &BTreeMap<usize, Vec<Rat>>,
    caps: &EnumCaps,
) -> Result<CountReport> {
    validate_line_data(g, normals)?;
    intercept_style_check(
        g,
        caps,
        Theorem::FixedInterceptGeneral,
        &|a, b| normals[&a] == normals[&b],
        &|lines| normal_span_dim(normals, lines),
    )
}

/// Horizontal-slider realizability: the fixed-intercept count with slider
/// abscissae in place of normals and value-distinctness in place of span
/// dimension. Sliders are the line vertices of `g`.
pub fn check_slider(
    g: &PointHyperplaneGraph,
    xs: &BTreeMap<usize, Rat>,
    caps: &EnumCaps,
) -> Result<CountReport> {
    validate_line_data(g, xs)?;
    intercept_style_check(
        g,
        caps,
        Theorem::Slider,
        &|a, b| xs[&a] == xs[&b],
        &|lines| {
            lines
                .iter()
                .filter_map(|v| xs.get(v))
                .collect::<BTreeSet<_>>()
                .len()
        },
    )
}

/// Re-evaluate a certificate against the graph it was issued for,
/// returning the recomputed (lhs, rhs) where applicable.
pub fn recheck_certificate(
    g: &PointHyperplaneGraph,
    x: Option<&BTreeSet<usize>>,
    violation: &Violation,
) -> Option<(i64, i64)> {
    match violation {
        Violation::Subset {
            edges,
            partition: Some(partition),
            ..
        } => {
            let x = x?;
            let a = EdgeSubset::from_indices(edges.clone());
            let lhs = a.len() as i64;
            let rhs = collinear_partition_value(g, x, &a, partition);
            Some((lhs, rhs))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, rint};
    use crate::gallery;

    fn caps() -> EnumCaps {
        EnumCaps::default()
    }

    #[test]
    fn collinear_counterexample_fails_at_ten() {
        let (g, x) = gallery::three_collinear_counterexample();
        let report = check_collinear_realizability(&g, &x, &caps()).unwrap();
        assert!(!report.holds);
        match report.certificate.unwrap() {
            Violation::Subset {
                edges,
                partition,
                lhs,
                rhs,
            } => {
                assert_eq!(edges.len(), 11, "the full edge set is the witness");
                assert_eq!(lhs, 11);
                assert_eq!(rhs, 10);
                let part = partition.unwrap();
                let value = collinear_partition_value(
                    &g,
                    &x,
                    &EdgeSubset::from_indices(edges),
                    &part,
                );
                assert_eq!(value, 10, "certificate re-evaluates");
            }
            other => panic!("expected a subset violation, got {other:?}"),
        }
    }

    #[test]
    fn collinear_counterexample_is_laman_without_designated_set() {
        let (g, _) = gallery::three_collinear_counterexample();
        let report =
            check_collinear_realizability(&g, &BTreeSet::new(), &caps()).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn triangle_with_two_designated_vertices_is_realizable() {
        let g = PointHyperplaneGraph::new(3, 0, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let x: BTreeSet<usize> = [0, 1].into_iter().collect();
        let report = check_collinear_realizability(&g, &x, &caps()).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn witness_partition_attains_the_collinear_minimum() {
        let (g, x) = gallery::three_collinear_counterexample();
        let blocks = gallery::three_collinear_blocks(&g);
        let all = EdgeSubset::full(&g);
        let witness: Vec<Vec<usize>> =
            blocks.iter().map(|b| b.members().to_vec()).collect();
        assert_eq!(collinear_partition_value(&g, &x, &all, &witness), 10);

        // The exhaustive minimum of the block sum is 8 (then + nu_X - 1).
        let not_x: BTreeSet<usize> = g
            .vertices()
            .into_iter()
            .filter(|v| !x.contains(v))
            .collect();
        let (best, _) = min_partition_value(
            all.members(),
            |block| 2 * nu_in(&g, block, &not_x) + nu_in(&g, block, &x) - 2,
            &caps(),
            None,
        )
        .unwrap();
        let (min_sum, argmin) = best.unwrap();
        assert_eq!(min_sum, 8);
        assert_eq!(argmin.len(), 3);
    }

    #[test]
    fn chain_body_partition_evaluates_to_twenty_two() {
        let (g, blocks) = gallery::sliding_pair_chain();
        let x = g.line_set();
        assert_eq!(
            2 * g.point_vertices().len() + 2 * g.line_vertices().len() - 3,
            23
        );
        let witness: Vec<Vec<usize>> =
            blocks.iter().map(|b| b.members().to_vec()).collect();
        let all = EdgeSubset::full(&g);
        assert_eq!(collinear_partition_value(&g, &x, &all, &witness), 22);
    }

    #[test]
    fn scene_single_edge_and_k22() {
        let g = PointHyperplaneGraph::new(1, 1, &[(0, 1)]).unwrap();
        let report = check_scene_count(&g, 2, &caps()).unwrap();
        assert!(report.spanning_form.holds && report.partition_form.holds);

        let k22 =
            PointHyperplaneGraph::new(2, 2, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let report = check_scene_count(&k22, 2, &caps()).unwrap();
        assert!(report.spanning_form.holds && report.partition_form.holds);
        assert!(report.agree());
    }

    #[test]
    fn scene_rejects_non_bipartite_input() {
        let g = PointHyperplaneGraph::new(2, 1, &[(0, 1), (0, 2)]).unwrap();
        assert!(matches!(
            check_scene_count(&g, 2, &caps()),
            Err(Error::NotBipartite(_))
        ));
    }

    #[test]
    fn scene_forms_agree_on_small_bipartite_graphs() {
        // Exhaustive over bipartite graphs with <= 3+3 vertices and <= 7
        // edges.
        for np in 1..=3usize {
            for nl in 1..=3usize {
                let cells: Vec<(usize, usize)> = (0..np)
                    .flat_map(|p| (0..nl).map(move |l| (p, np + l)))
                    .collect();
                for mask in 0u32..(1 << cells.len()) {
                    if mask.count_ones() > 7 {
                        continue;
                    }
                    let edges: Vec<(usize, usize)> = cells
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e)
                        .collect();
                    let g = PointHyperplaneGraph::new(np, nl, &edges).unwrap();
                    let report = check_scene_count(&g, 2, &caps()).unwrap();
                    assert!(
                        report.agree(),
                        "forms disagree on np={np} nl={nl} edges={edges:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn fixed_normal_triangle_misses_the_count() {
        let g = gallery::fixed_normal_triangle();
        let report = check_fixed_normal_plane(&g, &caps()).unwrap();
        assert!(!report.holds);
        assert_eq!(
            report.certificate,
            Some(Violation::EdgeCount {
                actual: 6,
                required: 7
            })
        );
    }

    #[test]
    fn fixed_normal_bar_between_two_lines_passes() {
        // Two points with a bar, three point-line ties: 4 = 2*2 + 2 - 2
        // edges, and every subset respects the counts.
        let g =
            PointHyperplaneGraph::new(2, 2, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        let report = check_fixed_normal_plane(&g, &caps()).unwrap();
        assert!(report.holds);

        // One more tie makes the edge count itself fail.
        let overbraced = PointHyperplaneGraph::new(
            2,
            2,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
        )
        .unwrap();
        let report = check_fixed_normal_plane(&overbraced, &caps()).unwrap();
        assert_eq!(
            report.certificate,
            Some(Violation::EdgeCount {
                actual: 5,
                required: 4
            })
        );
    }

    #[test]
    fn fixed_normal_rejects_point_only_overbracing() {
        // A doubled... K4 on points plus a line pendant: the K4 subset
        // violates the Laman part.
        let g = PointHyperplaneGraph::new(
            4,
            1,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)],
        )
        .unwrap();
        // |E| = 7 = 2*4 + 1 - 2.
        let report = check_fixed_normal_plane(&g, &caps()).unwrap();
        assert!(!report.holds);
        match report.certificate.unwrap() {
            Violation::Subset { edges, lhs, rhs, .. } => {
                assert_eq!(edges, vec![0, 1, 2, 3, 4, 5]);
                assert_eq!((lhs, rhs), (6, 5));
            }
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn fixed_line_quad_passes_and_equal_normals_fail() {
        let (g, c) = gallery::fixed_line_quad();
        let normals: BTreeMap<usize, Vec<Rat>> = g
            .line_vertices()
            .iter()
            .map(|&v| (v, c.lines[&v].normal.clone()))
            .collect();
        let report = check_fixed_line(&g, &normals, &caps()).unwrap();
        assert!(report.holds);

        let equal: BTreeMap<usize, Vec<Rat>> = g
            .line_vertices()
            .iter()
            .map(|&v| (v, vec![rint(0), rint(1)]))
            .collect();
        let report = check_fixed_line(&g, &equal, &caps()).unwrap();
        assert!(!report.holds);
        match report.certificate.unwrap() {
            Violation::Subset { lhs, rhs, .. } => assert!(lhs > rhs),
            other => panic!("unexpected certificate {other:?}"),
        }
    }

    #[test]
    fn fixed_line_single_point_on_two_lines() {
        let g = PointHyperplaneGraph::new(1, 2, &[(0, 1), (0, 2)]).unwrap();
        let mut normals = BTreeMap::new();
        normals.insert(1, vec![rint(0), rint(1)]);
        normals.insert(2, vec![rint(1), rint(0)]);
        let report = check_fixed_line(&g, &normals, &caps()).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn intercept_counts_on_the_two_bar_example() {
        let (g, f) = gallery::intercept_two_bars();
        let distinct = gallery::intercept_distinct_normals();
        let equal = gallery::intercept_equal_normals();

        // Bound on the witness subset: 9 under distinct normals, 7 under
        // equal normals; |F| = 8.
        assert_eq!(intercept_general_bound(&g, &distinct, &f), (8, 9));
        assert_eq!(intercept_general_bound(&g, &equal, &f), (8, 7));

        let report = check_fixed_intercept_general(&g, &distinct, &caps()).unwrap();
        assert!(report.holds);
        let report = check_fixed_intercept_general(&g, &equal, &caps()).unwrap();
        assert!(!report.holds);

        // The simple form agrees under distinct normals and rejects
        // duplicates outright.
        let report = check_fixed_intercept(&g, &distinct, &caps()).unwrap();
        assert!(report.holds);
        assert!(matches!(
            check_fixed_intercept(&g, &equal, &caps()),
            Err(Error::DuplicateNormals { .. })
        ));
    }

    #[test]
    fn intercept_requires_two_lines() {
        let g = PointHyperplaneGraph::new(1, 1, &[(0, 1)]).unwrap();
        let mut normals = BTreeMap::new();
        normals.insert(1, vec![rint(0), rint(1)]);
        assert!(matches!(
            check_fixed_intercept(&g, &normals, &caps()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn slider_counts_mirror_the_intercept_example() {
        let (g, f) = gallery::intercept_two_bars();
        let mut distinct = BTreeMap::new();
        distinct.insert(4, rint(-1));
        distinct.insert(5, rint(2));
        let mut equal = BTreeMap::new();
        equal.insert(4, rint(1));
        equal.insert(5, rint(1));

        assert_eq!(slider_bound(&g, &distinct, &f), (8, 9));
        assert_eq!(slider_bound(&g, &equal, &f), (8, 7));
        assert!(check_slider(&g, &distinct, &caps()).unwrap().holds);
        assert!(!check_slider(&g, &equal, &caps()).unwrap().holds);
    }

    #[test]
    fn slider_duplicate_on_ll_edge_is_detected() {
        // Two points and two sliders joined by a slider-slider bar;
        // 5 = 2*2 + 2 - 1 edges.
        let g = PointHyperplaneGraph::new(
            2,
            2,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let mut xs = BTreeMap::new();
        xs.insert(2, rat(1, 2));
        xs.insert(3, rat(1, 2));
        let report = check_slider(&g, &xs, &caps()).unwrap();
        assert!(!report.holds);
        assert!(matches!(
            report.certificate,
            Some(Violation::DuplicateOnEdge { .. })
        ));
    }

    #[test]
    fn min_partition_value_handles_edge_cases() {
        let c = caps();
        // |A| = 1: only the singleton partition.
        let (best, leaves) =
            min_partition_value(&[7], |b| b.len() as i64, &c, None).unwrap();
        assert_eq!(best, Some((1, vec![vec![7]])));
        assert_eq!(leaves, 1);
        // Empty set: the empty partition, value 0.
        let (best, _) = min_partition_value(&[], |_| 1, &c, None).unwrap();
        assert_eq!(best, Some((0, Vec::new())));
        // Upper bound filters.
        let (best, _) =
            min_partition_value(&[1, 2], |b| b.len() as i64, &c, Some(2)).unwrap();
        assert_eq!(best, None, "every partition of two items sums to >= 2");
    }
}
