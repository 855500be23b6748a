//! Point-hyperplane graphs, derived loop graphs, incidence counts, and the
//! subset/partition enumeration that drives every count characterization.

use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Edge class of a point-hyperplane graph, determined by the endpoint
/// bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    PP,
    PL,
    LL,
}

/// Undirected edge, stored with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub kind: EdgeKind,
}

/// Graph on a vertex set split into point vertices and line (hyperplane)
/// vertices. No parallel edges, no self-loops; loops only appear in the
/// derived [`LoopGraph`]s. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointHyperplaneGraph {
    point_vertices: Vec<usize>,
    line_vertices: Vec<usize>,
    edges: Vec<Edge>,
}

impl PointHyperplaneGraph {
    /// Canonical dense labeling: points are `0..n_points`, lines are
    /// `n_points..n_points + n_lines`.
    pub fn new(n_points: usize, n_lines: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_vertex_sets(
            (0..n_points).collect(),
            (n_points..n_points + n_lines).collect(),
            edges,
        )
    }

    /// Build from explicit vertex id sets (used for induced subgraphs and
    /// remapped external input).
    pub fn from_vertex_sets(
        mut point_vertices: Vec<usize>,
        mut line_vertices: Vec<usize>,
        edges: &[(usize, usize)],
    ) -> Result<Self> {
        point_vertices.sort_unstable();
        point_vertices.dedup();
        line_vertices.sort_unstable();
        line_vertices.dedup();
        if let Some(v) = point_vertices
            .iter()
            .find(|v| line_vertices.binary_search(v).is_ok())
        {
            return Err(Error::InvalidGraph(format!(
                "vertex {v} is both a point and a line"
            )));
        }
        let mut out = PointHyperplaneGraph {
            point_vertices,
            line_vertices,
            edges: Vec::with_capacity(edges.len()),
        };
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert((a, b)) {
                return Err(Error::InvalidGraph(format!("parallel edge {{{a},{b}}}")));
            }
            let kind = match (out.is_point(a), out.is_point(b)) {
                (true, true) => EdgeKind::PP,
                (false, false) => EdgeKind::LL,
                _ => EdgeKind::PL,
            };
            if !out.contains_vertex(a) || !out.contains_vertex(b) {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a},{b}}} has an endpoint outside the vertex set"
                )));
            }
            out.edges.push(Edge { a, b, kind });
        }
        Ok(out)
    }

    pub fn point_vertices(&self) -> &[usize] {
        &self.point_vertices
    }

    pub fn line_vertices(&self) -> &[usize] {
        &self.line_vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn n_vertices(&self) -> usize {
        self.point_vertices.len() + self.line_vertices.len()
    }

    /// All vertices, points first, each group ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = self.point_vertices.clone();
        v.extend_from_slice(&self.line_vertices);
        v
    }

    pub fn is_point(&self, v: usize) -> bool {
        self.point_vertices.binary_search(&v).is_ok()
    }

    pub fn is_line(&self, v: usize) -> bool {
        self.line_vertices.binary_search(&v).is_ok()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.is_point(v) || self.is_line(v)
    }

    pub fn edge_indices_of_kind(&self, kind: EdgeKind) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.kind == kind)
            .map(|(i, _)| i)
            .collect()
    }

    /// Vertices incident to at least one edge of `subset`.
    pub fn touched(&self, subset: &EdgeSubset) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &i in &subset.members {
            out.insert(self.edges[i].a);
            out.insert(self.edges[i].b);
        }
        out
    }

    /// nu_mark(subset): number of vertices of `mark` incident to an edge of
    /// `subset`.
    pub fn nu(&self, subset: &EdgeSubset, mark: &BTreeSet<usize>) -> usize {
        self.touched(subset)
            .iter()
            .filter(|v| mark.contains(v))
            .count()
    }

    /// Incident point-vertex count of a subset.
    pub fn nu_points(&self, subset: &EdgeSubset) -> usize {
        self.touched(subset)
            .iter()
            .filter(|&&v| self.is_point(v))
            .count()
    }

    /// Incident line-vertex count of a subset.
    pub fn nu_lines(&self, subset: &EdgeSubset) -> usize {
        self.touched(subset)
            .iter()
            .filter(|&&v| self.is_line(v))
            .count()
    }

    /// Line vertices incident to edges of `subset`.
    pub fn lines_of(&self, subset: &EdgeSubset) -> Vec<usize> {
        self.touched(subset)
            .into_iter()
            .filter(|&v| self.is_line(v))
            .collect()
    }

    pub fn point_set(&self) -> BTreeSet<usize> {
        self.point_vertices.iter().copied().collect()
    }

    pub fn line_set(&self) -> BTreeSet<usize> {
        self.line_vertices.iter().copied().collect()
    }

    /// Subgraph induced by an edge subset: vertices are the endpoints of
    /// the subset, edges are exactly the subset. Vertex ids are preserved.
    pub fn induced_subgraph(&self, subset: &EdgeSubset) -> PointHyperplaneGraph {
        let touched = self.touched(subset);
        let points = touched.iter().copied().filter(|&v| self.is_point(v)).collect();
        let lines = touched.iter().copied().filter(|&v| self.is_line(v)).collect();
        let edges: Vec<(usize, usize)> = subset
            .members
            .iter()
            .map(|&i| (self.edges[i].a, self.edges[i].b))
            .collect();
        PointHyperplaneGraph::from_vertex_sets(points, lines, &edges)
            .expect("induced subgraph of a valid graph is valid")
    }

    /// The graph `G^P` on the point vertices: PP edges of `restriction`
    /// kept, each PL edge becomes a loop at its point endpoint labeled by
    /// the line endpoint, LL edges dropped.
    pub fn derive_point_loop_graph(&self, restriction: &EdgeSubset) -> LoopGraph {
        let mut edges = Vec::new();
        let mut loops = Vec::new();
        for &i in &restriction.members {
            let e = &self.edges[i];
            match e.kind {
                EdgeKind::PP => edges.push((e.a, e.b)),
                EdgeKind::PL => {
                    let (p, l) = if self.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
                    loops.push(LoopEdge { vertex: p, label: l });
                }
                EdgeKind::LL => {}
            }
        }
        LoopGraph {
            vertices: self.point_vertices.clone(),
            edges,
            loops,
        }
    }

    /// The graph `G^L` on the line vertices: LL edges kept, each PL edge
    /// becomes a loop at its line endpoint labeled by the point endpoint.
    pub fn derive_line_loop_graph(&self, restriction: &EdgeSubset) -> LoopGraph {
        let mut edges = Vec::new();
        let mut loops = Vec::new();
        for &i in &restriction.members {
            let e = &self.edges[i];
            match e.kind {
                EdgeKind::LL => edges.push((e.a, e.b)),
                EdgeKind::PL => {
                    let (p, l) = if self.is_point(e.a) { (e.a, e.b) } else { (e.b, e.a) };
                    loops.push(LoopEdge { vertex: l, label: p });
                }
                EdgeKind::PP => {}
            }
        }
        LoopGraph {
            vertices: self.line_vertices.clone(),
            edges,
            loops,
        }
    }

    /// Connected components of the graph itself (all edge kinds connect).
    pub fn components(&self) -> Vec<Vec<usize>> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.a, e.b)).collect();
        components_of(&self.vertices(), &pairs)
    }
}

/// Loop at `vertex`, labeled by the paired vertex it came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoopEdge {
    pub vertex: usize,
    pub label: usize,
}

/// Graph that may carry loops; vertex set may be any subset of a parent
/// graph's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopGraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub loops: Vec<LoopEdge>,
}

impl LoopGraph {
    /// Connected components; loops do not connect distinct vertices.
    /// Deterministic: components ordered by smallest vertex id, vertices
    /// ascending within each.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(&self.vertices, &self.edges)
    }

    /// Loops attached to any vertex of `verts`.
    pub fn loops_at(&self, verts: &BTreeSet<usize>) -> Vec<&LoopEdge> {
        self.loops.iter().filter(|l| verts.contains(&l.vertex)).collect()
    }

    /// 1 if the graph has no loop at all, else 0.
    pub fn lambda(&self) -> usize {
        usize::from(self.loops.is_empty())
    }
}

fn components_of(vertices: &[usize], pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let sorted: Vec<usize> = {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        v
    };
    let index = |v: usize| sorted.binary_search(&v).expect("edge endpoint not in vertex set");
    let n = sorted.len();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in pairs {
        let (ui, vi) = (index(u), index(v));
        adj[ui].push(vi);
        adj[vi].push(ui);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.push(sorted[v]);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Set of edge indices into a parent graph's edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSubset {
    members: Vec<usize>,
}

impl EdgeSubset {
    pub fn new(parent: &PointHyperplaneGraph, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&i| i >= parent.edges().len()) {
            return Err(Error::InvalidInput(format!(
                "edge index {bad} out of range (graph has {} edges)",
                parent.edges().len()
            )));
        }
        Ok(EdgeSubset { members })
    }

    /// All edges of the parent.
    pub fn full(parent: &PointHyperplaneGraph) -> Self {
        EdgeSubset {
            members: (0..parent.edges().len()).collect(),
        }
    }

    /// Without bounds checking against a parent; indices are sorted and
    /// deduplicated.
    pub fn from_indices(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        EdgeSubset { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Enumeration caps. Exceeding a cap is an explicit error, never a silent
/// truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumCaps {
    /// Largest ground set for subset enumeration.
    pub max_edges: usize,
    /// Largest set whose partitions are enumerated.
    pub max_partition: usize,
}

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            max_edges: 16,
            max_partition: 12,
        }
    }
}

/// All edge subsets with `min_size <= |S| <= max_size`, in lexicographic
/// order on the sorted index sequences, each exactly once.
pub fn enumerate_subsets(
    g: &PointHyperplaneGraph,
    min_size: usize,
    max_size: usize,
    caps: &EnumCaps,
) -> Result<SubsetIter> {
    let n = g.edges().len();
    if n > caps.max_edges {
        return Err(Error::CapExceeded {
            what: "edge set for subset enumeration",
            size: n,
            cap: caps.max_edges,
        });
    }
    Ok(SubsetIter {
        inner: SubsetPositions::with_max_size(n, max_size.min(n)),
        min_size,
    })
}

/// Lexicographic iterator over the nonempty subsets of `0..n`, as sorted
/// index vectors.
pub struct SubsetPositions {
    n: usize,
    max_size: usize,
    current: Vec<usize>,
    done: bool,
}

impl SubsetPositions {
    pub fn new(n: usize) -> Self {
        Self::with_max_size(n, n)
    }

    pub fn with_max_size(n: usize, max_size: usize) -> Self {
        SubsetPositions {
            n,
            max_size,
            current: Vec::new(),
            done: false,
        }
    }

    /// Advance to the lexicographic successor, honoring `max_size`.
    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.current.is_empty() {
            if self.n == 0 || self.max_size == 0 {
                self.done = true;
                return false;
            }
            self.current.push(0);
            return true;
        }
        let last = *self.current.last().unwrap();
        if self.current.len() < self.max_size && last + 1 < self.n {
            self.current.push(last + 1);
            return true;
        }
        while let Some(l) = self.current.pop() {
            if l + 1 < self.n {
                self.current.push(l + 1);
                return true;
            }
        }
        self.done = true;
        false
    }
}

impl Iterator for SubsetPositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.advance() {
            Some(self.current.clone())
        } else {
            None
        }
    }
}

/// Edge-subset view of [`SubsetPositions`] with a minimum size filter.
pub struct SubsetIter {
    inner: SubsetPositions,
    min_size: usize,
}

impl Iterator for SubsetIter {
    type Item = EdgeSubset;

    fn next(&mut self) -> Option<EdgeSubset> {
        loop {
            let members = self.inner.next()?;
            if members.len() >= self.min_size {
                return Some(EdgeSubset { members });
            }
        }
    }
}

/// All set partitions of the members of `subset`, in restricted-growth-
/// string order. Blocks are listed in order of first appearance and hold
/// the parent edge indices.
pub fn enumerate_partitions(subset: &EdgeSubset, caps: &EnumCaps) -> Result<PartitionIter> {
    let k = subset.len();
    if k > caps.max_partition {
        return Err(Error::CapExceeded {
            what: "set for partition enumeration",
            size: k,
            cap: caps.max_partition,
        });
    }
    // Bell(0) = 1: the empty set has exactly one partition, the empty one.
    Ok(PartitionIter {
        items: subset.members.clone(),
        rgs: vec![0; k],
        fresh: true,
        done: false,
    })
}

/// Iterator over set partitions via restricted growth strings.
pub struct PartitionIter {
    items: Vec<usize>,
    rgs: Vec<usize>,
    fresh: bool,
    done: bool,
}

impl PartitionIter {
    fn blocks(&self) -> Vec<Vec<usize>> {
        let nblocks = self.rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); nblocks];
        for (i, &b) in self.rgs.iter().enumerate() {
            out[b].push(self.items[i]);
        }
        out
    }
}

impl Iterator for PartitionIter {
    type Item = Vec<Vec<usize>>;

    fn next(&mut self) -> Option<Vec<Vec<usize>>> {
        if self.done {
            return None;
        }
        if self.fresh {
            self.fresh = false;
            return Some(self.blocks());
        }
        // Restricted growth string successor: bump the rightmost position
        // that may grow, reset everything after it to zero.
        let k = self.rgs.len();
        let mut i = k;
        loop {
            if i <= 1 {
                self.done = true;
                return None;
            }
            i -= 1;
            let prefix_max = self.rgs[..i].iter().copied().max().unwrap();
            if self.rgs[i] <= prefix_max {
                self.rgs[i] += 1;
                for j in i + 1..k {
                    self.rgs[j] = 0;
                }
                return Some(self.blocks());
            }
        }
    }
}

/// Bell number (number of set partitions); saturates at u64 for n <= 20.
pub fn bell_number(n: usize) -> u64 {
    // Bell triangle.
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn path(n: usize) -> PointHyperplaneGraph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        PointHyperplaneGraph::new(n, 0, &edges).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            PointHyperplaneGraph::new(2, 0, &[(0, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            PointHyperplaneGraph::new(2, 0, &[(0, 1), (1, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            PointHyperplaneGraph::new(2, 0, &[(0, 5)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn edge_kinds_follow_bipartition() {
        let g = PointHyperplaneGraph::new(2, 2, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        assert_eq!(g.edges()[0].kind, EdgeKind::PP);
        assert_eq!(g.edges()[1].kind, EdgeKind::PL);
        assert_eq!(g.edges()[2].kind, EdgeKind::LL);
    }

    #[test]
    fn nu_on_the_collinear_example_graph() {
        let (g, x) = crate::gallery::three_collinear_counterexample();
        let all = EdgeSubset::full(&g);
        assert_eq!(g.nu(&all, &x), 3);
        let not_x: BTreeSet<usize> = g
            .vertices()
            .into_iter()
            .filter(|v| !x.contains(v))
            .collect();
        // Edges induced by {v1, u1, u2, v2}.
        let a1 = crate::gallery::three_collinear_blocks(&g)[0].clone();
        assert_eq!(g.nu(&a1, &not_x), 2);
        assert_eq!(g.nu(&a1, &x), 2);
        let empty = EdgeSubset::new(&g, vec![]).unwrap();
        assert_eq!(g.nu(&empty, &x), 0);
    }

    #[test]
    fn nu_splits_touched_vertices() {
        // nu_X(A) + nu_{V \ X}(A) = |V(A)| on every subset of every small
        // graph (exhaustive over a few random graphs with <= 6 vertices).
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..30 {
            let np = rng.gen_range(1..=4usize);
            let nl = rng.gen_range(0..=2usize);
            let n = np + nl;
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        pairs.push((u, v));
                    }
                }
            }
            let Ok(g) = PointHyperplaneGraph::new(np, nl, &pairs) else {
                continue;
            };
            if g.edges().len() > 10 {
                continue;
            }
            let x: BTreeSet<usize> = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            let not_x: BTreeSet<usize> = (0..n).filter(|v| !x.contains(v)).collect();
            for subset in
                enumerate_subsets(&g, 0, g.edges().len(), &EnumCaps::default()).unwrap()
            {
                assert_eq!(
                    g.nu(&subset, &x) + g.nu(&subset, &not_x),
                    g.touched(&subset).len()
                );
            }
        }
    }

    #[test]
    fn point_loop_graph_from_single_pl_edge() {
        let g = PointHyperplaneGraph::new(1, 1, &[(0, 1)]).unwrap();
        let lg = g.derive_point_loop_graph(&EdgeSubset::full(&g));
        assert_eq!(lg.vertices, vec![0]);
        assert!(lg.edges.is_empty());
        assert_eq!(lg.loops, vec![LoopEdge { vertex: 0, label: 1 }]);
        assert_eq!(lg.lambda(), 0);

        let empty = g.derive_point_loop_graph(&EdgeSubset::new(&g, vec![]).unwrap());
        assert!(empty.edges.is_empty() && empty.loops.is_empty());
        assert_eq!(empty.vertices, vec![0]);
        assert_eq!(empty.lambda(), 1);
    }

    #[test]
    fn components_of_path_and_isolated() {
        let g = path(3);
        assert_eq!(g.components(), vec![vec![0, 1, 2]]);
        let iso = PointHyperplaneGraph::new(2, 0, &[]).unwrap();
        assert_eq!(iso.components(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn components_agree_with_union_find_oracle() {
        // Independent union-find over the edge list.
        struct Uf(Vec<usize>);
        impl Uf {
            fn find(&mut self, v: usize) -> usize {
                if self.0[v] != v {
                    let r = self.find(self.0[v]);
                    self.0[v] = r;
                }
                self.0[v]
            }
            fn union(&mut self, a: usize, b: usize) {
                let (ra, rb) = (self.find(a), self.find(b));
                self.0[ra] = rb;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..1000 {
            let np = rng.gen_range(1..=6usize);
            let nl = rng.gen_range(0..=2usize);
            let n = np + nl;
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.3) {
                        pairs.push((u, v));
                    }
                }
            }
            let g = PointHyperplaneGraph::new(np, nl, &pairs).unwrap();
            let lg = g.derive_point_loop_graph(&EdgeSubset::full(&g));

            let mut uf = Uf((0..n).collect());
            for &(u, v) in &lg.edges {
                uf.union(u, v);
            }
            let mut expected: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for &v in &lg.vertices {
                expected.entry(uf.find(v)).or_default().push(v);
            }
            let mut expected: Vec<Vec<usize>> = expected.into_values().collect();
            for c in &mut expected {
                c.sort_unstable();
            }
            expected.sort();
            assert_eq!(lg.components(), expected);
        }
    }

    #[test]
    fn induced_subgraph_identity_and_empty() {
        let (g, _) = crate::gallery::three_collinear_counterexample();
        let full = g.induced_subgraph(&EdgeSubset::full(&g));
        assert_eq!(full.edges().len(), g.edges().len());
        assert_eq!(full.n_vertices(), g.n_vertices());
        let empty = g.induced_subgraph(&EdgeSubset::new(&g, vec![]).unwrap());
        assert_eq!(empty.n_vertices(), 0);
        assert!(empty.edges().is_empty());
    }

    #[test]
    fn subset_enumeration_counts_and_order() {
        let g = path(4); // 3 edges
        let caps = EnumCaps::default();
        let all: Vec<EdgeSubset> = enumerate_subsets(&g, 1, 3, &caps).unwrap().collect();
        assert_eq!(all.len(), 7);
        // Lexicographic on sorted index sequences.
        assert_eq!(all[0].members(), &[0]);
        assert_eq!(all[1].members(), &[0, 1]);
        assert_eq!(all[2].members(), &[0, 1, 2]);
        assert_eq!(all[3].members(), &[0, 2]);
        assert_eq!(all[4].members(), &[1]);

        let g0 = PointHyperplaneGraph::new(2, 0, &[]).unwrap();
        assert_eq!(
            enumerate_subsets(&g0, 1, 5, &caps).unwrap().count(),
            0
        );

        let (g11, _) = crate::gallery::three_collinear_counterexample();
        assert_eq!(
            enumerate_subsets(&g11, 1, 11, &caps).unwrap().count(),
            2047
        );
    }

    #[test]
    fn subset_enumeration_respects_cap() {
        let edges: Vec<(usize, usize)> = (1..18).map(|v| (0, v)).collect();
        let g = PointHyperplaneGraph::new(18, 0, &edges).unwrap();
        assert!(matches!(
            enumerate_subsets(&g, 1, 17, &EnumCaps::default()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn partition_enumeration_matches_bell_numbers() {
        let caps = EnumCaps::default();
        for n in 0..=8usize {
            let subset = EdgeSubset::from_indices((0..n).collect());
            let count = enumerate_partitions(&subset, &caps).unwrap().count() as u64;
            assert_eq!(count, bell_number(n), "Bell({n})");
        }
    }

    #[test]
    fn partition_enumeration_small_cases() {
        let edges: Vec<(usize, usize)> = (1..=4).map(|v| (0, v)).collect();
        let g = PointHyperplaneGraph::new(5, 0, &edges).unwrap();
        let caps = EnumCaps::default();

        let s1 = EdgeSubset::new(&g, vec![0]).unwrap();
        let parts: Vec<_> = enumerate_partitions(&s1, &caps).unwrap().collect();
        assert_eq!(parts, vec![vec![vec![0]]]);

        let s3 = EdgeSubset::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(enumerate_partitions(&s3, &caps).unwrap().count(), 5);

        let s4 = EdgeSubset::new(&g, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(enumerate_partitions(&s4, &caps).unwrap().count(), 15);

        let s13 = EdgeSubset::from_indices((0..13).collect());
        assert!(matches!(
            enumerate_partitions(&s13, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
