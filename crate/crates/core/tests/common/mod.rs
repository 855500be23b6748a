use phrigid::exactla::Rat;
use phrigid::matrices::{random_configuration, Configuration};
use phrigid::phgraph::PointHyperplaneGraph;
use rand::Rng;

/// Random point-hyperplane graph with the given part sizes and edge
/// probability.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    np: usize,
    nl: usize,
    edge_prob: f64,
) -> PointHyperplaneGraph {
    let n = np + nl;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    PointHyperplaneGraph::new(np, nl, &edges).unwrap()
}

/// Run an exact nullity computation at fresh random placements until two
/// independent draws agree, then return the agreed value.
pub fn agreed_nullity<R: Rng>(
    g: &PointHyperplaneGraph,
    dim: usize,
    rng: &mut R,
    compute: impl Fn(&Configuration<Rat>) -> usize,
) -> usize {
    let mut last = None;
    for _ in 0..10 {
        let c = random_configuration(g, dim, rng);
        let value = compute(&c);
        if last == Some(value) {
            return value;
        }
        last = Some(value);
    }
    panic!("no two consecutive draws agreed on a nullity");
}
