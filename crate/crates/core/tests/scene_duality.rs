//! Scenes and fixed-normal frameworks are two readings of one linear
//! system on naturally bipartite graphs: the realization-space dimension
//! equals the fixed-normal nullity at every point placement.

mod common;

use phrigid::exactla::{nullity, sampling, Rat};
use phrigid::matrices::{fixed_normal_matrix, random_configuration};
use phrigid::phgraph::PointHyperplaneGraph;
use phrigid::scenes::realization_space_dim;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

#[test]
fn realization_dimension_equals_fixed_normal_nullity_at_any_placement() {
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    for _ in 0..60 {
        let np = rng.gen_range(1..=3usize);
        let nl = rng.gen_range(1..=3usize);
        let mut edges = Vec::new();
        for p in 0..np {
            for l in 0..nl {
                if rng.gen_bool(0.5) {
                    edges.push((p, np + l));
                }
            }
        }
        let g = PointHyperplaneGraph::new(np, nl, &edges).unwrap();
        let normals: BTreeMap<usize, Vec<Rat>> = g
            .line_vertices()
            .iter()
            .map(|&v| (v, sampling::generic_unit_vector(&mut rng).to_vec()))
            .collect();
        let scene_dim = realization_space_dim(&g, &normals, 2).unwrap();

        // Two unrelated placements, same normals: the nullity is
        // placement-independent and matches the scene computation.
        for _ in 0..2 {
            let mut c = random_configuration(&g, 2, &mut rng);
            for (&v, h) in c.lines.iter_mut() {
                h.normal = normals[&v].clone();
            }
            let m = fixed_normal_matrix(&g, &c).unwrap();
            assert_eq!(nullity(&m, 0.0).unwrap(), scene_dim);
        }
    }
}

#[test]
fn trivial_scenes_realize_every_normal_assignment() {
    let mut rng = ChaCha8Rng::seed_from_u64(402);
    for _ in 0..20 {
        let np = rng.gen_range(1..=3usize);
        let nl = rng.gen_range(1..=3usize);
        let edges: Vec<(usize, usize)> = (0..np)
            .flat_map(|p| (0..nl).map(move |l| (p, np + l)))
            .collect();
        let g = PointHyperplaneGraph::new(np, nl, &edges).unwrap();
        let normals: BTreeMap<usize, Vec<Rat>> = g
            .line_vertices()
            .iter()
            .map(|&v| (v, sampling::generic_unit_vector(&mut rng).to_vec()))
            .collect();
        let t = vec![
            sampling::generic_rat(&mut rng),
            sampling::generic_rat(&mut rng),
        ];
        let scene = phrigid::scenes::trivial_scene(&g, &normals, &t).unwrap();
        scene.check_incidence().unwrap();
    }
}
