use netbound::oracles::{brute_net_order, enumerate_vines, vines_pairwise_touch};
use netbound::{
    bt_alg, build_decomposition, build_face_graph, generate, induced_subgraph, make_frame,
    net_alg, net_alg_with, validate_tree_decomposition, verify_cover, Family, Frame3, NetAlgRoute,
    PlaneGraph,
};
use proptest::prelude::*;

fn random_graph(n: usize, seed: u64, mirror: bool) -> PlaneGraph {
    let g = generate(Family::RandomPlane { n, seed }).unwrap();
    if mirror {
        g.mirrored()
    } else {
        g
    }
}

fn frame_from(g: &PlaneGraph, a: usize, b: usize) -> Frame3 {
    let len = g.outer_walk().len();
    let (a, b) = (a % (len + 1), b % (len + 1));
    make_frame(g, a.min(b), a.max(b)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn euler_and_walk_lengths(n in 1usize..40, seed in any::<u64>(), mirror in any::<bool>()) {
        let g = random_graph(n, seed, mirror);
        let faces = g.faces();
        let (v, e, f) = (g.num_vertices() as i64, g.num_edges() as i64, faces.len() as i64);
        prop_assert_eq!(v - e + f, 2);
        let total: usize = faces.walks().iter().map(|w| w.len()).sum();
        prop_assert_eq!(total, 2 * g.num_edges());
        let walk = g.outer_walk();
        prop_assert_eq!(walk.vertices().first(), walk.vertices().last());
    }

    #[test]
    fn face_graph_shape(n in 1usize..30, seed in any::<u64>()) {
        let g = random_graph(n, seed, false);
        let fg = build_face_graph(&g);
        let h = fg.graph();
        let bounded: Vec<_> = g.faces().bounded().collect();
        prop_assert_eq!(h.num_vertices(), g.num_vertices() + bounded.len());
        let spokes: usize = bounded.iter().map(|w| w.distinct_vertices().len()).sum();
        prop_assert_eq!(h.num_edges(), g.num_edges() + spokes);
        prop_assert_eq!(h.outer_walk().vertices(), g.outer_walk().vertices());
        // deleting the face vertices gives back the original rotation system
        let originals: Vec<_> = (0..g.num_vertices()).collect();
        let back = induced_subgraph(h, &originals).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(back[0].graph.rotations(), g.rotations());
    }

    #[test]
    fn induced_subgraph_partitions(n in 2usize..30, seed in any::<u64>(), mask in any::<u64>()) {
        let g = random_graph(n, seed, false);
        let keep: Vec<_> = (0..g.num_vertices()).filter(|v| mask >> (v % 64) & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        let comps = induced_subgraph(&g, &keep).unwrap();
        let mut seen: Vec<_> = comps.iter().flat_map(|c| c.vertices.clone()).collect();
        seen.sort_unstable();
        prop_assert_eq!(&seen, &keep);
        let kept_edges = g.edges().filter(|&(u, v)| keep.contains(&u) && keep.contains(&v)).count();
        prop_assert_eq!(comps.iter().map(|c| c.graph.num_edges()).sum::<usize>(), kept_edges);
        for c in &comps {
            for (u, v) in c.graph.edges() {
                prop_assert!(g.has_edge(c.vertices[u], c.vertices[v]));
            }
        }
        for w in comps.windows(2) {
            prop_assert!(w[0].vertices[0] < w[1].vertices[0]);
        }
    }

    #[test]
    fn net_alg_cover_is_a_cover(n in 1usize..40, seed in any::<u64>(), a in any::<usize>(), b in any::<usize>()) {
        let g = random_graph(n, seed, seed % 2 == 0);
        let f = frame_from(&g, a, b);
        let nc = net_alg(&g, &f).unwrap();
        prop_assert!(verify_cover(&g, &f, &nc.cover));
        prop_assert_eq!(nc.order, nc.cover.len());
        // supersets of a cover are covers
        let mut bigger = nc.cover.clone();
        bigger.push(seed as usize % g.num_vertices());
        prop_assert!(verify_cover(&g, &f, &bigger));
        let slow = net_alg_with(&g, &f, NetAlgRoute::PerSource).unwrap();
        prop_assert_eq!(slow.order, nc.order);
    }

    #[test]
    fn vines_touch_pairwise(n in 1usize..9, seed in any::<u64>(), a in any::<usize>(), b in any::<usize>()) {
        let g = random_graph(n, seed, false);
        let f = frame_from(&g, a, b);
        let vines = enumerate_vines(&g, &f, 12).unwrap();
        prop_assert!(vines_pairwise_touch(&g, &vines));
    }

    #[test]
    fn net_alg_matches_brute_force(n in 1usize..9, seed in any::<u64>(), a in any::<usize>(), b in any::<usize>()) {
        let g = random_graph(n, seed, seed % 3 == 0);
        let f = frame_from(&g, a, b);
        prop_assert_eq!(net_alg(&g, &f).unwrap().order, brute_net_order(&g, &f, 12).unwrap().order);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn bt_alg_invariants(n in 1usize..60, seed in any::<u64>()) {
        let g = random_graph(n, seed, seed % 2 == 1);
        let run = bt_alg(&g, None).unwrap();
        let mut covered: Vec<_> = run.nodes.iter().flat_map(|x| x.cover.clone()).collect();
        covered.sort_unstable();
        prop_assert_eq!(covered, (0..g.num_vertices()).collect::<Vec<_>>());
        let root_order = net_alg(&g, &run.root().frame).unwrap().order;
        prop_assert!(run.kb >= root_order);
        for node in &run.nodes {
            prop_assert!(node.incident_covers <= 3);
            prop_assert!(node.pruned || node.cover.len() <= run.kb);
        }
        let dt = build_decomposition(&run, &g).unwrap();
        prop_assert!(validate_tree_decomposition(&g.to_simple(), &dt.td).is_valid());
        prop_assert!(dt.width < 4 * run.kb as isize);
        prop_assert_eq!(&bt_alg(&g, None).unwrap(), &run);
    }
}
