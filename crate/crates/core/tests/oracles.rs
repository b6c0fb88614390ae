use netbound::oracles::{brute_treewidth, check_min_cover_theorem};
use netbound::{generate, make_frame, validate_tree_decomposition, Family};

#[test]
fn treewidth_decompositions_validate() {
    for seed in 0..40 {
        let g = generate(Family::RandomPlane { n: 3 + (seed as usize % 9), seed }).unwrap();
        let sg = g.to_simple();
        let (tw, td) = brute_treewidth(&sg, 15).unwrap();
        let v = validate_tree_decomposition(&sg, &td);
        assert!(v.is_valid(), "seed {seed}: {:?}", v.violation);
        assert_eq!(v.width, tw);
        // planar graphs on n vertices have treewidth well below n
        assert!(tw <= 2 * (sg.num_vertices() as f64).sqrt().ceil() as isize + 1);
    }
}

#[test]
fn grid_three_oracle_decomposition() {
    let g = generate(Family::SquareGrid(3)).unwrap().to_simple();
    let (tw, td) = brute_treewidth(&g, 15).unwrap();
    assert_eq!(tw, 3);
    assert!(validate_tree_decomposition(&g, &td).is_valid());
}

#[test]
fn min_cover_theorem_on_random_frames() {
    for seed in 0..30u64 {
        let g = generate(Family::RandomPlane { n: 2 + (seed as usize % 7), seed }).unwrap();
        let len = g.outer_walk().len();
        let j = seed as usize % (len + 1);
        let k = j + (seed as usize / 3) % (len + 1 - j);
        let f = make_frame(&g, j, k).unwrap();
        assert_eq!(check_min_cover_theorem(&g, &f, 4, 10).unwrap(), None, "seed {seed}");
    }
}
