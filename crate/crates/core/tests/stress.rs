//! Long-running randomized stress checks, excluded from the default run.
//! Execute with `cargo test -p indpoly --test stress -- --ignored`.

use indpoly::engine::{brute_force_poly, independence_poly, Strategy};
use indpoly::enumerate::free_trees;
use indpoly::rand_graphs::random_graph;
use indpoly::rng::Rng;

#[test]
#[ignore = "long-running randomized stress"]
fn oracle_equivalence_wide() {
    let mut rng = Rng::new(0xD15EA5E);
    for trial in 0..3000 {
        let n = 1 + rng.below(13);
        // sweep the full density range including the empty and complete ends
        let percent = (trial % 11) as u64 * 10;
        let g = random_graph(n, percent, &mut rng);
        let oracle = brute_force_poly(&g).unwrap();
        for s in Strategy::all() {
            assert_eq!(independence_poly(&g, s).0, oracle, "trial {trial} strategy {s} {g:?}");
        }
    }
}

#[test]
#[ignore = "long-running enumeration"]
fn free_tree_counts_to_sixteen() {
    assert_eq!(free_trees(15).unwrap().count(), 7741);
    assert_eq!(free_trees(16).unwrap().count(), 19320);
}
