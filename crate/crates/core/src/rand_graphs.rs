//! Seeded random graph generation for property tests and the search
//! harness.

use crate::error::Result;
use crate::graph::Graph;
use crate::rng::Rng;

/// G(n, p) with edge probability `percent/100`.
pub fn random_graph(n: usize, percent: u64, rng: &mut Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(percent, 100) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("in-range edges")
}

/// Uniform random labeled tree on `n >= 1` vertices via a random Prüfer
/// sequence.
pub fn random_tree(n: usize, rng: &mut Rng) -> Graph {
    if n <= 2 {
        return Graph::path(n.max(1)).expect("small path");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
    crate::enumerate::tree_from_pruefer(&seq).expect("valid sequence")
}

/// Connected graph with cyclomatic number exactly `nu`: a random spanning
/// tree plus `nu` distinct extra edges. Fails when `nu` exceeds the number
/// of available non-edges.
pub fn random_connected_with_nu(n: usize, nu: usize, rng: &mut Rng) -> Result<Graph> {
    if n == 0 {
        return Err(crate::error::Error::ParamOutOfRange {
            op: "random_connected_with_nu",
            msg: "n >= 1 required".into(),
        });
    }
    let max_extra = n * (n - 1) / 2 - (n - 1);
    if nu > max_extra {
        return Err(crate::error::Error::ParamOutOfRange {
            op: "random_connected_with_nu",
            msg: format!("nu = {nu} exceeds {max_extra} available non-edges at n = {n}"),
        });
    }
    let tree = random_tree(n, rng);
    let mut edges = tree.edges();
    let mut have: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    while edges.len() < n - 1 + nu {
        let u = rng.below(n);
        let v = rng.below(n);
        let (a, b) = (u.min(v), u.max(v));
        if a != b && !have.contains(&(a, b)) {
            have.insert((a, b));
            edges.push((a, b));
        }
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_and_nu_shapes() {
        let mut rng = Rng::new(3);
        for _ in 0..50 {
            let n = 1 + rng.below(12);
            let t = random_tree(n, &mut rng);
            assert!(t.is_connected());
            assert_eq!(t.edge_count(), n - 1);
        }
        for nu in 0..4 {
            let g = random_connected_with_nu(8, nu, &mut rng).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.edge_count(), 7 + nu);
        }
        assert!(random_connected_with_nu(3, 5, &mut rng).is_err());
    }
}
