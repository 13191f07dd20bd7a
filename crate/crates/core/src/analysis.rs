//! Structural analysis: cyclomatic number, girth, well-coveredness,
//! corona decomposition and dependent-set bookkeeping.

use crate::bitset::VertexSet;
use crate::engine::stability_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use num_bigint::BigInt;
use std::fmt;

/// Size guard for routines that enumerate maximal stable sets.
pub const ENUM_LIMIT: usize = 28;

/// `ν(G) = |E| - |V| + components`, the dimension of the cycle space.
pub fn cyclomatic_number(g: &Graph) -> usize {
    g.edge_count() + g.component_count() - g.n()
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            if best.is_some_and(|b| dist[x] * 2 >= b) {
                continue;
            }
            for y in g.neighbors(x).iter() {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    // non-tree edge closes a cycle through the root
                    let cand = dist[x] + dist[y] + 1;
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
        }
    }
    best
}

/// All inclusion-maximal stable sets, deterministically ordered
/// (Bron–Kerbosch with pivoting on the non-adjacency relation).
pub fn maximal_stable_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > ENUM_LIMIT {
        return Err(Error::TooLargeForEnumeration { n: g.n(), limit: ENUM_LIMIT });
    }
    let all = g.vertex_set();
    // candidates compatible with v: the non-neighbors of v, excluding v
    let compat: Vec<VertexSet> = (0..g.n()).map(|v| all.difference(&g.closed_neighborhood(v))).collect();
    let mut out = Vec::new();
    bron_kerbosch(&compat, VertexSet::empty(), all, VertexSet::empty(), &mut out);
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    compat: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (p.intersection(&compat[u]).len(), usize::MAX - u))
        .expect("p ∪ x nonempty");
    for v in p.difference(&compat[pivot]).iter() {
        let mut r2 = r;
        r2.insert(v);
        bron_kerbosch(compat, r2, p.intersection(&compat[v]), x.intersection(&compat[v]), out);
        p.remove(v);
        x.insert(v);
    }
}

/// All maximal stable sets share one cardinality.
pub fn is_well_covered(g: &Graph) -> Result<bool> {
    let sets = maximal_stable_sets(g)?;
    let mut sizes = sets.iter().map(|s| s.len());
    let first = sizes.next();
    Ok(first.is_none_or(|f| sizes.all(|s| s == f)))
}

/// Well-covered, no isolated vertices, and `|V| = 2 α(G)`.
pub fn is_very_well_covered(g: &Graph) -> Result<bool> {
    let sets = maximal_stable_sets(g)?;
    let alpha = sets.iter().map(|s| s.len()).max().unwrap_or(0);
    let wc = sets.iter().all(|s| s.len() == alpha);
    let no_isolated = (0..g.n()).all(|v| g.degree(v) > 0);
    Ok(wc && no_isolated && g.n() == 2 * alpha)
}

/// Recovers `H` when `g = H ∘ K_1`: pendants and carriers pair perfectly,
/// each carrier owning exactly one pendant. `K_2` components are ambiguous
/// and resolve to a `K_1` base vertex (the smaller label).
pub fn corona_decompose(g: &Graph) -> Option<Graph> {
    let mut carriers = VertexSet::empty();
    let mut claimed = VertexSet::empty(); // pendants already matched to a K2 carrier
    for comp in g.component_sets() {
        if comp.len() == 2 {
            let a = comp.first().expect("nonempty");
            carriers.insert(a);
            claimed = claimed.union(&comp);
        }
    }
    let pendants = g.pendant_vertices().difference(&claimed);
    for v in 0..g.n() {
        if claimed.contains(v) || pendants.contains(v) {
            continue;
        }
        // carrier: must own exactly one pendant
        if g.neighbors(v).intersection(&pendants).len() != 1 {
            return None;
        }
        carriers.insert(v);
    }
    if 2 * carriers.len() != g.n() {
        return None;
    }
    Some(g.induced(&carriers))
}

/// Checks that `g - N[v]` is well-covered; requires `g` itself to be a
/// non-complete well-covered graph.
pub fn well_covered_residual_check(g: &Graph, v: usize) -> Result<bool> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if g.is_complete() {
        return Err(Error::Precondition("graph must be non-complete".into()));
    }
    if !is_well_covered(g)? {
        return Err(Error::Precondition("graph must be well-covered".into()));
    }
    is_well_covered(&g.delete_closed_neighborhood(v)?)
}

/// Numbers of dependent (non-stable) vertex subsets of even and odd size:
/// subset counts minus the stable counts `f0, f1`.
pub fn dependent_set_balance(g: &Graph) -> (BigInt, BigInt) {
    let (f0, f1) = crate::engine::even_odd_counts(g);
    if g.n() == 0 {
        return (BigInt::from(1) - f0, BigInt::from(0) - f1);
    }
    let half = BigInt::from(1) << (g.n() - 1);
    (half.clone() - f0, half - f1)
}

/// One-stop structural profile used by the CLI.
#[derive(Clone, Debug)]
pub struct GraphProfile {
    pub n: usize,
    pub edge_count: usize,
    pub component_count: usize,
    pub cyclomatic: usize,
    pub girth: Option<usize>,
    pub alpha: usize,
    /// `None` when the graph exceeds the enumeration guard.
    pub well_covered: Option<bool>,
    pub very_well_covered: Option<bool>,
    pub corona_base: Option<Graph>,
}

impl GraphProfile {
    pub fn compute(g: &Graph) -> GraphProfile {
        let (well_covered, very_well_covered) = if g.n() <= ENUM_LIMIT {
            (Some(is_well_covered(g).expect("guarded")), Some(is_very_well_covered(g).expect("guarded")))
        } else {
            (None, None)
        };
        GraphProfile {
            n: g.n(),
            edge_count: g.edge_count(),
            component_count: g.component_count(),
            cyclomatic: cyclomatic_number(g),
            girth: girth(g),
            alpha: stability_number(g),
            well_covered,
            very_well_covered,
            corona_base: corona_decompose(g),
        }
    }
}

impl fmt::Display for GraphProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "edges: {}", self.edge_count)?;
        writeln!(f, "components: {}", self.component_count)?;
        writeln!(f, "cyclomatic: {}", self.cyclomatic)?;
        match self.girth {
            Some(k) => writeln!(f, "girth: {k}")?,
            None => writeln!(f, "girth: inf")?,
        }
        writeln!(f, "alpha: {}", self.alpha)?;
        let flag = |v: Option<bool>| match v {
            Some(true) => "true".to_string(),
            Some(false) => "false".to_string(),
            None => format!("skipped(n>{ENUM_LIMIT})"),
        };
        writeln!(f, "well_covered: {}", flag(self.well_covered))?;
        writeln!(f, "very_well_covered: {}", flag(self.very_well_covered))?;
        match &self.corona_base {
            Some(h) => writeln!(f, "corona_base: {}", crate::io::write_graph6(h)),
            None => writeln!(f, "corona_base: none"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{corona_k1, w_star};

    #[test]
    fn cyclomatic_examples() {
        assert_eq!(cyclomatic_number(&Graph::path(7).unwrap()), 0);
        for n in 3..9 {
            assert_eq!(cyclomatic_number(&Graph::cycle(n).unwrap()), 1);
        }
        assert_eq!(cyclomatic_number(&w_star(5).unwrap()), 5);
        // removing a cycle edge drops it by exactly one
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        let (u, v) = g.cycle_edge().unwrap();
        assert_eq!(cyclomatic_number(&g.delete_edge(u, v).unwrap()), cyclomatic_number(&g) - 1);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Graph::cycle(7).unwrap()), Some(7));
        assert_eq!(girth(&Graph::path(9).unwrap()), None);
        assert_eq!(girth(&Graph::complete(4).unwrap()), Some(3));
        assert_eq!(girth(&Graph::star(5).unwrap()), None);
        // C5 with a chord: girth 3 or 4 depending on the chord; here 0-2
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert_eq!(girth(&g), Some(3));
        let g6 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        assert_eq!(girth(&g6), Some(4));
    }

    #[test]
    fn maximal_sets() {
        let c5 = Graph::cycle(5).unwrap();
        let sets = maximal_stable_sets(&c5).unwrap();
        assert_eq!(sets.len(), 5);
        assert!(sets.iter().all(|s| s.len() == 2));

        let p3 = Graph::path(3).unwrap();
        let sets = maximal_stable_sets(&p3).unwrap();
        let sizes: Vec<usize> = sets.iter().map(|s| s.len()).collect();
        assert_eq!(sets.len(), 2);
        assert!(sizes.contains(&1) && sizes.contains(&2));

        let k6 = Graph::complete(6).unwrap();
        let sets = maximal_stable_sets(&k6).unwrap();
        assert_eq!(sets.len(), 6);
        assert!(sets.iter().all(|s| s.len() == 1));

        assert!(maximal_stable_sets(&Graph::edgeless(29).unwrap()).is_err());
    }

    #[test]
    fn well_covered_examples() {
        assert!(is_well_covered(&Graph::cycle(7).unwrap()).unwrap());
        assert!(!is_well_covered(&Graph::cycle(6).unwrap()).unwrap());
        assert!(!is_well_covered(&Graph::path(3).unwrap()).unwrap());
        for base in [Graph::path(4).unwrap(), Graph::cycle(5).unwrap()] {
            let c = corona_k1(&base).unwrap();
            assert!(is_very_well_covered(&c).unwrap());
        }
        // C7 is well-covered but not very well-covered (odd order)
        assert!(!is_very_well_covered(&Graph::cycle(7).unwrap()).unwrap());
    }

    #[test]
    fn corona_decomposition() {
        let p4 = Graph::path(4).unwrap();
        let h = corona_decompose(&p4).unwrap();
        assert_eq!((h.n(), h.edge_count()), (2, 1));

        assert!(corona_decompose(&Graph::cycle(7).unwrap()).is_none());
        assert!(corona_decompose(&Graph::path(1).unwrap()).is_none());
        assert!(corona_decompose(&Graph::path(3).unwrap()).is_none());

        // K2 resolves to K1
        let k2 = Graph::path(2).unwrap();
        assert_eq!(corona_decompose(&k2).unwrap().n(), 1);

        // round trip through random bases
        let mut rng = crate::rng::Rng::new(9);
        for _ in 0..40 {
            let n = 1 + rng.below(8);
            let h = crate::rand_graphs::random_graph(n, 40, &mut rng);
            let c = corona_k1(&h).unwrap();
            let back = corona_decompose(&c).expect("corona decomposes");
            assert_eq!(
                crate::canon::canonical_form(&back).unwrap(),
                crate::canon::canonical_form(&h).unwrap()
            );
        }
    }

    #[test]
    fn residual_check() {
        let c5 = Graph::cycle(5).unwrap();
        for v in 0..5 {
            assert!(well_covered_residual_check(&c5, v).unwrap());
        }
        let c7 = Graph::cycle(7).unwrap();
        for v in 0..7 {
            assert!(well_covered_residual_check(&c7, v).unwrap());
        }
        // precondition violations
        assert!(well_covered_residual_check(&Graph::complete(4).unwrap(), 0).is_err());
        assert!(well_covered_residual_check(&Graph::path(3).unwrap(), 0).is_err());
    }

    #[test]
    fn dependent_sets() {
        let k2 = Graph::path(2).unwrap();
        assert_eq!(dependent_set_balance(&k2), (BigInt::from(1), BigInt::from(0)));

        // trees: dependent-set balance within one
        for n in 1..=8usize {
            for t in crate::enumerate::free_trees(n).unwrap() {
                let (q0, q1) = dependent_set_balance(&t);
                assert!(num_traits::Signed::abs(&(q0 - q1)) <= BigInt::from(1));
            }
        }

        // well-covered tree != K2: equal balance and even totals
        let p4 = Graph::path(4).unwrap();
        let (q0, q1) = dependent_set_balance(&p4);
        assert_eq!(q0, q1);
        let (f0, f1) = crate::engine::even_odd_counts(&p4);
        assert_eq!((f0 + f1) % 2, BigInt::from(0));
        assert_eq!((q0 + q1) % 2, BigInt::from(0));
    }

    #[test]
    fn profile_renders() {
        let p = GraphProfile::compute(&Graph::cycle(7).unwrap());
        assert_eq!(p.cyclomatic, 1);
        assert_eq!(p.alpha, 3);
        assert_eq!(p.girth, Some(7));
        assert_eq!(p.well_covered, Some(true));
        let text = p.to_string();
        assert!(text.contains("girth: 7"));
        assert!(text.contains("corona_base: none"));
    }
}
