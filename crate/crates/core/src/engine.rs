//! Exact computation of `I(G;x)` via the two deletion recursions
//!
//! ```text
//! I(G;x) = I(G-w;x) + x * I(G-N[w];x)              (vertex rule)
//! I(G;x) = I(G-uv;x) - x^2 * I(G-N(u)∪N(v);x)      (edge rule)
//! ```
//!
//! with component splitting, closed-form base cases for paths and cycles,
//! pluggable pivot strategies, and memoization keyed by canonical form for
//! small components and by the labeled graph above that threshold.

use crate::bitset::VertexSet;
use crate::canon::{canonical_form_with_limit, CanonicalForm, CANON_LIMIT};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{cycle_poly, path_poly};
use crate::Poly;
use num_bigint::BigInt;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

/// Pivot selection policy for the recursion.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Strategy {
    VertexMaxDegree,
    VertexMinDegree,
    /// Uses the pendant identity `I(G) = (1+x) I(G-{u,v}) + x I(G-N[v])`
    /// when a pendant `u` with neighbor `v` exists, else falls back to the
    /// max-degree pivot.
    PendantNeighborFirst,
    EdgeRecursion,
    /// Pendant shortcut when a pendant exists, else max-degree pivot.
    Auto,
}

impl Strategy {
    /// The four concrete strategies (`Auto` resolves to one of these).
    pub fn all() -> [Strategy; 4] {
        [
            Strategy::VertexMaxDegree,
            Strategy::VertexMinDegree,
            Strategy::PendantNeighborFirst,
            Strategy::EdgeRecursion,
        ]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Strategy::VertexMaxDegree => "max-degree",
            Strategy::VertexMinDegree => "min-degree",
            Strategy::PendantNeighborFirst => "pendant-first",
            Strategy::EdgeRecursion => "edge",
            Strategy::Auto => "auto",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "max-degree" => Ok(Strategy::VertexMaxDegree),
            "min-degree" => Ok(Strategy::VertexMinDegree),
            "pendant-first" => Ok(Strategy::PendantNeighborFirst),
            "edge" => Ok(Strategy::EdgeRecursion),
            "auto" => Ok(Strategy::Auto),
            other => Err(format!(
                "unknown strategy `{other}` (expected max-degree|min-degree|pendant-first|edge|auto)"
            )),
        }
    }
}

/// Observability record for one engine run.
#[derive(Clone, Debug)]
pub struct ComputationStats {
    pub recursion_nodes: u64,
    pub memo_hits: u64,
    pub closed_form_hits: u64,
    pub max_depth: u64,
    pub strategy: Strategy,
}

#[derive(Clone, Debug)]
pub struct EngineConfig {
    pub strategy: Strategy,
    /// Components up to this size are memoized under their canonical form;
    /// larger ones under their labeled adjacency.
    pub canon_memo_limit: usize,
    /// Recognize paths and cycles and use their closed-form polynomials.
    pub use_closed_forms: bool,
    /// Evaluate the two recursion branches of large components on parallel
    /// rayon tasks. The resulting polynomial is identical either way.
    pub parallel: bool,
}

impl EngineConfig {
    pub fn new(strategy: Strategy) -> Self {
        EngineConfig {
            strategy,
            canon_memo_limit: CANON_LIMIT,
            use_closed_forms: true,
            parallel: false,
        }
    }
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig::new(Strategy::Auto)
    }
}

pub struct Engine {
    cfg: EngineConfig,
}

// Components at least this large are worth a parallel fork.
const PAR_MIN_COMPONENT: usize = 24;

#[derive(PartialEq, Eq, Hash)]
enum MemoKey {
    Canon(CanonicalForm),
    Labeled(Graph),
}

struct Ctx<'a> {
    cfg: &'a EngineConfig,
    memo: Mutex<HashMap<MemoKey, Poly>>,
    nodes: AtomicU64,
    memo_hits: AtomicU64,
    closed_hits: AtomicU64,
    max_depth: AtomicU64,
}

impl Engine {
    pub fn new(strategy: Strategy) -> Self {
        Engine { cfg: EngineConfig::new(strategy) }
    }

    pub fn with_config(cfg: EngineConfig) -> Self {
        Engine { cfg }
    }

    /// Computes `I(g;x)` exactly.
    pub fn compute(&self, g: &Graph) -> (Poly, ComputationStats) {
        let ctx = Ctx {
            cfg: &self.cfg,
            memo: Mutex::new(HashMap::new()),
            nodes: AtomicU64::new(0),
            memo_hits: AtomicU64::new(0),
            closed_hits: AtomicU64::new(0),
            max_depth: AtomicU64::new(0),
        };
        let poly = poly_rec(&ctx, g, 0);
        let stats = ComputationStats {
            recursion_nodes: ctx.nodes.load(Ordering::Relaxed),
            memo_hits: ctx.memo_hits.load(Ordering::Relaxed),
            closed_form_hits: ctx.closed_hits.load(Ordering::Relaxed),
            max_depth: ctx.max_depth.load(Ordering::Relaxed),
            strategy: self.cfg.strategy,
        };
        (poly, stats)
    }
}

fn poly_rec(ctx: &Ctx<'_>, g: &Graph, depth: u64) -> Poly {
    ctx.nodes.fetch_add(1, Ordering::Relaxed);
    ctx.max_depth.fetch_max(depth, Ordering::Relaxed);
    let comps = g.component_sets();
    match comps.len() {
        0 => Poly::one(),
        1 => component_poly(ctx, g, depth),
        _ => {
            let mut acc = Poly::one();
            for c in &comps {
                acc = &acc * &component_poly(ctx, &g.induced(c), depth);
            }
            acc
        }
    }
}

fn component_poly(ctx: &Ctx<'_>, g: &Graph, depth: u64) -> Poly {
    debug_assert!(g.is_connected() && g.n() >= 1);
    let n = g.n();
    if n == 1 {
        ctx.closed_hits.fetch_add(1, Ordering::Relaxed);
        return Poly::from_i64s(&[1, 1]);
    }
    if n == 2 {
        ctx.closed_hits.fetch_add(1, Ordering::Relaxed);
        return Poly::from_i64s(&[1, 2]);
    }
    if ctx.cfg.use_closed_forms {
        if let Some(k) = g.is_path() {
            ctx.closed_hits.fetch_add(1, Ordering::Relaxed);
            return path_poly(k).expect("k >= 1");
        }
        if let Some(k) = g.is_cycle() {
            ctx.closed_hits.fetch_add(1, Ordering::Relaxed);
            return cycle_poly(k).expect("k >= 3");
        }
    }

    let key = if n <= ctx.cfg.canon_memo_limit {
        MemoKey::Canon(
            canonical_form_with_limit(g, ctx.cfg.canon_memo_limit).expect("within limit"),
        )
    } else {
        MemoKey::Labeled(g.clone())
    };
    if let Some(hit) = ctx.memo.lock().unwrap().get(&key) {
        ctx.memo_hits.fetch_add(1, Ordering::Relaxed);
        return hit.clone();
    }

    let poly = match select_step(g, ctx.cfg.strategy) {
        Step::Pendant(u, v) => {
            let mut uv = VertexSet::singleton(u);
            uv.insert(v);
            let rest = g.delete_vertices(&uv);
            let residual = g.delete_vertices(&g.closed_neighborhood(v));
            let (a, b) = branch(ctx, &rest, &residual, depth);
            &(&Poly::from_i64s(&[1, 1]) * &a) + &b.shift_mul_x(1)
        }
        Step::Vertex(w) => {
            let without = g.delete_vertex(w);
            let residual = g.delete_vertices(&g.closed_neighborhood(w));
            let (a, b) = branch(ctx, &without, &residual, depth);
            &a + &b.shift_mul_x(1)
        }
        Step::Edge(u, v) => {
            let without = g.delete_edge(u, v).expect("selected edge exists");
            let residual = g.delete_vertices(&g.neighbors(u).union(&g.neighbors(v)));
            let (a, b) = branch(ctx, &without, &residual, depth);
            &a - &b.shift_mul_x(2)
        }
    };

    ctx.memo.lock().unwrap().insert(key, poly.clone());
    poly
}

fn branch(ctx: &Ctx<'_>, left: &Graph, right: &Graph, depth: u64) -> (Poly, Poly) {
    if ctx.cfg.parallel && left.n().max(right.n()) >= PAR_MIN_COMPONENT {
        rayon::join(|| poly_rec(ctx, left, depth + 1), || poly_rec(ctx, right, depth + 1))
    } else {
        (poly_rec(ctx, left, depth + 1), poly_rec(ctx, right, depth + 1))
    }
}

enum Step {
    /// Pendant `u` with its neighbor `v`.
    Pendant(usize, usize),
    Vertex(usize),
    Edge(usize, usize),
}

fn select_step(g: &Graph, strategy: Strategy) -> Step {
    // ties always break toward the smallest label so stats are reproducible
    match strategy {
        Strategy::PendantNeighborFirst | Strategy::Auto => {
            if let Some(u) = g.pendant_vertices().first() {
                let v = g.neighbors(u).first().expect("pendant has a neighbor");
                Step::Pendant(u, v)
            } else {
                Step::Vertex(g.max_degree_vertex().expect("nonempty"))
            }
        }
        Strategy::VertexMaxDegree => Step::Vertex(g.max_degree_vertex().expect("nonempty")),
        Strategy::VertexMinDegree => Step::Vertex(g.min_degree_vertex().expect("nonempty")),
        Strategy::EdgeRecursion => {
            let (u, v) = g
                .cycle_edge()
                .or_else(|| g.edges().into_iter().next())
                .expect("connected component with n >= 3 has an edge");
            Step::Edge(u, v)
        }
    }
}

/// `I(g;x)` with the given strategy, plus run statistics.
pub fn independence_poly(g: &Graph, strategy: Strategy) -> (Poly, ComputationStats) {
    Engine::new(strategy).compute(g)
}

/// `I(g;-1)`, the alternating number of independent sets.
pub fn alternating_number(g: &Graph, strategy: Strategy) -> BigInt {
    independence_poly(g, strategy).0.eval_minus_one()
}

/// `I(g;-1)` under the default strategy.
pub fn alternating_number_auto(g: &Graph) -> BigInt {
    alternating_number(g, Strategy::Auto)
}

/// Counts of stable sets of even and odd size: `(f0, f1)`.
pub fn even_odd_counts(g: &Graph) -> (BigInt, BigInt) {
    independence_poly(g, Strategy::Auto).0.even_odd_sums()
}

/// Size guard for the definitional oracle: the worst case enumerates
/// `2^28` sets.
pub const BRUTE_FORCE_LIMIT: usize = 28;

/// Definitional oracle: counts stable sets of each size by exhaustive
/// backtracking, independent of the recursion engine.
pub fn brute_force_poly(g: &Graph) -> Result<Poly> {
    if g.n() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLargeForEnumeration { n: g.n(), limit: BRUTE_FORCE_LIMIT });
    }
    let mut counts = vec![0u64; g.n() + 1];
    count_rec(g, g.vertex_set(), 0, &mut counts);
    Ok(Poly::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

fn count_rec(g: &Graph, allowed: VertexSet, size: usize, counts: &mut [u64]) {
    counts[size] += 1;
    let mut rest = allowed;
    while let Some(v) = rest.first() {
        rest.remove(v);
        count_rec(g, rest.difference(&g.neighbors(v)), size + 1, counts);
    }
}

/// `α(g)` by branch and bound, without building the polynomial.
pub fn stability_number(g: &Graph) -> usize {
    fn bb(g: &Graph, allowed: VertexSet, size: usize, best: &mut usize) {
        if size + allowed.len() <= *best {
            return;
        }
        // branch on the allowed vertex with most allowed neighbors
        let pick = allowed
            .iter()
            .max_by_key(|&v| (g.neighbors(v).intersection(&allowed).len(), std::cmp::Reverse(v)));
        match pick {
            None => *best = (*best).max(size),
            Some(v) => {
                bb(g, allowed.difference(&g.closed_neighborhood(v)), size + 1, best);
                let mut rest = allowed;
                rest.remove(v);
                bb(g, rest, size, best);
            }
        }
    }
    let mut best = 0;
    bb(g, g.vertex_set(), 0, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::from_i64s(coeffs)
    }

    #[test]
    fn brute_force_examples() {
        let star = Graph::star(3).unwrap();
        assert_eq!(brute_force_poly(&star).unwrap(), poly(&[1, 4, 3, 1]));
        assert_eq!(brute_force_poly(&Graph::empty()).unwrap(), Poly::one());
        // spider tree: path 0-1-2 with extra leaves 3 at 1 and 4 at 2
        let t5 = Graph::from_edge_list(5, &[(0, 1), (1, 2), (1, 3), (2, 4)]).unwrap();
        assert_eq!(brute_force_poly(&t5).unwrap(), poly(&[1, 5, 6, 2]));
        assert!(brute_force_poly(&Graph::edgeless(29).unwrap()).is_err());
    }

    #[test]
    fn engine_matches_printed_polynomials() {
        let c7 = Graph::cycle(7).unwrap();
        for s in Strategy::all() {
            assert_eq!(independence_poly(&c7, s).0, poly(&[1, 7, 14, 7]));
        }
        // 6-vertex graph whose polynomial factors as (1+5x+4x^2+x^3)(1+x)
        let g2 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (4, 5), (2, 5), (1, 4), (1, 3)]).unwrap();
        let expect = &poly(&[1, 5, 4, 1]) * &poly(&[1, 1]);
        assert_eq!(independence_poly(&g2, Strategy::Auto).0, expect);
        assert_eq!(brute_force_poly(&g2).unwrap(), expect);
    }

    #[test]
    fn engine_stats_populated() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        let (_, stats) = independence_poly(&g, Strategy::VertexMaxDegree);
        assert!(stats.recursion_nodes >= 1);
        assert_eq!(stats.strategy, Strategy::VertexMaxDegree);
        // a second run reproduces the stats exactly
        let (_, stats2) = independence_poly(&g, Strategy::VertexMaxDegree);
        assert_eq!(stats.recursion_nodes, stats2.recursion_nodes);
        assert_eq!(stats.memo_hits, stats2.memo_hits);
    }

    #[test]
    fn alternating_number_examples() {
        // 3 disjoint triangles: (-2)^3
        let mut edges = Vec::new();
        for t in 0..3 {
            let b = 3 * t;
            edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        }
        let g = Graph::from_edge_list(9, &edges).unwrap();
        assert_eq!(alternating_number_auto(&g), BigInt::from(-8));

        let p2 = Graph::path(2).unwrap();
        assert_eq!(even_odd_counts(&p2), (BigInt::from(1), BigInt::from(2)));

        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(even_odd_counts(&c7), (BigInt::from(15), BigInt::from(14)));

        // 4-vertex corona of K2 (= P4): equal even/odd counts
        let p4 = Graph::path(4).unwrap();
        let (f0, f1) = even_odd_counts(&p4);
        assert_eq!(f0, f1);
    }

    #[test]
    fn stability_numbers() {
        assert_eq!(stability_number(&Graph::cycle(7).unwrap()), 3);
        assert_eq!(stability_number(&Graph::complete(5).unwrap()), 1);
        assert_eq!(stability_number(&Graph::path(6).unwrap()), 3);
        assert_eq!(stability_number(&Graph::empty()), 0);
        // degree of the polynomial agrees
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6)])
            .unwrap();
        let (p, _) = independence_poly(&g, Strategy::Auto);
        assert_eq!(p.degree(), Some(stability_number(&g)));
    }

    #[test]
    fn strategies_agree_on_random_graphs() {
        let mut rng = crate::rng::Rng::new(11);
        for _ in 0..60 {
            let n = 1 + rng.below(10);
            let g = crate::rand_graphs::random_graph(n, 40, &mut rng);
            let oracle = brute_force_poly(&g).unwrap();
            for s in Strategy::all() {
                assert_eq!(independence_poly(&g, s).0, oracle, "graph {g:?} strategy {s}");
            }
        }
    }

    #[test]
    fn parallel_equals_sequential() {
        let mut rng = crate::rng::Rng::new(5);
        let g = crate::rand_graphs::random_graph(30, 12, &mut rng);
        let seq = independence_poly(&g, Strategy::Auto).0;
        let mut cfg = EngineConfig::new(Strategy::Auto);
        cfg.parallel = true;
        let par = Engine::with_config(cfg).compute(&g).0;
        assert_eq!(seq, par);
    }

    #[test]
    fn long_chain_is_feasible() {
        // 46 triangles in a chain: only tractable through the labeled memo
        let g = crate::families::l_chain(46).unwrap();
        let (p, stats) = independence_poly(&g, Strategy::VertexMaxDegree);
        assert_eq!(p.eval_minus_one(), BigInt::from(47));
        assert!(stats.memo_hits > 0);
    }
}
