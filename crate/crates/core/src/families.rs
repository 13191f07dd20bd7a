//! Constructors for the graph families and transforms whose values at `-1`
//! have closed forms, each cross-checkable against the engine.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn append_offset(edges: &mut Vec<(usize, usize)>, g: &Graph, offset: usize) {
    edges.extend(g.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
}

/// `H ∘ K_1`: each vertex of `h` gains one new pendant neighbor.
/// Original vertices keep their labels; the pendant of vertex `i` is `h.n() + i`.
pub fn corona_k1(h: &Graph) -> Result<Graph> {
    let n = h.n();
    let mut edges = h.edges();
    edges.extend((0..n).map(|i| (i, n + i)));
    Graph::from_edge_list(2 * n, &edges)
}

/// Relabeled side-by-side copies.
pub fn disjoint_union(gs: &[Graph]) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut offset = 0;
    for g in gs {
        append_offset(&mut edges, g, offset);
        offset += g.n();
    }
    Graph::from_edge_list(offset, &edges)
}

/// Zykov sum: disjoint union plus all edges across the two parts.
pub fn zykov_sum(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let mut edges = g1.edges();
    append_offset(&mut edges, g2, g1.n());
    for u in 0..g1.n() {
        for v in 0..g2.n() {
            edges.push((u, g1.n() + v));
        }
    }
    Graph::from_edge_list(g1.n() + g2.n(), &edges)
}

/// New vertex `v` joined to one anchor vertex in each child graph. `v` gets
/// the last label. Requires at least two children.
pub fn join_vertex(children: &[(Graph, usize)]) -> Result<Graph> {
    if children.len() < 2 {
        return Err(Error::ParamOutOfRange {
            op: "join_vertex",
            msg: "at least two child graphs required".into(),
        });
    }
    let mut edges = Vec::new();
    let mut offset = 0;
    let mut anchors = Vec::new();
    for (g, anchor) in children {
        if *anchor >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: *anchor, n: g.n() });
        }
        append_offset(&mut edges, g, offset);
        anchors.push(offset + anchor);
        offset += g.n();
    }
    let v = offset;
    edges.extend(anchors.into_iter().map(|a| (a, v)));
    Graph::from_edge_list(v + 1, &edges)
}

/// Chain of `s` triangles: bottom path `b_1 .. b_{2s}` (labels `0..2s`),
/// apex `a_i` (label `2s - 1 + i`) over `b_{2i-1} b_{2i}`. `L_0 = K_1`.
pub fn l_chain(s: usize) -> Result<Graph> {
    if s == 0 {
        return Graph::from_edge_list(1, &[]);
    }
    let mut edges: Vec<(usize, usize)> = (0..2 * s - 1).map(|i| (i, i + 1)).collect();
    for i in 1..=s {
        let apex = 2 * s - 1 + i;
        edges.push((2 * i - 2, apex));
        edges.push((2 * i - 1, apex));
    }
    Graph::from_edge_list(3 * s, &edges)
}

/// Distinguished anchor of `L_s`: the rightmost bottom vertex `b_{2s}`.
pub fn l_chain_anchor(s: usize) -> usize {
    if s == 0 {
        0
    } else {
        2 * s - 1
    }
}

/// Star `K_{1,q}` whose every leaf is joined to both endpoints of its own
/// `K_2`, so each leaf carries a triangle. `3q + 1` vertices, `ν = q`.
pub fn w_star(q: usize) -> Result<Graph> {
    if q < 2 {
        return Err(Error::ParamOutOfRange { op: "w_star", msg: "q >= 2 required".into() });
    }
    let mut edges = Vec::with_capacity(4 * q);
    for i in 0..q {
        let (l, a, b) = (1 + 3 * i, 2 + 3 * i, 3 + 3 * i);
        edges.extend([(0, l), (a, b), (l, a), (l, b)]);
    }
    Graph::from_edge_list(3 * q + 1, &edges)
}

/// Path `u - v - w` where `v` is joined to both endpoints of `nu - q`
/// copies of `K_2` and `w` is bridged to one vertex of each of `q`
/// triangles. `ν = nu`, `I(·;-1) = (-1)^{q+1} 2^q`.
pub fn lemma4_g1(nu: usize, q: usize) -> Result<Graph> {
    if q > nu {
        return Err(Error::ParamOutOfRange { op: "lemma4_g1", msg: "q <= nu required".into() });
    }
    let mut edges = vec![(0, 1), (1, 2)];
    let mut next = 3;
    for _ in 0..nu - q {
        edges.extend([(next, next + 1), (1, next), (1, next + 1)]);
        next += 2;
    }
    for _ in 0..q {
        edges.extend([(next, next + 1), (next + 1, next + 2), (next, next + 2), (2, next)]);
        next += 3;
    }
    Graph::from_edge_list(next, &edges)
}

/// Value-negating transform: new vertex joined to a `K_2` endpoint and to
/// `g` at `anchor`. `I -> -I`, `ν` unchanged.
pub fn transform_h1(g: &Graph, anchor: usize) -> Result<Graph> {
    join_vertex(&[(Graph::path(2)?, 0), (g.clone(), anchor)])
}

/// Value-preserving transform: new vertex joined to a `C_5` vertex and to
/// `g` at `anchor`. `ν` increases by one.
pub fn transform_h2(g: &Graph, anchor: usize) -> Result<Graph> {
    join_vertex(&[(Graph::cycle(5)?, 0), (g.clone(), anchor)])
}

/// Magnitude-scaling transform: new vertex joined to the `L_{k-1}` anchor,
/// a `K_2` endpoint, and `g` at `anchor`. `|I| -> k |I|`, `ν += k - 1`.
pub fn transform_h3(g: &Graph, anchor: usize, k: usize) -> Result<Graph> {
    transform_h3_multi(&[(g.clone(), anchor)], k)
}

/// H3 with several attached graphs (the single-base case is the standard
/// transform; extra bases still satisfy the join identity).
///
/// At `k = 1` the chain child degenerates to the empty graph (its
/// independence polynomial is the constant 1 in the chain recurrence), so
/// the construction reduces to the negating transform, keeping
/// `|I| = k |I(g)|` and `ν += k - 1` valid for every `k >= 1`.
pub fn transform_h3_multi(bases: &[(Graph, usize)], k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::ParamOutOfRange { op: "transform_h3", msg: "k >= 1 required".into() });
    }
    let mut children = vec![(Graph::path(2)?, 0)];
    if k >= 2 {
        children.push((l_chain(k - 1)?, l_chain_anchor(k - 1)));
    }
    children.extend(bases.iter().cloned());
    join_vertex(&children)
}

/// Path `u - v - w` with `w` joined to the anchor of one `L_{s_j}` per
/// entry. `|I(·;-1)| = Π (s_j + 1)`, `ν = Σ s_j`.
pub fn chain_product(attach: &[usize]) -> Result<Graph> {
    if attach.is_empty() || attach.contains(&0) {
        return Err(Error::ParamOutOfRange {
            op: "chain_product",
            msg: "needs at least one chain length, all >= 1".into(),
        });
    }
    let mut edges = vec![(0, 1), (1, 2)];
    let mut offset = 3;
    for &s in attach {
        let chain = l_chain(s)?;
        append_offset(&mut edges, &chain, offset);
        edges.push((2, offset + l_chain_anchor(s)));
        offset += chain.n();
    }
    Graph::from_edge_list(offset, &edges)
}

/// `C_n` with a three-vertex tail path attached through one extra edge.
/// Tail is `0 - 1 - 2`, the cycle occupies `3..n+3`, and `2 - 3` links them.
pub fn cycle_with_tail(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::ParamOutOfRange { op: "cycle_with_tail", msg: "n >= 4 required".into() });
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3)];
    for i in 0..n {
        edges.push((3 + i, 3 + (i + 1) % n));
    }
    Graph::from_edge_list(n + 3, &edges)
}

/// The 12-vertex, 14-edge witness with `ν = 3` and `I(·;-1) = 5`,
/// reconstructed as a concrete edge list and validated in tests against its
/// factorization `(1+2x)(1+3x)^2 I(P_3;x) + x(1+2x)^3`.
pub fn fig22_g() -> Graph {
    Graph::from_edge_list(
        12,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 5),
            (2, 6),
            (6, 7),
            (2, 7),
            (2, 8),
            (8, 10),
            (8, 11),
            (10, 11),
            (3, 9),
            (4, 9),
        ],
    )
    .expect("fixed edge list is valid")
}

/// The distinguished vertex of [`fig22_g`] used by its factorization.
pub const FIG22_PIVOT: usize = 2;
