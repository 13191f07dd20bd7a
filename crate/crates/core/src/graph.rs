//! Immutable simple graphs over bit-set adjacency rows, with the deletion
//! operations the independence-polynomial recursions need.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use std::fmt;

/// A finite, undirected, loopless graph on vertices `0..n`.
///
/// `adj[v]` is the open neighborhood `N(v)`. Values are immutable: every
/// deletion returns a fresh graph, so they can be shared freely across
/// threads.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The empty graph (no vertices).
    pub fn empty() -> Self {
        Graph { n: 0, adj: Vec::new() }
    }

    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::OverCap(n, MAX_VERTICES));
        }
        Ok(Graph { n, adj: vec![VertexSet::empty(); n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Path on `n >= 1` vertices, edges `i - i+1`.
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ParamOutOfRange { op: "path", msg: "n >= 1 required".into() });
        }
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::ParamOutOfRange { op: "cycle", msg: "n >= 3 required".into() });
        }
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edge_list(n, &edges)
    }

    /// Complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ParamOutOfRange { op: "complete", msg: "n >= 1 required".into() });
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Star `K_{1,q}`: center 0 with `q` leaves.
    pub fn star(q: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=q).map(|v| (0, v)).collect();
        Graph::from_edge_list(q + 1, &edges)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::all_below(self.n)
    }

    /// Induced subgraph on `V \ s`, survivors relabeled to `0..n'` in
    /// original order.
    pub fn delete_vertices(&self, s: &VertexSet) -> Graph {
        let keep = self.vertex_set().difference(s);
        self.induced(&keep)
    }

    /// Induced subgraph on `keep`, relabeled order-preserving.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let keep = keep.intersection(&self.vertex_set());
        let old: Vec<usize> = keep.iter().collect();
        let mut new_label = vec![usize::MAX; self.n];
        for (new, &o) in old.iter().enumerate() {
            new_label[o] = new;
        }
        let adj = old
            .iter()
            .map(|&o| self.adj[o].intersection(&keep).iter().map(|w| new_label[w]).collect())
            .collect();
        Graph { n: old.len(), adj }
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.delete_vertices(&VertexSet::singleton(v))
    }

    /// `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.delete_vertices(&self.closed_neighborhood(v)))
    }

    /// `G - uv`: same vertices, one edge removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// `G - (N(u) ∪ N(v))` for an edge `uv`; note `u` and `v` themselves are
    /// removed since each lies in the other's neighborhood.
    pub fn delete_edge_neighborhoods(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        Ok(self.delete_vertices(&self.adj[u].union(&self.adj[v])))
    }

    /// Vertices reachable from `start`.
    pub fn reach(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier.iter() {
                next = next.union(&self.adj[v]);
            }
            frontier = next.difference(&seen);
            seen = seen.union(&frontier);
        }
        seen
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertex_set();
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let comp = self.reach(v);
            remaining = remaining.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// Connected components as induced subgraphs, ordered by smallest
    /// original vertex label. The empty graph has no components.
    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_sets().iter().map(|c| self.induced(c)).collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_sets().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach(0).len() == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// All vertices of degree exactly 1.
    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// BFS shortest-path edge count; `None` across components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        debug_assert!(u < self.n && v < self.n);
        if u == v {
            return Some(0);
        }
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::empty();
            for w in frontier.iter() {
                next = next.union(&self.adj[w]);
            }
            frontier = next.difference(&seen);
            if frontier.contains(v) {
                return Some(d);
            }
            seen = seen.union(&frontier);
        }
        None
    }

    /// `Some(n)` when the graph is exactly the path `P_n` (connected;
    /// `P_1 = K_1`, `P_2 = K_2`).
    pub fn is_path(&self) -> Option<usize> {
        if self.n == 0 || !self.is_connected() {
            return None;
        }
        if self.n == 1 {
            return Some(1);
        }
        let deg1 = (0..self.n).filter(|&v| self.degree(v) == 1).count();
        let deg2 = (0..self.n).filter(|&v| self.degree(v) == 2).count();
        (deg1 == 2 && deg1 + deg2 == self.n).then_some(self.n)
    }

    /// `Some(n)` when the graph is exactly the cycle `C_n`, `n >= 3`.
    pub fn is_cycle(&self) -> Option<usize> {
        if self.n < 3 || !self.is_connected() {
            return None;
        }
        (0..self.n).all(|v| self.degree(v) == 2).then_some(self.n)
    }

    /// Max-degree vertex, smallest label on ties.
    pub fn max_degree_vertex(&self) -> Option<usize> {
        (0..self.n).max_by_key(|&v| (self.degree(v), self.n - v))
    }

    /// Min-degree vertex, smallest label on ties.
    pub fn min_degree_vertex(&self) -> Option<usize> {
        (0..self.n).min_by_key(|&v| (self.degree(v), v))
    }

    /// Deterministic edge lying on a cycle, if any: the first back edge of a
    /// DFS from vertex 0 with ascending neighbor order.
    pub fn cycle_edge(&self) -> Option<(usize, usize)> {
        if self.n == 0 {
            return None;
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = VertexSet::empty();
        for root in 0..self.n {
            if seen.contains(root) {
                continue;
            }
            let mut stack = vec![root];
            seen.insert(root);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        parent[w] = v;
                        stack.push(w);
                    } else if parent[v] != w {
                        return Some((v.min(w), v.max(w)));
                    }
                }
            }
        }
        None
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
