//! Exhaustive generators: all free trees up to 16 vertices, all connected
//! graphs up to 8, deduplicated by canonical form and produced as
//! deterministic lazy streams.

use crate::canon::{canonical_form_with_limit, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;

pub const FREE_TREE_LIMIT: usize = 16;
pub const CONNECTED_LIMIT: usize = 8;

/// Labeled tree on `seq.len() + 2` vertices from a Prüfer sequence.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    for &s in seq {
        if s >= n {
            return Err(Error::VertexOutOfRange { vertex: s, n });
        }
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a, b));
    Graph::from_edge_list(n, &edges)
}

/// Rooted-tree level sequences in decreasing lexicographic order
/// (the classic constant-time successor rule), starting from the path.
struct LevelSequences {
    seq: Option<Vec<usize>>,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        LevelSequences { seq: Some((1..=n).collect()) }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.seq.take()?;
        // successor: find rightmost entry > 2, then repeat the block that
        // starts at its most recent shallower ancestor
        if let Some(p) = cur.iter().rposition(|&l| l > 2) {
            let q = cur[..p].iter().rposition(|&l| l == cur[p] - 1).expect("ancestor exists");
            let mut next = cur.clone();
            for i in p..next.len() {
                next[i] = next[i - (p - q)];
            }
            self.seq = Some(next);
        }
        Some(cur)
    }
}

fn tree_from_level_sequence(seq: &[usize]) -> Graph {
    let n = seq.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = (0..i).rfind(|&j| seq[j] == seq[i] - 1).expect("canonical sequence");
        edges.push((parent, i));
    }
    Graph::from_edge_list(n, &edges).expect("valid tree")
}

/// Center(s) of a tree by leaf stripping: one or two vertices.
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            for w in g.neighbors(v).iter() {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

fn ahu_encode(g: &Graph, v: usize, parent: Option<usize>, out: &mut Vec<u8>) {
    let mut children: Vec<Vec<u8>> = g
        .neighbors(v)
        .iter()
        .filter(|&w| Some(w) != parent)
        .map(|w| {
            let mut buf = Vec::new();
            ahu_encode(g, w, Some(v), &mut buf);
            buf
        })
        .collect();
    children.sort();
    out.push(b'(');
    for c in children {
        out.extend(c);
    }
    out.push(b')');
}

/// Isomorphism key for a free tree of any supported size: AHU encoding
/// rooted at the center (for bicentral trees, the sorted pair of halves).
pub fn free_tree_key(g: &Graph) -> Vec<u8> {
    let centers = tree_centers(g);
    match centers.as_slice() {
        [] => vec![b'0'],
        [c] => {
            let mut key = vec![b'1'];
            ahu_encode(g, *c, None, &mut key);
            key
        }
        [c1, c2] => {
            let mut a = Vec::new();
            ahu_encode(g, *c1, Some(*c2), &mut a);
            let mut b = Vec::new();
            ahu_encode(g, *c2, Some(*c1), &mut b);
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            let mut key = vec![b'2'];
            key.extend(a);
            key.extend(b);
            key
        }
        _ => unreachable!("a tree has at most two centers"),
    }
}

/// Streams every free tree on `n` vertices exactly once.
pub fn free_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n == 0 || n > FREE_TREE_LIMIT {
        return Err(Error::ParamOutOfRange {
            op: "free_trees",
            msg: format!("n = {n} outside 1..={FREE_TREE_LIMIT}"),
        });
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    Ok(LevelSequences::new(n).filter_map(move |seq| {
        let g = tree_from_level_sequence(&seq);
        seen.insert(free_tree_key(&g)).then_some(g)
    }))
}

/// Streams every connected graph on `n` vertices exactly once (canonical
/// representatives), built by vertex augmentation with canonical dedup.
pub fn connected_graphs(n: usize) -> Result<Box<dyn Iterator<Item = Graph>>> {
    if n == 0 || n > CONNECTED_LIMIT {
        return Err(Error::ParamOutOfRange {
            op: "connected_graphs",
            msg: format!("n = {n} outside 1..={CONNECTED_LIMIT}"),
        });
    }
    // every level below the target is materialized; the last level streams
    let mut parents = vec![Graph::from_edge_list(1, &[]).expect("K1")];
    for k in 2..n {
        parents = augmentations(parents, k).collect();
    }
    if n == 1 {
        Ok(Box::new(parents.into_iter()))
    } else {
        Ok(Box::new(augmentations(parents, n)))
    }
}

/// Extends each parent on `k-1` vertices by a new vertex attached to every
/// nonempty neighborhood subset, deduplicating by canonical form. Every
/// connected graph on `k` vertices arises this way because some non-cut
/// vertex can always be removed.
fn augmentations(parents: Vec<Graph>, k: usize) -> impl Iterator<Item = Graph> {
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    parents.into_iter().flat_map(move |p| {
        let mut out = Vec::new();
        for mask in 1u64..(1 << (k - 1)) {
            let mut edges = p.edges();
            for i in 0..k - 1 {
                if mask >> i & 1 == 1 {
                    edges.push((i, k - 1));
                }
            }
            let g = Graph::from_edge_list(k, &edges).expect("in range");
            let key = canonical_form_with_limit(&g, CONNECTED_LIMIT).expect("within limit");
            if seen.insert(key.clone()) {
                out.push(key.to_graph());
            }
        }
        out
    })
}

/// Connected graphs on `n` vertices with cyclomatic number exactly `nu`.
pub fn connected_graphs_with_nu(n: usize, nu: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(connected_graphs(n)?.filter(move |g| g.edge_count() + 1 == g.n() + nu))
}
