//! Canonical forms for small graphs: the lexicographically minimal
//! upper-triangle adjacency bit string over all degree-sorted relabelings.
//!
//! Adequate for the sizes the memo table and the built-in generators use;
//! a full refinement canonizer is deliberately out of scope.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default size guard for [`canonical_form`]. Beyond this the permutation
/// search outweighs any reuse it enables.
pub const CANON_LIMIT: usize = 10;

/// Isomorphism-invariant key: byte 0 is `n`, followed by the canonically
/// relabeled upper-triangle adjacency bits in the order
/// `(0,1), (0,2), (1,2), (0,3), ...`, packed 8 per byte, MSB first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn n(&self) -> usize {
        self.bytes[0] as usize
    }

    /// Rebuilds the canonically labeled graph from the key.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        let mut idx = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = self.bytes[1 + idx / 8];
                if byte >> (7 - idx % 8) & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::from_edge_list(n, &edges).expect("canonical key encodes a valid graph")
    }
}

/// Canonical form with the default size guard.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_with_limit(g, CANON_LIMIT)
}

/// Canonical form, failing when `g.n() > limit`.
pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<CanonicalForm> {
    let n = g.n();
    if n > limit || n > 255 {
        return Err(Error::TooLargeForEnumeration { n, limit });
    }
    if n == 0 {
        return Ok(CanonicalForm { bytes: vec![0] });
    }

    // Positions take vertices in ascending-degree order; within a degree
    // class every arrangement is explored, pruned by prefix comparison
    // against the best column string found so far.
    let mut sorted_deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    sorted_deg.sort_unstable();

    let mut search = Search {
        g,
        sorted_deg: &sorted_deg,
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        cols: Vec::with_capacity(n - 1),
        best: None,
    };
    search.descend(true);
    let best = search.best.expect("at least one labeling exists");
    Ok(pack(n, &best))
}

struct Search<'a> {
    g: &'a Graph,
    sorted_deg: &'a [usize],
    perm: Vec<usize>,
    used: Vec<bool>,
    cols: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    /// `tied` means the column prefix so far equals the best known prefix;
    /// only then may a larger column prune the branch. Leaves settle by a
    /// full lexicographic comparison.
    fn descend(&mut self, tied: bool) {
        let pos = self.perm.len();
        let n = self.g.n();
        if pos == n {
            if self.best.as_ref().is_none_or(|best| self.cols < *best) {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        let want = self.sorted_deg[pos];
        for u in 0..n {
            if self.used[u] || self.g.degree(u) != want {
                continue;
            }
            let mut col = 0u64;
            for (i, &p) in self.perm.iter().enumerate() {
                if self.g.has_edge(u, p) {
                    col |= 1u64 << (pos - 1 - i);
                }
            }
            let child_tied = match &self.best {
                Some(best) if pos > 0 && tied => match col.cmp(&best[pos - 1]) {
                    std::cmp::Ordering::Greater => continue,
                    std::cmp::Ordering::Equal => true,
                    std::cmp::Ordering::Less => false,
                },
                Some(_) => tied && pos == 0,
                None => false,
            };
            self.used[u] = true;
            self.perm.push(u);
            if pos > 0 {
                self.cols.push(col);
            }
            self.descend(child_tied);
            if pos > 0 {
                self.cols.pop();
            }
            self.perm.pop();
            self.used[u] = false;
        }
    }
}

fn pack(n: usize, cols: &[u64]) -> CanonicalForm {
    let nbits = n * (n - 1) / 2;
    let mut bytes = vec![0u8; 1 + nbits.div_ceil(8)];
    bytes[0] = n as u8;
    let mut idx = 0usize;
    for (j, col) in cols.iter().enumerate() {
        let width = j + 1; // column for position j+1 has j+1 bits
        for i in 0..width {
            if col >> (width - 1 - i) & 1 == 1 {
                bytes[1 + idx / 8] |= 1 << (7 - idx % 8);
            }
            idx += 1;
        }
    }
    CanonicalForm { bytes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn permuted(g: &Graph, perm: &[usize]) -> Graph {
        let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(g.n(), &edges).unwrap()
    }

    #[test]
    fn path_reversal_and_distinction() {
        let p4 = Graph::path(4).unwrap();
        let rev = permuted(&p4, &[3, 2, 1, 0]);
        assert_eq!(canonical_form(&p4).unwrap(), canonical_form(&rev).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&c4).unwrap());
    }

    #[test]
    fn sixteen_labeled_trees_two_keys() {
        // all 4^2 labeled trees on 4 vertices collapse to exactly 2 forms
        let mut keys = std::collections::HashSet::new();
        let mut count = 0;
        for a in 0..4usize {
            for b in 0..4usize {
                // Prüfer sequence (a, b) -> labeled tree
                let g = crate::enumerate::tree_from_pruefer(&[a, b]).unwrap();
                keys.insert(canonical_form(&g).unwrap());
                count += 1;
            }
        }
        assert_eq!(count, 16);
        assert_eq!(keys.len(), 2);
    }

    #[test]
    fn invariant_under_random_permutations() {
        let mut rng = Rng::new(7);
        for _ in 0..60 {
            let n = 1 + rng.below(8);
            let g = crate::rand_graphs::random_graph(n, 50, &mut rng);
            let key = canonical_form(&g).unwrap();
            for _ in 0..20 {
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    perm.swap(i, rng.below(i + 1));
                }
                assert_eq!(canonical_form(&permuted(&g, &perm)).unwrap(), key);
            }
            // reconstruction is isomorphic: same key again
            assert_eq!(canonical_form(&key.to_graph()).unwrap(), key);
        }
    }

    #[test]
    fn over_limit_is_rejected() {
        let g = Graph::path(11).unwrap();
        assert!(canonical_form(&g).is_err());
        assert!(canonical_form_with_limit(&g, 12).is_ok());
    }
}
