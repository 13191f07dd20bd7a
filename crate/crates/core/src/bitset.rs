//! Small fixed-width bit set used for vertex sets and adjacency rows.

use std::fmt;

/// Number of 64-bit words backing a [`VertexSet`].
const WORDS: usize = 3;

/// Hard upper bound on the number of vertices a graph may have.
///
/// Single-word sets cover all desk-scale graphs, but a few of the
/// constructed families (long triangle chains) legitimately exceed 64
/// vertices, so rows carry three words.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertices drawn from `0..MAX_VERTICES`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    /// The empty set.
    #[inline]
    pub const fn empty() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, ..., n-1}`.
    #[inline]
    pub fn all_below(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        let mut words = [0u64; WORDS];
        let mut left = n;
        for w in words.iter_mut() {
            if left >= 64 {
                *w = u64::MAX;
                left -= 64;
            } else {
                *w = (1u64 << left) - 1;
                break;
            }
        }
        VertexSet { words }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        let mut s = Self::empty();
        s.insert(v);
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words) {
            *w |= o;
        }
        VertexSet { words }
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words) {
            *w &= o;
        }
        VertexSet { words }
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut words = self.words;
        for (w, o) in words.iter_mut().zip(other.words) {
            *w &= !o;
        }
        VertexSet { words }
    }

    #[inline]
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Iterates over set bits in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    /// Raw words, low word first.
    #[inline]
    pub fn words(&self) -> [u64; WORDS] {
        self.words
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
