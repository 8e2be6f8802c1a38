use std::fmt;

const WORD: usize = 64;

/// Membership over `0..n`, stored as a packed bit vector.
///
/// This is the incidence vector of a vertex subset. Set operations require
/// both operands to share the same universe size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet { n, words: vec![0; n.div_ceil(WORD)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = VertexSet { n, words: vec![!0; n.div_ceil(WORD)] };
        s.trim();
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = VertexSet::new(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.n % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Returns `true` if `v` was not already present.
    ///
    /// Panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} outside universe of size {}", self.n);
        let (w, b) = (v / WORD, 1u64 << (v % WORD));
        let fresh = self.words[w] & b == 0;
        self.words[w] |= b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let (w, b) = (v / WORD, 1u64 << (v % WORD));
        let present = self.words[w] & b != 0;
        self.words[w] &= !b;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// Largest member, if any.
    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, idx: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// Complement relative to the universe.
    pub fn complement(&self) -> VertexSet {
        let mut c = VertexSet { n: self.n, words: self.words.iter().map(|w| !w).collect() };
        c.trim();
        c
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_is_trimmed() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert_eq!(s.max(), Some(69));
        assert!(s.complement().is_empty());
    }

    #[test]
    fn insert_remove_iter() {
        let mut s = VertexSet::new(130);
        for v in [0, 63, 64, 129] {
            assert!(s.insert(v));
        }
        assert!(!s.insert(64));
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        assert!(s.remove(63));
        assert!(!s.remove(63));
        assert_eq!(s.max(), Some(129));
        assert_eq!(s.min(), Some(0));
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(10, [1, 2, 3]);
        let b = VertexSet::from_vertices(10, [2, 3, 4]);
        let mut i = a.clone();
        i.intersect_with(&b);
        assert_eq!(i.to_vec(), vec![2, 3]);
        let mut d = a.clone();
        d.difference_with(&b);
        assert_eq!(d.to_vec(), vec![1]);
        assert!(i.is_subset(&a) && i.is_subset(&b));
        assert_eq!(a.intersection_len(&b), 2);
        assert!(d.is_disjoint(&b));
    }

    #[test]
    fn empty_universe() {
        let s = VertexSet::full(0);
        assert!(s.is_empty());
        assert_eq!(s.max(), None);
        assert_eq!(s.iter().count(), 0);
    }
}
