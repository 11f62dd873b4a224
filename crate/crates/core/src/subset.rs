//! Fixed-width bitsets over the elements of one poset.

use std::fmt;

use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

/// A set of element indices of a fixed poset.
///
/// The word count is fixed by the universe size at construction, so two
/// subsets of the same poset compare equal exactly when they hold the same
/// members.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    words: SmallVec<[u64; 2]>,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

impl Subset {
    /// The empty subset of an `n`-element universe.
    pub fn empty(n: usize) -> Self {
        Subset {
            words: smallvec![0; word_count(n)],
        }
    }

    /// Every element of an `n`-element universe.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = ((i + 1) * WORD).min(n);
            if hi > lo {
                let bits = hi - lo;
                *w = if bits == WORD { !0 } else { (1u64 << bits) - 1 };
            }
        }
        s
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(x);
        s
    }

    pub fn from_iter_in(n: usize, items: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(n);
        for x in items {
            s.insert(x);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.words[x / WORD] |= 1u64 << (x % WORD);
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.words[x / WORD] &= !(1u64 << (x % WORD));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.words
            .get(x / WORD)
            .is_some_and(|w| w & (1u64 << (x % WORD)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// The only member, if there is exactly one.
    pub fn single(&self) -> Option<usize> {
        let mut it = self.iter();
        let first = it.next()?;
        it.next().is_none().then_some(first)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Subset) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    pub fn union_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Subset) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
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

impl<'a> IntoIterator for &'a Subset {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
