use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

const WORD: usize = 64;

/// A finite subset of a ground set `{0, …, size-1}`.
///
/// Members are stored as a bit vector with trailing zero words trimmed, so
/// equality and hashing are structural. Sets whose members are all below 64
/// live in a single inline word and never touch the heap.
///
/// Faces order lexicographically by their sorted member lists.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Face {
    words: SmallVec<[u64; 1]>,
}

impl Face {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut face = Self::default();
        if mask != 0 {
            face.words.push(mask);
        }
        face
    }

    /// `{start, …, start+len-1}`.
    pub fn range(start: usize, len: usize) -> Self {
        (start..start + len).collect()
    }

    /// The single-word representation, if every member is below 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| w & (1u64 << (i % WORD)) != 0)
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / WORD;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / WORD) {
            *w &= !(1u64 << (i % WORD));
        }
        self.trim();
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Members<'_> {
        Members {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn max_element(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - last.leading_zeros() as usize))
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        self.words.len() <= other.words.len()
            && self
                .words
                .iter()
                .zip(other.words.iter())
                .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &Face) -> Face {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(short.words.iter()) {
            *w |= s;
        }
        Face { words }
    }

    pub fn intersection(&self, other: &Face) -> Face {
        let mut words: SmallVec<[u64; 1]> = self
            .words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| a & b)
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        Face { words }
    }

    /// `{0, …, ground-1} \ self`.
    pub fn complement(&self, ground: usize) -> Face {
        let n_words = ground.div_ceil(WORD);
        let mut words: SmallVec<[u64; 1]> = SmallVec::with_capacity(n_words);
        for w in 0..n_words {
            let full = if (w + 1) * WORD <= ground {
                u64::MAX
            } else {
                (1u64 << (ground - w * WORD)) - 1
            };
            words.push(full & !self.words.get(w).copied().unwrap_or(0));
        }
        let mut face = Face { words };
        face.trim();
        face
    }

    /// Every member moved up by `offset`.
    pub fn shifted(&self, offset: usize) -> Face {
        if offset == 0 {
            return self.clone();
        }
        self.iter().map(|i| i + offset).collect()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for Face {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut face = Face::default();
        for i in iter {
            face.insert(i);
        }
        face
    }
}

impl<const N: usize> From<[usize; N]> for Face {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        Ok(members.into_iter().collect())
    }
}

/// Iterator over the members of a [`Face`].
pub struct Members<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// Subsets of `face` with exactly `size` members, in lexicographic order.
pub fn subsets_of_size(face: &Face, size: usize) -> Vec<Face> {
    let members: Vec<usize> = face.iter().collect();
    let mut out = Vec::new();
    if size > members.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        out.push(idx.iter().map(|&i| members[i]).collect());
        let mut pos = size;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < members.len() - size + pos {
                break;
            }
        }
        idx[pos] += 1;
        for j in pos + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
