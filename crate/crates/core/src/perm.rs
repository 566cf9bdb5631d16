//! Permutations of {1..n} in one-line notation, with the staircase normal
//! form for reduced words and the coset decomposition S_{m+1} = S_m * C.
//!
//! Products compose right to left: (uv)(j) = u(v(j)). Right multiplication
//! by s_i swaps the entries in positions i and i+1.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported rank.
pub const MAX_RANK: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    images: [u8; MAX_RANK],
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds {MAX_RANK}");
        let mut images = [0u8; MAX_RANK];
        for (j, slot) in images.iter_mut().enumerate().take(n) {
            *slot = (j + 1) as u8;
        }
        Self { n: n as u8, images }
    }

    /// From one-line notation (1-based images).
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_RANK {
            return Err(Error::RankUnsupported(n));
        }
        let mut seen = [false; MAX_RANK];
        let mut arr = [0u8; MAX_RANK];
        for (j, &x) in images.iter().enumerate() {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x - 1] = true;
            arr[j] = x as u8;
        }
        Ok(Self { n: n as u8, images: arr })
    }

    /// Product s_{w_1} s_{w_2} ... of adjacent transpositions.
    pub fn from_word(word: &[usize], n: usize) -> Result<Self> {
        if n > MAX_RANK {
            return Err(Error::RankUnsupported(n));
        }
        let mut p = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, rank: n });
            }
            p = p.mul_generator(i);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images[..self.rank()].iter().map(|&x| x as usize).collect()
    }

    /// w(j) for 1-based j.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        (0..self.rank()).all(|j| self.images[j] as usize == j + 1)
    }

    /// w * s_i.
    pub fn mul_generator(&self, i: usize) -> Self {
        let mut r = *self;
        r.images.swap(i - 1, i);
        r
    }

    /// Swaps the entries at positions a and b (1-based).
    pub fn swap_positions(&self, a: usize, b: usize) -> Self {
        let mut r = *self;
        r.images.swap(a - 1, b - 1);
        r
    }

    /// Whether length(w * s_i) > length(w).
    pub fn ascends_at(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut r = *self;
        for j in 0..self.rank() {
            r.images[j] = self.images[other.images[j] as usize - 1];
        }
        r
    }

    pub fn inverse(&self) -> Self {
        let mut r = *self;
        for j in 0..self.rank() {
            r.images[self.images[j] as usize - 1] = (j + 1) as u8;
        }
        r
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images[..self.rank()];
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Extends by fixed points to rank `n`.
    pub fn promote(&self, n: usize) -> Self {
        assert!(n >= self.rank() && n <= MAX_RANK);
        let mut r = *self;
        for j in self.rank()..n {
            r.images[j] = (j + 1) as u8;
        }
        r.n = n as u8;
        r
    }

    /// Restriction to {1..m}; requires w to fix m+1..n.
    pub fn restrict(&self, m: usize) -> Option<Self> {
        if (m..self.rank()).any(|j| self.images[j] as usize != j + 1) {
            return None;
        }
        let mut r = *self;
        for j in m..self.rank() {
            r.images[j] = 0;
        }
        r.n = m as u8;
        Some(r)
    }

    /// Writes w in S_{m+1} as u * s_m s_{m-1} ... s_k with u in S_m. Returns
    /// `(u, None)` when w fixes m+1.
    pub fn coset_decompose(&self, m: usize) -> (Self, Option<usize>) {
        assert_eq!(self.rank(), m + 1, "coset_decompose expects a permutation of S_(m+1)");
        let top = (m + 1) as u8;
        let k = self.images[..=m].iter().position(|&x| x == top).unwrap() + 1;
        let mut u = Self { n: m as u8, images: [0u8; MAX_RANK] };
        let mut dst = 0;
        for j in 0..=m {
            if j + 1 != k {
                u.images[dst] = self.images[j];
                dst += 1;
            }
        }
        if k == m + 1 {
            (u, None)
        } else {
            (u, Some(k))
        }
    }

    /// Staircase normal form: (s_{m_1} ... s_{k_1}) (s_{m_2} ... s_{k_2}) ...
    /// with m_1 < m_2 < ..., obtained by iterated coset decomposition.
    pub fn canonical_word(&self) -> Vec<usize> {
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut w = *self;
        for m in (1..self.rank()).rev() {
            let (u, k) = w.coset_decompose(m);
            if let Some(k) = k {
                blocks.push((m, k));
            }
            w = u;
        }
        let mut word = Vec::new();
        for &(m, k) in blocks.iter().rev() {
            word.extend((k..=m).rev());
        }
        word
    }

    /// Word form, e.g. `s2 s1`; the identity renders as the empty string.
    pub fn word_string(&self) -> String {
        self.canonical_word().iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
    }

    /// All permutations of S_n in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Self::from_images(&cur).unwrap());
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// The transposition (a b).
    pub fn transposition(a: usize, b: usize, n: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashSet, VecDeque};

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    /// Shortest words by breadth-first search over the Cayley graph.
    fn shortest_words(n: usize) -> Vec<(Permutation, Vec<usize>)> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([(Permutation::identity(n), Vec::new())]);
        seen.insert(Permutation::identity(n));
        while let Some((p, w)) = queue.pop_front() {
            out.push((p, w.clone()));
            for i in 1..n {
                let next = p.mul_generator(i);
                if seen.insert(next) {
                    let mut w2 = w.clone();
                    w2.push(i);
                    queue.push_back((next, w2));
                }
            }
        }
        out
    }

    #[test]
    fn from_word_examples() {
        assert_eq!(Permutation::from_word(&[1, 2, 1], 3).unwrap(), perm(&[3, 2, 1]));
        assert_eq!(Permutation::from_word(&[], 3).unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::from_word(&[1, 2, 1], 3).unwrap(), Permutation::from_word(&[2, 1, 2], 3).unwrap());
        assert_eq!(Permutation::from_word(&[2, 1], 3).unwrap(), perm(&[3, 1, 2]));
    }

    #[test]
    fn from_word_rejects_bad_index() {
        assert_eq!(Permutation::from_word(&[3], 3), Err(Error::IndexOutOfRange { index: 3, rank: 3 }));
        assert!(Permutation::from_word(&[0], 3).is_err());
    }

    #[test]
    fn canonical_words() {
        assert!(Permutation::identity(3).canonical_word().is_empty());
        assert_eq!(perm(&[2, 1, 3]).canonical_word(), vec![1]);
        assert_eq!(perm(&[3, 2, 1]).canonical_word(), vec![1, 2, 1]);
        assert_eq!(perm(&[3, 1, 2]).word_string(), "s2 s1");
    }

    #[test]
    fn canonical_word_is_shortest() {
        for n in 1..=5 {
            for (p, w) in shortest_words(n) {
                let c = p.canonical_word();
                assert_eq!(c.len(), w.len(), "{p}");
                assert_eq!(c.len(), p.length());
                assert_eq!(Permutation::from_word(&c, n).unwrap(), p);
            }
        }
    }

    #[test]
    fn round_trip_through_words() {
        for n in 0..=6 {
            for p in Permutation::all(n) {
                let w = p.canonical_word();
                assert_eq!(Permutation::from_word(&w, n).unwrap(), p);
                assert_eq!(w.len(), p.length());
            }
        }
    }

    #[test]
    fn coset_examples() {
        let (u, k) = Permutation::identity(3).coset_decompose(2);
        assert_eq!((u, k), (Permutation::identity(2), None));
        let (u, k) = perm(&[1, 3, 2]).coset_decompose(2);
        assert_eq!((u, k), (Permutation::identity(2), Some(2)));
        let (u, k) = perm(&[3, 1, 2]).coset_decompose(2);
        assert_eq!((u, k), (Permutation::identity(2), Some(1)));
    }

    #[test]
    fn coset_decomposition_is_a_bijection() {
        for m in 0..=5 {
            let mut seen = HashSet::new();
            for w in Permutation::all(m + 1) {
                let (u, k) = w.coset_decompose(m);
                assert!(seen.insert((u, k)));
                let rebuilt = match k {
                    None => u.promote(m + 1),
                    Some(k) => {
                        let stair: Vec<usize> = (k..=m).rev().collect();
                        let c = Permutation::from_word(&stair, m + 1).unwrap();
                        assert_eq!(w.length(), u.length() + (m + 1 - k));
                        u.promote(m + 1).compose(&c)
                    }
                };
                assert_eq!(rebuilt, w);
            }
            let expected: usize = (1..=m + 1).product();
            assert_eq!(seen.len(), expected);
        }
    }

    #[test]
    fn compose_and_inverse() {
        let p = perm(&[2, 3, 1, 4]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.promote(5).restrict(4), Some(p));
        assert_eq!(perm(&[2, 1, 3]).restrict(2), Some(perm(&[2, 1])));
        assert_eq!(perm(&[3, 1, 2]).restrict(2), None);
    }

    #[test]
    fn display() {
        assert_eq!(perm(&[3, 1, 2]).to_string(), "[3,1,2]");
        assert_eq!(Permutation::all(3).len(), 6);
    }
}
