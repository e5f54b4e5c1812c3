use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{join_letters, parse_letters, Composition};
use crate::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(oneline: Vec<u8>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(join_letters(&oneline)));
            }
            seen[v] = true;
        }
        Ok(Permutation(oneline))
    }

    pub(crate) fn from_vec_unchecked(oneline: Vec<u8>) -> Self {
        Permutation(oneline)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// The longest permutation `ω_n = n…21`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n as u8).rev().collect())
    }

    /// All permutations of size `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation(cur.clone()));
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

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    /// `(self∘other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v as usize - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    /// Number of inversions `ℓ(σ)`.
    pub fn length(&self) -> usize {
        let s = &self.0;
        (0..s.len()).map(|i| (i + 1..s.len()).filter(|&j| s[i] > s[j]).count()).sum()
    }

    /// `σ̄ = σ∘ω_n`, the mirror image of the one-line word.
    pub fn mirror(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// `σ^# = ω_n∘σ`.
    pub fn sharp(&self) -> Permutation {
        let n = self.n() as u8;
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    /// `s_i∘σ`: exchange the values `i` and `i+1`.
    pub fn s_left(&self, i: usize) -> Permutation {
        let (a, b) = (i as u8, i as u8 + 1);
        Permutation(
            self.0
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// `σ∘s_i`: exchange the positions `i` and `i+1`.
    pub fn s_right(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// Whether `ℓ(s_i∘σ) > ℓ(σ)`, i.e. the value `i` occurs before `i+1`.
    pub fn left_ascent(&self, i: usize) -> bool {
        let pi = self.0.iter().position(|&v| v as usize == i).unwrap();
        let pj = self.0.iter().position(|&v| v as usize == i + 1).unwrap();
        pi < pj
    }

    /// Descent set `{i | σ(i) > σ(i+1)}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        (1..self.n()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn descent_composition(&self) -> Composition {
        Composition::from_descents(self.n(), &self.descents())
    }

    /// Lexicographically first reduced word `[j_1, …, j_k]` with
    /// `σ = s_{j_1}∘…∘s_{j_k}`, peeling the smallest left descent first.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut word = Vec::new();
        while let Some(j) = (1..cur.n()).find(|&j| !cur.left_ascent(j)) {
            word.push(j);
            cur = cur.s_left(j);
        }
        word
    }

    /// Inversions as pairs of positions `(i, j)`, `i < j`, with `σ(i) > σ(j)`.
    pub fn position_inversions(&self) -> BTreeSet<(u8, u8)> {
        let s = &self.0;
        let mut out = BTreeSet::new();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] > s[j] {
                    out.insert((i as u8 + 1, j as u8 + 1));
                }
            }
        }
        out
    }

    /// `self ≤ other` in the left weak order (`other = u∘self` with
    /// lengths adding up).
    pub fn left_weak_leq(&self, other: &Permutation) -> bool {
        self.n() == other.n() && self.position_inversions().is_subset(&other.position_inversions())
    }

    /// `self ≤ other` in the Bruhat order (tableau criterion).
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        let n = self.n();
        if n != other.n() {
            return false;
        }
        for k in 1..n {
            let mut a: Vec<u8> = self.0[..k].to_vec();
            let mut b: Vec<u8> = other.0[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    /// Shift every value by `k`.
    pub fn shifted(&self, k: usize) -> Vec<u8> {
        self.0.iter().map(|&v| v + k as u8).collect()
    }

    /// `σ•τ`: `σ` followed by `τ` shifted by `|σ|`.
    pub fn shifted_concat(&self, other: &Permutation) -> Permutation {
        let mut v = self.0.clone();
        v.extend(other.shifted(self.n()));
        Permutation(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_letters(&self.0))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        if letters.iter().any(|&x| x > 255) {
            return Err(Error::Parse(s.to_string()));
        }
        Permutation::new(letters.into_iter().map(|x| x as u8).collect())
    }
}

impl TryFrom<String> for Permutation {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Permutation> for String {
    fn from(p: Permutation) -> String {
        p.to_string()
    }
}

/// Precomputed data on `𝔖_n` indexed by lexicographic rank: left
/// multiplication by simple transpositions, lengths and reduced words.
#[derive(Clone, Debug)]
pub struct PermTable {
    pub n: usize,
    pub perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    /// `s_left[i-1][p]` = index of `s_i∘perms[p]`.
    pub s_left: Vec<Vec<usize>>,
    /// `ascent[i-1][p]` = whether `ℓ(s_i∘perms[p]) > ℓ(perms[p])`.
    pub ascent: Vec<Vec<bool>>,
    pub lengths: Vec<usize>,
    pub reduced_words: Vec<Vec<usize>>,
}

impl PermTable {
    pub fn new(n: usize) -> Self {
        let perms = Permutation::all(n);
        let index: HashMap<_, _> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let s_left = (1..n).map(|i| perms.iter().map(|p| index[&p.s_left(i)]).collect()).collect();
        let ascent = (1..n).map(|i| perms.iter().map(|p| p.left_ascent(i)).collect()).collect();
        let lengths = perms.iter().map(Permutation::length).collect();
        let reduced_words = perms.iter().map(Permutation::reduced_word).collect();
        PermTable { n, perms, index, s_left, ascent, lengths, reduced_words }
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn index_of(&self, p: &Permutation) -> usize {
        self.index[p]
    }
}
