use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{join_letters, parse_letters, Permutation};
use crate::{Error, Result};

/// A word over the positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::Parse(format!("{letters:?}")));
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w̄`, the word read backwards.
    pub fn mirror(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_letters(&self.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        Word::new(letters.into_iter().map(|x| x as u32).collect())
    }
}

impl TryFrom<String> for Word {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

/// Standardization of any sequence: equal letters are numbered from left
/// to right, so inversions are preserved exactly.
pub fn standardize<T: Ord>(letters: &[T]) -> Permutation {
    let mut idx: Vec<usize> = (0..letters.len()).collect();
    idx.sort_by(|&a, &b| letters[a].cmp(&letters[b]).then(a.cmp(&b)));
    let mut out = vec![0u8; letters.len()];
    for (rank, k) in idx.into_iter().enumerate() {
        out[k] = (rank + 1) as u8;
    }
    Permutation::from_vec_unchecked(out)
}

/// `Std(w)`.
pub fn std(w: &Word) -> Result<Permutation> {
    if w.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(standardize(w.letters()))
}

/// `rstd(w)`: equal letters are numbered from right to left.
pub fn rstd(w: &Word) -> Result<Permutation> {
    Ok(std(&w.mirror())?.mirror())
}

/// Letter counts of `1, 2, …` up to the largest letter.
pub fn evaluation(w: &Word) -> Vec<usize> {
    let max = w.letters().iter().copied().max().unwrap_or(0) as usize;
    let mut out = vec![0; max];
    for &x in w.letters() {
        out[x as usize - 1] += 1;
    }
    out
}

/// `u•v`: `u` followed by `v` with every letter increased by `|u|`.
pub fn shifted_concat(u: &Word, v: &Word) -> Word {
    let k = u.len() as u32;
    Word(u.0.iter().copied().chain(v.0.iter().map(|&x| x + k)).collect())
}

/// A word over the color set `{1..r}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ColorWord(Vec<u8>);

impl ColorWord {
    pub fn new(colors: Vec<u8>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::Parse(format!("color 0 in {colors:?}")));
        }
        Ok(ColorWord(colors))
    }

    /// The constant word `i^n`.
    pub fn constant(color: u8, n: usize) -> Self {
        ColorWord(vec![color; n])
    }

    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `c_i` for `1 ≤ i ≤ n`.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    pub fn max_color(&self) -> u8 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Counts of each color `1..=r`.
    pub fn evaluation(&self, r: usize) -> Vec<usize> {
        let mut out = vec![0; r];
        for &x in &self.0 {
            out[x as usize - 1] += 1;
        }
        out
    }

    pub fn mirror(&self) -> ColorWord {
        ColorWord(self.0.iter().rev().copied().collect())
    }

    /// `c·s_i`: exchange the entries in positions `i` and `i+1`.
    pub fn swap(&self, i: usize) -> ColorWord {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        ColorWord(v)
    }

    /// `c·π = c∘π`, i.e. `(c·π)_i = c_{π(i)}`.
    pub fn act(&self, p: &Permutation) -> ColorWord {
        ColorWord(p.as_slice().iter().map(|&v| self.0[v as usize - 1]).collect())
    }

    pub fn concat(&self, other: &ColorWord) -> ColorWord {
        ColorWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn slice(&self, from: usize, to: usize) -> ColorWord {
        ColorWord(self.0[from..to].to_vec())
    }

    pub fn standardized(&self) -> Permutation {
        standardize(&self.0)
    }

    /// All words of length `n` over `{1..r}` in lexicographic order.
    pub fn all(n: usize, r: usize) -> Vec<ColorWord> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w: Vec<u8>| {
                    (1..=r as u8).map(move |c| {
                        let mut w = w.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(ColorWord).collect()
    }

    /// All words with evaluation `e` (color `i` used `e[i-1]` times), in
    /// lexicographic order.
    pub fn with_evaluation(e: &[usize]) -> Vec<ColorWord> {
        let mut sorted: Vec<u8> = Vec::new();
        for (i, &k) in e.iter().enumerate() {
            sorted.extend(std::iter::repeat_n((i + 1) as u8, k));
        }
        let mut out = Vec::new();
        let mut cur = sorted;
        loop {
            out.push(ColorWord(cur.clone()));
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_letters(&self.0))
    }
}

impl fmt::Debug for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ColorWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        if letters.iter().any(|&x| x > 255) {
            return Err(Error::Parse(s.to_string()));
        }
        ColorWord::new(letters.into_iter().map(|x| x as u8).collect())
    }
}

impl TryFrom<String> for ColorWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ColorWord> for String {
    fn from(c: ColorWord) -> String {
        c.to_string()
    }
}

/// A pair `(σ, c)` of a permutation and a color word of the same length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct ColoredPermutation {
    pub perm: Permutation,
    pub colors: ColorWord,
}

impl ColoredPermutation {
    pub fn new(perm: Permutation, colors: ColorWord) -> Result<Self> {
        if perm.n() != colors.len() {
            return Err(Error::SizeMismatch(perm.n(), colors.len()));
        }
        Ok(ColoredPermutation { perm, colors })
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    /// `(σ, c)⁻¹ = (σ⁻¹, c∘σ⁻¹)`.
    pub fn inverse(&self) -> ColoredPermutation {
        let inv = self.perm.inverse();
        let colors = self.colors.act(&inv);
        ColoredPermutation { perm: inv, colors }
    }

    /// Whether `i` is an anti-descent: `c_i < c_{i+1}`, or `c_i = c_{i+1}`
    /// and `σ_i < σ_{i+1}`.
    pub fn is_anti_descent(&self, i: usize) -> bool {
        let (a, b) = (self.colors.at(i), self.colors.at(i + 1));
        a < b || (a == b && self.perm.at(i) < self.perm.at(i + 1))
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.perm, self.colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn standardization_examples() {
        assert_eq!(std(&w("412461415")).unwrap().to_string(), "514692738");
        assert_eq!(rstd(&w("412461415")).unwrap().to_string(), "734692518");
        assert_eq!(std(&w("123")).unwrap().to_string(), "123");
        assert_eq!(std(&Word::empty()), Err(Error::EmptyInput));
    }

    #[test]
    fn evaluation_and_shift() {
        assert_eq!(evaluation(&w("15423341511457")), vec![4, 1, 2, 3, 3, 0, 1]);
        assert_eq!(evaluation(&Word::empty()), Vec::<usize>::new());
        assert_eq!(shifted_concat(&w("1431"), &w("232")), w("1431676"));
    }

    #[test]
    fn colored_inverse_of_identity() {
        let cp = ColoredPermutation::new("12".parse().unwrap(), "21".parse().unwrap()).unwrap();
        assert_eq!(cp.inverse(), cp);
    }

    #[test]
    fn words_with_evaluation() {
        let ws = ColorWord::with_evaluation(&[2, 1, 1]);
        assert_eq!(ws.len(), 12);
        assert_eq!(ws[0].to_string(), "1123");
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }
}
