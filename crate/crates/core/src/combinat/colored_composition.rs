use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ColorWord, Composition};
use crate::{Error, Result};

/// A composition with one color per part.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ColoredComposition {
    pub parts: Composition,
    pub colors: ColorWord,
}

impl ColoredComposition {
    pub fn new(parts: Composition, colors: ColorWord) -> Result<Self> {
        if parts.len() != colors.len() {
            return Err(Error::SizeMismatch(parts.len(), colors.len()));
        }
        Ok(ColoredComposition { parts, colors })
    }

    pub fn empty() -> Self {
        ColoredComposition { parts: Composition::empty(), colors: ColorWord::new(Vec::new()).unwrap() }
    }

    pub fn from_pairs(pairs: &[(usize, u8)]) -> Result<Self> {
        let (p, c): (Vec<usize>, Vec<u8>) = pairs.iter().copied().unzip();
        ColoredComposition::new(Composition::new(p)?, ColorWord::new(c)?)
    }

    pub fn pairs(&self) -> Vec<(usize, u8)> {
        self.parts.parts().iter().copied().zip(self.colors.colors().iter().copied()).collect()
    }

    pub fn size(&self) -> usize {
        self.parts.size()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total size carried by each color `1..=r`.
    pub fn color_degrees(&self, r: usize) -> Vec<usize> {
        let mut out = vec![0; r];
        for (p, c) in self.pairs() {
            out[c as usize - 1] += p;
        }
        out
    }

    pub fn concat(&self, other: &ColoredComposition) -> ColoredComposition {
        let mut pairs = self.pairs();
        pairs.extend(other.pairs());
        ColoredComposition::from_pairs(&pairs).unwrap()
    }

    /// `self` is finer than (or equal to) `other`: `other` is obtained by
    /// adding up runs of adjacent parts of equal color.
    pub fn refines(&self, other: &ColoredComposition) -> bool {
        let mine = self.pairs();
        let mut k = 0;
        for (target, color) in other.pairs() {
            let mut acc = 0;
            while acc < target {
                match mine.get(k) {
                    Some(&(p, c)) if c == color => {
                        acc += p;
                        k += 1;
                    }
                    _ => return false,
                }
            }
            if acc != target {
                return false;
            }
        }
        k == mine.len()
    }

    /// All colored compositions finer than `self` (including itself), sorted.
    pub fn finer(&self) -> Vec<ColoredComposition> {
        let mut acc: Vec<Vec<(usize, u8)>> = vec![Vec::new()];
        for (p, c) in self.pairs() {
            let pieces = Composition::all(p);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    pieces.iter().map(move |piece| {
                        let mut v = prefix.clone();
                        v.extend(piece.parts().iter().map(|&q| (q, c)));
                        v
                    })
                })
                .collect();
        }
        let mut out: Vec<_> = acc.iter().map(|v| ColoredComposition::from_pairs(v).unwrap()).collect();
        out.sort();
        out
    }

    /// All colored compositions coarser than `self` (including itself), sorted.
    pub fn coarser(&self) -> Vec<ColoredComposition> {
        let pairs = self.pairs();
        if pairs.is_empty() {
            return vec![self.clone()];
        }
        // Each boundary between equal-colored neighbours may be erased.
        let mergeable: Vec<usize> = (0..pairs.len() - 1).filter(|&i| pairs[i].1 == pairs[i + 1].1).collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << mergeable.len() {
            let mut merged: Vec<(usize, u8)> = vec![pairs[0]];
            for (i, &pair) in pairs.iter().enumerate().skip(1) {
                let erase = mergeable.iter().position(|&b| b == i - 1).is_some_and(|k| mask >> k & 1 == 1);
                if erase {
                    merged.last_mut().unwrap().0 += pair.0;
                } else {
                    merged.push(pair);
                }
            }
            out.push(ColoredComposition::from_pairs(&merged).unwrap());
        }
        out.sort();
        out
    }

    /// All colored compositions of `n` over `r` colors, sorted.
    pub fn all(n: usize, r: usize) -> Vec<ColoredComposition> {
        let mut out = Vec::new();
        for comp in Composition::all(n) {
            for colors in ColorWord::all(comp.len(), r) {
                out.push(ColoredComposition { parts: comp.clone(), colors });
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.pairs().iter().map(|(p, c)| format!("{p}:{c}")).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for ColoredComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for ColoredComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ColoredComposition::empty());
        }
        let pairs = s
            .split(',')
            .map(|t| {
                let (p, c) = t.split_once(':').ok_or_else(|| Error::Parse(s.to_string()))?;
                let p = p.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string()))?;
                let c = c.trim().parse::<u8>().map_err(|_| Error::Parse(s.to_string()))?;
                Ok((p, c))
            })
            .collect::<Result<Vec<_>>>()?;
        ColoredComposition::from_pairs(&pairs)
    }
}

impl TryFrom<String> for ColoredComposition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ColoredComposition> for String {
    fn from(c: ColoredComposition) -> String {
        c.to_string()
    }
}
