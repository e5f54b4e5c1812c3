use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ColorWord, ColoredComposition, ColoredPermutation, Composition};
use crate::{Error, Result};

/// A ribbon of shape `I` filled with the colors `c` read row by row.
///
/// Cell `i+1` lies below cell `i` exactly when `i ∈ D(I)`; otherwise it
/// lies to its right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ColoredRibbon {
    pub shape: Composition,
    pub colors: ColorWord,
}

impl ColoredRibbon {
    pub fn new(shape: Composition, colors: ColorWord) -> Result<Self> {
        if shape.size() != colors.len() {
            return Err(Error::SizeMismatch(shape.size(), colors.len()));
        }
        Ok(ColoredRibbon { shape, colors })
    }

    pub fn from_descents(descents: &BTreeSet<usize>, colors: ColorWord) -> Self {
        ColoredRibbon { shape: Composition::from_descents(colors.len(), descents), colors }
    }

    pub fn empty() -> Self {
        ColoredRibbon { shape: Composition::empty(), colors: ColorWord::new(Vec::new()).unwrap() }
    }

    pub fn size(&self) -> usize {
        self.colors.len()
    }

    pub fn descents(&self) -> BTreeSet<usize> {
        self.shape.descents()
    }

    /// Rows weakly increase and columns weakly decrease (top to bottom).
    pub fn is_cyclo(&self) -> bool {
        let d = self.descents();
        (1..self.size()).all(|i| {
            let (a, b) = (self.colors.at(i), self.colors.at(i + 1));
            if d.contains(&i) {
                a >= b
            } else {
                a <= b
            }
        })
    }

    /// Rows weakly decrease and columns weakly increase (top to bottom).
    pub fn is_anticyclo(&self) -> bool {
        let d = self.descents();
        (1..self.size()).all(|i| {
            let (a, b) = (self.colors.at(i), self.colors.at(i + 1));
            if d.contains(&i) {
                a <= b
            } else {
                a >= b
            }
        })
    }

    /// The involution `φ`: equal neighbours keep their gluing direction,
    /// different neighbours switch it.
    pub fn phi(&self) -> ColoredRibbon {
        let d = self.descents();
        let nd: BTreeSet<usize> =
            (1..self.size()).filter(|&i| (self.colors.at(i) == self.colors.at(i + 1)) == d.contains(&i)).collect();
        ColoredRibbon::from_descents(&nd, self.colors.clone())
    }

    /// Cut after cell `k`, returning the first `k` cells and the rest.
    pub fn cut(&self, k: usize) -> (ColoredRibbon, ColoredRibbon) {
        let d = self.descents();
        let n = self.size();
        let left: BTreeSet<usize> = d.iter().copied().filter(|&i| i < k).collect();
        let right: BTreeSet<usize> = d.iter().copied().filter(|&i| i > k).map(|i| i - k).collect();
        (
            ColoredRibbon::from_descents(&left, self.colors.slice(0, k)),
            ColoredRibbon::from_descents(&right, self.colors.slice(k, n)),
        )
    }

    /// Concatenation with a prescribed gluing between the last cell of
    /// `self` and the first cell of `other`.
    pub fn glue(&self, other: &ColoredRibbon, below: bool) -> ColoredRibbon {
        let k = self.size();
        let mut d = self.descents();
        if below && k > 0 && other.size() > 0 {
            d.insert(k);
        }
        d.extend(other.descents().into_iter().map(|i| i + k));
        ColoredRibbon::from_descents(&d, self.colors.concat(&other.colors))
    }

    /// Maximal monochromatic runs, each as (sub-ribbon shape, color).
    pub fn monochromatic_runs(&self) -> Vec<(Composition, u8)> {
        let mut runs = Vec::new();
        let mut rest = self.clone();
        while rest.size() > 0 {
            let c = rest.colors.at(1);
            let k = (1..=rest.size()).take_while(|&i| rest.colors.at(i) == c).count();
            let (head, tail) = rest.cut(k);
            runs.push((head.shape, c));
            rest = tail;
        }
        runs
    }

    /// The colored composition of an anticycloribbon: cut between
    /// differently colored neighbours.
    pub fn to_colored_composition(&self) -> Result<ColoredComposition> {
        if !self.is_anticyclo() {
            return Err(Error::NotAnticycloribbon(self.to_string()));
        }
        let mut parts = Vec::new();
        let mut colors = Vec::new();
        for (shape, c) in self.monochromatic_runs() {
            for &p in shape.parts() {
                parts.push(p);
                colors.push(c);
            }
        }
        ColoredComposition::new(Composition::new(parts)?, ColorWord::new(colors)?)
    }

    /// Inverse of [`Self::to_colored_composition`]: glue the
    /// monochromatic blocks in the only way allowed for anticycloribbons.
    pub fn from_colored_composition(cc: &ColoredComposition) -> ColoredRibbon {
        let parts = cc.parts.parts();
        let cols = cc.colors.colors();
        let mut out = ColoredRibbon::empty();
        let mut i = 0;
        while i < parts.len() {
            let c = cols[i];
            let mut j = i;
            while j < parts.len() && cols[j] == c {
                j += 1;
            }
            let shape = Composition::new(parts[i..j].to_vec()).unwrap();
            let block = ColoredRibbon { colors: ColorWord::constant(c, shape.size()), shape };
            let below = out.size() > 0 && out.colors.at(out.size()) < c;
            out = out.glue(&block, below);
            i = j;
        }
        out
    }

    /// The maximal colored permutation `(ω(J), c)` of an anticycloribbon.
    pub fn max_colored_perm(&self) -> Result<ColoredPermutation> {
        if !self.is_anticyclo() {
            return Err(Error::NotAnticycloribbon(self.to_string()));
        }
        let d = self.descents();
        let dj: BTreeSet<usize> =
            (1..self.size()).filter(|&i| self.colors.at(i) != self.colors.at(i + 1) || !d.contains(&i)).collect();
        let omega = Composition::from_descents(self.size(), &dj).omega();
        ColoredPermutation::new(omega, self.colors.clone())
    }

    /// The anticycloribbon whose descents are the anti-descents of `(σ, c)`.
    pub fn anticycloribbon_of(cp: &ColoredPermutation) -> ColoredRibbon {
        let d: BTreeSet<usize> = (1..cp.n()).filter(|&i| cp.is_anti_descent(i)).collect();
        ColoredRibbon::from_descents(&d, cp.colors.clone())
    }

    /// Color words covered by `c` in the order `≤_I`: sort two adjacent
    /// row entries increasingly or two adjacent column entries decreasingly.
    pub fn le_i_cover_moves(shape: &Composition, c: &ColorWord) -> Vec<ColorWord> {
        let d = shape.descents();
        let mut out: Vec<ColorWord> = (1..c.len())
            .filter(|&i| {
                let (a, b) = (c.at(i), c.at(i + 1));
                if d.contains(&i) {
                    a < b
                } else {
                    a > b
                }
            })
            .map(|i| c.swap(i))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// All color words `≤_I c` (including `c`), sorted.
    pub fn le_i_down_set(shape: &Composition, c: &ColorWord) -> Vec<ColorWord> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([c.clone()]);
        while let Some(w) = queue.pop_front() {
            if seen.insert(w.clone()) {
                queue.extend(Self::le_i_cover_moves(shape, &w));
            }
        }
        seen.into_iter().collect()
    }

    fn sort_key(&self) -> (ColorWord, Vec<usize>) {
        (self.colors.clone(), self.descents().into_iter().collect())
    }
}

/// Enumerate all ribbons of size `n` over `r` colors satisfying the
/// cyclo (or anticyclo) condition, in the canonical order: colors first,
/// then the sorted descent list.
fn enumerate(n: usize, r: usize, anti: bool) -> Vec<ColoredRibbon> {
    let mut out = Vec::new();
    for c in ColorWord::all(n, r) {
        // Positions with a free gluing direction.
        let free: Vec<usize> = (1..n).filter(|&i| c.at(i) == c.at(i + 1)).collect();
        let forced: BTreeSet<usize> =
            (1..n).filter(|&i| if anti { c.at(i) < c.at(i + 1) } else { c.at(i) > c.at(i + 1) }).collect();
        let mut group: Vec<ColoredRibbon> = (0u64..1 << free.len())
            .map(|mask| {
                let mut d = forced.clone();
                d.extend(free.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i));
                ColoredRibbon::from_descents(&d, c.clone())
            })
            .collect();
        group.sort_by_key(ColoredRibbon::sort_key);
        out.extend(group);
    }
    out
}

pub fn enumerate_cycloribbons(n: usize, r: usize) -> Vec<ColoredRibbon> {
    enumerate(n, r, false)
}

pub fn enumerate_anticycloribbons(n: usize, r: usize) -> Vec<ColoredRibbon> {
    enumerate(n, r, true)
}

/// Number of cycloribbons of size `n` over `r` colors, counted color word
/// by color word without materializing the ribbons.
pub fn count_cycloribbons(n: usize, r: usize) -> u64 {
    ColorWord::all(n, r).iter().map(|c| 1u64 << (1..n).filter(|&i| c.at(i) == c.at(i + 1)).count()).sum()
}

impl fmt::Display for ColoredRibbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.shape, self.colors)
    }
}

impl fmt::Debug for ColoredRibbon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?},{}]", self.shape, self.colors)
    }
}

impl FromStr for ColoredRibbon {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (shape, colors) = s.split_once('|').ok_or_else(|| Error::Parse(s.to_string()))?;
        ColoredRibbon::new(shape.parse()?, colors.parse()?)
    }
}

impl TryFrom<String> for ColoredRibbon {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<ColoredRibbon> for String {
    fn from(r: ColoredRibbon) -> String {
        r.to_string()
    }
}
