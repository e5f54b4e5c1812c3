use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::{Error, Result};

/// A composition of `n`: a sequence of positive parts. The empty
/// composition (of 0) is allowed and serves as the unit of products.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|I|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The unique composition of `n` with descent set `d`.
    pub fn from_descents(n: usize, d: &BTreeSet<usize>) -> Self {
        if n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::new();
        let mut last = 0;
        for &i in d.iter().filter(|&&i| i > 0 && i < n) {
            parts.push(i - last);
            last = i;
        }
        parts.push(n - last);
        Composition(parts)
    }

    /// `D(I) = {i_1, i_1+i_2, …}`.
    pub fn descents(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// `Ī`, the parts in reverse order.
    pub fn mirror(&self) -> Self {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// `I~`, obtained by reading the columns of the ribbon from right to left.
    pub fn conjugate(&self) -> Self {
        let n = self.size();
        let d = self.descents();
        let c: BTreeSet<usize> = (1..n).filter(|i| !d.contains(i)).map(|i| n - i).collect();
        Composition::from_descents(n, &c)
    }

    /// The permutation with descent composition `I` and maximal length.
    pub fn omega(&self) -> Permutation {
        // Ascending runs receive blocks of values from the top down.
        let mut out = Vec::with_capacity(self.size());
        let mut top = self.size();
        for run in self.runs(false) {
            let lo = top - run + 1;
            out.extend((lo..=top).map(|v| v as u8));
            top = lo - 1;
        }
        Permutation::from_vec_unchecked(out)
    }

    /// The permutation with descent composition `I` and minimal length.
    pub fn alpha(&self) -> Permutation {
        // Descending runs receive blocks of values from the bottom up.
        let mut out = Vec::with_capacity(self.size());
        let mut bottom = 1;
        for run in self.runs(true) {
            let hi = bottom + run - 1;
            out.extend((bottom..=hi).rev().map(|v| v as u8));
            bottom = hi + 1;
        }
        Permutation::from_vec_unchecked(out)
    }

    /// Lengths of maximal position segments whose internal adjacent
    /// positions are all descents (`descending`) or all non-descents.
    fn runs(&self, descending: bool) -> Vec<usize> {
        let n = self.size();
        let d = self.descents();
        let mut runs = Vec::new();
        let mut len = 1;
        for i in 1..n {
            if d.contains(&i) == descending {
                len += 1;
            } else {
                runs.push(len);
                len = 1;
            }
        }
        if n > 0 {
            runs.push(len);
        }
        runs
    }

    /// All compositions of `n`, ordered by their descent sets in
    /// lexicographic order of the sorted descent list.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::empty()];
        }
        let mut out: Vec<(Vec<usize>, Composition)> = (0u64..1 << (n - 1))
            .map(|mask| {
                let d: BTreeSet<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                (d.iter().copied().collect(), Composition::from_descents(n, &d))
            })
            .collect();
        out.sort();
        out.into_iter().map(|(_, c)| c).collect()
    }

    /// Whether `self` is finer than (or equal to) `other`.
    pub fn refines(&self, other: &Composition) -> bool {
        self.size() == other.size() && other.descents().is_subset(&self.descents())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join("."))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(['.', ','])
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

impl TryFrom<String> for Composition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Composition> for String {
    fn from(c: Composition) -> String {
        c.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_and_mirror() {
        assert_eq!(c("2.3.1.2").conjugate(), c("1.3.1.2.1"));
        assert_eq!(c("2.3.1.2").mirror(), c("2.1.3.2"));
        assert_eq!(c("4").conjugate(), c("1.1.1.1"));
    }

    #[test]
    fn omega_and_alpha() {
        assert_eq!(c("2.1.3.1").omega().to_string(), "6752341");
        assert_eq!(c("2.1.3.1").alpha().to_string(), "1432576");
        assert_eq!(c("5").alpha(), Permutation::identity(5));
        assert!(c("5").descents().is_empty());
    }

    #[test]
    fn omega_alpha_are_extremal() {
        for n in 1..=5 {
            for i in Composition::all(n) {
                let class: Vec<_> = Permutation::all(n).into_iter().filter(|p| p.descent_composition() == i).collect();
                let lmax = class.iter().map(Permutation::length).max().unwrap();
                let lmin = class.iter().map(Permutation::length).min().unwrap();
                assert_eq!(i.omega().descent_composition(), i);
                assert_eq!(i.alpha().descent_composition(), i);
                assert_eq!(i.omega().length(), lmax);
                assert_eq!(i.alpha().length(), lmin);
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(Composition::all(5).len(), 16);
        assert_eq!(Composition::all(0), vec![Composition::empty()]);
    }
}
