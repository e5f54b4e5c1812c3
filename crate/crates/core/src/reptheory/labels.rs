use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::aks0::BlockId;
use crate::combinat::{
    enumerate_anticycloribbons, enumerate_cycloribbons, ColorWord, ColoredComposition, ColoredRibbon, Composition,
};
use crate::{Error, Result};

/// Canonical order on ribbons: color word first, then sorted descents.
fn canonical_key(r: &ColoredRibbon) -> (ColorWord, Vec<usize>) {
    (r.colors.clone(), r.descents().into_iter().collect())
}

/// A cycloribbon `[I, c]`, labelling the simple module `S_{[I,c]}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SimpleLabel {
    ribbon: ColoredRibbon,
}

/// An anticycloribbon `[K, c]`, labelling the indecomposable projective
/// `P_{[K,c]}` whose top is `S_{φ([K,c])}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ProjectiveLabel {
    ribbon: ColoredRibbon,
}

impl SimpleLabel {
    pub fn new(ribbon: ColoredRibbon) -> Result<Self> {
        if !ribbon.is_cyclo() {
            return Err(Error::NotCycloribbon(ribbon.to_string()));
        }
        Ok(SimpleLabel { ribbon })
    }

    pub fn ribbon(&self) -> &ColoredRibbon {
        &self.ribbon
    }

    pub fn shape(&self) -> &Composition {
        &self.ribbon.shape
    }

    pub fn colors(&self) -> &ColorWord {
        &self.ribbon.colors
    }

    pub fn size(&self) -> usize {
        self.ribbon.size()
    }

    /// The projective label `φ([I,c])`; its projective has `self` on top.
    pub fn phi(&self) -> ProjectiveLabel {
        ProjectiveLabel { ribbon: self.ribbon.phi() }
    }

    /// The projective cover of this simple module.
    pub fn projective_cover(&self) -> ProjectiveLabel {
        self.phi()
    }

    /// All simple modules of `AKS(n,r)(0)` in canonical order.
    pub fn all(n: usize, r: usize) -> Vec<SimpleLabel> {
        enumerate_cycloribbons(n, r).into_iter().map(|ribbon| SimpleLabel { ribbon }).collect()
    }

    /// The simple modules of a block in canonical order.
    pub fn in_block(block: &BlockId) -> Vec<SimpleLabel> {
        let mut out: Vec<SimpleLabel> = block
            .colors()
            .into_iter()
            .flat_map(|c| {
                let n = c.len();
                let free: Vec<usize> = (1..n).filter(|&i| c.at(i) == c.at(i + 1)).collect();
                let forced: Vec<usize> = (1..n).filter(|&i| c.at(i) > c.at(i + 1)).collect();
                (0u64..1 << free.len()).map(move |mask| {
                    let mut d: std::collections::BTreeSet<usize> = forced.iter().copied().collect();
                    d.extend(free.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i));
                    SimpleLabel { ribbon: ColoredRibbon::from_descents(&d, c.clone()) }
                })
            })
            .collect();
        out.sort();
        out
    }

    /// The block containing this simple module.
    pub fn block(&self, r: usize) -> BlockId {
        BlockId { evaluation: self.colors().evaluation(r) }
    }
}

impl ProjectiveLabel {
    pub fn new(ribbon: ColoredRibbon) -> Result<Self> {
        if !ribbon.is_anticyclo() {
            return Err(Error::NotAnticycloribbon(ribbon.to_string()));
        }
        Ok(ProjectiveLabel { ribbon })
    }

    pub fn ribbon(&self) -> &ColoredRibbon {
        &self.ribbon
    }

    pub fn shape(&self) -> &Composition {
        &self.ribbon.shape
    }

    pub fn colors(&self) -> &ColorWord {
        &self.ribbon.colors
    }

    pub fn size(&self) -> usize {
        self.ribbon.size()
    }

    /// The label of the top of the projective.
    pub fn phi(&self) -> SimpleLabel {
        SimpleLabel { ribbon: self.ribbon.phi() }
    }

    pub fn top(&self) -> SimpleLabel {
        self.phi()
    }

    pub fn to_colored_composition(&self) -> ColoredComposition {
        self.ribbon.to_colored_composition().expect("anticycloribbon")
    }

    pub fn from_colored_composition(cc: &ColoredComposition) -> Self {
        ProjectiveLabel { ribbon: ColoredRibbon::from_colored_composition(cc) }
    }

    pub fn all(n: usize, r: usize) -> Vec<ProjectiveLabel> {
        enumerate_anticycloribbons(n, r).into_iter().map(|ribbon| ProjectiveLabel { ribbon }).collect()
    }
}

macro_rules! label_impls {
    ($t:ty) => {
        impl Ord for $t {
            fn cmp(&self, other: &Self) -> Ordering {
                canonical_key(&self.ribbon).cmp(&canonical_key(&other.ribbon))
            }
        }

        impl PartialOrd for $t {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.ribbon)
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.ribbon)
            }
        }

        impl FromStr for $t {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                Self::new(s.parse()?)
            }
        }

        impl TryFrom<String> for $t {
            type Error = Error;
            fn try_from(s: String) -> Result<Self> {
                s.parse()
            }
        }

        impl From<$t> for String {
            fn from(l: $t) -> String {
                l.to_string()
            }
        }
    };
}

label_impls!(SimpleLabel);
label_impls!(ProjectiveLabel);

/// The one-dimensional action on a simple module: `L_d` acts by
/// `δ_{d,c}` and `T_i` by `t_eigenvalues[i-1] ∈ {−1, 0}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SimpleAction {
    pub colors: ColorWord,
    pub t_eigenvalues: Vec<i8>,
}

impl SimpleAction {
    /// Indices where `T_i` acts by −1.
    pub fn minus_one_set(&self) -> std::collections::BTreeSet<usize> {
        (1..=self.t_eigenvalues.len()).filter(|&i| self.t_eigenvalues[i - 1] == -1).collect()
    }
}
