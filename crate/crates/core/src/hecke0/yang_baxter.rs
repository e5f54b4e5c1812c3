use std::fmt;

use serde::{Deserialize, Serialize};

use super::HeckeElement;
use crate::combinat::{ColorWord, Composition, Permutation};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum YBKind {
    T,
    OnePlusT,
    MinusT,
}

/// One of `T_i`, `1+T_i`, `−T_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct YBLabel {
    pub kind: YBKind,
    pub index: usize,
}

impl YBLabel {
    pub fn new(kind: YBKind, index: usize) -> Self {
        YBLabel { kind, index }
    }

    /// `Y_j(t, u)`: `T_j` if `t > u`, else `1 + T_j`.
    pub fn spectral(j: usize, t: u8, u: u8) -> Self {
        YBLabel::new(if t > u { YBKind::T } else { YBKind::OnePlusT }, j)
    }

    pub fn element(&self, n: usize) -> HeckeElement {
        let t = HeckeElement::generator(n, self.index);
        match self.kind {
            YBKind::T => t,
            YBKind::OnePlusT => HeckeElement::one(n).add(&t),
            YBKind::MinusT => t.scale(&crate::linalg::rat(-1)),
        }
    }
}

impl fmt::Display for YBLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            YBKind::T => "",
            YBKind::OnePlusT => "1+",
            YBKind::MinusT => "-",
        };
        write!(f, "{prefix}T{}", self.index)
    }
}

impl fmt::Debug for YBLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for YBLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = if let Some(r) = s.strip_prefix("1+T") {
            (YBKind::OnePlusT, r)
        } else if let Some(r) = s.strip_prefix("-T") {
            (YBKind::MinusT, r)
        } else if let Some(r) = s.strip_prefix('T') {
            (YBKind::T, r)
        } else {
            return Err(Error::Parse(s.to_string()));
        };
        let index = rest.parse().map_err(|_| Error::Parse(s.to_string()))?;
        Ok(YBLabel { kind, index })
    }
}

impl TryFrom<String> for YBLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<YBLabel> for String {
    fn from(l: YBLabel) -> String {
        l.to_string()
    }
}

/// `Y_σ(x)` computed along the lexicographically first reduced word,
/// together with its factors read from left to right.
pub fn yb_element(sigma: &Permutation, x: &ColorWord) -> Result<(HeckeElement, Vec<YBLabel>)> {
    yb_element_along(sigma, x, &sigma.reduced_word())
}

/// `Y_σ(x)` along a given reduced word `σ = s_{j_1}∘…∘s_{j_k}`, using
/// `Y_{s_jτ}(x) = Y_j(x_{τ⁻¹(j)}, x_{τ⁻¹(j+1)})·Y_τ(x)` with `x`
/// standardized first.
pub fn yb_element_along(sigma: &Permutation, x: &ColorWord, word: &[usize]) -> Result<(HeckeElement, Vec<YBLabel>)> {
    let n = sigma.n();
    if x.len() != n {
        return Err(Error::SizeMismatch(n, x.len()));
    }
    let x = x.standardized();
    let mut tau = Permutation::identity(n);
    let mut y = HeckeElement::one(n);
    let mut factors = Vec::new();
    for &j in word.iter().rev() {
        if !tau.left_ascent(j) {
            return Err(Error::InvalidArgument(format!("{word:?} is not a reduced word")));
        }
        let inv = tau.inverse();
        let label = YBLabel::spectral(j, x.at(inv.at(j)) as u8, x.at(inv.at(j + 1)) as u8);
        let ty = y.left_generator(j);
        y = match label.kind {
            YBKind::T => ty,
            YBKind::OnePlusT => y.add(&ty),
            YBKind::MinusT => ty.scale(&crate::linalg::rat(-1)),
        };
        factors.push(label);
        tau = tau.s_left(j);
    }
    if &tau != sigma {
        return Err(Error::InvalidArgument(format!("{word:?} is not a reduced word of {sigma}")));
    }
    factors.reverse();
    Ok((y, factors))
}

fn perm_as_colors(p: &Permutation) -> ColorWord {
    ColorWord::new(p.as_slice().to_vec()).expect("permutation letters are positive")
}

/// `η_I = Y_{ω_n}(τ)` for `τ = α(Ī)`, whose descent composition mirrors to `I`.
pub fn eta(i: &Composition) -> HeckeElement {
    let tau = i.mirror().alpha();
    eta_with_witness(&tau)
}

/// `Y_{ω_n}(τ)`; depends only on the mirror of the descent composition of `τ`.
pub fn eta_with_witness(tau: &Permutation) -> HeckeElement {
    yb_element(&Permutation::longest(tau.n()), &perm_as_colors(tau)).expect("sizes agree").0
}

/// Norton's generator `ν_I = T_{α(I)}·T'_{α(Ī~)}`.
pub fn nu(i: &Composition) -> HeckeElement {
    let a = HeckeElement::t(&i.alpha());
    let b = HeckeElement::t_prime(&i.mirror().conjugate().alpha());
    a.mul(&b).expect("sizes agree")
}
