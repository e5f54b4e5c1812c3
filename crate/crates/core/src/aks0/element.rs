use std::fmt;

use num_traits::{One, Zero};

use crate::combinat::{ColorWord, Permutation};
use crate::hecke0::HeckeElement;
use crate::linalg::{format_terms, rat, LinComb, Rat};
use crate::{Error, Result};

/// A basis label `(c, σ)` standing for `B_{c,σ} = L_c·T_σ`.
pub type BasisLabel = (ColorWord, Permutation);

/// An element of `AKS(n,r)(0)` in the basis `B_{c,σ} = L_c·T_σ`.
#[derive(Clone, PartialEq, Eq)]
pub struct AKSElement {
    n: usize,
    r: usize,
    terms: LinComb<BasisLabel>,
}

fn check_colors(c: &ColorWord, n: usize, r: usize) -> Result<()> {
    if c.len() != n {
        return Err(Error::SizeMismatch(n, c.len()));
    }
    if c.colors().iter().any(|&x| x as usize > r) {
        return Err(Error::OutOfRange { index: c.max_color() as usize, bound: r });
    }
    Ok(())
}

impl AKSElement {
    pub fn zero(n: usize, r: usize) -> Self {
        AKSElement { n, r, terms: LinComb::zero() }
    }

    /// The unit `Σ_c L_c`.
    pub fn one(n: usize, r: usize) -> Self {
        Self::t(r, &Permutation::identity(n))
    }

    /// `B_{c,σ} = L_c·T_σ`.
    pub fn basis(r: usize, c: &ColorWord, sigma: &Permutation) -> Result<Self> {
        check_colors(c, sigma.n(), r)?;
        Ok(AKSElement { n: sigma.n(), r, terms: LinComb::basis((c.clone(), sigma.clone())) })
    }

    /// The Lagrange idempotent `L_c`.
    pub fn l(r: usize, c: &ColorWord) -> Result<Self> {
        Self::basis(r, c, &Permutation::identity(c.len()))
    }

    /// `T_σ = Σ_c L_c T_σ`.
    pub fn t(r: usize, sigma: &Permutation) -> Self {
        let terms = ColorWord::all(sigma.n(), r).into_iter().map(|c| ((c, sigma.clone()), Rat::one())).collect();
        AKSElement { n: sigma.n(), r, terms }
    }

    pub fn generator(n: usize, r: usize, i: usize) -> Self {
        Self::t(r, &Permutation::identity(n).s_right(i))
    }

    /// `B′_{c,σ} = T_σ·L_c`.
    pub fn b_prime(r: usize, c: &ColorWord, sigma: &Permutation) -> Result<Self> {
        Self::t(r, sigma).mul(&Self::l(r, c)?)
    }

    /// The image of an `H_n(0)` element under `T_σ ↦ Σ_c L_c T_σ`.
    pub fn from_hecke(r: usize, h: &HeckeElement) -> Self {
        let mut out = Self::zero(h.n(), r);
        for (s, c) in h.terms().iter() {
            out = out.add(&Self::t(r, s).scale(c));
        }
        out
    }

    pub fn from_terms(n: usize, r: usize, terms: LinComb<BasisLabel>) -> Result<Self> {
        for (c, s) in terms.keys() {
            check_colors(c, n, r)?;
            if s.n() != n {
                return Err(Error::SizeMismatch(n, s.n()));
            }
        }
        Ok(AKSElement { n, r, terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> &LinComb<BasisLabel> {
        &self.terms
    }

    pub fn coeff(&self, c: &ColorWord, sigma: &Permutation) -> Rat {
        self.terms.coeff(&(c.clone(), sigma.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        AKSElement { n: self.n, r: self.r, terms: self.terms.add(&other.terms) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        AKSElement { n: self.n, r: self.r, terms: self.terms.sub(&other.terms) }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        AKSElement { n: self.n, r: self.r, terms: self.terms.scale(c) }
    }

    /// `T_i·self`, straightening `T_i L_e` at `q = 0`:
    /// `L_{es_i}T_i − L_e` if `e_i < e_{i+1}`, `L_e T_i` if equal,
    /// `L_{es_i}(1+T_i)` if `e_i > e_{i+1}`.
    pub fn left_generator(&self, i: usize) -> Self {
        let mut out = LinComb::zero();
        for ((e, s), c) in self.terms.iter() {
            let t_s = |out: &mut LinComb<BasisLabel>, color: ColorWord, c: Rat| {
                if s.left_ascent(i) {
                    out.add_term((color, s.s_left(i)), c);
                } else {
                    out.add_term((color, s.clone()), -c);
                }
            };
            let (a, b) = (e.at(i), e.at(i + 1));
            if a < b {
                t_s(&mut out, e.swap(i), c.clone());
                out.add_term((e.clone(), s.clone()), -c.clone());
            } else if a == b {
                t_s(&mut out, e.clone(), c.clone());
            } else {
                out.add_term((e.swap(i), s.clone()), c.clone());
                t_s(&mut out, e.swap(i), c.clone());
            }
        }
        AKSElement { n: self.n, r: self.r, terms: out }
    }

    /// `L_c·self`: keeps the terms colored by `c`.
    pub fn left_l(&self, c: &ColorWord) -> Self {
        let terms = self.terms.iter().filter(|((e, _), _)| e == c).map(|(k, v)| (k.clone(), v.clone())).collect();
        AKSElement { n: self.n, r: self.r, terms }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if (self.n, self.r) != (other.n, other.r) {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = LinComb::zero();
        // Group the left factor by permutation so each T_σ·other is computed once.
        let mut by_perm: std::collections::BTreeMap<&Permutation, Vec<(&ColorWord, &Rat)>> = Default::default();
        for ((c, s), x) in self.terms.iter() {
            by_perm.entry(s).or_default().push((c, x));
        }
        for (s, colored) in by_perm {
            let mut e = other.clone();
            for &j in s.reduced_word().iter().rev() {
                e = e.left_generator(j);
            }
            for ((d, t), y) in e.terms.iter() {
                for (c, x) in &colored {
                    if *c == d {
                        out.add_term((d.clone(), t.clone()), (*x).clone() * y);
                    }
                }
            }
        }
        Ok(AKSElement { n: self.n, r: self.r, terms: out })
    }
}

impl fmt::Display for AKSElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = format_terms(self.terms.iter(), |(c, s)| {
            let colors: Vec<String> = c.colors().iter().map(u8::to_string).collect();
            format!("L[{}]·T[{s}]", colors.join(","))
        });
        f.write_str(&body)
    }
}

impl fmt::Debug for AKSElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn aks_mul(a: &AKSElement, b: &AKSElement) -> Result<AKSElement> {
    a.mul(b)
}

/// `ξ_j = Σ_c u_{c_j} L_c` for distinct parameters `u_1, …, u_r`.
pub fn xi(n: usize, j: usize, u: &[Rat]) -> Result<AKSElement> {
    let r = u.len();
    for a in 0..r {
        if u[a + 1..].contains(&u[a]) {
            return Err(Error::RepeatedParameter);
        }
    }
    if j == 0 || j > n {
        return Err(Error::OutOfRange { index: j, bound: n });
    }
    let id = Permutation::identity(n);
    let terms = ColorWord::all(n, r)
        .into_iter()
        .map(|c| {
            let v = u[c.at(j) as usize - 1].clone();
            ((c, id.clone()), v)
        })
        .collect();
    Ok(AKSElement { n, r, terms })
}

/// The default parameters `u_k = k − 1`.
pub fn default_parameters(r: usize) -> Vec<Rat> {
    (0..r as i64).map(rat).collect()
}

/// `P_k(ξ_j) = Σ_{c : c_j = k} L_c`.
pub fn lagrange_of_xi(n: usize, r: usize, j: usize, k: u8) -> AKSElement {
    let id = Permutation::identity(n);
    let terms =
        ColorWord::all(n, r).into_iter().filter(|c| c.at(j) == k).map(|c| ((c, id.clone()), Rat::one())).collect();
    AKSElement { n, r, terms }
}

/// `(f, g) = X(fg)` where `X` sums the coefficients of the `B_{c,ω_n}`.
pub fn frobenius_form(f: &AKSElement, g: &AKSElement) -> Result<Rat> {
    let w = Permutation::longest(f.n);
    let fg = f.mul(g)?;
    Ok(fg.terms.iter().filter(|((_, s), _)| *s == w).fold(Rat::zero(), |acc, (_, c)| acc + c))
}
