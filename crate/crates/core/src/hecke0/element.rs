use std::fmt;

use num_traits::One;

use crate::combinat::Permutation;
use crate::linalg::{format_terms, rat, LinComb, Rat};
use crate::{Error, Result};

/// An element of `H_n(0)` in the basis `(T_σ)`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: LinComb<Permutation>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement { n, terms: LinComb::zero() }
    }

    pub fn one(n: usize) -> Self {
        Self::t(&Permutation::identity(n))
    }

    /// The basis element `T_σ`.
    pub fn t(sigma: &Permutation) -> Self {
        HeckeElement { n: sigma.n(), terms: LinComb::basis(sigma.clone()) }
    }

    /// The generator `T_i`.
    pub fn generator(n: usize, i: usize) -> Self {
        Self::t(&Permutation::identity(n).s_right(i))
    }

    pub fn from_terms(n: usize, terms: LinComb<Permutation>) -> Self {
        HeckeElement { n, terms }
    }

    /// `E_σ = T'_σ`, the product of the `1 + T_j` along a reduced word;
    /// equals the sum of `T_β` over the Bruhat interval below `σ`.
    pub fn t_prime(sigma: &Permutation) -> Self {
        let n = sigma.n();
        let mut e = Self::one(n);
        for &j in sigma.reduced_word().iter().rev() {
            e = e.add(&e.left_generator(j));
        }
        e
    }

    /// `N_σ = (−T)_σ = (−1)^{ℓ(σ)} T_σ`.
    pub fn minus_t(sigma: &Permutation) -> Self {
        let sign = if sigma.length().is_multiple_of(2) { 1 } else { -1 };
        Self::t(sigma).scale(&rat(sign))
    }

    /// `ζ_σ = (−1)^{ℓ(σ)} E_{ω_nσ⁻¹}`, the basis adjoint to `(N_τ)` under
    /// the form `(f, g) = T*_{ω_n}(fg)`.
    pub fn zeta(sigma: &Permutation) -> Self {
        let w = Permutation::longest(sigma.n());
        let sign = if sigma.length().is_multiple_of(2) { 1 } else { -1 };
        Self::t_prime(&w.compose(&sigma.inverse())).scale(&rat(sign))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &LinComb<Permutation> {
        &self.terms
    }

    pub fn coeff(&self, sigma: &Permutation) -> Rat {
        self.terms.coeff(sigma)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        HeckeElement { n: self.n, terms: self.terms.add(&other.terms) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        HeckeElement { n: self.n, terms: self.terms.sub(&other.terms) }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        HeckeElement { n: self.n, terms: self.terms.scale(c) }
    }

    /// `T_i·self`, using `T_i T_σ = T_{s_iσ}` when the length goes up and
    /// `−T_σ` otherwise.
    pub fn left_generator(&self, i: usize) -> Self {
        let mut out = LinComb::zero();
        for (s, c) in self.terms.iter() {
            if s.left_ascent(i) {
                out.add_term(s.s_left(i), c.clone());
            } else {
                out.add_term(s.clone(), -c.clone());
            }
        }
        HeckeElement { n: self.n, terms: out }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = Self::zero(self.n);
        for (s, c) in self.terms.iter() {
            let mut e = other.clone();
            for &j in s.reduced_word().iter().rev() {
                e = e.left_generator(j);
            }
            out = out.add(&e.scale(c));
        }
        Ok(out)
    }

    /// The anti-automorphism fixing every `T_i`: `T_σ ↦ T_{σ⁻¹}`.
    pub fn phi_antiauto(&self) -> Self {
        HeckeElement { n: self.n, terms: self.terms.iter().map(|(s, c)| (s.inverse(), c.clone())).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.coeff(&Permutation::identity(self.n)).is_one()
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter(), |s| format!("T[{s}]")))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, i: usize) -> HeckeElement {
        HeckeElement::generator(n, i)
    }

    #[test]
    fn quadratic_and_braid_relations() {
        let t1 = g(3, 1);
        assert_eq!(t1.mul(&t1).unwrap(), t1.scale(&rat(-1)));
        let t2 = g(3, 2);
        let lhs = t1.mul(&t2).unwrap().mul(&t1).unwrap();
        let rhs = t2.mul(&t1).unwrap().mul(&t2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_of_reduced_word_is_basis_element() {
        for s in Permutation::all(4) {
            let mut e = HeckeElement::one(4);
            for &j in &s.reduced_word() {
                e = e.mul(&g(4, j)).unwrap();
            }
            assert_eq!(e, HeckeElement::t(&s));
        }
    }

    #[test]
    fn t_prime_is_bruhat_sum() {
        for s in Permutation::all(4) {
            let expected: LinComb<Permutation> =
                Permutation::all(4).into_iter().filter(|b| b.bruhat_leq(&s)).map(|b| (b, Rat::one())).collect();
            assert_eq!(HeckeElement::t_prime(&s).terms(), &expected);
        }
    }

    #[test]
    fn size_mismatch() {
        assert!(HeckeElement::one(2).mul(&HeckeElement::one(3)).is_err());
    }

    #[test]
    fn phi_reverses_products() {
        let t12 = g(3, 1).mul(&g(3, 2)).unwrap();
        let t21 = g(3, 2).mul(&g(3, 1)).unwrap();
        assert_eq!(t12.phi_antiauto(), t21);
    }
}
