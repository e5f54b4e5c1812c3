use std::fmt;

use serde_json::json;

use crate::combinat::ColoredComposition;
use crate::linalg::{format_terms, rat, LinComb, Rat};

/// A tensor `Σ c·(x ⊗ y)` of two colored-composition-indexed elements in
/// the same basis.
pub type Tensor = LinComb<(ColoredComposition, ColoredComposition)>;

/// Basis of the monochromatic quasi-symmetric functions `QMR^{(r)}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum QmrBasis {
    /// Monomial functions `M_{(I,u)}`.
    M,
    /// Quasi-ribbon functions `F_{(I,u)} = Σ_{(J,v) finer than (I,u)} M_{(J,v)}`.
    F,
}

/// An element of `QMR^{(r)}` expanded in one of its bases.
#[derive(Clone, PartialEq, Eq)]
pub struct QmrElement {
    pub basis: QmrBasis,
    pub terms: LinComb<ColoredComposition>,
}

/// `(−1)^k` as a rational.
pub(crate) fn sign(k: usize) -> Rat {
    rat(if k.is_multiple_of(2) { 1 } else { -1 })
}

impl QmrElement {
    pub fn zero(basis: QmrBasis) -> Self {
        QmrElement { basis, terms: LinComb::zero() }
    }

    /// The unit, indexed by the empty composition.
    pub fn one(basis: QmrBasis) -> Self {
        Self::basis_element(basis, ColoredComposition::empty())
    }

    pub fn basis_element(basis: QmrBasis, a: ColoredComposition) -> Self {
        QmrElement { basis, terms: LinComb::basis(a) }
    }

    pub fn m(a: ColoredComposition) -> Self {
        Self::basis_element(QmrBasis::M, a)
    }

    pub fn f(a: ColoredComposition) -> Self {
        Self::basis_element(QmrBasis::F, a)
    }

    pub fn coeff(&self, a: &ColoredComposition) -> Rat {
        self.terms.coeff(a)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The same element in another basis.
    pub fn to_basis(&self, basis: QmrBasis) -> Self {
        match (self.basis, basis) {
            (QmrBasis::F, QmrBasis::M) => self.m_from_f(),
            (QmrBasis::M, QmrBasis::F) => self.f_from_m(),
            _ => self.clone(),
        }
    }

    /// Expand in the `M` basis: `F_a = Σ_{b finer than a} M_b`.
    fn m_from_f(&self) -> Self {
        let terms =
            self.terms.map_linear(|a| a.finer().into_iter().map(|b| (b, Rat::from_integer(1.into()))).collect());
        QmrElement { basis: QmrBasis::M, terms }
    }

    /// Expand in the `F` basis by Möbius inversion:
    /// `M_a = Σ_{b finer than a} (−1)^{ℓ(b)−ℓ(a)} F_b`.
    fn f_from_m(&self) -> Self {
        let terms =
            self.terms.map_linear(|a| a.finer().into_iter().map(|b| (b.clone(), sign(b.len() - a.len()))).collect());
        QmrElement { basis: QmrBasis::F, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        QmrElement { basis: self.basis, terms: self.terms.add(&other.to_basis(self.basis).terms) }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        QmrElement { basis: self.basis, terms: self.terms.scale(c) }
    }

    /// The product, computed in the `M` basis and returned in the basis of
    /// `self`.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (self.to_basis(QmrBasis::M), other.to_basis(QmrBasis::M));
        let mut terms = LinComb::zero();
        for (x, cx) in a.terms.iter() {
            for (y, cy) in b.terms.iter() {
                let c = cx * cy;
                for (z, k) in m_product(x, y) {
                    terms.add_term(z, &c * rat(k));
                }
            }
        }
        QmrElement { basis: QmrBasis::M, terms }.to_basis(self.basis)
    }

    /// The coproduct, deconcatenation in the `M` basis; both tensor
    /// factors are returned in the basis of `self`.
    pub fn coproduct(&self) -> Tensor {
        let m = self.to_basis(QmrBasis::M);
        let mut out = Tensor::zero();
        for (a, c) in m.terms.iter() {
            let pairs = a.pairs();
            for k in 0..=pairs.len() {
                let left = ColoredComposition::from_pairs(&pairs[..k]).expect("prefix");
                let right = ColoredComposition::from_pairs(&pairs[k..]).expect("suffix");
                let l = QmrElement::m(left).to_basis(self.basis);
                let r = QmrElement::m(right).to_basis(self.basis);
                for (x, cx) in l.terms.iter() {
                    for (y, cy) in r.terms.iter() {
                        out.add_term((x.clone(), y.clone()), c * cx * cy);
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let tag = format!("{:?}", self.basis);
        json!({
            "basis": tag,
            "terms": self.terms.iter().map(|(a, c)| json!({"label": a.to_string(), "coeff": c.to_string()})).collect::<Vec<_>>(),
        })
    }
}

/// `M_a·M_b` as a list of `(M-index, multiplicity)`: the quasi-shuffle of
/// the parts, where two parts may merge (adding their sizes) only when
/// their colors coincide.
pub fn m_product(a: &ColoredComposition, b: &ColoredComposition) -> Vec<(ColoredComposition, i64)> {
    fn rec(a: &[(usize, u8)], b: &[(usize, u8)], prefix: &mut Vec<(usize, u8)>, out: &mut LinComb<ColoredComposition>) {
        if a.is_empty() || b.is_empty() {
            let mut full = prefix.clone();
            full.extend_from_slice(a);
            full.extend_from_slice(b);
            out.add_term(ColoredComposition::from_pairs(&full).expect("valid pairs"), rat(1));
            return;
        }
        prefix.push(a[0]);
        rec(&a[1..], b, prefix, out);
        prefix.pop();
        prefix.push(b[0]);
        rec(a, &b[1..], prefix, out);
        prefix.pop();
        if a[0].1 == b[0].1 {
            prefix.push((a[0].0 + b[0].0, a[0].1));
            rec(&a[1..], &b[1..], prefix, out);
            prefix.pop();
        }
    }
    let mut out = LinComb::zero();
    rec(&a.pairs(), &b.pairs(), &mut Vec::new(), &mut out);
    out.iter().map(|(k, c)| (k.clone(), c.to_integer().try_into().expect("small multiplicity"))).collect()
}

impl fmt::Display for QmrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = format!("{:?}", self.basis);
        f.write_str(&format_terms(self.terms.iter(), |a| format!("{tag}[{a}]")))
    }
}

impl fmt::Debug for QmrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
