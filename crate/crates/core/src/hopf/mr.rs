use std::fmt;

use serde_json::json;

use super::qmr::{sign, QmrBasis, QmrElement, Tensor};
use crate::combinat::{ColorWord, ColoredComposition, Composition};
use crate::linalg::{format_terms, rat, LinComb, Rat};

/// Parts of a colored composition as `(size, color)`.
type Pairs = Vec<(usize, u8)>;

/// Basis of the Mantaci-Reutenauer algebra `MR^{(r)}`, the free
/// associative algebra on the symbols `S_j^{(i)}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum MrBasis {
    /// Products `S^{(I,u)} = S_{i_1}^{(u_1)}⋯S_{i_k}^{(u_k)}`.
    S,
    /// Ribbons, `S^{(I,u)} = Σ_{(J,v) coarser than (I,u)} R_{(J,v)}`.
    R,
}

/// An element of `MR^{(r)}` expanded in one of its bases. With a single
/// color this is the algebra of noncommutative symmetric functions.
#[derive(Clone, PartialEq, Eq)]
pub struct MrElement {
    pub basis: MrBasis,
    pub terms: LinComb<ColoredComposition>,
}

impl MrElement {
    pub fn zero(basis: MrBasis) -> Self {
        MrElement { basis, terms: LinComb::zero() }
    }

    pub fn one(basis: MrBasis) -> Self {
        Self::basis_element(basis, ColoredComposition::empty())
    }

    pub fn basis_element(basis: MrBasis, a: ColoredComposition) -> Self {
        MrElement { basis, terms: LinComb::basis(a) }
    }

    pub fn s(a: ColoredComposition) -> Self {
        Self::basis_element(MrBasis::S, a)
    }

    pub fn r(a: ColoredComposition) -> Self {
        Self::basis_element(MrBasis::R, a)
    }

    pub fn coeff(&self, a: &ColoredComposition) -> Rat {
        self.terms.coeff(a)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn to_basis(&self, basis: MrBasis) -> Self {
        match (self.basis, basis) {
            (MrBasis::R, MrBasis::S) => self.s_from_r(),
            (MrBasis::S, MrBasis::R) => self.r_from_s(),
            _ => self.clone(),
        }
    }

    /// `R_a = Σ_{b coarser than a} (−1)^{ℓ(a)−ℓ(b)} S^b`.
    fn s_from_r(&self) -> Self {
        let terms =
            self.terms.map_linear(|a| a.coarser().into_iter().map(|b| (b.clone(), sign(a.len() - b.len()))).collect());
        MrElement { basis: MrBasis::S, terms }
    }

    /// `S^a = Σ_{b coarser than a} R_b`.
    fn r_from_s(&self) -> Self {
        let terms = self.terms.map_linear(|a| a.coarser().into_iter().map(|b| (b, rat(1))).collect());
        MrElement { basis: MrBasis::R, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        MrElement { basis: self.basis, terms: self.terms.add(&other.to_basis(self.basis).terms) }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        MrElement { basis: self.basis, terms: self.terms.scale(c) }
    }

    /// The product in the basis of `self`: concatenation on `S`, and on
    /// `R` the rule `R_aR_b = R_{a·b} + R_{a▷b}`, the second term present
    /// only when the last color of `a` equals the first color of `b`.
    pub fn mul(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let mut terms = LinComb::zero();
        for (x, cx) in self.terms.iter() {
            for (y, cy) in other.terms.iter() {
                let c = cx * cy;
                match self.basis {
                    MrBasis::S => terms.add_term(x.concat(y), c),
                    MrBasis::R => {
                        for z in r_product(x, y) {
                            terms.add_term(z, c.clone());
                        }
                    }
                }
            }
        }
        MrElement { basis: self.basis, terms }
    }

    /// The coproduct with `ΔS_n^{(k)} = Σ_{i+j=n} S_i^{(k)} ⊗ S_j^{(k)}`,
    /// extended multiplicatively; both factors in the basis of `self`.
    pub fn coproduct(&self) -> Tensor {
        let s = self.to_basis(MrBasis::S);
        let mut out = Tensor::zero();
        for (a, c) in s.terms.iter() {
            let mut acc: Vec<(Pairs, Pairs)> = vec![(Vec::new(), Vec::new())];
            for (p, col) in a.pairs() {
                acc = acc
                    .into_iter()
                    .flat_map(|(l, r)| {
                        (0..=p).map(move |i| {
                            let (mut l, mut r) = (l.clone(), r.clone());
                            if i > 0 {
                                l.push((i, col));
                            }
                            if i < p {
                                r.push((p - i, col));
                            }
                            (l, r)
                        })
                    })
                    .collect();
            }
            for (l, r) in acc {
                let left = MrElement::s(ColoredComposition::from_pairs(&l).expect("pairs")).to_basis(self.basis);
                let right = MrElement::s(ColoredComposition::from_pairs(&r).expect("pairs")).to_basis(self.basis);
                for (x, cx) in left.terms.iter() {
                    for (y, cy) in right.terms.iter() {
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

/// The one or two ribbons in `R_a·R_b`.
pub fn r_product(a: &ColoredComposition, b: &ColoredComposition) -> Vec<ColoredComposition> {
    let mut out = vec![a.concat(b)];
    let (pa, pb) = (a.pairs(), b.pairs());
    if let (Some(&(x, cx)), Some(&(y, cy))) = (pa.last(), pb.first()) {
        if cx == cy {
            let mut merged = pa[..pa.len() - 1].to_vec();
            merged.push((x + y, cx));
            merged.extend_from_slice(&pb[1..]);
            out.push(ColoredComposition::from_pairs(&merged).expect("pairs"));
        }
    }
    out
}

/// The duality pairing, `⟨S^a, M_b⟩ = δ_{a,b}` extended bilinearly.
pub fn pairing(x: &MrElement, y: &QmrElement) -> Rat {
    let s = x.to_basis(MrBasis::S);
    let m = y.to_basis(QmrBasis::M);
    s.terms.iter().map(|(a, c)| c * m.coeff(a)).sum()
}

/// Forgets colors: the projection `S_j^{(i)} ↦ S_j` onto noncommutative
/// symmetric functions, returned in the ribbon basis with every part
/// colored 1.
pub fn pi_map(a: &MrElement) -> MrElement {
    let s = a.to_basis(MrBasis::S);
    let terms = s.terms.map_linear(|x| LinComb::basis(monochrome(&x.parts)));
    MrElement { basis: MrBasis::S, terms }.to_basis(MrBasis::R)
}

/// `I` with every part colored 1.
pub fn monochrome(i: &Composition) -> ColoredComposition {
    ColoredComposition::new(i.clone(), ColorWord::constant(1, i.len())).expect("one color per part")
}

impl fmt::Display for MrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = format!("{:?}", self.basis);
        f.write_str(&format_terms(self.terms.iter(), |a| format!("{tag}[{a}]")))
    }
}

impl fmt::Debug for MrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
