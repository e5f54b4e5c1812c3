use super::mr::{MrBasis, MrElement};
use super::qmr::{QmrBasis, QmrElement};
use super::sym::{MultiSymElement, Multipartition, Partition, SymBasis};
use crate::combinat::ColoredComposition;
use crate::linalg::{LinComb, Rat};
use crate::reptheory::{ProjectiveLabel, SimpleLabel};

/// The characteristic of a simple module: `F` at the colored composition
/// of its projective label `φ([I,c])`.
pub fn ch_simple(label: &SimpleLabel) -> QmrElement {
    QmrElement::f(label.phi().to_colored_composition())
}

/// The characteristic of an indecomposable projective: `R` at its colored
/// composition.
pub fn ch_proj(label: &ProjectiveLabel) -> MrElement {
    MrElement::r(label.to_colored_composition())
}

/// `e: S_j^{(i)} ↦ h_j(X_i)`, into `Sym^{(r)}` in the `h` basis.
pub fn e_map(a: &MrElement, r: usize) -> MultiSymElement {
    let s = a.to_basis(MrBasis::S);
    let terms = s.terms.map_linear(|x| {
        let mut parts = vec![Vec::new(); r];
        for (p, c) in x.pairs() {
            parts[c as usize - 1].push(p);
        }
        LinComb::basis(Multipartition(parts.into_iter().map(Partition::new).collect()))
    });
    MultiSymElement { basis: SymBasis::H, terms }
}

/// `d: h_j(X_i) ↦ F_{(j):i}`, extended multiplicatively; in the `F` basis.
pub fn d_map(a: &MultiSymElement) -> QmrElement {
    let h = a.to_basis(SymBasis::H);
    let mut out = QmrElement::zero(QmrBasis::F);
    for (lam, c) in h.terms.iter() {
        let mut prod = QmrElement::one(QmrBasis::F);
        for (i, p) in lam.0.iter().enumerate() {
            for &j in p.parts() {
                let row = ColoredComposition::from_pairs(&[(j, (i + 1) as u8)]).expect("one part");
                prod = prod.mul(&QmrElement::f(row));
            }
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// The Cartan map `c = d∘e`: the coefficient of `F_{(J,d)}` in
/// `c(R_{(I,c)})` is the number of composition factors `S_{φ⁻¹(J,d)}` of
/// `P_{(I,c)}`.
pub fn cartan_map(a: &MrElement, r: usize) -> QmrElement {
    d_map(&e_map(a, r))
}

/// `d_{λ,(I,u)} = ⟨S_λ, e(R_{(I,u)})⟩`, the multiplicity of the
/// generic irreducible `λ` in the projective `(I,u)`.
pub fn decomposition_coefficient(lambda: &Multipartition, iu: &ColoredComposition) -> Rat {
    let r = lambda.0.len();
    if iu.color_degrees(r) != lambda.evaluation() || iu.colors.colors().iter().any(|&c| c as usize > r) {
        return Rat::from_integer(0.into());
    }
    e_map(&MrElement::r(iu.clone()), r).to_basis(SymBasis::Schur).coeff(lambda)
}
