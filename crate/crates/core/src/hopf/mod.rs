//! The Hopf-algebra side: monochromatic quasi-symmetric functions
//! `QMR^{(r)}` (bases `M`, `F`), the Mantaci-Reutenauer algebra `MR^{(r)}`
//! (bases `S`, `R`), symmetric functions in one and in `r` alphabets, and
//! the characteristic maps linking them to simple and projective modules.

mod maps;
mod mr;
mod qmr;
mod sym;

pub use maps::{cartan_map, ch_proj, ch_simple, d_map, decomposition_coefficient, e_map};
pub use mr::{monochrome, pairing, pi_map, r_product, MrBasis, MrElement};
pub use qmr::{m_product, QmrBasis, QmrElement, Tensor};
pub use sym::{
    h_to_schur, kostka, ribbon_to_schur, schur_product, schur_to_h, MultiSymElement, Multipartition, Partition,
    SymBasis, SymElement,
};
