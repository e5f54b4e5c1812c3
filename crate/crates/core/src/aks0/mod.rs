//! The 0-Ariki-Koike-Shoji algebra `AKS(n,r)(0)` in the basis
//! `B_{c,σ} = L_c·T_σ`, where the `L_c` are the Lagrange idempotents of
//! the commuting generators `ξ_j` and `T_σ` are the 0-Hecke generators.
//! The blocks are spanned by the `B_{c,σ}` whose color words share an
//! evaluation.

mod block;
mod element;

pub use block::{block_project, central_idempotent, regular_action_matrices, ActionMatrix, BlockAlgebra, BlockId};
pub use element::{aks_mul, default_parameters, frobenius_form, lagrange_of_xi, xi, AKSElement, BasisLabel};

/// Default cap on the dimension of a block handled by the dense machinery.
pub const DEFAULT_GUARD: usize = 1000;
