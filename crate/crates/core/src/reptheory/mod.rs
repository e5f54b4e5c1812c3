//! Representations of `AKS(n,r)(0)`: the one-dimensional simple modules
//! `S_{[I,c]}` labelled by cycloribbons, the indecomposable projectives
//! `P_{[K,c]}` labelled by anticycloribbons, induction and restriction,
//! radical series, `q`-Cartan matrices, Ext-quivers and decomposition
//! matrices.

mod cartan;
mod decomposition;
mod labels;
mod modules;
mod quiver;

pub use cartan::{
    block_radical, layers_match_vertex_factors, q_cartan, q_cartan_block, q_cartan_from_series, radical_filtration,
    twist_simple, BlockRadical, QCartanBlock, QPoly, RadicalSeries, DEFAULT_GUARD,
};
pub use decomposition::{decomposition_block, decomposition_matrix, restrict_projective, DecompositionBlock};
pub use labels::{ProjectiveLabel, SimpleAction, SimpleLabel};
pub use modules::{
    composition_factors, eta_element, induce_hecke_projective, induct_simples, projective_module, restrict_simple,
    satisfies_aks_relations, simple_action, simple_with_action, vertex_factors,
};
pub use quiver::{hecke_quiver, quiver, quiver_block, quiver_from_cartan, quiver_rule, undirected, QuiverArrow};
