//! The 0-Hecke algebra `H_n(0)` in the basis `(T_σ)`, Yang-Baxter
//! elements and graphs, Norton generators and semi-combinatorial modules.
//!
//! `E_σ := T'_σ` denotes the product of the `1+T_j` along a reduced word
//! of `σ` and `N_σ := (−T)_σ`.

mod element;
mod graph;
mod yang_baxter;

pub use element::HeckeElement;
pub use graph::{
    cyclic_dimension, hecke_induction_interval, interval_factors, interval_module, is_well_formed,
    simple_quotient_label, yb_graph, Action, IntervalSpec, ModuleGraph,
};
pub use yang_baxter::{eta, eta_with_witness, nu, yb_element, yb_element_along, YBKind, YBLabel};
