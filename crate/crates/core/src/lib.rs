//! Exact computations in the 0-Hecke algebras `H_n(0)` and the
//! 0-Ariki-Koike-Shoji algebras `AKS(n,r)(0)`: simple and projective
//! modules, induction and restriction, Cartan and decomposition matrices,
//! and Ext-quivers.
//!
//! ```
//! use cycloribbon::aks0::BlockId;
//! use cycloribbon::reptheory::{composition_factors, induct_simples, q_cartan_block, SimpleLabel, DEFAULT_GUARD};
//!
//! // The block of AKS(2,2)(0) with one cell of each color.
//! let c = q_cartan_block(&BlockId::new(vec![1, 1])?, DEFAULT_GUARD)?;
//! assert_eq!(c.to_csv(), "label,2|12,1.1|21\n2|12,1,q\n1.1|21,q,1\n");
//!
//! // Inducing two one-cell simple modules gives a module of dimension 2.
//! let a: SimpleLabel = "1|1".parse()?;
//! let b: SimpleLabel = "1|2".parse()?;
//! let g = induct_simples(&a, &b)?;
//! assert_eq!(composition_factors(&g)?.len(), 2);
//! # Ok::<(), cycloribbon::Error>(())
//! ```

pub mod aks0;
pub mod combinat;
mod error;
pub mod fixtures;
pub mod hecke0;
pub mod hopf;
pub mod linalg;
pub mod reptheory;

pub use error::{Error, Result};
