//! Exact algebra of finitely generated abelian groups.

mod finite;
mod group;
mod hom;
mod matrix;
mod snf;

use num_bigint::BigInt;
use thiserror::Error;

pub use finite::{enumerate_elements, FiniteAbelian};
pub use group::{
    block_sum, canonicalize, direct_sum, direct_sum_all, is_isomorphic, tensor_q, CanonicalPresentation,
    FgAbGroup, GroupElement, Presentation,
};
pub use hom::{hom_decompose, nullspace, Decomposition, Homomorphism};
pub use matrix::IntMatrix;
pub use snf::{snf, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("not in canonical form: {0}")]
    NonCanonical(String),
    #[error("ill-defined map {domain} -> {codomain}: generator {generator} has order {order} but its image is not killed by it")]
    IllDefined {
        generator: usize,
        order: BigInt,
        domain: String,
        codomain: String,
    },
    #[error("elements of {left} and {right} cannot be combined")]
    GroupMismatch { left: String, right: String },
    #[error("{what} exceeds capacity (order {}, bound {bound})", order.as_deref().unwrap_or("infinite"))]
    Capacity {
        what: String,
        order: Option<String>,
        bound: u64,
    },
}
