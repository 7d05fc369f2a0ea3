//! Noncommutative Gröbner bases, Anick chains and the Anick resolution of an
//! augmented algebra, in exact arithmetic.
//!
//! The pipeline is: a [`Presentation`] gives a [`RewriteSystem`]; once that
//! is a verified minimal Gröbner basis its leading monomials are the
//! obstructions, from which the [`ChainGraph`] produces the chains that index
//! the free modules of the resolution. [`ResolutionEngine`] computes the
//! differentials together with the contracting homotopy.

pub mod chains;
pub mod error;
pub mod field;
pub mod groebner;
pub mod order;
pub mod poly;
pub mod presentation;
pub mod resolution;
pub mod word;

pub use chains::{Chain, ChainGraph, ObstructionSet};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use groebner::{GroebnerCheck, RewriteSystem};
pub use order::MonomialOrder;
pub use poly::Polynomial;
pub use presentation::Presentation;
pub use resolution::{ModuleElement, ResolutionEngine, TensorTerm};
pub use word::{Alphabet, Letter, Word};
