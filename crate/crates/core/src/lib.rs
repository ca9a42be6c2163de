//! Executable structure theory for separable MV-algebras.
//!
//! The representable universe is finite products of finite chains `Ł_m` and finite
//! products of subalgebras of `[0,1] ∩ Q`. On it the crate decides separability,
//! splits algebras along Boolean elements, computes Boolean skeletons, spectra,
//! coproducts and order-ranks, and checks each claim against a brute-force oracle.
//! A small module on finite topological spaces covers components and `π0`.

pub mod algebra;
pub mod cli;
pub mod coproduct;
pub mod error;
pub mod format;
pub mod fraction;
pub mod lgroup;
pub mod oracle;
pub mod pierce;
pub mod terms;
pub mod verify;
pub mod topology;

pub use algebra::{Element, FiniteMV, Hom, Ideal, Op, RationalAlgebra, RationalProduct};
pub use error::{Error, Result};
pub use fraction::Fraction;
