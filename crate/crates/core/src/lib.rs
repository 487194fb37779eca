//! Exact construction and verification of hypersymplectic structures on the
//! double Lie groups attached to pairs of compatible affine structures.
//!
//! Input is a triple `(∇, ∇′, ω)` on `Qᵐ`. From it the crate builds the double
//! Lie algebra on `Qᵐ ⊕ Qᵐ`, its group law in global coordinates, the forms
//! `ω1..ω3`, the structures `J` and `E`, the neutral metric, its Levi-Civita
//! connection, curvature and geodesics. All arithmetic is exact over `Q`
//! except the optional floating-point geodesic integrator.

pub mod abelian;
pub mod algebra;
pub mod cli;
pub mod error;
pub mod families;
pub mod geometry;
pub mod lie;
pub mod linalg;
pub mod rational;
pub mod report;
pub mod tensor;
pub mod verdict;

#[cfg(test)]
mod properties;

pub use error::{Error, Result};
pub use rational::Rational;
