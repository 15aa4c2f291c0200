//! Exact combinatorics behind the irreducible representations of `GL_n(C)` with
//! minimal nonzero Gelfand-Kirillov dimension.
//!
//! The crate covers the symmetric group side (Bruhat order, Robinson-Schensted,
//! the two-column double cell and its minimal elements), ordinary and parabolic
//! Kazhdan-Lusztig polynomials, Goldie rank polynomials and Bernstein degrees,
//! the Gelfand-Kirillov dimension classifier for Langlands parameters, and the
//! integer transition matrices between the two bases of the coherent-family space
//! `Coh^min`. Everything is exact: arbitrary-precision integers and rationals only.
//!
//! Conventions used throughout:
//! * permutations are in one-line notation, `w.image(k) = w(k)`, and products are
//!   functional composition, `(uv)(k) = u(v(k))`;
//! * a permutation acts on vectors by `(w.v)_k = v_{w^{-1}(k)}`.

pub mod coherent;
pub mod dyckpar;
mod error;
pub mod json;
pub mod klpoly;
pub mod langlands;
pub mod matrix;
pub mod qpoly;
pub mod rational;
pub mod symgroup;
pub mod tableaux;
pub mod weights;

pub use error::{Error, Result};
pub use klpoly::KlOracle;
pub use matrix::IntMatrix;
pub use qpoly::QPoly;
pub use rational::Rational;
pub use symgroup::Permutation;
