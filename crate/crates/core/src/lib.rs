//! Exact construction of the A2 generalized Gegenbauer polynomials
//! `P_{m,n}^κ(z1, z2)` over the rational-function field `Q(κ)`, together with
//! a certification suite for their derivative-shift and recurrence identities.
//!
//! Layering, bottom up:
//!
//! * [`scalar`]: big rationals, polynomials in κ, and the field `Q(κ)`.
//! * [`bipoly`]: sparse polynomials in `(z1, z2)` over `Q(κ)`.
//! * [`csoperator`]: the Calogero–Sutherland operator, dominance order and
//!   the triangular eigensolver.
//! * [`families`]: closed-form coefficients, the Jack generating-function row,
//!   the n-lowering recurrence and its twin, and the classical A1 row.
//! * [`catalog`]: tables of constructed polynomials keyed by `(m, n)`.
//! * [`verify`]: exact identity checks and report aggregation.

pub mod bipoly;
pub mod catalog;
pub mod csoperator;
pub mod error;
pub mod families;
pub mod scalar;
pub mod verify;

pub use bipoly::{Axis, BiPoly, Weight};
pub use catalog::Catalog;
pub use csoperator::{KappaMode, LabeledGegenbauer, Method};
pub use error::{Error, Result};
pub use scalar::{KappaRational, Rational, UniPoly};
