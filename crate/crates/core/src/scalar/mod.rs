//! Exact ground arithmetic: `Q`, `Q[κ]` and `Q(κ)`.
//!
//! Every value is kept in canonical form so that equality is structural.

mod kappa;
mod rational;
mod unipoly;

pub use kappa::{pochhammer, KappaRational};
pub use rational::{parse_rational, rat, Rational};
pub use unipoly::UniPoly;
