use crate::scalar::Rational;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("pole at kappa = {at}")]
    Pole { at: Rational },

    #[error("pole at kappa = {at} in coefficient of z1^{a} z2^{b}")]
    PoleInTerm { at: Rational, a: u32, b: u32 },

    /// `ε_λ(r) = ε_μ(r)` for some `μ` strictly below `λ`.
    #[error("resonance at kappa = {at}: eigenvalues of ({m},{n}) and ({a},{b}) coincide")]
    Resonance {
        at: Rational,
        m: u32,
        n: u32,
        a: u32,
        b: u32,
    },

    #[error("specialized kappa must be positive (got {0}); pass the override to allow it")]
    NonPositiveKappa(Rational),

    #[error("malformed rational {0:?}")]
    ParseRational(String),

    #[error("method {method} cannot build ({m},{n})")]
    UnsupportedMethod { method: &'static str, m: u32, n: u32 },
}
