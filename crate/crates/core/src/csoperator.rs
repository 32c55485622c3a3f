//! The A2 Calogero–Sutherland operator
//!
//! ```text
//! Δ^κ = (z1² − 3z2)∂1² + (z2² − 3z1)∂2² + (z1z2 − 9)∂1∂2 + (3κ+1)(z1∂1 + z2∂2)
//! ```
//!
//! and its monic polynomial eigenfunctions. On a monomial `z1^a z2^b` the
//! operator acts diagonally with `ε_{a,b}(κ) = a² + b² + ab + 3κ(a+b)` plus
//! three transitions that lower the weight by `α1 = (2,−1)`, `α2 = (−1,2)` or
//! `α1 + α2 = (1,1)`. It is therefore triangular in the dominance order, and
//! the eigenfunction is obtained by back-substitution from the top weight.

use std::collections::HashMap;
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::bipoly::{BiPoly, Weight};
use crate::error::{Error, Result};
use crate::scalar::{KappaRational, Rational};

/// How a polynomial was constructed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub enum Method {
    #[serde(rename = "eigensolver")]
    Eigensolver,
    #[serde(rename = "recurrence")]
    Recurrence,
    #[serde(rename = "twin-recurrence")]
    TwinRecurrence,
    #[serde(rename = "genfunc")]
    GenFunc,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Eigensolver,
        Method::Recurrence,
        Method::TwinRecurrence,
        Method::GenFunc,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Method::Eigensolver => "eigensolver",
            Method::Recurrence => "recurrence",
            Method::TwinRecurrence => "twin-recurrence",
            Method::GenFunc => "genfunc",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        Method::ALL.into_iter().find(|m| m.tag() == s)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum KappaMode {
    Symbolic,
    Specialized(Rational),
}

/// A constructed `P_{m,n}^κ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledGegenbauer {
    pub m: u32,
    pub n: u32,
    pub poly: BiPoly,
    pub method: Method,
    pub kappa: KappaMode,
}

impl LabeledGegenbauer {
    pub fn top(&self) -> Weight {
        Weight::new(self.m, self.n)
    }

    /// Monic in `z1^m z2^n` and supported below `(m, n)` in dominance order.
    pub fn satisfies_invariants(&self) -> bool {
        let top = self.top();
        self.poly.coefficient(top).is_one()
            && self.poly.support().all(|w| dominance_leq(w, top))
    }

    /// Evaluates a symbolic construction at `κ = r`.
    pub fn specialize(&self, r: &Rational) -> Result<Self> {
        match &self.kappa {
            KappaMode::Symbolic => Ok(LabeledGegenbauer {
                poly: self.poly.specialize(r)?,
                kappa: KappaMode::Specialized(r.clone()),
                ..self.clone()
            }),
            KappaMode::Specialized(s) if s == r => Ok(self.clone()),
            KappaMode::Specialized(_) => panic!("specializing an already specialized polynomial"),
        }
    }
}

/// `ε_{m,n}(κ) = m² + n² + mn + 3κ(m + n)`.
pub fn eigenvalue(m: u32, n: u32) -> KappaRational {
    let (m, n) = (m as i64, n as i64);
    KappaRational::linear(m * m + n * n + m * n, 3 * (m + n))
}

/// Off-diagonal images of `z^w` under the operator, with integer coefficients.
fn transitions(w: Weight) -> impl Iterator<Item = (Weight, i64)> {
    let (a, b) = (w.a as i64, w.b as i64);
    [
        (w.offset(-2, 1), -3 * a * (a - 1)),
        (w.offset(1, -2), -3 * b * (b - 1)),
        (w.offset(-1, -1), -9 * a * b),
    ]
    .into_iter()
    .filter_map(|(t, c)| Some((t?, c)).filter(|_| c != 0))
}

/// Weights `ν` whose transitions land on `mu`, with the transition
/// coefficient `T(ν → μ)`.
fn incoming(mu: Weight) -> impl Iterator<Item = (Weight, i64)> {
    let (x, y) = (mu.a as i64, mu.b as i64);
    [
        (mu.offset(2, -1), -3 * (x + 2) * (x + 1)),
        (mu.offset(-1, 2), -3 * (y + 2) * (y + 1)),
        (mu.offset(1, 1), -9 * (x + 1) * (y + 1)),
    ]
    .into_iter()
    .filter_map(|(s, c)| Some((s?, c)))
}

/// Exact application of the operator.
pub fn apply_operator(p: &BiPoly) -> BiPoly {
    let mut out = BiPoly::zero();
    for (w, c) in p.terms() {
        out.add_term(w, &(c * &eigenvalue(w.a, w.b)));
        for (t, k) in transitions(w) {
            out.add_term(t, &(c * &KappaRational::from_int(k)));
        }
    }
    out
}

/// Root-lattice coordinates `(p, q)` with `λ − μ = p·α1 + q·α2`, if integral.
fn root_coordinates(mu: Weight, lambda: Weight) -> Option<(i64, i64)> {
    let da = lambda.a as i64 - mu.a as i64;
    let db = lambda.b as i64 - mu.b as i64;
    let (p3, q3) = (2 * da + db, da + 2 * db);
    (p3 % 3 == 0 && q3 % 3 == 0).then_some((p3 / 3, q3 / 3))
}

/// `μ ≤ λ` in the A2 dominance order.
pub fn dominance_leq(mu: Weight, lambda: Weight) -> bool {
    matches!(root_coordinates(mu, lambda), Some((p, q)) if p >= 0 && q >= 0)
}

/// All nonnegative weights `μ ≤ λ`, by increasing height `p + q` (so `λ`
/// first); equal heights in export order.
pub fn support(lambda: Weight) -> Vec<Weight> {
    let (m, n) = (lambda.a as i64, lambda.b as i64);
    let mut out = Vec::new();
    // each step lowers a + b by one, so the height is at most m + n
    for h in 0..=m + n {
        // a = m + h − 3p, so ascending p is descending a (export order)
        for p in 0..=h {
            let q = h - p;
            let a = m - 2 * p + q;
            let b = n + p - 2 * q;
            if a >= 0 && b >= 0 {
                out.push(Weight::new(a as u32, b as u32));
            }
        }
    }
    out
}

/// Back-substitution `c_μ = Σ_ν c_ν T(ν→μ) / (ε_λ − ε_μ)` over `support(λ)`.
fn back_substitute<F>(lambda: Weight, eps: F) -> Result<BiPoly>
where
    F: Fn(Weight) -> Result<KappaRational>,
{
    let weights = support(lambda);
    let eps_top = eps(lambda)?;
    let mut coeffs: HashMap<Weight, KappaRational> = HashMap::with_capacity(weights.len());
    coeffs.insert(lambda, KappaRational::one());
    for &mu in &weights[1..] {
        let mut acc = KappaRational::zero();
        for (nu, t) in incoming(mu) {
            if let Some(c) = coeffs.get(&nu) {
                acc += &(c * &KappaRational::from_int(t));
            }
        }
        let gap = &eps_top - &eps(mu)?;
        if gap.is_zero() {
            return Err(Error::Resonance {
                at: Rational::from_integer(0.into()),
                m: lambda.a,
                n: lambda.b,
                a: mu.a,
                b: mu.b,
            });
        }
        if !acc.is_zero() {
            coeffs.insert(mu, &acc / &gap);
        }
    }
    Ok(BiPoly::from_terms(coeffs))
}

/// The monic eigenfunction `P_{m,n}^κ` with symbolic κ.
pub fn eigensolve(m: u32, n: u32) -> LabeledGegenbauer {
    let lambda = Weight::new(m, n);
    let poly = back_substitute(lambda, |mu| {
        // κ-coefficient of ε_λ − ε_μ is 3(m+n−a−b) > 0
        debug_assert!(mu == lambda || mu.degree() < lambda.degree());
        Ok(eigenvalue(mu.a, mu.b))
    })
    .expect("no resonance for symbolic kappa");
    LabeledGegenbauer {
        m,
        n,
        poly,
        method: Method::Eigensolver,
        kappa: KappaMode::Symbolic,
    }
}

/// The eigenfunction with κ fixed to `r` before solving.
///
/// `r ≤ 0` is rejected unless `allow_nonpositive` is set; in that case a
/// resonance `ε_λ(r) = ε_μ(r)` is reported as [`Error::Resonance`].
pub fn eigensolve_specialized(
    m: u32,
    n: u32,
    r: &Rational,
    allow_nonpositive: bool,
) -> Result<LabeledGegenbauer> {
    if !r.is_positive() && !allow_nonpositive {
        return Err(Error::NonPositiveKappa(r.clone()));
    }
    let poly = back_substitute(Weight::new(m, n), |mu| {
        eigenvalue(mu.a, mu.b).specialize(r)
    })
    .map_err(|e| match e {
        Error::Resonance { m, n, a, b, .. } => Error::Resonance {
            at: r.clone(),
            m,
            n,
            a,
            b,
        },
        e => e,
    })?;
    Ok(LabeledGegenbauer {
        m,
        n,
        poly,
        method: Method::Eigensolver,
        kappa: KappaMode::Specialized(r.clone()),
    })
}
