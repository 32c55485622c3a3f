//! Sparse polynomials in `(z1, z2)` with coefficients in `Q(κ)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{KappaRational, Rational};

/// Exponent pair `(a, b)` of the monomial `z1^a z2^b`, read as the dominant
/// weight `a·ω1 + b·ω2` of A2.
///
/// Ordered by total degree, then by `a`; export order is the reverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Weight {
    pub a: u32,
    pub b: u32,
}

impl Weight {
    pub const fn new(a: u32, b: u32) -> Self {
        Weight { a, b }
    }

    pub fn degree(self) -> u32 {
        self.a + self.b
    }

    pub fn swapped(self) -> Self {
        Weight::new(self.b, self.a)
    }

    /// `(a + da, b + db)` if both stay nonnegative.
    pub fn offset(self, da: i64, db: i64) -> Option<Self> {
        let a = u32::try_from(self.a as i64 + da).ok()?;
        let b = u32::try_from(self.b as i64 + db).ok()?;
        Some(Weight::new(a, b))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.a.cmp(&other.a))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    Z1,
    Z2,
}

/// Sparse bivariate polynomial. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Weight, KappaRational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(KappaRational::one())
    }

    pub fn constant(c: KappaRational) -> Self {
        Self::monomial(Weight::new(0, 0), c)
    }

    pub fn monomial(w: Weight, c: KappaRational) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(w, &c);
        p
    }

    pub fn z1() -> Self {
        Self::monomial(Weight::new(1, 0), KappaRational::one())
    }

    pub fn z2() -> Self {
        Self::monomial(Weight::new(0, 1), KappaRational::one())
    }

    /// Builds from `(weight, coefficient)` pairs, summing duplicates.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Weight, KappaRational)>,
    {
        let mut p = BiPoly::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    /// Adds `c·z^w` in place, pruning a coefficient that cancels.
    pub fn add_term(&mut self, w: Weight, c: &KappaRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in export order: descending total degree, then descending `a`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Weight, &KappaRational)> {
        self.terms.iter().rev().map(|(w, c)| (*w, c))
    }

    pub fn support(&self) -> impl Iterator<Item = Weight> + '_ {
        self.terms.keys().rev().copied()
    }

    pub fn coefficient(&self, w: Weight) -> KappaRational {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|w| w.degree())
    }

    pub fn scale(&self, s: &KappaRational) -> Self {
        if s.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(w, c)| (*w, c * s)).collect(),
        }
    }

    /// Multiplication by the monomial `z^w`.
    pub fn shift_exponents(&self, w: Weight) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(v, c)| (Weight::new(v.a + w.a, v.b + w.b), c.clone()))
                .collect(),
        }
    }

    /// Formal partial derivative.
    pub fn partial(&self, axis: Axis) -> Self {
        let mut out = BiPoly::zero();
        for (w, c) in &self.terms {
            let (e, lowered) = match axis {
                Axis::Z1 => (w.a, w.offset(-1, 0)),
                Axis::Z2 => (w.b, w.offset(0, -1)),
            };
            if let Some(v) = lowered {
                out.add_term(v, &(c * &KappaRational::from_int(e as i64)));
            }
        }
        out
    }

    /// Substitutes `κ → κ + delta` in every coefficient.
    pub fn shift_kappa(&self, delta: i64) -> Self {
        if delta == 0 {
            return self.clone();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (*w, c.shift_kappa(delta)))
                .collect(),
        }
    }

    /// Exchanges `z1` and `z2`.
    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.swapped(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates every coefficient at `κ = r`; the result has constant
    /// coefficients.
    pub fn specialize(&self, r: &Rational) -> Result<Self> {
        let mut out = BiPoly::zero();
        for (w, c) in &self.terms {
            let v = c.specialize(r).map_err(|_| Error::PoleInTerm {
                at: r.clone(),
                a: w.a,
                b: w.b,
            })?;
            out.add_term(*w, &v);
        }
        Ok(out)
    }

    /// True if no coefficient depends on κ.
    pub fn is_kappa_free(&self) -> bool {
        self.terms.values().all(KappaRational::is_constant)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, &-c);
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (v, c) in &self.terms {
            for (w, d) in &rhs.terms {
                out.add_term(Weight::new(v.a + w.a, v.b + w.b), &(c * d));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[")?;
        for (i, (w, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, UniPoly};

    fn kr(num: &[i64], den: &[i64]) -> KappaRational {
        KappaRational::normalize(UniPoly::from_ints(num), UniPoly::from_ints(den)).unwrap()
    }

    fn mono(a: u32, b: u32) -> BiPoly {
        BiPoly::monomial(Weight::new(a, b), KappaRational::one())
    }

    #[test]
    fn ring_examples() {
        let z1 = BiPoly::z1();
        let z2 = BiPoly::z2();
        assert!((&z1 + &(-&z1)).is_zero());
        assert_eq!(&(&z1 + &z2) * &(&z1 - &z2), &mono(2, 0) - &mono(0, 2));
        let c = kr(&[3], &[1, 2]);
        let s = mono(1, 1).scale(&c);
        assert_eq!(s.coefficient(Weight::new(1, 1)), c);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn partials() {
        let p = mono(2, 1);
        assert_eq!(p.partial(Axis::Z1), mono(1, 1).scale(&2.into()));
        assert_eq!(p.partial(Axis::Z2), mono(2, 0));
        assert!(BiPoly::constant(kr(&[5], &[1, 1])).partial(Axis::Z1).is_zero());
    }

    #[test]
    fn kappa_shift_coefficientwise() {
        let p = &mono(1, 1) - &BiPoly::constant(kr(&[3], &[1, 2]));
        let shifted = p.shift_kappa(1);
        let expected = &mono(1, 1) - &BiPoly::constant(kr(&[3], &[3, 2]));
        assert_eq!(shifted, expected);
        // both sides agree at κ = 1: 1 − 3/5 at the constant
        assert_eq!(
            shifted.specialize(&rat(1, 1)).unwrap(),
            p.specialize(&rat(2, 1)).unwrap()
        );
        assert_eq!(p.shift_kappa(0), p);
        assert_eq!(shifted.shift_kappa(-1), p);
    }

    #[test]
    fn swap() {
        assert_eq!(mono(2, 1).swap_vars(), mono(1, 2));
        assert_eq!(mono(1, 1).swap_vars(), mono(1, 1));
    }

    #[test]
    fn specialize_examples() {
        let c = kr(&[-2], &[1, 1]);
        let p = &mono(2, 0) + &BiPoly::monomial(Weight::new(0, 1), c.clone());
        assert_eq!(p.specialize(&rat(1, 1)).unwrap(), &mono(2, 0) - &mono(0, 1));
        let q = &mono(2, 0) + &mono(0, 1).scale(&KappaRational::constant(rat(1, 3)));
        assert_eq!(q.specialize(&rat(7, 1)).unwrap(), q);
        let r = BiPoly::monomial(Weight::new(0, 1), kr(&[1], &[1, 1]));
        assert_eq!(
            r.specialize(&rat(-1, 1)),
            Err(Error::PoleInTerm {
                at: rat(-1, 1),
                a: 0,
                b: 1
            })
        );
    }

    #[test]
    fn coefficients_and_order() {
        let c = kr(&[-2], &[1, 1]);
        let p = BiPoly::from_terms([
            (Weight::new(0, 1), c.clone()),
            (Weight::new(2, 0), KappaRational::one()),
            (Weight::new(1, 1), KappaRational::one()),
            (Weight::new(0, 0), KappaRational::one()),
        ]);
        assert_eq!(p.coefficient(Weight::new(2, 0)), KappaRational::one());
        assert_eq!(p.coefficient(Weight::new(0, 1)), c);
        assert!(p.coefficient(Weight::new(5, 5)).is_zero());
        let order: Vec<_> = p.support().collect();
        assert_eq!(
            order,
            vec![
                Weight::new(2, 0),
                Weight::new(1, 1),
                Weight::new(0, 1),
                Weight::new(0, 0)
            ]
        );
    }
}
