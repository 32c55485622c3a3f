use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;

/// Dense univariate polynomial in κ over `Q`, coefficients in ascending degree.
///
/// The highest stored coefficient is never zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate κ.
    pub fn kappa() -> Self {
        UniPoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    /// `c0 + c1·κ`
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::from_ints(&[c0, c1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Divides through by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Horner evaluation at `r`.
    pub fn eval(&self, r: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * r + c)
    }

    /// `p(κ + delta)`.
    pub fn shift(&self, delta: i64) -> Self {
        if delta == 0 || self.is_constant() {
            return self.clone();
        }
        let d = Rational::from_integer(delta.into());
        let step = UniPoly {
            coeffs: vec![d, Rational::one()],
        };
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &step) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division over `Q`: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&t| t >= dd) else {
            return (UniPoly::zero(), self.clone());
        };
        let mut quot = vec![Rational::zero(); top - dd + 1];
        for k in (0..=top - dd).rev() {
            let q = &rem[k + dd] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact quotient; the caller guarantees `d` divides `self`.
    pub fn div_exact(&self, d: &UniPoly) -> UniPoly {
        if d.is_constant() {
            return self.scale(&d.coeffs[0].recip());
        }
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd over `Q`, computed with a primitive remainder sequence over
    /// `Z` so that intermediate coefficients stay small. `gcd(0, 0) = 0`.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return UniPoly::one();
        }
        let (mut x, mut y) = (primitive_int(a), primitive_int(b));
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while y.len() > 1 {
            let r = primitive_part(pseudo_rem(&x, &y));
            x = y;
            y = r;
        }
        if y.is_empty() {
            from_ints_monic(&x)
        } else {
            UniPoly::one()
        }
    }
}

/// Clears denominators and removes content; leading coefficient positive.
fn primitive_int(p: &UniPoly) -> Vec<BigInt> {
    let lcm = p
        .coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    primitive_part(ints)
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let Some(last) = v.last() else {
        return v;
    };
    let mut g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if last.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` over `Z` (both nonzero, `deg a ≥ deg b`
/// not required).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &lr * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

fn from_ints_monic(v: &[BigInt]) -> UniPoly {
    let lc = v.last().expect("nonzero").clone();
    UniPoly::new(
        v.iter()
            .map(|c| Rational::new(c.clone(), lc.clone()))
            .collect(),
    )
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o += s;
        }
        UniPoly::new(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// Plain-text rendering with `k` standing for κ, e.g. `2*k^2 - 1/2`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let mono = match d {
                0 => String::new(),
                1 => "k".to_string(),
                _ => format!("k^{d}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn gcd_of_products_of_linears() {
        // (k+1)(k+2) and (k+2)(2k+1)
        let a = &p(&[1, 1]) * &p(&[2, 1]);
        let b = &p(&[2, 1]) * &p(&[1, 2]);
        assert_eq!(UniPoly::gcd(&a, &b), p(&[2, 1]));
        assert_eq!(UniPoly::gcd(&a, &p(&[3])), UniPoly::one());
        assert_eq!(UniPoly::gcd(&UniPoly::zero(), &p(&[4, 2])), p(&[2, 1]));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let a = UniPoly::new(vec![rat(1, 2), rat(1, 3)]); // (1/3)(k + 3/2)
        let b = &a * &p(&[5, 0, 7]);
        assert_eq!(UniPoly::gcd(&a, &b), UniPoly::new(vec![rat(3, 2), rat(1, 1)]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[3, -1, 4, 1, 5]);
        let d = p(&[-2, 0, 3]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn shift_and_eval() {
        let a = p(&[1, 2, 1]); // (k+1)^2
        assert_eq!(a.shift(1), p(&[4, 4, 1]));
        assert_eq!(a.shift(1).shift(-1), a);
        assert_eq!(a.eval(&rat(1, 2)), rat(9, 4));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 2]).to_string(), "2*k^2 - 1");
        assert_eq!(UniPoly::new(vec![rat(1, 2), rat(1, 1)]).to_string(), "k + 1/2");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
