use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Element of `Q(κ)` in canonical form: `num / den` with `gcd(num, den) = 1`
/// and `den` monic. Zero is `0 / 1`.
///
/// Because the form is canonical, `==` is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KappaRational {
    num: UniPoly,
    den: UniPoly,
}

impl KappaRational {
    /// Canonical representative of `num / den`.
    pub fn normalize(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    /// `den` must be nonzero.
    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = UniPoly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        Self::monic_den(num, den)
    }

    fn monic_den(num: UniPoly, den: UniPoly) -> Self {
        let lc = den.leading().expect("nonzero denominator");
        if lc.is_one() {
            KappaRational { num, den }
        } else {
            let inv = lc.recip();
            KappaRational {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        KappaRational {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn kappa() -> Self {
        Self::from_poly(UniPoly::kappa())
    }

    pub fn from_poly(p: UniPoly) -> Self {
        KappaRational {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    /// `c0 + c1·κ`
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::from_poly(UniPoly::linear(c0, c1))
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value does not depend on κ.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a rational, if it does not depend on κ.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::monic_den(self.den.clone(), self.num.clone()))
    }

    /// Sign of the numerator's leading coefficient; used for display.
    pub fn leading_is_negative(&self) -> bool {
        self.num.leading().is_some_and(Signed::is_negative)
    }

    /// Substitutes `κ → κ + delta`.
    pub fn shift_kappa(&self, delta: i64) -> Self {
        if delta == 0 || self.is_constant() {
            return self.clone();
        }
        // a shift preserves coprimality and the leading coefficient
        KappaRational {
            num: self.num.shift(delta),
            den: self.den.shift(delta),
        }
    }

    /// Exact value at `κ = r`.
    pub fn eval(&self, r: &Rational) -> Result<Rational> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return Err(Error::Pole { at: r.clone() });
        }
        Ok(self.num.eval(r) / d)
    }

    /// [`eval`](Self::eval) lifted back into `Q(κ)` as a constant.
    pub fn specialize(&self, r: &Rational) -> Result<Self> {
        self.eval(r).map(Self::constant)
    }
}

/// Rising factorial `(κ)_m = κ(κ+1)…(κ+m−1)`.
pub fn pochhammer(m: u32) -> KappaRational {
    let p = (0..m as i64).fold(UniPoly::one(), |acc, j| &acc * &UniPoly::linear(j, 1));
    KappaRational::from_poly(p)
}

impl Default for KappaRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for KappaRational {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<Rational> for KappaRational {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl Add for &KappaRational {
    type Output = KappaRational;
    fn add(self, rhs: &KappaRational) -> KappaRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return KappaRational::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = UniPoly::gcd(&self.den, &rhs.den);
        if g.is_one() {
            // coprime denominators: the sum is already reduced
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return KappaRational::zero();
            }
            return KappaRational {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let b = self.den.div_exact(&g);
        let d = rhs.den.div_exact(&g);
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        KappaRational::reduce(num, &b * &rhs.den)
    }
}

impl Sub for &KappaRational {
    type Output = KappaRational;
    fn sub(self, rhs: &KappaRational) -> KappaRational {
        self + &(-rhs)
    }
}

impl Neg for &KappaRational {
    type Output = KappaRational;
    fn neg(self) -> KappaRational {
        KappaRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &KappaRational {
    type Output = KappaRational;
    fn mul(self, rhs: &KappaRational) -> KappaRational {
        if self.is_zero() || rhs.is_zero() {
            return KappaRational::zero();
        }
        if rhs.is_constant() {
            return KappaRational {
                num: self.num.scale(&rhs.num.constant_term()),
                den: self.den.clone(),
            };
        }
        if self.is_constant() {
            return rhs * self;
        }
        // cross-cancel; inputs are reduced so the product is too
        let g1 = UniPoly::gcd(&self.num, &rhs.den);
        let g2 = UniPoly::gcd(&rhs.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1), rhs.den.div_exact(&g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        KappaRational::monic_den(&a * &c, &b * &d)
    }
}

impl Div for &KappaRational {
    type Output = KappaRational;
    /// Panics on division by zero.
    fn div(self, rhs: &KappaRational) -> KappaRational {
        self * &rhs.inv().expect("division by zero in Q(kappa)")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for KappaRational {
            type Output = KappaRational;
            fn $m(self, rhs: KappaRational) -> KappaRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&KappaRational> for KappaRational {
            type Output = KappaRational;
            fn $m(self, rhs: &KappaRational) -> KappaRational {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for KappaRational {
    type Output = KappaRational;
    fn neg(self) -> KappaRational {
        -&self
    }
}

impl AddAssign<&KappaRational> for KappaRational {
    fn add_assign(&mut self, rhs: &KappaRational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&KappaRational> for KappaRational {
    fn sub_assign(&mut self, rhs: &KappaRational) {
        *self = &*self - rhs;
    }
}

impl fmt::Debug for KappaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KappaRational({self})")
    }
}

impl fmt::Display for KappaRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn kr(num: &[i64], den: &[i64]) -> KappaRational {
        KappaRational::normalize(UniPoly::from_ints(num), UniPoly::from_ints(den)).unwrap()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        assert_eq!(kr(&[2, 2], &[4, 4]), KappaRational::constant(rat(1, 2)));
        assert_eq!(kr(&[0, 1], &[0, 1]), KappaRational::one());
    }

    #[test]
    fn normalize_partial_cancellation() {
        // 3κ² / 2κ = (3/2)κ, checked by cross-multiplication against the
        // unreduced input
        let x = kr(&[0, 0, 3], &[0, 2]);
        assert!(x.den().is_one());
        assert_eq!(x.num(), &UniPoly::new(vec![rat(0, 1), rat(3, 2)]));
        assert_eq!(
            &UniPoly::from_ints(&[0, 0, 3]) * x.den(),
            &UniPoly::from_ints(&[0, 2]) * x.num()
        );
    }

    #[test]
    fn normalize_rejects_zero_denominator() {
        assert_eq!(
            KappaRational::normalize(UniPoly::one(), UniPoly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn denominator_is_monic() {
        let x = kr(&[-3], &[1, 2]); // −3/(2κ+1)
        assert_eq!(x.num(), &UniPoly::constant(rat(-3, 2)));
        assert_eq!(x.den(), &UniPoly::new(vec![rat(1, 2), rat(1, 1)]));
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(0), KappaRational::one());
        assert_eq!(pochhammer(1), KappaRational::kappa());
        assert_eq!(pochhammer(3), kr(&[0, 2, 3, 1], &[1]));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(kr(&[1], &[0, 1]).shift_kappa(1), kr(&[1], &[1, 1]));
        assert_eq!(kr(&[3], &[1, 2]).shift_kappa(1), kr(&[3], &[3, 2]));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(kr(&[1], &[1, 2]).eval(&rat(1, 1)), Ok(rat(1, 3)));
        assert_eq!(KappaRational::kappa().eval(&rat(2, 3)), Ok(rat(2, 3)));
        assert_eq!(
            kr(&[1], &[1, 1]).eval(&rat(-1, 1)),
            Err(Error::Pole { at: rat(-1, 1) })
        );
    }

    #[test]
    fn sums_cancel_to_zero() {
        let a = kr(&[1], &[1, 1]);
        assert!((&a - &a).is_zero());
        // 1/(κ+1) − 1/(κ+2) = 1/((κ+1)(κ+2))
        let b = kr(&[1], &[2, 1]);
        assert_eq!(&a - &b, kr(&[1], &[2, 3, 1]));
    }

    #[test]
    fn shared_denominator_factor() {
        // 1/(κ(κ+1)) + 1/(κ+1) = (κ+1)/(κ(κ+1)) = 1/κ
        let a = kr(&[1], &[0, 1, 1]);
        let b = kr(&[1], &[1, 1]);
        assert_eq!(&a + &b, kr(&[1], &[0, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(kr(&[-3], &[1, 2]).to_string(), "(-3/2)/(k + 1/2)");
        assert_eq!(KappaRational::linear(1, 3).to_string(), "3*k + 1");
    }
}
