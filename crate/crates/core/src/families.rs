//! Closed-form coefficient functions and the constructive alternatives to the
//! eigensolver.
//!
//! Index convention: a polynomial with a negative index is zero, and each
//! coefficient function returns zero exactly when the polynomial it multiplies
//! would carry a negative index.

use std::collections::BTreeMap;

use crate::bipoly::BiPoly;
use crate::csoperator::{KappaMode, LabeledGegenbauer, Method};
use crate::scalar::{pochhammer, KappaRational, Rational, UniPoly};

fn lin(c0: i64, c1: i64) -> UniPoly {
    UniPoly::linear(c0, c1)
}

fn ratio(int_factor: i64, num: &[UniPoly], den: &[UniPoly]) -> KappaRational {
    let n = num
        .iter()
        .fold(UniPoly::from_ints(&[int_factor]), |acc, f| &acc * f);
    let d = den.iter().fold(UniPoly::one(), |acc, f| &acc * f);
    KappaRational::normalize(n, d).expect("denominator factors are nonconstant linears")
}

/// `A_{m,n}(κ) = m(m−1)n(m+n+κ−1)(m+n+κ) / [(m+κ−1)(m+κ)(m+n+2κ−1)(m+n+2κ)]`,
/// zero for `m < 2` or `n < 1`.
pub fn coeff_a(m: i64, n: i64) -> KappaRational {
    if m < 2 || n < 1 {
        return KappaRational::zero();
    }
    ratio(
        m * (m - 1) * n,
        &[lin(m + n - 1, 1), lin(m + n, 1)],
        &[lin(m - 1, 1), lin(m, 1), lin(m + n - 1, 2), lin(m + n, 2)],
    )
}

/// `B_{m,n}(κ) = −n(n−1)(m+n+κ) / [(n+κ−1)(n+κ)]`, zero for `n < 2`.
pub fn coeff_b(m: i64, n: i64) -> KappaRational {
    if n < 2 {
        return KappaRational::zero();
    }
    ratio(
        -n * (n - 1),
        &[lin(m + n, 1)],
        &[lin(n - 1, 1), lin(n, 1)],
    )
}

/// `ã_{m,n}(κ) = m(n+m+κ)(m−1+2κ)(n+m−1+3κ) / [(m+κ)(m−1+κ)(n+m+2κ)(n+m−1+2κ)]`,
/// zero for `m ≤ 0` or `n < 0`.
pub fn coeff_a_tilde(m: i64, n: i64) -> KappaRational {
    if m <= 0 || n < 0 {
        return KappaRational::zero();
    }
    ratio(
        m,
        &[lin(n + m, 1), lin(m - 1, 2), lin(n + m - 1, 3)],
        &[lin(m, 1), lin(m - 1, 1), lin(n + m, 2), lin(n + m - 1, 2)],
    )
}

/// `c_n(κ) = n(n−1+2κ) / [(n+κ)(n−1+κ)]`, zero for `n ≤ 0`.
pub fn coeff_c(n: i64) -> KappaRational {
    if n <= 0 {
        return KappaRational::zero();
    }
    ratio(n, &[lin(n - 1, 2)], &[lin(n, 1), lin(n - 1, 1)])
}

fn factorial(m: u32) -> KappaRational {
    (1..=m as i64).fold(KappaRational::one(), |acc, j| &acc * &KappaRational::from_int(j))
}

/// `m! / (κ)_m`, the factor turning a generating-function coefficient into a
/// monic polynomial.
fn monic_factor(m: u32) -> KappaRational {
    &factorial(m) / &pochhammer(m)
}

fn labeled(m: u32, n: u32, poly: BiPoly, method: Method) -> LabeledGegenbauer {
    LabeledGegenbauer {
        m,
        n,
        poly,
        method,
        kappa: KappaMode::Symbolic,
    }
}

/// `P_{0,0}, …, P_{max_m,0}` from the generating function
/// `(1 − z1 t + z2 t² − t³)^{−κ} = Σ (κ)_m/m! · P_{m,0} t^m`.
///
/// With `g = 1 − z1 t + z2 t² − t³` and `f = g^{−κ}`, `g f' = −κ g' f` gives
/// `m f_m = (m−1+κ) z1 f_{m−1} − (m−2+2κ) z2 f_{m−2} + (m−3+3κ) f_{m−3}`.
pub fn jack_row(max_m: u32) -> Vec<LabeledGegenbauer> {
    let z1 = BiPoly::z1();
    let z2 = BiPoly::z2();
    let mut f: Vec<BiPoly> = vec![BiPoly::one()];
    for m in 1..=max_m as i64 {
        let i = m as usize;
        let mut next = (&z1 * &f[i - 1]).scale(&KappaRational::linear(m - 1, 1));
        if i >= 2 {
            next = &next - &(&z2 * &f[i - 2]).scale(&KappaRational::linear(m - 2, 2));
        }
        if i >= 3 {
            next = &next + &f[i - 3].scale(&KappaRational::linear(m - 3, 3));
        }
        f.push(next.scale(&KappaRational::constant(Rational::new(1.into(), m.into()))));
    }
    f.into_iter()
        .enumerate()
        .map(|(m, fm)| {
            let m = m as u32;
            labeled(m, 0, fm.scale(&monic_factor(m)), Method::GenFunc)
        })
        .collect()
}

/// Classical monic Gegenbauer polynomials `P_m^κ(z) = m!/(κ)_m · C_m^κ(z/2)`
/// for `m = 0..=max_m`, from `(1 − z t + t²)^{−κ} = Σ (κ)_m/m! · P_m^κ(z) t^m`
/// via `m f_m = (m−1+κ) z f_{m−1} − (m−2+2κ) f_{m−2}`.
///
/// The variable `z` is stored as `z1`.
pub fn a1_row(max_m: u32) -> Vec<BiPoly> {
    let z = BiPoly::z1();
    let mut f: Vec<BiPoly> = vec![BiPoly::one()];
    for m in 1..=max_m as i64 {
        let i = m as usize;
        let mut next = (&z * &f[i - 1]).scale(&KappaRational::linear(m - 1, 1));
        if i >= 2 {
            next = &next - &f[i - 2].scale(&KappaRational::linear(m - 2, 2));
        }
        f.push(next.scale(&KappaRational::constant(Rational::new(1.into(), m.into()))));
    }
    f.into_iter()
        .enumerate()
        .map(|(m, fm)| fm.scale(&monic_factor(m as u32)))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    /// `P_{m,n} = z2 P_{m,n−1} − ã_{m,n−1} P_{m−1,n−1} − c_{n−1} P_{m+1,n−2}`,
    /// seeded by the Jack row.
    LowerN,
    /// `P_{m,n} = z1 P_{m−1,n} − ã_{n,m−1} P_{m−1,n−1} − c_{m−1} P_{m−2,n+1}`,
    /// the image of `LowerN` under `z1 ↔ z2`, seeded by the swapped Jack row.
    LowerM,
}

impl Direction {
    pub fn method(self) -> Method {
        match self {
            Direction::LowerN => Method::Recurrence,
            Direction::LowerM => Method::TwinRecurrence,
        }
    }
}

fn get<'a>(table: &'a BTreeMap<(u32, u32), BiPoly>, m: i64, n: i64) -> Option<&'a BiPoly> {
    if m < 0 || n < 0 {
        return None;
    }
    table.get(&(m as u32, n as u32))
}

/// Right-hand side of one recurrence step for `(m, n)`, read from the
/// lower-degree entries of `table`. Not defined on the seed row.
pub fn recurrence_step(
    table: &BTreeMap<(u32, u32), BiPoly>,
    m: u32,
    n: u32,
    direction: Direction,
) -> BiPoly {
    let (mi, ni) = (m as i64, n as i64);
    let (shift, lower, a_t, c, lower_a, lower_c) = match direction {
        Direction::LowerN => (
            BiPoly::z2(),
            (mi, ni - 1),
            coeff_a_tilde(mi, ni - 1),
            coeff_c(ni - 1),
            (mi - 1, ni - 1),
            (mi + 1, ni - 2),
        ),
        Direction::LowerM => (
            BiPoly::z1(),
            (mi - 1, ni),
            coeff_a_tilde(ni, mi - 1),
            coeff_c(mi - 1),
            (mi - 1, ni - 1),
            (mi - 2, ni + 1),
        ),
    };
    let base = get(table, lower.0, lower.1).expect("recurrence table filled bottom-up");
    let mut out = &shift * base;
    if let Some(p) = get(table, lower_a.0, lower_a.1) {
        out = &out - &p.scale(&a_t);
    } else {
        debug_assert!(a_t.is_zero());
    }
    if let Some(p) = get(table, lower_c.0, lower_c.1) {
        out = &out - &p.scale(&c);
    } else {
        debug_assert!(c.is_zero());
    }
    out
}

/// All `P_{m,n}` with `m + n ≤ max_degree`, built by the given recurrence.
pub fn recurrence_table(max_degree: u32, direction: Direction) -> BTreeMap<(u32, u32), BiPoly> {
    let mut table = BTreeMap::new();
    for p in jack_row(max_degree) {
        let key = match direction {
            Direction::LowerN => (p.m, 0),
            Direction::LowerM => (0, p.m),
        };
        let poly = match direction {
            Direction::LowerN => p.poly,
            Direction::LowerM => p.poly.swap_vars(),
        };
        table.insert(key, poly);
    }
    // fill by total degree so every right-hand side is present
    for d in 1..=max_degree {
        for m in 0..=d {
            let n = d - m;
            let seeded = match direction {
                Direction::LowerN => n == 0,
                Direction::LowerM => m == 0,
            };
            if !seeded {
                let p = recurrence_step(&table, m, n, direction);
                table.insert((m, n), p);
            }
        }
    }
    table
}

/// `P_{m,n}` by the given recurrence.
pub fn build_by_recurrence(m: u32, n: u32, direction: Direction) -> LabeledGegenbauer {
    let mut table = recurrence_table(m + n, direction);
    let poly = table.remove(&(m, n)).expect("entry present");
    labeled(m, n, poly, direction.method())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::Weight;
    use crate::csoperator::eigensolve;
    use crate::scalar::{rat, UniPoly};

    fn kr(num: &[i64], den: &[i64]) -> KappaRational {
        KappaRational::normalize(UniPoly::from_ints(num), UniPoly::from_ints(den)).unwrap()
    }

    fn z(a: u32, b: u32) -> BiPoly {
        BiPoly::monomial(Weight::new(a, b), KappaRational::one())
    }

    #[test]
    fn coeff_a_examples() {
        assert!(coeff_a(1, 1).is_zero());
        assert!(coeff_a(5, 0).is_zero());
        // (κ+3) / ((κ+1)²(2κ+3))
        assert_eq!(coeff_a(2, 1), kr(&[3, 1], &[3, 8, 7, 2]));
    }

    #[test]
    fn coeff_b_examples() {
        assert!(coeff_b(4, 1).is_zero());
        assert_eq!(coeff_b(0, 2), kr(&[-2], &[1, 1]));
        assert_eq!(coeff_b(1, 2), kr(&[-6, -2], &[2, 3, 1]));
    }

    #[test]
    fn coeff_a_tilde_examples() {
        assert!(coeff_a_tilde(0, 3).is_zero());
        assert_eq!(coeff_a_tilde(1, 0), kr(&[3], &[1, 2]));
        // (κ+2)(3κ+1) / ((κ+1)²(2κ+1))
        assert_eq!(coeff_a_tilde(1, 1), kr(&[2, 7, 3], &[1, 4, 5, 2]));
    }

    #[test]
    fn coeff_c_examples() {
        assert!(coeff_c(0).is_zero());
        assert_eq!(coeff_c(1), kr(&[2], &[1, 1]));
        assert_eq!(coeff_c(2), kr(&[2, 4], &[2, 3, 1]));
    }

    #[test]
    fn vanishing_pattern_matches_negative_indices() {
        for m in -1..=10 {
            for n in -1..=10 {
                assert_eq!(coeff_a(m, n).is_zero(), m < 2 || n < 1, "A({m},{n})");
                assert_eq!(coeff_b(m, n).is_zero(), n < 2, "B({m},{n})");
                assert_eq!(coeff_a_tilde(m, n).is_zero(), m <= 0 || n < 0, "ã({m},{n})");
            }
            assert_eq!(coeff_c(m).is_zero(), m <= 0, "c({m})");
        }
    }

    #[test]
    fn jack_row_low_entries() {
        let row = jack_row(3);
        assert_eq!(row[0].poly, BiPoly::one());
        assert_eq!(row[1].poly, BiPoly::z1());
        assert_eq!(row[2].poly, &z(2, 0) - &z(0, 1).scale(&kr(&[2], &[1, 1])));
        let p30 = &(&z(3, 0) - &z(1, 1).scale(&kr(&[6], &[2, 1])))
            + &BiPoly::constant(kr(&[6], &[2, 3, 1]));
        assert_eq!(row[3].poly, p30);
    }

    #[test]
    fn a1_row_low_entries() {
        let row = a1_row(2);
        assert_eq!(row[0], BiPoly::one());
        assert_eq!(row[1], BiPoly::z1());
        assert_eq!(row[2], &z(2, 0) - &BiPoly::constant(kr(&[2], &[1, 1])));
    }

    #[test]
    fn a1_row_matches_classical_normalization() {
        // C_2^κ(x) = 2κ(1+κ)x² − κ, so 2!/(κ)_2 · C_2^κ(z/2) = z² − 2/(κ+1);
        // check at κ = 3/2, z = 5
        let k = rat(3, 2);
        let c2 = |x: Rational| rat(2, 1) * &k * (rat(1, 1) + &k) * &x * &x - &k;
        let expected = rat(2, 1) / (&k * (&k + rat(1, 1))) * c2(rat(5, 2));
        let got = a1_row(2)[2].specialize(&k).unwrap();
        let value: Rational = got
            .terms()
            .map(|(w, c)| c.as_constant().unwrap() * Rational::from_integer(5.into()).pow(w.a as i32))
            .sum();
        assert_eq!(value, expected);
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(build_by_recurrence(0, 1, Direction::LowerN).poly, BiPoly::z2());
        assert_eq!(build_by_recurrence(1, 1, Direction::LowerN).poly, eigensolve(1, 1).poly);
        assert_eq!(build_by_recurrence(4, 0, Direction::LowerN).poly, jack_row(4)[4].poly);
        assert_eq!(build_by_recurrence(1, 0, Direction::LowerM).poly, BiPoly::z1());
    }

    #[test]
    fn both_directions_agree_with_eigensolver() {
        let lower_n = recurrence_table(6, Direction::LowerN);
        let lower_m = recurrence_table(6, Direction::LowerM);
        for ((m, n), p) in &lower_n {
            let e = eigensolve(*m, *n).poly;
            assert_eq!(p, &e, "lower-n ({m},{n})");
            assert_eq!(&lower_m[&(*m, *n)], &e, "lower-m ({m},{n})");
            assert_eq!(lower_n[&(*n, *m)].swap_vars(), lower_m[&(*m, *n)]);
        }
    }
}
