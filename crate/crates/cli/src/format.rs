//! Human-readable renderings. Only the JSON encoding is a stable interface.

use ggp_core::{BiPoly, KappaRational, Weight};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Style {
    Text,
    Latex,
}

/// `num / den` scaled to coprime integer coefficient vectors (ascending),
/// with a positive leading denominator coefficient.
fn integer_form(c: &KappaRational) -> (Vec<BigInt>, Vec<BigInt>) {
    let lcm = c
        .num()
        .coeffs()
        .iter()
        .chain(c.den().coeffs())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scale = |v: &[ggp_core::Rational]| -> Vec<BigInt> {
        v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
    };
    let mut num = scale(c.num().coeffs());
    let mut den = scale(c.den().coeffs());
    let g = num
        .iter()
        .chain(&den)
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        num.iter_mut().for_each(|x| *x /= &g);
        den.iter_mut().for_each(|x| *x /= &g);
    }
    (num, den)
}

fn kappa_poly(v: &[BigInt], style: Style) -> String {
    let k = match style {
        Style::Text => "k",
        Style::Latex => "\\kappa",
    };
    let mut out = String::new();
    for (d, c) in v.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        match (out.is_empty(), neg, style) {
            (true, true, _) => out.push('-'),
            (true, false, _) => {}
            (false, true, Style::Text) => out.push_str(" - "),
            (false, false, Style::Text) => out.push_str(" + "),
            (false, true, Style::Latex) => out.push('-'),
            (false, false, Style::Latex) => out.push('+'),
        }
        let power = match (d, style) {
            (0, _) => String::new(),
            (1, _) => k.to_string(),
            (_, Style::Text) => format!("{k}^{d}"),
            (_, Style::Latex) => format!("{k}^{{{d}}}"),
        };
        let mul = if style == Style::Text { "*" } else { "" };
        if power.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{abs}{mul}{power}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn monomial(w: Weight, style: Style) -> String {
    let var = |i: u32, e: u32| match (style, e) {
        (_, 0) => String::new(),
        (Style::Text, 1) => format!("z{i}"),
        (Style::Text, _) => format!("z{i}^{e}"),
        (Style::Latex, 1) => format!("z_{{{i}}}"),
        (Style::Latex, _) => format!("z_{{{i}}}^{{{e}}}"),
    };
    let parts: Vec<String> = [var(1, w.a), var(2, w.b)]
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    match style {
        Style::Text => parts.join("*"),
        Style::Latex => parts.concat(),
    }
}

fn nonzero_terms(v: &[BigInt]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

/// Magnitude of a coefficient whose numerator has a positive leading term.
fn magnitude(num: &[BigInt], den: &[BigInt], style: Style, has_mono: bool) -> String {
    let den_is_one = den.len() == 1 && den[0].is_one();
    if den_is_one {
        let body = kappa_poly(num, style);
        if has_mono && nonzero_terms(num) > 1 {
            return match style {
                Style::Text => format!("({body})"),
                Style::Latex => format!("\\left({body}\\right)"),
            };
        }
        return body;
    }
    match style {
        Style::Latex => format!(
            "\\frac{{{}}}{{{}}}",
            kappa_poly(num, style),
            kappa_poly(den, style)
        ),
        Style::Text => {
            let wrap = |v: &[BigInt]| {
                let s = kappa_poly(v, style);
                if nonzero_terms(v) > 1 || v.len() > 1 {
                    format!("({s})")
                } else {
                    s
                }
            };
            let frac = format!("{}/{}", wrap(num), wrap(den));
            if has_mono {
                format!("({frac})")
            } else {
                frac
            }
        }
    }
}

/// Renders a polynomial in export order, e.g. `z1*z2 - 3/(2*k + 1)` or
/// `z_{1}z_{2} - \frac{3}{2\kappa+1}`.
pub fn render(p: &BiPoly, style: Style) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (w, c) in p.terms() {
        let (mut num, den) = integer_form(c);
        let neg = c.leading_is_negative();
        if neg {
            num.iter_mut().for_each(|x| *x = -x.clone());
        }
        let mono = monomial(w, style);
        let is_one = num.len() == 1 && num[0].is_one() && den.len() == 1 && den[0].is_one();
        let body = if mono.is_empty() {
            magnitude(&num, &den, style, false)
        } else if is_one {
            mono
        } else {
            let mag = magnitude(&num, &den, style, true);
            match style {
                Style::Text => format!("{mag}*{mono}"),
                Style::Latex => format!("{mag}{mono}"),
            }
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ggp_core::csoperator::{eigensolve, eigensolve_specialized};
    use ggp_core::scalar::rat;

    #[test]
    fn latex_p11() {
        assert_eq!(
            render(&eigensolve(1, 1).poly, Style::Latex),
            "z_{1}z_{2} - \\frac{3}{2\\kappa+1}"
        );
    }

    #[test]
    fn text_forms() {
        assert_eq!(render(&eigensolve(0, 0).poly, Style::Text), "1");
        assert_eq!(render(&eigensolve(1, 1).poly, Style::Text), "z1*z2 - 3/(2*k + 1)");
        assert_eq!(
            render(&eigensolve(3, 0).poly, Style::Text),
            "z1^3 - (6/(k + 2))*z1*z2 + 6/(k^2 + 3*k + 2)"
        );
        let p = eigensolve_specialized(2, 0, &rat(1, 1), false).unwrap();
        assert_eq!(render(&p.poly, Style::Text), "z1^2 - z2");
    }

    #[test]
    fn fractional_constants() {
        let p = eigensolve_specialized(2, 0, &rat(2, 1), false).unwrap();
        assert_eq!(render(&p.poly, Style::Text), "z1^2 - (2/3)*z2");
        assert_eq!(render(&p.poly, Style::Latex), "z_{1}^{2} - \\frac{2}{3}z_{2}");
    }
}
