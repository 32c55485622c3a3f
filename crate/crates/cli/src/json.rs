//! Deterministic JSON encoding of constructed polynomials.
//!
//! ```json
//! {"family":"A2","m":1,"n":1,"kappa":{"kind":"symbolic"},"method":"eigensolver",
//!  "terms":[{"e1":1,"e2":1,"num":["1"],"den":["1"]},
//!           {"e1":0,"e2":0,"num":["-3/2"],"den":["1/2","1"]}]}
//! ```
//!
//! `num`/`den` are the κ-polynomial coefficients in ascending degree, each an
//! exact rational string; the denominator is monic. Terms are listed by
//! descending total degree, then descending `e1`.

use ggp_core::scalar::parse_rational;
use ggp_core::{BiPoly, KappaMode, KappaRational, LabeledGegenbauer, Method, UniPoly, Weight};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported family {0:?}")]
    Family(String),
    #[error("unknown method {0:?}")]
    Method(String),
    #[error("bad coefficient: {0}")]
    Coefficient(String),
}

#[derive(Serialize, Deserialize)]
struct Document {
    family: String,
    m: u32,
    n: u32,
    kappa: Kappa,
    method: String,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Kappa {
    Symbolic,
    Rational { value: String },
}

#[derive(Serialize, Deserialize)]
struct Term {
    e1: u32,
    e2: u32,
    num: Vec<String>,
    den: Vec<String>,
}

fn coeff_strings(p: &UniPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn document(p: &LabeledGegenbauer) -> Document {
    Document {
        family: "A2".to_string(),
        m: p.m,
        n: p.n,
        kappa: match &p.kappa {
            KappaMode::Symbolic => Kappa::Symbolic,
            KappaMode::Specialized(r) => Kappa::Rational {
                value: r.to_string(),
            },
        },
        method: p.method.tag().to_string(),
        terms: p
            .poly
            .terms()
            .map(|(w, c)| Term {
                e1: w.a,
                e2: w.b,
                num: coeff_strings(c.num()),
                den: coeff_strings(c.den()),
            })
            .collect(),
    }
}

/// Compact, byte-deterministic encoding.
pub fn export_json(p: &LabeledGegenbauer) -> String {
    serde_json::to_string(&document(p)).expect("document serializes")
}

fn parse_unipoly(v: &[String]) -> Result<UniPoly, ParseError> {
    v.iter()
        .map(|s| parse_rational(s).map_err(|e| ParseError::Coefficient(e.to_string())))
        .collect::<Result<Vec<_>, _>>()
        .map(UniPoly::new)
}

pub fn parse_json(text: &str) -> Result<LabeledGegenbauer, ParseError> {
    let doc: Document = serde_json::from_str(text)?;
    if doc.family != "A2" {
        return Err(ParseError::Family(doc.family));
    }
    let method = Method::from_tag(&doc.method).ok_or(ParseError::Method(doc.method))?;
    let kappa = match doc.kappa {
        Kappa::Symbolic => KappaMode::Symbolic,
        Kappa::Rational { value } => KappaMode::Specialized(
            parse_rational(&value).map_err(|e| ParseError::Coefficient(e.to_string()))?,
        ),
    };
    let mut poly = BiPoly::zero();
    for t in doc.terms {
        let c = KappaRational::normalize(parse_unipoly(&t.num)?, parse_unipoly(&t.den)?)
            .map_err(|e| ParseError::Coefficient(e.to_string()))?;
        poly.add_term(Weight::new(t.e1, t.e2), &c);
    }
    Ok(LabeledGegenbauer {
        m: doc.m,
        n: doc.n,
        poly,
        method,
        kappa,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ggp_core::csoperator::{eigensolve, eigensolve_specialized};
    use ggp_core::scalar::rat;

    #[test]
    fn constant_polynomial() {
        let p = eigensolve(0, 0);
        assert_eq!(
            export_json(&p),
            r#"{"family":"A2","m":0,"n":0,"kappa":{"kind":"symbolic"},"method":"eigensolver","terms":[{"e1":0,"e2":0,"num":["1"],"den":["1"]}]}"#
        );
    }

    #[test]
    fn p11_terms() {
        let s = export_json(&eigensolve(1, 1));
        assert!(s.ends_with(
            r#""terms":[{"e1":1,"e2":1,"num":["1"],"den":["1"]},{"e1":0,"e2":0,"num":["-3/2"],"den":["1/2","1"]}]}"#
        ));
    }

    #[test]
    fn specialized_round_trip() {
        let p = eigensolve_specialized(2, 1, &rat(1, 2), false).unwrap();
        let s = export_json(&p);
        assert!(s.contains(r#""kappa":{"kind":"rational","value":"1/2"}"#));
        assert_eq!(parse_json(&s).unwrap(), p);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(parse_json("{").is_err());
        let s = export_json(&eigensolve(1, 0)).replace("\"A2\"", "\"B2\"");
        assert!(matches!(parse_json(&s), Err(ParseError::Family(_))));
        let s = export_json(&eigensolve(1, 0)).replace("eigensolver", "magic");
        assert!(matches!(parse_json(&s), Err(ParseError::Method(_))));
        let s = export_json(&eigensolve(1, 1)).replace("\"1/2\",\"1\"", "\"0\"");
        assert!(matches!(parse_json(&s), Err(ParseError::Coefficient(_))));
    }
}
