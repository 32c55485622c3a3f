//! Tables of constructed polynomials keyed by `(m, n)`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::bipoly::BiPoly;
use crate::csoperator::{eigensolve, KappaMode, LabeledGegenbauer, Method};
use crate::families::{jack_row, recurrence_table, Direction};

/// Every `P_{m,n}^κ` with `m + n ≤ max_degree` built by one method (for
/// [`Method::GenFunc`], only the row `n = 0`). Entries are symbolic in κ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    method: Method,
    max_degree: u32,
    polys: BTreeMap<(u32, u32), BiPoly>,
}

/// Index pairs with `m + n ≤ max_degree`, by total degree then `m` descending.
pub fn pairs_up_to(max_degree: u32) -> Vec<(u32, u32)> {
    (0..=max_degree)
        .flat_map(|d| (0..=d).rev().map(move |m| (m, d - m)))
        .collect()
}

impl Catalog {
    /// Eigensolves run on the current rayon pool.
    pub fn build(method: Method, max_degree: u32) -> Self {
        let polys = match method {
            Method::Eigensolver => pairs_up_to(max_degree)
                .into_par_iter()
                .map(|(m, n)| ((m, n), eigensolve(m, n).poly))
                .collect(),
            Method::Recurrence => recurrence_table(max_degree, Direction::LowerN),
            Method::TwinRecurrence => recurrence_table(max_degree, Direction::LowerM),
            Method::GenFunc => jack_row(max_degree)
                .into_iter()
                .map(|p| ((p.m, 0), p.poly))
                .collect(),
        };
        Catalog {
            method,
            max_degree,
            polys,
        }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// `None` for negative indices or pairs the catalog does not hold.
    pub fn get(&self, m: i64, n: i64) -> Option<&BiPoly> {
        let m = u32::try_from(m).ok()?;
        let n = u32::try_from(n).ok()?;
        self.polys.get(&(m, n))
    }

    /// `P_{m,n}`, or zero when an index is negative.
    ///
    /// Panics if a nonnegative pair is missing; callers stay inside the
    /// degree bound the catalog was built for.
    pub fn lookup(&self, m: i64, n: i64) -> BiPoly {
        if m < 0 || n < 0 {
            return BiPoly::zero();
        }
        self.get(m, n)
            .unwrap_or_else(|| panic!("({m},{n}) not in {} catalog", self.method))
            .clone()
    }

    pub fn contains(&self, m: u32, n: u32) -> bool {
        self.polys.contains_key(&(m, n))
    }

    pub fn labeled(&self, m: u32, n: u32) -> Option<LabeledGegenbauer> {
        self.polys.get(&(m, n)).map(|p| LabeledGegenbauer {
            m,
            n,
            poly: p.clone(),
            method: self.method,
            kappa: KappaMode::Symbolic,
        })
    }

    /// Overwrites an entry. Used to feed deliberately corrupted inputs to the
    /// checks.
    pub fn insert(&mut self, m: u32, n: u32, poly: BiPoly) {
        self.polys.insert((m, n), poly);
    }

    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), &BiPoly)> {
        self.polys.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_enumeration() {
        assert_eq!(pairs_up_to(0), vec![(0, 0)]);
        assert_eq!(
            pairs_up_to(2),
            vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        );
        assert_eq!(pairs_up_to(8).len(), 45);
    }

    #[test]
    fn genfunc_catalog_is_a_row() {
        let c = Catalog::build(Method::GenFunc, 4);
        assert_eq!(c.len(), 5);
        assert!(c.contains(4, 0));
        assert!(!c.contains(0, 1));
    }

    #[test]
    fn lookup_negative_is_zero() {
        let c = Catalog::build(Method::Eigensolver, 1);
        assert!(c.lookup(-1, 0).is_zero());
        assert_eq!(c.lookup(0, 0), BiPoly::one());
    }
}
