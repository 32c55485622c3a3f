//! Wall-clock timing of the construction methods.

use std::fmt::Write;
use std::time::{Duration, Instant};

use ggp_core::catalog::pairs_up_to;
use ggp_core::csoperator::eigensolve;
use ggp_core::families::{build_by_recurrence, jack_row, Direction};
use ggp_core::Method;

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub m: u32,
    pub n: u32,
    pub terms: usize,
    /// One entry per requested method; `None` where the method does not apply.
    pub times: Vec<Option<Duration>>,
}

fn time_one(method: Method, m: u32, n: u32) -> Option<(Duration, usize)> {
    let start = Instant::now();
    let terms = match method {
        Method::Eigensolver => eigensolve(m, n).poly.len(),
        Method::Recurrence => build_by_recurrence(m, n, Direction::LowerN).poly.len(),
        Method::TwinRecurrence => build_by_recurrence(m, n, Direction::LowerM).poly.len(),
        Method::GenFunc if n == 0 => jack_row(m)[m as usize].poly.len(),
        Method::GenFunc => return None,
    };
    Some((start.elapsed(), terms))
}

/// One row per `(m, n)` with `m + n ≤ max_degree`, in catalog order.
pub fn run(max_degree: u32, methods: &[Method]) -> Vec<BenchRow> {
    pairs_up_to(max_degree)
        .into_iter()
        .map(|(m, n)| {
            let mut terms = 0;
            let times = methods
                .iter()
                .map(|&meth| {
                    time_one(meth, m, n).map(|(t, k)| {
                        terms = k;
                        t
                    })
                })
                .collect();
            BenchRow { m, n, terms, times }
        })
        .collect()
}

pub fn render(rows: &[BenchRow], methods: &[Method]) -> String {
    let mut out = String::new();
    write!(out, "{:>3} {:>3} {:>6}", "m", "n", "terms").unwrap();
    for meth in methods {
        write!(out, " {:>18}", format!("{}_us", meth.tag())).unwrap();
    }
    out.push('\n');
    for r in rows {
        write!(out, "{:>3} {:>3} {:>6}", r.m, r.n, r.terms).unwrap();
        for t in &r.times {
            match t {
                Some(d) => write!(out, " {:>18}", d.as_micros()).unwrap(),
                None => write!(out, " {:>18}", "-").unwrap(),
            }
        }
        out.push('\n');
    }
    out
}
