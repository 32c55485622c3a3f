//! Exact certification of the eigen-equation, the derivative-shift formulas,
//! the recurrences and the coefficient identities behind them.
//!
//! A check passes iff its residual is exactly zero in `Q(κ)`; there are no
//! tolerances.

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bipoly::{Axis, BiPoly};
use crate::catalog::{pairs_up_to, Catalog};
use crate::csoperator::{apply_operator, eigenvalue, Method};
use crate::families::{a1_row, coeff_a, coeff_a_tilde, coeff_b, coeff_c, Direction};
use crate::scalar::KappaRational;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check_name: String,
    pub indices: Vec<i64>,
    pub status: Status,
    /// `"0"` on pass, otherwise the canonical form of the residual.
    pub residual_description: String,
    #[serde(rename = "elapsed_ns", serialize_with = "nanos")]
    pub elapsed: Duration,
}

fn nanos<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_nanos().min(u64::MAX as u128) as u64)
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Anything a check can test for exact vanishing.
trait Residual {
    fn vanishes(&self) -> bool;
    fn describe(&self) -> String;
}

impl Residual for BiPoly {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        format!("{self:?}")
    }
}

impl Residual for KappaRational {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

fn timed<R: Residual>(name: &str, indices: Vec<i64>, f: impl FnOnce() -> R) -> CheckResult {
    let start = Instant::now();
    let residual = f();
    let elapsed = start.elapsed();
    let (status, residual_description) = if residual.vanishes() {
        (Status::Pass, "0".to_string())
    } else {
        (Status::Fail, residual.describe())
    };
    CheckResult {
        check_name: name.to_string(),
        indices,
        status,
        residual_description,
        elapsed,
    }
}

/// The closed-form coefficients the checks use. Swappable so that tests can
/// prove the checks are not vacuous.
#[derive(Clone, Copy)]
pub struct CoefficientSet {
    pub a: fn(i64, i64) -> KappaRational,
    pub b: fn(i64, i64) -> KappaRational,
    pub a_tilde: fn(i64, i64) -> KappaRational,
    pub c: fn(i64) -> KappaRational,
}

impl CoefficientSet {
    pub fn standard() -> Self {
        CoefficientSet {
            a: coeff_a,
            b: coeff_b,
            a_tilde: coeff_a_tilde,
            c: coeff_c,
        }
    }
}

impl Default for CoefficientSet {
    fn default() -> Self {
        Self::standard()
    }
}

impl fmt::Debug for CoefficientSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("CoefficientSet")
    }
}

fn idx(m: u32, n: u32) -> Vec<i64> {
    vec![m as i64, n as i64]
}

/// `Δ^κ P − ε_{m,n}(κ) P = 0`.
pub fn check_eigen(m: u32, n: u32, poly: &BiPoly) -> CheckResult {
    timed("eigen", idx(m, n), || {
        &apply_operator(poly) - &poly.scale(&eigenvalue(m, n))
    })
}

fn shifted(source: &Catalog, m: i64, n: i64) -> BiPoly {
    source.lookup(m, n).shift_kappa(1)
}

/// `∂P_{m,n}^κ/∂z1 = m P_{m−1,n}^{κ+1} + A_{m,n} P_{m−2,n−1}^{κ+1} + B_{m,n} P_{m,n−2}^{κ+1}`.
pub fn check_derivative_z1(m: u32, n: u32, source: &Catalog, k: &CoefficientSet) -> CheckResult {
    timed("derivative_z1", idx(m, n), || {
        let (mi, ni) = (m as i64, n as i64);
        let lhs = source.lookup(mi, ni).partial(Axis::Z1);
        let rhs = &(&shifted(source, mi - 1, ni).scale(&KappaRational::from_int(mi))
            + &shifted(source, mi - 2, ni - 1).scale(&(k.a)(mi, ni)))
            + &shifted(source, mi, ni - 2).scale(&(k.b)(mi, ni));
        &lhs - &rhs
    })
}

/// `∂P_{m,n}^κ/∂z2 = n P_{m,n−1}^{κ+1} + A_{n,m} P_{m−1,n−2}^{κ+1} + B_{n,m} P_{m−2,n}^{κ+1}`.
pub fn check_derivative_z2(m: u32, n: u32, source: &Catalog, k: &CoefficientSet) -> CheckResult {
    timed("derivative_z2", idx(m, n), || {
        let (mi, ni) = (m as i64, n as i64);
        let lhs = source.lookup(mi, ni).partial(Axis::Z2);
        let rhs = &(&shifted(source, mi, ni - 1).scale(&KappaRational::from_int(ni))
            + &shifted(source, mi - 1, ni - 2).scale(&(k.a)(ni, mi)))
            + &shifted(source, mi - 2, ni).scale(&(k.b)(ni, mi));
        &lhs - &rhs
    })
}

/// The five scalar identities that close the induction on `n`: three
/// combinations that vanish and two that collapse to `A_{m,n}` and `B_{m,n}`.
pub fn check_identity_set(m: i64, n: i64, k: &CoefficientSet) -> Vec<CheckResult> {
    let a = |p: i64, q: i64| (k.a)(p, q);
    let b = |p: i64, q: i64| (k.b)(p, q);
    let at = |p: i64, q: i64| (k.a_tilde)(p, q);
    let at1 = |p: i64, q: i64| (k.a_tilde)(p, q).shift_kappa(1);
    let c = |p: i64| (k.c)(p);
    let c1 = |p: i64| (k.c)(p).shift_kappa(1);
    let int = KappaRational::from_int;
    let indices = vec![m, n];
    vec![
        timed("identity_i", indices.clone(), || {
            &a(m, n - 1) * &at1(m - 2, n - 2) - &a(m - 1, n - 1) * &at(m, n - 1)
        }),
        timed("identity_ii", indices.clone(), || {
            &b(m, n - 1) * &c1(n - 3) - &b(m + 1, n - 2) * &c(n - 1)
        }),
        timed("identity_iii", indices.clone(), || {
            -(&at(m, n - 1) * &b(m - 1, n - 1)) + &at1(m, n - 3) * &b(m, n - 1)
                + &a(m, n - 1) * &c1(n - 2)
                - &a(m + 1, n - 2) * &c(n - 1)
        }),
        timed("identity_iv", indices.clone(), || {
            a(m, n - 1) + &int(m) * &at1(m - 1, n - 1) - &int(m - 1) * &at(m, n - 1) - a(m, n)
        }),
        timed("identity_v", indices, || {
            b(m, n - 1) - &int(m + 1) * &c(n - 1) + &int(m) * &c1(n - 1) - b(m, n)
        }),
    ]
}

/// `swap(P_{m,n}) = P_{n,m}`.
pub fn check_duality(m: u32, n: u32, source: &Catalog) -> CheckResult {
    timed("duality", idx(m, n), || {
        &source.lookup(m as i64, n as i64).swap_vars() - &source.lookup(n as i64, m as i64)
    })
}

/// All sources that hold `(m, n)` agree; the residual is the first
/// disagreement with `sources[0]`.
pub fn check_cross_method(m: u32, n: u32, sources: &[&Catalog]) -> CheckResult {
    timed("cross_method", idx(m, n), || {
        let mut held = sources.iter().filter_map(|s| s.get(m as i64, n as i64));
        let Some(first) = held.next() else {
            return BiPoly::zero();
        };
        held.map(|p| p - first)
            .find(|r| !r.is_zero())
            .unwrap_or_default()
    })
}

/// The recurrence in `direction`, applied to the polynomials of `source`.
pub fn check_recurrence(
    m: u32,
    n: u32,
    direction: Direction,
    source: &Catalog,
    k: &CoefficientSet,
) -> CheckResult {
    let name = match direction {
        Direction::LowerN => "recurrence_lower_n",
        Direction::LowerM => "recurrence_lower_m",
    };
    timed(name, idx(m, n), || {
        let (mi, ni) = (m as i64, n as i64);
        let rhs = match direction {
            Direction::LowerN => {
                &(&(&BiPoly::z2() * &source.lookup(mi, ni - 1))
                    - &source.lookup(mi - 1, ni - 1).scale(&(k.a_tilde)(mi, ni - 1)))
                    - &source.lookup(mi + 1, ni - 2).scale(&(k.c)(ni - 1))
            }
            Direction::LowerM => {
                &(&(&BiPoly::z1() * &source.lookup(mi - 1, ni))
                    - &source.lookup(mi - 1, ni - 1).scale(&(k.a_tilde)(ni, mi - 1)))
                    - &source.lookup(mi - 2, ni + 1).scale(&(k.c)(mi - 1))
            }
        };
        &source.lookup(mi, ni) - &rhs
    })
}

/// `dP_m^κ/dz = m P_{m−1}^{κ+1}` on an A1 row (`z` stored as `z1`).
pub fn check_a1_derivative(m: u32, row: &[BiPoly]) -> CheckResult {
    timed("a1_derivative", vec![m as i64], || {
        let i = m as usize;
        &row[i].partial(Axis::Z1)
            - &row[i - 1]
                .shift_kappa(1)
                .scale(&KappaRational::from_int(m as i64))
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Eigen,
    Derivative,
    Recurrence,
    Identities,
    Duality,
    Cross,
    A1,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 8] = [
        "eigen",
        "derivative",
        "recurrence",
        "identities",
        "duality",
        "cross",
        "a1",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eigen => "eigen",
            Suite::Derivative => "derivative",
            Suite::Recurrence => "recurrence",
            Suite::Identities => "identities",
            Suite::Duality => "duality",
            Suite::Cross => "cross",
            Suite::A1 => "a1",
            Suite::All => "all",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        use Suite::*;
        [Eigen, Derivative, Recurrence, Identities, Duality, Cross, A1, All]
            .into_iter()
            .find(|x| x.name() == s)
    }

    fn includes(self, other: Suite) -> bool {
        self == other || self == Suite::All
    }
}

/// Construction feeding the polynomial checks.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Feed {
    #[default]
    Eigensolver,
    Recurrence,
    TwinRecurrence,
}

impl Feed {
    pub fn method(self) -> Method {
        match self {
            Feed::Eigensolver => Method::Eigensolver,
            Feed::Recurrence => Method::Recurrence,
            Feed::TwinRecurrence => Method::TwinRecurrence,
        }
    }
}

/// Which checks to run and over which indices. A missing bound means an
/// empty range for the checks that need it.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Polynomial checks over `m + n ≤ max_degree`; the A1 check over
    /// `1 ≤ m ≤ max_degree`.
    pub max_degree: Option<u32>,
    /// Identity grid `0 ≤ m ≤ m_max`, `0 ≤ n ≤ n_max`.
    pub m_max: Option<u32>,
    pub n_max: Option<u32>,
    pub feed: Feed,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            max_degree: None,
            m_max: None,
            n_max: None,
            feed: Feed::default(),
            jobs: None,
        }
    }

    pub fn max_degree(mut self, d: u32) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn grid(mut self, m_max: u32, n_max: u32) -> Self {
        self.m_max = Some(m_max);
        self.n_max = Some(n_max);
        self
    }

    pub fn feed(mut self, feed: Feed) -> Self {
        self.feed = feed;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite_name: String,
    pub engine_version: String,
    pub config: SuiteConfig,
    pub notes: Vec<String>,
    pub summary: Summary,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Upper bound on the degree in `(m, n)` of the numerators of the five
/// identity residuals after clearing denominators.
pub const IDENTITY_NUMERATOR_DEGREE_BOUND: u32 = 20;

fn grid_note(m_max: u32, n_max: u32) -> String {
    let side = m_max.min(n_max) + 1;
    let conclusion = if side > IDENTITY_NUMERATOR_DEGREE_BOUND {
        "the grid side exceeds that bound, so vanishing on the grid implies vanishing for all integer indices"
    } else {
        "the grid side does not exceed that bound, so the result certifies the grid points only"
    };
    format!(
        "identity residuals checked per integer pair on 0..={m_max} x 0..={n_max} with symbolic kappa; \
         after clearing denominators each residual is a polynomial in (m, n) of degree below {IDENTITY_NUMERATOR_DEGREE_BOUND}; \
         {conclusion}"
    )
}

enum Task {
    Eigen(u32, u32),
    DerivZ1(u32, u32),
    DerivZ2(u32, u32),
    Recurrence(u32, u32, Direction),
    Identities(i64, i64),
    Duality(u32, u32),
    Cross(u32, u32),
    A1(u32),
}

/// Runs the configured checks. Results are sorted by check name, then
/// indices, independent of scheduling.
pub fn run_suite(config: &SuiteConfig) -> VerificationReport {
    let run = || run_inner(config);
    let results = match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        None => run(),
    };
    let passed = results.iter().filter(|r| r.passed()).count();
    let mut notes = Vec::new();
    if config.suite.includes(Suite::Identities) {
        if let (Some(mm), Some(nm)) = (config.m_max, config.n_max) {
            notes.push(grid_note(mm, nm));
        }
    }
    VerificationReport {
        suite_name: config.suite.name().to_string(),
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        notes,
        summary: Summary {
            total: results.len(),
            passed,
            failed: results.len() - passed,
        },
        results,
    }
}

fn run_inner(config: &SuiteConfig) -> Vec<CheckResult> {
    let suite = config.suite;
    let mut tasks = Vec::new();
    let pairs = config.max_degree.map(pairs_up_to).unwrap_or_default();
    for &(m, n) in &pairs {
        if suite.includes(Suite::Eigen) {
            tasks.push(Task::Eigen(m, n));
        }
        if suite.includes(Suite::Derivative) {
            tasks.push(Task::DerivZ1(m, n));
            tasks.push(Task::DerivZ2(m, n));
        }
        if suite.includes(Suite::Recurrence) {
            if n >= 1 {
                tasks.push(Task::Recurrence(m, n, Direction::LowerN));
            }
            if m >= 1 {
                tasks.push(Task::Recurrence(m, n, Direction::LowerM));
            }
        }
        if suite.includes(Suite::Duality) {
            tasks.push(Task::Duality(m, n));
        }
        if suite.includes(Suite::Cross) {
            tasks.push(Task::Cross(m, n));
        }
    }
    if suite.includes(Suite::A1) {
        if let Some(d) = config.max_degree {
            tasks.extend((1..=d).map(Task::A1));
        }
    }
    if suite.includes(Suite::Identities) {
        if let (Some(mm), Some(nm)) = (config.m_max, config.n_max) {
            for m in 0..=mm as i64 {
                tasks.extend((0..=nm as i64).map(|n| Task::Identities(m, n)));
            }
        }
    }
    if tasks.is_empty() {
        return Vec::new();
    }

    let degree = config.max_degree.unwrap_or(0);
    let needs_polys = !pairs.is_empty()
        && [Suite::Eigen, Suite::Derivative, Suite::Recurrence, Suite::Duality, Suite::Cross]
            .into_iter()
            .any(|s| suite.includes(s));
    let feed = needs_polys.then(|| Catalog::build(config.feed.method(), degree));
    let cross = (needs_polys && suite.includes(Suite::Cross)).then(|| {
        Method::ALL
            .into_par_iter()
            .map(|m| {
                if m == config.feed.method() {
                    feed.clone().expect("feed built")
                } else {
                    Catalog::build(m, degree)
                }
            })
            .collect::<Vec<_>>()
    });
    let a1 = suite.includes(Suite::A1).then(|| a1_row(degree));
    let coeffs = CoefficientSet::standard();

    let mut results: Vec<CheckResult> = tasks
        .par_iter()
        .flat_map_iter(|task| {
            let feed = || feed.as_ref().expect("feed built");
            match *task {
                Task::Eigen(m, n) => vec![check_eigen(m, n, &feed().lookup(m as i64, n as i64))],
                Task::DerivZ1(m, n) => vec![check_derivative_z1(m, n, feed(), &coeffs)],
                Task::DerivZ2(m, n) => vec![check_derivative_z2(m, n, feed(), &coeffs)],
                Task::Recurrence(m, n, dir) => {
                    vec![check_recurrence(m, n, dir, feed(), &coeffs)]
                }
                Task::Identities(m, n) => check_identity_set(m, n, &coeffs),
                Task::Duality(m, n) => vec![check_duality(m, n, feed())],
                Task::Cross(m, n) => {
                    let sources: Vec<&Catalog> = cross.as_ref().expect("built").iter().collect();
                    vec![check_cross_method(m, n, &sources)]
                }
                Task::A1(m) => vec![check_a1_derivative(m, a1.as_ref().expect("built"))],
            }
        })
        .collect();
    results.sort_by(|x, y| {
        x.check_name
            .cmp(&y.check_name)
            .then_with(|| x.indices.cmp(&y.indices))
    });
    results
}
