//! Parameter profiles, bound checks and exhaustive sweeps.
//!
//! A [`ParameterProfile`] holds the four chromatic parameters of a graph and
//! of its complement. [`check_theorems`] turns a profile into one
//! [`CheckRecord`] per inequality (each lower or upper bound is a separate
//! record), gated by the hypothesis the bound carries. Sweeps run every
//! labeled graph of an order, or every record of a graph6 stream, through the
//! checks and aggregate the results.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::io::BufRead;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::coloring::{variant_chromatic, VariantKind};
use crate::graph::{pair_count, DegreeStats, Graph, GraphError};
use crate::io::{write_graph6, Graph6Reader, StreamError};

/// Largest order accepted by [`enumerate_labeled`].
pub const MAX_SWEEP_ORDER: usize = 8;

/// Masks per work unit in a labeled sweep. Results do not depend on it.
const CHUNK: u64 = 1 << 12;

/// Records per batch when sweeping a stream.
const STREAM_BATCH: usize = 1 << 13;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("sweep order {order} is outside 1..={MAX_SWEEP_ORDER}")]
    OrderOutOfRange { order: usize },
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// The four chromatic parameters and degree data of one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideProfile {
    pub chi: usize,
    pub chi2: usize,
    pub chi_injective: usize,
    pub chi_square: usize,
    pub degrees: DegreeStats,
}

impl SideProfile {
    pub fn compute(g: &Graph) -> Self {
        SideProfile {
            chi: variant_chromatic(g, VariantKind::Proper).value,
            chi2: variant_chromatic(g, VariantKind::TwoProper).value,
            chi_injective: variant_chromatic(g, VariantKind::Injective).value,
            chi_square: variant_chromatic(g, VariantKind::Square).value,
            degrees: g.degree_stats(),
        }
    }

    pub fn value(&self, kind: VariantKind) -> usize {
        match kind {
            VariantKind::Proper => self.chi,
            VariantKind::TwoProper => self.chi2,
            VariantKind::Injective => self.chi_injective,
            VariantKind::Square => self.chi_square,
        }
    }
}

/// Parameters of a graph `G` and of its complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParameterProfile {
    pub order: usize,
    pub graph: SideProfile,
    pub complement: SideProfile,
    /// `Some(name)` when the graph is one of the listed small-order
    /// exceptions (`K2`, `K2-bar`, `P3`, `P3-bar`, `C4`, `C4-bar`).
    pub small_exception: Option<&'static str>,
}

impl ParameterProfile {
    pub fn sum(&self, kind: VariantKind) -> usize {
        self.graph.value(kind) + self.complement.value(kind)
    }

    pub fn product(&self, kind: VariantKind) -> usize {
        self.graph.value(kind) * self.complement.value(kind)
    }
}

/// Computes all eight parameter values exactly.
pub fn evaluate_graph(g: &Graph) -> ParameterProfile {
    let complement = g.complement();
    let graph = SideProfile::compute(g);
    let small_exception = small_exception(g.order(), &graph.degrees.degrees);
    ParameterProfile {
        order: g.order(),
        complement: SideProfile::compute(&complement),
        graph,
        small_exception,
    }
}

/// Names the listed exceptional graph on orders 2 to 4. On these orders the
/// sorted degree sequence determines the isomorphism class of each listed
/// graph.
fn small_exception(order: usize, degrees: &[usize]) -> Option<&'static str> {
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    match (order, sorted.as_slice()) {
        (2, [1, 1]) => Some("K2"),
        (2, [0, 0]) => Some("K2-bar"),
        (3, [1, 1, 2]) => Some("P3"),
        (3, [0, 1, 1]) => Some("P3-bar"),
        (4, [2, 2, 2, 2]) => Some("C4"),
        (4, [1, 1, 1, 1]) => Some("C4-bar"),
        _ => None,
    }
}

/// Exceptions to the injective sum bound on orders at most 4.
const INJ_SUM_EXCEPTIONS: [&str; 2] = ["C4", "C4-bar"];

/// Identifies one bound family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CheckId {
    /// `⌈2√n⌉ ≤ χ(G)+χ(Ḡ) ≤ n+1`.
    #[serde(rename = "NG-CHI-SUM")]
    NgChiSum,
    /// `n ≤ χ(G)χ(Ḡ) ≤ ⌊(n+1)²/4⌋`.
    #[serde(rename = "NG-CHI-PROD")]
    NgChiProd,
    /// `2 ≤ χ₂(G)+χ₂(Ḡ) ≤ n+1`.
    #[serde(rename = "TWOPROP-SUM")]
    TwoPropSum,
    /// `1 ≤ χ₂(G)χ₂(Ḡ) ≤ ⌊(n+1)²/4⌋`.
    #[serde(rename = "TWOPROP-PROD")]
    TwoPropProd,
    /// `Δ(G) ≤ χᵢ(G) ≤ n`.
    #[serde(rename = "INJ-DEG")]
    InjDeg,
    /// `n ≤ χᵢ(G)+χᵢ(Ḡ) ≤ 2n`, lower bound `n+1` for odd `n ≥ 7`; `C4` and
    /// its complement are exempt.
    #[serde(rename = "INJ-SUM")]
    InjSum,
    /// `χᵢ(G)+χᵢ(Ḡ) ≤ 2n-1` for `1 < n < 9`.
    #[serde(rename = "INJ-SUM-STRICT")]
    InjSumStrict,
    /// `n ≤ χᵢ(G)χᵢ(Ḡ) ≤ n²`; the six listed small graphs are exempt.
    #[serde(rename = "INJ-PROD")]
    InjProd,
    /// `n ≥ 5` and `δ ≥ (n+1)/2` imply `χᵢ(G) = n`.
    #[serde(rename = "INJ-LEM4-1")]
    InjLem41,
    /// `n ≥ 5` and `δ = ⌊(n-1)/2⌋` imply `χᵢ(G) ≥ δ+1`.
    #[serde(rename = "INJ-LEM4-2")]
    InjLem42,
    /// Regular graphs, `n ≥ 5`: sum at least `n+1` when `k > n/2` or
    /// `k < (n-2)/2`, at least `n` when `k ∈ {n/2, (n-2)/2}`.
    #[serde(rename = "INJ-LEM5")]
    InjLem5,
    /// `n+1 ≤ χ(G²)+χ(Ḡ²) ≤ 2n`.
    #[serde(rename = "SQ-SUM")]
    SqSum,
    /// `χ(G²)+χ(Ḡ²) ≤ 2n-1` for `2 ≤ n ≤ 4`.
    #[serde(rename = "SQ-SUM-STRICT")]
    SqSumStrict,
    /// `n ≤ χ(G²)χ(Ḡ²) ≤ n²`.
    #[serde(rename = "SQ-PROD")]
    SqProd,
}

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::NgChiSum => "NG-CHI-SUM",
            CheckId::NgChiProd => "NG-CHI-PROD",
            CheckId::TwoPropSum => "TWOPROP-SUM",
            CheckId::TwoPropProd => "TWOPROP-PROD",
            CheckId::InjDeg => "INJ-DEG",
            CheckId::InjSum => "INJ-SUM",
            CheckId::InjSumStrict => "INJ-SUM-STRICT",
            CheckId::InjProd => "INJ-PROD",
            CheckId::InjLem41 => "INJ-LEM4-1",
            CheckId::InjLem42 => "INJ-LEM4-2",
            CheckId::InjLem5 => "INJ-LEM5",
            CheckId::SqSum => "SQ-SUM",
            CheckId::SqSumStrict => "SQ-SUM-STRICT",
            CheckId::SqProd => "SQ-PROD",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Direction of a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// Every record [`check_theorems`] emits, in emission order.
pub const CHECKS: [(CheckId, Side); 24] = [
    (CheckId::NgChiSum, Side::Lower),
    (CheckId::NgChiSum, Side::Upper),
    (CheckId::NgChiProd, Side::Lower),
    (CheckId::NgChiProd, Side::Upper),
    (CheckId::TwoPropSum, Side::Lower),
    (CheckId::TwoPropSum, Side::Upper),
    (CheckId::TwoPropProd, Side::Lower),
    (CheckId::TwoPropProd, Side::Upper),
    (CheckId::InjDeg, Side::Lower),
    (CheckId::InjDeg, Side::Upper),
    (CheckId::InjSum, Side::Lower),
    (CheckId::InjSum, Side::Upper),
    (CheckId::InjSumStrict, Side::Upper),
    (CheckId::InjProd, Side::Lower),
    (CheckId::InjProd, Side::Upper),
    (CheckId::InjLem41, Side::Lower),
    (CheckId::InjLem42, Side::Lower),
    (CheckId::InjLem5, Side::Lower),
    (CheckId::InjLem5, Side::Upper),
    (CheckId::SqSum, Side::Lower),
    (CheckId::SqSum, Side::Upper),
    (CheckId::SqSumStrict, Side::Upper),
    (CheckId::SqProd, Side::Lower),
    (CheckId::SqProd, Side::Upper),
];

/// Outcome of one inequality on one graph.
///
/// `holds` reports the bare inequality whether or not the hypothesis is met;
/// a violation is `applicable && !holds`. `slack` is non-negative exactly
/// when the bound holds and zero when it is attained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: CheckId,
    pub side: Side,
    pub applicable: bool,
    /// The graph is on the explicit small-order exception list for this
    /// check; such records are never applicable.
    pub exception: bool,
    pub holds: bool,
    pub bound: i64,
    pub attained: i64,
    pub slack: i64,
    pub extremal: bool,
}

impl CheckRecord {
    pub fn violated(&self) -> bool {
        self.applicable && !self.holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub order: usize,
    pub records: Vec<CheckRecord>,
}

impl TheoremReport {
    pub fn get(&self, id: CheckId, side: Side) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id && r.side == side)
    }

    pub fn violations(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.violated())
    }

    pub fn all_hold(&self) -> bool {
        self.violations().next().is_none()
    }

    /// One tab-separated line per record:
    /// `check side applicable exception holds bound attained slack extremal witness`.
    pub fn to_text(&self, witness: &str) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.id,
                r.side.as_str(),
                r.applicable,
                r.exception,
                r.holds,
                r.bound,
                r.attained,
                r.slack,
                r.extremal,
                witness
            );
        }
        out
    }
}

/// Smallest integer `s` with `s ≥ 2√n`.
fn ceil_two_sqrt(n: usize) -> usize {
    let target = 4 * n;
    let mut s = (target as f64).sqrt() as usize;
    while s * s < target {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= target {
        s -= 1;
    }
    s
}

struct Builder {
    records: Vec<CheckRecord>,
}

impl Builder {
    fn push(
        &mut self,
        id: CheckId,
        side: Side,
        applicable: bool,
        exception: bool,
        bound: usize,
        attained: usize,
    ) {
        let (bound, attained) = (bound as i64, attained as i64);
        let slack = match side {
            Side::Lower => attained - bound,
            Side::Upper => bound - attained,
        };
        self.records.push(CheckRecord {
            id,
            side,
            applicable: applicable && !exception,
            exception,
            holds: slack >= 0,
            bound,
            attained,
            slack,
            extremal: applicable && !exception && slack == 0,
        });
    }
}

/// Evaluates every bound against `p`.
pub fn check_theorems(p: &ParameterProfile) -> TheoremReport {
    let n = p.order;
    let any = n >= 1;
    let sq_bound = (n + 1) * (n + 1) / 4;
    let mut b = Builder {
        records: Vec::with_capacity(CHECKS.len()),
    };
    use CheckId::*;
    use Side::*;
    use VariantKind as V;

    let chi_sum = p.sum(V::Proper);
    let chi_prod = p.product(V::Proper);
    b.push(NgChiSum, Lower, any, false, ceil_two_sqrt(n), chi_sum);
    b.push(NgChiSum, Upper, any, false, n + 1, chi_sum);
    b.push(NgChiProd, Lower, any, false, n, chi_prod);
    b.push(NgChiProd, Upper, any, false, sq_bound, chi_prod);

    let two_sum = p.sum(V::TwoProper);
    let two_prod = p.product(V::TwoProper);
    b.push(TwoPropSum, Lower, any, false, 2, two_sum);
    b.push(TwoPropSum, Upper, any, false, n + 1, two_sum);
    b.push(TwoPropProd, Lower, any, false, 1, two_prod);
    b.push(TwoPropProd, Upper, any, false, sq_bound, two_prod);

    let inj = p.graph.chi_injective;
    b.push(InjDeg, Lower, any, false, p.graph.degrees.max_degree, inj);
    b.push(InjDeg, Upper, any, false, n, inj);

    let inj_sum = p.sum(V::Injective);
    let inj_prod = p.product(V::Injective);
    let sum_exception = p
        .small_exception
        .is_some_and(|name| INJ_SUM_EXCEPTIONS.contains(&name));
    let prod_exception = p.small_exception.is_some();
    let inj_lower = if n >= 7 && n % 2 == 1 { n + 1 } else { n };
    b.push(InjSum, Lower, any, sum_exception, inj_lower, inj_sum);
    b.push(InjSum, Upper, any, sum_exception, 2 * n, inj_sum);
    b.push(
        InjSumStrict,
        Upper,
        (2..9).contains(&n),
        false,
        (2 * n).saturating_sub(1),
        inj_sum,
    );
    b.push(InjProd, Lower, any, prod_exception, n, inj_prod);
    b.push(InjProd, Upper, any, prod_exception, n * n, inj_prod);

    let delta = p.graph.degrees.min_degree;
    b.push(InjLem41, Lower, n >= 5 && 2 * delta > n, false, n, inj);
    b.push(
        InjLem42,
        Lower,
        n >= 5 && delta == (n.saturating_sub(1)) / 2,
        false,
        delta + 1,
        inj,
    );

    let k = delta;
    let lem5_bound = if 2 * k > n || 2 * k + 2 < n {
        Some(n + 1)
    } else if 2 * k == n || 2 * k + 2 == n {
        Some(n)
    } else {
        None
    };
    let lem5 = n >= 5 && p.graph.degrees.is_regular && lem5_bound.is_some();
    b.push(
        InjLem5,
        Lower,
        lem5,
        false,
        lem5_bound.unwrap_or(n),
        inj_sum,
    );
    b.push(InjLem5, Upper, lem5, false, 2 * n, inj_sum);

    let sq_sum = p.sum(V::Square);
    let sq_prod = p.product(V::Square);
    b.push(SqSum, Lower, any, false, n + 1, sq_sum);
    b.push(SqSum, Upper, any, false, 2 * n, sq_sum);
    b.push(
        SqSumStrict,
        Upper,
        (2..=4).contains(&n),
        false,
        (2 * n).saturating_sub(1),
        sq_sum,
    );
    b.push(SqProd, Lower, any, false, n, sq_prod);
    b.push(SqProd, Upper, any, false, n * n, sq_prod);

    debug_assert!(b
        .records
        .iter()
        .map(|r| (r.id, r.side))
        .eq(CHECKS.iter().copied()));
    TheoremReport {
        order: n,
        records: b.records,
    }
}

/// Every labeled graph on `order` vertices, in ascending edge-mask order
/// (see [`Graph::from_edge_mask`]).
pub fn enumerate_labeled(order: usize) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    check_sweep_order(order)?;
    Ok((0..1u64 << pair_count(order))
        .map(move |m| Graph::from_edge_mask(order, m).expect("order checked")))
}

fn check_sweep_order(order: usize) -> Result<(), VerifyError> {
    if (1..=MAX_SWEEP_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(VerifyError::OrderOutOfRange { order })
    }
}

/// Aggregate of one check over a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub id: CheckId,
    pub side: Side,
    pub applicable: u64,
    pub violations: u64,
    pub extremal: u64,
    pub exceptions: u64,
    /// Exception-listed graphs on which the bare inequality fails.
    pub exception_failures: u64,
    /// Lexicographically smallest graph6 record attaining the bound.
    pub example_extremal: Option<String>,
    pub example_violation: Option<String>,
    /// Every exception-listed graph seen, as graph6.
    pub exception_witnesses: BTreeSet<String>,
}

impl CheckTally {
    fn new(id: CheckId, side: Side) -> Self {
        CheckTally {
            id,
            side,
            applicable: 0,
            violations: 0,
            extremal: 0,
            exceptions: 0,
            exception_failures: 0,
            example_extremal: None,
            example_violation: None,
            exception_witnesses: BTreeSet::new(),
        }
    }

    fn merge(&mut self, other: CheckTally) {
        self.applicable += other.applicable;
        self.violations += other.violations;
        self.extremal += other.extremal;
        self.exceptions += other.exceptions;
        self.exception_failures += other.exception_failures;
        keep_min(&mut self.example_extremal, other.example_extremal);
        keep_min(&mut self.example_violation, other.example_violation);
        self.exception_witnesses.extend(other.exception_witnesses);
    }
}

fn keep_min(slot: &mut Option<String>, candidate: Option<String>) {
    if let Some(c) = candidate {
        match slot {
            Some(s) if *s <= c => {}
            _ => *slot = Some(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Tally {
    graph_count: u64,
    checks: Vec<CheckTally>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            graph_count: 0,
            checks: CHECKS
                .iter()
                .map(|&(id, side)| CheckTally::new(id, side))
                .collect(),
        }
    }

    fn add(&mut self, g: &Graph) {
        let report = check_theorems(&evaluate_graph(g));
        let mut g6: Option<String> = None;
        let mut witness = || {
            g6.get_or_insert_with(|| write_graph6(g).expect("sweep orders fit graph6"))
                .clone()
        };
        self.graph_count += 1;
        for (t, r) in self.checks.iter_mut().zip(&report.records) {
            if r.applicable {
                t.applicable += 1;
            }
            if r.extremal {
                t.extremal += 1;
                let w = witness();
                keep_min(&mut t.example_extremal, Some(w));
            }
            if r.violated() {
                t.violations += 1;
                let w = witness();
                keep_min(&mut t.example_violation, Some(w));
            }
            if r.exception {
                t.exceptions += 1;
                if !r.holds {
                    t.exception_failures += 1;
                }
                t.exception_witnesses.insert(witness());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.graph_count += other.graph_count;
        for (a, b) in self.checks.iter_mut().zip(other.checks) {
            a.merge(b);
        }
        self
    }

    fn into_summary(self, order: usize, elapsed: Duration) -> SweepSummary {
        SweepSummary {
            order,
            graph_count: self.graph_count,
            checks: self.checks,
            elapsed,
        }
    }
}

fn serialize_secs<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Aggregated results of sweeping the graphs of one order.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub order: usize,
    pub graph_count: u64,
    pub checks: Vec<CheckTally>,
    /// Wall-clock time; for stream sweeps, the time of the whole stream.
    #[serde(rename = "elapsed_secs", serialize_with = "serialize_secs")]
    pub elapsed: Duration,
}

impl SweepSummary {
    pub fn violation_count(&self) -> u64 {
        self.checks.iter().map(|c| c.violations).sum()
    }

    pub fn check(&self, id: CheckId, side: Side) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.id == id && c.side == side)
    }

    /// Equality of everything except timing.
    pub fn same_results(&self, other: &SweepSummary) -> bool {
        self.order == other.order
            && self.graph_count == other.graph_count
            && self.checks == other.checks
    }

    /// A headline `order N: G graphs, V violations` followed by one
    /// tab-separated line per check:
    /// `check side applicable violations extremal exceptions example_extremal example_violation`.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "order {}: {} graphs, {} violations\n",
            self.order,
            self.graph_count,
            self.violation_count()
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                c.id,
                c.side.as_str(),
                c.applicable,
                c.violations,
                c.extremal,
                c.exceptions,
                c.example_extremal.as_deref().unwrap_or("-"),
                c.example_violation.as_deref().unwrap_or("-"),
            );
        }
        out
    }
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, VerifyError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

/// Checks every labeled graph of `order` using `workers` threads.
pub fn sweep_order(order: usize, workers: usize) -> Result<SweepSummary, VerifyError> {
    check_sweep_order(order)?;
    let start = Instant::now();
    let total = 1u64 << pair_count(order);
    let chunks = total.div_ceil(CHUNK);
    let tally = with_pool(workers, || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut t = Tally::new();
                for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
                    t.add(&Graph::from_edge_mask(order, mask).expect("order checked"));
                }
                t
            })
            .reduce(Tally::new, Tally::merge)
    })?;
    Ok(tally.into_summary(order, start.elapsed()))
}

/// [`sweep_order`] for each order in `orders`.
pub fn sweep_orders(
    orders: impl IntoIterator<Item = usize>,
    workers: usize,
) -> Result<Vec<SweepSummary>, VerifyError> {
    orders
        .into_iter()
        .map(|n| sweep_order(n, workers))
        .collect()
}

/// Checks every graph in a graph6 stream, grouped by order. A malformed record
/// aborts the sweep with its line number.
pub fn sweep_stream<R: BufRead>(
    reader: R,
    workers: usize,
) -> Result<Vec<SweepSummary>, VerifyError> {
    sweep_graphs(
        Graph6Reader::new(reader).map(|r| r.map(|(_, g)| g)),
        workers,
    )
}

/// Checks every graph yielded by `graphs`, grouped by order.
pub fn sweep_graphs<I>(graphs: I, workers: usize) -> Result<Vec<SweepSummary>, VerifyError>
where
    I: Iterator<Item = Result<Graph, StreamError>>,
{
    let start = Instant::now();
    let mut by_order: BTreeMap<usize, Tally> = BTreeMap::new();
    let mut graphs = graphs.peekable();
    while graphs.peek().is_some() {
        let batch: Vec<Graph> = graphs
            .by_ref()
            .take(STREAM_BATCH)
            .collect::<Result<_, _>>()?;
        let partial = with_pool(workers, || {
            batch
                .par_iter()
                .fold(BTreeMap::new, |mut acc: BTreeMap<usize, Tally>, g| {
                    acc.entry(g.order()).or_insert_with(Tally::new).add(g);
                    acc
                })
                .reduce(BTreeMap::new, merge_maps)
        })?;
        by_order = merge_maps(by_order, partial);
    }
    let elapsed = start.elapsed();
    Ok(by_order
        .into_iter()
        .map(|(order, t)| t.into_summary(order, elapsed))
        .collect())
}

fn merge_maps(mut a: BTreeMap<usize, Tally>, b: BTreeMap<usize, Tally>) -> BTreeMap<usize, Tally> {
    for (order, t) in b {
        let merged = match a.remove(&order) {
            Some(existing) => existing.merge(t),
            None => t,
        };
        a.insert(order, merged);
    }
    a
}

/// Default worker count: available parallelism, capped at 16.
pub fn default_workers() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(16)
}
