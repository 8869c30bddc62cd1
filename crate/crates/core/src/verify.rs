//! Named cross-checking suites. Each suite compares a closed form, a
//! structural claim, or a construction against an independent brute-force
//! computation and reports every mismatch.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::closed::{fibonacci, i_closed, j_closed, max_nonzero_k, peak_value, Count};
use crate::grid::{
    boundary_grid, construction_grid, downcore, duplicate_row, random_skew_diagram,
    staircase_boxset, BoxSet, Orientation,
};
use crate::perm::{avoids_all, enumerate_avoiders, parse_permutation, Pattern, Permutation};
use crate::series::{series_solve_f, verify_functional_equation};
use crate::staircase::{decode, encode, staircase_downcore};
use crate::{Error, Result};

/// All suite names, in the canonical order.
pub const SUITE_NAMES: &[&str] = &[
    "encoding-bijection",
    "I-oracle",
    "J-oracle",
    "functional-equation",
    "peak-values",
    "prop27",
    "row-coverage",
    "duplication",
    "construction",
    "purity-iff-2143",
    "staircase-2n-1",
    "fibonacci-count",
];

/// Bounds shared by the suites; `None` means the suite default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_n: Option<usize>,
    pub order: Option<usize>,
    pub seed: Option<u64>,
}

impl Bounds {
    fn max_n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }
    fn order(&self, default: usize) -> usize {
        self.order.unwrap_or(default)
    }
    fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }
}

/// A single mismatch: the input that failed and the two disagreeing values.
#[derive(Clone, Debug)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Result of running one suite.
#[derive(Debug)]
pub struct VerificationOutcome {
    pub suite: String,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    pub wall_time: Duration,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl std::fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: {} ({} cases, {:.2}s)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases_run,
            self.wall_time.as_secs_f64()
        )?;
        for fail in &self.failures {
            write!(
                f,
                "\n  {} expected {} got {}",
                fail.input, fail.expected, fail.actual
            )?;
        }
        Ok(())
    }
}

struct Recorder {
    cases: usize,
    failures: Vec<Failure>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check<T: PartialEq + std::fmt::Debug>(&mut self, input: impl Into<String>, expected: T, actual: T) {
        self.cases += 1;
        if expected != actual {
            self.failures.push(Failure {
                input: input.into(),
                expected: format!("{expected:?}"),
                actual: format!("{actual:?}"),
            });
        }
    }

    fn assert(&mut self, input: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.cases += 1;
        if !ok {
            self.failures.push(Failure {
                input: input.into(),
                expected: "true".into(),
                actual: detail.into(),
            });
        }
    }
}

fn pattern(text: &str) -> Pattern {
    parse_permutation(text).expect("literal pattern")
}

/// Runs the named suite at the given bounds.
pub fn run_suite(name: &str, bounds: &Bounds) -> Result<VerificationOutcome> {
    let start = Instant::now();
    let mut rec = Recorder::new();
    match name {
        "encoding-bijection" => encoding_bijection(bounds, &mut rec)?,
        "I-oracle" => i_oracle(bounds, &mut rec)?,
        "J-oracle" => j_oracle(bounds, &mut rec)?,
        "functional-equation" => functional_equation(bounds, &mut rec)?,
        "peak-values" => peak_values(bounds, &mut rec)?,
        "prop27" => prop27(bounds, &mut rec)?,
        "row-coverage" => row_coverage(bounds, &mut rec)?,
        "duplication" => duplication(bounds, &mut rec)?,
        "construction" => construction(bounds, &mut rec)?,
        "purity-iff-2143" => purity_iff_2143(bounds, &mut rec)?,
        "staircase-2n-1" => staircase_2n_1(bounds, &mut rec)?,
        "fibonacci-count" => fibonacci_count(bounds, &mut rec)?,
        other => {
            return Err(Error::Domain(format!(
                "unknown suite {other:?}; valid suites: {}",
                SUITE_NAMES.join(", ")
            )))
        }
    }
    // Sort the failure list by input for a deterministic report.
    let mut failures = rec.failures;
    failures.sort_by(|a, b| a.input.cmp(&b.input));
    Ok(VerificationOutcome {
        suite: name.to_string(),
        cases_run: rec.cases,
        failures,
        wall_time: start.elapsed(),
    })
}

/// Runs every suite in canonical order.
pub fn run_all(bounds: &Bounds) -> Result<Vec<VerificationOutcome>> {
    SUITE_NAMES.iter().map(|s| run_suite(s, bounds)).collect()
}

/// Encode is injective on `Av_n(132)` and decode inverts it, `n <= 8`.
fn encoding_bijection(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    let p132 = pattern("132");
    for n in 1..=bounds.max_n(8) {
        let mut seen = HashMap::new();
        for sigma in enumerate_avoiders(n, &[p132.clone()])? {
            let enc = encode(&sigma)?;
            if let Some(prev) = seen.insert(enc.rows().to_vec(), sigma.clone()) {
                rec.assert(
                    format!("encode({sigma})"),
                    false,
                    format!("collides with encode({prev})"),
                );
            }
            rec.check(format!("decode(encode({sigma}))"), sigma.clone(), decode(&enc)?);
        }
    }
    Ok(())
}

/// `I_closed(n, k)` equals brute-force independent-set counts on the
/// staircase downcore, `n <= 7`.
fn i_oracle(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    for n in 0..=bounds.max_n(7) {
        let brute: Vec<Count> = if n == 0 {
            vec![Count::from(1u32)]
        } else {
            staircase_downcore(n).independent_set_counts()?
        };
        let kmax = brute.len().max(2 * n) + 1;
        for k in 0..=kmax {
            let actual = brute.get(k).cloned().unwrap_or_else(BigUint::zero);
            rec.check(
                format!("I({n},{k})"),
                i_closed(n as u64, k as u64),
                actual,
            );
        }
    }
    Ok(())
}

/// Brute-force histogram of `Av_l(132)` by nonzero boxes in the encoding.
fn brute_j_histogram(l: usize) -> Result<BTreeMap<usize, Count>> {
    let p132 = pattern("132");
    let mut hist: BTreeMap<usize, Count> = BTreeMap::new();
    for sigma in enumerate_avoiders(l, &[p132])? {
        let k = encode(&sigma)?.nonzero_count();
        *hist.entry(k).or_insert_with(Count::zero) += 1u32;
    }
    Ok(hist)
}

/// `J_closed(l, k)` equals the brute-force count over `Av_l(132)`, `l <= 10`.
fn j_oracle(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    for l in 1..=bounds.max_n(10) {
        let hist = brute_j_histogram(l)?;
        for k in 0..=2 * l {
            let brute = hist.get(&k).cloned().unwrap_or_else(Count::zero);
            rec.check(format!("J({l},{k})"), j_closed(l as u64, k as u64), brute);
        }
    }
    Ok(())
}

/// The series fixed point satisfies the cleared-denominator identity and
/// matches the closed form on the full grid.
fn functional_equation(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    let order = bounds.order(10);
    let f = series_solve_f(order)?;
    rec.assert(
        format!("functional-equation(order={order})"),
        verify_functional_equation(&f),
        "identity residual is nonzero".to_string(),
    );
    for n in 0..=order {
        for k in 0..=order {
            rec.check(
                format!("coefficient({n},{k})"),
                num_bigint::BigInt::from(i_closed(n as u64, k as u64)),
                f.coefficient(n, k).clone(),
            );
        }
    }
    Ok(())
}

/// Case formulas for `J` at the largest nonzero `k`, against the closed
/// form up to `l = 16` and against brute force up to `l = 10`.
fn peak_values(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    for l in 2..=16usize {
        let k = max_nonzero_k(l as u64)?;
        rec.check(
            format!("peak({l}) vs closed form"),
            j_closed(l as u64, k),
            peak_value(l as u64)?,
        );
    }
    for l in 2..=bounds.max_n(10) {
        let k = max_nonzero_k(l as u64)? as usize;
        let hist = brute_j_histogram(l)?;
        let brute = hist.get(&k).cloned().unwrap_or_else(Count::zero);
        rec.check(format!("peak({l}) vs brute force"), brute, peak_value(l as u64)?);
    }
    rec.check("J(3,1)".to_string(), Count::from(4u32), j_closed(3, 1));
    rec.check("J(6,3)".to_string(), Count::from(19u32), j_closed(6, 3));
    Ok(())
}

/// The largest brute-force `k` with `J(l, k) > 0` is `floor((2l-1)/3)`.
fn prop27(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    for l in 1..=bounds.max_n(10) {
        let hist = brute_j_histogram(l)?;
        let largest = hist
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(&k, _)| k)
            .max()
            .unwrap_or(0);
        rec.check(
            format!("max nonzero k for l={l}"),
            max_nonzero_k(l as u64)? as usize,
            largest,
        );
    }
    Ok(())
}

/// Diagram corpus for the row-coverage and duplication suites: boundary
/// grids of `Av_n(123)` up to `max_n`, plus seeded random skew diagrams.
fn diagram_corpus(max_n: usize, seed: u64, random_count: usize) -> Result<Vec<(String, BoxSet)>> {
    let p123 = pattern("123");
    let mut corpus = Vec::new();
    for n in 2..=max_n {
        for pi in enumerate_avoiders(n, &[p123.clone()])? {
            let g = boundary_grid(&pi)?;
            if !g.is_empty() {
                corpus.push((format!("boundary_grid({pi})"), g));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..random_count {
        corpus.push((format!("random#{t}"), random_skew_diagram(&mut rng, 18)));
    }
    Ok(corpus)
}

/// Every maximal independent set covers every occupied row.
fn row_coverage(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    for (name, diagram) in diagram_corpus(bounds.max_n(7), bounds.seed(), 500)? {
        let rows: Vec<usize> = diagram.rows().keys().copied().collect();
        let g = downcore(&diagram);
        for set in g.maximal_independent_sets()? {
            let uncovered: Vec<usize> = rows
                .iter()
                .copied()
                .filter(|&y| !set.iter().any(|&(_, sy)| sy == y))
                .collect();
            rec.assert(
                format!("{name} set {set:?}"),
                uncovered.is_empty(),
                format!("rows {uncovered:?} uncovered"),
            );
        }
    }
    Ok(())
}

/// Duplicating any row of an impure diagram keeps it impure.
fn duplication(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    for (name, diagram) in diagram_corpus(bounds.max_n(7), bounds.seed(), 500)? {
        if downcore(&diagram).purity()?.is_pure {
            continue;
        }
        for y in diagram.rows().keys().copied().collect::<Vec<_>>() {
            let dup = duplicate_row(&diagram, y)?;
            rec.assert(
                format!("{name} duplicate row {y}"),
                !downcore(&dup).purity()?.is_pure,
                "became pure".to_string(),
            );
        }
    }
    Ok(())
}

/// The explicit impure family: `construction_grid(n)` for `4 <= n <= 8`,
/// with the quoted witness sizes.
fn construction(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    for n in 4..=bounds.max_n(8) {
        let g = downcore(&construction_grid(n)?);
        let sizes: Vec<usize> = {
            let mut s: Vec<usize> = g
                .maximal_independent_sets()?
                .iter()
                .map(|set| set.len())
                .collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        rec.assert(
            format!("construction_grid({n}) purity"),
            sizes.len() > 1,
            format!("all maximal sets have size {sizes:?}"),
        );
        let (lo, hi) = if n == 4 { (5, 6) } else { (3 * (n - 2) - 1, 3 * (n - 2)) };
        rec.assert(
            format!("construction_grid({n}) witness sizes"),
            sizes.contains(&lo) && sizes.contains(&hi),
            format!("sizes {sizes:?} missing {lo} or {hi}"),
        );
    }
    Ok(())
}

/// Purity of the boundary-grid downcore is equivalent to 2143-avoidance,
/// over all of `Av_n(123)`.
fn purity_iff_2143(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    let p123 = pattern("123");
    let p2143 = pattern("2143");
    for n in 1..=bounds.max_n(8) {
        for pi in enumerate_avoiders(n, &[p123.clone()])? {
            let pure = downcore(&boundary_grid(&pi)?).purity()?.is_pure;
            rec.check(format!("purity({pi})"), avoids_all(&pi, &[p2143.clone()]), pure);
        }
    }
    Ok(())
}

/// Every maximal independent set of the lower-left staircase downcore has
/// size `2n - 1` for `n <= 7`; at `n = 9` the Fig.-6-style set built from
/// first-column rows `{1, 2, 4, 7, 9}` extends to a maximal set of size 17.
fn staircase_2n_1(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    for n in 1..=bounds.max_n(7) {
        let g = downcore(&staircase_boxset(n, Orientation::LowerLeft));
        for set in g.maximal_independent_sets()? {
            rec.check(format!("staircase({n}) set {set:?}"), 2 * n - 1, set.len());
        }
    }
    let n = 9;
    let g = downcore(&staircase_boxset(n, Orientation::LowerLeft));
    let mut chosen: Vec<(usize, usize)> = [1, 2, 4, 7, 9].iter().map(|&y| (1, y)).collect();
    for &v in g.vertices() {
        if chosen.iter().all(|&c| c != v && !g.has_edge(c, v)) {
            chosen.push(v);
        }
    }
    rec.check("staircase(9) greedy maximal set size".to_string(), 17, chosen.len());
    Ok(())
}

/// The number of `pi` in `Av_n(123)` with pure downcore equals `F_{2n-1}`.
fn fibonacci_count(bounds: &Bounds, rec: &mut Recorder) -> Result<()> {
    let p123 = pattern("123");
    for n in 1..=bounds.max_n(8) {
        let mut pure_count = Count::zero();
        for pi in enumerate_avoiders(n, &[p123.clone()])? {
            if downcore(&boundary_grid(&pi)?).purity()?.is_pure {
                pure_count += 1u32;
            }
        }
        rec.check(
            format!("pure count at n={n}"),
            fibonacci(2 * n as u64 - 1)?,
            pure_count,
        );
    }
    Ok(())
}

/// Helper for callers that already hold a permutation: true iff the
/// boundary-grid downcore is pure.
pub fn boundary_is_pure(pi: &Permutation) -> Result<bool> {
    Ok(downcore(&boundary_grid(pi)?).purity()?.is_pure)
}
