//! Check suites: each builds a corpus, evaluates every case on a worker pool
//! and folds the outcomes into a [`CheckReport`].

use std::fmt;
use std::time::Instant;

use ecclab::catalog::{build_family, FamilySpec};
use ecclab::eccentric::eccentric_graph;
use ecclab::graph::{is_isomorphism, Graph};
use ecclab::matrix::{
    check_invertibility_classification, determinant, determinant_oracle, kronecker_matrix, IntMatrix,
    MAX_ORACLE_SIZE,
};
use ecclab::product::{
    cartesian_product, check_additivity, check_componentwise_eccentric, cn_cn_eccentric_isomorphism,
    cycle_product_structure, grid_eccentric_closed_form, grid_eccentric_girth, observed_cycle_product_shape,
    predicted_tree_product_girth, tree_product_eccentric,
};
use ecclab::tree::{
    check_monotone_exclusion, check_structure_theorem, predicted_tree_girth, random_tree, PruferTrees, Tree,
    MAX_ENUMERATION_VERTICES,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    TreeGirth,
    Structure,
    Monotone,
    Additivity,
    Componentwise,
    ProductGirth,
    Grid,
    CycleProduct,
    CncnIso,
    KroneckerDet,
    Invertibility,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::TreeGirth,
        Suite::Structure,
        Suite::Monotone,
        Suite::Additivity,
        Suite::Componentwise,
        Suite::ProductGirth,
        Suite::Grid,
        Suite::CycleProduct,
        Suite::CncnIso,
        Suite::KroneckerDet,
        Suite::Invertibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TreeGirth => "tree-girth",
            Suite::Structure => "structure",
            Suite::Monotone => "monotone",
            Suite::Additivity => "additivity",
            Suite::Componentwise => "componentwise",
            Suite::ProductGirth => "product-girth",
            Suite::Grid => "grid",
            Suite::CycleProduct => "cycle-product",
            Suite::CncnIso => "cncn-iso",
            Suite::KroneckerDet => "kronecker-det",
            Suite::Invertibility => "invertibility",
        }
    }

    fn default_trees_max_n(self) -> usize {
        match self {
            Suite::Invertibility => 7,
            _ => MAX_ENUMERATION_VERTICES,
        }
    }

    fn default_samples(self) -> usize {
        match self {
            Suite::TreeGirth | Suite::Structure | Suite::Monotone => 1000,
            Suite::Additivity | Suite::Componentwise => 200,
            Suite::ProductGirth => 300,
            Suite::KroneckerDet => 100,
            Suite::Invertibility => 500,
            Suite::Grid | Suite::CycleProduct | Suite::CncnIso => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub trees_max_n: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub jobs: usize,
    pub inject_failure: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { trees_max_n: None, samples: None, seed: 1, jobs: 1, inject_failure: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Corpus {
    pub description: String,
    pub seed: u64,
    pub trees_max_n: usize,
    pub samples: usize,
    pub cases: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub corpus: Corpus,
    pub pass_count: usize,
    pub fail_count: usize,
    pub first_failure_witness: Option<Witness>,
    /// Seconds.
    pub wall_time: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.fail_count == 0
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "check {}: {verdict} ({} passed, {} failed; seed {}; {:.2}s)\n  corpus: {}",
            self.check_name,
            self.pass_count,
            self.fail_count,
            self.corpus.seed,
            self.wall_time,
            self.corpus.description
        );
        if let Some(w) = &self.first_failure_witness {
            s.push_str(&format!(
                "\n  first failure: {}\n    expected: {}\n    actual:   {}",
                w.input, w.expected, w.actual
            ));
        }
        s
    }
}

#[derive(Default)]
struct Tally {
    passed: usize,
    failures: Vec<Witness>,
}

impl Tally {
    fn record(&mut self, outcome: Option<Witness>) {
        match outcome {
            None => self.passed += 1,
            Some(w) => self.failures.push(w),
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.passed += other.passed;
        self.failures.extend(other.failures);
        self
    }
}

type Job = Box<dyn Fn() -> Tally + Send + Sync>;

const TREE_CHUNK: u64 = 4096;

/// Canonical text form of a labeled graph: vertex count and sorted edge list.
pub fn encode_graph(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.num_vertices(), edges.join(" "))
}

fn encode_factors(factors: &[&Graph]) -> String {
    factors.iter().map(|g| encode_graph(g)).collect::<Vec<_>>().join(" x ")
}

fn mismatch(input: String, expected: impl ToString, actual: impl ToString) -> Option<Witness> {
    Some(Witness { input, expected: expected.to_string(), actual: actual.to_string() })
}

fn compare<T: PartialEq + fmt::Debug>(input: impl FnOnce() -> String, expected: T, actual: T) -> Option<Witness> {
    if expected == actual {
        None
    } else {
        mismatch(input(), format!("{expected:?}"), format!("{actual:?}"))
    }
}

fn error_witness(input: String, e: ecclab::Error) -> Option<Witness> {
    mismatch(input, "no error", e)
}

/// Runs a fallible case; an error is itself a failure.
fn guarded(input: impl Fn() -> String, f: impl FnOnce() -> ecclab::Result<Option<Witness>>) -> Option<Witness> {
    f().unwrap_or_else(|e| error_witness(input(), e))
}

fn tree_case(suite: Suite, t: &Tree) -> Option<Witness> {
    let input = || encode_graph(t.graph());
    match suite {
        Suite::TreeGirth => match eccentric_graph(t.graph()) {
            Ok(e) => compare(input, predicted_tree_girth(t), e.girth()),
            Err(e) => error_witness(input(), e),
        },
        Suite::Structure => {
            let check = check_structure_theorem(t);
            if check.holds {
                None
            } else {
                mismatch(input(), "E(T) equals the union over induced subtrees", format!("{:?}", check.mismatch))
            }
        }
        Suite::Monotone => compare(input, true, check_monotone_exclusion(t)),
        _ => unreachable!("not a tree suite"),
    }
}

fn tree_jobs(suite: Suite, max_n: usize, samples: usize, seed: u64) -> (Vec<Job>, usize, String) {
    let mut jobs: Vec<Job> = Vec::new();
    let mut cases = 0;
    for n in 2..=max_n {
        let total = PruferTrees::count(n);
        cases += total as usize;
        let mut start = 0;
        while start < total {
            let end = (start + TREE_CHUNK).min(total);
            jobs.push(Box::new(move || {
                let mut tally = Tally::default();
                for t in PruferTrees::range(n, start, end).expect("range within count") {
                    tally.record(tree_case(suite, &t));
                }
                tally
            }));
            start = end;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random: Vec<(usize, u64)> = (0..samples).map(|_| (rng.gen_range(9..=40), rng.gen())).collect();
    cases += random.len();
    for chunk in random.chunks(64) {
        let chunk = chunk.to_vec();
        jobs.push(Box::new(move || {
            let mut tally = Tally::default();
            for &(n, s) in &chunk {
                match random_tree(n, s) {
                    Ok(t) => tally.record(tree_case(suite, &t)),
                    Err(e) => tally.record(error_witness(format!("random tree n={n} seed={s}"), e)),
                }
            }
            tally
        }));
    }
    let description =
        format!("all labeled trees with 2..={max_n} vertices plus {samples} seeded random trees with 9..=40 vertices");
    (jobs, cases, description)
}

fn single(job: impl Fn() -> Option<Witness> + Send + Sync + 'static) -> Job {
    Box::new(move || {
        let mut tally = Tally::default();
        tally.record(job());
        tally
    })
}

fn family(spec: FamilySpec) -> Graph {
    build_family(spec).expect("fixed family parameters are valid")
}

fn tree_of(spec: FamilySpec) -> Tree {
    Tree::new(family(spec)).expect("family is a tree")
}

/// A random small factor: a tree, cycle or complete graph on at most 6 vertices.
fn random_factor(rng: &mut ChaCha8Rng) -> Graph {
    match rng.gen_range(0..3) {
        0 => random_tree(rng.gen_range(2..=6), rng.gen()).expect("valid size").into_graph(),
        1 => family(FamilySpec::Cycle(rng.gen_range(3..=6))),
        _ => family(FamilySpec::Complete(rng.gen_range(2..=6))),
    }
}

fn product_law_jobs(suite: Suite, samples: usize, seed: u64) -> Vec<Job> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let k = rng.gen_range(2..=3);
            let factors: Vec<Graph> = (0..k).map(|_| random_factor(&mut rng)).collect();
            single(move || {
                let refs: Vec<&Graph> = factors.iter().collect();
                let input = || encode_factors(&refs);
                let result =
                    if suite == Suite::Additivity { check_additivity(&refs) } else { check_componentwise_eccentric(&refs) };
                match result {
                    Ok(holds) => compare(input, true, holds),
                    Err(e) => error_witness(input(), e),
                }
            })
        })
        .collect()
}

fn tree_product_case(trees: Vec<Tree>) -> Job {
    single(move || {
        let refs: Vec<&Tree> = trees.iter().collect();
        let input = || encode_factors(&trees.iter().map(Tree::graph).collect::<Vec<_>>());
        match (predicted_tree_product_girth(&refs), tree_product_eccentric(&refs)) {
            (Ok(p), Ok(e)) => compare(input, p, e.girth()),
            (Err(e), _) | (_, Err(e)) => error_witness(input(), e),
        }
    })
}

fn product_girth_jobs(samples: usize, seed: u64) -> Vec<Job> {
    use FamilySpec::*;
    let mut jobs = vec![
        tree_product_case(vec![tree_of(Path(3)), tree_of(Path(2))]),
        tree_product_case(vec![tree_of(Star(3)), tree_of(Path(2))]),
        tree_product_case(vec![tree_of(Path(8)), tree_of(Path(6))]),
        tree_product_case(vec![tree_of(Path(5)), tree_of(Path(5)), tree_of(Path(5))]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let k = rng.gen_range(2..=3);
        let max = if k == 2 { 30 } else { 10 };
        let trees = (0..k).map(|_| random_tree(rng.gen_range(2..=max), rng.gen()).expect("valid size")).collect();
        jobs.push(tree_product_case(trees));
    }
    jobs
}

fn grid_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for m in 3..=8 {
        for n in 3..=8 {
            jobs.push(single(move || {
                let input = || format!("P_{m} x P_{n}");
                guarded(input, || {
                    let (g, _) = cartesian_product(&[&family(FamilySpec::Path(m)), &family(FamilySpec::Path(n))])?;
                    let e = eccentric_graph(&g)?;
                    let closed = grid_eccentric_closed_form(m, n)?;
                    if closed != e {
                        return Ok(mismatch(input(), encode_graph(&closed), encode_graph(&e)));
                    }
                    Ok(compare(input, grid_eccentric_girth(m, n)?, e.girth()))
                })
            }));
        }
    }
    jobs
}

fn cycle_product_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 3..=10 {
        for m in 3..=10 {
            jobs.push(single(move || {
                let input = || format!("C_{n} x C_{m}");
                guarded(input, || {
                    let (g, _) =
                        cartesian_product(&[&family(FamilySpec::Cycle(n)), &family(FamilySpec::Cycle(m))])?;
                    let e = eccentric_graph(&g)?;
                    let report = cycle_product_structure(n, m)?;
                    let observed = (observed_cycle_product_shape(&e), e.girth());
                    Ok(compare(input, (report.shape, report.predicted_girth), observed))
                })
            }));
        }
    }
    jobs
}

fn cncn_jobs() -> Vec<Job> {
    [3, 5, 7, 9]
        .into_iter()
        .map(|n| {
            single(move || {
                let input = || format!("C_{n} x C_{n}");
                guarded(input, || {
                    let c = family(FamilySpec::Cycle(n));
                    let (g, _) = cartesian_product(&[&c, &c])?;
                    let e = eccentric_graph(&g)?;
                    let map = cn_cn_eccentric_isomorphism(n)?;
                    Ok(compare(input, true, is_isomorphism(&g, &e, &map)))
                })
            })
        })
        .collect()
}

fn random_matrix(rng: &mut ChaCha8Rng, max_side: usize) -> IntMatrix {
    let n = rng.gen_range(1..=max_side);
    let values: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-5..=5)).collect();
    IntMatrix::from_fn(n, n, |i, j| values[i * n + j]).expect("positive size")
}

fn kronecker_det_jobs(samples: usize, seed: u64) -> Vec<Job> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let a = random_matrix(&mut rng, 4);
            let b = random_matrix(&mut rng, 3);
            single(move || {
                let input = || format!("A={:?} B={:?}", a.to_decimal_rows(), b.to_decimal_rows());
                guarded(input, || {
                    for m in [&a, &b] {
                        let (fast, slow) = (determinant(m)?, determinant_oracle(m)?);
                        if fast != slow {
                            return Ok(mismatch(input(), slow, fast));
                        }
                    }
                    let k = kronecker_matrix(&a, &b);
                    let expected = determinant(&a)?.pow(b.rows() as u32) * determinant(&b)?.pow(a.rows() as u32);
                    let actual = determinant(&k)?;
                    if k.rows() <= MAX_ORACLE_SIZE {
                        let oracle = determinant_oracle(&k)?;
                        if oracle != actual {
                            return Ok(mismatch(input(), oracle, actual));
                        }
                    }
                    Ok(compare(input, expected, actual))
                })
            })
        })
        .collect()
}

fn invertibility_case(factors: Vec<Tree>) -> Option<Witness> {
    let refs: Vec<&Tree> = factors.iter().collect();
    let input = || encode_factors(&factors.iter().map(Tree::graph).collect::<Vec<_>>());
    match check_invertibility_classification(&refs) {
        Ok(c) => compare(input, c.predicted, c.computed),
        Err(e) => error_witness(input(), e),
    }
}

fn with_edges(t: Tree, j: usize) -> Vec<Tree> {
    let mut factors = vec![t];
    factors.extend((0..j).map(|_| tree_of(FamilySpec::Path(2))));
    factors
}

fn invertibility_jobs(max_n: usize, samples: usize, seed: u64) -> (Vec<Job>, usize) {
    use FamilySpec::*;
    let mut jobs = Vec::new();
    let mut cases = 0;
    for n in 2..=max_n {
        let total = PruferTrees::count(n);
        cases += 3 * total as usize;
        let chunk = 512;
        let mut start = 0;
        while start < total {
            let end = (start + chunk).min(total);
            jobs.push(Box::new(move || {
                let mut tally = Tally::default();
                for t in PruferTrees::range(n, start, end).expect("range within count") {
                    for j in 0..=2 {
                        tally.record(invertibility_case(with_edges(t.clone(), j)));
                    }
                }
                tally
            }) as Job);
            start = end;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let t = random_tree(rng.gen_range(2..=7), rng.gen()).expect("valid size");
        let j = rng.gen_range(0..=2);
        cases += 1;
        jobs.push(single(move || invertibility_case(with_edges(t.clone(), j))));
    }
    for pair in [(Path(3), Path(3)), (Path(5), Path(2)), (Star(3), Path(3))] {
        cases += 1;
        jobs.push(single(move || invertibility_case(vec![tree_of(pair.0), tree_of(pair.1)])));
    }
    (jobs, cases)
}

/// Runs `suite` on `opts.jobs` worker threads.
pub fn run_suite(suite: Suite, opts: &CheckOptions) -> Result<CheckReport, CliError> {
    let started = Instant::now();
    let trees_max_n = opts.trees_max_n.unwrap_or(suite.default_trees_max_n());
    let samples = opts.samples.unwrap_or(suite.default_samples());
    let seed = opts.seed;
    if !(2..=MAX_ENUMERATION_VERTICES).contains(&trees_max_n) {
        return Err(CliError::Usage(format!(
            "--trees-max-n must be in 2..={MAX_ENUMERATION_VERTICES}, got {trees_max_n}"
        )));
    }
    let (mut jobs, mut cases, description): (Vec<Job>, usize, String) = match suite {
        Suite::TreeGirth | Suite::Structure | Suite::Monotone => tree_jobs(suite, trees_max_n, samples, seed),
        Suite::Additivity | Suite::Componentwise => (
            product_law_jobs(suite, samples, seed),
            samples,
            format!("{samples} seeded products of 2-3 factors (trees, cycles, complete graphs, each <= 6 vertices)"),
        ),
        Suite::ProductGirth => (
            product_girth_jobs(samples, seed),
            samples + 4,
            format!("4 fixed witnesses plus {samples} seeded tree tuples of 2-3 factors, <= 1000 product vertices"),
        ),
        Suite::Grid => (grid_jobs(), 36, "P_m x P_n for 3 <= m, n <= 8".into()),
        Suite::CycleProduct => (cycle_product_jobs(), 64, "C_n x C_m for 3 <= n, m <= 10".into()),
        Suite::CncnIso => (cncn_jobs(), 4, "C_n x C_n for n in {3, 5, 7, 9}".into()),
        Suite::KroneckerDet => (
            kronecker_det_jobs(samples, seed),
            samples,
            format!("{samples} seeded pairs of integer matrices (sides <= 4 and <= 3, entries in -5..=5)"),
        ),
        Suite::Invertibility => {
            let (jobs, cases) = invertibility_jobs(trees_max_n, samples, seed);
            let description = format!(
                "(T, P_2^j) for every labeled tree T with 2..={trees_max_n} vertices and j in 0..=2, \
                 {samples} seeded random tuples, and 3 fixed singular pairs"
            );
            (jobs, cases, description)
        }
    };

    if opts.inject_failure {
        cases += 1;
        jobs.push(single(|| mismatch("injected".into(), "pass", "injected failure")));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let tally = pool.install(|| jobs.par_iter().map(|job| job()).reduce(Tally::default, Tally::merge));
    let mut failures = tally.failures;
    failures.sort_by(|a, b| a.input.cmp(&b.input));

    Ok(CheckReport {
        check_name: suite.name().to_string(),
        corpus: Corpus { description, seed, trees_max_n, samples, cases },
        pass_count: tally.passed,
        fail_count: failures.len(),
        first_failure_witness: failures.into_iter().next(),
        wall_time: started.elapsed().as_secs_f64(),
    })
}
