//! End-to-end checks for one polygon: consistent patterns against orderings,
//! the solver, the comparison-matrix route, and the point oracle.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::ngon::{all_orderings, canonicalize, DihedralOrdering, Polygon};
use crate::oracle::{realize, realize_at, signs_from_points};
use crate::signs::{sign_of_word, stats, TieBreak};
use crate::solver::{ordering_from_p, reconstruct_p, SolveOptions, Solver, SolverTrace};
use crate::urelations::{enumerate_consistent, EnumerateOptions, SignPattern};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub detail: String,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{verdict} {} ({} checked)", self.name, self.checked)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random orderings for the oracle suite once exhaustive checking stops
    /// (n ≥ 8).
    pub samples: usize,
    pub cap: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub n: usize,
    pub suites: Vec<SuiteResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }
}

fn suite(name: &'static str, checked: usize, failures: Vec<String>) -> SuiteResult {
    let passed = failures.is_empty();
    let mut detail = failures.into_iter().take(3).collect::<Vec<_>>().join("; ");
    if !passed && detail.is_empty() {
        detail = "failed".into();
    }
    SuiteResult { name, passed, checked, detail }
}

#[cfg(feature = "parallel")]
fn par_filter_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Option<R> + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().filter_map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_filter_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> Option<R> + Sync + Send) -> Vec<R> {
    items.iter().filter_map(f).collect()
}

/// Progress claims checked on a finished trace: a state whose shortest
/// negative chord has length 2 or 3 loses a negative chord in the next step,
/// and every state is followed within `2n` steps by a lexicographically
/// smaller `(N, ℓ)` (the final all-plus state counting as smallest).
pub fn check_progress(n: usize, start: (usize, Option<usize>), trace: &SolverTrace) -> std::result::Result<(), String> {
    let m = trace.measures(start);
    let key = |x: (usize, Option<usize>)| (x.0, x.1.unwrap_or(0));
    for k in 0..m.len().saturating_sub(1) {
        if matches!(m[k].1, Some(2) | Some(3)) && m[k + 1].0 >= m[k].0 {
            return Err(format!("step {} from {:?} to {:?} did not drop N", k + 1, m[k], m[k + 1]));
        }
        let horizon = (k + 2 * n).min(m.len() - 1);
        if !(k + 1..=horizon).any(|j| key(m[j]) < key(m[k])) {
            return Err(format!("no decrease within {} steps of state {k} {:?}", 2 * n, m[k]));
        }
    }
    Ok(())
}

fn random_increasing(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    let mut acc = BigRational::from_integer(BigInt::from(rng.gen_range(-50i64..50)));
    (0..n)
        .map(|_| {
            let step = BigRational::new(BigInt::from(rng.gen_range(1i64..1000)), BigInt::from(rng.gen_range(1i64..100)));
            acc += step;
            acc.clone()
        })
        .collect()
}

fn random_ordering(rng: &mut ChaCha8Rng, n: usize) -> DihedralOrdering {
    let mut word: Vec<usize> = (1..=n).collect();
    for k in (1..n).rev() {
        word.swap(k, rng.gen_range(0..=k));
    }
    canonicalize(&word).expect("shuffled permutation")
}

pub fn verify(poly: &Polygon, opts: &VerifyOptions) -> Result<Report> {
    let n = poly.n();
    let cap = opts.cap.unwrap_or(crate::urelations::DEFAULT_CAP);
    let consistent = enumerate_consistent(poly, &EnumerateOptions { cap, collect: true, ..Default::default() })?
        .patterns
        .unwrap_or_default();
    let solver = Solver::new(poly);
    let orderings: Vec<DihedralOrdering> = all_orderings(poly).collect();
    let mut suites = Vec::new();

    let realized: BTreeSet<SignPattern> =
        orderings.iter().map(|a| sign_of_word(solver.parity(), a.word())).collect();
    let found: BTreeSet<SignPattern> = consistent.iter().copied().collect();
    let mut failures = Vec::new();
    if realized.len() != orderings.len() {
        failures.push(format!("{} orderings give only {} patterns", orderings.len(), realized.len()));
    }
    if let Some(s) = realized.difference(&found).next() {
        failures.push(format!("realized pattern {s} is not consistent"));
    }
    if let Some(s) = found.difference(&realized).next() {
        failures.push(format!("consistent pattern {s} is not realized"));
    }
    suites.push(suite("bijection", consistent.len(), failures));

    for (name, tie) in [("solver", TieBreak::First), ("solver-last-tie", TieBreak::Last)] {
        let opts = SolveOptions { tie_break: tie, ..Default::default() };
        let failures = par_filter_map(&consistent, |s| match solver.solve(s, &opts) {
            Err(e) => Some(format!("{s}: {e}")),
            Ok((a, trace)) => {
                if sign_of_word(solver.parity(), a.word()) != *s {
                    Some(format!("{s}: solved to {a} with a different pattern"))
                } else {
                    check_progress(n, stats(poly, s), &trace).err().map(|e| format!("{s}: {e}"))
                }
            }
        });
        suites.push(suite(name, consistent.len(), failures));
    }

    let failures = par_filter_map(&consistent, |s| {
        let direct = reconstruct_p(poly, s).and_then(|p| ordering_from_p(poly, &p));
        let walked = solver.solve(s, &SolveOptions::default()).map(|r| r.0);
        match (direct, walked) {
            (Ok(a), Ok(b)) if a == b => None,
            (a, b) => Some(format!("{s}: matrix {a:?} vs walk {b:?}")),
        }
    });
    suites.push(suite("sign-matrix", consistent.len(), failures));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let chosen: Vec<(DihedralOrdering, Vec<BigRational>)> = if n <= 7 {
        orderings.iter().map(|a| (a.clone(), random_increasing(&mut rng, n))).collect()
    } else {
        (0..opts.samples.max(1))
            .map(|_| {
                let a = random_ordering(&mut rng, n);
                let v = random_increasing(&mut rng, n);
                (a, v)
            })
            .collect()
    };
    let failures = par_filter_map(&chosen, |(a, values)| {
        let expected = sign_of_word(solver.parity(), a.word());
        let at_integers = signs_from_points(poly, &realize(poly, a));
        let at_random = realize_at(a.word(), values).and_then(|z| signs_from_points(poly, &z));
        match (at_integers, at_random) {
            (Ok(x), Ok(y)) if x == expected && y == expected => None,
            (x, y) => Some(format!("{a}: transport {expected}, points {x:?} / {y:?}")),
        }
    });
    suites.push(suite("oracle", chosen.len(), failures));

    Ok(Report { n, suites })
}
