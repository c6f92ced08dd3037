//! Recovering the dihedral ordering of a consistent sign pattern, two ways:
//! the transposition walk driven by the shortest negative chord, and direct
//! reconstruction of the comparison matrix `sgn(z_i - z_j)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::ParityTable;
use crate::ngon::{canonicalize, compose_transposition, DihedralOrdering, Polygon};
use crate::signs::{shortest_negative, stats, transport_parity, TieBreak};
use crate::urelations::{RelationSet, RelationTable, SignPattern};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    /// Oriented shortest negative chord `(a, b)` of the pattern before the step.
    pub chord: (usize, usize),
    /// Labels exchanged in the ordering.
    pub swap: (usize, usize),
    /// Pattern in the new chart.
    pub pattern: String,
    #[serde(rename = "N")]
    pub negatives: usize,
    #[serde(rename = "l")]
    pub shortest: Option<usize>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.shortest.map_or_else(|| "-".to_string(), |l| l.to_string());
        write!(
            f,
            "chord=({},{}) swap=({},{}) N={} l={} pattern={}",
            self.chord.0, self.chord.1, self.swap.0, self.swap.1, self.negatives, l, self.pattern
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverTrace {
    pub steps: Vec<TraceStep>,
    pub iterations: usize,
}

impl SolverTrace {
    /// `(N, ℓ)` after each step, preceded by the input's.
    pub fn measures(&self, start: (usize, Option<usize>)) -> Vec<(usize, Option<usize>)> {
        std::iter::once(start)
            .chain(self.steps.iter().map(|s| (s.negatives, s.shortest)))
            .collect()
    }
}

impl fmt::Display for SolverTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Defaults to `4 n³`.
    pub max_iters: Option<usize>,
    pub tie_break: TieBreak,
}

pub fn default_bound(n: usize) -> usize {
    4 * n * n * n
}

/// Reusable state for solving many patterns of one polygon.
#[derive(Clone, Debug)]
pub struct Solver {
    poly: Polygon,
    relations: RelationTable,
    parity: ParityTable,
}

impl Solver {
    pub fn new(poly: &Polygon) -> Solver {
        Solver {
            poly: poly.clone(),
            relations: RelationTable::new(poly, RelationSet::Extended),
            parity: ParityTable::new(poly),
        }
    }

    pub fn polygon(&self) -> &Polygon {
        &self.poly
    }

    pub fn parity(&self) -> &ParityTable {
        &self.parity
    }

    /// Walks from the standard chart to the chart in which `s` is the
    /// positive orthant. Each step exchanges the labels at positions `a+1`
    /// and `b` for the shortest negative chord `(a, b)` of the current
    /// pattern, then pushes the pattern through that exchange.
    pub fn solve(&self, s: &SignPattern, opts: &SolveOptions) -> Result<(DihedralOrdering, SolverTrace)> {
        let n = self.poly.n();
        if s.n() != n {
            return Err(Error::SizeMismatch { expected: n, got: s.n() });
        }
        if !self.relations.is_consistent(s)? {
            return Err(Error::InconsistentInput);
        }
        let bound = opts.max_iters.unwrap_or_else(|| default_bound(n));
        let mut word = self.poly.identity_word();
        let mut t = *s;
        let mut trace = SolverTrace::default();
        while !t.is_all_plus() {
            if trace.iterations >= bound {
                return Err(Error::IterationBoundExceeded { bound, trace: Box::new(trace) });
            }
            let (a, b) = shortest_negative(&self.poly, &t, opts.tie_break)?;
            let p = self.poly.wrap(a as isize + 1);
            let swap = (word[p - 1], word[b - 1]);
            word = compose_transposition(&word, swap.0, swap.1)?;
            t = transport_parity(&t, &self.parity.for_transposition(p, b))?;
            let (negatives, shortest) = stats(&self.poly, &t);
            trace.steps.push(TraceStep { chord: (a, b), swap, pattern: t.to_string(), negatives, shortest });
            trace.iterations += 1;
        }
        Ok((canonicalize(&word)?, trace))
    }
}

pub fn solve(poly: &Polygon, s: &SignPattern, opts: &SolveOptions) -> Result<(DihedralOrdering, SolverTrace)> {
    Solver::new(poly).solve(s, opts)
}

/// `P(i,j) = sgn(z_i - z_j)` for `i < j`, in the gauge `z_1 = 0`, `z_2 = 1`,
/// `z_n = ∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignMatrix {
    n: usize,
    /// Row-major upper triangle; `true` means `z_i < z_j`.
    less: Vec<bool>,
}

impl SignMatrix {
    fn slot(n: usize, i: usize, j: usize) -> usize {
        (i - 1) * n + (j - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `true` when `P(i,j) = −`, i.e. `z_i < z_j`. Either index order works.
    pub fn is_negative(&self, i: usize, j: usize) -> bool {
        if i < j {
            self.less[Self::slot(self.n, i, j)]
        } else {
            !self.less[Self::slot(self.n, j, i)]
        }
    }

    fn set(&mut self, i: usize, j: usize, negative: bool) {
        let k = Self::slot(self.n, i, j);
        self.less[k] = negative;
    }

    /// Builds the matrix from `z_i < z_j` comparisons on labels `1..=n`.
    pub fn from_fn(n: usize, less: impl Fn(usize, usize) -> bool) -> SignMatrix {
        let mut m = SignMatrix { n, less: vec![false; n * n] };
        for i in 1..=n {
            for j in i + 1..=n {
                m.set(i, j, less(i, j));
            }
        }
        m
    }
}

/// Fills `P` from the pattern: row 1 forward along the chords `{j-1, n}`,
/// later rows downward in `j` along the chords `{i-1, j}`.
pub fn reconstruct_p(poly: &Polygon, s: &SignPattern) -> Result<SignMatrix> {
    let n = poly.n();
    if s.n() != n {
        return Err(Error::SizeMismatch { expected: n, got: s.n() });
    }
    let neg = |a: usize, b: usize| s.is_negative(poly.index_of(a, b).expect("chord"));
    let mut m = SignMatrix { n, less: vec![false; n * n] };
    for k in 1..n {
        m.set(k, n, true);
    }
    m.set(1, 2, true);
    for j in 3..n {
        let v = m.is_negative(1, j - 1) ^ neg(j - 1, n);
        m.set(1, j, v);
    }
    for i in 2..n {
        for j in (i + 1..n).rev() {
            // signs multiply as XOR of negativity
            let v = neg(i - 1, j) ^ m.is_negative(i - 1, j + 1) ^ m.is_negative(i - 1, j) ^ m.is_negative(i, j + 1);
            m.set(i, j, v);
        }
    }
    Ok(m)
}

/// Reads the circular order off `P`: sort `1..n-1` along the line, then
/// append `n` (the point at infinity).
pub fn ordering_from_p(poly: &Polygon, p: &SignMatrix) -> Result<DihedralOrdering> {
    let n = poly.n();
    if p.n() != n {
        return Err(Error::SizeMismatch { expected: n, got: p.n() });
    }
    // A tournament is a strict total order iff its scores are all distinct.
    let mut by_score: Vec<Option<usize>> = vec![None; n - 1];
    for i in 1..n {
        let below = (1..n).filter(|&j| j != i && p.is_negative(j, i)).count();
        if let Some(other) = by_score[below] {
            return Err(Error::IntransitiveOrder(other, i));
        }
        by_score[below] = Some(i);
    }
    let mut word: Vec<usize> = by_score.into_iter().map(|x| x.expect("every score taken")).collect();
    word.push(n);
    canonicalize(&word)
}
