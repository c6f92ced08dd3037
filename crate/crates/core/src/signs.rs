//! Sign patterns pushed through chart changes, and the ordering ↔ pattern
//! correspondence.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::{map_for_ordering, MonomialMap, ParityMap, ParityTable};
use crate::ngon::{DihedralOrdering, Polygon};
use crate::urelations::SignPattern;

fn check(poly_n: usize, s: &SignPattern) -> Result<()> {
    if s.n() != poly_n {
        return Err(Error::SizeMismatch { expected: poly_n, got: s.n() });
    }
    Ok(())
}

/// Signs of the source chart's coordinates on the orthant `s` of the target
/// chart.
pub fn transport(s: &SignPattern, m: &MonomialMap) -> Result<SignPattern> {
    check(m.n(), s)?;
    transport_parity(s, &m.parity())
}

pub fn transport_parity(s: &SignPattern, m: &ParityMap) -> Result<SignPattern> {
    check(m.n(), s)?;
    let bits = m
        .images()
        .iter()
        .enumerate()
        .fold(0u128, |acc, (k, &(neg, mask))| {
            if neg ^ s.product_is_negative(mask) {
                acc | 1 << k
            } else {
                acc
            }
        });
    Ok(SignPattern::from_bits(s.n(), bits))
}

/// The orthant that becomes positive in the chart of `α`.
pub fn sign_of_ordering(poly: &Polygon, alpha: &DihedralOrdering) -> SignPattern {
    sign_of_word(&ParityTable::new(poly), alpha.word())
}

/// As [`sign_of_ordering`] for any word, canonical or not, reusing a table.
pub fn sign_of_word(table: &ParityTable, word: &[usize]) -> SignPattern {
    let n = table.polygon().n();
    transport_parity(&SignPattern::all_plus(n), &table.for_ordering_inverse(word)).expect("sizes agree")
}

/// The same pattern computed from the full symbolic inverse of `φ_α`.
pub fn sign_of_ordering_symbolic(poly: &Polygon, word: &[usize]) -> Result<SignPattern> {
    let inv = map_for_ordering(poly, word)?.invert()?;
    transport(&SignPattern::all_plus(poly.n()), &inv)
}

/// `(N, ℓ)`: number of negative chords and the shortest negative length.
pub fn stats(poly: &Polygon, s: &SignPattern) -> (usize, Option<usize>) {
    let ell = s.negatives().map(|k| poly.length(poly.chord(k))).min();
    (s.negative_count(), ell)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Lexicographically smallest oriented chord.
    #[default]
    First,
    /// Lexicographically largest oriented chord.
    Last,
}

impl FromStr for TieBreak {
    type Err = Error;

    fn from_str(s: &str) -> Result<TieBreak> {
        match s {
            "first" | "min" => Ok(TieBreak::First),
            "last" | "max" => Ok(TieBreak::Last),
            other => Err(Error::Document(format!("unknown tie-break {other:?}"))),
        }
    }
}

/// Chord `{i,j}` written `(a,b)` so that the short arc runs `a → b`;
/// diameters keep the smaller endpoint first.
pub fn orient(poly: &Polygon, i: usize, j: usize) -> (usize, usize) {
    let (i, j) = (i.min(j), i.max(j));
    if 2 * (j - i) <= poly.n() {
        (i, j)
    } else {
        (j, i)
    }
}

pub fn shortest_negative(poly: &Polygon, s: &SignPattern, tie: TieBreak) -> Result<(usize, usize)> {
    check(poly.n(), s)?;
    let ell = stats(poly, s).1.ok_or(Error::AllPlus)?;
    let candidates = s
        .negatives()
        .map(|k| poly.chord(k))
        .filter(|&c| poly.length(c) == ell)
        .map(|c| orient(poly, c.i, c.j));
    let picked = match tie {
        TieBreak::First => candidates.min(),
        TieBreak::Last => candidates.max(),
    };
    Ok(picked.expect("at least one negative chord"))
}
