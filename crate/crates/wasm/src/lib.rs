//! Browser bindings for the demo page. Every function takes plain strings and
//! returns a JSON object, with an `error` field on failure.

use m0n::diagram::render_svg;
use m0n::ngon::{canonicalize, Polygon};
use m0n::signs::{sign_of_ordering, stats};
use m0n::solver::{solve as run_solver, SolveOptions};
use m0n::urelations::{is_consistent, SignPattern};
use m0n::Error;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest polygon the page offers.
pub const DEMO_MAX_N: usize = 12;

fn polygon(n: usize) -> Result<Polygon, String> {
    if !(4..=DEMO_MAX_N).contains(&n) {
        return Err(format!("n must be between 4 and {DEMO_MAX_N}"));
    }
    Polygon::new(n).map_err(|e| e.to_string())
}

fn parse_word(text: &str) -> Result<Vec<usize>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad label {t:?}")))
        .collect()
}

fn describe(poly: &Polygon, s: &SignPattern, labels: Option<&[usize]>) -> Result<Value, String> {
    let (negatives, shortest) = stats(poly, s);
    let chords: Vec<[usize; 2]> = poly.chords().iter().map(|c| [c.i, c.j]).collect();
    Ok(json!({
        "n": poly.n(),
        "signs": s.to_string(),
        "chords": chords,
        "negatives": negatives,
        "shortest": shortest,
        "consistent": is_consistent(poly, s).map_err(|e| e.to_string())?,
        "svg": render_svg(poly, s, labels).map_err(|e| e.to_string())?,
    }))
}

fn finish(result: Result<Value, String>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

/// Pattern, statistics and drawing for a sign string.
#[wasm_bindgen]
pub fn inspect(n: usize, signs: &str) -> String {
    finish((|| {
        let poly = polygon(n)?;
        let s = SignPattern::parse(n, signs).map_err(|e| e.to_string())?;
        describe(&poly, &s, None)
    })())
}

/// The pattern that the chart of an ordering makes positive.
#[wasm_bindgen]
pub fn sign_of(n: usize, ordering: &str) -> String {
    finish((|| {
        let poly = polygon(n)?;
        let word = parse_word(ordering)?;
        if word.len() != n {
            return Err(format!("expected {n} labels, got {}", word.len()));
        }
        let alpha = canonicalize(&word).map_err(|e| e.to_string())?;
        let s = sign_of_ordering(&poly, &alpha);
        let mut v = describe(&poly, &s, None)?;
        v["ordering"] = json!(alpha.word());
        Ok(v)
    })())
}

/// Runs the solver on a sign string; the drawing is relabelled by the result.
#[wasm_bindgen]
pub fn solve(n: usize, signs: &str) -> String {
    finish((|| {
        let poly = polygon(n)?;
        let s = SignPattern::parse(n, signs).map_err(|e| e.to_string())?;
        let mut v = describe(&poly, &s, None)?;
        match run_solver(&poly, &s, &SolveOptions::default()) {
            Ok((alpha, trace)) => {
                v["ordering"] = json!(alpha.word());
                v["trace"] = json!(trace.steps.iter().map(|t| t.to_string()).collect::<Vec<_>>());
                v["solved_svg"] = json!(render_svg(&poly, &SignPattern::all_plus(n), Some(alpha.word()))
                    .map_err(|e| e.to_string())?);
            }
            Err(Error::InconsistentInput) => {
                v["error"] = json!("inconsistent: some u-relation has both terms negative");
            }
            Err(e) => return Err(e.to_string()),
        }
        Ok(v)
    })())
}

/// Flips the sign of chord `{i, j}`.
#[wasm_bindgen]
pub fn flip(n: usize, signs: &str, i: usize, j: usize) -> String {
    finish((|| {
        let poly = polygon(n)?;
        let s = SignPattern::parse(n, signs).map_err(|e| e.to_string())?;
        let k = poly.index_of(i, j).ok_or_else(|| format!("{i},{j} is not a chord"))?;
        describe(&poly, &s.flip(k), None)
    })())
}
