#![allow(dead_code)]

use std::collections::BTreeSet;

use m0n::monomial::{map_for_transposition, SignedMonomial};
use m0n::ngon::{IntervalPartition, Polygon};
use m0n::urelations::{coarsen, consistent_patterns, RelationSet, SignPattern};

pub fn poly(n: usize) -> Polygon {
    Polygon::new(n).unwrap()
}

pub fn pat(n: usize, s: &str) -> SignPattern {
    SignPattern::parse(n, s).unwrap()
}

pub fn consistent(n: usize) -> Vec<SignPattern> {
    consistent_patterns(&poly(n), RelationSet::Extended).unwrap()
}

/// Signed monomial over the standard chart; factors on non-chords count as 1.
pub fn mono(p: &Polygon, negative: bool, factors: &[(usize, usize, i64)]) -> SignedMonomial {
    SignedMonomial::from_exps(
        negative,
        factors.iter().filter_map(|&(a, b, e)| p.chord_between(a, b).ok().map(|c| (c, e))),
    )
}

/// Negative iff the chord between labels `a`, `b` is negative in `s`.
pub fn neg(p: &Polygon, s: &SignPattern, a: usize, b: usize) -> bool {
    s.is_negative(p.index_of(a, b).expect("chord"))
}

/// Sign of a product of chords; non-chords count as +.
pub fn neg_product(p: &Polygon, s: &SignPattern, pairs: impl IntoIterator<Item = (usize, usize)>) -> bool {
    pairs
        .into_iter()
        .filter_map(|(a, b)| p.index_of(a, b).filter(|_| a != b))
        .fold(false, |acc, k| acc ^ s.is_negative(k))
}

pub const PENTAGON_TABLE: [(&str, &str); 12] = [
    ("1 2 3 4 5", "+++++"),
    ("1 3 2 4 5", "-++++"),
    ("1 5 2 3 4", "+-+++"),
    ("1 2 4 3 5", "++-++"),
    ("1 3 4 5 2", "+++-+"),
    ("1 2 3 5 4", "++++-"),
    ("1 5 3 2 4", "--+++"),
    ("1 5 2 4 3", "+--++"),
    ("1 4 3 5 2", "++--+"),
    ("1 3 5 4 2", "+++--"),
    ("1 3 2 5 4", "-+++-"),
    ("1 4 2 5 3", "-----"),
];

pub fn word(text: &str) -> Vec<usize> {
    text.split_whitespace().map(|x| x.parse().unwrap()).collect()
}

pub const HEXAGON_EXCLUDED: [&str; 14] = [
    "(-,-,+,-,+,-,-,+,+)",
    "(-,-,+,+,-,-,+,+,+)",
    "(-,+,-,-,+,-,-,+,-)",
    "(-,+,-,-,+,-,+,-,+)",
    "(-,+,-,+,-,-,+,+,-)",
    "(-,+,+,-,-,+,-,+,-)",
    "(-,+,+,-,-,+,+,-,+)",
    "(+,-,-,+,+,-,-,+,-)",
    "(+,-,-,+,+,-,+,-,+)",
    "(+,-,+,-,+,+,-,-,+)",
    "(+,-,+,+,-,+,-,+,-)",
    "(+,-,+,+,-,+,+,-,+)",
    "(+,+,-,-,+,+,-,-,-)",
    "(+,+,-,+,-,+,+,-,-)",
];

/// Five images of the chart change for `1 4 2 5 3`, keyed by the labels of
/// the source coordinate: `v12 ↦ -u14/(u25 u35)` and so on.
pub fn pentagon_formulas() -> Vec<((usize, usize), SignedMonomial)> {
    let p = poly(5);
    vec![
        ((1, 2), mono(&p, true, &[(1, 4, 1), (2, 5, -1), (3, 5, -1)])),
        ((1, 5), mono(&p, true, &[(3, 5, 1), (1, 4, -1), (2, 4, -1)])),
        ((2, 3), mono(&p, true, &[(2, 5, 1), (1, 3, -1), (1, 4, -1)])),
        ((3, 4), mono(&p, true, &[(1, 3, 1), (2, 4, -1), (2, 5, -1)])),
        ((4, 5), mono(&p, true, &[(2, 4, 1), (1, 3, -1), (3, 5, -1)])),
    ]
}

/// Images of the swap of labels 1, 2, keyed by source labels.
pub fn swap12_formulas(n: usize) -> Vec<((usize, usize), SignedMonomial)> {
    let p = poly(n);
    let mut out = Vec::new();
    let others: Vec<usize> = (3..n).collect();
    for &i in &others {
        for &j in &others {
            if i < j && p.chord_between(i, j).is_ok() {
                out.push(((i, j), mono(&p, false, &[(i, j, 1)])));
            }
        }
        out.push(((n, i), mono(&p, false, &[(n, i, 1), (1, i, 1)])));
        out.push(((1, i), mono(&p, false, &[(1, i, 1), (2, i, 1)])));
        out.push(((2, i), mono(&p, false, &[(1, i, -1)])));
    }
    let mut last = vec![(n, 2, 1)];
    last.extend(others.iter().map(|&i| (1, i, -1)));
    out.push(((n, 1), mono(&p, true, &last)));
    out
}

fn crossing_factors(p: &Polygon, a: usize, b: usize, e: i64) -> Vec<(usize, usize, i64)> {
    let c = p.chord_between(a, b).unwrap();
    p.crossing_set(c).into_iter().map(|d| (d.i, d.j, e)).collect()
}

pub struct TableRow {
    pub row: &'static str,
    pub labels: (usize, usize),
    pub image: SignedMonomial,
}

/// Every row of the table of images of the chart change swapping labels 1
/// and `l`, as printed, except the row for `v_{l-1,i}` whose exponents are
/// negated (see `table_row_as_printed`).
pub fn swap1l_table(n: usize, l: usize) -> Vec<TableRow> {
    let p = poly(n);
    let mut rows = Vec::new();
    let mut push = |row, a: usize, b: usize, negative, factors: Vec<(usize, usize, i64)>| {
        rows.push(TableRow { row, labels: (a, b), image: mono(&p, negative, &factors) });
    };
    let inner: Vec<usize> = (2..=l.saturating_sub(2)).collect();
    let outer: Vec<usize> = (l + 1..n).collect();
    for &i in &inner {
        for &j in &inner {
            if i < j {
                push("identity", i, j, false, vec![(i, j, 1)]);
            }
        }
    }
    for &i in &outer {
        for j in (2..n).filter(|&j| ![l - 1, l].contains(&j)) {
            if j != i && (j < i || !outer.contains(&j)) {
                push("identity", i, j, false, vec![(i, j, 1)]);
            }
        }
    }
    for &j in &inner {
        push("v_jn", j, n, false, (l..n).map(|k| (k, j, -1)).collect());
        push("v_1j", 1, j, false, (l + 1..=n).map(|k| (k, j, -1)).collect());
        if j >= 3 {
            let mut f = vec![(1, j, 1)];
            f.extend((l..=n).map(|k| (k, j, 1)));
            push("v_jl", j, l, false, f);
        }
        if j + 3 <= l {
            push("v_j,l-1", j, l - 1, false, (l - 1..=n).map(|k| (k, j, 1)).collect());
        }
    }
    for &i in &outer {
        push("v_1i", 1, i, false, (1..=l).map(|j| (i, j, 1)).collect());
        push("v_l-1,i", l - 1, i, false, (1..=l - 2).map(|j| (i, j, -1)).collect());
        push("v_li", l, i, false, (2..l).map(|j| (i, j, -1)).collect());
        let mut f = vec![(i, n, 1)];
        f.extend((1..l).map(|j| (i, j, 1)));
        push("v_in", i, n, false, f);
    }
    push("v_l1", l, 1, false, crossing_factors(&p, 1, l, 1));
    let mut f = vec![(n, l, 1)];
    f.extend(crossing_factors(&p, n, l, -1));
    push("v_n1", n, 1, true, f);
    if l >= 4 {
        let mut f = vec![(1, l - 1, 1)];
        f.extend(crossing_factors(&p, 1, l - 1, -1));
        push("v_l-1,l", l - 1, l, true, f);
    }
    push("v_l-1,n", l - 1, n, false, crossing_factors(&p, n, l - 1, 1));
    rows
}

/// The `v_{l-1,i}` row with the exponents as printed: `∏_{j=1}^{l-2} u_ij`.
pub fn table_row_as_printed(n: usize, l: usize, i: usize) -> SignedMonomial {
    mono(&poly(n), false, &(1..=l - 2).map(|j| (i, j, 1)).collect::<Vec<_>>())
}

/// Image of `v_{l-1,l}` as derived step by step:
/// `-u_{1,l-1} ∏_{k=l}^{n} ∏_{j=2}^{l-2} u_kj^{-1}`.
pub fn last_step_formula(n: usize, l: usize) -> SignedMonomial {
    let mut f = vec![(1, l - 1, 1)];
    for k in l..=n {
        for j in 2..=l - 2 {
            f.push((k, j, -1));
        }
    }
    mono(&poly(n), true, &f)
}

/// Checks `map_for_transposition(1, l)` against [`swap1l_table`]; returns
/// the number of rows compared.
pub fn check_swap1l_table(n: usize, l: usize) -> Result<usize, String> {
    let p = poly(n);
    let m = map_for_transposition(&p, 1, l).map_err(|e| e.to_string())?;
    let rows = swap1l_table(n, l);
    let mut covered = BTreeSet::new();
    let mut compared = 0;
    for r in &rows {
        let (a, b) = r.labels;
        let Ok(img) = m.image_by_labels(a, b) else { continue };
        if *img != r.image {
            return Err(format!("n={n} l={l} row {} v[{a},{b}]: got {img}, expected {}", r.row, r.image));
        }
        covered.insert((a.min(b), a.max(b)));
        compared += 1;
    }
    // every coordinate of the swapped chart is described by some row
    let word = m.source_label();
    for c in p.chords() {
        let (a, b) = (word[c.i - 1], word[c.j - 1]);
        if !covered.contains(&(a.min(b), a.max(b))) {
            return Err(format!("n={n} l={l}: v[{a},{b}] not covered by any row"));
        }
    }
    Ok(compared)
}

/// Consistent patterns of the k-gon that also arise by coarsening consistent
/// n-gon patterns along `part`.
pub fn coarsened(n: usize, part: &IntervalPartition) -> BTreeSet<SignPattern> {
    let p = poly(n);
    consistent(n).iter().map(|s| coarsen(&p, part, s).unwrap()).collect()
}

/// `(ii)`, `(iii)` on the pentagon and `(i)` on the hexagon, as chord sign
/// requirements `(chord, negative)` in standard k-gon labels.
pub fn pentagon_case_ii() -> [((usize, usize), bool); 3] {
    // parts n, 1, 2, {3..n-2}, n-1: u_{n2} -, u_{1,n-1} -, u_{2,n-1} +
    [((1, 3), true), ((2, 5), true), ((3, 5), false)]
}

pub fn pentagon_case_iii() -> [((usize, usize), bool); 3] {
    // parts n, 1, 2, 3, {4..n-1}: u_{n2} -, u_{3n} +, u_{13} -
    [((1, 3), true), ((1, 4), false), ((2, 4), true)]
}

pub fn hexagon_case_i() -> [((usize, usize), bool); 4] {
    // parts n, 1, 2, S, i, T: u_{n2} -, u_{in} +, u_{i1} -, u_{i2} +
    [((1, 3), true), ((1, 5), false), ((2, 5), true), ((3, 5), false)]
}

pub fn matches(p: &Polygon, s: &SignPattern, reqs: &[((usize, usize), bool)]) -> bool {
    reqs.iter().all(|&((a, b), negative)| neg(p, s, a, b) == negative)
}

/// Lemma on length-two chords, checked directly on n-gon patterns: no
/// consistent `s` with `u_{n2}` negative meets `(i)`, `(ii)` or `(iii)`.
pub fn length_two_cases_direct(n: usize) -> Result<usize, String> {
    let p = poly(n);
    let mut checked = 0;
    for s in consistent(n).iter().filter(|s| neg(&p, s, n, 2)) {
        checked += 1;
        if neg(&p, s, 1, n - 1) && !neg(&p, s, 2, n - 1) {
            return Err(format!("n={n} {s} meets (ii)"));
        }
        if !neg(&p, s, 3, n) && neg(&p, s, 1, 3) {
            return Err(format!("n={n} {s} meets (iii)"));
        }
        for i in 4..=n - 2 {
            if !neg(&p, s, i, n) && neg(&p, s, i, 1) && !neg(&p, s, i, 2) {
                return Err(format!("n={n} {s} meets (i) at i={i}"));
            }
        }
    }
    Ok(checked)
}

/// `(M_i, u_in, u_1i, u_{l-1,i}, u_li)` rows that the octagon argument rules out.
pub const FORBIDDEN_ROWS: [[bool; 5]; 3] = [
    [true, false, false, false, false],
    [false, false, true, false, false],
    [false, false, false, true, false],
];

/// Octagon with parts n, 1, X={2..l-2}, l-1, l, Y={l+1..i-1}, i, Z={i+1..n-1}:
/// consistent octagon patterns with `O1O5` negative and the short chords
/// `O1O3, O1O4, O2O4, O2O5, O3O5` positive never restrict to a forbidden row
/// on `(O7O3, O7O1, O7O2, O7O4, O7O5)`. Returns the number of octagon
/// patterns meeting the hypotheses.
pub fn octagon_check() -> Result<usize, String> {
    let p = poly(8);
    let hyp = [((1, 5), true), ((1, 3), false), ((1, 4), false), ((2, 4), false), ((2, 5), false), ((3, 5), false)];
    let vars = [(7, 3), (7, 1), (7, 2), (7, 4), (7, 5)];
    let mut hits = 0;
    for s in consistent(8).iter().filter(|s| matches(&p, s, &hyp)) {
        hits += 1;
        let row: Vec<bool> = vars.iter().map(|&(a, b)| neg(&p, s, a, b)).collect();
        if FORBIDDEN_ROWS.iter().any(|f| f[..] == row[..]) {
            return Err(format!("octagon pattern {s} restricts to {row:?}"));
        }
    }
    Ok(hits)
}

/// Heptagon versions for `i = l+1` (parts n,1,X,l-1,l,i,Z) and `i = n-1`
/// (parts n,1,X,l-1,l,Y,i), where one of the five variables is not a chord.
pub fn heptagon_checks() -> Result<usize, String> {
    let p = poly(7);
    let hyp = [((1, 5), true), ((1, 3), false), ((1, 4), false), ((2, 4), false), ((2, 5), false), ((3, 5), false)];
    let pats = consistent(7);
    // i = l+1 at H6: (M, u_in, u_1i, u_{l-1,i}); u_li is a side
    let near = [(6, 3), (6, 1), (6, 2), (6, 4)];
    let forbidden_near = [[false, false, true, false], [false, false, false, true]];
    // i = n-1 at H7: (M, u_1i, u_{l-1,i}, u_li); u_in is a side
    let far = [(7, 3), (7, 2), (7, 4), (7, 5)];
    let forbidden_far = [[false, true, false, false], [false, false, true, false]];
    let mut hits = 0;
    for s in pats.iter().filter(|s| matches(&p, s, &hyp)) {
        hits += 1;
        let row: Vec<bool> = near.iter().map(|&(a, b)| neg(&p, s, a, b)).collect();
        if forbidden_near.iter().any(|f| f[..] == row[..]) {
            return Err(format!("heptagon (i = l+1) pattern {s} restricts to {row:?}"));
        }
        let row: Vec<bool> = far.iter().map(|&(a, b)| neg(&p, s, a, b)).collect();
        if forbidden_far.iter().any(|f| f[..] == row[..]) {
            return Err(format!("heptagon (i = n-1) pattern {s} restricts to {row:?}"));
        }
    }
    Ok(hits)
}

/// The lemma itself on n-gon patterns: whenever the shortest negative chord
/// is `{n, l}` with `l >= 3`, no `i` in `l+1..n-1` restricts to a forbidden
/// row. Returns the number of (pattern, i) pairs examined.
pub fn problematic_rows_direct(n: usize) -> Result<usize, String> {
    let p = poly(n);
    let mut checked = 0;
    for s in consistent(n) {
        for l in 3..=n / 2 {
            if !neg(&p, &s, n, l) {
                continue;
            }
            let shortest = s.negatives().map(|k| p.length(p.chord(k))).min().unwrap();
            if shortest != l {
                continue;
            }
            for i in l + 1..n {
                checked += 1;
                let m_i = neg_product(&p, &s, (2..=l - 2).map(|k| (i, k)));
                let row = [
                    m_i,
                    neg_product(&p, &s, [(i, n)]),
                    neg_product(&p, &s, [(1, i)]),
                    neg_product(&p, &s, [(l - 1, i)]),
                    neg_product(&p, &s, [(l, i)]),
                ];
                if FORBIDDEN_ROWS.contains(&row) {
                    return Err(format!("n={n} {s} (l={l}, i={i}) restricts to {row:?}"));
                }
            }
        }
    }
    Ok(checked)
}
