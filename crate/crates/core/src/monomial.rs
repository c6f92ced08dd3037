//! Signed Laurent-monomial chart changes between dihedral charts.
//!
//! A chart is the n-gon with positions `1..=n`; its coordinates are the
//! positional chords. A [`MonomialMap`] sends every chord of its source chart
//! to a signed monomial in the chords of its target chart. Which labels sit
//! at which positions is tracked only relatively: the source position `p`
//! holds the label that the target chart holds at position `relabel[p-1]`.
//!
//! Composition follows function composition of ring maps:
//! `compose(outer, inner)` maps `inner`'s source chart into `outer`'s target
//! chart, so [`map_for_ordering`] (`chart α → standard chart`) is built as
//! `E(q_K) ∘ … ∘ E(q_1)` for the adjacent swaps `q_1, …, q_K` that sort `α`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ngon::{check_permutation, Chord, Polygon};

/// `±∏ u_c^{e_c}` with zero exponents omitted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SignedMonomial {
    pub negative: bool,
    pub exps: BTreeMap<Chord, BigInt>,
}

impl SignedMonomial {
    pub fn one() -> SignedMonomial {
        SignedMonomial::default()
    }

    pub fn var(c: Chord) -> SignedMonomial {
        SignedMonomial::from_exps(false, [(c, 1)])
    }

    pub fn from_exps(negative: bool, exps: impl IntoIterator<Item = (Chord, i64)>) -> SignedMonomial {
        let mut m = SignedMonomial { negative, exps: BTreeMap::new() };
        for (c, e) in exps {
            m.add_exp(c, &BigInt::from(e));
        }
        m
    }

    fn add_exp(&mut self, c: Chord, e: &BigInt) {
        if e.is_zero() {
            return;
        }
        let entry = self.exps.entry(c).or_insert_with(BigInt::zero);
        *entry += e;
        if entry.is_zero() {
            self.exps.remove(&c);
        }
    }

    pub fn exponent(&self, c: Chord) -> BigInt {
        self.exps.get(&c).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &SignedMonomial) -> SignedMonomial {
        let mut out = self.clone();
        out.negative ^= other.negative;
        for (&c, e) in &other.exps {
            out.add_exp(c, e);
        }
        out
    }

    pub fn pow(&self, e: &BigInt) -> SignedMonomial {
        let mut out = SignedMonomial {
            negative: self.negative && e.is_odd_big(),
            exps: BTreeMap::new(),
        };
        for (&c, x) in &self.exps {
            out.add_exp(c, &(x * e));
        }
        out
    }

    pub fn inverse(&self) -> SignedMonomial {
        self.pow(&BigInt::from(-1))
    }

    pub fn negate(mut self) -> SignedMonomial {
        self.negative = !self.negative;
        self
    }

    /// Chords with an odd exponent, as a bitmask over the polygon's chords.
    pub fn odd_mask(&self, poly: &Polygon) -> u128 {
        self.exps
            .iter()
            .filter(|(_, e)| e.is_odd_big())
            .fold(0, |acc, (&c, _)| acc | 1 << poly.chord_index(c).expect("monomial over this polygon"))
    }
}

trait OddBig {
    fn is_odd_big(&self) -> bool;
}

impl OddBig for BigInt {
    fn is_odd_big(&self) -> bool {
        self.bit(0)
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        let factors: Vec<String> = self
            .exps
            .iter()
            .map(|(c, e)| {
                if e.is_one() {
                    format!("u[{},{}]", c.i, c.j)
                } else {
                    format!("u[{},{}]^{}", c.i, c.j, e)
                }
            })
            .collect();
        f.write_str(&factors.join("*"))
    }
}

/// Chart-change map: positional chords of the source chart to signed
/// monomials in the positional chords of the target chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    poly: Polygon,
    images: Vec<SignedMonomial>,
    relabel: Vec<usize>,
    /// Elementary positions `k` with `self = E(k_last) ∘ … ∘ E(k_first)`,
    /// innermost first, when the map was built from elementary factors.
    factors: Option<Vec<usize>>,
}

impl MonomialMap {
    pub fn identity(poly: &Polygon) -> MonomialMap {
        MonomialMap {
            poly: poly.clone(),
            images: poly.chords().iter().map(|&c| SignedMonomial::var(c)).collect(),
            relabel: poly.identity_word(),
            factors: Some(Vec::new()),
        }
    }

    /// Assembles a map from explicit images; `relabel` is the source word
    /// written in target positions.
    pub fn from_images(poly: &Polygon, images: Vec<SignedMonomial>, relabel: Vec<usize>) -> Result<MonomialMap> {
        if images.len() != poly.chord_count() {
            return Err(Error::SizeMismatch { expected: poly.chord_count(), got: images.len() });
        }
        check_permutation(poly.n(), &relabel)?;
        for m in &images {
            for &c in m.exps.keys() {
                poly.chord_index(c)?;
            }
        }
        Ok(MonomialMap { poly: poly.clone(), images, relabel, factors: None })
    }

    pub fn polygon(&self) -> &Polygon {
        &self.poly
    }

    pub fn n(&self) -> usize {
        self.poly.n()
    }

    pub fn images(&self) -> &[SignedMonomial] {
        &self.images
    }

    pub fn image(&self, c: Chord) -> Result<&SignedMonomial> {
        Ok(&self.images[self.poly.chord_index(c)?])
    }

    pub fn relabel(&self) -> &[usize] {
        &self.relabel
    }

    pub fn factors(&self) -> Option<&[usize]> {
        self.factors.as_deref()
    }

    /// Source chart's ordering word when the target chart carries `target`.
    pub fn source_word(&self, target: &[usize]) -> Vec<usize> {
        self.relabel.iter().map(|&p| target[p - 1]).collect()
    }

    /// The source ordering word relative to a standard-labeled target.
    pub fn source_label(&self) -> Vec<usize> {
        self.relabel.clone()
    }

    pub fn target_label(&self) -> Vec<usize> {
        self.poly.identity_word()
    }

    /// Image of the source coordinate attached to the labels `a`, `b`, when
    /// the target chart is the standard one.
    pub fn image_by_labels(&self, a: usize, b: usize) -> Result<&SignedMonomial> {
        let pos = |x: usize| {
            self.relabel
                .iter()
                .position(|&v| v == x)
                .map(|p| p + 1)
                .ok_or(Error::LabelOutOfRange { n: self.n(), label: x })
        };
        let c = self.poly.chord_between(pos(a)?, pos(b)?)?;
        self.image(c)
    }

    pub fn is_identity(&self) -> bool {
        self.relabel.iter().enumerate().all(|(k, &p)| p == k + 1)
            && self
                .images
                .iter()
                .zip(self.poly.chords())
                .all(|(m, &c)| *m == SignedMonomial::var(c))
    }

    /// Exponent matrix, row per source chord.
    pub fn exponent_matrix(&self) -> Vec<Vec<BigInt>> {
        self.images
            .iter()
            .map(|m| self.poly.chords().iter().map(|&c| m.exponent(c)).collect())
            .collect()
    }

    /// Substitutes `self`'s images into an arbitrary monomial over the
    /// source chart.
    pub fn apply(&self, m: &SignedMonomial) -> SignedMonomial {
        let mut out = SignedMonomial { negative: m.negative, exps: BTreeMap::new() };
        for (&c, e) in &m.exps {
            let img = &self.images[self.poly.chord_index(c).expect("same polygon")];
            out = out.mul(&img.pow(e));
        }
        out
    }

    /// Mod-2 reduction: the part of the map that acts on signs.
    pub fn parity(&self) -> ParityMap {
        ParityMap {
            n: self.n(),
            images: self.images.iter().map(|m| (m.negative, m.odd_mask(&self.poly))).collect(),
        }
    }

    /// One `u[i,j] -> ±∏ u[k,l]^e` line per source chord.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (c, m) in self.poly.chords().iter().zip(&self.images) {
            out.push_str(&format!("u[{},{}] -> {}\n", c.i, c.j, m));
        }
        out
    }

    /// Inverse map. Maps assembled from elementary factors are inverted by
    /// composing the factors in reverse order (each elementary map is its own
    /// inverse); other maps go through exact matrix inversion.
    pub fn invert(&self) -> Result<MonomialMap> {
        match &self.factors {
            Some(ks) => {
                let reversed: Vec<usize> = ks.iter().rev().copied().collect();
                Ok(compose_factors(&self.poly, &reversed))
            }
            None => self.invert_by_matrix(),
        }
    }

    /// Inverts the exponent matrix over the rationals and recovers the signs
    /// from the mod-2 system; fails unless the matrix is unimodular.
    pub fn invert_by_matrix(&self) -> Result<MonomialMap> {
        let m = self.poly.chord_count();
        let mut a: Vec<Vec<BigRational>> = self
            .exponent_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(BigRational::from_integer).collect())
            .collect();
        let mut inv: Vec<Vec<BigRational>> = (0..m)
            .map(|r| (0..m).map(|c| if r == c { BigRational::one() } else { BigRational::zero() }).collect())
            .collect();
        for col in 0..m {
            let pivot = (col..m).find(|&r| !a[r][col].is_zero()).ok_or(Error::NotUnimodular)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = &*x / &p;
            }
            for r in 0..m {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..m {
                    let da = &factor * &a[col][c];
                    a[r][c] -= da;
                    let di = &factor * &inv[col][c];
                    inv[r][c] -= di;
                }
            }
        }
        // F = E^{-1}; the sign of u_d's image is the parity of F_d · ε.
        let chords = self.poly.chords();
        let mut images = Vec::with_capacity(m);
        for row in &inv {
            let mut mono = SignedMonomial::one();
            for (c, x) in row.iter().enumerate() {
                if !x.is_integer() {
                    return Err(Error::NotUnimodular);
                }
                let e = x.to_integer();
                if e.is_odd_big() && self.images[c].negative {
                    mono.negative = !mono.negative;
                }
                mono.add_exp(chords[c], &e);
            }
            images.push(mono);
        }
        let mut relabel = vec![0; self.n()];
        for (p, &q) in self.relabel.iter().enumerate() {
            relabel[q - 1] = p + 1;
        }
        Ok(MonomialMap { poly: self.poly.clone(), images, relabel, factors: None })
    }

    /// Evaluates every image at nonzero exact values of the target chart's
    /// coordinates (indexed in canonical chord order).
    pub fn evaluate(&self, vals: &[BigRational]) -> Result<Vec<BigRational>> {
        if vals.len() != self.poly.chord_count() {
            return Err(Error::SizeMismatch { expected: self.poly.chord_count(), got: vals.len() });
        }
        if let Some(k) = vals.iter().position(Zero::is_zero) {
            return Err(Error::ZeroValue(self.poly.chord(k)));
        }
        self.images
            .iter()
            .map(|mono| {
                let mut v = if mono.negative { -BigRational::one() } else { BigRational::one() };
                for (&c, e) in &mono.exps {
                    let e = e.to_i32().ok_or_else(|| Error::ExponentOverflow(e.to_string()))?;
                    let base = &vals[self.poly.chord_index(c)?];
                    v *= num_traits::Pow::pow(base, e);
                }
                Ok(v)
            })
            .collect()
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `outer ∘ inner`: maps `inner`'s source chart to `outer`'s target chart.
pub fn compose(outer: &MonomialMap, inner: &MonomialMap) -> Result<MonomialMap> {
    if outer.n() != inner.n() {
        return Err(Error::SizeMismatch { expected: inner.n(), got: outer.n() });
    }
    let images = inner.images.iter().map(|m| outer.apply(m)).collect();
    let relabel = inner.relabel.iter().map(|&p| outer.relabel[p - 1]).collect();
    let factors = match (&outer.factors, &inner.factors) {
        (Some(o), Some(i)) => Some(i.iter().chain(o).copied().collect()),
        _ => None,
    };
    Ok(MonomialMap { poly: outer.poly.clone(), images, relabel, factors })
}

/// The chart change for swapping the labels at positions `k` and `k + 1`
/// (position `n + 1` is position `1`). Chords away from `k - 1, k, k + 1` are
/// fixed; `u_{i,k-1} ↦ u_{i,k-1} u_{i,k}`, `u_{i,k+1} ↦ u_{i,k} u_{i,k+1}`,
/// `u_{i,k} ↦ u_{i,k}^{-1}` and
/// `u_{k-1,k+1} ↦ -u_{k-1,k+1} ∏_{i ∉ {k, k±1}} u_{i,k}^{-1}`.
pub fn elementary_map(poly: &Polygon, k: usize) -> MonomialMap {
    let n = poly.n();
    let k = poly.wrap(k as isize);
    let km = poly.wrap(k as isize - 1);
    let kp = poly.wrap(k as isize + 1);
    let near = |v: usize| v == km || v == k || v == kp;
    let ch = |a: usize, b: usize| poly.chord_between(a, b).expect("elementary map chord");

    let images = poly
        .chords()
        .iter()
        .map(|&c| match (near(c.i), near(c.j)) {
            (false, false) => SignedMonomial::var(c),
            (true, true) => {
                let mut m = SignedMonomial::from_exps(true, [(ch(km, kp), 1)]);
                for i in (1..=n).filter(|&i| !near(i)) {
                    m.add_exp(ch(i, k), &BigInt::from(-1));
                }
                m
            }
            (x_near, _) => {
                let (x, i) = if x_near { (c.i, c.j) } else { (c.j, c.i) };
                if x == km {
                    SignedMonomial::from_exps(false, [(ch(i, km), 1), (ch(i, k), 1)])
                } else if x == kp {
                    SignedMonomial::from_exps(false, [(ch(i, k), 1), (ch(i, kp), 1)])
                } else {
                    SignedMonomial::from_exps(false, [(ch(i, k), -1)])
                }
            }
        })
        .collect();

    let mut relabel = poly.identity_word();
    relabel.swap(k - 1, kp - 1);
    MonomialMap { poly: poly.clone(), images, relabel, factors: Some(vec![k]) }
}

/// Composes elementary maps for a sequence of adjacent swaps applied, in
/// order, to the target chart's word. The result maps the chart reached at
/// the end back to the starting chart.
pub fn map_for_swap_sequence(poly: &Polygon, swaps: &[usize]) -> MonomialMap {
    compose_factors(poly, &swaps.iter().rev().copied().collect::<Vec<_>>())
}

/// `E(ks[last]) ∘ … ∘ E(ks[0])`.
fn compose_factors(poly: &Polygon, ks: &[usize]) -> MonomialMap {
    ks.iter().fold(MonomialMap::identity(poly), |acc, &k| {
        compose(&elementary_map(poly, k), &acc).expect("same polygon")
    })
}

/// Adjacent swaps realizing the transposition of positions `p < q`:
/// `p, p+1, …, q-1, q-2, …, p`.
pub fn transposition_swaps(p: usize, q: usize) -> Vec<usize> {
    let (p, q) = if p < q { (p, q) } else { (q, p) };
    (p..q).chain((p..q - 1).rev()).collect()
}

/// Chart change for exchanging the labels at positions `p` and `q`: maps the
/// chart with the two labels exchanged back to the current chart.
pub fn map_for_transposition(poly: &Polygon, p: usize, q: usize) -> Result<MonomialMap> {
    let n = poly.n();
    for x in [p, q] {
        if x == 0 || x > n {
            return Err(Error::LabelOutOfRange { n, label: x });
        }
    }
    if p == q {
        return Err(Error::DegenerateTransposition(p));
    }
    Ok(map_for_swap_sequence(poly, &transposition_swaps(p, q)))
}

/// Adjacent swaps (positions `k`, swapping `k` and `k+1`) that bubble-sort
/// `word` into `1, 2, …, n`, in the order they are applied.
pub fn bubble_sort_swaps(word: &[usize]) -> Vec<usize> {
    let mut w = word.to_vec();
    let mut swaps = Vec::new();
    let n = w.len();
    for pass in 0..n {
        let mut moved = false;
        for k in 0..n - 1 - pass {
            if w[k] > w[k + 1] {
                w.swap(k, k + 1);
                swaps.push(k + 1);
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    swaps
}

/// `φ_α`: the chart of the ordering word `α` to the standard chart, built by
/// sorting `α` with adjacent swaps and composing the elementary maps with the
/// first swap innermost.
pub fn map_for_ordering(poly: &Polygon, word: &[usize]) -> Result<MonomialMap> {
    if word.len() != poly.n() {
        return Err(Error::SizeMismatch { expected: poly.n(), got: word.len() });
    }
    check_permutation(poly.n(), word)?;
    Ok(compose_factors(poly, &bubble_sort_swaps(word)))
}

/// A monomial map reduced mod 2: per source chord, the sign of its image and
/// the set of target chords with odd exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityMap {
    n: usize,
    images: Vec<(bool, u128)>,
}

impl ParityMap {
    pub fn identity(poly: &Polygon) -> ParityMap {
        ParityMap { n: poly.n(), images: (0..poly.chord_count()).map(|k| (false, 1u128 << k)).collect() }
    }

    pub fn elementary(poly: &Polygon, k: usize) -> ParityMap {
        elementary_map(poly, k).parity()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[(bool, u128)] {
        &self.images
    }

    pub fn compose(&self, inner: &ParityMap) -> ParityMap {
        let images = inner
            .images
            .iter()
            .map(|&(neg, mask)| {
                let mut out = (neg, 0u128);
                let mut rest = mask;
                while rest != 0 {
                    let d = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let (dn, dm) = self.images[d];
                    out.0 ^= dn;
                    out.1 ^= dm;
                }
                out
            })
            .collect();
        ParityMap { n: self.n, images }
    }
}

/// Cached parity maps of the elementary chart changes of one polygon.
#[derive(Clone, Debug)]
pub struct ParityTable {
    poly: Polygon,
    elementary: Vec<ParityMap>,
}

impl ParityTable {
    pub fn new(poly: &Polygon) -> ParityTable {
        let elementary = (1..=poly.n()).map(|k| ParityMap::elementary(poly, k)).collect();
        ParityTable { poly: poly.clone(), elementary }
    }

    pub fn polygon(&self) -> &Polygon {
        &self.poly
    }

    pub fn elementary(&self, k: usize) -> &ParityMap {
        &self.elementary[k - 1]
    }

    fn compose_factors(&self, ks: impl Iterator<Item = usize>) -> ParityMap {
        ks.fold(ParityMap::identity(&self.poly), |acc, k| self.elementary(k).compose(&acc))
    }

    pub fn for_swap_sequence(&self, swaps: &[usize]) -> ParityMap {
        self.compose_factors(swaps.iter().rev().copied())
    }

    pub fn for_transposition(&self, p: usize, q: usize) -> ParityMap {
        self.for_swap_sequence(&transposition_swaps(p, q))
    }

    pub fn for_ordering(&self, word: &[usize]) -> ParityMap {
        self.compose_factors(bubble_sort_swaps(word).into_iter())
    }

    /// Mod-2 reduction of `φ_α^{-1}`.
    pub fn for_ordering_inverse(&self, word: &[usize]) -> ParityMap {
        self.compose_factors(bubble_sort_swaps(word).into_iter().rev())
    }
}
