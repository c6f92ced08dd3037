//! Primitive and extended u-relations, sign patterns, consistency testing,
//! exhaustive enumeration and coarsening to smaller polygons.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::ngon::{Chord, IntervalPartition, Polygon};

/// One sign per chord of the n-gon, in canonical chord order. Bit `k` set
/// means chord `k` is negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignPattern {
    n: usize,
    bits: u128,
}

impl SignPattern {
    pub fn all_plus(n: usize) -> SignPattern {
        SignPattern { n, bits: 0 }
    }

    pub fn all_minus(n: usize) -> SignPattern {
        SignPattern { n, bits: low_mask(n * (n - 3) / 2) }
    }

    pub fn from_bits(n: usize, bits: u128) -> SignPattern {
        SignPattern { n, bits: bits & low_mask(n * (n - 3) / 2) }
    }

    /// Builds a pattern from `+`/`-` signs, one per chord in canonical order.
    pub fn from_signs(n: usize, negative: &[bool]) -> Result<SignPattern> {
        let m = n * (n - 3) / 2;
        if negative.len() != m {
            return Err(Error::SizeMismatch { expected: m, got: negative.len() });
        }
        let bits = negative
            .iter()
            .enumerate()
            .fold(0u128, |acc, (k, &neg)| acc | ((neg as u128) << k));
        Ok(SignPattern { n, bits })
    }

    /// Parses `+`/`-` characters (the Unicode minus sign is accepted too);
    /// commas, spaces and surrounding parentheses are ignored.
    pub fn parse(n: usize, text: &str) -> Result<SignPattern> {
        let mut signs = Vec::new();
        for ch in text.chars() {
            match ch {
                '+' => signs.push(false),
                '-' | '−' => signs.push(true),
                ',' | ' ' | '(' | ')' => {}
                other => return Err(Error::MalformedPattern(format!("unexpected character {other:?}"))),
            }
        }
        let m = n * (n - 3) / 2;
        if signs.len() != m {
            return Err(Error::MalformedPattern(format!(
                "expected {m} signs for n = {n}, got {}",
                signs.len()
            )));
        }
        SignPattern::from_signs(n, &signs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n * (self.n - 3) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn is_negative(&self, idx: usize) -> bool {
        self.bits >> idx & 1 == 1
    }

    pub fn with_sign(mut self, idx: usize, negative: bool) -> SignPattern {
        if negative {
            self.bits |= 1 << idx;
        } else {
            self.bits &= !(1 << idx);
        }
        self
    }

    pub fn flip(self, idx: usize) -> SignPattern {
        SignPattern { n: self.n, bits: self.bits ^ (1 << idx) }
    }

    pub fn negative_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_all_plus(&self) -> bool {
        self.bits == 0
    }

    /// Indices of the negative chords, ascending.
    pub fn negatives(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&k| self.is_negative(k))
    }

    /// Sign of the product of the chords in `mask`: true when negative.
    pub fn product_is_negative(&self, mask: u128) -> bool {
        (self.bits & mask).count_ones() & 1 == 1
    }

    /// Relabels vertices: the chord `{g(i), g(j)}` of the result carries the
    /// sign of `{i, j}` here. `g` maps `1..=n` bijectively (index 0 unused).
    pub fn permute_vertices(&self, poly: &Polygon, g: &[usize]) -> SignPattern {
        let mut out = 0u128;
        for (k, c) in poly.chords().iter().enumerate() {
            if self.is_negative(k) {
                let img = poly.index_of(g[c.i], g[c.j]).expect("vertex map preserves adjacency");
                out |= 1 << img;
            }
        }
        SignPattern { n: self.n, bits: out }
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::SizeMismatch { expected: n * (n - 3) / 2, got: self.len() });
        }
        Ok(())
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in 0..self.len() {
            f.write_str(if self.is_negative(k) { "-" } else { "+" })?;
        }
        Ok(())
    }
}

pub(crate) fn low_mask(m: usize) -> u128 {
    if m >= 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    }
}

/// `∏ t1 + ∏ t2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct URelation {
    n: usize,
    pub t1: Vec<Chord>,
    pub t2: Vec<Chord>,
    /// Cut points `(a, b, c, d)` of the four cyclic intervals, when the
    /// relation was generated from a partition.
    pub cuts: Option<[usize; 4]>,
    t1_mask: u128,
    t2_mask: u128,
}

impl URelation {
    fn from_chords(poly: &Polygon, t1: Vec<Chord>, t2: Vec<Chord>, cuts: Option<[usize; 4]>) -> URelation {
        let mask = |cs: &[Chord]| {
            cs.iter()
                .fold(0u128, |acc, &c| acc | 1 << poly.chord_index(c).expect("relation chords are valid"))
        };
        let t1_mask = mask(&t1);
        let t2_mask = mask(&t2);
        URelation { n: poly.n(), t1, t2, cuts, t1_mask, t2_mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn masks(&self) -> (u128, u128) {
        (self.t1_mask, self.t2_mask)
    }

    /// True when one of the two terms is a single chord.
    pub fn is_primitive(&self) -> bool {
        self.t1.len() == 1 || self.t2.len() == 1
    }

    /// The relation with its two terms exchanged (same equation).
    pub fn swapped(&self) -> URelation {
        URelation {
            n: self.n,
            t1: self.t2.clone(),
            t2: self.t1.clone(),
            cuts: self.cuts,
            t1_mask: self.t2_mask,
            t2_mask: self.t1_mask,
        }
    }

    /// Same equation, ignoring term order and provenance.
    pub fn same_equation(&self, other: &URelation) -> bool {
        (self.t1_mask, self.t2_mask) == (other.t1_mask, other.t2_mask)
            || (self.t1_mask, self.t2_mask) == (other.t2_mask, other.t1_mask)
    }
}

impl fmt::Display for URelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term = |cs: &[Chord]| {
            cs.iter()
                .map(|c| format!("u[{},{}]", c.i, c.j))
                .collect::<Vec<_>>()
                .join("*")
        };
        write!(f, "{} + {} = 1", term(&self.t1), term(&self.t2))
    }
}

/// `u_c + ∏_{c' crossing c} u_{c'} = 1`.
pub fn primitive_relation(poly: &Polygon, c: Chord) -> Result<URelation> {
    poly.chord_index(c)?;
    Ok(URelation::from_chords(poly, vec![c], poly.crossing_set(c), None))
}

pub fn primitive_relations(poly: &Polygon) -> Vec<URelation> {
    poly.chords()
        .iter()
        .map(|&c| URelation::from_chords(poly, vec![c], poly.crossing_set(c), None))
        .collect()
}

/// One relation per 4-subset `a < b < c < d` of the vertices: with the cyclic
/// intervals `A = [a, b)`, `B = [b, c)`, `C = [c, d)`, `D = [d, a)`, the terms
/// are the chords `A × C` and `B × D`.
pub fn extended_relations(poly: &Polygon) -> Vec<URelation> {
    let n = poly.n();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let part = IntervalPartition::new(n, &[a, b, c, d]).expect("four distinct cuts");
                    let iv = part.intervals();
                    let product = |x: &[usize], y: &[usize]| {
                        let mut cs: Vec<Chord> = x
                            .iter()
                            .flat_map(|&i| y.iter().map(move |&j| (i, j)))
                            .map(|(i, j)| Chord::new(n, i, j).expect("non-adjacent intervals"))
                            .collect();
                        cs.sort_unstable();
                        cs
                    };
                    out.push(URelation::from_chords(
                        poly,
                        product(&iv[0], &iv[2]),
                        product(&iv[1], &iv[3]),
                        Some([a, b, c, d]),
                    ));
                }
            }
        }
    }
    out
}

/// True when both terms of `r` are negative under `s`, which no real solution
/// of `x + y = 1` allows.
pub fn contradicts(s: &SignPattern, r: &URelation) -> Result<bool> {
    s.check_size(r.n)?;
    Ok(s.product_is_negative(r.t1_mask) && s.product_is_negative(r.t2_mask))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RelationSet {
    #[default]
    Extended,
    PrimitiveOnly,
}

/// Relation supports as bitmask pairs, ordered so that the most selective
/// relations are tested first.
#[derive(Clone, Debug)]
pub struct RelationTable {
    n: usize,
    masks: Vec<(u128, u128)>,
}

impl RelationTable {
    pub fn new(poly: &Polygon, set: RelationSet) -> RelationTable {
        let rels = match set {
            RelationSet::Extended => extended_relations(poly),
            RelationSet::PrimitiveOnly => primitive_relations(poly),
        };
        let mut masks: Vec<(u128, u128)> = rels.iter().map(URelation::masks).collect();
        masks.sort_by_key(|&(a, b)| (a | b).count_ones());
        RelationTable { n: poly.n(), masks }
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn is_consistent(&self, s: &SignPattern) -> Result<bool> {
        s.check_size(self.n)?;
        Ok(self.consistent_bits(s.bits))
    }

    #[inline]
    pub(crate) fn consistent_bits(&self, bits: u128) -> bool {
        self.masks
            .iter()
            .all(|&(a, b)| ((bits & a).count_ones() & (bits & b).count_ones() & 1) == 0)
    }
}

/// True iff no extended u-relation is contradicted by `s`.
pub fn is_consistent(poly: &Polygon, s: &SignPattern) -> Result<bool> {
    RelationTable::new(poly, RelationSet::Extended).is_consistent(s)
}

/// Default enumeration cap: `n = 9` already means `2^27` patterns.
pub const DEFAULT_CAP: usize = 9;

/// Largest polygon whose patterns fit the 64-bit enumeration kernel.
pub const ENUMERATION_LIMIT: usize = 12;

pub struct EnumerateOptions<'a> {
    pub set: RelationSet,
    pub cap: usize,
    /// Keep the consistent patterns, not only their number.
    pub collect: bool,
    /// Called with `(patterns done, total)` as chunks finish.
    pub progress: Option<&'a (dyn Fn(u64, u64) + Sync)>,
}

impl Default for EnumerateOptions<'_> {
    fn default() -> Self {
        EnumerateOptions { set: RelationSet::Extended, cap: DEFAULT_CAP, collect: true, progress: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub count: u64,
    /// Consistent patterns in increasing bit order, when collected.
    pub patterns: Option<Vec<SignPattern>>,
}

const CHUNK_BITS: u32 = 16;

/// Tests every one of the `2^(n(n-3)/2)` sign patterns against the chosen
/// relation set.
pub fn enumerate_consistent(poly: &Polygon, opts: &EnumerateOptions<'_>) -> Result<Enumeration> {
    let n = poly.n();
    let cap = opts.cap.min(ENUMERATION_LIMIT);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let table = RelationTable::new(poly, opts.set);
    let masks: Vec<(u64, u64)> = table.masks.iter().map(|&(a, b)| (a as u64, b as u64)).collect();
    let m = poly.chord_count() as u32;
    let total: u64 = 1 << m;
    let chunk_bits = CHUNK_BITS.min(m);
    let chunks = total >> chunk_bits;
    let done = AtomicU64::new(0);

    let run_chunk = |chunk: u64| -> (u64, Vec<u64>) {
        let start = chunk << chunk_bits;
        let end = start + (1 << chunk_bits);
        let mut count = 0;
        let mut found = Vec::new();
        for bits in start..end {
            if masks
                .iter()
                .all(|&(a, b)| ((bits & a).count_ones() & (bits & b).count_ones() & 1) == 0)
            {
                count += 1;
                if opts.collect {
                    found.push(bits);
                }
            }
        }
        if let Some(progress) = opts.progress {
            let d = done.fetch_add(end - start, Ordering::Relaxed) + (end - start);
            progress(d, total);
        }
        (count, found)
    };

    #[cfg(feature = "parallel")]
    let results: Vec<(u64, Vec<u64>)> = {
        use rayon::prelude::*;
        (0..chunks).into_par_iter().map(run_chunk).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<(u64, Vec<u64>)> = (0..chunks).map(run_chunk).collect();

    let count = results.iter().map(|r| r.0).sum();
    let patterns = opts.collect.then(|| {
        results
            .into_iter()
            .flat_map(|(_, found)| found)
            .map(|bits| SignPattern::from_bits(n, bits as u128))
            .collect()
    });
    Ok(Enumeration { count, patterns })
}

/// Convenience wrapper collecting all consistent patterns of the n-gon.
pub fn consistent_patterns(poly: &Polygon, set: RelationSet) -> Result<Vec<SignPattern>> {
    let opts = EnumerateOptions { set, cap: ENUMERATION_LIMIT, ..Default::default() };
    Ok(enumerate_consistent(poly, &opts)?.patterns.unwrap_or_default())
}

/// Restricts `s` to the k-gon whose vertices are the intervals of `part`:
/// the chord between intervals `I` and `J` gets the sign of `∏_{i∈I, j∈J} u_ij`.
pub fn coarsen(poly: &Polygon, part: &IntervalPartition, s: &SignPattern) -> Result<SignPattern> {
    s.check_size(poly.n())?;
    if part.n() != poly.n() {
        return Err(Error::InvalidPartition(format!("partition of {} labels used on the {}-gon", part.n(), poly.n())));
    }
    let k = part.len();
    let small = Polygon::new(k).map_err(|_| Error::InvalidPartition(format!("{k} parts")))?;
    let intervals = part.intervals();
    let mut bits = 0u128;
    for (idx, c) in small.chords().iter().enumerate() {
        let mut negative = false;
        for &i in &intervals[c.i - 1] {
            for &j in &intervals[c.j - 1] {
                let chord = poly.index_of(i, j).expect("non-adjacent intervals give chords");
                negative ^= s.is_negative(chord);
            }
        }
        if negative {
            bits |= 1 << idx;
        }
    }
    Ok(SignPattern::from_bits(k, bits))
}

impl FromStr for RelationSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "extended" => Ok(RelationSet::Extended),
            "primitive" | "primitive-only" => Ok(RelationSet::PrimitiveOnly),
            other => Err(Error::MalformedPattern(format!("unknown relation set {other}"))),
        }
    }
}
