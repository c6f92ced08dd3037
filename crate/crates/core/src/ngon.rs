//! Combinatorics of the labeled n-gon: chords, crossings, cyclic intervals
//! and dihedral orderings.
//!
//! Vertices carry the labels `1..=n`; all vertex arithmetic wraps modulo `n`
//! back into that range, so `n + 1` is vertex `1` and `0` is vertex `n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported polygon. Sign patterns are packed into a `u128`, and
/// the 17-gon has 119 chords.
pub const MAX_N: usize = 17;

/// Unordered pair of non-adjacent vertices, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord {
    pub i: usize,
    pub j: usize,
}

impl Chord {
    /// Canonical chord `{a, b}` of the `n`-gon; the endpoints may be given
    /// in either order.
    pub fn new(n: usize, a: usize, b: usize) -> Result<Chord> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if i == 0 || j > n || j - i < 2 || j - i == n - 1 {
            return Err(Error::InvalidChord { n, i: a, j: b });
        }
        Ok(Chord { i, j })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.i == v || self.j == v
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.i, self.j)
    }
}

/// The labeled n-gon together with its canonical chord order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    n: usize,
    chords: Vec<Chord>,
    index: Vec<u8>,
}

const NO_CHORD: u8 = u8::MAX;

impl Polygon {
    pub fn new(n: usize) -> Result<Polygon> {
        if !(4..=MAX_N).contains(&n) {
            return Err(Error::PolygonSize { n, max: MAX_N });
        }
        let mut chords = Vec::with_capacity(n * (n - 3) / 2);
        let mut index = vec![NO_CHORD; (n + 1) * (n + 1)];
        for i in 1..=n {
            for j in i + 2..=n {
                if j - i == n - 1 {
                    continue;
                }
                let k = chords.len() as u8;
                index[i * (n + 1) + j] = k;
                index[j * (n + 1) + i] = k;
                chords.push(Chord { i, j });
            }
        }
        Ok(Polygon { n, chords, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of chords, `n(n-3)/2`.
    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    /// All chords in lexicographic `(i, j)` order. This order is the
    /// serialization order of every sign pattern.
    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn chord(&self, idx: usize) -> Chord {
        self.chords[idx]
    }

    /// Wraps any integer onto a vertex label in `1..=n`.
    pub fn wrap(&self, v: isize) -> usize {
        (v - 1).rem_euclid(self.n as isize) as usize + 1
    }

    /// Position of the chord between vertices `a` and `b` (labels are wrapped
    /// modulo `n`), or `None` when they are equal or adjacent.
    pub fn index_of(&self, a: usize, b: usize) -> Option<usize> {
        let a = self.wrap(a as isize);
        let b = self.wrap(b as isize);
        match self.index[a * (self.n + 1) + b] {
            NO_CHORD => None,
            k => Some(k as usize),
        }
    }

    pub fn chord_index(&self, c: Chord) -> Result<usize> {
        self.index_of(c.i, c.j)
            .filter(|_| c.j <= self.n)
            .ok_or(Error::InvalidChord { n: self.n, i: c.i, j: c.j })
    }

    pub fn chord_between(&self, a: usize, b: usize) -> Result<Chord> {
        let a = self.wrap(a as isize);
        let b = self.wrap(b as isize);
        Chord::new(self.n, a, b)
    }

    /// Cyclic length `min(j - i, n - (j - i))`, always in `2..=n/2`.
    pub fn length(&self, c: Chord) -> usize {
        let d = c.j - c.i;
        d.min(self.n - d)
    }

    /// True when the two chords cross in the interior of the polygon: the
    /// endpoints of `c2` lie on different open arcs cut out by `c1`.
    pub fn crosses(&self, c1: Chord, c2: Chord) -> Result<bool> {
        self.chord_index(c1)?;
        self.chord_index(c2)?;
        if c1 == c2 {
            return Err(Error::SameChord(c1, c2));
        }
        Ok(self.crosses_unchecked(c1, c2))
    }

    pub(crate) fn crosses_unchecked(&self, c1: Chord, c2: Chord) -> bool {
        let inside = |v: usize| c1.i < v && v < c1.j;
        let on_boundary = |v: usize| v == c1.i || v == c1.j;
        if on_boundary(c2.i) || on_boundary(c2.j) {
            return false;
        }
        inside(c2.i) != inside(c2.j)
    }

    /// Chords crossing `c`, in canonical order.
    pub fn crossing_set(&self, c: Chord) -> Vec<Chord> {
        self.chords
            .iter()
            .copied()
            .filter(|&d| d != c && self.crosses_unchecked(c, d))
            .collect()
    }

    pub fn identity_word(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }
}

/// Checks that `word` is a permutation of `1..=n`.
pub fn check_permutation(n: usize, word: &[usize]) -> Result<()> {
    let mut seen = vec![false; n + 1];
    if word.len() != n {
        return Err(Error::NotAPermutation { n, word: word.to_vec() });
    }
    for &x in word {
        if x == 0 || x > n || seen[x] {
            return Err(Error::NotAPermutation { n, word: word.to_vec() });
        }
        seen[x] = true;
    }
    Ok(())
}

/// A dihedral ordering of `1..=n`, stored as its canonical representative:
/// label `1` first and `word[1] < word[n-1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DihedralOrdering {
    word: Vec<usize>,
}

impl DihedralOrdering {
    pub fn identity(n: usize) -> DihedralOrdering {
        DihedralOrdering { word: (1..=n).collect() }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &x)| x == k + 1)
    }
}

impl fmt::Display for DihedralOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Canonical representative of the dihedral class of `word`: rotate label 1
/// to the front, then reflect if the second entry exceeds the last.
pub fn canonicalize(word: &[usize]) -> Result<DihedralOrdering> {
    let n = word.len();
    check_permutation(n, word)?;
    let start = word.iter().position(|&x| x == 1).expect("permutation contains 1");
    let mut out: Vec<usize> = (0..n).map(|k| word[(start + k) % n]).collect();
    if n > 2 && out[1] > out[n - 1] {
        out[1..].reverse();
    }
    Ok(DihedralOrdering { word: out })
}

/// The `2n` words in the dihedral class of `word` (rotations and their
/// reflections), not deduplicated.
pub fn dihedral_images(word: &[usize]) -> Vec<Vec<usize>> {
    let n = word.len();
    let mut out = Vec::with_capacity(2 * n);
    for r in 0..n {
        let rot: Vec<usize> = (0..n).map(|k| word[(r + k) % n]).collect();
        let mut rev = rot.clone();
        rev.reverse();
        out.push(rot);
        out.push(rev);
    }
    out
}

/// Iterator over the `(n-1)!/2` canonical dihedral orderings, in
/// lexicographic order of their words.
pub fn all_orderings(poly: &Polygon) -> impl Iterator<Item = DihedralOrdering> {
    let n = poly.n();
    let mut tail: Option<Vec<usize>> = Some((2..=n).collect());
    std::iter::from_fn(move || loop {
        let current = tail.take()?;
        let mut next = current.clone();
        if next_permutation(&mut next) {
            tail = Some(next);
        }
        if current[0] < current[current.len() - 1] {
            let mut word = Vec::with_capacity(n);
            word.push(1);
            word.extend_from_slice(&current);
            return Some(DihedralOrdering { word });
        }
    })
}

fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).expect("successor exists");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// `(x y) ∘ α`: swaps the entries of the word holding labels `x` and `y`.
pub fn compose_transposition(word: &[usize], x: usize, y: usize) -> Result<Vec<usize>> {
    let n = word.len();
    for label in [x, y] {
        if label == 0 || label > n {
            return Err(Error::LabelOutOfRange { n, label });
        }
    }
    if x == y {
        return Err(Error::DegenerateTransposition(x));
    }
    let px = word.iter().position(|&v| v == x).ok_or(Error::NotAPermutation { n, word: word.to_vec() })?;
    let py = word.iter().position(|&v| v == y).ok_or(Error::NotAPermutation { n, word: word.to_vec() })?;
    let mut out = word.to_vec();
    out.swap(px, py);
    Ok(out)
}

/// Partition of `1..=n` into `k` cyclic intervals `[a_m, a_{m+1} - 1]`, the
/// last one wrapping around from `a_k` to `a_1 - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    n: usize,
    cuts: Vec<usize>,
    part_of: Vec<usize>,
}

impl IntervalPartition {
    pub fn new(n: usize, cuts: &[usize]) -> Result<IntervalPartition> {
        let mut sorted = cuts.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != cuts.len() {
            return Err(Error::InvalidPartition(format!("repeated cut in {cuts:?}")));
        }
        if sorted.len() < 4 {
            return Err(Error::InvalidPartition(format!("need at least 4 parts, got {}", sorted.len())));
        }
        if sorted.iter().any(|&c| c == 0 || c > n) {
            return Err(Error::InvalidPartition(format!("cut out of range 1..={n}")));
        }
        let k = sorted.len();
        let mut part_of = vec![usize::MAX; n + 1];
        for m in 0..k {
            let mut v = sorted[m];
            let stop = sorted[(m + 1) % k];
            loop {
                part_of[v] = m;
                v = v % n + 1;
                if v == stop {
                    break;
                }
            }
        }
        Ok(IntervalPartition { n, cuts: sorted, part_of })
    }

    /// The partition of `1..=n` into its `n` singletons.
    pub fn singletons(n: usize) -> Result<IntervalPartition> {
        IntervalPartition::new(n, &(1..=n).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    /// Index (0-based) of the interval containing label `v`.
    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn intervals(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.len()];
        let mut v = self.cuts[0];
        for _ in 0..self.n {
            out[self.part_of[v]].push(v);
            v = v % self.n + 1;
        }
        out
    }
}
