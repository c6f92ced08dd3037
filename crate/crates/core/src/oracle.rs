//! Exact point configurations on the real projective line.
//!
//! Everything here is computed from 2×2 determinants of homogeneous
//! coordinates over `BigRational`, so the point at infinity needs no special
//! casing and no sign is ever rounded.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ngon::{check_permutation, DihedralOrdering, Polygon};
use crate::urelations::{extended_relations, SignPattern};

/// `(x : y)`, stored normalized: `(1 : v)` for the finite value `v`,
/// `(0 : 1)` for infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    x: BigRational,
    y: BigRational,
}

impl ProjectivePoint {
    pub fn new(x: BigRational, y: BigRational) -> Result<ProjectivePoint> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::DegenerateConfig(0, 0));
        }
        if x.is_zero() {
            return Ok(ProjectivePoint::infinity());
        }
        let y = y / &x;
        Ok(ProjectivePoint { x: BigRational::one(), y })
    }

    pub fn finite(v: BigRational) -> ProjectivePoint {
        ProjectivePoint { x: BigRational::one(), y: v }
    }

    pub fn int(v: i64) -> ProjectivePoint {
        ProjectivePoint::finite(BigRational::from_integer(v.into()))
    }

    pub fn infinity() -> ProjectivePoint {
        ProjectivePoint { x: BigRational::zero(), y: BigRational::one() }
    }

    pub fn is_infinite(&self) -> bool {
        self.x.is_zero()
    }

    pub fn value(&self) -> Option<&BigRational> {
        (!self.is_infinite()).then_some(&self.y)
    }

    pub fn coords(&self) -> (&BigRational, &BigRational) {
        (&self.x, &self.y)
    }

    /// `x_a y_b - x_b y_a`.
    pub fn det(&self, other: &ProjectivePoint) -> BigRational {
        &self.x * &other.y - &other.x * &self.y
    }

    /// Image under the matrix `[[a, b], [c, d]]` acting on `(x, y)`.
    pub fn transform(&self, m: &[[BigRational; 2]; 2]) -> Result<ProjectivePoint> {
        ProjectivePoint::new(&m[0][0] * &self.x + &m[0][1] * &self.y, &m[1][0] * &self.x + &m[1][1] * &self.y)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

/// `n` pairwise distinct points; label `k` is `points[k - 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    points: Vec<ProjectivePoint>,
}

impl PointConfig {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<PointConfig> {
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                if points[a].det(&points[b]).is_zero() {
                    return Err(Error::DegenerateConfig(a + 1, b + 1));
                }
            }
        }
        Ok(PointConfig { points })
    }

    pub fn from_values(vals: &[BigRational]) -> Result<PointConfig> {
        PointConfig::new(vals.iter().cloned().map(ProjectivePoint::finite).collect())
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn point(&self, label: usize) -> &ProjectivePoint {
        &self.points[label - 1]
    }

    fn p(&self, a: usize, b: usize) -> BigRational {
        self.point(a).det(self.point(b))
    }

    pub fn transform(&self, m: &[[BigRational; 2]; 2]) -> Result<PointConfig> {
        if (&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]).is_zero() {
            return Err(Error::NotUnimodular);
        }
        PointConfig::new(self.points.iter().map(|p| p.transform(m)).collect::<Result<_>>()?)
    }
}

fn label_check(n: usize, labels: &[usize]) -> Result<()> {
    for &l in labels {
        if l == 0 || l > n {
            return Err(Error::LabelOutOfRange { n, label: l });
        }
    }
    Ok(())
}

/// Places the label `α(k)` at the integer `k`.
pub fn realize(poly: &Polygon, alpha: &DihedralOrdering) -> PointConfig {
    let values: Vec<BigRational> = (1..=poly.n() as i64).map(|k| BigRational::from_integer(k.into())).collect();
    realize_at(alpha.word(), &values).expect("increasing integers are distinct")
}

/// Places the label `word[k]` at `values[k]`.
pub fn realize_at(word: &[usize], values: &[BigRational]) -> Result<PointConfig> {
    check_permutation(word.len(), word)?;
    if values.len() != word.len() {
        return Err(Error::SizeMismatch { expected: word.len(), got: values.len() });
    }
    let mut pts = vec![ProjectivePoint::infinity(); word.len()];
    for (&label, v) in word.iter().zip(values) {
        pts[label - 1] = ProjectivePoint::finite(v.clone());
    }
    PointConfig::new(pts)
}

/// The configuration `w` with `w_k = z_{word[k]}`.
pub fn relabel(z: &PointConfig, word: &[usize]) -> Result<PointConfig> {
    check_permutation(z.n(), word)?;
    PointConfig::new(word.iter().map(|&l| z.point(l).clone()).collect())
}

/// `[ij|kl] = p_ik p_jl / (p_il p_jk)`.
pub fn cross_ratio(z: &PointConfig, i: usize, j: usize, k: usize, l: usize) -> Result<BigRational> {
    let idx = [i, j, k, l];
    label_check(z.n(), &idx)?;
    for a in 0..4 {
        for b in a + 1..4 {
            if idx[a] == idx[b] {
                return Err(Error::RepeatedIndex(idx));
            }
        }
    }
    Ok(z.p(i, k) * z.p(j, l) / (z.p(i, l) * z.p(j, k)))
}

/// `u_ij = [i, i+1 | j+1, j]` per chord, in canonical order.
pub fn u_values(poly: &Polygon, z: &PointConfig) -> Result<Vec<BigRational>> {
    if z.n() != poly.n() {
        return Err(Error::SizeMismatch { expected: poly.n(), got: z.n() });
    }
    poly.chords()
        .iter()
        .map(|c| {
            let ip = poly.wrap(c.i as isize + 1);
            let jp = poly.wrap(c.j as isize + 1);
            cross_ratio(z, c.i, ip, jp, c.j)
        })
        .collect()
}

pub fn signs_from_points(poly: &Polygon, z: &PointConfig) -> Result<SignPattern> {
    let neg: Vec<bool> = u_values(poly, z)?.iter().map(Signed::is_negative).collect();
    SignPattern::from_signs(poly.n(), &neg)
}

/// Every extended relation (which include the primitive ones) holds exactly.
pub fn check_relations_vanish(poly: &Polygon, vals: &[BigRational]) -> Result<bool> {
    if vals.len() != poly.chord_count() {
        return Err(Error::SizeMismatch { expected: poly.chord_count(), got: vals.len() });
    }
    if let Some(k) = vals.iter().position(Zero::is_zero) {
        return Err(Error::ZeroValue(poly.chord(k)));
    }
    let product = |mask: u128| -> BigRational {
        (0..vals.len()).filter(|k| mask >> k & 1 == 1).fold(BigRational::one(), |acc, k| acc * &vals[k])
    };
    Ok(extended_relations(poly).iter().all(|r| {
        let (m1, m2) = r.masks();
        product(m1) + product(m2) == BigRational::one()
    }))
}

/// Inverts the embedding in the gauge `z_1 = 0`, `z_2 = 1`, `z_n = ∞`, using
/// `z_{i+1} = z_i / u_{in}`.
pub fn points_from_u(poly: &Polygon, vals: &[BigRational]) -> Result<PointConfig> {
    if !check_relations_vanish(poly, vals)? {
        return Err(Error::RelationViolation);
    }
    let n = poly.n();
    let mut z = vec![BigRational::zero(), BigRational::one()];
    for i in 2..=n - 2 {
        let u = &vals[poly.index_of(i, n).expect("chord {i,n}")];
        let next = &z[i - 1] / u;
        z.push(next);
    }
    let mut pts: Vec<ProjectivePoint> = z.into_iter().map(ProjectivePoint::finite).collect();
    pts.push(ProjectivePoint::infinity());
    PointConfig::new(pts)
}

/// The Möbius image sending `z_1, z_2, z_n` to `0, 1, ∞`:
/// `w ↦ [w 2 | 1 n]`.
pub fn gauge_fix(z: &PointConfig) -> Result<PointConfig> {
    let n = z.n();
    let (p1, p2, pn) = (z.point(1), z.point(2), z.point(n));
    let c = p2.det(pn);
    let d = p2.det(p1);
    let pts = z
        .points()
        .iter()
        .map(|w| ProjectivePoint::new(w.det(pn) * &d, w.det(p1) * &c))
        .collect::<Result<Vec<_>>>()?;
    PointConfig::new(pts)
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}
