//! Points of `[-inf, +inf]^n`, the coordinate-wise order, joins and bonnet faces.

use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::coord::{ExtendedCoordinate, Rational};
use crate::error::{Result, ScarfError};

/// A point of `[-inf, +inf]^n`.
///
/// Coordinates are stored 0-based internally; [`ExtendedPoint::pi`] gives the
/// 1-based projection used in all user-facing output.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExtendedPoint(Vec<ExtendedCoordinate>);

/// Outcome of comparing two points under the coordinate-wise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Leq,
    Geq,
    Eq,
    Incomparable,
}

/// Full comparison report: the relation plus the strictness flags of the
/// first argument against the second (`x < y` and `x << y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub relation: Relation,
    /// `x << y`: every coordinate strictly smaller.
    pub strict_all: bool,
    /// `x < y`: `x <= y` and `x != y`.
    pub strict_some: bool,
}

impl ExtendedPoint {
    pub fn new(coords: Vec<ExtendedCoordinate>) -> Self {
        ExtendedPoint(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        ExtendedPoint(coords.iter().map(|&c| ExtendedCoordinate::int(c)).collect())
    }

    pub fn from_rationals(coords: Vec<Rational>) -> Self {
        ExtendedPoint(coords.into_iter().map(ExtendedCoordinate::Finite).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[ExtendedCoordinate] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<ExtendedCoordinate> {
        self.0
    }

    /// The `i`-th coordinate, 1-based.
    pub fn pi(&self, i: usize) -> &ExtendedCoordinate {
        assert!(i >= 1 && i <= self.dim(), "coordinate index {i} out of 1..={}", self.dim());
        &self.0[i - 1]
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(ExtendedCoordinate::is_finite)
    }

    /// All coordinates as rationals, or an error if any is a sentinel.
    pub fn finite_coords(&self) -> Result<Vec<Rational>> {
        self.0.iter().map(|c| c.finite().cloned()).collect()
    }

    pub fn check_dim(&self, other: &ExtendedPoint) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(ScarfError::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        Ok(())
    }

    /// `self <= other` coordinate-wise. Dimensions must already agree.
    pub fn leq(&self, other: &ExtendedPoint) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self << other`: strictly smaller in every coordinate.
    pub fn strictly_below(&self, other: &ExtendedPoint) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    /// `self < other`: `self <= other` and the points differ.
    pub fn lt(&self, other: &ExtendedPoint) -> bool {
        self.leq(other) && self != other
    }

    pub fn comparable(&self, other: &ExtendedPoint) -> bool {
        self.leq(other) || other.leq(self)
    }

    pub fn compare(&self, other: &ExtendedPoint) -> Result<Comparison> {
        self.check_dim(other)?;
        let le = self.leq(other);
        let ge = other.leq(self);
        let relation = match (le, ge) {
            (true, true) => Relation::Eq,
            (true, false) => Relation::Leq,
            (false, true) => Relation::Geq,
            (false, false) => Relation::Incomparable,
        };
        Ok(Comparison {
            relation,
            strict_all: self.strictly_below(other),
            strict_some: le && !ge,
        })
    }

    /// Coordinate-wise maximum of two points of equal dimension.
    pub fn join_with(&self, other: &ExtendedPoint) -> ExtendedPoint {
        ExtendedPoint(self.0.iter().zip(&other.0).map(|(a, b)| a.max(b).clone()).collect())
    }

    /// Coordinate-wise sum; both points must be finite.
    pub fn checked_add(&self, other: &ExtendedPoint) -> Result<ExtendedPoint> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()
            .map(ExtendedPoint)
    }

    pub fn checked_sub(&self, other: &ExtendedPoint) -> Result<ExtendedPoint> {
        self.check_dim(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(b))
            .collect::<Result<Vec<_>>>()
            .map(ExtendedPoint)
    }
}

impl Index<usize> for ExtendedPoint {
    type Output = ExtendedCoordinate;

    /// 0-based access; see [`ExtendedPoint::pi`] for the 1-based projection.
    fn index(&self, idx: usize) -> &ExtendedCoordinate {
        &self.0[idx]
    }
}

impl fmt::Display for ExtendedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// `x <=> y` under the coordinate-wise order.
pub fn compare(x: &ExtendedPoint, y: &ExtendedPoint) -> Result<Comparison> {
    x.compare(y)
}

/// Supremum of a nonempty list of points in `[-inf, +inf]^n`.
pub fn join<'a, I>(points: I) -> Result<ExtendedPoint>
where
    I: IntoIterator<Item = &'a ExtendedPoint>,
{
    let mut iter = points.into_iter();
    let first = iter.next().ok_or(ScarfError::EmptyJoin)?;
    let mut acc = first.clone();
    for p in iter {
        acc.check_dim(p)?;
        for (a, c) in acc.0.iter_mut().zip(&p.0) {
            if c > a {
                *a = c.clone();
            }
        }
    }
    Ok(acc)
}

/// Whether `z` lies in the interior `b - int O^n` of the bonnet with corner `b`.
pub fn bonnet_interior_contains(b: &ExtendedPoint, z: &ExtendedPoint) -> Result<bool> {
    b.check_dim(z)?;
    Ok(z.strictly_below(b))
}

/// A set `J` of 1-based coordinate indices naming the face `b - O^n_J`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceIndexSet(Vec<usize>);

impl FaceIndexSet {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        FaceIndexSet(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn codimension(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    pub fn is_disjoint(&self, other: &FaceIndexSet) -> bool {
        self.0.iter().all(|j| !other.contains(*j))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceMembership {
    /// `a` lies in the relative interior of `b - O^n_J`.
    Face(FaceIndexSet),
    NotInBonnet,
}

impl FaceMembership {
    pub fn face(&self) -> Option<&FaceIndexSet> {
        match self {
            FaceMembership::Face(j) => Some(j),
            FaceMembership::NotInBonnet => None,
        }
    }
}

/// The face of the bonnet `b - O^n` whose relative interior contains `a`.
pub fn face_membership(b: &ExtendedPoint, a: &ExtendedPoint) -> Result<FaceMembership> {
    b.check_dim(a)?;
    if !a.leq(b) {
        return Ok(FaceMembership::NotInBonnet);
    }
    let j = (1..=b.dim()).filter(|&j| a.pi(j) == b.pi(j)).collect();
    Ok(FaceMembership::Face(FaceIndexSet::new(j)))
}

/// Whether `z` lies in the closed axis-parallel box spanned by `x` and `y`.
pub fn rectangle_contains(x: &ExtendedPoint, y: &ExtendedPoint, z: &ExtendedPoint) -> Result<bool> {
    x.check_dim(y)?;
    x.check_dim(z)?;
    for ((a, b), c) in x.0.iter().zip(&y.0).zip(&z.0) {
        let (a, b, c) = (a.finite()?, b.finite()?, c.finite()?);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if c < lo || c > hi {
            return Ok(false);
        }
    }
    Ok(true)
}
