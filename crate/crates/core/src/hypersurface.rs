//! The staircase region `dmA` and its boundary hypersurface.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::coord::{ExtendedCoordinate, Rational};
use crate::error::{Result, ScarfError};
use crate::neighborly::NeighborlyComplex;
use crate::point::ExtendedPoint;

/// Union of the bonnets `x - O^n` over the corner points `x ∈ mA`.
///
/// Corner coordinates may be `+inf` (slack-augmented sets); comparisons use
/// the extended order throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseRegion {
    dim: usize,
    corners: Vec<ExtendedPoint>,
}

impl StaircaseRegion {
    pub fn new(dim: usize, mut corners: Vec<ExtendedPoint>) -> Result<Self> {
        for c in &corners {
            if c.dim() != dim {
                return Err(ScarfError::DimensionMismatch { expected: dim, found: c.dim() });
            }
        }
        corners.sort();
        corners.dedup();
        Ok(StaircaseRegion { dim, corners })
    }

    /// Region spanned by the joins of the maximal faces of `nb`.
    pub fn from_complex(nb: &NeighborlyComplex) -> Self {
        StaircaseRegion { dim: nb.ground().dim(), corners: nb.corner_points() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn corners(&self) -> &[ExtendedPoint] {
        &self.corners
    }

    fn check(&self, b: &ExtendedPoint) -> Result<()> {
        if b.dim() != self.dim {
            return Err(ScarfError::DimensionMismatch { expected: self.dim, found: b.dim() });
        }
        Ok(())
    }

    /// `b ∈ dmA`: some corner dominates `b`.
    pub fn contains(&self, b: &ExtendedPoint) -> Result<bool> {
        self.check(b)?;
        Ok(self.corners.iter().any(|x| b.leq(x)))
    }

    /// `b ∈ ∂dmA`: `b` lies in the region and no corner is strictly above it
    /// in every coordinate.
    pub fn on_boundary(&self, b: &ExtendedPoint) -> Result<bool> {
        self.check(b)?;
        let inside = self.corners.iter().any(|x| b.leq(x));
        Ok(inside && !self.corners.iter().any(|x| b.strictly_below(x)))
    }

    /// The point where the line `h + t·1` meets the boundary.
    ///
    /// `t* = max_x min_j (x_j - h_j)`; infinite corner coordinates never
    /// attain the inner minimum unless every coordinate is infinite.
    pub fn raise_to_surface(&self, h: &ExtendedPoint) -> Result<ExtendedPoint> {
        self.check(h)?;
        if self.corners.is_empty() {
            return Err(ScarfError::Precondition("staircase region has no corners".into()));
        }
        let h = h.finite_coords()?;
        let mut best = ExtendedCoordinate::NegInf;
        for x in &self.corners {
            let mut inner = ExtendedCoordinate::PosInf;
            for (xj, hj) in x.coords().iter().zip(&h) {
                let term = match xj {
                    ExtendedCoordinate::Finite(v) => ExtendedCoordinate::Finite(v - hj),
                    other => other.clone(),
                };
                if term < inner {
                    inner = term;
                }
            }
            if inner > best {
                best = inner;
            }
        }
        match best {
            ExtendedCoordinate::Finite(t) => {
                Ok(ExtendedPoint::from_rationals(h.iter().map(|v| v + &t).collect()))
            }
            ExtendedCoordinate::PosInf => Err(ScarfError::Precondition(
                "line lies inside the region: the boundary is empty".into(),
            )),
            ExtendedCoordinate::NegInf => Err(ScarfError::Precondition(
                "line misses the region: every corner has a -inf coordinate".into(),
            )),
        }
    }

    /// Half the smallest positive gap between finite coordinate values of the
    /// corners and `query`, per coordinate; `1` when no gap exists.
    pub fn uniqueness_epsilon(&self, query: &ExtendedPoint) -> Rational {
        let mut best: Option<Rational> = None;
        for j in 0..self.dim {
            let mut vals: Vec<&Rational> = self
                .corners
                .iter()
                .chain(std::iter::once(query))
                .filter_map(|p| p[j].as_finite())
                .collect();
            vals.sort();
            vals.dedup();
            for w in vals.windows(2) {
                let gap = w[1] - w[0];
                if best.as_ref().is_none_or(|b| &gap < b) {
                    best = Some(gap);
                }
            }
        }
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        best.map_or_else(|| Rational::from_integer(BigInt::from(1)), |g| g * half)
    }
}

/// `b ∈ dmA` for the region `R`.
pub fn region_contains(region: &StaircaseRegion, b: &ExtendedPoint) -> Result<bool> {
    region.contains(b)
}

pub fn on_boundary(region: &StaircaseRegion, b: &ExtendedPoint) -> Result<bool> {
    region.on_boundary(b)
}

pub fn raise_to_surface(region: &StaircaseRegion, h: &ExtendedPoint) -> Result<ExtendedPoint> {
    region.raise_to_surface(h)
}

/// Projection along `1 = (1, ..., 1)` onto the hyperplane `H` of
/// coordinate-sum zero.
pub fn project_to_h(p: &ExtendedPoint) -> Result<ExtendedPoint> {
    let coords = p.finite_coords()?;
    let n = Rational::from_integer(BigInt::from(coords.len()));
    let mean = coords.iter().fold(Rational::zero(), |acc, c| acc + c) / n;
    Ok(ExtendedPoint::from_rationals(coords.iter().map(|c| c - &mean).collect()))
}

/// Whether a finite point lies on `H`.
pub fn on_h(p: &ExtendedPoint) -> bool {
    p.finite_coords()
        .map(|c| c.iter().fold(Rational::zero(), |acc, v| acc + v).is_zero())
        .unwrap_or(false)
}

/// `p + t·1`.
pub fn shift_diagonal(p: &ExtendedPoint, t: &Rational) -> Result<ExtendedPoint> {
    Ok(ExtendedPoint::from_rationals(p.finite_coords()?.into_iter().map(|c| c + t).collect()))
}

/// Whether `t` is the only parameter in `{t - eps, t, t + eps}` with
/// `h + t·1` on the boundary.
pub fn boundary_crossing_is_isolated(
    region: &StaircaseRegion,
    h: &ExtendedPoint,
    t: &Rational,
    eps: &Rational,
) -> Result<bool> {
    if !eps.is_positive() {
        return Err(ScarfError::Precondition("epsilon must be positive".into()));
    }
    let at = region.on_boundary(&shift_diagonal(h, t)?)?;
    let above = region.on_boundary(&shift_diagonal(h, &(t + eps))?)?;
    let below = region.on_boundary(&shift_diagonal(h, &(t - eps))?)?;
    Ok(at && !above && !below)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> ExtendedPoint {
        ExtendedPoint::from_ints(c)
    }

    fn q(s: &str) -> ExtendedCoordinate {
        s.parse().unwrap()
    }

    fn unit() -> StaircaseRegion {
        StaircaseRegion::new(2, vec![pt(&[1, 1])]).unwrap()
    }

    fn staircase() -> StaircaseRegion {
        StaircaseRegion::new(2, vec![pt(&[1, 4]), pt(&[2, 3]), pt(&[3, 2]), pt(&[4, 1])]).unwrap()
    }

    #[test]
    fn containment() {
        let half = ExtendedPoint::new(vec![q("1/2"), q("1/2")]);
        assert!(unit().contains(&half).unwrap());
        assert!(!unit().contains(&pt(&[2, 0])).unwrap());
        assert!(unit().contains(&pt(&[1, 1])).unwrap());
    }

    #[test]
    fn boundary() {
        assert!(unit().on_boundary(&ExtendedPoint::new(vec![q("1"), q("1/2")])).unwrap());
        assert!(!unit().on_boundary(&ExtendedPoint::new(vec![q("1/2"), q("1/2")])).unwrap());
        assert!(staircase().on_boundary(&pt(&[2, 3])).unwrap());
        assert!(!staircase().on_boundary(&ExtendedPoint::new(vec![q("3/2"), q("3/2")])).unwrap());
    }

    #[test]
    fn projection() {
        assert_eq!(project_to_h(&pt(&[1, 1])).unwrap(), pt(&[0, 0]));
        assert_eq!(project_to_h(&pt(&[2, 0])).unwrap(), pt(&[1, -1]));
        let p = project_to_h(&ExtendedPoint::new(vec![q("1/3"), q("7"), q("-2/5")])).unwrap();
        assert!(on_h(&p));
        assert!(project_to_h(&ExtendedPoint::new(vec![q("+inf"), q("0")])).is_err());
    }

    #[test]
    fn raising() {
        let r = StaircaseRegion::new(2, vec![pt(&[3, 1]), pt(&[1, 3])]).unwrap();
        assert_eq!(r.raise_to_surface(&pt(&[0, 0])).unwrap(), pt(&[1, 1]));
        assert_eq!(unit().raise_to_surface(&pt(&[0, 0])).unwrap(), pt(&[1, 1]));
        let h = ExtendedPoint::new(vec![q("-5/2"), q("5/2")]);
        let p = staircase().raise_to_surface(&h).unwrap();
        assert!(staircase().on_boundary(&p).unwrap());
        assert_eq!(project_to_h(&p).unwrap(), h);
        let empty = StaircaseRegion::new(2, vec![]).unwrap();
        assert!(empty.raise_to_surface(&pt(&[0, 0])).is_err());
    }

    #[test]
    fn infinite_corners() {
        // A = {(1,1)} augmented by slack vectors: corners (+inf,1), (1,+inf)
        let r = StaircaseRegion::new(
            2,
            vec![
                ExtendedPoint::new(vec![q("+inf"), q("1")]),
                ExtendedPoint::new(vec![q("1"), q("+inf")]),
            ],
        )
        .unwrap();
        assert!(r.on_boundary(&pt(&[7, 1])).unwrap());
        assert!(!r.on_boundary(&pt(&[7, 0])).unwrap());
        assert_eq!(r.raise_to_surface(&pt(&[-5, 5])).unwrap(), pt(&[1, 11]));
        let all = StaircaseRegion::new(2, vec![ExtendedPoint::new(vec![q("+inf"), q("+inf")])]).unwrap();
        assert!(all.raise_to_surface(&pt(&[0, 0])).is_err());
    }

    #[test]
    fn crossing_isolated() {
        let r = staircase();
        let h = pt(&[0, 0]);
        let p = r.raise_to_surface(&h).unwrap();
        let t = p[0].finite().unwrap() - Rational::zero();
        let eps = r.uniqueness_epsilon(&h);
        assert_eq!(eps, Rational::new(BigInt::from(1), BigInt::from(2)));
        assert!(boundary_crossing_is_isolated(&r, &h, &t, &eps).unwrap());
    }
}
