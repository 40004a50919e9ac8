//! Seeded generators for test corpora and sample points.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coord::{ExtendedCoordinate, Rational};
use crate::error::{Result, ScarfError};
use crate::hypersurface::project_to_h;
use crate::neighborly::is_generic;
use crate::point::ExtendedPoint;
use crate::pointset::PointSet;

/// Default upper bound for generated integer coordinates.
pub const DEFAULT_MAX_COORD: i64 = 50;

const DRAW_BUDGET: usize = 200_000;
const RESTART_AFTER: usize = 2_000;

/// The single generator behind every randomized routine.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generic integer antichain with coordinates in `0..=50`.
pub fn random_generic_antichain(n: usize, count: usize, seed: u64) -> Result<PointSet> {
    random_generic_antichain_in(n, count, DEFAULT_MAX_COORD, seed)
}

/// Generic integer antichain with coordinates in `0..=max_coord`.
///
/// Points are drawn one at a time; a draw is rejected if it is comparable to
/// a kept point or breaks genericity of the kept set. A long run of
/// rejections discards the kept points and starts over.
pub fn random_generic_antichain_in(n: usize, count: usize, max_coord: i64, seed: u64) -> Result<PointSet> {
    if n < 2 || count < 1 {
        return Err(ScarfError::Precondition(format!("need n >= 2 and count >= 1, got n = {n}, count = {count}")));
    }
    let mut rng = rng_from_seed(seed);
    let mut kept: Vec<ExtendedPoint> = Vec::with_capacity(count);
    let mut stale = 0;
    for _ in 0..DRAW_BUDGET {
        if kept.len() == count {
            break;
        }
        if stale == RESTART_AFTER {
            kept.clear();
            stale = 0;
        }
        stale += 1;
        let coords: Vec<i64> = (0..n).map(|_| rng.random_range(0..=max_coord)).collect();
        let p = ExtendedPoint::from_ints(&coords);
        if kept.iter().any(|q| q.comparable(&p)) {
            continue;
        }
        kept.push(p);
        let trial = PointSet::new(n, kept.clone())?;
        if is_generic(&trial).generic {
            stale = 0;
        } else {
            kept.pop();
        }
    }
    if kept.len() < count {
        return Err(ScarfError::Precondition(format!(
            "rejection budget exhausted after {DRAW_BUDGET} draws with {} of {count} points; \
             try a larger coordinate range than 0..={max_coord}",
            kept.len()
        )));
    }
    PointSet::new(n, kept)
}

/// Rational in `[-spread, spread]` with a small random denominator.
pub fn random_rational<R: Rng>(rng: &mut R, spread: i64) -> Rational {
    let den: i64 = rng.random_range(1..=12);
    let num: i64 = rng.random_range(-spread * den..=spread * den);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Random rational point of the hyperplane of coordinate-sum zero.
pub fn random_h_sample<R: Rng>(rng: &mut R, n: usize, spread: i64) -> ExtendedPoint {
    let p = ExtendedPoint::from_rationals((0..n).map(|_| random_rational(rng, spread)).collect());
    project_to_h(&p).expect("finite point")
}

/// Strictly positive rational weights summing to one.
pub fn random_convex_weights<R: Rng>(rng: &mut R, k: usize) -> Vec<Rational> {
    let raw: Vec<i64> = (0..k).map(|_| rng.random_range(1..=20)).collect();
    let total: i64 = raw.iter().sum();
    raw.into_iter().map(|w| Rational::new(BigInt::from(w), BigInt::from(total))).collect()
}

/// Convex combination of finite points.
pub fn convex_combination(points: &[ExtendedPoint], weights: &[Rational]) -> Result<ExtendedPoint> {
    let n = points.first().map_or(0, ExtendedPoint::dim);
    let mut acc = vec![Rational::zero(); n];
    for (p, w) in points.iter().zip(weights) {
        for (a, c) in acc.iter_mut().zip(p.finite_coords()?) {
            *a += c * w;
        }
    }
    Ok(ExtendedPoint::from_rationals(acc))
}

/// Random finite point with no point of `set` below it, drawn from the box
/// spanned by the finite coordinates of `set`, widened by `margin`.
pub fn random_point_below<R: Rng>(rng: &mut R, set: &PointSet, margin: i64) -> Result<ExtendedPoint> {
    let n = set.dim();
    let mut lo = vec![-margin; n];
    let mut hi = vec![margin; n];
    for p in set.points() {
        for (j, c) in p.coords().iter().enumerate() {
            if let ExtendedCoordinate::Finite(v) = c {
                let v = v.floor().to_integer().try_into().unwrap_or(0i64);
                lo[j] = lo[j].min(v - margin);
                hi[j] = hi[j].max(v + margin);
            }
        }
    }
    for _ in 0..DRAW_BUDGET {
        let coords: Vec<Rational> = (0..n)
            .map(|j| {
                let den: i64 = rng.random_range(1..=6);
                Rational::new(BigInt::from(rng.random_range(lo[j] * den..=hi[j] * den)), BigInt::from(den))
            })
            .collect();
        let b = ExtendedPoint::from_rationals(coords);
        if !set.points().iter().any(|a| a.leq(&b)) {
            return Ok(b);
        }
    }
    Err(ScarfError::Precondition("no query point below the set found".into()))
}
