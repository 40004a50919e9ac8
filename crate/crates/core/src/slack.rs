//! Augmentation by ideal points at infinity and the bonnet sweep.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::coord::{ExtendedCoordinate, Rational};
use crate::error::{Result, ScarfError};
use crate::hypersurface::StaircaseRegion;
use crate::linalg::{solve, Solution};
use crate::neighborly::{enumerate_complex, genericity_scan, GenericityReport};
use crate::point::ExtendedPoint;
use crate::pointset::PointSet;
use crate::subdivision::chain_points;

/// `w_i`: `+inf` in coordinate `i` (1-based) and `-inf` elsewhere.
pub fn slack_vector(n: usize, i: usize) -> ExtendedPoint {
    ExtendedPoint::new(
        (1..=n)
            .map(|j| if j == i { ExtendedCoordinate::PosInf } else { ExtendedCoordinate::NegInf })
            .collect(),
    )
}

/// `Some(i)` when `p` is the slack vector `w_i`.
pub fn slack_index(p: &ExtendedPoint) -> Option<usize> {
    let mut found = None;
    for (j, c) in p.coords().iter().enumerate() {
        match c {
            ExtendedCoordinate::PosInf if found.is_none() => found = Some(j + 1),
            ExtendedCoordinate::NegInf => {}
            _ => return None,
        }
    }
    found
}

/// `A* = A ∪ {w_1, ..., w_n}`, slack vectors appended and labelled `w1`...
pub fn augment(set: &PointSet) -> Result<PointSet> {
    if !set.is_finite() {
        return Err(ScarfError::Precondition("augmentation needs finite coordinates".into()));
    }
    let n = set.dim();
    let mut star = set.clone();
    star.extend_labeled((1..=n).map(|i| (slack_vector(n, i), format!("w{i}"))).collect());
    Ok(star)
}

/// Shared-coordinate genericity test for an augmented set, ignoring ties at
/// infinity. Such ties occur only among slack vectors (`-inf` shared by
/// `w_i, w_j` when `n >= 3`) and no point can lie strictly below them.
pub fn is_generic_star(star: &PointSet) -> GenericityReport {
    genericity_scan(star, |c| !c.is_finite())
}

/// Outcome of the coordinate sweep: a maximal face whose bonnet lies above
/// the query point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BonnetCertificate {
    /// Members in the order they were collected.
    pub members: Vec<usize>,
    pub labels: Vec<String>,
    pub slack: Vec<bool>,
    pub join: ExtendedPoint,
    pub query: ExtendedPoint,
    /// Coordinate order used, 1-based.
    pub order: Vec<usize>,
}

impl BonnetCertificate {
    /// Members sorted by index.
    pub fn face(&self) -> Vec<usize> {
        let mut f = self.members.clone();
        f.sort_unstable();
        f
    }

    /// Independent check of the certificate against `star`; returns the
    /// first failed condition.
    pub fn verify(&self, star: &PointSet) -> std::result::Result<(), String> {
        let n = star.dim();
        if self.members.len() != n {
            return Err(format!("face has {} members, expected {n}", self.members.len()));
        }
        let pts: Vec<&ExtendedPoint> = self.members.iter().map(|&i| star.point(i)).collect();
        let join = crate::point::join(pts.iter().copied()).map_err(|e| e.to_string())?;
        if join != self.join {
            return Err("recorded join differs from the members' join".into());
        }
        if !self.query.lt(&join) {
            return Err(format!("query {} is not below the join {join}", self.query));
        }
        if let Some(a) = star.points().iter().position(|a| a.strictly_below(&join)) {
            return Err(format!("point {} lies in the open bonnet", star.label(a)));
        }
        for k in 0..n {
            let on_face: Vec<usize> =
                (0..star.len()).filter(|&i| star.point(i).leq(&join) && star.point(i)[k] == join[k]).collect();
            if on_face.len() != 1 || !self.members.contains(&on_face[0]) {
                return Err(format!("face {} of the bonnet holds points {on_face:?}", k + 1));
            }
        }
        let has_finite = star.points().iter().any(|p| slack_index(p).is_none());
        if has_finite && pts.iter().all(|p| slack_index(p).is_some()) {
            return Err("no finite member although the set has finite points".into());
        }
        Ok(())
    }
}

fn check_order(n: usize, order: &[usize]) -> Result<()> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n).collect::<Vec<_>>() {
        return Err(ScarfError::Precondition(format!("{order:?} is not a permutation of 1..={n}")));
    }
    Ok(())
}

/// Bonnet sweep from a finite query point `b` with no point of `star`
/// below it.
pub fn locate_bonnet(star: &PointSet, b: &ExtendedPoint, order: &[usize]) -> Result<BonnetCertificate> {
    let report = is_generic_star(star);
    if let Some(&first) = report.violations.first() {
        return Err(ScarfError::NotGeneric { pairs: report.violations.len(), first });
    }
    sweep(star, b, order)
}

/// The sweep without the up-front genericity scan; ties met during the sweep
/// are still rejected.
fn sweep(star: &PointSet, b: &ExtendedPoint, order: &[usize]) -> Result<BonnetCertificate> {
    let n = star.dim();
    star.check_point(b)?;
    check_order(n, order)?;
    if !b.is_finite() {
        return Err(ScarfError::Precondition("query point must be finite".into()));
    }
    if let Some(a) = star.points().iter().position(|a| a.leq(b)) {
        return Err(ScarfError::Precondition(format!(
            "point {} = {} lies below the query {b}",
            star.label(a),
            star.point(a)
        )));
    }
    let mut running = b.clone().into_coords();
    let mut members: Vec<usize> = Vec::with_capacity(n);
    for &k1 in order {
        let k = k1 - 1;
        let mut best: Option<(usize, &ExtendedCoordinate)> = None;
        let mut tie: Option<usize> = None;
        for (i, a) in star.points().iter().enumerate() {
            if members.contains(&i) {
                continue;
            }
            if !(0..n).all(|beta| beta == k || a[beta] <= running[beta]) {
                continue;
            }
            if a[k] <= running[k] {
                return Err(ScarfError::Inconsistency(format!("uncollected point {} lies below the sweep", star.label(i))));
            }
            match best {
                Some((_, v)) if a[k] > *v => {}
                Some((_, v)) if a[k] == *v => tie = Some(i),
                _ => {
                    best = Some((i, &a[k]));
                    tie = None;
                }
            }
        }
        let (chosen, value) = best.ok_or_else(|| {
            ScarfError::Inconsistency(format!("no candidate in coordinate {k1}; is the set augmented?"))
        })?;
        if let Some(other) = tie {
            return Err(ScarfError::NotGeneric { pairs: 1, first: (chosen.min(other), chosen.max(other)) });
        }
        running[k] = value.clone();
        members.push(chosen);
    }
    let join = ExtendedPoint::new(running);
    Ok(BonnetCertificate {
        labels: members.iter().map(|&i| star.label(i)).collect(),
        slack: members.iter().map(|&i| slack_index(star.point(i)).is_some()).collect(),
        members,
        join,
        query: b.clone(),
        order: order.to_vec(),
    })
}

/// Whether the finite point `p` lies in the finite part of `C(B, π)` for
/// some ordering `π` of `face`.
///
/// With leading finite chain points `c_1..c_k` and later points that are
/// infinite exactly on `K_j`, the finite part is
/// `{Σ r_j c_j + Σ s_j 1_{K_j} : r, s >= 0, Σ r_j = 1}`.
pub fn finite_part_contains(star: &PointSet, face: &[usize], p: &ExtendedPoint) -> Result<bool> {
    let target = p.finite_coords()?;
    for ordering in face.iter().copied().permutations(face.len()) {
        let chain = chain_points(star, &ordering)?;
        if cone_contains(&chain, &target) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn cone_contains(chain: &[ExtendedPoint], target: &[Rational]) -> bool {
    let n = target.len();
    let k = chain.iter().take_while(|c| c.is_finite()).count();
    if k == 0 {
        return false;
    }
    // column j: c_j with a trailing 1 for j < k, else the indicator of K_j with a trailing 0
    let columns: Vec<Vec<Rational>> = chain
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut col: Vec<Rational> = c
                .coords()
                .iter()
                .map(|x| match x {
                    ExtendedCoordinate::Finite(v) if j < k => v.clone(),
                    ExtendedCoordinate::PosInf => Rational::from_integer(BigInt::from(1)),
                    _ => Rational::zero(),
                })
                .collect();
            col.push(Rational::from_integer(BigInt::from(u8::from(j < k))));
            col
        })
        .collect();
    let mut rhs = target.to_vec();
    rhs.push(Rational::from_integer(BigInt::from(1)));
    // a feasible point has a basic solution on linearly independent columns
    for mask in 1u32..(1u32 << columns.len()) {
        let support: Vec<usize> = (0..columns.len()).filter(|&j| mask & (1 << j) != 0).collect();
        let rows: Vec<Vec<Rational>> = (0..=n).map(|r| support.iter().map(|&j| columns[j][r].clone()).collect()).collect();
        if let Solution::Unique(x) = solve(&rows, &rhs) {
            if x.iter().all(|v| !v.is_negative()) {
                return true;
            }
        }
    }
    false
}

/// Result of sampling lines parallel to `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub samples: usize,
    pub hits: usize,
    /// Samples whose boundary point was not found in a located cell.
    pub misses: Vec<ExtendedPoint>,
    /// Hits that needed an order other than `1..n`.
    pub non_default_order_hits: usize,
    /// Hits in no swept cell, found by scanning the maximal faces above the
    /// boundary point.
    pub scan_hits: usize,
}

impl CoverageReport {
    pub fn all_hit(&self) -> bool {
        self.misses.is_empty() && self.hits == self.samples
    }
}

/// Half the smallest positive distance between a coordinate of `p` and a
/// finite coordinate value of `star` in the same position; `1` if none.
fn offset_below(star: &PointSet, p: &[Rational]) -> Rational {
    let mut best: Option<Rational> = None;
    for a in star.points() {
        for (j, c) in a.coords().iter().enumerate() {
            if let ExtendedCoordinate::Finite(v) = c {
                let gap = (v - &p[j]).abs();
                if gap.is_positive() && best.as_ref().is_none_or(|b| &gap < b) {
                    best = Some(gap);
                }
            }
        }
    }
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    best.map_or_else(|| Rational::from_integer(BigInt::from(1)), |g| g * half)
}

enum Hit {
    Swept { non_default: bool },
    Scanned,
}

/// For each sample `h` on `H`, raise it to the boundary point `p`, locate a
/// bonnet from just below `p`, and test whether `p` lies in the finite part
/// of the located cell. Orders other than `1..n` are tried only on a miss;
/// if no swept cell holds `p`, the remaining maximal faces with `p <= ∨B`
/// are scanned.
pub fn coverage_check(star: &PointSet, samples: &[ExtendedPoint]) -> Result<CoverageReport> {
    let n = star.dim();
    let report = is_generic_star(star);
    if let Some(&first) = report.violations.first() {
        return Err(ScarfError::NotGeneric { pairs: report.violations.len(), first });
    }
    let finite_count = star.points().iter().filter(|p| slack_index(p).is_none()).count();
    if finite_count == 0 {
        return Ok(CoverageReport { samples: samples.len(), hits: samples.len(), ..Default::default() });
    }
    let nb = enumerate_complex(star, None);
    let region = StaircaseRegion::from_complex(&nb);
    let maximal = nb.maximal_faces();
    let default: Vec<usize> = (1..=n).collect();
    let orders: Vec<Vec<usize>> = std::iter::once(default.clone())
        .chain((1..=n).permutations(n).filter(|o| *o != default))
        .collect();
    let outcomes: Vec<Result<Option<Hit>>> = samples
        .par_iter()
        .map(|h| {
            let p = region.raise_to_surface(h)?;
            let pc = p.finite_coords()?;
            let delta = offset_below(star, &pc);
            let b = ExtendedPoint::from_rationals(pc.iter().map(|c| c - &delta).collect());
            let mut tried: HashSet<Vec<usize>> = HashSet::new();
            for (idx, order) in orders.iter().enumerate() {
                let cert = sweep(star, &b, order)?;
                let face = cert.face();
                if tried.insert(face.clone()) && finite_part_contains(star, &face, &p)? {
                    return Ok(Some(Hit::Swept { non_default: idx > 0 }));
                }
            }
            for face in &maximal {
                let above = face.join.as_ref().is_some_and(|j| p.leq(j));
                if above && !tried.contains(&face.members) && finite_part_contains(star, &face.members, &p)? {
                    return Ok(Some(Hit::Scanned));
                }
            }
            Ok(None)
        })
        .collect();
    let mut out = CoverageReport { samples: samples.len(), ..Default::default() };
    for (h, r) in samples.iter().zip(outcomes) {
        match r? {
            Some(Hit::Swept { non_default }) => {
                out.hits += 1;
                out.non_default_order_hits += usize::from(non_default);
            }
            Some(Hit::Scanned) => {
                out.hits += 1;
                out.scan_hits += 1;
            }
            None => out.misses.push(h.clone()),
        }
    }
    Ok(out)
}
