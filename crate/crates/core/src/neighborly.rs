//! Neighborly subsets, genericity, and the complex `Nb(A)`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Result, ScarfError};
use crate::point::{face_membership, join, rectangle_contains, ExtendedPoint, FaceIndexSet};
use crate::pointset::PointSet;

/// A face of `Nb(A)`: sorted point indices together with their join.
///
/// `join` is `None` exactly for the empty face, which never takes part in
/// any geometric construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub members: Vec<usize>,
    pub join: Option<ExtendedPoint>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborlyReport {
    pub neighborly: bool,
    /// First point (by index) in the interior of the bonnet over `B`.
    pub witness: Option<usize>,
}

/// Index of the first point of `set` lying strictly below `corner` in every coordinate.
fn first_interior_point(set: &PointSet, corner: &ExtendedPoint) -> Option<usize> {
    set.points().iter().position(|a| a.strictly_below(corner))
}

/// Whether the subfamily `members` of `set` is `set`-neighborly.
pub fn is_neighborly(set: &PointSet, members: &[usize]) -> Result<NeighborlyReport> {
    for &i in members {
        set.check_index(i)?;
    }
    if members.is_empty() {
        return Ok(NeighborlyReport { neighborly: true, witness: None });
    }
    let corner = join(members.iter().map(|&i| set.point(i)))?;
    let witness = first_interior_point(set, &corner);
    Ok(NeighborlyReport { neighborly: witness.is_none(), witness })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityReport {
    pub generic: bool,
    /// Pairs `(i, j)`, `i < j`, sharing a coordinate value with no point
    /// strictly below their join.
    pub violations: Vec<(usize, usize)>,
}

/// Shared-coordinate test: whenever two points agree in some coordinate,
/// some point must lie strictly below their join in every coordinate.
///
/// `skip_tie` lets callers ignore particular shared values (the slack-vector
/// augmentation ignores ties at infinity).
pub(crate) fn genericity_scan<F>(set: &PointSet, skip_tie: F) -> GenericityReport
where
    F: Fn(&crate::coord::ExtendedCoordinate) -> bool,
{
    let pts = set.points();
    let mut violations = Vec::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let shares = pts[i]
                .coords()
                .iter()
                .zip(pts[j].coords())
                .any(|(a, b)| a == b && !skip_tie(a));
            if !shares {
                continue;
            }
            let corner = pts[i].join_with(&pts[j]);
            if first_interior_point(set, &corner).is_none() {
                violations.push((i, j));
            }
        }
    }
    GenericityReport { generic: violations.is_empty(), violations }
}

/// Genericity of a finite set via the shared-coordinate witness criterion.
pub fn is_generic(set: &PointSet) -> GenericityReport {
    genericity_scan(set, |_| false)
}

/// The complex `Nb(A)` of a finite point set, with the join of every face.
#[derive(Clone, Debug)]
pub struct NeighborlyComplex {
    ground: PointSet,
    complex: SimplicialComplex,
    joins: HashMap<Vec<usize>, ExtendedPoint>,
    generic: bool,
}

/// Enumerate `{B ⊆ A : B neighborly, |B| <= max_dim + 1}`.
///
/// Faces are grown one vertex at a time; `B ∪ {a}` with `a > max(B)` is tested
/// only when every codimension-one subface is already present.
pub fn enumerate_complex(set: &PointSet, max_dim: Option<usize>) -> NeighborlyComplex {
    let cap = max_dim.map_or(set.len(), |d| (d + 1).min(set.len()));
    let mut layers: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
    let mut joins: HashMap<Vec<usize>, ExtendedPoint> = HashMap::new();
    let mut present: HashSet<Vec<usize>> = HashSet::new();

    if cap >= 1 {
        let mut singles = Vec::new();
        for (i, p) in set.points().iter().enumerate() {
            if first_interior_point(set, p).is_none() {
                singles.push(vec![i]);
                joins.insert(vec![i], p.clone());
            }
        }
        present.extend(singles.iter().cloned());
        layers.push(singles);
    }

    let mut size = 1;
    while size < cap && !layers[size].is_empty() {
        let current = &layers[size];
        let grown: Vec<(Vec<usize>, ExtendedPoint)> = current
            .par_iter()
            .flat_map_iter(|face| {
                let base = &joins[face];
                let last = *face.last().expect("nonempty face");
                let present = &present;
                ((last + 1)..set.len()).filter_map(move |a| {
                    let mut candidate = face.clone();
                    candidate.push(a);
                    // every subface containing `a` must already be a face
                    let closed = (0..face.len()).all(|skip| {
                        let mut sub = candidate.clone();
                        sub.remove(skip);
                        present.contains(&sub)
                    });
                    if !closed {
                        return None;
                    }
                    let corner = base.join_with(set.point(a));
                    if first_interior_point(set, &corner).is_some() {
                        return None;
                    }
                    Some((candidate, corner))
                })
            })
            .collect();
        let mut next = Vec::with_capacity(grown.len());
        for (face, corner) in grown {
            present.insert(face.clone());
            joins.insert(face.clone(), corner);
            next.push(face);
        }
        layers.push(next);
        size += 1;
    }

    NeighborlyComplex {
        complex: SimplicialComplex::from_layers(set.len(), layers),
        ground: set.clone(),
        joins,
        generic: is_generic(set).generic,
    }
}

impl NeighborlyComplex {
    pub fn ground(&self) -> &PointSet {
        &self.ground
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Whether the ground set passed the genericity test.
    pub fn is_generic(&self) -> bool {
        self.generic
    }

    /// Join of a nonempty face of the complex.
    pub fn join_of(&self, members: &[usize]) -> Option<&ExtendedPoint> {
        self.joins.get(members)
    }

    pub fn face(&self, members: &[usize]) -> Option<Face> {
        if members.is_empty() {
            return Some(Face { members: vec![], join: None });
        }
        self.joins
            .get(members)
            .map(|j| Face { members: members.to_vec(), join: Some(j.clone()) })
    }

    /// Every face, including `∅`, by increasing size.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.complex.faces().map(|f| Face {
            members: f.clone(),
            join: self.joins.get(f).cloned(),
        })
    }

    /// Faces not properly contained in any other face.
    pub fn maximal_faces(&self) -> Vec<Face> {
        self.complex
            .facets()
            .into_iter()
            .map(|f| {
                let join = self.joins.get(&f).cloned();
                Face { members: f, join }
            })
            .collect()
    }

    /// `mA`: joins of the maximal faces, deduplicated and sorted.
    pub fn corner_points(&self) -> Vec<ExtendedPoint> {
        let mut out: Vec<ExtendedPoint> =
            self.maximal_faces().into_iter().filter_map(|f| f.join).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Faces whose join is `<= b` (or `< b` when `strict`), as a subcomplex.
    pub fn restrict_below(&self, b: &ExtendedPoint, strict: bool) -> SimplicialComplex {
        let keep = |f: &Vec<usize>| match self.joins.get(f) {
            None => true,
            Some(j) => {
                if strict {
                    j.lt(b)
                } else {
                    j.leq(b)
                }
            }
        };
        let layers = (0..=(self.complex.dim() + 1) as usize)
            .map(|k| self.complex.faces_of_size(k).iter().filter(|f| keep(f)).cloned().collect())
            .collect();
        SimplicialComplex::from_layers(self.complex.vertex_count(), layers)
    }

    /// For each member `b` of the face, the set `J_b` of coordinates where `b`
    /// attains the join.
    pub fn join_face_partition(&self, members: &[usize]) -> Option<Vec<FaceIndexSet>> {
        let corner = self.joins.get(members)?;
        members
            .iter()
            .map(|&i| {
                face_membership(corner, self.ground.point(i))
                    .ok()
                    .and_then(|m| m.face().cloned())
            })
            .collect()
    }
}

/// Points `a` of `set`, `a != y`, such that `{a, y}` is `set`-neighborly.
pub fn neighbors_of(set: &PointSet, y: &ExtendedPoint) -> Result<Vec<usize>> {
    set.check_point(y)?;
    Ok((0..set.len())
        .filter(|&i| {
            let a = set.point(i);
            a != y && first_interior_point(set, &a.join_with(y)).is_none()
        })
        .collect())
}

/// Weak neighbors of `y`: points `x != y` whose rectangle to `y` holds no
/// third point of `set`. Direct rectangle scan; works for rational data.
pub fn weak_neighbors(set: &PointSet, y: &ExtendedPoint) -> Result<Vec<usize>> {
    set.check_point(y)?;
    if !set.is_finite() || !y.is_finite() {
        return Err(ScarfError::InfiniteArithmetic);
    }
    let mut out = Vec::new();
    'outer: for (i, x) in set.points().iter().enumerate() {
        if x == y {
            continue;
        }
        for (k, z) in set.points().iter().enumerate() {
            if k != i && z != y && rectangle_contains(x, y, z)? {
                continue 'outer;
            }
        }
        out.push(i);
    }
    Ok(out)
}

/// Weak neighbors of an integer point via orthant-wise minimal elements.
///
/// Translating by `-y`, `x` is a weak neighbor exactly when `x - y` is
/// minimal, in the order of its orthant, among the nonzero translated points
/// of that orthant. Each orthant is folded onto `N^n` and reduced with
/// [`minimal_indices`].
pub fn weak_neighbors_orthant(set: &PointSet, y: &ExtendedPoint) -> Result<Vec<usize>> {
    set.check_point(y)?;
    let to_int = |p: &ExtendedPoint| -> Result<Vec<BigInt>> {
        p.coords()
            .iter()
            .map(|c| c.as_integer().ok_or_else(|| ScarfError::NotInteger(c.to_string())))
            .collect()
    };
    let origin = to_int(y)?;
    let diffs: Vec<Vec<BigInt>> = set
        .points()
        .iter()
        .map(|p| Ok(to_int(p)?.into_iter().zip(&origin).map(|(a, b)| a - b).collect()))
        .collect::<Result<_>>()?;
    let n = set.dim();
    if n > 20 {
        return Err(ScarfError::ScaleGuard { what: "orthant count exponent", size: n, limit: 20 });
    }
    let mut hit = vec![false; set.len()];
    for signs in 0u32..(1u32 << n) {
        let negative = |i: usize| signs & (1 << i) != 0;
        let mut members = Vec::new();
        let mut folded = Vec::new();
        for (idx, d) in diffs.iter().enumerate() {
            if d.iter().all(Zero::is_zero) {
                continue;
            }
            let inside = d.iter().enumerate().all(|(i, c)| {
                if negative(i) {
                    !c.is_positive()
                } else {
                    !c.is_negative()
                }
            });
            if inside {
                members.push(idx);
                folded.push(d.iter().map(BigInt::abs).collect::<Vec<_>>());
            }
        }
        for m in minimal_indices(&folded) {
            hit[members[m]] = true;
        }
    }
    Ok((0..set.len()).filter(|&i| hit[i]).collect())
}

/// Indices of the coordinate-wise minimal vectors in `items`, ascending.
/// Among equal vectors only the first occurrence is reported.
pub fn minimal_indices<T: Ord>(items: &[Vec<T>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..items.len()).collect();
    // a strictly smaller vector is also lexicographically smaller
    order.sort_by(|&a, &b| items[a].cmp(&items[b]).then(a.cmp(&b)));
    let mut kept: Vec<usize> = Vec::new();
    for &i in &order {
        let dominated = kept
            .iter()
            .any(|&k| items[k].iter().zip(&items[i]).all(|(a, b)| a <= b));
        if !dominated {
            kept.push(i);
        }
    }
    kept.sort_unstable();
    kept
}

/// The `<=`-minimal elements of a finite list of points of `N^n`.
pub fn minimal_elements(points: &[ExtendedPoint]) -> Result<Vec<ExtendedPoint>> {
    let mut vecs = Vec::with_capacity(points.len());
    for p in points {
        let mut v = Vec::with_capacity(p.dim());
        for c in p.coords() {
            match c.as_integer() {
                Some(i) if !i.is_negative() => v.push(i),
                _ => return Err(ScarfError::NotNatural(c.to_string())),
            }
        }
        vecs.push(v);
    }
    Ok(minimal_indices(&vecs).into_iter().map(|i| points[i].clone()).collect())
}

/// Maximal faces of `Nb(A)` and the deduplicated list `mA` of their joins.
pub fn maximal_faces(set: &PointSet) -> (Vec<Face>, Vec<ExtendedPoint>) {
    let nb = enumerate_complex(set, None);
    (nb.maximal_faces(), nb.corner_points())
}
