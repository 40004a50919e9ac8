//! Brute-force oracles and the seeded corpus shared by the integration tests.
//!
//! The oracles read the definitions literally and share no code with the
//! library's enumeration paths beyond the point type.

#![allow(dead_code)]

use scarf_core::sample::{random_generic_antichain, rng_from_seed};
use scarf_core::{ExtendedPoint, PointSet};

use rand::Rng;

/// Join of the points at `members`; `None` for the empty set.
fn join_of(set: &PointSet, members: &[usize]) -> Option<ExtendedPoint> {
    let mut it = members.iter().map(|&i| set.point(i).clone());
    let first = it.next()?;
    Some(it.fold(first, |acc, p| acc.join_with(&p)))
}

/// Every subset `B` (as sorted indices, `∅` included) with no point of the
/// set strictly below `∨B` in every coordinate.
pub fn brute_force_nb(set: &PointSet) -> Vec<Vec<usize>> {
    let n = set.len();
    assert!(n <= 20, "oracle is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let ok = match join_of(set, &members) {
            None => true,
            Some(j) => !set.points().iter().any(|a| a.strictly_below(&j)),
        };
        if ok {
            out.push(members);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// Per-face genericity: for every neighborly `B` and coordinate `j`, at most
/// one point `a <= ∨B` has `a_j = (∨B)_j`.
pub fn brute_force_generic(set: &PointSet) -> bool {
    let n = set.dim();
    brute_force_nb(set).iter().filter(|b| !b.is_empty()).all(|b| {
        let j = join_of(set, b).unwrap();
        (0..n).all(|k| set.points().iter().filter(|a| a.leq(&j) && a[k] == j[k]).count() <= 1)
    })
}

/// Faces of a library complex in the oracle's order.
pub fn sorted_faces<'a>(faces: impl Iterator<Item = &'a Vec<usize>>) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = faces.cloned().collect();
    v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    v
}

/// Shape of corpus instance `i`: dimension in `{2, 3, 4}` and size in `1..=10`.
pub fn corpus_shape(i: u64) -> (usize, usize) {
    (2 + (i % 3) as usize, 1 + ((i * 7 + i / 3) % 10) as usize)
}

/// Seeded generic integer antichains with coordinates in `0..=50`.
pub fn corpus(count: u64) -> Vec<PointSet> {
    (0..count)
        .map(|i| {
            let (n, size) = corpus_shape(i);
            random_generic_antichain(n, size, 1000 + i).expect("corpus generation")
        })
        .collect()
}

/// Seeded antichains with small coordinates, mostly not generic.
pub fn tie_heavy_corpus(count: u64) -> Vec<PointSet> {
    (0..count)
        .map(|i| {
            let (n, size) = corpus_shape(i);
            let mut rng = rng_from_seed(5000 + i);
            let mut pts: Vec<ExtendedPoint> = Vec::new();
            for _ in 0..10_000 {
                if pts.len() == size {
                    break;
                }
                let c: Vec<i64> = (0..n).map(|_| rng.random_range(0..=5)).collect();
                let p = ExtendedPoint::from_ints(&c);
                if !pts.iter().any(|q| q.comparable(&p)) {
                    pts.push(p);
                }
            }
            PointSet::new(n, pts).unwrap()
        })
        .collect()
}
