//! Posets of joins, order and crosscut complexes, and exact homology.

use std::collections::{HashMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Result, ScarfError};
use crate::guard::ScaleGuards;
use crate::linalg::{smith_invariants, SparseMatrix};
use crate::neighborly::enumerate_complex;
use crate::point::ExtendedPoint;
use crate::pointset::PointSet;

const CHAIN_LIMIT: usize = 2_000_000;
const DENSE_LIMIT: usize = 4_000_000;

/// Finite poset stored as its full `<=` relation.
///
/// `up[i]` holds every `j` with `i <= j`, `down[i]` every `j` with `j <= i`.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    points: Vec<ExtendedPoint>,
    labels: Vec<String>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl FinitePoset {
    /// Distinct points under the coordinate-wise order.
    pub fn from_points(points: Vec<ExtendedPoint>) -> Result<Self> {
        let n = points.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                if points[i].leq(&points[j]) {
                    if i != j && points[j].leq(&points[i]) {
                        return Err(ScarfError::DuplicatePoint { first: i.min(j), second: i.max(j) });
                    }
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        let labels = points.iter().map(ToString::to_string).collect();
        Ok(FinitePoset { points, labels, up, down })
    }

    /// Abstract poset from a `<=` matrix, which must be a partial order.
    pub fn from_relation(labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(ScarfError::Precondition("relation matrix does not match the labels".into()));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                if leq[i][j] {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        let poset = FinitePoset { points: Vec::new(), labels, up, down };
        if let Some(msg) = poset.order_violation() {
            return Err(ScarfError::Precondition(msg));
        }
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Underlying points; empty for abstract posets.
    pub fn points(&self) -> &[ExtendedPoint] {
        &self.points
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, p: &ExtendedPoint) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.up[i].contains(j)
    }

    /// First failure of reflexivity, antisymmetry or transitivity.
    pub fn order_violation(&self) -> Option<String> {
        let n = self.len();
        for i in 0..n {
            if !self.leq(i, i) {
                return Some(format!("relation is not reflexive at {}", self.labels[i]));
            }
            for j in self.up[i].ones() {
                if i != j && self.leq(j, i) {
                    return Some(format!("{} and {} violate antisymmetry", self.labels[i], self.labels[j]));
                }
                if !self.up[j].is_subset(&self.up[i]) {
                    return Some(format!("relation is not transitive through {}", self.labels[j]));
                }
            }
        }
        None
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].count_ones(..) == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].count_ones(..) == 1).collect()
    }

    /// `covers()[i]` lists the `j` covering `i`.
    pub fn covers(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|i| {
                self.up[i]
                    .ones()
                    .filter(|&j| {
                        if j == i {
                            return false;
                        }
                        let mut between = self.up[i].clone();
                        between.intersect_with(&self.down[j]);
                        between.count_ones(..) == 2
                    })
                    .collect()
            })
            .collect()
    }

    /// Induced subposet on `indices`, in the given order.
    pub fn restrict(&self, indices: &[usize]) -> FinitePoset {
        let k = indices.len();
        let mut up = vec![FixedBitSet::with_capacity(k); k];
        let mut down = vec![FixedBitSet::with_capacity(k); k];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                if self.leq(i, j) {
                    up[a].insert(b);
                    down[b].insert(a);
                }
            }
        }
        FinitePoset {
            points: if self.points.is_empty() {
                Vec::new()
            } else {
                indices.iter().map(|&i| self.points[i].clone()).collect()
            },
            labels: indices.iter().map(|&i| self.labels[i].clone()).collect(),
            up,
            down,
        }
    }

    /// `P_{<p}` (or `P_{<=p}`).
    pub fn below(&self, p: usize, strict: bool) -> FinitePoset {
        let idx: Vec<usize> = self.down[p].ones().filter(|&i| !strict || i != p).collect();
        self.restrict(&idx)
    }

    /// Indices in an order compatible with `<=`.
    fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(..), i));
        order
    }

    /// Every maximal chain, bottom to top.
    pub fn maximal_chains(&self) -> Result<Vec<Vec<usize>>> {
        let covers = self.covers();
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = self.minimal_elements().into_iter().map(|m| vec![m]).collect();
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            if covers[last].is_empty() {
                out.push(chain);
                if out.len() > CHAIN_LIMIT {
                    return Err(ScarfError::ScaleGuard { what: "maximal chains", size: out.len(), limit: CHAIN_LIMIT });
                }
                continue;
            }
            for &next in covers[last].iter().rev() {
                let mut c = chain.clone();
                c.push(next);
                stack.push(c);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Least upper bound of `set`, if it exists.
    pub fn supremum(&self, set: &[usize]) -> Option<usize> {
        let mut bounds = FixedBitSet::with_capacity(self.len());
        bounds.insert_range(..);
        for &s in set {
            bounds.intersect_with(&self.up[s]);
        }
        bounds.ones().find(|&u| bounds.is_subset(&self.up[u]))
    }

    /// Greatest lower bound of `set`, if it exists.
    pub fn infimum(&self, set: &[usize]) -> Option<usize> {
        let mut bounds = FixedBitSet::with_capacity(self.len());
        bounds.insert_range(..);
        for &s in set {
            bounds.intersect_with(&self.down[s]);
        }
        bounds.ones().find(|&u| bounds.is_subset(&self.down[u]))
    }
}

/// `L(A)`: joins of all nonempty subsets, closed by repeated joining with
/// single points.
pub fn lcm_lattice(set: &PointSet, guards: &ScaleGuards) -> Result<FinitePoset> {
    let mut seen: HashSet<ExtendedPoint> = set.points().iter().cloned().collect();
    let mut queue: VecDeque<ExtendedPoint> = set.points().iter().cloned().collect();
    while let Some(e) = queue.pop_front() {
        for a in set.points() {
            let j = e.join_with(a);
            if !seen.contains(&j) {
                seen.insert(j.clone());
                guards.check_lattice(seen.len())?;
                queue.push_back(j);
            }
        }
    }
    let mut elements: Vec<ExtendedPoint> = seen.into_iter().collect();
    elements.sort();
    FinitePoset::from_points(elements)
}

/// `P(A)`: elements of `L(A)` with no point of `A` strictly below in every
/// coordinate.
pub fn neighborly_poset(set: &PointSet, guards: &ScaleGuards) -> Result<FinitePoset> {
    let lattice = lcm_lattice(set, guards)?;
    let keep: Vec<usize> = (0..lattice.len())
        .filter(|&i| !set.points().iter().any(|a| a.strictly_below(&lattice.points()[i])))
        .collect();
    Ok(lattice.restrict(&keep))
}

/// `Δ(P)`: chains of `P` as faces on the vertex set `0..|P|`.
pub fn order_complex(poset: &FinitePoset) -> Result<SimplicialComplex> {
    let order = poset.linear_extension();
    let mut layers: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
    let mut total = 0usize;
    let mut stack: Vec<(Vec<usize>, usize)> = (0..order.len()).rev().map(|k| (vec![order[k]], k)).collect();
    while let Some((chain, pos)) = stack.pop() {
        total += 1;
        if total > CHAIN_LIMIT {
            return Err(ScarfError::ScaleGuard { what: "order complex faces", size: total, limit: CHAIN_LIMIT });
        }
        let top = *chain.last().unwrap();
        for k in ((pos + 1)..order.len()).rev() {
            if poset.lt(top, order[k]) {
                let mut c = chain.clone();
                c.push(order[k]);
                stack.push((c, k));
            }
        }
        let mut face = chain;
        face.sort_unstable();
        if layers.len() <= face.len() {
            layers.resize(face.len() + 1, Vec::new());
        }
        layers[face.len()].push(face);
    }
    Ok(SimplicialComplex::from_layers(poset.len(), layers))
}

/// `Γ(P, C)`: bounded subsets of the crosscut `C`, with vertex `k` standing
/// for `cut[k]`.
pub fn crosscut_complex(poset: &FinitePoset, cut: &[usize]) -> Result<SimplicialComplex> {
    for &c in cut {
        if c >= poset.len() {
            return Err(ScarfError::IndexOutOfRange { index: c, len: poset.len() });
        }
    }
    for (x, &c) in cut.iter().enumerate() {
        for &d in &cut[x + 1..] {
            if poset.leq(c, d) || poset.leq(d, c) {
                return Err(ScarfError::Precondition(format!(
                    "crosscut must be an antichain: {} and {} are comparable",
                    poset.labels[c], poset.labels[d]
                )));
            }
        }
    }
    let mut member = FixedBitSet::with_capacity(poset.len());
    for &c in cut {
        member.insert(c);
    }
    for chain in poset.maximal_chains()? {
        if !chain.iter().any(|&p| member.contains(p)) {
            let names: Vec<&str> = chain.iter().map(|&p| poset.labels[p].as_str()).collect();
            return Err(ScarfError::Precondition(format!(
                "crosscut condition (a) fails: maximal chain [{}] misses C",
                names.join(", ")
            )));
        }
    }
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for p in 0..poset.len() {
        let under: Vec<usize> = (0..cut.len()).filter(|&k| poset.leq(cut[k], p)).collect();
        let over: Vec<usize> = (0..cut.len()).filter(|&k| poset.leq(p, cut[k])).collect();
        facets.push(under);
        facets.push(over);
    }
    facets.sort_by_key(|f| std::cmp::Reverse(f.len()));
    let complex = SimplicialComplex::from_facets(cut.len(), facets)?;
    for face in complex.nonempty_faces() {
        let elems: Vec<usize> = face.iter().map(|&k| cut[k]).collect();
        if poset.supremum(&elems).is_none() && poset.infimum(&elems).is_none() {
            let names: Vec<&str> = elems.iter().map(|&p| poset.labels[p].as_str()).collect();
            return Err(ScarfError::Precondition(format!(
                "crosscut condition (b) fails: bounded subset [{}] has neither supremum nor infimum",
                names.join(", ")
            )));
        }
    }
    Ok(complex)
}

/// Reduced Betti numbers `b̃_{-1}, b̃_0, b̃_1, ...` with trailing zeros
/// trimmed, so an acyclic complex has the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BettiVector(Vec<usize>);

impl BettiVector {
    pub fn new(mut values: Vec<usize>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        BettiVector(values)
    }

    /// Entries starting at dimension `-1`.
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1).ok().and_then(|k| self.0.get(k).copied()).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for BettiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Boundary matrix from faces of size `k` to faces of size `k - 1`.
fn boundary_matrix(k: &SimplicialComplex, size: usize) -> SparseMatrix {
    let rows = k.faces_of_size(size - 1);
    let index: HashMap<&[usize], usize> = rows.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let mut m = SparseMatrix::new(rows.len());
    for face in k.faces_of_size(size) {
        let mut entries = Vec::with_capacity(face.len());
        for skip in 0..face.len() {
            let mut g = face.clone();
            g.remove(skip);
            let sign = if skip % 2 == 0 { 1 } else { -1 };
            entries.push((index[g.as_slice()], sign));
        }
        m.push_column(entries);
    }
    m
}

/// Reduced homology over the rationals.
pub fn reduced_homology(k: &SimplicialComplex) -> BettiVector {
    let top = (k.dim() + 1) as usize;
    // ranks[s] = rank of the boundary from size-s faces, s = 1..=top
    let ranks: Vec<usize> = (1..=top).into_par_iter().map(|s| boundary_matrix(k, s).rank()).collect();
    let rank_from = |s: usize| if s == 0 || s > top { 0 } else { ranks[s - 1] };
    let values = (0..=top).map(|s| k.faces_of_size(s).len() - rank_from(s) - rank_from(s + 1)).collect();
    BettiVector::new(values)
}

/// Integral homology: rational Betti numbers and torsion coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IntegerHomology {
    pub betti: BettiVector,
    /// `(d, [t_1, ...])`: `H̃_d` has torsion `Z/t_1 ⊕ ...`.
    pub torsion: Vec<(isize, Vec<String>)>,
}

/// Reduced homology over the integers via Smith normal form.
pub fn integer_homology(k: &SimplicialComplex) -> Result<IntegerHomology> {
    let top = (k.dim() + 1) as usize;
    let mut torsion = Vec::new();
    for s in 1..=top {
        let m = boundary_matrix(k, s);
        let size = m.rows * m.cols();
        if size > DENSE_LIMIT {
            return Err(ScarfError::ScaleGuard { what: "dense boundary entries", size, limit: DENSE_LIMIT });
        }
        let inv = smith_invariants(m.to_dense());
        let tors: Vec<String> = inv.iter().filter(|d| !d.is_one() && **d != BigInt::from(-1)).map(ToString::to_string).collect();
        if !tors.is_empty() {
            torsion.push((s as isize - 2, tors));
        }
    }
    Ok(IntegerHomology { betti: reduced_homology(k), torsion })
}

/// `A_{<=b}` or `A_{<b}`, with the original indices of the kept points.
pub fn restrict_below(set: &PointSet, b: &ExtendedPoint, strict: bool) -> Result<(PointSet, Vec<usize>)> {
    set.check_point(b)?;
    let kept: Vec<usize> = (0..set.len())
        .filter(|&i| if strict { set.point(i).lt(b) } else { set.point(i).leq(b) })
        .collect();
    Ok((set.subset(&kept), kept))
}

/// Summary of the contractibility checks for a finite antichain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub points: usize,
    pub nb_f_vector: Vec<usize>,
    pub nb_betti: BettiVector,
    pub lattice_size: usize,
    pub poset_size: usize,
    pub order_complex_f_vector: Vec<usize>,
    pub order_complex_betti: BettiVector,
    pub crosscut_equals_nb: bool,
    pub poset_is_face_joins: bool,
}

impl TopologyReport {
    pub fn acyclic(&self) -> bool {
        self.nb_betti.is_zero() && self.order_complex_betti.is_zero() && self.crosscut_equals_nb
    }
}

/// `Nb(A)`, `Δ(P(A))` and `Γ(P(A), A)` side by side.
pub fn topology_report(set: &PointSet, guards: &ScaleGuards) -> Result<TopologyReport> {
    let nb = enumerate_complex(set, None);
    let lattice = lcm_lattice(set, guards)?;
    let poset = neighborly_poset(set, guards)?;
    let cut: Vec<usize> = set
        .points()
        .iter()
        .map(|a| poset.index_of(a).ok_or_else(|| ScarfError::Inconsistency(format!("{a} missing from P(A)"))))
        .collect::<Result<_>>()?;
    let gamma = crosscut_complex(&poset, &cut)?;
    let delta = order_complex(&poset)?;
    let mut face_joins: Vec<ExtendedPoint> = nb.faces().filter_map(|f| f.join).collect();
    face_joins.sort();
    face_joins.dedup();
    let mut poset_points = poset.points().to_vec();
    poset_points.sort();
    Ok(TopologyReport {
        points: set.len(),
        nb_f_vector: nb.complex().f_vector(),
        nb_betti: reduced_homology(nb.complex()),
        lattice_size: lattice.len(),
        poset_size: poset.len(),
        order_complex_f_vector: delta.f_vector(),
        order_complex_betti: reduced_homology(&delta),
        crosscut_equals_nb: &gamma == nb.complex(),
        poset_is_face_joins: poset_points == face_joins,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[i64]) -> ExtendedPoint {
        ExtendedPoint::from_ints(c)
    }

    fn guards() -> ScaleGuards {
        ScaleGuards::default()
    }

    fn sorted_points(p: &FinitePoset) -> Vec<ExtendedPoint> {
        let mut v = p.points().to_vec();
        v.sort();
        v
    }

    fn three() -> PointSet {
        PointSet::from_ints(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap()
    }

    #[test]
    fn lattice_examples() {
        let two = PointSet::from_ints(2, &[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(sorted_points(&lcm_lattice(&two, &guards()).unwrap()), vec![pt(&[0, 2]), pt(&[2, 0]), pt(&[2, 2])]);
        let l = lcm_lattice(&three(), &guards()).unwrap();
        assert_eq!(l.len(), 6);
        let mut mins: Vec<ExtendedPoint> = l.minimal_elements().iter().map(|&i| l.points()[i].clone()).collect();
        mins.sort();
        assert_eq!(mins, vec![pt(&[0, 2]), pt(&[1, 1]), pt(&[2, 0])]);
        let tight = ScaleGuards { max_lattice: 4, ..guards() };
        assert!(lcm_lattice(&three(), &tight).is_err());
    }

    #[test]
    fn neighborly_poset_examples() {
        let p = neighborly_poset(&three(), &guards()).unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.index_of(&pt(&[2, 2])).is_none());
        let single = PointSet::from_ints(2, &[&[3, 4]]).unwrap();
        assert_eq!(neighborly_poset(&single, &guards()).unwrap().points(), &[pt(&[3, 4])]);
    }

    #[test]
    fn order_complex_examples() {
        let chain = FinitePoset::from_points(vec![pt(&[0, 0]), pt(&[1, 1])]).unwrap();
        assert_eq!(order_complex(&chain).unwrap().f_vector(), vec![2, 1]);
        let anti = FinitePoset::from_points(vec![pt(&[0, 1]), pt(&[1, 0])]).unwrap();
        let d = order_complex(&anti).unwrap();
        assert_eq!(d.f_vector(), vec![2]);
        assert_eq!(reduced_homology(&d), BettiVector::new(vec![0, 1]));
        let cone = FinitePoset::from_points(vec![pt(&[0, 0]), pt(&[0, 1]), pt(&[1, 0])]).unwrap();
        assert!(reduced_homology(&order_complex(&cone).unwrap()).is_zero());
    }

    #[test]
    fn abstract_relation() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let ok = FinitePoset::from_relation(labels.clone(), &[vec![true, true], vec![false, true]]).unwrap();
        assert!(ok.lt(0, 1));
        assert!(FinitePoset::from_relation(labels, &[vec![true, true], vec![true, true]]).is_err());
    }

    #[test]
    fn crosscut_examples() {
        let a = three();
        let p = neighborly_poset(&a, &guards()).unwrap();
        let cut: Vec<usize> = a.points().iter().map(|x| p.index_of(x).unwrap()).collect();
        let gamma = crosscut_complex(&p, &cut).unwrap();
        assert_eq!(&gamma, enumerate_complex(&a, None).complex());

        let one = FinitePoset::from_points(vec![pt(&[1])]).unwrap();
        assert_eq!(crosscut_complex(&one, &[0]).unwrap(), SimplicialComplex::simplex(1));

        let stair = PointSet::from_ints(2, &[&[0, 4], &[1, 3], &[2, 2], &[3, 1], &[4, 0]]).unwrap();
        let report = topology_report(&stair, &guards()).unwrap();
        assert_eq!(report.nb_f_vector, vec![5, 4]);
        assert!(report.crosscut_equals_nb);
        assert!(report.poset_is_face_joins);
        assert!(report.acyclic());

        let chain = FinitePoset::from_points(vec![pt(&[0, 0]), pt(&[1, 1]), pt(&[2, 2])]).unwrap();
        let err = crosscut_complex(&chain, &[0, 2]).unwrap_err();
        assert!(err.to_string().contains("antichain"));
        let v = FinitePoset::from_points(vec![pt(&[0, 0]), pt(&[1, 0]), pt(&[0, 1])]).unwrap();
        let err = crosscut_complex(&v, &[1]).unwrap_err();
        assert!(err.to_string().contains("(a)"));
    }

    #[test]
    fn crosscut_condition_b() {
        // two minima under two incomparable maxima: {a, b} is bounded with no sup or inf
        let labels = ["a", "b", "c", "d"].map(String::from).to_vec();
        let t = true;
        let f = false;
        let leq = vec![vec![t, f, t, t], vec![f, t, t, t], vec![f, f, t, f], vec![f, f, f, t]];
        let p = FinitePoset::from_relation(labels, &leq).unwrap();
        let err = crosscut_complex(&p, &[0, 1]).unwrap_err();
        assert!(err.to_string().contains("(b)"));
    }

    #[test]
    fn homology_examples() {
        let circle = SimplicialComplex::from_facets(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let h = reduced_homology(&circle);
        assert_eq!(h.get(1), 1);
        assert_eq!(h.values(), &[0, 0, 1]);
        assert!(reduced_homology(&SimplicialComplex::simplex(4)).is_zero());
        assert_eq!(reduced_homology(&SimplicialComplex::void(0)).values(), &[1]);
        let sphere = SimplicialComplex::from_facets(4, vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
            .unwrap();
        assert_eq!(reduced_homology(&sphere).get(2), 1);
        assert!(integer_homology(&circle).unwrap().torsion.is_empty());
    }

    #[test]
    fn projective_plane_torsion() {
        let rp2 = vec![
            vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 1, 5],
            vec![1, 2, 4], vec![2, 3, 5], vec![1, 3, 4], vec![1, 3, 5], vec![2, 4, 5],
        ];
        let k = SimplicialComplex::from_facets(6, rp2).unwrap();
        assert!(reduced_homology(&k).is_zero());
        let z = integer_homology(&k).unwrap();
        assert_eq!(z.torsion, vec![(1, vec!["2".to_string()])]);
    }

    #[test]
    fn restriction_examples() {
        let stair = PointSet::from_ints(2, &[&[0, 4], &[1, 3], &[2, 2], &[3, 1], &[4, 0]]).unwrap();
        let (below, idx) = restrict_below(&stair, &pt(&[2, 4]), false).unwrap();
        assert_eq!(below, PointSet::from_ints(2, &[&[0, 4], &[1, 3], &[2, 2]]).unwrap());
        assert_eq!(idx, vec![0, 1, 2]);
        assert!(restrict_below(&stair, &pt(&[-1, -1]), false).unwrap().0.is_empty());
        let nb = enumerate_complex(&stair, None);
        let direct = nb.restrict_below(&pt(&[2, 4]), false);
        let via = enumerate_complex(&below, None).complex().relabel(stair.len(), &idx).unwrap();
        assert_eq!(direct, via);
    }

    #[test]
    fn strict_restriction_face_filter_differs() {
        let a = PointSet::from_ints(2, &[&[1, 0], &[0, 1]]).unwrap();
        let b = pt(&[1, 1]);
        let filtered = enumerate_complex(&a, None).restrict_below(&b, true);
        assert_eq!(reduced_homology(&filtered).get(0), 1);
        let (below, _) = restrict_below(&a, &b, true).unwrap();
        assert!(reduced_homology(enumerate_complex(&below, None).complex()).is_zero());
    }
}
