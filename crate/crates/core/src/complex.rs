//! Finite abstract simplicial complexes on vertex sets `0..vertex_count`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ScarfError};

/// A downward-closed family of vertex subsets, stored by cardinality.
///
/// `layers[k]` holds the faces with `k` vertices, each sorted ascending, and
/// the layer itself sorted lexicographically. The empty face always sits in
/// `layers[0]`, so the complex `{∅}` has dimension `-1`.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    vertex_count: usize,
    layers: Vec<Vec<Vec<usize>>>,
    index: HashSet<Vec<usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.layers == other.layers
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// The complex `{∅}` on `vertex_count` (unused) vertices.
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex::from_layers(vertex_count, vec![vec![vec![]]])
    }

    /// Build from an arbitrary list of faces, which must already be closed
    /// under taking subsets. The empty face is added if missing.
    pub fn from_faces<I>(vertex_count: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut layers: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
        let mut seen = HashSet::new();
        seen.insert(Vec::new());
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(ScarfError::IndexOutOfRange { index: v, len: vertex_count });
            }
            if seen.insert(f.clone()) {
                if layers.len() <= f.len() {
                    layers.resize(f.len() + 1, Vec::new());
                }
                layers[f.len()].push(f);
            }
        }
        let complex = SimplicialComplex::from_layers(vertex_count, layers);
        if let Some(f) = complex.closure_violation() {
            return Err(ScarfError::Inconsistency(format!(
                "face family is not closed under subsets: {f:?} lacks a facet"
            )));
        }
        Ok(complex)
    }

    /// Downward closure of a list of facets.
    pub fn from_facets<I>(vertex_count: usize, facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<usize>>,
    {
        let mut all = HashSet::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= vertex_count) {
                return Err(ScarfError::IndexOutOfRange { index: v, len: vertex_count });
            }
            if f.len() > 24 {
                return Err(ScarfError::ScaleGuard { what: "facet size", size: f.len(), limit: 24 });
            }
            if all.contains(&f) {
                continue;
            }
            for mask in 0u32..(1u32 << f.len()) {
                let sub: Vec<usize> =
                    f.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v).collect();
                all.insert(sub);
            }
        }
        SimplicialComplex::from_faces(vertex_count, all)
    }

    /// Trusted constructor: `layers` must be closed under subsets.
    pub(crate) fn from_layers(vertex_count: usize, mut layers: Vec<Vec<Vec<usize>>>) -> Self {
        if layers.is_empty() {
            layers.push(vec![vec![]]);
        }
        for layer in layers.iter_mut() {
            layer.sort();
        }
        while layers.len() > 1 && layers.last().is_some_and(Vec::is_empty) {
            layers.pop();
        }
        let index = layers.iter().flatten().cloned().collect();
        SimplicialComplex { vertex_count, layers, index }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension of the largest face; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.layers.len() as isize - 2
    }

    /// Faces of dimension `d` (`d = -1` gives the empty face).
    pub fn faces_of_dim(&self, d: isize) -> &[Vec<usize>] {
        let k = d + 1;
        if k < 0 || k as usize >= self.layers.len() {
            return &[];
        }
        &self.layers[k as usize]
    }

    /// Faces with exactly `k` vertices.
    pub fn faces_of_size(&self, k: usize) -> &[Vec<usize>] {
        self.layers.get(k).map_or(&[], Vec::as_slice)
    }

    /// All faces including `∅`, by increasing size.
    pub fn faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.layers.iter().flatten()
    }

    /// All nonempty faces, by increasing size.
    pub fn nonempty_faces(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.layers.iter().skip(1).flatten()
    }

    /// Number of nonempty faces.
    pub fn face_count(&self) -> usize {
        self.layers.iter().skip(1).map(Vec::len).sum()
    }

    /// `f_vector()[d]` is the number of `d`-dimensional faces, `d >= 0`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.layers.iter().skip(1).map(Vec::len).collect()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        self.index.contains(face)
    }

    /// Faces not properly contained in another face, sorted by size then lexicographically.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for (k, layer) in self.layers.iter().enumerate() {
            let next = self.layers.get(k + 1);
            for f in layer {
                let covered = next.is_some_and(|_| {
                    (0..self.vertex_count).any(|v| {
                        if f.binary_search(&v).is_ok() {
                            return false;
                        }
                        let mut g = f.clone();
                        let pos = g.binary_search(&v).unwrap_err();
                        g.insert(pos, v);
                        self.index.contains(&g)
                    })
                });
                if !covered {
                    out.push(f.clone());
                }
            }
        }
        out
    }

    /// Reduced Euler characteristic is `euler_characteristic() - 1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// First face that is missing one of its codimension-one subfaces.
    pub fn closure_violation(&self) -> Option<Vec<usize>> {
        for f in self.nonempty_faces() {
            for skip in 0..f.len() {
                let mut g = f.clone();
                g.remove(skip);
                if !self.index.contains(&g) {
                    return Some(f.clone());
                }
            }
        }
        None
    }

    pub fn is_downward_closed(&self) -> bool {
        self.closure_violation().is_none()
    }

    /// Relabel vertices through `map` (old index to new index).
    pub fn relabel(&self, new_count: usize, map: &[usize]) -> Result<SimplicialComplex> {
        SimplicialComplex::from_faces(
            new_count,
            self.faces().map(|f| f.iter().map(|&v| map[v]).collect()).collect::<Vec<_>>(),
        )
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> SimplicialComplex {
        let mut layers = vec![Vec::new(); n + 1];
        for mask in 0u64..(1u64 << n) {
            let f: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            layers[f.len()].push(f);
        }
        SimplicialComplex::from_layers(n, layers)
    }
}

/// JSON form of a complex: facets only, closure implied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetList {
    pub vertex_count: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&SimplicialComplex> for FacetList {
    fn from(k: &SimplicialComplex) -> Self {
        FacetList { vertex_count: k.vertex_count, facets: k.facets() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_of_a_triangle() {
        let k = SimplicialComplex::from_facets(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(k.f_vector(), vec![3, 3, 1]);
        assert_eq!(k.dim(), 2);
        assert_eq!(k.facets(), vec![vec![0, 1, 2]]);
        assert_eq!(k.euler_characteristic(), 1);
        assert_eq!(k, SimplicialComplex::simplex(3));
    }

    #[test]
    fn void_complex() {
        let k = SimplicialComplex::void(0);
        assert_eq!(k.dim(), -1);
        assert_eq!(k.face_count(), 0);
        assert_eq!(k.faces_of_dim(-1), &[Vec::<usize>::new()]);
        assert_eq!(k.facets(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn rejects_unclosed_family() {
        let err = SimplicialComplex::from_faces(3, vec![vec![0], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, ScarfError::Inconsistency(_)));
        assert!(SimplicialComplex::from_faces(2, vec![vec![5]]).is_err());
    }

    #[test]
    fn facets_mixed_dimensions() {
        let k = SimplicialComplex::from_facets(4, vec![vec![0, 1], vec![1, 2], vec![3]]).unwrap();
        assert_eq!(k.facets(), vec![vec![3], vec![0, 1], vec![1, 2]]);
        assert!(k.contains(&[1]));
        assert!(!k.contains(&[0, 2]));
    }
}
