//! Barycentric subdivision of a complex and its realization by partial joins.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::coord::Rational;
use crate::error::{Result, ScarfError};
use crate::linalg::affinely_independent;
use crate::neighborly::{is_generic, NeighborlyComplex};
use crate::point::ExtendedPoint;
use crate::pointset::{is_antichain, PointSet};

/// Abstract subdivision: vertex `v` stands for the face `vertex_faces[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub vertex_faces: Vec<Vec<usize>>,
}

/// Chains of nonempty faces of `k` under inclusion.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> Subdivision {
    let vertex_faces: Vec<Vec<usize>> = k.nonempty_faces().cloned().collect();
    let position: HashMap<&[usize], usize> =
        vertex_faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for face in k.facets() {
        for order in face.iter().copied().permutations(face.len()) {
            let mut chain = Vec::with_capacity(order.len());
            let mut prefix: Vec<usize> = Vec::new();
            for v in order {
                let pos = prefix.binary_search(&v).unwrap_err();
                prefix.insert(pos, v);
                chain.push(position[prefix.as_slice()]);
            }
            facets.push(chain);
        }
    }
    let complex = SimplicialComplex::from_facets(vertex_faces.len(), facets)
        .expect("chains of a complex form a complex");
    Subdivision { complex, vertex_faces }
}

/// `c_j = b_1 ∨ ... ∨ b_j` along the given ordering of point indices.
pub fn chain_points(set: &PointSet, ordering: &[usize]) -> Result<Vec<ExtendedPoint>> {
    let mut out: Vec<ExtendedPoint> = Vec::with_capacity(ordering.len());
    for &i in ordering {
        set.check_index(i)?;
        let next = match out.last() {
            Some(prev) => prev.join_with(set.point(i)),
            None => set.point(i).clone(),
        };
        out.push(next);
    }
    Ok(out)
}

/// Chain points of a face of `nb`, checked for affine independence when the
/// ground set is generic and finite.
pub fn checked_chain_points(nb: &NeighborlyComplex, ordering: &[usize]) -> Result<Vec<ExtendedPoint>> {
    let mut members = ordering.to_vec();
    members.sort_unstable();
    if members.windows(2).any(|w| w[0] == w[1]) {
        return Err(ScarfError::Precondition("ordering repeats a member".into()));
    }
    if nb.join_of(&members).is_none() {
        return Err(ScarfError::Precondition(format!("{members:?} is not a face")));
    }
    let pts = chain_points(nb.ground(), ordering)?;
    if nb.is_generic() && nb.ground().is_finite() && !affinely_independent(&finite_rows(&pts)?) {
        return Err(ScarfError::Inconsistency(format!(
            "chain points of {ordering:?} are affinely dependent on a generic set"
        )));
    }
    Ok(pts)
}

fn finite_rows(pts: &[ExtendedPoint]) -> Result<Vec<Vec<Rational>>> {
    pts.iter().map(ExtendedPoint::finite_coords).collect()
}

/// A face together with an ordering of its members and the resulting chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedChainSimplex {
    pub base_face: Vec<usize>,
    pub ordering: Vec<usize>,
    pub vertices: Vec<ExtendedPoint>,
}

/// Coordinate agreement profile of a chain: entry `j` counts the coordinates
/// where `c_j` already equals `c_m`. Returns `None` unless these agreement
/// sets are nested, strictly growing and start nonempty.
pub fn chain_threshold_pattern(chain: &[ExtendedPoint]) -> Option<Vec<usize>> {
    let top = chain.last()?;
    let n = top.dim();
    let mut prev: Option<Vec<bool>> = None;
    let mut out = Vec::with_capacity(chain.len());
    for c in chain {
        let agree: Vec<bool> = (0..n).map(|a| c[a] == top[a]).collect();
        let count = agree.iter().filter(|&&x| x).count();
        match &prev {
            None if count == 0 => return None,
            Some(p) => {
                let nested = p.iter().zip(&agree).all(|(&was, &now)| !was || now);
                if !nested || count <= *out.last().unwrap() {
                    return None;
                }
            }
            None => {}
        }
        out.push(count);
        prev = Some(agree);
    }
    (*out.last().unwrap() == n).then_some(out)
}

/// Realized subdivision: finite vertices and the simplicial complex they span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricMesh {
    pub dim: usize,
    pub vertices: Vec<ExtendedPoint>,
    pub simplices: SimplicialComplex,
}

#[derive(Serialize, Deserialize)]
struct MeshJson {
    dim: usize,
    vertices: Vec<ExtendedPoint>,
    simplices: BTreeMap<String, Vec<Vec<usize>>>,
}

impl GeometricMesh {
    pub fn to_json(&self) -> String {
        let mut simplices = BTreeMap::new();
        for d in 0..=self.simplices.dim().max(-1) {
            simplices.insert(d.to_string(), self.simplices.faces_of_dim(d).to_vec());
        }
        let raw = MeshJson { dim: self.dim, vertices: self.vertices.clone(), simplices };
        serde_json::to_string_pretty(&raw).expect("meshes always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MeshJson = serde_json::from_str(text).map_err(|e| ScarfError::Json(e.to_string()))?;
        let faces = raw.simplices.into_values().flatten().collect::<Vec<_>>();
        let simplices = SimplicialComplex::from_faces(raw.vertices.len(), faces)?;
        Ok(GeometricMesh { dim: raw.dim, vertices: raw.vertices, simplices })
    }

    /// OFF surface (triangles only) for `n = 3`; exact coordinates are
    /// recorded in comment lines.
    pub fn to_off(&self, digits: usize) -> Result<String> {
        if self.dim != 3 {
            return Err(ScarfError::Precondition(format!("OFF export needs n = 3, got n = {}", self.dim)));
        }
        let triangles = self.simplices.faces_of_size(3);
        let mut out = String::from("OFF\n");
        for (i, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("# v{i} {v}\n"));
        }
        out.push_str(&format!("{} {} 0\n", self.vertices.len(), triangles.len()));
        for v in &self.vertices {
            let line: Vec<String> = v.coords().iter().map(|c| c.to_decimal(digits)).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        for t in triangles {
            out.push_str(&format!("3 {} {} {}\n", t[0], t[1], t[2]));
        }
        Ok(out)
    }
}

/// Checks comparing the realized mesh with the abstract subdivision.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MeshCertificate {
    pub face_count: usize,
    pub mesh_vertex_count: usize,
    pub chain_simplex_count: usize,
    pub per_face_counts_ok: bool,
    pub injective: bool,
    pub poset_isomorphic: bool,
    pub affinely_independent: bool,
    pub threshold_patterns_ok: bool,
    pub violations: Vec<String>,
}

impl MeshCertificate {
    pub fn passed(&self) -> bool {
        self.face_count == self.mesh_vertex_count
            && self.per_face_counts_ok
            && self.injective
            && self.poset_isomorphic
            && self.affinely_independent
            && self.threshold_patterns_ok
    }
}

fn factorial(m: usize) -> usize {
    (1..=m).product()
}

/// Every `C(B, π)` of the complex `k` on the ground set `set`, faces in
/// complex order and orderings lexicographic.
pub fn ordered_chain_simplices(set: &PointSet, k: &SimplicialComplex) -> Result<Vec<OrderedChainSimplex>> {
    let faces: Vec<&Vec<usize>> = k.nonempty_faces().collect();
    let per_face: Vec<Result<Vec<OrderedChainSimplex>>> = faces
        .par_iter()
        .map(|face| {
            face.iter()
                .copied()
                .permutations(face.len())
                .map(|ordering| {
                    let vertices = chain_points(set, &ordering)?;
                    Ok(OrderedChainSimplex { base_face: (*face).clone(), ordering, vertices })
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for r in per_face {
        out.extend(r?);
    }
    Ok(out)
}

/// Realize `Sd k` on the boundary of the staircase region of `set`, where
/// `k` is the neighborly complex of `set`.
pub fn geometric_subdivision(set: &PointSet, k: &SimplicialComplex) -> Result<(GeometricMesh, MeshCertificate)> {
    if !set.is_finite() {
        return Err(ScarfError::Precondition("geometric subdivision needs finite coordinates".into()));
    }
    let anti = is_antichain(set);
    if let Some((i, j)) = anti.witness {
        return Err(ScarfError::NotAntichain(i, j));
    }
    let generic = is_generic(set);
    if let Some(&first) = generic.violations.first() {
        return Err(ScarfError::NotGeneric { pairs: generic.violations.len(), first });
    }
    if k.vertex_count() != set.len() {
        return Err(ScarfError::Precondition(format!(
            "complex has {} vertices but the set has {} points",
            k.vertex_count(),
            set.len()
        )));
    }

    let chains = ordered_chain_simplices(set, k)?;
    let mut vertices: Vec<ExtendedPoint> = chains.iter().flat_map(|c| c.vertices.iter().cloned()).collect();
    vertices.sort();
    vertices.dedup();
    let index: HashMap<&ExtendedPoint, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();

    let mut cert = MeshCertificate {
        face_count: k.face_count(),
        mesh_vertex_count: vertices.len(),
        chain_simplex_count: chains.len(),
        per_face_counts_ok: true,
        injective: true,
        poset_isomorphic: true,
        affinely_independent: true,
        threshold_patterns_ok: true,
        violations: Vec::new(),
    };

    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut per_face: HashMap<&[usize], usize> = HashMap::new();
    let mut facets: Vec<Vec<usize>> = Vec::with_capacity(chains.len());
    for (ci, chain) in chains.iter().enumerate() {
        let mut idx: Vec<usize> = chain.vertices.iter().map(|v| index[v]).collect();
        idx.sort_unstable();
        if idx.windows(2).any(|w| w[0] == w[1]) {
            cert.injective = false;
            cert.violations.push(format!("chain {:?} repeats a vertex", chain.ordering));
        }
        if let Some(&prev) = seen.get(&idx) {
            return Err(ScarfError::Inconsistency(format!(
                "orderings {:?} and {:?} give the same simplex",
                chains[prev].ordering, chain.ordering
            )));
        }
        seen.insert(idx.clone(), ci);
        *per_face.entry(chain.base_face.as_slice()).or_default() += 1;
        if !affinely_independent(&finite_rows(&chain.vertices)?) {
            cert.affinely_independent = false;
            cert.violations.push(format!("chain {:?} is affinely dependent", chain.ordering));
        }
        if chain_threshold_pattern(&chain.vertices).is_none() {
            cert.threshold_patterns_ok = false;
            cert.violations.push(format!("chain {:?} breaks the threshold pattern", chain.ordering));
        }
        facets.push(idx);
    }
    for face in k.nonempty_faces() {
        let got = per_face.get(face.as_slice()).copied().unwrap_or(0);
        if got != factorial(face.len()) {
            cert.per_face_counts_ok = false;
            cert.violations.push(format!("face {face:?} yields {got} simplices"));
        }
    }
    facets.sort_by_key(|f| std::cmp::Reverse(f.len()));
    let simplices = SimplicialComplex::from_facets(vertices.len(), facets)?;

    let sd = barycentric_subdivision(k);
    let mut map = Vec::with_capacity(sd.vertex_faces.len());
    for face in &sd.vertex_faces {
        let j = crate::point::join(face.iter().map(|&i| set.point(i)))?;
        match index.get(&j) {
            Some(&v) => map.push(v),
            None => {
                cert.poset_isomorphic = false;
                cert.violations.push(format!("join of {face:?} is not a mesh vertex"));
                map.push(usize::MAX);
            }
        }
    }
    let mut image = map.clone();
    image.sort_unstable();
    image.dedup();
    if image.len() != map.len() || map.len() != vertices.len() || image.contains(&usize::MAX) {
        cert.poset_isomorphic = false;
        cert.violations.push("face joins do not biject onto mesh vertices".into());
    } else if sd.complex.relabel(vertices.len(), &map)? != simplices {
        cert.poset_isomorphic = false;
        cert.violations.push("relabelled subdivision differs from the mesh".into());
    }

    Ok((GeometricMesh { dim: set.dim(), vertices, simplices }, cert))
}

/// [`geometric_subdivision`] of an enumerated complex.
pub fn realize(nb: &NeighborlyComplex) -> Result<(GeometricMesh, MeshCertificate)> {
    geometric_subdivision(nb.ground(), nb.complex())
}
