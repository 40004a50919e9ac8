//! Monomial ideals: parsing, minimal generators, Scarf complexes and a
//! Betti-number oracle over the lcm lattice.
//!
//! Homological degrees follow the resolution of `S/I`: degree `i` is spanned
//! by the faces with `i` members, degree 0 by the empty face.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Result, ScarfError};
use crate::guard::ScaleGuards;
use crate::linalg::SparseMatrix;
use crate::neighborly::{enumerate_complex, is_generic, minimal_indices};
use crate::point::ExtendedPoint;
use crate::pointset::PointSet;
use crate::subdivision::{geometric_subdivision, GeometricMesh, MeshCertificate};
use crate::topology::{lcm_lattice, order_complex, reduced_homology};

/// A monomial ideal given by exponent vectors over named variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<Vec<u64>>,
}

impl MonomialIdeal {
    pub fn new(variables: Vec<String>, generators: Vec<Vec<u64>>) -> Result<Self> {
        if variables.is_empty() {
            return Err(ScarfError::ZeroDimension);
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(ScarfError::Precondition(format!("variable {v} listed twice")));
            }
        }
        for g in &generators {
            if g.len() != variables.len() {
                return Err(ScarfError::DimensionMismatch { expected: variables.len(), found: g.len() });
            }
        }
        Ok(MonomialIdeal { variables, generators })
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.variables.len()
    }

    /// `x^2*y` style rendering of an exponent vector.
    pub fn monomial(&self, exps: &[u64]) -> String {
        let parts: Vec<String> = self
            .variables
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Exponent vectors as points; duplicates are rejected.
    pub fn to_point_set(&self) -> Result<PointSet> {
        let pts = self
            .generators
            .iter()
            .map(|g| {
                let c: Vec<i64> = g.iter().map(|&e| i64::try_from(e).expect("exponent fits i64")).collect();
                ExtendedPoint::from_ints(&c)
            })
            .collect();
        let labels = self.generators.iter().map(|g| self.monomial(g)).collect();
        PointSet::new(self.dim(), pts)?.with_labels(labels)
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| self.monomial(g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Split a comma-separated variable list.
pub fn parse_variables(text: &str) -> Vec<String> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn error<T>(&self, position: usize, message: impl Into<String>) -> Result<T> {
        Err(ScarfError::Parse { position, message: message.into() })
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += self.peek().unwrap().len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn monomial(&mut self, vars: &[String]) -> Result<Vec<u64>> {
        let mut exps = vec![0u64; vars.len()];
        self.skip_ws();
        if self.peek() == Some('1') {
            self.pos += 1;
            return Ok(exps);
        }
        loop {
            self.skip_ws();
            let start = self.pos;
            if !self.peek().is_some_and(|c| c.is_alphabetic() || c == '_') {
                return match self.peek() {
                    None => self.error(start, "expected a variable, found end of input"),
                    Some(c) => self.error(start, format!("expected a variable, found '{c}'")),
                };
            }
            let name = self.take_while(|c| c.is_alphanumeric() || c == '_').to_string();
            let Some(var) = vars.iter().position(|v| *v == name) else {
                return self.error(start, format!("unknown variable '{name}'"));
            };
            self.skip_ws();
            let mut e = 1u64;
            if self.peek() == Some('^') {
                self.pos += 1;
                self.skip_ws();
                let at = self.pos;
                if self.peek() == Some('-') {
                    return self.error(at, "negative exponent");
                }
                let digits = self.take_while(|c| c.is_ascii_digit());
                if digits.is_empty() {
                    return self.error(at, "expected an exponent after '^'");
                }
                e = match digits.parse() {
                    Ok(v) => v,
                    Err(_) => return self.error(at, "exponent too large"),
                };
            }
            exps[var] += e;
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                return Ok(exps);
            }
        }
    }
}

/// Parse `"x^2*y, x*z^3; y^2"` over the given variables.
pub fn parse_ideal(text: &str, variables: &[String]) -> Result<MonomialIdeal> {
    let mut p = Parser { text, pos: 0 };
    let mut gens = Vec::new();
    p.skip_ws();
    if p.peek().is_none() {
        return MonomialIdeal::new(variables.to_vec(), gens);
    }
    loop {
        gens.push(p.monomial(variables)?);
        p.skip_ws();
        match p.peek() {
            None => break,
            Some(',') | Some(';') => p.pos += 1,
            Some(c) => return p.error(p.pos, format!("expected ',' or ';', found '{c}'")),
        }
    }
    MonomialIdeal::new(variables.to_vec(), gens)
}

/// Divisibility-minimal generators, in input order without repeats.
pub fn minimize(ideal: &MonomialIdeal) -> MonomialIdeal {
    let mut distinct: Vec<Vec<u64>> = Vec::new();
    for g in &ideal.generators {
        if !distinct.contains(g) {
            distinct.push(g.clone());
        }
    }
    let mut keep = minimal_indices(&distinct);
    keep.sort_unstable();
    MonomialIdeal {
        variables: ideal.variables.clone(),
        generators: keep.into_iter().map(|i| distinct[i].clone()).collect(),
    }
}

fn lcm(gens: &[Vec<u64>], members: &[usize]) -> Vec<u64> {
    let n = gens.first().map_or(0, Vec::len);
    (0..n).map(|j| members.iter().map(|&i| gens[i][j]).max().unwrap_or(0)).collect()
}

/// Subsets `B` of the generators such that every generator reaches the lcm
/// of `B` in at least one exponent, checked literally; asserted equal to the
/// neighborly complex of the exponent vectors.
pub fn buchberger_complex(ideal: &MonomialIdeal, max_dim: Option<usize>) -> Result<SimplicialComplex> {
    let gens = &ideal.generators;
    let admissible = |members: &[usize]| {
        let m = lcm(gens, members);
        gens.iter().all(|g| g.iter().zip(&m).any(|(a, b)| a >= b))
    };
    let max_size = max_dim.map_or(gens.len(), |d| d + 1);
    let mut layers: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
    while layers.len() <= max_size {
        let prev = layers.last().unwrap();
        let mut next = Vec::new();
        for f in prev {
            let start = f.last().map_or(0, |&v| v + 1);
            for v in start..gens.len() {
                let mut g = f.clone();
                g.push(v);
                if admissible(&g) {
                    next.push(g);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    let complex = SimplicialComplex::from_layers(gens.len(), layers);
    let nb = enumerate_complex(&ideal.to_point_set()?, max_dim);
    if &complex != nb.complex() {
        return Err(ScarfError::Inconsistency("literal Buchberger test disagrees with the neighborly test".into()));
    }
    Ok(complex)
}

/// One-skeleton of the realized subdivision for three variables: each edge
/// `{a, a'}` becomes the segments `a -- a∨a'` and `a∨a' -- a'`.
pub fn buchberger_graph(ideal: &MonomialIdeal) -> Result<(GeometricMesh, MeshCertificate)> {
    if ideal.dim() != 3 {
        return Err(ScarfError::Precondition(format!("Buchberger graph needs 3 variables, got {}", ideal.dim())));
    }
    let set = ideal.to_point_set()?;
    let nb = enumerate_complex(&set, Some(1));
    geometric_subdivision(&set, nb.complex())
}

/// One homological degree of the Scarf complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainDegree {
    pub degree: usize,
    /// Faces, as sorted generator indices.
    pub faces: Vec<Vec<usize>>,
    pub multidegrees: Vec<ExtendedPoint>,
    /// Boundary into degree `degree - 1`, by columns; empty for degree 0.
    #[serde(skip)]
    pub boundary: SparseMatrix,
}

/// The multigraded chain complex supported on the neighborly complex of the
/// minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedChainComplex {
    pub degrees: Vec<ChainDegree>,
    pub generic: bool,
    /// Set for non-generic input: the complex need not be minimal or exact.
    pub not_necessarily_minimal: bool,
}

impl GradedChainComplex {
    /// Free ranks in degrees `1, 2, ...`.
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().skip(1).map(|d| d.faces.len()).collect()
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.degrees.get(degree).map_or(0, |d| d.faces.len())
    }

    /// Degree `i` such that `∂_{i-1} ∂_i` has a nonzero entry.
    pub fn boundary_square_violation(&self) -> Option<usize> {
        (2..self.degrees.len()).find(|&i| {
            let prod = self.degrees[i - 1].boundary.multiply(&self.degrees[i].boundary);
            prod.iter().flatten().any(|v| v != &num_bigint::BigInt::from(0))
        })
    }

    /// Whether every boundary entry connects `B' ⊂ B` with `∨B' <= ∨B`, and
    /// strictly below when `strict`.
    pub fn multidegrees_monotone(&self, strict: bool) -> bool {
        (1..self.degrees.len()).all(|i| {
            let (lower, upper) = (&self.degrees[i - 1], &self.degrees[i]);
            upper.boundary.columns.iter().enumerate().all(|(c, col)| {
                col.iter().all(|&(r, _)| {
                    let sub = lower.faces[r].iter().all(|v| upper.faces[c].contains(v));
                    let (lo, hi) = (&lower.multidegrees[r], &upper.multidegrees[c]);
                    sub && if strict { lo.lt(hi) } else { lo.leq(hi) }
                })
            })
        })
    }

    /// Betti table read off the complex: one entry per face.
    pub fn betti_table(&self) -> BettiTable {
        let mut counts: BTreeMap<(usize, ExtendedPoint), usize> = BTreeMap::new();
        for d in self.degrees.iter().skip(1) {
            for m in &d.multidegrees {
                *counts.entry((d.degree, m.clone())).or_default() += 1;
            }
        }
        BettiTable::from_counts(counts)
    }

    /// JSON with faces, multidegrees and boundary columns per degree.
    pub fn to_json(&self) -> serde_json::Value {
        let degrees: Vec<serde_json::Value> = self
            .degrees
            .iter()
            .map(|d| {
                serde_json::json!({
                    "degree": d.degree,
                    "rank": d.faces.len(),
                    "faces": d.faces,
                    "multidegrees": d.multidegrees,
                    "boundary": d.boundary.columns,
                })
            })
            .collect();
        serde_json::json!({
            "generic": self.generic,
            "not_necessarily_minimal": self.not_necessarily_minimal,
            "ranks": self.ranks(),
            "degrees": degrees,
        })
    }
}

/// Scarf chain complex of a minimized ideal. Boundary of `B` is
/// `Σ_k (-1)^k (B minus its k-th smallest member)`.
pub fn scarf_chain_complex(ideal: &MonomialIdeal) -> Result<GradedChainComplex> {
    let set = ideal.to_point_set()?;
    let generic = is_generic(&set).generic;
    let nb = enumerate_complex(&set, None);
    let k = nb.complex();
    let n = ideal.dim();
    let mut degrees = Vec::new();
    for size in 0..=((k.dim() + 1) as usize) {
        let faces = k.faces_of_size(size).to_vec();
        let multidegrees = faces
            .iter()
            .map(|f| nb.join_of(f).cloned().unwrap_or_else(|| ExtendedPoint::from_ints(&vec![0; n])))
            .collect();
        let mut boundary = SparseMatrix::new(if size == 0 { 0 } else { k.faces_of_size(size - 1).len() });
        if size > 0 {
            let index: HashMap<&[usize], usize> =
                k.faces_of_size(size - 1).iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
            for f in &faces {
                let entries = (0..f.len())
                    .map(|skip| {
                        let mut g = f.clone();
                        g.remove(skip);
                        (index[g.as_slice()], if skip % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                boundary.push_column(entries);
            }
        }
        degrees.push(ChainDegree { degree: size, faces, multidegrees, boundary });
    }
    Ok(GradedChainComplex { degrees, generic, not_necessarily_minimal: !generic })
}

/// One nonzero multigraded Betti number.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BettiEntry {
    pub degree: usize,
    pub multidegree: ExtendedPoint,
    pub rank: usize,
}

/// Nonzero Betti numbers sorted by degree, then multidegree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BettiTable(pub Vec<BettiEntry>);

impl BettiTable {
    fn from_counts(counts: BTreeMap<(usize, ExtendedPoint), usize>) -> Self {
        BettiTable(
            counts
                .into_iter()
                .filter(|(_, r)| *r > 0)
                .map(|((degree, multidegree), rank)| BettiEntry { degree, multidegree, rank })
                .collect(),
        )
    }

    pub fn entries(&self) -> &[BettiEntry] {
        &self.0
    }

    /// Total rank per degree, starting at degree 1.
    pub fn totals(&self) -> Vec<usize> {
        let top = self.0.iter().map(|e| e.degree).max().unwrap_or(0);
        (1..=top).map(|d| self.0.iter().filter(|e| e.degree == d).map(|e| e.rank).sum()).collect()
    }
}

/// `β_{i,b}(S/I) = b̃_{i-2}(Δ(L_{<b}))` for every `b` in the lcm lattice of
/// the generators.
pub fn betti_oracle(ideal: &MonomialIdeal, guards: &ScaleGuards) -> Result<BettiTable> {
    let set = ideal.to_point_set()?;
    guards.check_set(&set)?;
    let lattice = lcm_lattice(&set, guards)?;
    let per_b: Vec<Result<Vec<(usize, ExtendedPoint, usize)>>> = (0..lattice.len())
        .into_par_iter()
        .map(|b| {
            let below = lattice.below(b, true);
            let h = reduced_homology(&order_complex(&below)?);
            Ok(h.values()
                .iter()
                .enumerate()
                .filter(|(_, &r)| r > 0)
                .map(|(k, &r)| (k + 1, lattice.points()[b].clone(), r))
                .collect())
        })
        .collect();
    let mut counts = BTreeMap::new();
    for r in per_b {
        for (degree, m, rank) in r? {
            *counts.entry((degree, m)).or_default() += rank;
        }
    }
    Ok(BettiTable::from_counts(counts))
}
