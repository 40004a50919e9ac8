//! Finite indexed point sets and their JSON form.

use serde::{Deserialize, Serialize};

use crate::coord::ExtendedCoordinate;
use crate::error::{Result, ScarfError};
use crate::point::ExtendedPoint;

/// A finite indexed family of pairwise distinct points of common dimension.
///
/// JSON form: `{"dim": n, "points": [[c, ...], ...], "labels": [...]}` where
/// each coordinate is an integer, a string `"p/q"`, or `"+inf"` / `"-inf"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPointSet")]
pub struct PointSet {
    dim: usize,
    points: Vec<ExtendedPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct RawPointSet {
    dim: usize,
    points: Vec<ExtendedPoint>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

impl TryFrom<RawPointSet> for PointSet {
    type Error = ScarfError;

    fn try_from(raw: RawPointSet) -> Result<Self> {
        let set = PointSet::new(raw.dim, raw.points)?;
        match raw.labels {
            Some(labels) => set.with_labels(labels),
            None => Ok(set),
        }
    }
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<ExtendedPoint>) -> Result<Self> {
        if dim == 0 {
            return Err(ScarfError::ZeroDimension);
        }
        for p in &points {
            if p.dim() != dim {
                return Err(ScarfError::DimensionMismatch { expected: dim, found: p.dim() });
            }
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].cmp(&points[b]));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                let (first, second) = (w[0].min(w[1]), w[0].max(w[1]));
                return Err(ScarfError::DuplicatePoint { first, second });
            }
        }
        Ok(PointSet { dim, points, labels: None })
    }

    /// Convenience constructor for integer data.
    pub fn from_ints(dim: usize, points: &[&[i64]]) -> Result<Self> {
        PointSet::new(dim, points.iter().map(|c| ExtendedPoint::from_ints(c)).collect())
    }

    pub fn empty(dim: usize) -> Result<Self> {
        PointSet::new(dim, Vec::new())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.points.len() {
            return Err(ScarfError::LabelCount { labels: labels.len(), points: self.points.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ExtendedPoint] {
        &self.points
    }

    pub fn point(&self, idx: usize) -> &ExtendedPoint {
        &self.points[idx]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of point `idx`, falling back to its coordinates.
    pub fn label(&self, idx: usize) -> String {
        match &self.labels {
            Some(l) => l[idx].clone(),
            None => self.points[idx].to_string(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.points.iter().all(ExtendedPoint::is_finite)
    }

    /// Whether every coordinate is a finite integer.
    pub fn is_integral(&self) -> bool {
        self.points.iter().all(|p| p.coords().iter().all(|c| c.as_integer().is_some()))
    }

    pub fn index_of(&self, p: &ExtendedPoint) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn check_index(&self, idx: usize) -> Result<()> {
        if idx >= self.points.len() {
            return Err(ScarfError::IndexOutOfRange { index: idx, len: self.points.len() });
        }
        Ok(())
    }

    pub fn check_point(&self, p: &ExtendedPoint) -> Result<()> {
        if p.dim() != self.dim {
            return Err(ScarfError::DimensionMismatch { expected: self.dim, found: p.dim() });
        }
        Ok(())
    }

    /// The subfamily at the given indices, keeping labels.
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet {
            dim: self.dim,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
            labels: self.labels.as_ref().map(|l| indices.iter().map(|&i| l[i].clone()).collect()),
        }
    }

    /// Append points that are known to be distinct from the existing ones.
    pub(crate) fn extend_labeled(&mut self, extra: Vec<(ExtendedPoint, String)>) {
        let mut labels = self
            .labels
            .take()
            .unwrap_or_else(|| self.points.iter().map(|p| p.to_string()).collect());
        for (p, l) in extra {
            self.points.push(p);
            labels.push(l);
        }
        self.labels = Some(labels);
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| ScarfError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("point sets always serialize")
    }
}

/// Outcome of an antichain scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntichainReport {
    pub is_antichain: bool,
    /// First comparable pair `(i, j)` in index order, with point `i <= ` point `j`.
    pub witness: Option<(usize, usize)>,
}

/// Whether no two distinct points of `set` are comparable.
pub fn is_antichain(set: &PointSet) -> AntichainReport {
    let pts = set.points();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            if pts[i].leq(&pts[j]) {
                return AntichainReport { is_antichain: false, witness: Some((i, j)) };
            }
            if pts[j].leq(&pts[i]) {
                return AntichainReport { is_antichain: false, witness: Some((j, i)) };
            }
        }
    }
    AntichainReport { is_antichain: true, witness: None }
}

/// Shift every point by the finite vector `x`.
pub fn translate(set: &PointSet, x: &ExtendedPoint) -> Result<PointSet> {
    set.check_point(x)?;
    if !x.is_finite() {
        return Err(ScarfError::InfiniteArithmetic);
    }
    let points = set.points().iter().map(|p| p.checked_add(x)).collect::<Result<Vec<_>>>()?;
    Ok(PointSet { dim: set.dim, points, labels: set.labels.clone() })
}

impl std::fmt::Display for PointSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Zero vector of dimension `n`.
pub fn origin(n: usize) -> ExtendedPoint {
    ExtendedPoint::new(vec![ExtendedCoordinate::int(0); n])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn staircase() -> PointSet {
        PointSet::from_ints(2, &[&[0, 4], &[1, 3], &[2, 2], &[3, 1], &[4, 0]]).unwrap()
    }

    #[test]
    fn antichain_examples() {
        assert!(is_antichain(&staircase()).is_antichain);
        let r = is_antichain(&PointSet::from_ints(2, &[&[2, 0], &[2, 1]]).unwrap());
        assert!(!r.is_antichain);
        assert_eq!(r.witness, Some((0, 1)));
        assert!(is_antichain(&PointSet::empty(3).unwrap()).is_antichain);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(PointSet::new(0, vec![]), Err(ScarfError::ZeroDimension));
        assert!(matches!(
            PointSet::from_ints(2, &[&[1, 2], &[1, 2, 3]]),
            Err(ScarfError::DimensionMismatch { .. })
        ));
        assert_eq!(
            PointSet::from_ints(2, &[&[1, 2], &[0, 0], &[1, 2]]),
            Err(ScarfError::DuplicatePoint { first: 0, second: 2 })
        );
    }

    #[test]
    fn translate_examples() {
        let a = PointSet::from_ints(2, &[&[0, 4], &[4, 0]]).unwrap();
        let moved = translate(&a, &ExtendedPoint::from_ints(&[1, 1])).unwrap();
        assert_eq!(moved, PointSet::from_ints(2, &[&[1, 5], &[5, 1]]).unwrap());
        assert_eq!(translate(&a, &origin(2)).unwrap(), a);
        let inf = ExtendedPoint::new(vec![ExtendedCoordinate::PosInf, ExtendedCoordinate::int(0)]);
        assert_eq!(translate(&a, &inf), Err(ScarfError::InfiniteArithmetic));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"dim": 2, "points": [[1, "1/2"], ["+inf", "-inf"]], "labels": ["a", "w1"]}"#;
        let set = PointSet::from_json(text).unwrap();
        assert_eq!(set.len(), 2);
        assert_eq!(set.label(1), "w1");
        let again = PointSet::from_json(&set.to_json()).unwrap();
        assert_eq!(again, set);
        assert!(PointSet::from_json(r#"{"dim": 2, "points": [[1, 2], [1, 2]]}"#).is_err());
        assert!(PointSet::from_json(r#"{"dim": 2, "points": [[1]]}"#).is_err());
        assert!(PointSet::from_json(r#"{"dim": 1, "points": [[1]], "labels": []}"#).is_err());
    }
}
