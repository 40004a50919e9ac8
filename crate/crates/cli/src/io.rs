//! Reading inputs, writing results and classifying failures.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use scarf_core::{ExtendedCoordinate, ExtendedPoint, PointSet, ScarfError};

/// A failed run: the message and the exit status it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Bad flag value, unreadable file or malformed content.
    Input(String),
    /// A checked property does not hold.
    Falsified(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Falsified(_) => 1,
        }
    }

    /// Library errors: internal inconsistencies falsify, the rest are input problems.
    pub fn from_core(field: &str, e: ScarfError) -> Failure {
        match e {
            ScarfError::Inconsistency(m) => Failure::Falsified(format!("check failed: {m}")),
            other => Failure::Input(format!("{field}: {other}")),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) => write!(f, "error: {m}"),
            Failure::Falsified(m) => write!(f, "falsified: {m}"),
        }
    }
}

pub type Outcome<T = ()> = Result<T, Failure>;

/// Complex JSON: the ground set and the facets, closure implied.
#[derive(Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    pub ground: PointSet,
    pub facets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_vector: Option<Vec<usize>>,
}

/// Either a bare point set or a complex file.
pub enum Input {
    Points(PointSet),
    Complex(ComplexFile),
}

fn read_text(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("--input: cannot read {}: {e}", path.display())))
}

fn malformed(path: &Path, e: impl fmt::Display) -> Failure {
    Failure::Input(format!("--input: {}: {e}", path.display()))
}

pub fn read_point_set(path: &Path) -> Outcome<PointSet> {
    match read_input(path)? {
        Input::Points(p) => Ok(p),
        Input::Complex(c) => Ok(c.ground),
    }
}

/// A point set, or a complex file recognized by its `ground` field.
pub fn read_input(path: &Path) -> Outcome<Input> {
    let text = read_text(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| malformed(path, e))?;
    if value.get("ground").is_some() {
        let c: ComplexFile = serde_json::from_value(value).map_err(|e| malformed(path, e))?;
        Ok(Input::Complex(c))
    } else {
        let p: PointSet = serde_json::from_value(value).map_err(|e| malformed(path, e))?;
        Ok(Input::Points(p))
    }
}

/// Comma-separated coordinates: integers, `p/q`, `+inf` or `-inf`.
pub fn parse_point(flag: &str, text: &str, dim: usize) -> Outcome<ExtendedPoint> {
    let coords = text
        .split(',')
        .map(|s| s.trim().parse::<ExtendedCoordinate>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Input(format!("{flag}: {e}")))?;
    if coords.len() != dim {
        return Err(Failure::Input(format!("{flag}: expected {dim} coordinates, found {}", coords.len())));
    }
    Ok(ExtendedPoint::new(coords))
}

/// A permutation of `1..=dim`, comma-separated.
pub fn parse_order(text: &str, dim: usize) -> Outcome<Vec<usize>> {
    let order = text
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Input(format!("--order: {e}")))?;
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (1..=dim).collect::<Vec<_>>() {
        return Err(Failure::Input(format!("--order: {text:?} is not a permutation of 1..{dim}")));
    }
    Ok(order)
}

/// Write `text` (newline-terminated) to `path`, or stdout when absent.
pub fn emit(path: Option<&PathBuf>, text: &str) -> Outcome {
    let mut body = text.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match path {
        Some(p) => fs::write(p, body).map_err(|e| Failure::Input(format!("--output: cannot write {}: {e}", p.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Indented JSON with arrays of scalars kept on one line.
pub fn pretty(value: &impl Serialize) -> String {
    let value = serde_json::to_value(value).expect("reports always serialize");
    let mut out = String::new();
    render(&value, 0, &mut out);
    out
}

fn render(value: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match value {
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push_str(&format!("[{}]", parts.join(", ")));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                render(v, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}]", pad(depth)));
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", pad(depth + 1), Value::String(k.clone())));
                render(v, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&format!("{}}}", pad(depth)));
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Output format chosen by `--emit`: a format name or a file path whose
/// extension names the format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Emit {
    Json(Option<PathBuf>),
    Off(Option<PathBuf>),
}

pub fn parse_emit(text: &str) -> Outcome<Emit> {
    match text {
        "json" => return Ok(Emit::Json(None)),
        "off" => return Ok(Emit::Off(None)),
        _ => {}
    }
    let path = PathBuf::from(text);
    match path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase).as_deref() {
        Some("json") => Ok(Emit::Json(Some(path))),
        Some("off") => Ok(Emit::Off(Some(path))),
        _ => Err(Failure::Input(format!("--emit: {text:?} is neither json, off, nor a .json/.off path"))),
    }
}
