//! One function per subcommand.

use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};

use scarf_core::ideals::{betti_oracle, buchberger_graph, minimize, parse_ideal, parse_variables, scarf_chain_complex};
use scarf_core::pointset::is_antichain;
use scarf_core::sample::{random_h_sample, rng_from_seed};
use scarf_core::slack::coverage_check;
use scarf_core::subdivision::realize;
use scarf_core::topology::{restrict_below, topology_report};
use scarf_core::{
    augment, enumerate_complex, geometric_subdivision, is_generic, locate_bonnet, GeometricMesh, PointSet, ScaleGuards,
    SimplicialComplex, StaircaseRegion,
};

use crate::io::{emit, parse_emit, parse_order, parse_point, pretty, read_input, read_point_set, ComplexFile, Emit, Failure, Input, Outcome};

pub struct Context {
    pub output: Option<PathBuf>,
    pub guards: ScaleGuards,
}

impl Context {
    fn write(&self, text: &str) -> Outcome {
        emit(self.output.as_ref(), text)
    }
}

fn core<T>(field: &str, r: scarf_core::Result<T>) -> Outcome<T> {
    r.map_err(|e| Failure::from_core(field, e))
}

fn guarded(ctx: &Context, set: &PointSet) -> Outcome {
    core("--input", ctx.guards.check_set(set))
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Point set JSON.
    #[arg(long)]
    pub input: PathBuf,
    /// Exit with status 1 unless the set is a generic antichain.
    #[arg(long)]
    pub require_generic: bool,
}

pub fn check(ctx: &Context, a: &CheckArgs) -> Outcome {
    let set = read_point_set(&a.input)?;
    guarded(ctx, &set)?;
    let chain = is_antichain(&set);
    let generic = is_generic(&set);
    let report = json!({
        "dim": set.dim(),
        "points": set.len(),
        "finite": set.is_finite(),
        "integral": set.is_integral(),
        "antichain": chain.is_antichain,
        "antichain_witness": chain.witness,
        "generic": generic.generic,
        "genericity_violations": generic.violations.len(),
        "first_violation": generic.violations.first(),
    });
    ctx.write(&pretty(&report))?;
    if a.require_generic && !(chain.is_antichain && generic.generic) {
        return Err(Failure::Falsified("input is not a generic antichain".into()));
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct ComplexArgs {
    /// Point set JSON.
    #[arg(long)]
    pub input: PathBuf,
    /// Stop after faces of this dimension.
    #[arg(long)]
    pub max_dim: Option<usize>,
    /// Exit with status 1 if the input is not generic.
    #[arg(long)]
    pub check_generic: bool,
}

pub fn complex(ctx: &Context, a: &ComplexArgs) -> Outcome {
    let set = read_point_set(&a.input)?;
    guarded(ctx, &set)?;
    let nb = enumerate_complex(&set, a.max_dim);
    let generic = nb.is_generic();
    let file = ComplexFile {
        facets: nb.complex().facets(),
        f_vector: Some(nb.complex().f_vector()),
        generic: Some(generic),
        ground: set,
    };
    ctx.write(&pretty(&file))?;
    if a.check_generic && !generic {
        return Err(Failure::Falsified("input is not generic".into()));
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct SubdivideArgs {
    /// Point set JSON, or a complex file written by `scarf complex`.
    #[arg(long)]
    pub input: PathBuf,
    /// `json`, `off` (n = 3), or a .json/.off path.
    #[arg(long, default_value = "json")]
    pub emit: String,
    /// Decimal places for OFF coordinates.
    #[arg(long, default_value_t = 6)]
    pub digits: usize,
    /// Write the mesh certificate JSON here.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

fn write_mesh(ctx: &Context, mesh: &GeometricMesh, target: &Emit, digits: usize) -> Outcome {
    let (text, path) = match target {
        Emit::Json(p) => {
            let value: Value = serde_json::from_str(&mesh.to_json()).expect("mesh JSON round-trips");
            (pretty(&value), p)
        }
        Emit::Off(p) => (core("--emit", mesh.to_off(digits))?, p),
    };
    match path {
        Some(p) => emit(Some(p), &text),
        None => ctx.write(&text),
    }
}

pub fn subdivide(ctx: &Context, a: &SubdivideArgs) -> Outcome {
    let target = parse_emit(&a.emit)?;
    let (mesh, cert) = match read_input(&a.input)? {
        Input::Points(set) => {
            guarded(ctx, &set)?;
            core("--input", realize(&enumerate_complex(&set, None)))?
        }
        Input::Complex(file) => {
            guarded(ctx, &file.ground)?;
            let k = core("--input", SimplicialComplex::from_facets(file.ground.len(), file.facets))?;
            if &k != enumerate_complex(&file.ground, None).complex() {
                return Err(Failure::Input("--input: facets do not match the neighborly complex of the ground set".into()));
            }
            core("--input", geometric_subdivision(&file.ground, &k))?
        }
    };
    write_mesh(ctx, &mesh, &target, a.digits)?;
    if let Some(p) = &a.report {
        emit(Some(p), &pretty(&cert))?;
    }
    if !cert.passed() {
        return Err(Failure::Falsified(format!("mesh certificate failed: {}", cert.violations.join("; "))));
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct SurfaceArgs {
    /// Point set JSON.
    #[arg(long)]
    pub input: PathBuf,
    /// Report whether this point is in the region and on its boundary.
    #[arg(long, conflicts_with = "raise", allow_hyphen_values = true)]
    pub probe: Option<String>,
    /// Raise this point along the diagonal onto the boundary.
    #[arg(long, allow_hyphen_values = true)]
    pub raise: Option<String>,
    /// Write the realized mesh: `json`, `off`, or a .json/.off path.
    #[arg(long)]
    pub emit: Option<String>,
    /// Decimal places for OFF coordinates.
    #[arg(long, default_value_t = 6)]
    pub digits: usize,
}

pub fn surface(ctx: &Context, a: &SurfaceArgs) -> Outcome {
    let set = read_point_set(&a.input)?;
    guarded(ctx, &set)?;
    let nb = enumerate_complex(&set, None);
    let region = StaircaseRegion::from_complex(&nb);
    let query = a.probe.is_some() || a.raise.is_some();
    if let Some(text) = &a.emit {
        let target = parse_emit(text)?;
        if query && matches!(target, Emit::Json(None) | Emit::Off(None)) {
            return Err(Failure::Input("--emit: give a file path when combining with --probe or --raise".into()));
        }
        let (mesh, cert) = core("--input", realize(&nb))?;
        if !cert.passed() {
            return Err(Failure::Falsified(format!("mesh certificate failed: {}", cert.violations.join("; "))));
        }
        write_mesh(ctx, &mesh, &target, a.digits)?;
    }
    if let Some(text) = &a.probe {
        let p = parse_point("--probe", text, set.dim())?;
        let inside = core("--probe", region.contains(&p))?;
        let boundary = core("--probe", region.on_boundary(&p))?;
        ctx.write(&pretty(&json!({ "point": p.to_string(), "inside": inside, "boundary": boundary })))?;
    } else if let Some(text) = &a.raise {
        let h = parse_point("--raise", text, set.dim())?;
        let p = core("--raise", region.raise_to_surface(&h))?;
        if !core("--raise", region.on_boundary(&p))? {
            return Err(Failure::Falsified(format!("raised point {p} is not on the boundary")));
        }
        ctx.write(&pretty(&json!({ "h": h.to_string(), "point": p.to_string() })))?;
    } else if a.emit.is_none() {
        let corners: Vec<String> = region.corners().iter().map(ToString::to_string).collect();
        ctx.write(&pretty(&json!({ "dim": set.dim(), "corners": corners })))?;
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct TopologyArgs {
    /// Point set JSON.
    #[arg(long)]
    pub input: PathBuf,
    /// Restrict to the points below this point first.
    #[arg(long, allow_hyphen_values = true)]
    pub below: Option<String>,
    /// With --below, use `<` (<= and not equal) instead of `<=`.
    #[arg(long, requires = "below")]
    pub strict: bool,
    /// Write the report here instead of the --output target.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

pub fn topology(ctx: &Context, a: &TopologyArgs) -> Outcome {
    let set = read_point_set(&a.input)?;
    guarded(ctx, &set)?;
    let applies = is_antichain(&set).is_antichain && is_generic(&set).generic;
    let (sub, restriction) = match &a.below {
        Some(text) => {
            let b = parse_point("--below", text, set.dim())?;
            let (sub, idx) = core("--below", restrict_below(&set, &b, a.strict))?;
            let via = core("--below", enumerate_complex(&sub, None).complex().relabel(set.len(), &idx))?;
            let filter = enumerate_complex(&set, None).restrict_below(&b, a.strict);
            let info = json!({
                "below": b.to_string(),
                "strict": a.strict,
                "kept": idx,
                "face_filter_agrees": filter == via,
            });
            (sub, Some(info))
        }
        None => (set, None),
    };
    let mut out = json!({ "theorems_apply": applies });
    if let Some(info) = restriction {
        out["restriction"] = info;
    }
    let falsified = if sub.is_empty() {
        out["note"] = json!("the restriction is empty; its complex is the void-plus-empty-face complex");
        false
    } else {
        let report = core("--input", topology_report(&sub, &ctx.guards))?;
        let bad = applies && !(report.acyclic() && report.crosscut_equals_nb && report.poset_is_face_joins);
        out["report"] = serde_json::to_value(&report).expect("reports always serialize");
        bad
    };
    match &a.report {
        Some(p) => emit(Some(p), &pretty(&out))?,
        None => ctx.write(&pretty(&out))?,
    }
    if falsified {
        return Err(Failure::Falsified("a generic input failed acyclicity or the crosscut identity".into()));
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct SlackArgs {
    /// Point set JSON (finite coordinates).
    #[arg(long)]
    pub input: PathBuf,
    /// Run the bonnet sweep from this point.
    #[arg(long, conflicts_with = "coverage", allow_hyphen_values = true)]
    pub locate: Option<String>,
    /// Coordinate order for the sweep, a permutation of 1..n.
    #[arg(long, requires = "locate")]
    pub order: Option<String>,
    /// Number of random lines parallel to the diagonal to test.
    #[arg(long)]
    pub coverage: Option<usize>,
    /// Seed for the coverage samples.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Half-width of the sampling box on the sum-zero hyperplane
    /// (default: largest coordinate magnitude plus 10).
    #[arg(long)]
    pub spread: Option<i64>,
}

fn default_spread(set: &PointSet) -> i64 {
    let biggest = set
        .points()
        .iter()
        .flat_map(|p| p.coords().iter())
        .filter_map(|c| c.as_finite())
        .map(|v| v.ceil().to_integer().max((-v).ceil().to_integer()))
        .max()
        .unwrap_or_default();
    i64::try_from(biggest).unwrap_or(i64::MAX / 64) + 10
}

pub fn slack(ctx: &Context, a: &SlackArgs) -> Outcome {
    let set = read_point_set(&a.input)?;
    guarded(ctx, &set)?;
    let star = core("--input", augment(&set))?;
    let n = set.dim();
    if let Some(text) = &a.locate {
        let b = parse_point("--locate", text, n)?;
        let order = match &a.order {
            Some(o) => parse_order(o, n)?,
            None => (1..=n).collect(),
        };
        let cert = core("--locate", locate_bonnet(&star, &b, &order))?;
        let verdict = cert.verify(&star);
        let mut out = serde_json::to_value(&cert).expect("certificates always serialize");
        out["valid"] = json!(verdict.is_ok());
        ctx.write(&pretty(&out))?;
        if let Err(e) = verdict {
            return Err(Failure::Falsified(format!("bonnet certificate invalid: {e}")));
        }
    } else if let Some(count) = a.coverage {
        let spread = a.spread.unwrap_or_else(|| default_spread(&set));
        if spread <= 0 {
            return Err(Failure::Input("--spread: must be positive".into()));
        }
        let mut rng = rng_from_seed(a.seed);
        let samples: Vec<_> = (0..count).map(|_| random_h_sample(&mut rng, n, spread)).collect();
        let report = core("--input", coverage_check(&star, &samples))?;
        let mut out = serde_json::to_value(&report).expect("reports always serialize");
        out["misses"] = json!(report.misses.iter().map(ToString::to_string).collect::<Vec<_>>());
        out["seed"] = json!(a.seed);
        out["spread"] = json!(spread);
        ctx.write(&pretty(&out))?;
        if !report.all_hit() {
            return Err(Failure::Falsified(format!("{} of {count} lines missed the realized complex", report.misses.len())));
        }
    } else {
        ctx.write(&pretty(&star))?;
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    /// Generators, e.g. "x^2, x*y, y^2".
    #[arg(long)]
    pub gens: String,
    /// Variable names in order, e.g. "x,y".
    #[arg(long)]
    pub vars: String,
    /// Write the chain complex (`json` or a .json path) or, for three
    /// variables, the Buchberger graph mesh (a .off path).
    #[arg(long)]
    pub emit: Option<String>,
    /// Print the Betti table computed from the lcm lattice.
    #[arg(long)]
    pub betti: bool,
    /// Decimal places for OFF coordinates.
    #[arg(long, default_value_t = 6)]
    pub digits: usize,
}

pub fn ideal(ctx: &Context, a: &IdealArgs) -> Outcome {
    let vars = parse_variables(&a.vars);
    if vars.is_empty() {
        return Err(Failure::Input("--vars: no variables given".into()));
    }
    let ideal = minimize(&core("--gens", parse_ideal(&a.gens, &vars))?);
    let chain = core("--gens", scarf_chain_complex(&ideal))?;
    if let Some(d) = chain.boundary_square_violation() {
        return Err(Failure::Falsified(format!("boundary maps compose to nonzero in degree {d}")));
    }
    let mut complex = json!({ "ideal": ideal.to_string(), "generators": ideal.generators() });
    if let (Some(head), Value::Object(rest)) = (complex.as_object_mut(), chain.to_json()) {
        head.extend(rest);
    }
    let target = a.emit.as_deref().map(parse_emit).transpose()?;
    match &target {
        Some(Emit::Off(p)) => {
            let (mesh, cert) = core("--emit", buchberger_graph(&ideal))?;
            if !cert.passed() {
                return Err(Failure::Falsified(format!("mesh certificate failed: {}", cert.violations.join("; "))));
            }
            let text = core("--emit", mesh.to_off(a.digits))?;
            match p {
                Some(p) => emit(Some(p), &text)?,
                None if !a.betti => ctx.write(&text)?,
                None => return Err(Failure::Input("--emit: give a file path when combining with --betti".into())),
            }
        }
        Some(Emit::Json(Some(p))) => emit(Some(p), &pretty(&complex))?,
        Some(Emit::Json(None)) | None if !a.betti => ctx.write(&pretty(&complex))?,
        Some(Emit::Json(None)) => return Err(Failure::Input("--emit: give a file path when combining with --betti".into())),
        None => {}
    }
    if a.betti {
        let oracle = core("--gens", betti_oracle(&ideal, &ctx.guards))?;
        let matches = oracle == chain.betti_table();
        let out = json!({
            "ideal": ideal.to_string(),
            "generic": chain.generic,
            "betti": oracle,
            "totals": oracle.totals(),
            "scarf_complex_is_minimal_resolution": matches,
        });
        ctx.write(&pretty(&out))?;
        if chain.generic && !matches {
            return Err(Failure::Falsified("generic ideal whose Scarf complex disagrees with the lattice Betti numbers".into()));
        }
    }
    Ok(())
}
