//! Acceptance run over the seeded corpus: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report always prints; exits
//! nonzero if any criterion fails.

mod common;

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use itertools::Itertools;
use num_bigint::BigInt;
use rand::Rng;
use rayon::prelude::*;

use scarf_core::hypersurface::project_to_h;
use scarf_core::ideals::{betti_oracle, minimize, parse_ideal, parse_variables, scarf_chain_complex, MonomialIdeal};
use scarf_core::neighborly::{neighbors_of, weak_neighbors, weak_neighbors_orthant};
use scarf_core::sample::{
    convex_combination, random_convex_weights, random_generic_antichain_in, random_h_sample, random_point_below,
    rng_from_seed,
};
use scarf_core::slack::{coverage_check, is_generic_star};
use scarf_core::subdivision::{ordered_chain_simplices, realize};
use scarf_core::topology::{reduced_homology, restrict_below, topology_report};
use scarf_core::{augment, enumerate_complex, is_generic, locate_bonnet, ExtendedPoint, PointSet, ScaleGuards, StaircaseRegion};

const CORPUS_SIZE: u64 = 200;

struct Outcome {
    id: usize,
    name: &'static str,
    summary: String,
    violations: Vec<String>,
    seconds: f64,
}

/// Collect per-instance violation lists, tagged with the instance index.
fn gather<F>(corpus: &[PointSet], check: F) -> Vec<String>
where
    F: Fn(usize, &PointSet) -> Vec<String> + Sync,
{
    corpus
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, set)| check(i, set).into_iter().map(move |v| format!("instance {i}: {v}")))
        .collect()
}

fn brute_force_equivalence(corpus: &[PointSet]) -> (String, Vec<String>) {
    let v = gather(corpus, |_, set| {
        let nb = enumerate_complex(set, None);
        let got = common::sorted_faces(nb.complex().faces());
        let want = common::brute_force_nb(set);
        if got == want {
            vec![]
        } else {
            vec![format!("{} faces enumerated, oracle has {}", got.len(), want.len())]
        }
    });
    (format!("{} instances, exact face-set equality", corpus.len()), v)
}

fn genericity_dual(corpus: &[PointSet], ties: &[PointSet]) -> (String, Vec<String>) {
    let all: Vec<PointSet> = corpus.iter().chain(ties).cloned().collect();
    let v = gather(&all, |_, set| {
        let fast = is_generic(set).generic;
        let slow = common::brute_force_generic(set);
        if fast == slow {
            vec![]
        } else {
            vec![format!("shared-coordinate test says {fast}, per-face oracle says {slow}")]
        }
    });
    let non_generic = ties.iter().filter(|s| !common::brute_force_generic(s)).count();
    (format!("{} sets ({} non-generic among the tie-heavy ones)", all.len(), non_generic), v)
}

fn face_lemma_suite(corpus: &[PointSet]) -> (String, Vec<String>) {
    let v = gather(corpus, |_, set| {
        let n = set.dim();
        let nb = enumerate_complex(set, None);
        let mut out = Vec::new();
        let mut joins = HashSet::new();
        for face in nb.faces().filter(|f| !f.is_empty()) {
            let j = face.join.clone().unwrap();
            if face.len() > n {
                out.push(format!("{:?} has more than {n} members", face.members));
            }
            for k in 0..n {
                let hits = face.members.iter().filter(|&&m| set.point(m)[k] == j[k]).count();
                if hits != 1 {
                    out.push(format!("{:?}: {hits} members on face {}", face.members, k + 1));
                }
            }
            let below: Vec<usize> = (0..set.len()).filter(|&i| set.point(i).leq(&j)).collect();
            if below != face.members {
                out.push(format!("{:?}: bonnet holds {below:?}", face.members));
            }
            match nb.join_face_partition(&face.members) {
                Some(parts) => {
                    let total: usize = parts.iter().map(|p| p.codimension()).sum();
                    let disjoint = parts.iter().tuple_combinations().all(|(a, b)| a.is_disjoint(b));
                    if total != n || !disjoint || parts.iter().any(|p| p.codimension() == 0) {
                        out.push(format!("{:?}: coordinate sets do not partition 1..{n}", face.members));
                    }
                }
                None => out.push(format!("{:?}: no partition", face.members)),
            }
            if !joins.insert(j) {
                out.push(format!("{:?}: join repeats", face.members));
            }
        }
        out
    });
    (format!("{} instances, every nonempty face", corpus.len()), v)
}

fn weak_neighbor_paths(corpus: &[PointSet]) -> (String, Vec<String>) {
    let v = gather(corpus, |i, set| {
        let mut out = Vec::new();
        let mut rng = rng_from_seed(20_000 + i as u64);
        let mut queries: Vec<(ExtendedPoint, bool)> = set.points().iter().map(|p| (p.clone(), true)).collect();
        for _ in 0..5 {
            let c: Vec<i64> = (0..set.dim()).map(|_| rng.random_range(-5..=55)).collect();
            queries.push((ExtendedPoint::from_ints(&c), false));
        }
        for (y, member) in queries {
            let mut rect = weak_neighbors(set, &y).unwrap();
            let mut orth = weak_neighbors_orthant(set, &y).unwrap();
            rect.sort_unstable();
            orth.sort_unstable();
            if rect != orth {
                out.push(format!("y = {y}: rectangle {rect:?} vs orthant {orth:?}"));
            }
            if member {
                let nbrs = neighbors_of(set, &y).unwrap();
                if let Some(a) = nbrs.iter().find(|a| !rect.contains(a)) {
                    out.push(format!("y = {y}: neighbor {a} is not a weak neighbor"));
                }
            }
        }
        out
    });
    (format!("{} instances, every point plus 5 random integer queries each", corpus.len()), v)
}

fn subdivision_bijection(corpus: &[PointSet]) -> (String, Vec<String>) {
    let v = gather(corpus, |_, set| {
        let nb = enumerate_complex(set, None);
        match realize(&nb) {
            Ok((mesh, cert)) => {
                let mut out = cert.violations.clone();
                if !cert.passed() {
                    out.push(format!("certificate failed: {cert:?}"));
                }
                if mesh.vertices.len() != nb.complex().face_count() {
                    out.push("mesh vertex count differs from face count".into());
                }
                out
            }
            Err(e) => vec![e.to_string()],
        }
    });
    (format!("{} instances, certificate per instance", corpus.len()), v)
}

fn boundary_sandwich(corpus: &[PointSet]) -> (String, Vec<String>) {
    let v = gather(corpus, |i, set| {
        let mut out = Vec::new();
        let nb = enumerate_complex(set, None);
        let region = StaircaseRegion::from_complex(&nb);
        let mut rng = rng_from_seed(30_000 + i as u64);
        for chain in ordered_chain_simplices(set, nb.complex()).unwrap() {
            for _ in 0..10 {
                let w = random_convex_weights(&mut rng, chain.vertices.len());
                let p = convex_combination(&chain.vertices, &w).unwrap();
                if !region.on_boundary(&p).unwrap() {
                    out.push(format!("{p} from {:?} is off the boundary", chain.ordering));
                }
            }
        }
        for _ in 0..1000 {
            let h = random_h_sample(&mut rng, set.dim(), 60);
            let p = region.raise_to_surface(&h).unwrap();
            if !region.on_boundary(&p).unwrap() || project_to_h(&p).unwrap() != h {
                out.push(format!("round trip fails at {h}"));
            }
        }
        out
    });
    (format!("{} instances, 10 points per chain simplex, 1000 H-samples each", corpus.len()), v)
}

fn acyclicity(corpus: &[PointSet]) -> (String, Vec<String>) {
    let guards = ScaleGuards::default();
    let v = gather(corpus, |i, set| {
        let mut out = Vec::new();
        match topology_report(set, &guards) {
            Ok(r) => {
                if !r.nb_betti.is_zero() {
                    out.push(format!("Nb(A) has reduced Betti numbers {}", r.nb_betti));
                }
                if !r.order_complex_betti.is_zero() {
                    out.push(format!("order complex of P(A) has reduced Betti numbers {}", r.order_complex_betti));
                }
                if !r.crosscut_equals_nb {
                    out.push("crosscut complex differs from Nb(A)".into());
                }
                if !r.poset_is_face_joins {
                    out.push("P(A) differs from the set of face joins".into());
                }
            }
            Err(e) => out.push(e.to_string()),
        }
        let nb = enumerate_complex(set, None);
        let mut rng = rng_from_seed(40_000 + i as u64);
        for _ in 0..5 {
            let a = set.point(rng.random_range(0..set.len()));
            let b = ExtendedPoint::from_rationals(
                a.finite_coords()
                    .unwrap()
                    .into_iter()
                    .map(|c| c + num_rational::BigRational::from_integer(BigInt::from(rng.random_range(0..=20))))
                    .collect(),
            );
            let direct = nb.restrict_below(&b, false);
            let (below, idx) = restrict_below(set, &b, false).unwrap();
            let via = enumerate_complex(&below, None).complex().relabel(set.len(), &idx).unwrap();
            if direct != via {
                out.push(format!("restriction routes disagree below {b}"));
            }
            let h = reduced_homology(&direct);
            if !h.is_zero() {
                out.push(format!("Nb(A) below {b} has reduced Betti numbers {h}"));
            }
        }
        out
    });
    (format!("{} instances, 5 restrictions each", corpus.len()), v)
}

fn small_dimension(corpus: &[PointSet]) -> Vec<PointSet> {
    corpus.iter().filter(|s| s.dim() <= 3).cloned().collect()
}

fn sweep_certificates(corpus: &[PointSet]) -> (String, Vec<String>) {
    let sets = small_dimension(corpus);
    let v = gather(&sets, |i, set| {
        let mut out = Vec::new();
        let star = augment(set).unwrap();
        let maximal: HashSet<Vec<usize>> =
            enumerate_complex(&star, None).maximal_faces().into_iter().map(|f| f.members).collect();
        let mut rng = rng_from_seed(50_000 + i as u64);
        let orders: Vec<Vec<usize>> = (1..=set.dim()).permutations(set.dim()).collect();
        for _ in 0..100 {
            let b = random_point_below(&mut rng, &star, 10).unwrap();
            for order in &orders {
                match locate_bonnet(&star, &b, order) {
                    Ok(cert) => {
                        if let Err(e) = cert.verify(&star) {
                            out.push(format!("b = {b}, order {order:?}: {e}"));
                        }
                        if !maximal.contains(&cert.face()) {
                            out.push(format!("b = {b}, order {order:?}: {:?} is not a maximal face", cert.face()));
                        }
                    }
                    Err(e) => out.push(format!("b = {b}, order {order:?}: {e}")),
                }
            }
        }
        out
    });
    (format!("{} instances with n <= 3, 100 queries under every order", sets.len()), v)
}

fn coverage(corpus: &[PointSet]) -> (String, Vec<String>) {
    let sets: Vec<PointSet> = small_dimension(corpus)
        .into_iter()
        .filter(|s| is_generic_star(&augment(s).unwrap()).generic)
        .collect();
    let scanned = AtomicUsize::new(0);
    let v = gather(&sets, |i, set| {
        let star = augment(set).unwrap();
        let mut rng = rng_from_seed(60_000 + i as u64);
        let samples: Vec<ExtendedPoint> = (0..500).map(|_| random_h_sample(&mut rng, set.dim(), 80)).collect();
        match coverage_check(&star, &samples) {
            Ok(r) => {
                scanned.fetch_add(r.scan_hits, Ordering::Relaxed);
                r.misses.iter().map(|h| format!("line through {h} misses")).collect()
            }
            Err(e) => vec![e.to_string()],
        }
    });
    let scanned = scanned.into_inner();
    (format!("{} instances with generic A*, 500 H-samples each, {scanned} hits outside the swept cells", sets.len()), v)
}

fn ideal_from(set: &PointSet) -> MonomialIdeal {
    let vars = (1..=set.dim()).map(|i| format!("x{i}")).collect();
    let gens = set
        .points()
        .iter()
        .map(|p| p.coords().iter().map(|c| u64::try_from(c.as_integer().unwrap()).unwrap()).collect())
        .collect();
    minimize(&MonomialIdeal::new(vars, gens).unwrap())
}

fn ideal_checks() -> (String, Vec<String>) {
    let guards = ScaleGuards::default();
    let mut out = Vec::new();
    let i = parse_ideal("x^2, x*y, y^2", &parse_variables("x,y")).unwrap();
    let c = scarf_chain_complex(&i).unwrap();
    let md = |d: usize| c.degrees[d].multidegrees.iter().map(ToString::to_string).collect::<Vec<_>>();
    if c.ranks() != vec![3, 2] || md(1) != ["(2,0)", "(1,1)", "(0,2)"] || md(2) != ["(2,1)", "(1,2)"] {
        out.push(format!("(x^2, xy, y^2): ranks {:?}, multidegrees {:?} / {:?}", c.ranks(), md(1), md(2)));
    }
    if betti_oracle(&i, &guards).unwrap() != c.betti_table() {
        out.push("(x^2, xy, y^2): oracle disagrees with the chain complex".into());
    }
    let generic: Vec<MonomialIdeal> = (0..50u64)
        .map(|s| {
            let n = 2 + (s % 2) as usize;
            let count = 1 + (s * 5 % 7) as usize;
            ideal_from(&random_generic_antichain_in(n, count, 50, 70_000 + s).unwrap())
        })
        .collect();
    let ties: Vec<MonomialIdeal> = common::tie_heavy_corpus(50)
        .iter()
        .filter(|s| s.dim() <= 3 && s.len() <= 7)
        .map(ideal_from)
        .collect();
    let problems: Vec<String> = generic
        .par_iter()
        .enumerate()
        .flat_map_iter(|(k, ideal)| {
            let mut out = Vec::new();
            let c = scarf_chain_complex(ideal).unwrap();
            if !c.generic {
                out.push(format!("ideal {k} {ideal} is not generic"));
            }
            if let Some(d) = c.boundary_square_violation() {
                out.push(format!("ideal {k}: boundary squares to nonzero in degree {d}"));
            }
            if !c.multidegrees_monotone(true) {
                out.push(format!("ideal {k}: boundary does not strictly lower multidegrees"));
            }
            let oracle = betti_oracle(ideal, &guards).unwrap();
            if oracle != c.betti_table() || oracle.entries().iter().any(|e| e.rank != 1) {
                out.push(format!("ideal {k} {ideal}: oracle table differs from Scarf multidegrees"));
            }
            out
        })
        .chain(ties.par_iter().enumerate().flat_map_iter(|(k, ideal)| {
            let c = scarf_chain_complex(ideal).unwrap();
            c.boundary_square_violation()
                .map(|d| format!("tie-heavy ideal {k}: boundary squares to nonzero in degree {d}"))
        }))
        .collect();
    out.extend(problems);
    (format!("(x^2, xy, y^2), 50 generic ideals, {} non-generic ideals for the boundary check", ties.len()), out)
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let corpus = common::corpus(CORPUS_SIZE);
    let ties = common::tie_heavy_corpus(CORPUS_SIZE);
    type Check<'a> = Box<dyn Fn() -> (String, Vec<String>) + 'a>;
    let criteria: Vec<(&'static str, Check)> = vec![
        ("brute-force equivalence", Box::new(|| brute_force_equivalence(&corpus))),
        ("genericity dual checks", Box::new(|| genericity_dual(&corpus, &ties))),
        ("face lemma suite", Box::new(|| face_lemma_suite(&corpus))),
        ("weak-neighbor dual paths", Box::new(|| weak_neighbor_paths(&corpus))),
        ("subdivision bijection", Box::new(|| subdivision_bijection(&corpus))),
        ("boundary sandwich", Box::new(|| boundary_sandwich(&corpus))),
        ("acyclicity", Box::new(|| acyclicity(&corpus))),
        ("sweep certificates", Box::new(|| sweep_certificates(&corpus))),
        ("coverage", Box::new(|| coverage(&corpus))),
        ("ideals", Box::new(ideal_checks)),
    ];
    let mut outcomes = Vec::new();
    for (k, (name, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let (summary, violations) = run();
        outcomes.push(Outcome { id: k + 1, name, summary, violations, seconds: start.elapsed().as_secs_f64() });
    }
    let mut failed = false;
    for o in &outcomes {
        let status = if o.violations.is_empty() { "PASS" } else { "FAIL" };
        failed |= !o.violations.is_empty();
        println!(
            "criterion {:>2} {status} {}: {}; {} violations ({:.1}s)",
            o.id,
            o.name,
            o.summary,
            o.violations.len(),
            o.seconds
        );
        for v in o.violations.iter().take(5) {
            println!("    {v}");
        }
    }
    if failed {
        std::process::exit(1);
    }
}
