//! Command-line front end.
//!
//! Five subcommands: `compute` for one tree, `enum` for sweeping a class,
//! `extremal` for optimizing over a class, `verify` for adjudicating the
//! published claims, and `bench` for timing the linear algorithm.
//!
//! Exit codes: 0 success, 1 a verification or cross-check failed, 2 bad
//! usage or parameters, 3 the requested class is empty.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::descriptor::{eccentricities_linear, xi_linear, xi_oracle};
use crate::enumeration::{free_trees, free_trees_uncapped, ClassFilter};
use crate::extremal::{
    extremal_search, verify_all, verify_claim, verify_table1, ClaimId, Objective,
    SearchError, VerdictStatus,
};
use crate::families::{broom, path, volkmann, FamilyError, FamilyKind, FamilySpec};
use crate::tree::Tree;

#[derive(Parser)]
#[command(
    name = "ecci",
    version,
    about = "Eccentric connectivity index of trees: compute, enumerate, optimize, verify."
)]
struct Cli {
    /// Emit one JSON document on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the index of a single tree, read from a file or built from a
    /// named family.
    Compute(ComputeArgs),
    /// Walk all free trees on n vertices, with optional structural filters.
    #[command(name = "enum")]
    Enumerate(EnumArgs),
    /// Exhaustively minimize or maximize the index over a filtered class.
    Extremal(ExtremalArgs),
    /// Re-derive the published extremal claims; errata are flagged, not hidden.
    Verify(VerifyArgs),
    /// Time the linear algorithm on a large family member.
    Bench(BenchArgs),
}

fn parse_family_kind(s: &str) -> Result<FamilyKind, String> {
    s.parse().map_err(|e: FamilyError| e.to_string())
}

fn parse_objective(s: &str) -> Result<Objective, String> {
    s.parse()
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1)
}

#[derive(Args)]
struct ComputeArgs {
    /// Edge-list file: a vertex-count line, then one `u v` line per edge.
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    /// Family name: path, star, starlike, broom, second-broom, matching-tree,
    /// balanced-starlike, volkmann, or diameter-tree.
    #[arg(long, value_parser = parse_family_kind)]
    family: Option<FamilyKind>,
    #[command(flatten)]
    params: FamilyParams,
    /// Cross-check against the quadratic reference implementation.
    #[arg(long)]
    oracle: bool,
    /// Also report per-vertex degrees and eccentricities.
    #[arg(long)]
    profile: bool,
}

#[derive(Args)]
struct FamilyParams {
    /// Vertex count.
    #[arg(long)]
    n: Option<usize>,
    /// Maximum degree, where the family takes one.
    #[arg(long)]
    delta: Option<usize>,
    /// Starlike leg lengths, comma separated.
    #[arg(long, value_delimiter = ',')]
    legs: Option<Vec<usize>>,
    /// Pendant-vertex count for balanced-starlike.
    #[arg(long)]
    p: Option<usize>,
    /// Diameter for diameter-tree.
    #[arg(long)]
    d: Option<usize>,
    /// diameter-tree only: how many spare vertices go on the lower of the
    /// two middle spine positions.
    #[arg(long)]
    at_floor: Option<usize>,
}

impl FamilyParams {
    fn to_spec(&self, kind: FamilyKind) -> FamilySpec {
        FamilySpec {
            kind: Some(kind),
            n: self.n,
            delta: self.delta,
            legs: self.legs.clone(),
            p: self.p,
            d: self.d,
            at_floor: self.at_floor,
        }
    }
}

#[derive(Args)]
struct EnumArgs {
    /// Vertex count.
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    filter: FilterArgs,
    /// Report only the class count; skip index values.
    #[arg(long)]
    count_only: bool,
    /// Write every matching tree to this file, blank-line separated.
    #[arg(long)]
    emit: Option<PathBuf>,
    /// Lift the built-in vertex-count guard rail and accept the wait.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct FilterArgs {
    /// Keep trees whose maximum degree is exactly this.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Keep trees whose maximum degree is at most this.
    #[arg(long)]
    max_degree_at_most: Option<usize>,
    /// Keep trees with exactly this many pendant vertices.
    #[arg(long)]
    pendants: Option<usize>,
    /// Keep trees with exactly this radius.
    #[arg(long)]
    radius: Option<usize>,
    /// Keep trees with exactly this diameter.
    #[arg(long)]
    diameter: Option<usize>,
    /// true keeps trees with a perfect matching, false those without.
    #[arg(long)]
    perfect_matching: Option<bool>,
}

impl FilterArgs {
    fn to_filter(&self) -> ClassFilter {
        ClassFilter {
            max_degree: self.max_degree,
            max_degree_at_most: self.max_degree_at_most,
            pendant_count: self.pendants,
            radius: self.radius,
            diameter: self.diameter,
            perfect_matching: self.perfect_matching,
        }
    }
}

#[derive(Args)]
struct ExtremalArgs {
    /// Vertex count.
    #[arg(long)]
    n: usize,
    /// min or max.
    #[arg(long, default_value = "min", value_parser = parse_objective)]
    objective: Objective,
    #[command(flatten)]
    filter: FilterArgs,
    /// How many optimal trees to print as witnesses.
    #[arg(long, default_value_t = 5)]
    witnesses: usize,
    /// Worker threads for the sweep.
    #[arg(long, default_value_t = default_threads())]
    threads: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// A claim id, `table1` for the published minima table, or `all`.
    #[arg(long, default_value = "all")]
    claim: String,
    /// Shrink every sweep to trees with at most this many vertices.
    #[arg(long)]
    max_n: Option<usize>,
    /// Worker threads for the sweeps.
    #[arg(long, default_value_t = default_threads())]
    threads: usize,
    /// Claims expected to come back ERRATUM; any other ERRATUM (or any FAIL)
    /// makes the run exit nonzero.
    #[arg(long, value_delimiter = ',', default_value = "cor-radius,thm-matching")]
    expect_errata: Vec<String>,
}

#[derive(Args)]
struct BenchArgs {
    /// path, broom, or volkmann.
    #[arg(long, default_value = "path")]
    family: String,
    /// Vertex count.
    #[arg(long)]
    n: usize,
    /// Maximum degree for broom and volkmann.
    #[arg(long, default_value_t = 3)]
    delta: usize,
    /// Timed repetitions; the median is reported.
    #[arg(long, default_value_t = 5)]
    repeat: usize,
    /// Also run the quadratic reference and compare (n <= 4000).
    #[arg(long)]
    compare_oracle: bool,
}

struct Failure {
    code: i32,
    msg: String,
}

fn fail(code: i32, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Failure {
        let code = match e {
            SearchError::EmptyClass(_) => 3,
            SearchError::Enum(_) => 2,
        };
        fail(code, e.to_string())
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    let json = cli.json;
    let outcome = match cli.cmd {
        Cmd::Compute(a) => cmd_compute(json, a),
        Cmd::Enumerate(a) => cmd_enum(json, a),
        Cmd::Extremal(a) => cmd_extremal(json, a),
        Cmd::Verify(a) => cmd_verify(json, a),
        Cmd::Bench(a) => cmd_bench(json, a),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            f.code
        }
    }
}

fn cmd_compute(json: bool, a: ComputeArgs) -> Result<i32, Failure> {
    let tree: Tree = if let Some(file) = &a.file {
        let text = fs::read_to_string(file)
            .map_err(|e| fail(2, format!("cannot read {}: {e}", file.display())))?;
        text.parse().map_err(|e| fail(2, format!("bad edge list: {e}")))?
    } else if let Some(kind) = a.family {
        a.params.to_spec(kind).build().map_err(|e| fail(2, e.to_string()))?
    } else {
        return Err(fail(2, "give either --file or --family (see --help)"));
    };
    let profile = eccentricities_linear(&tree);
    let xi: u64 = (0..tree.n()).map(|v| (tree.degree(v) * profile.ecc[v]) as u64).sum();
    let mut oracle_agrees = None;
    if a.oracle {
        let reference = xi_oracle(&tree);
        let ref_profile = tree.ecc_profile_oracle();
        oracle_agrees = Some(reference.0 == xi && ref_profile == profile);
    }
    if json {
        let mut doc = json!({
            "n": tree.n(),
            "xi": xi,
            "radius": profile.radius,
            "diameter": profile.diameter,
            "center": profile.center,
        });
        if a.profile {
            doc["eccentricities"] = json!(profile.ecc);
            doc["degrees"] = json!((0..tree.n()).map(|v| tree.degree(v)).collect::<Vec<_>>());
        }
        if let Some(agrees) = oracle_agrees {
            doc["oracle_agrees"] = json!(agrees);
        }
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("xi = {xi}");
        println!(
            "n = {}, radius = {}, diameter = {}, center = {:?}",
            tree.n(),
            profile.radius,
            profile.diameter,
            profile.center
        );
        if a.profile {
            println!("vertex degree eccentricity");
            for v in 0..tree.n() {
                println!("{v} {} {}", tree.degree(v), profile.ecc[v]);
            }
        }
        if let Some(agrees) = oracle_agrees {
            println!("oracle {}", if agrees { "agrees" } else { "DISAGREES" });
        }
    }
    if oracle_agrees == Some(false) {
        eprintln!("error: linear algorithm and quadratic reference disagree on this tree");
        return Ok(1);
    }
    Ok(0)
}

fn cmd_enum(json: bool, a: EnumArgs) -> Result<i32, Failure> {
    let filter = a.filter.to_filter();
    let trees = if a.force {
        free_trees_uncapped(a.n)
    } else {
        free_trees(a.n).map_err(|e| fail(2, format!("{e}; pass --force to run anyway")))?
    };
    let mut emit = match &a.emit {
        Some(path) => Some(std::io::BufWriter::new(
            fs::File::create(path)
                .map_err(|e| fail(2, format!("cannot create {}: {e}", path.display())))?,
        )),
        None => None,
    };
    let mut count = 0u64;
    let mut min_xi: Option<u64> = None;
    let mut max_xi: Option<u64> = None;
    for t in trees {
        if !filter.matches(&t) {
            continue;
        }
        count += 1;
        if !a.count_only {
            let x = xi_linear(&t).0;
            min_xi = Some(min_xi.map_or(x, |m| m.min(x)));
            max_xi = Some(max_xi.map_or(x, |m| m.max(x)));
        }
        if let Some(w) = emit.as_mut() {
            w.write_all(t.to_edge_list().as_bytes())
                .and_then(|_| w.write_all(b"\n"))
                .map_err(|e| fail(2, format!("write failed: {e}")))?;
        }
    }
    if let Some(mut w) = emit {
        w.flush().map_err(|e| fail(2, format!("write failed: {e}")))?;
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "n": a.n,
                "filter": filter,
                "count": count,
                "min_xi": min_xi,
                "max_xi": max_xi,
                "emitted": a.emit.as_ref().map(|p| p.display().to_string()),
            }))
            .unwrap()
        );
    } else {
        println!("{count} tree(s) on {} vertices match", a.n);
        if let (Some(lo), Some(hi)) = (min_xi, max_xi) {
            println!("xi range: {lo} ..= {hi}");
        }
        if let Some(path) = &a.emit {
            println!("wrote edge lists to {}", path.display());
        }
    }
    if count == 0 {
        eprintln!("error: no tree on {} vertices satisfies the filter", a.n);
        return Ok(3);
    }
    Ok(0)
}

fn cmd_extremal(json: bool, a: ExtremalArgs) -> Result<i32, Failure> {
    let filter = a.filter.to_filter();
    let report = extremal_search(a.n, &filter, a.objective, a.witnesses, a.threads)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        let word = match a.objective {
            Objective::Min => "minimum",
            Objective::Max => "maximum",
        };
        println!(
            "{word} xi over the class: {} ({} attaining class(es))",
            report.value, report.count
        );
        for (i, doc) in report.witnesses.iter().enumerate() {
            println!("witness {}:", i + 1);
            print!("{doc}");
        }
    }
    Ok(0)
}

fn cmd_verify(json: bool, a: VerifyArgs) -> Result<i32, Failure> {
    let verdicts = match a.claim.as_str() {
        "all" => verify_all(a.max_n, a.threads),
        "table1" => verify_table1(a.max_n, a.threads),
        name => {
            let id: ClaimId = name.parse().map_err(|e: String| {
                fail(2, format!("{e}; expected a claim id, table1, or all"))
            })?;
            vec![verify_claim(id, a.max_n, a.threads)]
        }
    };
    let expected_erratum =
        |claim: &str| a.expect_errata.iter().any(|e| e == claim);
    let ok = verdicts.iter().all(|v| match v.status {
        VerdictStatus::Pass => true,
        VerdictStatus::Erratum => expected_erratum(&v.claim),
        VerdictStatus::Fail => false,
    });
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "ok": ok, "verdicts": verdicts })).unwrap()
        );
    } else {
        for v in &verdicts {
            println!("{} {}: {}", v.status, v.claim, v.details);
            if v.status == VerdictStatus::Fail {
                println!("  data: {}", v.data);
            }
        }
        let unexpected = verdicts
            .iter()
            .filter(|v| match v.status {
                VerdictStatus::Pass => false,
                VerdictStatus::Erratum => !expected_erratum(&v.claim),
                VerdictStatus::Fail => true,
            })
            .count();
        if ok {
            println!("all {} verdict(s) as expected", verdicts.len());
        } else {
            println!("{unexpected} unexpected verdict(s) out of {}", verdicts.len());
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_bench(json: bool, a: BenchArgs) -> Result<i32, Failure> {
    if a.repeat == 0 {
        return Err(fail(2, "--repeat must be at least 1"));
    }
    let tree = match a.family.as_str() {
        "path" => path(a.n),
        "broom" => broom(a.n, a.delta),
        "volkmann" => volkmann(a.n, a.delta),
        other => return Err(fail(2, format!("bench families are path, broom, volkmann; got {other:?}"))),
    }
    .map_err(|e| fail(2, e.to_string()))?;
    let mut runs_ns = Vec::with_capacity(a.repeat);
    let mut xi = xi_linear(&tree);
    for _ in 0..a.repeat {
        let started = Instant::now();
        xi = xi_linear(&tree);
        runs_ns.push(started.elapsed().as_nanos() as u64);
    }
    let mut sorted = runs_ns.clone();
    sorted.sort_unstable();
    let median_ns = sorted[sorted.len() / 2];
    let per_second = if median_ns == 0 {
        f64::INFINITY
    } else {
        a.n as f64 / (median_ns as f64 / 1e9)
    };
    let mut oracle_agrees = None;
    if a.compare_oracle {
        if a.n > 4000 {
            return Err(fail(2, "the reference is quadratic; --compare-oracle needs --n <= 4000"));
        }
        oracle_agrees = Some(xi_oracle(&tree) == xi);
    }
    if json {
        let mut doc = json!({
            "family": a.family,
            "n": a.n,
            "xi": xi,
            "runs_ns": runs_ns,
            "median_ns": median_ns,
            "vertices_per_second": per_second,
        });
        if let Some(agrees) = oracle_agrees {
            doc["oracle_agrees"] = json!(agrees);
        }
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        println!("xi = {xi} ({} on {} vertices)", a.family, a.n);
        println!(
            "median {:.3} ms over {} run(s), {:.1}M vertices/s",
            median_ns as f64 / 1e6,
            a.repeat,
            per_second / 1e6
        );
        if let Some(agrees) = oracle_agrees {
            println!("oracle {}", if agrees { "agrees" } else { "DISAGREES" });
        }
    }
    if oracle_agrees == Some(false) {
        eprintln!("error: linear algorithm and quadratic reference disagree");
        return Ok(1);
    }
    Ok(0)
}
