//! Command-line front end: graph generation, connectivity queries, and
//! reproducible verification runs with JSON reports.
//!
//! Exit codes: 0 success/pass, 2 usage or input parse error, 3 invalid
//! node ids, 4 verification failure (the report is still emitted).

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shiftconn::connectivity::{
    kappa_global, kappa_global_digraph, kappa_st, kappa_st_digraph, ConnectivityError,
};
use shiftconn::edgelist::{parse_edge_list, ParsedGraph};
use shiftconn::graph::Digraph;
use shiftconn::lowerbound::{
    build_family_graph, family_parameters, fingerprint_injectivity, p_within_poset_range,
    FingerprintMode,
};
use shiftconn::poset::{
    check_poset_count_bound, enumerate_dags, enumerate_posets, random_dag, PosetCode, PosetDag,
    MAX_ENUMERATION_K,
};
use shiftconn::shift::{build_shift_graph, verify_dag_shift, verify_shift_connectivity};

use report::{round6, to_json, CheckLine, ReportBuilder};

const EXIT_USAGE: u8 = 2;
const EXIT_BAD_IDS: u8 = 3;
const EXIT_VERIFY_FAILED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "shiftconn",
    about = "Vertex-connectivity toolkit: shift gadgets, k-connected families, exact kappa queries",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact connectivity queries on an edge-list file.
    Kappa(KappaArgs),
    /// Generate shift or family graphs as edge-list + metadata files.
    Gen(GenArgs),
    /// Run a verification suite and emit a JSON report.
    Verify(VerifyArgs),
    /// Enumerate labeled posets: stream codes or check the count bound.
    Posets(PosetsArgs),
}

#[derive(Args)]
struct KappaArgs {
    /// Edge-list file ("U n m" or "D n m" header).
    file: PathBuf,
    /// Source node id.
    s: Option<usize>,
    /// Target node id.
    t: Option<usize>,
    /// Report the global connectivity instead of a pair query.
    #[arg(long)]
    global: bool,
    /// Print "yes"/"no" for kappa > K instead of the raw value.
    #[arg(long, value_name = "K")]
    threshold: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    /// Build the connectivity-shift graph of this digraph file.
    #[arg(long, value_name = "DAG_FILE", conflicts_with_all = ["family", "seed", "posets"])]
    shift: Option<PathBuf>,
    /// Build the family graph G(k,p): two values, K then P.
    #[arg(long, num_args = 2, value_names = ["K", "P"])]
    family: Option<Vec<usize>>,
    /// Seed for sampling the gadget posets (default 0).
    #[arg(long, conflicts_with = "posets")]
    seed: Option<u64>,
    /// Comma-separated hex poset codes, one per gadget.
    #[arg(long, value_name = "CODES")]
    posets: Option<String>,
    /// Output prefix: writes PREFIX.edges and PREFIX.json.
    #[arg(long, value_name = "PREFIX")]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check the pairwise+global connectivity-shift identity at size K.
    #[arg(long, value_name = "K", conflicts_with_all = ["corollary", "theorem"])]
    lemma: Option<usize>,
    /// Check that K-node DAG shift graphs have 2K nodes and kappa = K.
    #[arg(long, value_name = "K", conflicts_with = "theorem")]
    corollary: Option<usize>,
    /// Check answer-table injectivity for G(K,P): two values, K then P.
    #[arg(long, num_args = 2, value_names = ["K", "P"])]
    theorem: Option<Vec<usize>>,
    /// Sweep every poset (or DAG) instance; feasible for K <= 3.
    #[arg(long, conflicts_with = "samples")]
    exhaustive: bool,
    /// Sampled run with this many seeded instances (or tuple pairs).
    #[arg(long, value_name = "N")]
    samples: Option<usize>,
    /// RNG seed for sampled runs (default 0).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; results are identical for every job count.
    #[arg(long, value_name = "J")]
    jobs: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PosetsArgs {
    /// Element count, 1..=5.
    k: usize,
    /// Print "count >= bound: ok|FAIL" instead of streaming codes.
    #[arg(long)]
    count_only: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap exits 0 for --help/--version and 2 for usage errors.
            e.exit();
        }
    };
    let code = match cli.command {
        Command::Kappa(args) => cmd_kappa(&args),
        Command::Gen(args) => cmd_gen(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Posets(args) => cmd_posets(&args),
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn id_error(e: &ConnectivityError) -> u8 {
    eprintln!("error: {e}");
    EXIT_BAD_IDS
}

fn read_graph_file(path: &Path) -> Result<ParsedGraph, u8> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage_error(&format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| usage_error(&format!("{}: {e}", path.display())))
}

fn exit_code_for_verification(pass: bool) -> u8 {
    if pass {
        0
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn cmd_kappa(args: &KappaArgs) -> u8 {
    let graph = match read_graph_file(&args.file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let value = if args.global {
        if args.s.is_some() || args.t.is_some() {
            return usage_error("--global takes no node ids");
        }
        let result = match &graph {
            ParsedGraph::Undirected(g) => kappa_global(g),
            ParsedGraph::Directed(d) => kappa_global_digraph(d),
        };
        match result {
            Ok(v) => v,
            Err(e) => return id_error(&e),
        }
    } else {
        let (Some(s), Some(t)) = (args.s, args.t) else {
            return usage_error("provide node ids S and T, or --global");
        };
        let result = match &graph {
            ParsedGraph::Undirected(g) => kappa_st(g, s, t),
            ParsedGraph::Directed(d) => kappa_st_digraph(d, s, t),
        };
        match result {
            Ok(r) => r.value,
            Err(e) => return id_error(&e),
        }
    };
    match args.threshold {
        Some(k) => println!("{}", if value > k { "yes" } else { "no" }),
        None => println!("{value}"),
    }
    0
}

#[derive(serde::Serialize)]
struct IdConvention {
    hub: String,
    copies: String,
}

#[derive(serde::Serialize)]
struct GenMetadata {
    kind: String,
    k: usize,
    p: Option<usize>,
    node_count: usize,
    edge_count: usize,
    source_arc_count: Option<usize>,
    seed: Option<u64>,
    poset_codes: Option<Vec<String>>,
    id_convention: IdConvention,
}

fn write_generated(out: &Path, edge_list: &str, metadata: &GenMetadata) -> Result<(), u8> {
    let edges_path = out.with_extension("edges");
    let json_path = out.with_extension("json");
    let mut json = serde_json::to_string_pretty(metadata).expect("metadata serializes");
    json.push('\n');
    fs::write(&edges_path, edge_list)
        .map_err(|e| usage_error(&format!("cannot write {}: {e}", edges_path.display())))?;
    fs::write(&json_path, json)
        .map_err(|e| usage_error(&format!("cannot write {}: {e}", json_path.display())))?;
    println!("{}", edges_path.display());
    println!("{}", json_path.display());
    Ok(())
}

fn cmd_gen(args: &GenArgs) -> u8 {
    match (&args.shift, &args.family) {
        (Some(dag_file), None) => {
            let parsed = match read_graph_file(dag_file) {
                Ok(g) => g,
                Err(code) => return code,
            };
            let Some(d) = parsed.as_digraph() else {
                return usage_error("gen --shift expects a directed edge-list file (D header)");
            };
            if d.node_count() == 0 {
                return usage_error("gen --shift needs a digraph with at least one node");
            }
            let shift = build_shift_graph(d);
            let metadata = GenMetadata {
                kind: "shift".to_string(),
                k: shift.k(),
                p: None,
                node_count: shift.base().node_count(),
                edge_count: shift.base().edge_count(),
                source_arc_count: Some(d.arc_count()),
                seed: None,
                poset_codes: None,
                id_convention: IdConvention {
                    hub: format!("originals are 0..{}", shift.k()),
                    copies: format!("copy of node v is v + {}", shift.k()),
                },
            };
            match write_generated(&args.out, &shift.base().to_edge_list(), &metadata) {
                Ok(()) => 0,
                Err(code) => code,
            }
        }
        (None, Some(kp)) => {
            let (k, p) = (kp[0], kp[1]);
            if k == 0 || p == 0 {
                return usage_error("gen --family needs K >= 1 and P >= 1");
            }
            if k > MAX_ENUMERATION_K {
                return usage_error(&format!("gen --family supports K <= {MAX_ENUMERATION_K}"));
            }
            if !p_within_poset_range(k, p) {
                eprintln!(
                    "warning: p = {p} exceeds 2^(k^2/4) ~ {:.3}; the graph still builds but \
                     the stated parameter range is violated",
                    2f64.powf((k * k) as f64 / 4.0)
                );
            }
            let (posets, seed_used): (Vec<PosetDag>, Option<u64>) = match &args.posets {
                Some(codes) => {
                    let mut list = Vec::new();
                    for code_text in codes.split(',') {
                        let code = match PosetCode::from_hex(k, code_text) {
                            Ok(c) => c,
                            Err(e) => return usage_error(&format!("bad poset code: {e}")),
                        };
                        match PosetDag::from_code(&code) {
                            Ok(p) => list.push(p),
                            Err(e) => return usage_error(&format!("bad poset code: {e}")),
                        }
                    }
                    if list.len() != p {
                        return usage_error(&format!(
                            "--posets must supply exactly {p} codes, got {}",
                            list.len()
                        ));
                    }
                    (list, None)
                }
                None => {
                    let seed = args.seed.unwrap_or(0);
                    let all = enumerate_posets(k).expect("k validated above");
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let picks =
                        (0..p).map(|_| all[rng.random_range(0..all.len())].clone()).collect();
                    (picks, Some(seed))
                }
            };
            let codes: Vec<String> = posets.iter().map(|q| q.code().to_hex()).collect();
            let dags: Vec<Digraph> = posets.iter().map(PosetDag::to_digraph).collect();
            let family = match build_family_graph(k, dags) {
                Ok(f) => f,
                Err(e) => return usage_error(&format!("cannot build family graph: {e}")),
            };
            let metadata = GenMetadata {
                kind: "family".to_string(),
                k,
                p: Some(p),
                node_count: family.node_count(),
                edge_count: family.base().edge_count(),
                source_arc_count: None,
                seed: seed_used,
                poset_codes: Some(codes),
                id_convention: IdConvention {
                    hub: format!("hub is 0..{k}"),
                    copies: format!(
                        "gadget i (1-based) occupies i*{k}..(i+1)*{k}; copy of v in gadget i \
                         is i*{k} + v"
                    ),
                },
            };
            match write_generated(&args.out, &family.base().to_edge_list(), &metadata) {
                Ok(()) => 0,
                Err(code) => code,
            }
        }
        _ => usage_error("choose exactly one of --shift or --family"),
    }
}

enum VerifyMode {
    Exhaustive,
    Sampled { samples: usize, seed: u64 },
}

fn resolve_mode(args: &VerifyArgs) -> Result<VerifyMode, u8> {
    match (args.exhaustive, args.samples) {
        (true, None) => Ok(VerifyMode::Exhaustive),
        (false, Some(n)) if n >= 1 => Ok(VerifyMode::Sampled { samples: n, seed: args.seed }),
        (false, Some(_)) => Err(usage_error("--samples must be at least 1")),
        (false, None) => Err(usage_error("choose --exhaustive or --samples N")),
        (true, Some(_)) => unreachable!("clap rejects the conflict"),
    }
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return usage_error("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool configured once at startup");
    }
    let mode = match resolve_mode(args) {
        Ok(m) => m,
        Err(code) => return code,
    };
    let outcome = match (args.lemma, args.corollary, args.theorem.as_deref()) {
        (Some(k), None, None) => verify_shift_suite(k, &mode, false),
        (None, Some(k), None) => verify_shift_suite(k, &mode, true),
        (None, None, Some(kp)) => verify_theorem_suite(kp[0], kp[1], &mode),
        _ => return usage_error("choose exactly one of --lemma, --corollary, --theorem"),
    };
    let report = match outcome {
        Ok(r) => r,
        Err(code) => return code,
    };
    let json = to_json(&report);
    match &args.out {
        Some(path) => {
            if let Err(e) = fs::write(path, json) {
                return usage_error(&format!("cannot write {}: {e}", path.display()));
            }
        }
        None => print!("{json}"),
    }
    exit_code_for_verification(report.pass)
}

/// Shared body for --lemma (any digraph identity) and --corollary (DAG
/// specialization: 2k nodes and kappa(G) = k).
fn verify_shift_suite(
    k: usize,
    mode: &VerifyMode,
    dag_form: bool,
) -> Result<report::RunReport, u8> {
    if k < 2 {
        return Err(usage_error("need K >= 2: pairwise connectivity is undefined below that"));
    }
    let flag = if dag_form { "--corollary" } else { "--lemma" };
    let mut builder = ReportBuilder::new(format!("verify {flag} {k}"));
    builder.parameter("k", k as u64);

    let instances: Vec<(String, Digraph)> = match mode {
        VerifyMode::Exhaustive => {
            if k > 3 {
                return Err(usage_error("exhaustive verification is supported for K <= 3"));
            }
            builder.parameter("mode", "exhaustive");
            if dag_form {
                enumerate_dags(k)
                    .expect("k validated above")
                    .into_iter()
                    .enumerate()
                    .map(|(i, d)| (format!("dag {i}"), d))
                    .collect()
            } else {
                enumerate_posets(k)
                    .expect("k validated above")
                    .into_iter()
                    .map(|p| (format!("poset {}", p.code().to_hex()), p.to_digraph()))
                    .collect()
            }
        }
        VerifyMode::Sampled { samples, seed } => {
            if k > MAX_ENUMERATION_K {
                return Err(usage_error(&format!(
                    "sampled verification is supported for K <= {MAX_ENUMERATION_K}"
                )));
            }
            builder.parameter("mode", "sample");
            builder.parameter("samples", *samples as u64);
            builder.parameter("seed", *seed);
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*samples).map(|i| (format!("random dag {i}"), random_dag(k, &mut rng))).collect()
        }
    };

    let expected = if dag_form {
        format!("2k = {} nodes; kappa(G) = {k}; every pair shifts by {k}", 2 * k)
    } else {
        format!("kappa_G(u, v') = kappa_D(u, v) + {k} on every ordered pair and globally")
    };
    for (name, d) in &instances {
        let (pass, actual) = if dag_form {
            match verify_dag_shift(d) {
                Ok(r) => {
                    let ok = r.pass;
                    (ok, format!("nodes = {}, kappa = {}", r.node_count, r.kappa))
                }
                Err(e) => (false, format!("error: {e}")),
            }
        } else {
            match verify_shift_connectivity(d) {
                Ok(r) => (
                    r.pass,
                    format!(
                        "kappa(G) = {}, kappa(D) = {}, pairs checked = {}",
                        r.kappa_shift_graph,
                        r.kappa_digraph_global,
                        r.pairs.len()
                    ),
                ),
                Err(e) => (false, format!("error: {e}")),
            }
        };
        builder.check(CheckLine::new(name.clone(), expected.clone(), actual, pass));
    }
    builder.check(CheckLine::new(
        "instances checked",
        format!("{}", instances.len()),
        format!("{}", instances.len()),
        true,
    ));
    Ok(builder.finish())
}

fn verify_theorem_suite(k: usize, p: usize, mode: &VerifyMode) -> Result<report::RunReport, u8> {
    if k == 0 || p == 0 {
        return Err(usage_error("need K >= 1 and P >= 1"));
    }
    let mut builder = ReportBuilder::new(format!("verify --theorem {k} {p}"));
    builder.parameter("k", k as u64);
    builder.parameter("p", p as u64);
    if !p_within_poset_range(k, p) {
        eprintln!("warning: p = {p} exceeds 2^(k^2/4); the stated parameter range is violated");
    }
    let fp_mode = match mode {
        VerifyMode::Exhaustive => {
            builder.parameter("mode", "exhaustive");
            FingerprintMode::Exhaustive
        }
        VerifyMode::Sampled { samples, seed } => {
            builder.parameter("mode", "sample");
            builder.parameter("samples", *samples as u64);
            builder.parameter("seed", *seed);
            FingerprintMode::Sample { pairs: *samples, seed: *seed }
        }
    };
    let fp = match fingerprint_injectivity(k, p, fp_mode) {
        Ok(r) => r,
        Err(e) => return Err(usage_error(&format!("cannot run fingerprint sweep: {e}"))),
    };
    let params = family_parameters(k, p);
    builder.parameter("n", params.n as u64);

    builder.check(CheckLine::new(
        "answer-table collisions",
        "0",
        format!("{}", fp.collisions.len()),
        fp.collisions.is_empty(),
    ));
    let bound = round6(2f64.powf(fp.bound_bits));
    builder.check(CheckLine::new(
        "distinct tables reach 2^(p*k^2/4)",
        format!(">= {bound}"),
        format!("{}", fp.distinct_tables),
        fp.distinct_meets_bound,
    ));
    builder.check(CheckLine::new(
        "implied bits log2(distinct)",
        format!(">= {}", round6(fp.bound_bits)),
        format!("{}", round6(fp.achieved_bits)),
        fp.achieved_bits >= fp.bound_bits - 1e-9,
    ));
    builder.check(CheckLine::new(
        "tables evaluated",
        format!("{}", fp.tuples_evaluated),
        format!("{}", fp.tuples_evaluated),
        true,
    ));
    builder.check(CheckLine::new(
        "parameter identity p*k^2/4 == (1 - 1/(p+1))*k*n/4",
        "exact",
        if params.fraction_identity_holds { "exact" } else { "violated" }.to_string(),
        params.fraction_identity_holds,
    ));
    Ok(builder.finish())
}

fn cmd_posets(args: &PosetsArgs) -> u8 {
    if args.k == 0 || args.k > MAX_ENUMERATION_K {
        return usage_error(&format!("K must be in 1..={MAX_ENUMERATION_K}"));
    }
    if args.count_only {
        let report = check_poset_count_bound(args.k).expect("k validated above");
        println!(
            "{} >= {:.3}: {}",
            report.count,
            report.bound,
            if report.holds { "ok" } else { "FAIL" }
        );
    } else {
        for poset in enumerate_posets(args.k).expect("k validated above") {
            println!("{}", poset.code().to_hex());
        }
    }
    0
}
