use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use irk::acceptance::{criterion, run_acceptance, run_criterion, AcceptanceSummary, Profile};
use irk::bounds::{
    bound_audit, capital_psi, capital_psi_lower_bound, f, iota_member, lemma18_construct, monotonicity_grid, psi,
    AuditClaim, Verdict, DEFAULT_N0,
};
use irk::classification::{
    build_original_graph, classify_sn, construct_from_tree_form, construct_type, equal_up_to_inversion, normalize_an,
    random_descriptor, sample_maximal_irredundant, uniqueness_check, SampleOptions, TypeDescriptor,
};
use irk::decomposition::{closure_cover, m_decompose, strong_m_decompose, CoverMode, OrderedPartition};
use irk::io::{load_group, load_set, load_vectors, parse_points};
use irk::irredundance::{
    i_search, is_flat, is_irredundant_generating, m_search, replacement_property, Budget, SearchOptions,
};
use irk::wreath::{
    build_wreath, default_irredundant_set, default_outer_automorphisms, goursat_classify, hall_generates,
    thm10_nonreplacement_witness, thm10_witness, thm11_witness,
};
use irk::{Error, PermGroup, Permutation, Result};

#[derive(Parser)]
#[command(name = "irk", version, about = "Irredundant generating sets of permutation groups")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[arg(long, global = true, value_enum, default_value_t = ProfileArg::Fast)]
    profile: ProfileArg,
    /// Compact single-line JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock seconds in reports.
    #[arg(long, global = true)]
    timing: bool,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Fast,
    Slow,
}

#[derive(Subcommand)]
enum Cmd {
    /// m(G), i(G), the replacement property and flatness.
    Irr {
        #[command(subcommand)]
        cmd: IrrCmd,
    },
    /// M-decompositions and closure covers.
    Decomp {
        #[command(subcommand)]
        cmd: DecompCmd,
    },
    /// Classification of irredundant generating sets of length n-2.
    Classify {
        #[command(subcommand)]
        cmd: ClassifyCmd,
    },
    /// Exact bound recursions and the explicit sets through a given element.
    Bounds {
        #[command(subcommand)]
        cmd: BoundsCmd,
    },
    /// Checks one bound claim on a group, or on a set for thm8.
    Audit(AuditArgs),
    /// Wreath products and their witnesses.
    Wreath {
        #[command(subcommand)]
        cmd: WreathCmd,
    },
    /// Runs the acceptance criteria.
    Acceptance {
        /// Run only this criterion, such as A7.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Group file or builtin name such as builtin:S4.
    group: String,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<f64>,
}

#[derive(Subcommand)]
enum IrrCmd {
    M(SearchArgs),
    I(SearchArgs),
    Replace(SearchArgs),
    Flat {
        #[command(flatten)]
        search: SearchArgs,
        /// Judge strong flatness instead.
        #[arg(long)]
        strong: bool,
    },
}

#[derive(Subcommand)]
enum DecompCmd {
    M {
        perm: String,
        #[arg(long)]
        partition: String,
    },
    Strong {
        perm: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    Cover {
        setfile: String,
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value_t = ModeArg::M)]
        mode: ModeArg,
        /// The group I for mode k.
        #[arg(long)]
        i: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    M,
    K,
}

#[derive(Subcommand)]
enum ClassifyCmd {
    An {
        setfile: String,
        /// Also report the uniqueness check (n <= 8).
        #[arg(long)]
        uniqueness: bool,
    },
    Sn {
        setfile: String,
    },
    Make {
        #[arg(long = "type")]
        type_id: u8,
        /// Descriptor JSON, inline or as a file; random when absent.
        #[arg(long)]
        spec: Option<String>,
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    Sample {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Set size; n-2 by default.
        #[arg(long)]
        size: Option<usize>,
    },
}

#[derive(Subcommand)]
enum BoundsCmd {
    F {
        k: u64,
        /// Rational such as 1 or 1/2.
        q: String,
    },
    Psi {
        k: u64,
        l: u64,
    },
    #[command(name = "Psi")]
    CapitalPsi {
        k: u64,
        #[arg(long, default_value_t = DEFAULT_N0)]
        n0: u64,
    },
    Iota {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    Lemma18 {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Monotonicity of the recursions on the grid k, l <= max.
    Grid {
        #[arg(long, default_value_t = 4)]
        max: u64,
    },
}

#[derive(Args)]
struct AuditArgs {
    #[arg(value_enum)]
    claim: ClaimArg,
    /// Group file, or a set file for thm8.
    target: String,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 2)]
    block_size: usize,
    #[arg(long, default_value_t = DEFAULT_N0)]
    n0: u64,
    #[arg(long)]
    budget_nodes: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClaimArg {
    Lemma2,
    Lemma15,
    Thm2,
    Thm7,
    Thm8,
}

#[derive(Subcommand)]
enum WreathCmd {
    Build {
        #[arg(long)]
        base: String,
        #[arg(long)]
        top: String,
    },
    WitnessM {
        #[arg(long)]
        base: String,
        #[arg(long)]
        top: String,
        /// Irredundant generating set of the base; a default one when absent.
        #[arg(long)]
        base_set: Option<String>,
        #[arg(long)]
        top_set: Option<String>,
        /// Build the larger set from a replacement-property counterexample of the base.
        #[arg(long)]
        nonreplacement: bool,
    },
    WitnessI {
        #[arg(long)]
        base: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        base_set: Option<String>,
    },
    Hall {
        #[arg(long)]
        base: String,
        #[arg(long)]
        vectors: String,
        /// Use inner automorphisms only.
        #[arg(long)]
        inner_only: bool,
    },
    Goursat {
        groupfile: String,
        /// The factor S; the projection onto the first half when absent.
        #[arg(long)]
        base: Option<String>,
    },
}

const EXIT_FINDING: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

struct Outcome {
    report: Value,
    exit: u8,
}

fn report<T: Serialize>(value: &T, exit: u8) -> Result<Outcome> {
    let report = serde_json::to_value(value).map_err(|e| Error::VerificationFailed(e.to_string()))?;
    Ok(Outcome { report, exit })
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::BudgetExhausted(_) | Error::Intractable(_) => EXIT_BUDGET,
        Error::Unclassifiable(_) | Error::VerificationFailed(_) | Error::Precondition(_) | Error::Infeasible(_) => {
            EXIT_FINDING
        }
        Error::InvalidPermutation(_)
        | Error::InvalidInput(_)
        | Error::DegreeMismatch(..)
        | Error::DegreeCap(..)
        | Error::OrderCap(..) => EXIT_USAGE,
    }
}

fn search_options(cli: &Cli, nodes: Option<u64>, secs: Option<f64>) -> SearchOptions {
    SearchOptions {
        budget: Budget { max_nodes: nodes, max_seconds: secs },
        workers: cli.workers,
        normalizer: Vec::new(),
        timing: cli.timing,
    }
}

fn parse_perm(text: &str, n: Option<usize>) -> Result<Permutation> {
    match n {
        Some(n) => Permutation::parse(n, text),
        None => Permutation::parse_auto(text),
    }
}

fn set_or_default(path: &Option<String>, g: &PermGroup) -> Result<Vec<Permutation>> {
    match path {
        Some(p) => load_set(p),
        None => default_irredundant_set(g),
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.cmd {
        Cmd::Irr { cmd } => irr(cli, cmd),
        Cmd::Decomp { cmd } => decomp(cmd),
        Cmd::Classify { cmd } => classify(cli, cmd),
        Cmd::Bounds { cmd } => bounds(cmd),
        Cmd::Audit(a) => audit(cli, a),
        Cmd::Wreath { cmd } => wreath(cmd),
        Cmd::Acceptance { only } => acceptance(cli, only.as_deref()),
    }
}

fn irr(cli: &Cli, cmd: &IrrCmd) -> Result<Outcome> {
    match cmd {
        IrrCmd::M(a) | IrrCmd::I(a) => {
            let g = load_group(&a.group)?;
            let opts = search_options(cli, a.budget_nodes, a.budget_secs);
            let r = if matches!(cmd, IrrCmd::M(_)) { m_search(&g, &opts)? } else { i_search(&g, &opts)? };
            report(&r, if r.exact { 0 } else { EXIT_BUDGET })
        }
        IrrCmd::Replace(a) => {
            let g = load_group(&a.group)?;
            report(&replacement_property(&g, &search_options(cli, a.budget_nodes, a.budget_secs))?, 0)
        }
        IrrCmd::Flat { search, strong } => {
            let g = load_group(&search.group)?;
            let r = is_flat(&g, &search_options(cli, search.budget_nodes, search.budget_secs))?;
            let (property, holds) = if *strong { ("strongly_flat", r.strongly_flat) } else { ("flat", r.flat) };
            report(&json!({ "property": property, "holds": holds, "report": r }), 0)
        }
    }
}

fn decomp(cmd: &DecompCmd) -> Result<Outcome> {
    match cmd {
        DecompCmd::M { perm, partition } => {
            let p = OrderedPartition::parse(partition)?;
            let h = Permutation::parse(p.degree(), perm)?;
            let d = m_decompose(&h, &p)?;
            d.verify(&h, &p)?;
            report(&json!({ "h": h, "decomposition": d, "beta": d.beta(), "verified": true }), 0)
        }
        DecompCmd::Strong { perm, x, y } => {
            let (x, y) = (parse_points(x)?, parse_points(y)?);
            let h0 = Permutation::parse_auto(perm)?;
            let n = x.iter().chain(&y).map(|&p| p + 1).max().unwrap_or(0).max(h0.degree());
            let h = h0.extend(n);
            let (alpha, beta) = strong_m_decompose(&h, &x, &y)?;
            report(&json!({ "h": h, "alpha": alpha, "beta": beta, "verified": &alpha * &beta == h }), 0)
        }
        DecompCmd::Cover { setfile, partition, mode, i } => {
            let p = OrderedPartition::parse(partition)?;
            let h: Vec<Permutation> = load_set(setfile)?.into_iter().map(|x| x.extend(p.degree())).collect();
            let mode = match (mode, i) {
                (ModeArg::M, _) => CoverMode::M,
                (ModeArg::K, Some(i)) => CoverMode::K(load_group(i)?),
                (ModeArg::K, None) => return Err(Error::InvalidInput("mode k needs --i".into())),
            };
            let r = closure_cover(&h, &p, &mode)?;
            let exit = if r.contains_h { 0 } else { EXIT_FINDING };
            report(&r, exit)
        }
    }
}

fn as_unclassifiable(e: Error) -> Error {
    match e {
        Error::Precondition(d) => Error::Unclassifiable(d),
        e => e,
    }
}

fn classify(cli: &Cli, cmd: &ClassifyCmd) -> Result<Outcome> {
    match cmd {
        ClassifyCmd::An { setfile, uniqueness } => {
            let h = load_set(setfile)?;
            let n = h[0].degree();
            let graph = build_original_graph(&h, &PermGroup::alternating(n)).map_err(as_unclassifiable)?;
            let form = normalize_an(&h).map_err(as_unclassifiable)?;
            let rebuilt = construct_from_tree_form(&form)?;
            let matches = equal_up_to_inversion(&rebuilt, &h);
            let unique = if *uniqueness { Some(uniqueness_check(&h)?) } else { None };
            let out = json!({
                "n": n,
                "original_graph": graph,
                "tree_form": form,
                "reconstructed": rebuilt,
                "equal_up_to_inversion": matches,
                "uniqueness": unique,
            });
            report(&out, if matches { 0 } else { EXIT_FINDING })
        }
        ClassifyCmd::Sn { setfile } => {
            let h = load_set(setfile)?;
            let d = classify_sn(&h).map_err(as_unclassifiable)?;
            let rebuilt = construct_type(&d)?;
            let matches = equal_up_to_inversion(&rebuilt, &h);
            let out = json!({ "descriptor": d, "reconstructed": rebuilt, "equal_up_to_inversion": matches });
            report(&out, if matches { 0 } else { EXIT_FINDING })
        }
        ClassifyCmd::Make { type_id, spec, n } => {
            let d: TypeDescriptor = match spec {
                Some(s) => {
                    let text = if std::path::Path::new(s).exists() {
                        std::fs::read_to_string(s).map_err(|e| Error::InvalidInput(e.to_string()))?
                    } else {
                        s.clone()
                    };
                    let d: TypeDescriptor =
                        serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("descriptor: {e}")))?;
                    if d.type_id != *type_id {
                        return Err(Error::InvalidInput(format!("descriptor has type {}", d.type_id)));
                    }
                    d
                }
                None => random_descriptor(*type_id, *n, &mut ChaCha8Rng::seed_from_u64(cli.seed))?,
            };
            let set = construct_type(&d)?;
            let ok = is_irredundant_generating(&PermGroup::symmetric(d.n), &set);
            let out = json!({ "descriptor": d, "set": set, "irredundant_generating": ok });
            report(&out, if ok { 0 } else { EXIT_FINDING })
        }
        ClassifyCmd::Sample { group, count, size } => {
            let g = load_group(group)?;
            let n = g.degree();
            let size = size.unwrap_or(n.saturating_sub(2));
            let opts = SampleOptions { count: *count, seed: cli.seed, ..Default::default() };
            let sample = sample_maximal_irredundant(&g, size, &opts)?;
            let classify_one = |h: &[Permutation]| -> Value {
                let r = if g.is_alternating_on_degree() {
                    normalize_an(h).map(|f| json!({ "tree_form": f }))
                } else if g.is_symmetric_on_degree() {
                    classify_sn(h).map(|d| json!({ "type": d.type_id, "descriptor": d }))
                } else {
                    Err(Error::Precondition("only A_n and S_n are classified".into()))
                };
                match r {
                    Ok(v) => json!({ "set": h, "classified": v }),
                    Err(e) => json!({ "set": h, "error": e.code(), "detail": e.to_string() }),
                }
            };
            let rows: Vec<Value> = sample.samples.iter().map(|h| classify_one(h)).collect();
            let failures = rows.iter().filter(|r| r.get("error").is_some()).count();
            let out = json!({
                "group": group,
                "size": size,
                "count": rows.len(),
                "attempts": sample.attempts,
                "unclassified": failures,
                "samples": rows,
            });
            report(&out, if failures == 0 { 0 } else { EXIT_FINDING })
        }
    }
}

fn bounds(cmd: &BoundsCmd) -> Result<Outcome> {
    match cmd {
        BoundsCmd::F { k, q } => {
            let q: BigRational = q.parse().map_err(|_| Error::InvalidInput(format!("bad rational {q:?}")))?;
            report(&json!({ "k": k, "q": q.to_string(), "value": f(*k, &q)?.to_string() }), 0)
        }
        BoundsCmd::Psi { k, l } => report(&json!({ "k": k, "l": l, "value": psi(*k, *l)?.to_string() }), 0),
        BoundsCmd::CapitalPsi { k, n0 } => match capital_psi(*k, *n0) {
            Ok(v) => report(&json!({ "k": k, "n0": n0, "value": v.to_string() }), 0),
            Err(Error::Intractable(detail)) => {
                let lb = capital_psi_lower_bound(*k, *n0)?;
                let out = json!({ "k": k, "n0": n0, "value": null, "lower_bound": lb.to_string(), "detail": detail });
                report(&out, EXIT_BUDGET)
            }
            Err(e) => Err(e),
        },
        BoundsCmd::Iota { perm, k, n } => {
            let x = parse_perm(perm, *n)?;
            let out = json!({ "x": x, "k": k, "displacement": x.displacement(), "even": x.is_even(), "member": iota_member(&x, *k) });
            report(&out, 0)
        }
        BoundsCmd::Lemma18 { perm, k, n } => {
            let w = lemma18_construct(&parse_perm(perm, Some(*n))?, *k, *n)?;
            let exit = if w.verified { 0 } else { EXIT_FINDING };
            report(&w, exit)
        }
        BoundsCmd::Grid { max } => {
            let r = monotonicity_grid(*max);
            report(&r, 0)
        }
    }
}

fn audit(cli: &Cli, a: &AuditArgs) -> Result<Outcome> {
    let (h, claim) = match a.claim {
        ClaimArg::Thm8 => {
            let set = load_set(&a.target)?;
            (PermGroup::symmetric(set[0].degree()), AuditClaim::Thm8 { k: a.k, set })
        }
        ClaimArg::Lemma2 => (load_group(&a.target)?, AuditClaim::Lemma2 { block_size: a.block_size }),
        ClaimArg::Lemma15 => (load_group(&a.target)?, AuditClaim::Lemma15 { k: a.k }),
        ClaimArg::Thm2 => (load_group(&a.target)?, AuditClaim::Thm2),
        ClaimArg::Thm7 => (load_group(&a.target)?, AuditClaim::Thm7 { k: a.k, n0: a.n0 }),
    };
    let r = bound_audit(&h, &claim, &search_options(cli, a.budget_nodes, None))?;
    let exit = match r.verdict {
        Verdict::Falsified => EXIT_FINDING,
        Verdict::Inconclusive => EXIT_BUDGET,
        Verdict::Verified | Verdict::Vacuous => 0,
    };
    report(&r, exit)
}

fn wreath(cmd: &WreathCmd) -> Result<Outcome> {
    match cmd {
        WreathCmd::Build { base, top } => {
            let w = build_wreath(&load_group(base)?, &load_group(top)?)?;
            report(&json!({ "wreath": w, "generators": w.group.generators() }), 0)
        }
        WreathCmd::WitnessM { base, top, base_set, top_set, nonreplacement } => {
            let (s, p) = (load_group(base)?, load_group(top)?);
            let p_set = set_or_default(top_set, &p)?;
            let w = if *nonreplacement {
                let r = replacement_property(&s, &SearchOptions::default())?;
                let (Some(t_set), Some(t)) = (r.counterexample_set, r.counterexample_h) else {
                    return Err(Error::Precondition("the base has the replacement property".into()));
                };
                thm10_nonreplacement_witness(&s, &t_set, &t, &p, &p_set)?
            } else {
                thm10_witness(&s, &set_or_default(base_set, &s)?, &p, &p_set)?
            };
            let exit = if w.irredundant && w.generating == Some(true) { 0 } else { EXIT_FINDING };
            report(&w, exit)
        }
        WreathCmd::WitnessI { base, n, base_set } => {
            let s = load_group(base)?;
            let w = thm11_witness(&set_or_default(base_set, &s)?, *n)?;
            let exit = if w.irredundant { 0 } else { EXIT_FINDING };
            report(&w, exit)
        }
        WreathCmd::Hall { base, vectors, inner_only } => {
            let s = load_group(base)?;
            let outer = if *inner_only { Vec::new() } else { default_outer_automorphisms(&s) };
            let r = hall_generates(&load_vectors(vectors)?, &s, &outer)?;
            let exit = if r.agrees() { 0 } else { EXIT_FINDING };
            report(&r, exit)
        }
        WreathCmd::Goursat { groupfile, base } => {
            let k = load_group(groupfile)?;
            let s = match base {
                Some(b) => load_group(b)?,
                None => {
                    let half: Vec<usize> = (0..k.degree() / 2).collect();
                    k.restrict(&half).ok_or_else(|| Error::InvalidInput("K does not preserve the first half".into()))?
                }
            };
            let class = goursat_classify(&k, &s)?;
            report(&class, 0)
        }
    }
}

fn acceptance(cli: &Cli, only: Option<&str>) -> Result<Outcome> {
    let profile = match cli.profile {
        ProfileArg::Fast => Profile::Fast,
        ProfileArg::Slow => Profile::Slow,
    };
    let live = !cli.json && cli.output.is_none();
    let show = |line: String| {
        if live {
            println!("{line}");
        }
    };
    let mut summary = match only {
        Some(id) => {
            let c = criterion(id).ok_or_else(|| Error::InvalidInput(format!("unknown criterion {id}")))?;
            let r = run_criterion(c, cli.seed);
            show(r.line());
            let passed = usize::from(r.passed);
            AcceptanceSummary { profile, seed: cli.seed, passed, failed: 1 - passed, criteria: vec![r] }
        }
        None => run_acceptance(profile, cli.seed, |r| show(r.line())),
    };
    if !cli.timing {
        summary.criteria.iter_mut().for_each(|r| r.seconds = None);
    }
    let exit = if summary.failed == 0 { 0 } else { EXIT_FINDING };
    if live {
        println!("{} passed, {} failed", summary.passed, summary.failed);
        return Ok(Outcome { report: Value::Null, exit });
    }
    report(&summary, exit)
}

fn emit(cli: &Cli, value: &Value) -> std::io::Result<()> {
    if value.is_null() {
        return Ok(());
    }
    let text = if cli.json { value.to_string() } else { serde_json::to_string_pretty(value)? };
    match &cli.output {
        Some(path) => std::fs::write(path, text + "\n"),
        None => match writeln!(std::io::stdout(), "{text}") {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
            r => r,
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (mut value, exit) = match run(&cli) {
        Ok(o) => (o.report, o.exit),
        Err(e) => (json!({ "error": e.code(), "detail": e.to_string() }), exit_for(&e)),
    };
    if cli.timing {
        if let Value::Object(map) = &mut value {
            map.insert("wall_seconds".into(), json!(start.elapsed().as_secs_f64()));
        }
    }
    if let Err(e) = emit(&cli, &value) {
        eprintln!("irk: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(exit)
}
