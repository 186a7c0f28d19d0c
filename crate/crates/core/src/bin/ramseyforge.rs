use std::collections::BTreeMap;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ramseyforge::bridge::{self, ColorVector, Colorability, VectorColoring};
use ramseyforge::kset::KSet;
use ramseyforge::oracle::{self, OracleReport, OracleStatus};
use ramseyforge::paths::{self, Variant};
use ramseyforge::ramsey::{self, RamseyColoring};
use ramseyforge::sat::{self, Cnf, SolveResult};
use ramseyforge::shift::{self, Chromatic, ProperColoring};
use ramseyforge::tower::{self, BoundKind, TowerValue};
use ramseyforge::verdict::Scan;
use ramseyforge::{formats, par, Error};

#[derive(Parser)]
#[command(
    name = "ramseyforge",
    version,
    about = "Build and verify colorings behind hypergraph Ramsey lower bounds"
)]
struct Cli {
    /// Worker threads for exhaustive scans [default: $RAMSEYFORGE_WORKERS or 1]
    #[arg(long, global = true)]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bridge hypergraphs over Z_c^n
    #[command(subcommand)]
    Bridges(BridgesCmd),
    /// Proper colorings of shift graphs
    #[command(subcommand)]
    Shift(ShiftCmd),
    /// The composite 2-coloring of k-sets and its verifiers
    #[command(subcommand)]
    Ramsey(RamseyCmd),
    /// Red/blue colorings avoiding short monochromatic ordered paths
    #[command(subcommand)]
    Paths(PathsCmd),
    /// Tower-type lower bounds
    Bounds(BoundsArgs),
    /// Brute-force checks on tiny instances
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// CNF solving
    #[command(subcommand)]
    Sat(SatCmd),
}

#[derive(Subcommand)]
enum BridgesCmd {
    /// Check a 2-coloring for monochromatic bridges (the key coloring by default)
    VerifyKey {
        /// Vector coloring file ("v1 .. vn color" lines)
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        c: u8,
    },
    /// Decide whether the bridge hypergraph is 2-colorable
    Colorable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: u8,
        /// Write the plain NAE encoding as DIMACS
        #[arg(long)]
        export_dimacs: Option<PathBuf>,
        /// Cross-check with brute force (at most 25 variables)
        #[arg(long)]
        check_exhaustive: bool,
        /// Solve the plain encoding without symmetry-breaking clauses
        #[arg(long)]
        no_symmetry_breaking: bool,
        /// Write the certificate coloring when one exists
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Least n whose bridge hypergraph is 2-colorable
    Minimal {
        #[arg(long)]
        c: u8,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PhiSource {
    /// Most-significant-bit coloring of pairs
    Bit,
    /// SAT search
    Sat,
}

#[derive(Subcommand)]
enum ShiftCmd {
    /// Chromatic number of Sh(N,k), up to c_max
    Chromatic {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 4)]
        c_max: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A proper coloring of Sh(N,k) with c colors
    Color3 {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 3)]
        c: u32,
        #[arg(long, value_enum, default_value_t = PhiSource::Sat)]
        method: PhiSource,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest N <= n_max with chi(Sh(N,k)) <= 3
    SExact {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n_max: u32,
    },
}

#[derive(Subcommand)]
enum RamseyCmd {
    /// Build psi . lambda on the k-subsets of [N] and verify it
    Build {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 4)]
        parts: usize,
        /// Shift coloring file for phi [default: SAT search with 3 colors]
        #[arg(long)]
        phi: Option<PathBuf>,
        /// Vector coloring file for psi [default: the key coloring for 4 parts, else a SAT certificate]
        #[arg(long)]
        psi: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a Ramsey coloring file
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        parts: usize,
        /// Clique size to exclude [default: k+1]
        #[arg(long)]
        q: Option<u32>,
    },
}

#[derive(Subcommand)]
enum PathsCmd {
    /// Build a path coloring from phi and verify it
    Verify {
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        k: u32,
        /// "bit", "sat", or a shift coloring file
        #[arg(long, default_value = "sat")]
        phi: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    Variant::parse(s).ok_or_else(|| format!("unknown variant {s:?} (expected p23, p33 or k1_2k1)"))
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    k: Option<u32>,
    /// diag, k1k2, k2k2, k1_2k1, s (s lower bound) or s4
    #[arg(long, default_value = "diag")]
    kind: String,
    /// Evaluate tw_i(x) instead
    #[arg(long, requires = "x", conflicts_with = "k")]
    tw: Option<u32>,
    #[arg(long)]
    x: Option<u64>,
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Every 2-coloring of pairs of [N] has a red K_l or a blue K_m
    Ramsey2 {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        m: u32,
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// P_k(2,2) <= N
    Path2 {
        #[arg(long)]
        k: u32,
        #[arg(long = "N")]
        n: u32,
    },
    /// P_l(2,2,2) = s(l) + 1 on the scanned range
    P222 {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// P_k(m,n) <= R_k(k+m-1, k+n-1) for k = 2 and N <= 7
    Audit {
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 7)]
        n_max: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Cdcl,
    Dpll,
}

#[derive(Subcommand)]
enum SatCmd {
    /// Solve a DIMACS file
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Cdcl)]
        engine: Engine,
        #[arg(long)]
        check_exhaustive: bool,
    },
}

#[derive(Serialize)]
struct RunReport {
    tool_version: &'static str,
    command: String,
    parameters: BTreeMap<String, Value>,
    status: &'static str,
    witness: Value,
    counts: BTreeMap<String, Value>,
    elapsed_ms: u64,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            tool_version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            parameters: BTreeMap::new(),
            status: "pass",
            witness: Value::Null,
            counts: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_string(), json!(value));
        self
    }

    fn count(&mut self, key: &str, value: impl Serialize) {
        self.counts.insert(key.to_string(), json!(value));
    }
}

enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
}

fn set_json(s: &KSet) -> Value {
    json!(s.elements())
}

fn bridge_json(b: &bridge::Bridge, coloring: &VectorColoring) -> Value {
    json!({
        "a": b.a().coords(),
        "b": b.b().coords(),
        "members": b.members().iter().map(|m| m.coords().to_vec()).collect::<Vec<_>>(),
        "color": coloring.color(b.a()),
    })
}

fn scan_status<W>(scan: &Scan<W>) -> &'static str {
    scan.status().as_str()
}

/// The key rule on any `Z_c^n`: color 1 when the coordinate sum or
/// `v1 + v3` vanishes mod c (missing coordinates read as 0).
fn key_like(v: &ColorVector) -> u8 {
    let x = v.coords();
    let c = v.c() as u32;
    let total = x.iter().map(|&t| t as u32).sum::<u32>() % c;
    let odd = (x[0] as u32 + x.get(2).copied().unwrap_or(0) as u32) % c;
    if total == 0 || odd == 0 {
        1
    } else {
        2
    }
}

fn bridges(cmd: BridgesCmd, workers: usize) -> CliResult<RunReport> {
    match cmd {
        BridgesCmd::VerifyKey { coloring, n, c } => {
            let mut report = RunReport::new("bridges verify-key")
                .param("n", n)
                .param("c", c);
            let vc = match &coloring {
                Some(path) => {
                    report = report.param("coloring", path.display().to_string());
                    formats::read_vector_coloring(&read_text(path)?, n, c)?
                }
                None if (n, c) == (4, 3) => bridge::chi_key_coloring(),
                None => VectorColoring::from_fn(n, c, key_like)?,
            };
            let space = bridge::BridgeSpace::new(n, c)?;
            report.count("bridges", space.edge_count());
            report.count("vectors", space.vertex_count());
            match bridge::has_mono_bridge(&vc, workers) {
                None => report.status = "pass",
                Some(b) => {
                    report.status = "fail";
                    report.witness = bridge_json(&b, &vc);
                }
            }
            Ok(report)
        }
        BridgesCmd::Colorable {
            n,
            c,
            export_dimacs,
            check_exhaustive,
            no_symmetry_breaking,
            out,
        } => {
            let mut report = RunReport::new("bridges colorable")
                .param("n", n)
                .param("c", c)
                .param("symmetry_breaking", !no_symmetry_breaking);
            let cnf = bridge::bridge_cnf(n, c)?;
            report.count("variables", cnf.variable_count());
            report.count("clauses", cnf.clause_count());
            report.count("bridges", bridge::BridgeSpace::new(n, c)?.edge_count());
            if let Some(path) = &export_dimacs {
                write_text(path, &sat::write_dimacs(&cnf))?;
            }
            let result = bridge::bridge_2colorable_with(n, c, !no_symmetry_breaking)?;
            if check_exhaustive {
                if cnf.variable_count() <= sat::MAX_EXHAUSTIVE_VARS {
                    let brute = sat::exhaustive_check(&cnf)?;
                    if brute.is_sat() != result.is_colorable() {
                        return Err(Error::Internal(format!(
                            "solver says {} but brute force says {}",
                            result.is_colorable(),
                            brute.status_str()
                        ))
                        .into());
                    }
                    report.count("exhaustive_check", "agrees");
                } else {
                    report.count("exhaustive_check", "skipped");
                }
            }
            match result {
                Colorability::NotColorable => report.status = "unsat",
                Colorability::Colorable(vc) => {
                    report.status = "sat";
                    let ones = vc.iter().filter(|(_, col)| *col == 1).count();
                    report.count("color_1_vectors", ones);
                    if let Some(path) = &out {
                        write_text(path, &formats::write_vector_coloring(&vc))?;
                    }
                }
            }
            Ok(report)
        }
        BridgesCmd::Minimal { c, n_max } => {
            let mut report = RunReport::new("bridges minimal")
                .param("c", c)
                .param("n_max", n_max);
            let scan = bridge::minimal_bridgeable(c, n_max)?;
            let decided: Vec<Value> = scan
                .decided
                .iter()
                .map(|(n, ok)| json!({ "n": n, "colorable": ok }))
                .collect();
            report.count("decided", decided);
            report.status = match (scan.found, scan.stopped_at) {
                (Some(n), _) => {
                    report.count("least_n", n);
                    "sat"
                }
                (None, Some(n)) => {
                    report.count("refused_at", n);
                    "partial"
                }
                (None, None) => "unsat",
            };
            Ok(report)
        }
    }
}

fn shift_cmd(cmd: ShiftCmd) -> CliResult<RunReport> {
    match cmd {
        ShiftCmd::Chromatic { n, k, c_max, out } => {
            let mut report = RunReport::new("shift chromatic")
                .param("N", n)
                .param("k", k)
                .param("c_max", c_max);
            report.count("vertices", ramseyforge::kset::binomial(n, k));
            match shift::chromatic_shift(n, k, c_max)? {
                Chromatic::Exactly(c, p) => {
                    report.status = "sat";
                    report.count("chromatic_number", c);
                    if let Some(path) = &out {
                        write_text(path, &formats::write_shift_coloring(&p))?;
                    }
                }
                Chromatic::Exceeds(_) => report.status = "unsat",
            }
            Ok(report)
        }
        ShiftCmd::Color3 {
            n,
            k,
            c,
            method,
            out,
        } => {
            let mut report = RunReport::new("shift color3")
                .param("N", n)
                .param("k", k)
                .param("c", c);
            let found = match method {
                PhiSource::Bit => {
                    report = report.param("method", "bit");
                    if k != 2 {
                        return Err(Error::Parameter(
                            "the bit coloring is defined for k = 2".into(),
                        )
                        .into());
                    }
                    let p = shift::bit_color_pairs(n)?;
                    (p.c() <= c).then_some(p)
                }
                PhiSource::Sat => {
                    report = report.param("method", "sat");
                    shift::find_coloring_sat(n, k, c)?
                }
            };
            match found {
                Some(p) => {
                    report.status = "sat";
                    report.count("colors_used", p.colors_used());
                    if let Some(path) = &out {
                        write_text(path, &formats::write_shift_coloring(&p))?;
                    }
                }
                None => report.status = "unsat",
            }
            Ok(report)
        }
        ShiftCmd::SExact { k, n_max } => {
            let mut report = RunReport::new("shift s-exact")
                .param("k", k)
                .param("n_max", n_max);
            let scan = shift::s_exact_upto(k, n_max)?;
            report.count("largest_colorable", scan.largest_colorable);
            report.count("exact", scan.exact);
            if let Some(n) = scan.refused_at {
                report.count("refused_at", n);
            }
            report.status = if scan.exact { "pass" } else { "partial" };
            Ok(report)
        }
    }
}

fn load_phi(source: &str, n: u32, arity: u32) -> CliResult<ProperColoring> {
    match source {
        "bit" => {
            if arity != 2 {
                return Err(Error::Parameter(format!(
                    "the bit coloring colors pairs, but phi must color {arity}-sets"
                ))
                .into());
            }
            Ok(shift::bit_color_pairs(n)?)
        }
        "sat" => shift::find_coloring_sat(n, arity, 3)?.ok_or_else(|| {
            CliError::Lib(Error::Parameter(format!(
                "Sh({n},{arity}) has no proper 3-coloring"
            )))
        }),
        path => Ok(formats::read_shift_coloring(&read_text(Path::new(path))?)?),
    }
}

fn ramsey_verdict(
    report: &mut RunReport,
    rc: &RamseyColoring,
    q: u32,
    workers: usize,
) -> CliResult<()> {
    let special = ramsey::verify_special_subsets(rc, workers)?;
    let clique = ramsey::verify_no_mono_clique(rc, q, workers)?;
    report.count("sets", rc.colors().len());
    report.count("special_supersets", special.scanned);
    report.count("clique_supersets", clique.scanned);
    report
        .counts
        .insert("special_status".into(), json!(scan_status(&special)));
    report
        .counts
        .insert("clique_status".into(), json!(scan_status(&clique)));
    report.status = special.status().and(clique.status()).as_str();
    if special.witness.is_some() || clique.witness.is_some() {
        report.witness = json!({
            "special": special.witness.as_ref().map(|w| json!({
                "superset": set_json(&w.superset),
                "colors": w.colors,
            })),
            "clique": clique.witness.as_ref().map(set_json),
        });
    }
    Ok(())
}

fn ramsey_cmd(cmd: RamseyCmd, workers: usize) -> CliResult<RunReport> {
    match cmd {
        RamseyCmd::Build {
            n,
            k,
            parts,
            phi,
            psi,
            out,
        } => {
            let mut report = RunReport::new("ramsey build")
                .param("N", n)
                .param("k", k)
                .param("parts", parts);
            if parts == 0 || !(k as usize).is_multiple_of(parts) {
                return Err(
                    Error::Parameter(format!("{parts} parts do not divide k = {k}")).into(),
                );
            }
            let l = k / parts as u32;
            let phi = match &phi {
                Some(path) => {
                    report = report.param("phi", path.display().to_string());
                    formats::read_shift_coloring(&read_text(path)?)?
                }
                None if l == 1 && n <= 3 => {
                    report = report.param("phi", "singletons");
                    shift::complete_color_singletons(n)?
                }
                None => {
                    report = report.param("phi", "sat");
                    load_phi("sat", n, l)?
                }
            };
            let c = u8::try_from(phi.c())
                .map_err(|_| Error::Parameter("phi has too many colors".into()))?;
            let psi = match &psi {
                Some(path) => {
                    report = report.param("psi", path.display().to_string());
                    formats::read_vector_coloring(&read_text(path)?, parts, c)?
                }
                None if parts == 4 && c == 3 => {
                    report = report.param("psi", "key");
                    bridge::chi_key_coloring()
                }
                None => {
                    report = report.param("psi", "sat");
                    match bridge::bridge_2colorable(parts, c)? {
                        Colorability::Colorable(vc) => vc,
                        Colorability::NotColorable => {
                            report.status = "fail";
                            report.witness = json!({
                                "reason": format!("no bridge-free 2-coloring of Z_{c}^{parts}")
                            });
                            return Ok(report);
                        }
                    }
                }
            };
            let rc = ramsey::build_coloring(n, k, &phi, &psi, parts)?;
            if let Some(path) = &out {
                write_text(path, &formats::write_ramsey_coloring(&rc))?;
            }
            ramsey_verdict(&mut report, &rc, k + 1, workers)?;
            Ok(report)
        }
        RamseyCmd::Verify { file, parts, q } => {
            let rc = formats::read_ramsey_coloring(&read_text(&file)?, parts)?;
            let q = q.unwrap_or(rc.k() + 1);
            let mut report = RunReport::new("ramsey verify")
                .param("file", file.display().to_string())
                .param("parts", parts)
                .param("q", q)
                .param("N", rc.n())
                .param("k", rc.k());
            ramsey_verdict(&mut report, &rc, q, workers)?;
            Ok(report)
        }
    }
}

fn paths_cmd(cmd: PathsCmd, workers: usize) -> CliResult<RunReport> {
    let PathsCmd::Verify {
        variant,
        n,
        k,
        phi,
        out,
    } = cmd;
    let mut report = RunReport::new("paths verify")
        .param("variant", variant.name())
        .param("N", n)
        .param("k", k)
        .param("phi", &phi);
    let arity = variant.phi_arity(k).ok_or_else(|| {
        CliError::Lib(Error::Parameter(format!(
            "{variant} is not defined for k = {k}"
        )))
    })?;
    let phi = load_phi(&phi, n, arity)?;
    let pc = paths::PathColoring::build(variant, n, k, &phi)?;
    if let Some(path) = &out {
        write_text(path, &formats::write_path_coloring(&pc))?;
    }
    let r = paths::verify_coloring(&pc, workers);
    report.count("red_supersets", r.red.scanned);
    report.count("blue_supersets", r.blue.scanned);
    report
        .counts
        .insert("red_status".into(), json!(scan_status(&r.red)));
    report
        .counts
        .insert("blue_status".into(), json!(scan_status(&r.blue)));
    report.status = r.status().as_str();
    if !r.holds() {
        report.witness = json!({
            "red": r.red.witness.as_ref().map(set_json),
            "blue": r.blue.witness.as_ref().map(set_json),
        });
    }
    Ok(report)
}

fn tower_counts(report: &mut RunReport, v: &TowerValue) {
    report.count("value", v.to_string());
    report.count("exact", v.is_exact());
    if let Some(bits) = v.bit_length() {
        report.count("bits", bits);
    }
}

fn bounds(args: BoundsArgs) -> CliResult<RunReport> {
    if let (Some(i), Some(x)) = (args.tw, args.x) {
        let mut report = RunReport::new("bounds").param("tw", i).param("x", x);
        tower_counts(&mut report, &tower::tw(i, x)?);
        return Ok(report);
    }
    let k = args
        .k
        .ok_or_else(|| CliError::Lib(Error::Parameter("pass --k (or --tw with --x)".into())))?;
    let mut report = RunReport::new("bounds")
        .param("k", k)
        .param("kind", &args.kind);
    let value = match args.kind.as_str() {
        "s" => tower::s_lower(k)?,
        "s4" => tower::s4_lower(k)?,
        other => tower::bound_table(k, other.parse::<BoundKind>()?)?,
    };
    tower_counts(&mut report, &value);
    Ok(report)
}

fn oracle_report(command: &str, r: OracleReport) -> RunReport {
    let mut report = RunReport::new(command);
    report.parameters = r.params;
    report.status = match r.status {
        OracleStatus::Holds => "pass",
        OracleStatus::Fails => "fail",
        OracleStatus::Partial => "partial",
    };
    report.witness = r.witness.unwrap_or(Value::Null);
    report.count("search_space", r.search_space);
    report.count("claim", r.claim);
    report
}

fn oracle_cmd(cmd: OracleCmd, workers: usize) -> CliResult<RunReport> {
    match cmd {
        OracleCmd::Ramsey2 { l, m, n, out } => {
            let r = oracle::ramsey2_holds(l, m, n, workers)?;
            if let (Some(path), OracleStatus::Fails) = (&out, r.status) {
                let w = oracle::ramsey2_witness(l, m, n, workers)?.ok_or_else(|| {
                    CliError::Lib(Error::Internal("witness vanished on replay".into()))
                })?;
                write_text(path, &formats::write_pair_coloring(&w))?;
            }
            Ok(oracle_report("oracle ramsey2", r))
        }
        OracleCmd::Path2 { k, n } => Ok(oracle_report(
            "oracle path2",
            oracle::path_ramsey2_upper(k, n)?,
        )),
        OracleCmd::P222 { l, n_max } => Ok(oracle_report(
            "oracle p222",
            oracle::p222_identity(l, n_max)?,
        )),
        OracleCmd::Audit { k, m, n, n_max } => Ok(oracle_report(
            "oracle audit",
            oracle::inequality_audit(k, m, n, n_max, workers)?,
        )),
    }
}

fn sat_cmd(cmd: SatCmd) -> CliResult<RunReport> {
    let SatCmd::Solve {
        input,
        engine,
        check_exhaustive,
    } = cmd;
    let cnf: Cnf = sat::read_dimacs(&read_text(&input)?)?;
    let (engine_name, (result, stats)) = match engine {
        Engine::Cdcl => ("cdcl", sat::solve_with_stats(&cnf)?),
        Engine::Dpll => ("dpll", sat::solve_dpll_with_stats(&cnf)?),
    };
    let mut report = RunReport::new("sat solve")
        .param("input", input.display().to_string())
        .param("engine", engine_name);
    report.count("variables", cnf.variable_count());
    report.count("clauses", cnf.clause_count());
    report.count("decisions", stats.decisions);
    report.count("conflicts", stats.conflicts);
    report.count("propagations", stats.propagations);
    if check_exhaustive {
        if cnf.variable_count() <= sat::MAX_EXHAUSTIVE_VARS {
            let brute = sat::exhaustive_check(&cnf)?;
            if brute.is_sat() != result.is_sat() {
                return Err(Error::Internal("solver and brute force disagree".into()).into());
            }
            report.count("exhaustive_check", "agrees");
        } else {
            report.count("exhaustive_check", "skipped");
        }
    }
    report.status = result.status_str();
    if let SolveResult::Sat(model) = &result {
        let lits: Vec<i64> = model
            .iter()
            .enumerate()
            .map(|(i, &t)| if t { i as i64 + 1 } else { -(i as i64 + 1) })
            .collect();
        report.witness = json!({ "model": lits });
    }
    Ok(report)
}

fn run(cli: Cli) -> CliResult<RunReport> {
    let workers = cli.workers.unwrap_or_else(par::default_workers).max(1);
    match cli.command {
        Command::Bridges(cmd) => bridges(cmd, workers),
        Command::Shift(cmd) => shift_cmd(cmd),
        Command::Ramsey(cmd) => ramsey_cmd(cmd, workers),
        Command::Paths(cmd) => paths_cmd(cmd, workers),
        Command::Bounds(args) => bounds(args),
        Command::Oracle(cmd) => oracle_cmd(cmd, workers),
        Command::Sat(cmd) => sat_cmd(cmd),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    match run(cli) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            let text = serde_json::to_string_pretty(&report).expect("report serializes");
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Internal(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
