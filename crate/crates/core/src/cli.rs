//! The `zkcoh` command line.
//!
//! [`run`] parses arguments, executes one command on a dedicated worker
//! pool and returns the exit code with the rendered output, so the whole
//! front end is testable in-process.
//!
//! Exit codes: 0 success, 1 other failure, 2 parse or usage error,
//! 3 size-bound refusal, 4 non-flag input where a flag complex is required.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::census::{census, CensusRow, CensusScope};
use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::Error;
use crate::golod::{
    is_chordal, is_golod, is_minimally_non_golod, maximal_face_order, wedge_profile, GolodMethod, GolodReport,
    MinimallyNonGolodReport, WedgeProfile,
};
use crate::hochster::{bigraded_betti, koszul_betti, BettiTable};
use crate::homology::{boundary_matrices, CochainBasis, CoefficientRing};
use crate::io::{read_complex, ComplexBlock};
use crate::loops::{
    enumerate_commutator_generators, generators_by_degree, golod_series_identity, loop_zk_series, Commutator,
    PoincareSeries, SeriesIdentity,
};
use crate::{default_truncation, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SIZE_BOUND: i32 = 3;
pub const EXIT_NOT_FLAG: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Flag,
    All,
}

fn parse_ring(s: &str) -> Result<CoefficientRing, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "zkcoh", version, about = "Cohomology and Golodness of moment-angle complexes")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Directory for cached results.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Largest m for sweeps over all full subcomplexes.
    #[arg(long, global = true)]
    pub exhaustive_bound: Option<u32>,
    /// Largest m for the Koszul complex cross-check.
    #[arg(long, global = true)]
    pub koszul_bound: Option<u32>,
    /// Largest facet count for the maximal-face order search.
    #[arg(long, global = true)]
    pub facet_cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices, facets, f- and h-vectors, flagness, chordality, missing faces.
    Info { file: PathBuf },
    /// Bigraded and total cohomology of Z_K.
    Betti {
        file: PathBuf,
        /// Q, Z or Fp:<p>; repeatable (default Q).
        #[arg(long = "ring", value_parser = parse_ring)]
        rings: Vec<CoefficientRing>,
        /// Recompute over each field from the Koszul complex and compare.
        #[arg(long)]
        verify_koszul: bool,
        /// Include the coboundary matrices of K in the output.
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Golodness, minimal non-Golodness, wedge decomposition and facet order.
    Classify {
        file: PathBuf,
        /// Fields to test; repeatable (default Q, Fp:2, Fp:3).
        #[arg(long = "ring", value_parser = parse_ring)]
        rings: Vec<CoefficientRing>,
    },
    /// Commutator generators and Poincaré series of the loop homology.
    Loops {
        file: PathBuf,
        /// Expansion degree (default 2m + 2).
        #[arg(long)]
        truncation: Option<usize>,
        /// Field for the Golod series identity (default Q).
        #[arg(long = "ring", value_parser = parse_ring)]
        rings: Vec<CoefficientRing>,
    },
    /// Classify every complex up to isomorphism on at most max-m vertices.
    Census {
        #[arg(long, default_value_t = 4)]
        max_m: u32,
        #[arg(long, value_enum, default_value_t = Scope::Flag)]
        scope: Scope,
        /// Fields to test; repeatable (default Q, Fp:2, Fp:3).
        #[arg(long = "ring", value_parser = parse_ring)]
        rings: Vec<CoefficientRing>,
    },
}

/// Validated settings for one invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub input: Option<PathBuf>,
    pub command: &'static str,
    pub rings: Vec<CoefficientRing>,
    pub truncation: Option<usize>,
    pub limits: Limits,
    pub workers: Option<usize>,
    pub format: Format,
    pub cache_dir: Option<PathBuf>,
    pub verify_koszul: bool,
    pub dump_matrices: bool,
    pub census: Option<(u32, Scope)>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let mut limits = Limits::default();
        if let Some(b) = cli.exhaustive_bound {
            limits.exhaustive_m = b;
        }
        if let Some(b) = cli.koszul_bound {
            limits.koszul_m = b;
        }
        if let Some(c) = cli.facet_cap {
            limits.facet_cap = c;
        }
        if limits.exhaustive_m == 0 || limits.koszul_m == 0 || limits.facet_cap == 0 {
            return Err("size bounds must be positive".into());
        }
        if cli.workers == Some(0) {
            return Err("--workers must be positive".into());
        }
        let (command, input, rings, truncation, verify_koszul, dump_matrices, census) = match cli.command {
            Command::Info { file } => ("info", Some(file), vec![], None, false, false, None),
            Command::Betti { file, rings, verify_koszul, dump_matrices } => {
                let rings = if rings.is_empty() { vec![CoefficientRing::Rationals] } else { rings };
                ("betti", Some(file), rings, None, verify_koszul, dump_matrices, None)
            }
            Command::Classify { file, rings } => {
                ("classify", Some(file), fields_or_default(rings)?, None, false, false, None)
            }
            Command::Loops { file, truncation, rings } => {
                let rings = if rings.is_empty() { vec![CoefficientRing::Rationals] } else { rings };
                if rings.iter().any(|r| !r.is_field()) {
                    return Err("loops needs field coefficients".into());
                }
                ("loops", Some(file), rings, truncation, false, false, None)
            }
            Command::Census { max_m, scope, rings } => {
                if max_m == 0 {
                    return Err("--max-m must be positive".into());
                }
                ("census", None, fields_or_default(rings)?, None, false, false, Some((max_m, scope)))
            }
        };
        Ok(RunConfig {
            input,
            command,
            rings,
            truncation,
            limits,
            workers: cli.workers,
            format: cli.format,
            cache_dir: cli.cache_dir,
            verify_koszul,
            dump_matrices,
            census,
        })
    }
}

fn fields_or_default(rings: Vec<CoefficientRing>) -> Result<Vec<CoefficientRing>, String> {
    if rings.iter().any(|r| !r.is_field()) {
        return Err("Golodness is tested over fields; Z is not accepted here".into());
    }
    Ok(if rings.is_empty() { CoefficientRing::default_fields() } else { rings })
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::VertexOutOfRange { .. }
        | Error::NoVertices
        | Error::TooManyVertices { .. }
        | Error::NotPrime(_) => EXIT_PARSE,
        Error::SizeBound { .. } | Error::SearchBound { .. } => EXIT_SIZE_BOUND,
        Error::NotFlag { .. } => EXIT_NOT_FLAG,
        _ => EXIT_OTHER,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match RunConfig::from_cli(cli) {
        Ok(cfg) => run_config(&cfg),
        Err(msg) => Outcome { code: EXIT_PARSE, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

pub fn run_config(cfg: &RunConfig) -> Outcome {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cfg.workers {
        builder = builder.num_threads(w);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Outcome { code: EXIT_OTHER, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    match pool.install(|| execute(cfg)) {
        Ok(stdout) => Outcome { code: EXIT_OK, stdout, stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Everything that determines the output of a command on a complex.
#[derive(Serialize)]
struct CacheKey<'a> {
    complex: ComplexBlock,
    command: &'a str,
    rings: &'a [CoefficientRing],
    truncation: Option<usize>,
    limits: Limits,
    format: Format,
    verify_koszul: bool,
    dump_matrices: bool,
    version: &'static str,
}

fn cache_path(dir: &Path, cfg: &RunConfig, k: &SimplicialComplex) -> PathBuf {
    let key = CacheKey {
        complex: ComplexBlock::from(k),
        command: cfg.command,
        rings: &cfg.rings,
        truncation: cfg.truncation,
        limits: cfg.limits,
        format: cfg.format,
        verify_koszul: cfg.verify_koszul,
        dump_matrices: cfg.dump_matrices,
        version: env!("CARGO_PKG_VERSION"),
    };
    let digest = Sha256::digest(serde_json::to_vec(&key).expect("plain data serializes"));
    dir.join(format!("{}.out", hex::encode(digest)))
}

fn execute(cfg: &RunConfig) -> crate::Result<String> {
    if let Some((max_m, scope)) = cfg.census {
        return cmd_census(cfg, max_m, scope);
    }
    let path = cfg.input.as_ref().expect("file commands carry an input path");
    let k = read_complex(path)?;
    let cached = cfg.cache_dir.as_ref().map(|d| cache_path(d, cfg, &k));
    if let Some(hit) = cached.as_ref().and_then(|p| fs::read_to_string(p).ok()) {
        log::info!("cache hit for {}", path.display());
        return Ok(hit);
    }
    let out = match cfg.command {
        "info" => cmd_info(cfg, &k),
        "betti" => cmd_betti(cfg, &k),
        "classify" => cmd_classify(cfg, &k),
        "loops" => cmd_loops(cfg, &k),
        other => unreachable!("unknown command {other}"),
    }?;
    if let Some(p) = cached {
        let stored = p.parent().map_or(Ok(()), fs::create_dir_all).and_then(|_| fs::write(&p, &out));
        if let Err(e) = stored {
            log::warn!("cannot write cache entry {}: {e}", p.display());
        }
    }
    Ok(out)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn facets_text(faces: &[VertexSet]) -> String {
    join(faces, " ")
}

// ---------------------------------------------------------------- info

#[derive(Serialize)]
struct InfoReport {
    complex: ComplexBlock,
    m: u32,
    dim: i32,
    f: Vec<u64>,
    h: Vec<i64>,
    flag: bool,
    chordal: bool,
    missing_faces: Vec<VertexSet>,
    dehn_sommerville: bool,
    components: Vec<VertexSet>,
}

fn cmd_info(cfg: &RunConfig, k: &SimplicialComplex) -> crate::Result<String> {
    let fh = k.fh_vector();
    let r = InfoReport {
        complex: ComplexBlock::from(k),
        m: k.m(),
        dim: k.dim(),
        f: fh.f.clone(),
        h: fh.h.clone(),
        flag: k.is_flag(),
        chordal: is_chordal(&k.one_skeleton()),
        missing_faces: k.missing_faces(),
        dehn_sommerville: k.dehn_sommerville_check(),
        components: k.connected_components(),
    };
    if cfg.format == Format::Json {
        return Ok(to_json(&r));
    }
    let mut s = String::new();
    writeln!(s, "m: {}  dim: {}", r.m, r.dim).unwrap();
    writeln!(s, "maximal faces: {}", facets_text(k.facets())).unwrap();
    writeln!(s, "flag: {}, chordal: {}, f=({}), h=({})", yes_no(r.flag), yes_no(r.chordal), join(&r.f, ","), join(&r.h, ","))
        .unwrap();
    writeln!(s, "missing faces: {}", if r.missing_faces.is_empty() { "none".into() } else { facets_text(&r.missing_faces) })
        .unwrap();
    writeln!(s, "Dehn-Sommerville: {}", if r.dehn_sommerville { "holds" } else { "fails" }).unwrap();
    writeln!(s, "components: {}", facets_text(&r.components)).unwrap();
    Ok(s)
}

// ---------------------------------------------------------------- betti

#[derive(Serialize)]
struct KoszulCheck {
    ring: CoefficientRing,
    agree: Option<bool>,
}

#[derive(Serialize)]
struct BettiReport {
    complex: ComplexBlock,
    betti: Vec<BettiTable>,
    #[serde(skip_serializing_if = "Option::is_none")]
    koszul: Option<Vec<KoszulCheck>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrices: Option<BTreeMap<String, Vec<CochainBasis>>>,
}

fn render_betti(s: &mut String, t: &BettiTable) {
    writeln!(s, "ring {}", t.ring).unwrap();
    writeln!(s, "  bigraded (-i,2j):").unwrap();
    for (&(i, two_j), g) in t.entries() {
        let bideg = if i == 0 { format!("(0,{two_j})") } else { format!("(-{i},{two_j})") };
        writeln!(s, "    {bideg:<10} {g}").unwrap();
    }
    writeln!(s, "  total:").unwrap();
    for (p, g) in t.total() {
        writeln!(s, "    H^{p} = {g}").unwrap();
    }
    writeln!(s, "  b = ({})", join(t.total_ranks(), ",")).unwrap();
}

fn cmd_betti(cfg: &RunConfig, k: &SimplicialComplex) -> crate::Result<String> {
    let tables = cfg.rings.iter().map(|&r| bigraded_betti(k, r, &cfg.limits)).collect::<crate::Result<Vec<_>>>()?;
    let koszul = if cfg.verify_koszul {
        let mut checks = Vec::new();
        for t in &tables {
            let agree = if t.ring.is_field() { Some(koszul_betti(k, t.ring, &cfg.limits)? == *t) } else { None };
            checks.push(KoszulCheck { ring: t.ring, agree });
        }
        Some(checks)
    } else {
        None
    };
    let matrices = cfg
        .dump_matrices
        .then(|| cfg.rings.iter().map(|&r| (r.to_string(), boundary_matrices(k, r))).collect());
    let r = BettiReport { complex: ComplexBlock::from(k), betti: tables, koszul, matrices };
    if cfg.format == Format::Json {
        return Ok(to_json(&r));
    }
    let mut s = String::new();
    for t in &r.betti {
        render_betti(&mut s, t);
    }
    if let Some(checks) = &r.koszul {
        for c in checks {
            let verdict = match c.agree {
                Some(true) => "agree",
                Some(false) => "DISAGREE",
                None => "skipped (not a field)",
            };
            writeln!(s, "koszul: {verdict} ({})", c.ring).unwrap();
        }
    }
    if let Some(m) = &r.matrices {
        for (ring, mats) in m {
            for cb in mats {
                writeln!(s, "coboundary over {ring}, dimension {} -> {}: {:?}", cb.dim, cb.dim + 1, cb.coboundary).unwrap();
            }
        }
    }
    Ok(s)
}

// ---------------------------------------------------------------- classify

#[derive(Serialize)]
struct ClassifyReport {
    complex: ComplexBlock,
    golod: GolodReport,
    minimally_non_golod: MinimallyNonGolodReport,
    wedge: Option<WedgeProfile>,
    maximal_face_order: Option<Vec<VertexSet>>,
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

pub fn render_wedge(w: &WedgeProfile) -> String {
    if w.sphere_counts.is_empty() {
        return "point (contractible)".into();
    }
    join(w.sphere_counts.iter().map(|(d, c)| format!("S{}×{c}", superscript(*d))), ", ")
}

fn golod_line(g: &GolodReport) -> String {
    let all = g.golod.iter().all(|v| v.golod);
    let none = g.golod.iter().all(|v| !v.golod);
    let verdict = if all {
        "yes".to_string()
    } else if none {
        "no".to_string()
    } else {
        format!("mixed ({})", join(g.golod.iter().map(|v| format!("{}: {}", v.ring, yes_no(v.golod))), ", "))
    };
    match g.golod.first().map(|v| v.method) {
        Some(GolodMethod::ProductCriterion) => format!("Golod: {verdict} (product criterion)"),
        _ => format!("Golod: {verdict}"),
    }
}

fn cmd_classify(cfg: &RunConfig, k: &SimplicialComplex) -> crate::Result<String> {
    let golod = is_golod(k, &cfg.rings, &cfg.limits)?;
    let mng = is_minimally_non_golod(k, &cfg.rings, &cfg.limits)?;
    let wedge = wedge_profile(k, &cfg.limits)?;
    let order = maximal_face_order(k, &cfg.limits)?;
    let r = ClassifyReport {
        complex: ComplexBlock::from(k),
        golod,
        minimally_non_golod: mng,
        wedge,
        maximal_face_order: order,
    };
    if cfg.format == Format::Json {
        return Ok(to_json(&r));
    }
    let mut s = String::new();
    let chordal = r.golod.chordal.map_or("n/a".to_string(), |c| yes_no(c).to_string());
    writeln!(s, "flag: {}, chordal: {chordal}", yes_no(r.golod.is_flag)).unwrap();
    writeln!(s, "{}; minimally non-Golod: {}", golod_line(&r.golod), yes_no(r.minimally_non_golod.minimally_non_golod))
        .unwrap();
    for v in &r.golod.products_trivial {
        writeln!(s, "  products over {}: {}", v.ring, if v.trivial { "trivial" } else { "nontrivial" }).unwrap();
    }
    if let Some(w) = &r.golod.witness {
        writeln!(
            s,
            "  nonzero product over {}: H̃^{}(K_{}) · H̃^{}(K_{})",
            w.ring, w.left.degree, w.left.support, w.right.degree, w.right.support
        )
        .unwrap();
    }
    let wedge = match (&r.wedge, r.golod.is_flag) {
        (Some(w), _) => render_wedge(w),
        (None, false) => "not concluded (non-flag)".into(),
        (None, true) => "none (1-skeleton not chordal)".into(),
    };
    writeln!(s, "wedge: {wedge}").unwrap();
    match &r.maximal_face_order {
        Some(o) => writeln!(s, "maximal face order: {}", facets_text(o)).unwrap(),
        None => writeln!(s, "maximal face order: none").unwrap(),
    }
    if let Some(c) = &r.golod.caveat {
        writeln!(s, "note: {c}").unwrap();
    }
    Ok(s)
}

// ---------------------------------------------------------------- loops

#[derive(Serialize)]
struct LoopsReport {
    complex: ComplexBlock,
    generators: Vec<Commutator>,
    generator_counts: BTreeMap<usize, usize>,
    series: PoincareSeries,
    identity: SeriesIdentity,
}

fn cmd_loops(cfg: &RunConfig, k: &SimplicialComplex) -> crate::Result<String> {
    let n = cfg.truncation.unwrap_or_else(|| default_truncation(k.m()));
    let generators = enumerate_commutator_generators(k, &cfg.limits)?;
    let generator_counts = generators_by_degree(&generators).into_iter().map(|(d, g)| (d, g.len())).collect();
    let series = loop_zk_series(k, n)?;
    let identity = golod_series_identity(k, cfg.rings[0], n, &cfg.limits)?;
    let r = LoopsReport { complex: ComplexBlock::from(k), generators, generator_counts, series, identity };
    if cfg.format == Format::Json {
        return Ok(to_json(&r));
    }
    let mut s = String::new();
    writeln!(s, "generators: {}", r.generators.len()).unwrap();
    for (d, gens) in generators_by_degree(&r.generators) {
        writeln!(s, "  degree {d}: {}", join(&gens, " ")).unwrap();
    }
    writeln!(s, "series: {}", r.series).unwrap();
    writeln!(s, "expansion: {}", join(&r.series.expansion, ", ")).unwrap();
    writeln!(s, "golod series: {}", r.identity.golod_series).unwrap();
    match r.identity.first_residual {
        None => writeln!(s, "identity over {}: holds through t^{n}", r.identity.ring).unwrap(),
        Some(d) => writeln!(s, "identity over {}: fails, first residual at t^{d}", r.identity.ring).unwrap(),
    }
    Ok(s)
}

// ---------------------------------------------------------------- census

fn cmd_census(cfg: &RunConfig, max_m: u32, scope: Scope) -> crate::Result<String> {
    let scope = match scope {
        Scope::Flag => CensusScope::Flag,
        Scope::All => CensusScope::All,
    };
    let rows = census(scope, max_m, &cfg.rings, &cfg.limits)?;
    if cfg.format == Format::Json {
        let mut s = String::new();
        for row in &rows {
            s.push_str(&serde_json::to_string(row).expect("rows serialize"));
            s.push('\n');
        }
        return Ok(s);
    }
    Ok(render_census(&rows))
}

fn render_census(rows: &[CensusRow]) -> String {
    let mut s = String::new();
    writeln!(s, "{:>2}  {:<4} {:<6} {:<5} {:<7} facets", "m", "flag", "golod", "mng", "torsion").unwrap();
    for r in rows {
        let golod = r.golod.golod.iter().all(|g| g.golod);
        let facets = join(r.complex.maximal_faces.iter().map(|f| join(f, "")), " ");
        let mut line = format!(
            "{:>2}  {:<4} {:<6} {:<5} {:<7} {facets}",
            r.complex.m,
            yes_no(r.is_flag),
            yes_no(golod),
            yes_no(r.minimally_non_golod),
            yes_no(r.integral_torsion)
        );
        if !r.flags.is_empty() {
            write!(line, "  [{}]", r.flags.join(", ")).unwrap();
        }
        writeln!(s, "{line}").unwrap();
    }
    let flagged = rows.iter().filter(|r| !r.flags.is_empty()).count();
    let mng = rows.iter().filter(|r| r.minimally_non_golod).count();
    writeln!(s, "{} complexes, {mng} minimally non-Golod, {flagged} flagged", rows.len()).unwrap();
    s
}
