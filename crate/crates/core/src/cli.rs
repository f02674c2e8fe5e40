//! The `ffinterleave` command line.
//!
//! Exit codes: 0 ok, 2 usage or invalid field, 3 a family or existence
//! condition fails, 4 malformed input, 5 a verification sweep disagreed.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cycletheory::sweep::{run_sweep, summarize, SweepConfig, SweepError};
use crate::cycletheory::{CycleError, Theorem};
use crate::families::dickson::{dickson_interleaver, dickson_inverse_degree};
use crate::families::mobius::{mobius_interleaver, mobius_inverse_params};
use crate::families::monomial::{monomial_interleaver, monomial_inverse_exponent};
use crate::families::redei::{redei_interleaver, redei_inverse_degree};
use crate::families::{DicksonA, DicksonParams, FamilyError, MobiusParams, RedeiParams};
use crate::gf::{build_field_bounded, FieldElement, FieldSpec, GfError, DEFAULT_Q_BOUND};
use crate::perm::{Census, CensusDisplay, PermError, Permutation};
use crate::skolem::{
    self, existence_reason, modify, prescribed_cycle_interleaver, skolem_exists, skolem_interleaver,
    SkolemError, SkolemKind,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONDITION: i32 = 3;
pub const EXIT_INPUT: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;

/// Environment variable overriding the largest field size accepted.
pub const QMAX_ENV: &str = "INTERLEAVER_QMAX";

#[derive(Parser, Debug)]
#[command(name = "ffinterleave", version, about = "Interleavers from permutation functions over finite fields and from Skolem sequences")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build F_q and report its primitive polynomial and element.
    Field(FieldArgs),
    /// Build the interleaver of a permutation function.
    Interleave(InterleaveArgs),
    /// Cycle census and fixed points of an interleaver.
    Cycles(CyclesArgs),
    /// Check a cycle theorem against brute force over a parameter grid (JSON lines).
    Verify(VerifyArgs),
    /// Generate a Skolem-type sequence, its modified form and interleaver.
    Skolem(SkolemArgs),
    /// Print one of the built-in worked examples.
    Reproduce(ReproduceArgs),
}

#[derive(Args, Debug, Clone)]
pub struct FieldOpts {
    /// Characteristic.
    #[arg(short = 'p', long)]
    pub p: u64,
    /// Extension degree.
    #[arg(short = 'm', long, default_value_t = 1)]
    pub m: u32,
    /// Primitive polynomial coefficients c0,c1,...,cm (monic).
    #[arg(long, value_delimiter = ',')]
    pub poly: Option<Vec<u32>>,
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    #[command(flatten)]
    pub field: FieldOpts,
    /// Also print the exp and log tables.
    #[arg(long)]
    pub tables: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Monomial,
    Dickson,
    Mobius,
    Redei,
}

/// A family member over a field.
#[derive(Args, Debug, Clone)]
pub struct FamilySpec {
    #[arg(value_enum)]
    pub family: Family,
    #[command(flatten)]
    pub field: FieldOpts,
    /// Degree or exponent.
    #[arg(short = 'n', long)]
    pub n: Option<u64>,
    /// Dickson: 0, 1 or -1. Rédei: a field element (see --abcd).
    #[arg(short = 'a', long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Möbius coefficients a,b,c,d. Elements are integers (residues mod p),
    /// `alpha^i`, or `vec:N` for the vector encoding N.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub abcd: Option<Vec<String>>,
    /// Use the family inverse (the deinterleaver).
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Args, Debug)]
pub struct InterleaveArgs {
    #[command(flatten)]
    pub spec: FamilySpec,
    /// Print only the two-row matrix, whatever the format.
    #[arg(long)]
    pub two_row: bool,
}

#[derive(Args, Debug)]
pub struct CyclesArgs {
    /// JSON permutation file as written by `interleave --format json` (`-` for stdin).
    #[arg(long, short = 'i', conflicts_with = "family")]
    pub input: Option<String>,
    #[arg(value_enum, required_unless_present = "input")]
    pub family: Option<Family>,
    #[arg(short = 'p', long, required_unless_present = "input")]
    pub p: Option<u64>,
    #[arg(short = 'm', long, default_value_t = 1)]
    pub m: u32,
    #[arg(long, value_delimiter = ',')]
    pub poly: Option<Vec<u32>>,
    #[arg(short = 'n', long)]
    pub n: Option<u64>,
    #[arg(short = 'a', long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub abcd: Option<Vec<String>>,
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Theorem tag, e.g. redei-Nj.
    pub theorem: String,
    #[arg(long)]
    pub q_min: Option<u64>,
    #[arg(long)]
    pub q_max: Option<u64>,
    #[arg(long)]
    pub n_max: Option<u64>,
    #[arg(long)]
    pub j_max: Option<u64>,
    /// Bound on j·n for generalized sequences.
    #[arg(long)]
    pub jn_max: Option<u64>,
    /// Node budget per Skolem search.
    #[arg(long)]
    pub search_nodes: Option<u64>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KindArg {
    Plain,
    Hooked,
    #[value(name = "k-extended")]
    KExtended,
    Generalized,
    /// A permutation with the census given by --census.
    Prescribed,
}

#[derive(Args, Debug)]
pub struct SkolemArgs {
    #[arg(value_enum)]
    pub kind: KindArg,
    #[arg(short = 'n', long, required_unless_present = "census")]
    pub n: Option<usize>,
    /// Hole position (k-extended).
    #[arg(short = 'k', long)]
    pub k: Option<usize>,
    /// Multiplicity (generalized).
    #[arg(short = 'j', long)]
    pub j: Option<usize>,
    /// Census for `prescribed`, as length:count pairs, e.g. 1:2,3:3.
    #[arg(long, value_delimiter = ',')]
    pub census: Option<Vec<String>>,
    /// Also print the modified sequence.
    #[arg(long)]
    pub modify: bool,
    /// Also print the interleaver (1-based two-row table).
    #[arg(long)]
    pub interleave: bool,
}

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// monomial-13, dickson-11 or skolem-hooked-6.
    pub id: String,
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Failure {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<GfError> for Failure {
    fn from(e: GfError) -> Failure {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Failure {
        match e {
            FamilyError::NotAPermutation(m) => Failure::new(EXIT_CONDITION, format!("condition violated: {m}")),
            FamilyError::Field(g) => g.into(),
            other => Failure::new(EXIT_USAGE, other.to_string()),
        }
    }
}

impl From<SkolemError> for Failure {
    fn from(e: SkolemError) -> Failure {
        match e {
            SkolemError::ExistenceViolated(_)
            | SkolemError::SearchExhausted(_)
            | SkolemError::Undecided(_)
            | SkolemError::BlockUnrealizable { .. } => Failure::new(EXIT_CONDITION, e.to_string()),
            SkolemError::Parse(_) | SkolemError::Invalid(_) | SkolemError::Perm(_) => {
                Failure::new(EXIT_INPUT, e.to_string())
            }
            _ => Failure::new(EXIT_USAGE, e.to_string()),
        }
    }
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Failure {
        match e {
            SweepError::InvalidRange(_) | SweepError::Field(_) => Failure::new(EXIT_USAGE, e.to_string()),
            SweepError::Family(f) => f.into(),
            SweepError::Cycle(CycleError::NotAPermutation(m)) => Failure::new(EXIT_CONDITION, m),
            other => Failure::new(EXIT_VERIFY, other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::new(EXIT_INPUT, e.to_string())
    }
}

type CliResult = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Field(a) => cmd_field(a, cli.format, out),
        Command::Interleave(a) => cmd_interleave(a, cli.format, out),
        Command::Cycles(a) => cmd_cycles(a, cli.format, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Skolem(a) => cmd_skolem(a, cli.format, out),
        Command::Reproduce(a) => cmd_reproduce(a, cli.format, out),
    }
}

/// The field-size bound: `INTERLEAVER_QMAX` if set, else the library default.
pub fn q_bound() -> Result<u64, Failure> {
    match std::env::var(QMAX_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::new(EXIT_USAGE, format!("{QMAX_ENV}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_Q_BOUND),
    }
}

fn build(opts: &FieldOpts) -> Result<FieldSpec, Failure> {
    Ok(build_field_bounded(opts.p, opts.m, opts.poly.as_deref(), q_bound()?)?)
}

// ---------------------------------------------------------------- field

fn cmd_field(a: &FieldArgs, format: Format, out: &mut dyn Write) -> CliResult {
    let f = build(&a.field)?;
    let alpha = f.display(f.alpha()).to_string();
    match format {
        Format::Json => {
            let mut v = json!({
                "p": f.p(), "m": f.m(), "q": f.q(),
                "primitive_poly": f.primitive_poly(),
                "poly": f.poly_string(),
                "alpha": alpha,
            });
            if a.tables {
                v["exp"] = json!(f.exp_table());
                v["log"] = json!(f.log_table());
            }
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            writeln!(out, "p,m,q,poly,alpha")?;
            writeln!(out, "{},{},{},{},{}", f.p(), f.m(), f.q(), f.poly_string(), alpha)?;
            if a.tables {
                writeln!(out, "i,alpha^i")?;
                for i in 1..f.q() {
                    writeln!(out, "{i},{}", f.display(f.alpha_pow(i as i64)))?;
                }
            }
        }
        Format::Table => {
            writeln!(out, "# field {}", f.header())?;
            writeln!(out, "p = {}", f.p())?;
            writeln!(out, "m = {}", f.m())?;
            writeln!(out, "q = {}", f.q())?;
            writeln!(out, "primitive polynomial = {}", f.poly_string())?;
            writeln!(out, "alpha = {alpha}")?;
            if a.tables {
                writeln!(out, "i alpha^i")?;
                for i in 1..f.q() {
                    writeln!(out, "{i} {}", f.display(f.alpha_pow(i as i64)))?;
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- families

/// Parses a field element: an integer residue, `alpha^i`, or `vec:N`.
pub fn parse_element(field: &FieldSpec, s: &str) -> Result<FieldElement, Failure> {
    let bad = || Failure::new(EXIT_USAGE, format!("cannot read field element {s:?}"));
    let s = s.trim();
    if let Some(e) = s.strip_prefix("alpha^") {
        let i: i64 = e.parse().map_err(|_| bad())?;
        return Ok(field.alpha_pow(i));
    }
    if let Some(v) = s.strip_prefix("vec:") {
        let v: u64 = v.parse().map_err(|_| bad())?;
        return Ok(field.from_vector(v)?);
    }
    let k: i64 = s.parse().map_err(|_| bad())?;
    Ok(field.from_int(k))
}

fn need<T: Copy>(v: Option<T>, what: &str, family: Family) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::new(EXIT_USAGE, format!("{family:?} needs {what}").to_lowercase()))
}

/// The interleaver described by a family spec, with a one-line description.
fn family_permutation(spec: &FamilySpec) -> Result<(Permutation, String, FieldSpec), Failure> {
    let f = build(&spec.field)?;
    let fam = spec.family;
    let (perm, desc) = match fam {
        Family::Monomial => {
            let n = need(spec.n, "-n", fam)?;
            let n = if spec.inverse { monomial_inverse_exponent(&f, n)? } else { n };
            (monomial_interleaver(&f, n)?, format!("monomial n={n}"))
        }
        Family::Dickson => {
            let n = need(spec.n, "-n", fam)?;
            let a_text = spec.a.as_deref().unwrap_or("1");
            let a: i64 = a_text
                .parse()
                .map_err(|_| Failure::new(EXIT_USAGE, format!("Dickson a must be 0, 1 or -1, got {a_text:?}")))?;
            let a = DicksonA::from_int(a)?;
            let mut params = DicksonParams::new(n, a);
            if spec.inverse {
                params = DicksonParams::new(dickson_inverse_degree(&f, &params)?, a);
            }
            (dickson_interleaver(&f, &params)?, format!("dickson n={} a={}", params.n, a))
        }
        Family::Mobius => {
            let coeffs = spec
                .abcd
                .as_ref()
                .ok_or_else(|| Failure::new(EXIT_USAGE, "mobius needs --abcd a,b,c,d"))?;
            if coeffs.len() != 4 {
                return Err(Failure::new(EXIT_USAGE, "--abcd takes exactly four elements"));
            }
            let e: Vec<FieldElement> = coeffs.iter().map(|s| parse_element(&f, s)).collect::<Result<_, _>>()?;
            let mut params = MobiusParams::new(&f, e[0], e[1], e[2], e[3]).map_err(|e| match e {
                FamilyError::InvalidMobius(m) => Failure::new(EXIT_CONDITION, format!("condition violated: {m}")),
                other => other.into(),
            })?;
            if spec.inverse {
                params = mobius_inverse_params(&f, &params);
            }
            let shown: Vec<String> = params.coefficients().iter().map(|&x| f.display(x).to_string()).collect();
            (mobius_interleaver(&f, &params)?, format!("mobius abcd={}", shown.join(",")))
        }
        Family::Redei => {
            let n = need(spec.n, "-n", fam)?;
            let a_text = spec
                .a
                .as_deref()
                .ok_or_else(|| Failure::new(EXIT_USAGE, "redei needs -a (a non-square element)"))?;
            let a = parse_element(&f, a_text)?;
            let mut params = RedeiParams::new(&f, n, a)?;
            if spec.inverse {
                params = params.with_degree(redei_inverse_degree(&f, &params)?);
            }
            (
                redei_interleaver(&f, &params)?,
                format!("redei n={} a={}", params.n(), f.display(a)),
            )
        }
    };
    Ok((perm, desc, f))
}

fn write_permutation(perm: &Permutation, base: usize, format: Format, header: &[String], out: &mut dyn Write) -> CliResult {
    match format {
        Format::Json => writeln!(out, "{}", perm.to_json())?,
        Format::Csv => write!(out, "{}", perm.to_csv())?,
        Format::Table => {
            for h in header {
                writeln!(out, "# {h}")?;
            }
            write!(out, "{}", perm.two_row(base))?;
        }
    }
    Ok(())
}

fn cmd_interleave(a: &InterleaveArgs, format: Format, out: &mut dyn Write) -> CliResult {
    let (perm, desc, f) = family_permutation(&a.spec)?;
    if a.two_row {
        write!(out, "{}", perm.two_row(0))?;
        return Ok(());
    }
    let header = [format!("field {}", f.header()), format!("interleave {desc}")];
    write_permutation(&perm, 0, format, &header, out)
}

// ---------------------------------------------------------------- cycles

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure::new(EXIT_INPUT, format!("{path}: {e}")))?;
    }
    Ok(text)
}

fn cmd_cycles(a: &CyclesArgs, format: Format, out: &mut dyn Write) -> CliResult {
    let perm = match &a.input {
        Some(path) => {
            let text = read_input(path)?;
            Permutation::from_json(text.trim()).map_err(|e: PermError| Failure::new(EXIT_INPUT, e.to_string()))?
        }
        None => {
            let spec = FamilySpec {
                family: a.family.expect("clap requires family"),
                field: FieldOpts {
                    p: a.p.expect("clap requires p"),
                    m: a.m,
                    poly: a.poly.clone(),
                },
                n: a.n,
                a: a.a.clone(),
                abcd: a.abcd.clone(),
                inverse: a.inverse,
            };
            family_permutation(&spec)?.0
        }
    };
    let cs = perm.cycle_structure();
    match format {
        Format::Json => {
            let v = json!({
                "size": perm.size(),
                "census": cs.counts,
                "fixed_points": cs.fixed_points,
                "self_inverse": perm.is_self_inverse(),
            });
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            writeln!(out, "length,count")?;
            for (j, c) in &cs.counts {
                writeln!(out, "{j},{c}")?;
            }
        }
        Format::Table => {
            writeln!(out, "size {}", perm.size())?;
            writeln!(out, "census {}", CensusDisplay(&cs.counts))?;
            let fixed: Vec<String> = cs.fixed_points.iter().map(|x| x.to_string()).collect();
            writeln!(out, "fixed {{{}}}", fixed.join(","))?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- verify

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let theorem: Theorem = a.theorem.parse().map_err(|m: String| {
        let tags: Vec<&str> = Theorem::ALL.iter().map(|t| t.tag()).collect();
        Failure::new(EXIT_USAGE, format!("{m}; known tags: {}", tags.join(", ")))
    })?;
    let bound = q_bound()?;
    if let Some(q) = a.q_max {
        if q > bound {
            return Err(Failure::new(EXIT_USAGE, format!("q-max {q} exceeds the field-size bound {bound}")));
        }
    }
    let config = SweepConfig {
        q_min: a.q_min,
        q_max: a.q_max,
        n_max: a.n_max,
        j_max: a.j_max,
        jn_max: a.jn_max,
        search_nodes: a.search_nodes,
    };
    let records = match a.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?
            .install(|| run_sweep(theorem, &config))?,
        None => run_sweep(theorem, &config)?,
    };
    for r in &records {
        writeln!(out, "{}", serde_json::to_string(r).expect("record serializes"))?;
    }
    let summary = summarize(theorem, &records);
    writeln!(out, "{}", json!({ "summary": summary }))?;
    if summary.passed() {
        Ok(())
    } else {
        Err(Failure::new(
            EXIT_VERIFY,
            format!("{}: {} of {} records disagree with the oracle", theorem, summary.disagree, summary.records),
        ))
    }
}

// ---------------------------------------------------------------- skolem

fn parse_census(pairs: &[String]) -> Result<Census, Failure> {
    let mut census = Census::new();
    for pair in pairs {
        let bad = || Failure::new(EXIT_USAGE, format!("census entry {pair:?} is not length:count"));
        let (j, c) = pair.split_once(':').ok_or_else(bad)?;
        let j: usize = j.trim().parse().map_err(|_| bad())?;
        let c: usize = c.trim().parse().map_err(|_| bad())?;
        if j == 0 {
            return Err(bad());
        }
        *census.entry(j).or_insert(0) += c;
    }
    if census.values().all(|&c| c == 0) {
        return Err(Failure::new(EXIT_USAGE, "census is empty"));
    }
    Ok(census)
}

fn cmd_skolem(a: &SkolemArgs, format: Format, out: &mut dyn Write) -> CliResult {
    if a.kind == KindArg::Prescribed {
        let spec = parse_census(a.census.as_deref().unwrap_or(&[]))?;
        let built = prescribed_cycle_interleaver(&spec)?;
        let blocks: Vec<String> = built
            .blocks
            .iter()
            .map(|b| format!("length {} at {}..{} orders {:?}", b.cycle_length, b.offset, b.offset + b.size, b.orders))
            .collect();
        let mut header = vec![format!("prescribed census {}", CensusDisplay(&spec))];
        header.extend(blocks);
        return write_permutation(&built.permutation, 0, format, &header, out);
    }
    let n = a.n.ok_or_else(|| Failure::new(EXIT_USAGE, "-n is required"))?;
    let kind = match a.kind {
        KindArg::Plain => SkolemKind::Plain,
        KindArg::Hooked => SkolemKind::Hooked,
        KindArg::KExtended => SkolemKind::KExtended {
            k: a.k.ok_or_else(|| Failure::new(EXIT_USAGE, "k-extended needs -k"))?,
        },
        KindArg::Generalized => SkolemKind::Generalized {
            j: a.j.ok_or_else(|| Failure::new(EXIT_USAGE, "generalized needs -j"))?,
        },
        KindArg::Prescribed => unreachable!("handled above"),
    };
    let admissible = match kind {
        SkolemKind::Generalized { j } => skolem::generalized_skolem_condition(j, n)?,
        _ => skolem_exists(kind, n)?,
    };
    if !admissible {
        return Err(Failure::new(EXIT_CONDITION, format!("no {kind} sequence of order {n}: {}", existence_reason(kind, n))));
    }
    let seq = skolem::generate(kind, n)?;
    let modified = (a.modify || a.interleave).then(|| modify(&seq));
    let perm = match (&modified, a.interleave) {
        (Some(m), true) => Some(skolem_interleaver(m)?),
        _ => None,
    };
    match format {
        Format::Json => {
            let mut v = json!({
                "kind": kind.name(),
                "n": n,
                "j": kind.multiplicity(),
                "k": kind.hole(n).unwrap_or(0),
                "sequence": seq.entries(),
            });
            if a.modify {
                v["modified"] = json!(modified.as_ref().map(|m| m.entries()));
            }
            if let Some(p) = &perm {
                v["interleaver"] = json!({"size": p.size(), "image": p.image()});
            }
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            writeln!(out, "position,entry{}{}", if a.modify { ",modified" } else { "" }, if perm.is_some() { ",image" } else { "" })?;
            for pos in 0..seq.len() {
                write!(out, "{},{}", pos + 1, seq.entries()[pos])?;
                if a.modify {
                    write!(out, ",{}", modified.as_ref().expect("modified").entries()[pos])?;
                }
                if let Some(p) = &perm {
                    write!(out, ",{}", p.apply(pos) + 1)?;
                }
                writeln!(out)?;
            }
        }
        Format::Table => {
            let body: Vec<String> = seq.entries().iter().map(|e| e.to_string()).collect();
            writeln!(out, "{}", body.join(" "))?;
            if a.modify {
                let m = modified.as_ref().expect("modified");
                let body: Vec<String> = m.entries().iter().map(|e| e.to_string()).collect();
                writeln!(out, "# modified")?;
                writeln!(out, "{}", body.join(" "))?;
            }
            if let Some(p) = &perm {
                writeln!(out, "# interleaver")?;
                write!(out, "{}", p.two_row(1))?;
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- reproduce

/// Ids accepted by `reproduce`.
pub const EXAMPLE_IDS: [&str; 3] = ["monomial-13", "dickson-11", "skolem-hooked-6"];

/// The permutation of a built-in example and the base its table is printed in.
pub fn example_permutation(id: &str) -> Result<(Permutation, usize), Failure> {
    let field = |p| build_field_bounded(p, 1, None, DEFAULT_Q_BOUND.max(p));
    match id {
        "monomial-13" => Ok((monomial_interleaver(&field(13)?, 11)?, 0)),
        "dickson-11" => Ok((dickson_interleaver(&field(11)?, &DicksonParams::new(19, DicksonA::One))?, 0)),
        "skolem-hooked-6" => {
            let seq = skolem::generate(SkolemKind::Hooked, 6)?;
            Ok((skolem_interleaver(&modify(&seq))?, 1))
        }
        _ => Err(Failure::new(
            EXIT_USAGE,
            format!("unknown example {id:?}; known: {}", EXAMPLE_IDS.join(", ")),
        )),
    }
}

fn cmd_reproduce(a: &ReproduceArgs, format: Format, out: &mut dyn Write) -> CliResult {
    let (perm, base) = example_permutation(&a.id)?;
    match format {
        Format::Table => write!(out, "{}", perm.two_row(base))?,
        other => write_permutation(&perm, base, other, &[], out)?,
    }
    Ok(())
}
