//! Command-line front end. Every command writes a JSON report (to `--output`
//! or stdout) and a one-line summary (to stdout when `--output` is given,
//! otherwise stderr). Flags can also be set through `RANKGAP_*` variables.
//!
//! Exit codes: 0 success, 2 usage/parse/precondition failure, 3 budget
//! refusal, 4 internal consistency failure.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::boolalg::{basis_size, Universe, Variant};
use crate::corpus;
use crate::decoder::decode_assignment;
use crate::error::{Error, Result};
use crate::frontends::{parse_dimacs, parse_quadeq};
use crate::gf::FieldSpec;
use crate::instance::{sha256_hex, DegreeSource, InstanceFile, Mode, Provenance};
use crate::linalg::{rank_descent, symmetric_rank_one_decomposition, DescentConstraints, FFMatrix};
use crate::moment::{build_moment_subspace_at, honest_moment_vector, PseudoMomentVector};
use crate::oracles::{check_membership, minrank_bruteforce, point_isolator};
use crate::subspace::SubspaceSpec;
use crate::superposition::{choose_degree, reduce_cnf, Regime, DEFAULT_SOUNDNESS_CONSTANT};

#[derive(Parser, Debug)]
#[command(name = "rankgap", version, about = "Rank-gap reductions and brute-force oracles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON report here instead of stdout.
    #[arg(long, short, global = true, env = "RANKGAP_OUTPUT")]
    pub output: Option<PathBuf>,

    /// Threads for the parallel oracle regions; never changes the output.
    #[arg(long, global = true, default_value_t = 1, env = "RANKGAP_WORKERS")]
    pub workers: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a subspace instance from a CNF formula or a quadratic system.
    Reduce(ReduceArgs),
    /// Check membership and rank of an honest or given coordinate vector.
    Verify(VerifyArgs),
    /// Exhaustive minimum rank over a small instance.
    Minrank(MinrankArgs),
    /// Round a low-rank member of a direct instance to a Boolean solution.
    Decode(DecodeArgs),
    /// Symmetric rank-one decomposition of a GF(2) matrix.
    Decompose(MatrixArgs),
    /// Map a GF(2^r) matrix to a GF(2) matrix of bounded rank.
    Descend(DescendArgs),
    /// Low-degree polynomial isolating one point of a set.
    Isolate(IsolateArgs),
    /// Emit a random source instance.
    Generate(GenerateArgs),
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[arg(long, value_enum, env = "RANKGAP_MODE")]
    pub mode: Mode,
    /// DIMACS file (superposition) or QuadEq file (direct).
    pub input: PathBuf,
    #[arg(long, short, default_value_t = 1, env = "RANKGAP_K")]
    pub k: u64,
    /// Extension degree: the subspace lives over GF(2^r).
    #[arg(long, short, default_value_t = 1, env = "RANKGAP_R")]
    pub r: u64,
    /// Soundness constant used when choosing the degree.
    #[arg(long, short, default_value_t = DEFAULT_SOUNDNESS_CONSTANT, env = "RANKGAP_C")]
    pub c: f64,
    /// Use this degree instead of the derived one.
    #[arg(long, short, env = "RANKGAP_DEGREE")]
    pub degree: Option<usize>,
    /// Accept degrees outside the faithful regime.
    #[arg(long, env = "RANKGAP_RELAXED")]
    pub relaxed: bool,
    /// Refuse builds whose estimated size exceeds this.
    #[arg(long, default_value_t = 1_000_000, env = "RANKGAP_MAX_SIZE")]
    pub max_size: u128,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub instance: PathBuf,
    /// Boolean assignment to the source variables, e.g. `1,0,1`.
    #[arg(long, short, conflicts_with = "y")]
    pub assignment: Option<String>,
    /// Coordinate vector, entries separated by commas or spaces.
    #[arg(long)]
    pub y: Option<String>,
}

#[derive(Args, Debug)]
pub struct MinrankArgs {
    pub instance: PathBuf,
    #[arg(long, short, default_value_t = 1 << 20, env = "RANKGAP_BUDGET")]
    pub budget: u128,
}

#[derive(Args, Debug)]
pub struct DecodeArgs {
    pub instance: PathBuf,
    #[arg(long, short, conflicts_with_all = ["y", "search"])]
    pub assignment: Option<String>,
    #[arg(long, conflicts_with = "search")]
    pub y: Option<String>,
    /// Decode the minimum-rank witness found by exhaustive search.
    #[arg(long)]
    pub search: bool,
    #[arg(long, short, default_value_t = 1 << 20, env = "RANKGAP_BUDGET")]
    pub budget: u128,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    /// Matrix text file.
    pub matrix: PathBuf,
}

#[derive(Args, Debug)]
pub struct DescendArgs {
    pub matrix: PathBuf,
    /// Field of the input matrix, e.g. `GF(2^2)`.
    #[arg(long, short, env = "RANKGAP_FIELD")]
    pub field: String,
    /// Keep the constraints of this instance (matrix must be its H_d).
    #[arg(long)]
    pub instance: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct IsolateArgs {
    /// Points over x_0..x_n as bit strings, e.g. `00,10,11`.
    #[arg(long, short)]
    pub points: String,
    /// The point to isolate, as a bit string.
    #[arg(long, short)]
    pub target: String,
    #[arg(long)]
    pub rho: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenerateKind {
    QuadeqSat,
    QuadeqUnsat,
    CnfSat,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub kind: GenerateKind,
    #[arg(long, default_value_t = 0, env = "RANKGAP_SEED")]
    pub seed: u64,
    #[arg(long, short)]
    pub n: usize,
    #[arg(long, short)]
    pub m: usize,
    #[arg(long, short, default_value = "GF(2)")]
    pub field: String,
}

/// What a command produced: the JSON report and a one-line summary.
pub struct Report {
    pub json: String,
    pub summary: String,
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

/// Splits on commas and whitespace that sit outside parentheses.
fn split_list(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in text.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == ',' || ch.is_whitespace()) {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(ch);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_vector(field: &FieldSpec, text: &str) -> Result<Vec<u32>> {
    split_list(text).iter().map(|t| field.parse_elem(t)).collect()
}

fn parse_bits(text: &str) -> Result<Vec<u32>> {
    split_list(text)
        .iter()
        .map(|t| match t.as_str() {
            "0" => Ok(0),
            "1" => Ok(1),
            _ => Err(Error::pre(format!("assignment entries must be 0 or 1, got {t:?}"))),
        })
        .collect()
}

fn parse_bitstring(text: &str) -> Result<Vec<u32>> {
    text.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Error::pre(format!("bad bit {c:?} in {text:?}"))),
        })
        .collect()
}

fn format_vector(field: &FieldSpec, v: &[u32]) -> Vec<String> {
    v.iter().map(|&x| field.format_elem(x)).collect()
}

fn bitstring(v: &[u32]) -> String {
    v.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
}

fn cmd_reduce(a: &ReduceArgs) -> Result<Report> {
    let text = read(&a.input)?;
    if a.k == 0 {
        return Err(Error::pre("k must be at least 1"));
    }
    let (l, prov, source) = match a.mode {
        Mode::Direct => {
            let src = parse_quadeq(&text)?;
            let d = a.degree.unwrap_or(a.k as usize);
            if d == 0 {
                return Err(Error::pre("degree must be at least 1"));
            }
            let estimate = basis_size(Variant::V, src.n, 2 * d);
            if estimate > a.max_size {
                return Err(Error::BudgetExceeded {
                    needed: estimate,
                    budget: a.max_size,
                });
            }
            let l = build_moment_subspace_at(&src, d)?;
            let source = src.to_text();
            let prov = Provenance {
                mode: Mode::Direct,
                source_sha256: sha256_hex(&source),
                k: a.k,
                r: None,
                c: None,
                q: src.field.order(),
                degree: d,
                degree_source: if a.degree.is_some() { DegreeSource::Override } else { DegreeSource::Computed },
                soundness_regime: None,
            };
            (l, prov, source)
        }
        Mode::Superposition => {
            let cnf = parse_dimacs(&text)?;
            let choice = choose_degree(a.k, a.r, a.c)?;
            let d = a.degree.unwrap_or(choice.d);
            let r = u32::try_from(a.r).map_err(|_| Error::pre("r too large"))?;
            let field = FieldSpec::binary(r)?;
            let coords = basis_size(Variant::U, cnf.n, 2 * d);
            let side = basis_size(Variant::U, cnf.n, d);
            let estimate = coords.max(side.saturating_mul(side));
            if estimate > a.max_size {
                return Err(Error::BudgetExceeded {
                    needed: estimate,
                    budget: a.max_size,
                });
            }
            let (b, _, l) = reduce_cnf(&cnf, d, a.relaxed, &field)?;
            let source = cnf.to_dimacs();
            let prov = Provenance {
                mode: Mode::Superposition,
                source_sha256: sha256_hex(&source),
                k: a.k,
                r: Some(a.r),
                c: Some(a.c),
                q: field.order(),
                degree: d,
                degree_source: if a.degree.is_some() { DegreeSource::Override } else { DegreeSource::Computed },
                soundness_regime: Some(b.regime),
            };
            (l, prov, source)
        }
    };
    let regime = match prov.soundness_regime {
        Some(Regime::Faithful) => ", faithful",
        Some(Regime::Relaxed) => ", relaxed",
        None => "",
    };
    let summary = format!(
        "coordinates {}, constraints {}, d {}{regime}",
        l.coordinate_count(),
        l.constraint_count(),
        l.level()
    );
    Ok(Report {
        json: InstanceFile::new(&l, prov, source).to_json(),
        summary,
    })
}

fn load_instance(path: &Path) -> Result<(InstanceFile, SubspaceSpec)> {
    let inst = InstanceFile::from_json(&read(path)?)?;
    let l = inst.subspace()?;
    Ok((inst, l))
}

/// Honest coordinates of a source assignment (`x_0 = 1` prepended for the
/// superposition variant).
fn honest_for(l: &SubspaceSpec, bits: &[u32]) -> Result<PseudoMomentVector> {
    let point: Vec<u32> = match l.variant() {
        Variant::U => std::iter::once(1).chain(bits.iter().copied()).collect(),
        Variant::V => bits.to_vec(),
    };
    honest_moment_vector(l.field(), &point, l.coordinates().clone())
}

fn cmd_verify(a: &VerifyArgs) -> Result<Report> {
    let (_, l) = load_instance(&a.instance)?;
    let field = l.field().clone();
    let (y, kind) = match (&a.assignment, &a.y) {
        (Some(s), None) => (honest_for(&l, &parse_bits(s)?)?.values, "honest"),
        (None, Some(s)) => (parse_vector(&field, s)?, "given"),
        _ => return Err(Error::pre("pass exactly one of --assignment or --y")),
    };
    let m = check_membership(&y, &l)?;
    let zero = y.iter().all(|&v| v == 0);
    let rank = l.expand(&y, l.level())?.rank();
    let summary = if !m.member {
        format!("not a member: constraint {} violated", m.first_violated.unwrap())
    } else if zero {
        "member (trivially), excluded from minrank".to_string()
    } else {
        format!("member, rank {rank}")
    };
    let json = json!({
        "subspace_hash": l.digest(),
        "vector": kind,
        "member": m.member,
        "first_violated": m.first_violated,
        "zero": zero,
        "rank": rank,
        "y": format_vector(&field, &y),
    });
    Ok(Report { json: pretty(&json), summary })
}

fn cmd_minrank(a: &MinrankArgs, workers: usize) -> Result<Report> {
    let (_, l) = load_instance(&a.instance)?;
    let rep = minrank_bruteforce(&l, a.budget, workers)?;
    let summary = match rep.minrank {
        None => format!("empty subspace (kernel dimension {})", rep.kernel_dimension),
        Some(r) => format!("minrank {r} over {} nonzero members", rep.enumerated),
    };
    let json = json!({
        "subspace_hash": rep.subspace_hash,
        "kernel_dimension": rep.kernel_dimension,
        "enumerated": rep.enumerated.to_string(),
        "empty_subspace": rep.minrank.is_none(),
        "minrank": rep.minrank,
        "witness": rep.witness.as_ref().map(|w| format_vector(l.field(), w)),
    });
    Ok(Report { json: pretty(&json), summary })
}

fn cmd_decode(a: &DecodeArgs, workers: usize) -> Result<Report> {
    let (inst, l) = load_instance(&a.instance)?;
    let src = inst.quad_source()?;
    let field = l.field().clone();
    let values = match (&a.assignment, &a.y, a.search) {
        (Some(s), None, false) => honest_for(&l, &parse_bits(s)?)?.values,
        (None, Some(s), false) => parse_vector(&field, s)?,
        (None, None, true) => minrank_bruteforce(&l, a.budget, workers)?
            .witness
            .ok_or_else(|| Error::pre("the subspace is {0}; nothing to decode"))?,
        _ => return Err(Error::pre("pass one of --assignment, --y or --search")),
    };
    let y = PseudoMomentVector::new(&field, l.coordinates().clone(), values)?;
    let rep = decode_assignment(&y, &src, l.level())?;
    let summary = match &rep.assignment {
        Some(x) => format!("assignment {}", bitstring(x)),
        None => format!("no assignment: stage {} failed", rep.failed_stage.as_deref().unwrap_or("?")),
    };
    Ok(Report {
        json: serde_json::to_string_pretty(&rep).expect("json") + "\n",
        summary,
    })
}

fn cmd_decompose(a: &MatrixArgs) -> Result<Report> {
    let m = FFMatrix::parse_text(&read(&a.matrix)?)?;
    let dec = symmetric_rank_one_decomposition(&m)?;
    let bound = 3 * dec.source_rank / 2;
    let json = json!({
        "size": dec.size,
        "rank": dec.source_rank,
        "terms": dec.len(),
        "bound": bound,
        "vectors": dec.vectors.iter().map(|v| bitstring(v)).collect::<Vec<_>>(),
    });
    Ok(Report {
        json: pretty(&json),
        summary: format!("{} rank-one terms for rank {} (bound {bound})", dec.len(), dec.source_rank),
    })
}

fn cmd_descend(a: &DescendArgs) -> Result<Report> {
    let field = FieldSpec::parse_descriptor(&a.field)?;
    let m = FFMatrix::parse_text(&read(&a.matrix)?)?;
    if *m.field() != field {
        return Err(Error::FieldMismatch {
            left: field.descriptor(),
            right: m.field().descriptor(),
        });
    }
    let lifted;
    let constraints = match &a.instance {
        Some(p) => {
            let (_, l) = load_instance(p)?;
            lifted = l.with_field(&field)?;
            DescentConstraints::Subspace(&lifted)
        }
        None => DescentConstraints::Raw(&[]),
    };
    let out = rank_descent(&m, constraints)?;
    let r = field.degree() as usize;
    let json = json!({
        "field": field.descriptor(),
        "functional": out.functional.row(),
        "source_rank": out.source_rank,
        "rank": out.rank,
        "bound": r * out.source_rank,
        "matrix": out.matrix.to_text(true),
    });
    Ok(Report {
        json: pretty(&json),
        summary: format!(
            "GF(2) rank {} <= {} * {}",
            out.rank, r, out.source_rank
        ),
    })
}

fn cmd_isolate(a: &IsolateArgs) -> Result<Report> {
    let points = a
        .points
        .split(',')
        .map(parse_bitstring)
        .collect::<Result<Vec<_>>>()?;
    let target = parse_bitstring(&a.target)?;
    let idx = points
        .iter()
        .position(|p| *p == target)
        .ok_or_else(|| Error::pre("target is not one of the points"))?;
    let len = target.len();
    if len < 2 {
        return Err(Error::pre("points need at least two coordinates (x_0 and x_1)"));
    }
    let universe = Universe::new(Variant::U, len - 1)?;
    let q = point_isolator(universe, &points, idx, a.rho)?;
    let json = json!({
        "rho": a.rho,
        "points": points.iter().map(|p| bitstring(p)).collect::<Vec<_>>(),
        "target": bitstring(&target),
        "polynomial": q.to_string(),
        "degree": q.degree().unwrap_or(0),
    });
    Ok(Report { json: pretty(&json), summary: format!("q = {q}") })
}

fn cmd_generate(a: &GenerateArgs) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let field = FieldSpec::parse_descriptor(&a.field)?;
    let (text, summary) = match a.kind {
        GenerateKind::QuadeqSat => {
            let (src, x) = corpus::satisfiable_quadeq(&mut rng, &field, a.n, a.m)?;
            (src.to_text(), format!("planted solution {}", bitstring(&x)))
        }
        GenerateKind::QuadeqUnsat => {
            let src = corpus::unsatisfiable_quadeq(&mut rng, &field, a.n, a.m)?;
            (src.to_text(), "no Boolean solution".to_string())
        }
        GenerateKind::CnfSat => {
            let (cnf, z) = corpus::planted_cnf(&mut rng, a.n, a.m)?;
            let bits: Vec<u32> = z.iter().map(|&b| b as u32).collect();
            (cnf.to_dimacs(), format!("planted assignment {}", bitstring(&bits)))
        }
    };
    Ok(Report { json: text, summary })
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let workers = cli.workers.max(1);
    match &cli.command {
        Command::Reduce(a) => cmd_reduce(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Minrank(a) => cmd_minrank(a, workers),
        Command::Decode(a) => cmd_decode(a, workers),
        Command::Decompose(a) => cmd_decompose(a),
        Command::Descend(a) => cmd_descend(a),
        Command::Isolate(a) => cmd_isolate(a),
        Command::Generate(a) => cmd_generate(a),
    }
}

/// Parses `args`, runs the command and writes to the given streams; returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let outcome = execute(&cli).and_then(|rep| {
        match &cli.output {
            Some(path) => {
                std::fs::write(path, &rep.json)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                writeln!(stdout, "{}", rep.summary)?;
            }
            None => {
                stdout.write_all(rep.json.as_bytes())?;
                writeln!(stderr, "{}", rep.summary)?;
            }
        }
        Ok(())
    });
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
