//! The `bnloci` command line.
//!
//! [`run`] takes the argument list and the three standard streams, so tests
//! can drive it without spawning processes. Exit codes: 0 success, 1 domain
//! violation (including an invalid filling), 2 usage or malformed input.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bnloci::certify::{
    confirm_distinct_by_enumeration, distinctness_check, inclusion_candidates,
    maxrank_m2_certificate, petri_certificate, InclusionCandidate,
};
use bnloci::construct::{optimal_separation_filling, staircase_filling};
use bnloci::json::{from_document, to_document};
use bnloci::params::{
    existence_ranges, kj_decompose, max_distance_bound, rho, serre_dual_triple, RangeReport,
    TriangularDecomposition,
};
use bnloci::series::{filling_to_series, series_to_filling};
use bnloci::tableau::{
    enumerate_fillings, minimal_torsion_chain, reduce_to_positive, transpose, validate_positive,
    validate_weighted, ValidationReport, DEFAULT_BUDGET,
};
use bnloci::{BnParams, ChainSpec, Error, Filling, LimitSeriesTable, Triple, WeightedFilling};

#[derive(Debug, Parser)]
#[command(
    name = "bnloci",
    version,
    about = "Brill-Noether loci through fillings of rectangles"
)]
struct Cli {
    /// Output format; `ascii` is available for commands that return fillings.
    #[arg(long, value_enum, default_value_t = Render::Json, global = true)]
    render: Render,
    /// Read the input document from this file instead of standard input.
    #[arg(long = "in", value_name = "FILE", global = true)]
    input: Option<PathBuf>,
    /// Write the result here instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Render {
    Json,
    Ascii,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Optimal,
    Staircase,
}

#[derive(Debug, Args)]
struct ChainArg {
    /// Chain document; defaults to the minimal torsion chain of the filling.
    #[arg(long, value_name = "FILE")]
    chain: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Numerology of a (g, r, d) triple.
    Params {
        #[arg(long, requires_all = ["r", "d"], conflicts_with = "triple")]
        g: Option<i64>,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        /// The triple as `g,r,d`.
        #[arg(long, value_parser = parse_triple)]
        triple: Option<Triple>,
    },
    /// Build an optimal-separation or staircase filling.
    FillConstruct {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        /// Number of indices (staircase default input).
        #[arg(long, conflicts_with = "e")]
        g: Option<usize>,
        /// Number of doubled indices.
        #[arg(long)]
        e: Option<usize>,
    },
    /// List every admissible filling of a rectangle on a chain.
    FillEnumerate {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        beta: usize,
        /// Length of a chain without torsion; ignored when `--chain` is given.
        #[arg(long, required_unless_present = "chain")]
        g: Option<usize>,
        #[arg(long, value_name = "FILE")]
        chain: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Check a filling (or a weighted filling) against a chain.
    FillValidate {
        #[command(flatten)]
        chain: ChainArg,
        /// The input is a weighted filling; `--chain` is then required.
        #[arg(long, requires = "chain")]
        weighted: bool,
    },
    /// Swap rows and columns of a filling.
    FillTranspose,
    /// Translate a filling into its refined limit linear series.
    SeriesFromFilling {
        #[command(flatten)]
        chain: ChainArg,
    },
    /// Rebuild the filling of a refined limit linear series.
    SeriesToFilling,
    /// Petri surjectivity certificate for a filling.
    CertifyPetri {
        #[command(flatten)]
        chain: ChainArg,
    },
    /// Maximal rank certificate for quadrics on the square case.
    CertifyMaxrank {
        #[arg(long)]
        r: usize,
    },
    /// Compare two loci of the same codimension.
    LociDistinct {
        #[arg(long, value_parser = parse_triple)]
        p1: Triple,
        #[arg(long, value_parser = parse_triple)]
        p2: Triple,
        /// Also run the exhaustive check on a Distinct verdict.
        #[arg(long)]
        confirm: bool,
    },
    /// Candidate inclusions between codimension 2 and 1 loci.
    LociInclusions {
        #[arg(long)]
        alpha_max: i64,
    },
}

fn parse_triple(s: &str) -> Result<Triple, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected g,r,d, got {s:?}"));
    }
    let mut nums = [0i64; 3];
    for (slot, part) in nums.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| format!("{part:?} is not an integer"))?;
    }
    Ok(Triple::new(nums[0], nums[1], nums[2]))
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            kind: "usage",
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::Json(_) => (2, "json"),
            Error::FormatVersion { .. } => (2, "format_version"),
            Error::Malformed(_) => (2, "malformed"),
            Error::InvalidParams { .. } => (1, "invalid_params"),
            Error::DegenerateDual { .. } => (1, "degenerate_dual"),
            Error::Overflow(_) => (1, "overflow"),
            Error::OutOfRange(_) => (1, "out_of_range"),
            Error::BudgetExceeded { .. } => (1, "budget_exceeded"),
            Error::UnsupportedMultiplicity { .. } => (1, "unsupported_multiplicity"),
            Error::ImpossibleFilling { .. } => (1, "impossible_filling"),
            Error::ShapeMismatch(_) => (1, "shape_mismatch"),
            Error::InconsistentTable(_) => (1, "inconsistent_table"),
            Error::Construction(_) => (1, "construction"),
            Error::Certificate(_) => (1, "certificate"),
            Error::Precondition(_) => (1, "precondition"),
            Error::Internal(_) => (1, "internal"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

/// What a command produced.
enum Output {
    Filling(Filling),
    Fillings(FillingList),
    Document(String),
    /// A document that also signals a domain violation (exit 1).
    Rejected(String),
}

#[derive(Serialize)]
struct FillingList {
    alpha: usize,
    beta: usize,
    chain: ChainSpec,
    count: usize,
    fillings: Vec<Filling>,
}

#[derive(Serialize)]
struct ParamsReport {
    input: Triple,
    normalized: Triple,
    dualized: bool,
    alpha: i64,
    beta: i64,
    rho: i64,
    codimension: i64,
    serre_dual: Option<Triple>,
    decomposition: Option<TriangularDecomposition>,
    max_distance_bound: Option<i64>,
    ranges: RangeReport,
}

#[derive(Serialize)]
struct ValidationOutput {
    valid: bool,
    chain: ChainSpec,
    violations: ValidationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced: Option<Filling>,
}

#[derive(Serialize)]
struct InclusionList {
    alpha_max: i64,
    candidates: Vec<InclusionEntry>,
}

#[derive(Serialize)]
struct InclusionEntry {
    notation: String,
    #[serde(flatten)]
    candidate: InclusionCandidate,
}

#[derive(Serialize)]
struct DistinctOutput {
    #[serde(flatten)]
    verdict: bnloci::certify::DistinctnessVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    confirmed_by_enumeration: Option<bool>,
}

fn read_input(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut text = String::new();
    match &cli.input {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn read_chain(path: &Option<PathBuf>) -> Result<Option<ChainSpec>, Failure> {
    let Some(path) = path else { return Ok(None) };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Some(from_document(&text)?))
}

fn chain_for(f: &Filling, given: Option<ChainSpec>) -> Result<ChainSpec, Failure> {
    match given {
        Some(c) => Ok(c),
        None => Ok(minimal_torsion_chain(f)?),
    }
}

fn shape_params(f: &Filling) -> Result<BnParams, Failure> {
    let p = BnParams::from_shape(f.alpha() as i64, f.beta() as i64, f.g() as i64)?;
    if p.dualized() {
        return Err(Error::ShapeMismatch(format!(
            "the filling has more columns ({}) than rows ({}); transpose it first",
            f.alpha(),
            f.beta()
        ))
        .into());
    }
    Ok(p)
}

fn doc<T: Serialize>(value: &T) -> Result<Output, Failure> {
    Ok(Output::Document(to_document(value)?))
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    match &cli.command {
        Command::Params { g, r, d, triple } => {
            let t = match (triple, g, r, d) {
                (Some(t), ..) => *t,
                (None, Some(g), Some(r), Some(d)) => Triple::new(*g, *r, *d),
                _ => return Err(Failure::usage("give --g, --r and --d, or --triple g,r,d")),
            };
            let p = BnParams::from_triple(t)?;
            let rho = rho(&p);
            let e = (-rho).max(0);
            let ranges = existence_ranges(p.alpha(), p.beta(), p.g());
            doc(&ParamsReport {
                input: t,
                normalized: p.triple(),
                dualized: p.dualized(),
                alpha: p.alpha(),
                beta: p.beta(),
                rho,
                codimension: p.codimension(),
                serre_dual: serre_dual_triple(t).ok(),
                decomposition: (rho < 0).then(|| kj_decompose(e)),
                max_distance_bound: if rho < 0 {
                    max_distance_bound(p.alpha(), p.beta(), e).ok()
                } else {
                    None
                },
                ranges,
            })
        }
        Command::FillConstruct {
            mode,
            alpha,
            beta,
            g,
            e,
        } => {
            let area = alpha * beta;
            let (g, e) = match (g, e) {
                (Some(g), None) => {
                    if *g > area {
                        return Err(Error::OutOfRange(format!(
                            "g = {g} exceeds alpha*beta = {area}"
                        ))
                        .into());
                    }
                    (*g, area - g)
                }
                (None, Some(e)) => {
                    if *e > area {
                        return Err(Error::OutOfRange(format!(
                            "e = {e} exceeds alpha*beta = {area}"
                        ))
                        .into());
                    }
                    (area - e, *e)
                }
                _ => return Err(Failure::usage("give exactly one of --g and --e")),
            };
            let f = match mode {
                Mode::Optimal => optimal_separation_filling(*alpha, *beta, e)?,
                Mode::Staircase => staircase_filling(*alpha, *beta, g)?,
            };
            Ok(Output::Filling(f))
        }
        Command::FillEnumerate {
            alpha,
            beta,
            g,
            chain,
            budget,
        } => {
            let chain = match read_chain(chain)? {
                Some(c) => c,
                None => ChainSpec::generic(g.expect("clap requires --g without --chain")),
            };
            let fillings: Vec<Filling> =
                enumerate_fillings(*alpha, *beta, &chain, *budget)?.collect();
            Ok(Output::Fillings(FillingList {
                alpha: *alpha,
                beta: *beta,
                chain,
                count: fillings.len(),
                fillings,
            }))
        }
        Command::FillValidate { chain, weighted } => {
            let text = read_input(cli, stdin)?;
            let given = read_chain(&chain.chain)?;
            let out = if *weighted {
                let w: WeightedFilling = from_document(&text)?;
                let chain = given.expect("clap requires --chain with --weighted");
                let report = validate_weighted(&w, &chain);
                let reduced = if report.is_valid() {
                    Some(reduce_to_positive(&w)?)
                } else {
                    None
                };
                ValidationOutput {
                    valid: report.is_valid(),
                    chain,
                    violations: report,
                    reduced,
                }
            } else {
                let f: Filling = from_document(&text)?;
                let chain = chain_for(&f, given)?;
                let report = validate_positive(&f, &chain);
                ValidationOutput {
                    valid: report.is_valid(),
                    chain,
                    violations: report,
                    reduced: None,
                }
            };
            let text = to_document(&out)?;
            Ok(if out.valid {
                Output::Document(text)
            } else {
                Output::Rejected(text)
            })
        }
        Command::FillTranspose => {
            let f: Filling = from_document(&read_input(cli, stdin)?)?;
            Ok(Output::Filling(transpose(&f)))
        }
        Command::SeriesFromFilling { chain } => {
            let f: Filling = from_document(&read_input(cli, stdin)?)?;
            let chain = chain_for(&f, read_chain(&chain.chain)?)?;
            let p = shape_params(&f)?;
            doc(&filling_to_series(&f, &p, &chain)?)
        }
        Command::SeriesToFilling => {
            let t: LimitSeriesTable = from_document(&read_input(cli, stdin)?)?;
            Ok(Output::Filling(series_to_filling(&t)?))
        }
        Command::CertifyPetri { chain } => {
            let f: Filling = from_document(&read_input(cli, stdin)?)?;
            let chain = chain_for(&f, read_chain(&chain.chain)?)?;
            let p = shape_params(&f)?;
            doc(&petri_certificate(&f, &p, &chain)?)
        }
        Command::CertifyMaxrank { r } => doc(&maxrank_m2_certificate(*r)?),
        Command::LociDistinct { p1, p2, confirm } => {
            let (a, b) = (BnParams::from_triple(*p1)?, BnParams::from_triple(*p2)?);
            let verdict = distinctness_check(&a, &b)?;
            let confirmed = if *confirm && verdict.verdict == bnloci::certify::Verdict::Distinct {
                Some(confirm_distinct_by_enumeration(&a, &b)?)
            } else {
                None
            };
            doc(&DistinctOutput {
                verdict,
                confirmed_by_enumeration: confirmed,
            })
        }
        Command::LociInclusions { alpha_max } => {
            let candidates = inclusion_candidates(*alpha_max)?
                .into_iter()
                .map(|c| InclusionEntry {
                    notation: c.display(),
                    candidate: c,
                })
                .collect();
            doc(&InclusionList {
                alpha_max: *alpha_max,
                candidates,
            })
        }
    }
}

/// Fixed-width grid of a filling. Doubled (or further repeated) indices get
/// a `*` and a legend line listing their boxes and grid distances.
pub fn render_ascii(f: &Filling) -> String {
    let repeats = f.repeats();
    let repeated: std::collections::BTreeSet<usize> = repeats.iter().map(|r| r.index).collect();
    let width = f
        .raw_cells()
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        + 1;
    let border = format!(
        "+{}\n",
        format!("{}+", "-".repeat(width + 2)).repeat(f.alpha())
    );

    let mut out = format!("{} x {} filling, g = {}\n", f.alpha(), f.beta(), f.g());
    out.push_str(&border);
    for row in f.rows() {
        out.push('|');
        for &v in row {
            let label = if repeated.contains(&v) {
                format!("{v}*")
            } else {
                format!("{v} ")
            };
            let _ = write!(out, " {label:>width$} |");
        }
        out.push('\n');
        out.push_str(&border);
    }
    for rep in &repeats {
        let cells: Vec<String> = rep
            .occurrences
            .iter()
            .map(|(r, c)| format!("({r},{c})"))
            .collect();
        let dists: Vec<String> = rep.pair_distances.iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "{}*: {} d={}",
            rep.index,
            cells.join("-"),
            dists.join(",")
        );
    }
    out
}

fn render(cli: &Cli, output: Output) -> Result<(String, i32), Failure> {
    let ascii = cli.render == Render::Ascii;
    match output {
        Output::Filling(f) if ascii => Ok((render_ascii(&f), 0)),
        Output::Filling(f) => Ok((to_document(&f)?, 0)),
        Output::Fillings(list) if ascii => {
            let mut text = format!("{} fillings\n", list.count);
            for f in &list.fillings {
                text.push('\n');
                text.push_str(&render_ascii(f));
            }
            Ok((text, 0))
        }
        Output::Fillings(list) => Ok((to_document(&list)?, 0)),
        Output::Document(_) | Output::Rejected(_) if ascii => Err(Failure::usage(
            "--render ascii is only available for commands that return fillings",
        )),
        Output::Document(text) => Ok((text, 0)),
        Output::Rejected(text) => Ok((text, 1)),
    }
}

fn report_failure(stderr: &mut dyn Write, failure: &Failure) {
    let body = serde_json::json!({ "error": failure.kind, "message": failure.message });
    let _ = writeln!(stderr, "{body}");
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            };
        }
    };

    let result = execute(&cli, stdin).and_then(|out| render(&cli, out));
    match result {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, text.as_bytes())
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(text.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            match written {
                Ok(()) => code,
                Err(message) => {
                    report_failure(stderr, &Failure::usage(message));
                    2
                }
            }
        }
        Err(failure) => {
            report_failure(stderr, &failure);
            failure.code
        }
    }
}

/// Entry point used by the binary.
pub fn main_entry() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        std::env::args_os(),
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
