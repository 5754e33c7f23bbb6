//! Command-line front end: `generate`, `verify`, `lambda` and `examples`.
//!
//! Exit codes: 0 success, 1 semantic failure (a check failed), 2 usage or
//! parse error, 3 capacity guard, 4 inconclusive oracle.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sigma_gray::verifier::{
    all_words, oracle_lambda, parity_class_words, verify_terms, OracleOutcome, VerificationReport,
};
use sigma_gray::{
    classify, lambda_max, max_gray_cycle_with, Alphabet, BaseVariant, CycleIndexer, CycleOptions,
    Error, Parity, Word,
};

pub mod delta;
pub mod golden;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;

/// Largest alphabet the digit text format can carry.
pub const MAX_TEXT_ALPHABET: u32 = 10;

#[derive(Debug, Parser)]
#[command(
    name = "sigma-gray",
    version,
    about = "Maximum-length Gray cycles for k-character substitutions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a maximum-length σ_k-Gray cycle over words of length n.
    Generate(GenerateArgs),
    /// Check G1–G3 for a word-per-line cycle read from stdin or a file.
    Verify(VerifyArgs),
    /// Print the closed-form maximum length, optionally cross-checked by brute force.
    Lambda(LambdaArgs),
    /// Regenerate the reference examples and compare them to the embedded data.
    Examples,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Delta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Gamma,
    Rho,
}

#[derive(Debug, clap::Args)]
pub struct GenerateArgs {
    /// Alphabet size.
    #[arg(short)]
    pub p: u32,
    /// Word length.
    #[arg(short)]
    pub n: usize,
    /// Number of substituted characters per step.
    #[arg(short)]
    pub k: usize,
    /// Parity class for binary alphabets with even k.
    #[arg(long, value_enum, default_value = "even")]
    pub parity: ParityArg,
    /// Which of the two cycles to emit for binary alphabets with odd k < n.
    #[arg(long, value_enum, default_value = "gamma")]
    pub base_variant: VariantArg,
    /// Seed word x of the cycle (x, θ(x)) for binary alphabets with n = k.
    #[arg(long)]
    pub seed_word: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    /// Compute each term from its index instead of materializing the cycle.
    #[arg(long)]
    pub stream: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroundSetArg {
    /// Only the listed terms (G1 is vacuous).
    None,
    /// All p^n words of the input's length.
    Full,
    /// All binary words sharing the first term's ones-count parity.
    Parity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    #[arg(short)]
    pub k: usize,
    /// Alphabet size; inferred from the largest digit when omitted.
    #[arg(short)]
    pub p: Option<u32>,
    #[arg(long, value_enum, default_value = "none")]
    pub ground_set: GroundSetArg,
    #[arg(long, value_enum, default_value = "text")]
    pub report: ReportFormat,
    /// Read words from this file instead of stdin.
    #[arg(long)]
    pub input: Option<std::path::PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct LambdaArgs {
    #[arg(short)]
    pub p: u32,
    #[arg(short)]
    pub n: usize,
    #[arg(short)]
    pub k: usize,
    /// Also compute the value by exhaustive search (tiny instances only).
    #[arg(long)]
    pub oracle: bool,
    /// Node budget for the exhaustive search.
    #[arg(long, default_value_t = 50_000_000)]
    pub budget: u64,
}

/// JSON document emitted by `generate --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratedCycle {
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub case: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub parity: Option<String>,
    pub length: u64,
    pub terms: Vec<String>,
}

/// JSON document emitted by `verify --report json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub passed: bool,
    pub g1_pass: bool,
    pub g2_pass: bool,
    pub g3_pass: bool,
    pub ground_set_size: usize,
    pub first_violation: Option<String>,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        ReportJson {
            passed: r.passed(),
            g1_pass: r.g1_pass,
            g2_pass: r.g2_pass,
            g3_pass: r.g3_pass,
            ground_set_size: r.ground_set_size,
            first_violation: r.first_violation().map(ToString::to_string),
            violations: r.violations.iter().map(ToString::to_string).collect(),
            notes: r.notes.clone(),
        }
    }
}

/// A failure that maps onto an exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity(_) => EXIT_CAPACITY,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // a closed downstream pipe is not an error for a generator
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure {
            code: EXIT_FAILURE,
            message: format!("i/o error: {e}"),
        }
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
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
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(&args, stdout),
        Command::Verify(args) => cmd_verify(&args, stdin, stdout),
        Command::Lambda(args) => cmd_lambda(&args, stdout),
        Command::Examples => Ok(golden::run_examples(&golden::embedded(), stdout)),
    };
    let code = match result {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(stderr, "error: {}", f.message);
            }
            f.code
        }
    };
    let _ = stdout.flush();
    code
}

fn check_text_alphabet(p: u32) -> Result<(), Failure> {
    if p > MAX_TEXT_ALPHABET {
        return Err(Failure::usage(format!(
            "the digit text format supports at most {MAX_TEXT_ALPHABET} characters, got p = {p}"
        )));
    }
    Ok(())
}

fn generate_options(args: &GenerateArgs) -> Result<CycleOptions, Failure> {
    let seed_word = match &args.seed_word {
        Some(s) => Some(
            Word::parse(s, Alphabet::BINARY)
                .map_err(|e| Failure::usage(format!("--seed-word: {e}")))?,
        ),
        None => None,
    };
    let base_variant = match args.base_variant {
        VariantArg::Gamma => BaseVariant::Gamma,
        VariantArg::Rho => BaseVariant::Rho,
    };
    Ok(CycleOptions {
        parity: args.parity.into(),
        base_variant,
        seed_word,
    })
}

fn cmd_generate(args: &GenerateArgs, out: &mut dyn Write) -> CmdResult {
    check_text_alphabet(args.p)?;
    let options = generate_options(args)?;
    let (p, n, k) = (args.p, args.n, args.k);
    let tag = classify(p, n, k)?.with_parity(options.parity);
    let header = Header {
        p,
        n,
        k,
        case: tag.case.label(),
        parity: tag.parity.map(Parity::name),
    };
    if args.stream {
        let indexer = CycleIndexer::new(p, n, k, &options)?;
        write_cycle(out, args.format, &header, indexer.len(), indexer.terms())?;
    } else {
        let seq = max_gray_cycle_with(p, n, k, &options)?;
        if args.format == Format::Json {
            let doc = GeneratedCycle {
                p,
                n,
                k,
                case: header.case.to_string(),
                parity: header.parity.map(str::to_string),
                length: seq.len() as u64,
                terms: seq.to_strings(),
            };
            serde_json::to_writer(&mut *out, &doc)
                .map_err(|e| Failure::from(std::io::Error::from(e)))?;
            writeln!(out)?;
        } else {
            write_cycle(
                out,
                args.format,
                &header,
                seq.len() as u64,
                seq.into_terms().into_iter(),
            )?;
        }
    }
    Ok(EXIT_OK)
}

struct Header {
    p: u32,
    n: usize,
    k: usize,
    case: &'static str,
    parity: Option<&'static str>,
}

/// Writes terms incrementally. The JSON layout matches what `serde_json`
/// produces for [`GeneratedCycle`].
fn write_cycle(
    out: &mut dyn Write,
    format: Format,
    header: &Header,
    length: u64,
    terms: impl Iterator<Item = Word>,
) -> std::io::Result<()> {
    match format {
        Format::Plain => {
            for w in terms {
                writeln!(out, "{w}")?;
            }
        }
        Format::Delta => delta::encode(out, terms)?,
        Format::Json => {
            write!(
                out,
                r#"{{"p":{},"n":{},"k":{},"case":"{}""#,
                header.p, header.n, header.k, header.case
            )?;
            if let Some(parity) = header.parity {
                write!(out, r#","parity":"{parity}""#)?;
            }
            write!(out, r#","length":{length},"terms":["#)?;
            for (i, w) in terms.enumerate() {
                if i > 0 {
                    out.write_all(b",")?;
                }
                write!(out, "\"{w}\"")?;
            }
            writeln!(out, "]}}")?;
        }
    }
    Ok(())
}

/// Parses word-per-line input. Blank lines are skipped; errors name the 1-indexed line.
pub fn parse_words(text: &str, p: Option<u32>) -> Result<Vec<Word>, String> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let p = match p {
        Some(p) => p,
        None => {
            let mut max_digit = 1;
            for &(line, s) in &lines {
                for (pos, ch) in s.chars().enumerate() {
                    let d = ch.to_digit(10).ok_or_else(|| {
                        format!(
                            "line {line}, position {}: {ch:?} is not a decimal digit",
                            pos + 1
                        )
                    })?;
                    max_digit = max_digit.max(d);
                }
            }
            max_digit + 1
        }
    };
    let alphabet = Alphabet::new(p).map_err(|e| e.to_string())?;
    lines
        .into_iter()
        .map(|(line, s)| Word::parse(s, alphabet).map_err(|e| format!("line {line}: {e}")))
        .collect()
}

fn cmd_verify(args: &VerifyArgs, stdin: &mut dyn BufRead, out: &mut dyn Write) -> CmdResult {
    if let Some(p) = args.p {
        check_text_alphabet(p)?;
    }
    let mut text = String::new();
    match &args.input {
        Some(path) => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?
        }
        None => {
            stdin.read_to_string(&mut text)?;
        }
    }
    let words = parse_words(&text, args.p).map_err(Failure::usage)?;
    let first = words
        .first()
        .ok_or_else(|| Failure::usage("no words in input"))?;
    let (alphabet, n) = (first.alphabet(), first.len());
    let ground: Option<HashSet<Word>> = match args.ground_set {
        GroundSetArg::None => None,
        GroundSetArg::Full => Some(all_words(alphabet, n)?.into_iter().collect()),
        GroundSetArg::Parity => {
            if !alphabet.is_binary() {
                return Err(Failure::usage("--ground-set parity needs binary input"));
            }
            Some(
                parity_class_words(n, first.parity()?)?
                    .into_iter()
                    .collect(),
            )
        }
    };
    let report = verify_terms(&words, args.k, ground.as_ref());
    match args.report {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &ReportJson::from(&report))
                .map_err(|e| Failure::from(std::io::Error::from(e)))?;
            writeln!(out)?;
        }
        ReportFormat::Text => write_text_report(out, &report, words.len())?,
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn write_text_report(
    out: &mut dyn Write,
    report: &VerificationReport,
    terms: usize,
) -> std::io::Result<()> {
    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
    writeln!(out, "terms: {terms}")?;
    writeln!(out, "ground set: {} words", report.ground_set_size)?;
    writeln!(out, "G1 coverage:    {}", verdict(report.g1_pass))?;
    writeln!(out, "G2 adjacency:   {}", verdict(report.g2_pass))?;
    writeln!(out, "G3 distinct:    {}", verdict(report.g3_pass))?;
    if let Some(v) = report.first_violation() {
        writeln!(out, "first violation: {v}")?;
    }
    for note in &report.notes {
        writeln!(out, "note: {note}")?;
    }
    writeln!(
        out,
        "result: {}",
        if report.passed() { "PASS" } else { "FAIL" }
    )
}

fn cmd_lambda(args: &LambdaArgs, out: &mut dyn Write) -> CmdResult {
    let (p, n, k) = (args.p, args.n, args.k);
    let tag = classify(p, n, k)?;
    let lambda = lambda_max(p, n, k)?;
    if !args.oracle {
        writeln!(out, "case {}, lambda = {lambda}", tag.case)?;
        return Ok(EXIT_OK);
    }
    match oracle_lambda(p, n, k, args.budget)? {
        OracleOutcome::Exact { length, nodes, .. } => {
            let verdict = if length as u64 == lambda {
                "MATCH"
            } else {
                "MISMATCH"
            };
            writeln!(
                out,
                "case {}, lambda = {lambda}, oracle = {length}, {verdict}",
                tag.case
            )?;
            writeln!(out, "search nodes: {nodes}")?;
            Ok(if verdict == "MATCH" {
                EXIT_OK
            } else {
                EXIT_FAILURE
            })
        }
        OracleOutcome::Inconclusive { best_so_far, nodes } => {
            writeln!(
                out,
                "case {}, lambda = {lambda}, oracle inconclusive after {nodes} nodes (best so far {best_so_far})",
                tag.case
            )?;
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}
