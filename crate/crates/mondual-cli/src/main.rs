//! mondual: compute duals, biduals, and reflexivity verdicts for finite
//! monoids given by Cayley tables.
//!
//! Exit codes: 0 success, 1 invalid input, 2 property violation, 64 usage.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use mondual::corpus;
use mondual::dual::{clifford_dual, enumerate_homs, DualMonoid};
use mondual::reflexivity::{self, check_reflexive, ReflexivityReport};
use mondual::FiniteMonoid;
use mondual_cli::format::{self, FileError};

const EXIT_INVALID: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "mondual",
    version,
    about = "Duality calculator for finite monoids",
    long_about = "Computes the dual monoid of circle-valued homomorphisms, the second \
                  dual, and the evaluation map for finite monoids given by Cayley tables."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a file describes a finite monoid
    Validate {
        /// Monoid file; "-" or absent reads stdin
        file: Option<PathBuf>,
    },
    /// Classify a monoid and report its idempotent and group structure
    Analyze {
        /// Monoid file; "-" or absent reads stdin
        file: Option<PathBuf>,
    },
    /// Compute the dual monoid of circle-valued homomorphisms
    Dual {
        /// Monoid file; "-" or absent reads stdin
        file: Option<PathBuf>,
        /// Hom search strategy; clifford requires an abelian inverse monoid
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Write here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the second dual and the evaluation map into it
    Bidual {
        /// Monoid file; "-" or absent reads stdin
        file: Option<PathBuf>,
        /// Write here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether the evaluation map into the second dual is bijective
    Reflexivity {
        /// Monoid file; "-" or absent reads stdin
        file: Option<PathBuf>,
    },
    /// Emit a named corpus monoid, e.g. `corpus dot_mu 2`
    #[command(after_help = CORPUS_HELP)]
    Corpus {
        /// Generator name followed by its arguments
        #[arg(required = true)]
        spec: Vec<String>,
        /// Write here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run every .monoid file in a directory through the property suite
    CheckAll {
        dir: PathBuf,
    },
}

const CORPUS_HELP: &str = "Generators:
  cyclic_group N               additive group Z/N
  chain_semilattice N          N-element chain under min
  boolean_semilattice K        subsets of a K-set under intersection
  dot_mu N                     N-th roots of unity with zero
  truncated_add N              {0..N} under capped addition
  symmetric_inverse_monoid N   partial injections on N points (N <= 3)
  strong_semilattice I         canned strong semilattice of groups, I in 1..=3
  direct_product SPEC SPEC     product of two generator specs
  adjoin_zero SPEC             a fresh absorbing zero below a generator spec

Example: mondual corpus direct_product cyclic_group 2 chain_semilattice 3";

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// clifford when the input is abelian inverse, brute otherwise
    Auto,
    /// backtracking search over all circle-valued assignments
    Brute,
    /// assemble homs from semilattice characters and group characters
    Clifford,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, FileError> {
    match command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Analyze { file } => cmd_analyze(&file),
        Command::Dual {
            file,
            method,
            output,
        } => cmd_dual(&file, method, &output),
        Command::Bidual { file, output } => cmd_bidual(&file, &output),
        Command::Reflexivity { file } => cmd_reflexivity(&file),
        Command::Corpus { spec, output } => cmd_corpus(&spec, &output),
        Command::CheckAll { dir } => cmd_check_all(&dir),
    }
}

fn read_monoid(file: &Option<PathBuf>) -> Result<FiniteMonoid, FileError> {
    let text = match file {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    format::parse_monoid_str(&text)
}

fn write_output(output: &Option<PathBuf>, text: &str) -> Result<(), FileError> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_validate(file: &Option<PathBuf>) -> Result<ExitCode, FileError> {
    match read_monoid(file) {
        Ok(m) => {
            println!("valid: yes");
            println!("size: {}", m.size());
            println!("unit: {}", m.label(m.unit()));
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ FileError::Io(_)) => Err(e),
        Err(e) => {
            println!("valid: no");
            println!("error: {e}");
            Ok(ExitCode::from(EXIT_INVALID))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_analyze(file: &Option<PathBuf>) -> Result<ExitCode, FileError> {
    let m = read_monoid(file)?;
    println!("size: {}", m.size());
    println!("unit: {}", m.label(m.unit()));
    match m.abelian_witness() {
        None => println!("abelian: yes"),
        Some((x, y)) => println!(
            "abelian: no ({} and {} do not commute)",
            m.label(x),
            m.label(y)
        ),
    }
    match m.inverse_witness() {
        None => println!("inverse: yes"),
        Some((x, count)) => println!(
            "inverse: no (element {} has {} inverses)",
            m.label(x),
            count
        ),
    }
    println!("group: {}", yes_no(m.is_group()));
    println!("semilattice: {}", yes_no(m.is_semilattice()));
    let clifford = m.is_clifford().unwrap_or(false);
    println!("clifford: {}", yes_no(clifford));
    let idempotent_labels: Vec<&str> = m.idempotents().iter().map(|&e| m.label(e)).collect();
    println!("idempotents: {}", idempotent_labels.join(" "));
    if clifford {
        let dec = m.clifford_decomposition()?;
        println!("hasse:");
        for (e, f) in dec.hasse_covers() {
            println!("{} < {}", m.label(e), m.label(f));
        }
        println!("groups:");
        for (&e, members) in &dec.groups {
            let labels: Vec<&str> = members.iter().map(|&x| m.label(x)).collect();
            println!("H[{}]: {}", m.label(e), labels.join(" "));
        }
        println!("pi:");
        for x in 0..m.size() {
            println!("{} -> {}", m.label(x), m.label(dec.pi[x]));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn compute_dual(m: &FiniteMonoid, method: Method) -> Result<DualMonoid, FileError> {
    let dual = match method {
        Method::Brute => enumerate_homs(m)?,
        Method::Clifford => clifford_dual(m)?,
        Method::Auto => {
            if m.abelian_witness().is_none() && m.inverse_witness().is_none() {
                clifford_dual(m)?
            } else {
                enumerate_homs(m)?
            }
        }
    };
    Ok(dual)
}

fn cmd_dual(
    file: &Option<PathBuf>,
    method: Method,
    output: &Option<PathBuf>,
) -> Result<ExitCode, FileError> {
    let m = read_monoid(file)?;
    let dual = compute_dual(&m, method)?;
    write_output(output, &format::serialize_dual(&dual))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_bidual(file: &Option<PathBuf>, output: &Option<PathBuf>) -> Result<ExitCode, FileError> {
    let m = read_monoid(file)?;
    let dual = enumerate_homs(&m)?;
    let (bidual, delta) = reflexivity::delta(&m, &dual)?;
    write_output(output, &format::serialize_bidual(&bidual, &delta))?;
    Ok(ExitCode::SUCCESS)
}

fn print_report(m: &FiniteMonoid, report: &ReflexivityReport) {
    println!("monoid size: {}", report.monoid_size);
    println!("dual size: {}", report.dual_size);
    println!("bidual size: {}", report.bidual_size);
    println!(
        "predicted: {}",
        if report.predicted {
            "reflexive"
        } else {
            "not reflexive"
        }
    );
    if let Some((x, y)) = report.non_abelian_pair {
        println!(
            "reason: not abelian: {} and {} do not commute",
            m.label(x),
            m.label(y)
        );
    }
    if let Some((x, count)) = report.non_inverse_element {
        println!(
            "reason: not inverse: element {} has {} inverses",
            m.label(x),
            count
        );
    }
    println!(
        "verdict: {}",
        if report.verdict {
            "reflexive"
        } else {
            "not reflexive"
        }
    );
    match report.merged_pair {
        None => println!("delta injective: yes"),
        Some((x, y)) => println!(
            "delta injective: no ({} and {} are merged)",
            m.label(x),
            m.label(y)
        ),
    }
    match report.missed_hom {
        None => println!("delta surjective: yes"),
        Some(h) => println!(
            "delta surjective: no ({} is unreached)",
            report.delta.target.label(h)
        ),
    }
    if report.verdict == report.predicted {
        println!("theorem check: verdict matches structural prediction");
    } else {
        println!("theorem check: VIOLATION: verdict contradicts structural prediction");
    }
    println!(
        "machine: size={} dual={} bidual={} predicted={} verdict={} injective={} surjective={} agree={}",
        report.monoid_size,
        report.dual_size,
        report.bidual_size,
        report.predicted,
        report.verdict,
        report.is_injective,
        report.is_surjective,
        report.verdict == report.predicted
    );
}

fn cmd_reflexivity(file: &Option<PathBuf>) -> Result<ExitCode, FileError> {
    let m = read_monoid(file)?;
    let report = check_reflexive(&m)?;
    print_report(&m, &report);
    if report.verdict == report.predicted {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VIOLATION))
    }
}

fn spec_error(message: impl Into<String>) -> FileError {
    FileError::Invalid(mondual::Error::InvalidParameter(message.into()))
}

fn parse_corpus_spec(tokens: &[String], pos: &mut usize) -> Result<FiniteMonoid, FileError> {
    let name = tokens
        .get(*pos)
        .ok_or_else(|| spec_error("expected a generator name"))?
        .clone();
    *pos += 1;
    let mut number = |what: &str| -> Result<usize, FileError> {
        let token = tokens
            .get(*pos)
            .ok_or_else(|| spec_error(format!("{name} needs {what}")))?;
        *pos += 1;
        token
            .parse()
            .map_err(|_| spec_error(format!("{name}: {token:?} is not a number")))
    };
    let m = match name.as_str() {
        "cyclic_group" => corpus::cyclic_group(number("an order")?)?,
        "chain_semilattice" => corpus::chain_semilattice(number("a length")?)?,
        "boolean_semilattice" => corpus::boolean_semilattice(number("a set size")? as u32)?,
        "dot_mu" => corpus::dot_mu(number("an order")? as u64)?,
        "truncated_add" => corpus::truncated_add(number("a threshold")?)?,
        "symmetric_inverse_monoid" => corpus::symmetric_inverse_monoid(number("a degree")?)?,
        "strong_semilattice" => {
            let i = number("an instance number")?;
            let examples = corpus::strong_semilattice_examples();
            if i == 0 || i > examples.len() {
                return Err(spec_error(format!(
                    "strong_semilattice instances are 1..={}",
                    examples.len()
                )));
            }
            examples.into_iter().nth(i - 1).unwrap().1
        }
        "direct_product" => {
            let a = parse_corpus_spec(tokens, pos)?;
            let b = parse_corpus_spec(tokens, pos)?;
            corpus::direct_product(&a, &b)?
        }
        "adjoin_zero" => {
            let a = parse_corpus_spec(tokens, pos)?;
            corpus::adjoin_zero(&a)?
        }
        other => return Err(spec_error(format!("unknown generator {other:?}"))),
    };
    Ok(m)
}

fn cmd_corpus(spec: &[String], output: &Option<PathBuf>) -> Result<ExitCode, FileError> {
    let mut pos = 0;
    let m = parse_corpus_spec(spec, &mut pos)?;
    if pos != spec.len() {
        return Err(spec_error(format!(
            "unexpected trailing arguments: {}",
            spec[pos..].join(" ")
        )));
    }
    let text = format!("# corpus: {}\n{}", spec.join(" "), format::serialize_monoid(&m));
    write_output(output, &text)?;
    Ok(ExitCode::SUCCESS)
}

/// Every property the engine guarantees for an arbitrary monoid, plus the
/// cardinality and agreement laws specific to abelian inverse ones. Returns
/// the violated properties; an empty list means the file passed.
fn property_violations(m: &FiniteMonoid) -> Result<Vec<String>, mondual::Error> {
    let mut violations = Vec::new();
    let report = check_reflexive(m)?;
    if report.verdict != report.predicted {
        violations.push("reflexivity verdict contradicts the structural prediction".into());
    }
    match reflexivity::dixmier_check(m) {
        Ok(true) => {}
        Ok(false) => violations.push("triple-dual identity fails".into()),
        Err(mondual::Error::SizeLimitExceeded { .. }) => {}
        Err(e) => return Err(e),
    }
    let dual = enumerate_homs(m)?;
    if dual.base.abelian_witness().is_some() || dual.base.inverse_witness().is_some() {
        violations.push("dual is not abelian inverse".into());
    }
    if report.predicted {
        let structured = clifford_dual(m)?;
        if structured.value_vectors() != dual.value_vectors() {
            violations.push("dual algorithms disagree".into());
        }
        if report.dual_size != report.monoid_size || report.bidual_size != report.monoid_size {
            violations.push("dual of an abelian inverse monoid changed size".into());
        }
    }
    Ok(violations)
}

fn cmd_check_all(dir: &Path) -> Result<ExitCode, FileError> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .collect::<io::Result<Vec<_>>>()?
        .into_iter()
        .map(|entry| entry.path())
        .filter(|p| p.extension().is_some_and(|e| e == "monoid"))
        .collect();
    paths.sort();
    let mut ok = 0usize;
    let mut invalid = 0usize;
    let mut violated = 0usize;
    for path in &paths {
        let name = path.file_name().unwrap_or_default().to_string_lossy();
        match format::parse_monoid_file(path).and_then(|m| Ok(property_violations(&m)?)) {
            Ok(violations) if violations.is_empty() => {
                ok += 1;
                println!("{name}: ok");
            }
            Ok(violations) => {
                violated += 1;
                println!("{name}: FAIL ({})", violations.join("; "));
            }
            Err(e) => {
                invalid += 1;
                println!("{name}: invalid ({e})");
            }
        }
    }
    println!(
        "checked {} files: {ok} ok, {violated} violated, {invalid} invalid",
        paths.len()
    );
    if violated > 0 {
        Ok(ExitCode::from(EXIT_VIOLATION))
    } else if invalid > 0 {
        Ok(ExitCode::from(EXIT_INVALID))
    } else {
        Ok(ExitCode::SUCCESS)
    }
}
