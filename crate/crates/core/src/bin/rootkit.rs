//! Command-line front end: describe, classify, verify, witness.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 precondition failure.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rootkit::classify::{is_cospecial, is_special, verify_theorem};
use rootkit::report::{DescribeDocument, ReportDocument};
use rootkit::suite::check_all;
use rootkit::weyl::replay;
use rootkit::witness::dominant_witness;
use rootkit::{CartanType, Error, RootSystem};

#[derive(Parser)]
#[command(name = "rootkit", version, about = "Root systems, Levi-Weyl dominance and quasi-constant weights")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump roots, simple roots, form, highest roots and heights.
    Describe {
        /// Cartan type such as A3, B4, E8, G2.
        ctype: String,
        #[arg(long, value_enum, default_value_t = DescribeFormat::Text)]
        format: DescribeFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One row per simple root: multiplicities and the three predicates.
    Classify {
        ctype: String,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive check over every admissible type up to a rank.
    Verify {
        #[arg(long, env = "ROOTKIT_MAX_RANK", default_value_t = 8,
              value_parser = clap::value_parser!(u32).range(1..))]
        max_rank: u32,
        /// Comma-separated types to check instead of all types up to --max-rank.
        #[arg(long, value_delimiter = ',')]
        types: Option<Vec<String>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Levi-Weyl word carrying a simple root to its dominant conjugate.
    Witness {
        ctype: String,
        /// 0-based simple-root index (Bourbaki label is index + 1).
        index: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DescribeFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Table,
    Json,
    Csv,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NeitherSpecialNorCospecial(_) | Error::NotSpecial(_) => 3,
            Error::Parse(_) | Error::InadmissibleRank { .. } | Error::BadIndex { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn parse_type(s: &str) -> Result<CartanType, Failure> {
    Ok(s.parse::<CartanType>()?)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure {
            code: 2,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn describe(ctype: &str, format: DescribeFormat, out: Option<&PathBuf>) -> Result<(), Failure> {
    let s = RootSystem::build(parse_type(ctype)?);
    let doc = DescribeDocument::new(&s);
    let text = match format {
        DescribeFormat::Text => doc.to_text(),
        DescribeFormat::Json => doc.to_json() + "\n",
    };
    emit(&text, out)
}

fn classify(ctype: &str, format: TableFormat, out: Option<&PathBuf>) -> Result<(), Failure> {
    let s = RootSystem::build(parse_type(ctype)?);
    let doc = ReportDocument::from_report(&s, &verify_theorem(&s))?;
    let text = match format {
        TableFormat::Table => doc.to_table(),
        TableFormat::Json => doc.to_json() + "\n",
        TableFormat::Csv => doc.to_csv(),
    };
    emit(&text, out)?;
    if doc.all_equivalent {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!("{ctype}: predicates disagree on some row"),
        })
    }
}

fn verify(max_rank: u32, types: Option<&[String]>, out: Option<&PathBuf>) -> Result<(), Failure> {
    let types = match types {
        Some(list) => list.iter().map(|t| parse_type(t.trim())).collect::<Result<Vec<_>, _>>()?,
        None => CartanType::all_up_to(max_rank as usize),
    };
    let checks = check_all(&types);
    let mut text = String::new();
    writeln!(
        text,
        "{:<5} {:>4} {:>8} {:>9} {:>11} {:>10} {:>10} {:>9} {:>9}  status",
        "type", "rows", "all-true", "all-false", "obstruction", "uniq-pair", "levi-mult", "witness", "ms"
    )
    .unwrap();
    for c in &checks {
        let all_true = c
            .rows
            .iter()
            .filter(|r| r.quasi_constant && r.special_or_cospecial() && r.dom_eq_levi_dom)
            .count();
        let all_false = c
            .rows
            .iter()
            .filter(|r| !r.quasi_constant && !r.special_or_cospecial() && !r.dom_eq_levi_dom)
            .count();
        writeln!(
            text,
            "{:<5} {:>4} {:>8} {:>9} {:>11} {:>10} {:>10} {:>9} {:>9}  {}",
            c.ctype.to_string(),
            c.rows.len(),
            all_true,
            all_false,
            c.obstruction_counterexamples,
            c.unique_pairing_violations,
            c.levi_multiplicity_violations,
            c.witness_failures,
            c.elapsed.as_millis(),
            if c.passed() { "ok" } else { "FAIL" }
        )
        .unwrap();
    }
    let failures = checks.iter().filter(|c| !c.passed()).count();
    writeln!(
        text,
        "\n{} systems checked, {} rows, {} failures",
        checks.len(),
        checks.iter().map(|c| c.rows.len()).sum::<usize>(),
        failures
    )
    .unwrap();
    emit(&text, out)?;
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!("{failures} systems failed verification"),
        })
    }
}

fn witness(ctype: &str, index: usize, out: Option<&PathBuf>) -> Result<(), Failure> {
    let s = RootSystem::build(parse_type(ctype)?);
    let w = dominant_witness(&s, index).map_err(|e| match e {
        Error::NeitherSpecialNorCospecial(i) => Failure {
            code: 3,
            message: format!(
                "{}: simple root α{} (index {i}) is neither special nor co-special; \
                 no word avoiding it carries it to its dominant conjugate",
                s.name(),
                i + 1
            ),
        },
        e => e.into(),
    })?;
    let trace = replay(&s, &w.word, &w.source)?;
    if trace.last() != Some(&w.target) || !w.word.avoids(index) {
        return Err(Error::WitnessFailed(index).into());
    }
    let kind = match (is_special(&s, index)?, is_cospecial(&s, index)?) {
        (true, true) => "special and co-special",
        (true, false) => "special",
        _ => "co-special",
    };
    let mut text = String::new();
    writeln!(text, "type {}, simple root α{} (index {index}) = {}, {kind}", s.name(), index + 1, w.source).unwrap();
    writeln!(text, "word (rightmost letter acts first): {}", w.word).unwrap();
    writeln!(text, "letters: {:?}", w.word.letters()).unwrap();
    writeln!(text, "replay:").unwrap();
    writeln!(text, "        {}", trace[0]).unwrap();
    for (letter, v) in w.word.letters().iter().rev().zip(&trace[1..]) {
        writeln!(text, "  s{letter:<3} → {v}").unwrap();
    }
    writeln!(text, "target dom(α{}) = {}  verified", index + 1, w.target).unwrap();
    emit(&text, out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result = match &cli.command {
        Command::Describe { ctype, format, out } => describe(ctype, *format, out.as_ref()),
        Command::Classify { ctype, format, out } => classify(ctype, *format, out.as_ref()),
        Command::Verify { max_rank, types, out } => verify(*max_rank, types.as_deref(), out.as_ref()),
        Command::Witness { ctype, index, out } => witness(ctype, *index, out.as_ref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("rootkit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
