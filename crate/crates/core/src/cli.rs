//! Command-line front end.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::blade::SignedBlade;
use crate::enumerate::{enumerate, Block, TaxonomyReport};
use crate::error::Error;
use crate::set::GeneratorList;
use crate::tables::table_rows;
use crate::taxonomy::{classify, equal, equivalent, presentation_isomorphic, similar, GroupRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "basis-groups",
    version,
    about = "Clifford basis-group arithmetic and choir/band taxonomy of Cl(n,0) subgroups"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

/// Blade literals may start with `-`, so options go before them.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Geometric product of two blade literals.
    Mul {
        /// Dimension; defaults to the largest index used.
        #[arg(long)]
        n: Option<u8>,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// List the group generated by blade literals.
    Gen {
        #[arg(long)]
        n: Option<u8>,
        /// Do not adjoin -1.
        #[arg(long)]
        no_minus_one: bool,
        #[arg(allow_hyphen_values = true)]
        generators: Vec<String>,
    },
    /// Classify a presentation as choir or band.
    Classify {
        #[arg(long)]
        n: Option<u8>,
        #[arg(long)]
        no_minus_one: bool,
        #[arg(allow_hyphen_values = true)]
        generators: Vec<String>,
    },
    /// Compare two presentations: `iso e1 e2 -- e1 e12`.
    Iso {
        #[arg(long)]
        n: Option<u8>,
        #[arg(long)]
        no_minus_one: bool,
        /// Two generator lists separated by `--`.
        #[arg(allow_hyphen_values = true, value_name = "GENS -- GENS")]
        presentations: Vec<String>,
    },
    /// Enumerate all similarity classes.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        n: u8,
        #[arg(long, default_value_t = 3)]
        max_gens: usize,
    },
    /// Reproduce one of the ten reference tables for Cl(3,0).
    Tables {
        #[arg(long)]
        id: u8,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Usage(#[from] Error),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Smallest dimension holding every index in the literals.
fn infer_dim<S: AsRef<str>>(literals: &[S]) -> u8 {
    literals
        .iter()
        .flat_map(|s| {
            let s = s.as_ref();
            let body = s.trim_start_matches(['+', '-']);
            body.strip_prefix('e')
                .unwrap_or("")
                .bytes()
                .filter(u8::is_ascii_digit)
                .map(|b| b - b'0')
                .collect::<Vec<_>>()
        })
        .max()
        .unwrap_or(1)
        .max(1)
}

fn checked(record: GroupRecord) -> Result<GroupRecord, CliError> {
    record.check_invariants().map_err(CliError::Invariant)?;
    Ok(record)
}

const CLASS_COLUMNS: [&str; 9] = [
    "pattern",
    "n",
    "order",
    "class",
    "signature",
    "target",
    "disorder",
    "chord",
    "beat",
];

fn class_row(r: &GroupRecord) -> Vec<String> {
    vec![
        r.pattern.to_string(),
        r.n.to_string(),
        r.order().to_string(),
        r.verdict.to_string(),
        r.signature_string(),
        r.target.to_string(),
        r.disorder.to_string(),
        r.chord_string(),
        r.beat_string(),
    ]
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_record_text(out: &mut dyn Write, r: &GroupRecord) -> io::Result<()> {
    writeln!(out, "pattern: {}", r.pattern)?;
    writeln!(out, "generators: {}", r.generators.to_literals().join(" "))?;
    writeln!(
        out,
        "minus one adjoined: {}",
        r.generators.adjoin_minus_one()
    )?;
    writeln!(out, "n: {}", r.n)?;
    writeln!(out, "order: {}", r.order())?;
    writeln!(out, "class: {}", r.verdict)?;
    writeln!(out, "signature: {}", r.signature_string())?;
    writeln!(out, "target: {}", r.target)?;
    writeln!(out, "disorder (Φ): {}", r.disorder)?;
    let undefined = |s: String| {
        if s.is_empty() {
            "undefined".to_string()
        } else {
            s
        }
    };
    writeln!(out, "chord (X): {}", undefined(r.chord_string()))?;
    writeln!(out, "beat (B): {}", undefined(r.beat_string()))?;
    writeln!(out, "closure: {}", r.closure.to_literals().join(" "))
}

fn write_blocks(
    out: &mut dyn Write,
    report: &TaxonomyReport,
    title: &str,
    blocks: &[Block],
) -> io::Result<()> {
    for (k, b) in blocks.iter().enumerate() {
        let names: Vec<String> = report
            .block_patterns(b)
            .iter()
            .map(|p| p.to_string())
            .collect();
        writeln!(
            out,
            "{title} {k} led by {}: {}",
            report.classes[b.leader].pattern,
            names.join(", ")
        )?;
    }
    Ok(())
}

fn write_report_text(out: &mut dyn Write, report: &TaxonomyReport) -> io::Result<()> {
    writeln!(
        out,
        "Cl({},0), at most {} generators: {} classes ({} choirs, {} bands)",
        report.dim, report.max_gens, report.counts.total, report.counts.choirs, report.counts.bands
    )?;
    let rows: Vec<Vec<String>> = report.classes.iter().map(class_row).collect();
    let table = crate::tables::Table {
        id: 0,
        caption: String::new(),
        headers: CLASS_COLUMNS.iter().map(|s| s.to_string()).collect(),
        rows,
        footnotes: Vec::new(),
    };
    // skip the caption line of the table renderer
    for line in table.to_text().lines().skip(1) {
        writeln!(out, "{line}")?;
    }
    write_blocks(out, report, "mode", &report.modes)?;
    write_blocks(out, report, "rhythm", &report.rhythms)?;
    for note in &report.notes {
        writeln!(out, "{note}")?;
    }
    Ok(())
}

fn generator_list(
    n: Option<u8>,
    literals: &[String],
    adjoin: bool,
) -> Result<GeneratorList, Error> {
    let dim = n.unwrap_or_else(|| infer_dim(literals));
    GeneratorList::parse(dim, literals, adjoin)
}

#[derive(Serialize)]
struct Verdicts {
    isomorphic: bool,
    similar: bool,
    equivalent: bool,
    equal: bool,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Mul { n, a, b } => {
            let dim = n.unwrap_or_else(|| infer_dim(&[a, b]));
            let product = SignedBlade::parse(a, dim)?.mul(SignedBlade::parse(b, dim)?)?;
            match format {
                Format::Json => write_json(out, &product.to_string())?,
                _ => writeln!(out, "{product}")?,
            }
        }
        Command::Gen {
            n,
            no_minus_one,
            generators,
        } => {
            let closure = generator_list(*n, generators, !no_minus_one)?.closure();
            match format {
                Format::Text => writeln!(out, "{}", closure.to_literals().join(" "))?,
                Format::Csv => {
                    let rows: Vec<Vec<String>> =
                        closure.to_literals().into_iter().map(|e| vec![e]).collect();
                    write_csv(out, &["element"], &rows)?
                }
                Format::Json => write_json(out, &closure)?,
            }
        }
        Command::Classify {
            n,
            no_minus_one,
            generators,
        } => {
            let record = checked(classify(&generator_list(*n, generators, !no_minus_one)?))?;
            match format {
                Format::Text => write_record_text(out, &record)?,
                Format::Csv => write_csv(out, &CLASS_COLUMNS, &[class_row(&record)])?,
                Format::Json => write_json(out, &record)?,
            }
        }
        Command::Iso {
            n,
            no_minus_one,
            presentations,
        } => {
            let split = presentations
                .iter()
                .position(|s| s == "--")
                .ok_or_else(|| {
                    Error::InvalidGenerators(
                        "expected two generator lists separated by `--`".into(),
                    )
                })?;
            let (left, right) = (&presentations[..split], &presentations[split + 1..]);
            let dim = n.unwrap_or_else(|| infer_dim(&[left, right].concat()));
            let a = generator_list(Some(dim), left, !no_minus_one)?;
            let b = generator_list(Some(dim), right, !no_minus_one)?;
            let (ca, cb) = (a.closure(), b.closure());
            let v = Verdicts {
                isomorphic: presentation_isomorphic(&a, &b),
                similar: similar(&a, &b),
                equivalent: equivalent(&ca, &cb),
                equal: equal(&ca, &cb),
            };
            let lines = [
                ("isomorphic", "≅", v.isomorphic),
                ("similar", "≈", v.similar),
                ("equivalent", "≡", v.equivalent),
                ("equal", "=", v.equal),
            ];
            match format {
                Format::Text => {
                    for (name, symbol, holds) in lines {
                        writeln!(out, "{name} ({symbol}): {holds}")?;
                    }
                }
                Format::Csv => {
                    let rows: Vec<Vec<String>> = lines
                        .iter()
                        .map(|(name, symbol, holds)| {
                            vec![name.to_string(), symbol.to_string(), holds.to_string()]
                        })
                        .collect();
                    write_csv(out, &["relation", "symbol", "holds"], &rows)?
                }
                Format::Json => write_json(out, &v)?,
            }
        }
        Command::Enumerate { n, max_gens } => {
            let report = enumerate(*n, *max_gens)?;
            for r in &report.classes {
                r.check_invariants().map_err(CliError::Invariant)?;
            }
            match format {
                Format::Text => write_report_text(out, &report)?,
                Format::Csv => {
                    let rows: Vec<Vec<String>> = report.classes.iter().map(class_row).collect();
                    write_csv(out, &CLASS_COLUMNS, &rows)?
                }
                Format::Json => write_json(out, &report)?,
            }
        }
        Command::Tables { id } => {
            if !(1..=10).contains(id) {
                return Err(Error::TableOutOfRange(*id).into());
            }
            let report = enumerate(3, 3)?;
            let table = table_rows(&report, *id)?;
            match format {
                Format::Text => out.write_all(table.to_text().as_bytes())?,
                Format::Csv => out.write_all(table.to_csv()?.as_bytes())?,
                Format::Json => write_json(out, &table)?,
            }
        }
    }
    Ok(())
}

/// Parse `args` (program name first), run, and return the exit status:
/// 0 on success, 2 on usage errors, 1 on invariant violations.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match run(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
