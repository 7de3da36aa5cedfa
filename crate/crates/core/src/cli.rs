//! Command-line front end shared by the `hindi-lemma` binary and tests.
//!
//! Exit codes: 0 success, 1 accuracy below `--min-accuracy`, 2 I/O error
//! (including usage errors), 3 malformed data file.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::devanagari::decode;
use crate::error::Error;
use crate::eval::{evaluate, load_gold};
use crate::lemmatizer::{lemmatize, Lemmatizer, Provenance, TextToken, TokenOutcome};
use crate::lexicon::Lexicon;
use crate::miner::{emit_rule_file, load_pairs, mine_candidates};
use crate::rules::RuleSet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_THRESHOLD: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_DATA: i32 = 3;

/// Environment variable naming the default data directory.
pub const DATA_DIR_ENV: &str = "HINDI_LEMMA_DATA";

#[derive(Debug, Parser)]
#[command(name = "hindi-lemma", version, about = "Rule-based Hindi lemmatizer")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lemmatize every token of a file or standard input.
    Lemmatize {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        /// Input file; standard input when omitted or `-`.
        input: Option<PathBuf>,
    },
    /// Score the lemmatizer against a gold file.
    Eval {
        #[command(flatten)]
        data: DataArgs,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
        /// Gold file (`word<TAB>lemma`); defaults to gold.tsv in the data directory.
        #[arg(long)]
        gold: Option<PathBuf>,
        /// Exit with status 1 when accuracy (percent) is below this value.
        #[arg(long)]
        min_accuracy: Option<f64>,
    },
    /// Check rule and lexicon files and report conflicts and redundancy.
    Validate {
        #[command(flatten)]
        data: DataArgs,
    },
    /// Propose suffix rules from `inflected<TAB>root` pairs.
    Mine {
        #[arg(long, env = DATA_DIR_ENV)]
        data_dir: Option<PathBuf>,
        /// Pairs file; defaults to pairs.tsv in the data directory.
        #[arg(long)]
        pairs: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        min_support: u64,
    },
}

#[derive(Debug, Args)]
pub struct DataArgs {
    /// Directory holding rules.tsv and lexicon.tsv.
    #[arg(long, env = DATA_DIR_ENV)]
    pub data_dir: Option<PathBuf>,
    #[arg(long)]
    pub rules: Option<PathBuf>,
    #[arg(long)]
    pub lexicon: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    #[value(alias = "json-lines")]
    Jsonl,
    Pretty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Stdin,
    Path(PathBuf),
}

/// Resolved settings for commands that need the rule and lexicon files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub rules_path: PathBuf,
    pub lexicon_path: PathBuf,
    pub output_format: Format,
    pub input: Input,
}

impl CliConfig {
    fn resolve(data: &DataArgs, output_format: Format, input: Option<&Path>) -> Self {
        let dir = data_dir(data.data_dir.as_deref());
        CliConfig {
            rules_path: data.rules.clone().unwrap_or_else(|| dir.join("rules.tsv")),
            lexicon_path: data
                .lexicon
                .clone()
                .unwrap_or_else(|| dir.join("lexicon.tsv")),
            output_format,
            input: match input {
                None => Input::Stdin,
                Some(p) if p == Path::new("-") => Input::Stdin,
                Some(p) => Input::Path(p.to_owned()),
            },
        }
    }

    fn load(&self) -> Result<Lemmatizer, Failure> {
        let rules = read_data(&self.rules_path, RuleSet::load)?;
        let lexicon = read_data(&self.lexicon_path, Lexicon::load)?;
        Ok(Lemmatizer::new(lexicon, rules))
    }
}

fn data_dir(flag: Option<&Path>) -> PathBuf {
    flag.map(Path::to_owned)
        .unwrap_or_else(crate::data::source_dir)
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Data(String),
    Threshold(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Io(_) => EXIT_IO,
            Failure::Data(_) => EXIT_DATA,
            Failure::Threshold(_) => EXIT_THRESHOLD,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Io(m) | Failure::Data(m) | Failure::Threshold(m) => m,
        }
    }
}

fn io_failure(what: &Path, err: io::Error) -> Failure {
    Failure::Io(format!("{}: {err}", what.display()))
}

fn write_failure(err: io::Error) -> Failure {
    Failure::Io(format!("writing output: {err}"))
}

/// Reads and parses a data file; I/O problems map to exit 2, content
/// problems to exit 3.
fn read_data<T>(path: &Path, parse: impl FnOnce(&str) -> crate::Result<T>) -> Result<T, Failure> {
    let bytes = std::fs::read(path).map_err(|e| io_failure(path, e))?;
    let text = decode(&bytes).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    parse(text).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
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
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return EXIT_IO;
            }
            let _ = stdout.write_all(text.as_bytes());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "hindi-lemma: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    match command {
        Command::Lemmatize {
            data,
            format,
            input,
        } => {
            let config = CliConfig::resolve(&data, format, input.as_deref());
            cmd_lemmatize(&config, stdin, stdout)
        }
        Command::Eval {
            data,
            format,
            gold,
            min_accuracy,
        } => {
            let config = CliConfig::resolve(&data, format, None);
            let gold = gold.unwrap_or_else(|| data_dir(data.data_dir.as_deref()).join("gold.tsv"));
            cmd_eval(&config, &gold, min_accuracy, stdout)
        }
        Command::Validate { data } => {
            let config = CliConfig::resolve(&data, Format::Pretty, None);
            cmd_validate(&config, stdout, stderr)
        }
        Command::Mine {
            data_dir: dir,
            pairs,
            min_support,
        } => {
            let pairs = pairs.unwrap_or_else(|| data_dir(dir.as_deref()).join("pairs.tsv"));
            cmd_mine(&pairs, min_support as usize, stdout, stderr)
        }
    }
}

#[derive(Serialize)]
struct TokenRecord<'a> {
    token: &'a str,
    lemma: Option<&'a str>,
    suffix: Option<&'a str>,
    appended: Option<&'a str>,
    provenance: &'static str,
}

impl<'a> From<&'a TextToken> for TokenRecord<'a> {
    fn from(t: &'a TextToken) -> Self {
        match &t.outcome {
            TokenOutcome::Lemma(r) => TokenRecord {
                token: &t.token,
                lemma: Some(&r.lemma),
                suffix: r.removed_suffix.as_deref(),
                appended: r.appended.as_deref(),
                provenance: r.provenance.as_str(),
            },
            TokenOutcome::Skipped => TokenRecord {
                token: &t.token,
                lemma: None,
                suffix: None,
                appended: None,
                provenance: "skipped",
            },
        }
    }
}

fn write_record(out: &mut dyn Write, format: Format, rec: &TokenRecord<'_>) -> io::Result<()> {
    let dash = |v: Option<&str>| v.unwrap_or("-").to_owned();
    match format {
        Format::Tsv => writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            rec.token,
            dash(rec.lemma),
            dash(rec.suffix),
            dash(rec.appended),
            rec.provenance
        ),
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, rec).map_err(io::Error::other)?;
            writeln!(out)
        }
        Format::Pretty => match rec.lemma {
            Some(lemma) => {
                let change = match (rec.suffix, rec.appended) {
                    (Some(s), Some(a)) => format!("-{s} +{a}"),
                    (Some(s), None) => format!("-{s}"),
                    _ => "-".to_owned(),
                };
                writeln!(
                    out,
                    "{} → {}  [{}, {}]",
                    rec.token, lemma, change, rec.provenance
                )
            }
            None => writeln!(out, "{}  [skipped]", rec.token),
        },
    }
}

/// Streams the input line by line, writing one record per token.
pub fn cmd_lemmatize_with(
    lemmatizer: &Lemmatizer,
    format: Format,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> io::Result<usize> {
    let mut buf = Vec::new();
    let mut offset = 0usize;
    let mut count = 0usize;
    loop {
        buf.clear();
        let n = input.read_until(b'\n', &mut buf)?;
        if n == 0 {
            break;
        }
        let line = decode(&buf).map_err(|e| match e {
            Error::Decode { offset: at } => io::Error::new(
                io::ErrorKind::InvalidData,
                format!("invalid UTF-8 at byte offset {}", offset + at),
            ),
            other => io::Error::new(io::ErrorKind::InvalidData, other.to_string()),
        })?;
        for token in lemmatizer.lemmatize_text(line) {
            write_record(out, format, &TokenRecord::from(&token))?;
            count += 1;
        }
        offset += n;
    }
    out.flush()?;
    Ok(count)
}

fn cmd_lemmatize(
    config: &CliConfig,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let lemmatizer = config.load()?;
    let result = match &config.input {
        Input::Stdin => cmd_lemmatize_with(&lemmatizer, config.output_format, stdin, stdout)
            .map_err(|e| Failure::Io(format!("<stdin>: {e}"))),
        Input::Path(path) => {
            let file = File::open(path).map_err(|e| io_failure(path, e))?;
            cmd_lemmatize_with(
                &lemmatizer,
                config.output_format,
                &mut BufReader::new(file),
                stdout,
            )
            .map_err(|e| io_failure(path, e))
        }
    };
    result.map(|_| ())
}

fn cmd_eval(
    config: &CliConfig,
    gold_path: &Path,
    min_accuracy: Option<f64>,
    stdout: &mut dyn Write,
) -> Result<(), Failure> {
    let lemmatizer = config.load()?;
    let gold = read_data(gold_path, load_gold)?;
    let report = evaluate(&gold, lemmatizer.lexicon(), lemmatizer.rules())
        .map_err(|e| Failure::Data(format!("{}: {e}", gold_path.display())))?;
    let rendered = match config.output_format {
        Format::Jsonl => report.render_jsonl(),
        Format::Tsv | Format::Pretty => report.render_text(),
    };
    stdout
        .write_all(rendered.as_bytes())
        .map_err(write_failure)?;
    if let Some(min) = min_accuracy {
        if !report.accuracy().at_least(min) {
            return Err(Failure::Threshold(format!(
                "accuracy {} is below the required {min}%",
                report.accuracy()
            )));
        }
    }
    Ok(())
}

fn cmd_validate(
    config: &CliConfig,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    let lemmatizer = config.load()?;
    let (lex, rules) = (lemmatizer.lexicon(), lemmatizer.rules());
    let protected = lex.entries().filter(|e| e.is_protected()).count();

    let mut report = String::new();
    report.push_str(&format!("rules:    {}\n", rules.len()));
    report.push_str(&format!(
        "lexicon:  {} ({} protected, {} exceptions)\n",
        lex.len(),
        protected,
        lex.len() - protected
    ));

    let mut warnings = Vec::new();
    for (long, short) in rules.redundant_pairs() {
        warnings.push(format!(
            "rule '{}' -> '{}' behaves like the shorter rule '{}' -> '{}'",
            long.suffix(),
            long.replacement(),
            short.suffix(),
            short.replacement()
        ));
    }
    let empty = Lexicon::new();
    for entry in lex.entries() {
        let Ok(by_rules) = lemmatize(&entry.surface, &empty, rules) else {
            continue;
        };
        if by_rules.provenance == Provenance::Rule && by_rules.lemma == entry.lemma {
            warnings.push(format!(
                "lexicon entry {} -> {} is already produced by rule '{}'",
                entry.surface,
                entry.lemma,
                by_rules.removed_suffix.as_deref().unwrap_or_default()
            ));
        }
    }
    report.push_str(&format!("warnings: {}\n", warnings.len()));
    stdout.write_all(report.as_bytes()).map_err(write_failure)?;
    for w in warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    Ok(())
}

fn cmd_mine(
    pairs_path: &Path,
    min_support: usize,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), Failure> {
    let pairs = read_data(pairs_path, load_pairs)?;
    let candidates = mine_candidates(pairs.iter().map(|(a, b)| (a, b)));
    let _ = writeln!(
        stderr,
        "{} candidates from {} pairs",
        candidates.len(),
        pairs.len()
    );
    stdout
        .write_all(emit_rule_file(&candidates, min_support).as_bytes())
        .map_err(write_failure)
}
