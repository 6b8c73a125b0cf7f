//! Command-line front end.
//!
//! Every command produces a [`Sheet`]: named columns and rows of cells,
//! rendered as aligned text, CSV or JSON. Counts are emitted as decimal
//! strings in JSON so consumers never see a truncated 64-bit number.

use std::fmt::Write as _;
use std::io::{IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::asymptotics::{find_zstar, ratio_report, AsymptoticConstants, PrecisionPolicy};
use crate::board::{enumerate_counts_with_limit, initial_board, DEFAULT_STATE_LIMIT};
use crate::error::Error;
use crate::genfunc::w0_values;
use crate::recurrence::CountTable;
use crate::report::VerificationReport;
use crate::verify::{verify_all, VerifyConfig};
use crate::zero_threshold;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "pebbling",
    version,
    about = "Exact counts and asymptotics of chessboard pebbling configurations"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; text on a terminal, json otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Rows (k, m, G(k,m)) of the recurrence table.
    Table(TableArgs),
    /// Totals (k, G(k)).
    Sequence(SequenceArgs),
    /// Brute-force board counts next to the recurrence.
    Enumerate(EnumerateArgs),
    /// Root of S and the asymptotic constants as decimal strings.
    Constants(PrecisionArgs),
    /// Exact over asymptotic ratios.
    Asymptotic(AsymptoticArgs),
    /// Minimal configuration counts (l, W0(l)).
    W0(W0Args),
    /// Run every verification suite; nonzero exit on any failure.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 30)]
    pub k_max: usize,
    /// Largest m to list (defaults to every nonzero row).
    #[arg(long)]
    pub m_max: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct SequenceArgs {
    #[arg(long, default_value_t = 30)]
    pub k_max: usize,
}

#[derive(Debug, Clone, Args)]
pub struct EnumerateArgs {
    /// Starting arrangements m = 0..=m_max.
    #[arg(long, default_value_t = 0)]
    pub m_max: usize,
    /// Moves explored from each starting arrangement.
    #[arg(long, default_value_t = 9)]
    pub max_steps: usize,
    /// Stored boards before the search gives up.
    #[arg(long, default_value_t = DEFAULT_STATE_LIMIT)]
    pub state_limit: usize,
}

#[derive(Debug, Clone, Args)]
pub struct PrecisionArgs {
    /// Decimal places reported.
    #[arg(long, default_value_t = 15)]
    pub digits: usize,
    /// Truncation order of S (chosen from the tail bound when omitted).
    #[arg(long)]
    pub order: Option<usize>,
}

impl PrecisionArgs {
    fn policy(&self) -> PrecisionPolicy {
        let policy = PrecisionPolicy::new(self.digits);
        match self.order {
            Some(n) => policy.with_order(n),
            None => policy,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct AsymptoticArgs {
    #[arg(long, default_value_t = 200)]
    pub k_max: usize,
    #[arg(long, default_value_t = 1)]
    pub m_max: usize,
    /// Spacing of the listed k values.
    #[arg(long, default_value_t = 50)]
    pub step: usize,
    #[command(flatten)]
    pub precision: PrecisionArgs,
}

#[derive(Debug, Clone, Args)]
pub struct W0Args {
    #[arg(long, default_value_t = 20)]
    pub l_max: usize,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 80)]
    pub k_max: usize,
    #[arg(long, default_value_t = 10)]
    pub m_max: usize,
    /// Series order for the identity and coefficient suites.
    #[arg(long, default_value_t = 200)]
    pub order: usize,
    #[arg(long, default_value_t = 9)]
    pub max_steps: usize,
    #[arg(long, default_value_t = 20)]
    pub digits: usize,
}

// ---------------------------------------------------------------------------
// output

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    /// Small index, a JSON number.
    Index(i64),
    /// Possibly large integer, a JSON string.
    Count(String),
    Text(String),
    Flag(bool),
    Missing,
}

impl Value {
    fn plain(&self) -> String {
        match self {
            Value::Index(i) => i.to_string(),
            Value::Count(s) | Value::Text(s) => s.clone(),
            Value::Flag(b) => b.to_string(),
            Value::Missing => String::new(),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Index(i) => s.serialize_i64(*i),
            Value::Count(v) | Value::Text(v) => s.serialize_str(v),
            Value::Flag(b) => s.serialize_bool(*b),
            Value::Missing => s.serialize_none(),
        }
    }
}

/// Tabular command output with metadata lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sheet {
    pub title: String,
    pub meta: Vec<(String, Value)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

struct Row<'a>(&'a [&'static str], &'a [Value]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0.iter().zip(self.1) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

struct Rows<'a>(&'a Sheet);

impl Serialize for Rows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.rows.len()))?;
        for row in &self.0.rows {
            seq.serialize_element(&Row(&self.0.columns, row))?;
        }
        seq.end()
    }
}

impl Serialize for Sheet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.meta.len() + 2))?;
        map.serialize_entry("command", &self.title)?;
        for (k, v) in &self.meta {
            map.serialize_entry(k, v)?;
        }
        map.serialize_entry("rows", &Rows(self))?;
        map.end()
    }
}

impl Sheet {
    fn new(title: &str, columns: Vec<&'static str>) -> Self {
        Sheet {
            title: title.to_string(),
            meta: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    fn meta(mut self, key: &str, value: Value) -> Self {
        self.meta.push((key.to_string(), value));
        self
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let mut out = String::new();
        match format {
            OutputFormat::Json => {
                out = serde_json::to_string_pretty(self).expect("sheet serializes");
                out.push('\n');
            }
            OutputFormat::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.columns).expect("in-memory write");
                for row in &self.rows {
                    w.write_record(row.iter().map(Value::plain)).expect("in-memory write");
                }
                let bytes = w.into_inner().expect("in-memory flush");
                out = String::from_utf8(bytes).expect("fields are utf-8");
            }
            OutputFormat::Text => {
                for (k, v) in &self.meta {
                    let _ = writeln!(out, "# {k}: {}", v.plain());
                }
                let cells: Vec<Vec<String>> = self
                    .rows
                    .iter()
                    .map(|r| r.iter().map(Value::plain).collect())
                    .collect();
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|i| {
                        cells
                            .iter()
                            .map(|r| r[i].len())
                            .chain([self.columns[i].len()])
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let line = |items: Vec<&str>| {
                    let padded: Vec<String> = items
                        .iter()
                        .zip(&widths)
                        .map(|(s, w)| format!("{s:>w$}"))
                        .collect();
                    padded.join("  ").trim_end().to_string()
                };
                let _ = writeln!(out, "{}", line(self.columns.clone()));
                for r in &cells {
                    let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// commands

/// How a command ended, beyond its output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A verification check failed; carries the first counterexample.
    Failed(String),
    /// A resource ceiling was hit; output holds the completed part.
    Partial(String),
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub sheet: Sheet,
    pub status: Status,
}

impl Outcome {
    fn ok(sheet: Sheet) -> Self {
        Outcome {
            sheet,
            status: Status::Ok,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Ok => EXIT_OK,
            Status::Failed(_) => EXIT_VERIFY_FAILED,
            Status::Partial(_) => EXIT_RESOURCE,
        }
    }
}

fn idx(x: usize) -> Value {
    Value::Index(x as i64)
}

fn count(x: impl ToString) -> Value {
    Value::Count(x.to_string())
}

fn positive(name: &str, value: usize) -> Result<(), Error> {
    if value == 0 {
        return Err(Error::InvalidConfig(format!("--{name} must be positive")));
    }
    Ok(())
}

fn table_cmd(args: &TableArgs) -> Result<Outcome, Error> {
    positive("k-max", args.k_max)?;
    let table = CountTable::build(args.k_max);
    let mut sheet = Sheet::new("table", vec!["k", "m", "G"]);
    for (k, m, g) in table.entries() {
        if args.m_max.is_some_and(|top| m > top) || k <= zero_threshold(m) {
            continue;
        }
        sheet.rows.push(vec![idx(k), idx(m), count(g)]);
    }
    Ok(Outcome::ok(sheet))
}

fn sequence_cmd(args: &SequenceArgs) -> Result<Outcome, Error> {
    positive("k-max", args.k_max)?;
    let table = CountTable::build(args.k_max);
    let mut sheet = Sheet::new("sequence", vec!["k", "G"]);
    for k in 2..=args.k_max {
        sheet.rows.push(vec![idx(k), count(table.g_total(k)?)]);
    }
    Ok(Outcome::ok(sheet))
}

fn enumerate_cmd(args: &EnumerateArgs) -> Result<Outcome, Error> {
    positive("state-limit", args.state_limit)?;
    let mut sheet = Sheet::new(
        "enumerate",
        vec!["m", "k", "clean", "visited", "recurrence", "agrees"],
    );
    let mut status = Status::Ok;
    for m in 0..=args.m_max {
        let counts = match enumerate_counts_with_limit(m, args.max_steps, args.state_limit) {
            Ok(c) => c,
            Err(Error::ResourceExhausted {
                limit,
                last_complete,
            }) => {
                status = Status::Partial(format!(
                    "state budget of {limit} boards reached at m = {m}; \
                     levels listed for m = {m} are complete through {last_complete} pebbles"
                ));
                let steps = last_complete - initial_board(m).pebbles();
                enumerate_counts_with_limit(m, steps, args.state_limit)?
            }
            Err(e) => return Err(e),
        };
        let table = CountTable::build(counts.last_complete());
        for (&k, clean) in &counts.clean {
            let expect = table.g(k, m)?;
            sheet.rows.push(vec![
                idx(m),
                idx(k),
                count(clean),
                count(counts.visited[&k]),
                count(&expect),
                Value::Flag(*clean == expect),
            ]);
        }
        if status != Status::Ok {
            break;
        }
    }
    Ok(Outcome { sheet, status })
}

fn constants_cmd(args: &PrecisionArgs) -> Result<Outcome, Error> {
    positive("digits", args.digits)?;
    let policy = args.policy();
    let c = AsymptoticConstants::compute(&policy)?;
    let mut sheet = Sheet::new("constants", vec!["name", "value", "digits"])
        .meta("series_order", idx(c.certificate.series_order))
        .meta("working_bits", idx(c.certificate.bits));
    for d in c.decimals() {
        sheet.rows.push(vec![
            Value::Text(d.name.into()),
            Value::Text(d.value),
            idx(d.digits),
        ]);
    }
    Ok(Outcome::ok(sheet))
}

fn asymptotic_cmd(args: &AsymptoticArgs) -> Result<Outcome, Error> {
    positive("k-max", args.k_max)?;
    positive("step", args.step)?;
    positive("digits", args.precision.digits)?;
    let policy = args.precision.policy();
    let table = CountTable::build(args.k_max);
    let cert = find_zstar(&policy)?;
    let ks: Vec<usize> = (1..=args.k_max / args.step)
        .map(|i| i * args.step)
        .collect();
    let ms: Vec<usize> = (0..=args.m_max).collect();
    let report = ratio_report(&table, &cert, &policy, &ks, &ms)?;
    let mut sheet = Sheet::new("asymptotic", vec!["k", "m", "exact", "ratio", "gap"]);
    for e in &report.entries {
        sheet.rows.push(vec![
            idx(e.k),
            idx(e.m),
            e.exact
                .clone()
                .map_or(Value::Text("inapplicable".into()), Value::Count),
            e.ratio.clone().map_or(Value::Missing, Value::Text),
            e.gap
                .map_or(Value::Missing, |g| Value::Text(format!("{g:.3e}"))),
        ]);
    }
    Ok(Outcome::ok(sheet))
}

fn w0_cmd(args: &W0Args) -> Result<Outcome, Error> {
    positive("l-max", args.l_max)?;
    let mut sheet = Sheet::new("w0", vec!["l", "W0"]);
    for (l, w) in w0_values(args.l_max)? {
        sheet.rows.push(vec![idx(l), count(w)]);
    }
    Ok(Outcome::ok(sheet))
}

fn report_sheet(report: &VerificationReport) -> Sheet {
    let mut sheet = Sheet::new(
        "verify",
        vec!["status", "suite", "check", "through", "first_failure"],
    );
    for c in &report.checks {
        sheet.rows.push(vec![
            Value::Text(if c.passed { "PASS" } else { "FAIL" }.into()),
            Value::Text(c.suite.clone()),
            Value::Text(c.name.clone()),
            c.verified_through.map_or(Value::Missing, Value::Index),
            c.first_failure.clone().map_or(Value::Missing, Value::Text),
        ]);
    }
    sheet
}

fn verify_cmd(args: &VerifyArgs) -> Result<Outcome, Error> {
    positive("k-max", args.k_max)?;
    positive("order", args.order)?;
    positive("digits", args.digits)?;
    let config = VerifyConfig {
        k_max: args.k_max,
        m_max: args.m_max,
        order: args.order as i64,
        max_steps: args.max_steps,
        policy: PrecisionPolicy::new(args.digits),
    };
    let report = verify_all(&config)?;
    let status = match report.first_failure() {
        None => Status::Ok,
        Some(c) => Status::Failed(format!(
            "[{}] {}: {}",
            c.suite,
            c.name,
            c.first_failure.as_deref().unwrap_or("failed")
        )),
    };
    Ok(Outcome {
        sheet: report_sheet(&report),
        status,
    })
}

/// Execute one parsed command.
pub fn execute(config: &RunConfig) -> Result<Outcome, Error> {
    match &config.command {
        Command::Table(a) => table_cmd(a),
        Command::Sequence(a) => sequence_cmd(a),
        Command::Enumerate(a) => enumerate_cmd(a),
        Command::Constants(a) => constants_cmd(a),
        Command::Asymptotic(a) => asymptotic_cmd(a),
        Command::W0(a) => w0_cmd(a),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::InvalidConfig(_)
        | Error::TableTooSmall { .. }
        | Error::UndefinedIndex { .. }
        | Error::BelowMinimal { .. }
        | Error::PrecisionUnreachable { .. }
        | Error::UnresolvedSign { .. }
        | Error::OrderTooSmall { .. } => EXIT_USAGE,
        Error::ResourceExhausted { .. } => EXIT_RESOURCE,
        _ => EXIT_VERIFY_FAILED,
    }
}

/// Parse `args`, run, write output and return the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match execute(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code_for(&e);
        }
    };
    let format = config.format.unwrap_or_else(|| {
        if config.out.is_none() && std::io::stdout().is_terminal() {
            OutputFormat::Text
        } else {
            OutputFormat::Json
        }
    });
    let text = outcome.sheet.render(format);
    let written = match &config.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    match &outcome.status {
        Status::Ok => {}
        Status::Failed(first) => eprintln!("verification failed, first counterexample: {first}"),
        Status::Partial(note) => eprintln!("partial results: {note}"),
    }
    outcome.exit_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sheet(args: &[&str]) -> Sheet {
        let config = RunConfig::try_parse_from(args).unwrap();
        execute(&config).unwrap().sheet
    }

    #[test]
    fn sequence_csv() {
        let out = sheet(&["pebbling", "sequence", "--k-max", "7"]).render(OutputFormat::Csv);
        assert_eq!(out, "k,G\n2,1\n3,2\n4,4\n5,9\n6,20\n7,46\n");
    }

    #[test]
    fn json_keeps_counts_as_strings() {
        let out = sheet(&["pebbling", "sequence", "--k-max", "3"]).render(OutputFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["command"], "sequence");
        assert_eq!(v["rows"][1]["k"], 3);
        assert_eq!(v["rows"][1]["G"], "2");
    }

    #[test]
    fn table_skips_structural_zeros() {
        let s = sheet(&["pebbling", "table", "--k-max", "9", "--m-max", "2"]);
        assert!(s.rows.contains(&vec![idx(9), idx(2), count(1)]));
        assert!(!s.rows.iter().any(|r| r[1] == idx(2) && r[0] != idx(9)));
    }

    #[test]
    fn text_is_aligned() {
        let out = sheet(&["pebbling", "w0", "--l-max", "4"]).render(OutputFormat::Text);
        assert_eq!(out, "l  W0\n2   1\n3   2\n4   6\n");
    }

    #[test]
    fn csv_quotes_commas() {
        let mut sheet = Sheet::new("t", vec!["a"]);
        sheet.rows.push(vec![Value::Text("x, y".into())]);
        assert_eq!(sheet.render(OutputFormat::Csv), "a\n\"x, y\"\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["pebbling", "sequence", "--k-max", "x"]), EXIT_USAGE);
        assert_eq!(run(["pebbling", "nonsense"]), EXIT_USAGE);
        assert_eq!(run(["pebbling", "sequence", "--k-max", "0"]), EXIT_USAGE);
    }

    #[test]
    fn enumerate_agrees() {
        let s = sheet(&["pebbling", "enumerate", "--m-max", "1", "--max-steps", "4"]);
        assert!(s.rows.iter().all(|r| r[5] == Value::Flag(true)));
        assert_eq!(s.rows.len(), 10);
    }
}
