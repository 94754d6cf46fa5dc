//! Command-line front end. Payload goes to stdout or `--output`, everything
//! else to stderr. Exit codes: 0 success, 1 verification failure, 2 usage.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fieldcodes::{analyze_with, row_space_code, CodeReport, FpMatrix, Prime, WORKERS_ENV};
use crate::repweights::{DiagonalBasis, ModuleId, ModuleSpec, SpinMode};
use crate::rootsys::Family;
use crate::verify::{self, Limits, Status, SuiteReport, TableReport, TABLE_IDS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "liecodes",
    version,
    about = "Linear codes from weight matrices of simple Lie algebra modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a module's weight matrix reduced mod p.
    Matrix(ModuleArgs),
    /// Analyze the code of a module, or of a matrix file.
    Report(ReportArgs),
    /// Run the registered claims.
    Verify(VerifyArgs),
    /// Recompute printed weight tables.
    Table(TableArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the payload here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ModuleArgs {
    /// A, D, E6, E7, E8 or F4.
    #[arg(long)]
    pub family: Option<String>,
    /// n for sl(n).
    #[arg(long)]
    pub n: Option<usize>,
    /// m for o(2m).
    #[arg(long)]
    pub m: Option<usize>,
    /// ext2, ext3, ext4, adjoint, adjoint_K, adjoint_L, spin, spin_half,
    /// adjoint_plus_spin or minimal.
    #[arg(long)]
    pub module: Option<String>,
    /// 2 or 3.
    #[arg(long, default_value_t = 3)]
    pub field: u64,
    /// weight_code or direct_sum (adjoint_plus_spin only).
    #[arg(long)]
    pub mode: Option<String>,
    /// cartan_h or matrix_unit_E (family A only).
    #[arg(long)]
    pub basis: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    #[command(flatten)]
    pub module: ModuleArgs,
    /// Analyze the row space of a matrix in the shared text format instead.
    #[arg(long, conflicts_with_all = ["family", "module", "n", "m", "mode", "basis"])]
    pub input: Option<PathBuf>,
    #[arg(long, env = WORKERS_ENV)]
    pub workers: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Case id prefix, or a glob over whole ids when it contains '*'.
    #[arg(long)]
    pub filter: Option<String>,
    #[arg(long, default_value_t = Limits::default().max_n)]
    pub max_n: usize,
    #[arg(long, default_value_t = Limits::default().max_m)]
    pub max_m: usize,
    #[arg(long, default_value_t = Limits::default().max_k)]
    pub max_k: usize,
    #[arg(long, env = WORKERS_ENV)]
    pub workers: Option<usize>,
    /// Also run cases marked optional.
    #[arg(long)]
    pub optional: bool,
    /// Zero timing fields so output is reproducible.
    #[arg(long)]
    pub stable: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Table id such as 2.1; all tables when omitted.
    pub id: Option<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

impl ModuleArgs {
    /// Resolves flags into a validated module spec.
    pub fn spec(&self) -> Result<ModuleSpec> {
        let family: Family = self
            .family
            .as_deref()
            .ok_or_else(|| Error::InvalidParameter("--family is required".into()))?
            .parse()?;
        let module: ModuleId = self
            .module
            .as_deref()
            .ok_or_else(|| Error::InvalidParameter("--module is required".into()))?
            .parse()?;
        let p = Prime::new(self.field)?;
        let rank = match (family, self.n, self.m) {
            (_, Some(_), Some(_)) => {
                return Err(Error::InvalidParameter(
                    "give only one of --n and --m".into(),
                ))
            }
            (Family::A, Some(n), None) => n,
            (Family::A, None, _) => {
                return Err(Error::InvalidParameter("family A needs --n".into()))
            }
            (Family::D, None, Some(m)) => m,
            (Family::D, _, None) => {
                return Err(Error::InvalidParameter("family D needs --m".into()))
            }
            (f, None, None) => f.fixed_rank().expect("exceptional"),
            (f, n, m) => {
                let fixed = f.fixed_rank().expect("exceptional");
                let given = n.or(m).expect("one is set");
                if given != fixed {
                    return Err(Error::InvalidParameter(format!(
                        "{f} has rank {fixed}, got {given}"
                    )));
                }
                fixed
            }
        };
        let mut spec = ModuleSpec::new(family, rank, module, p);
        if let Some(mode) = &self.mode {
            spec = spec.with_mode(mode.parse::<SpinMode>()?);
        }
        if let Some(basis) = &self.basis {
            spec = spec.with_basis(basis.parse::<DiagonalBasis>()?);
        }
        spec.validate()?;
        Ok(spec)
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("payload serializes");
    s.push('\n');
    s
}

fn opt_bool(b: Option<bool>) -> String {
    b.map_or("n/a".to_string(), |b| b.to_string())
}

fn distribution_text(wd: &[u64]) -> String {
    wd.iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(w, c)| format!("{w}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Renders a matrix (text format, or JSON/CSV of the reduced entries).
pub fn render_matrix(spec: &ModuleSpec, format: Format) -> Result<String> {
    let m = spec.build()?;
    let fp = m.to_fp(spec.p)?;
    Ok(match format {
        Format::Text => fp.to_text(),
        Format::Json => {
            let mut v = m.to_json();
            v["module"] = serde_json::Value::String(spec.to_string());
            v["p"] = spec.p.modulus().into();
            v["reduced"] = fp.row_iter().map(|r| r.to_vec()).collect::<Vec<_>>().into();
            json(&v)
        }
        Format::Csv => {
            let mut s = String::from("row");
            for c in 1..=fp.cols() {
                write!(s, ",c{c}").unwrap();
            }
            s.push('\n');
            for (i, r) in fp.row_iter().enumerate() {
                write!(s, "{}", i + 1).unwrap();
                for x in r {
                    write!(s, ",{x}").unwrap();
                }
                s.push('\n');
            }
            s
        }
    })
}

#[derive(Serialize)]
struct ReportOut<'a> {
    module: &'a str,
    #[serde(flatten)]
    report: &'a CodeReport,
}

/// Renders a code report; `d` reads "undefined" for the zero code.
pub fn render_report(label: &str, r: &CodeReport, format: Format) -> String {
    let d = r.d.map_or("undefined".to_string(), |d| d.to_string());
    let fields = [
        ("module", label.to_string()),
        ("p", r.p.to_string()),
        ("n", r.n.to_string()),
        ("k", r.k.to_string()),
        ("d", d),
        ("params", r.params()),
        ("self_orthogonal", r.self_orthogonal.to_string()),
        ("self_dual", r.self_dual.to_string()),
        ("even", opt_bool(r.even)),
        ("doubly_even", opt_bool(r.doubly_even)),
        (
            "weight_distribution",
            distribution_text(&r.weight_distribution),
        ),
    ];
    match format {
        Format::Text => {
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0) + 1;
            fields
                .iter()
                .map(|(k, v)| format!("{:width$} {v}\n", format!("{k}:")))
                .collect()
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let row: Vec<String> = fields.iter().map(|(_, v)| csv_field(v)).collect();
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
        Format::Json => json(&ReportOut {
            module: label,
            report: r,
        }),
    }
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c + 1 == r.len() {
                line.push_str(cell);
            } else {
                let pad = widths[c] - cell.chars().count();
                line.push_str(cell);
                line.push_str(&" ".repeat(pad + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    }
}

/// Renders a suite run.
pub fn render_suite(r: &SuiteReport, format: Format) -> String {
    let computed =
        |c: &verify::CaseResult| c.computed.as_ref().map_or("-".to_string(), |c| c.params());
    match format {
        Format::Json => json(r),
        Format::Csv => {
            let mut s =
                String::from("case_id,citation,status,expected,computed,pass,millis,note\n");
            for c in &r.results {
                let note = c
                    .annotation
                    .clone()
                    .or(c.skip_reason.clone())
                    .unwrap_or_default();
                writeln!(
                    s,
                    "{},{},{},{},{},{},{},{}",
                    csv_field(&c.case_id),
                    csv_field(&c.citation),
                    status_str(c.status),
                    csv_field(&c.expected.params()),
                    csv_field(&computed(c)),
                    c.pass,
                    c.millis,
                    csv_field(&note)
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut rows = vec![["case", "status", "expected", "computed", "ms", "note"]
                .map(String::from)
                .to_vec()];
            for c in &r.results {
                let note = match (&c.printed, &c.skip_reason) {
                    (_, Some(why)) => why.clone(),
                    (Some(p), None) => format!("printed {}", p.params()),
                    (None, None) => String::new(),
                };
                rows.push(vec![
                    c.case_id.clone(),
                    status_str(c.status).to_string(),
                    c.expected.params(),
                    computed(c),
                    c.millis.to_string(),
                    note,
                ]);
            }
            let mut s = aligned(&rows);
            let t = r.totals;
            writeln!(
                s,
                "\n{} cases: {} passed, {} failed, {} skipped ({} annotated)",
                t.cases, t.passed, t.failed, t.skipped, t.annotated
            )
            .unwrap();
            if !r.discrepancies.is_empty() {
                s.push_str("\ndiscrepancies:\n");
                for d in &r.discrepancies {
                    writeln!(
                        s,
                        "  {} {}: printed {}, computed {}{}",
                        d.case_id,
                        d.field,
                        d.printed,
                        d.computed,
                        if d.annotated { " (annotated)" } else { "" }
                    )
                    .unwrap();
                }
            }
            s
        }
    }
}

/// Renders one or more table comparisons.
pub fn render_tables(tables: &[TableReport], format: Format) -> String {
    match format {
        Format::Json => json(&tables),
        Format::Csv => {
            let mut s = String::from("table_id,label,printed,computed,matches,annotation\n");
            for t in tables {
                for r in &t.rows {
                    writeln!(
                        s,
                        "{},{},{},{},{},{}",
                        t.table_id,
                        csv_field(&r.label),
                        r.printed,
                        r.computed,
                        r.matches,
                        csv_field(r.annotation.as_deref().unwrap_or(""))
                    )
                    .unwrap();
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (i, t) in tables.iter().enumerate() {
                if i > 0 {
                    s.push('\n');
                }
                writeln!(s, "Table {}: {}", t.table_id, t.description).unwrap();
                let mut rows = vec![["entry", "printed", "computed", "match", "note"]
                    .map(String::from)
                    .to_vec()];
                for r in &t.rows {
                    rows.push(vec![
                        r.label.clone(),
                        r.printed.to_string(),
                        r.computed.to_string(),
                        if r.matches { "yes" } else { "NO" }.to_string(),
                        r.annotation.clone().unwrap_or_default(),
                    ]);
                }
                s.push_str(&aligned(&rows));
            }
            s
        }
    }
}

fn emit(out: &OutputArgs, payload: &str, stdout: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidParameter(format!("cannot write output: {e}"));
    match &out.output {
        Some(path) => std::fs::write(path, payload).map_err(io),
        None => stdout.write_all(payload.as_bytes()).map_err(io),
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Matrix(args) => {
            let spec = args.spec()?;
            emit(&args.out, &render_matrix(&spec, args.out.format)?, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Report(args) => {
            let (label, code) = match &args.input {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
                    })?;
                    let m = FpMatrix::parse_text(&text)?;
                    (path.display().to_string(), row_space_code(&m))
                }
                None => {
                    let spec = args.module.spec()?;
                    (spec.to_string(), spec.code()?)
                }
            };
            let report = analyze_with(&code, args.workers);
            emit(
                &args.module.out,
                &render_report(&label, &report, args.module.out.format),
                stdout,
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let limits = Limits {
                max_n: args.max_n,
                max_m: args.max_m,
                max_k: args.max_k,
                include_optional: args.optional,
                workers: args.workers,
                ..Limits::default()
            };
            let mut report = verify::run_suite(args.filter.as_deref(), &limits)?;
            if args.stable {
                report.stabilize();
            }
            emit(&args.out, &render_suite(&report, args.out.format), stdout)?;
            let t = report.totals;
            let _ = writeln!(
                stderr,
                "verify: {} passed, {} failed, {} skipped",
                t.passed, t.failed, t.skipped
            );
            Ok(if report.ok() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Table(args) => {
            let ids: Vec<&str> = match &args.id {
                Some(id) => vec![id.as_str()],
                None => TABLE_IDS.to_vec(),
            };
            let tables = ids
                .into_iter()
                .map(verify::reproduce_table)
                .collect::<Result<Vec<_>>>()?;
            emit(&args.out, &render_tables(&tables, args.out.format), stdout)?;
            let unexplained = tables
                .iter()
                .flat_map(|t| &t.rows)
                .any(|r| !r.matches && r.annotation.is_none());
            Ok(if unexplained { EXIT_FAILED } else { EXIT_OK })
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::UnknownTable(_) => {
                    let _ = writeln!(stderr, "valid tables: {}", TABLE_IDS.join(", "));
                }
                Error::UnsupportedFamily(_) | Error::Parse(_) => {
                    let valid: Vec<String> = Family::ALL.iter().map(|f| f.to_string()).collect();
                    let _ = writeln!(stderr, "valid families: {}", valid.join(", "));
                }
                _ => {}
            }
            EXIT_USAGE
        }
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
