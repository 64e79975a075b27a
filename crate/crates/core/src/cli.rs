//! Command-line front end. The `typeseq` binary is a thin wrapper around
//! [`run`].
//!
//! Exit codes: 0 on success, 1 when checks ran and some failed, 2 on usage
//! or domain errors. Domain errors are printed as
//! `{"error":{"kind":…,"message":…}}`.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::census::{
    self, CensusQuery, CensusReport, CheckSelection, GorensteinFilter, SearchMode,
    DEFAULT_GUARD,
};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::ideal::RelativeIdeal;
use crate::invariants::SemigroupContext;
use crate::semigroup::{parse_list, NumericalSemigroup};

/// Environment variable overriding the genus guard.
pub const GUARD_ENV: &str = "TYPESEQ_MAX_GENUS";

#[derive(Debug, Parser)]
#[command(name = "typeseq", version, about = "Type sequences and ideal invariants of numerical semigroup rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Basic invariants, type sequence and classification of one semigroup.
    Info {
        #[command(flatten)]
        semigroup: SemigroupSpec,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Invariant report for one ideal.
    Ideal {
        #[command(flatten)]
        semigroup: SemigroupSpec,
        /// Ideal generators, comma separated.
        #[arg(long, value_name = "LIST")]
        ideal: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Overring length reports for every oversemigroup.
    Overrings {
        #[command(flatten)]
        semigroup: SemigroupSpec,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the verification checks over a range of semigroups.
    Census {
        #[command(flatten)]
        bound: BoundArgs,
        #[command(flatten)]
        filters: FilterArgs,
        /// Check groups, ids or id prefixes, comma separated.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Ideal pairs per semigroup for the Jäger triples.
        #[arg(long, default_value_t = 16)]
        sample_limit: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for ideals with a(I) < 0.
    Search {
        /// Required; names the search.
        #[arg(long, required = true)]
        negative_a: bool,
        #[command(flatten)]
        bound: BoundArgs,
        #[command(flatten)]
        filters: FilterArgs,
        /// Scan one representative per translation class instead of a window.
        #[arg(long)]
        classes: bool,
        /// Disable pruning.
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Classification census over a range of semigroups.
    Classify {
        #[command(flatten)]
        bound: BoundArgs,
        #[command(flatten)]
        filters: FilterArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SemigroupSource {
    /// Generators, comma separated.
    #[arg(long, value_name = "LIST")]
    gens: Option<String>,
    /// Small elements (below the conductor), comma separated; needs --conductor.
    #[arg(long, value_name = "LIST", requires = "conductor")]
    small: Option<String>,
    /// Canonical encoding `s0,s1,…|c`.
    #[arg(long, value_name = "ENCODING")]
    semigroup: Option<String>,
}

#[derive(Debug, Args)]
struct SemigroupSpec {
    #[command(flatten)]
    source: SemigroupSource,
    #[arg(long)]
    conductor: Option<i64>,
}

impl SemigroupSpec {
    fn build(&self) -> Result<NumericalSemigroup> {
        let src = &self.source;
        if let Some(g) = &src.gens {
            NumericalSemigroup::from_generators(&parse_list(g)?)
        } else if let Some(list) = &src.small {
            let c = self.conductor.expect("clap enforces --conductor");
            NumericalSemigroup::from_small_elements(&parse_list(list)?, c)
        } else {
            NumericalSemigroup::parse_encoding(src.semigroup.as_deref().expect("clap enforces one source"))
        }
    }
}

#[derive(Debug, Args)]
struct BoundArgs {
    #[arg(long, conflicts_with_all = ["max_conductor", "gens"])]
    max_genus: Option<u32>,
    #[arg(long, conflicts_with = "gens")]
    max_conductor: Option<u32>,
    /// Restrict to one semigroup given by generators.
    #[arg(long, value_name = "LIST")]
    gens: Option<String>,
    /// Ideals with c_I ≤ c + window are enumerated.
    #[arg(long, default_value_t = 0)]
    window: u32,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Debug, Args)]
struct FilterArgs {
    #[arg(long)]
    min_multiplicity: Option<i64>,
    #[arg(long)]
    max_multiplicity: Option<i64>,
    #[arg(long, conflicts_with = "non_gorenstein")]
    gorenstein_only: bool,
    #[arg(long)]
    non_gorenstein: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Human,
    Csv,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Result of one command: rendered text plus whether all checks passed.
struct Rendered {
    text: String,
    clean: bool,
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let guard = match guard_from_env() {
        Ok(g) => g,
        Err(msg) => {
            let _ = writeln!(stderr, "{msg}");
            return 2;
        }
    };
    let output = match &cli.command {
        Command::Info { output, .. }
        | Command::Ideal { output, .. }
        | Command::Overrings { output, .. }
        | Command::Census { output, .. }
        | Command::Search { output, .. }
        | Command::Classify { output, .. } => output,
    };
    match execute(&cli.command, guard) {
        Ok(rendered) => {
            let text = rendered.text;
            let written = match &output.out {
                Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string()),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(msg) = written {
                let _ = writeln!(stderr, "cannot write output: {msg}");
                return 2;
            }
            if rendered.clean {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stdout, "{}", error_json(&e));
            2
        }
    }
}

fn guard_from_env() -> std::result::Result<u32, String> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{GUARD_ENV} must be a non-negative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

pub fn error_json(e: &Error) -> String {
    json!({"error": {"kind": e.kind(), "message": e.to_string()}}).to_string()
}

fn execute(cmd: &Command, guard: u32) -> Result<Rendered> {
    match cmd {
        Command::Info { semigroup, output } => {
            let s = semigroup.build()?;
            info(&s, output.format)
        }
        Command::Ideal { semigroup, ideal, output } => {
            let s = semigroup.build()?;
            let i = RelativeIdeal::from_generators(&s, &parse_list(ideal)?)?;
            let rep = crate::invariants::decomposition_check(&s, &i)?;
            let clean = rep.all_pass();
            let text = match output.format {
                Format::Json => to_json(&rep),
                Format::Csv => checks_csv(&rep.checks)?,
                Format::Human => format!(
                    "S = {}\nI = {}\na = {}  b = {}  d = {}\nl(R/I) = {}  l(I*/R) = {}  l(I**/I) = {}\nV complement = {:?}\n{}",
                    rep.semigroup,
                    rep.ideal,
                    rep.a,
                    rep.b,
                    rep.d,
                    rep.l_r_over_i,
                    rep.l_dual_over_r,
                    rep.l_bidual_over_i,
                    rep.v_complement,
                    checks_human(&rep.checks)
                ),
            };
            Ok(Rendered { text, clean })
        }
        Command::Overrings { semigroup, output } => {
            let s = semigroup.build()?;
            let ctx = SemigroupContext::new(&s);
            let reports = s
                .oversemigroups()
                .iter()
                .map(|t| ctx.overring_report(t))
                .collect::<Result<Vec<_>>>()?;
            let clean = reports.iter().all(|r| r.checks.iter().all(|c| c.pass));
            let text = match output.format {
                Format::Json => to_json(&json!({ "semigroup": s.encoding(), "overrings": reports })),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["oversemigroup", "length", "check_id", "pass", "lhs", "rhs"])
                        .map_err(csv_err)?;
                    for r in &reports {
                        for c in &r.checks {
                            w.write_record([
                                r.oversemigroup.clone(),
                                r.length.to_string(),
                                c.id.to_string(),
                                c.pass.to_string(),
                                c.lhs.to_string(),
                                c.rhs.to_string(),
                            ])
                            .map_err(csv_err)?;
                        }
                    }
                    csv_string(w)?
                }
                Format::Human => {
                    let mut t = format!("S = {}: {} oversemigroups\n", s.encoding(), reports.len());
                    for r in &reports {
                        let failed = r.checks.iter().filter(|c| !c.pass).count();
                        t += &format!("  T = {:<30} l(T/S) = {:<3} failed checks: {failed}\n", r.oversemigroup, r.length);
                    }
                    t
                }
            };
            Ok(Rendered { text, clean })
        }
        Command::Census { bound, filters, checks, sample_limit, output } => {
            let mut q = query(bound, filters, guard)?;
            q.checks = CheckSelection::parse(checks);
            q.sample_limit = *sample_limit;
            let rep = census::verify_theorems(&q)?;
            render_report(&rep, output.format)
        }
        Command::Classify { bound, filters, output } => {
            let q = query(bound, filters, guard)?;
            let rep = census::classification_census(&q)?;
            render_report(&rep, output.format)
        }
        Command::Search { bound, filters, classes, exhaustive, output, .. } => {
            let q = query(bound, filters, guard)?;
            let mode = if *classes { SearchMode::Classes } else { SearchMode::Window };
            let hits = if *exhaustive {
                census::search_negative_a_exhaustive(&q, mode)?
            } else {
                census::search_negative_a(&q, mode)?
            };
            let text = match output.format {
                Format::Json => to_json(&json!({ "hits": hits })),
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["semigroup_encoding", "ideal_encoding", "class_encoding", "a"])
                        .map_err(csv_err)?;
                    for h in &hits {
                        w.write_record([h.semigroup.clone(), h.ideal.clone(), h.class.clone(), h.a.to_string()])
                            .map_err(csv_err)?;
                    }
                    csv_string(w)?
                }
                Format::Human => {
                    let mut t = format!("{} ideals with a(I) < 0\n", hits.len());
                    for h in &hits {
                        t += &format!("  S = {}  I = {}  a = {}\n", h.semigroup, h.ideal, h.a);
                    }
                    t
                }
            };
            Ok(Rendered { text, clean: true })
        }
    }
}

fn query(bound: &BoundArgs, filters: &FilterArgs, guard: u32) -> Result<CensusQuery> {
    let mut q = match (bound.max_genus, bound.max_conductor, &bound.gens) {
        (Some(g), None, None) => CensusQuery::max_genus(g),
        (None, Some(c), None) => CensusQuery::max_conductor(c),
        (None, None, Some(gens)) => {
            CensusQuery::explicit(vec![NumericalSemigroup::from_generators(&parse_list(gens)?)?])
        }
        _ => {
            return Err(Error::Parse(
                "census bound: give exactly one of --max-genus, --max-conductor, --gens".into(),
            ))
        }
    };
    q.window = bound.window;
    q.workers = bound.workers.max(1);
    q.guard = guard;
    q.min_multiplicity = filters.min_multiplicity;
    q.max_multiplicity = filters.max_multiplicity;
    q.gorenstein = if filters.gorenstein_only {
        GorensteinFilter::Only
    } else if filters.non_gorenstein {
        GorensteinFilter::Exclude
    } else {
        GorensteinFilter::Any
    };
    Ok(q)
}

#[derive(Serialize)]
struct SemigroupJson {
    generators: Vec<i64>,
    small_elements: Vec<i64>,
    conductor: i64,
    genus: i64,
    multiplicity: i64,
    #[serde(rename = "type")]
    cm_type: i64,
    frobenius: i64,
    pseudo_frobenius: Vec<i64>,
    gorenstein: bool,
    arf: bool,
    encoding: String,
}

#[derive(Serialize)]
struct InvariantsJson {
    /// `a(γ)`, `b(γ)`, `d(γ)`.
    a: i64,
    b: i64,
    d: i64,
    sigma: i64,
}

#[derive(Serialize)]
struct ClassificationJson {
    tag: String,
    parameters: BTreeMap<&'static str, i64>,
}

#[derive(Serialize)]
struct InfoJson {
    semigroup: SemigroupJson,
    type_sequence: Vec<i64>,
    invariants: InvariantsJson,
    classification: ClassificationJson,
    checks: Vec<Check>,
}

fn info(s: &NumericalSemigroup, format: Format) -> Result<Rendered> {
    let ctx = SemigroupContext::new(s);
    let basic = s.basic_invariants();
    let cl = ctx.classify_b();
    let mut checks = ctx.semigroup_checks();
    let (a, b, d) = if s.is_natural() {
        (0, 0, 0)
    } else {
        checks.extend(ctx.gamma_profile()?.checks);
        let x = ctx.analyze(&ctx.gamma)?;
        (x.a, x.b, x.d)
    };
    checks.extend(cl.checks.iter().cloned());
    let clean = checks.iter().all(|c| c.pass);
    let doc = InfoJson {
        semigroup: SemigroupJson {
            generators: basic.minimal_generators.clone(),
            small_elements: basic.small_elements.clone(),
            conductor: basic.conductor,
            genus: basic.genus,
            multiplicity: basic.multiplicity,
            cm_type: basic.cm_type,
            frobenius: basic.frobenius,
            pseudo_frobenius: basic.pseudo_frobenius.clone(),
            gorenstein: s.is_gorenstein(),
            arf: ctx.arf,
            encoding: s.encoding(),
        },
        type_sequence: ctx.type_sequence.values().to_vec(),
        invariants: InvariantsJson { a, b, d, sigma: ctx.sigma() },
        classification: ClassificationJson {
            tag: cl.tag.as_str().to_string(),
            parameters: cl.parameters.clone(),
        },
        checks,
    };
    let text = match format {
        Format::Json => to_json(&doc),
        Format::Csv => checks_csv(&doc.checks)?,
        Format::Human => format!(
            "S = {}\ngenerators {:?}  conductor {}  genus {}  multiplicity {}  type {}\ntype sequence {:?}\na(γ) = {}  b(γ) = {}  d(γ) = {}  σ = {}\nclassification {} {:?}\n{}",
            doc.semigroup.encoding,
            doc.semigroup.generators,
            doc.semigroup.conductor,
            doc.semigroup.genus,
            doc.semigroup.multiplicity,
            doc.semigroup.cm_type,
            doc.type_sequence,
            a,
            b,
            d,
            doc.invariants.sigma,
            doc.classification.tag,
            doc.classification.parameters,
            checks_human(&doc.checks)
        ),
    };
    Ok(Rendered { text, clean })
}

fn render_report(rep: &CensusReport, format: Format) -> Result<Rendered> {
    let text = match format {
        Format::Json => rep.to_json() + "\n",
        Format::Csv => {
            let mut buf = Vec::new();
            rep.write_violations_csv(&mut buf)?;
            String::from_utf8(buf).expect("csv output is UTF-8")
        }
        Format::Human => {
            let mut t = format!(
                "{}, window {}: {} semigroups, {} ideals, {} overring pairs, {} checks, {} violations\n",
                rep.scope,
                rep.window,
                rep.semigroups,
                rep.ideals,
                rep.overring_pairs,
                rep.checks_run(),
                rep.violations.len()
            );
            for (tag, n) in rep.classification.iter().filter(|(_, &n)| n > 0) {
                t += &format!("  {tag:<22} {n}\n");
            }
            for v in rep.violations.iter().take(20) {
                t += &format!("  FAIL {} S={} I={} lhs={} rhs={}\n", v.check_id, v.semigroup, v.ideal, v.lhs, v.rhs);
            }
            t
        }
    };
    Ok(Rendered { text, clean: rep.is_clean() })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn checks_csv(checks: &[Check]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["check_id", "pass", "lhs", "rhs"]).map_err(csv_err)?;
    for c in checks {
        w.write_record([c.id.to_string(), c.pass.to_string(), c.lhs.to_string(), c.rhs.to_string()])
            .map_err(csv_err)?;
    }
    csv_string(w)
}

fn checks_human(checks: &[Check]) -> String {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
    let mut t = format!("{} checks, {} failed\n", checks.len(), failed.len());
    for c in failed {
        t += &format!("  FAIL {} lhs={} rhs={}\n", c.id, c.lhs, c.rhs);
    }
    t
}
