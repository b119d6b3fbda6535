use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cubicrel::burnside::{SingularCase, SingularType};
use cubicrel::chartable::e6;
use cubicrel::goldens::PRINTED_DECOMPOSITIONS;
use cubicrel::k3lambda;
use cubicrel::motives::{homogeneous_monomials, motives, ClassExpr};
use cubicrel::relfind::{find_relations, registry, verify_relation};
use cubicrel::rootsys::{weyl, WeylGroup};
use cubicrel::suite::{self, SUITE_NAMES};
use cubicrel::{Check, Report};

#[derive(Parser, Debug)]
#[command(name = "cubicrel", version, about = "Exact verification of motivic relations for cubic surfaces and their lines")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Maximum degree in L of relation coefficients.
    #[arg(long, default_value_t = suite::DEFAULT_MAX_DEG, global = true)]
    max_deg: usize,
    /// Print timings to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
    /// Directory for the cached W(E6) element list.
    #[arg(long, env = "CUBICREL_CACHE_DIR", global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check both character tables and the generated Weyl group.
    Validate,
    /// List the conjugacy classes of W(E6).
    Classes,
    /// Export roots, lines or classes with their coordinates.
    Export {
        #[arg(value_enum)]
        what: ExportKind,
    },
    /// Decompose a class such as S^(3), S×S^[2] or Z into irreducibles.
    Decompose { name: String },
    /// Every decomposition with a printed counterpart, as golden data.
    DumpClasses,
    /// Search for relations with coefficients polynomial in L.
    FindRelation {
        /// Comma-separated classes; overrides --degree.
        #[arg(long, value_delimiter = ',')]
        classes: Vec<String>,
        /// Use all products of symmetric powers up to this degree.
        #[arg(long, default_value_t = 4)]
        degree: u32,
        /// Use Hilbert schemes S^[n] instead of symmetric powers.
        #[arg(long)]
        hilb: bool,
        /// Extra classes appended to the list, e.g. F,Z.
        #[arg(long = "with", value_delimiter = ',')]
        extra: Vec<String>,
        /// Class whose coefficient is normalized to be positive.
        #[arg(long)]
        distinguished: Option<String>,
    },
    /// Residual of a registered relation.
    #[command(after_help = relation_help())]
    Verify { id: String },
    /// Burnside-ring checks for a surface with one singular point.
    Burnside {
        #[arg(long = "case", value_enum)]
        case: Case,
        /// Print the named G-sets instead of running the checks.
        #[arg(long)]
        sets: bool,
    },
    /// Pre-lambda ring computations for cubic fourfolds.
    Fourfold {
        /// Derive the relation with Z(Y) and run every check.
        #[arg(long)]
        derive: bool,
    },
    /// Run one named report.
    #[command(after_help = format!("Reports: {}", SUITE_NAMES.join(", ")))]
    Suite { name: String },
    /// Run every report in dependency order.
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ExportKind {
    Roots,
    Lines,
    Classes,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Case {
    A1,
    A2,
}

impl From<Case> for SingularType {
    fn from(c: Case) -> Self {
        match c {
            Case::A1 => SingularType::A1,
            Case::A2 => SingularType::A2,
        }
    }
}

fn relation_help() -> String {
    let mut s = String::from("Relations:\n");
    for (id, what) in registry::RELATION_IDS {
        s.push_str(&format!("  {id:<18} {what}\n"));
    }
    s
}

/// Command output: either checks or plain data.
enum Output {
    Reports(Vec<Report>),
    Data { json: Value, text: String, tsv: String },
}

fn render(out: &Output, format: Format) -> String {
    match (out, format) {
        (Output::Reports(rs), Format::Json) => {
            let v = json!({
                "passed": rs.iter().all(Report::passed),
                "reports": rs.iter().map(Report::to_json).collect::<Vec<_>>(),
            });
            pretty(&v)
        }
        (Output::Reports(rs), Format::Text) => rs.iter().map(Report::to_text).collect::<Vec<_>>().join("\n"),
        (Output::Reports(rs), Format::Tsv) => {
            let mut s = String::from("report\tcheck\tstatus\tdetail\n");
            for r in rs {
                for c in &r.checks {
                    s.push_str(&format!("{}\t{}\t{}\t{}\n", r.title, c.name, if c.passed { "pass" } else { "fail" }, c.detail));
                }
            }
            s
        }
        (Output::Data { json, .. }, Format::Json) => pretty(json),
        (Output::Data { text, .. }, Format::Text) => text.clone(),
        (Output::Data { tsv, .. }, Format::Tsv) => tsv.clone(),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn class(s: &str) -> Result<ClassExpr> {
    ClassExpr::parse(s).with_context(|| format!("bad class name {s:?}"))
}

fn run(cli: &Cli) -> Result<Output> {
    let timed = |name: &str, f: &dyn Fn() -> Report| -> Report {
        let t = Instant::now();
        let r = f();
        if cli.verbose {
            eprintln!("{name}: {:.2}s", t.elapsed().as_secs_f64());
        }
        r
    };
    Ok(match &cli.command {
        Command::Validate => Output::Reports(vec![timed("tables", &suite::tables), timed("structure", &suite::structure)]),
        Command::Classes | Command::Export { what: ExportKind::Classes } => classes()?,
        Command::Export { what } => vectors(*what == ExportKind::Roots)?,
        Command::Decompose { name } => decompose(name)?,
        Command::DumpClasses => dump_classes()?,
        Command::FindRelation { classes, degree, hilb, extra, distinguished } => {
            let mut list: Vec<ClassExpr> = if !classes.is_empty() {
                classes.iter().map(|c| class(c)).collect::<Result<_>>()?
            } else if *hilb {
                suite::hilb_monomials(*degree)
            } else {
                homogeneous_monomials(*degree)
            };
            for e in extra {
                list.push(class(e)?);
            }
            let dist = distinguished.as_deref().map(class).transpose()?;
            let space = find_relations(motives()?, &list, cli.max_deg)?;
            let mut text = format!(
                "classes: {}\nnullity: {}\n",
                list.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "),
                space.nullity
            );
            let mut tsv = String::from("class\tcoefficient\n");
            if let Some(m) = space.minimal(dist.as_ref()) {
                text.push_str(&format!("relation: {m}\n"));
                for (c, p) in &m.terms {
                    tsv.push_str(&format!("{c}\t{p}\n"));
                }
            }
            Output::Data { json: space.to_json(dist.as_ref()), text, tsv }
        }
        Command::Verify { id } => Output::Reports(vec![verify(id)?]),
        Command::Burnside { case, sets } => {
            if *sets {
                let c = SingularCase::build((*case).into())?;
                let json = c.to_json();
                let mut tsv = String::from("name\tpoints\n");
                for (n, x) in &c.named {
                    tsv.push_str(&format!("{n}\t{}\n", x.len()));
                }
                tsv.push_str(&format!("Z\t{}\n", c.z.len()));
                Output::Data { text: pretty(&json), json, tsv }
            } else {
                Output::Reports(vec![timed("burnside", &|| suite::burnside((*case).into()))])
            }
        }
        Command::Fourfold { derive } => {
            if *derive {
                Output::Reports(vec![timed("fourfold", &suite::fourfold)])
            } else {
                fourfold_classes()?
            }
        }
        Command::Suite { name } => {
            let r = suite::by_name(name)?;
            Output::Reports(vec![r])
        }
        Command::All => {
            Output::Reports(SUITE_NAMES.iter().map(|n| timed(n, &|| suite::by_name(n).expect("listed suite"))).collect())
        }
    })
}

fn classes() -> Result<Output> {
    let w = weyl()?;
    let t = e6();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut tsv = String::from("column\tlabel\torder\tsize\ttrace\trepresentative\n");
    let mut sorted: Vec<_> = w.classes.iter().collect();
    sorted.sort_by_key(|c| c.column);
    for c in sorted {
        let label = &t.class_labels[c.column - 1];
        let rep = WeylGroup::cycle_notation(w.representative(c.column));
        rows.push(json!({"column": c.column, "label": label, "order": c.order, "size": c.size, "trace": c.trace, "representative": rep}));
        text.push_str(&format!("{:>3} {label:<6} order {:>2}  size {:>5}  trace {:>2}\n", c.column, c.order, c.size, c.trace));
        tsv.push_str(&format!("{}\t{label}\t{}\t{}\t{}\t{rep}\n", c.column, c.order, c.size, c.trace));
    }
    Ok(Output::Data { json: json!({"group_order": w.order(), "classes": rows}), text, tsv })
}

/// Roots or lines as coordinates in the basis E0, E1, ..., E6.
fn vectors(roots: bool) -> Result<Output> {
    let w = weyl()?;
    let set = if roots { &w.roots } else { &w.lines };
    let mut text = String::new();
    let mut tsv = String::from("index\tcoordinates\n");
    let mut rows = Vec::new();
    for (i, v) in set.iter().enumerate() {
        rows.push(json!({"index": i + 1, "coordinates": v.0}));
        text.push_str(&format!("{:>3} {v}\n", i + 1));
        tsv.push_str(&format!("{}\t{v}\n", i + 1));
    }
    Ok(Output::Data { json: Value::Array(rows), text, tsv })
}

fn decompose(name: &str) -> Result<Output> {
    let c = class(name)?;
    let v = motives()?.value(&c)?;
    let d = v.decompose()?;
    let text = format!("[{c}] = {d}\n");
    let mut tsv = String::from("degree\tirreducible\tmultiplicity\n");
    for (k, row) in &d.terms {
        for (i, m) in row {
            tsv.push_str(&format!("{k}\tχ{i}\t{m}\n"));
        }
    }
    let json = json!({"class": c.to_string(), "euler_number": v.dimension().to_string(), "display": d.to_string(), "decomposition": d.to_json()});
    Ok(Output::Data { json, text, tsv })
}

fn dump_classes() -> Result<Output> {
    let m = motives()?;
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut tsv = String::from("group\tclass\tdisplay\n");
    for (group, label, _) in PRINTED_DECOMPOSITIONS {
        let d = m.value(&class(label)?)?.decompose()?;
        rows.push(json!({"group": group, "class": label, "display": d.to_string(), "decomposition": d.to_json()}));
        text.push_str(&format!("[{label}] = {d}\n"));
        tsv.push_str(&format!("{group}\t{label}\t{d}\n"));
    }
    Ok(Output::Data { json: Value::Array(rows), text, tsv })
}

fn verify(id: &str) -> Result<Report> {
    let mut r = Report::new(format!("verify {id}"));
    match id {
        "a1" | "a2" => {
            let kind: SingularType = id.parse()?;
            let case = SingularCase::build(kind)?;
            let res = case.main_relation_residual();
            let detail = if res.is_zero() { "0".to_string() } else { res.display(&case.names) };
            r.push(Check::new("residual", res.is_zero(), detail));
        }
        _ => {
            let Some(rel) = registry::lookup(id) else {
                bail!("unknown relation {id:?}; known: {}", registry::RELATION_IDS.iter().map(|(i, _)| *i).collect::<Vec<_>>().join(", "));
            };
            let res = verify_relation(motives()?, &rel)?;
            let detail = if res.is_zero() { "0".to_string() } else { res.decompose()?.to_string() };
            r.push(Check::new("relation", true, rel.to_string()));
            r.push(Check::new("residual", res.is_zero(), detail));
        }
    }
    Ok(r)
}

fn fourfold_classes() -> Result<Output> {
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut tsv = String::from("class\texpansion\n");
    for c in k3lambda::fourfold_classes() {
        let (name, p) = (c.name, &c.value);
        rows.push(json!({"class": name, "expansion": p.to_string(), "terms": p.to_json()}));
        text.push_str(&format!("[{name}] = {p}\n"));
        tsv.push_str(&format!("{name}\t{p}\n"));
    }
    Ok(Output::Data { json: Value::Array(rows), text, tsv })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(dir) = &cli.cache_dir {
        // weyl() reads the cache location from the environment
        std::env::set_var("CUBICREL_CACHE_DIR", dir);
    }
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let body = render(&out, cli.format);
    let written = match &cli.out {
        Some(p) => std::fs::write(p, &body).with_context(|| format!("writing {}", p.display())),
        None => std::io::stdout().write_all(body.as_bytes()).context("writing stdout"),
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    if let Output::Reports(rs) = &out {
        if let Some((r, c)) = rs.iter().find_map(|r| r.first_failure().map(|c| (r, c))) {
            let failed: usize = rs.iter().map(|r| r.checks.iter().filter(|c| !c.passed).count()).sum();
            eprintln!("first failing check: {}: {} ({failed} failing in total)", r.title, c.name);
            return ExitCode::from(1);
        }
    }
    ExitCode::SUCCESS
}
