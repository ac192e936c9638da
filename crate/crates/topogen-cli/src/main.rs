//! Batch front end for the `topogen` library.
//!
//! Every command reads one JSON document (from `--input` or stdin) and
//! writes one document to stdout. Exit codes: 0 on a computed result,
//! 1 when a `verify` suite finds a mismatch, 2 on invalid input, 3 when
//! the library declines the request.

mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Map, Value};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use topogen::maxclass::{max_class, rs_limit, QContext};
use topogen::stabilizers::{generically_free, threshold, Exceptional, LieType};
use topogen::{closure, decide, invariants, ClassDescriptor, Error, Family, GroupSpec};

const SCHEMA: &str = "topogen/1";

#[derive(Parser)]
#[command(name = "topogen", version, about = "Topological generation of classical groups by conjugacy classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input document; stdin when absent.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 2024)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 10_000)]
    trials: u64,
    /// Enumeration cap for finite-group and subspace searches.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Empty or nonempty verdict for a tuple of classes.
    Decide,
    /// Class and centralizer dimensions.
    Classdim,
    /// Unipotent closure order as DOT, or one closure comparison.
    Closure,
    /// Generically free test for a module.
    Genfree,
    /// Largest class of prime order with points over GF(q).
    Maxclass,
    /// Limit of the (r, s)-generation probability.
    Rslimit,
    /// Cross-check the invariants against explicit matrices.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
    },
}

enum Failure {
    Input(String),
    Library(Error),
    Mismatch(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = Result<Value, Failure>;

#[derive(Deserialize)]
struct DecideInput {
    group: GroupSpec,
    classes: Vec<ClassDescriptor>,
    #[serde(default)]
    spin8_profiles: Option<Vec<[usize; 3]>>,
}

#[derive(Deserialize)]
struct ClassInput {
    group: GroupSpec,
    class: ClassDescriptor,
}

#[derive(Deserialize)]
struct ClosureInput {
    group: GroupSpec,
    #[serde(default)]
    upper: Option<ClassDescriptor>,
    #[serde(default)]
    lower: Option<ClassDescriptor>,
}

#[derive(Deserialize)]
struct GenfreeInput {
    #[serde(default)]
    group: Option<GroupSpec>,
    #[serde(default)]
    exceptional: Option<Exceptional>,
    dim_v: usize,
    dim_vg: usize,
}

#[derive(Deserialize)]
struct MaxclassInput {
    group: GroupSpec,
    r: u32,
    #[serde(default)]
    q: Option<u64>,
    #[serde(default)]
    i: Option<u32>,
}

#[derive(Deserialize)]
struct RslimitInput {
    family: Family,
    n: usize,
    p: u32,
    r: u32,
    s: u32,
}

fn read_input(path: &Option<PathBuf>) -> Result<Value, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => text = std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?,
        None => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        }
    }
    let doc: Value = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("not JSON: {e}")))?;
    match doc.get("schema") {
        None => {}
        Some(Value::String(s)) if s == SCHEMA => {}
        Some(s) => return Err(Failure::Input(format!("unsupported schema {s}, expected {SCHEMA:?}"))),
    }
    Ok(doc)
}

fn parse<T: DeserializeOwned>(doc: Value) -> Result<T, Failure> {
    // library validation errors surface through serde as plain messages
    serde_json::from_value(doc).map_err(|e| Failure::Input(e.to_string()))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn run(cli: &Cli) -> Outcome {
    if let Command::Verify { suite } = cli.command {
        let opts = verify::Options { seed: cli.seed, trials: cli.trials, cap: cli.cap };
        return verify::run(suite, &opts);
    }
    let doc = read_input(&cli.input)?;
    match cli.command {
        Command::Decide => {
            let inp: DecideInput = parse(doc)?;
            let v = decide(&inp.group, &inp.classes, inp.spin8_profiles.as_deref())?;
            Ok(to_value(&v))
        }
        Command::Classdim => {
            let inp: ClassInput = parse(doc)?;
            Ok(to_value(&invariants::class_dim(&inp.group, &inp.class)?))
        }
        Command::Closure => {
            let inp: ClosureInput = parse(doc)?;
            match (inp.upper, inp.lower) {
                (Some(u), Some(l)) => Ok(json!({ "in_closure": closure::in_closure(&inp.group, &u, &l)? })),
                (None, None) => Ok(json!({ "dot": closure::closure_dot(&inp.group)? })),
                _ => Err(Failure::Input("closure needs both `upper` and `lower`, or neither".into())),
            }
        }
        Command::Genfree => {
            let inp: GenfreeInput = parse(doc)?;
            let ty = match (inp.group, inp.exceptional) {
                (Some(g), None) => LieType::Classical(g),
                (None, Some(e)) => LieType::Exceptional(e),
                _ => return Err(Failure::Input("give exactly one of `group` and `exceptional`".into())),
            };
            let row = threshold(&ty)?;
            Ok(json!({
                "generically_free": generically_free(&ty, inp.dim_v, inp.dim_vg)?,
                "d": row.d.to_string(),
                "d_prime": row.d_prime.to_string(),
            }))
        }
        Command::Maxclass => {
            let inp: MaxclassInput = parse(doc)?;
            let ctx = match (inp.q, inp.i) {
                (Some(q), None) => QContext::from_q(inp.r, q, inp.group.p)?,
                (None, Some(i)) => QContext::new(inp.r, i, inp.group.p)?,
                _ => return Err(Failure::Input("give exactly one of `q` and `i`".into())),
            };
            let m = max_class(&inp.group, ctx)?;
            let mut v = to_value(&m);
            v["context"] = to_value(&ctx);
            Ok(v)
        }
        Command::Rslimit => {
            let inp: RslimitInput = parse(doc)?;
            let l = rs_limit(inp.family, inp.n, inp.p, inp.r, inp.s)?;
            Ok(json!({ "limit": l.to_string(), "value": l.as_f64() }))
        }
        Command::Verify { .. } => unreachable!(),
    }
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("values serialize"),
        Format::Text => match v {
            Value::Object(m) => text_lines(m),
            other => other.to_string(),
        },
    }
}

fn text_lines(m: &Map<String, Value>) -> String {
    let mut out = Vec::new();
    for (k, v) in m {
        match v {
            // DOT and other multi-line strings print verbatim
            Value::String(s) if s.contains('\n') => out.push(s.trim_end().to_string()),
            Value::String(s) => out.push(format!("{k}: {s}")),
            other => out.push(format!("{k}: {other}")),
        }
    }
    out.join("\n")
}

fn with_schema(v: Value) -> Value {
    let mut m = match v {
        Value::Object(m) => m,
        other => Map::from_iter([("result".to_string(), other)]),
    };
    m.insert("schema".into(), SCHEMA.into());
    Value::Object(m)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            println!("{}", render(&with_schema(v), cli.format));
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(v)) => {
            println!("{}", render(&with_schema(v), cli.format));
            eprintln!("topogen: cross-check found mismatches");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("topogen: invalid input: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Library(e)) => {
            eprintln!("topogen: {e}");
            ExitCode::from(if e.is_validation() { 2 } else { 3 })
        }
    }
}
