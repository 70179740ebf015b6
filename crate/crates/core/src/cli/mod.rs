//! Command-line front end.

mod document;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use document::{parse_descriptor, serialize_descriptor};

use crate::decide::{decide, find_runiversal_qform, q_irreducible_dimension, RealFormQuery, SearchBound, Universal, Verdict};
use crate::error::Error;
use crate::quadform::{invariants, FormInvariants};
use crate::rootdata::{fundamental_group, CenterCharacter, Weight};
use crate::titsalgebra::{real_form_of, tits_class_q, LieDescriptor, TitsReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO: i32 = 3;
pub const EXIT_INDETERMINATE: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "runiv", version, about = "R-universality of Q-forms of semisimple Lie algebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide R-universality of a descriptor.
    Decide { file: PathBuf },
    /// Print quadratic-form and Brauer invariants of a descriptor.
    Invariants { file: PathBuf },
    /// Print the Tits algebra of a character of the center.
    Tits {
        file: PathBuf,
        /// Residues of the character, comma separated.
        #[arg(long)]
        character: String,
    },
    /// Print the dimension of the irreducible Q-representation with a highest weight.
    Dimension {
        file: PathBuf,
        /// Coordinates in the fundamental weights, comma separated.
        #[arg(long)]
        weight: String,
    },
    /// Search for an R-universal Q-form of a real form.
    Construct {
        #[arg(long)]
        realform: String,
        /// Magnitudes of diagonal entries, comma separated.
        #[arg(long)]
        bound: Option<String>,
        /// Primes allowed in quaternion classes, comma separated.
        #[arg(long)]
        primes: Option<String>,
        /// Squarefree d of the quadratic fields Q(sqrt(d)) to try, comma separated.
        #[arg(long)]
        fields: Option<String>,
    },
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Unsupported(_) | Error::Validation { .. } | Error::Parse { .. } => EXIT_USAGE,
        Error::Indeterminate(_) | Error::MissingInvariant(_) => EXIT_INDETERMINATE,
        Error::NotFound(_) => EXIT_NO,
    }
}

fn verdict_code(v: &Verdict) -> i32 {
    match v.universal {
        Universal::Yes => EXIT_OK,
        Universal::No => EXIT_NO,
        Universal::Indeterminate => EXIT_INDETERMINATE,
    }
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn load(path: &Path) -> Result<LieDescriptor, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_descriptor(&text)?)
}

fn list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| Error::validation(what, format!("`{t}` is not a valid entry"))))
        .collect()
}

fn parse_character(desc: &LieDescriptor, s: &str) -> Result<CenterCharacter, Error> {
    let group = fundamental_group(desc.root_system()?);
    let residues: Vec<i64> = list(s, "character")?;
    if group.is_trivial() && residues.iter().all(|&r| r == 0) {
        return Ok(group.identity());
    }
    group.element(&residues)
}

fn trace_json(v: &Verdict) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

fn render_verdict(v: &Verdict) -> String {
    let mut s = format!("verdict: {}\n", v.universal);
    for t in &v.trace {
        s.push_str(&format!("  [{}] {}\n    citation: {}\n", t.criterion, t.values, t.citation));
    }
    s
}

fn form_json(inv: &FormInvariants) -> Value {
    let hasse: Vec<Value> = inv.hasse.keys().map(|v| json!([v.to_string(), -1])).collect();
    json!({
        "dim": inv.dim,
        "detModSquares": inv.det_mod_squares,
        "disc": inv.disc,
        "signature": [inv.signature.0, inv.signature.1],
        "hasseMinusOne": hasse,
        "wittClass": inv.witt_class.to_string(),
        "evenClifford": {
            "center": inv.even.center.to_string(),
            "class": inv.even.class.to_string(),
            "splitOverCenter": inv.even.split_over_center,
        },
    })
}

fn invariants_json(desc: &LieDescriptor) -> Result<Value, Error> {
    let mut out = serde_json::Map::new();
    out.insert("type".into(), json!(desc.kind()));
    match desc {
        LieDescriptor::DirectSum { factors } => {
            let parts: Vec<Value> = factors.iter().map(invariants_json).collect::<Result<_, _>>()?;
            out.insert("factors".into(), Value::Array(parts));
        }
        _ => {
            if !matches!(desc, LieDescriptor::ResScalars { .. }) {
                out.insert("rootSystem".into(), json!(desc.root_system()?.to_string()));
                let field = desc.splitting_field()?;
                out.insert("splittingField".into(), json!(field.map(|l| l.to_string())));
            }
            match desc {
                LieDescriptor::BOdd { form } | LieDescriptor::DOrth { form, .. } => {
                    out.insert("form".into(), form_json(&invariants(form)?));
                }
                LieDescriptor::AInner { class, .. } => {
                    out.insert("class".into(), json!(class.to_string()));
                    out.insert("index".into(), json!(class.index()));
                }
                LieDescriptor::CQuat { d, .. } => {
                    out.insert("D".into(), json!(d.to_string()));
                }
                LieDescriptor::DQuat { d, c0_class, .. } => {
                    out.insert("D".into(), json!(d.to_string()));
                    out.insert("c0Class".into(), json!(c0_class.as_ref().map(|c| c.to_string())));
                }
                _ => {}
            }
        }
    }
    if let Ok(rf) = real_form_of(desc) {
        out.insert("realForm".into(), json!(rf.to_string()));
    }
    Ok(Value::Object(out))
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(val, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(Value::is_object) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in items {
                            render_value(item, indent + 1, out);
                            out.push_str(&format!("{pad}  --\n"));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar_text(val))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar_text(other))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn report_json(c: &CenterCharacter, r: &TitsReport) -> Value {
    json!({
        "character": c.to_string(),
        "center": r.center.to_string(),
        "qClass": r.q_class.to_string(),
        "rAlgebra": r.r_algebra.to_string(),
        "divisionAfterR": r.division_after_real,
    })
}

fn emit(out: &mut dyn Write, format: Format, text: String, value: Value) -> Result<(), Failure> {
    let s = match format {
        Format::Text => text,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).map_err(|e| Failure::Io(e.to_string()))?),
    };
    out.write_all(s.as_bytes()).map_err(|e| Failure::Io(e.to_string()))
}

fn text_of(v: &Value) -> String {
    let mut s = String::new();
    render_value(v, 0, &mut s);
    s
}

fn bound_from(bound: Option<String>, primes: Option<String>, fields: Option<String>) -> Result<SearchBound, Error> {
    let mut b = SearchBound::default();
    if let Some(s) = bound {
        b.magnitudes = list(&s, "bound")?;
    }
    if let Some(s) = primes {
        b.primes = list(&s, "primes")?;
    }
    if let Some(s) = fields {
        b.fields = list(&s, "fields")?;
    }
    Ok(b)
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Decide { file } => {
            let desc = load(&file)?;
            let v = decide(&desc)?;
            let value = json!({ "descriptor": document::descriptor_value(&desc), "verdict": trace_json(&v) });
            emit(out, format, render_verdict(&v), value)?;
            Ok(verdict_code(&v))
        }
        Command::Invariants { file } => {
            let desc = load(&file)?;
            let value = invariants_json(&desc)?;
            emit(out, format, text_of(&value), value)?;
            Ok(EXIT_OK)
        }
        Command::Tits { file, character } => {
            let desc = load(&file)?;
            let c = parse_character(&desc, &character)?;
            let report = tits_class_q(&desc, &c)?;
            let value = report_json(&c, &report);
            emit(out, format, text_of(&value), value)?;
            Ok(EXIT_OK)
        }
        Command::Dimension { file, weight } => {
            let desc = load(&file)?;
            let w: Weight = weight.parse()?;
            let dim = q_irreducible_dimension(&desc, &w)?;
            let value = json!({ "weight": w.to_string(), "dimension": dim.to_string() });
            emit(out, format, format!("{dim}\n"), value)?;
            Ok(EXIT_OK)
        }
        Command::Construct { realform, bound, primes, fields } => {
            let query: RealFormQuery = realform.parse()?;
            let b = bound_from(bound, primes, fields)?;
            let found = find_runiversal_qform(&query, &b)?;
            let v = decide(&found)?;
            let doc = serialize_descriptor(&found);
            let value = json!({
                "realForm": query.label.to_string(),
                "descriptor": document::descriptor_value(&found),
                "verdict": trace_json(&v),
            });
            emit(out, format, format!("{doc}\n{}", render_verdict(&v)), value)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
