//! The `logres` command line.
//!
//! Every subcommand produces a [`Report`]: a JSON machine block, a text block
//! and an exit code. Exit 0 means the run succeeded; mathematical findings
//! (not flat, Saito fails, point outside `X_F`) exit 1 only under `--strict`;
//! malformed input exits 2.

use std::fmt::Write as _;
use std::fs;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::divisor::json::DivisorJson;
use crate::divisor::{
    catalog, dlog_f_expansion, dual_log_forms, form_structure_equations, verify_saito, FreeDivisor, SaitoSummary,
    StructureFunctions, CATALOG_NAMES,
};
use crate::exact::rational::format_rational;
use crate::exact::serial::{matrix_from_json, matrix_to_json, poly_to_json, MatrixJson};
use crate::exact::RationalMatrix;
use crate::liealg::{centralizer_algebra, jordan_chevalley, JCMode};
use crate::normalform::json::{mpm_to_json, ConnectionJson, PointJson, PolySystemJson, ResidueJson};
use crate::normalform::{check_xf_point, emit_xf, is_flat, monodromy_split, NormalFormError, NormalFormProblem};

#[derive(Parser, Debug)]
#[command(name = "logres", about = "Flat logarithmic connections along weighted-homogeneous free divisors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Options {
    /// Catalog divisor, e.g. `cusp` or `normal_crossing(3)`.
    #[arg(long, global = true, conflicts_with = "divisor")]
    pub catalog: Option<String>,
    /// Divisor description file (JSON).
    #[arg(long, global = true)]
    pub divisor: Option<String>,
    #[arg(long, global = true)]
    pub residue: Option<String>,
    #[arg(long, global = true)]
    pub connection: Option<String>,
    #[arg(long, global = true)]
    pub point: Option<String>,
    #[arg(long, global = true)]
    pub matrix: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Additive)]
    pub mode: ModeArg,
    /// Seed for the randomized squarefree test.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Exit 1 when the run reports a negative finding.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// List catalog divisors, or print one with --catalog.
    Catalog,
    /// Saito's criterion and structure-function consistency.
    VerifyDivisor,
    /// Frame, brackets, dual forms and their structure equations.
    FrameInfo,
    /// Graded solution spaces for a residue.
    ResidueSpace,
    /// Emit the polynomial system cutting out the moduli variety.
    EmitModuli,
    /// Curvature of a connection file.
    CheckFlat,
    /// Check a candidate point against the moduli system and the curvature.
    CheckPoint,
    /// Jordan–Chevalley decomposition of a matrix.
    Jordan,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Additive,
    Multiplicative,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: line {line}, column {column}: {message}")]
    Json {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    NormalForm(#[from] NormalFormError),
}

impl From<crate::divisor::DivisorError> for CliError {
    fn from(e: crate::divisor::DivisorError) -> Self {
        CliError::NormalForm(e.into())
    }
}

impl From<crate::exact::ExactError> for CliError {
    fn from(e: crate::exact::ExactError) -> Self {
        CliError::NormalForm(e.into())
    }
}

impl From<crate::liealg::LieError> for CliError {
    fn from(e: crate::liealg::LieError) -> Self {
        CliError::NormalForm(e.into())
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub machine: Value,
    pub text: String,
    pub exit_code: i32,
}

impl Report {
    /// What the binary prints for the chosen format.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.machine).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

struct Outcome {
    machine: Value,
    text: String,
    finding: bool,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &str) -> Result<T, CliError> {
    let raw = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    serde_json::from_str(&raw).map_err(|e| CliError::Json {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn need<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    v.as_deref().ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
}

fn load_divisor(o: &Options) -> Result<FreeDivisor, CliError> {
    match (&o.catalog, &o.divisor) {
        (Some(name), _) => Ok(catalog(name)?),
        (None, Some(path)) => Ok(read_json::<DivisorJson>(path)?.to_divisor()?),
        (None, None) => Err(CliError::Usage("one of --catalog or --divisor is required".into())),
    }
}

fn load_problem(o: &Options) -> Result<NormalFormProblem, CliError> {
    let d = Arc::new(load_divisor(o)?);
    let r = read_json::<ResidueJson>(need(&o.residue, "residue")?)?.to_residue()?;
    Ok(NormalFormProblem::new(d, r)?)
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report values serialize")
}

fn cmd_catalog(o: &Options) -> Result<Outcome, CliError> {
    match &o.catalog {
        None => Ok(Outcome {
            machine: json!({ "names": CATALOG_NAMES }),
            text: CATALOG_NAMES.iter().map(|n| format!("{n}\n")).collect(),
            finding: false,
        }),
        Some(_) => {
            let d = load_divisor(o)?;
            let dj = DivisorJson::from_divisor(&d);
            let mut text = format!("{}: f = {}\n", d.name(), d.f().fmt_with(d.variables()));
            for el in d.frame() {
                let _ = writeln!(text, "  {} [{}] = {}", el.name, el.kind.label(), el.field.fmt_with(d.variables()));
            }
            Ok(Outcome {
                machine: json!({ "divisor": to_value(&dj) }),
                text,
                finding: false,
            })
        }
    }
}

fn cmd_verify(o: &Options) -> Result<Outcome, CliError> {
    let d = load_divisor(o)?;
    let verdict = verify_saito(&d, o.seed);
    let summary = SaitoSummary::from(&verdict);
    let euler_ok = d.euler_field().apply(d.f()) == d.f().scale(&crate::exact::int(d.degree() as i64));
    let sf = StructureFunctions::compute(&d)?;
    let jacobi_ok = sf.jacobi_defects(&d).is_empty();
    let homogeneous_ok = sf.homogeneity_violations(&d).is_empty();
    let ok = summary.ok && euler_ok && jacobi_ok && homogeneous_ok;
    let mut text = format!("{}: ", d.name());
    text += &match &summary.constant {
        Some(c) if summary.ok => format!("ok, det = {c}·f\n"),
        _ => format!("FAILED: {}\n", summary.failure.clone().unwrap_or_default()),
    };
    let _ = writeln!(text, "E(f) = {}·f: {}", d.degree(), euler_ok);
    let _ = writeln!(text, "structure functions: jacobi {jacobi_ok}, homogeneous {homogeneous_ok}");
    Ok(Outcome {
        machine: json!({
            "divisor": d.name(),
            "degree": d.degree(),
            "saito": to_value(&summary),
            "euler_ok": euler_ok,
            "jacobi_ok": jacobi_ok,
            "homogeneous_ok": homogeneous_ok,
            "ok": ok,
        }),
        text,
        finding: !ok,
    })
}

fn cmd_frame_info(o: &Options) -> Result<Outcome, CliError> {
    let d = load_divisor(o)?;
    let vars = d.variables();
    let names: Vec<String> = d.frame().iter().map(|e| e.name.clone()).collect();
    let sf = StructureFunctions::compute(&d)?;
    let mut text = format!("{} (weights {:?}, degree {})\nframe:\n", d.name(), d.weights(), d.degree());
    let mut frame = Vec::new();
    for el in d.frame() {
        let _ = writeln!(text, "  {} [{}] = {}", el.name, el.kind.label(), el.field.fmt_with(vars));
        frame.push(json!({ "name": el.name, "kind": el.kind.label(), "grade": el.kind.grade() }));
    }
    text += "brackets:\n";
    let mut brackets = Vec::new();
    for i in 0..d.dim() {
        for j in i + 1..d.dim() {
            let parts: Vec<String> = (0..d.dim())
                .filter(|&k| !sf.get(i, j, k).is_zero())
                .map(|k| format!("({}){}", sf.get(i, j, k).fmt_with(vars), names[k]))
                .collect();
            let rhs = if parts.is_empty() { "0".to_string() } else { parts.join(" + ") };
            let line = format!("[{},{}] = {}", names[i], names[j], rhs);
            let _ = writeln!(text, "  {line}");
            brackets.push(line);
        }
    }
    let dlog = dlog_f_expansion(&d)?;
    text += "dlog f:\n";
    for (n, p) in names.iter().zip(&dlog) {
        let _ = writeln!(text, "  {n}: {}", p.fmt_with(vars));
    }
    let forms = dual_log_forms(&d)?;
    let form_names: Vec<String> = names.iter().map(|n| format!("a_{n}")).collect();
    let fs = form_structure_equations(&sf);
    let display = fs.display(&form_names, vars);
    let _ = writeln!(text, "dual forms over {}·f:", format_rational(&forms.constant));
    for (k, fname) in form_names.iter().enumerate() {
        let cells: Vec<String> = (0..d.dim())
            .map(|j| format!("({})d{}", forms.numerator[(k, j)].fmt_with(vars), vars[j]))
            .collect();
        let _ = writeln!(text, "  {fname} = [{}]", cells.join(" + "));
    }
    text += "structure equations:\n";
    for line in &display {
        let _ = writeln!(text, "  {line}");
    }
    Ok(Outcome {
        machine: json!({
            "divisor": d.name(),
            "frame": frame,
            "brackets": brackets,
            "dlog_f": dlog.iter().map(poly_to_json).collect::<Vec<_>>(),
            "form_constant": format_rational(&forms.constant),
            "structure_equations": display,
        }),
        text,
        finding: false,
    })
}

fn dims_json(dims: &std::collections::BTreeMap<u64, usize>) -> Value {
    Value::Object(dims.iter().map(|(d, n)| (d.to_string(), json!(n))).collect())
}

fn cmd_residue_space(o: &Options) -> Result<Outcome, CliError> {
    let p = load_problem(o)?;
    let u = p.solve_w1()?;
    let aut = p.symmetry_algebra()?;
    let ev = p.ad_d_eigenvalues()?;
    let bound = p.degree_bound()?;
    let mut cmats = p.residue().s_list.clone();
    cmats.extend(p.chi().iter().cloned());
    let centralizer = centralizer_algebra(p.m(), &cmats)?.len();
    let c = p.constants();
    let d = p.divisor();
    let slot_names: Vec<String> = c.w.iter().map(|&i| d.frame()[i].name.clone()).collect();
    let slot_dims = u.slot_dims();
    let mut text = format!("{} with m = {}, k = {}\n", d.name(), p.m(), p.k());
    let _ = writeln!(text, "integer eigenvalues of ad_D: {ev:?}; degree bound {bound}");
    let _ = writeln!(text, "dim U_F = {}", u.dim());
    for (n, sd) in slot_names.iter().zip(&slot_dims) {
        let _ = writeln!(text, "  {n}: {sd:?}");
    }
    let _ = writeln!(text, "dim N-space = {} per toral slot, {:?}", aut.space.dim(), aut.space.dims);
    let _ = writeln!(text, "symmetry algebra: {} = {} (degree 0) + {} (positive)", aut.dim(), aut.degree0, aut.positive);
    let _ = writeln!(text, "centralizer of the residue: {centralizer}");
    let names = d.variables();
    for (idx, b) in u.basis.iter().enumerate() {
        let comps: Vec<String> = b.components.iter().map(|x| x.fmt_with(names)).collect();
        let _ = writeln!(text, "  u{idx} (degree {}): {}", b.degree, comps.join("; "));
    }
    for (idx, b) in aut.space.basis.iter().enumerate() {
        let _ = writeln!(text, "  n{idx} (degree {}): {}", b.degree, b.components[0].fmt_with(names));
    }
    let machine = json!({
        "divisor": d.name(),
        "m": p.m(),
        "k": p.k(),
        "ad_eigenvalues": ev,
        "degree_bound": bound,
        "dim_u_f": u.dim(),
        "u_f_degrees": dims_json(&u.dims),
        "u_f_slots": slot_names.iter().zip(&slot_dims).map(|(n, sd)| json!({"slot": n, "degrees": dims_json(sd)})).collect::<Vec<_>>(),
        "dim_n_space": aut.space.dim(),
        "dim_w2": p.k() * aut.space.dim(),
        "n_degrees": dims_json(&aut.space.dims),
        "aut_degree0": aut.degree0,
        "aut_positive": aut.positive,
        "centralizer_dim": centralizer,
        "u_f_basis": u.basis.iter().map(|b| b.components.iter().map(mpm_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "n_basis": aut.space.basis.iter().map(|b| mpm_to_json(&b.components[0])).collect::<Vec<_>>(),
    });
    Ok(Outcome {
        machine,
        text,
        finding: false,
    })
}

fn cmd_emit(o: &Options) -> Result<Outcome, CliError> {
    let p = load_problem(o)?;
    let sys = emit_xf(&p)?;
    Ok(Outcome {
        machine: to_value(&PolySystemJson::from_system(&sys)),
        text: sys.to_text(),
        finding: false,
    })
}

fn cmd_check_flat(o: &Options) -> Result<Outcome, CliError> {
    let cj: ConnectionJson = read_json(need(&o.connection, "connection")?)?;
    let conn = cj.to_connection()?;
    let d = conn.divisor().clone();
    let rep = is_flat(&conn);
    let names: Vec<String> = d.frame().iter().map(|e| e.name.clone()).collect();
    let (text, witness) = match &rep.witness {
        None => ("flat\n".to_string(), Value::Null),
        Some(((i, j), r)) => (
            format!("not flat: R({},{}) = {}\n", names[*i], names[*j], r.fmt_with(d.variables())),
            json!({ "pair": [names[*i], names[*j]], "value": mpm_to_json(r) }),
        ),
    };
    Ok(Outcome {
        machine: json!({ "divisor": d.name(), "flat": rep.flat, "witness": witness }),
        text,
        finding: !rep.flat,
    })
}

fn cmd_check_point(o: &Options) -> Result<Outcome, CliError> {
    let p = load_problem(o)?;
    let sys = emit_xf(&p)?;
    let pj: PointJson = read_json(need(&o.point, "point")?)?;
    let pt = pj.to_point(p.divisor().weights())?;
    let chk = check_xf_point(&p, &sys, &pt)?;
    let names = sys.coordinate_names();
    let violated: Vec<Value> = chk
        .violated
        .iter()
        .map(|&i| {
            let e = &sys.equations[i];
            json!({ "tag": e.tag.as_str(), "label": sys.label(e) })
        })
        .collect();
    let mut text = format!(
        "{}: flat {}, nilpotent {}, in X_F {}\n",
        p.divisor().name(),
        chk.flat,
        chk.nilpotent,
        chk.in_xf()
    );
    let coords: Vec<String> = chk.coordinates.iter().map(format_rational).collect();
    let _ = writeln!(text, "coordinates: {}", names.iter().zip(&coords).map(|(n, c)| format!("{n}={c}")).collect::<Vec<_>>().join(", "));
    for i in &chk.violated {
        let e = &sys.equations[*i];
        let _ = writeln!(text, "  violated [{}] {}", e.tag.as_str(), sys.label(e));
    }
    Ok(Outcome {
        machine: json!({
            "divisor": p.divisor().name(),
            "coordinates": coords,
            "flat": chk.flat,
            "nilpotent": chk.nilpotent,
            "in_xf": chk.in_xf(),
            "violated": violated,
        }),
        text,
        finding: !chk.in_xf(),
    })
}

fn cmd_jordan(o: &Options) -> Result<Outcome, CliError> {
    let mj: MatrixJson = read_json(need(&o.matrix, "matrix")?)?;
    let a: RationalMatrix = matrix_from_json(&mj)?;
    let fmt_m = |m: &RationalMatrix| serde_json::to_string(&matrix_to_json(m)).expect("matrix serializes");
    match o.mode {
        ModeArg::Additive => {
            let jc = jordan_chevalley(&a, JCMode::Additive)?;
            Ok(Outcome {
                machine: json!({
                    "mode": "additive",
                    "S": matrix_to_json(&jc.semisimple),
                    "N": matrix_to_json(&jc.other),
                }),
                text: format!("S = {}\nN = {}\n", fmt_m(&jc.semisimple), fmt_m(&jc.other)),
                finding: false,
            })
        }
        ModeArg::Multiplicative => {
            let split = monodromy_split(&a)?;
            Ok(Outcome {
                machine: json!({
                    "mode": "multiplicative",
                    "S": matrix_to_json(&split.semisimple),
                    "U": matrix_to_json(&split.unipotent),
                    "log_U": matrix_to_json(&split.log_unipotent),
                }),
                text: format!(
                    "S = {}\nU = {}\nlog U = {}\n",
                    fmt_m(&split.semisimple),
                    fmt_m(&split.unipotent),
                    fmt_m(&split.log_unipotent)
                ),
                finding: false,
            })
        }
    }
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I) -> (Report, Format)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return (
                Report {
                    machine: json!({ "error": e.kind().to_string() }),
                    text: e.to_string(),
                    exit_code: code,
                },
                Format::Text,
            );
        }
    };
    let o = &cli.opts;
    let result = match cli.command {
        Command::Catalog => cmd_catalog(o),
        Command::VerifyDivisor => cmd_verify(o),
        Command::FrameInfo => cmd_frame_info(o),
        Command::ResidueSpace => cmd_residue_space(o),
        Command::EmitModuli => cmd_emit(o),
        Command::CheckFlat => cmd_check_flat(o),
        Command::CheckPoint => cmd_check_point(o),
        Command::Jordan => cmd_jordan(o),
    };
    let report = match result {
        Ok(out) => Report {
            machine: out.machine,
            text: out.text,
            exit_code: if out.finding && o.strict { 1 } else { 0 },
        },
        Err(e) => Report {
            machine: json!({ "error": e.to_string() }),
            text: format!("error: {e}\n"),
            exit_code: 2,
        },
    };
    (report, o.format)
}
