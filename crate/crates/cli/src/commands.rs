use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lcplie_core::lattice::{
    lattice_index, lemma51_check, smith_normal_form, IntMatrix, IntegerEndomorphism, Lemma51Verdict, SplitDecomposition,
};
use lcplie_core::lcp::{self, FlatFactorKind, LcpError, LcpStructure};
use lcplie_core::metric;
use lcplie_core::scalar::{format_scalar, parse_scalar};
use lcplie_core::{Covector, InnerProduct, LieAlgebra, Subspace};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::document::{self, AlgebraDocument, MatrixDocument, Rat};
use crate::format::{json_subspace, json_vector, subspace, tuple, yes_no};
use crate::model::{self, Model};

/// Tolerance of the floating-point conformality check in `lcp detect`.
pub const CONFORMAL_TOLERANCE: f64 = 1e-9;
const CONFORMAL_TIMES: [f64; 4] = [-1.0, -0.5, 0.5, 1.0];

#[derive(Debug, Parser)]
#[command(
    name = "lcplie",
    version,
    about = "LCP structures on metric Lie algebras, in exact arithmetic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a document and check Jacobi, metric, Lee form and triple data.
    Validate { file: PathBuf },
    /// Structural summary of the algebra.
    Analyze { file: PathBuf },
    /// LCP structures: validation, maximal flat factor, triples, constraints.
    Lcp {
        action: LcpAction,
        file: PathBuf,
        /// Candidate subspace for char-bound, as rows `r1;r2` of comma-separated rationals.
        #[arg(long)]
        candidate: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Integer matrices: Smith form, lattice index, invertibility of A - I on a split lattice.
    Lattice {
        action: LatticeAction,
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LcpAction {
    Detect,
    MaxFlat,
    FromTriple,
    CharBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeAction {
    Snf,
    Index,
    Lemma51,
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(stdout: String) -> Self {
        Outcome {
            code: 2,
            stdout,
            stderr: String::new(),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Io(String),
    Parse(String),
    Invalid(Vec<String>),
}

impl From<LcpError> for Failure {
    fn from(e: LcpError) -> Self {
        Failure::Invalid(vec![e.to_string()])
    }
}

impl From<metric::MetricError> for Failure {
    fn from(e: metric::MetricError) -> Self {
        Failure::Invalid(vec![e.to_string()])
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(vec![msg.into()])
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        let (code, text) = match self {
            Failure::Io(m) => (1, format!("error: {m}\n")),
            Failure::Parse(m) => (1, format!("error: {m}\n")),
            Failure::Invalid(ms) => {
                let mut s = String::from("invalid:\n");
                for m in ms {
                    s.push_str(&format!("  - {m}\n"));
                }
                (2, s)
            }
        };
        Outcome {
            code,
            stdout: String::new(),
            stderr: text,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Analyze { file } => analyze(file),
        Command::Lcp {
            action,
            file,
            candidate,
            json,
        } => {
            if candidate.is_some() && *action != LcpAction::CharBound {
                Err(Failure::Parse("--candidate only applies to `lcp char-bound`".into()))
            } else {
                lcp_command(*action, file, candidate.as_deref(), *json)
            }
        }
        Command::Lattice { action, file, json } => lattice_command(*action, file, *json),
    };
    result.unwrap_or_else(Failure::into_outcome)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_doc<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = read(path)?;
    document::parse(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn load_model(path: &Path) -> Result<Model, Failure> {
    let doc: AlgebraDocument = parse_doc(path)?;
    model::load(&doc).map_err(Failure::Invalid)
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn validate(path: &Path) -> Result<Outcome, Failure> {
    let m = load_model(path)?;
    let l = &m.algebra;
    let mut out = format!(
        "valid: Lie algebra of dim {} with basis ({})\n",
        l.dim(),
        l.labels().join(", ")
    );
    if let Some(g) = &m.metric {
        out.push_str(&format!(
            "metric: {}\n",
            if g.is_standard() {
                "identity"
            } else {
                "positive definite"
            }
        ));
    }
    if let Some(t) = &m.theta {
        out.push_str(&format!("theta: closed, {}\n", tuple(&t.0)));
    }
    if let Some(u) = &m.flat_factor {
        out.push_str(&format!("flat factor: {}\n", subspace(l.labels(), u)));
    }
    if let Some(t) = &m.triple {
        out.push_str(&format!(
            "triple: q = {}, labels ({})\n",
            t.q(),
            t.u_labels().join(", ")
        ));
    }
    Ok(Outcome::ok(out))
}

fn analyze(path: &Path) -> Result<Outcome, Failure> {
    let m = load_model(path)?;
    let l = &m.algebra;
    let labels = l.labels();
    let radical = l.radical().map_err(|e| invalid(e.to_string()))?;
    let (p, n, z) = l.killing_signature();
    let lines = [
        format!("dim: {}", l.dim()),
        format!("basis: {}", labels.join(", ")),
        format!("abelian: {}", yes_no(l.is_abelian())),
        format!("nilpotent: {}", yes_no(l.is_nilpotent())),
        format!("solvable: {}", yes_no(l.is_solvable())),
        format!("unimodular: {}", yes_no(l.is_unimodular())),
        format!("semisimple: {}", yes_no(radical.is_zero())),
        format!("g' = {}", subspace(labels, &l.derived_algebra())),
        format!("radical = {}", subspace(labels, &radical)),
        format!("center = {}", subspace(labels, &l.center())),
        format!("trace form = {}", tuple(&l.trace_form().0)),
        format!("killing signature = ({p}, {n}, {z})"),
    ];
    Ok(Outcome::ok(lines.join("\n") + "\n"))
}

fn metric_and_theta(m: &Model) -> Result<(&InnerProduct, &Covector), Failure> {
    let g = m.metric.as_ref().ok_or_else(|| invalid("document has no metric"))?;
    let t = m.theta.as_ref().ok_or_else(|| invalid("document has no theta"))?;
    Ok((g, t))
}

fn kind_name(k: FlatFactorKind) -> &'static str {
    match k {
        FlatFactorKind::Lcp => "lcp",
        FlatFactorKind::ConformallyFlat => "conformally-flat",
        FlatFactorKind::NoLcp => "none",
    }
}

fn lcp_command(action: LcpAction, path: &Path, candidate: Option<&str>, json: bool) -> Result<Outcome, Failure> {
    let m = load_model(path)?;
    match action {
        LcpAction::Detect => detect(&m, json),
        LcpAction::MaxFlat => max_flat(&m, json),
        LcpAction::FromTriple => from_triple(&m),
        LcpAction::CharBound => char_bound(&m, candidate, json),
    }
}

/// Largest flat subspace of the Weyl connection, without requiring
/// unimodularity.
fn computed_flat_factor(l: &LieAlgebra, g: &InnerProduct, theta: &Covector) -> Result<Subspace, Failure> {
    let c = metric::weyl_from_levi_civita(l, g, theta)?;
    let r = metric::curvature(l, &c)?;
    Ok(lcp::largest_flat_subspace(&c, &r))
}

fn conformal_check(s: &LcpStructure) -> bool {
    let n = s.algebra().dim();
    (0..n).all(|i| {
        let x = lcplie_core::scalar::unit_vector(n, i);
        CONFORMAL_TIMES
            .iter()
            .all(|&t| lcp::verify_conformal_exponential(s, &x, t, CONFORMAL_TOLERANCE))
    })
}

fn detect(m: &Model, json: bool) -> Result<Outcome, Failure> {
    let l = &m.algebra;
    let (g, theta) = metric_and_theta(m)?;
    let (u, source) = match &m.flat_factor {
        Some(u) => (u.clone(), "document"),
        None => (computed_flat_factor(l, g, theta)?, "computed"),
    };
    let labels = l.labels();
    match lcp::validate_lcp(l, g, theta, &u) {
        Ok(s) => {
            let conformal = conformal_check(&s);
            if json {
                return Ok(Outcome::ok(render_json(&json!({
                    "lcp": true,
                    "flat_factor": json_subspace(&u),
                    "flat_factor_source": source,
                    "adapted": s.is_adapted(),
                    "maximal": s.is_maximal(),
                    "unimodular": l.is_unimodular(),
                    "conformal_check": { "passed": conformal, "tolerance": "1e-9" },
                    "violations": [],
                }))));
            }
            let text = format!(
                "LCP structure: yes\nflat factor = {} (dim {}, {source})\nadapted: {}\nmaximal: {}\nunimodular: {}\nconformal exponential check (tol 1e-9): {}\n",
                subspace(labels, &u),
                u.dim(),
                yes_no(s.is_adapted()),
                yes_no(s.is_maximal()),
                yes_no(l.is_unimodular()),
                if conformal { "passed" } else { "FAILED" },
            );
            Ok(Outcome::ok(text))
        }
        Err(LcpError::Invalid(v)) => {
            let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
            if json {
                return Ok(Outcome::invalid(render_json(&json!({
                    "lcp": false,
                    "flat_factor": json_subspace(&u),
                    "flat_factor_source": source,
                    "violations": msgs,
                }))));
            }
            let mut text = format!(
                "LCP structure: no\nflat factor = {} (dim {}, {source})\n",
                subspace(labels, &u),
                u.dim()
            );
            for msg in msgs {
                text.push_str(&format!("violation: {msg}\n"));
            }
            Ok(Outcome::invalid(text))
        }
        Err(e) => Err(e.into()),
    }
}

fn max_flat(m: &Model, json: bool) -> Result<Outcome, Failure> {
    let l = &m.algebra;
    let (g, theta) = metric_and_theta(m)?;
    let f = match lcp::maximal_flat_factor(l, g, theta) {
        Err(LcpError::NotUnimodular) => {
            return Err(invalid(format!(
                "max-flat needs a unimodular algebra (the maximal flat factor is only unique there); trace form = {}",
                tuple(&l.trace_form().0)
            )))
        }
        other => other?,
    };
    let adapted = f.subspace.basis().rows().all(|r| theta.eval(r).is_zero());
    if json {
        return Ok(Outcome::ok(render_json(&json!({
            "flat_factor": json_subspace(&f.subspace),
            "dim": f.subspace.dim(),
            "kind": kind_name(f.kind),
            "adapted": adapted,
        }))));
    }
    let lcp_flag = match f.kind {
        FlatFactorKind::Lcp => "yes".to_string(),
        other => format!("no ({other})"),
    };
    Ok(Outcome::ok(format!(
        "flat factor = {}, dim {}, LCP: {lcp_flag}, adapted: {}\n",
        subspace(l.labels(), &f.subspace),
        f.subspace.dim(),
        yes_no(adapted)
    )))
}

fn from_triple(m: &Model) -> Result<Outcome, Failure> {
    if m.metric.is_none() {
        return Err(invalid("document has no metric"));
    }
    let t = m
        .triple
        .as_ref()
        .ok_or_else(|| invalid("document has no triple block"))?;
    let s = lcp::build_from_triple(t)?;
    let doc = model::to_document(s.algebra(), Some(s.metric()), Some(s.lee_form()), Some(s.flat_factor()));
    Ok(Outcome::ok(document::emit(&doc)))
}

fn parse_candidate(n: usize, text: &str) -> Result<Subspace, Failure> {
    let mut rows = Vec::new();
    for (r, row) in text.split(';').enumerate() {
        let v = row
            .split(',')
            .map(|x| parse_scalar(x.trim()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::Parse(format!("--candidate row {}: {e}", r + 1)))?;
        if v.len() != n {
            return Err(invalid(format!(
                "--candidate row {} has {} entries, expected {n}",
                r + 1,
                v.len()
            )));
        }
        rows.push(v);
    }
    Ok(Subspace::span(n, &rows))
}

fn char_bound(m: &Model, candidate: Option<&str>, json: bool) -> Result<Outcome, Failure> {
    let l = &m.algebra;
    let labels = l.labels();
    let (g, theta) = metric_and_theta(m)?;
    let u = match &m.flat_factor {
        Some(u) => u.clone(),
        None => lcp::maximal_flat_factor(l, g, theta)?.subspace,
    };
    let s = lcp::validate_lcp(l, g, theta, &u)?;
    let bound = lcp::characteristic_constraint_space(&s)?;
    let abelian = l.is_abelian_subspace(&bound).map_err(|e| invalid(e.to_string()))?;
    let radical = l.radical().map_err(|e| invalid(e.to_string()))?;
    let in_radical = radical.contains(&bound);
    let in_derived = l.derived_algebra().contains(&bound);
    let report = candidate
        .map(|c| parse_candidate(l.dim(), c))
        .transpose()?
        .map(|p| lcp::check_candidate(&s, &p))
        .transpose()?;
    if json {
        let cand = report.as_ref().map_or(Value::Null, |r| {
            json!({
                "subspace": json_subspace(&r.candidate),
                "theta_vanishes": r.theta_vanishes,
                "action_trivial": r.action_trivial,
                "abelian": r.is_abelian,
                "in_radical": r.in_radical,
                "in_derived": r.in_commutator,
                "within_bound": r.within_bound,
            })
        });
        return Ok(Outcome::ok(render_json(&json!({
            "flat_factor": json_subspace(&u),
            "bound": json_subspace(&bound),
            "abelian": abelian,
            "in_radical": in_radical,
            "in_derived": in_derived,
            "candidate": cand,
        }))));
    }
    let mut text = format!(
        "flat factor = {}\nbound = {} (dim {})\nabelian: {}\nin radical: {}\nin g': {}\n",
        subspace(labels, &u),
        subspace(labels, &bound),
        bound.dim(),
        yes_no(abelian),
        yes_no(in_radical),
        yes_no(in_derived),
    );
    if let Some(r) = report {
        text.push_str(&format!("candidate = {}\n", subspace(labels, &r.candidate)));
        for (name, ok) in [
            ("theta vanishes", r.theta_vanishes),
            ("acts trivially on the flat factor", r.action_trivial),
            ("abelian", r.is_abelian),
            ("in radical", r.in_radical),
            ("in g'", r.in_commutator),
            ("within bound", r.within_bound),
        ] {
            text.push_str(&format!("  {name}: {}\n", yes_no(ok)));
        }
    }
    Ok(Outcome::ok(text))
}

fn integer_rows(name: &str, rows: &[Vec<Rat>]) -> Result<Vec<Vec<BigInt>>, Failure> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    if x.0.is_integer() {
                        Ok(x.0.to_integer())
                    } else {
                        Err(invalid(format!(
                            "{name} entry {} is not an integer",
                            format_scalar(&x.0)
                        )))
                    }
                })
                .collect()
        })
        .collect()
}

fn int_matrix(doc: &MatrixDocument) -> Result<IntMatrix, Failure> {
    if doc.matrix.is_empty() {
        return Err(invalid("matrix is empty"));
    }
    IntMatrix::from_rows(integer_rows("matrix", &doc.matrix)?).map_err(|e| invalid(e.to_string()))
}

fn render_int_matrix(m: &IntMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn json_int_matrix(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|x| json!(x.to_string())).collect()))
            .collect(),
    )
}

fn split(doc: &MatrixDocument, k: usize) -> Result<SplitDecomposition, Failure> {
    let mut spaces = Vec::new();
    for (name, rows) in [("e1", &doc.e1), ("e2", &doc.e2)] {
        let rows = rows.as_ref().ok_or_else(|| invalid(format!("lemma51 needs {name}")))?;
        if rows.iter().any(|r| r.len() != k) {
            return Err(invalid(format!("{name} vectors must have {k} entries")));
        }
        let vs: Vec<_> = rows.iter().map(|r| document::scalars(r)).collect();
        spaces.push(Subspace::span(k, &vs));
    }
    let e2 = spaces.pop().expect("two spaces");
    let e1 = spaces.pop().expect("two spaces");
    SplitDecomposition::new(e1, e2).map_err(|e| invalid(format!("invalid splitting: {e}")))
}

fn lattice_command(action: LatticeAction, path: &Path, json: bool) -> Result<Outcome, Failure> {
    let doc: MatrixDocument = parse_doc(path)?;
    let a = int_matrix(&doc)?;
    match action {
        LatticeAction::Snf => {
            let s = smith_normal_form(&a);
            let factors: Vec<String> = s.invariant_factors().iter().map(ToString::to_string).collect();
            if json {
                return Ok(Outcome::ok(render_json(&json!({
                    "d": json_int_matrix(&s.d),
                    "u": json_int_matrix(&s.u),
                    "v": json_int_matrix(&s.v),
                    "invariant_factors": factors,
                }))));
            }
            Ok(Outcome::ok(format!(
                "invariant factors: {}\nD = {}\nU = {}\nV = {}\n",
                factors.join(", "),
                render_int_matrix(&s.d),
                render_int_matrix(&s.u),
                render_int_matrix(&s.v)
            )))
        }
        LatticeAction::Index => {
            let e = IntegerEndomorphism::new(a).map_err(|e| invalid(e.to_string()))?;
            let idx = lattice_index(&e).map_err(|e| invalid(e.to_string()))?;
            if json {
                return Ok(Outcome::ok(render_json(&json!({
                    "index": idx.to_string(),
                    "det": e.determinant().to_string(),
                }))));
            }
            Ok(Outcome::ok(format!("{idx}\n")))
        }
        LatticeAction::Lemma51 => {
            let e = IntegerEndomorphism::new(a).map_err(|e| invalid(e.to_string()))?;
            let sp = split(&doc, e.dim())?;
            let v = lemma51_check(&e, &sp).map_err(|e| invalid(e.to_string()))?;
            Ok(Outcome::ok(if json {
                render_json(&lemma51_json(&v))
            } else {
                lemma51_text(&v)
            }))
        }
    }
}

fn int_tuple(x: &[BigInt]) -> String {
    format!("({})", x.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn lemma51_json(v: &Lemma51Verdict) -> Value {
    let witness = v.witness.as_ref().map_or(Value::Null, |w| {
        json!({
            "x": w.x.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "hyperplane": json_subspace(&w.hyperplane),
            "step": json_vector(&w.step),
        })
    });
    json!({
        "integrality": v.integrality,
        "e1_invariant": v.e1_invariant,
        "e2_invariant": v.e2_invariant,
        "restriction_invertible": v.restriction_invertible,
        "hypotheses_ok": v.hypotheses_ok(),
        "det_a_minus_i": v.det_a_minus_i.to_string(),
        "conclusion_holds": v.conclusion_holds(),
        "index": v.index().map(|i| i.to_string()),
        "witness": witness,
        "density_refuted": v.witness.is_some(),
    })
}

fn lemma51_text(v: &Lemma51Verdict) -> String {
    let mut out = format!(
        "integer matrix: {}\nE1 invariant: {}\nE2 invariant: {}\n(A-I) invertible on E1: {}\ndet(A-I) = {}\n",
        yes_no(v.integrality),
        yes_no(v.e1_invariant),
        yes_no(v.e2_invariant),
        yes_no(v.restriction_invertible),
        v.det_a_minus_i
    );
    if !v.hypotheses_ok() {
        out.push_str("lemma does not apply: a hypothesis other than density fails\n");
    } else if let Some(idx) = v.index() {
        out.push_str(&format!("conclusion holds: A-I is invertible, index = {idx}\n"));
    } else if let Some(w) = &v.witness {
        let pseudo_labels: Vec<String> = (1..=w.step.len()).map(|i| format!("e{i}")).collect();
        out.push_str(&format!(
            "witness x = {}\nhyperplane W = {}\nstep = {}\ndensity hypothesis refuted: pi2(Z^k) lies in W + Z * step\n",
            int_tuple(&w.x),
            subspace(&pseudo_labels, &w.hyperplane),
            tuple(&w.step),
        ));
    }
    out
}
