//! The `nilcx` command line: load an algebra from a file or the catalog,
//! run one verb, and render the result as text or JSON.
//!
//! Exit codes: 0 success / admits / true, 1 obstructed / false,
//! 2 undecided, 64 usage error, 65 data error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::classify::{self, Outcome, Step, Verdict};
use crate::exact::{Matrix, Scalar};
use crate::exterior::{annihilator_filtration, format_form, parse_form, parse_one_form, PForm};
use crate::liealg::{self, catalog, catalog_list, parse_algebra, print_algebra, CatalogParams, LieAlgebra};
use crate::spinor::{self, annihilator, cond_nondegenerate, integrability, spinor_from_data, Spinor};
use crate::structures::{
    courant, gcs_from_complex, gcs_from_symplectic, gcs_validate, j_from_coframe, pairing_signature,
    GcsReport, GeneralizedVector,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "nilcx", version, about = "Complex and generalized complex structures on nilpotent Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Check the Jacobi identity and report the lower central series type.
    Validate(Opts),
    /// Lower central series with bases.
    Series(Opts),
    /// The associated graded algebra, as an algebra file.
    Grade(Opts),
    /// The annihilator filtration V_0 ⊂ V_1 ⊂ … of g*.
    Filtration(Opts),
    /// Upper bound on the type of a generalized complex structure.
    Bound(Opts),
    /// Decide existence of a complex structure (type n).
    Classify(Opts),
    /// Verify a coframe given by repeated --theta.
    Witness(Opts),
    /// List catalog algebras, or print one as an algebra file.
    Catalog(CatalogOpts),
    /// Pairing signature and Courant brackets on g ⊕ g*; validates the
    /// structure induced by --omega or --theta when given.
    Courant(Opts),
    /// Build Ω ∧ exp(B + iω) and check nondegeneracy, purity, integrability.
    Spinor(Opts),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Algebra file.
    pub path: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Catalog algebra instead of a file.
    #[arg(long)]
    pub catalog: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<Scalar>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<Scalar>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<Scalar>,
    /// A 1-form such as `w0 + i w1`; repeat for a coframe.
    #[arg(long, allow_hyphen_values = true)]
    pub theta: Vec<String>,
    /// Real 2-form B.
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b_field: Option<String>,
    /// Real 2-form ω.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Refuse spinor computations above this dimension.
    #[arg(long, default_value_t = spinor::MAX_DIM)]
    pub max_dim: usize,
}

#[derive(Args, Debug, Clone)]
pub struct CatalogOpts {
    #[arg(long)]
    pub list: bool,
    #[command(flatten)]
    pub opts: Opts,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(code: i32, stdout: String) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Output {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parse arguments (including the program name) and run.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(code, text)
            }
        }
    }
}

struct Fail(i32, String);

type Res<T> = Result<T, Fail>;

fn data<E: std::fmt::Display>(e: E) -> Fail {
    Fail(EXIT_DATA, e.to_string())
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail(EXIT_USAGE, msg.into())
}

pub fn run(cli: &Cli) -> Output {
    let res = match &cli.verb {
        Verb::Validate(o) => validate(o),
        Verb::Series(o) => series(o),
        Verb::Grade(o) => grade(o),
        Verb::Filtration(o) => filtration(o),
        Verb::Bound(o) => bound(o),
        Verb::Classify(o) => classify_cmd(o),
        Verb::Witness(o) => witness(o),
        Verb::Catalog(c) => catalog_cmd(c),
        Verb::Courant(o) => courant_cmd(o),
        Verb::Spinor(o) => spinor_cmd(o),
    };
    match res {
        Ok((code, s)) => Output::ok(code, s),
        Err(Fail(code, msg)) => Output::fail(code, msg),
    }
}

fn load(o: &Opts) -> Res<LieAlgebra> {
    match (&o.path, &o.catalog) {
        (Some(_), Some(_)) => Err(usage("give either a file or --catalog, not both")),
        (None, None) => Err(usage("no algebra: give a file or --catalog NAME")),
        (Some(p), None) => {
            let text = std::fs::read_to_string(p).map_err(|e| data(format!("{}: {e}", p.display())))?;
            parse_algebra(&text).map_err(|e| data(format!("{}: {e}", p.display())))
        }
        (None, Some(name)) => {
            let params = CatalogParams {
                n: o.n,
                r: o.r,
                delta: o.delta.clone(),
                a: o.a.clone(),
                b: o.b.clone(),
            };
            catalog(name, &params).map_err(|e| match e {
                liealg::LieError::Parameter(_) => usage(e.to_string()),
                _ => data(e),
            })
        }
    }
}

fn emit(o: &Opts, code: i32, text: String, mut j: Value) -> Res<(i32, String)> {
    Ok((
        code,
        match o.format {
            Format::Text => text,
            Format::Json => {
                j.as_object_mut().unwrap().insert("schema".into(), json!(1));
                serde_json::to_string_pretty(&j).unwrap() + "\n"
            }
        },
    ))
}

fn forms(vs: &[Vec<Scalar>]) -> Vec<String> {
    vs.iter().map(|v| format_form(&PForm::from_real_coeffs(v))).collect()
}

fn matrix_rows(m: &Matrix<Scalar>) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

fn matrix_text(m: &Matrix<Scalar>, indent: &str) -> String {
    let rows = matrix_rows(m);
    let w = rows.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    rows.iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|s| format!("{s:>w$}")).collect();
            format!("{indent}[{}]\n", cells.join(" "))
        })
        .collect()
}

fn validate(o: &Opts) -> Res<(i32, String)> {
    let g = load(o)?;
    let r = g.report();
    let text = format!(
        "valid Lie algebra (Jacobi holds)\ndim: {}\nclass: {}\nnilindex: {}\nlower central series dims: {:?}\nform vector: {:?}\n",
        r.dim,
        r.class,
        r.nilindex.map_or("-".into(), |m| m.to_string()),
        r.lcs_dims,
        r.form_vector
    );
    emit(o, EXIT_OK, text, json!({ "valid": true, "report": r }))
}

fn series(o: &Opts) -> Res<(i32, String)> {
    let g = load(o)?;
    let s = g.lower_central_series();
    let mut text = String::new();
    let mut levels = Vec::new();
    for (i, sp) in s.iter().enumerate() {
        let basis: Vec<String> = sp.basis().iter().map(|v| g.format_vector(v)).collect();
        writeln!(text, "g^{i}: dim {}  span{{{}}}", sp.dim(), basis.join(", ")).unwrap();
        levels.push(json!({ "dim": sp.dim(), "basis": basis }));
    }
    emit(o, EXIT_OK, text, json!({ "series": levels }))
}

fn grade(o: &Opts) -> Res<(i32, String)> {
    let g = load(o)?;
    let h = liealg::graded(&g).map_err(data)?;
    let text = print_algebra(&h);
    emit(o, EXIT_OK, text.clone(), json!({ "graded": text, "same": h.same_constants(&g) }))
}

fn filtration(o: &Opts) -> Res<(i32, String)> {
    let g = load(o)?;
    let f = annihilator_filtration(&g).map_err(data)?;
    let mut text = String::new();
    let mut levels = Vec::new();
    for (i, sp) in f.spaces.iter().enumerate() {
        let basis = forms(sp.basis());
        writeln!(text, "V{i}: dim {}  span{{{}}}", sp.dim(), basis.join(", ")).unwrap();
        levels.push(json!({ "dim": sp.dim(), "basis": basis }));
    }
    writeln!(text, "quotient dims: {:?}", f.quotient_dims).unwrap();
    writeln!(text, "j: {}", f.j_index.map_or("undefined".into(), |j| j.to_string())).unwrap();
    emit(
        o,
        EXIT_OK,
        text,
        json!({ "spaces": levels, "quotient_dims": f.quotient_dims, "j": f.j_index, "nilindex": f.nilindex() }),
    )
}

fn bound(o: &Opts) -> Res<(i32, String)> {
    let g = load(o)?;
    let b = classify::type_bound(&g).map_err(data)?;
    let text = format!(
        "n: {}\nnilindex: {}\nj: {}\nk_max: {}\n{}\n",
        b.n,
        b.nilindex,
        b.j,
        b.k_max,
        if b.excludes_complex() {
            "no complex structure (k_max < n)"
        } else {
            "bound allows type n"
        }
    );
    emit(o, EXIT_OK, text, json!({ "bound": b, "excludes_complex": b.excludes_complex() }))
}

fn step_text(s: &Step) -> String {
    match s {
        Step::BranchLambda0 { reason } => format!("branch: {reason}"),
        Step::Substitute { assignments } => {
            let a: Vec<String> = assignments.iter().map(|(x, v)| format!("{x} = {v}")).collect();
            format!("substitute {}", a.join(", "))
        }
        Step::Factor { equation, factors, result } => {
            format!("equation {equation}: divide by nonzero {} → {result}", factors.join("·"))
        }
        Step::Relation { equation, polynomial } => format!("equation {equation}: relation {polynomial} = 0"),
        Step::LevelReduction {
            level,
            thetas,
            eliminated,
            unknowns,
            rows,
            minor_size,
            polynomial,
        } => {
            let th: Vec<String> = thetas.iter().map(|i| format!("θ{i}")).collect();
            let rs: Vec<String> = rows
                .iter()
                .map(|r| format!("[{}]", r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")))
                .collect();
            format!(
                "level {level} ({}): unknowns ({}), eliminated [{}], rows {}; gcd of {minor_size}×{minor_size} minors = {polynomial}",
                th.join(", "),
                unknowns.join(", "),
                eliminated.join(", "),
                rs.join(" ")
            )
        }
    }
}

fn verdict_text(g: &LieAlgebra, v: &Verdict) -> String {
    let mut t = String::new();
    let r = g.report();
    writeln!(
        t,
        "algebra: {} (dim {}, nilindex {})",
        v.class,
        r.dim,
        r.nilindex.map_or("-".into(), |m| m.to_string())
    )
    .unwrap();
    match &v.bound {
        Some(b) => writeln!(t, "type bound: j = {}, k_max = {}, n = {}", b.j, b.k_max, b.n).unwrap(),
        None => writeln!(t, "type bound: theorem inapplicable").unwrap(),
    }
    if let Some(c) = &v.certificate {
        writeln!(t, "obstruction: {}", c.conclusion.detail).unwrap();
    }
    for p in &v.profiles {
        writeln!(t, "profile {}: {}", p.profile, p.outcome).unwrap();
        if let Some(c) = &p.certificate {
            if !c.equations.is_empty() {
                writeln!(t, "  system ({} equations):", c.equations.len()).unwrap();
                for (i, e) in c.equations.iter().enumerate() {
                    writeln!(t, "    [{i}] {e} = 0").unwrap();
                }
                writeln!(t, "  side conditions: {}", c.side_conditions.join("; ")).unwrap();
            }
            for s in &c.steps {
                writeln!(t, "  {}", step_text(s)).unwrap();
            }
            let k = serde_json::to_value(c.conclusion.kind).unwrap();
            write!(t, "  contradiction ({}): {}", k.as_str().unwrap(), c.conclusion.detail).unwrap();
            if let (Some(poly), Some(n)) = (&c.conclusion.polynomial, c.conclusion.real_roots) {
                write!(t, "; polynomial {poly}, {n} distinct real root(s)").unwrap();
            }
            t.push('\n');
        }
        if let Some(res) = &p.residual {
            writeln!(t, "  unresolved system ({} equations):", res.equations.len()).unwrap();
            for e in &res.equations {
                writeln!(t, "    {e} = 0").unwrap();
            }
            if let Some(poly) = &res.polynomial {
                writeln!(t, "  relation on t: {poly}").unwrap();
            }
        }
    }
    if let Some(w) = &v.witness {
        writeln!(t, "witness coframe:").unwrap();
        for (i, th) in w.thetas.iter().enumerate() {
            writeln!(t, "  θ{} = {}", i + 1, format_form(th)).unwrap();
        }
        let stages: Vec<String> = w.report.stages.iter().map(|(s, ok)| format!("{s}={ok}")).collect();
        writeln!(t, "verification: {}", stages.join(" ")).unwrap();
        if let Some(j) = &w.report.j {
            writeln!(t, "J:").unwrap();
            t.push_str(&matrix_text(j, "  "));
        }
    }
    writeln!(t, "verdict: {}", v.outcome).unwrap();
    t
}

fn classify_cmd(o: &Opts) -> Res<(i32, String)> {
    let g = load(o)?;
    let v = classify::classify(&g).map_err(data)?;
    let code = match v.outcome {
        Outcome::Admits => EXIT_OK,
        Outcome::Obstructed => EXIT_FALSE,
        Outcome::Undecided => EXIT_UNDECIDED,
    };
    let text = verdict_text(&g, &v);
    emit(o, code, text, json!({ "verdict": v }))
}

fn thetas(g: &LieAlgebra, o: &Opts) -> Res<Vec<PForm>> {
    o.theta
        .iter()
        .map(|s| parse_one_form(s, g.dim()).map_err(|e| data(format!("--theta `{s}`: {e}"))))
        .collect()
}

fn two_form(g: &LieAlgebra, s: &Option<String>, flag: &str) -> Res<PForm> {
    match s {
        None => Ok(PForm::zero(g.dim(), 2)),
        Some(s) => {
            let f = parse_form(s, g.dim(), 2).map_err(|e| data(format!("--{flag} `{s}`: {e}")))?;
            if !f.is_real() {
                return Err(data(format!("--{flag} must be a real 2-form")));
            }
            Ok(f)
        }
    }
}

fn witness(o: &Opts) -> Res<(i32, String)> {
    let g = load(o)?;
    let th = thetas(&g, o)?;
    if th.is_empty() {
        return Err(usage("witness needs at least one --theta"));
    }
    if g.dim() > o.max_dim {
        return Err(data(format!("dimension {} exceeds --max-dim {}", g.dim(), o.max_dim)));
    }
    let r = classify::verify_witness(&g, &th);
    let mut t = String::new();
    for (s, ok) in &r.stages {
        writeln!(t, "{s}: {}", if *ok { "pass" } else { "FAIL" }).unwrap();
    }
    if let Some(j) = &r.j {
        writeln!(t, "J:").unwrap();
        t.push_str(&matrix_text(j, "  "));
    }
    match r.failed {
        Some(s) => writeln!(t, "witness rejected at stage `{s}`").unwrap(),
        None => writeln!(t, "witness verified").unwrap(),
    }
    let code = if r.ok { EXIT_OK } else { EXIT_FALSE };
    let forms: Vec<String> = th.iter().map(format_form).collect();
    emit(o, code, t, json!({ "thetas": forms, "report": r }))
}

fn catalog_cmd(c: &CatalogOpts) -> Res<(i32, String)> {
    let o = &c.opts;
    if c.list {
        let list = catalog_list();
        let w = list.iter().map(|e| e.name.len()).max().unwrap_or(0);
        let mut t = String::new();
        for e in &list {
            writeln!(t, "{:w$}  {:38}  {}", e.name, e.params, e.description).unwrap();
        }
        return emit(o, EXIT_OK, t, json!({ "catalog": list }));
    }
    if o.catalog.is_none() {
        return Err(usage("catalog needs --list or --catalog NAME"));
    }
    let g = load(o)?;
    let text = print_algebra(&g);
    emit(o, EXIT_OK, text.clone(), json!({ "algebra": text }))
}

fn gcs_json(r: &GcsReport) -> Value {
    json!({ "report": r, "valid": r.valid() })
}

fn gcs_text(label: &str, r: &GcsReport) -> String {
    format!(
        "{label}: {} (type {}, J² = −1: {}, orthogonal: {}, isotropic: {}, transverse: {}, involutive: {})\n",
        if r.valid() { "valid" } else { "invalid" },
        r.type_k.map_or("-".into(), |k| k.to_string()),
        r.square_ok,
        r.orthogonal_ok,
        opt(r.isotropic_ok),
        opt(r.transverse_ok),
        opt(r.involutive_ok),
    )
}

fn opt(b: Option<bool>) -> String {
    b.map_or("-".into(), |b| b.to_string())
}

fn courant_cmd(o: &Opts) -> Res<(i32, String)> {
    let g = load(o)?;
    let n = g.dim();
    let (_, plus, minus) = pairing_signature(n);
    let mut t = format!("pairing signature: ({plus}, {minus})\n");
    let basis: Vec<(String, GeneralizedVector<Scalar>)> = (0..n)
        .map(|k| (g.label(k).to_string(), GeneralizedVector::vector(liealg_unit(n, k))))
        .chain((0..n).map(|k| (format!("w{k}"), GeneralizedVector::covector(liealg_unit(n, k)))))
        .collect();
    let mut brackets = Vec::new();
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let c = courant(&g, &basis[a].1, &basis[b].1);
            if c.is_zero() {
                continue;
            }
            let mut parts = Vec::new();
            let v = g.format_vector(&c.vec);
            if !c.vec.iter().all(|x| x.is_zero()) {
                parts.push(v);
            }
            if !c.form.iter().all(|x| x.is_zero()) {
                parts.push(format_form(&PForm::from_real_coeffs(&c.form)));
            }
            let rhs = parts.join(" + ");
            writeln!(t, "[{}, {}] = {rhs}", basis[a].0, basis[b].0).unwrap();
            brackets.push(json!({ "x": basis[a].0, "y": basis[b].0, "value": rhs }));
        }
    }
    let mut j = json!({ "signature": [plus, minus], "brackets": brackets });
    let mut code = EXIT_OK;
    if o.omega.is_some() {
        let w = two_form(&g, &o.omega, "omega")?;
        let jj = gcs_from_symplectic(&g, &w).map_err(data)?;
        let r = gcs_validate(&g, &jj).map_err(data)?;
        t.push_str(&gcs_text("structure from ω", &r));
        if !r.valid() {
            code = EXIT_FALSE;
        }
        j["symplectic"] = gcs_json(&r);
    }
    if !o.theta.is_empty() {
        let th = thetas(&g, o)?;
        let jm = j_from_coframe(&g, &th).map_err(data)?;
        let jj = gcs_from_complex(&g, &jm).map_err(data)?;
        let r = gcs_validate(&g, &jj).map_err(data)?;
        t.push_str(&gcs_text("structure from J", &r));
        if !r.valid() {
            code = EXIT_FALSE;
        }
        j["complex"] = gcs_json(&r);
    }
    emit(o, code, t, j)
}

fn liealg_unit(n: usize, k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[k] = Scalar::int(1);
    v
}

fn spinor_cmd(o: &Opts) -> Res<(i32, String)> {
    let g = load(o)?;
    if g.dim() > o.max_dim {
        return Err(data(format!("dimension {} exceeds --max-dim {}", g.dim(), o.max_dim)));
    }
    let th = thetas(&g, o)?;
    let b = two_form(&g, &o.b_field, "B")?;
    let w = two_form(&g, &o.omega, "omega")?;
    let rho = spinor_from_data(g.dim(), &th, &b, &w);
    let nondeg = cond_nondegenerate(g.dim(), &th, &w);
    let ann = annihilator(&rho).map_err(data)?;
    let transverse = ann.space.meets_conjugate_trivially();
    let integ = integrability(&g, &rho).map_err(data)?;
    let ok = nondeg && ann.pure && transverse && integ.solution.is_some();
    let rho_n = Spinor::normalized(&rho).map_err(data)?;
    let mut t = format!("spinor: {rho_n}\n");
    writeln!(t, "type: {}", th.len()).unwrap();
    writeln!(t, "nondegenerate (ω^(n-k) ∧ Ω ∧ conj Ω ≠ 0): {nondeg}").unwrap();
    writeln!(t, "annihilator dim: {} (pure: {})", ann.space.dim(), ann.pure).unwrap();
    writeln!(t, "L ∩ conj L = 0: {transverse}").unwrap();
    writeln!(t, "closed (dρ = 0): {}", integ.closed).unwrap();
    writeln!(t, "integrable (dρ = v∘ρ): {}", integ.solution.is_some()).unwrap();
    writeln!(t, "{}", if ok { "defines a generalized complex structure" } else { "does not define a generalized complex structure" }).unwrap();
    let code = if ok { EXIT_OK } else { EXIT_FALSE };
    emit(
        o,
        code,
        t,
        json!({
            "spinor": rho_n,
            "type": th.len(),
            "nondegenerate": nondeg,
            "annihilator_dim": ann.space.dim(),
            "pure": ann.pure,
            "transverse": transverse,
            "closed": integ.closed,
            "integrable": integ.solution.is_some(),
            "gcs": ok,
        }),
    )
}
