//! Command-line front end for the `revsym` library.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use revsym::absgroup::{verify_theorem_claims, AbsGroupError, GroupModel, ModelKind};
use revsym::elliptic::{CurveMap, CurvePoint, EllipticError};
use revsym::matgroup::{analyze, GroupContext, MatGroupError, SearchBounds};
use revsym::numth::{predicted_count, square_roots_of_unity};
use revsym::polyauto::{build_example_family, check_family, max_degree, trace_map, trace_map_suite, PolyAutoError};
use revsym::{scoreboard, BigInt, BigRational, IntMatrix, RatCurve, RatPoint, RatPoly};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "revsym", version, about = "Exact reversibility analysis for group elements")]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Report wall time (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Gl,
    Pgl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyCase {
    Case1,
    Case2,
    Case3,
    Trace,
}

#[derive(Subcommand)]
enum Command {
    /// Reversors, symmetries and structure of an integer matrix.
    Analyze {
        /// Rows separated by ';', entries by whitespace, e.g. "0 1; 1 1".
        matrix: Option<String>,
        /// Read the matrix from a file, one row per line.
        #[arg(long, conflicts_with = "matrix")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Group::Gl)]
        group: Group,
        /// Expected dimension; checked against the parsed matrix.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 10)]
        reversor_bound: i64,
        #[arg(long, default_value_t = 50)]
        generator_bound: i64,
    },
    /// Structure claims in one of the presented groups.
    Absgroup {
        /// dinf, c2xdinf, c4, c2xcinf, c2p, cpxcinf, cinfxdinf, twisted, inverting
        model: String,
        #[arg(long = "p", default_value_t = 3)]
        p: u64,
        /// Twist exponent k in r t r = t g^k for the twisted model.
        #[arg(long, default_value_t = 1)]
        twist: i64,
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    /// Polynomial automorphism families and the trace map.
    Polyauto {
        #[arg(value_enum)]
        case: PolyCase,
        /// Odd polynomial p(y), little-endian integer coefficients, e.g. "0 0 0 1".
        #[arg(long = "p")]
        p: Option<String>,
        /// Odd polynomial q(x), little-endian integer coefficients.
        #[arg(long = "q")]
        q: Option<String>,
    },
    /// Reversors -P + S of a translation P -> P + Ω on y² = x³ + Ax + B.
    Elliptic {
        #[arg(long, num_args = 2, value_names = ["A", "B"], allow_hyphen_values = true, required = true)]
        curve: Vec<String>,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true, required = true)]
        omega: Vec<String>,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_hyphen_values = true, required = true)]
        s: Vec<String>,
    },
    /// Square roots of unity modulo n against the closed-form count.
    Modroots { n: u64 },
    /// Runs every reference check and prints a scoreboard.
    VerifyPaper,
}

/// Failure classes, mapped to exit codes.
enum Failure {
    Verification(String),
    Parse(String),
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Parse(m) | Failure::Precondition(m) => m,
        }
    }
}

impl From<MatGroupError> for Failure {
    fn from(e: MatGroupError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<PolyAutoError> for Failure {
    fn from(e: PolyAutoError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<EllipticError> for Failure {
    fn from(e: EllipticError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl From<AbsGroupError> for Failure {
    fn from(e: AbsGroupError) -> Self {
        match e {
            AbsGroupError::NotOddPrime(_) => Failure::Parse(e.to_string()),
            AbsGroupError::WindowTooSmall { .. } => Failure::Precondition(e.to_string()),
            AbsGroupError::ClaimViolated { .. } => Failure::Verification(e.to_string()),
        }
    }
}

/// Output of one command before it is wrapped in the envelope.
struct Outcome {
    input: Value,
    bounds: Value,
    result: Value,
    text: String,
    passed: bool,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    command: &'a str,
    input: &'a Value,
    result: &'a Value,
    bounds: &'a Value,
    wall_time_ms: Option<u128>,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn parse_matrix(text: &str, dim: Option<usize>) -> Result<IntMatrix, Failure> {
    let rows: Vec<Vec<BigInt>> = text
        .split([';', '\n'])
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.split_whitespace()
                .map(|t| BigInt::from_str(t).map_err(|_| Failure::Parse(format!("not an integer: {t:?}"))))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let m = IntMatrix::from_rows(rows).map_err(|e| Failure::Parse(e.to_string()))?;
    match dim {
        Some(d) if d != m.dim() => Err(Failure::Parse(format!("matrix is {0} x {0}, --dim says {d}", m.dim()))),
        _ => Ok(m),
    }
}

fn parse_rational(t: &str) -> Result<BigRational, Failure> {
    BigRational::from_str(t).map_err(|_| Failure::Parse(format!("not a rational number: {t:?}")))
}

fn parse_poly(text: &str) -> Result<RatPoly, Failure> {
    let coeffs: Vec<i64> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Parse(format!("not an integer coefficient: {t:?}"))))
        .collect::<Result<_, _>>()?;
    Ok(RatPoly::univariate(&coeffs))
}

fn cmd_analyze(matrix: &str, group: Group, dim: Option<usize>, bounds: SearchBounds) -> Result<Outcome, Failure> {
    let m = parse_matrix(matrix, dim)?;
    let ctx = match group {
        Group::Gl => GroupContext::gl(m.dim()),
        Group::Pgl => GroupContext::pgl(m.dim()),
    };
    if !m.is_unimodular() {
        return Err(Failure::Precondition(format!("det {m} = {} is not ±1", m.det())));
    }
    let rep = analyze(&m, ctx, bounds)?;

    let mut text = String::new();
    let _ = writeln!(text, "matrix          {}", rep.matrix);
    let _ = writeln!(text, "group           {}", ctx.name());
    let _ = writeln!(text, "order           {}", rep.order);
    let _ = writeln!(text, "char poly       {} ({:?})", rep.char_poly, rep.reciprocity);
    if rep.spectral_obstruction {
        let _ = writeln!(text, "obstruction     spectrum of f differs from that of its inverse");
    }
    if let Some(sym) = &rep.symmetry {
        let _ = writeln!(
            text,
            "symmetries      C{} x <g>, g = {}, f = {}g^{}",
            sym.finite_part_order,
            sym.generator,
            if sym.f_sign < 0 { "-" } else { "" },
            sym.f_exponent
        );
    }
    let _ = writeln!(text, "reversors       {} within coefficient bound {}", rep.reversors.len(), bounds.reversor);
    for r in &rep.reversors {
        let _ = writeln!(text, "  {}  order {}", r.matrix, r.order);
    }
    let structure = rep.classification.structure().map(|s| format!(" [{s}]")).unwrap_or_default();
    let _ = writeln!(text, "classification  {:?}{structure}", rep.classification);
    let _ = writeln!(text, "status          {:?}", rep.status);
    for n in &rep.notes {
        let _ = writeln!(text, "note            {n}");
    }

    Ok(Outcome {
        input: json!({ "matrix": to_value(&m), "group": ctx.name(), "dim": m.dim() }),
        bounds: to_value(&bounds),
        result: to_value(&rep),
        text,
        passed: true,
    })
}

fn cmd_absgroup(model: &str, p: u64, twist: i64, window: i64) -> Result<Outcome, Failure> {
    let kind = match ModelKind::parse(model, p).ok_or_else(|| Failure::Parse(format!("unknown model {model:?}")))? {
        ModelKind::TwistedDinf(_) => ModelKind::TwistedDinf(twist),
        k => k,
    };
    if window < 1 {
        return Err(Failure::Precondition(format!("window must be positive, got {window}")));
    }
    let m = GroupModel::new(kind)?;
    let rep = verify_theorem_claims(&m, window)?;

    let mut text = String::new();
    let _ = writeln!(text, "model      {kind}");
    let _ = writeln!(text, "window     {window}");
    let _ = writeln!(text, "reversors  {}", rep.reversor_count);
    let _ = writeln!(text, "symmetries {}", rep.symmetry_count);
    let spectrum: Vec<String> = rep.order_spectrum.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "orders     {{{}}}", spectrum.join(", "));
    for c in rep.claims.iter() {
        let mark = match (c.applicable, c.passed) {
            (false, _) => "n/a ",
            (true, true) => "pass",
            (true, false) => "FAIL",
        };
        let _ = writeln!(text, "  {mark}  {:<36} {}", c.name, c.detail);
    }

    Ok(Outcome {
        input: json!({ "model": model, "kind": kind.to_string(), "p": p, "twist": twist }),
        bounds: json!({ "window": window }),
        passed: rep.all_passed(),
        result: to_value(&rep),
        text,
    })
}

fn cmd_polyauto(case: PolyCase, p: Option<&str>, q: Option<&str>) -> Result<Outcome, Failure> {
    let bounds = json!({ "max_degree": max_degree() });
    if case == PolyCase::Trace {
        let (f, r, r_prime) = trace_map::<BigRational>();
        let rep = trace_map_suite::<BigRational>()?;
        let mut text = String::new();
        let _ = writeln!(text, "F   = {f}");
        let _ = writeln!(text, "r   = {r}");
        let _ = writeln!(text, "r'  = {r_prime}");
        for (name, ok) in [
            ("invariant preserved", rep.invariant_preserved),
            ("r reverses F", rep.r_reverses),
            ("r' reverses F", rep.r_prime_reverses),
            ("r and r' are involutions", rep.r_involution && rep.r_prime_involution),
            ("F fixes (1, 1, 1)", rep.fixes_unit_point),
        ] {
            let _ = writeln!(text, "  {}  {name}", if ok { "pass" } else { "FAIL" });
        }
        return Ok(Outcome {
            input: json!({ "case": "trace" }),
            bounds,
            passed: rep.all_passed(),
            result: json!({ "f": f.to_string(), "r": r.to_string(), "r_prime": r_prime.to_string(), "checks": to_value(&rep) }),
            text,
        });
    }
    let n = match case {
        PolyCase::Case1 => 1,
        PolyCase::Case2 => 2,
        _ => 3,
    };
    let p = p.map(parse_poly).transpose()?;
    let q = q.map(parse_poly).transpose()?;
    let fam = build_example_family(n, p.as_ref(), q.as_ref())?;
    let rep = check_family(&fam)?;

    let mut text = String::new();
    let _ = writeln!(text, "f   = {}", fam.f);
    let _ = writeln!(text, "s   = {}", fam.s);
    let _ = writeln!(text, "r   = {}", fam.r);
    if let (Some(t), Some(rp)) = (&fam.t, &fam.r_prime) {
        let _ = writeln!(text, "t   = {t}");
        let _ = writeln!(text, "r'  = {rp}");
    }
    let order = rep.reversor_order.map_or("> 8".to_string(), |k| k.to_string());
    let mut rows = vec![
        ("f ∘ r ∘ f = r".to_string(), rep.reversor_identity),
        ("f ∘ s = s ∘ f".to_string(), rep.symmetry_identity),
        (format!("r has order {order}"), rep.reversor_order.is_some()),
    ];
    if n == 2 {
        rows.push(("r² = s".to_string(), rep.reversor_square_is_s));
    }
    if let Some(ok) = rep.root_squares_to_f {
        rows.push(("t² = f".to_string(), ok));
    }
    if let Some(k) = rep.r_prime_order {
        rows.push((format!("r' has order {k}"), true));
    }
    if let Some(ok) = rep.r_prime_reverses {
        rows.push(("r' reverses f".to_string(), ok));
    }
    if let Some(ok) = rep.reversor_product_is_symmetry {
        rows.push(("r' ∘ r = t is a symmetry".to_string(), ok));
    }
    for (name, ok) in rows {
        let _ = writeln!(text, "  {}  {name}", if ok { "pass" } else { "FAIL" });
    }

    let (dp, dq) = revsym::polyauto::default_parameters::<BigRational>();
    Ok(Outcome {
        input: json!({
            "case": n,
            "p": p.unwrap_or(dp).to_string(),
            "q": q.unwrap_or(dq).to_string(),
        }),
        bounds,
        passed: rep.all_passed(),
        result: json!({ "family": to_value(&fam), "checks": to_value(&rep) }),
        text,
    })
}

/// `k·Ω + l·S` for `|k|, |l| <= 2`, without repeats.
fn elliptic_sample(curve: &RatCurve, omega: &RatPoint, s: &RatPoint) -> Result<Vec<RatPoint>, Failure> {
    let mut pts: Vec<RatPoint> = Vec::new();
    for k in -2..=2 {
        for l in -2..=2 {
            let p = curve.add(&curve.scalar_mul(k, omega)?, &curve.scalar_mul(l, s)?)?;
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
    }
    Ok(pts)
}

fn cmd_elliptic(curve: &[String], omega: &[String], s: &[String]) -> Result<Outcome, Failure> {
    let (a, b) = (parse_rational(&curve[0])?, parse_rational(&curve[1])?);
    let c = RatCurve::new(a, b)?;
    let omega = RatPoint::affine(parse_rational(&omega[0])?, parse_rational(&omega[1])?);
    let s = RatPoint::affine(parse_rational(&s[0])?, parse_rational(&s[1])?);
    for (name, pt) in [("Ω", &omega), ("S", &s)] {
        if !c.contains(pt) {
            return Err(Failure::Precondition(format!("{name} = {pt} is not on the curve")));
        }
    }
    let sample = elliptic_sample(&c, &omega, &s)?;
    let reverses = c.check_reversor_on_samples(&omega, &s, &sample)?;
    let n = CurveMap::NegTranslation(s.clone());
    let involution = c.compose_maps(&n, &n)? == CurveMap::Translation(CurvePoint::Infinity);
    let neg_omega = c.neg(&omega)?;

    let mut text = String::new();
    let _ = writeln!(text, "curve        y² = x³ + ({})x + ({})", c.a(), c.b());
    let _ = writeln!(text, "translation  P -> P + {omega}");
    let _ = writeln!(text, "reversor     P -> -P + {s}");
    let _ = writeln!(text, "inverse      P -> P + {neg_omega}");
    let _ = writeln!(text, "  {}  reversor is an involution", if involution { "pass" } else { "FAIL" });
    let _ = writeln!(
        text,
        "  {}  r ∘ T ∘ r = T⁻¹ symbolically and on {} sample points",
        if reverses { "pass" } else { "FAIL" },
        sample.len()
    );

    Ok(Outcome {
        input: json!({
            "curve": [c.a().to_string(), c.b().to_string()],
            "omega": omega.to_string(),
            "s": s.to_string(),
        }),
        bounds: json!({ "sample_points": sample.len() }),
        passed: reverses && involution,
        result: json!({
            "inverse_translation": neg_omega.to_string(),
            "reversor_is_involution": involution,
            "conjugation_inverts": reverses,
            "sample": to_value(&sample),
        }),
        text,
    })
}

fn cmd_modroots(n: u64) -> Result<Outcome, Failure> {
    if n == 0 {
        return Err(Failure::Precondition("modulus must be positive".into()));
    }
    let roots = square_roots_of_unity(n);
    let predicted = predicted_count(n);
    let matches = roots.len() as u64 == predicted;
    let listed: Vec<String> = roots.iter().map(ToString::to_string).collect();
    let mut text = String::new();
    let _ = writeln!(text, "n          {n}");
    let _ = writeln!(text, "roots      {{{}}}", listed.join(", "));
    let _ = writeln!(text, "count      {}", roots.len());
    let _ = writeln!(text, "predicted  {predicted}");
    let _ = writeln!(text, "  {}  count matches formula", if matches { "pass" } else { "FAIL" });
    Ok(Outcome {
        input: json!({ "n": n.to_string() }),
        bounds: Value::Null,
        result: json!({ "roots": listed, "count": roots.len(), "predicted": predicted, "matches": matches }),
        text,
        passed: matches,
    })
}

fn cmd_verify() -> Outcome {
    let results = scoreboard::run_all();
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "{} {:<26} {} ({} checks)", r.id, r.name, if r.passed { "PASS" } else { "FAIL" }, r.checks.len());
        for c in r.failures() {
            let _ = writeln!(text, "    failed: {}", c.label);
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(text, "{passed}/{} criteria passed", results.len());
    Outcome {
        input: Value::Null,
        bounds: json!({ "property_seed": scoreboard::PROPERTY_SEED.to_string() }),
        passed: passed == results.len(),
        result: to_value(&results),
        text,
    }
}

fn run(cli: &Cli) -> Result<(&'static str, Outcome), Failure> {
    Ok(match &cli.command {
        Command::Analyze {
            matrix,
            file,
            group,
            dim,
            reversor_bound,
            generator_bound,
        } => {
            let text = match (matrix, file) {
                (Some(m), _) => m.clone(),
                (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?,
                (None, None) => return Err(Failure::Parse("no matrix given; pass it inline or with --file".into())),
            };
            let bounds = SearchBounds {
                reversor: *reversor_bound,
                generator: *generator_bound,
                ..SearchBounds::default()
            };
            ("analyze", cmd_analyze(&text, *group, *dim, bounds)?)
        }
        Command::Absgroup { model, p, twist, window } => ("absgroup", cmd_absgroup(model, *p, *twist, *window)?),
        Command::Polyauto { case, p, q } => ("polyauto", cmd_polyauto(*case, p.as_deref(), q.as_deref())?),
        Command::Elliptic { curve, omega, s } => ("elliptic", cmd_elliptic(curve, omega, s)?),
        Command::Modroots { n } => ("modroots", cmd_modroots(*n)?),
        Command::VerifyPaper => ("verify-paper", cmd_verify()),
    })
}

/// Writes to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok((command, out)) => {
            let wall = cli.timing.then(|| start.elapsed().as_millis());
            match cli.format {
                Format::Json => {
                    let env = Envelope {
                        schema_version: SCHEMA_VERSION,
                        command,
                        input: &out.input,
                        result: &out.result,
                        bounds: &out.bounds,
                        wall_time_ms: wall,
                    };
                    emit(&format!("{}\n", serde_json::to_string_pretty(&env).expect("envelope serializes")));
                }
                Format::Text => {
                    emit(&out.text);
                    if let Some(ms) = wall {
                        emit(&format!("wall time {ms} ms\n"));
                    }
                }
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
