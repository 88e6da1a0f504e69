//! Batch driver for validators, weight-system evaluations, wheel
//! asymptotics and certificates.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, ValueEnum};
use serde::Serialize;

use vassiliev_core::arith::rational::{fmt_rational, parse_rational};
use vassiliev_core::arith::{MultiPoly, Rational};
use vassiliev_core::diagram::{basis_A, basis_A_four_term, Diagram, GradedB, LinComb};
use vassiliev_core::kricker::{closed_form, default_lambda0, top_coefficient};
use vassiliev_core::lie::{d21, sl2, validate, AlphaMode, SuperAlgebra};
use vassiliev_core::vogel::{build_d_element, default_q, parse_table, SymPoly, DEFAULT_TABLE};
use vassiliev_core::weight::{adjoint_rep, eval_state_sum, eval_verma};
use vassiliev_core::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Validate,
    Kricker,
    Certify,
    Eval,
    Dims,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    StateSum,
    Verma,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algebra {
    Sl2,
    D21,
}

#[derive(Parser, Debug)]
#[command(name = "vassiliev", version, about = "Exact Jacobi diagram and Lie superalgebra computations")]
struct Args {
    #[arg(long, value_enum)]
    command: Command,
    /// Even k, or an inclusive range such as 2..10.
    #[arg(long)]
    k: Option<String>,
    /// Degree d = 15 + deg Q; picks the default Q.
    #[arg(long)]
    d: Option<u32>,
    /// Q as a polynomial in t, s2, s3 (elementary symmetric) or lambda, mu, nu.
    #[arg(long)]
    q: Option<String>,
    /// "symbolic" or a rational value.
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long, value_enum, default_value = "verma")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Parameter table; the shipped one by default.
    #[arg(long)]
    table: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    /// Diagram file for eval.
    #[arg(long)]
    diagram: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "d21")]
    algebra: Algebra,
    /// Comma-separated highest weight coordinates for Verma evaluation.
    #[arg(long)]
    lambda0: Option<String>,
    /// Adds 1 to the bracket [b_i, b_j] before validating ("i,j").
    #[arg(long, hide = true)]
    corrupt: Option<String>,
}

enum Failure {
    Usage(String),
    Assertion(String),
    Cost(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Assertion(m) => Failure::Assertion(m),
            Error::CostBound(m) => Failure::Cost(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(format!("{e:#}"))
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok((text, ok)) => {
            if let Err(e) = emit(&args, &text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Assertion(m)) => {
            eprintln!("assertion failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Cost(m)) => {
            eprintln!("cost bound exceeded: {m}");
            ExitCode::from(3)
        }
    }
}

fn emit(args: &Args, text: &str) -> anyhow::Result<()> {
    match &args.out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(args: &Args) -> Outcome {
    match args.command {
        Command::Validate => cmd_validate(args),
        Command::Kricker => cmd_kricker(args),
        Command::Certify => cmd_certify(args),
        Command::Eval => cmd_eval(args),
        Command::Dims => cmd_dims(args),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn alpha_mode(args: &Args, default: AlphaMode) -> Result<AlphaMode, Failure> {
    match args.alpha.as_deref() {
        None => Ok(default),
        Some("symbolic") => Ok(AlphaMode::Symbolic),
        Some(s) => parse_rational(s)
            .map(AlphaMode::Value)
            .ok_or_else(|| Failure::Usage(format!("bad alpha '{s}'"))),
    }
}

fn algebra(args: &Args, default: AlphaMode) -> Result<SuperAlgebra, Failure> {
    Ok(match args.algebra {
        Algebra::Sl2 => sl2(),
        Algebra::D21 => d21(alpha_mode(args, default)?)?,
    })
}

fn k_range(args: &Args, default: (u32, u32)) -> Result<Vec<u32>, Failure> {
    let (lo, hi) = match args.k.as_deref() {
        None => default,
        Some(s) => {
            let parse = |x: &str| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Failure::Usage(format!("bad k '{s}'")))
            };
            match s.split_once("..") {
                Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
                None => {
                    let k = parse(s)?;
                    (k, k)
                }
            }
        }
    };
    if lo > hi || lo == 0 {
        return Err(Failure::Usage(format!("empty k range {lo}..{hi}")));
    }
    if lo % 2 == 1 || hi % 2 == 1 {
        return Err(Failure::Usage(format!("odd k in range {lo}..{hi}")));
    }
    Ok((lo..=hi).step_by(2).collect())
}

fn cmd_validate(args: &Args) -> Outcome {
    let mut alg = algebra(args, AlphaMode::Symbolic)?;
    if let Some(c) = &args.corrupt {
        let ij: Vec<usize> = c
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| Failure::Usage(format!("bad --corrupt '{c}'"))))
            .collect::<Result<_, _>>()?;
        let [i, j] = ij[..] else {
            return Err(Failure::Usage("--corrupt takes i,j".into()));
        };
        if i >= alg.dim() || j >= alg.dim() {
            return Err(Failure::Usage("--corrupt index out of range".into()));
        }
        let entry = &mut alg.bracket[i][j];
        match entry.first_mut() {
            Some((_, w)) => *w += &MultiPoly::one(),
            None => entry.push((0, MultiPoly::one())),
        }
    }
    let rep = validate(&alg);
    let ok = rep.all_passed;
    let text = match args.format {
        Format::Json => json(&rep),
        _ => {
            let mut s = format!("algebra {} dim {} ({}|{})\n", rep.algebra, rep.dim, rep.even_dim, rep.odd_dim);
            for c in &rep.checks {
                let _ = write!(s, "{:<28} {} ({} identities)", c.name, if c.passed { "pass" } else { "FAIL" }, c.checked);
                if let Some(w) = &c.witness {
                    let _ = write!(s, " witness: {w}");
                }
                s.push('\n');
            }
            let _ = writeln!(s, "all passed: {ok}");
            s
        }
    };
    Ok((text, ok))
}

#[derive(Serialize)]
struct KrickerRow {
    k: u32,
    computed: String,
    expected: Option<String>,
    matches: Option<bool>,
}

fn cmd_kricker(args: &Args) -> Outcome {
    let mode = alpha_mode(args, AlphaMode::Value(Rational::from_integer(1.into())))?;
    let ks = k_range(args, (2, 10))?;
    let alg = d21(mode.clone())?;
    let at_one = matches!(&mode, AlphaMode::Value(a) if *a == Rational::from_integer(1.into()));
    let mut rows = Vec::new();
    for k in ks {
        let t = top_coefficient(&alg, k, &default_lambda0())?;
        let computed = if t.is_zero() && matches!(mode, AlphaMode::Symbolic) {
            "0 (identically in alpha)".to_string()
        } else {
            t.to_string()
        };
        let expected = at_one.then(|| closed_form(k).to_string());
        let matches = at_one.then(|| t.as_constant() == Some(Rational::from_integer(closed_form(k))));
        rows.push(KrickerRow {
            k,
            computed,
            expected,
            matches,
        });
    }
    let ok = rows.iter().all(|r| r.matches != Some(false));
    let text = match args.format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut s = String::from("k,computed,expected,match\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.k,
                    r.computed,
                    r.expected.as_deref().unwrap_or(""),
                    r.matches.map_or(String::new(), |m| m.to_string())
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = write!(s, "k={:<3} computed={}", r.k, r.computed);
                if let (Some(e), Some(m)) = (&r.expected, r.matches) {
                    let _ = write!(s, " expected={e} match={m}");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok((text, ok))
}

fn load_table(args: &Args) -> Result<String, Failure> {
    match &args.table {
        None => Ok(DEFAULT_TABLE.to_string()),
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("reading {}: {e}", p.display()))),
    }
}

fn cmd_certify(args: &Args) -> Outcome {
    let table = parse_table(&load_table(args)?)?;
    let k = match &args.k {
        None => 4,
        Some(_) => {
            let ks = k_range(args, (4, 4))?;
            match ks[..] {
                [k] => k,
                _ => return Err(Failure::Usage("certify takes a single even k".into())),
            }
        }
    };
    let q = match (&args.q, args.d) {
        (Some(_), Some(_)) => return Err(Failure::Usage("give either --q or --d".into())),
        (Some(s), None) => {
            let p = MultiPoly::parse(s).map_err(|e| Failure::Usage(format!("bad Q: {e}")))?;
            SymPoly::from_elementary(&p)?
        }
        (None, Some(d)) => {
            if d < 15 {
                return Err(Failure::Usage(format!("d = {d} is below 15")));
            }
            default_q(d - 15).ok_or_else(|| Failure::Usage("d = 16 is not realized".into()))?
        }
        (None, None) => SymPoly::one(),
    };
    let cert = build_d_element(k, &q, &table)?;
    let ok = cert.all_hold;
    let text = match args.format {
        Format::Json => json(&cert),
        _ => {
            let mut s = format!("k={} d={} degree={} legs={}\nQ = {}\n", cert.k, cert.d, cert.degree, cert.legs, cert.q);
            for a in &cert.assertions {
                let _ = writeln!(s, "[{}] {}", if a.holds { "ok" } else { "FAIL" }, a.name);
            }
            let roots: Vec<String> = cert.alpha.roots.iter().map(fmt_rational).collect();
            let _ = writeln!(s, "excluded alpha: {{{}}}", roots.join(", "));
            for n in &cert.notes {
                let _ = writeln!(s, "note: {n}");
            }
            let _ = writeln!(s, "all hold: {ok}");
            s
        }
    };
    Ok((text, ok))
}

fn cmd_eval(args: &Args) -> Outcome {
    let path = args
        .diagram
        .as_ref()
        .ok_or_else(|| Failure::Usage("eval needs --diagram".into()))?;
    let src = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let d = Diagram::from_text(&src)?;
    let alg = algebra(args, AlphaMode::Symbolic)?;
    let c = LinComb::from_diagram(&d);
    let value = match args.mode {
        Mode::StateSum => eval_state_sum(&alg, &c, &adjoint_rep(&alg))?,
        Mode::Verma => {
            let l0: Vec<Rational> = match &args.lambda0 {
                Some(s) => s
                    .split(',')
                    .map(|x| parse_rational(x.trim()).ok_or_else(|| Failure::Usage(format!("bad weight '{s}'"))))
                    .collect::<Result<_, _>>()?,
                None => match args.algebra {
                    Algebra::Sl2 => vec![Rational::from_integer(1.into())],
                    Algebra::D21 => default_lambda0(),
                },
            };
            eval_verma(&alg, &c, &l0)?
        }
    };
    let text = match args.format {
        Format::Json => json(&serde_json::json!({
            "algebra": alg.name,
            "value": value.to_string(),
        })),
        _ => format!("{value}\n"),
    };
    Ok((text, true))
}

#[derive(Serialize)]
struct DimRow {
    degree: usize,
    a_stu: usize,
    a_four_term: usize,
    b_connected: Vec<(usize, usize)>,
}

fn cmd_dims(args: &Args) -> Outcome {
    let mut rows = Vec::new();
    for m in 1..=args.max_degree {
        let a = basis_A(m)?;
        let a4 = basis_A_four_term(m)?;
        let mut b = Vec::new();
        for k in (2..=m + 1).step_by(2) {
            b.push((k, GradedB::get(m, k)?.dimension()));
        }
        rows.push(DimRow {
            degree: m,
            a_stu: a.dimension,
            a_four_term: a4.dimension,
            b_connected: b,
        });
    }
    let ok = rows.iter().all(|r| r.a_stu == r.a_four_term);
    let text = match args.format {
        Format::Json => json(&rows),
        _ => {
            let mut s = String::new();
            for r in &rows {
                let b: Vec<String> = r.b_connected.iter().map(|(k, d)| format!("{k}:{d}")).collect();
                let _ = writeln!(s, "m={} A={} A(4T)={} B(legs:dim)={}", r.degree, r.a_stu, r.a_four_term, b.join(" "));
            }
            s
        }
    };
    Ok((text, ok))
}
