use std::path::Path;

use serde_json::Value;
use thiserror::Error;
use vanvleck::acceptance::{interior_points, run_suite, SuiteConfig};
use vanvleck::eigen::van_vleck_zeros;
use vanvleck::equilateral::{classify, complex_zeros, radial_evidence};
use vanvleck::lame::{check_class_interlacing, class_spectrum, lame_report};
use vanvleck::spectral::{
    a_limit, b_limit, density_rows, fitted_recurrence_limits, ks_rho_vs_arcsine, recurrence_residual, recurrence_rows, trace_asymptotics,
    trace_rows, ArcsineVariant, RhoA, DEFAULT_LIMIT_ORDERS, DEFAULT_TRACE_ORDERS, HEUN_CLEARANCE,
};
use vanvleck::{interlacing_sweep, ErrorKind, GammaClass, Problem};

use crate::output::{csv, envelope, int, obj, real, reals, to_json, Cell};
use crate::{
    Command, Common, DensityArgs, EquilateralArgs, Format, InterlaceArgs, LameArgs, ProblemArgs, ReportArgs, SpectralArgs, SpectralTable,
    Variant, ZerosArgs,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] vanvleck::Error),
    #[error("invalid {field}: {message}")]
    Validation { field: &'static str, message: String },
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn validation(field: &'static str, message: impl Into<String>) -> Self {
        CliError::Validation { field, message: message.into() }
    }

    pub fn kind(&self) -> ErrorKind {
        match self {
            CliError::Core(e) => e.kind(),
            CliError::Validation { .. } => ErrorKind::Validation,
            CliError::Failed(_) => ErrorKind::Invariant,
            CliError::Io(_) => ErrorKind::Solver,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn parse_list<const N: usize, T: std::str::FromStr>(field: &'static str, s: &str) -> Result<[T; N]> {
    let items = s
        .split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| CliError::validation(field, format!("cannot parse {t:?}"))))
        .collect::<Result<Vec<T>>>()?;
    let n = items.len();
    items.try_into().map_err(|_| CliError::validation(field, format!("expected {N} comma-separated values, got {n}")))
}

fn problem(args: &ProblemArgs) -> Result<Problem> {
    let alphas: [f64; 3] = parse_list("alphas", &args.alphas)?;
    let rhos: [f64; 3] = parse_list("rhos", &args.rhos)?;
    Ok(Problem::new(alphas, rhos)?)
}

fn problem_params(p: &Problem) -> [(&'static str, Value); 2] {
    [("alphas", reals(p.alpha())), ("rhos", reals(p.rho()))]
}

fn emit(common: &Common, json: impl FnOnce() -> Value, table: impl FnOnce() -> String) -> Result<()> {
    let text = match common.format {
        Format::Json => to_json(&json()),
        Format::Csv => table(),
    };
    write_out(common.out.as_deref(), &text)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Reals serialized through serde, reformatted to 17 significant digits.
fn normalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.as_u64().is_none() && n.as_i64().is_none() => n.as_f64().map_or(Value::Null, real),
        Value::Array(a) => Value::Array(a.into_iter().map(normalize).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, v)| (k, normalize(v))).collect()),
        other => other,
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    normalize(serde_json::to_value(x).expect("results serialize"))
}

pub fn run(command: Command) -> Result<()> {
    match command {
        Command::Zeros(a) => zeros(a),
        Command::Interlace(a) => interlace(a),
        Command::Spectral(a) => spectral(a),
        Command::Density(a) => density(a),
        Command::Lame(a) => lame(a),
        Command::Equilateral(a) => equilateral(a),
        Command::Report(a) => report(a),
    }
}

fn zeros(args: ZerosArgs) -> Result<()> {
    let p = problem(&args.problem)?;
    if args.k == 0 {
        return Err(CliError::validation("k", "must be at least 1"));
    }
    let s = van_vleck_zeros(&p, args.k)?;
    let roots = s.stieltjes.iter().map(|st| st.roots()).collect::<vanvleck::Result<Vec<_>>>()?;
    emit(
        &args.common,
        || {
            let polys: Vec<Value> = s
                .stieltjes
                .iter()
                .zip(&roots)
                .map(|(st, r)| {
                    obj([("nu", real(st.associated_nu)), ("coefficients_normalized", reals(&st.coefficients)), ("roots", reals(r))])
                })
                .collect();
            let [a, b] = problem_params(&p);
            envelope(
                "zeros",
                obj([a, b, ("k", int(args.k)), ("tol", real(args.tol))]),
                obj([
                    ("k", int(s.k)),
                    ("zeros", reals(&s.zeros)),
                    ("zeros_normalized", reals(&s.zeros_normalized)),
                    ("brackets", Value::Array(s.brackets.iter().map(|&(lo, hi)| reals(&[lo, hi])).collect())),
                    ("residuals", reals(&s.residuals)),
                    ("max_residual", real(s.max_residual())),
                    ("stieltjes", Value::Array(polys)),
                ]),
            )
        },
        || {
            let rows = (0..s.zeros.len())
                .map(|i| {
                    vec![
                        Cell::from(s.k),
                        Cell::from(i + 1),
                        Cell::from(s.zeros[i]),
                        Cell::from(s.brackets[i].0),
                        Cell::from(s.brackets[i].1),
                        Cell::from(s.residuals[i]),
                    ]
                })
                .collect();
            csv(&["k", "index", "nu", "bracket_lo", "bracket_hi", "residual"], rows)
        },
    )?;
    if !(s.max_residual() < args.tol) {
        return Err(CliError::Failed(format!("ODE residual {:e} exceeds {:e}", s.max_residual(), args.tol)));
    }
    Ok(())
}

fn interlace(args: InterlaceArgs) -> Result<()> {
    let p = problem(&args.problem)?;
    let verdicts = interlacing_sweep(&p, args.k_max)?;
    emit(
        &args.common,
        || {
            let list: Vec<Value> = verdicts
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let mut o = to_value(v);
                    o.as_object_mut().expect("verdicts are objects").insert("k".into(), int(i + 1));
                    o
                })
                .collect();
            let [a, b] = problem_params(&p);
            envelope(
                "interlace",
                obj([a, b, ("k_max", int(args.k_max))]),
                obj([("all_hold", Value::from(verdicts.iter().all(|v| v.holds))), ("verdicts", Value::Array(list))]),
            )
        },
        || {
            let rows = verdicts
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    vec![
                        Cell::from(i + 1),
                        Cell::from(v.holds),
                        Cell::from(v.min_gap),
                        Cell::from(v.lower_bound_ok),
                        Cell::from(v.upper_bound_ok),
                        Cell::from(v.violation_index),
                    ]
                })
                .collect();
            csv(&["k", "holds", "min_gap", "lo_ok", "hi_ok", "violation_index"], rows)
        },
    )?;
    if let Some(i) = verdicts.iter().position(|v| !v.holds) {
        return Err(CliError::Failed(format!("interlacing fails for orders {} and {}", i + 1, i + 2)));
    }
    Ok(())
}

fn spectral(args: SpectralArgs) -> Result<()> {
    let p = problem(&args.problem)?;
    if args.k_max < 4 {
        return Err(CliError::validation("k_max", "must be at least 4"));
    }
    let ns: Vec<usize> = (3..=args.k_max).collect();
    let rec = recurrence_rows(&p, &ns)?;
    let trace = trace_rows(&p, &DEFAULT_TRACE_ORDERS)?;
    emit(
        &args.common,
        || {
            let fits = trace_asymptotics(&p, &DEFAULT_TRACE_ORDERS)
                .map(|(first, second)| obj([("first_moment", to_value(&first)), ("second_moment", to_value(&second))]))
                .unwrap_or_else(|e| obj([("error", Value::from(e.to_string()))]));
            let fitted = fitted_recurrence_limits(&p, &DEFAULT_LIMIT_ORDERS)
                .map(|(a, b)| obj([("a", real(a)), ("b", real(b)), ("orders", Value::from(DEFAULT_LIMIT_ORDERS.to_vec()))]))
                .unwrap_or_else(|e| obj([("error", Value::from(e.to_string()))]));
            let n_res = args.k_max.min(30);
            let residual = recurrence_residual(&p, n_res).map_or(Value::Null, real);
            let [a, b] = problem_params(&p);
            envelope(
                "spectral",
                obj([a, b, ("k_max", int(args.k_max))]),
                obj([
                    ("recurrence", to_value(&rec)),
                    ("a_limit", real(a_limit(&p))),
                    ("b_limit", real(b_limit(&p))),
                    ("fitted_limits", fitted),
                    ("trace", to_value(&trace)),
                    ("trace_fits", fits),
                    ("recurrence_residual", obj([("n", int(n_res)), ("relative", residual)])),
                ]),
            )
        },
        || match args.table {
            SpectralTable::Recurrence => {
                csv(&["n", "a_n", "b_n"], rec.iter().map(|r| vec![Cell::from(r.n), Cell::from(r.a_n), Cell::from(r.b_n)]).collect())
            }
            SpectralTable::Trace => csv(
                &["k", "sum_nu", "sum_nu_sq"],
                trace.iter().map(|r| vec![Cell::from(r.k), Cell::from(r.sum_nu), Cell::from(r.sum_nu_sq)]).collect(),
            ),
        },
    )
}

fn density(args: DensityArgs) -> Result<()> {
    let p = problem(&args.problem)?;
    if args.k == 0 || args.points == 0 {
        return Err(CliError::validation("k", "order and point count must be positive"));
    }
    let variant = match args.variant {
        Variant::Printed => ArcsineVariant::Printed,
        Variant::Standard => ArcsineVariant::Standard,
    };
    let zeros = vanvleck::eigen::van_vleck_eigenvalues(&p, args.k)?.zeros;
    let rows = density_rows(&p, &zeros, variant, args.points)?;
    let rho = RhoA::new(&p);
    let mass = rho.mass()?;
    let ks_empirical = rho.ks_to_samples(&zeros)?;
    let ks_arcsine = ArcsineVariant::ALL.iter().map(|&v| ks_rho_vs_arcsine(&p, v, 4000)).collect::<vanvleck::Result<Vec<_>>>()?;
    let heun = interior_points(*p.alpha(), HEUN_CLEARANCE * p.span() * 1.0001, 50)
        .into_iter()
        .map(|x| rho.heun_residual(x).map(|r| (x, r)))
        .collect::<vanvleck::Result<Vec<_>>>()?;
    emit(
        &args.common,
        || {
            let [a, b] = problem_params(&p);
            envelope(
                "density",
                obj([a, b, ("k", int(args.k)), ("points", int(args.points)), ("variant", to_value(&variant))]),
                obj([
                    ("mass", real(mass)),
                    ("ks_empirical", real(ks_empirical)),
                    ("ks_arcsine", obj([("printed", real(ks_arcsine[0])), ("standard", real(ks_arcsine[1]))])),
                    ("rows", to_value(&rows)),
                    ("heun_residuals", Value::Array(heun.iter().map(|&(x, r)| obj([("x", real(x)), ("residual", real(r))])).collect())),
                ]),
            )
        },
        || {
            csv(
                &["x", "rho_A", "arcsine", "empirical_cdf"],
                rows.iter()
                    .map(|r| vec![Cell::from(r.x), Cell::from(r.rho_a), Cell::from(r.arcsine), Cell::from(r.empirical_cdf)])
                    .collect(),
            )
        },
    )
}

fn lame(args: LameArgs) -> Result<()> {
    let params = |extra: Value| obj([("n", int(args.n)), ("modulus", real(args.modulus)), ("gamma", extra)]);
    match &args.gamma {
        Some(g) => {
            let g = GammaClass::new(parse_list("gamma", g)?)?;
            let spectrum = class_spectrum(args.n, g, args.modulus)?;
            let verdict = if spectrum.m >= 1 { Some(check_class_interlacing(args.n, g, args.modulus)?) } else { None };
            emit(
                &args.common,
                || {
                    let result =
                        obj([("class", to_value(&spectrum)), ("class_interlacing", verdict.as_ref().map_or(Value::Null, to_value))]);
                    envelope("lame", params(to_value(&g)), result)
                },
                || lame_csv(std::slice::from_ref(&spectrum)),
            )
        }
        None => {
            let report = lame_report(args.n, args.modulus)?;
            emit(&args.common, || envelope("lame", params(Value::Null), to_value(&report)), || lame_csv(&report.classes))
        }
    }
}

fn lame_csv(classes: &[vanvleck::lame::ClassSpectrum<f64>]) -> String {
    let mut rows = Vec::new();
    for c in classes {
        let g = c.gamma.gamma();
        let tag = format!("{}{}{}", g[0], g[1], g[2]);
        if let Some(h) = c.degenerate_h {
            rows.push(vec![Cell::from(tag.as_str()), Cell::from(c.m), Cell::from(0usize), Cell::Empty, Cell::from(h)]);
        }
        for (i, (l, h)) in c.lambdas.iter().zip(&c.h_values).enumerate() {
            rows.push(vec![Cell::from(tag.as_str()), Cell::from(c.m), Cell::from(i + 1), Cell::from(*l), Cell::from(*h)]);
        }
    }
    csv(&["gamma", "m", "index", "lambda", "h"], rows)
}

fn equilateral(args: EquilateralArgs) -> Result<()> {
    let rhos: [f64; 3] = match &args.rhos {
        Some(s) => parse_list("rhos", s)?,
        None => [args.rho; 3],
    };
    let spectrum = complex_zeros(rhos, args.k)?;
    let max_residual = spectrum.residuals.iter().fold(0.0f64, |m, &r| m.max(r));
    let residuals = spectrum.residuals.clone();
    let (zeros, rays, classification) = match classify(spectrum.clone()) {
        Ok(c) => (c.zeros.clone(), c.rays.clone(), Ok(c)),
        Err(e) => (spectrum.zeros.clone(), vec![None; spectrum.zeros.len()], Err(e)),
    };
    let conjecture = if args.conjecture {
        if rhos[0] != rhos[1] || rhos[1] != rhos[2] {
            return Err(CliError::validation("conjecture", "needs equal exponents"));
        }
        Some(radial_evidence(rhos[0], args.k)?)
    } else {
        None
    };
    emit(
        &args.common,
        || {
            let zs: Vec<Value> = zeros
                .iter()
                .zip(&rays)
                .map(|(z, r)| {
                    obj([("re", real(z.re)), ("im", real(z.im)), ("ray", r.map_or(Value::Null, Value::from)), ("modulus", real(z.norm()))])
                })
                .collect();
            let structure = match &classification {
                Ok(c) => obj([
                    ("classified", Value::from(true)),
                    ("ray_moduli", reals(&c.ray_moduli)),
                    ("center_zero_present", Value::from(c.center_zero_present)),
                    ("center_multiplicity", int(c.center_multiplicity)),
                ]),
                Err(e) => obj([("classified", Value::from(false)), ("diagnostic", Value::from(e.to_string()))]),
            };
            let conj = conjecture.as_ref().map_or(Value::Null, |e| {
                obj([("k", int(e.k)), ("inner", reals(&e.inner)), ("outer", reals(&e.outer)), ("holds", Value::from(e.verdict.holds))])
            });
            let residuals = match &classification {
                Ok(c) => reals(&c.residuals),
                Err(_) => reals(&residuals),
            };
            envelope(
                "equilateral",
                obj([("rhos", reals(&rhos)), ("k", int(args.k)), ("tol", real(args.tol))]),
                obj([
                    ("zeros", Value::Array(zs)),
                    ("structure", structure),
                    ("residuals", residuals),
                    ("max_residual", real(max_residual)),
                    ("conjecture", conj),
                ]),
            )
        },
        || {
            let rows = zeros
                .iter()
                .zip(&rays)
                .map(|(z, r)| {
                    vec![Cell::from(args.k), Cell::from(z.re), Cell::from(z.im), Cell::from(r.map(usize::from)), Cell::from(z.norm())]
                })
                .collect();
            csv(&["k", "zero_re", "zero_im", "ray_index", "modulus"], rows)
        },
    )?;
    if !(max_residual < args.tol) {
        return Err(CliError::Failed(format!("ODE residual {max_residual:e} exceeds {:e}", args.tol)));
    }
    Ok(())
}

fn report(args: ReportArgs) -> Result<()> {
    let cfg: SuiteConfig = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::validation("config", format!("cannot read {}: {e}", path.display())))?;
            toml::from_str(&text).map_err(|e| CliError::validation("config", e.to_string().replace('\n', " ")))?
        }
        None => SuiteConfig::default(),
    };
    let ids: Vec<u8> = match &args.criteria {
        Some(s) => s
            .split(',')
            .map(|t| match t.trim().parse::<u8>() {
                Ok(id @ 1..=11) => Ok(id),
                _ => Err(CliError::validation("criteria", format!("{t:?} is not a criterion id in 1..=11"))),
            })
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    let results = run_suite(&cfg, &ids);
    for r in &results {
        eprintln!("{}", r.line());
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    emit(
        &args.common,
        || {
            let list: Vec<Value> = results
                .iter()
                .map(|r| {
                    let mut o = obj([
                        ("id", Value::from(r.id)),
                        ("title", Value::from(r.title.as_str())),
                        ("passed", Value::from(r.passed)),
                        ("detail", Value::from(r.detail.as_str())),
                    ]);
                    if args.timings {
                        o.as_object_mut().expect("object").insert("seconds".into(), real(r.seconds));
                    }
                    o
                })
                .collect();
            envelope(
                "report",
                obj([("config", to_value(&cfg)), ("criteria", Value::from(ids.clone()))]),
                obj([
                    ("passed", int(results.len() - failed.len())),
                    ("failed", Value::from(failed.clone())),
                    ("criteria", Value::Array(list)),
                ]),
            )
        },
        || {
            let rows = results
                .iter()
                .map(|r| {
                    let mut row = vec![
                        Cell::from(usize::from(r.id)),
                        Cell::from(r.title.as_str()),
                        Cell::from(r.passed),
                        Cell::from(r.detail.as_str()),
                    ];
                    if args.timings {
                        row.push(Cell::from(r.seconds));
                    }
                    row
                })
                .collect();
            let header: &[&str] =
                if args.timings { &["id", "title", "passed", "detail", "seconds"] } else { &["id", "title", "passed", "detail"] };
            csv(header, rows)
        },
    )?;
    if !failed.is_empty() {
        return Err(CliError::Failed(format!("criteria {failed:?} failed")));
    }
    Ok(())
}
