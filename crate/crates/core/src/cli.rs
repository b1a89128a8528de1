//! Command-line front end.
//!
//! Every subcommand writes exactly one JSON document to stdout; the grid
//! subcommands (`curvature-grid`, `weights`) can emit CSV instead. Exit codes:
//! `0` success, `2` usage or domain error, `3` numerical failure.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{char_range_check, chars_equivalent, extremal_alpha, harmonic_measure, phi_char};
use crate::curvature::{curvature_report, szego_diag, DEFAULT_EXTREMAL_TOL};
use crate::error::Error;
use crate::extremal_solver::{ahlfors_map, solve_extremal, DEFAULT_HALF_WIDTH};
use crate::hardy_kernels::{garabedian_kernel, hardy_kernel, szego_zero, AnnulusPoint};
use crate::qkernel::{jk_product, jk_series, AnnulusGeometry, JKArgs, SeriesControl};
use crate::shift_model::{shift_weight, DEFAULT_WINDOW};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Environment variable overriding the default series tolerance.
pub const TOL_ENV: &str = "HARDY_TOL";

#[derive(Debug, Parser)]
#[command(name = "hardy-curvature", version, about = "Weighted Hardy kernels, curvature and extremal bundle shifts on the annulus")]
struct Cli {
    /// Absolute truncation tolerance for every series and product.
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Term cap for every series and product.
    #[arg(long = "max-terms", global = true)]
    max_terms: Option<usize>,
    /// Output format; CSV is only available for grid commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Series,
    Product,
    Both,
}

#[derive(Debug, Args)]
struct Radius {
    /// Inner radius R of the annulus R < |z| < 1.
    #[arg(long = "R")]
    r: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Jordan–Kronecker function f(b, t).
    Jk {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        b: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        t: Complex64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Weighted Hardy kernel K^(α)(z, w).
    Kernel {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        w: Complex64,
    },
    /// Garabedian kernel L^(α)(z, w).
    Garabedian {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        w: Complex64,
    },
    /// Curvature, Szegő bound and gap at one point.
    Curvature {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        zeta: Complex64,
        #[arg(long = "ext-tol", default_value_t = DEFAULT_EXTREMAL_TOL)]
        ext_tol: f64,
    },
    /// Curvature along the ray arg ζ = θ for rmin ≤ |ζ| ≤ rmax.
    CurvatureGrid {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long)]
        rmin: f64,
        #[arg(long)]
        rmax: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long = "ext-tol", default_value_t = DEFAULT_EXTREMAL_TOL)]
        ext_tol: f64,
    },
    /// Weight exponent class extremal at conj(ζ).
    ExtremalAlpha {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        zeta: Complex64,
    },
    /// Extremality test for a given α: Garabedian kernel at the Szegő zero and curvature gap.
    ExtremalCheck {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        zeta: Complex64,
        #[arg(long = "ext-tol", default_value_t = DEFAULT_EXTREMAL_TOL)]
        ext_tol: f64,
    },
    /// Character φ from harmonic measures (or from a point of the annulus).
    Phi {
        /// Comma-separated harmonic measure values ω_j in (0, 1).
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["r", "zeta"])]
        omegas: Option<Vec<f64>>,
        #[arg(long = "R")]
        r: Option<f64>,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, requires = "r")]
        zeta: Option<Complex64>,
    },
    /// Bilateral shift weights ω_n for nmin ≤ n ≤ nmax.
    Weights {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_WINDOW.0, allow_hyphen_values = true)]
        nmin: i64,
        #[arg(long, default_value_t = DEFAULT_WINDOW.1, allow_hyphen_values = true)]
        nmax: i64,
    },
    /// Constrained least-norm problem over Laurent polynomials of width N.
    SolveExtremal {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        zeta: Complex64,
        #[arg(long = "N", default_value_t = DEFAULT_HALF_WIDTH)]
        half_width: usize,
        /// Include the Laurent coefficients in the output.
        #[arg(long)]
        coefficients: bool,
    },
    /// Boundary modulus, zero and derivative checks for the Ahlfors map F_ζ.
    AhlforsCheck {
        #[command(flatten)]
        radius: Radius,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        zeta: Complex64,
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |p: &str| p.parse::<f64>().map_err(|e| format!("invalid number '{p}': {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected 're,im', got '{s}'")),
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Numeric(Error),
    NonFinite(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Numeric(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numeric(Error::Domain(_) | Error::Pole { .. }) => EXIT_USAGE,
            CliError::Numeric(Error::NonConvergence { .. } | Error::SingularSystem { .. }) => EXIT_NUMERICAL,
            CliError::NonFinite(_) => EXIT_NUMERICAL,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Numeric(e) => e.to_string(),
            CliError::NonFinite(m) => format!("non-finite result: {m}"),
        }
    }
}

/// One invocation's JSON document.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
}

impl OutputRecord {
    fn new(command: &str) -> Self {
        Self { command: command.to_string(), inputs: BTreeMap::new(), outputs: BTreeMap::new() }
    }

    fn input(&mut self, key: &str, v: Value) -> &mut Self {
        self.inputs.insert(key.to_string(), v);
        self
    }

    fn output(&mut self, key: &str, v: Value) -> &mut Self {
        self.outputs.insert(key.to_string(), v);
        self
    }
}

fn cplx(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn check_finite(key: &str, v: &Value) -> Result<(), CliError> {
    match v {
        Value::Null => Err(CliError::NonFinite(key.to_string())),
        Value::Array(items) => items.iter().try_for_each(|x| check_finite(key, x)),
        Value::Object(map) => map.iter().try_for_each(|(k, x)| check_finite(&format!("{key}.{k}"), x)),
        _ => Ok(()),
    }
}

/// `serde_json` maps non-finite floats to `null`; catch them before printing.
fn finite(key: &str, x: f64) -> Result<f64, CliError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::NonFinite(format!("{key} = {x}")))
    }
}

fn csv_number(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

enum Rendered {
    Json(OutputRecord),
    Csv { header: Vec<&'static str>, rows: Vec<Vec<String>> },
}

struct Context {
    ctl: SeriesControl,
    format: Format,
}

fn geometry(r: f64) -> Result<AnnulusGeometry, CliError> {
    Ok(AnnulusGeometry::new(r)?)
}

/// Parses `argv` (including the program name), runs the subcommand and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let first = e.to_string().lines().next().unwrap_or("invalid arguments").to_string();
            let _ = writeln!(err, "{first}");
            return EXIT_USAGE;
        }
    };
    match execute(cli).and_then(|r| render(r, out)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "{}", e.message());
            e.exit_code()
        }
    }
}

fn render(r: Rendered, out: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Usage(format!("cannot write output: {e}"));
    match r {
        Rendered::Json(rec) => {
            for (k, v) in rec.inputs.iter().chain(rec.outputs.iter()) {
                check_finite(k, v)?;
            }
            let text = serde_json::to_string_pretty(&rec).map_err(|e| CliError::Usage(e.to_string()))?;
            writeln!(out, "{text}").map_err(io)
        }
        Rendered::Csv { header, rows } => {
            let mut text = header.join(",");
            text.push('\n');
            for row in rows {
                text.push_str(&row.join(","));
                text.push('\n');
            }
            out.write_all(text.as_bytes()).map_err(io)
        }
    }
}

fn series_control(cli: &Cli) -> Result<SeriesControl, CliError> {
    let tol = match cli.tol {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|e| CliError::Usage(format!("{TOL_ENV}='{s}' is not a number: {e}")))?,
            Err(_) => SeriesControl::DEFAULT_TOLERANCE,
        },
    };
    let max_terms = cli.max_terms.unwrap_or(SeriesControl::DEFAULT_MAX_TERMS);
    SeriesControl::new(tol, max_terms).map_err(|e| CliError::Usage(e.to_string()))
}

fn execute(cli: Cli) -> Result<Rendered, CliError> {
    let ctx = Context { ctl: series_control(&cli)?, format: cli.format };
    let grid = matches!(cli.command, Command::CurvatureGrid { .. } | Command::Weights { .. });
    if ctx.format == Format::Csv && !grid {
        return Err(CliError::Usage("--format csv is only supported by curvature-grid and weights".into()));
    }
    let mut rec = match &cli.command {
        Command::Jk { .. } => OutputRecord::new("jk"),
        Command::Kernel { .. } => OutputRecord::new("kernel"),
        Command::Garabedian { .. } => OutputRecord::new("garabedian"),
        Command::Curvature { .. } => OutputRecord::new("curvature"),
        Command::CurvatureGrid { .. } => OutputRecord::new("curvature-grid"),
        Command::ExtremalAlpha { .. } => OutputRecord::new("extremal-alpha"),
        Command::ExtremalCheck { .. } => OutputRecord::new("extremal-check"),
        Command::Phi { .. } => OutputRecord::new("phi"),
        Command::Weights { .. } => OutputRecord::new("weights"),
        Command::SolveExtremal { .. } => OutputRecord::new("solve-extremal"),
        Command::AhlforsCheck { .. } => OutputRecord::new("ahlfors-check"),
    };
    rec.input("tol", json!(ctx.ctl.tolerance())).input("max_terms", json!(ctx.ctl.max_terms()));
    let ctl = &ctx.ctl;

    match cli.command {
        Command::Jk { radius, b, t, method } => {
            let geom = geometry(radius.r)?;
            let args = JKArgs::new(b, t);
            rec.input("R", json!(radius.r)).input("b", cplx(b)).input("t", cplx(t));
            let series = matches!(method, Method::Series | Method::Both).then(|| jk_series(args, &geom, ctl)).transpose()?;
            let product = matches!(method, Method::Product | Method::Both).then(|| jk_product(args, &geom, ctl)).transpose()?;
            if let Some(s) = series {
                rec.output("series", cplx(s));
            }
            if let Some(p) = product {
                rec.output("product", cplx(p));
            }
            if let (Some(s), Some(p)) = (series, product) {
                rec.output("abs_difference", json!(finite("abs_difference", (s - p).norm())?));
            }
        }
        Command::Kernel { radius, alpha, z, w } => {
            let geom = geometry(radius.r)?;
            let zp = AnnulusPoint::new(z, &geom)?;
            let wp = AnnulusPoint::new(w, &geom)?;
            rec.input("R", json!(radius.r)).input("alpha", json!(alpha)).input("z", cplx(z)).input("w", cplx(w));
            rec.output("value", cplx(hardy_kernel(alpha, zp, wp, &geom, ctl)?));
        }
        Command::Garabedian { radius, alpha, z, w } => {
            let geom = geometry(radius.r)?;
            let wp = AnnulusPoint::new(w, &geom)?;
            rec.input("R", json!(radius.r)).input("alpha", json!(alpha)).input("z", cplx(z)).input("w", cplx(w));
            rec.output("value", cplx(garabedian_kernel(alpha, z, wp, &geom, ctl)?));
        }
        Command::Curvature { radius, alpha, zeta, ext_tol } => {
            let geom = geometry(radius.r)?;
            let p = AnnulusPoint::interior(zeta, &geom)?;
            let rep = curvature_report(alpha, p, &geom, ctl, ext_tol)?;
            rec.input("R", json!(radius.r)).input("alpha", json!(alpha)).input("zeta", cplx(zeta)).input("ext_tol", json!(ext_tol));
            rec.output("curvature_log", json!(rep.curvature_log))
                .output("operator_curvature", json!(-rep.curvature_log))
                .output("bound", json!(rep.bound))
                .output("gap", json!(rep.gap))
                .output("extremal", json!(rep.extremal));
        }
        Command::CurvatureGrid { radius, alpha, rmin, rmax, n, theta, ext_tol } => {
            let geom = geometry(radius.r)?;
            if n == 0 {
                return Err(CliError::Usage("--n must be at least 1".into()));
            }
            if !(rmin <= rmax) {
                return Err(CliError::Usage(format!("--rmin {rmin} must not exceed --rmax {rmax}")));
            }
            let radii: Vec<f64> = (0..n)
                .map(|i| if n == 1 { rmin } else { rmin + (rmax - rmin) * i as f64 / (n - 1) as f64 })
                .collect();
            let mut rows = Vec::with_capacity(n);
            for &r in &radii {
                let p = AnnulusPoint::interior(Complex64::from_polar(r, theta), &geom)?;
                let rep = curvature_report(alpha, p, &geom, ctl, ext_tol)?;
                for (k, v) in [("curvature_log", rep.curvature_log), ("bound", rep.bound), ("gap", rep.gap)] {
                    finite(k, v)?;
                }
                rows.push((r, rep));
            }
            if ctx.format == Format::Csv {
                let rows = rows
                    .iter()
                    .map(|(r, rep)| vec![csv_number(*r), csv_number(rep.curvature_log), csv_number(rep.bound), csv_number(rep.gap)])
                    .collect();
                return Ok(Rendered::Csv { header: vec!["r", "curvature_log", "bound", "gap"], rows });
            }
            rec.input("R", json!(radius.r))
                .input("alpha", json!(alpha))
                .input("rmin", json!(rmin))
                .input("rmax", json!(rmax))
                .input("n", json!(n))
                .input("theta", json!(theta))
                .input("ext_tol", json!(ext_tol));
            let rows: Vec<Value> = rows
                .iter()
                .map(|(r, rep)| json!({ "r": r, "curvature_log": rep.curvature_log, "bound": rep.bound, "gap": rep.gap, "extremal": rep.extremal }))
                .collect();
            rec.output("rows", Value::Array(rows));
        }
        Command::ExtremalAlpha { radius, zeta } => {
            let geom = geometry(radius.r)?;
            rec.input("R", json!(radius.r)).input("zeta", cplx(zeta));
            rec.output("alpha", json!(extremal_alpha(zeta, &geom)?))
                .output("harmonic_measure", json!(harmonic_measure(zeta, &geom)?));
        }
        Command::ExtremalCheck { radius, alpha, zeta, ext_tol } => {
            let geom = geometry(radius.r)?;
            let p = AnnulusPoint::interior(zeta, &geom)?;
            let zero = szego_zero(p, &geom);
            let l = garabedian_kernel(alpha, zero, p, &geom, ctl)?;
            let b = geom.kernel_b(alpha.into());
            let jk = jk_product(JKArgs::new(b, Complex64::new(-zeta.norm_sqr() / radius.r, 0.0)), &geom, ctl)?;
            let rep = curvature_report(alpha, p, &geom, ctl, ext_tol)?;
            let predicted = extremal_alpha(zeta, &geom)?;
            rec.input("R", json!(radius.r)).input("alpha", json!(alpha)).input("zeta", cplx(zeta)).input("ext_tol", json!(ext_tol));
            rec.output("szego_zero", cplx(zero))
                .output("garabedian_at_szego_zero", cplx(l))
                .output("garabedian_abs", json!(l.norm()))
                .output("jk_abs", json!(jk.norm()))
                .output("gap", json!(rep.gap))
                .output("extremal", json!(rep.extremal))
                .output("predicted_alpha", json!(predicted))
                .output("matches_predicted_class", json!(chars_equivalent(alpha, predicted)));
        }
        Command::Phi { omegas, r, zeta } => {
            let omegas = match (omegas, r, zeta) {
                (Some(o), _, _) => {
                    rec.input("omegas", json!(o));
                    o
                }
                (None, Some(r), Some(z)) => {
                    let geom = geometry(r)?;
                    rec.input("R", json!(r)).input("zeta", cplx(z));
                    vec![harmonic_measure(z, &geom)?]
                }
                _ => return Err(CliError::Usage("phi needs either --omegas or both --R and --zeta".into())),
            };
            let idx = phi_char(&omegas)?;
            rec.output("components", json!(idx.components()))
                .output("sum", json!(idx.sum()))
                .output("in_range", json!(char_range_check(&idx)))
                .output("unimodular", Value::Array(idx.unimodular().into_iter().map(cplx).collect()));
        }
        Command::Weights { radius, alpha, nmin, nmax } => {
            let geom = geometry(radius.r)?;
            if nmin > nmax {
                return Err(CliError::Usage(format!("--nmin {nmin} exceeds --nmax {nmax}")));
            }
            let rows: Vec<(i64, f64)> = (nmin..=nmax).map(|n| (n, shift_weight(alpha, n, &geom))).collect();
            if ctx.format == Format::Csv {
                let rows = rows.iter().map(|(n, w)| vec![n.to_string(), csv_number(*w)]).collect();
                return Ok(Rendered::Csv { header: vec!["n", "weight"], rows });
            }
            rec.input("R", json!(radius.r)).input("alpha", json!(alpha)).input("nmin", json!(nmin)).input("nmax", json!(nmax));
            rec.output("rows", Value::Array(rows.iter().map(|(n, w)| json!({ "n": n, "weight": w })).collect()));
        }
        Command::SolveExtremal { radius, alpha, zeta, half_width, coefficients } => {
            let geom = geometry(radius.r)?;
            let p = AnnulusPoint::interior(zeta, &geom)?;
            let sol = solve_extremal(alpha, p, half_width, &geom)?;
            rec.input("R", json!(radius.r)).input("alpha", json!(alpha)).input("zeta", cplx(zeta)).input("N", json!(half_width));
            rec.output("value", json!(sol.value))
                .output("closed_form", json!(sol.closed_form))
                .output("residual", json!(sol.residual))
                .output("constraint_residual_value", json!(sol.constraint_residuals.0))
                .output("constraint_residual_derivative", json!(sol.constraint_residuals.1));
            if coefficients {
                let n = half_width as i64;
                let coeffs = (-n..=n)
                    .zip(&sol.coefficients)
                    .map(|(k, a)| json!({ "n": k, "re": a.re, "im": a.im }))
                    .collect();
                rec.output("coefficients", Value::Array(coeffs));
            }
        }
        Command::AhlforsCheck { radius, zeta, samples } => {
            let geom = geometry(radius.r)?;
            if samples == 0 {
                return Err(CliError::Usage("--samples must be at least 1".into()));
            }
            let p = AnnulusPoint::interior(zeta, &geom)?;
            let mut dev = [0.0f64; 2];
            for (slot, circle) in [geom.radius(), 1.0].into_iter().enumerate() {
                for k in 0..samples {
                    let z = Complex64::from_polar(circle, 2.0 * PI * k as f64 / samples as f64);
                    dev[slot] = dev[slot].max((ahlfors_map(z, p, &geom, ctl)?.norm() - 1.0).abs());
                }
            }
            let h = 1e-4 * zeta.norm().min(1.0 - zeta.norm()).min(zeta.norm() - geom.radius()).max(1e-8);
            let fp = ahlfors_map(zeta + h, p, &geom, ctl)?;
            let fm = ahlfors_map(zeta - h, p, &geom, ctl)?;
            let deriv = (fp - fm) / (2.0 * h);
            let two_pi_s = 2.0 * PI * szego_diag(p, &geom, ctl)?;
            rec.input("R", json!(radius.r)).input("zeta", cplx(zeta)).input("samples", json!(samples));
            rec.output("max_modulus_deviation_inner", json!(dev[0]))
                .output("max_modulus_deviation_outer", json!(dev[1]))
                .output("value_at_zeta_abs", json!(ahlfors_map(zeta, p, &geom, ctl)?.norm()))
                .output("derivative_at_zeta", cplx(deriv))
                .output("two_pi_szego_diag", json!(two_pi_s))
                .output("derivative_error", json!((deriv - two_pi_s).norm()));
        }
    }
    Ok(Rendered::Json(rec))
}
