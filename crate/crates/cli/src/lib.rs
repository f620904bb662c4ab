//! Command implementations behind the `optquad` binary. Each command
//! returns the rendered output so it can be tested without a process.

pub mod golden;

use std::fmt::Write as _;

use clap::ValueEnum;
use num_traits::Signed;
use optquad_core::exact::Rational;
use optquad_core::norm::{error_bound, norm_report};
use optquad_core::oracle::{check_against_formula, solve_full_system};
use optquad_core::real::{format_decimal, parse_decimal};
use optquad_core::solver::optimal_formula;
use optquad_core::{Error, OptimalFormula, PrecisionConfig, QuadratureSpec, Real};
use serde::{Deserialize, Serialize};

use golden::{GoldenTable, Rounding};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub m: usize,
    pub n: usize,
    pub etas: Vec<String>,
    pub precision_bits: usize,
    pub format: Format,
    pub digits: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numerical(Error),
    /// Verification ran but found discrepancies; the report is attached.
    #[error("verification failed")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::PrecisionExhausted(_)
            | Error::SingularSystem { .. }
            | Error::RootCountMismatch { .. } => CliError::Numerical(e),
            other => CliError::Usage(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Decimal digits a `bits`-wide mantissa can carry.
pub fn decimal_capacity(bits: usize) -> usize {
    (bits as f64 * std::f64::consts::LOG10_2).floor() as usize
}

impl RunConfig {
    pub fn precision(&self) -> CliResult<PrecisionConfig> {
        let p = PrecisionConfig::new(self.precision_bits)?;
        if self.digits == 0 || self.digits > decimal_capacity(self.precision_bits) {
            return Err(CliError::Usage(format!(
                "--digits must be between 1 and {} at {} bits",
                decimal_capacity(self.precision_bits),
                self.precision_bits
            )));
        }
        Ok(p)
    }

    pub fn spec(&self) -> CliResult<QuadratureSpec> {
        let etas = if self.etas.is_empty() {
            vec![Rational::from_integer(0.into())]
        } else {
            self.etas
                .iter()
                .map(|s| parse_decimal(s))
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(QuadratureSpec::new(self.m, self.n, etas)?)
    }

    fn fmt(&self, v: &Real) -> String {
        v.to_decimal(self.digits)
    }

    fn etas_text(&self, spec: &QuadratureSpec) -> Vec<String> {
        spec.etas().iter().map(|e| format_decimal(e, self.digits)).collect()
    }
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct FormulaJson {
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub etas: Vec<String>,
    pub precision_bits: usize,
    pub roots: Vec<String>,
    pub d: Vec<String>,
    pub nodes: Vec<String>,
    pub coefficients: Vec<String>,
    pub norm_squared: String,
    pub norm: String,
}

fn formula_json(cfg: &RunConfig, f: &OptimalFormula) -> FormulaJson {
    let sq = f.norm_squared.clone().expect("norm evaluated by the pipeline");
    FormulaJson {
        m: f.spec.m(),
        n: f.spec.n(),
        etas: cfg.etas_text(&f.spec),
        precision_bits: f.precision_bits,
        roots: f.roots.roots.iter().map(|v| cfg.fmt(v)).collect(),
        d: f.d.iter().map(|v| cfg.fmt(v)).collect(),
        nodes: f.nodes.iter().map(|v| cfg.fmt(v)).collect(),
        coefficients: f.coefficients.iter().map(|v| cfg.fmt(v)).collect(),
        norm: cfg.fmt(&sq.abs().sqrt()),
        norm_squared: cfg.fmt(&sq),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn compute(cfg: &RunConfig) -> CliResult<OptimalFormula> {
    let prec = cfg.precision()?;
    let spec = cfg.spec()?;
    Ok(optimal_formula(&spec, &prec)?)
}

pub fn cmd_coeffs(cfg: &RunConfig) -> CliResult<String> {
    let f = compute(cfg)?;
    let j = formula_json(cfg, &f);
    Ok(match cfg.format {
        Format::Json => to_json(&j),
        Format::Csv => csv_rows(
            &["beta", "x_beta", "C_beta"],
            j.nodes
                .iter()
                .zip(&j.coefficients)
                .enumerate()
                .map(|(b, (x, c))| vec![b.to_string(), x.clone(), c.clone()])
                .collect(),
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "m = {}, N = {}, etas = [{}]", j.m, j.n, j.etas.join(", "));
            let _ = writeln!(s, "precision = {} bits", j.precision_bits);
            for (k, (q, d)) in j.roots.iter().zip(&j.d).enumerate() {
                let _ = writeln!(s, "q_{} = {q}   d_{} = {d}", k + 1, k + 1);
            }
            for (b, (x, c)) in j.nodes.iter().zip(&j.coefficients).enumerate() {
                let _ = writeln!(s, "C_{b} = {c}   x_{b} = {x}");
            }
            let _ = writeln!(s, "norm^2 = {}", j.norm_squared);
            let _ = writeln!(s, "norm = {}", j.norm);
            s
        }
    })
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NormJson {
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub etas: Vec<String>,
    pub precision_bits: usize,
    pub norm_squared: String,
    pub norm_squared_direct: String,
    pub norm: String,
    pub relative_discrepancy: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<String>,
}

fn parse_real(s: &str, bits: usize) -> CliResult<Real> {
    Ok(Real::from_rational(&parse_decimal(s)?, bits))
}

pub fn cmd_norm(cfg: &RunConfig, phi_norm: Option<&str>) -> CliResult<String> {
    let f = compute(cfg)?;
    let r = norm_report(&f);
    let bound = match phi_norm {
        Some(p) => {
            let p = parse_real(p, f.precision_bits)?;
            if p.is_negative() {
                return Err(CliError::Usage("--phi-norm must be non-negative".into()));
            }
            Some(cfg.fmt(&error_bound(&f, &p)))
        }
        None => None,
    };
    let j = NormJson {
        m: f.spec.m(),
        n: f.spec.n(),
        etas: cfg.etas_text(&f.spec),
        precision_bits: f.precision_bits,
        norm_squared: cfg.fmt(&r.closed),
        norm_squared_direct: cfg.fmt(&r.direct),
        norm: cfg.fmt(&r.norm),
        relative_discrepancy: r.relative_discrepancy().to_decimal(3),
        error_bound: bound,
    };
    Ok(match cfg.format {
        Format::Json => to_json(&j),
        Format::Csv => {
            let mut header = vec!["norm_squared", "norm_squared_direct", "norm", "relative_discrepancy"];
            let mut row = vec![
                j.norm_squared.clone(),
                j.norm_squared_direct.clone(),
                j.norm.clone(),
                j.relative_discrepancy.clone(),
            ];
            if let Some(b) = &j.error_bound {
                header.push("error_bound");
                row.push(b.clone());
            }
            csv_rows(&header, vec![row])
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "norm^2 (closed) = {}", j.norm_squared);
            let _ = writeln!(s, "norm^2 (direct) = {}", j.norm_squared_direct);
            let _ = writeln!(s, "norm = {}", j.norm);
            let _ = writeln!(s, "relative discrepancy = {}", j.relative_discrepancy);
            if let Some(b) = &j.error_bound {
                let _ = writeln!(s, "error bound = {b}");
            }
            s
        }
    })
}

/// Splits sample input into one decimal per non-empty line.
pub fn parse_samples(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect()
}

pub fn cmd_integrate(cfg: &RunConfig, samples: &[String], phi_norm: Option<&str>) -> CliResult<String> {
    let f = compute(cfg)?;
    if samples.len() != f.coefficients.len() {
        return Err(CliError::Usage(format!(
            "expected {} samples (one per node), got {}",
            f.coefficients.len(),
            samples.len()
        )));
    }
    let values = samples
        .iter()
        .map(|s| parse_real(s, f.precision_bits))
        .collect::<CliResult<Vec<_>>>()?;
    let value = f.apply(&values)?;
    let bound = match phi_norm {
        Some(p) => Some(error_bound(&f, &parse_real(p, f.precision_bits)?)),
        None => None,
    };
    let value_s = cfg.fmt(&value);
    let bound_s = bound.as_ref().map(|b| cfg.fmt(b));
    Ok(match cfg.format {
        Format::Json => {
            let mut v = serde_json::json!({ "value": value_s });
            if let Some(b) = bound_s {
                v["error_bound"] = serde_json::Value::String(b);
            }
            to_json(&v)
        }
        Format::Csv => match bound_s {
            Some(b) => csv_rows(&["value", "error_bound"], vec![vec![value_s, b]]),
            None => csv_rows(&["value"], vec![vec![value_s]]),
        },
        Format::Text => match bound_s {
            Some(b) => format!("{value_s}\nerror bound = {b}\n"),
            None => format!("{value_s}\n"),
        },
    })
}

#[derive(Debug, Serialize)]
pub struct EntryCheck {
    pub index: usize,
    pub expected: String,
    pub computed: String,
    pub deviation: String,
    pub tolerance: String,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct FilterCheck {
    pub listed: Vec<usize>,
    pub computed: Vec<usize>,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct NormCheck {
    pub printed: String,
    pub computed: String,
    pub rounding: &'static str,
    pub pass: bool,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub table: &'static str,
    pub m: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub eta0: &'static str,
    pub entries: Vec<EntryCheck>,
    pub max_deviation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary_layer: Option<FilterCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm: Option<NormCheck>,
    pub pass: bool,
}

/// Distance from `h` above which a coefficient counts as boundary layer.
pub const LAYER_THRESHOLD: &str = "1e-8";

fn parse_entry(v: &str) -> CliResult<Rational> {
    if v.contains('/') {
        v.parse::<Rational>()
            .map_err(|_| CliError::Usage(format!("bad fraction {v:?}")))
    } else {
        Ok(parse_decimal(v)?)
    }
}

/// `v` rounded at `places` decimals, up or to nearest.
pub fn round_at(v: &Rational, places: usize, rounding: Rounding) -> Rational {
    let scale = parse_decimal(&format!("1e{places}")).expect("literal");
    let x = v * &scale;
    let r = match rounding {
        Rounding::Up => x.ceil(),
        Rounding::Nearest => x.round(),
    };
    r / scale
}

/// Recomputes a golden table's instance and compares every listed value.
pub fn verify_table(t: &GoldenTable, bits: usize, digits: usize) -> CliResult<VerifyReport> {
    let prec = PrecisionConfig::new(bits)?;
    let spec = QuadratureSpec::single_offset(t.m, t.n, parse_decimal(t.eta0)?)?;
    let f = optimal_formula(&spec, &prec)?;
    let mut entries = Vec::new();
    let mut worst = Rational::from_integer(0.into());
    for e in t.entries {
        let expected = parse_entry(e.value)?;
        let tol = parse_decimal(e.tolerance.unwrap_or(t.tolerance))?;
        let computed = f.coefficients[e.index].to_rational();
        let dev = (&computed - &expected).abs();
        if dev > worst {
            worst = dev.clone();
        }
        entries.push(EntryCheck {
            index: e.index,
            expected: e.value.to_string(),
            computed: format_decimal(&computed, digits),
            deviation: format_decimal(&dev, 3),
            tolerance: e.tolerance.unwrap_or(t.tolerance).to_string(),
            pass: dev <= tol,
        });
    }
    let boundary_layer = t.boundary_layer.then(|| {
        let h = spec.h();
        let thr = parse_decimal(LAYER_THRESHOLD).expect("literal");
        let computed: Vec<usize> = (0..=t.n / 2)
            .filter(|&b| (f.coefficients[b].to_rational() - &h).abs() > thr)
            .collect();
        let listed: Vec<usize> = t.entries.iter().map(|e| e.index).collect();
        FilterCheck {
            pass: listed == computed,
            listed,
            computed,
        }
    });
    let norm = match t.norm {
        Some((printed, rounding)) => {
            let places = printed.split('.').nth(1).map_or(0, str::len);
            let value = f.norm().expect("norm evaluated by the pipeline");
            let rounded = round_at(&value.to_rational(), places, rounding);
            Some(NormCheck {
                printed: printed.to_string(),
                computed: value.to_decimal(digits),
                rounding: match rounding {
                    Rounding::Up => "up",
                    Rounding::Nearest => "nearest",
                },
                pass: rounded == parse_decimal(printed)?,
            })
        }
        None => None,
    };
    let pass = entries.iter().all(|e| e.pass)
        && boundary_layer.as_ref().is_none_or(|c| c.pass)
        && norm.as_ref().is_none_or(|c| c.pass);
    Ok(VerifyReport {
        table: t.id,
        m: t.m,
        n: t.n,
        eta0: t.eta0,
        entries,
        max_deviation: format_decimal(&worst, 3),
        boundary_layer,
        norm,
        pass,
    })
}

fn render_verify(r: &VerifyReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Csv => csv_rows(
            &["index", "expected", "computed", "deviation", "tolerance", "pass"],
            r.entries
                .iter()
                .map(|e| {
                    vec![
                        e.index.to_string(),
                        e.expected.clone(),
                        e.computed.clone(),
                        e.deviation.clone(),
                        e.tolerance.clone(),
                        e.pass.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "{}: m = {}, N = {}, eta0 = {}", r.table, r.m, r.n, r.eta0);
            for e in &r.entries {
                let _ = writeln!(
                    s,
                    "C_{:<4} {:>26} {:>26}  dev {:<10} {}",
                    e.index,
                    e.expected,
                    e.computed,
                    e.deviation,
                    if e.pass { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(s, "max deviation {}", r.max_deviation);
            if let Some(c) = &r.boundary_layer {
                let _ = writeln!(
                    s,
                    "boundary layer |C - h| > {LAYER_THRESHOLD}: {} listed, {} computed, {}",
                    c.listed.len(),
                    c.computed.len(),
                    if c.pass { "ok" } else { "MISMATCH" }
                );
            }
            if let Some(n) = &r.norm {
                let _ = writeln!(
                    s,
                    "norm {} (printed {}, rounded {}) {}",
                    n.computed,
                    n.printed,
                    n.rounding,
                    if n.pass { "ok" } else { "MISMATCH" }
                );
            }
            let _ = writeln!(s, "{}", if r.pass { "PASS" } else { "FAIL" });
            s
        }
    }
}

pub fn cmd_verify(table: &str, bits: usize, format: Format, digits: usize) -> CliResult<String> {
    let t = golden::find(table).ok_or_else(|| {
        let ids: Vec<&str> = golden::TABLES.iter().map(|t| t.id).collect();
        CliError::Usage(format!("unknown table {table:?}; known: {}", ids.join(", ")))
    })?;
    let report = verify_table(t, bits, digits)?;
    let out = render_verify(&report, format);
    if report.pass {
        Ok(out)
    } else {
        Err(CliError::Mismatch(out))
    }
}

pub const DEFAULT_ORACLE_TOLERANCE: &str = "1e-25";

pub fn cmd_oracle_check(cfg: &RunConfig, tolerance: &str) -> CliResult<String> {
    let prec = cfg.precision()?;
    let spec = cfg.spec()?;
    let tol = parse_real(tolerance, prec.working_bits)?;
    let oracle = solve_full_system(&spec, &prec)?;
    let f = optimal_formula(&spec, &prec)?;
    let dev = check_against_formula(&oracle, &f)?;
    let pass = dev <= tol;
    let dev_s = dev.to_decimal(3);
    let out = match cfg.format {
        Format::Json => to_json(&serde_json::json!({
            "m": spec.m(),
            "N": spec.n(),
            "etas": cfg.etas_text(&spec),
            "precision_bits": prec.working_bits,
            "max_deviation": dev_s,
            "oracle_residual": oracle.residual.to_decimal(3),
            "tolerance": tolerance,
            "pass": pass,
        })),
        Format::Csv => csv_rows(
            &["max_deviation", "tolerance", "pass"],
            vec![vec![dev_s, tolerance.to_string(), pass.to_string()]],
        ),
        Format::Text => format!(
            "max |C_formula - C_oracle| = {dev_s} (tolerance {tolerance}) {}\n",
            if pass { "ok" } else { "MISMATCH" }
        ),
    };
    if pass {
        Ok(out)
    } else {
        Err(CliError::Mismatch(out))
    }
}
