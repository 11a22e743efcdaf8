//! Command-line front end: graph construction, spectral analysis, hitting
//! times, per-vertex coin scans, and representation-theoretic predictions,
//! all emitting versioned JSON reports.

use std::fs;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use nalgebra::Complex;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;
use crate::group::{
    predict_infinite_hitting_continuous, predict_infinite_hitting_discrete,
    predict_infinite_hitting_discrete_sn, predict_infinite_hitting_discrete_table, CharacterTable,
    FiniteGroup, PredictionReport,
};
use crate::hitting::{
    classical_hitting_time, hitting_time_closed_form, hitting_time_truncated, p_series,
    Classification, HitReport, MeasuredWalkSetup, DEFAULT_SUPEROP_GUARD,
};
use crate::linalg::{CVector, DEFAULT_RANK_TOL};
use crate::spectral::{
    build_trapped_projector, cluster_eigenspaces, coin_overlap_matrix, TrappedReport,
    VertexTrapClass, DEFAULT_CLUSTER_TOL,
};
use crate::walk::{adjacency_hamiltonian, discrete_evolution, Coin, WalkOperator};

pub const SCHEMA_VERSION: &str = "1";

/// Exit codes: 0 success, 2 config error, 3 resource guard, 4 insufficient
/// data.
pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INSUFFICIENT: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "qwalk",
    about = "Quantum walks on colored regular graphs: trapped subspaces, hitting times, and group-theoretic predictors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CommonOpts {
    /// Graph spec: hypercube:N, sn:N (transposition Cayley graph), cyclic:N
    /// impossible targets rejected, or file:PATH.
    #[arg(long)]
    pub graph: String,
    /// Coin spec: grover, dft, random:SEED, or file:PATH.
    #[arg(long, default_value = "grover")]
    pub coin: String,
    /// Final (absorbing) vertex.
    #[arg(long, default_value_t = 0)]
    pub r#final: usize,
    /// Initial state: "V:uniform", "V:basis-K", or "V:[c1,c2,...]".
    #[arg(long)]
    pub start: Option<String>,
    /// Eigenvalue clustering tolerance.
    #[arg(long, default_value_t = DEFAULT_CLUSTER_TOL)]
    pub tol_cluster: f64,
    /// Rank / pseudo-inverse tolerance.
    #[arg(long, default_value_t = DEFAULT_RANK_TOL)]
    pub tol_rank: f64,
    /// Survival-norm threshold for declaring the truncated series converged.
    #[arg(long, default_value_t = 1e-10)]
    pub tail_tol: f64,
    /// Truncation horizon for the series method.
    #[arg(long = "T", default_value_t = 200)]
    pub t: usize,
    /// Output path for the report (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Seed for random coins.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Analyze the continuous-time walk (adjacency Hamiltonian) instead of
    /// the coined walk.
    #[arg(long, default_value_t = false)]
    pub continuous: bool,
    /// Largest walk dimension admitted to the superoperator path.
    #[arg(long, default_value_t = DEFAULT_SUPEROP_GUARD)]
    pub max_dim_guard: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph and print its edge-colored text form plus summary data.
    Graph(CommonOpts),
    /// Cluster the spectrum, build the trapped projector, report rank and
    /// per-vertex coin overlap spectra.
    Analyze(CommonOpts),
    /// Compute the hitting time by the closed-form and truncated methods and
    /// export the p(t) series.
    Hit(CommonOpts),
    /// Diagnose one vertex: coin overlap eigensystem and trap class.
    Scan(CommonOpts),
    /// Representation-theoretic predictor for infinite hitting times.
    Predict(PredictOpts),
}

#[derive(Args, Debug, Clone)]
pub struct PredictOpts {
    /// Group spec: sn:N, cyclic:N, z2:N, or table:PATH (character table).
    #[arg(long)]
    pub group: String,
    /// Coin dimension (degree of the Cayley graph) for the discrete
    /// criterion.
    #[arg(long)]
    pub coin_dim: Option<usize>,
    /// Use the continuous-walk (non-Abelian) criterion.
    #[arg(long, default_value_t = false)]
    pub continuous: bool,
    /// Output path for the report (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Round to 12 significant digits so reports are stable across runs and
/// platforms.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    let exp = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(11 - exp);
    (x * scale).round() / scale
}

fn timestamp() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn wrap_report<S: Serialize>(command: &str, body: &S) -> Result<Value> {
    let mut v = serde_json::to_value(body)?;
    if let Value::Object(map) = &mut v {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
        map.insert("command".into(), json!(command));
        map.insert("timestamp".into(), json!(timestamp()));
    }
    Ok(v)
}

fn emit(out: &Option<PathBuf>, report: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(report)?;
    match out {
        Some(path) => fs::write(path, text + "\n")?,
        None => println!("{text}"),
    }
    Ok(())
}

/// Parse a graph spec into a graph.
pub fn parse_graph_spec(spec: &str) -> Result<ColoredGraph> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "hypercube" => {
            let n: usize = arg
                .parse()
                .map_err(|_| Error::Range(format!("bad hypercube order {arg:?}")))?;
            ColoredGraph::hypercube(n)
        }
        "sn" => {
            let n: usize = arg
                .parse()
                .map_err(|_| Error::Range(format!("bad symmetric-group order {arg:?}")))?;
            ColoredGraph::sn_transposition_cayley(n)
        }
        "file" => {
            let text = fs::read_to_string(arg)?;
            ColoredGraph::parse(&text)
        }
        _ => Err(Error::Range(format!(
            "unknown graph spec {spec:?}; expected hypercube:N, sn:N, or file:PATH"
        ))),
    }
}

/// Parse a coin spec for a given degree.
pub fn parse_coin_spec(spec: &str, d: usize, default_seed: u64) -> Result<Coin<f64>> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    match kind {
        "grover" => Coin::grover(d),
        "dft" => Coin::dft(d),
        "random" => {
            let seed: u64 = if arg.is_empty() {
                default_seed
            } else {
                arg.parse()
                    .map_err(|_| Error::Range(format!("bad random-coin seed {arg:?}")))?
            };
            Coin::random(d, seed)
        }
        "file" => {
            let text = fs::read_to_string(arg)?;
            let c = Coin::parse(&text)?;
            if c.dim != d {
                return Err(Error::DimensionMismatch(format!(
                    "coin file has dimension {}, graph degree is {d}",
                    c.dim
                )));
            }
            Ok(c)
        }
        _ => Err(Error::Range(format!(
            "unknown coin spec {spec:?}; expected grover, dft, random:SEED, or file:PATH"
        ))),
    }
}

/// Parse one complex literal: "1", "-0.5", "2i", "1+2i", "0.5-0.25i".
pub fn parse_complex(tok: &str) -> Result<Complex<f64>> {
    let t = tok.trim();
    let bad = || Error::Parse {
        line: 0,
        msg: format!("bad complex literal {t:?}"),
    };
    if t.is_empty() {
        return Err(bad());
    }
    // Pure imaginary or pure real.
    if let Some(imag) = t.strip_suffix(['i', 'j']) {
        // Find the split point between real and imaginary parts: the last
        // +/- that is not a leading sign or part of an exponent.
        let bytes = imag.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let ch = bytes[k] as char;
            if (ch == '+' || ch == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = imag[..k].parse().map_err(|_| bad())?;
                let im_str = &imag[k..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str.parse().map_err(|_| bad())?
                };
                Ok(Complex::new(re, im))
            }
            None => {
                let im: f64 = if imag.is_empty() {
                    1.0
                } else if imag == "-" {
                    -1.0
                } else {
                    imag.parse().map_err(|_| bad())?
                };
                Ok(Complex::new(0.0, im))
            }
        }
    } else {
        let re: f64 = t.parse().map_err(|_| bad())?;
        Ok(Complex::new(re, 0.0))
    }
}

/// Parse "V:uniform", "V:basis-K" (K is 1-based), or "V:[c1,c2,...]" into a
/// vertex index and a normalized coin vector of dimension d.
pub fn parse_initial_state(spec: &str, d: usize) -> Result<(usize, CVector<f64>)> {
    let (vstr, coin) = spec.split_once(':').ok_or_else(|| Error::Parse {
        line: 0,
        msg: format!("initial state {spec:?} needs the form VERTEX:COIN"),
    })?;
    let vertex: usize = vstr.trim().parse().map_err(|_| Error::Parse {
        line: 0,
        msg: format!("bad vertex index {vstr:?}"),
    })?;
    let coin = coin.trim();
    let alpha = if coin == "uniform" {
        Coin::<f64>::uniform_state(d)
    } else if let Some(k) = coin.strip_prefix("basis-") {
        let k: usize = k.parse().map_err(|_| Error::Parse {
            line: 0,
            msg: format!("bad basis index in {coin:?}"),
        })?;
        if k < 1 || k > d {
            return Err(Error::Range(format!("basis index {k} out of range 1..={d}")));
        }
        let mut v = CVector::<f64>::zeros(d);
        v[k - 1] = Complex::new(1.0, 0.0);
        v
    } else if coin.starts_with('[') && coin.ends_with(']') {
        let inner = &coin[1..coin.len() - 1];
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "coin state has {} amplitudes, degree is {d}",
                parts.len()
            )));
        }
        let mut v = CVector::<f64>::zeros(d);
        for (i, p) in parts.iter().enumerate() {
            v[i] = parse_complex(p)?;
        }
        let norm = v.norm();
        if norm < 1e-14 {
            return Err(Error::NotNormalized { norm: 0.0 });
        }
        v / Complex::new(norm, 0.0)
    } else {
        return Err(Error::Parse {
            line: 0,
            msg: format!("bad coin state {coin:?}; expected uniform, basis-K, or [c1,...]"),
        });
    };
    Ok((vertex, alpha))
}

fn build_walk(opts: &CommonOpts) -> Result<(ColoredGraph, WalkOperator<f64>)> {
    let g = parse_graph_spec(&opts.graph)?;
    let w = if opts.continuous {
        adjacency_hamiltonian::<f64>(&g)
    } else {
        let coin = parse_coin_spec(&opts.coin, g.degree(), opts.seed)?;
        discrete_evolution(&g, coin)?
    };
    Ok((g, w))
}

fn validate_common(opts: &CommonOpts) -> Result<()> {
    if opts.tol_cluster <= 0.0 || opts.tol_rank <= 0.0 || opts.tail_tol < 0.0 {
        return Err(Error::Range("tolerances must be positive".into()));
    }
    if opts.t < 1 {
        return Err(Error::Range("T must be >= 1".into()));
    }
    Ok(())
}

pub fn cmd_graph(opts: &CommonOpts) -> Result<()> {
    validate_common(opts)?;
    let g = parse_graph_spec(&opts.graph)?;
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "graph",
        "timestamp": timestamp(),
        "num_vertices": g.num_vertices(),
        "degree": g.degree(),
        "connected": g.is_connected(),
        "cayley": g.cayley_meta().is_some(),
        "text": g.to_text(),
    });
    emit(&opts.out, &report)
}

pub fn cmd_analyze(opts: &CommonOpts) -> Result<()> {
    validate_common(opts)?;
    let (g, w) = build_walk(opts)?;
    if opts.r#final >= g.num_vertices() {
        return Err(Error::Range(format!(
            "final vertex {} out of range 0..{}",
            opts.r#final,
            g.num_vertices()
        )));
    }
    let clustering = cluster_eigenspaces(&w, opts.tol_cluster)?;
    let trapped = build_trapped_projector(&clustering, opts.r#final)?;
    let vertices: Vec<usize> = (0..g.num_vertices()).collect();
    let body = TrappedReport::build(&clustering, &trapped, &vertices)?;
    let mut report = wrap_report("analyze", &body)?;
    if let Value::Object(map) = &mut report {
        map.insert("rank_P".into(), json!(trapped.rank));
        map.insert("tol_cluster".into(), json!(sig12(opts.tol_cluster)));
        map.insert("tol_rank".into(), json!(sig12(opts.tol_rank)));
    }
    emit(&opts.out, &report)
}

pub fn cmd_hit(opts: &CommonOpts) -> Result<()> {
    validate_common(opts)?;
    if opts.continuous {
        return Err(Error::WrongKind(
            "hitting times are defined for the discrete walk; use analyze for continuous trapping"
                .into(),
        ));
    }
    let start = opts.start.as_deref().ok_or_else(|| {
        Error::Range("hit requires --start VERTEX:COIN".into())
    })?;
    let (g, w) = build_walk(opts)?;
    let (vertex, alpha) = parse_initial_state(start, g.degree())?;
    let setup = MeasuredWalkSetup::from_vertex_coin(w.clone(), opts.r#final, vertex, &alpha)?;
    let clustering = cluster_eigenspaces(&w, opts.tol_cluster)?;
    let trapped = build_trapped_projector(&clustering, opts.r#final)?;
    let closed = match hitting_time_closed_form(&setup, &trapped, opts.tol_rank, opts.max_dim_guard)
    {
        Ok(r) => Some(r),
        Err(Error::ResourceGuard(_)) => None,
        Err(e) => return Err(e),
    };
    let truncated = hitting_time_truncated(&setup, opts.t, opts.tail_tol)?;
    let agreement = match (&closed, &truncated.classification) {
        (Some(c), Classification::Finite) => {
            c.tau.map(|ct| sig12((ct - truncated.tau.unwrap()).abs()))
        }
        _ => None,
    };
    let series = p_series(&setup, opts.t)?;
    let body = HitReport {
        closed_form: closed,
        truncated,
        agreement,
        tail_tol: sig12(opts.tail_tol),
        rank_tol: sig12(opts.tol_rank),
    };
    let mut report = wrap_report("hit", &body)?;
    round_numbers(&mut report);
    if let Value::Object(map) = &mut report {
        let classical = classical_hitting_time(&g, vertex, opts.r#final)?;
        map.insert("classical_tau".into(), json!(sig12(classical)));
        map.insert("start_vertex".into(), json!(vertex));
        map.insert("final_vertex".into(), json!(opts.r#final));
    }
    if let Some(out) = &opts.out {
        emit(&opts.out, &report)?;
        let csv_path = out.with_extension("csv");
        let mut buf = Vec::new();
        series.write_csv(&mut buf)?;
        fs::write(csv_path, buf)?;
    } else {
        emit(&None, &report)?;
    }
    Ok(())
}

pub fn cmd_scan(opts: &CommonOpts) -> Result<()> {
    validate_common(opts)?;
    let start = opts.start.as_deref().unwrap_or("0:uniform");
    let vertex: usize = start
        .split(':')
        .next()
        .unwrap()
        .trim()
        .parse()
        .map_err(|_| Error::Range(format!("bad vertex in --start {start:?}")))?;
    let (g, w) = build_walk(opts)?;
    if vertex >= g.num_vertices() {
        return Err(Error::Range(format!(
            "vertex {vertex} out of range 0..{}",
            g.num_vertices()
        )));
    }
    let clustering = cluster_eigenspaces(&w, opts.tol_cluster)?;
    let trapped = build_trapped_projector(&clustering, opts.r#final)?;
    let (class, eigenvalues, zero_states): (VertexTrapClass, Vec<f64>, Vec<Vec<[f64; 2]>>) =
        if opts.continuous {
            let mass = crate::spectral::vertex_trap_overlap_continuous(&trapped, vertex);
            let class = if mass > opts.tol_rank {
                VertexTrapClass::AllInfinite
            } else {
                VertexTrapClass::Untrapped
            };
            (class, vec![sig12(mass)], vec![])
        } else {
            let r = coin_overlap_matrix(&trapped, vertex)?;
            let zeros = (0..r.zero_eigenvectors.ncols())
                .map(|j| {
                    (0..r.zero_eigenvectors.nrows())
                        .map(|i| {
                            let z = r.zero_eigenvectors[(i, j)];
                            [sig12(z.re), sig12(z.im)]
                        })
                        .collect()
                })
                .collect();
            (
                r.classify(),
                r.eigenvalues.iter().map(|&l| sig12(l)).collect(),
                zeros,
            )
        };
    let report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "scan",
        "timestamp": timestamp(),
        "vertex": vertex,
        "final_vertex": opts.r#final,
        "rank_P": trapped.rank,
        "class": class,
        "eigenvalues": eigenvalues,
        "zero_eigenvectors": zero_states,
    });
    emit(&opts.out, &report)
}

pub fn cmd_predict(opts: &PredictOpts) -> Result<()> {
    let (kind, arg) = opts.group.split_once(':').unwrap_or((opts.group.as_str(), ""));
    let report: PredictionReport = match kind {
        "sn" => {
            let n: usize = arg
                .parse()
                .map_err(|_| Error::Range(format!("bad symmetric-group order {arg:?}")))?;
            if opts.continuous {
                let (g, _) = FiniteGroup::symmetric(n)?;
                predict_infinite_hitting_continuous(&g)
            } else {
                let coin_dim = opts.coin_dim.unwrap_or(n * (n - 1) / 2);
                predict_infinite_hitting_discrete_sn(n, coin_dim)?
            }
        }
        "cyclic" | "z2" => {
            let n: usize = arg
                .parse()
                .map_err(|_| Error::Range(format!("bad group order {arg:?}")))?;
            let g = if kind == "cyclic" {
                FiniteGroup::cyclic(n)?
            } else {
                FiniteGroup::elementary_abelian_2(n)?
            };
            if opts.continuous {
                predict_infinite_hitting_continuous(&g)
            } else {
                let coin_dim = opts.coin_dim.ok_or_else(|| {
                    Error::Range("discrete prediction needs --coin-dim".into())
                })?;
                predict_infinite_hitting_discrete(&g, None, coin_dim)?
            }
        }
        "table" => {
            let text = fs::read_to_string(arg)?;
            let table = CharacterTable::parse(&text)?;
            if opts.continuous {
                return Err(Error::Range(
                    "the continuous criterion needs a group spec, not a character table".into(),
                ));
            }
            let coin_dim = opts
                .coin_dim
                .ok_or_else(|| Error::Range("table prediction needs --coin-dim".into()))?;
            predict_infinite_hitting_discrete_table(&table, coin_dim, arg)
        }
        _ => {
            return Err(Error::InsufficientData(format!(
                "unsupported group spec {:?}; provide sn:N, cyclic:N, z2:N, or table:PATH",
                opts.group
            )))
        }
    };
    let mut v = wrap_report("predict", &report)?;
    if let Value::Object(map) = &mut v {
        map.insert("continuous".into(), json!(opts.continuous));
    }
    emit(&opts.out, &v)
}

/// Round every float in a JSON tree to 12 significant digits.
fn round_numbers(v: &mut Value) {
    match v {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.as_i64().is_none() && n.as_u64().is_none() {
                    if let Some(r) = serde_json::Number::from_f64(sig12(f)) {
                        *v = Value::Number(r);
                    }
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_numbers),
        Value::Object(map) => map.values_mut().for_each(round_numbers),
        _ => {}
    }
}

/// Run a parsed command and map errors to the exit-code contract.
pub fn run(cli: Cli) -> i32 {
    let result = match &cli.command {
        Command::Graph(o) => cmd_graph(o),
        Command::Analyze(o) => cmd_analyze(o),
        Command::Hit(o) => cmd_hit(o),
        Command::Scan(o) => cmd_scan(o),
        Command::Predict(o) => cmd_predict(o),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::ResourceGuard(_) => EXIT_RESOURCE,
                Error::InsufficientData(_) => EXIT_INSUFFICIENT,
                _ => EXIT_CONFIG,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1").unwrap(), Complex::new(1.0, 0.0));
        assert_eq!(parse_complex("-0.5").unwrap(), Complex::new(-0.5, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), Complex::new(0.0, 2.0));
        assert_eq!(parse_complex("i").unwrap(), Complex::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex::new(0.0, -1.0));
        assert_eq!(parse_complex("1+2i").unwrap(), Complex::new(1.0, 2.0));
        assert_eq!(parse_complex("0.5-0.25i").unwrap(), Complex::new(0.5, -0.25));
        assert_eq!(parse_complex("1e-2+3e-4i").unwrap(), Complex::new(1e-2, 3e-4));
        assert!(parse_complex("").is_err());
        assert!(parse_complex("xyz").is_err());
    }

    #[test]
    fn initial_state_forms() {
        let (v, a) = parse_initial_state("3:uniform", 4).unwrap();
        assert_eq!(v, 3);
        assert!((a[0].re - 0.5).abs() < 1e-12);
        let (_, b) = parse_initial_state("0:basis-2", 4).unwrap();
        assert!((b[1].re - 1.0).abs() < 1e-12);
        let (_, c) = parse_initial_state("0:[1,0,0,-1]", 4).unwrap();
        assert!((c.norm() - 1.0).abs() < 1e-12);
        assert!((c[0].re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!(parse_initial_state("0:basis-5", 4).is_err());
        assert!(parse_initial_state("0:[1,0]", 4).is_err());
        assert!(parse_initial_state("nonsense", 4).is_err());
    }

    #[test]
    fn graph_specs() {
        assert_eq!(parse_graph_spec("hypercube:3").unwrap().num_vertices(), 8);
        assert_eq!(parse_graph_spec("sn:3").unwrap().num_vertices(), 6);
        assert!(parse_graph_spec("torus:2").is_err());
        assert!(parse_graph_spec("hypercube:zero").is_err());
    }

    #[test]
    fn coin_specs() {
        assert!(parse_coin_spec("grover", 4, 0).is_ok());
        assert!(parse_coin_spec("dft", 3, 0).is_ok());
        let a = parse_coin_spec("random:7", 3, 0).unwrap();
        let b = parse_coin_spec("random:7", 3, 99).unwrap();
        assert_eq!(a.matrix, b.matrix);
        assert!(parse_coin_spec("penny", 2, 0).is_err());
    }

    #[test]
    fn sig12_rounds() {
        assert_eq!(sig12(0.0), 0.0);
        assert!((sig12(1.0 / 3.0) - 0.333333333333).abs() < 1e-15);
        assert!((sig12(12345.678901234567) - 12345.6789012).abs() < 1e-6);
        assert!((sig12(-1e-15) + 1e-15).abs() < 1e-27);
        // Rounding is idempotent.
        let x = sig12(std::f64::consts::PI);
        assert_eq!(sig12(x), x);
    }
}
