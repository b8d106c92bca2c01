//! Command-line front-end for exact lattice-free cut experiments.

pub mod gen;
pub mod json;
pub mod scenario;

use clap::{Args, Parser, Subcommand, ValueEnum};
use json::{cert_json, cut_json, parse_columns, parse_point, parse_polyhedron, poly_out, rat_json, strength_json, strength_str, vec_json, width_json};
use latcut_constructions::{approximate_any_f, approximate_fixed_f, cube_face_construction, lift_to_nplus1, simplex_tower, ConstructionError};
use latcut_cuts::{closure, cut_point_member, f_metric, intersection_cut, CutError};
use latcut_geometry::io::ParseError;
use latcut_geometry::rat::{parse_rat, Rat, RatVec};
use latcut_geometry::{contains, homothety, GeomError, Polyhedron};
use latcut_lattice::{check_lattice_free, lattice_width, LatticeError};
use latcut_strength::{rho_f, sandwich, StrengthError};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("unknown scenario {0:?}; run `latcut list-scenarios`")]
    UnknownScenario(String),
    #[error("unknown parameter {0:?} for scenario {1:?}")]
    UnknownParam(String, String),
    #[error("invalid value for {0:?}: {1}")]
    InvalidParam(String, String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Strength(#[from] StrengthError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Parser, Debug)]
#[command(name = "latcut", version, about = "Exact lattice-free sets, intersection cuts and their relative strength")]
pub struct Cli {
    /// Reject rationals that are not in lowest terms.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Seed for randomized scenarios.
    #[arg(long, global = true, env = "LATCUT_SEED", default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a certified lattice-free polyhedron.
    #[command(subcommand)]
    Construct(Construct),
    /// Certify lattice-freeness and maximality.
    Check { poly: PathBuf },
    /// Lattice width over primitive directions with sup-norm at most the bound.
    Width {
        poly: PathBuf,
        #[arg(long, default_value_t = 8)]
        bound: u64,
    },
    /// Intersection cut of a body on the given columns.
    Cut {
        /// Polyhedron JSON file.
        #[arg(long)]
        body: PathBuf,
        /// Point as a JSON list of rationals, e.g. `["1/2","1/3"]`.
        #[arg(long)]
        f: String,
        /// JSON file with a list of column vectors.
        #[arg(long)]
        cols: PathBuf,
    },
    /// Cuts of every body in a directory, with optional membership of a point.
    Closure {
        /// Directory of polyhedron JSON files.
        #[arg(long)]
        family: PathBuf,
        /// Point as a JSON list of rationals, e.g. `["1/2","1/3"]`.
        #[arg(long)]
        f: String,
        /// JSON file with a list of column vectors.
        #[arg(long)]
        cols: PathBuf,
        /// Point in column space to test against every cut.
        #[arg(long)]
        point: Option<String>,
    },
    /// Relative strength of the cut from B against the cut from L.
    Rho {
        /// Body B (polyhedron JSON file).
        #[arg(long)]
        b: PathBuf,
        /// Reference body L (polyhedron JSON file).
        #[arg(long)]
        l: PathBuf,
        /// Point as a JSON list of rationals, e.g. `["1/2","1/3"]`.
        #[arg(long)]
        f: String,
    },
    /// Lower witness and upper bound for the strength of a family.
    Sandwich {
        /// Directory of polyhedron JSON files.
        #[arg(long)]
        family: PathBuf,
        /// Reference body L (polyhedron JSON file).
        #[arg(long)]
        l: PathBuf,
        /// Point as a JSON list of rationals, e.g. `["1/2","1/3"]`.
        #[arg(long)]
        f: String,
    },
    /// Hausdorff distance between the polars of two bodies around f.
    Fmetric {
        b1: PathBuf,
        b2: PathBuf,
        /// Point as a JSON list of rationals, e.g. `["1/2","1/3"]`.
        #[arg(long)]
        f: String,
    },
    /// Lift a lattice-free base set to one more dimension.
    Lift(LiftArgs),
    /// Approximate a lattice-free set by one with few facets.
    Approx {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Reference body L (polyhedron JSON file).
        #[arg(long)]
        l: PathBuf,
        /// Point as a JSON list of rationals, e.g. `["1/2","1/3"]`.
        #[arg(long)]
        f: String,
    },
    /// Run a named scenario.
    Scenario {
        name: String,
        /// Parameter override `key=value`.
        #[arg(long = "set", value_parser = key_value)]
        set: Vec<(String, String)>,
        /// Print only the JSON report.
        #[arg(long)]
        json: bool,
    },
    /// List the available scenarios.
    ListScenarios,
}

#[derive(Subcommand, Debug)]
pub enum Construct {
    /// Maximal lattice-free polyhedron with exactly `i` facets.
    Cubeface {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
    },
    /// Maximal lattice-free simplex whose witnesses defeat sets with fewer facets.
    Tower {
        /// Point as a JSON list of rationals, e.g. `["1/2","1/3"]`.
        #[arg(long)]
        f: String,
        /// Target strength, a rational greater than 1.
        #[arg(long)]
        alpha: String,
    },
}

#[derive(Args, Debug)]
pub struct LiftArgs {
    /// Reference body L (polyhedron JSON file).
    #[arg(long)]
    pub l: PathBuf,
    /// Point as a JSON list of rationals, e.g. `["1/2","1/3"]`.
    #[arg(long)]
    pub f: String,
    /// Scaling factor, a positive rational.
    #[arg(long)]
    pub gamma: String,
    /// Lattice-free base set one dimension down.
    #[arg(long)]
    pub d: PathBuf,
    /// Integer level of the base set.
    #[arg(long, allow_hyphen_values = true)]
    pub t: i64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Any,
    Fixed,
}

fn key_value(s: &str) -> Result<(String, String), String> {
    s.split_once('=').map(|(k, v)| (k.trim().to_string(), v.trim().to_string())).ok_or_else(|| format!("expected key=value, got {s:?}"))
}

/// What a command prints and whether its checks passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub success: bool,
}

impl Output {
    fn json(v: &Value, success: bool) -> Self {
        let mut stdout = serde_json::to_string_pretty(v).expect("serializable");
        stdout.push('\n');
        Output { stdout, stderr: String::new(), success }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load(path: &Path, strict: bool) -> Result<Polyhedron, CliError> {
    parse_polyhedron(&read(path)?, strict).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

fn load_dir(dir: &Path, strict: bool) -> Result<Vec<Polyhedron>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths.iter().map(|p| load(p, strict)).collect()
}

fn point_arg(name: &str, s: &str) -> Result<RatVec, CliError> {
    parse_point(s).map_err(|source| CliError::Parse { path: format!("--{name}"), source })
}

fn rat_arg(name: &str, s: &str) -> Result<Rat, CliError> {
    parse_rat(s, false).map_err(|e| CliError::InvalidParam(name.into(), e.to_string()))
}

fn columns(path: &Path, strict: bool) -> Result<Vec<RatVec>, CliError> {
    parse_columns(&read(path)?, strict).map_err(|source| CliError::Parse { path: path.display().to_string(), source })
}

fn with_poly(p: &Polyhedron, mut extra: Value) -> Value {
    extra["polyhedron"] = serde_json::to_value(poly_out(p)).expect("serializable");
    extra
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    let strict = cli.strict;
    match cli.command {
        Command::Construct(Construct::Cubeface { n, i }) => {
            let p = cube_face_construction(n, i)?;
            let c = check_lattice_free(&p)?;
            let ok = c.is_lattice_free() && c.is_maximal() && p.n_facets() == i;
            Ok(Output::json(&with_poly(&p, json!({ "certificate": cert_json(&c), "facets": p.n_facets() })), ok))
        }
        Command::Construct(Construct::Tower { f, alpha }) => {
            let f = point_arg("f", &f)?;
            let alpha = rat_arg("alpha", &alpha)?;
            let t = simplex_tower(&f, &alpha)?;
            let chk = t.verify()?;
            let zs: Vec<Value> = t.zs.iter().map(|z| vec_json(z)).collect();
            let report = json!({
                "f": vec_json(&t.f),
                "alpha": rat_json(&t.alpha),
                "witnesses": zs,
                "check": {
                    "maximal": chk.maximal,
                    "facets": chk.facets,
                    "f_interior": chk.f_interior,
                    "distinct_facets": chk.distinct_facets,
                    "segments": chk.segments,
                    "layers": chk.layers,
                },
            });
            Ok(Output::json(&with_poly(&t.l, report), chk.all()))
        }
        Command::Check { poly } => {
            let p = load(&poly, strict)?;
            Ok(Output::json(&cert_json(&check_lattice_free(&p)?), true))
        }
        Command::Width { poly, bound } => {
            let p = load(&poly, strict)?;
            Ok(Output::json(&width_json(&lattice_width(&p, bound)), true))
        }
        Command::Cut { body, f, cols } => {
            let b = load(&body, strict)?;
            let c = intersection_cut(&b, &columns(&cols, strict)?, &point_arg("f", &f)?)?;
            Ok(Output::json(&cut_json(&c), true))
        }
        Command::Closure { family, f, cols, point } => {
            let fam = load_dir(&family, strict)?;
            let sys = closure(&fam, &columns(&cols, strict)?, &point_arg("f", &f)?)?;
            let mut out = json!({ "cuts": sys.cuts.iter().map(cut_json).collect::<Vec<_>>() });
            if let Some(s) = point {
                out["member"] = json!(cut_point_member(&sys, &point_arg("point", &s)?));
            }
            Ok(Output::json(&out, true))
        }
        Command::Rho { b, l, f } => {
            let r = rho_f(&load(&b, strict)?, &load(&l, strict)?, &point_arg("f", &f)?)?;
            Ok(Output::json(&strength_json(&r), true))
        }
        Command::Sandwich { family, l, f } => {
            let rep = sandwich(&load_dir(&family, strict)?, &load(&l, strict)?, &point_arg("f", &f)?)?;
            let out = json!({
                "upper": strength_str(&rep.upper),
                "upper_index": rep.upper_index,
                "lower": strength_str(&rep.lower.bound),
                "lower_columns": rep.lower.columns.iter().map(|c| vec_json(c)).collect::<Vec<_>>(),
                "lower_point": vec_json(&rep.lower.point),
                "N": rep.n,
                "consistent": rep.consistent(),
            });
            Ok(Output::json(&out, rep.consistent()))
        }
        Command::Fmetric { b1, b2, f } => {
            let m = f_metric(&load(&b1, strict)?, &load(&b2, strict)?, &point_arg("f", &f)?)?;
            Ok(Output::json(&json!({ "dist_sq": rat_json(&m.dist_sq), "dist": json::display_float(m.dist) }), true))
        }
        Command::Lift(a) => {
            let l = load(&a.l, strict)?;
            let d = load(&a.d, strict)?;
            let f = point_arg("f", &a.f)?;
            let gamma = rat_arg("gamma", &a.gamma)?;
            let out = lift_to_nplus1(&l, &f, &gamma, &d, a.t)?;
            let free = check_lattice_free(&out.b)?.is_lattice_free();
            let quarter = gamma / Rat::from_integer(4.into());
            let inside = contains(&out.b, &homothety(&l, &f, &quarter)?);
            let few = out.b.n_facets() <= out.m + 1;
            let report = json!({
                "case": format!("{:?}", out.case),
                "m": out.m,
                "facets": out.b.n_facets(),
                "lattice_free": free,
                "contains_shrunken_body": inside,
            });
            Ok(Output::json(&with_poly(&out.b, report), free && inside && few))
        }
        Command::Approx { mode, l, f } => {
            let l = load(&l, strict)?;
            let f = point_arg("f", &f)?;
            let a = match mode {
                Mode::Any => approximate_any_f(&l, &f)?,
                Mode::Fixed => approximate_fixed_f(&l, &f)?,
            };
            let report = json!({
                "mode": format!("{mode:?}").to_lowercase(),
                "route": format!("{:?}", a.route),
                "facets": a.facets,
                "factor": rat_json(&a.factor),
                "bound": rat_json(&a.bound),
            });
            Ok(Output::json(&with_poly(&a.b, report), a.factor <= a.bound))
        }
        Command::Scenario { name, set, json } => {
            let rep = scenario::run_scenario(&name, &set, cli.seed)?;
            let mut out = Output::json(&rep.to_json(true), rep.passed());
            if !json {
                out.stderr = rep.to_text();
            }
            Ok(out)
        }
        Command::ListScenarios => {
            let mut s = String::new();
            for sc in scenario::scenarios() {
                let defaults: Vec<String> = sc.defaults.iter().map(|(k, v)| format!("{k}={v}")).collect();
                s.push_str(&format!("{:<20} criterion {}  [{}]  {}\n", sc.name, sc.criterion, defaults.join(" "), sc.about));
            }
            Ok(Output { stdout: s, stderr: String::new(), success: true })
        }
    }
}

