//! Thin command-line wrapper over the library: every subcommand reads
//! named values from a JSON workspace file, runs one library entry
//! point, and prints the result as text or JSON.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use teichpoly::certify::certify_slice;
use teichpoly::cone::{fibered_cone, slice_covector, teich_norm, CohomClass, Covector, Scalar, SliceMode};
use teichpoly::dilatation::{eval_lambda, minimize_on_slice, segment_from_covector, MinPoint};
use teichpoly::io::{CertificateJson, ConeJson, ExactInt, PolyJson, SegmentJson, Workspace};
use teichpoly::orbits::{census, drilling_class_representatives, OrbitClass};
use teichpoly::penner::{phi, symmetry_check};
use teichpoly::polymat::{char_det, teichmuller_from_transition};
use teichpoly::presets::{reproduce, Preset};
use teichpoly::real;

#[derive(Parser)]
#[command(
    name = "teichpoly",
    version,
    about = "Dilatation polynomials of fibered 3-manifolds: cones, minimizers, and irrationality certificates"
)]
struct Cli {
    /// Working precision in decimal digits.
    #[arg(long, global = true, default_value_t = 50)]
    prec: u32,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic determinant det(uI - M) of a workspace matrix.
    Charpoly {
        /// Workspace file.
        #[arg(long)]
        input: PathBuf,
        /// Matrix name.
        matrix: String,
        /// Name of the fresh characteristic variable.
        #[arg(long, default_value = "u")]
        var: String,
    },
    /// Teichmuller polynomial from transition matrices (edge matrix,
    /// optionally divided by the vertex matrix contribution).
    Teich {
        #[arg(long)]
        input: PathBuf,
        /// Edge transition matrix name.
        edges: String,
        /// Vertex transition matrix name, when its factor does not cancel.
        #[arg(long)]
        vertices: Option<String>,
        #[arg(long, default_value = "u")]
        var: String,
    },
    /// Invariant determinant factor of a Penner twist word, with its
    /// symmetry flag.
    PennerPhi {
        #[arg(long)]
        input: PathBuf,
        /// Penner spec name.
        spec: String,
    },
    /// Fibered cone of a polynomial around a reference class.
    Cone {
        #[arg(long)]
        input: PathBuf,
        /// Polynomial name.
        poly: String,
        /// Reference class name (from the covectors section).
        #[arg(long)]
        reference: String,
    },
    /// Norm of a class: the widest support pairing spread of a polynomial.
    Norm {
        #[arg(long)]
        input: PathBuf,
        poly: String,
        /// Class name (from the covectors section).
        #[arg(long)]
        class: String,
    },
    /// Norm-one segment of a cone sliced by a covector, optionally after
    /// drilling an orbit class or passing to a branched cover.
    Slice {
        #[arg(long)]
        input: PathBuf,
        /// Cone name.
        cone: String,
        /// Base covector name.
        x: String,
        /// Orbit class name, required for --drill and --branch.
        #[arg(long)]
        orbit: Option<String>,
        /// Tilt the slice by the orbit class.
        #[arg(long, conflicts_with = "branch")]
        drill: bool,
        /// Slice for a cyclic branched cover of this degree.
        #[arg(long)]
        branch: Option<u32>,
    },
    /// Largest specialization root above 1 at an integer class.
    Lambda {
        #[arg(long)]
        input: PathBuf,
        poly: String,
        #[arg(long)]
        class: String,
    },
    /// Minimize the dilatation along a segment.
    Minimize {
        #[arg(long)]
        input: PathBuf,
        poly: String,
        /// Segment name.
        #[arg(long)]
        segment: String,
    },
    /// Certify that the minimizer's exponent ratio is irrational.
    Certify {
        #[arg(long)]
        input: PathBuf,
        poly: String,
        #[arg(long)]
        segment: String,
        /// Scan rational candidates at least up to this denominator,
        /// even when the derived bound is smaller.
        #[arg(long, default_value_t = 0)]
        scan_floor: u64,
    },
    /// Count closed-orbit homology classes through matrix powers.
    Census {
        #[arg(long)]
        input: PathBuf,
        matrix: String,
        /// Largest matrix power inspected.
        #[arg(long)]
        max_power: u32,
        /// Base covector name: keep one representative per parallelism
        /// class of covector + orbit class.
        #[arg(long)]
        representatives: Option<String>,
    },
    /// Run an embedded end-to-end example and compare every computed
    /// value against its published targets.
    Reproduce {
        /// One of: example1, penner, magic.
        preset: String,
    },
}

/// Rendered result plus whether the run met its targets (only reproduce
/// can fail while still producing output).
struct Outcome {
    text: String,
    json: serde_json::Value,
    ok: bool,
}

impl Outcome {
    fn of(text: String, json: serde_json::Value) -> Outcome {
        Outcome { text, json, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::FAILURE;
        }
    };
    let rendered = match cli.format {
        Format::Text => outcome.text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("plain data serializes");
            s.push('\n');
            s
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None => print!("{rendered}"),
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn load_workspace(path: &PathBuf) -> Result<Workspace, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Workspace::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn fail<T>(e: teichpoly::Error) -> Result<T, String> {
    Err(e.to_string())
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Charpoly { input, matrix, var } => {
            let ws = load_workspace(input)?;
            let m = ws.matrix(matrix).or_else(fail)?;
            let p = char_det(m, var).or_else(fail)?;
            Ok(poly_outcome(&p))
        }
        Command::Teich {
            input,
            edges,
            vertices,
            var,
        } => {
            let ws = load_workspace(input)?;
            let pe = ws.matrix(edges).or_else(fail)?;
            let pv = match vertices {
                Some(name) => Some(ws.matrix(name).or_else(fail)?),
                None => None,
            };
            let theta = teichmuller_from_transition(pe, pv, var)
                .and_then(|p| p.normalize_unit())
                .or_else(fail)?;
            Ok(poly_outcome(&theta))
        }
        Command::PennerPhi { input, spec } => {
            let ws = load_workspace(input)?;
            let spec = ws.penner_spec(spec).or_else(fail)?;
            let p = phi(spec).or_else(fail)?;
            let symmetric = symmetry_check(spec).or_else(fail)?;
            Ok(Outcome::of(
                format!("phi = {p}\nsymmetric word: {symmetric}\n"),
                json!({
                    "phi": PolyJson::of(&p),
                    "symmetric": symmetric,
                }),
            ))
        }
        Command::Cone {
            input,
            poly,
            reference,
        } => {
            let ws = load_workspace(input)?;
            let p = ws.poly(poly).or_else(fail)?;
            let reference = class_of(ws.covector(reference).or_else(fail)?);
            let cone = fibered_cone(p, &reference).or_else(fail)?;
            let mut text = format!("dominant vertex: {:?}\n", cone.dominant());
            for w in cone.inequalities() {
                text.push_str(&format!("  {:?} . alpha > 0\n", w.0));
            }
            Ok(Outcome::of(text, serde_json::to_value(ConeJson::of(&cone)).unwrap()))
        }
        Command::Norm { input, poly, class } => {
            let ws = load_workspace(input)?;
            let p = ws.poly(poly).or_else(fail)?;
            let alpha = class_of(ws.covector(class).or_else(fail)?);
            let norm = teich_norm(p, &alpha).or_else(fail)?;
            let value = match norm {
                Scalar::Exact(q) => q.to_string(),
                Scalar::Approx(f) => real::decimal_of_float(&f, cli.prec as usize),
            };
            Ok(Outcome::of(format!("norm = {value}\n"), json!({ "norm": value })))
        }
        Command::Slice {
            input,
            cone,
            x,
            orbit,
            drill,
            branch,
        } => {
            let ws = load_workspace(input)?;
            let cone = ws.cone(cone).or_else(fail)?;
            let x = ws.covector(x).or_else(fail)?;
            let orbit = match orbit {
                Some(name) => Some(ws.covector(name).or_else(fail)?),
                None => None,
            };
            let mode = match (drill, branch) {
                (true, _) => SliceMode::Drill,
                (false, Some(d)) => SliceMode::Branch(*d),
                (false, None) => SliceMode::Base,
            };
            let w = slice_covector(x, orbit, mode).or_else(fail)?;
            let seg = segment_from_covector(cone, &w).or_else(fail)?;
            Ok(Outcome::of(
                format!(
                    "covector: {:?}\nsegment: {:?} -> {:?}\n",
                    w.0,
                    seg.start.iter().map(Rationalish).collect::<Vec<_>>(),
                    seg.end.iter().map(Rationalish).collect::<Vec<_>>(),
                ),
                json!({
                    "covector": w.0,
                    "segment": SegmentJson::of(&seg),
                }),
            ))
        }
        Command::Lambda { input, poly, class } => {
            let ws = load_workspace(input)?;
            let p = ws.poly(poly).or_else(fail)?;
            let alpha = class_of(ws.covector(class).or_else(fail)?);
            let v = eval_lambda(p, &alpha, cli.prec).or_else(fail)?;
            let digits = cli.prec as usize;
            let lambda = real::decimal_of_float(&v.value, digits);
            let residual = format!("{:e}", v.residual.to_f64());
            Ok(Outcome::of(
                format!("lambda = {lambda}\nscaled residual = {residual}\n"),
                json!({
                    "lambda": lambda,
                    "residual": residual,
                    "bracket": [
                        real::decimal_of_float(&v.bracket.0, digits),
                        real::decimal_of_float(&v.bracket.1, digits),
                    ],
                }),
            ))
        }
        Command::Minimize {
            input,
            poly,
            segment,
        } => {
            let ws = load_workspace(input)?;
            let p = ws.poly(poly).or_else(fail)?;
            let seg = ws.segment(segment).or_else(fail)?;
            let point = minimize_on_slice(p, seg, cli.prec).or_else(fail)?;
            Ok(min_point_outcome(&point, cli.prec as usize))
        }
        Command::Certify {
            input,
            poly,
            segment,
            scan_floor,
        } => {
            let ws = load_workspace(input)?;
            let p = ws.poly(poly).or_else(fail)?;
            let seg = ws.segment(segment).or_else(fail)?;
            let cert = certify_slice(p, seg, cli.prec, *scan_floor).or_else(fail)?;
            let j = CertificateJson::of(&cert);
            let text = format!(
                "verdict: {:?}\nratio enclosure: [{}, {}]\ndegree bound: {}\nscaling constant: {}\ndenominator bound: {}\nminimality prime: {}\nexclusion scan passed: {}\nhypotheses: {}\n",
                cert.verdict,
                j.ratio_enclosure[0],
                j.ratio_enclosure[1],
                cert.degree_bound,
                cert.scaling,
                cert.denominator_bound,
                cert.minimality_prime
                    .map_or("none".to_string(), |p| p.to_string()),
                cert.excluded,
                cert.hypotheses,
            );
            Ok(Outcome::of(text, serde_json::to_value(j).unwrap()))
        }
        Command::Census {
            input,
            matrix,
            max_power,
            representatives,
        } => {
            let ws = load_workspace(input)?;
            let m = ws.matrix(matrix).or_else(fail)?;
            let mut classes = census(m, *max_power).or_else(fail)?;
            if let Some(name) = representatives {
                let x = ws.covector(name).or_else(fail)?;
                classes = drilling_class_representatives(&classes, x).or_else(fail)?;
            }
            let mut text = String::new();
            for c in &classes {
                text.push_str(&format!(
                    "power {} cell {}: class {:?} x{}\n",
                    c.u_degree, c.through_cell, c.t_class, c.multiplicity
                ));
            }
            Ok(Outcome::of(text, json!({ "classes": classes.iter().map(class_json).collect::<Vec<_>>() })))
        }
        Command::Reproduce { preset } => {
            let preset = Preset::parse(preset)
                .ok_or_else(|| format!("unknown preset {preset:?}; use example1, penner, or magic"))?;
            let report = reproduce(preset, cli.prec).or_else(fail)?;
            let checks: Vec<serde_json::Value> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "computed": c.computed,
                        "target": c.target,
                        "pass": c.pass,
                    })
                })
                .collect();
            let json = json!({
                "preset": report.preset,
                "precision": report.precision,
                "checks": checks,
                "all_pass": report.all_pass,
            });
            Ok(Outcome {
                text: format!("{report}\n"),
                json,
                ok: report.all_pass,
            })
        }
    }
}

fn class_of(w: &Covector) -> CohomClass {
    CohomClass::exact_ints(&w.0)
}

fn poly_outcome(p: &teichpoly::GroupPoly) -> Outcome {
    Outcome::of(format!("{p}\n"), serde_json::to_value(PolyJson::of(p)).unwrap())
}

fn min_point_outcome(point: &MinPoint, digits: usize) -> Outcome {
    let coords: Vec<String> = point
        .coordinates
        .iter()
        .map(|c| real::decimal_of_float(c, digits))
        .collect();
    let norm_check = point
        .norm_check
        .as_ref()
        .map(|f| real::decimal_of_float(f, digits));
    let text = format!(
        "parameter = {}\ncoordinates = [{}]\nlambda = {}\nscaled first-order residual = {:e}\nnorm check = {}\n",
        real::decimal_of_float(&point.parameter, digits),
        coords.join(", "),
        real::decimal_of_float(&point.lambda, digits),
        point.first_order_residual.to_f64(),
        norm_check.as_deref().unwrap_or("none"),
    );
    Outcome::of(
        text,
        json!({
            "parameter": real::decimal_of_float(&point.parameter, digits),
            "coordinates": coords,
            "lambda": real::decimal_of_float(&point.lambda, digits),
            "first_order_residual": format!("{:e}", point.first_order_residual.to_f64()),
            "norm_check": norm_check,
        }),
    )
}

fn class_json(c: &OrbitClass) -> serde_json::Value {
    json!({
        "u_degree": c.u_degree,
        "t_class": c.t_class,
        "multiplicity": ExactInt(c.multiplicity.clone()),
        "through_cell": c.through_cell,
    })
}

/// Debug-prints a rational without quotes inside larger debug lists.
struct Rationalish<'a>(&'a rug::Rational);

impl std::fmt::Debug for Rationalish<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}
