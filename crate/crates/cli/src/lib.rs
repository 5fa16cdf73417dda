//! Commands behind the `dirant` binary.
//!
//! Every command writes its report to a caller-supplied sink and returns a
//! process exit code, so tests can drive them without spawning a process.

pub mod svg;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use dirant_core::instances::{check_witness_180, collinear_witness, random_connected_udg, witness_180};
use dirant_core::io::{format_orientation, format_points, parse_orientation, parse_points, ParseError};
use dirant_core::orient180::SQRT_3;
use dirant_core::verifier::{build_comm_graph, min_strong_radius, strongly_connected_components};
use dirant_core::{orient_all_180, orient_all_90, OrientationAssignment, Point, EPS, RADIUS_180, RADIUS_90};

pub const EXIT_OK: u8 = 0;
/// The question had a negative answer (not strongly connected, failed trial).
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
/// The input is well formed but violates a precondition such as connectivity.
pub const EXIT_PRECONDITION: u8 = 3;
/// A construction failed its own verification.
pub const EXIT_INVARIANT: u8 = 4;

/// Radius at which generated tripods are checked.
pub const TRIPOD_CHECK_RADIUS: f64 = SQRT_3 - 1e-6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("{0}")]
    Param(String),
    #[error(transparent)]
    Core(#[from] dirant_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use dirant_core::Error as E;
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Param(_) => EXIT_INPUT,
            CliError::Core(e) => match e {
                E::DisconnectedInput | E::TooFewPoints { .. } | E::TooManyPoints { .. } | E::NotGeneralPosition => {
                    EXIT_PRECONDITION
                }
                E::ConstructionInvariantViolated { .. } | E::SearchExhausted => EXIT_INVARIANT,
                _ => EXIT_INPUT,
            },
        }
    }
}

pub type CliResult = Result<u8, CliError>;

/// Supported witness generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum WitnessKind {
    Collinear,
    Tripod180,
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn report(out: &mut dyn Write, line: std::fmt::Arguments<'_>) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(|source| CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}

pub fn load_points(path: &Path) -> Result<Vec<Point>, CliError> {
    parse_points(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

pub fn load_orientation(path: &Path, points: &[Point]) -> Result<OrientationAssignment, CliError> {
    let a = parse_orientation(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })?;
    if a.len() != points.len() {
        return Err(CliError::Param(format!(
            "orientation lists {} ids but the point file has {}",
            a.len(),
            points.len()
        )));
    }
    Ok(a)
}

/// Aperture in radians for a flag given in degrees.
pub fn aperture(alpha_deg: f64) -> Result<f64, CliError> {
    if alpha_deg == 90.0 {
        Ok(FRAC_PI_2)
    } else if alpha_deg == 180.0 {
        Ok(PI)
    } else {
        Err(CliError::Param(format!("alpha must be 90 or 180 degrees, got {alpha_deg}")))
    }
}

fn orient(points: &[Point], alpha: f64) -> Result<OrientationAssignment, CliError> {
    Ok(if alpha == PI {
        orient_all_180(points)?
    } else {
        orient_all_90(points)?
    })
}

fn radius_text(r: Option<f64>) -> String {
    r.map_or_else(|| "none".to_owned(), |r| r.to_string())
}

pub fn cmd_orient(input: &Path, alpha_deg: f64, out_path: &Path, out: &mut dyn Write) -> CliResult {
    let alpha = aperture(alpha_deg)?;
    let points = load_points(input)?;
    let a = orient(&points, alpha)?;
    write_file(out_path, &format_orientation(&a))?;
    let achieved = min_strong_radius(&points, &a)?;
    report(out, format_args!("guaranteed radius {}", a.guaranteed_radius))?;
    report(out, format_args!("achieved radius {}", radius_text(achieved)))?;
    Ok(EXIT_OK)
}

/// `radius` overrides the one recorded in the orientation file.
pub fn cmd_verify(input: &Path, orientation: &Path, radius: Option<f64>, out: &mut dyn Write) -> CliResult {
    let points = load_points(input)?;
    let a = load_orientation(orientation, &points)?;
    let r = radius.unwrap_or(a.guaranteed_radius);
    if r.is_nan() || r < 0.0 {
        return Err(CliError::Param(format!("radius must be non-negative, got {r}")));
    }
    let g = build_comm_graph(&points, &a, Some(r))?;
    let sccs = strongly_connected_components(&g).len();
    let strong = sccs <= 1;
    let verdict = if strong { "STRONG" } else { "NOT-STRONG" };
    report(out, format_args!("{verdict} at radius {r}: {sccs} strongly connected component(s)"))?;
    Ok(if strong { EXIT_OK } else { EXIT_NEGATIVE })
}

pub fn cmd_witness(kind: WitnessKind, param: usize, out_path: &Path, out: &mut dyn Write) -> CliResult {
    let bad_param = |e: dirant_core::Error| CliError::Param(format!("invalid parameter {param}: {e}"));
    match kind {
        WitnessKind::Collinear => {
            let points = collinear_witness(param).map_err(bad_param)?;
            write_file(out_path, &format_points(&points))?;
            report(out, format_args!("wrote {} collinear points", points.len()))?;
            Ok(EXIT_OK)
        }
        WitnessKind::Tripod180 => {
            let w = witness_180(param).map_err(bad_param)?;
            write_file(out_path, &format_points(&w.points))?;
            let pass = check_witness_180(&w, TRIPOD_CHECK_RADIUS)?;
            report(out, format_args!("wrote {} tripod points", w.points.len()))?;
            report(
                out,
                format_args!("witness check at radius {TRIPOD_CHECK_RADIUS}: {}", if pass { "PASS" } else { "FAIL" }),
            )?;
            Ok(if pass { EXIT_OK } else { EXIT_NEGATIVE })
        }
    }
}

/// Draws points and tree edges, plus wedges and links when an orientation is
/// given. Wedges are drawn at `radius`, defaulting to the file's radius.
pub fn cmd_plot(
    input: &Path,
    orientation: Option<&Path>,
    radius: Option<f64>,
    out_path: &Path,
    out: &mut dyn Write,
) -> CliResult {
    let points = load_points(input)?;
    let a = orientation.map(|p| load_orientation(p, &points)).transpose()?;
    let r = match (&a, radius) {
        (_, Some(r)) => r,
        (Some(a), None) => a.guaranteed_radius,
        (None, None) => 0.0,
    };
    let doc = svg::render(&points, a.as_ref(), r)?;
    write_file(out_path, &doc)?;
    report(out, format_args!("wrote {}", out_path.display()))?;
    Ok(EXIT_OK)
}

/// Random instances in a box of side `sqrt(n)`; trial `k` uses seed `seed + k`.
pub fn cmd_experiment(alpha_deg: f64, n: usize, trials: usize, seed: u64, out: &mut dyn Write) -> CliResult {
    let alpha = aperture(alpha_deg)?;
    if n < 2 {
        return Err(CliError::Param(format!("n must be at least 2, got {n}")));
    }
    let bound = if alpha == PI { RADIUS_180 } else { RADIUS_90 };
    report(out, format_args!("trial\tn\tseed\tmin_radius\tresult"))?;
    let mut passed = 0;
    for trial in 0..trials {
        let trial_seed = seed.wrapping_add(trial as u64);
        let points = random_connected_udg(n, trial_seed, (n as f64).sqrt())?;
        let a = orient(&points, alpha)?;
        let r = min_strong_radius(&points, &a)?;
        let ok = r.is_some_and(|r| r <= bound + EPS);
        passed += usize::from(ok);
        report(
            out,
            format_args!(
                "{trial}\t{n}\t{trial_seed}\t{}\t{}",
                radius_text(r),
                if ok { "PASS" } else { "FAIL" }
            ),
        )?;
    }
    report(out, format_args!("{passed}/{trials} pass at radius {bound}"))?;
    Ok(if passed == trials { EXIT_OK } else { EXIT_NEGATIVE })
}
