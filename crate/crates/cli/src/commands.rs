//! Command implementations; `main` only parses flags and maps errors to exit codes.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use std::path::Path;

use chtri::criteria::{classify_with_scope, CertificateScope, Classification, Witness};
use chtri::orbit::{decompose_orbit_point, orbit_points, translation_lattice};
use chtri::scan::{grid, linspace, scan_points};
use chtri::triangle::{build_triangle, distance_of, TriangleParams};
use chtri::{ScanRow, Tolerance};

use crate::error::CliError;
use crate::format::fmt_g;
use crate::svg::{orbit_svg, scan_svg};

/// Largest word length `orbit` will enumerate.
pub const MAX_ORBIT_LEN: u32 = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Svg,
}

impl OutputFormat {
    /// Explicit choice wins; otherwise `.svg` files get SVG and everything else CSV.
    pub fn resolve(explicit: Option<OutputFormat>, out: Option<&Path>) -> OutputFormat {
        explicit.unwrap_or_else(|| match out.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("svg") => OutputFormat::Svg,
            _ => OutputFormat::Csv,
        })
    }
}

/// Writes to `path`, or to stdout when there is none.
pub fn emit(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// `m` from either `m` itself or `r = cosh(m/2)`.
pub fn resolve_m(m: Option<f64>, r: Option<f64>) -> Result<f64, CliError> {
    match (m, r) {
        (Some(m), None) if m.is_finite() && m >= 0.0 => Ok(m),
        (Some(m), None) => Err(CliError::Usage(format!("--m must be finite and >= 0, got {m}"))),
        (None, Some(r)) if r.is_finite() && r >= 1.0 => Ok(distance_of(r)),
        (None, Some(r)) => Err(CliError::Usage(format!("--r must be finite and >= 1, got {r}"))),
        (Some(_), Some(_)) => Err(CliError::Usage("give only one of --m and --r".into())),
        (None, None) => Err(CliError::Usage("one of --m or --r is required".into())),
    }
}

pub fn check_alpha(alpha: f64) -> Result<f64, CliError> {
    if alpha.is_finite() && alpha > 0.0 && alpha < TAU {
        Ok(alpha)
    } else {
        Err(CliError::Usage(format!("alpha must lie in (0, 2 pi), got {alpha}")))
    }
}

pub fn classify(m: f64, alpha: f64, scope: CertificateScope, tol: &Tolerance) -> Result<Classification, CliError> {
    let alpha = check_alpha(alpha)?;
    Ok(classify_with_scope(m, alpha, scope, tol)?)
}

pub fn classification_report(c: &Classification) -> String {
    let d = &c.diagnostics;
    let mut out = String::new();
    let _ = writeln!(out, "{}", c.verdict);
    let _ = writeln!(
        out,
        "  m = {}, alpha = {}, r = {}, theta = {}",
        fmt_g(c.m),
        fmt_g(c.alpha),
        fmt_g(d.r),
        fmt_g(d.theta)
    );
    let _ = writeln!(out, "  vertical margin   {}", fmt_g(d.vertical_margin));
    let _ = writeln!(out, "  min lattice norm  {}", fmt_g(d.min_lattice_norm));
    let _ = writeln!(out, "  shimizu deficit   {}", fmt_g(d.shimizu_deficit));
    let _ = writeln!(
        out,
        "  certificate {}, proven discrete region {}, Shimizu region {}",
        d.certificate_holds, d.prop1, d.prop2
    );
    match &c.witness {
        Witness::Discrete { vertical_margin, coset_minima } => {
            let _ = writeln!(out, "  witness: |H| - 2 = {}", fmt_g(*vertical_margin));
            for (label, norm) in coset_minima {
                let _ = writeln!(out, "    min |f(0)| over coset {label:<5} {}", fmt_g(*norm));
            }
        }
        Witness::NonDiscrete { translation, deficit } => {
            let _ = writeln!(
                out,
                "  witness: iota_212 translates by ({} + {}i, {}), Shimizu deficit {}",
                fmt_g(translation.xi.re),
                fmt_g(translation.xi.im),
                fmt_g(translation.nu),
                fmt_g(*deficit)
            );
        }
        Witness::None => {}
    }
    out
}

/// Parses `lo:hi` or a single value.
pub fn parse_range(s: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Usage(format!("expected a number or lo:hi, got {s:?}"));
    let parse = |t: &str| t.trim().parse::<f64>().map_err(|_| bad());
    match s.split_once(':') {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi)?)),
        None => {
            let v = parse(s)?;
            Ok((v, v))
        }
    }
}

/// Parses `N` (both axes) or `NxM` (`m` axis by `alpha` axis).
pub fn parse_steps(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--steps takes N or NxM with positive counts, got {s:?}"));
    let parse = |t: &str| t.trim().parse::<usize>().ok().filter(|&n| n > 0).ok_or_else(bad);
    match s.split_once(['x', 'X']) {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => {
            let n = parse(s)?;
            Ok((n, n))
        }
    }
}

/// How the `alpha` axis of a scan is specified.
#[derive(Debug, Clone, Copy)]
pub enum AlphaAxis {
    Alpha(f64, f64),
    CosAlpha(f64, f64),
}

/// How the `m` axis of a scan is specified.
#[derive(Debug, Clone, Copy)]
pub enum MAxis {
    M(f64, f64),
    R(f64, f64),
}

pub struct ScanSpec {
    pub m_axis: MAxis,
    pub alpha_axis: AlphaAxis,
    pub steps: (usize, usize),
    pub scope: CertificateScope,
    pub jobs: usize,
}

/// Axis values; a degenerate range (`lo == hi`) yields a single value.
fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if lo == hi {
        vec![lo]
    } else {
        linspace(lo, hi, n)
    }
}

pub fn scan(spec: &ScanSpec, tol: &Tolerance) -> Result<Vec<ScanRow>, CliError> {
    let ms: Vec<f64> = match spec.m_axis {
        MAxis::M(lo, hi) => {
            axis(lo, hi, spec.steps.0).into_iter().map(|m| resolve_m(Some(m), None)).collect::<Result<_, _>>()?
        }
        MAxis::R(lo, hi) => {
            axis(lo, hi, spec.steps.0).into_iter().map(|r| resolve_m(None, Some(r))).collect::<Result<_, _>>()?
        }
    };
    let mut alphas: Vec<f64> = match spec.alpha_axis {
        AlphaAxis::Alpha(lo, hi) => axis(lo, hi, spec.steps.1),
        AlphaAxis::CosAlpha(lo, hi) => {
            if !(-1.0..=1.0).contains(&lo) || !(-1.0..=1.0).contains(&hi) {
                return Err(CliError::Usage("--cos-alpha values must lie in [-1, 1]".into()));
            }
            axis(lo, hi, spec.steps.1).into_iter().map(f64::acos).collect()
        }
    };
    for &a in &alphas {
        check_alpha(a)?;
    }
    alphas.sort_by(f64::total_cmp);
    Ok(scan_points(&grid(&ms, &alphas), spec.scope, spec.jobs, tol)?)
}

pub const SCAN_HEADER: &str = "m,alpha,verdict,vertical_margin,min_lattice_norm,shimizu_deficit";

pub fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from(SCAN_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            fmt_g(r.m),
            fmt_g(r.alpha),
            r.verdict.code(),
            fmt_g(r.vertical_margin),
            fmt_g(r.min_lattice_norm),
            fmt_g(r.shimizu_deficit)
        );
    }
    out
}

pub fn render_scan(rows: &[ScanRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => scan_csv(rows),
        OutputFormat::Svg => scan_svg(rows),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitRow {
    pub word: String,
    pub re: f64,
    pub im: f64,
    pub x: i64,
    pub y: i64,
    pub rep: &'static str,
}

/// Orbit of the origin for `m1 = m2 = m`, orders `(3, 3, 2)` and `alpha = pi - 2 theta`.
pub fn orbit(m: f64, theta: f64, max_len: u32, tol: &Tolerance) -> Result<Vec<OrbitRow>, CliError> {
    if max_len > MAX_ORBIT_LEN {
        return Err(CliError::Usage(format!("--max-len is limited to {MAX_ORBIT_LEN}, got {max_len}")));
    }
    if !(theta.is_finite() && theta.abs() < PI / 2.0) {
        return Err(CliError::Usage(format!("theta must lie in (-pi/2, pi/2), got {theta}")));
    }
    let g = build_triangle(&TriangleParams::symmetric_332(m, PI - 2.0 * theta)?, tol)?;
    let lat = translation_lattice(&g, tol)?;
    orbit_points(max_len, &g)
        .into_iter()
        .map(|(w, z)| {
            let d = decompose_orbit_point(z, &lat, tol)?;
            Ok(OrbitRow { word: w.to_string(), re: z.re, im: z.im, x: d.x, y: d.y, rep: d.rep.label() })
        })
        .collect()
}

pub const ORBIT_HEADER: &str = "word,re,im,x,y,rep";

pub fn orbit_csv(rows: &[OrbitRow]) -> String {
    let mut out = String::from(ORBIT_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{},{}", r.word, fmt_g(r.re), fmt_g(r.im), r.x, r.y, r.rep);
    }
    out
}

pub fn render_orbit(rows: &[OrbitRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => orbit_csv(rows),
        OutputFormat::Svg => orbit_svg(&rows.iter().map(|r| (r.re, r.im)).collect::<Vec<_>>()),
    }
}
