//! Discreteness and non-discreteness tests for the `[m, m, 0; 3, 3, 2]` family.
//!
//! Discreteness comes from the compression certificate: every non-trivial
//! element of `<j1, j2>` moves the origin by at least 2, and every vertical
//! translation by at least 2 as well. Non-discreteness comes from Shimizu's
//! lemma applied to `g = iota_212` and `h = iota_3`.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heisenberg::{apply_to_point, cygan_distance, HeisPoint, HeisTranslation};
use crate::orbit::{translation_lattice, translation_part_of, CosetLabel, TranslationLattice};
use crate::projective::Isometry;
use crate::tolerance::Tolerance;
use crate::triangle::{build_triangle, distance_of, radius_of, TriangleGroup, TriangleParams};
use crate::words::{evaluate_word_matrix, Word};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Relative slack for the closed-form predicates, so that parameters sitting
/// exactly on the proven-region boundary are not lost to a rounded `cosh` or `cos`.
const ULP_SLACK: f64 = 4.0 * f64::EPSILON;

/// Smallest radius `2/sqrt(3)` for which `3 r^2 >= 4`.
pub const R_MIN_DISCRETE: f64 = 2.0 / SQRT_3;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VerticalCheck {
    pub passes: bool,
    /// `24 sqrt(3) r^2 cos^2(theta) - 2`.
    pub margin: f64,
}

/// Vertical translations are powers of `H`, so they all move points by at
/// least 2 iff `|H| = 24 sqrt(3) r^2 cos^2(theta) >= 2`.
pub fn vertical_translation_check(r: f64, theta: f64, tol: &Tolerance) -> VerticalCheck {
    let margin = 24.0 * SQRT_3 * r * r * theta.cos().powi(2) - 2.0;
    VerticalCheck { passes: margin >= -tol.geo, margin }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CosetRow {
    pub label: CosetLabel,
    pub a: f64,
    pub b: f64,
    pub a2_3b2: f64,
}

/// Closed-form `(a, b, a^2 + 3 b^2)` for each coset, `t = tan(theta)`.
pub fn coset_table(t: f64) -> [CosetRow; 7] {
    let ts = t * SQRT_3;
    let row = |label, a, b, a2_3b2| CosetRow { label, a, b, a2_3b2 };
    [
        row(CosetLabel::Id, 0.0, 0.0, 0.0),
        row(CosetLabel::J1, -1.0, -t / SQRT_3, t * t + 1.0),
        row(CosetLabel::J2, 1.0, -t / SQRT_3, t * t + 1.0),
        row(CosetLabel::J1Sq, 0.5 * (ts - 1.0), -(3.0 + ts) / 6.0, t * t + 1.0),
        row(CosetLabel::J2Sq, 0.5 * (ts + 1.0), (3.0 - ts) / 6.0, t * t + 1.0),
        row(CosetLabel::J1J2, -0.5 * (3.0 - ts), (3.0 - ts) / 6.0, (t - SQRT_3).powi(2)),
        row(CosetLabel::J2J1, 0.5 * (3.0 + ts), -(3.0 + ts) / 6.0, (t + SQRT_3).powi(2)),
    ]
}

/// Lattice points `(u, v)`.
pub type CasePoints = &'static [(i64, i64)];

/// The lattice points `(u, v)` examined in the case analysis for each coset,
/// split into those where `g` vanishes and the remaining ones.
pub fn case_points(label: CosetLabel) -> (CasePoints, CasePoints) {
    match label {
        CosetLabel::Id => (&[], &[]),
        CosetLabel::J1 => (&[(0, 0), (-2, 0)], &[]),
        CosetLabel::J2 => (&[(0, 0), (2, 0)], &[]),
        CosetLabel::J1Sq => (&[(0, 0), (-1, -1)], &[(1, -1), (-2, 0)]),
        CosetLabel::J2Sq => (&[(0, 0), (1, 1)], &[(-1, 1), (2, 0)]),
        CosetLabel::J1J2 => (&[(-1, 1), (-2, 0)], &[(-3, 1), (0, 0)]),
        CosetLabel::J2J1 => (&[(1, -1), (2, 0)], &[(0, 0), (3, -1)]),
    }
}

/// `g(u, v) = (u - a)^2 + 3 (v - b)^2 - sec^2(theta)` for a table row.
pub fn case_function(row: &CosetRow, t: f64, u: i64, v: i64) -> f64 {
    let (u, v) = (u as f64, v as f64);
    u * u + 3.0 * v * v - 2.0 * row.a * u - 6.0 * row.b * v + row.a2_3b2 - (t * t + 1.0)
}

/// `(a, b)` for an arbitrary representative `p`, from
/// `|p + x v1 + y v2|^2 = 3 r^2 cos^2(theta) ((u - a)^2 + 3 (v - b)^2)`
/// with `u = y - x`, `v = x + y`.
pub fn coset_offsets(p: Complex64, lat: &TranslationLattice) -> (f64, f64) {
    let s = lat.v1.norm_sqr();
    let a = 2.0 * (p * (lat.v1 - lat.v2).conj()).re / s;
    let b = -2.0 * (p * (lat.v1 + lat.v2).conj()).re / (3.0 * s);
    (a, b)
}

/// Exact `min |p + x v1 + y v2|` over integers `(x, y)`, skipping `(0, 0)` for `Id`.
///
/// In the scaled form `(u - a)^2 + 3 (v - b)^2` the parity lattice always
/// has a point within 4 of `(a, b)` other than an excluded origin, so only
/// `|u - a| <= 2`, `|v - b| <= 2/sqrt(3)` needs searching.
pub fn lattice_min_norm(rep: CosetLabel, lat: &TranslationLattice) -> f64 {
    let p = lat.rep(rep);
    if lat.v1.norm_sqr() <= f64::MIN_POSITIVE {
        return if rep == CosetLabel::Id { 0.0 } else { p.norm() };
    }
    let (a, b) = coset_offsets(p, lat);
    let slack = 1e-9;
    let u_lo = (a - 2.0 - slack).ceil() as i64;
    let u_hi = (a + 2.0 + slack).floor() as i64;
    let v_lo = (b - 2.0 / SQRT_3 - slack).ceil() as i64;
    let v_hi = (b + 2.0 / SQRT_3 + slack).floor() as i64;
    let mut best = f64::INFINITY;
    for u in u_lo..=u_hi {
        for v in v_lo..=v_hi {
            if (u - v).rem_euclid(2) != 0 {
                continue;
            }
            let (x, y) = ((v - u) / 2, (u + v) / 2);
            if rep == CosetLabel::Id && x == 0 && y == 0 {
                continue;
            }
            best = best.min(lat.point(rep, x, y).norm());
        }
    }
    best
}

/// Brute-force minimum over `|x|, |y| <= bound`; the oracle for [`lattice_min_norm`].
pub fn brute_force_min_norm(rep: CosetLabel, lat: &TranslationLattice, bound: i64) -> f64 {
    let mut best = f64::INFINITY;
    for x in -bound..=bound {
        for y in -bound..=bound {
            if rep == CosetLabel::Id && x == 0 && y == 0 {
                continue;
            }
            best = best.min(lat.point(rep, x, y).norm());
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub holds: bool,
    pub vertical_margin: f64,
    pub coset_minima: [(CosetLabel, f64); 7],
    pub min_lattice_norm: f64,
}

/// Checks the hypotheses of the compression lemma on a prepared lattice.
pub fn certificate_for_lattice(lat: &TranslationLattice, tol: &Tolerance) -> Certificate {
    let vertical = vertical_translation_check(lat.r, lat.theta, tol);
    let coset_minima = CosetLabel::ALL.map(|c| (c, lattice_min_norm(c, lat)));
    let min_lattice_norm = coset_minima.iter().map(|c| c.1).fold(f64::INFINITY, f64::min);
    Certificate {
        holds: vertical.passes && min_lattice_norm >= 2.0 - tol.geo,
        vertical_margin: vertical.margin,
        coset_minima,
        min_lattice_norm,
    }
}

/// Compression certificate at `(r, theta)` with `m1 = m2 = 2 arccosh(r)`,
/// orders `(3, 3, 2)` and `alpha = pi - 2 theta`.
pub fn compression_certificate(r: f64, theta: f64, tol: &Tolerance) -> Result<Certificate> {
    if r.is_nan() || r < 1.0 {
        return Err(Error::BadRadius(r));
    }
    let params = TriangleParams::symmetric_332(distance_of(r), std::f64::consts::PI - 2.0 * theta)?;
    let g = build_triangle(&params, tol)?;
    Ok(certificate_for_lattice(&translation_lattice(&g, tol)?, tol))
}

/// Discrete if `cos(alpha) <= -1/2` and `cosh(m/2) >= 2/sqrt(3)`.
pub fn prop1_predicate(m: f64, alpha: f64) -> bool {
    alpha.cos() <= -0.5 + ULP_SLACK && radius_of(m) >= R_MIN_DISCRETE * (1.0 - ULP_SLACK)
}

/// `1 - 1/(36 cosh^2(m/2))`, the threshold above which `cos(alpha)` forces non-discreteness.
pub fn prop2_threshold(m: f64) -> f64 {
    1.0 - 1.0 / (36.0 * radius_of(m).powi(2))
}

/// Non-discrete if `cos(alpha) > 1 - 1/(36 cosh^2(m/2))`.
pub fn prop2_predicate(m: f64, alpha: f64) -> bool {
    alpha.cos() > prop2_threshold(m)
}

/// `sqrt(2 / |h22 - h23 + h32 - h33|)` for the representative scaled to `|det| = 1`.
pub fn isometric_sphere_radius(h: &Isometry, tol: &Tolerance) -> Result<f64> {
    if apply_to_point(h, &HeisPoint::Infinity, tol)?.is_infinite() {
        return Err(Error::FixesInfinity);
    }
    let k = h.modulus()?;
    let denom = (h.entry(1, 1) - h.entry(1, 2) + h.entry(2, 1) - h.entry(2, 2)).norm() / k;
    if denom <= tol.mat {
        return Err(Error::DegenerateSphere);
    }
    Ok((2.0 / denom).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShimizuTest {
    pub violation: bool,
    /// `r_h^2 - rho(g h^-1 oo, h^-1 oo) rho(g h oo, h oo) - 4 |xi|^2`; positive means violated.
    pub deficit: f64,
    pub sphere_radius: f64,
}

/// Shimizu's lemma for a Heisenberg translation `g` and an `h` moving infinity.
pub fn shimizu_violation(g: &HeisTranslation, h: &Isometry, tol: &Tolerance) -> Result<ShimizuTest> {
    let r_h = isometric_sphere_radius(h, tol)?;
    let h_inf = apply_to_point(h, &HeisPoint::Infinity, tol)?;
    let h_inv_inf = apply_to_point(&h.form_inverse()?, &HeisPoint::Infinity, tol)?;
    if h_inf.is_infinite() || h_inv_inf.is_infinite() {
        return Err(Error::FixesInfinity);
    }
    let product = cygan_distance(&g.act(&h_inv_inf), &h_inv_inf)? * cygan_distance(&g.act(&h_inf), &h_inf)?;
    let deficit = r_h * r_h - product - 4.0 * g.xi.norm_sqr();
    Ok(ShimizuTest { violation: deficit > tol.geo, deficit, sphere_radius: r_h })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Discrete,
    NonDiscrete,
    Unknown,
}

impl Verdict {
    /// One-letter code used in scan output.
    pub fn code(&self) -> char {
        match self {
            Verdict::Discrete => 'D',
            Verdict::NonDiscrete => 'N',
            Verdict::Unknown => 'U',
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Discrete => "Discrete",
            Verdict::NonDiscrete => "NonDiscrete",
            Verdict::Unknown => "Unknown",
        };
        f.write_str(s)
    }
}

/// Where a passing certificate is allowed to produce a `Discrete` verdict.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateScope {
    /// Only for `cos(alpha) <= -1/2`, where the seven-case analysis is carried out.
    #[default]
    Proven,
    /// Wherever the certificate holds.
    Extended,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Witness {
    Discrete { vertical_margin: f64, coset_minima: [(CosetLabel, f64); 7] },
    NonDiscrete { translation: HeisTranslation, deficit: f64 },
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub r: f64,
    pub theta: f64,
    pub vertical_margin: f64,
    pub min_lattice_norm: f64,
    pub shimizu_deficit: f64,
    pub certificate_holds: bool,
    pub prop1: bool,
    pub prop2: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub m: f64,
    pub alpha: f64,
    pub verdict: Verdict,
    pub witness: Witness,
    pub diagnostics: Diagnostics,
}

/// Classifies `(m, alpha)` with the certificate restricted to its proven range.
pub fn classify(m: f64, alpha: f64, tol: &Tolerance) -> Result<Classification> {
    classify_with_scope(m, alpha, CertificateScope::Proven, tol)
}

pub fn classify_with_scope(m: f64, alpha: f64, scope: CertificateScope, tol: &Tolerance) -> Result<Classification> {
    let g = build_triangle(&TriangleParams::symmetric_332(m, alpha)?, tol)?;
    classify_group(&g, scope, tol)
}

fn classify_group(g: &TriangleGroup, scope: CertificateScope, tol: &Tolerance) -> Result<Classification> {
    let (m, alpha) = (g.params.m1, g.params.alpha);
    let lat = translation_lattice(g, tol)?;
    let cert = certificate_for_lattice(&lat, tol);

    let t1 = translation_part_of(&evaluate_word_matrix(&Word::parse("212", [3, 3])?, g)?, tol)?;
    let shimizu = shimizu_violation(&t1, g.gen(3), tol)?;

    let prop1 = prop1_predicate(m, alpha);
    let prop2 = prop2_predicate(m, alpha);
    let cos_alpha = alpha.cos();

    let near_prop2_edge = shimizu.deficit.abs() <= 10.0 * tol.geo || (cos_alpha - prop2_threshold(m)).abs() <= tol.geo;
    if shimizu.violation != prop2 && !near_prop2_edge {
        return Err(Error::InternalInconsistency(format!(
            "Shimizu test ({}) disagrees with the closed form ({prop2}) at m = {m}, alpha = {alpha}",
            shimizu.violation
        )));
    }
    let near_prop1_edge = (cos_alpha + 0.5).abs() <= tol.geo || (lat.r - R_MIN_DISCRETE).abs() <= tol.geo;
    if prop1 && !cert.holds && !near_prop1_edge {
        return Err(Error::InternalInconsistency(format!(
            "certificate fails inside the proven region at m = {m}, alpha = {alpha} (min norm {})",
            cert.min_lattice_norm
        )));
    }

    let in_scope = match scope {
        CertificateScope::Proven => cos_alpha <= -0.5 + tol.geo,
        CertificateScope::Extended => true,
    };
    let (verdict, witness) = if shimizu.violation {
        if cert.holds {
            return Err(Error::InternalInconsistency(format!(
                "certificate and Shimizu violation both fire at m = {m}, alpha = {alpha}"
            )));
        }
        (Verdict::NonDiscrete, Witness::NonDiscrete { translation: t1, deficit: shimizu.deficit })
    } else if cert.holds && in_scope {
        (
            Verdict::Discrete,
            Witness::Discrete { vertical_margin: cert.vertical_margin, coset_minima: cert.coset_minima },
        )
    } else {
        (Verdict::Unknown, Witness::None)
    };

    Ok(Classification {
        m,
        alpha,
        verdict,
        witness,
        diagnostics: Diagnostics {
            r: lat.r,
            theta: lat.theta,
            vertical_margin: cert.vertical_margin,
            min_lattice_norm: cert.min_lattice_norm,
            shimizu_deficit: shimizu.deficit,
            certificate_holds: cert.holds,
            prop1,
            prop2,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{reflection_matrix, CVector3};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6, PI};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn lattice(r: f64, theta: f64) -> TranslationLattice {
        let g =
            build_triangle(&TriangleParams::symmetric_332(distance_of(r), PI - 2.0 * theta).unwrap(), &tol()).unwrap();
        translation_lattice(&g, &tol()).unwrap()
    }

    #[test]
    fn vertical_examples() {
        let t = tol();
        let c = vertical_translation_check(1.0, 0.0, &t);
        assert!(c.passes && (c.margin - (24.0 * SQRT_3 - 2.0)).abs() < 1e-12);
        let c = vertical_translation_check(1.0, FRAC_PI_2 - 1e-9, &t);
        assert!(!c.passes && (c.margin + 2.0).abs() < 1e-6);
        assert!(vertical_translation_check(R_MIN_DISCRETE, FRAC_PI_6, &t).passes);
        assert!(vertical_translation_check(R_MIN_DISCRETE, -FRAC_PI_6, &t).passes);
    }

    #[test]
    fn min_norm_examples() {
        let lat = lattice(1.0, 0.0);
        assert!((lattice_min_norm(CosetLabel::Id, &lat) - 2.0 * SQRT_3).abs() < 1e-12);
        assert!((lattice_min_norm(CosetLabel::J1, &lat) - SQRT_3).abs() < 1e-12);
        for theta in [-FRAC_PI_6, -0.3, 0.0, 0.2, FRAC_PI_6] {
            let r = 1.7;
            let lat = lattice(r, theta);
            let n = lattice_min_norm(CosetLabel::J1J2, &lat);
            assert!(n * n >= 3.0 * r * r * (1.0 - 1e-12));
            for rep in CosetLabel::ALL {
                assert!((lattice_min_norm(rep, &lat) - brute_force_min_norm(rep, &lat, 10)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn min_norm_near_degenerate_angles() {
        for theta in [1.4, -1.5, 1.55] {
            let lat = lattice(1.3, theta);
            for rep in CosetLabel::ALL {
                let bound = (4.0 / theta.cos()).ceil() as i64 + 4;
                assert!(
                    (lattice_min_norm(rep, &lat) - brute_force_min_norm(rep, &lat, bound)).abs() < 1e-9,
                    "{rep} {theta}"
                );
            }
        }
    }

    #[test]
    fn table_matches_lattice() {
        for t in [-0.5, 0.0, 0.3, 1.0] {
            let theta = f64::atan(t);
            let r = 1.4;
            let lat = lattice(r, theta);
            for row in coset_table(t) {
                let p = lat.rep(row.label);
                let (a, b) = coset_offsets(p, &lat);
                assert!((a - row.a).abs() < 1e-12 && (b - row.b).abs() < 1e-12, "{} at t={t}", row.label);
                let scaled = p.norm_sqr() / (3.0 * r * r * theta.cos().powi(2));
                assert!((row.a2_3b2 - scaled).abs() < 1e-10);
                assert!((row.a * row.a + 3.0 * row.b * row.b - row.a2_3b2).abs() < 1e-12);
            }
        }
        let rows = coset_table(0.0);
        assert_eq!((rows[0].a, rows[0].b, rows[0].a2_3b2), (0.0, 0.0, 0.0));
        assert_eq!((rows[1].a, rows[1].b, rows[1].a2_3b2), (-1.0, 0.0, 1.0));
    }

    #[test]
    fn case_function_zeros() {
        let d = 1.0 / SQRT_3;
        let mut t = -d;
        while t <= d + 1e-15 {
            for row in coset_table(t) {
                let (zeros, others) = case_points(row.label);
                for &(u, v) in zeros {
                    assert!(case_function(&row, t, u, v).abs() <= 1e-12);
                }
                for &(u, v) in others {
                    assert!(case_function(&row, t, u, v) >= -1e-12);
                }
            }
            t += 0.01;
        }
    }

    #[test]
    fn certificate_examples() {
        let t = tol();
        assert!(compression_certificate(R_MIN_DISCRETE, 0.0, &t).unwrap().holds);
        assert!(compression_certificate(R_MIN_DISCRETE, FRAC_PI_6, &t).unwrap().holds);
        let c = compression_certificate(1.0, 0.0, &t).unwrap();
        assert!(!c.holds && (c.min_lattice_norm - SQRT_3).abs() < 1e-12);
        assert!(compression_certificate(10.0, 0.0, &t).unwrap().holds);
        assert_eq!(compression_certificate(0.5, 0.0, &t), Err(Error::BadRadius(0.5)));
    }

    #[test]
    fn certificate_monotone_in_r() {
        let t = tol();
        for alpha in [2.1, 2.6, PI, 3.8, 4.1] {
            let theta = (PI - alpha) / 2.0;
            let mut seen = false;
            for k in 0..60 {
                let r = 1.0 + 0.02 * f64::from(k);
                let holds = compression_certificate(r, theta, &t).unwrap().holds;
                assert!(!seen || holds, "alpha {alpha} r {r}");
                seen |= holds;
            }
        }
    }

    #[test]
    fn predicates() {
        let ln3 = 3f64.ln();
        assert!(prop1_predicate(ln3, PI));
        assert!(!prop1_predicate(5.0, FRAC_PI_2));
        assert!(!prop1_predicate(0.0, PI));
        let m2 = distance_of(2.0);
        assert!(prop2_predicate(m2, 0.05));
        assert!(!prop2_predicate(m2, PI));
        // strict inequality on the boundary
        let a = f64::acos(prop2_threshold(m2));
        let edge = if a.cos() > prop2_threshold(m2) { a.next_up() } else { a };
        assert!(edge.cos() <= prop2_threshold(m2));
        assert!(!prop2_predicate(m2, edge));
        for alpha in [0.3, 1.0, 2.5] {
            assert_eq!(prop1_predicate(2.0, alpha), prop1_predicate(2.0, 2.0 * PI - alpha));
            assert_eq!(prop2_predicate(2.0, alpha), prop2_predicate(2.0, 2.0 * PI - alpha));
        }
    }

    #[test]
    fn sphere_radius() {
        let t = tol();
        let h = Isometry::from_diagonal([-1.0, 1.0, -1.0].map(|x| Complex64::new(x, 0.0)));
        assert!((isometric_sphere_radius(&h, &t).unwrap() - 1.0).abs() < 1e-15);
        assert!((isometric_sphere_radius(&h.scale(Complex64::new(-1.0, 0.0)), &t).unwrap() - 1.0).abs() < 1e-15);
        for (m, alpha) in [(0.0, 1.0), (1.5, 3.0), (2.9, 5.5)] {
            let g = build_triangle(&TriangleParams::symmetric_332(m, alpha).unwrap(), &t).unwrap();
            assert_eq!(isometric_sphere_radius(g.gen(3), &t).unwrap(), 1.0);
        }
        let tr = HeisTranslation::new(Complex64::new(1.0, 2.0), 0.5).matrix();
        assert_eq!(isometric_sphere_radius(&tr, &t), Err(Error::FixesInfinity));
        // a reflection in a vertical chain also fixes infinity
        let v = reflection_matrix(&CVector3::from_re(1.0, 0.0, 0.0), 3, &t).unwrap();
        assert_eq!(isometric_sphere_radius(&v, &t), Err(Error::FixesInfinity));
    }

    #[test]
    fn shimizu_reduction() {
        let t = tol();
        let h = Isometry::from_diagonal([-1.0, 1.0, -1.0].map(|x| Complex64::new(x, 0.0)));
        for (xi, nu) in
            [(Complex64::new(0.1, 0.05), 0.2), (Complex64::new(0.0, 0.3), -0.1), (Complex64::new(1.0, 0.0), 0.0)]
        {
            let s = shimizu_violation(&HeisTranslation::new(xi, nu), &h, &t).unwrap();
            let expected = 1.0 - (xi.norm_sqr().powi(2) + nu * nu).sqrt() - 4.0 * xi.norm_sqr();
            assert!((s.deficit - expected).abs() < 1e-12);
            assert_eq!(s.violation, expected > t.geo);
        }
        for (r, theta) in [(1.0f64, 1.5f64), (2.0, 1.52), (1.3, 0.2)] {
            let c = theta.cos();
            let xi = Complex64::new(0.0, 2.0 * SQRT_3 * r * c);
            let nu = 12.0 * SQRT_3 * r * r * c * c;
            let s = shimizu_violation(&HeisTranslation::new(xi, nu), &h, &t).unwrap();
            assert!((s.deficit - (1.0 - 72.0 * r * r * c * c)).abs() < 1e-12);
            assert_eq!(s.violation, c * c < 1.0 / (72.0 * r * r));
        }
    }

    #[test]
    #[allow(clippy::approx_constant)] // 1.5708 is deliberately rounded
    fn classify_examples() {
        let t = tol();
        let c = classify(3f64.ln(), PI, &t).unwrap();
        assert_eq!(c.verdict, Verdict::Discrete);
        assert!(matches!(c.witness, Witness::Discrete { .. }));
        let c = classify(distance_of(2.0), 0.05, &t).unwrap();
        assert_eq!(c.verdict, Verdict::NonDiscrete);
        assert!(matches!(c.witness, Witness::NonDiscrete { .. }));
        for r in [R_MIN_DISCRETE, 1.5, 3.0, 10.0] {
            assert_eq!(classify(distance_of(r), FRAC_PI_2, &t).unwrap().verdict, Verdict::Unknown);
        }
        assert_eq!(classify(2.0, 1.5708, &t).unwrap().verdict, Verdict::Unknown);
        // the extended certificate reaches past cos(alpha) = -1/2 for large r
        let e = classify_with_scope(distance_of(10.0), FRAC_PI_2, CertificateScope::Extended, &t).unwrap();
        assert_eq!(e.verdict, Verdict::Discrete);
    }
}
