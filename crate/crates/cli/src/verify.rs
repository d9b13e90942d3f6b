//! Self-check suites behind `chtri verify`. Limits scale with the tolerance
//! in force, so a tightened tolerance makes suites fail by name.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use chtri::criteria::{
    brute_force_min_norm, case_function, case_points, classify, coset_table, lattice_min_norm, prop1_predicate,
    prop2_predicate, prop2_threshold, shimizu_violation,
};
use chtri::heisenberg::{compose_translations, cygan_distance, from_boundary, to_boundary, translation_matrix};
use chtri::orbit::{
    commutator, decompose_orbit_point, orbit_points, translation_lattice, translation_part_of, CosetLabel, PointSet,
};
use chtri::projective::projective_equal;
use chtri::scan::{grid, scan_points};
use chtri::triangle::{angle_diff, build_triangle, distance_of, radius_of, TriangleGroup, TriangleParams};
use chtri::words::{evaluate_word_matrix, Word};
use chtri::{CertificateScope, HeisPoint, HeisTranslation, Tolerance, Verdict};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// One measured quantity and the largest value it may take.
#[derive(Debug, Clone)]
pub struct Check {
    pub invariant: &'static str,
    pub value: f64,
    pub limit: f64,
}

impl Check {
    fn new(invariant: &'static str, value: f64, limit: f64) -> Self {
        Check { invariant, value, limit }
    }

    fn count(invariant: &'static str, failures: usize) -> Self {
        Check { invariant, value: failures as f64, limit: 0.0 }
    }

    pub fn passed(&self) -> bool {
        self.value <= self.limit
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
    pub error: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(Check::passed)
    }

    /// `suite/invariant` names of everything that failed.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> =
            self.checks.iter().filter(|c| !c.passed()).map(|c| format!("{}/{}", self.name, c.invariant)).collect();
        if self.error.is_some() {
            out.push(format!("{}/error", self.name));
        }
        out
    }
}

type SuiteFn = fn(&Tolerance) -> chtri::Result<Vec<Check>>;

/// The suites, in run order. The boolean marks the slow ones skipped by `--fast`.
pub fn suites() -> Vec<(&'static str, bool, SuiteFn)> {
    vec![
        ("generator-algebra", false, generator_algebra as SuiteFn),
        ("configuration", false, configuration),
        ("translation-closed-forms", false, translation_closed_forms),
        ("orbit-normal-form", false, orbit_normal_form),
        ("coset-table", false, coset_cases),
        ("lattice-oracle", false, lattice_oracle),
        ("heisenberg-oracles", false, heisenberg_oracles),
        ("headline-boundaries", false, headline_boundaries),
        ("scan-consistency", true, scan_consistency),
    ]
}

pub fn run(fast: bool, tol: &Tolerance) -> Vec<SuiteReport> {
    suites()
        .into_iter()
        .filter(|(_, slow, _)| !(fast && *slow))
        .map(|(name, _, suite)| match suite(tol) {
            Ok(checks) => SuiteReport { name, checks, error: None },
            Err(e) => SuiteReport { name, checks: Vec::new(), error: Some(e.to_string()) },
        })
        .collect()
}

pub fn render(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{} {}", if r.passed() { "PASS" } else { "FAIL" }, r.name);
        for c in &r.checks {
            let mark = if c.passed() { "" } else { "  <-- failed" };
            let _ = writeln!(out, "    {:<32} {:>10.3e}  (limit {:.1e}){mark}", c.invariant, c.value, c.limit);
        }
        if let Some(e) = &r.error {
            let _ = writeln!(out, "    error: {e}");
        }
    }
    out
}

fn small_grid() -> Vec<(f64, f64)> {
    let ms: Vec<f64> = (0..20).map(|i| 3.0 * f64::from(i) / 19.0).collect();
    let alphas: Vec<f64> = (0..20).map(|j| TAU * (f64::from(j) + 0.5) / 20.0).collect();
    grid(&ms, &alphas)
}

fn group(m: f64, alpha: f64, tol: &Tolerance) -> chtri::Result<TriangleGroup> {
    build_triangle(&TriangleParams::symmetric_332(m, alpha)?, tol)
}

fn word(letters: &str) -> chtri::Result<Word> {
    Word::parse(letters, [3, 3])
}

fn generator_algebra(tol: &Tolerance) -> chtri::Result<Vec<Check>> {
    let s = tol.scale();
    let (mut order, mut form) = (0f64, 0f64);
    for (m, alpha) in small_grid() {
        let g = group(m, alpha, tol)?;
        for k in 1..=2u8 {
            order = order.max(g.gen(k).pow(3).distance_to_scalar(Complex64::new(-1.0, 0.0)));
        }
        order = order.max(g.gen(3).pow(2).distance_to_scalar(Complex64::new(1.0, 0.0)));
        for k in 1..=3u8 {
            let (lambda, residual) = g.gen(k).form_residual();
            form = form.max(residual).max((lambda - 1.0).abs());
        }
    }
    Ok(vec![Check::new("generator-order", order, 1e-10 * s), Check::new("form-residual", form, 1e-10 * s)])
}

fn configuration(tol: &Tolerance) -> chtri::Result<Vec<Check>> {
    let s = tol.scale();
    let (mut dist, mut angle) = (0f64, 0f64);
    for (m, alpha) in small_grid() {
        let g = group(m, alpha, tol)?;
        let d = g.chain_distances(tol)?;
        dist = dist.max((d[0] - m).abs()).max((d[1] - m).abs()).max(d[2].abs());
        angle = angle.max(angle_diff(g.angular_invariant(tol)?, alpha).abs());
    }
    Ok(vec![Check::new("chain-distances", dist, 1e-9 * s), Check::new("angular-invariant", angle, 1e-9 * s)])
}

fn translation_closed_forms(tol: &Tolerance) -> chtri::Result<Vec<Check>> {
    let s = tol.scale();
    let (mut e1, mut e2, mut eh) = (0f64, 0f64, 0f64);
    for (m, alpha) in small_grid() {
        let g = group(m, alpha, tol)?;
        let (r, theta) = (radius_of(m), (PI - alpha) / 2.0);
        let (sn, c) = theta.sin_cos();
        let m1 = evaluate_word_matrix(&word("212")?, &g)?;
        let m2 = evaluate_word_matrix(&word("112")?, &g)?;
        let t1 = translation_part_of(&m1, tol)?;
        let t2 = translation_part_of(&m2, tol)?;
        let h = translation_part_of(&commutator(&m1, &m2)?, tol)?;
        e1 = e1
            .max((t1.xi - Complex64::new(0.0, 2.0 * SQRT_3 * r * c)).norm())
            .max((t1.nu - 12.0 * SQRT_3 * r * r * c * c).abs());
        e2 = e2.max((t2.xi - Complex64::new(3.0, SQRT_3) * (r * c)).norm()).max((t2.nu - 12.0 * r * r * sn * c).abs());
        eh = eh.max(h.xi.norm()).max((h.nu - 24.0 * SQRT_3 * r * r * c * c).abs());
    }
    Ok(vec![
        Check::new("iota212-translation", e1, 1e-9 * s),
        Check::new("iota112-translation", e2, 1e-9 * s),
        Check::new("commutator-vertical", eh, 1e-9 * s),
    ])
}

fn orbit_normal_form(tol: &Tolerance) -> chtri::Result<Vec<Check>> {
    let s = tol.scale();
    let g = group(0.0, PI, tol)?;
    let lat = translation_lattice(&g, tol)?;
    let points = orbit_points(6, &g);
    let mut residual = 0f64;
    let mut undecomposed = 0;
    for (_, z) in &points {
        match decompose_orbit_point(*z, &lat, tol) {
            Ok(d) => residual = residual.max((lat.point(d.rep, d.x, d.y) - z).norm()),
            Err(_) => undecomposed += 1,
        }
    }
    let set = PointSet::from_points(1e-7, points.iter().map(|p| p.1));
    let core: Vec<Complex64> = orbit_points(3, &g).into_iter().map(|p| p.1).collect();
    let mut missing = 0;
    for shift in [lat.v1, lat.v2, lat.v2 - lat.v1] {
        for sign in [1.0, -1.0] {
            missing += core.iter().filter(|&&p| !set.contains(p + shift * sign)).count();
        }
    }
    Ok(vec![
        Check::count("undecomposed-points", undecomposed),
        Check::new("decomposition-residual", residual, 1e-9 * s),
        Check::count("missing-translates", missing),
    ])
}

fn coset_cases(tol: &Tolerance) -> chtri::Result<Vec<Check>> {
    let s = tol.scale();
    let d = 1.0 / SQRT_3;
    let (mut table, mut zeros, mut negative) = (0f64, 0f64, 0f64);
    let mut shortfall = 0f64;
    let steps = (2.0 * d / 0.01).floor() as i32;
    for k in 0..=steps {
        let t = -d + 0.01 * f64::from(k);
        let theta = t.atan();
        let rows = coset_table(t);
        for r in [1.0, 2.0 / SQRT_3, 2.0] {
            let lat = translation_lattice(&group(distance_of(r), PI - 2.0 * theta, tol)?, tol)?;
            let scale = 3.0 * r * r * theta.cos().powi(2);
            for row in &rows {
                table = table.max((row.a2_3b2 - lat.rep(row.label).norm_sqr() / scale).abs());
            }
            let min_sq =
                CosetLabel::ALL.iter().map(|&c| lattice_min_norm(c, &lat).powi(2)).fold(f64::INFINITY, f64::min);
            shortfall = shortfall.max(1.0 - min_sq / (3.0 * r * r));
        }
        for row in &rows {
            let (z, others) = case_points(row.label);
            for &(u, v) in z {
                zeros = zeros.max(case_function(row, t, u, v).abs());
            }
            for &(u, v) in others {
                negative = negative.max(-case_function(row, t, u, v));
            }
        }
    }
    Ok(vec![
        Check::new("table-identity", table, 1e-10 * s),
        Check::new("listed-zeros", zeros, 1e-12 * s),
        Check::new("case-negativity", negative, 1e-12 * s),
        Check::new("min-norm-shortfall", shortfall, 1e-12 * s),
    ])
}

fn lattice_oracle(tol: &Tolerance) -> chtri::Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0f64;
    for _ in 0..200 {
        let r = rng.gen_range(1.0..3.0);
        let theta = rng.gen_range(-1.2..1.2);
        let rep = CosetLabel::ALL[rng.gen_range(0..7)];
        let lat = translation_lattice(&group(distance_of(r), PI - 2.0 * theta, tol)?, tol)?;
        worst = worst.max((lattice_min_norm(rep, &lat) - brute_force_min_norm(rep, &lat, 10)).abs());
    }
    Ok(vec![Check::new("min-norm-vs-brute-force", worst, 1e-9 * tol.scale())])
}

fn heisenberg_oracles(tol: &Tolerance) -> chtri::Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let random = |rng: &mut ChaCha8Rng| {
        HeisTranslation::new(
            Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)),
            rng.gen_range(-5.0..5.0),
        )
    };
    let mut law = 0;
    let mut round_trip = 0f64;
    let mut axioms = 0;
    for _ in 0..2000 {
        let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
        if !projective_equal(
            &(translation_matrix(&a) * translation_matrix(&b)),
            &translation_matrix(&compose_translations(&a, &b)),
            tol,
        )? {
            law += 1;
        }
        let p = HeisPoint::finite(a.xi, a.nu);
        match from_boundary(&to_boundary(&p).scale(Complex64::from_polar(2.5, rng.gen_range(0.0..TAU))), tol)? {
            HeisPoint::Finite { zeta, nu } => round_trip = round_trip.max((zeta - a.xi).norm()).max((nu - a.nu).abs()),
            HeisPoint::Infinity => round_trip = f64::INFINITY,
        }
        let (q, w) = (HeisPoint::finite(b.xi, b.nu), HeisPoint::finite(c.xi, c.nu));
        let (pq, qw, pw) = (cygan_distance(&p, &q)?, cygan_distance(&q, &w)?, cygan_distance(&p, &w)?);
        let ok = cygan_distance(&p, &p)? == 0.0
            && pq > 0.0
            && (pq - cygan_distance(&q, &p)?).abs() <= 1e-12 * (1.0 + pq)
            && pw <= pq + qw + 1e-12;
        axioms += usize::from(!ok);
    }
    Ok(vec![
        Check::count("group-law-failures", law),
        Check::new("stereographic-round-trip", round_trip, 1e-10 * tol.scale()),
        Check::count("cygan-axiom-failures", axioms),
    ])
}

fn headline_boundaries(tol: &Tolerance) -> chtri::Result<Vec<Check>> {
    let step = 0.005;
    let cosines: Vec<f64> = (0..400).map(|k| -1.0 + step * f64::from(k)).collect();
    let (mut d_err, mut n_err) = (0f64, 0f64);
    for m in [1.1, 1.5, 2.0, 2.5] {
        let pts: Vec<(f64, f64)> = cosines.iter().map(|&c| (m, c.acos())).collect();
        let rows = scan_points(&pts, CertificateScope::Proven, 0, tol)?;
        let edge = |v: Verdict, max: bool| {
            let it = rows.iter().zip(&cosines).filter(|(r, _)| r.verdict == v).map(|(_, &c)| c);
            if max {
                it.fold(f64::NAN, f64::max)
            } else {
                it.fold(f64::NAN, f64::min)
            }
        };
        // NaN (empty region) propagates and fails the check
        d_err = d_err
            .max((edge(Verdict::Discrete, true) + 0.5).abs())
            .max(f64::from(u8::from(edge(Verdict::Discrete, true).is_nan())) * f64::INFINITY);
        let n = edge(Verdict::NonDiscrete, false);
        n_err = if n.is_nan() { f64::INFINITY } else { n_err.max((n - prop2_threshold(m)).abs()) };
    }
    Ok(vec![Check::new("discrete-edge", d_err, step), Check::new("non-discrete-edge", n_err, step)])
}

fn scan_consistency(tol: &Tolerance) -> chtri::Result<Vec<Check>> {
    let ms: Vec<f64> = (0..100).map(|i| 3.0 * f64::from(i) / 99.0).collect();
    let alphas: Vec<f64> = (0..100).map(|j| TAU * (f64::from(j) + 0.5) / 100.0).collect();
    let (mut prop1_missing, mut overlap, mut mismatch) = (0, 0, 0);
    for (m, alpha) in grid(&ms, &alphas) {
        let c = classify(m, alpha, tol)?;
        if prop1_predicate(m, alpha) && !c.diagnostics.certificate_holds {
            prop1_missing += 1;
        }
        if c.verdict == Verdict::Discrete && c.diagnostics.shimizu_deficit > tol.geo {
            overlap += 1;
        }
        if (alpha.cos() - prop2_threshold(m)).abs() >= 1e-9 {
            let g = group(m, alpha, tol)?;
            let t1 = translation_part_of(&evaluate_word_matrix(&word("212")?, &g)?, tol)?;
            if shimizu_violation(&t1, g.gen(3), tol)?.violation != prop2_predicate(m, alpha) {
                mismatch += 1;
            }
        }
    }
    Ok(vec![
        Check::count("proven-region-without-certificate", prop1_missing),
        Check::count("discrete-with-shimizu-violation", overlap),
        Check::count("shimizu-vs-closed-form-mismatch", mismatch),
    ])
}

/// `Ok` when every suite passed, otherwise a `Verify` error naming each failed invariant.
pub fn outcome(reports: &[SuiteReport]) -> Result<(), crate::error::CliError> {
    let failed: Vec<String> = reports.iter().flat_map(SuiteReport::failures).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(crate::error::CliError::Verify(failed.join(", ")))
    }
}
