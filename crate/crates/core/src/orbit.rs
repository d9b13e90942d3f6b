//! Orbits of the origin under the planar projection `<j1, j2>` of
//! `<iota1, iota2>`, and the translation lattice of the `[m, m, 0; 3, 3, 2]`
//! family.
//!
//! Every orbit point has the normal form `p + x v1 + y v2` with `x, y`
//! integers and `p` the image of the origin under one of seven short words.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heisenberg::{apply_to_point, to_boundary, translation_matrix, HeisPoint, HeisTranslation};
use crate::projective::{projective_equal, unit_root, Isometry};
use crate::tolerance::Tolerance;
use crate::triangle::TriangleGroup;
use crate::words::{enumerate_words, evaluate_word_matrix, Word};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Integer tolerance used when rounding lattice coordinates.
const INTEGRALITY_TOL: f64 = 1e-6;

/// Planar action of `iota_k^exp`: rotation about `phi_k` by `exp` steps of `2 pi / n_k`.
pub fn project_rotation(k: u8, exp: u32, z: Complex64, g: &TriangleGroup) -> Complex64 {
    let mu = unit_root(g.order(k), i64::from(exp));
    mu * z + (Complex64::new(1.0, 0.0) - mu) * g.center(k)
}

/// Image of `z` under the planar projection of a word (rightmost syllable acts first).
pub fn apply_word(w: &Word, z: Complex64, g: &TriangleGroup) -> Complex64 {
    w.syllables().iter().rev().fold(z, |acc, s| project_rotation(s.gen, s.exp, acc, g))
}

/// `(w, f_w(0))` for every reduced word of letter length `<= max_len`.
pub fn orbit_points(max_len: u32, g: &TriangleGroup) -> Vec<(Word, Complex64)> {
    enumerate_words(max_len, g.params.n1, g.params.n2)
        .map(|w| {
            let z = apply_word(&w, Complex64::new(0.0, 0.0), g);
            (w, z)
        })
        .collect()
}

/// Horizontal coordinate of the image of the Heisenberg origin under the
/// matrix of `w`.
pub fn orbit_point_via_matrix(w: &Word, g: &TriangleGroup, tol: &Tolerance) -> Result<Complex64> {
    let m = evaluate_word_matrix(w, g)?;
    apply_to_point(&m, &HeisPoint::ORIGIN, tol)?
        .zeta()
        .ok_or_else(|| Error::InternalInconsistency(format!("word {w} sends the origin to infinity")))
}

/// Reads off `(xi, nu)` from a matrix that is projectively a Heisenberg translation.
///
/// The boundary images are read without the null-vector test of
/// [`crate::heisenberg::from_boundary`]: products of long words have large entries and their
/// rounding error would trip it. The final projective comparison is the check.
pub fn translation_part_of(m: &Isometry, tol: &Tolerance) -> Result<HeisTranslation> {
    let m = m.unit_normalized().map_err(|_| Error::NotTranslation)?;
    let scale = m.max_abs().max(1.0);
    let w = m.apply(&to_boundary(&HeisPoint::Infinity));
    if w.z1().norm() + (w.z2() + w.z3()).norm() > tol.mat * scale {
        return Err(Error::NotTranslation);
    }
    let o = m.apply(&to_boundary(&HeisPoint::ORIGIN));
    let d = o.z2() + o.z3();
    if d.norm() <= tol.mat {
        return Err(Error::NotTranslation);
    }
    let t = HeisTranslation::new(o.z1() / d, ((o.z2() - o.z3()) / d).im);
    if projective_equal(&m, &translation_matrix(&t), tol)? {
        Ok(t)
    } else {
        Err(Error::NotTranslation)
    }
}

/// The seven words whose images of the origin represent the orbit modulo the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CosetLabel {
    Id,
    J1,
    J2,
    J1Sq,
    J2Sq,
    J1J2,
    J2J1,
}

impl CosetLabel {
    pub const ALL: [CosetLabel; 7] = [
        CosetLabel::Id,
        CosetLabel::J1,
        CosetLabel::J2,
        CosetLabel::J1Sq,
        CosetLabel::J2Sq,
        CosetLabel::J1J2,
        CosetLabel::J2J1,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            CosetLabel::Id => "Id",
            CosetLabel::J1 => "j1",
            CosetLabel::J2 => "j2",
            CosetLabel::J1Sq => "j1^2",
            CosetLabel::J2Sq => "j2^2",
            CosetLabel::J1J2 => "j1j2",
            CosetLabel::J2J1 => "j2j1",
        }
    }

    /// Letters of the representing word.
    pub fn letters(&self) -> &'static str {
        match self {
            CosetLabel::Id => "Id",
            CosetLabel::J1 => "1",
            CosetLabel::J2 => "2",
            CosetLabel::J1Sq => "11",
            CosetLabel::J2Sq => "22",
            CosetLabel::J1J2 => "12",
            CosetLabel::J2J1 => "21",
        }
    }

    pub fn index(&self) -> usize {
        Self::ALL.iter().position(|c| c == self).unwrap_or(0)
    }
}

impl fmt::Display for CosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Translation subgroup of `<iota1, iota2>` for `n1 = n2 = 3`, `m1 = m2`:
/// `T1 = iota_212` by `(v1, t1)`, `T2 = iota_112` by `(v2, t2)` and the
/// central `H = [T1, T2]` by `(0, h_nu)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TranslationLattice {
    pub r: f64,
    pub theta: f64,
    pub v1: Complex64,
    pub v2: Complex64,
    pub t1: f64,
    pub t2: f64,
    pub h_nu: f64,
    pub coset_reps: [(CosetLabel, Complex64); 7],
}

impl TranslationLattice {
    pub fn rep(&self, label: CosetLabel) -> Complex64 {
        self.coset_reps[label.index()].1
    }

    pub fn point(&self, label: CosetLabel, x: i64, y: i64) -> Complex64 {
        self.rep(label) + self.v1 * x as f64 + self.v2 * y as f64
    }

    pub fn t1_translation(&self) -> HeisTranslation {
        HeisTranslation::new(self.v1, self.t1)
    }

    pub fn t2_translation(&self) -> HeisTranslation {
        HeisTranslation::new(self.v2, self.t2)
    }
}

fn close_rel(a: f64, b: f64, eps: f64) -> bool {
    (a - b).abs() <= eps * (1.0 + a.abs().max(b.abs()))
}

/// Relative accuracy to expect of a quantity of size `result` computed from
/// matrix products whose factor sizes multiply to `product`.
fn rounding_floor(product: f64, result: f64) -> f64 {
    64.0 * f64::EPSILON * product / result.abs().max(1.0)
}

/// Checks that `g` is in the `[m, m, 0; 3, 3, *]` family handled here.
pub fn require_symmetric_33(g: &TriangleGroup, tol: &Tolerance) -> Result<()> {
    let p = &g.params;
    if p.n1 != 3 || p.n2 != 3 {
        return Err(Error::UnsupportedType(format!("orders ({}, {}) instead of (3, 3)", p.n1, p.n2)));
    }
    if !close_rel(p.m1, p.m2, tol.geo) {
        return Err(Error::UnsupportedType(format!("m1 = {} differs from m2 = {}", p.m1, p.m2)));
    }
    Ok(())
}

/// Closed-form lattice, cross-checked against the matrices of `iota_212`,
/// `iota_112` and their commutator.
pub fn translation_lattice(g: &TriangleGroup, tol: &Tolerance) -> Result<TranslationLattice> {
    require_symmetric_33(g, tol)?;
    let r = g.params.r1();
    let theta = g.params.theta();
    let (s, c) = theta.sin_cos();
    let v1 = Complex64::new(0.0, 2.0 * SQRT_3 * r * c);
    let v2 = Complex64::new(3.0, SQRT_3) * (r * c);
    let t1 = 12.0 * SQRT_3 * r * r * c * c;
    let t2 = 12.0 * r * r * s * c;
    let h_nu = 24.0 * SQRT_3 * r * r * c * c;

    let orders = [3, 3];
    let m1 = evaluate_word_matrix(&Word::parse("212", orders)?, g)?;
    let m2 = evaluate_word_matrix(&Word::parse("112", orders)?, g)?;
    let e1 = translation_part_of(&m1, tol)?;
    let e2 = translation_part_of(&m2, tol)?;
    let h = translation_part_of(&commutator(&m1, &m2)?, tol)?;
    // Matrix products carry an absolute error of roughly eps times the
    // product of the factors' sizes; the commutator of two large translations
    // loses several digits this way, so the check never asks for less.
    let gen_size = g.gen(1).max_abs().max(g.gen(2).max_abs());
    let word_eps = tol.geo.max(rounding_floor(gen_size.powi(3), m1.max_abs().max(m2.max_abs())));
    let comm_eps = tol.geo.max(rounding_floor((m1.max_abs() * m2.max_abs()).powi(2), h_nu));
    let scale = 1.0 + r;
    let agrees = (e1.xi - v1).norm() <= word_eps * scale
        && (e2.xi - v2).norm() <= word_eps * scale
        && close_rel(e1.nu, t1, word_eps)
        && close_rel(e2.nu, t2, word_eps)
        && close_rel(h.nu, h_nu, comm_eps)
        && h.xi.norm() <= comm_eps * (1.0 + h_nu);
    if !agrees {
        return Err(Error::InternalInconsistency(format!(
            "lattice closed forms disagree with matrices: T1 {e1:?} vs ({v1}, {t1}), T2 {e2:?} vs ({v2}, {t2}), H {h:?} vs {h_nu}"
        )));
    }

    let zero = Complex64::new(0.0, 0.0);
    let coset_reps = CosetLabel::ALL.map(|label| {
        let w = Word::parse(label.letters(), orders).expect("coset words are reduced");
        (label, apply_word(&w, zero, g))
    });
    Ok(TranslationLattice { r, theta, v1, v2, t1, t2, h_nu, coset_reps })
}

/// `[a, b] = a^-1 b^-1 a b`, evaluated in double-double.
pub fn commutator(a: &Isometry, b: &Isometry) -> Result<Isometry> {
    crate::precise::commutator(a, b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub rep: CosetLabel,
    pub x: i64,
    pub y: i64,
}

/// Writes an orbit point as `p + x v1 + y v2`. Among valid decompositions
/// the one with the smallest `|x| + |y|` wins, then the earliest label.
pub fn decompose_orbit_point(f0: Complex64, lat: &TranslationLattice, tol: &Tolerance) -> Result<Decomposition> {
    let (v1, v2) = (lat.v1, lat.v2);
    let det = v1.re * v2.im - v1.im * v2.re;
    if det.abs() <= f64::MIN_POSITIVE {
        return Err(Error::NotInOrbitForm(format!("{f0} (degenerate lattice)")));
    }
    let mut best: Option<Decomposition> = None;
    for &(label, p) in &lat.coset_reps {
        let d = f0 - p;
        let x = (d.re * v2.im - d.im * v2.re) / det;
        let y = (v1.re * d.im - v1.im * d.re) / det;
        let (xr, yr) = (x.round(), y.round());
        if (x - xr).abs() > INTEGRALITY_TOL || (y - yr).abs() > INTEGRALITY_TOL {
            continue;
        }
        let cand = Decomposition { rep: label, x: xr as i64, y: yr as i64 };
        if (lat.point(label, cand.x, cand.y) - f0).norm() > tol.geo * (1.0 + f0.norm()) {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) => (cand.x.abs() + cand.y.abs(), cand.rep) < (b.x.abs() + b.y.abs(), b.rep),
        };
        if better {
            best = Some(cand);
        }
    }
    best.ok_or_else(|| Error::NotInOrbitForm(f0.to_string()))
}

/// A set of planar points compared up to a fixed tolerance.
#[derive(Debug, Clone)]
pub struct PointSet {
    eps: f64,
    cells: HashMap<(i64, i64), Vec<Complex64>>,
    len: usize,
}

impl PointSet {
    pub fn new(eps: f64) -> Self {
        Self { eps, cells: HashMap::new(), len: 0 }
    }

    pub fn from_points(eps: f64, points: impl IntoIterator<Item = Complex64>) -> Self {
        let mut set = Self::new(eps);
        for z in points {
            set.insert(z);
        }
        set
    }

    fn cell(&self, z: Complex64) -> (i64, i64) {
        ((z.re / self.eps).floor() as i64, (z.im / self.eps).floor() as i64)
    }

    pub fn contains(&self, z: Complex64) -> bool {
        let (cx, cy) = self.cell(z);
        (-1..=1).any(|dx| {
            (-1..=1).any(|dy| {
                self.cells.get(&(cx + dx, cy + dy)).is_some_and(|v| v.iter().any(|w| (w - z).norm() <= self.eps))
            })
        })
    }

    /// Inserts `z` unless an equal point is present; returns whether it was new.
    pub fn insert(&mut self, z: Complex64) -> bool {
        if self.contains(z) {
            return false;
        }
        let key = self.cell(z);
        self.cells.entry(key).or_default().push(z);
        self.len += 1;
        true
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.cells.values().flatten().copied()
    }
}
