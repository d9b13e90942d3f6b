//! The Heisenberg model of the boundary sphere.
//!
//! Boundary points are `(zeta, nu)` in `C x R` plus a point at infinity,
//! related to null vectors by stereographic projection. This module also
//! holds the Cygan metric, Heisenberg translations and rotations, chains and
//! the unit spinal sphere.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projective::{classify_vector, unit_root, CVector3, Isometry, PointClass};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HeisPoint {
    Finite { zeta: Complex64, nu: f64 },
    Infinity,
}

impl HeisPoint {
    pub const ORIGIN: HeisPoint = HeisPoint::Finite { zeta: Complex64::new(0.0, 0.0), nu: 0.0 };

    pub fn finite(zeta: Complex64, nu: f64) -> Self {
        HeisPoint::Finite { zeta, nu }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, HeisPoint::Infinity)
    }

    /// The horizontal coordinate, if finite.
    pub fn zeta(&self) -> Option<Complex64> {
        match self {
            HeisPoint::Finite { zeta, .. } => Some(*zeta),
            HeisPoint::Infinity => None,
        }
    }
}

/// Heisenberg translation `(zeta, omega) -> (xi + zeta, omega + nu + 2 Im(xi conj(zeta)))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HeisTranslation {
    pub xi: Complex64,
    pub nu: f64,
}

impl HeisTranslation {
    pub const IDENTITY: HeisTranslation = HeisTranslation { xi: Complex64::new(0.0, 0.0), nu: 0.0 };

    pub fn new(xi: Complex64, nu: f64) -> Self {
        Self { xi, nu }
    }

    pub fn vertical(nu: f64) -> Self {
        Self { xi: Complex64::new(0.0, 0.0), nu }
    }

    pub fn inverse(&self) -> Self {
        Self { xi: -self.xi, nu: -self.nu }
    }

    pub fn act(&self, p: &HeisPoint) -> HeisPoint {
        match *p {
            HeisPoint::Finite { zeta, nu } => {
                HeisPoint::Finite { zeta: self.xi + zeta, nu: nu + self.nu + 2.0 * (self.xi * zeta.conj()).im }
            }
            HeisPoint::Infinity => HeisPoint::Infinity,
        }
    }

    pub fn matrix(&self) -> Isometry {
        translation_matrix(self)
    }
}

/// Composition `a o b` of Heisenberg translations.
pub fn compose_translations(a: &HeisTranslation, b: &HeisTranslation) -> HeisTranslation {
    HeisTranslation { xi: a.xi + b.xi, nu: a.nu + b.nu + 2.0 * (a.xi * b.xi.conj()).im }
}

/// Cygan distance `| |z1 - z2|^2 - i(n1 - n2) - 2i Im(z1 conj(z2)) |^(1/2)`.
pub fn cygan_distance(p: &HeisPoint, q: &HeisPoint) -> Result<f64> {
    match (p, q) {
        (HeisPoint::Finite { zeta: z1, nu: n1 }, HeisPoint::Finite { zeta: z2, nu: n2 }) => {
            let w = Complex64::new((z1 - z2).norm_sqr(), -(n1 - n2) - 2.0 * (z1 * z2.conj()).im);
            Ok(w.norm().sqrt())
        }
        _ => Err(Error::InfiniteArgument),
    }
}

/// Stereographic projection of a null vector to Heisenberg coordinates.
pub fn from_boundary(z: &CVector3, tol: &Tolerance) -> Result<HeisPoint> {
    if classify_vector(z, tol)? != PointClass::Null {
        return Err(Error::NotBoundary);
    }
    let d = z.z2() + z.z3();
    if d.norm() <= tol.null * z.euclid_norm_sq().sqrt() {
        return Ok(HeisPoint::Infinity);
    }
    Ok(HeisPoint::Finite { zeta: z.z1() / d, nu: ((z.z2() - z.z3()) / d).im })
}

/// Null vector lying over a Heisenberg point.
pub fn to_boundary(p: &HeisPoint) -> CVector3 {
    match *p {
        HeisPoint::Finite { zeta, nu } => {
            let s = zeta.norm_sqr();
            CVector3::new(zeta * 2.0, Complex64::new(1.0 - s, nu), Complex64::new(1.0 + s, -nu))
        }
        HeisPoint::Infinity => CVector3::from_re(0.0, 1.0, -1.0),
    }
}

/// Boundary action of an isometry in Heisenberg coordinates.
pub fn apply_to_point(m: &Isometry, p: &HeisPoint, tol: &Tolerance) -> Result<HeisPoint> {
    from_boundary(&m.apply(&to_boundary(p)), tol)
}

pub fn translation_matrix(t: &HeisTranslation) -> Isometry {
    let one = Complex64::new(1.0, 0.0);
    let xi = t.xi;
    let s = Complex64::new(xi.norm_sqr(), -t.nu) / 2.0;
    Isometry::from_rows([[one, xi, xi], [-xi.conj(), one - s, -s], [xi.conj(), s, one + s]])
}

/// Rotation `(zeta, omega) -> (mu zeta, omega)` about the vertical axis.
pub fn rotation_matrix(mu: Complex64, tol: &Tolerance) -> Result<Isometry> {
    let modulus = mu.norm();
    if (modulus - 1.0).abs() > tol.mat {
        return Err(Error::NotUnit(modulus));
    }
    let one = Complex64::new(1.0, 0.0);
    Ok(Isometry::from_diagonal([mu, one, one]))
}

/// Order-`n` minimal reflection in the vertical chain over `phi`, written
/// out entrywise.
pub fn vertical_reflection_matrix(phi: Complex64, n: u32) -> Result<Isometry> {
    if n < 2 {
        return Err(Error::BadOrder(n));
    }
    let mu = unit_root(n, 1);
    let k = Complex64::new(1.0, 0.0) - mu;
    let a = phi.norm_sqr();
    let one = Complex64::new(1.0, 0.0);
    Ok(Isometry::from_rows([
        [-mu, -k * phi, -k * phi],
        [-k * phi.conj(), k * a - one, k * a],
        [k * phi.conj(), -k * a, -k * a - one],
    ]))
}

/// Splits the reflection in the vertical chain over `phi` as a rotation
/// after a Heisenberg translation: `iota = R_mu o T`, with
/// `T = ((conj(mu) - 1) phi, 2 |phi|^2 sin(2 pi / n))`.
pub fn vertical_reflection_decomposition(phi: Complex64, n: u32) -> Result<(Complex64, HeisTranslation)> {
    if n < 2 {
        return Err(Error::BadOrder(n));
    }
    let mu = unit_root(n, 1);
    let xi = (mu.conj() - 1.0) * phi;
    Ok((mu, HeisTranslation::new(xi, 2.0 * phi.norm_sqr() * mu.im)))
}

/// Foot point of the image of the vertical chain over `xi` under the
/// order-`n` reflection in the vertical chain over `zeta`:
/// `mu xi - (mu - 1) zeta`.
pub fn rotate_vertical_chain(zeta: Complex64, xi: Complex64, n: u32) -> Result<Complex64> {
    if n < 2 {
        return Err(Error::BadOrder(n));
    }
    let mu = unit_root(n, 1);
    Ok(mu * xi - (mu - 1.0) * zeta)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChainRep {
    /// The vertical line `zeta = foot`.
    Vertical { foot: Complex64 },
    /// The finite chain with the given centre and radius.
    Finite { center: Complex64, height: f64, radius: f64 },
}

/// Polar vector of a chain (not normalised).
pub fn chain_polar(c: &ChainRep) -> CVector3 {
    match *c {
        ChainRep::Vertical { foot } => {
            let f = foot.conj();
            CVector3::new(Complex64::new(1.0, 0.0), -f, f)
        }
        ChainRep::Finite { center, height, radius } => {
            let r2 = radius * radius;
            let s = center.norm_sqr();
            CVector3::new(center * 2.0, Complex64::new(1.0 + r2 - s, height), Complex64::new(1.0 - r2 + s, -height))
        }
    }
}

/// Whether `p` lies on the chain `c`.
pub fn on_chain(c: &ChainRep, p: &HeisPoint, tol: &Tolerance) -> bool {
    match (*c, *p) {
        (ChainRep::Vertical { .. }, HeisPoint::Infinity) => true,
        (ChainRep::Finite { .. }, HeisPoint::Infinity) => false,
        (ChainRep::Vertical { foot }, HeisPoint::Finite { zeta, .. }) => {
            (zeta - foot).norm() <= tol.geo * (1.0 + foot.norm())
        }
        (ChainRep::Finite { center, height, radius }, HeisPoint::Finite { zeta, nu }) => {
            let scale = 1.0 + radius + center.norm();
            ((zeta - center).norm() - radius).abs() <= tol.geo * scale
                && (nu - (height - 2.0 * (zeta * center.conj()).im)).abs() <= tol.geo * scale * scale
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpinalSide {
    Inside,
    On,
    Outside,
}

/// Position relative to the unit spinal sphere `|zeta|^4 + nu^2 = 1`.
pub fn spinal_sphere_side(p: &HeisPoint, tol: &Tolerance) -> SpinalSide {
    match *p {
        HeisPoint::Infinity => SpinalSide::Outside,
        HeisPoint::Finite { zeta, nu } => {
            let s = zeta.norm_sqr();
            let q = s * s + nu * nu - 1.0;
            if q.abs() <= tol.geo {
                SpinalSide::On
            } else if q < 0.0 {
                SpinalSide::Inside
            } else {
                SpinalSide::Outside
            }
        }
    }
}
