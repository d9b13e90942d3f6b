//! Linear algebra on C^{2,1}: the signature (2,1) Hermitian form, point
//! classes, Bergman distance, projective equality in PU(2,1) and complex
//! reflections in complex geodesics.

use std::fmt;
use std::ops::Mul;

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tolerance::Tolerance;

/// Cyclic products and closed forms sit exactly at tangency when two
/// ultra-parallel geodesics touch at the boundary; values of `|<c1,c2>|`
/// within this many ulps above 1 are reported as distance 0.
const TANGENCY_SLACK: f64 = 8.0 * f64::EPSILON;

/// Returns `exp(2 pi i k / n)`.
///
/// Angles that are multiples of 30 degrees are returned with exact
/// components so that identities such as `iota^2 = I` hold bit for bit.
pub fn unit_root(n: u32, k: i64) -> Complex64 {
    assert!(n > 0, "unit_root of order 0");
    let n = n as i64;
    let k = k.rem_euclid(n);
    if (12 * k) % n == 0 {
        const H: f64 = 0.866_025_403_784_438_6; // sqrt(3)/2
        const TABLE: [(f64, f64); 12] = [
            (1.0, 0.0),
            (H, 0.5),
            (0.5, H),
            (0.0, 1.0),
            (-0.5, H),
            (-H, 0.5),
            (-1.0, 0.0),
            (-H, -0.5),
            (-0.5, -H),
            (0.0, -1.0),
            (0.5, -H),
            (H, -0.5),
        ];
        let (re, im) = TABLE[((12 * k) / n) as usize];
        Complex64::new(re, im)
    } else {
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64)
    }
}

/// A vector of C^{2,1}: a point, a boundary point or a polar vector.
#[derive(Clone, Copy, PartialEq)]
pub struct CVector3(pub Vector3<Complex64>);

impl fmt::Debug for CVector3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.0[0], self.0[1], self.0[2])
    }
}

impl CVector3 {
    pub fn new(z1: Complex64, z2: Complex64, z3: Complex64) -> Self {
        Self(Vector3::new(z1, z2, z3))
    }

    pub fn from_re(z1: f64, z2: f64, z3: f64) -> Self {
        Self::new(z1.into(), z2.into(), z3.into())
    }

    pub fn z1(&self) -> Complex64 {
        self.0[0]
    }

    pub fn z2(&self) -> Complex64 {
        self.0[1]
    }

    pub fn z3(&self) -> Complex64 {
        self.0[2]
    }

    /// Squared Euclidean norm of the coordinates.
    pub fn euclid_norm_sq(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self(self.0 * s)
    }

    /// `<z,z>`, real up to rounding.
    pub fn form_norm(&self) -> f64 {
        hermitian_form(self, self).re
    }

    /// Rescales a positive vector to `<c,c> = 1`.
    pub fn normalized_polar(&self, tol: &Tolerance) -> Result<Self> {
        match classify_vector(self, tol)? {
            PointClass::Positive => Ok(Self(self.0 / Complex64::from(self.form_norm().sqrt()))),
            _ => Err(Error::NotPolar),
        }
    }
}

/// `<z,w> = z1 conj(w1) + z2 conj(w2) - z3 conj(w3)`.
pub fn hermitian_form(z: &CVector3, w: &CVector3) -> Complex64 {
    z.0[0] * w.0[0].conj() + z.0[1] * w.0[1].conj() - z.0[2] * w.0[2].conj()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointClass {
    Negative,
    Null,
    Positive,
}

pub fn classify_vector(z: &CVector3, tol: &Tolerance) -> Result<PointClass> {
    let scale = z.euclid_norm_sq();
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    let q = z.form_norm();
    Ok(if q.abs() <= tol.null * scale {
        PointClass::Null
    } else if q < 0.0 {
        PointClass::Negative
    } else {
        PointClass::Positive
    })
}

/// Bergman distance between two interior points.
pub fn bergman_distance(z: &CVector3, w: &CVector3, tol: &Tolerance) -> Result<f64> {
    for v in [z, w] {
        if classify_vector(v, tol)? != PointClass::Negative {
            return Err(Error::NotInteriorPoint);
        }
    }
    let zw = hermitian_form(z, w);
    let cosh_sq = zw.norm_sqr() / (z.form_norm() * w.form_norm());
    Ok(2.0 * cosh_sq.max(1.0).sqrt().acosh())
}

/// Distance between two ultra-parallel (or boundary-tangent) complex
/// geodesics given by polar vectors.
pub fn chain_distance(c1: &CVector3, c2: &CVector3, tol: &Tolerance) -> Result<f64> {
    let a = c1.normalized_polar(tol)?;
    let b = c2.normalized_polar(tol)?;
    let x = hermitian_form(&a, &b).norm();
    if x < 1.0 - tol.geo {
        return Err(Error::ChainsIntersect(x));
    }
    if x <= 1.0 + TANGENCY_SLACK {
        return Ok(0.0);
    }
    Ok(2.0 * x.acosh())
}

/// A holomorphic isometry of the complex hyperbolic plane, represented by
/// any matrix in its projective class.
#[derive(Clone, Copy, PartialEq)]
pub struct Isometry(pub Matrix3<Complex64>);

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Isometry[")?;
        for i in 0..3 {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}, {}, {}", self.0[(i, 0)], self.0[(i, 1)], self.0[(i, 2)])?;
        }
        f.write_str("]")
    }
}

/// `J = diag(1, 1, -1)`.
pub fn form_matrix() -> Matrix3<Complex64> {
    Matrix3::from_diagonal(&Vector3::new(1.0.into(), 1.0.into(), (-1.0).into()))
}

impl Isometry {
    pub fn identity() -> Self {
        Self(Matrix3::identity())
    }

    pub fn from_rows(rows: [[Complex64; 3]; 3]) -> Self {
        Self(Matrix3::from_fn(|i, j| rows[i][j]))
    }

    pub fn from_diagonal(d: [Complex64; 3]) -> Self {
        Self(Matrix3::from_diagonal(&Vector3::new(d[0], d[1], d[2])))
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }

    pub fn apply(&self, z: &CVector3) -> CVector3 {
        CVector3(self.0 * z.0)
    }

    pub fn determinant(&self) -> Complex64 {
        self.0.determinant()
    }

    pub fn inverse(&self) -> Result<Self> {
        self.0.try_inverse().map(Self).ok_or(Error::Singular)
    }

    /// Inverse of an isometry as `J M^* J / lambda`, where `M^* J M = lambda J`.
    /// Exact up to rounding in the entries, unlike an LU solve, which loses
    /// accuracy on the badly conditioned matrices of long words.
    pub fn form_inverse(&self) -> Result<Self> {
        let (lambda, _) = self.form_residual();
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::Singular);
        }
        let j = form_matrix();
        Ok(Self(j * self.0.adjoint() * j / Complex64::from(lambda)))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self(self.0 * s)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(), |acc, _| acc * *self)
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// A determinant below the rounding error of its own evaluation
    /// (about `eps * n^3` for entries of size `n`) is treated as zero.
    /// Isometries far from the identity have large entries but `|det|`
    /// of order one, so a tolerance-relative test would reject them.
    fn is_singular(&self) -> bool {
        let det = self.determinant().norm();
        let n = self.max_abs();
        det == 0.0 || !det.is_finite() || det <= 16.0 * f64::EPSILON * n * n * n
    }

    /// Divides by the principal cube root of the determinant, giving a
    /// representative of determinant 1.
    pub fn det_normalized(&self) -> Result<Self> {
        if self.is_singular() {
            return Err(Error::Singular);
        }
        let root = self.determinant().powf(1.0 / 3.0);
        Ok(Self(self.0 / root))
    }

    /// `|det|^(1/3)`. For an isometry this is read off `M^* J M = lambda J`
    /// as `sqrt(lambda)`, which keeps full relative accuracy when the
    /// entries are large; the determinant itself does not.
    pub fn modulus(&self) -> Result<f64> {
        let (lambda, _) = self.form_residual();
        if lambda > 0.0 && lambda.is_finite() {
            return Ok(lambda.sqrt());
        }
        if self.is_singular() {
            return Err(Error::Singular);
        }
        Ok(self.determinant().norm().cbrt())
    }

    /// Scales to `|det| = 1`, leaving the phase alone.
    pub fn unit_normalized(&self) -> Result<Self> {
        let k = self.modulus()?;
        Ok(Self(self.0 / Complex64::from(k)))
    }

    /// For `M^* J M = lambda J`, returns `(lambda, max |M^* J M / lambda - J|)`.
    /// A holomorphic isometry has `lambda > 0` and a residual near zero.
    pub fn form_residual(&self) -> (f64, f64) {
        let j = form_matrix();
        let k = self.0.adjoint() * j * self.0;
        let lambda = (k[(0, 0)].re + k[(1, 1)].re - k[(2, 2)].re) / 3.0;
        if lambda <= 0.0 {
            return (lambda, f64::INFINITY);
        }
        let residual = (k / Complex64::from(lambda) - j).iter().map(|z| z.norm()).fold(0.0, f64::max);
        (lambda, residual)
    }

    /// Maximum entrywise distance to `s * I`.
    pub fn distance_to_scalar(&self, s: Complex64) -> f64 {
        (self.0 - Matrix3::identity() * s).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Mul for Isometry {
    type Output = Isometry;

    fn mul(self, rhs: Isometry) -> Isometry {
        Isometry(self.0 * rhs.0)
    }
}

impl Mul<&Isometry> for &Isometry {
    type Output = Isometry;

    fn mul(self, rhs: &Isometry) -> Isometry {
        Isometry(self.0 * rhs.0)
    }
}

/// Equality in PU(2,1): `a = lambda b` for some nonzero complex `lambda`,
/// with the residual measured relative to the largest entry of `a`.
///
/// No determinant normalization happens first. Long words have entries in
/// the thousands and their determinants carry errors of order `1e-7` even
/// when every entry is accurate to the last few bits; rescaling by such a
/// determinant would swamp the comparison.
pub fn projective_equal(a: &Isometry, b: &Isometry, tol: &Tolerance) -> Result<bool> {
    if a.is_singular() || b.is_singular() {
        return Err(Error::Singular);
    }
    let num: Complex64 = b.0.iter().zip(a.0.iter()).map(|(x, y)| x.conj() * y).sum();
    let den: f64 = b.0.iter().map(|x| x.norm_sqr()).sum();
    let lambda = num / den;
    let residual = (a.0 - b.0 * lambda).iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(residual <= tol.mat * a.max_abs())
}

/// The minimal complex reflection of order `n` in the complex geodesic with
/// polar vector `c`:
/// `z -> -z + (1 - mu) <z,c>/<c,c> c`, `mu = exp(2 pi i / n)`.
///
/// The returned representative satisfies `iota^n = (-1)^n I` exactly.
pub fn reflection_matrix(c: &CVector3, n: u32, tol: &Tolerance) -> Result<Isometry> {
    if n < 2 {
        return Err(Error::BadOrder(n));
    }
    if classify_vector(c, tol)? != PointClass::Positive {
        return Err(Error::NotPolar);
    }
    let mu = unit_root(n, 1);
    let k = (Complex64::from(1.0) - mu) / c.form_norm();
    let j = [1.0, 1.0, -1.0];
    let m = Matrix3::from_fn(|r, s| {
        let delta = if r == s { 1.0 } else { 0.0 };
        Complex64::from(-delta) + k * c.0[r] * c.0[s].conj() * j[s]
    });
    Ok(Isometry(m))
}
