//! Ultra-parallel `[m1, m2, 0; n1, n2, n3]` triangles and the reflection
//! groups they generate, in the standard frame: `C3` is the unit circle
//! chain and `C1`, `C2` are vertical chains over `phi1 = r2 e^{i theta}` and
//! `phi2 = -r1 e^{-i theta}`, with `theta = (pi - alpha) / 2`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::heisenberg::{chain_polar, ChainRep};
use crate::projective::{chain_distance, hermitian_form, reflection_matrix, CVector3, Isometry};
use crate::tolerance::Tolerance;

/// Right-hand side `(r1^2 + r2^2 + r3^2 - 1) / (2 r1 r2 r3)` of the
/// existence criterion `cos(alpha) < rhs`.
pub fn existence_rhs(r1: f64, r2: f64, r3: f64) -> Result<f64> {
    for r in [r1, r2, r3] {
        if r.is_nan() || r < 1.0 {
            return Err(Error::BadRadius(r));
        }
    }
    Ok((r1 * r1 + r2 * r2 + r3 * r3 - 1.0) / (2.0 * r1 * r2 * r3))
}

/// `r = cosh(m / 2)`.
pub fn radius_of(m: f64) -> f64 {
    (m / 2.0).cosh()
}

/// Inverse of [`radius_of`] for `r >= 1`.
pub fn distance_of(r: f64) -> f64 {
    2.0 * r.acosh()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TriangleParams {
    pub m1: f64,
    pub m2: f64,
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
    pub alpha: f64,
}

impl TriangleParams {
    pub fn new(m1: f64, m2: f64, n1: u32, n2: u32, n3: u32, alpha: f64) -> Result<Self> {
        for m in [m1, m2] {
            if !(m >= 0.0 && m.is_finite()) {
                return Err(Error::BadParameter(format!("distance {m} must be finite and >= 0")));
            }
        }
        for n in [n1, n2, n3] {
            if n < 2 {
                return Err(Error::BadOrder(n));
            }
        }
        if !(alpha > 0.0 && alpha < TAU) {
            return Err(Error::BadParameter(format!("angular invariant {alpha} outside (0, 2pi)")));
        }
        Ok(Self { m1, m2, n1, n2, n3, alpha })
    }

    /// The `[m, m, 0; 3, 3, 2]` family.
    pub fn symmetric_332(m: f64, alpha: f64) -> Result<Self> {
        Self::new(m, m, 3, 3, 2, alpha)
    }

    pub fn m3(&self) -> f64 {
        0.0
    }

    pub fn r1(&self) -> f64 {
        radius_of(self.m1)
    }

    pub fn r2(&self) -> f64 {
        radius_of(self.m2)
    }

    pub fn theta(&self) -> f64 {
        (PI - self.alpha) / 2.0
    }

    pub fn orders(&self) -> [u32; 3] {
        [self.n1, self.n2, self.n3]
    }
}

#[derive(Debug, Clone)]
pub struct TriangleGroup {
    pub params: TriangleParams,
    /// Polar vectors of `C1, C2, C3`.
    pub polars: [CVector3; 3],
    /// Reflections `iota_k = reflection_matrix(c_k, n_k)`.
    pub gens: [Isometry; 3],
}

impl TriangleGroup {
    /// Foot of the vertical chain `C1`.
    pub fn phi1(&self) -> Complex64 {
        Complex64::from_polar(self.params.r2(), self.params.theta())
    }

    /// Foot of the vertical chain `C2`.
    pub fn phi2(&self) -> Complex64 {
        -Complex64::from_polar(self.params.r1(), -self.params.theta())
    }

    /// Foot of the vertical chain of generator `k` (1 or 2).
    pub fn center(&self, k: u8) -> Complex64 {
        match k {
            1 => self.phi1(),
            _ => self.phi2(),
        }
    }

    pub fn gen(&self, k: u8) -> &Isometry {
        &self.gens[usize::from(k - 1)]
    }

    pub fn order(&self, k: u8) -> u32 {
        self.params.orders()[usize::from(k - 1)]
    }

    /// `[dist(C2,C3), dist(C3,C1), dist(C1,C2)]`, i.e. `[m1, m2, m3]`.
    pub fn chain_distances(&self, tol: &Tolerance) -> Result<[f64; 3]> {
        let [c1, c2, c3] = &self.polars;
        Ok([chain_distance(c2, c3, tol)?, chain_distance(c3, c1, tol)?, chain_distance(c1, c2, tol)?])
    }

    pub fn angular_invariant(&self, tol: &Tolerance) -> Result<f64> {
        let [c1, c2, c3] = &self.polars;
        angular_invariant(c1, c2, c3, tol)
    }
}

pub fn build_triangle(params: &TriangleParams, tol: &Tolerance) -> Result<TriangleGroup> {
    let p = TriangleParams::new(params.m1, params.m2, params.n1, params.n2, params.n3, params.alpha)?;
    let rhs = existence_rhs(p.r1(), p.r2(), 1.0)?;
    // with m3 = 0 the right-hand side is at least 1 and cos(alpha) < 1 on (0, 2pi)
    if p.alpha.cos() >= rhs && rhs < 1.0 {
        return Err(Error::NoSuchTriangle);
    }
    let theta = p.theta();
    let phi1 = Complex64::from_polar(p.r2(), theta);
    let phi2 = -Complex64::from_polar(p.r1(), -theta);
    let polars = [
        chain_polar(&ChainRep::Vertical { foot: phi1 }),
        chain_polar(&ChainRep::Vertical { foot: phi2 }),
        CVector3::from_re(0.0, 1.0, 0.0),
    ];
    let gens = [
        reflection_matrix(&polars[0], p.n1, tol)?,
        reflection_matrix(&polars[1], p.n2, tol)?,
        reflection_matrix(&polars[2], p.n3, tol)?,
    ];
    Ok(TriangleGroup { params: p, polars, gens })
}

/// `arg(<c3,c2> <c1,c3> <c2,c1>)` reduced to `[0, 2pi)`, computed on
/// normalised polar vectors.
pub fn angular_invariant(c1: &CVector3, c2: &CVector3, c3: &CVector3, tol: &Tolerance) -> Result<f64> {
    let c1 = c1.normalized_polar(tol)?;
    let c2 = c2.normalized_polar(tol)?;
    let c3 = c3.normalized_polar(tol)?;
    let product = hermitian_form(&c3, &c2) * hermitian_form(&c1, &c3) * hermitian_form(&c2, &c1);
    if product.norm() <= tol.geo {
        return Err(Error::DegenerateTriangle);
    }
    let a = product.arg();
    Ok(if a < 0.0 { a + TAU } else { a })
}

/// Signed difference of two angles, in `(-pi, pi]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    if d > PI {
        d - TAU
    } else {
        d
    }
}
