//! Double-double arithmetic for the few matrix products whose entries cancel
//! heavily, such as commutators of large translations. Plain `f64` products
//! lose around seven digits there.

use num_complex::Complex;
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::projective::Isometry;

type C2 = Complex<TwoFloat>;

#[derive(Clone, Copy)]
struct Mat([[C2; 3]; 3]);

fn zero() -> C2 {
    Complex::new(TwoFloat::from(0.0), TwoFloat::from(0.0))
}

impl Mat {
    fn from_isometry(m: &Isometry) -> Self {
        let mut out = [[zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                let z = m.entry(i, j);
                *x = Complex::new(TwoFloat::from(z.re), TwoFloat::from(z.im));
            }
        }
        Mat(out)
    }

    fn to_isometry(self) -> Isometry {
        let rows = self.0.map(|row| row.map(|z| num_complex::Complex64::new(f64::from(z.re), f64::from(z.im))));
        Isometry::from_rows(rows)
    }

    fn mul(&self, o: &Mat) -> Mat {
        let mut out = [[zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..3).fold(zero(), |acc, k| acc + self.0[i][k] * o.0[k][j]);
            }
        }
        Mat(out)
    }

    /// Inverse through the adjugate.
    fn inverse(&self) -> Result<Mat> {
        let a = &self.0;
        let cof = |i: usize, j: usize| {
            let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
            let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
            a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]
        };
        let det = a[0][0] * cof(0, 0) + a[0][1] * cof(0, 1) + a[0][2] * cof(0, 2);
        if f64::from(det.norm_sqr()) == 0.0 {
            return Err(Error::Singular);
        }
        let mut out = [[zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = cof(j, i) / det;
            }
        }
        Ok(Mat(out))
    }
}

/// Product of the factors left to right in double-double, rounded once.
pub fn product<'a>(factors: impl IntoIterator<Item = &'a Isometry>) -> Isometry {
    let mut it = factors.into_iter();
    let Some(first) = it.next() else {
        return Isometry::identity();
    };
    it.fold(Mat::from_isometry(first), |acc, m| acc.mul(&Mat::from_isometry(m))).to_isometry()
}

/// `a^-1 b^-1 a b` in double-double, rounded once at the end.
pub fn commutator(a: &Isometry, b: &Isometry) -> Result<Isometry> {
    let (a, b) = (Mat::from_isometry(a), Mat::from_isometry(b));
    let h = a.inverse()?.mul(&b.inverse()?).mul(&a).mul(&b);
    Ok(h.to_isometry())
}
