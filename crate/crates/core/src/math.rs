//! Small numeric helpers shared across the crate.
//!
//! Under `no_std` the inherent `f64` math methods are missing; `FloatExt`
//! routes them through `libm` so call sites stay identical in both builds.

use crate::{CMat3, CVec3, Complex};

#[cfg(not(feature = "std"))]
pub(crate) trait FloatExt {
    fn sqrt(self) -> f64;
    fn atan(self) -> f64;
    fn sin(self) -> f64;
    fn cos(self) -> f64;
    fn powi(self, n: i32) -> f64;
    fn hypot(self, other: f64) -> f64;
}

#[cfg(not(feature = "std"))]
impl FloatExt for f64 {
    fn sqrt(self) -> f64 {
        libm::sqrt(self)
    }
    fn atan(self) -> f64 {
        libm::atan(self)
    }
    fn sin(self) -> f64 {
        libm::sin(self)
    }
    fn cos(self) -> f64 {
        libm::cos(self)
    }
    fn powi(self, n: i32) -> f64 {
        libm::pow(self, n as f64)
    }
    fn hypot(self, other: f64) -> f64 {
        libm::hypot(self, other)
    }
}

pub(crate) const ZERO_C: Complex = Complex::new(0.0, 0.0);

pub(crate) const ZERO_VEC: CVec3 = [ZERO_C; 3];

pub(crate) const ZERO_MAT: CMat3 = [[ZERO_C; 3]; 3];

/// Plain (unconjugated) dot product `a · b`.
pub(crate) fn dot(a: &CVec3, b: &CVec3) -> Complex {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Double contraction `sum_ij a[i][j] * b[i][j]`.
pub(crate) fn contract(a: &CMat3, b: &CMat3) -> Complex {
    let mut acc = ZERO_C;
    for i in 0..3 {
        for j in 0..3 {
            acc += a[i][j] * b[i][j];
        }
    }
    acc
}

/// Squared Euclidean norm `sum_i |v[i]|^2`.
pub(crate) fn norm_sqr_vec(v: &CVec3) -> f64 {
    v[0].norm_sqr() + v[1].norm_sqr() + v[2].norm_sqr()
}

/// Squared Frobenius norm of a 3x3 complex tensor.
pub(crate) fn norm_sqr_mat(m: &CMat3) -> f64 {
    let mut acc = 0.0;
    for row in m {
        for e in row {
            acc += e.norm_sqr();
        }
    }
    acc
}

/// `p! / (p + a)!` as a float, computed as a product of reciprocals so it
/// never forms a large factorial.
pub(crate) fn factorial_ratio(p: u32, a: u32) -> f64 {
    let mut r = 1.0;
    for j in 1..=a {
        r /= (p + j) as f64;
    }
    r
}
