//! Finite-difference derivatives with Richardson extrapolation.
//!
//! This module is a verification instrument: tests and the deviations
//! report use it to check the analytic jets and field gradients. It is
//! never part of the production field path.
//!
//! All estimators are central stencils, whose truncation error expands in
//! even powers of the step, so each Richardson level removes one power of
//! `h^2`. The returned error estimate is the difference between the two
//! most extrapolated values; with a single level no estimate is possible
//! and infinity is returned.

use core::fmt;

use crate::math::{ZERO_MAT, ZERO_VEC};
use crate::{beam::CartPoint, CMat3, CVec3, Complex};

const MAX_LEVELS: u32 = 5;

/// Step configuration for the central-difference stencils.
///
/// `base_step` is the largest step; each Richardson level halves it. The
/// default `1e-4 / k` balances truncation against cancellation for fields
/// carrying the `e^{ikz}` factor; derivative checks of the slowly varying
/// envelope alone work better with a step nearer the waist scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdScheme {
    base_step: f64,
    richardson_levels: u32,
}

/// Invalid scheme or a step too small for the point's magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumDiffError {
    /// `base_step` must be positive and finite.
    BadStep,
    /// `richardson_levels` must lie in `1..=5`.
    BadLevels,
    /// The finest step drowns in rounding at this point's coordinate scale.
    StepUnderflow,
}

impl fmt::Display for NumDiffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumDiffError::BadStep => write!(f, "base step must be positive and finite"),
            NumDiffError::BadLevels => write!(f, "richardson levels must be in 1..=5"),
            NumDiffError::StepUnderflow => {
                write!(f, "step underflows the point's coordinate scale")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for NumDiffError {}

impl FdScheme {
    pub fn new(base_step: f64, richardson_levels: u32) -> Result<Self, NumDiffError> {
        if !(base_step > 0.0) || !base_step.is_finite() {
            return Err(NumDiffError::BadStep);
        }
        if richardson_levels < 1 || richardson_levels > MAX_LEVELS {
            return Err(NumDiffError::BadLevels);
        }
        Ok(Self {
            base_step,
            richardson_levels,
        })
    }

    /// Default scheme for a field oscillating as `e^{ikz}`: step `1e-4/k`,
    /// three Richardson levels.
    pub fn for_wavenumber(k: f64) -> Self {
        Self {
            base_step: 1e-4 / k,
            richardson_levels: 3,
        }
    }

    pub fn base_step(&self) -> f64 {
        self.base_step
    }

    pub fn richardson_levels(&self) -> u32 {
        self.richardson_levels
    }

    fn step_at_level(&self, level: u32) -> f64 {
        self.base_step / (1u64 << level) as f64
    }

    /// The finest step must still move every coordinate by many ulps.
    fn check_point_scale(&self, pt: &CartPoint) -> Result<(), NumDiffError> {
        let h_min = self.step_at_level(self.richardson_levels - 1);
        for c in [pt.x, pt.y, pt.z] {
            if c.abs() * f64::EPSILON * 64.0 > h_min {
                return Err(NumDiffError::StepUnderflow);
            }
        }
        Ok(())
    }
}

/// Richardson table over complex samples `d[l] = D(h/2^l)`, error in `h^2`.
/// Returns the most extrapolated value and the difference to the previous
/// extrapolant as the error estimate.
fn richardson(samples: &mut [Complex]) -> (Complex, f64) {
    let n = samples.len();
    let mut last_diag = samples[n - 1];
    let mut prev_diag = samples[0];
    for j in 1..n {
        let weight = (1u64 << (2 * j)) as f64; // 4^j
        for l in (j..n).rev() {
            samples[l] = (weight * samples[l] - samples[l - 1]) / (weight - 1.0);
        }
        prev_diag = if j == n - 1 { samples[n - 2] } else { prev_diag };
        last_diag = samples[n - 1];
    }
    let err = if n >= 2 {
        (last_diag - prev_diag).norm()
    } else {
        f64::INFINITY
    };
    (last_diag, err)
}

fn shifted(pt: &CartPoint, axis: usize, delta: f64) -> CartPoint {
    let mut q = *pt;
    match axis {
        0 => q.x += delta,
        1 => q.y += delta,
        _ => q.z += delta,
    }
    q
}

/// Gradient of a complex scalar: the 3-vector of first partials.
pub fn fd_scalar_gradient<F>(
    f: F,
    pt: &CartPoint,
    scheme: &FdScheme,
) -> Result<(CVec3, f64), NumDiffError>
where
    F: Fn(&CartPoint) -> Complex,
{
    scheme.check_point_scale(pt)?;
    let levels = scheme.richardson_levels as usize;
    let mut grad = ZERO_VEC;
    let mut worst = 0.0f64;
    for axis in 0..3 {
        let mut samples = [Complex::new(0.0, 0.0); MAX_LEVELS as usize];
        for l in 0..levels {
            let h = scheme.step_at_level(l as u32);
            let fp = f(&shifted(pt, axis, h));
            let fm = f(&shifted(pt, axis, -h));
            samples[l] = (fp - fm) / (2.0 * h);
        }
        let (value, err) = richardson(&mut samples[..levels]);
        grad[axis] = value;
        worst = worst.max(err);
    }
    Ok((grad, worst))
}

/// Hessian of a complex scalar via second central differences.
pub fn fd_scalar_hessian<F>(
    f: F,
    pt: &CartPoint,
    scheme: &FdScheme,
) -> Result<(CMat3, f64), NumDiffError>
where
    F: Fn(&CartPoint) -> Complex,
{
    scheme.check_point_scale(pt)?;
    let levels = scheme.richardson_levels as usize;
    let f0 = f(pt);
    let mut hess = ZERO_MAT;
    let mut worst = 0.0f64;
    for i in 0..3 {
        let mut samples = [Complex::new(0.0, 0.0); MAX_LEVELS as usize];
        for l in 0..levels {
            let h = scheme.step_at_level(l as u32);
            let fp = f(&shifted(pt, i, h));
            let fm = f(&shifted(pt, i, -h));
            samples[l] = (fp - 2.0 * f0 + fm) / (h * h);
        }
        let (value, err) = richardson(&mut samples[..levels]);
        hess[i][i] = value;
        worst = worst.max(err);
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            let mut samples = [Complex::new(0.0, 0.0); MAX_LEVELS as usize];
            for l in 0..levels {
                let h = scheme.step_at_level(l as u32);
                let fpp = f(&shifted(&shifted(pt, i, h), j, h));
                let fpm = f(&shifted(&shifted(pt, i, h), j, -h));
                let fmp = f(&shifted(&shifted(pt, i, -h), j, h));
                let fmm = f(&shifted(&shifted(pt, i, -h), j, -h));
                samples[l] = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
            }
            let (value, err) = richardson(&mut samples[..levels]);
            hess[i][j] = value;
            hess[j][i] = value;
            worst = worst.max(err);
        }
    }
    Ok((hess, worst))
}

/// Gradient tensor of a complex vector field; entry `(i, j)` holds
/// `d f_j / d x_i`.
pub fn fd_gradient<F>(
    f: F,
    pt: &CartPoint,
    scheme: &FdScheme,
) -> Result<(CMat3, f64), NumDiffError>
where
    F: Fn(&CartPoint) -> CVec3,
{
    scheme.check_point_scale(pt)?;
    let levels = scheme.richardson_levels as usize;
    let mut grad = ZERO_MAT;
    let mut worst = 0.0f64;
    for axis in 0..3 {
        let mut samples = [[Complex::new(0.0, 0.0); MAX_LEVELS as usize]; 3];
        for l in 0..levels {
            let h = scheme.step_at_level(l as u32);
            let fp = f(&shifted(pt, axis, h));
            let fm = f(&shifted(pt, axis, -h));
            for j in 0..3 {
                samples[j][l] = (fp[j] - fm[j]) / (2.0 * h);
            }
        }
        for j in 0..3 {
            let (value, err) = richardson(&mut samples[j][..levels]);
            grad[axis][j] = value;
            worst = worst.max(err);
        }
    }
    Ok((grad, worst))
}

/// Curl of a complex vector field: the antisymmetric contraction of
/// [`fd_gradient`].
pub fn fd_curl<F>(f: F, pt: &CartPoint, scheme: &FdScheme) -> Result<(CVec3, f64), NumDiffError>
where
    F: Fn(&CartPoint) -> CVec3,
{
    let (g, err) = fd_gradient(f, pt, scheme)?;
    let curl = [
        g[1][2] - g[2][1],
        g[2][0] - g[0][2],
        g[0][1] - g[1][0],
    ];
    Ok((curl, 2.0 * err))
}
