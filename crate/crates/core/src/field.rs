//! Assembly of the physical vector fields: `E`, `B = -(i/k) curl E`,
//! the gradient tensor `grad_i E_j`, energy densities and a paraxial
//! divergence diagnostic.
//!
//! The electric field of the mode is
//!
//! ```text
//! E = E0 (w0/k) { k alpha U, k beta U, i (alpha dU/dx + beta dU/dy) } e^{ikz}
//! ```
//!
//! and everything else follows analytically from the mode jet: with
//! `W = U e^{ikz}` the longitudinal component is
//! `E_z = i (E0 w0 / k)(alpha dW/dx + beta dW/dy)` because the plane-wave
//! factor carries no transverse dependence, so one second-order jet of `W`
//! yields `E`, `grad E` and (through the curl) `B` in a single evaluation.
//!
//! Conventions: time dependence `e^{-i omega t}` with `omega = c k`, hence
//! `B = -(i/k) curl E`; Gaussian units, so `E` and `B` are commensurate
//! and energy densities are `c |E|^2 / 8 pi` and `c |B|^2 / 8 pi` with a
//! configurable `c` (1 in the reduced units used by the CLI). Only global
//! phases depend on the time convention; every reported magnitude is
//! convention-free.

use crate::beam::{BeamParams, CartPoint};
#[cfg(not(feature = "std"))]
use crate::math::FloatExt;
use crate::math::{norm_sqr_mat, norm_sqr_vec};
use crate::mode::mode_jet;
use crate::{CMat3, CVec3, Complex};

/// The full field content at one point: `E`, `B` and the gradient tensor
/// `grad_e[i][j] = d E_j / d x_i` (plane-wave factor included).
///
/// On the axis of a beam with `|m| >= 2` the electric entries are exact
/// zeros while `b` and `grad_e` are not — the content of the hollow-beam
/// refutation.
#[derive(Debug, Clone, Copy)]
pub struct FieldSample {
    pub e: CVec3,
    pub b: CVec3,
    pub grad_e: CMat3,
}

/// Electric and magnetic energy densities `c |E|^2 / 8 pi`, `c |B|^2 / 8 pi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyDensities {
    pub electric: f64,
    pub magnetic: f64,
}

/// Evaluates `E`, `B` and `grad E` in one pass from the mode jet.
pub fn field_sample(beam: &BeamParams, pt: &CartPoint) -> FieldSample {
    let w = mode_jet(beam, pt).with_plane_wave(beam.k(), pt.z);
    let alpha = beam.alpha();
    let beta = beam.beta();
    let transverse_scale = beam.e0() * beam.w0();
    let longitudinal_scale = Complex::new(0.0, beam.e0() * beam.w0() / beam.k());

    let e = [
        transverse_scale * alpha * w.u,
        transverse_scale * beta * w.u,
        longitudinal_scale * (alpha * w.du[0] + beta * w.du[1]),
    ];

    let mut grad_e = [[Complex::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        grad_e[i][0] = transverse_scale * alpha * w.du[i];
        grad_e[i][1] = transverse_scale * beta * w.du[i];
        grad_e[i][2] = longitudinal_scale * (alpha * w.d2u[0][i] + beta * w.d2u[1][i]);
    }

    let curl = [
        grad_e[1][2] - grad_e[2][1],
        grad_e[2][0] - grad_e[0][2],
        grad_e[0][1] - grad_e[1][0],
    ];
    let b_scale = Complex::new(0.0, -1.0 / beam.k());
    let b = [b_scale * curl[0], b_scale * curl[1], b_scale * curl[2]];

    FieldSample { e, b, grad_e }
}

/// Complex electric field vector at a point.
pub fn electric_field(beam: &BeamParams, pt: &CartPoint) -> CVec3 {
    field_sample(beam, pt).e
}

/// Complex magnetic field vector, `B = -(i/k) curl E`.
pub fn magnetic_field(beam: &BeamParams, pt: &CartPoint) -> CVec3 {
    field_sample(beam, pt).b
}

/// Gradient tensor of the electric field; entry `(i, j)` is `d E_j / d x_i`
/// including the derivative of the `e^{ikz}` factor.
pub fn grad_electric(beam: &BeamParams, pt: &CartPoint) -> CMat3 {
    field_sample(beam, pt).grad_e
}

/// Energy densities of a sample in Gaussian units with light speed `c`.
pub fn energy_densities(sample: &FieldSample, c: f64) -> EnergyDensities {
    let scale = c / (8.0 * core::f64::consts::PI);
    EnergyDensities {
        electric: scale * norm_sqr_vec(&sample.e),
        magnetic: scale * norm_sqr_vec(&sample.b),
    }
}

/// Electric energy density split into transverse (`x`, `y`) and
/// longitudinal (`z`) contributions. The two add up to
/// [`EnergyDensities::electric`].
pub fn electric_energy_split(sample: &FieldSample, c: f64) -> (f64, f64) {
    let scale = c / (8.0 * core::f64::consts::PI);
    let transverse = scale * (sample.e[0].norm_sqr() + sample.e[1].norm_sqr());
    let longitudinal = scale * sample.e[2].norm_sqr();
    (transverse, longitudinal)
}

/// `div E = trace(grad E)`; exactly zero for a transverse plane wave.
pub fn divergence(grad_e: &CMat3) -> Complex {
    grad_e[0][0] + grad_e[1][1] + grad_e[2][2]
}

/// Paraxial consistency diagnostic: `|div E| / (k max|E|)` with the
/// maximum taken over the waist plane. The paraxial mode does not satisfy
/// Gauss's law exactly; the residual shrinks as `(k w0)^{-2}`.
pub fn divergence_residual(beam: &BeamParams, pt: &CartPoint) -> f64 {
    let div = divergence(&field_sample(beam, pt).grad_e);
    let (_, peak) = max_over_waist_radius(beam, 3.0 * beam.w0(), |s| norm_sqr_vec(&s.e));
    div.norm() / (beam.k() * peak.sqrt())
}

/// Maximum of `f(sample)` over the waist-plane radius `r in [0, r_max]`
/// (at `phi = 0`, `z = 0`, where the magnitudes of these beams attain
/// their azimuthal maximum). A coarse scan brackets the global maximum
/// among the `p + 1` radial lobes; golden-section search then refines the
/// bracket to `1e-6 w0`. Returns `(argmax radius, maximum value)`.
pub fn max_over_waist_radius<F>(beam: &BeamParams, r_max: f64, f: F) -> (f64, f64)
where
    F: Fn(&FieldSample) -> f64,
{
    let eval = |r: f64| f(&field_sample(beam, &CartPoint::new(r, 0.0, 0.0)));
    const COARSE: usize = 512;
    let mut best_i = 0;
    let mut best = f64::NEG_INFINITY;
    for i in 0..=COARSE {
        let r = r_max * i as f64 / COARSE as f64;
        let v = eval(r);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let lo = r_max * best_i.saturating_sub(1) as f64 / COARSE as f64;
    let hi = r_max * (best_i + 1).min(COARSE) as f64 / COARSE as f64;

    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let tol = 1e-6 * beam.w0();
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = eval(c);
    let mut fd = eval(d);
    while (b - a).abs() > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = eval(d);
        }
    }
    let r_best = 0.5 * (a + b);
    let v_best = eval(r_best);
    if v_best >= best {
        (r_best, v_best)
    } else {
        (r_max * best_i as f64 / COARSE as f64, best)
    }
}

/// Frobenius norm of the gradient tensor; a scalar measure of how much
/// field structure survives where `E` itself vanishes.
pub fn grad_norm(sample: &FieldSample) -> f64 {
    norm_sqr_mat(&sample.grad_e).sqrt()
}
