//! The scalar LG mode `U` and its analytic Cartesian derivatives.
//!
//! The mode is evaluated through the factorization
//!
//! ```text
//! U = N(z) * s^{|m|} * exp(-(1 - i zeta) t) * L_p^{|m|}(2t)
//! ```
//!
//! with `s = x - i sgn(m) y`, `t = (x^2 + y^2) / w(z)^2` and
//! `zeta = z / z_R`. Writing the azimuthal factor as the polynomial
//! `s^{|m|}` instead of `e^{-im phi} r^{|m|}` removes the coordinate
//! singularity of cylindrical coordinates, so the mode and every
//! derivative are regular exactly on the beam axis. `N(z)` collects the
//! normalization, the `1/w^{|m|+1}` amplitude decay and the Gouy phase
//! `(2p + |m| + 1) arctan(zeta)`; the curvature phase folds into the
//! complex Gaussian exponent because `k r^2 z / (2(z^2 + z_R^2))`
//! equals `zeta t`.
//!
//! Derivatives to second order are assembled by product rule over the
//! four factors, each of which has closed-form first and second partials
//! (the Laguerre factor through the index-shift identities). No numeric
//! differentiation is involved anywhere.

use crate::beam::{BeamParams, CartPoint};
use crate::laguerre::{laguerre, laguerre_derivative, DerivOrder, LaguerreOrder};
#[cfg(not(feature = "std"))]
use crate::math::FloatExt;
use crate::math::{ZERO_C, ZERO_MAT, ZERO_VEC};
use crate::{CMat3, CVec3, Complex};

/// Value, gradient and Hessian of a complex-valued function of (x, y, z).
#[derive(Debug, Clone, Copy)]
struct Jet {
    v: Complex,
    g: CVec3,
    h: CMat3,
}

impl Jet {
    fn constant(v: Complex) -> Self {
        Self {
            v,
            g: ZERO_VEC,
            h: ZERO_MAT,
        }
    }

    /// Product rule up to second order. The upper triangle is mirrored so
    /// the Hessian stays bit-exactly symmetric.
    fn mul(&self, o: &Jet) -> Jet {
        let mut out = Jet::constant(self.v * o.v);
        for i in 0..3 {
            out.g[i] = self.g[i] * o.v + self.v * o.g[i];
        }
        for i in 0..3 {
            for j in i..3 {
                let h = self.h[i][j] * o.v
                    + self.g[i] * o.g[j]
                    + self.g[j] * o.g[i]
                    + self.v * o.h[i][j];
                out.h[i][j] = h;
                out.h[j][i] = h;
            }
        }
        out
    }
}

/// Geometry of the beam at a fixed `z`, shared by the factor jets.
struct AxialFrame {
    /// `z / z_R`.
    zeta: f64,
    /// `w(z)^2`.
    w2: f64,
    /// `d(ln w)/dz = zeta / (z_R (1 + zeta^2))`.
    lam: f64,
    /// `d lam / dz`.
    dlam: f64,
    /// `d(arctan zeta)/dz`.
    gouy_rate: f64,
    /// `d gouy_rate / dz`.
    dgouy_rate: f64,
    /// Rayleigh range.
    z_r: f64,
}

impl AxialFrame {
    fn new(beam: &BeamParams, z: f64) -> Self {
        let z_r = beam.rayleigh_range();
        let zeta = z / z_r;
        let one_pz2 = 1.0 + zeta * zeta;
        let w0 = beam.w0();
        Self {
            zeta,
            w2: w0 * w0 * one_pz2,
            lam: zeta / (z_r * one_pz2),
            dlam: (1.0 - zeta * zeta) / (z_r * z_r * one_pz2 * one_pz2),
            gouy_rate: 1.0 / (z_r * one_pz2),
            dgouy_rate: -2.0 * zeta / (z_r * z_r * one_pz2 * one_pz2),
            z_r,
        }
    }
}

/// Jet of the normalized radial argument `t = (x^2 + y^2) / w(z)^2`.
fn radial_argument_jet(frame: &AxialFrame, pt: &CartPoint) -> Jet {
    let t = (pt.x * pt.x + pt.y * pt.y) / frame.w2;
    let tx = 2.0 * pt.x / frame.w2;
    let ty = 2.0 * pt.y / frame.w2;
    let tz = -2.0 * t * frame.lam;
    let mut jet = Jet::constant(Complex::new(t, 0.0));
    jet.g = [
        Complex::new(tx, 0.0),
        Complex::new(ty, 0.0),
        Complex::new(tz, 0.0),
    ];
    let txx = 2.0 / frame.w2;
    let txz = -2.0 * tx * frame.lam;
    let tyz = -2.0 * ty * frame.lam;
    let tzz = 4.0 * t * frame.lam * frame.lam - 2.0 * t * frame.dlam;
    jet.h[0][0] = Complex::new(txx, 0.0);
    jet.h[1][1] = Complex::new(txx, 0.0);
    jet.h[0][2] = Complex::new(txz, 0.0);
    jet.h[2][0] = Complex::new(txz, 0.0);
    jet.h[1][2] = Complex::new(tyz, 0.0);
    jet.h[2][1] = Complex::new(tyz, 0.0);
    jet.h[2][2] = Complex::new(tzz, 0.0);
    jet
}

/// Jet of the vortex polynomial `s^a` with `s = x - i sgn(m) y`.
///
/// For `a = 0` this is the constant 1, so beams with `m = 0` never touch
/// negative powers; on the axis `s = 0` and every surviving entry is an
/// exact floating-point zero.
fn vortex_jet(a: u32, sgn_m: f64, pt: &CartPoint) -> Jet {
    let c = Complex::new(0.0, -sgn_m);
    let s = Complex::new(pt.x, 0.0) + c * pt.y;
    if a == 0 {
        return Jet::constant(Complex::new(1.0, 0.0));
    }
    let af = a as f64;
    let mut jet = Jet::constant(s.powu(a));
    let s_am1 = s.powu(a - 1);
    jet.g[0] = af * s_am1;
    jet.g[1] = c * af * s_am1;
    if a >= 2 {
        let coef = af * (af - 1.0) * s.powu(a - 2);
        jet.h[0][0] = coef;
        jet.h[0][1] = c * coef;
        jet.h[1][0] = c * coef;
        jet.h[1][1] = c * c * coef;
    }
    jet
}

/// Jet of the Laguerre factor `L_p^a(2t)` chained through the `t` jet.
fn laguerre_factor_jet(p: u32, a: u32, t_jet: &Jet) -> Jet {
    let order = LaguerreOrder::new(p, a);
    let u = 2.0 * t_jet.v.re;
    let l0 = laguerre(order, u);
    let l1 = laguerre_derivative(order, u, DerivOrder::First);
    let l2 = laguerre_derivative(order, u, DerivOrder::Second);
    let mut jet = Jet::constant(Complex::new(l0, 0.0));
    for i in 0..3 {
        jet.g[i] = 2.0 * l1 * t_jet.g[i];
    }
    for i in 0..3 {
        for j in 0..3 {
            jet.h[i][j] = 4.0 * l2 * t_jet.g[i] * t_jet.g[j] + 2.0 * l1 * t_jet.h[i][j];
        }
    }
    jet
}

/// Jet of `exp(-(1 - i zeta) t)`: the Gaussian envelope with the wavefront
/// curvature phase folded in.
fn gaussian_jet(frame: &AxialFrame, t_jet: &Jet) -> Jet {
    let q = Complex::new(1.0, -frame.zeta);
    let dq = Complex::new(0.0, -1.0 / frame.z_r);
    let q_grad = [ZERO_C, ZERO_C, dq];
    // exponent jet g0 = -q * t (q depends on z only, linearly)
    let mut e = Jet::constant(-q * t_jet.v);
    for i in 0..3 {
        e.g[i] = -(q * t_jet.g[i] + t_jet.v * q_grad[i]);
    }
    for i in 0..3 {
        for j in 0..3 {
            e.h[i][j] = -(q * t_jet.h[i][j] + q_grad[i] * t_jet.g[j] + t_jet.g[i] * q_grad[j]);
        }
    }
    let value = e.v.exp();
    let mut jet = Jet::constant(value);
    for i in 0..3 {
        jet.g[i] = value * e.g[i];
    }
    for i in 0..3 {
        for j in 0..3 {
            jet.h[i][j] = value * (e.g[i] * e.g[j] + e.h[i][j]);
        }
    }
    jet
}

/// Jet of the z-only factor `N(z) = C_p^{|m|} (sqrt 2)^{|m|} w^{-(|m|+1)}
/// e^{-i (2p+|m|+1) arctan(zeta)}`.
fn axial_jet(beam: &BeamParams, frame: &AxialFrame) -> Jet {
    let a = beam.abs_m();
    let psi = (2 * beam.p() + a + 1) as f64;
    let w = frame.w2.sqrt();
    let amplitude =
        beam.norm_const() * core::f64::consts::SQRT_2.powi(a as i32) / w.powi(a as i32 + 1);
    let phase = Complex::new(0.0, -psi * frame.zeta.atan()).exp();
    let value = amplitude * phase;
    let dln = Complex::new(-(a as f64 + 1.0) * frame.lam, -psi * frame.gouy_rate);
    let d2ln = Complex::new(-(a as f64 + 1.0) * frame.dlam, -psi * frame.dgouy_rate);
    let mut jet = Jet::constant(value);
    jet.g[2] = value * dln;
    jet.h[2][2] = value * (d2ln + dln * dln);
    jet
}

/// The mode value together with its first and second Cartesian partials.
///
/// `du[i]` is the derivative along axis `i`; `d2u[i][j]` the mixed second
/// partial (symmetric). `includes_plane_wave` records whether the
/// `e^{ikz}` propagation factor has been folded in: [`mode_jet`] always
/// returns the envelope alone (`false`), and the field assembly applies
/// [`ModeJet::with_plane_wave`] where the full field is needed.
#[derive(Debug, Clone, Copy)]
pub struct ModeJet {
    pub u: Complex,
    pub du: CVec3,
    pub d2u: CMat3,
    pub includes_plane_wave: bool,
}

impl ModeJet {
    /// Multiplies the jet by `e^{ikz}` evaluated at the sample's `z`,
    /// turning envelope derivatives into full-field derivatives.
    pub fn with_plane_wave(&self, k: f64, z: f64) -> ModeJet {
        let ik = Complex::new(0.0, k);
        let v = (ik * z).exp();
        let mut pw = Jet::constant(v);
        pw.g[2] = ik * v;
        pw.h[2][2] = ik * ik * v;
        let me = Jet {
            v: self.u,
            g: self.du,
            h: self.d2u,
        };
        let prod = me.mul(&pw);
        ModeJet {
            u: prod.v,
            du: prod.g,
            d2u: prod.h,
            includes_plane_wave: true,
        }
    }
}

/// Evaluates the scalar mode `U` at a point (envelope only, no `e^{ikz}`).
pub fn mode_u(beam: &BeamParams, pt: &CartPoint) -> Complex {
    let frame = AxialFrame::new(beam, pt.z);
    let t = (pt.x * pt.x + pt.y * pt.y) / frame.w2;
    let a = beam.abs_m();
    let c = Complex::new(0.0, -beam.sgn_m());
    let s = Complex::new(pt.x, 0.0) + c * pt.y;
    let vortex = s.powu(a);
    let q = Complex::new(1.0, -frame.zeta);
    let envelope = (-q * t).exp();
    let radial = laguerre(LaguerreOrder::new(beam.p(), a), 2.0 * t);
    let psi = (2 * beam.p() + a + 1) as f64;
    let w = frame.w2.sqrt();
    let amplitude =
        beam.norm_const() * core::f64::consts::SQRT_2.powi(a as i32) / w.powi(a as i32 + 1);
    let phase = Complex::new(0.0, -psi * frame.zeta.atan()).exp();
    amplitude * phase * vortex * radial * envelope
}

/// Full first/second-derivative jet of the mode at a point.
///
/// The plane-wave factor is excluded (`includes_plane_wave = false`);
/// everything here varies on the `w0`/`z_R` envelope scales.
pub fn mode_jet(beam: &BeamParams, pt: &CartPoint) -> ModeJet {
    let frame = AxialFrame::new(beam, pt.z);
    let a = beam.abs_m();
    let t_jet = radial_argument_jet(&frame, pt);
    let product = axial_jet(beam, &frame)
        .mul(&vortex_jet(a, beam.sgn_m(), pt))
        .mul(&laguerre_factor_jet(beam.p(), a, &t_jet))
        .mul(&gaussian_jet(&frame, &t_jet));
    ModeJet {
        u: product.v,
        du: product.g,
        d2u: product.h,
        includes_plane_wave: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beam::Polarization;

    fn beam(p: u32, m: i32, w0: f64) -> BeamParams {
        BeamParams::new(1.0, 1.0, w0, p, m, Polarization::SigmaMinus).unwrap()
    }

    #[test]
    fn vortex_mode_vanishes_on_axis() {
        for p in [0, 1, 6] {
            let u = mode_u(&beam(p, 2, 10.0), &CartPoint::ORIGIN);
            assert_eq!(u, ZERO_C);
        }
    }

    #[test]
    fn fundamental_mode_on_axis_value() {
        // U(0) = C_0^0 / w0 = sqrt(2/pi) / w0
        let w0 = 3.0;
        let u = mode_u(&beam(0, 0, w0), &CartPoint::ORIGIN);
        let expected = (2.0 / core::f64::consts::PI).sqrt() / w0;
        assert!((u.re - expected).abs() < 1e-15);
        assert!(u.im.abs() < 1e-18);
    }

    #[test]
    fn azimuthal_factor_matches_phase_convention() {
        // U(r, phi, z) = U(r, 0, z) e^{-i m phi}
        let b = beam(1, 2, 5.0);
        let r = 3.2;
        let z = 4.0;
        let phi = 0.71;
        let u0 = mode_u(&b, &CartPoint::from_cylindrical(r, 0.0, z));
        let uphi = mode_u(&b, &CartPoint::from_cylindrical(r, phi, z));
        let expected = u0 * Complex::new(0.0, -2.0 * phi).exp();
        assert!((uphi - expected).norm() / u0.norm() < 1e-12);
    }

    #[test]
    fn jet_value_matches_mode_u() {
        let b = beam(3, -2, 4.0);
        let pt = CartPoint::new(1.3, -0.8, 2.1);
        let jet = mode_jet(&b, &pt);
        let u = mode_u(&b, &pt);
        assert!((jet.u - u).norm() <= 1e-15 * u.norm());
        assert!(!jet.includes_plane_wave);
    }

    #[test]
    fn m2_origin_first_derivatives_vanish_second_are_structured() {
        // For |m| = 2 the first derivatives still carry one power of s;
        // the second transverse block reduces to derivatives of s^2.
        let jet = mode_jet(&beam(0, 2, 10.0), &CartPoint::ORIGIN);
        assert_eq!(jet.u, ZERO_C);
        for d in jet.du {
            assert_eq!(d, ZERO_C);
        }
        let xx = jet.d2u[0][0];
        assert!(xx.norm() > 0.0);
        assert!((jet.d2u[1][1] + xx).norm() < 1e-15 * xx.norm());
        let expected_xy = Complex::new(0.0, -1.0) * xx;
        assert!((jet.d2u[0][1] - expected_xy).norm() < 1e-15 * xx.norm());
    }

    #[test]
    fn m2_origin_curvature_value() {
        // d2u_xx(0) = 2 N L_p^2(0) = (2/w0^3) sqrt(2 (p+1)(p+2) / pi)
        for p in [0u32, 1, 6] {
            let w0 = 7.0;
            let jet = mode_jet(&beam(p, 2, w0), &CartPoint::ORIGIN);
            let pf = (p + 1) as f64 * (p + 2) as f64;
            let expected = 2.0 / w0.powi(3) * (2.0 * pf / core::f64::consts::PI).sqrt();
            assert!(
                (jet.d2u[0][0].re - expected).abs() < 1e-14 * expected,
                "p={p}"
            );
            assert!(jet.d2u[0][0].im.abs() < 1e-14 * expected);
        }
    }

    #[test]
    fn hessian_is_symmetric() {
        let b = beam(4, 3, 2.5);
        let pt = CartPoint::new(0.9, 1.7, -3.0);
        let jet = mode_jet(&b, &pt);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(jet.d2u[i][j], jet.d2u[j][i]);
            }
        }
    }

    #[test]
    fn plane_wave_factor_shifts_z_derivative() {
        let b = beam(1, 1, 3.0);
        let pt = CartPoint::new(0.4, 0.2, 1.1);
        let bare = mode_jet(&b, &pt);
        let full = bare.with_plane_wave(b.k(), pt.z);
        assert!(full.includes_plane_wave);
        let v = Complex::new(0.0, b.k() * pt.z).exp();
        // d/dz (U e^{ikz}) = (U_z + ik U) e^{ikz}
        let expected = (bare.du[2] + Complex::new(0.0, b.k()) * bare.u) * v;
        assert!((full.du[2] - expected).norm() < 1e-15 * expected.norm());
        // transverse derivatives just pick up the phase
        let expected_x = bare.du[0] * v;
        assert!((full.du[0] - expected_x).norm() < 1e-15 * expected_x.norm());
    }
}
