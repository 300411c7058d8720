//! Beam parameters, polarization states and sample points.

use core::fmt;

use crate::math::factorial_ratio;
#[cfg(not(feature = "std"))]
use crate::math::FloatExt;
use crate::Complex;

const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

/// Transverse polarization of the beam, i.e. the coefficient pair
/// `(alpha, beta)` multiplying the x and y field components.
///
/// The spin per photon of the circular states follows
/// `sigma = -i(alpha beta* - beta alpha*)`: `SigmaMinus` carries
/// `sigma = -1`, `SigmaPlus` carries `sigma = +1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Polarization {
    /// `(1/sqrt(2), i/sqrt(2))`, spin -1.
    SigmaMinus,
    /// `(1/sqrt(2), -i/sqrt(2))`, spin +1.
    SigmaPlus,
    /// `(1, 0)`, spin 0.
    LinearX,
    /// Arbitrary normalized pair.
    Custom(Complex, Complex),
}

impl Polarization {
    /// The `(alpha, beta)` coefficient pair.
    pub fn coefficients(&self) -> (Complex, Complex) {
        match *self {
            Polarization::SigmaMinus => (
                Complex::new(FRAC_1_SQRT_2, 0.0),
                Complex::new(0.0, FRAC_1_SQRT_2),
            ),
            Polarization::SigmaPlus => (
                Complex::new(FRAC_1_SQRT_2, 0.0),
                Complex::new(0.0, -FRAC_1_SQRT_2),
            ),
            Polarization::LinearX => (Complex::new(1.0, 0.0), Complex::new(0.0, 0.0)),
            Polarization::Custom(alpha, beta) => (alpha, beta),
        }
    }
}

/// Invalid beam parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BeamError {
    /// Wavenumber must be positive.
    NonPositiveWavenumber,
    /// Waist radius must be positive.
    NonPositiveWaist,
    /// `|alpha|^2 + |beta|^2` must equal 1 within 1e-12.
    UnnormalizedPolarization,
    /// A parameter was NaN or infinite.
    NonFinite,
}

impl fmt::Display for BeamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BeamError::NonPositiveWavenumber => write!(f, "wavenumber k must be > 0"),
            BeamError::NonPositiveWaist => write!(f, "waist radius w0 must be > 0"),
            BeamError::UnnormalizedPolarization => {
                write!(f, "|alpha|^2 + |beta|^2 must equal 1 within 1e-12")
            }
            BeamError::NonFinite => write!(f, "beam parameters must be finite"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BeamError {}

/// One Laguerre-Gauss mode: amplitude, geometry, mode indices and
/// polarization. Construction validates the invariants, so every
/// `BeamParams` in circulation is usable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamParams {
    e0: f64,
    k: f64,
    w0: f64,
    p: u32,
    m: i32,
    alpha: Complex,
    beta: Complex,
}

impl BeamParams {
    /// Builds a beam, checking `k > 0`, `w0 > 0` and polarization
    /// normalization (`|alpha|^2 + |beta|^2 = 1` within 1e-12).
    pub fn new(
        e0: f64,
        k: f64,
        w0: f64,
        p: u32,
        m: i32,
        pol: Polarization,
    ) -> Result<Self, BeamError> {
        let (alpha, beta) = pol.coefficients();
        if !(e0.is_finite() && k.is_finite() && w0.is_finite())
            || !(alpha.re.is_finite() && alpha.im.is_finite())
            || !(beta.re.is_finite() && beta.im.is_finite())
        {
            return Err(BeamError::NonFinite);
        }
        if k <= 0.0 {
            return Err(BeamError::NonPositiveWavenumber);
        }
        if w0 <= 0.0 {
            return Err(BeamError::NonPositiveWaist);
        }
        if ((alpha.norm_sqr() + beta.norm_sqr()) - 1.0).abs() > 1e-12 {
            return Err(BeamError::UnnormalizedPolarization);
        }
        Ok(Self {
            e0,
            k,
            w0,
            p,
            m,
            alpha,
            beta,
        })
    }

    /// Field amplitude `E0`.
    pub fn e0(&self) -> f64 {
        self.e0
    }

    /// Wavenumber `k`.
    pub fn k(&self) -> f64 {
        self.k
    }

    /// Waist radius `w0`.
    pub fn w0(&self) -> f64 {
        self.w0
    }

    /// Radial index `p`.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Azimuthal index `m` (signed).
    pub fn m(&self) -> i32 {
        self.m
    }

    /// Polarization coefficient on x.
    pub fn alpha(&self) -> Complex {
        self.alpha
    }

    /// Polarization coefficient on y.
    pub fn beta(&self) -> Complex {
        self.beta
    }

    /// `|m|` as used in the radial factors.
    pub fn abs_m(&self) -> u32 {
        self.m.unsigned_abs()
    }

    /// Sign of `m` (`0` for `m = 0`), fixing the handedness of the
    /// azimuthal phase.
    pub fn sgn_m(&self) -> f64 {
        match self.m {
            0 => 0.0,
            m if m > 0 => 1.0,
            _ => -1.0,
        }
    }

    /// Rayleigh range `z_R = k w0^2 / 2`.
    pub fn rayleigh_range(&self) -> f64 {
        self.k * self.w0 * self.w0 / 2.0
    }

    /// Dimensionless focusing parameter `k w0`.
    pub fn kw0(&self) -> f64 {
        self.k * self.w0
    }

    /// Beam radius `w(z) = w0 sqrt(1 + z^2/z_R^2)`.
    pub fn waist_radius_at(&self, z: f64) -> f64 {
        let zeta = z / self.rayleigh_range();
        self.w0 * (1.0 + zeta * zeta).sqrt()
    }

    /// Mode normalization constant `C_p^{|m|} = sqrt(2 p! / (pi (p+|m|)!))`.
    pub fn norm_const(&self) -> f64 {
        (2.0 * factorial_ratio(self.p, self.abs_m()) / core::f64::consts::PI).sqrt()
    }
}

/// A sample point in Cartesian coordinates, beam axis along z.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CartPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl CartPoint {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    /// Origin of coordinates (the waist-plane axis point).
    pub const ORIGIN: CartPoint = CartPoint::new(0.0, 0.0, 0.0);

    /// Converts cylindrical `(r, phi, z)` to Cartesian.
    pub fn from_cylindrical(r: f64, phi: f64, z: f64) -> Self {
        Self {
            x: r * phi.cos(),
            y: r * phi.sin(),
            z,
        }
    }

    /// Transverse radius `sqrt(x^2 + y^2)`.
    pub fn radius(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn beam(pol: Polarization) -> BeamParams {
        BeamParams::new(1.0, 1.0, 10.0, 1, 2, pol).unwrap()
    }

    #[test]
    fn rejects_bad_geometry() {
        assert_eq!(
            BeamParams::new(1.0, 0.0, 1.0, 0, 0, Polarization::LinearX),
            Err(BeamError::NonPositiveWavenumber)
        );
        assert_eq!(
            BeamParams::new(1.0, 1.0, -2.0, 0, 0, Polarization::LinearX),
            Err(BeamError::NonPositiveWaist)
        );
    }

    #[test]
    fn rejects_unnormalized_polarization() {
        let pol = Polarization::Custom(Complex::new(1.0, 0.0), Complex::new(0.5, 0.0));
        assert_eq!(
            BeamParams::new(1.0, 1.0, 1.0, 0, 0, pol),
            Err(BeamError::UnnormalizedPolarization)
        );
    }

    #[test]
    fn derived_quantities() {
        let b = beam(Polarization::SigmaMinus);
        assert_eq!(b.rayleigh_range(), 50.0);
        assert_eq!(b.kw0(), 10.0);
        // C_0^0 = sqrt(2/pi)
        let b0 = BeamParams::new(1.0, 1.0, 1.0, 0, 0, Polarization::LinearX).unwrap();
        assert!((b0.norm_const() - (2.0 / core::f64::consts::PI).sqrt()).abs() < 1e-15);
        // w(z_R) = w0 sqrt(2)
        assert!((b.waist_radius_at(50.0) - 10.0 * 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn sign_helper_covers_all_cases() {
        let minus = BeamParams::new(1.0, 1.0, 1.0, 0, -3, Polarization::LinearX).unwrap();
        let zero = BeamParams::new(1.0, 1.0, 1.0, 0, 0, Polarization::LinearX).unwrap();
        assert_eq!(minus.sgn_m(), -1.0);
        assert_eq!(minus.abs_m(), 3);
        assert_eq!(zero.sgn_m(), 0.0);
    }

    #[test]
    fn cylindrical_round_trip() {
        let p = CartPoint::from_cylindrical(2.0, core::f64::consts::FRAC_PI_2, 3.0);
        assert!(p.x.abs() < 1e-15);
        assert!((p.y - 2.0).abs() < 1e-15);
        assert_eq!(p.radius(), 2.0);
    }
}
