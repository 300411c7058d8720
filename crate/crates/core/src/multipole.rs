//! Detector model: multipole matrix elements, transition amplitudes and
//! excitation rates.
//!
//! A detector transition couples to the local field through
//!
//! ```text
//! T = d . E  +  m . B  +  Q_ij  dE_j/dx_i
//! ```
//!
//! summed coherently over all supplied channels, and the excitation rate
//! is `|T|^2 / (hbar^2 sqrt(dw^2 + Gamma^2 / 4))`. The M1 and E2 matrix
//! elements are parameterized per Zeeman channel `M` with the quantization
//! axis along the beam; E1 detectors carry a raw complex dipole vector.

use core::fmt;

use crate::beam::BeamParams;
#[cfg(not(feature = "std"))]
use crate::math::FloatExt;
use crate::math::{contract, dot};
use crate::{CMat3, CVec3, Complex, FieldSample};

const SQRT_2: f64 = core::f64::consts::SQRT_2;

/// Magnetic quantum number outside the allowed range of the multipole kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MOutOfRange {
    pub kind: &'static str,
    pub m: i32,
}

impl fmt::Display for MOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "magnetic quantum number {} out of range for {}", self.m, self.kind)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for MOutOfRange {}

/// Magnetic-dipole matrix element for Zeeman channel `M`:
/// `m^{+1} = s (1, i, 0)`, `m^{-1} = s (-1, i, 0)`, `m^0 = s (0, 0, sqrt 2)`.
pub fn m_vector(m: i32, scalar: Complex) -> Result<CVec3, MOutOfRange> {
    let i = Complex::new(0.0, 1.0);
    let one = Complex::new(1.0, 0.0);
    match m {
        1 => Ok([scalar * one, scalar * i, Complex::new(0.0, 0.0)]),
        -1 => Ok([-scalar * one, scalar * i, Complex::new(0.0, 0.0)]),
        0 => Ok([
            Complex::new(0.0, 0.0),
            Complex::new(0.0, 0.0),
            scalar * SQRT_2,
        ]),
        _ => Err(MOutOfRange { kind: "M1", m }),
    }
}

/// Electric-quadrupole matrix element for Zeeman channel `M`; all five are
/// symmetric and traceless.
pub fn q_matrix(m: i32, scalar: Complex) -> Result<CMat3, MOutOfRange> {
    let i = Complex::new(0.0, 1.0);
    let o = Complex::new(0.0, 0.0);
    let one = Complex::new(1.0, 0.0);
    let rows: [[Complex; 3]; 3] = match m {
        0 => {
            let f = (2.0f64 / 3.0).sqrt();
            [
                [-f * one, o, o],
                [o, -f * one, o],
                [o, o, 2.0 * f * one],
            ]
        }
        1 => [[o, o, -one], [o, o, -i], [-one, -i, o]],
        -1 => [[o, o, one], [o, o, -i], [one, -i, o]],
        2 => [[one, i, o], [i, -one, o], [o, o, o]],
        -2 => [[one, -i, o], [-i, -one, o], [o, o, o]],
        _ => return Err(MOutOfRange { kind: "E2", m }),
    };
    let mut out = rows;
    for row in &mut out {
        for e in row {
            *e *= scalar;
        }
    }
    Ok(out)
}

/// One detector channel: the transition kind, its Zeeman index where
/// applicable, and the reduced amplitude. Constructed through the
/// checked builders so the index is always in range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multipole {
    kind: Kind,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind {
    E1 { d: CVec3 },
    M1 { m: i32, amp: Complex },
    E2 { m: i32, amp: Complex },
}

impl Multipole {
    /// Electric-dipole channel with a raw complex dipole vector.
    pub fn e1(d: CVec3) -> Self {
        Self { kind: Kind::E1 { d } }
    }

    /// Magnetic-dipole channel, `m in {-1, 0, 1}`.
    pub fn m1(m: i32, amp: Complex) -> Result<Self, MOutOfRange> {
        if m.abs() > 1 {
            return Err(MOutOfRange { kind: "M1", m });
        }
        Ok(Self { kind: Kind::M1 { m, amp } })
    }

    /// Electric-quadrupole channel, `m in {-2, ..., 2}`.
    pub fn e2(m: i32, amp: Complex) -> Result<Self, MOutOfRange> {
        if m.abs() > 2 {
            return Err(MOutOfRange { kind: "E2", m });
        }
        Ok(Self { kind: Kind::E2 { m, amp } })
    }

    /// `"e1"`, `"m1"` or `"e2"`; used for channel naming in outputs.
    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            Kind::E1 { .. } => "e1",
            Kind::M1 { .. } => "m1",
            Kind::E2 { .. } => "e2",
        }
    }

    /// The Zeeman index for M1/E2 channels; `None` for E1.
    pub fn magnetic_number(&self) -> Option<i32> {
        match self.kind {
            Kind::E1 { .. } => None,
            Kind::M1 { m, .. } | Kind::E2 { m, .. } => Some(m),
        }
    }
}

/// Spectroscopic line parameters entering the excitation-rate denominator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorLine {
    delta_omega: f64,
    gamma: f64,
    hbar: f64,
}

/// Line parameters must have positive width and positive `hbar`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineError {
    NonPositiveGamma,
    NonPositiveHbar,
    NonFinite,
}

impl fmt::Display for LineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineError::NonPositiveGamma => write!(f, "linewidth Gamma must be > 0"),
            LineError::NonPositiveHbar => write!(f, "hbar must be > 0"),
            LineError::NonFinite => write!(f, "line parameters must be finite"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for LineError {}

impl DetectorLine {
    pub fn new(delta_omega: f64, gamma: f64, hbar: f64) -> Result<Self, LineError> {
        if !(delta_omega.is_finite() && gamma.is_finite() && hbar.is_finite()) {
            return Err(LineError::NonFinite);
        }
        if gamma <= 0.0 {
            return Err(LineError::NonPositiveGamma);
        }
        if hbar <= 0.0 {
            return Err(LineError::NonPositiveHbar);
        }
        Ok(Self {
            delta_omega,
            gamma,
            hbar,
        })
    }

    pub fn delta_omega(&self) -> f64 {
        self.delta_omega
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// `hbar^2 sqrt(dw^2 + Gamma^2/4)`, the rate denominator.
    pub fn rate_denominator(&self) -> f64 {
        self.hbar
            * self.hbar
            * (self.delta_omega * self.delta_omega + self.gamma * self.gamma / 4.0).sqrt()
    }
}

/// Amplitude contributed by a single channel at a field sample.
pub fn channel_amplitude(det: &Multipole, sample: &FieldSample) -> Complex {
    match det.kind {
        Kind::E1 { d } => dot(&d, &sample.e),
        Kind::M1 { m, amp } => {
            let v = m_vector(m, amp).expect("validated at construction");
            dot(&v, &sample.b)
        }
        Kind::E2 { m, amp } => {
            let q = q_matrix(m, amp).expect("validated at construction");
            contract(&q, &sample.grad_e)
        }
    }
}

/// Coherent transition amplitude: the complex sum over all channels.
/// This is the default combination; channels driven by the same field
/// interfere, as in the `|m1 + k Q1|^2` on-axis rate.
pub fn transition_amplitude(detectors: &[Multipole], sample: &FieldSample) -> Complex {
    let mut t = Complex::new(0.0, 0.0);
    for det in detectors {
        t += channel_amplitude(det, sample);
    }
    t
}

/// Excitation rate `|T|^2 / (hbar^2 sqrt(dw^2 + Gamma^2/4))`.
pub fn excitation_rate(t: Complex, line: &DetectorLine) -> f64 {
    t.norm_sqr() / line.rate_denominator()
}

/// Incoherent alternative: rates of the individual channels added with no
/// interference. Not the default; provided for detectors whose channels
/// feed distinguishable final states.
pub fn incoherent_excitation_rate(
    detectors: &[Multipole],
    sample: &FieldSample,
    line: &DetectorLine,
) -> f64 {
    detectors
        .iter()
        .map(|d| excitation_rate(channel_amplitude(d, sample), line))
        .sum()
}

/// Spin and total angular momentum per photon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularMomentum {
    /// `sigma = -i (alpha beta* - beta alpha*)`, in `[-1, 1]`.
    pub sigma: f64,
    /// `j_z = m + sigma` in units of `hbar`.
    pub jz: f64,
}

/// Angular momentum carried per photon: spin from the polarization pair,
/// orbital `m` from the azimuthal index.
pub fn beam_angular_momentum(beam: &BeamParams) -> AngularMomentum {
    let alpha = beam.alpha();
    let beta = beam.beta();
    let sigma = (Complex::new(0.0, -1.0) * (alpha * beta.conj() - beta * alpha.conj())).re;
    AngularMomentum {
        sigma,
        jz: beam.m() as f64 + sigma,
    }
}
