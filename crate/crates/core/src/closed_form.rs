//! Analytic on-axis results, independent of the numeric field pipeline.
//!
//! For a spin `-1` beam (`alpha, beta = 1/sqrt2, i/sqrt2`) the on-axis
//! magnetic energy density of an `m = 2` mode, the table of quadrupole
//! transition amplitudes over `(m, M)`, and the combined M1+E2 rate all
//! reduce to closed forms. They serve as oracles: magnitudes are the
//! ground truth here, while overall phases follow the numeric pipeline's
//! `e^{ikz}`/Gouy conventions (the two agree up to a single global phase;
//! comparisons are made on magnitudes).

use core::fmt;

use crate::beam::BeamParams;
#[cfg(not(feature = "std"))]
use crate::math::FloatExt;
use crate::multipole::DetectorLine;
use crate::Complex;

const PI: f64 = core::f64::consts::PI;

/// The closed forms apply to the spin `-1` polarization only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolarizationMismatch;

impl fmt::Display for PolarizationMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "closed forms require sigma-minus polarization (1/sqrt2, i/sqrt2)"
        )
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PolarizationMismatch {}

/// Reduced quadrupole amplitudes `Q^(0)`, `Q^(1)`, `Q^(2)` keyed by `|M|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadScalars {
    pub q0: Complex,
    pub q1: Complex,
    pub q2: Complex,
}

impl QuadScalars {
    pub fn unit() -> Self {
        Self {
            q0: Complex::new(1.0, 0.0),
            q1: Complex::new(1.0, 0.0),
            q2: Complex::new(1.0, 0.0),
        }
    }

    /// The scalar feeding channel `M` (`|M|` selects it).
    pub fn for_channel(&self, m: i32) -> Complex {
        match m.abs() {
            0 => self.q0,
            1 => self.q1,
            _ => self.q2,
        }
    }
}

/// On-axis quadrupole transition amplitudes indexed by beam `m` (row) and
/// detector `M` (column), both in `-2..=2`. Only four entries are nonzero;
/// the rest vanish identically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadrupoleTable {
    amps: [[Complex; 5]; 5],
}

impl QuadrupoleTable {
    /// Amplitude for beam index `m` and detector channel `M`
    /// (both must lie in `-2..=2`).
    pub fn get(&self, m: i32, big_m: i32) -> Complex {
        assert!((-2..=2).contains(&m) && (-2..=2).contains(&big_m));
        self.amps[(m + 2) as usize][(big_m + 2) as usize]
    }

    /// Iterates `(m, M, amplitude)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (i32, i32, Complex)> + '_ {
        (-2..=2).flat_map(move |m| (-2..=2).map(move |big_m| (m, big_m, self.get(m, big_m))))
    }

    /// The `(m, M)` pairs with nonvanishing closed forms.
    pub const NONZERO: [(i32, i32); 4] = [(-1, -2), (0, -1), (1, 0), (2, 1)];
}

/// On-axis magnetic energy density of an `m = 2` beam:
/// `(c E0^2 / 8 pi) * 32 (p+1)(p+2) / (pi (k w0)^4)`.
pub fn on_axis_magnetic_energy(p: u32, kw0: f64, e0: f64, c: f64) -> f64 {
    let pf = (p + 1) as f64 * (p + 2) as f64;
    (c * e0 * e0 / (8.0 * PI)) * 32.0 * pf / (PI * kw0.powi(4))
}

/// The on-axis quadrupole amplitude table for a spin `-1` beam with the
/// given `p`, `k`, `w0`, `E0` (the beam's own `m` is irrelevant: the table
/// spans all beam indices in `-2..=2`).
pub fn on_axis_quadrupole_amplitudes(
    beam: &BeamParams,
    q: QuadScalars,
) -> Result<QuadrupoleTable, PolarizationMismatch> {
    let alpha = beam.alpha();
    let beta = beam.beta();
    let inv_sqrt2 = core::f64::consts::FRAC_1_SQRT_2;
    if (alpha - Complex::new(inv_sqrt2, 0.0)).norm() > 1e-12
        || (beta - Complex::new(0.0, inv_sqrt2)).norm() > 1e-12
    {
        return Err(PolarizationMismatch);
    }

    let p = beam.p() as f64;
    let k = beam.k();
    let w0 = beam.w0();
    let kw0 = beam.kw0();
    let e0 = beam.e0();
    let i = Complex::new(0.0, 1.0);
    let sqrt_pi = PI.sqrt();

    let mut amps = [[Complex::new(0.0, 0.0); 5]; 5];

    // (m, M) = (-1, -2)
    amps[1][0] = i * 4.0 * (2.0 * p + 2.0).sqrt() / (sqrt_pi * w0) * e0 * q.q2;
    // (m, M) = (0, -1)
    amps[2][1] = Complex::new(
        2.0 * (8.0 * p + 4.0 - kw0 * kw0) / (k * w0 * w0 * sqrt_pi),
        0.0,
    ) * e0
        * q.q1;
    // (m, M) = (1, 0)
    amps[3][2] = i
        * (4.0 * (p + 1.0).sqrt() / (3.0 * PI).sqrt())
        * ((8.0 * p + 8.0 - 3.0 * kw0 * kw0) / (k * k * w0.powi(3)))
        * e0
        * q.q0;
    // (m, M) = (2, 1)
    amps[4][3] = Complex::new(
        8.0 * ((p + 1.0) * (p + 2.0)).sqrt() / (sqrt_pi * k * w0 * w0),
        0.0,
    ) * e0
        * q.q1;

    Ok(QuadrupoleTable { amps })
}

/// On-axis excitation rate of the coherent M1(M=1) + E2(M=1) pair for an
/// `m = 2` beam:
/// `E0^2 * 64 (p+1)(p+2) / (hbar^2 sqrt(dw^2 + G^2/4) pi (k w0)^4) * |m1 + k q1|^2`.
pub fn on_axis_rate_m2_m1(
    p: u32,
    kw0: f64,
    e0: f64,
    m1: f64,
    q1: f64,
    k: f64,
    line: &DetectorLine,
) -> f64 {
    let pf = (p + 1) as f64 * (p + 2) as f64;
    let coupling = m1 + k * q1;
    e0 * e0 * 64.0 * pf / (line.rate_denominator() * PI * kw0.powi(4)) * coupling * coupling
}

/// Magnitude of the on-axis M1(M=1) amplitude for an `m = 2` beam,
/// `8 sqrt((p+1)(p+2)) / (sqrt(pi) (k w0)^2) * E0 * m1`. Inferred from the
/// coherent-rate structure; the numeric check in the test suite pins it
/// against `m-vector . B(0)`.
pub fn on_axis_m1_amplitude(p: u32, kw0: f64, e0: f64, m1: f64) -> f64 {
    let pf = (p + 1) as f64 * (p + 2) as f64;
    8.0 * pf.sqrt() / (PI.sqrt() * kw0 * kw0) * e0 * m1
}
