//! Vector electromagnetic structure of paraxial Laguerre-Gauss beams.
//!
//! This crate evaluates the full field content of an LG beam — the complex
//! electric field `E`, the magnetic field `B` obtained from Faraday's law,
//! and the gradient tensor `∇E` — everywhere in space, including exactly on
//! the beam axis where the azimuthal phase factor makes naive cylindrical
//! evaluation singular. On top of the fields it models detectors that couple
//! through magnetic-dipole (M1) and electric-quadrupole (E2) transitions,
//! which respond on the axis of a "hollow" beam where an electric-dipole
//! detector sees nothing.
//!
//! The crate is `no_std`-compatible (disable the default `std` feature;
//! float math then comes from `libm`). It performs no allocation and no IO;
//! the companion `spiralfield` crate carries the CLI and file formats.
//!
//! Modules:
//!
//! * [`laguerre`] — generalized Laguerre polynomials and derivatives.
//! * [`beam`] — beam parameters, polarization, Cartesian sample points.
//! * [`mode`] — the scalar LG mode `U` and its analytic first/second
//!   Cartesian derivatives ("mode jet"), regular through the axis.
//! * [`field`] — assembly of `E`, `B`, `∇E`, energy densities and a
//!   paraxial divergence diagnostic.
//! * [`multipole`] — E1/M1/E2 matrix elements, transition amplitudes and
//!   excitation rates.
//! * [`closed_form`] — the analytic on-axis results used as oracles against
//!   the numeric pipeline.
//! * [`numdiff`] — finite-difference derivatives with Richardson
//!   extrapolation; a verification tool, never part of the field path.

#![cfg_attr(not(feature = "std"), no_std)]

pub mod beam;
pub mod closed_form;
pub mod field;
pub mod laguerre;
pub(crate) mod math;
pub mod mode;
pub mod multipole;
pub mod numdiff;

pub use beam::{BeamParams, CartPoint, Polarization};
pub use field::FieldSample;
pub use mode::ModeJet;
pub use multipole::{AngularMomentum, DetectorLine, Multipole};

/// Complex scalar used throughout: double-precision Cartesian complex.
pub type Complex = num_complex::Complex64;

/// Complex 3-vector (field components, gradients of a scalar).
pub type CVec3 = [Complex; 3];

/// Complex 3x3 tensor; `[i][j]` stores the `(i, j)` entry.
pub type CMat3 = [[Complex; 3]; 3];
