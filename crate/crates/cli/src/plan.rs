//! Sweep plans: validated, self-contained descriptions of one output run.

use std::path::PathBuf;

use num_complex::Complex64;
use spiralfield_core::beam::{BeamParams, Polarization};
use spiralfield_core::multipole::{DetectorLine, Multipole};

use crate::args::{BeamArgs, ChannelArg, FormatArg, LineArgs, MapArgs, PolArg, RadialArgs, RatioArgs};
use crate::CliError;

/// What varies along the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// Radius in the plane `z = const`, in units of `w0`.
    Radial,
    /// The focusing parameter `k w0` at `z = 0`.
    Waist,
    /// A square transverse grid, both axes in units of `w0`.
    Map2d,
}

/// A validated sweep: axis, sample range, the fixed beam and detector
/// parameters, and the output destination.
#[derive(Debug, Clone)]
pub struct SweepPlan {
    pub axis: SweepAxis,
    pub min: f64,
    pub max: f64,
    pub count: usize,
    pub beam: BeamParams,
    pub z: f64,
    pub channels: Vec<Multipole>,
    pub line: DetectorLine,
    pub normalize: bool,
    pub out: PathBuf,
    pub format: FormatArg,
}

impl PolArg {
    pub fn to_polarization(self) -> Polarization {
        match self {
            PolArg::SigmaMinus => Polarization::SigmaMinus,
            PolArg::SigmaPlus => Polarization::SigmaPlus,
            PolArg::LinearX => Polarization::LinearX,
            PolArg::Custom(a, b) => Polarization::Custom(a, b),
        }
    }
}

/// Builds the beam in reduced units (`k = 1`, `w0 = kw0`).
pub fn build_beam(args: &BeamArgs, default_p: u32, default_m: i32, default_kw0: f64)
    -> Result<BeamParams, CliError>
{
    let p = args.p.unwrap_or(default_p);
    let m = args.m.unwrap_or(default_m);
    let kw0 = args.kw0.unwrap_or(default_kw0);
    if !(kw0 > 0.0) {
        return Err(CliError::Usage("--kw0 must be positive".into()));
    }
    BeamParams::new(args.e0, 1.0, kw0, p, m, args.pol.to_polarization())
        .map_err(|e| CliError::Usage(e.to_string()))
}

pub fn build_line(args: &LineArgs) -> Result<DetectorLine, CliError> {
    DetectorLine::new(args.detuning, args.gamma, args.hbar)
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn build_channels(args: &[ChannelArg]) -> Result<Vec<Multipole>, CliError> {
    args.iter()
        .map(|c| match *c {
            ChannelArg::E1(d) => Ok(Multipole::e1(d)),
            ChannelArg::M1 { m, amp } => Multipole::m1(m, amp),
            ChannelArg::E2 { m, amp } => Multipole::e2(m, amp),
        })
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn check_range(min: f64, max: f64, count: usize) -> Result<(), CliError> {
    if count < 2 {
        return Err(CliError::Usage("range COUNT must be at least 2".into()));
    }
    if !(min < max) {
        return Err(CliError::Usage("range MIN must be below MAX".into()));
    }
    Ok(())
}

pub fn radial_plan(args: &RadialArgs) -> Result<SweepPlan, CliError> {
    check_range(args.range.min, args.range.max, args.range.count)?;
    if args.range.min < 0.0 {
        return Err(CliError::Usage("radial range must start at r >= 0".into()));
    }
    Ok(SweepPlan {
        axis: SweepAxis::Radial,
        min: args.range.min,
        max: args.range.max,
        count: args.range.count,
        beam: build_beam(&args.beam, 6, 2, 10.0)?,
        z: args.z,
        channels: build_channels(&args.channels)?,
        line: build_line(&args.line)?,
        normalize: args.normalize,
        out: args.output.out.clone(),
        format: args.output.format,
    })
}

pub fn ratio_plan(args: &RatioArgs) -> Result<SweepPlan, CliError> {
    check_range(args.range.min, args.range.max, args.range.count)?;
    if args.range.min <= 0.0 {
        return Err(CliError::Usage("k w0 range must be positive".into()));
    }
    Ok(SweepPlan {
        axis: SweepAxis::Waist,
        min: args.range.min,
        max: args.range.max,
        count: args.range.count,
        // kw0 is swept; the stored beam carries p, m, e0, polarization.
        beam: build_beam(&args.beam, 6, 2, args.range.min)?,
        z: 0.0,
        channels: Vec::new(),
        line: DetectorLine::new(0.0, 2.0, 1.0).expect("fixed valid line"),
        normalize: false,
        out: args.output.out.clone(),
        format: args.output.format,
    })
}

pub fn map_plan(args: &MapArgs) -> Result<SweepPlan, CliError> {
    let count = args.grid.unwrap_or(args.range.count);
    check_range(args.range.min, args.range.max, count)?;
    Ok(SweepPlan {
        axis: SweepAxis::Map2d,
        min: args.range.min,
        max: args.range.max,
        count,
        beam: build_beam(&args.beam, 6, 2, 6.0)?,
        z: args.z,
        channels: Vec::new(),
        line: DetectorLine::new(0.0, 2.0, 1.0).expect("fixed valid line"),
        normalize: false,
        out: args.output.out.clone(),
        format: args.output.format,
    })
}

/// Label for a channel's rate column, e.g. `e2_M+1`; duplicates get a
/// numeric suffix so headers stay unique.
pub fn channel_labels(channels: &[Multipole]) -> Vec<String> {
    let mut labels: Vec<String> = channels
        .iter()
        .map(|c| match c.magnetic_number() {
            Some(m) if m >= 0 => format!("{}_M+{m}", c.kind_name()),
            Some(m) => format!("{}_M{m}", c.kind_name()),
            None => c.kind_name().to_string(),
        })
        .collect();
    for i in 0..labels.len() {
        let mut n = 1;
        for j in (i + 1)..labels.len() {
            if labels[j] == labels[i] {
                n += 1;
                labels[j] = format!("{}_{n}", labels[j]);
            }
        }
    }
    labels
}

/// Evenly spaced samples including both endpoints.
pub fn linspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    let step = (max - min) / (count - 1) as f64;
    (0..count).map(|i| min + step * i as f64).collect()
}

pub fn scalar_to_complex(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
