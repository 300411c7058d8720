//! Argument definitions and the small parsers for the structured flag
//! values (`--pol`, `--range`, `--channel`).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

#[derive(Parser, Debug)]
#[command(
    name = "spiralfield",
    version,
    about = "Field structure of Laguerre-Gauss beams and the response of \
             magnetic-dipole / electric-quadrupole photodetectors",
    after_help = "Units are reduced: k = 1, so lengths are in 1/k and --kw0 \
                  sets the waist directly. SPIRALFIELD_THREADS caps the \
                  worker thread count."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Radial profile of energy densities (and detector excitation rates
    /// with --channel) in a transverse plane. Defaults: p=6 m=2 kw0=10.
    RadialProfile(RadialArgs),
    /// Axis magnetic energy over peak electric energy, swept over the
    /// focusing parameter k w0 at z=0. Defaults: p=6 m=2, kw0 in [4, 100].
    RatioSweep(RatioArgs),
    /// Real parts and magnitudes of E and B on a transverse grid.
    /// Defaults: p=6 m=2 kw0=6, 101x101 over +/- 3 w0.
    FieldMap(MapArgs),
    /// JSON comparison of the numeric on-axis amplitudes against their
    /// closed forms, with a machine-readable deviations array.
    /// Defaults: p=1 kw0=10; requires sigma-minus polarization.
    OnAxisReport(ReportArgs),
}

/// Beam flags shared by all subcommands; unset values fall back to the
/// defaults quoted in each subcommand's help line.
#[derive(Args, Debug, Clone)]
pub struct BeamArgs {
    /// Radial index p
    #[arg(long)]
    pub p: Option<u32>,
    /// Azimuthal index m (signed)
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<i32>,
    /// Focusing parameter k w0 (k is fixed at 1)
    #[arg(long)]
    pub kw0: Option<f64>,
    /// Field amplitude E0
    #[arg(long, default_value_t = 1.0)]
    pub e0: f64,
    /// Polarization: sigma-minus | sigma-plus | linear-x |
    /// custom:a_re,a_im,b_re,b_im
    #[arg(long, default_value = "sigma-minus", value_parser = parse_pol)]
    pub pol: PolArg,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Output file path
    #[arg(long)]
    pub out: PathBuf,
    /// Output format (default: csv for sweeps, json for on-axis-report)
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

#[derive(Args, Debug, Clone)]
pub struct LineArgs {
    /// Excitation detuning (rad/time)
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub detuning: f64,
    /// Transition linewidth Gamma (rad/time); the default makes the rate
    /// denominator 1 at zero detuning
    #[arg(long, default_value_t = 2.0)]
    pub gamma: f64,
    /// Value of hbar in the chosen units
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
}

#[derive(Args, Debug)]
pub struct RadialArgs {
    #[command(flatten)]
    pub beam: BeamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub line: LineArgs,
    /// Transverse plane position z
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub z: f64,
    /// Radial range in units of w0 as MIN:MAX:COUNT
    #[arg(long, value_parser = parse_range, default_value = "0:3:400")]
    pub range: RangeArg,
    /// Normalize each rate column to its maximum
    #[arg(long)]
    pub normalize: bool,
    /// Detector channel, repeatable: m1:M[:RE[,IM]] | e2:M[:RE[,IM]] |
    /// e1:xr,xi,yr,yi,zr,zi
    #[arg(long = "channel", value_parser = parse_channel)]
    pub channels: Vec<ChannelArg>,
}

#[derive(Args, Debug)]
pub struct RatioArgs {
    #[command(flatten)]
    pub beam: BeamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// k w0 range as MIN:MAX:COUNT (--kw0 is unused here)
    #[arg(long, value_parser = parse_range, default_value = "4:100:49")]
    pub range: RangeArg,
}

#[derive(Args, Debug)]
pub struct MapArgs {
    #[command(flatten)]
    pub beam: BeamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Transverse plane position z
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub z: f64,
    /// Extent of both axes in units of w0 as MIN:MAX:COUNT
    #[arg(long, value_parser = parse_range, default_value = "-3:3:101")]
    pub range: RangeArg,
    /// Samples per axis; overrides the COUNT part of --range
    #[arg(long)]
    pub grid: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    #[command(flatten)]
    pub beam: BeamArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub line: LineArgs,
    /// Magnetic-dipole reduced amplitude m^(1) (enables the rate section)
    #[arg(long, allow_negative_numbers = true)]
    pub m1: Option<f64>,
    /// Quadrupole reduced amplitude Q^(0)
    #[arg(long, allow_negative_numbers = true)]
    pub q0: Option<f64>,
    /// Quadrupole reduced amplitude Q^(1)
    #[arg(long, allow_negative_numbers = true)]
    pub q1: Option<f64>,
    /// Quadrupole reduced amplitude Q^(2)
    #[arg(long, allow_negative_numbers = true)]
    pub q2: Option<f64>,
    /// Exit with code 3 if the deviations array is non-empty
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolArg {
    SigmaMinus,
    SigmaPlus,
    LinearX,
    Custom(Complex64, Complex64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

/// A MIN:MAX:COUNT triple, validated later against the plan invariants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeArg {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

/// One detector channel as given on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelArg {
    E1([Complex64; 3]),
    M1 { m: i32, amp: Complex64 },
    E2 { m: i32, amp: Complex64 },
}

fn parse_pol(s: &str) -> Result<PolArg, String> {
    match s {
        "sigma-minus" => Ok(PolArg::SigmaMinus),
        "sigma-plus" => Ok(PolArg::SigmaPlus),
        "linear-x" => Ok(PolArg::LinearX),
        _ => {
            let rest = s
                .strip_prefix("custom:")
                .ok_or_else(|| format!("unknown polarization '{s}'"))?;
            let parts: Vec<f64> = rest
                .split(',')
                .map(|t| t.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| format!("bad custom polarization: {e}"))?;
            if parts.len() != 4 {
                return Err("custom polarization needs a_re,a_im,b_re,b_im".into());
            }
            Ok(PolArg::Custom(
                Complex64::new(parts[0], parts[1]),
                Complex64::new(parts[2], parts[3]),
            ))
        }
    }
}

fn parse_range(s: &str) -> Result<RangeArg, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err("range must be MIN:MAX:COUNT".into());
    }
    let min: f64 = parts[0].parse().map_err(|e| format!("bad MIN: {e}"))?;
    let max: f64 = parts[1].parse().map_err(|e| format!("bad MAX: {e}"))?;
    let count: usize = parts[2].parse().map_err(|e| format!("bad COUNT: {e}"))?;
    Ok(RangeArg { min, max, count })
}

fn parse_scalar(s: &str) -> Result<Complex64, String> {
    let nums: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad amplitude: {e}"))?;
    match nums.as_slice() {
        [re] => Ok(Complex64::new(*re, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        _ => Err("amplitude must be RE or RE,IM".into()),
    }
}

fn parse_channel(s: &str) -> Result<ChannelArg, String> {
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| "channel must be KIND:...".to_string())?;
    match kind {
        "e1" => {
            let nums: Vec<f64> = rest
                .split(',')
                .map(|t| t.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|e| format!("bad e1 vector: {e}"))?;
            if nums.len() != 6 {
                return Err("e1 channel needs xr,xi,yr,yi,zr,zi".into());
            }
            Ok(ChannelArg::E1([
                Complex64::new(nums[0], nums[1]),
                Complex64::new(nums[2], nums[3]),
                Complex64::new(nums[4], nums[5]),
            ]))
        }
        "m1" | "e2" => {
            let (m_str, amp) = match rest.split_once(':') {
                Some((m_str, amp_str)) => (m_str, parse_scalar(amp_str)?),
                None => (rest, Complex64::new(1.0, 0.0)),
            };
            let m: i32 = m_str
                .parse()
                .map_err(|e| format!("bad magnetic number: {e}"))?;
            let max = if kind == "m1" { 1 } else { 2 };
            if m.abs() > max {
                return Err(format!("{kind} magnetic number {m} out of range"));
            }
            if kind == "m1" {
                Ok(ChannelArg::M1 { m, amp })
            } else {
                Ok(ChannelArg::E2 { m, amp })
            }
        }
        _ => Err(format!("unknown channel kind '{kind}' (e1|m1|e2)")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polarization_forms() {
        assert_eq!(parse_pol("sigma-minus").unwrap(), PolArg::SigmaMinus);
        let c = parse_pol("custom:0.6,0,0,0.8").unwrap();
        assert_eq!(
            c,
            PolArg::Custom(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8))
        );
        assert!(parse_pol("circular").is_err());
        assert!(parse_pol("custom:1,2,3").is_err());
    }

    #[test]
    fn range_form() {
        let r = parse_range("0:3:400").unwrap();
        assert_eq!((r.min, r.max, r.count), (0.0, 3.0, 400));
        assert!(parse_range("0:3").is_err());
        assert!(parse_range("a:3:4").is_err());
    }

    #[test]
    fn channel_forms() {
        assert_eq!(
            parse_channel("e2:1").unwrap(),
            ChannelArg::E2 {
                m: 1,
                amp: Complex64::new(1.0, 0.0)
            }
        );
        assert_eq!(
            parse_channel("m1:-1:0.5,2").unwrap(),
            ChannelArg::M1 {
                m: -1,
                amp: Complex64::new(0.5, 2.0)
            }
        );
        assert!(parse_channel("m1:2").is_err());
        assert!(parse_channel("e2:3").is_err());
        assert!(parse_channel("e1:1,0,0").is_err());
        assert!(parse_channel("q:1").is_err());
    }
}
