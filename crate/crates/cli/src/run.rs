//! The three sweep commands. Points are evaluated in parallel; rows are
//! assembled and written strictly in point order, so output bytes do not
//! depend on the thread count.

use rayon::prelude::*;
use spiralfield_core::beam::{BeamParams, CartPoint, Polarization};
use spiralfield_core::field::{
    electric_energy_split, energy_densities, field_sample, max_over_waist_radius,
};
use spiralfield_core::multipole::{channel_amplitude, excitation_rate, transition_amplitude};

use crate::output::Table;
use crate::plan::{channel_labels, linspace, SweepPlan};
use crate::CliError;

/// Speed of light in the reduced Gaussian units used by the CLI.
const C_LIGHT: f64 = 1.0;

pub fn radial_profile(plan: &SweepPlan) -> Result<(), CliError> {
    let radii = linspace(plan.min, plan.max, plan.count);
    let beam = plan.beam;
    let z = plan.z;
    let w0 = beam.w0();
    let line = plan.line;
    let channels = plan.channels.clone();

    let mut columns = vec![
        "r_over_w0".to_string(),
        "I_E".to_string(),
        "I_E_transverse".to_string(),
        "I_E_longitudinal".to_string(),
        "I_M".to_string(),
    ];
    for label in channel_labels(&channels) {
        columns.push(format!("rate_{label}"));
    }
    if channels.len() >= 2 {
        columns.push("rate_total".to_string());
    }

    let mut rows: Vec<Vec<f64>> = radii
        .par_iter()
        .map(|&r_over_w0| {
            let sample = field_sample(&beam, &CartPoint::new(r_over_w0 * w0, 0.0, z));
            let dens = energy_densities(&sample, C_LIGHT);
            let (trans, long) = electric_energy_split(&sample, C_LIGHT);
            let mut row = vec![r_over_w0, dens.electric, trans, long, dens.magnetic];
            for c in &channels {
                row.push(excitation_rate(channel_amplitude(c, &sample), &line));
            }
            if channels.len() >= 2 {
                row.push(excitation_rate(transition_amplitude(&channels, &sample), &line));
            }
            row
        })
        .collect();

    if plan.normalize {
        for col in 5..columns.len() {
            let max = rows.iter().map(|r| r[col]).fold(0.0f64, f64::max);
            if max > 0.0 {
                for row in &mut rows {
                    row[col] /= max;
                }
            }
        }
    }

    Table { columns, rows }.write(&plan.out, plan.format)
}

/// Figure-1b quantity: on-axis magnetic energy density over the radial
/// peak of the electric energy density in the waist plane.
pub fn axis_to_peak_ratio(beam: &BeamParams) -> f64 {
    let axis = energy_densities(&field_sample(beam, &CartPoint::ORIGIN), C_LIGHT).magnetic;
    let (_, peak) = max_over_waist_radius(beam, 3.0 * beam.w0(), |s| {
        energy_densities(s, C_LIGHT).electric
    });
    axis / peak
}

pub fn ratio_sweep(plan: &SweepPlan) -> Result<(), CliError> {
    let kw0s = linspace(plan.min, plan.max, plan.count);
    let template = plan.beam;
    let pol = Polarization::Custom(template.alpha(), template.beta());

    let rows: Vec<Vec<f64>> = kw0s
        .par_iter()
        .map(|&kw0| {
            let beam = BeamParams::new(template.e0(), 1.0, kw0, template.p(), template.m(), pol)
                .expect("validated template with positive kw0");
            let ratio = axis_to_peak_ratio(&beam);
            vec![kw0, ratio, ratio * kw0.powi(4)]
        })
        .collect();

    let columns = vec![
        "kw0".to_string(),
        "ratio".to_string(),
        "ratio_times_kw0_4".to_string(),
    ];
    Table { columns, rows }.write(&plan.out, plan.format)
}

pub fn field_map(plan: &SweepPlan) -> Result<(), CliError> {
    let ticks = linspace(plan.min, plan.max, plan.count);
    let beam = plan.beam;
    let w0 = beam.w0();
    let z = plan.z;
    let n = plan.count;

    let rows: Vec<Vec<f64>> = (0..n * n)
        .into_par_iter()
        .map(|idx| {
            let (ix, iy) = (idx / n, idx % n);
            let (xu, yu) = (ticks[ix], ticks[iy]);
            let s = field_sample(&beam, &CartPoint::new(xu * w0, yu * w0, z));
            let abs_e = s.e.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            let abs_b = s.b.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            vec![
                xu, yu, s.e[0].re, s.e[1].re, s.e[2].re, s.b[0].re, s.b[1].re, s.b[2].re,
                abs_e, abs_b,
            ]
        })
        .collect();

    let columns = [
        "x_over_w0", "y_over_w0", "Re_Ex", "Re_Ey", "Re_Ez", "Re_Bx", "Re_By", "Re_Bz",
        "absE", "absB",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    Table { columns, rows }.write(&plan.out, plan.format)
}
