//! Equivalence of the closed-form on-axis results with the numeric field
//! pipeline: the quadrupole amplitude table (including the vanishing
//! entries), the combined M1+E2 rate, and the inferred M1 amplitude.
//! Magnitudes are compared; the two routes agree up to one global phase.

use spiralfield_core::beam::{BeamParams, CartPoint, Polarization};
use spiralfield_core::closed_form::{
    on_axis_m1_amplitude, on_axis_quadrupole_amplitudes, on_axis_rate_m2_m1, QuadScalars,
    QuadrupoleTable,
};
use spiralfield_core::field::field_sample;
use spiralfield_core::multipole::{
    excitation_rate, m_vector, q_matrix, transition_amplitude, DetectorLine, Multipole,
};
use spiralfield_core::Complex;

fn sigma_minus(p: u32, m: i32, k: f64, w0: f64) -> BeamParams {
    BeamParams::new(1.0, k, w0, p, m, Polarization::SigmaMinus).unwrap()
}

/// Numeric quadrupole amplitude: contraction of the channel matrix with
/// the gradient tensor at the origin of a beam with azimuthal index `m`.
fn numeric_quadrupole(p: u32, beam_m: i32, k: f64, w0: f64, scalar: Complex, big_m: i32) -> Complex {
    let b = sigma_minus(p, beam_m, k, w0);
    let s = field_sample(&b, &CartPoint::ORIGIN);
    let q = q_matrix(big_m, scalar).unwrap();
    let mut t = Complex::new(0.0, 0.0);
    for i in 0..3 {
        for j in 0..3 {
            t += q[i][j] * s.grad_e[i][j];
        }
    }
    t
}

#[test]
fn quadrupole_table_matches_numeric_pipeline() {
    let q_scalars = QuadScalars::unit();
    for &(k, base_w0) in &[(1.0, 1.0), (2.3, 1.0 / 2.3)] {
        for p in [0u32, 1, 2, 6] {
            for kw0 in [6.0, 10.0, 20.0] {
                let w0 = base_w0 * kw0 / (k * base_w0);
                let reference = sigma_minus(p, 2, k, w0);
                let table = on_axis_quadrupole_amplitudes(&reference, q_scalars).unwrap();

                // largest numeric magnitude over all 25 entries
                let mut numeric = [[Complex::new(0.0, 0.0); 5]; 5];
                let mut max_abs = 0.0f64;
                for m in -2..=2 {
                    for big_m in -2..=2 {
                        let t = numeric_quadrupole(
                            p,
                            m,
                            k,
                            w0,
                            q_scalars.for_channel(big_m),
                            big_m,
                        );
                        numeric[(m + 2) as usize][(big_m + 2) as usize] = t;
                        max_abs = max_abs.max(t.norm());
                    }
                }

                for m in -2..=2 {
                    for big_m in -2..=2i32 {
                        let num = numeric[(m + 2) as usize][(big_m + 2) as usize].norm();
                        let closed = table.get(m, big_m).norm();
                        if QuadrupoleTable::NONZERO.contains(&(m, big_m)) {
                            assert!(
                                (num - closed).abs() <= 1e-8 * closed,
                                "k={k} p={p} kw0={kw0} entry ({m},{big_m}): \
                                 numeric {num} closed {closed}"
                            );
                        } else {
                            assert_eq!(closed, 0.0);
                            assert!(
                                num <= 1e-10 * max_abs,
                                "k={k} p={p} kw0={kw0} entry ({m},{big_m}) \
                                 should vanish: {num} vs max {max_abs}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn coherent_rate_matches_closed_form() {
    let line = DetectorLine::new(0.3, 1.7, 1.0).unwrap();
    for &k in &[1.0, 2.3] {
        for p in [0u32, 1, 2, 6] {
            for kw0 in [6.0, 10.0, 20.0] {
                let w0 = kw0 / k;
                let b = sigma_minus(p, 2, k, w0);
                let s = field_sample(&b, &CartPoint::ORIGIN);
                for (m1, q1) in [(1.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, -1.0 / k)] {
                    let dets = [
                        Multipole::m1(1, Complex::new(m1, 0.0)).unwrap(),
                        Multipole::e2(1, Complex::new(q1, 0.0)).unwrap(),
                    ];
                    let numeric = excitation_rate(transition_amplitude(&dets, &s), &line);
                    let closed = on_axis_rate_m2_m1(p, kw0, 1.0, m1, q1, k, &line);
                    if closed == 0.0 {
                        assert!(
                            numeric.abs() < 1e-12,
                            "p={p} kw0={kw0} destructive pair: {numeric}"
                        );
                    } else {
                        assert!(
                            ((numeric - closed) / closed).abs() < 1e-8,
                            "k={k} p={p} kw0={kw0} (m1={m1}, q1={q1}): \
                             {numeric} vs {closed}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn inferred_m1_amplitude_matches_m_vector_contraction() {
    for p in [0u32, 1, 2, 6] {
        for kw0 in [6.0, 10.0, 20.0] {
            let b = sigma_minus(p, 2, 1.0, kw0);
            let s = field_sample(&b, &CartPoint::ORIGIN);
            let m1 = 0.8;
            let v = m_vector(1, Complex::new(m1, 0.0)).unwrap();
            let numeric = (v[0] * s.b[0] + v[1] * s.b[1] + v[2] * s.b[2]).norm();
            let closed = on_axis_m1_amplitude(p, kw0, 1.0, m1);
            assert!(
                ((numeric - closed) / closed).abs() < 1e-10,
                "p={p} kw0={kw0}: {numeric} vs {closed}"
            );
        }
    }
}

#[test]
fn amplitudes_break_m_negation_symmetry() {
    // (m=2, M=1) responds strongly; the mirrored (m=-2, M=-1) does not.
    // The separation exceeds a factor of 10 by a wide margin.
    let one = Complex::new(1.0, 0.0);
    let strong = numeric_quadrupole(1, 2, 1.0, 10.0, one, 1).norm();
    let weak = numeric_quadrupole(1, -2, 1.0, 10.0, one, -1).norm();
    assert!(
        strong > 10.0 * weak,
        "asymmetry witness: |T(2,1)|={strong}, |T(-2,-1)|={weak}"
    );
}

#[test]
fn zero_crossing_of_plane_wave_like_entry() {
    // (k w0)^2 = 8p + 4 nulls the (0, -1) channel in both routes.
    let p = 1;
    let kw0 = 12.0f64.sqrt();
    let b = sigma_minus(p, 0, 1.0, kw0);
    let table = on_axis_quadrupole_amplitudes(&b, QuadScalars::unit()).unwrap();
    assert!(table.get(0, -1).norm() < 1e-14);
    let numeric = numeric_quadrupole(p, 0, 1.0, kw0, Complex::new(1.0, 0.0), -1).norm();
    let scale = numeric_quadrupole(p, 2, 1.0, kw0, Complex::new(1.0, 0.0), 1).norm();
    assert!(numeric < 1e-12 * scale, "numeric at crossing: {numeric}");
}
