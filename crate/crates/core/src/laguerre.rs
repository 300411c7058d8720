//! Generalized Laguerre polynomials `L_p^a(x)` and their derivatives.
//!
//! These are the only special functions the LG mode needs: the radial
//! profile of the mode is `L_p^{|m|}(2r^2/w^2)` and the analytic field
//! gradients require its first and second derivatives.
//!
//! Evaluation uses the three-term recurrence upward in `p`,
//!
//! ```text
//! (p+1) L_{p+1}^a(x) = (2p + 1 + a - x) L_p^a(x) - (p + a) L_{p-1}^a(x)
//! ```
//!
//! which stays accurate for the index range used in beam sweeps (p up to
//! a few tens) where a direct monomial sum would start to cancel.
//! Derivatives come from the index-shift identity
//! `d/dx L_p^a(x) = -L_{p-1}^{a+1}(x)`, so they inherit the same accuracy.

/// Order of a generalized Laguerre polynomial `L_p^a`.
///
/// `p` is the polynomial degree (the beam's radial index) and `a` the
/// superscript (the beam's `|m|`). Both are nonnegative by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LaguerreOrder {
    /// Degree (radial index).
    pub p: u32,
    /// Superscript (`|m|` for LG beams).
    pub a: u32,
}

impl LaguerreOrder {
    pub const fn new(p: u32, a: u32) -> Self {
        Self { p, a }
    }
}

/// Which derivative of `L_p^a` to take; the mode jet needs at most second.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivOrder {
    First,
    Second,
}

/// Evaluates `L_p^a(x)` by the upward three-term recurrence in `p`.
///
/// Exact (to rounding) for any finite `x`; `L_0^a = 1` and
/// `L_1^a(x) = 1 + a - x` seed the recurrence.
pub fn laguerre(order: LaguerreOrder, x: f64) -> f64 {
    let a = order.a as f64;
    if order.p == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + a - x;
    for i in 1..order.p {
        let i = i as f64;
        let next = ((2.0 * i + 1.0 + a - x) * cur - (i + a) * prev) / (i + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// First or second derivative of `L_p^a` at `x`.
///
/// Uses `d/dx L_p^a(x) = -L_{p-1}^{a+1}(x)` (with `L_{-1} = 0`) applied
/// once or twice, so the result carries machine precision rather than a
/// finite-difference truncation error.
pub fn laguerre_derivative(order: LaguerreOrder, x: f64, n: DerivOrder) -> f64 {
    match n {
        DerivOrder::First => {
            if order.p == 0 {
                0.0
            } else {
                -laguerre(LaguerreOrder::new(order.p - 1, order.a + 1), x)
            }
        }
        DerivOrder::Second => {
            if order.p < 2 {
                0.0
            } else {
                laguerre(LaguerreOrder::new(order.p - 2, order.a + 2), x)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent oracle: direct monomial sum
    /// `L_p^a(x) = sum_i (-1)^i C(p+a, p-i) x^i / i!`.
    fn laguerre_monomial_sum(p: u32, a: u32, x: f64) -> f64 {
        let mut total = 0.0;
        for i in 0..=p {
            let mut binom = 1.0;
            // C(p+a, p-i) = prod_{j=1}^{p-i} (a+i+j)/j
            for j in 1..=(p - i) {
                binom *= (a + i + j) as f64 / j as f64;
            }
            let mut term = binom;
            for j in 1..=i {
                term *= -x / j as f64;
            }
            total += term;
        }
        total
    }

    #[test]
    fn degree_zero_is_one() {
        assert_eq!(laguerre(LaguerreOrder::new(0, 3), 7.2), 1.0);
    }

    #[test]
    fn degree_one_explicit() {
        // L_1^a(x) = 1 + a - x
        assert_eq!(laguerre(LaguerreOrder::new(1, 2), 1.0), 2.0);
    }

    #[test]
    fn degree_two_root() {
        // L_2^2(x) = 6 - 4x + x^2/2 has a root at x = 2
        let v = laguerre(LaguerreOrder::new(2, 2), 2.0);
        assert!(v.abs() < 1e-14, "expected root, got {v}");
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        assert_eq!(
            laguerre_derivative(LaguerreOrder::new(0, 5), 3.0, DerivOrder::First),
            0.0
        );
    }

    #[test]
    fn first_derivative_degree_one() {
        // d/dx L_1^2(x) = -L_0^3(x) = -1
        assert_eq!(
            laguerre_derivative(LaguerreOrder::new(1, 2), 1.5, DerivOrder::First),
            -1.0
        );
    }

    #[test]
    fn second_derivative_degree_two() {
        // d^2/dx^2 (6 - 4x + x^2/2) = 1
        assert_eq!(
            laguerre_derivative(LaguerreOrder::new(2, 2), 2.0, DerivOrder::Second),
            1.0
        );
    }

    #[test]
    fn recurrence_matches_monomial_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1a9);
        for p in 0..=8 {
            for a in 0..=6 {
                for _ in 0..100 {
                    let x: f64 = rng.gen_range(0.0..50.0);
                    let rec = laguerre(LaguerreOrder::new(p, a), x);
                    let sum = laguerre_monomial_sum(p, a, x);
                    let scale = rec.abs().max(sum.abs()).max(1e-30);
                    assert!(
                        (rec - sum).abs() / scale < 1e-10,
                        "p={p} a={a} x={x}: recurrence {rec} vs sum {sum}"
                    );
                }
            }
        }
    }

    #[test]
    fn first_derivative_matches_central_difference() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x2b7);
        for p in 0..=8u32 {
            for a in 0..=6u32 {
                for _ in 0..20 {
                    let x: f64 = rng.gen_range(0.5..30.0);
                    let order = LaguerreOrder::new(p, a);
                    let h = 1e-5 * x.max(1.0);
                    let fd = (laguerre(order, x + h) - laguerre(order, x - h)) / (2.0 * h);
                    let an = laguerre_derivative(order, x, DerivOrder::First);
                    if an.abs() < 1e-6 {
                        // near a root of the derivative relative error is meaningless
                        continue;
                    }
                    assert!(
                        ((fd - an) / an).abs() < 1e-6,
                        "p={p} a={a} x={x}: fd {fd} vs analytic {an}"
                    );
                }
            }
        }
    }

    #[test]
    fn positive_root_count_equals_degree() {
        // L_p^a has exactly p distinct positive roots, all below 4p + 2a + 2.
        for p in 1..=8u32 {
            for a in 0..=6u32 {
                let order = LaguerreOrder::new(p, a);
                let hi = (4 * p + 2 * a + 2) as f64;
                let n = 20_000;
                let mut sign_changes = 0;
                let mut prev = laguerre(order, hi * 1e-9);
                for i in 1..=n {
                    let x = hi * i as f64 / n as f64;
                    let cur = laguerre(order, x);
                    if prev.signum() != cur.signum() && cur != 0.0 {
                        sign_changes += 1;
                    }
                    prev = cur;
                }
                assert_eq!(sign_changes, p, "p={p} a={a}");
            }
        }
    }
}
