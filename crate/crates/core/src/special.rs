//! Gamma-function helpers and compensated summation.

use num_complex::Complex64;
use std::f64::consts::PI;

/// Gamma function for real arguments, poles mapping to ±∞.
pub fn gamma(x: f64) -> f64 {
    if x > 0.0 {
        statrs::function::gamma::gamma(x)
    } else if x == x.floor() {
        f64::INFINITY
    } else {
        // Reflection: Γ(x) Γ(1-x) = π / sin(πx).
        PI / (sin_pi(x) * statrs::function::gamma::gamma(1.0 - x))
    }
}

/// Reciprocal gamma 1/Γ(x), entire in x; exactly zero at the poles of Γ.
pub fn recip_gamma(x: f64) -> f64 {
    if x > 0.0 {
        if x > 160.0 {
            // 1/Γ underflows gracefully through the log.
            (-statrs::function::gamma::ln_gamma(x)).exp()
        } else {
            1.0 / statrs::function::gamma::gamma(x)
        }
    } else if x == x.floor() {
        0.0
    } else {
        // 1/Γ(x) = sin(πx) Γ(1-x) / π
        let g = 1.0 - x;
        if g > 160.0 {
            let ln = statrs::function::gamma::ln_gamma(g) + (sin_pi(x).abs() / PI).ln();
            ln.exp() * sin_pi(x).signum()
        } else {
            sin_pi(x) * statrs::function::gamma::gamma(g) / PI
        }
    }
}

/// sin(πx) with argument reduction so near-integer x stays accurate.
fn sin_pi(x: f64) -> f64 {
    let r = x - x.round();
    let s = (PI * r).sin();
    // round(x) odd flips the sign
    if (x.round() as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Kahan-compensated accumulator over complex terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: Complex64,
    comp: Complex64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: Complex64) {
        let y = term - self.comp;
        let t = self.sum + y;
        self.comp = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> Complex64 {
        self.sum
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_positive_values() {
        assert_relative_eq!(gamma(1.0), 1.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(5.0), 24.0, max_relative = 1e-13);
        assert_relative_eq!(gamma(0.5), PI.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn gamma_reflection_negative() {
        // Γ(-0.5) = -2√π
        assert_relative_eq!(gamma(-0.5), -2.0 * PI.sqrt(), max_relative = 1e-12);
        assert!(gamma(-2.0).is_infinite());
    }

    #[test]
    fn recip_gamma_poles_vanish() {
        assert_eq!(recip_gamma(0.0), 0.0);
        assert_eq!(recip_gamma(-1.0), 0.0);
        assert_eq!(recip_gamma(-7.0), 0.0);
    }

    #[test]
    fn recip_gamma_matches_gamma() {
        for &x in &[0.3, 1.0, 2.5, 10.0, -0.5, -1.5, -3.3] {
            assert_relative_eq!(recip_gamma(x), 1.0 / gamma(x), max_relative = 1e-12);
        }
    }

    #[test]
    fn recip_gamma_large_argument_underflows() {
        assert_eq!(recip_gamma(500.0), 0.0);
    }

    #[test]
    fn kahan_recovers_cancellation() {
        let mut acc = KahanSum::new();
        for _ in 0..10_000 {
            acc.add(Complex64::new(0.1, -0.1));
        }
        assert_relative_eq!(acc.value().re, 1000.0, max_relative = 1e-13);
        assert_relative_eq!(acc.value().im, -1000.0, max_relative = 1e-13);
    }
}
