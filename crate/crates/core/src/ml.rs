//! One-, two-, and three-parameter Mittag-Leffler functions and the
//! Prabhakar convolution kernel e^γ_{α,ρ,ω}(t) = t^{ρ-1} E^γ_{α,ρ}(ω t^α).
//!
//! Series summation is binary64 with compensated accumulation; the adaptive
//! tail rule stops once three consecutive terms drop below the requested
//! tolerance relative to the partial sum. Arguments with |z| > 50 are
//! rejected rather than served by asymptotic expansions.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special::{recip_gamma, KahanSum};

/// Default series tolerance used where the caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-13;

/// Hard cap on series terms before reporting non-convergence.
pub const TERM_CAP: usize = 2000;

/// Largest |z| served by direct summation.
pub const MAX_ABS_Z: f64 = 50.0;

/// Parameter tuple (α, ρ, γ, ω) of a Prabhakar kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    /// Mittag-Leffler order α > 0.
    pub alpha: f64,
    /// Power-weight order ρ.
    pub rho: f64,
    /// Prabhakar exponent γ (may be zero or negative).
    pub gamma: f64,
    /// Frequency parameter ω, units t^{-α}.
    pub omega: Complex64,
}

impl KernelSpec {
    pub fn new(alpha: f64, rho: f64, gamma: f64, omega: Complex64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidOrder("alpha must be positive and finite"));
        }
        if !rho.is_finite() || !gamma.is_finite() || !omega.is_finite() {
            return Err(Error::InvalidOrder("kernel parameters must be finite"));
        }
        Ok(Self { alpha, rho, gamma, omega })
    }

    /// Real-ω convenience constructor.
    pub fn real(alpha: f64, rho: f64, gamma: f64, omega: f64) -> Result<Self> {
        Self::new(alpha, rho, gamma, Complex64::new(omega, 0.0))
    }

    /// Same kernel with ρ shifted by `delta`.
    pub fn shift_rho(&self, delta: f64) -> Self {
        Self { rho: self.rho + delta, ..*self }
    }
}

/// Outcome of a truncated series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    /// Upper-bound estimate of the truncation tail magnitude.
    pub est_error: f64,
    pub terms_used: usize,
}

/// Rising factorial (γ)_k = γ(γ+1)...(γ+k-1), with (γ)_0 = 1.
///
/// Overflow to ±∞ is permitted.
pub fn pochhammer(gamma: f64, k: usize) -> f64 {
    let mut p = 1.0;
    for j in 0..k {
        p *= gamma + j as f64;
    }
    p
}

/// Three-parameter Mittag-Leffler function E^γ_{α,ρ}(z).
///
/// Sums Σ_k (γ)_k z^k / (Γ(αk+ρ) k!) until three consecutive terms fall
/// below `tol·max(1, |partial sum|)`; the reported `est_error` is those three
/// magnitudes divided by (1 - r) with the last term ratio r clamped to 0.99.
pub fn ml3(alpha: f64, rho: f64, gamma: f64, z: Complex64, tol: f64) -> Result<EvalResult> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::InvalidOrder("alpha must be positive and finite"));
    }
    if !(tol > 0.0) {
        return Err(Error::OutOfDomain("tol must be positive"));
    }
    let abs_z = z.norm();
    if abs_z > MAX_ABS_Z {
        return Err(Error::OutOfSupportedRange { abs_z });
    }

    let mut acc = KahanSum::new();
    // c_k = (γ)_k / k!, z_pow = z^k, updated incrementally.
    let mut coef = 1.0_f64;
    let mut z_pow = Complex64::new(1.0, 0.0);
    let mut small_streak = 0usize;
    let mut streak_sum = 0.0_f64;
    let mut prev_mag = 0.0_f64;
    let mut last_ratio = 0.0_f64;

    for k in 0..TERM_CAP {
        let term = z_pow * (coef * recip_gamma(alpha * k as f64 + rho));
        acc.add(term);

        let mag = term.norm();
        if mag < tol * acc.value().norm().max(1.0) {
            if small_streak > 0 && prev_mag > 0.0 {
                last_ratio = mag / prev_mag;
            } else {
                last_ratio = 0.0;
            }
            small_streak += 1;
            streak_sum += mag;
            if small_streak == 3 {
                let r = last_ratio.min(0.99);
                return Ok(EvalResult {
                    value: acc.value(),
                    est_error: streak_sum / (1.0 - r),
                    terms_used: k + 1,
                });
            }
        } else {
            small_streak = 0;
            streak_sum = 0.0;
        }
        prev_mag = mag;

        coef *= (gamma + k as f64) / (k as f64 + 1.0);
        z_pow *= z;
    }
    Err(Error::NonConvergence { terms: TERM_CAP })
}

/// Two-parameter Mittag-Leffler function E_{α,ρ}(z) = E^1_{α,ρ}(z).
pub fn ml2(alpha: f64, rho: f64, z: Complex64, tol: f64) -> Result<EvalResult> {
    ml3(alpha, rho, 1.0, z, tol)
}

/// One-parameter Mittag-Leffler function E_α(z) = E^1_{α,1}(z).
pub fn ml1(alpha: f64, z: Complex64, tol: f64) -> Result<EvalResult> {
    ml3(alpha, 1.0, 1.0, z, tol)
}

/// Prabhakar kernel e^γ_{α,ρ,ω}(t) = t^{ρ-1} E^γ_{α,ρ}(ω t^α) at t > 0.
///
/// Pointwise evaluation requires ρ > 0; for ρ ≤ 0 the kernel only makes
/// sense under an integral sign and is rejected here.
pub fn prabhakar_kernel(spec: &KernelSpec, t: f64) -> Result<Complex64> {
    if spec.rho <= 0.0 {
        return Err(Error::InvalidOrder("prabhakar kernel needs rho > 0"));
    }
    if !(t > 0.0) {
        return Err(Error::OutOfDomain("kernel evaluation needs t > 0"));
    }
    let e = ml3(
        spec.alpha,
        spec.rho,
        spec.gamma,
        spec.omega * t.powf(spec.alpha),
        DEFAULT_TOL,
    )?;
    Ok(e.value * t.powf(spec.rho - 1.0))
}

/// Running integral of the kernel: ∫₀ᵗ e^γ_{α,ρ,ω}(τ) dτ = t^ρ E^γ_{α,ρ+1}(ω t^α).
pub fn kernel_antiderivative(spec: &KernelSpec, t: f64) -> Result<Complex64> {
    if spec.rho <= 0.0 {
        return Err(Error::InvalidOrder("kernel antiderivative needs rho > 0"));
    }
    if !(t > 0.0) {
        return Err(Error::OutOfDomain("kernel evaluation needs t > 0"));
    }
    let e = ml3(
        spec.alpha,
        spec.rho + 1.0,
        spec.gamma,
        spec.omega * t.powf(spec.alpha),
        DEFAULT_TOL,
    )?;
    Ok(e.value * t.powf(spec.rho))
}
