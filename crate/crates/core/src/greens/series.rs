use std::f64::consts::PI;

use num_complex::Complex64;

use crate::cheb::{t_and_u_series, MomentTable, Window};
use crate::error::{LgfError, Result};

/// Evaluators refuse `|omega| > 1 - DEFAULT_EDGE_EPS` on the cut.
pub const DEFAULT_EDGE_EPS: f64 = 1e-12;

pub(crate) fn check_on_cut(omega: f64, eps: f64, what: &'static str) -> Result<()> {
    if omega.is_nan() || omega.abs() >= 1.0 - eps {
        return Err(LgfError::Domain { what, omega });
    }
    Ok(())
}

/// `(2 - delta_n) w_n c_n`.
pub(crate) fn doubled(coeffs: &[f64], window: Window) -> Vec<f64> {
    let mut c = window.apply(coeffs);
    for v in c.iter_mut().skip(1) {
        *v *= 2.0;
    }
    c
}

/// `1/(pi sqrt(1 - w^2)) sum (2 - delta_n) c_n T_n(w)` for pre-doubled `c`.
pub(crate) fn spectral_sum(doubled: &[f64], omega: f64) -> f64 {
    let (t, _) = t_and_u_series(doubled, omega);
    t / (PI * (1.0 - omega * omega).sqrt())
}

/// `-sum (2 - delta_n) c_n [U_{n-1}(w) + i T_n(w) / sqrt(1 - w^2)]` for
/// pre-doubled `c`. The imaginary part is `-pi` times [`spectral_sum`].
pub(crate) fn green_sum(doubled: &[f64], omega: f64) -> Complex64 {
    let (t, u) = t_and_u_series(doubled, omega);
    Complex64::new(-u, -t / (1.0 - omega * omega).sqrt())
}

/// Inverse power series `sum_{n <= terms} <H^n> / omega^{n+1}` outside the
/// unit disk.
pub fn eval_power_series(moments: &MomentTable, omega: Complex64, terms: usize) -> Result<Complex64> {
    let modulus = omega.norm();
    if modulus.is_nan() || modulus <= 1.0 {
        return Err(LgfError::ConvergenceDomain { modulus });
    }
    if terms > moments.order() {
        return Err(LgfError::InsufficientOrder {
            have: moments.order(),
            need: terms,
        });
    }
    let inv = omega.inv();
    let mut acc = Complex64::new(0.0, 0.0);
    for &mu in moments.power[..=terms].iter().rev() {
        acc = acc * inv + mu;
    }
    Ok(acc * inv)
}

/// Spectral function `g(omega) = -Im G / pi` from the Chebyshev series.
pub fn eval_spectral(moments: &MomentTable, omega: f64, window: Window) -> Result<f64> {
    check_on_cut(omega, DEFAULT_EDGE_EPS, "the on-cut spectral series")?;
    Ok(spectral_sum(&doubled(&moments.floats, window), omega))
}

/// `G(omega + i0)` on the cut from the Chebyshev series.
pub fn eval_green_on_cut(moments: &MomentTable, omega: f64, window: Window) -> Result<Complex64> {
    check_on_cut(omega, DEFAULT_EDGE_EPS, "the on-cut Green series")?;
    Ok(green_sum(&doubled(&moments.floats, window), omega))
}
