use std::f64::consts::PI;

use crate::error::Result;
use crate::quad::{integrate, Tolerance};

/// `int_{-1}^{1} T_n(w) g(w) dw`, integrated in `w = cos t` so the
/// band-edge factor `1/sqrt(1 - w^2)` disappears. `singular` lists interior
/// points where `g` diverges; `t = pi/2` is always a breakpoint.
pub fn moment_via_quadrature<F: Fn(f64) -> f64>(g: F, n: usize, singular: &[f64], tol: Tolerance) -> Result<f64> {
    moment_via_angular(|t| g(t.cos()) * t.sin(), n, singular, tol)
}

/// As [`moment_via_quadrature`] for an integrand given directly as
/// `phi(t) = g(cos t) sin t`.
pub fn moment_via_angular<F: Fn(f64) -> f64>(phi: F, n: usize, singular: &[f64], tol: Tolerance) -> Result<f64> {
    let mut breaks: Vec<f64> = singular.iter().map(|w| w.clamp(-1.0, 1.0).acos()).collect();
    breaks.push(0.5 * PI);
    let est = integrate(|t| (n as f64 * t).cos() * phi(t), 0.0, PI, &breaks, tol)?;
    Ok(est.value)
}
