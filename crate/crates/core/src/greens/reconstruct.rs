use std::f64::consts::PI;

use num_complex::Complex64;

use super::series::{check_on_cut, doubled, green_sum, spectral_sum, DEFAULT_EDGE_EPS};
use super::singular::SingularModel;
use crate::cheb::Window;
use crate::error::Result;
use crate::quad::{pv_cosine_kernel, Tolerance};

/// Target for the principal-value quadrature.
pub const PV_TOLERANCE: f64 = 1e-9;

/// `g(omega) = f(omega) + h(omega)` with the window applied to `h` only.
pub fn reconstruct_spectral(model: &SingularModel, h: &[f64], omega: f64, window: Window) -> Result<f64> {
    check_on_cut(omega, DEFAULT_EDGE_EPS, "the reconstructed spectral function")?;
    let f = model.eval(omega)?;
    Ok(f + spectral_sum(&doubled(h, window), omega))
}

/// `F(omega) = P int f(nu) / (omega - nu) dnu - i pi f(omega)`.
pub fn model_green(model: &SingularModel, omega: f64, tol: Tolerance) -> Result<Complex64> {
    check_on_cut(omega, DEFAULT_EDGE_EPS, "the model Green function")?;
    model_green_unchecked(model, omega, tol)
}

pub(crate) fn model_green_unchecked(model: &SingularModel, omega: f64, tol: Tolerance) -> Result<Complex64> {
    if model.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let f = model.eval(omega)?;
    // f singular at nu = 0 means a log singularity at t = pi/2
    let breaks: Vec<f64> = model.singular_points().iter().map(|p| p.acos()).collect();
    let pv = pv_cosine_kernel(|t| model.eval_angular(t), omega, &breaks, tol)?;
    Ok(Complex64::new(pv.value, -PI * f))
}

/// `G = F + H` on the cut: `F` from quadrature of the model, `H` from the
/// Chebyshev series of the residual.
pub fn real_part_reconstruct(model: &SingularModel, h: &[f64], omega: f64, window: Window) -> Result<Complex64> {
    real_part_reconstruct_with(model, h, omega, window, Tolerance::new(PV_TOLERANCE, PV_TOLERANCE))
}

pub fn real_part_reconstruct_with(
    model: &SingularModel,
    h: &[f64],
    omega: f64,
    window: Window,
    tol: Tolerance,
) -> Result<Complex64> {
    check_on_cut(omega, DEFAULT_EDGE_EPS, "the reconstructed Green function")?;
    let big_h = green_sum(&doubled(h, window), omega);
    Ok(model_green(model, omega, tol)? + big_h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::{eval_u_series, TransformKind, TransformPair};

    #[test]
    fn zero_residual_gives_model() {
        let m = SingularModel::new(vec![TransformPair::new(TransformKind::Constant, 0.5)], "c");
        let g = reconstruct_spectral(&m, &[0.0; 5], 0.2, Window::Rectangular).unwrap();
        assert_eq!(g, 0.5);
    }

    #[test]
    fn zero_model_is_green_series() {
        let h = [0.2, 0.0, -0.1, 0.05, 0.01];
        let a = real_part_reconstruct(&SingularModel::zero(), &h, 0.3, Window::Rectangular).unwrap();
        let b = green_sum(&doubled(&h, Window::Rectangular), 0.3);
        assert_eq!(a, b);
    }

    #[test]
    fn chain_delta_like_has_no_real_part() {
        let m = SingularModel::new(vec![TransformPair::unit(TransformKind::DeltaLike)], "chain");
        let g = real_part_reconstruct(&m, &[0.0], 0.5, Window::Rectangular).unwrap();
        assert!(g.re.abs() < 1e-12);
        assert!((g.im + 1.0 / 0.75f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn model_pv_matches_its_series() {
        // the log form has f_n ~ 1/n, so its U series converges slowly but
        // reaches 1e-6 by a few thousand terms away from omega = 0
        let pair = TransformPair::unit(TransformKind::Log);
        let m = SingularModel::new(vec![pair], "log");
        let omega = 0.4;
        let mut c = pair.coefficients(40000);
        for v in c.iter_mut().skip(1) {
            *v *= 2.0;
        }
        let series = -eval_u_series(&c, omega);
        let f = model_green(&m, omega, Tolerance::new(1e-11, 1e-11)).unwrap();
        assert!((f.re - series).abs() < 1e-4, "{} vs {}", f.re, series);
    }
}
