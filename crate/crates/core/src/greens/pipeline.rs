use num_complex::Complex64;
use rayon::prelude::*;

use super::reconstruct::{model_green_unchecked, PV_TOLERANCE};
use super::result::{GreenMeta, GreenPoint, GreenResult};
use super::series::{check_on_cut, doubled, eval_power_series, green_sum, spectral_sum, DEFAULT_EDGE_EPS};
use super::singular::{builtin_for_order, subtract_singularities, SingularModel};
use crate::cheb::{eval_t_series, MomentTable, Window};
use crate::error::{LgfError, Result};
use crate::quad::Tolerance;

/// Window used when none is requested, with or without subtraction.
pub const DEFAULT_WINDOW: Window = Window::Rectangular;

/// A Green function `G_r(omega)` ready for evaluation anywhere on the real
/// axis: power series outside the band, Chebyshev series (optionally after
/// singularity subtraction) on the cut.
#[derive(Debug, Clone)]
pub struct GreenFunction {
    moments: MomentTable,
    model: Option<SingularModel>,
    residual: Vec<f64>,
    series: Vec<f64>,
    window: Window,
    edge_eps: f64,
    tolerance: Tolerance,
}

impl GreenFunction {
    pub fn raw(moments: MomentTable, window: Window) -> Self {
        let residual = moments.floats.clone();
        Self::assemble(moments, None, residual, window)
    }

    /// Subtracts `model`, fitting its pending coefficient first if needed.
    pub fn subtracted(moments: MomentTable, model: &SingularModel, window: Window) -> Result<Self> {
        let model = model.resolve(&moments)?;
        let residual = subtract_singularities(&moments, &model).coeffs;
        Ok(Self::assemble(moments, Some(model), residual, window))
    }

    /// Subtracts the built-in model for the table's lattice and displacement.
    pub fn with_builtin(moments: MomentTable, window: Window) -> Result<Self> {
        let model = builtin_for_order(moments.lattice.family, &moments.displacement, moments.order())?;
        Self::subtracted(moments, &model, window)
    }

    /// Built-in subtraction when available, raw series otherwise.
    pub fn auto(moments: MomentTable, window: Window) -> Result<Self> {
        match Self::with_builtin(moments.clone(), window) {
            Err(LgfError::UnsupportedModel { .. }) => Ok(Self::raw(moments, window)),
            other => other,
        }
    }

    fn assemble(moments: MomentTable, model: Option<SingularModel>, residual: Vec<f64>, window: Window) -> Self {
        let series = doubled(&residual, window);
        GreenFunction {
            moments,
            model,
            residual,
            series,
            window,
            edge_eps: DEFAULT_EDGE_EPS,
            tolerance: Tolerance::new(PV_TOLERANCE, PV_TOLERANCE),
        }
    }

    pub fn with_edge_eps(mut self, eps: f64) -> Self {
        self.edge_eps = eps;
        self
    }

    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        self.tolerance = tol;
        self
    }

    pub fn moments(&self) -> &MomentTable {
        &self.moments
    }

    pub fn model(&self) -> Option<&SingularModel> {
        self.model.as_ref()
    }

    /// `h_n`, or `g_n` without a model.
    pub fn residual(&self) -> &[f64] {
        &self.residual
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn residual_tail(&self) -> f64 {
        self.residual.last().map_or(0.0, |v| v.abs())
    }

    /// `g(omega)`, zero outside the band.
    pub fn spectral(&self, omega: f64) -> Result<f64> {
        if omega.abs() > 1.0 {
            return Ok(0.0);
        }
        check_on_cut(omega, self.edge_eps, "the on-cut spectral series")?;
        let f = match &self.model {
            Some(m) => m.eval(omega)?,
            None => 0.0,
        };
        Ok(f + spectral_sum(&self.series, omega))
    }

    /// `g(cos t) sin t`, finite up to the band edges.
    pub fn spectral_angular(&self, theta: f64) -> f64 {
        let f = self.model.as_ref().map_or(0.0, |m| m.eval_angular(theta));
        f + eval_t_series(&self.series, theta.cos()) / std::f64::consts::PI
    }

    /// Interior points where the model diverges.
    pub fn singular_points(&self) -> Vec<f64> {
        self.model.as_ref().map_or_else(Vec::new, |m| m.singular_points())
    }

    /// `G(omega + i0)` on the real axis.
    pub fn green(&self, omega: f64) -> Result<Complex64> {
        if omega.abs() > 1.0 {
            return eval_power_series(&self.moments, Complex64::new(omega, 0.0), self.moments.order());
        }
        check_on_cut(omega, self.edge_eps, "the on-cut Green series")?;
        let h = green_sum(&self.series, omega);
        match &self.model {
            Some(m) => Ok(model_green_unchecked(m, omega, self.tolerance)? + h),
            None => Ok(h),
        }
    }

    /// `G(omega)` off the real axis, by the power series.
    pub fn green_complex(&self, omega: Complex64) -> Result<Complex64> {
        if omega.im == 0.0 {
            return self.green(omega.re);
        }
        eval_power_series(&self.moments, omega, self.moments.order())
    }

    pub fn evaluate(&self, omega: f64) -> GreenPoint {
        let both = self.green(omega).and_then(|g| Ok((g, self.spectral(omega)?)));
        match both {
            Ok((g, s)) => GreenPoint {
                omega,
                green: Some(g),
                spectral: Some(s),
                error: None,
            },
            Err(e) => GreenPoint {
                omega,
                green: None,
                spectral: None,
                error: Some(e.to_string()),
            },
        }
    }

    pub fn evaluate_grid(&self, omegas: &[f64]) -> GreenResult {
        let points: Vec<GreenPoint> = omegas.par_iter().map(|&w| self.evaluate(w)).collect();
        let failed = points.iter().filter(|p| p.error.is_some()).count();
        GreenResult {
            meta: GreenMeta {
                failed_points: failed,
                ..self.meta()
            },
            points,
        }
    }

    pub fn meta(&self) -> GreenMeta {
        GreenMeta {
            lattice: self.moments.lattice.family,
            z: self.moments.lattice.z,
            displacement: self.moments.displacement.coords().to_vec(),
            terms_used: self.moments.order(),
            window_beta: self.window.beta(),
            model: self.model.as_ref().map(|m| m.to_string()),
            fitted_coefficient: self
                .model
                .as_ref()
                .and_then(|m| m.fitted.as_ref())
                .and_then(|f| f.coefficient),
            residual_tail_estimate: self.residual_tail(),
            edge_eps: self.edge_eps,
            failed_points: 0,
        }
    }
}
