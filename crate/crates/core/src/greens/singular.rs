use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cheb::{MomentTable, TransformKind, TransformPair};
use crate::error::{LgfError, Result};
use crate::lattice::{Displacement, Family};

/// Default fit window for the subdominant coefficient at `N >= 800`.
pub const DEFAULT_FIT_RANGE: (usize, usize) = (200, 800);

/// Fit window used for a table of order `order`.
pub fn default_fit_range(order: usize) -> (usize, usize) {
    if order >= DEFAULT_FIT_RANGE.1 {
        DEFAULT_FIT_RANGE
    } else {
        (order / 5, 4 * order / 5)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FittedTerm {
    /// Unit-weight form; the fitted coefficient multiplies it.
    pub form: TransformKind,
    pub range: (usize, usize),
    pub coefficient: Option<f64>,
}

/// Sum of weighted transform pairs approximating the singular part of a
/// spectral function, plus an optional least-squares fitted term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularModel {
    pub terms: Vec<TransformPair>,
    pub fitted: Option<FittedTerm>,
    pub description: String,
}

impl SingularModel {
    pub fn zero() -> Self {
        SingularModel {
            terms: Vec::new(),
            fitted: None,
            description: "none".into(),
        }
    }

    pub fn new(terms: Vec<TransformPair>, description: impl Into<String>) -> Self {
        SingularModel {
            terms,
            fitted: None,
            description: description.into(),
        }
    }

    /// Builds a model from complex phase weights. Weights on the same kind
    /// are summed first; the imaginary parts must cancel.
    pub fn from_phased(terms: &[(Complex64, TransformPair)], description: impl Into<String>) -> Result<Self> {
        let mut combined: Vec<(TransformKind, Complex64)> = Vec::new();
        for (phase, pair) in terms {
            let w = phase * pair.weight;
            match combined.iter_mut().find(|(k, _)| *k == pair.kind) {
                Some((_, acc)) => *acc += w,
                None => combined.push((pair.kind, w)),
            }
        }
        let mut out = Vec::new();
        for (kind, w) in combined {
            if w.im.abs() > 1e-12 * w.norm().max(1.0) {
                return Err(LgfError::ComplexWeight {
                    kind: kind.name(),
                    imaginary: w.im,
                });
            }
            if w.re != 0.0 {
                out.push(TransformPair::new(kind, w.re));
            }
        }
        Ok(Self::new(out, description))
    }

    pub fn with_fit(mut self, form: TransformKind, range: (usize, usize)) -> Self {
        self.fitted = Some(FittedTerm {
            form,
            range,
            coefficient: None,
        });
        self
    }

    pub fn is_zero(&self) -> bool {
        self.all_terms().is_empty()
    }

    pub fn needs_fit(&self) -> bool {
        matches!(&self.fitted, Some(f) if f.coefficient.is_none())
    }

    /// Fixed terms plus the fitted term once its coefficient is known.
    pub fn all_terms(&self) -> Vec<TransformPair> {
        let mut terms = self.terms.clone();
        if let Some(FittedTerm {
            form,
            coefficient: Some(c),
            ..
        }) = &self.fitted
        {
            terms.push(TransformPair::new(*form, *c));
        }
        terms
    }

    pub fn coefficients(&self, order: usize) -> Vec<f64> {
        let mut out = vec![0.0; order + 1];
        for pair in self.all_terms() {
            for (o, c) in out.iter_mut().zip(pair.coefficients(order)) {
                *o += c;
            }
        }
        out
    }

    pub fn coeff(&self, n: usize) -> f64 {
        self.all_terms().iter().map(|p| p.coeff(n)).sum()
    }

    pub fn eval(&self, omega: f64) -> Result<f64> {
        let mut acc = 0.0;
        for pair in self.all_terms() {
            acc += pair.eval(omega)?;
        }
        Ok(acc)
    }

    /// `f(cos t) sin t`.
    pub fn eval_angular(&self, theta: f64) -> f64 {
        self.all_terms().iter().map(|p| p.eval_angular(theta)).sum()
    }

    /// Interior points where `f` diverges.
    pub fn singular_points(&self) -> Vec<f64> {
        let mut pts: Vec<f64> = self
            .all_terms()
            .iter()
            .filter_map(|p| p.kind.singular_point())
            .collect();
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        pts
    }

    /// Resolves the fitted coefficient against `moments`; models without a
    /// pending fit are returned unchanged.
    pub fn resolve(&self, moments: &MomentTable) -> Result<SingularModel> {
        let mut out = self.clone();
        if let Some(fit) = out.fitted.as_mut() {
            if fit.coefficient.is_none() {
                let h = subtract_singularities(moments, self);
                let r = fit_subdominant(&h.coeffs, TransformPair::unit(fit.form), fit.range)?;
                fit.coefficient = Some(r.coefficient);
            }
        }
        Ok(out)
    }
}

impl std::fmt::Display for SingularModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}: [{}]", self.description, parts.join(" + "))?;
        if let Some(fit) = &self.fitted {
            match fit.coefficient {
                Some(c) => write!(
                    f,
                    " + {:.12}*{} (fitted on [{}, {}])",
                    c,
                    fit.form.name(),
                    fit.range.0,
                    fit.range.1
                )?,
                None => write!(
                    f,
                    " + c*{} (to fit on [{}, {}])",
                    fit.form.name(),
                    fit.range.0,
                    fit.range.1
                )?,
            }
        }
        Ok(())
    }
}

fn parity_sign(x: i64) -> f64 {
    if x.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `cos(pi x / 2)` for integer `x`.
fn quarter_phase(x: i64) -> f64 {
    match x.rem_euclid(4) {
        0 => 1.0,
        2 => -1.0,
        _ => 0.0,
    }
}

/// Singular model built into the crate for square and bcc.
///
/// * square: mid-band log from the saddle points `(pi,0)`, `(0,pi)` and the
///   band-edge steps from `(0,0)`, `(pi,pi)`.
/// * bcc: `ln^2` at mid-band; the `ln` coefficient is known at the origin
///   and fitted for displacements that are multiples of 4.
pub fn builtin_singular_model(lattice: Family, r: &Displacement) -> Result<SingularModel> {
    let c = r.coords();
    match lattice {
        Family::Square => {
            let (x, y) = (c[0], c[1]);
            let mut phased = vec![(
                Complex64::new(parity_sign(x) + parity_sign(y), 0.0),
                TransformPair::new(TransformKind::Log, 1.0 / PI),
            )];
            if (x + y).rem_euclid(2) == 0 {
                phased.push((
                    Complex64::new(1.0, 0.0),
                    TransformPair::new(TransformKind::Constant, 1.0 / PI),
                ));
            }
            let desc = if r.is_origin() {
                "square local"
            } else {
                "square nonlocal"
            };
            SingularModel::from_phased(&phased, desc)
        }
        Family::Bcc if r.is_origin() => Ok(SingularModel::new(
            vec![
                TransformPair::new(TransformKind::LogSquared, 2.0 / (PI * PI)),
                TransformPair::new(TransformKind::Log, 4.0 * 8f64.ln() / (PI * PI)),
            ],
            "bcc local",
        )),
        Family::Bcc if c.iter().all(|v| v.rem_euclid(4) == 0) => Ok(SingularModel::new(
            vec![TransformPair::new(TransformKind::LogSquared, 2.0 / (PI * PI))],
            "bcc nonlocal",
        )),
        Family::Bcc => {
            let phase: f64 = c.iter().map(|&v| quarter_phase(v)).product();
            let terms = if phase == 0.0 {
                Vec::new()
            } else {
                vec![TransformPair::new(TransformKind::LogSquared, 2.0 * phase / (PI * PI))]
            };
            Ok(SingularModel::new(terms, "bcc nonlocal (dominant only)"))
        }
        other => Err(LgfError::UnsupportedModel {
            lattice: other.name(),
            coords: c.to_vec(),
        }),
    }
}

/// Built-in model with its fit window set up for a table of order `order`.
pub fn builtin_for_order(lattice: Family, r: &Displacement, order: usize) -> Result<SingularModel> {
    let model = builtin_singular_model(lattice, r)?;
    let wants_fit = lattice == Family::Bcc && !r.is_origin() && r.coords().iter().all(|v| v.rem_euclid(4) == 0);
    Ok(if wants_fit {
        model.with_fit(TransformKind::Log, default_fit_range(order))
    } else {
        model
    })
}

/// Chebyshev residual `h_n = g_n - f_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub coeffs: Vec<f64>,
    /// `|h_N|`.
    pub tail: f64,
}

pub fn subtract_singularities(moments: &MomentTable, model: &SingularModel) -> Residual {
    let f = model.coefficients(moments.order());
    let coeffs: Vec<f64> = moments.floats.iter().zip(&f).map(|(g, f)| g - f).collect();
    let tail = coeffs.last().map_or(0.0, |v| v.abs());
    Residual { coeffs, tail }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub coefficient: f64,
    /// `sqrt(sum h_n^2)` over the fit window.
    pub norm_before: f64,
    /// `sqrt(sum (h_n - c phi_n)^2)` over the fit window.
    pub norm_after: f64,
}

/// Least-squares `c` minimizing `sum (h_n - c phi_n)^2` over even `n` in
/// `range`, with `phi_n` the coefficients of `form`.
pub fn fit_subdominant(h: &[f64], form: TransformPair, range: (usize, usize)) -> Result<FitResult> {
    let (lo, hi) = range;
    let degenerate = LgfError::DegenerateFit { lo, hi };
    if lo > hi || h.is_empty() {
        return Err(degenerate);
    }
    let hi_eff = hi.min(h.len() - 1);
    let phi = form.coefficients(hi_eff);
    let (mut hp, mut pp, mut hh) = (0.0, 0.0, 0.0);
    for n in (lo..=hi_eff).filter(|n| n % 2 == 0) {
        hp += h[n] * phi[n];
        pp += phi[n] * phi[n];
        hh += h[n] * h[n];
    }
    if pp == 0.0 || !pp.is_finite() {
        return Err(degenerate);
    }
    let c = hp / pp;
    let after: f64 = (lo..=hi_eff)
        .filter(|n| n % 2 == 0)
        .map(|n| (h[n] - c * phi[n]).powi(2))
        .sum();
    Ok(FitResult {
        coefficient: c,
        norm_before: hh.sqrt(),
        norm_after: after.sqrt(),
    })
}

/// Least-squares slope of `ln|h_n|` against `ln n` over even nonzero `h_n`
/// in `range`. With `log_corrected` the ordinate is `ln(|h_n| / ln n)`, so a
/// `ln(n)/n^3` tail reads as `-3`.
pub fn tail_exponent(h: &[f64], range: (usize, usize), log_corrected: bool) -> Option<f64> {
    let (lo, hi) = (range.0.max(2), range.1.min(h.len().saturating_sub(1)));
    let pts: Vec<(f64, f64)> = (lo..=hi)
        .filter(|n| n % 2 == 0 && h[*n] != 0.0)
        .map(|n| {
            let x = (n as f64).ln();
            let y = if log_corrected {
                (h[n].abs() / x).ln()
            } else {
                h[n].abs().ln()
            };
            (x, y)
        })
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (mut sxy, mut sxx) = (0.0, 0.0);
    for (x, y) in &pts {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    (sxx > 0.0).then(|| sxy / sxx)
}
