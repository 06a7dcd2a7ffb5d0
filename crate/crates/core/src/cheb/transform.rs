//! Analytic Chebyshev transform pairs `f(w) <-> f_n = int T_n(w) f(w) dw`.
//!
//! Every listed `f` is even in `w`, so odd-`n` coefficients are zero.

use std::f64::consts::{LN_2, PI};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LgfError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformKind {
    /// `1 / (pi sqrt(1 - w^2))`, `f_n = delta_n`.
    DeltaLike,
    /// `sqrt(1 - w^2) / pi`.
    Semicircle,
    /// `1`.
    Constant,
    /// `1 - w^2`.
    Parabolic,
    /// `ln(1/|w|) / (pi sqrt(1 - w^2))`.
    Log,
    /// `ln^2(1/|w|) / (pi sqrt(1 - w^2))`.
    LogSquared,
}

impl TransformKind {
    pub fn has_inverse_sqrt_weight(self) -> bool {
        matches!(
            self,
            TransformKind::DeltaLike | TransformKind::Log | TransformKind::LogSquared
        )
    }

    /// Interior point where `f` itself diverges.
    pub fn singular_point(self) -> Option<f64> {
        match self {
            TransformKind::Log | TransformKind::LogSquared => Some(0.0),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TransformKind::DeltaLike => "delta_like",
            TransformKind::Semicircle => "semicircle",
            TransformKind::Constant => "constant",
            TransformKind::Parabolic => "parabolic",
            TransformKind::Log => "log",
            TransformKind::LogSquared => "log_squared",
        }
    }
}

/// A weighted transform pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformPair {
    pub kind: TransformKind,
    pub weight: f64,
}

impl TransformPair {
    pub fn new(kind: TransformKind, weight: f64) -> Self {
        TransformPair { kind, weight }
    }

    pub fn unit(kind: TransformKind) -> Self {
        TransformPair { kind, weight: 1.0 }
    }

    pub fn coeff(&self, n: usize) -> f64 {
        transform_coeff(*self, n)
    }

    pub fn eval(&self, omega: f64) -> Result<f64> {
        transform_eval(*self, omega)
    }

    /// `f_0 ..= f_order`, with harmonic numbers accumulated along the way.
    pub fn coefficients(&self, order: usize) -> Vec<f64> {
        if self.kind != TransformKind::LogSquared {
            return (0..=order).map(|n| self.coeff(n)).collect();
        }
        let mut out = Vec::with_capacity(order + 1);
        let mut h = 0.0; // H_{n/2 - 1}
        for n in 0..=order {
            let v = if n == 0 {
                PI * PI / 12.0 + LN_2 * LN_2
            } else if n % 2 == 1 {
                0.0
            } else {
                if n >= 4 {
                    h += 1.0 / (n / 2 - 1) as f64;
                }
                log_squared_even(n, h)
            };
            out.push(self.weight * v);
        }
        out
    }

    /// `f(cos t) sin t`: the pair in the angular variable, free of the
    /// `1/sqrt(1 - w^2)` edge factor.
    pub fn eval_angular(&self, theta: f64) -> f64 {
        let (s, c) = theta.sin_cos();
        let v = match self.kind {
            TransformKind::DeltaLike => 1.0 / PI,
            TransformKind::Semicircle => s * s / PI,
            TransformKind::Constant => s,
            TransformKind::Parabolic => s * s * s,
            TransformKind::Log => -c.abs().ln() / PI,
            TransformKind::LogSquared => {
                let l = c.abs().ln();
                l * l / PI
            }
        };
        self.weight * v
    }
}

impl fmt::Display for TransformPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12}*{}", self.weight, self.kind.name())
    }
}

/// `H_m = sum_{k=1}^m 1/k`.
pub fn harmonic(m: usize) -> f64 {
    (1..=m).rev().map(|k| 1.0 / k as f64).sum()
}

fn sign_half(n: usize) -> f64 {
    if (n / 2).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn log_squared_even(n: usize, h: f64) -> f64 {
    let nf = n as f64;
    sign_half(n) * (2.0 / (nf * nf) + (2.0 * h + 2.0 * LN_2) / nf)
}

/// Chebyshev coefficient `f_n` of a weighted pair.
pub fn transform_coeff(pair: TransformPair, n: usize) -> f64 {
    let nf = n as f64;
    let even = n.is_multiple_of(2);
    let v = match pair.kind {
        TransformKind::DeltaLike => f64::from(u8::from(n == 0)),
        TransformKind::Semicircle => match n {
            0 => 0.5,
            2 => -0.25,
            _ => 0.0,
        },
        TransformKind::Constant if even => 2.0 / (1.0 - nf * nf),
        TransformKind::Parabolic if even => 12.0 / ((1.0 - nf * nf) * (9.0 - nf * nf)),
        TransformKind::Log if n == 0 => LN_2,
        TransformKind::Log if even => sign_half(n) / nf,
        TransformKind::LogSquared if n == 0 => PI * PI / 12.0 + LN_2 * LN_2,
        TransformKind::LogSquared if even => log_squared_even(n, harmonic(n / 2 - 1)),
        _ => 0.0,
    };
    pair.weight * v
}

/// The function side `f(w)` of a weighted pair.
pub fn transform_eval(pair: TransformPair, omega: f64) -> Result<f64> {
    let domain = |what| Err(LgfError::Domain { what, omega });
    let a = omega.abs();
    if a > 1.0 || (a == 1.0 && pair.kind.has_inverse_sqrt_weight()) || omega.is_nan() {
        return domain("a Chebyshev transform pair (|omega| >= 1)");
    }
    if omega == 0.0 && pair.kind.singular_point().is_some() {
        return domain("a logarithmic transform pair (omega = 0)");
    }
    let root = (1.0 - omega * omega).sqrt();
    let v = match pair.kind {
        TransformKind::DeltaLike => 1.0 / (PI * root),
        TransformKind::Semicircle => root / PI,
        TransformKind::Constant => 1.0,
        TransformKind::Parabolic => 1.0 - omega * omega,
        TransformKind::Log => -a.ln() / (PI * root),
        TransformKind::LogSquared => {
            let l = a.ln();
            l * l / (PI * root)
        }
    };
    Ok(pair.weight * v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(kind: TransformKind) -> TransformPair {
        TransformPair::unit(kind)
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(transform_coeff(unit(TransformKind::Constant), 0), 2.0);
        assert_eq!(transform_coeff(unit(TransformKind::Log), 2), -0.5);
        assert_eq!(transform_coeff(unit(TransformKind::Semicircle), 2), -0.25);
        assert_eq!(transform_coeff(unit(TransformKind::Log), 1), 0.0);
        assert_eq!(transform_coeff(unit(TransformKind::Parabolic), 0), 4.0 / 3.0);
        assert_eq!(
            transform_coeff(TransformPair::new(TransformKind::DeltaLike, 3.0), 0),
            3.0
        );
    }

    #[test]
    fn odd_coefficients_vanish() {
        for kind in [
            TransformKind::DeltaLike,
            TransformKind::Semicircle,
            TransformKind::Constant,
            TransformKind::Parabolic,
            TransformKind::Log,
            TransformKind::LogSquared,
        ] {
            for n in (1..40).step_by(2) {
                assert_eq!(transform_coeff(unit(kind), n), 0.0);
            }
        }
    }

    #[test]
    fn sequence_matches_pointwise() {
        let pair = TransformPair::new(TransformKind::LogSquared, 0.7);
        let seq = pair.coefficients(200);
        for (n, v) in seq.iter().enumerate() {
            assert!((v - pair.coeff(n)).abs() < 1e-15, "n = {n}");
        }
    }

    #[test]
    fn function_examples() {
        assert_eq!(transform_eval(unit(TransformKind::Constant), 0.3).unwrap(), 1.0);
        assert!((transform_eval(unit(TransformKind::Semicircle), 0.0).unwrap() - 1.0 / PI).abs() < 1e-16);
        let expected = LN_2 * LN_2 / (PI * 0.75f64.sqrt());
        let got = transform_eval(unit(TransformKind::LogSquared), 0.5).unwrap();
        assert!((got - expected).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(transform_eval(unit(TransformKind::DeltaLike), 1.0).is_err());
        assert!(transform_eval(unit(TransformKind::Log), 0.0).is_err());
        assert!(transform_eval(unit(TransformKind::LogSquared), -1.2).is_err());
        assert!(transform_eval(unit(TransformKind::Constant), 1.0).is_ok());
        assert!(transform_eval(unit(TransformKind::Constant), 1.5).is_err());
    }

    #[test]
    fn angular_form_consistent() {
        for kind in [TransformKind::Semicircle, TransformKind::Log, TransformKind::LogSquared] {
            let pair = TransformPair::new(kind, 1.3);
            for theta in [0.2f64, 0.9, 2.0, 2.9] {
                let direct = pair.eval(theta.cos()).unwrap() * theta.sin();
                assert!((direct - pair.eval_angular(theta)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(0), 0.0);
        assert_eq!(harmonic(1), 1.0);
        assert!((harmonic(4) - 25.0 / 12.0).abs() < 1e-15);
    }
}
