/// Taper applied to Chebyshev coefficients before summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Window {
    Rectangular,
    Kaiser { beta: f64 },
}

impl Window {
    pub const DEFAULT_BETA: f64 = 10.0;

    pub fn from_beta(beta: Option<f64>) -> Self {
        match beta {
            Some(beta) => Window::Kaiser { beta },
            None => Window::Rectangular,
        }
    }

    pub fn beta(&self) -> Option<f64> {
        match *self {
            Window::Rectangular => None,
            Window::Kaiser { beta } => Some(beta),
        }
    }

    /// Weights for a series with `len` coefficients.
    pub fn weights(&self, len: usize) -> Vec<f64> {
        match *self {
            Window::Rectangular => vec![1.0; len],
            Window::Kaiser { beta } => (0..len).map(|n| kaiser_window(n, len, beta)).collect(),
        }
    }

    pub fn apply(&self, coeffs: &[f64]) -> Vec<f64> {
        match self {
            Window::Rectangular => coeffs.to_vec(),
            _ => coeffs
                .iter()
                .zip(self.weights(coeffs.len()))
                .map(|(c, w)| c * w)
                .collect(),
        }
    }
}

/// Modified Bessel function `I_0(x)` from its power series.
pub fn bessel_i0(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * k);
        sum += term;
        if term <= 1e-17 * sum {
            return sum;
        }
        k += 1.0;
    }
}

/// Kaiser-Bessel weight for coefficient `n` of `len`.
pub fn kaiser_window(n: usize, len: usize, beta: f64) -> f64 {
    if len <= 1 {
        return 1.0;
    }
    let r = n as f64 / (len - 1) as f64;
    let arg = (1.0 - r * r).max(0.0).sqrt();
    bessel_i0(beta * arg) / bessel_i0(beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kaiser_endpoints() {
        for beta in [0.0, 3.0, 10.0] {
            assert!((kaiser_window(0, 50, beta) - 1.0).abs() < 1e-15);
            assert!((kaiser_window(49, 50, beta) - 1.0 / bessel_i0(beta)).abs() < 1e-15);
        }
        for n in 0..20 {
            assert_eq!(kaiser_window(n, 20, 0.0), 1.0);
        }
    }

    #[test]
    fn i0_reference_values() {
        assert_eq!(bessel_i0(0.0), 1.0);
        // I_0(1) and I_0(10), 16 digits
        assert!((bessel_i0(1.0) - 1.266_065_877_752_008_4).abs() < 1e-15);
        assert!((bessel_i0(10.0) / 2_815.716_628_466_254 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn window_weights_monotone() {
        let w = Window::Kaiser { beta: 10.0 }.weights(100);
        assert!(w.windows(2).all(|p| p[1] <= p[0]));
        assert_eq!(Window::Rectangular.weights(3), vec![1.0; 3]);
    }
}
