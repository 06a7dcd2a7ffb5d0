//! Chebyshev machinery: power-to-Chebyshev coefficients, exact moment
//! conversion, analytic transform pairs, windows, and series summation.

mod coeffs;
mod moments;
mod series;
mod transform;
mod window;

pub use coeffs::ChebCoeffTable;
pub use moments::{moments_from_walks, power_moments_from_chebyshev, walks_from_moments, MomentTable};
pub use series::{eval_t_series, eval_u_series, t_and_u_series};
pub use transform::{harmonic, transform_coeff, transform_eval, TransformKind, TransformPair};
pub use window::{bessel_i0, kaiser_window, Window};
