//! Lattice Green functions from exact walk counts and Chebyshev moments.
//!
//! The pipeline is
//! [`walks`] (exact integer walk counts) → [`cheb`] (exact scaled Chebyshev
//! moments, transform pairs, windows) → [`greens`] (evaluation on and off the
//! branch cut, singularity subtraction). [`oracle`] holds slow independent
//! checks.
//!
//! ```
//! use lgf_core::{Family, MomentTable, Window, eval_spectral};
//!
//! let m = MomentTable::local(Family::Chain, 10);
//! let g = eval_spectral(&m, 0.0, Window::Rectangular).unwrap();
//! assert!((g - 1.0 / std::f64::consts::PI).abs() < 1e-15);
//! ```

pub mod cheb;
pub mod error;
pub mod fixtures;
pub mod greens;
pub mod lattice;
pub mod oracle;
pub mod quad;
pub mod walks;

pub use cheb::{
    eval_t_series, eval_u_series, kaiser_window, moments_from_walks, transform_coeff, transform_eval, ChebCoeffTable,
    MomentTable, TransformKind, TransformPair, Window,
};
pub use error::{LgfError, Result};
pub use greens::{
    builtin_singular_model, eval_green_on_cut, eval_power_series, eval_spectral, fit_subdominant,
    real_part_reconstruct, reconstruct_spectral, subtract_singularities, tail_exponent, FitResult, GreenFunction,
    GreenMeta, GreenResult, Residual, SingularModel,
};
pub use lattice::{Convention, Displacement, Family, LatticeSpec};
pub use oracle::{green_via_bz, moment_via_quadrature, spectral_via_bz, walks_via_adjacency, FinitePatch};
pub use walks::{build_walk_table, count_closed_walks, count_walks_to, project_grid4, WalkTable};
