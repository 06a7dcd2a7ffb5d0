//! Green functions on and off the branch cut, and van Hove singularity
//! subtraction.

mod pipeline;
mod reconstruct;
mod result;
mod series;
mod singular;

pub use pipeline::{GreenFunction, DEFAULT_WINDOW};
pub use reconstruct::{
    model_green, real_part_reconstruct, real_part_reconstruct_with, reconstruct_spectral, PV_TOLERANCE,
};
pub use result::{GreenMeta, GreenPoint, GreenResult, CSV_DIGITS};
pub use series::{eval_green_on_cut, eval_power_series, eval_spectral, DEFAULT_EDGE_EPS};
pub use singular::{
    builtin_for_order, builtin_singular_model, default_fit_range, fit_subdominant, subtract_singularities,
    tail_exponent, FitResult, FittedTerm, Residual, SingularModel, DEFAULT_FIT_RANGE,
};
