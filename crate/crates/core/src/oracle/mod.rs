//! Slow, independent checks: adjacency powers on a finite patch, a broadened
//! Brillouin-zone sum, and direct quadrature of Chebyshev moments.

mod bz;
mod patch;
mod quadrature;

pub use bz::{green_via_bz, spectral_via_bz, spectral_via_bz_extrapolated};
pub use patch::{steps, walks_via_adjacency, FinitePatch};
pub use quadrature::{moment_via_angular, moment_via_quadrature};
