//! Weighted Hardy spaces on the annulus `R < |z| < 1`: reproducing and
//! Garabedian kernels via the Jordan–Kronecker function, curvature of the
//! associated bundle shifts, and the extremal problem they solve.

pub mod characters;
pub mod cli;
pub mod curvature;
pub mod error;
pub mod extremal_solver;
pub mod hardy_kernels;
pub mod qkernel;
pub mod shift_model;

pub use error::{Error, PoleLocus, Result};
pub use hardy_kernels::{AnnulusPoint, WeightExponent};
pub use qkernel::{AnnulusGeometry, JKArgs, SeriesControl};
