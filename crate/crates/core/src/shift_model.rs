//! Multiplication by `z` on `(H²(A), μ_α ds)` as a bilateral weighted shift.
//!
//! In the orthonormal basis `zⁿ/‖zⁿ‖` the operator sends `e_n ↦ ω_n e_{n+1}` with
//!
//! ```text
//! ω_n² = (1 + R^{2α+2n+3}) / (1 + R^{2α+2n+1}),
//! ```
//!
//! increasing from `R` (as `n → −∞`) to `1` (as `n → +∞`).

use nalgebra::DMatrix;

use crate::characters::chars_equivalent;
use crate::error::{Error, Result};
use crate::hardy_kernels::WeightExponent;
use crate::qkernel::AnnulusGeometry;

pub const DEFAULT_WINDOW: (i64, i64) = (-64, 64);

/// `y = R^{2α+2n+1}` represented without overflow: either `y` itself (when the
/// exponent is non-negative) or its reciprocal `s = 1/y`.
enum Power {
    Direct(f64),
    Reciprocal(f64),
}

fn power(alpha: WeightExponent, n: i64, geom: &AnnulusGeometry) -> Power {
    let e = AnnulusGeometry::power_exponent(alpha, n);
    if e >= 0.0 {
        Power::Direct(geom.radius().powf(e))
    } else {
        Power::Reciprocal(geom.radius().powf(-e))
    }
}

/// `ω_n^{(α)}`.
///
/// Written as `√(1 − (1 − R²)/(1 + R^{−(2α+2n+1)}))`, a chain of monotone
/// operations in `n`, so the computed weights are non-decreasing as well.
pub fn shift_weight(alpha: impl Into<WeightExponent>, n: i64, geom: &AnnulusGeometry) -> f64 {
    let e = AnnulusGeometry::power_exponent(alpha.into(), n);
    let s = geom.radius().powf(-e);
    (1.0 - (1.0 - geom.q()) / (1.0 + s)).sqrt()
}

/// `ω_{n+1} − ω_n`, evaluated without cancellation.
pub fn weight_increment(alpha: impl Into<WeightExponent>, n: i64, geom: &AnnulusGeometry) -> f64 {
    let alpha = alpha.into();
    let q = geom.q();
    let diff_sq = match power(alpha, n, geom) {
        Power::Direct(y) => (1.0 - q).powi(2) * y / ((1.0 + y) * (1.0 + q * y)),
        Power::Reciprocal(s) => (1.0 - q).powi(2) * s / ((s + 1.0) * (s + q)),
    };
    diff_sq / (shift_weight(alpha, n + 1, geom) + shift_weight(alpha, n, geom))
}

/// `1 − ω_n`, evaluated without cancellation.
pub fn weight_upper_deficit(alpha: impl Into<WeightExponent>, n: i64, geom: &AnnulusGeometry) -> f64 {
    let alpha = alpha.into();
    let q = geom.q();
    let one_minus_sq = match power(alpha, n, geom) {
        Power::Direct(y) => (1.0 - q) * y / (1.0 + y),
        Power::Reciprocal(s) => (1.0 - q) / (s + 1.0),
    };
    one_minus_sq / (1.0 + shift_weight(alpha, n, geom))
}

/// `ω_n − R`, evaluated without cancellation.
pub fn weight_lower_excess(alpha: impl Into<WeightExponent>, n: i64, geom: &AnnulusGeometry) -> f64 {
    let alpha = alpha.into();
    let q = geom.q();
    let sq_minus_q = match power(alpha, n, geom) {
        Power::Direct(y) => (1.0 - q) / (1.0 + y),
        Power::Reciprocal(s) => (1.0 - q) * s / (s + 1.0),
    };
    sq_minus_q / (shift_weight(alpha, n, geom) + geom.radius())
}

/// Unitary equivalence of the shifts for `μ_α` and `μ_β`: `α − β ∈ ℤ`.
pub fn shifts_equivalent(alpha: f64, beta: f64) -> bool {
    chars_equivalent(alpha, beta)
}

/// The weights `ω_n`, `n_min ≤ n ≤ n_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSequence {
    alpha: WeightExponent,
    geom: AnnulusGeometry,
    n_min: i64,
    n_max: i64,
}

impl WeightSequence {
    pub fn new(alpha: impl Into<WeightExponent>, geom: AnnulusGeometry, n_min: i64, n_max: i64) -> Result<Self> {
        if n_min > n_max {
            return Err(Error::domain(format!("empty window [{n_min}, {n_max}]")));
        }
        Ok(Self { alpha: alpha.into(), geom, n_min, n_max })
    }

    pub fn with_default_window(alpha: impl Into<WeightExponent>, geom: AnnulusGeometry) -> Self {
        let (n_min, n_max) = DEFAULT_WINDOW;
        Self { alpha: alpha.into(), geom, n_min, n_max }
    }

    pub fn window(&self) -> (i64, i64) {
        (self.n_min, self.n_max)
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> {
        self.n_min..=self.n_max
    }

    pub fn weights(&self) -> Vec<f64> {
        self.indices().map(|n| shift_weight(self.alpha, n, &self.geom)).collect()
    }

    /// `ω_{n+1} − ω_n` for `n_min ≤ n < n_max`.
    pub fn increments(&self) -> Vec<f64> {
        (self.n_min..self.n_max)
            .map(|n| weight_increment(self.alpha, n, &self.geom))
            .collect()
    }
}

/// Finite section of the shift on `span{e_{−N}, …, e_N}`: `ω_n` at row `n+1`, column `n`.
pub fn truncated_shift_matrix(alpha: impl Into<WeightExponent>, half_width: usize, geom: &AnnulusGeometry) -> Result<DMatrix<f64>> {
    if half_width < 1 {
        return Err(Error::domain("truncated shift needs N ≥ 1"));
    }
    let alpha = alpha.into();
    let n = half_width as i64;
    let dim = 2 * half_width + 1;
    let mut m = DMatrix::zeros(dim, dim);
    for k in -n..n {
        let col = (k + n) as usize;
        m[(col + 1, col)] = shift_weight(alpha, k, geom);
    }
    Ok(m)
}
