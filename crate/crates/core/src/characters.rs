//! Characters of bundle shifts, stored additively as reals mod 1.
//!
//! A character `exp(2πi x)` is represented by `x ∈ [0, 1)`. On the annulus the
//! only harmonic measure is `ω₁(z) = log|z| / log R`, and the bundle shift that
//! is extremal at `ζ̄` carries the character `1 − ω₁(ζ) mod 1`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hardy_kernels::{szego_zero, AnnulusPoint};
use crate::qkernel::AnnulusGeometry;

/// Values within this distance of an integer reduce to `0`.
pub const MOD1_SNAP: f64 = 1e-12;

/// `x mod 1` in `[0, 1)`, snapping near-integers to `0`.
pub fn reduce_mod1(x: f64) -> f64 {
    let nearest = x.round_ties_even();
    if (x - nearest).abs() < MOD1_SNAP {
        return 0.0;
    }
    let r = x - x.floor();
    if r >= 1.0 {
        0.0
    } else {
        r
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharacterIndex {
    components: Vec<f64>,
}

impl CharacterIndex {
    pub fn new(components: impl IntoIterator<Item = f64>) -> Self {
        Self { components: components.into_iter().map(reduce_mod1).collect() }
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    /// Number of inner boundary components `n` (1 for the annulus).
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.components.iter().sum()
    }

    /// Multiplicative form `exp(2πi x_j)`.
    pub fn unimodular(&self) -> Vec<Complex64> {
        self.components
            .iter()
            .map(|&x| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * x))
            .collect()
    }

    pub fn equivalent(&self, other: &CharacterIndex) -> bool {
        self.len() == other.len()
            && self.components.iter().zip(&other.components).all(|(&a, &b)| chars_equivalent(a, b))
    }
}

fn require_interior(z: Complex64, geom: &AnnulusGeometry) -> Result<f64> {
    let r = z.norm();
    if r > geom.radius() && r < 1.0 {
        Ok(r)
    } else {
        Err(Error::domain(format!(
            "point {z} (|z| = {r}) is not in the open annulus {} < |z| < 1",
            geom.radius()
        )))
    }
}

/// Harmonic measure of the inner circle, `log|z| / log R`.
pub fn harmonic_measure(z: Complex64, geom: &AnnulusGeometry) -> Result<f64> {
    let r = require_interior(z, geom)?;
    Ok(r.ln() / geom.radius().ln())
}

/// The weight-exponent class whose bundle shift is extremal at `ζ̄`.
pub fn extremal_alpha(zeta: Complex64, geom: &AnnulusGeometry) -> Result<f64> {
    Ok(reduce_mod1(1.0 - harmonic_measure(zeta, geom)?))
}

/// `φ(ζ) = (1 − ω₁(ζ), …, 1 − ω_n(ζ)) mod 1` from externally supplied harmonic measures.
pub fn phi_char(omegas: &[f64]) -> Result<CharacterIndex> {
    if let Some(bad) = omegas.iter().find(|&&w| !(w > 0.0 && w < 1.0)) {
        return Err(Error::domain(format!("harmonic measure values must lie in (0, 1), got {bad}")));
    }
    Ok(CharacterIndex::new(omegas.iter().map(|w| 1.0 - w)))
}

/// Whether the character can be reached by `φ`: `n − 1 < Σ x_j < n`.
pub fn char_range_check(index: &CharacterIndex) -> bool {
    let n = index.len() as f64;
    let s = index.sum();
    s > n - 1.0 && s < n
}

/// `a − b ∈ ℤ`.
pub fn chars_equivalent(a: f64, b: f64) -> bool {
    reduce_mod1(a - b) == 0.0
}

/// Index `(−Σ_k ω₁(a_k)) mod 1` of the Blaschke product with zeros `a_k`.
pub fn blaschke_index(points: &[Complex64], geom: &AnnulusGeometry) -> Result<CharacterIndex> {
    let total = points
        .iter()
        .map(|&a| harmonic_measure(a, geom))
        .sum::<Result<f64>>()?;
    Ok(CharacterIndex::new([-total]))
}

/// `ω₁(ζ) + ω₁(−R/ζ̄)`, an integer (in fact `1`) for every interior `ζ`.
pub fn szego_zero_invariance(zeta: Complex64, geom: &AnnulusGeometry) -> Result<f64> {
    let w = AnnulusPoint::interior(zeta, geom)?;
    Ok(harmonic_measure(zeta, geom)? + harmonic_measure(szego_zero(w, geom), geom)?)
}
