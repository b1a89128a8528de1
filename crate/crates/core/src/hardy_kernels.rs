//! Reproducing kernels of `(H²(A), μ_α ds)` on the annulus `A = A(0; R, 1)`,
//! the disc Szegő kernel, and the Garabedian (conjugate) kernels.
//!
//! With `μ_α = 1` on `|z| = 1` and `R^{2α}` on `|z| = R`, the monomials are
//! orthogonal with `‖zⁿ‖² = 2π(1 + R^{2α+2n+1})`, so
//!
//! ```text
//! K^{(α)}(z, w) = (1/2π) Σ_{n∈ℤ} (z w̄)ⁿ / (1 + R^{2α+2n+1}) = f(−R^{2α+1}, z w̄) / 2π
//! L^{(α)}(z, w) = f(−R^{2α+1}, w / z) / (2π z)
//! ```
//!
//! where `f` is the Jordan–Kronecker function of [`crate::qkernel`].

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qkernel::{jk_product, jk_product_regularized, jk_series, AnnulusGeometry, JKArgs, SeriesControl};

/// Relative distance to a boundary circle under which a point counts as on it.
const BOUNDARY_SNAP: f64 = 1e-12;

/// Weight exponent `α` of the boundary measure `μ_α`.
///
/// Stored as `floor(α)` plus a fraction in `[0, 1)`. Integer shifts act on the
/// integer part only, which keeps `ω^{(α+1)}_n = ω^{(α)}_{n+1}` exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightExponent {
    integer: i64,
    fraction: f64,
}

impl WeightExponent {
    pub fn new(raw: f64) -> Self {
        assert!(raw.is_finite(), "weight exponent must be finite");
        let floor = raw.floor();
        let mut integer = floor as i64;
        let mut fraction = raw - floor;
        if fraction >= 1.0 {
            fraction = 0.0;
            integer += 1;
        }
        Self { integer, fraction }
    }

    pub fn raw(&self) -> f64 {
        self.integer as f64 + self.fraction
    }

    /// Representative of the equivalence class, `α mod 1 ∈ [0, 1)`.
    pub fn canonical(&self) -> f64 {
        self.fraction
    }

    pub fn integer_part(&self) -> i64 {
        self.integer
    }

    pub fn fraction(&self) -> f64 {
        self.fraction
    }

    pub fn shifted(&self, k: i64) -> Self {
        Self { integer: self.integer + k, fraction: self.fraction }
    }
}

impl From<f64> for WeightExponent {
    fn from(raw: f64) -> Self {
        Self::new(raw)
    }
}

/// A point of the closed annulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnulusPoint {
    z: Complex64,
    boundary: bool,
}

impl AnnulusPoint {
    /// Accepts points of the closed annulus; points within a relative `1e-12` of
    /// either circle are flagged as boundary points.
    pub fn new(z: Complex64, geom: &AnnulusGeometry) -> Result<Self> {
        let r = z.norm();
        let inner = geom.radius();
        if !r.is_finite() {
            return Err(Error::domain(format!("point {z} is not finite")));
        }
        let on_outer = (r - 1.0).abs() <= BOUNDARY_SNAP;
        let on_inner = (r - inner).abs() <= BOUNDARY_SNAP * inner;
        if on_outer || on_inner {
            return Ok(Self { z, boundary: true });
        }
        if r > inner && r < 1.0 {
            Ok(Self { z, boundary: false })
        } else {
            Err(Error::domain(format!(
                "point {z} (|z| = {r}) lies outside the closed annulus {inner} ≤ |z| ≤ 1"
            )))
        }
    }

    /// Like [`AnnulusPoint::new`] but rejects boundary points.
    pub fn interior(z: Complex64, geom: &AnnulusGeometry) -> Result<Self> {
        let p = Self::new(z, geom)?;
        if p.boundary {
            return Err(Error::domain(format!(
                "point {z} must lie in the open annulus {} < |z| < 1",
                geom.radius()
            )));
        }
        Ok(p)
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        self.z
    }

    #[inline]
    pub fn is_boundary(&self) -> bool {
        self.boundary
    }

    #[inline]
    pub fn is_interior(&self) -> bool {
        !self.boundary
    }
}

/// `g(x), g′(x), g″(x)` where `K^{(α)}(w, w) = g(|w|²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelDiagDerivs {
    pub g: f64,
    pub g1: f64,
    pub g2: f64,
}

/// Szegő kernel of the unit disc, `1/(2π(1 − z w̄))`.
pub fn szego_disc(z: Complex64, w: Complex64) -> Result<Complex64> {
    if z.norm() >= 1.0 || w.norm() >= 1.0 {
        return Err(Error::domain("disc Szegő kernel requires |z| < 1 and |w| < 1"));
    }
    Ok(1.0 / (2.0 * PI * (1.0 - z * w.conj())))
}

/// `2π K^{(α)}` as a function of `x = z w̄`: series inside its annulus of convergence,
/// product formula elsewhere or when the series would need more than `max_terms`.
fn kernel_jk(alpha: WeightExponent, x: Complex64, geom: &AnnulusGeometry, ctl: &SeriesControl) -> Result<Complex64> {
    let args = JKArgs::new(geom.kernel_b(alpha), x);
    let m = x.norm();
    if m > geom.q() && m < 1.0 {
        match jk_series(args, geom, ctl) {
            Err(Error::NonConvergence { .. }) => {}
            other => return other,
        }
    }
    jk_product(args, geom, ctl)
}

/// Weighted Hardy kernel `K^{(α)}(z, w)` for points of the closed annulus.
pub fn hardy_kernel(
    alpha: impl Into<WeightExponent>,
    z: AnnulusPoint,
    w: AnnulusPoint,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
) -> Result<Complex64> {
    let x = z.value() * w.value().conj();
    Ok(kernel_jk(alpha.into(), x, geom, ctl)? / (2.0 * PI))
}

/// Meromorphic continuation of `z ↦ K^{(α)}(z, w)` to `R² < |z| < 1/R`.
pub fn hardy_kernel_extended(
    alpha: impl Into<WeightExponent>,
    z: Complex64,
    w: AnnulusPoint,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
) -> Result<Complex64> {
    let r = z.norm();
    if !(r > geom.q() && r < 1.0 / geom.radius()) {
        return Err(Error::domain(format!(
            "extended kernel requires R² < |z| < 1/R, got |z| = {r}"
        )));
    }
    let x = z * w.value().conj();
    Ok(kernel_jk(alpha.into(), x, geom, ctl)? / (2.0 * PI))
}

/// Garabedian kernel `L^{(α)}(z, w) = f(−R^{2α+1}, w/z) / (2πz)`.
///
/// Simple pole at `z = w` with residue `1/(2π)`; surfaces as
/// [`Error::Pole`] when `|w/z − 1|` falls below the singularity floor.
pub fn garabedian_kernel(
    alpha: impl Into<WeightExponent>,
    z: Complex64,
    w: AnnulusPoint,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return Err(Error::domain("Garabedian kernel is undefined at z = 0"));
    }
    let args = JKArgs::new(geom.kernel_b(alpha.into()), w.value() / z);
    Ok(jk_product(args, geom, ctl)? / (2.0 * PI * z))
}

/// `(z − w)·L^{(α)}(z, w)`, holomorphic across `z = w` where it equals `1/(2π)`.
pub fn garabedian_residue_form(
    alpha: impl Into<WeightExponent>,
    z: Complex64,
    w: AnnulusPoint,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return Err(Error::domain("Garabedian kernel is undefined at z = 0"));
    }
    let args = JKArgs::new(geom.kernel_b(alpha.into()), w.value() / z);
    Ok(jk_product_regularized(args, geom, ctl)? / (2.0 * PI))
}

/// The unique zero `−R/w̄` of the Szegő kernel `S_w` in the annulus.
pub fn szego_zero(w: AnnulusPoint, geom: &AnnulusGeometry) -> Complex64 {
    -geom.radius() / w.value().conj()
}

/// Fused evaluation of `g, g′, g″` with `g(x) = Σ xⁿ / (2π(1 + R^{2α+2n+1}))`.
pub fn kernel_diag_derivatives(
    alpha: impl Into<WeightExponent>,
    x: f64,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
) -> Result<KernelDiagDerivs> {
    let alpha = alpha.into();
    let q = geom.q();
    if !(x > q && x < 1.0) {
        return Err(Error::domain(format!("diagonal derivatives require R² < x < 1, got {x}")));
    }
    let tol = ctl.tolerance();
    let two_pi = 2.0 * PI;
    let p = geom.weight_power(alpha, 0);

    let c0 = 1.0 / (two_pi * (1.0 + p));
    let (mut g, mut g1, mut g2) = (c0, 0.0, 0.0);

    let rho_neg = q / x;
    let mut x_pow = 1.0;
    let mut r_pow = 1.0;
    let mut q_pow = 1.0;
    let mut pos_done = false;
    let mut neg_done = false;
    let mut n = 0usize;

    while !(pos_done && neg_done) {
        n += 1;
        if n > ctl.max_terms() {
            return Err(Error::NonConvergence { max_terms: ctl.max_terms() });
        }
        let nf = n as f64;
        q_pow *= q;
        if !pos_done {
            // xⁿ c_n with c_n = 1/(2π(1 + p qⁿ))
            x_pow *= x;
            let term = x_pow / (two_pi * (1.0 + p * q_pow));
            g += term;
            g1 += nf / x * term;
            g2 += nf * (nf - 1.0) / (x * x) * term;
            // Tail of the slowest series Σ k² x^{k-2}/2π beyond n.
            let rho = x * ((nf + 2.0) / (nf + 1.0)).powi(2);
            if rho < 1.0 {
                let next = (nf + 1.0).powi(2) * x.powi(n as i32 - 1) / two_pi;
                pos_done = next / (1.0 - rho) < tol;
            }
        }
        if !neg_done {
            // x^{-m} c_{-m} = (q/x)^m / (2π(q^m + p))
            r_pow *= rho_neg;
            let term = r_pow / (two_pi * (q_pow + p));
            g += term;
            g1 -= nf / x * term;
            g2 += nf * (nf + 1.0) / (x * x) * term;
            let rho = rho_neg * ((nf + 3.0) / (nf + 2.0)).powi(2);
            if rho < 1.0 {
                let next = (nf + 2.0).powi(2) * rho_neg.powi(n as i32 + 1) / (two_pi * p * x * x);
                neg_done = next / (1.0 - rho) < tol;
            }
        }
    }
    Ok(KernelDiagDerivs { g, g1, g2 })
}
