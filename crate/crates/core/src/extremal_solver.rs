//! The extremal problem `inf { ‖f‖² : f(ζ) = 0, f′(ζ) = 1 }` on `(H²(A), μ_α ds)`.
//!
//! Over Laurent polynomials `f = Σ_{|n|≤N} a_n zⁿ` the Gram matrix is diagonal,
//! `‖f‖² = Σ d_n |a_n|²` with `d_n = 2π(1 + R^{2α+2n+1})`, so the equality
//! constrained least-norm problem reduces to a 2×2 dual solve. Its value should
//! match `1 / (K(ζ, ζ)·∂∂̄ log K(ζ, ζ))`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::curvature::{curvature_log_annulus, szego_diag};
use crate::error::{Error, Result};
use crate::hardy_kernels::{garabedian_kernel, garabedian_residue_form, hardy_kernel, AnnulusPoint, WeightExponent};
use crate::qkernel::{AnnulusGeometry, SeriesControl};

pub const DEFAULT_HALF_WIDTH: usize = 80;

/// Below this distance to `ζ` the Ahlfors quotient switches to its residue form.
pub const AHLFORS_SWITCH_RADIUS: f64 = 1e-6;

/// `‖zⁿ‖² = 2π(1 + R^{2α+2n+1})`.
pub fn gram_diag(alpha: impl Into<WeightExponent>, n: i64, geom: &AnnulusGeometry) -> f64 {
    2.0 * PI * (1.0 + geom.weight_power(alpha.into(), n))
}

/// `ξⁿ / d_n` for `|ξ|` between `R²` and `1`, written so that neither `ξⁿ`
/// nor `d_n` is formed for negative `n`.
fn scaled_monomial(xi: Complex64, n: i64, geom: &AnnulusGeometry, p: f64) -> Complex64 {
    let q = geom.q();
    if n >= 0 {
        xi.powi(n as i32) / (2.0 * PI * (1.0 + p * q.powi(n as i32)))
    } else {
        let m = (-n) as i32;
        (q / xi).powi(m) / (2.0 * PI * (q.powi(m) + p))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalSolution {
    /// Minimal squared norm.
    pub value: f64,
    /// `a_n` for `n = −N, …, N`.
    pub coefficients: Vec<Complex64>,
    /// `1 / (K(ζ, ζ)·∂∂̄ log K(ζ, ζ))`.
    pub closed_form: f64,
    /// `|value − closed_form| / closed_form`.
    pub residual: f64,
    /// `|f(ζ)|` and `|f′(ζ) − c|` of the computed minimiser.
    pub constraint_residuals: (f64, f64),
    half_width: usize,
    alpha: WeightExponent,
    geom: AnnulusGeometry,
    zeta_conj: Complex64,
    mu: (Complex64, Complex64),
}

impl ExtremalSolution {
    pub fn half_width(&self) -> usize {
        self.half_width
    }

    /// The minimiser `Σ a_n zⁿ` at a point of the annulus.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() == 0.0 {
            return Err(Error::domain("Laurent polynomial is undefined at z = 0"));
        }
        let p = self.geom.weight_power(self.alpha, 0);
        let n = self.half_width as i64;
        let xi = self.zeta_conj * z;
        let (mu1, mu2) = self.mu;
        Ok((-n..=n)
            .map(|k| scaled_monomial(xi, k, &self.geom, p) * (mu1 + k as f64 * mu2 / self.zeta_conj))
            .sum())
    }
}

/// Least-norm solution with `f(ζ) = 0`, `f′(ζ) = 1`.
pub fn solve_extremal(
    alpha: impl Into<WeightExponent>,
    zeta: AnnulusPoint,
    half_width: usize,
    geom: &AnnulusGeometry,
) -> Result<ExtremalSolution> {
    solve_extremal_with_target(alpha, zeta, half_width, geom, Complex64::new(1.0, 0.0))
}

/// Least-norm solution with `f(ζ) = 0`, `f′(ζ) = target`.
pub fn solve_extremal_with_target(
    alpha: impl Into<WeightExponent>,
    zeta: AnnulusPoint,
    half_width: usize,
    geom: &AnnulusGeometry,
    target: Complex64,
) -> Result<ExtremalSolution> {
    let alpha = alpha.into();
    if zeta.is_boundary() {
        return Err(Error::domain("extremal problem requires an interior point"));
    }
    if half_width < 2 {
        return Err(Error::domain(format!("Laurent window needs N ≥ 2, got {half_width}")));
    }
    let z = zeta.value();
    let zc = z.conj();
    let r2 = z.norm_sqr();
    let n = half_width as i64;
    let p = geom.weight_power(alpha, 0);

    // u_n = |ζ|^{2n}/d_n: every entry of C D⁻¹ C* is a moment of u.
    let u: Vec<f64> = (-n..=n).map(|k| scaled_monomial(Complex64::new(r2, 0.0), k, geom, p).re).collect();
    let idx = || (-n..=n).map(|k| k as f64);
    let s0: f64 = u.iter().sum();
    let s1: f64 = u.iter().zip(idx()).map(|(u, k)| u * k).sum();
    let mean = s1 / s0;
    // s0·s2 − s1² = s0·Σ u (n − mean)²
    let spread: f64 = u.iter().zip(idx()).map(|(u, k)| u * (k - mean).powi(2)).sum::<f64>() * s0;
    let s2 = (spread + s1 * s1) / s0;

    let m11 = Complex64::new(s0, 0.0);
    let m12 = s1 / zc;
    let m22 = s2 / r2;
    let det = spread / r2;
    if !(det > 1e-14 * (s0 * m22)) {
        return Err(Error::SingularSystem { det });
    }
    let mu1 = -m12 * target / det;
    let mu2 = m11 * target / det;
    let value = (target.conj() * mu2).re;

    let coefficients: Vec<Complex64> = (-n..=n)
        .map(|k| scaled_monomial(zc, k, geom, p) * (mu1 + k as f64 * mu2 / zc))
        .collect();

    let f_at: Complex64 = u.iter().zip(idx()).map(|(&u, k)| u * (mu1 + k * mu2 / zc)).sum();
    let df_at: Complex64 = u.iter().zip(idx()).map(|(&u, k)| u * k * (mu1 + k * mu2 / zc)).sum::<Complex64>() / z;

    let ctl = SeriesControl::default();
    let k_diag = hardy_kernel(alpha, zeta, zeta, geom, &ctl)?.re;
    let closed_form = target.norm_sqr() / (k_diag * curvature_log_annulus(alpha, zeta, geom, &ctl)?);

    Ok(ExtremalSolution {
        value,
        coefficients,
        closed_form,
        residual: (value - closed_form).abs() / closed_form,
        constraint_residuals: (f_at.norm(), (df_at - target).norm()),
        half_width,
        alpha,
        geom: *geom,
        zeta_conj: zc,
        mu: (mu1, mu2),
    })
}

/// Ahlfors map `F_ζ = S_ζ / L_ζ` of the annulus.
pub fn ahlfors_map(z: Complex64, zeta: AnnulusPoint, geom: &AnnulusGeometry, ctl: &SeriesControl) -> Result<Complex64> {
    let zp = AnnulusPoint::new(z, geom)?;
    let s = hardy_kernel(0.0, zp, zeta, geom, ctl)?;
    let d = z - zeta.value();
    if d.norm() < AHLFORS_SWITCH_RADIUS {
        Ok(d * s / garabedian_residue_form(0.0, z, zeta, geom, ctl)?)
    } else {
        Ok(s / garabedian_kernel(0.0, z, zeta, geom, ctl)?)
    }
}

/// `g = K^{(α)}_ζ F_ζ / (2π S(ζ, ζ) K^{(α)}(ζ, ζ))`, feasible for the extremal problem.
pub fn candidate_g(
    z: Complex64,
    alpha: impl Into<WeightExponent>,
    zeta: AnnulusPoint,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
) -> Result<Complex64> {
    let alpha = alpha.into();
    let zp = AnnulusPoint::new(z, geom)?;
    let k_z = hardy_kernel(alpha, zp, zeta, geom, ctl)?;
    let k_diag = hardy_kernel(alpha, zeta, zeta, geom, ctl)?.re;
    let s_diag = szego_diag(zeta, geom, ctl)?;
    Ok(k_z * ahlfors_map(z, zeta, geom, ctl)? / (2.0 * PI * s_diag * k_diag))
}

/// `∫_{∂A} |f|² μ_α ds` by the trapezoid rule with `samples` nodes per circle.
pub fn boundary_norm_sq<F>(f: F, alpha: impl Into<WeightExponent>, geom: &AnnulusGeometry, samples: usize) -> Result<f64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    if samples == 0 {
        return Err(Error::domain("quadrature needs at least one node"));
    }
    let alpha = alpha.into();
    let r = geom.radius();
    let mu_inner = r.powf(2.0 * alpha.raw());
    let mut total = 0.0;
    for (radius, mu) in [(1.0, 1.0), (r, mu_inner)] {
        let mut acc = 0.0;
        for k in 0..samples {
            let z = Complex64::from_polar(radius, 2.0 * PI * k as f64 / samples as f64);
            acc += f(z)?.norm_sqr();
        }
        total += mu * acc * 2.0 * PI * radius / samples as f64;
    }
    Ok(total)
}
