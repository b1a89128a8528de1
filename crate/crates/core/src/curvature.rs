//! Curvature of the adjoint multiplication operator.
//!
//! Everything here is reported as the positive quantity
//! `∂²/∂w∂w̄ log K(w, w)`; the operator curvature is its negative. The curvature
//! inequality reads `∂∂̄ log K(ζ, ζ) ≥ 4π² S(ζ, ζ)²`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hardy_kernels::{kernel_diag_derivatives, AnnulusPoint, WeightExponent};
use crate::qkernel::{AnnulusGeometry, SeriesControl};

/// Absolute tolerance on the gap for declaring a point extremal.
pub const DEFAULT_EXTREMAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureReport {
    pub curvature_log: f64,
    pub bound: f64,
    pub gap: f64,
    pub extremal: bool,
}

fn interior_radius_sq(zeta: AnnulusPoint) -> Result<f64> {
    if zeta.is_boundary() {
        return Err(Error::domain(format!("curvature requires an interior point, got {}", zeta.value())));
    }
    Ok(zeta.value().norm_sqr())
}

/// `g′/g + x(g″g − g′²)/g²` at `x = |ζ|²`.
pub fn curvature_log_annulus(
    alpha: impl Into<WeightExponent>,
    zeta: AnnulusPoint,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
) -> Result<f64> {
    let x = interior_radius_sq(zeta)?;
    let d = kernel_diag_derivatives(alpha, x, geom, ctl)?;
    Ok(d.g1 / d.g + x * (d.g2 * d.g - d.g1 * d.g1) / (d.g * d.g))
}

/// Szegő kernel diagonal `S(ζ, ζ) = K^{(0)}(ζ, ζ)` of the annulus.
pub fn szego_diag(zeta: AnnulusPoint, geom: &AnnulusGeometry, ctl: &SeriesControl) -> Result<f64> {
    let x = interior_radius_sq(zeta)?;
    Ok(kernel_diag_derivatives(0.0, x, geom, ctl)?.g)
}

/// Disc curvature `1/(1 − |w|²)²`.
pub fn curvature_log_disc(w: Complex64) -> Result<f64> {
    let r2 = w.norm_sqr();
    if r2 >= 1.0 {
        return Err(Error::domain("disc curvature requires |w| < 1"));
    }
    Ok(1.0 / ((1.0 - r2) * (1.0 - r2)))
}

/// `4π² S²`.
pub fn curvature_bound(s_diag: f64) -> f64 {
    4.0 * PI * PI * s_diag * s_diag
}

pub fn curvature_report(
    alpha: impl Into<WeightExponent>,
    zeta: AnnulusPoint,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
    tol: f64,
) -> Result<CurvatureReport> {
    let curvature_log = curvature_log_annulus(alpha, zeta, geom, ctl)?;
    let bound = curvature_bound(szego_diag(zeta, geom, ctl)?);
    let gap = curvature_log - bound;
    Ok(CurvatureReport { curvature_log, bound, gap, extremal: gap.abs() <= tol })
}

/// Region whose boundary the finite-difference stencil must keep clear of.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FdDomain {
    Disc,
    Annulus(AnnulusGeometry),
}

impl FdDomain {
    fn boundary_distance(&self, w: Complex64) -> f64 {
        let r = w.norm();
        match self {
            FdDomain::Disc => 1.0 - r,
            FdDomain::Annulus(g) => (1.0 - r).min(r - g.radius()),
        }
    }
}

/// Default step `1e-4·|ζ|`.
pub fn default_fd_step(zeta: Complex64) -> f64 {
    1e-4 * zeta.norm()
}

/// `(1/4)·Δ log K(w, w)` by the five-point stencil with step `h`.
pub fn curvature_fd<F>(kernel_diag: F, w: Complex64, h: f64, domain: FdDomain) -> Result<f64>
where
    F: Fn(Complex64) -> Result<f64>,
{
    if !(h > 0.0) {
        return Err(Error::domain(format!("finite-difference step must be positive, got {h}")));
    }
    if domain.boundary_distance(w) < 2.0 * h {
        return Err(Error::domain(format!(
            "stencil of step {h} around {w} comes within 2h of the boundary"
        )));
    }
    let log_k = |z: Complex64| -> Result<f64> {
        let k = kernel_diag(z)?;
        if !(k > 0.0) {
            return Err(Error::domain(format!("kernel diagonal must be positive, got {k} at {z}")));
        }
        Ok(k.ln())
    };
    let center = log_k(w)?;
    let mut ring = 0.0;
    for d in [Complex64::new(h, 0.0), Complex64::new(-h, 0.0), Complex64::new(0.0, h), Complex64::new(0.0, -h)] {
        ring += log_k(w + d)?;
    }
    Ok((ring - 4.0 * center) / (h * h) / 4.0)
}

/// Ratio of polynomials, coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction {
    numerator: Vec<Complex64>,
    denominator: Vec<Complex64>,
}

fn trim(mut c: Vec<Complex64>) -> Vec<Complex64> {
    while c.len() > 1 && c.last().is_some_and(|x| x.norm() == 0.0) {
        c.pop();
    }
    c
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

impl RationalFunction {
    pub fn new(numerator: Vec<Complex64>, denominator: Vec<Complex64>) -> Result<Self> {
        if numerator.is_empty() {
            return Err(Error::domain("numerator needs at least one coefficient"));
        }
        if denominator.iter().all(|c| c.norm() == 0.0) {
            return Err(Error::domain("denominator is identically zero"));
        }
        Ok(Self { numerator: trim(numerator), denominator: trim(denominator) })
    }

    /// Like [`RationalFunction::new`], additionally rejecting poles in the closed annulus.
    pub fn on_annulus(numerator: Vec<Complex64>, denominator: Vec<Complex64>, geom: &AnnulusGeometry) -> Result<Self> {
        let r = Self::new(numerator, denominator)?;
        if let Some(p) = r.poles().into_iter().find(|p| {
            let m = p.norm();
            m >= geom.radius() * (1.0 - 1e-9) && m <= 1.0 + 1e-9
        }) {
            return Err(Error::domain(format!("pole {p} lies in the closed annulus")));
        }
        Ok(r)
    }

    pub fn constant(c: Complex64) -> Self {
        Self { numerator: vec![c], denominator: vec![Complex64::new(1.0, 0.0)] }
    }

    pub fn identity() -> Self {
        Self {
            numerator: vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
            denominator: vec![Complex64::new(1.0, 0.0)],
        }
    }

    /// Disc automorphism `(z − a)/(1 − ā z)`.
    pub fn mobius(a: Complex64) -> Self {
        Self {
            numerator: vec![-a, Complex64::new(1.0, 0.0)],
            denominator: vec![Complex64::new(1.0, 0.0), -a.conj()],
        }
    }

    /// Roots of the denominator (eigenvalues of its companion matrix).
    pub fn poles(&self) -> Vec<Complex64> {
        let d = &self.denominator;
        let deg = d.len() - 1;
        if deg == 0 {
            return Vec::new();
        }
        let lead = d[deg];
        let comp = DMatrix::from_fn(deg, deg, |i, j| {
            if j == deg - 1 {
                -d[i] / lead
            } else if i == j + 1 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let (_, t) = Schur::new(comp).unpack();
        t.diagonal().iter().copied().collect()
    }

    fn den_at(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let (q, dq) = horner(&self.denominator, z);
        let scale: f64 = self.denominator.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if q.norm() <= 1e-14 * scale {
            return Err(Error::domain(format!("{z} is a pole of the rational function")));
        }
        Ok((q, dq))
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let (q, _) = self.den_at(z)?;
        Ok(horner(&self.numerator, z).0 / q)
    }

    /// `r′(z)` by the quotient rule.
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        let (q, dq) = self.den_at(z)?;
        let (p, dp) = horner(&self.numerator, z);
        Ok((dp * q - p * dq) / (q * q))
    }

    pub fn times(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction { numerator: poly_mul(&self.numerator, &other.numerator), denominator: poly_mul(&self.denominator, &other.denominator) }
    }

    /// `max |r|` over `samples` points on each boundary circle (the sup over the
    /// closed annulus, by the maximum principle when `r` has no poles there).
    pub fn boundary_sup(&self, geom: &AnnulusGeometry, samples: usize) -> Result<f64> {
        let mut sup: f64 = 0.0;
        for radius in [geom.radius(), 1.0] {
            for k in 0..samples {
                let z = Complex64::from_polar(radius, 2.0 * PI * k as f64 / samples as f64);
                sup = sup.max(self.eval(z)?.norm());
            }
        }
        Ok(sup)
    }
}

fn poly_mul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub type Matrix2 = [[Complex64; 2]; 2];

/// Restriction of `r(T)` to `span{K_w, ∂̄K_w}`: `[[r(w), r′(w)/√κ], [0, r(w)]]`
/// with `κ = curvature_log`.
pub fn localized_model(r: &RationalFunction, w: Complex64, curvature_log: f64) -> Result<Matrix2> {
    if !(curvature_log > 0.0) {
        return Err(Error::domain(format!("curvature must be positive, got {curvature_log}")));
    }
    let v = r.eval(w)?;
    let dv = r.derivative(w)?;
    let zero = Complex64::new(0.0, 0.0);
    Ok([[v, dv / curvature_log.sqrt()], [zero, v]])
}
