//! The Jordan–Kronecker function
//!
//! ```text
//! f(b, t) = Σ_{n∈ℤ} tⁿ / (1 − b q^n),      q = R²,
//! ```
//!
//! evaluated either as the bilateral series (valid for `q < |t| < 1`) or through
//! the Ramanujan ₁ψ₁ product
//!
//! ```text
//!            (bt; q)∞ (q/(bt); q)∞ (q; q)∞²
//! f(b, t) = ---------------------------------
//!            (t; q)∞ (q/t; q)∞ (b; q)∞ (q/b; q)∞
//! ```
//!
//! which continues `f` meromorphically to `b, t ∈ ℂ \ {0}` with simple poles on
//! `b = q^k` and `t = q^k`. Every annulus kernel in this crate reduces to one of
//! these two evaluations.

use num_complex::Complex64;

use crate::error::{Error, PoleLocus, Result};
use crate::hardy_kernels::WeightExponent;

/// The annulus `A(0; R, 1) = { R < |z| < 1 }`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnnulusGeometry {
    inner_radius: f64,
}

impl AnnulusGeometry {
    pub fn new(inner_radius: f64) -> Result<Self> {
        if !(inner_radius > 0.0 && inner_radius < 1.0) {
            return Err(Error::domain(format!(
                "inner radius must satisfy 0 < R < 1, got {inner_radius}"
            )));
        }
        Ok(Self { inner_radius })
    }

    #[inline]
    pub fn radius(&self) -> f64 {
        self.inner_radius
    }

    /// Nome `q = R²` of the underlying q-series.
    #[inline]
    pub fn q(&self) -> f64 {
        self.inner_radius * self.inner_radius
    }

    /// `R^{2α + 2n + 1}`.
    ///
    /// The integer part of `α` is folded into `n` before any floating point work,
    /// so `weight_power(α.shifted(1), n)` and `weight_power(α, n + 1)` follow the
    /// same arithmetic path and agree bitwise.
    pub fn weight_power(&self, alpha: WeightExponent, n: i64) -> f64 {
        self.inner_radius.powf(Self::power_exponent(alpha, n))
    }

    /// The exponent `2α + 2n + 1` of [`AnnulusGeometry::weight_power`].
    pub fn power_exponent(alpha: WeightExponent, n: i64) -> f64 {
        let m = alpha.integer_part() + n;
        2.0 * alpha.fraction() + (2 * m + 1) as f64
    }

    /// `b = −R^{2α+1}`, the first argument of `f` that generates `K^{(α)}`.
    pub fn kernel_b(&self, alpha: WeightExponent) -> Complex64 {
        Complex64::new(-self.weight_power(alpha, 0), 0.0)
    }
}

/// Truncation policy shared by every series and infinite product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    tolerance: f64,
    max_terms: usize,
    singularity_floor: f64,
}

impl SeriesControl {
    pub const DEFAULT_TOLERANCE: f64 = 1e-14;
    pub const DEFAULT_MAX_TERMS: usize = 10_000;
    pub const DEFAULT_SINGULARITY_FLOOR: f64 = 1e-12;

    pub fn new(tolerance: f64, max_terms: usize) -> Result<Self> {
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::domain(format!(
                "tolerance must be a positive finite number, got {tolerance}"
            )));
        }
        if max_terms < 8 {
            return Err(Error::domain(format!(
                "max_terms must be at least 8, got {max_terms}"
            )));
        }
        Ok(Self {
            tolerance,
            max_terms,
            singularity_floor: Self::DEFAULT_SINGULARITY_FLOOR,
        })
    }

    pub fn with_singularity_floor(mut self, floor: f64) -> Result<Self> {
        if !(floor > 0.0 && floor.is_finite()) {
            return Err(Error::domain(format!(
                "singularity floor must be positive, got {floor}"
            )));
        }
        self.singularity_floor = floor;
        Ok(self)
    }

    #[inline]
    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    #[inline]
    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    #[inline]
    pub fn singularity_floor(&self) -> f64 {
        self.singularity_floor
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            tolerance: Self::DEFAULT_TOLERANCE,
            max_terms: Self::DEFAULT_MAX_TERMS,
            singularity_floor: Self::DEFAULT_SINGULARITY_FLOOR,
        }
    }
}

/// Arguments `(b, t)` of the Jordan–Kronecker function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JKArgs {
    pub b: Complex64,
    pub t: Complex64,
}

impl JKArgs {
    pub fn new(b: Complex64, t: Complex64) -> Self {
        Self { b, t }
    }
}

/// Bilateral series `Σ tⁿ/(1 − b q^n)`, summed outward from `n = 0`.
///
/// The positive side decays like `|t|ⁿ`, the negative side like `(q/|t|)^m`;
/// each side stops on its own once a rigorous geometric bound on its remaining
/// tail drops below the tolerance.
pub fn jk_series(args: JKArgs, geom: &AnnulusGeometry, ctl: &SeriesControl) -> Result<Complex64> {
    let JKArgs { b, t } = args;
    let q = geom.q();
    let t_abs = t.norm();
    if !(t_abs > q && t_abs < 1.0) {
        return Err(Error::domain(format!(
            "series requires R² < |t| < 1, got |t| = {t_abs} with R² = {q}"
        )));
    }
    let b_abs = b.norm();
    if b_abs == 0.0 || !b_abs.is_finite() {
        return Err(Error::domain("series requires b ≠ 0"));
    }
    // b = q^{-n} for the integer n nearest to -log|b|/log q.
    let nearest = -(b_abs.ln() / q.ln()).round();
    if (Complex64::new(1.0, 0.0) - b * q.powf(nearest)).norm() < ctl.singularity_floor() {
        return Err(Error::domain(format!(
            "b lies on the pole locus b = R^(2k) (k = {})",
            -nearest
        )));
    }

    let one = Complex64::new(1.0, 0.0);
    let floor = ctl.singularity_floor();
    let tol = ctl.tolerance();

    let d0 = one - b;
    if d0.norm() < floor {
        return Err(Error::domain("b lies on the pole locus b = 1"));
    }
    let mut sum = one / d0;

    let ratio_neg = Complex64::new(q, 0.0) / t;
    let rho_pos = t_abs;
    let rho_neg = q / t_abs;

    let mut t_pow = one;
    let mut r_pow = one;
    let mut q_pow = 1.0;
    let mut pos_done = false;
    let mut neg_done = false;
    let mut n = 0usize;

    while !(pos_done && neg_done) {
        n += 1;
        if n > ctl.max_terms() {
            return Err(Error::NonConvergence { max_terms: ctl.max_terms() });
        }
        q_pow *= q;
        let q_next = q_pow * q;
        if !pos_done {
            t_pow *= t;
            let den = one - b * q_pow;
            if den.norm() < floor {
                return Err(Error::domain(format!("b lies on the pole locus (n = {n})")));
            }
            sum += t_pow / den;
            let bq = b_abs * q_next;
            if bq < 0.5 {
                let tail = rho_pos.powi(n as i32 + 1) / ((1.0 - rho_pos) * (1.0 - bq));
                pos_done = tail < tol;
            }
        }
        if !neg_done {
            r_pow *= ratio_neg;
            let den = q_pow - b;
            if den.norm() < floor * q_pow {
                return Err(Error::domain(format!("b lies on the pole locus (n = -{n})")));
            }
            sum += r_pow / den;
            if q_next < 0.5 * b_abs {
                let tail = rho_neg.powi(n as i32 + 1) / ((1.0 - rho_neg) * (b_abs - q_next));
                neg_done = tail < tol;
            }
        }
    }
    Ok(sum)
}

/// Meromorphic continuation of `f` through the ₁ψ₁ product identity.
pub fn jk_product(args: JKArgs, geom: &AnnulusGeometry, ctl: &SeriesControl) -> Result<Complex64> {
    product_impl(args, geom, ctl, false)
}

/// `(1 − t)·f(b, t)`, with the vanishing `j = 0` factor of `(t; q)∞` removed.
///
/// Finite at `t = 1`, where it equals the residue normalisation `1`.
pub fn jk_product_regularized(
    args: JKArgs,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
) -> Result<Complex64> {
    product_impl(args, geom, ctl, true)
}

fn product_impl(
    args: JKArgs,
    geom: &AnnulusGeometry,
    ctl: &SeriesControl,
    drop_t_pole: bool,
) -> Result<Complex64> {
    let JKArgs { b, t } = args;
    if b.norm() == 0.0 || t.norm() == 0.0 {
        return Err(Error::domain("product formula requires b ≠ 0 and t ≠ 0"));
    }
    let q = geom.q();
    let one = Complex64::new(1.0, 0.0);
    let bt = b * t;
    let floor = ctl.singularity_floor();
    let tol = ctl.tolerance();

    let mut value = one;
    let mut q_pow = 1.0;
    let mut settled = 0usize;
    let mut j = 0usize;
    loop {
        if j >= ctl.max_terms() {
            return Err(Error::NonConvergence { max_terms: ctl.max_terms() });
        }
        let q_next = q_pow * q;
        let num = [
            one - bt * q_pow,
            one - q_next / bt,
            Complex64::new(1.0 - q_next, 0.0),
            Complex64::new(1.0 - q_next, 0.0),
        ];
        let den_t = [one - t * q_pow, one - q_next / t];
        let den_b = [one - b * q_pow, one - q_next / b];

        for (k, d) in den_t.iter().enumerate() {
            if drop_t_pole && j == 0 && k == 0 {
                continue;
            }
            if d.norm() < floor {
                return Err(Error::Pole { locus: PoleLocus::T, index: j });
            }
        }
        for d in &den_b {
            if d.norm() < floor {
                return Err(Error::Pole { locus: PoleLocus::B, index: j });
            }
        }

        let mut factor = num[0] * num[1] * num[2] * num[3];
        factor /= den_b[0] * den_b[1] * den_t[1];
        if !(drop_t_pole && j == 0) {
            factor /= den_t[0];
        }
        value *= factor;

        let deviation = num
            .iter()
            .chain(den_t.iter())
            .chain(den_b.iter())
            .map(|f| (f - one).norm())
            .fold(0.0, f64::max);
        if deviation < tol {
            settled += 1;
            if settled == 4 {
                return Ok(value);
            }
        } else {
            settled = 0;
        }
        q_pow = q_next;
        j += 1;
    }
}

/// Points `t` with `f(b, t) = 0`: `bt = R^{-2j}` and `bt = R^{2j+2}`, `0 ≤ j ≤ j_max`.
pub fn jk_zero_locus(b: Complex64, geom: &AnnulusGeometry, j_max: usize) -> Result<Vec<Complex64>> {
    if b.norm() == 0.0 {
        return Err(Error::domain("zero locus requires b ≠ 0"));
    }
    let q = geom.q();
    let outer = (0..=j_max).map(|j| Complex64::new(q.powi(-(j as i32)), 0.0) / b);
    let inner = (0..=j_max).map(|j| Complex64::new(q.powi(j as i32 + 1), 0.0) / b);
    Ok(outer.chain(inner).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Plain partial sums over `|n| ≤ n_max`, the naive form of the series.
    fn brute_partial_sum(b: Complex64, t: Complex64, r: f64, n_max: i32) -> Complex64 {
        (-n_max..=n_max)
            .map(|n| t.powi(n) / (c(1.0, 0.0) - b * r.powi(2 * n)))
            .sum()
    }

    #[test]
    fn series_pole_at_b_equal_one() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let err = jk_series(JKArgs::new(c(1.0, 0.0), c(0.5, 0.0)), &geom, &SeriesControl::default());
        assert!(matches!(err, Err(Error::Domain(_))));
    }

    #[test]
    fn series_rejects_zero_b_and_bad_t() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let ctl = SeriesControl::default();
        assert!(matches!(
            jk_series(JKArgs::new(c(0.0, 0.0), c(0.5, 0.0)), &geom, &ctl),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            jk_series(JKArgs::new(c(-0.5, 0.0), c(0.2, 0.0)), &geom, &ctl),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            jk_series(JKArgs::new(c(-0.5, 0.0), c(0.0, 1.0)), &geom, &ctl),
            Err(Error::Domain(_))
        ));
        // b = R^{-4}
        assert!(matches!(
            jk_series(JKArgs::new(c(16.0, 0.0), c(0.5, 0.0)), &geom, &ctl),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn series_matches_brute_force_and_product() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let ctl = SeriesControl::default();
        let args = JKArgs::new(c(-0.5, 0.0), c(0.5, 0.0));
        let brute = brute_partial_sum(args.b, args.t, 0.5, 200);
        let s = jk_series(args, &geom, &ctl).unwrap();
        let p = jk_product(args, &geom, &ctl).unwrap();
        assert!((s - brute).norm() < 1e-12, "{s} vs {brute}");
        assert!((s - p).norm() < 1e-10, "{s} vs {p}");
    }

    #[test]
    fn series_vanishes_on_zero_locus() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let ctl = SeriesControl::default();
        // bt = R², |t| inside the series annulus.
        let b = c(0.3, 0.4);
        let t = c(0.25, 0.0) / b;
        assert!(t.norm() > geom.q() && t.norm() < 1.0);
        let s = jk_series(JKArgs::new(b, t), &geom, &ctl).unwrap();
        assert!(s.norm() < 1e-12, "{s}");
    }

    #[test]
    fn product_zero_and_t_pole() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let ctl = SeriesControl::default();
        let b = c(-0.7, 0.2);
        let p = jk_product(JKArgs::new(b, c(0.25, 0.0) / b), &geom, &ctl).unwrap();
        assert!(p.norm() < 1e-14);
        let err = jk_product(JKArgs::new(b, c(1.0, 0.0)), &geom, &ctl);
        assert_eq!(err, Err(Error::Pole { locus: PoleLocus::T, index: 0 }));
        let err = jk_product(JKArgs::new(c(0.25, 0.0), c(0.5, 0.1)), &geom, &ctl);
        assert_eq!(err, Err(Error::Pole { locus: PoleLocus::B, index: 0 }));
        let err = jk_product(JKArgs::new(c(0.5, 0.1), c(0.0625, 0.0)), &geom, &ctl);
        assert_eq!(err, Err(Error::Pole { locus: PoleLocus::T, index: 1 }));
    }

    #[test]
    fn regularized_product_has_unit_residue() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let ctl = SeriesControl::default();
        let b = c(-0.5, 0.3);
        let at_one = jk_product_regularized(JKArgs::new(b, c(1.0, 0.0)), &geom, &ctl).unwrap();
        assert!((at_one - 1.0).norm() < 1e-13);
        let t = c(0.9, 0.0);
        let reg = jk_product_regularized(JKArgs::new(b, t), &geom, &ctl).unwrap();
        let full = jk_product(JKArgs::new(b, t), &geom, &ctl).unwrap();
        assert!((reg - (1.0 - t) * full).norm() < 1e-13);
    }

    #[test]
    fn zero_locus_examples() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let z = jk_zero_locus(c(1.0, 0.0), &geom, 0).unwrap();
        assert_eq!(z, vec![c(1.0, 0.0), c(0.25, 0.0)]);
        let z = jk_zero_locus(c(-0.5, 0.0), &geom, 0).unwrap();
        assert_eq!(z, vec![c(-2.0, 0.0), c(-0.5, 0.0)]);
        assert!(jk_zero_locus(c(0.0, 0.0), &geom, 3).is_err());
    }

    #[test]
    fn zero_locus_points_are_zeros() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let ctl = SeriesControl::default();
        let b = c(-0.5, 0.0);
        for t in jk_zero_locus(b, &geom, 3).unwrap() {
            let v = jk_product(JKArgs::new(b, t), &geom, &ctl).unwrap();
            assert!(v.norm() < 1e-9, "f(b, {t}) = {v}");
        }
    }

    #[test]
    fn radial_residue_at_t_one() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let ctl = SeriesControl::default();
        let b = c(-0.5, 0.0);
        let mut last = f64::INFINITY;
        for k in 1..=6 {
            let t = c(1.0 - 10f64.powi(-k), 0.0);
            let v = (1.0 - t) * jk_product(JKArgs::new(b, t), &geom, &ctl).unwrap();
            let err = (v - 1.0).norm();
            assert!(err < last);
            last = err;
        }
        assert!(last < 1e-5);
    }

    #[test]
    fn control_validation() {
        assert!(SeriesControl::new(0.0, 100).is_err());
        assert!(SeriesControl::new(1e-10, 7).is_err());
        assert!(SeriesControl::new(1e-10, 8).is_ok());
        assert!(AnnulusGeometry::new(1.0).is_err());
        assert!(AnnulusGeometry::new(0.0).is_err());
        assert!(AnnulusGeometry::new(f64::NAN).is_err());
    }

    #[test]
    fn series_nonconvergence_is_reported() {
        let geom = AnnulusGeometry::new(0.5).unwrap();
        let ctl = SeriesControl::new(1e-14, 50).unwrap();
        let err = jk_series(JKArgs::new(c(-0.5, 0.0), c(0.999, 0.0)), &geom, &ctl);
        assert_eq!(err, Err(Error::NonConvergence { max_terms: 50 }));
    }
}
