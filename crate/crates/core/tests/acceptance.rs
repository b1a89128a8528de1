//! End-to-end acceptance checks, one test per criterion.
//!
//! Run with `--nocapture` to see the PASS/FAIL summary lines.

use std::f64::consts::PI;
use std::time::Instant;

use hardy_curvature::characters::{chars_equivalent, extremal_alpha, harmonic_measure, reduce_mod1};
use hardy_curvature::curvature::{
    curvature_bound, curvature_fd, curvature_log_annulus, curvature_log_disc, curvature_report, szego_diag, FdDomain,
    DEFAULT_EXTREMAL_TOL,
};
use hardy_curvature::extremal_solver::ahlfors_map;
use hardy_curvature::extremal_solver::solve_extremal;
use hardy_curvature::hardy_kernels::{garabedian_kernel, hardy_kernel, szego_disc, szego_zero};
use hardy_curvature::qkernel::{jk_product, jk_series};
use hardy_curvature::shift_model::{shift_weight, weight_increment};
use hardy_curvature::{AnnulusGeometry, AnnulusPoint, JKArgs, SeriesControl, WeightExponent};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn geom(r: f64) -> AnnulusGeometry {
    AnnulusGeometry::new(r).unwrap()
}

fn ctl() -> SeriesControl {
    SeriesControl::default()
}

fn zeta_set() -> [Complex64; 3] {
    [
        Complex64::new(0.6, 0.0),
        Complex64::from_polar(0.7, PI / 3.0),
        Complex64::new(-0.8, 0.0),
    ]
}

fn verdict(id: &str, ok: bool, detail: String) {
    println!("criterion {id:>2}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {detail}");
}

#[test]
fn criterion_01_series_matches_product() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut worst = 0.0f64;
    for r in [0.3, 0.5, 0.7] {
        let g = geom(r);
        let q = g.q();
        let mut accepted = 0;
        while accepted < 100 {
            let t = Complex64::from_polar(rng.gen_range(q * 1.02..0.98), rng.gen_range(-PI..PI));
            let b = Complex64::from_polar(rng.gen_range(0.05..3.0), rng.gen_range(-PI..PI));
            // Stay away from the pole locus b = q^{-n}.
            let clearance = (-60..=60).map(|n: i32| (Complex64::new(1.0, 0.0) - b * q.powi(n)).norm()).fold(f64::INFINITY, f64::min);
            if clearance < 1e-2 {
                continue;
            }
            let args = JKArgs::new(b, t);
            let s = jk_series(args, &g, &ctl()).unwrap();
            let p = jk_product(args, &g, &ctl()).unwrap();
            worst = worst.max((s - p).norm() / p.norm());
            accepted += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    verdict("1", worst < 1e-9 && secs < 5.0, format!("max relative difference {worst:.3e}, {secs:.2} s"));
}

#[test]
fn criterion_02_disc_equality() {
    let mut worst = 0.0f64;
    for i in 1..=5 {
        for k in 0..10 {
            let w = Complex64::from_polar(0.95 * i as f64 / 5.0, 2.0 * PI * k as f64 / 10.0);
            let s = szego_disc(w, w).unwrap().re;
            let lhs = curvature_log_disc(w).unwrap();
            let rhs = 4.0 * PI * PI * s * s;
            worst = worst.max((lhs - rhs).abs() / rhs.max(1.0));
        }
    }
    verdict("2", worst < 1e-12, format!("max scaled difference over 50 points {worst:.3e}"));
}

#[test]
fn criterion_03_suita_strictness() {
    let g = geom(0.5);
    let mut min_gap = f64::INFINITY;
    for i in 0..9 {
        let r = 0.55 + 0.05 * i as f64;
        let p = AnnulusPoint::interior(Complex64::new(r, 0.0), &g).unwrap();
        let rep = curvature_report(0.0, p, &g, &ctl(), DEFAULT_EXTREMAL_TOL).unwrap();
        min_gap = min_gap.min(rep.gap);
    }
    let threshold = 100.0 * DEFAULT_EXTREMAL_TOL;
    verdict("3", min_gap > threshold, format!("min gap {min_gap:.3e} vs {threshold:.1e}"));
}

#[test]
fn criterion_04_extremality_and_uniqueness() {
    let mut extremal_ok = true;
    let mut uniqueness_ok = true;
    let mut worst_extremal_gap = 0.0f64;
    let mut worst_ratio = f64::INFINITY;
    let mut cell_counts = Vec::new();
    for r in [0.3, 0.5] {
        let g = geom(r);
        for zeta in zeta_set() {
            let p = AnnulusPoint::interior(zeta, &g).unwrap();
            let a_star = extremal_alpha(zeta, &g).unwrap();
            let rep = curvature_report(a_star, p, &g, &ctl(), DEFAULT_EXTREMAL_TOL).unwrap();
            worst_extremal_gap = worst_extremal_gap.max(rep.gap.abs());
            extremal_ok &= rep.gap.abs() < 1e-8;

            let star_cell = (a_star * 100.0).floor() as usize % 100;
            let mut extremal_cells = vec![star_cell];
            for k in 0..100 {
                let alpha = k as f64 / 100.0;
                let rep = curvature_report(alpha, p, &g, &ctl(), DEFAULT_EXTREMAL_TOL).unwrap();
                if rep.extremal && k != star_cell {
                    extremal_cells.push(k);
                }
                if k == star_cell {
                    continue;
                }
                let threshold = 1e-4 * rep.bound.max(1.0);
                worst_ratio = worst_ratio.min(rep.gap / threshold);
                uniqueness_ok &= rep.gap > threshold;
            }
            uniqueness_ok &= extremal_cells.len() == 1;
            cell_counts.push(extremal_cells.len());
        }
    }
    verdict(
        "4",
        extremal_ok && uniqueness_ok,
        format!(
            "max |gap| at extremal alpha {worst_extremal_gap:.3e}; min gap/threshold off the extremal cell {worst_ratio:.3e}; extremal cells per zeta {cell_counts:?}"
        ),
    );
}

#[test]
fn criterion_05_szego_zero() {
    let mut worst = 0.0f64;
    for r in [0.3, 0.5] {
        let g = geom(r);
        for zeta in zeta_set() {
            let w = AnnulusPoint::interior(zeta, &g).unwrap();
            let z = AnnulusPoint::new(szego_zero(w, &g), &g).unwrap();
            worst = worst.max(hardy_kernel(0.0, z, w, &g, &ctl()).unwrap().norm());
        }
    }
    verdict("5", worst < 1e-10, format!("max |S(-R/conj(zeta), zeta)| {worst:.3e}"));
}

#[test]
fn criterion_06_garabedian_criterion() {
    let mut worst_star = 0.0f64;
    let mut worst_jk = 0.0f64;
    let mut min_shifted = f64::INFINITY;
    for r in [0.3, 0.5] {
        let g = geom(r);
        for zeta in zeta_set() {
            let w = AnnulusPoint::interior(zeta, &g).unwrap();
            let z0 = szego_zero(w, &g);
            let a_star = extremal_alpha(zeta, &g).unwrap();
            worst_star = worst_star.max(garabedian_kernel(a_star, z0, w, &g, &ctl()).unwrap().norm());
            let shifted = reduce_mod1(a_star + 0.5);
            min_shifted = min_shifted.min(garabedian_kernel(shifted, z0, w, &g, &ctl()).unwrap().norm());
            let b = g.kernel_b(WeightExponent::new(a_star));
            let t = Complex64::new(-zeta.norm_sqr() / r, 0.0);
            worst_jk = worst_jk.max(jk_product(JKArgs::new(b, t), &g, &ctl()).unwrap().norm());
        }
    }
    let ok = worst_star < 1e-8 && worst_jk < 1e-8 && min_shifted > 100.0 * 1e-8;
    verdict(
        "6",
        ok,
        format!("max |L(alpha*)| {worst_star:.3e}, max |f| {worst_jk:.3e}, min |L(alpha*+1/2)| {min_shifted:.3e}"),
    );
}

#[test]
fn criterion_07_boundary_conjugate_identity() {
    // Outer circle: conj(K)·1 = z·L. Inner circle, with the clockwise
    // orientation of arclength: conj(K)·R^{2α} = −(z/R)·L.
    let mut worst = 0.0f64;
    for r in [0.3, 0.5] {
        let g = geom(r);
        let w = AnnulusPoint::interior(Complex64::new(0.7, 0.0), &g).unwrap();
        for alpha in [0.0, 0.37, extremal_alpha(w.value(), &g).unwrap()] {
            let mu_inner = r.powf(2.0 * alpha);
            for (radius, mu, factor) in [(1.0, 1.0, 1.0), (r, mu_inner, -1.0 / r)] {
                for k in 0..256 {
                    let z = Complex64::from_polar(radius, 2.0 * PI * (k as f64 + 0.5) / 256.0);
                    let zp = AnnulusPoint::new(z, &g).unwrap();
                    let lhs = hardy_kernel(alpha, zp, w, &g, &ctl()).unwrap().conj() * mu;
                    let rhs = factor * z * garabedian_kernel(alpha, z, w, &g, &ctl()).unwrap();
                    worst = worst.max((lhs - rhs).norm());
                }
            }
        }
    }
    verdict("7", worst < 1e-9, format!("max boundary residual {worst:.3e}"));
}

#[test]
fn criterion_08_extremal_closed_form() {
    let mut worst_general = 0.0f64;
    let mut worst_star = 0.0f64;
    let mut slowest = 0.0f64;
    for r in [0.3, 0.5] {
        let g = geom(r);
        for zeta in zeta_set() {
            let p = AnnulusPoint::interior(zeta, &g).unwrap();
            let a_star = extremal_alpha(zeta, &g).unwrap();
            for alpha in [0.0, 0.37, a_star] {
                let start = Instant::now();
                let sol = solve_extremal(alpha, p, 80, &g).unwrap();
                slowest = slowest.max(start.elapsed().as_secs_f64());
                let k = hardy_kernel(alpha, p, p, &g, &ctl()).unwrap().re;
                let curv = curvature_log_annulus(alpha, p, &g, &ctl()).unwrap();
                let expect = 1.0 / (k * curv);
                worst_general = worst_general.max((sol.value - expect).abs() / expect);
                if alpha == a_star {
                    let s = szego_diag(p, &g, &ctl()).unwrap();
                    let expect = 1.0 / (k * curvature_bound(s));
                    worst_star = worst_star.max((sol.value - expect).abs() / expect);
                }
            }
        }
    }
    verdict(
        "8",
        worst_general < 1e-6 && worst_star < 1e-6 && slowest < 1.0,
        format!("max relative residual {worst_general:.3e}, at alpha* {worst_star:.3e}, slowest solve {slowest:.3} s"),
    );
}

#[test]
fn criterion_09_ahlfors_map() {
    let mut worst_modulus = 0.0f64;
    let mut worst_zero = 0.0f64;
    let mut worst_deriv = 0.0f64;
    for r in [0.3, 0.5] {
        let g = geom(r);
        for zeta in zeta_set() {
            let p = AnnulusPoint::interior(zeta, &g).unwrap();
            for radius in [r, 1.0] {
                for k in 0..256 {
                    let z = Complex64::from_polar(radius, 2.0 * PI * k as f64 / 256.0);
                    worst_modulus = worst_modulus.max((ahlfors_map(z, p, &g, &ctl()).unwrap().norm() - 1.0).abs());
                }
            }
            worst_zero = worst_zero.max(ahlfors_map(zeta, p, &g, &ctl()).unwrap().norm());
            // Fourth-order central difference.
            let h = 1e-3;
            let f = |d: f64| ahlfors_map(zeta + Complex64::new(d, 0.0), p, &g, &ctl()).unwrap();
            let deriv = (f(-2.0 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2.0 * h)) / (12.0 * h);
            let target = 2.0 * PI * szego_diag(p, &g, &ctl()).unwrap();
            worst_deriv = worst_deriv.max((deriv - target).norm());
        }
    }
    verdict(
        "9",
        worst_modulus < 1e-9 && worst_zero < 1e-10 && worst_deriv < 1e-6,
        format!("max ||F|-1| {worst_modulus:.3e}, max |F(zeta)| {worst_zero:.3e}, max |F'(zeta)-2pi S| {worst_deriv:.3e}"),
    );
}

#[test]
fn criterion_10_finite_difference() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let g = geom(0.5);
    let alpha = 0.37;
    let diag = |z: Complex64| -> hardy_curvature::Result<f64> {
        let p = AnnulusPoint::new(z, &g)?;
        Ok(hardy_kernel(alpha, p, p, &g, &ctl())?.re)
    };
    let mut worst_rel = 0.0f64;
    let mut worst_ratio = f64::INFINITY;
    for _ in 0..10 {
        let w = Complex64::from_polar(rng.gen_range(0.6..0.9), rng.gen_range(-PI..PI));
        let p = AnnulusPoint::interior(w, &g).unwrap();
        let exact = curvature_log_annulus(alpha, p, &g, &ctl()).unwrap();
        let h = 5e-4;
        let e1 = (curvature_fd(diag, w, h, FdDomain::Annulus(g)).unwrap() - exact).abs();
        let e2 = (curvature_fd(diag, w, h / 2.0, FdDomain::Annulus(g)).unwrap() - exact).abs();
        worst_rel = worst_rel.max(e1 / exact);
        worst_ratio = worst_ratio.min(e1 / e2);
    }
    verdict(
        "10",
        worst_rel < 1e-5 && worst_ratio >= 3.0,
        format!("max relative error {worst_rel:.3e}, min error ratio on halving h {worst_ratio:.2}"),
    );
}

#[test]
fn criterion_11_shift_identities() {
    let mut bitwise = true;
    let mut increasing = true;
    let mut worst_limit = 0.0f64;
    for r in [0.3, 0.5, 0.7] {
        let g = geom(r);
        for alpha in [0.0, 0.37, 0.5, 0.81] {
            let a = WeightExponent::new(alpha);
            for n in -64..=64 {
                bitwise &= shift_weight(a.shifted(1), n, &g).to_bits() == shift_weight(a, n + 1, &g).to_bits();
                increasing &= weight_increment(a, n, &g) > 0.0;
                increasing &= shift_weight(a, n + 1, &g) >= shift_weight(a, n, &g);
            }
            worst_limit = worst_limit.max((shift_weight(a, -200, &g) - r).abs());
            worst_limit = worst_limit.max((shift_weight(a, 200, &g) - 1.0).abs());
        }
    }
    verdict(
        "11",
        bitwise && increasing && worst_limit < 1e-10,
        format!("bitwise {bitwise}, strictly increasing {increasing}, max limit error {worst_limit:.3e}"),
    );
}

#[test]
fn criterion_12_character_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0012);
    let mut worst = 0.0f64;
    let mut consistent = true;
    for r in [0.3, 0.5, 0.7] {
        let g = geom(r);
        for _ in 0..20 {
            let zeta = Complex64::from_polar(rng.gen_range(r * 1.001..0.999), rng.gen_range(-PI..PI));
            let w = AnnulusPoint::interior(zeta, &g).unwrap();
            let total = harmonic_measure(zeta, &g).unwrap() + harmonic_measure(szego_zero(w, &g), &g).unwrap();
            worst = worst.max((total - 1.0).abs());
            // The extremal character at ζ is the harmonic measure of the Szegő zero.
            let a = extremal_alpha(zeta, &g).unwrap();
            consistent &= chars_equivalent(a, harmonic_measure(szego_zero(w, &g), &g).unwrap());
        }
    }
    verdict("12", worst < 1e-14 && consistent, format!("max |omega(zeta) + omega(-R/conj(zeta)) - 1| {worst:.3e}"));
}
