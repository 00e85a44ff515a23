//! The extremal function `f₀` of the bean class and its growth, distortion,
//! rotation and covering numerics.
//!
//! `f₀(z) = z·exp ∫₀^z (𝔅(t)−1)/t dt` is the member with `zf₀'/f₀ = 𝔅`;
//! its Taylor series starts `z + z²/2 + z³/16 − 13z⁴/288 − 11z⁵/1152`.
//! On the real segment it is evaluated by adaptive quadrature (the series is
//! not known to converge at `|z| = 1`); at complex arguments the truncated
//! series is used with an explicit tail-bound guard, restricted to
//! `|z| ≤ 0.95`.

use std::sync::OnceLock;

use num::complex::Complex64;
use num::traits::ToPrimitive;

use crate::bean::eval_bean;
use crate::error::{Error, Result};
use crate::geometry::modulus_extremum_angle;
use crate::series::{
    bean_series_rational, series_exp_integrate_rational, PowerSeries, RationalSeries,
    DEFAULT_DEGREE, MAX_DEGREE,
};
use crate::solve::{extremize, Interval, Sense, SolveConfig};

/// Default truncation degree for complex-argument evaluation.
pub const ROTATION_DEGREE: usize = DEFAULT_DEGREE;

/// Tail-bound ceiling for series evaluation at complex arguments.
pub const TAIL_LIMIT: f64 = 1e-8;

/// Series of `f₀` to degree `n + 1`, the image of the bean series of degree
/// `n` under the integral representation.
pub fn f0_series(n: usize) -> Result<PowerSeries> {
    Ok(f0_series_rational(n)?.to_power_series())
}

/// Exact rational form of [`f0_series`].
pub fn f0_series_rational(n: usize) -> Result<RationalSeries> {
    if !(1..=MAX_DEGREE).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "f0_series: degree {n} not in 1..={MAX_DEGREE}"
        )));
    }
    series_exp_integrate_rational(&bean_series_rational(n)?)
}

/// Coefficients `a₀..a₆₄` of `f₀` as floats, computed once from the exact
/// rationals.
fn f0_coeffs() -> &'static [f64] {
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    COEFFS.get_or_init(|| {
        f0_series_rational(MAX_DEGREE - 1)
            .expect("degree in range")
            .coeffs()
            .iter()
            .map(|c| c.to_f64().expect("coefficient fits in f64"))
            .collect()
    })
}

/// `𝔅` on the real segment.
fn bean_real(t: f64) -> f64 {
    (2.0 / (1.0 + (-2.0 * t).exp())).sqrt()
}

/// `(𝔅(t) − 1)/t` extended by its limit ½ at `t = 0`.
fn f0_integrand(t: f64) -> f64 {
    if t == 0.0 {
        0.5
    } else {
        (bean_real(t) - 1.0) / t
    }
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
}

fn adaptive_simpson(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> Result<f64> {
    if depth == 0 {
        return Err(Error::QuadratureNonConvergence { tol });
    }
    let m = 0.5 * (a + b);
    let left = simpson(f, a, m);
    let right = simpson(f, m, b);
    if (left + right - whole).abs() <= 15.0 * tol {
        return Ok(left + right + (left + right - whole) / 15.0);
    }
    Ok(adaptive_simpson(f, a, m, left, tol / 2.0, depth - 1)?
        + adaptive_simpson(f, m, b, right, tol / 2.0, depth - 1)?)
}

/// `f₀` on the real segment `[−1, 1]` by adaptive quadrature at tolerance `tol`.
pub fn f0_value_with_tol(x: f64, tol: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("f0_value: x = {x} not in [−1, 1]")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let (a, b, sign) = if x > 0.0 { (0.0, x, 1.0) } else { (x, 0.0, -1.0) };
    let whole = simpson(&f0_integrand, a, b);
    let integral = sign * adaptive_simpson(&f0_integrand, a, b, whole, tol, 48)?;
    Ok(x * integral.exp())
}

/// `f₀` on the real segment at the default tolerance `1e−10`.
pub fn f0_value(x: f64) -> Result<f64> {
    f0_value_with_tol(x, 1e-10)
}

/// Radius of the disk covered by every non-rotation member of the class:
/// `−f₀(−1)`.
pub fn covering_radius() -> Result<f64> {
    covering_radius_with_tol(1e-10)
}

pub fn covering_radius_with_tol(tol: f64) -> Result<f64> {
    Ok(-f0_value_with_tol(-1.0, tol)?)
}

/// Which distortion regime `r` falls in, split at `r₀ ≈ 0.639` where the
/// maximum of `|𝔅|` on `|z| = r` leaves the real axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    BelowR0,
    AboveR0,
}

/// Growth and distortion bounds at radius `r`: `−f₀(−r) ≤ |f| ≤ f₀(r)` and
/// `f₀'(−r) ≤ |f'| ≤` either `f₀'(r)` (below `r₀`) or
/// `|𝔅(re^{iθ₀})| f₀(r)/r` (above).
#[derive(Debug, Clone, Copy)]
pub struct GrowthRecord {
    pub r: f64,
    pub lower: f64,
    pub upper: f64,
    pub d_lower: f64,
    pub d_upper: f64,
    pub regime: Regime,
}

/// `f₀'(x) = f₀(x)·𝔅(x)/x` from the defining subordination.
fn f0_derivative(x: f64) -> Result<f64> {
    Ok(f0_value(x)? * bean_real(x) / x)
}

pub fn growth_distortion(r: f64) -> Result<GrowthRecord> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!("growth_distortion: r = {r} not in (0, 1)")));
    }
    let lower = -f0_value(-r)?;
    let upper = f0_value(r)?;
    let d_lower = f0_derivative(-r)?;
    let (theta_max, interior) = modulus_extremum_angle(r)?;
    let (regime, d_upper) = if interior {
        let z = Complex64::new(r * theta_max.cos(), r * theta_max.sin());
        (Regime::AboveR0, eval_bean(z)?.norm() * upper / r)
    } else {
        (Regime::BelowR0, f0_derivative(r)?)
    };
    Ok(GrowthRecord {
        r,
        lower,
        upper,
        d_lower,
        d_upper,
        regime,
    })
}

/// Upper bound on the series tail `Σ_{n>deg} |aₙ| r^n` from the computed
/// coefficients through degree 64 plus a geometric extension (the nearest
/// singularity of `f₀` sits at `|z| = π/2`, so the coefficients decay like
/// `(2/π)^n`; ratio 0.68 leaves margin).
fn tail_bound(deg: usize, r: f64) -> f64 {
    let coeffs = f0_coeffs();
    let explicit: f64 = (deg + 1..coeffs.len())
        .map(|n| coeffs[n].abs() * r.powi(n as i32))
        .sum();
    let q: f64 = 0.68;
    let k = (56..coeffs.len())
        .map(|n| coeffs[n].abs() / q.powi(n as i32))
        .fold(0.0, f64::max);
    let qr = q * r;
    let geometric = k * qr.powi(coeffs.len() as i32) / (1.0 - qr);
    explicit + geometric
}

/// Sharp rotation bound `max_{|z|=r} arg(f₀(z)/z)` via series evaluation at
/// the given truncation degree.
pub fn rotation_bound_with_degree(r: f64, degree: usize) -> Result<f64> {
    if !(r > 0.0 && r <= 0.95) {
        return Err(Error::Domain(format!("rotation_bound: r = {r} not in (0, 0.95]")));
    }
    if !(4..=MAX_DEGREE).contains(&degree) {
        return Err(Error::InvalidParameter(format!(
            "rotation_bound: degree {degree} not in 4..={MAX_DEGREE}"
        )));
    }
    let tail = tail_bound(degree, r);
    if tail > TAIL_LIMIT {
        return Err(Error::SeriesAccuracy {
            bound: tail,
            limit: TAIL_LIMIT,
            radius: r,
        });
    }
    // f₀(z)/z = Σ a_{k+1} z^k, evaluated directly
    let coeffs = f0_coeffs();
    let shifted: Vec<Complex64> = (1..=degree)
        .map(|n| Complex64::new(coeffs[n], 0.0))
        .collect();
    let series = PowerSeries::new(shifted);
    let arg_at = |theta: f64| {
        let z = Complex64::new(r * theta.cos(), r * theta.sin());
        series.eval(z).arg()
    };
    let iv = Interval::new(0.0, std::f64::consts::PI)?;
    let (_, max_arg) = extremize(arg_at, iv, Sense::Max, &SolveConfig::default())?;
    Ok(max_arg)
}

pub fn rotation_bound(r: f64) -> Result<f64> {
    rotation_bound_with_degree(r, ROTATION_DEGREE)
}
