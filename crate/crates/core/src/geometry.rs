//! The boundary curve of the bean region, its sharp bounds, inscribed and
//! enclosing disks, and the inclusion thresholds.
//!
//! On `|z| = r` the bean function has the polar form
//!
//! ```text
//! 𝔅(re^{iθ}) = e^{r cos θ} (M + S + iN) / (S sqrt(M + S)),   S = sqrt(M² + N²),
//! M = e^{2r cos θ} + cos(2r sin θ),   N = sin(2r sin θ),
//! ```
//!
//! with argument `T = ½ arctan(N/M)`. Everything in this module is built from
//! that display plus the two scalar-solve primitives.

use num::complex::Complex64;

use crate::bean::in_bean_region;
use crate::constants;
use crate::error::{Error, Result};
use crate::solve::{extremize, smallest_root, Interval, Sense, SolveConfig};

/// Sampling density for containment scans and critical-point detection.
pub const DEFAULT_BOUNDARY_SAMPLES: usize = 2048;

/// A point of the boundary curve of `𝔅(𝔻_r)` together with the polar-form
/// ingredients it was built from.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryPoint {
    pub theta: f64,
    /// `M = e^{2r cos θ} + cos(2r sin θ)`.
    pub m: f64,
    /// `N = sin(2r sin θ)`.
    pub n: f64,
    /// Half-arctan angle `T = ½ arctan(N/M)`, the argument of the value.
    pub t: f64,
    /// The boundary value itself.
    pub w: Complex64,
}

/// A disk given by center and radius, the unit of containment reasoning.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Complex64,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Complex64, radius: f64) -> Result<Self> {
        if radius < 0.0 {
            return Err(Error::InvalidParameter("disk radius must be ≥ 0".into()));
        }
        Ok(Self { center, radius })
    }

    /// `count` evenly spaced points of the bounding circle, starting at angle 0.
    pub fn boundary_samples(&self, count: usize) -> Vec<Complex64> {
        (0..count)
            .map(|j| {
                let t = 2.0 * std::f64::consts::PI * j as f64 / count as f64;
                self.center + self.radius * Complex64::new(t.cos(), t.sin())
            })
            .collect()
    }
}

fn mn(r: f64, theta: f64) -> (f64, f64) {
    let m = (2.0 * r * theta.cos()).exp() + (2.0 * r * theta.sin()).cos();
    let n = (2.0 * r * theta.sin()).sin();
    (m, n)
}

/// Evaluate the polar closed form of `𝔅(re^{iθ})`.
pub fn boundary_point(r: f64, theta: f64) -> Result<BoundaryPoint> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::Domain(format!("boundary_point: r = {r} not in (0, 1]")));
    }
    let (m, n) = mn(r, theta);
    let s = m.hypot(n);
    let t = 0.5 * n.atan2(m);
    let pre = (r * theta.cos()).exp();
    let denom = s * (m + s).sqrt();
    let w = Complex64::new(pre * (m + s) / denom, pre * n / denom);
    Ok(BoundaryPoint { theta, m, n, t, w })
}

/// Ordered `(θ, Re w, Im w)` triples of the boundary of `𝔅(𝔻_r)`, θ over
/// `[0, 2π)`. This is the curve-export surface consumed by the CLI.
pub fn curve_samples(r: f64, count: usize) -> Result<Vec<(f64, f64, f64)>> {
    if count < 1 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    (0..count)
        .map(|j| {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / count as f64;
            boundary_point(r, theta).map(|p| (theta, p.w.re, p.w.im))
        })
        .collect()
}

/// `R(θ) = Re 𝔅(e^{iθ})` in closed form.
pub fn re_on_unit_circle(theta: f64) -> f64 {
    let (m, n) = mn(1.0, theta);
    let s = m.hypot(n);
    theta.cos().exp() * (m + s).sqrt() / s
}

/// `I(θ) = Im 𝔅(e^{iθ})` in closed form.
pub fn im_on_unit_circle(theta: f64) -> f64 {
    let (m, n) = mn(1.0, theta);
    let s = m.hypot(n);
    theta.cos().exp() * n / (s * (m + s).sqrt())
}

/// `A(θ) = |𝔅(e^{iθ})|²` in closed form.
pub fn mod_sq_on_unit_circle(theta: f64) -> f64 {
    let (m, n) = mn(1.0, theta);
    2.0 * (2.0 * theta.cos()).exp() / m.hypot(n)
}

/// `T(θ) = v²/(4u)` on the unit circle (`u + iv = 𝔅(e^{iθ})`): the smallest
/// parabola parameter whose region contains the boundary point.
pub fn parabolic_gauge(theta: f64) -> f64 {
    let (m, n) = mn(1.0, theta);
    let s = m.hypot(n);
    theta.cos().exp() * n * n / (4.0 * s * (m + s).powf(1.5))
}

/// The sharp extrema of Re, Im, modulus and argument of `𝔅` on the unit
/// circle, with the attaining angles.
#[derive(Debug, Clone, Copy)]
pub struct BoundSet {
    pub re_min: f64,
    pub re_max: f64,
    pub im_abs_max: f64,
    pub mod_min: f64,
    pub mod_max: f64,
    pub arg_abs_max: f64,
    /// Angle attaining `re_max`.
    pub theta_re: f64,
    /// Angle attaining `im_abs_max`.
    pub theta_im: f64,
    /// Angle attaining `mod_max`.
    pub theta_mod: f64,
}

/// Extremize `R`, `I`, `A` and the argument over `[0, π]`.
///
/// The minima of both `Re` and `|·|` sit at `θ = π` where the value is
/// `sqrt(2/(1+e²))`; the maxima are interior and found numerically.
pub fn sharp_bounds_with(cfg: &SolveConfig) -> Result<BoundSet> {
    let iv = Interval::new(0.0, std::f64::consts::PI)?;
    let (theta_re, re_max) = extremize(re_on_unit_circle, iv, Sense::Max, cfg)?;
    let (theta_im, im_abs_max) = extremize(im_on_unit_circle, iv, Sense::Max, cfg)?;
    let (theta_mod, a_max) = extremize(mod_sq_on_unit_circle, iv, Sense::Max, cfg)?;
    let arg_of = |theta: f64| {
        let (m, n) = mn(1.0, theta);
        (0.5 * n.atan2(m)).abs()
    };
    let (_, arg_abs_max) = extremize(arg_of, iv, Sense::Max, cfg)?;
    Ok(BoundSet {
        re_min: constants::bean_min(),
        re_max,
        im_abs_max,
        mod_min: constants::bean_min(),
        mod_max: a_max.sqrt(),
        arg_abs_max,
        theta_re,
        theta_im,
        theta_mod,
    })
}

pub fn sharp_bounds() -> Result<BoundSet> {
    sharp_bounds_with(&SolveConfig::default())
}

/// Numerator `G_n(r, t)` of `Re(1 + z𝔅''/𝔅')` on `z = re^{it}`; the function
/// is convex on `|z| ≤ r` exactly while this stays positive.
pub fn convexity_numerator(r: f64, t: f64) -> f64 {
    let (c, s) = (t.cos(), t.sin());
    1.0 + r * c
        + (4.0 * r * c).exp() * (1.0 - 2.0 * r * c)
        + (2.0 * r * c).exp()
            * (2.0 * (2.0 * r * s).cos()
                + r * ((t - 2.0 * r * s).cos() - 2.0 * (t + 2.0 * r * s).cos()))
}

/// Radius of convexity of the bean function: the smallest positive root of
/// `G_n(r, 0) = 1 + 2e^{2r} + e^{4r} − (−1 + e^{2r} + 2e^{4r}) r ≈ 0.7074`.
pub fn convexity_radius() -> Result<f64> {
    let iv = Interval::new(0.0, 1.0)?;
    smallest_root(
        |r| convexity_numerator(r, 0.0),
        iv,
        &SolveConfig::default(),
    )
}

/// Radius of the largest disk centered at real `alpha` that fits inside the
/// bean region. Piecewise linear in `alpha` with the two arms meeting at
/// `α₀ = (1+e)/sqrt(2(1+e²))`.
pub fn inscribed_radius(alpha: f64) -> Result<f64> {
    let (lo, hi) = (constants::bean_min(), constants::r0());
    if !(alpha > lo && alpha < hi) {
        return Err(Error::Domain(format!(
            "inscribed_radius: alpha = {alpha} not in ({lo}, {hi})"
        )));
    }
    if alpha <= constants::alpha0() {
        Ok(alpha - lo)
    } else {
        Ok(hi - alpha)
    }
}

/// Squared distance from the real point `(alpha, 0)` to the boundary point
/// `𝔅(e^{iθ})`, in the closed two-term form.
pub fn distance_sq_to_boundary(alpha: f64, theta: f64) -> f64 {
    let (m, n) = mn(1.0, theta);
    let s = m.hypot(n);
    let im_sq = (2.0 * theta.cos()).exp() * n * n / ((m * m + n * n) * (m + s));
    let re = theta.cos().exp() * (m + s).sqrt() / s;
    im_sq + (alpha - re) * (alpha - re)
}

fn check_enclosing_domain(alpha: f64) -> Result<()> {
    let (lo, hi) = (constants::bean_min(), constants::r0());
    if !(alpha > lo && alpha < hi) {
        return Err(Error::Domain(format!(
            "enclosing_radius: alpha = {alpha} not in ({lo}, {hi})"
        )));
    }
    Ok(())
}

/// Radius of the smallest disk centered at real `alpha` that contains the
/// bean region: `sqrt(d(θ_α))` at the interior maximizer `θ_α` of the
/// distance function. Errors if more than one interior critical point is
/// detected; the uniqueness of `θ_α` is asserted, not proven.
pub fn enclosing_radius(alpha: f64) -> Result<f64> {
    check_enclosing_domain(alpha)?;
    let n = DEFAULT_BOUNDARY_SAMPLES;
    let d = |t: f64| distance_sq_to_boundary(alpha, t);
    let vals: Vec<f64> = (0..=n)
        .map(|i| d(std::f64::consts::PI * i as f64 / n as f64))
        .collect();
    let maxima = (1..n)
        .filter(|&i| vals[i] > vals[i - 1] && vals[i] > vals[i + 1])
        .count();
    if maxima > 1 {
        return Err(Error::MultipleCriticalPoints { count: maxima });
    }
    let iv = Interval::new(0.0, std::f64::consts::PI)?;
    let (_, dmax) = extremize(d, iv, Sense::Max, &SolveConfig::default())?;
    Ok(dmax.sqrt())
}

/// The interior maximizer of the distance function for a given center.
pub fn enclosing_angle(alpha: f64) -> Result<f64> {
    check_enclosing_domain(alpha)?;
    let iv = Interval::new(0.0, std::f64::consts::PI)?;
    let (theta, _) = extremize(
        |t| distance_sq_to_boundary(alpha, t),
        iv,
        Sense::Max,
        &SolveConfig::default(),
    )?;
    Ok(theta)
}

/// Minimax enclosing disk over real centers: the `(center, radius)` pair
/// minimizing `max_θ |𝔅(e^{iθ}) − α|`. The optimum sits near 1.006 with
/// radius equal to the sharp bound on `|Im 𝔅|`.
pub fn minimax_center() -> Result<(f64, f64)> {
    let inner_cfg = SolveConfig {
        scan_points: 512,
        ..SolveConfig::default()
    };
    let iv_theta = Interval::new(0.0, std::f64::consts::PI)?;
    let worst = |alpha: f64| -> f64 {
        let (_, dmax) = extremize(
            |t| distance_sq_to_boundary(alpha, t),
            iv_theta,
            Sense::Max,
            &inner_cfg,
        )
        .expect("inner extremization on a fixed valid interval");
        dmax
    };
    // max of convex functions of alpha, so the outer problem is convex
    let outer_cfg = SolveConfig {
        scan_points: 256,
        ..SolveConfig::default()
    };
    let iv_alpha = Interval::new(0.8, 1.2)?;
    let (center, dmin) = extremize(worst, iv_alpha, Sense::Min, &outer_cfg)?;
    Ok((center, dmin.sqrt()))
}

/// The exact inclusion test for the Janowski circle `(1+Ae^{iθ})/(1+Be^{iθ})`:
/// true iff the whole circle (hence the image disk of the unit disk) lies in
/// the bean region. Case selection compares the disk center `(1−AB)/(1−B²)`
/// against `α₀`.
pub fn janowski_subordination_test(a: f64, b: f64) -> Result<bool> {
    if !(-1.0 < b && b < a && a <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "janowski parameters need −1 < B < A ≤ 1, got A = {a}, B = {b}"
        )));
    }
    let c = (1.0 - a * b) / (1.0 - b * b);
    if c <= constants::alpha0() {
        Ok(a <= 1.0 - constants::bean_min() * (1.0 - b))
    } else {
        Ok(a <= constants::r0() * (1.0 + b) - 1.0)
    }
}

/// The inclusion thresholds of the bean class against the classical classes.
#[derive(Debug, Clone, Copy)]
pub struct InclusionThresholds {
    /// Order of starlikeness: `sqrt(2/(1+e²))`.
    pub starlike_order: f64,
    /// Reciprocal-order threshold: `R(θ₀)`, the sharp bound on `Re`.
    pub reciprocal_order_bound: f64,
    /// Strong starlikeness order: `arg` bound divided by `π/2`.
    pub strongly_starlike_order: f64,
    /// Smallest parabola parameter: `max T(θ) ≈ 0.13186`.
    pub parabolic_rho: f64,
    /// Angle attaining `parabolic_rho`.
    pub parabolic_theta: f64,
    /// k-starlike threshold `2e/(2e − sqrt(2(1+e²)))`.
    pub kst_k: f64,
    /// Cassinian-oval threshold `(e²−1)/(e²+1)`.
    pub cassinian_c: f64,
    /// Whether the bean class sits inside the exponential class.
    pub exp_inclusion: bool,
}

pub fn inclusion_thresholds() -> Result<InclusionThresholds> {
    let cfg = SolveConfig::default();
    let bounds = sharp_bounds_with(&cfg)?;
    let iv = Interval::new(0.0, std::f64::consts::PI)?;
    let (parabolic_theta, parabolic_rho) = extremize(parabolic_gauge, iv, Sense::Max, &cfg)?;
    Ok(InclusionThresholds {
        starlike_order: constants::bean_min(),
        reciprocal_order_bound: bounds.re_max,
        strongly_starlike_order: bounds.arg_abs_max / std::f64::consts::FRAC_PI_2,
        parabolic_rho,
        parabolic_theta,
        kst_k: constants::kst_threshold(),
        cassinian_c: constants::cassinian_threshold(),
        exp_inclusion: true,
    })
}

/// True iff every sample lies in the open bean region. The region inequality
/// `|log(w²/(2−w²))| < 2` is exact, so no winding or polygon test is needed.
pub fn contains_curve(samples: &[Complex64]) -> Result<bool> {
    if samples.is_empty() {
        return Err(Error::InvalidParameter("contains_curve: no samples".into()));
    }
    for &w in samples {
        if !in_bean_region(w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|𝔅(re^{iθ})|²` for a fixed `r`.
pub fn modulus_sq(r: f64, theta: f64) -> f64 {
    let e2 = (2.0 * r * theta.cos()).exp();
    2.0 * e2 / (1.0 + e2 * e2 + 2.0 * e2 * (2.0 * r * theta.sin()).cos()).sqrt()
}

/// `h_r(θ)`, whose zeros are the critical points of `|𝔅(re^{iθ})|²`;
/// `θ = 0, π` are always zeros, an interior zero appears past `r₀ ≈ 0.639`.
pub fn modulus_critical_fn(r: f64, theta: f64) -> f64 {
    let e2 = (2.0 * r * theta.cos()).exp();
    theta.sin() + e2 * (2.0 * r * theta.sin()).cos() * theta.sin()
        - e2 * (2.0 * r * theta.sin()).sin() * theta.cos()
}

/// The angle maximizing `|𝔅(re^{iθ})|` over `[0, π]`, and whether `h_r` has a
/// root strictly inside `(0, π)` (true exactly in the `r > r₀` regime where
/// the maximum moves off the real axis).
pub fn modulus_extremum_angle(r: f64) -> Result<(f64, bool)> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Domain(format!(
            "modulus_extremum_angle: r = {r} not in (0, 1)"
        )));
    }
    let iv = Interval::new(0.0, std::f64::consts::PI)?;
    let (theta_max, _) = extremize(
        |t| modulus_sq(r, t),
        iv,
        Sense::Max,
        &SolveConfig::default(),
    )?;
    let n = DEFAULT_BOUNDARY_SAMPLES;
    let mut flag = false;
    let mut prev = modulus_critical_fn(r, std::f64::consts::PI / n as f64);
    for i in 2..n {
        let v = modulus_critical_fn(r, std::f64::consts::PI * i as f64 / n as f64);
        if prev.signum() != v.signum() {
            flag = true;
            break;
        }
        prev = v;
    }
    Ok((theta_max, flag))
}
