//! Deterministic bracketed root-finding and 1D extremization on closed
//! intervals.
//!
//! Every constant in the catalog that is stated as "the smallest positive
//! root of …" or "the maximum attained at …" goes through these two
//! functions. The method is scan-then-refine: a uniform scan locates the
//! leftmost sign change (or the best cell), bisection or golden-section
//! refinement finishes. The equations involved are transcendental, so
//! derivative-free robustness is preferred over speed. Everything is
//! deterministic for a fixed configuration; ties break toward the smaller
//! argument.

use crate::error::{Error, Result};

/// A closed interval with `lo < hi`, both finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::InvalidParameter("interval endpoints must be finite".into()));
        }
        if lo >= hi {
            return Err(Error::InvalidParameter(format!(
                "interval needs lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }
}

/// Tolerance and scan density for [`smallest_root`] and [`extremize`].
#[derive(Debug, Clone, Copy)]
pub struct SolveConfig {
    /// Absolute tolerance on the result (roots and extreme values).
    pub tol: f64,
    /// Number of uniform scan cells; at least 16.
    pub scan_points: usize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            scan_points: 4096,
        }
    }
}

impl SolveConfig {
    fn validate(&self) -> Result<()> {
        if !self.tol.is_finite() || self.tol <= 0.0 {
            return Err(Error::InvalidParameter("tol must be positive".into()));
        }
        if self.scan_points < 16 {
            return Err(Error::InvalidParameter("scan_points must be at least 16".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// Leftmost root of a continuous `f` on `iv`.
///
/// A uniform scan finds the leftmost sign change, which bisection then
/// locates to `cfg.tol`. When `f` only touches zero, the leftmost scan value
/// within the touch tolerance is refined by minimizing `|f|`. Errors with
/// [`Error::NoRoot`] when neither exists.
pub fn smallest_root(f: impl Fn(f64) -> f64, iv: Interval, cfg: &SolveConfig) -> Result<f64> {
    cfg.validate()?;
    let n = cfg.scan_points;
    let (lo, hi) = (iv.lo(), iv.hi());
    let x = |i: usize| lo + (hi - lo) * i as f64 / n as f64;

    let mut prev = f(lo);
    let mut scale = prev.abs();
    if prev == 0.0 {
        return Ok(lo);
    }
    for i in 1..=n {
        let xi = x(i);
        let fi = f(xi);
        scale = scale.max(fi.abs());
        if fi == 0.0 {
            return Ok(xi);
        }
        if prev.signum() != fi.signum() && prev.is_finite() && fi.is_finite() {
            return Ok(bisect(&f, x(i - 1), xi, prev, cfg.tol));
        }
        prev = fi;
    }

    // No sign change: accept a touching root if some scan value is tiny
    // relative to the function's scale on the interval.
    let touch_tol = cfg.tol.sqrt() * (1.0 + scale);
    for i in 0..=n {
        let xi = x(i);
        if f(xi).abs() <= touch_tol {
            let cell = (hi - lo) / n as f64;
            let a = (xi - cell).max(lo);
            let b = (xi + cell).min(hi);
            let (arg, _) = golden(&|t| f(t).abs(), a, b, Sense::Min, cfg.tol);
            return Ok(arg);
        }
    }
    Err(Error::NoRoot { lo, hi })
}

fn bisect(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, fa: f64, tol: f64) -> f64 {
    let mut sign_a = fa.signum();
    while b - a > tol {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fm.signum() == sign_a {
            a = m;
        } else {
            b = m;
        }
        sign_a = f(a).signum();
    }
    0.5 * (a + b)
}

/// Extremum of a continuous `f` on `iv`.
///
/// A uniform scan (endpoints included) selects the best cell; golden-section
/// refinement resolves the argument to about `cfg.tol.sqrt()` and the value
/// to `cfg.tol`. Ties break toward the smaller argument. By construction
/// `extremize(f, Max)` and `extremize(-f, Min)` take identical branch
/// decisions, so they agree exactly in argument and negate in value.
pub fn extremize(
    f: impl Fn(f64) -> f64,
    iv: Interval,
    sense: Sense,
    cfg: &SolveConfig,
) -> Result<(f64, f64)> {
    cfg.validate()?;
    let n = cfg.scan_points;
    let (lo, hi) = (iv.lo(), iv.hi());
    let x = |i: usize| lo + (hi - lo) * i as f64 / n as f64;

    let better = |a: f64, b: f64| match sense {
        Sense::Max => a > b,
        Sense::Min => a < b,
    };

    let mut best_i = 0usize;
    let mut best_v = f(lo);
    for i in 1..=n {
        let v = f(x(i));
        if better(v, best_v) {
            best_i = i;
            best_v = v;
        }
    }

    let a = if best_i == 0 { lo } else { x(best_i - 1) };
    let b = if best_i == n { hi } else { x(best_i + 1) };
    let (arg, val) = golden(&f, a, b, sense, cfg.tol);
    // the scan winner stays if refinement did not improve on it
    if better(best_v, val) {
        return Ok((x(best_i), best_v));
    }
    Ok((arg, val))
}

/// Golden-section search; shrinks `[a, b]` until its width is below
/// `tol.sqrt()`, then returns the midpoint.
fn golden(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, sense: Sense, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let better = |u: f64, v: f64| match sense {
        Sense::Max => u > v,
        Sense::Min => u < v,
    };
    let width_goal = tol.sqrt();
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > width_goal {
        if better(fc, fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let arg = 0.5 * (a + b);
    (arg, f(arg))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SolveConfig {
        SolveConfig::default()
    }

    #[test]
    fn root_of_x_squared_minus_two() {
        let iv = Interval::new(0.0, 2.0).unwrap();
        let r = smallest_root(|x| x * x - 2.0, iv, &cfg()).unwrap();
        assert!((r - 2.0f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn root_of_identity_on_symmetric_interval() {
        let iv = Interval::new(-1.0, 1.0).unwrap();
        let r = smallest_root(|x| x, iv, &cfg()).unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn convexity_equation_root() {
        // 1 + 2e^{2r} + e^{4r} - (-1 + e^{2r} + 2e^{4r}) r on [0, 1]
        let iv = Interval::new(0.0, 1.0).unwrap();
        let f = |r: f64| {
            1.0 + 2.0 * (2.0 * r).exp() + (4.0 * r).exp()
                - (-1.0 + (2.0 * r).exp() + 2.0 * (4.0 * r).exp()) * r
        };
        let r = smallest_root(f, iv, &cfg()).unwrap();
        assert!((r - 0.7074).abs() < 1e-4, "r = {r}");
        assert!((r - 0.707420935699).abs() < 1e-9);
    }

    #[test]
    fn touching_root_is_found() {
        let iv = Interval::new(0.0, 2.0).unwrap();
        let r = smallest_root(|x| (x - 0.75) * (x - 0.75), iv, &cfg()).unwrap();
        assert!((r - 0.75).abs() < 1e-5, "r = {r}");
    }

    #[test]
    fn no_root_reported() {
        let iv = Interval::new(0.0, 1.0).unwrap();
        let e = smallest_root(|_| 1.0, iv, &cfg());
        assert!(matches!(e, Err(Error::NoRoot { .. })));
    }

    #[test]
    fn leftmost_root_wins() {
        let iv = Interval::new(0.0, 1.0).unwrap();
        let r = smallest_root(|x| (x - 0.2) * (x - 0.6) * (x - 0.9), iv, &cfg()).unwrap();
        assert!((r - 0.2).abs() < 1e-10);
    }

    #[test]
    fn residual_is_small() {
        let iv = Interval::new(0.0, 1.0).unwrap();
        let f = |x: f64| (5.0 * x).sin() - 0.3;
        let r = smallest_root(f, iv, &cfg()).unwrap();
        assert!(f(r).abs() <= 10.0 * 1e-12 * (1.0 + 1.3));
    }

    #[test]
    fn cosine_max_at_zero() {
        let iv = Interval::new(0.0, std::f64::consts::PI).unwrap();
        let (arg, val) = extremize(|t| t.cos(), iv, Sense::Max, &cfg()).unwrap();
        assert!(arg.abs() < 1e-6);
        assert!((val - 1.0).abs() < 1e-12);
    }

    #[test]
    fn interior_max_of_sine() {
        let iv = Interval::new(0.0, std::f64::consts::PI).unwrap();
        let (arg, val) = extremize(|t| t.sin(), iv, Sense::Max, &cfg()).unwrap();
        assert!((arg - std::f64::consts::FRAC_PI_2).abs() < 1e-6);
        assert!((val - 1.0).abs() < 1e-12);
    }

    #[test]
    fn negation_symmetry() {
        let iv = Interval::new(-1.0, 2.0).unwrap();
        let f = |x: f64| 0.3 * x * x * x - x * x + 0.2 * x + 1.0;
        let (a1, v1) = extremize(f, iv, Sense::Max, &cfg()).unwrap();
        let (a2, v2) = extremize(|x| -f(x), iv, Sense::Min, &cfg()).unwrap();
        assert_eq!(a1, a2);
        assert_eq!(v1, -v2);
    }

    #[test]
    fn scan_doubling_stability() {
        let iv = Interval::new(0.0, 1.0).unwrap();
        let f = |r: f64| {
            1.0 + 2.0 * (2.0 * r).exp() + (4.0 * r).exp()
                - (-1.0 + (2.0 * r).exp() + 2.0 * (4.0 * r).exp()) * r
        };
        let base = smallest_root(f, iv, &cfg()).unwrap();
        let doubled = smallest_root(
            f,
            iv,
            &SolveConfig {
                scan_points: 8192,
                ..cfg()
            },
        )
        .unwrap();
        assert!((base - doubled).abs() <= 1e-12);
    }

    #[test]
    fn rejects_bad_config() {
        let iv = Interval::new(0.0, 1.0).unwrap();
        assert!(smallest_root(
            |x| x,
            iv,
            &SolveConfig {
                tol: -1.0,
                scan_points: 64
            }
        )
        .is_err());
        assert!(extremize(
            |x| x,
            iv,
            Sense::Max,
            &SolveConfig {
                tol: 1e-12,
                scan_points: 4
            }
        )
        .is_err());
        assert!(Interval::new(1.0, 0.5).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
    }
}
