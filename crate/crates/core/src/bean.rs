//! Evaluation of the bean function, its inverse, and the region predicate.
//!
//! The bean function is `𝔅(z) = sqrt(1 + tanh z) = sqrt(2/(1 + e^{-2z}))`,
//! normalized so `𝔅(0) = 1`. It is evaluated through the second form: near
//! `z = -1` the first form subtracts nearly equal quantities while
//! `2/(1 + e^{-2z})` stays well conditioned.
//!
//! Principal branches are used for both the square root and the logarithm.
//! For `|z| ≤ 1` the argument `2/(1 + e^{-2z})` never touches the cut along
//! the negative real axis: `e^{-2z} = -t` with `t ≥ 1` first happens at
//! `z = ±iπ/2`, outside the closed unit disk.

use num::complex::Complex64;

use crate::error::{Error, Result};

/// Evaluation is permitted on the closed unit disk plus a hair of slack.
pub const EVAL_RADIUS_LIMIT: f64 = 1.0 + 1e-9;

/// Evaluate `𝔅(z) = sqrt(2/(1 + e^{-2z}))` on the closed unit disk.
///
/// `𝔅(0) = 1`, `𝔅(1) = e·sqrt(2/(1+e²))`, `𝔅(−1) = sqrt(2/(1+e²))`, and
/// `𝔅(conj z) = conj(𝔅(z))`.
pub fn eval_bean(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("eval_bean: non-finite input".into()));
    }
    if z.norm() > EVAL_RADIUS_LIMIT {
        return Err(Error::Domain(format!(
            "eval_bean: |z| = {} exceeds {}",
            z.norm(),
            EVAL_RADIUS_LIMIT
        )));
    }
    let denom = Complex64::new(1.0, 0.0) + (-2.0 * z).exp();
    let w = (Complex64::new(2.0, 0.0) / denom).sqrt();
    if !w.re.is_finite() || !w.im.is_finite() {
        return Err(Error::NonFinite("eval_bean".into()));
    }
    Ok(w)
}

/// `log(w²/(2−w²))`, the quantity whose modulus classifies `w` against the
/// bean region: the region is exactly `{w : |log(w²/(2−w²))| < 2}`.
pub fn region_log(w: Complex64) -> Result<Complex64> {
    if w.norm() == 0.0 {
        return Err(Error::Singularity("w = 0".into()));
    }
    let two_minus_w2 = Complex64::new(2.0, 0.0) - w * w;
    // float inputs representing sqrt(2) miss the pole by ~4e-16; treat the
    // whole denormalized neighborhood as singular
    if two_minus_w2.norm() <= 1e-13 {
        return Err(Error::Singularity("w² = 2".into()));
    }
    Ok((w * w / two_minus_w2).ln())
}

/// Inverse of the bean function, `𝔅⁻¹(w) = ½ log(w²/(2−w²))`.
///
/// Errors at the singular points `w = 0` and `w² = 2`.
pub fn inverse_bean(w: Complex64) -> Result<Complex64> {
    Ok(0.5 * region_log(w)?)
}

/// True iff `w` lies in the open bean region `|log(w²/(2−w²))| < 2`, the
/// conformal image of the open unit disk under the bean function.
pub fn in_bean_region(w: Complex64) -> Result<bool> {
    Ok(region_log(w)?.norm() < 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn normalization_at_zero() {
        let w = eval_bean(c(0.0, 0.0)).unwrap();
        assert!((w - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn value_at_one_is_r0() {
        // e * sqrt(2/(1+e^2)) ≈ 1.32725
        let w = eval_bean(c(1.0, 0.0)).unwrap();
        assert!((w.re - constants::r0()).abs() < 1e-14);
        assert!((w.re - 1.32725060028).abs() < 1e-10);
        assert!(w.im.abs() < 1e-15);
    }

    #[test]
    fn value_at_minus_one_is_bean_min() {
        let w = eval_bean(c(-1.0, 0.0)).unwrap();
        assert!((w.re - constants::bean_min()).abs() < 1e-14);
        assert!((w.re - 0.488268209127).abs() < 1e-10);
    }

    #[test]
    fn rejects_outside_unit_disk() {
        assert!(matches!(eval_bean(c(1.1, 0.0)), Err(Error::Domain(_))));
        assert!(matches!(eval_bean(c(0.8, 0.8)), Err(Error::Domain(_))));
    }

    #[test]
    fn inverse_at_one_is_zero() {
        let z = inverse_bean(c(1.0, 0.0)).unwrap();
        assert!(z.norm() < 1e-15);
    }

    #[test]
    fn inverse_at_r0_is_one() {
        // R0² = 2e²/(1+e²) gives ½ log(e²) = 1
        let z = inverse_bean(c(constants::r0(), 0.0)).unwrap();
        assert!((z - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn inverse_at_bean_min_is_minus_one() {
        let z = inverse_bean(c(constants::bean_min(), 0.0)).unwrap();
        assert!((z - c(-1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn inverse_singularities() {
        assert!(matches!(
            inverse_bean(c(0.0, 0.0)),
            Err(Error::Singularity(_))
        ));
        assert!(matches!(
            inverse_bean(c(2.0f64.sqrt(), 0.0)),
            Err(Error::Singularity(_))
        ));
    }

    #[test]
    fn round_trip_on_inner_disk() {
        for i in 0..32 {
            for j in 1..8 {
                let r = 0.99 * j as f64 / 8.0;
                let t = 2.0 * std::f64::consts::PI * i as f64 / 32.0;
                let z = c(r * t.cos(), r * t.sin());
                let back = inverse_bean(eval_bean(z).unwrap()).unwrap();
                assert!((back - z).norm() < 1e-10, "z = {z}");
            }
        }
    }

    #[test]
    fn region_classification_on_real_axis() {
        assert!(in_bean_region(c(1.0, 0.0)).unwrap());
        assert!(in_bean_region(c(0.5, 0.0)).unwrap());
        // 1.33 > R0 on the real axis lies outside
        assert!(!in_bean_region(c(1.33, 0.0)).unwrap());
        assert!(!in_bean_region(c(0.48, 0.0)).unwrap());
    }
}
