//! Closed-form constants of the bean region.
//!
//! All of these are elementary expressions in `e`; they are functions rather
//! than `const`s only because `sqrt`/`exp` are not const-evaluable.

use std::f64::consts::E;

/// `sqrt(2/(1+e²)) ≈ 0.488268`: the leftmost point of the region, which is both
/// the minimum real part and the minimum modulus of the bean function on the
/// closed unit disk.
pub fn bean_min() -> f64 {
    (2.0 / (1.0 + E * E)).sqrt()
}

/// `R₀ = e·sqrt(2/(1+e²)) ≈ 1.327251`: the rightmost point of the region. A
/// modulus `|w| ≥ R₀` forces `|log(w²/(2−w²))| ≥ 2` for real positive `w`;
/// it is the admissibility threshold of the subordination bounds.
pub fn r0() -> f64 {
    E * bean_min()
}

/// `α₀ = (1+e)/sqrt(2(1+e²)) ≈ 0.907759`: the real center of the largest disk
/// inscribed in the bean region.
pub fn alpha0() -> f64 {
    (1.0 + E) / (2.0 * (1.0 + E * E)).sqrt()
}

/// `(e−1)/sqrt(2(1+e²)) ≈ 0.419491`: the radius of the largest inscribed disk,
/// attained at center [`alpha0`].
pub fn inscribed_radius_alpha0() -> f64 {
    (E - 1.0) / (2.0 * (1.0 + E * E)).sqrt()
}

/// `2e/(2e − sqrt(2(1+e²))) ≈ 4.055762`: the k-starlike threshold; the ellipse
/// `Re w > k|w−1|` fits inside the region exactly for `k` at or above this.
pub fn kst_threshold() -> f64 {
    2.0 * E / (2.0 * E - (2.0 * (1.0 + E * E)).sqrt())
}

/// `(e²−1)/(e²+1) = tanh 1 ≈ 0.761594`: the Cassinian-oval threshold; the right
/// loop `|w²−1| < c` fits inside the region exactly for `c` below this.
pub fn cassinian_threshold() -> f64 {
    (E * E - 1.0) / (E * E + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match_reported_digits() {
        assert!((bean_min() - 0.488268209127).abs() < 1e-11);
        assert!((r0() - 1.32725060028).abs() < 1e-10);
        assert!((alpha0() - 0.907759404706).abs() < 1e-11);
        assert!((inscribed_radius_alpha0() - 0.419491195579).abs() < 1e-11);
        assert!((kst_threshold() - 4.055762156).abs() < 1e-8);
        assert!((cassinian_threshold() - 1.0_f64.tanh()).abs() < 1e-15);
    }

    #[test]
    fn alpha0_is_where_both_inscribed_arms_meet() {
        // alpha - bean_min == r0 - alpha at alpha0
        let a = alpha0();
        assert!(((a - bean_min()) - (r0() - a)).abs() < 1e-14);
    }
}
