//! The catalog of sharp bean-class radii, each with a numeric containment
//! certificate.
//!
//! For a class with majorant `ψ`, the radius is the largest `ρ` such that
//! `ψ(𝔻_ρ)` (or the disk that dominates it) stays inside the bean region.
//! Every result carries two probe flags computed from the exact region
//! inequality: `inner_ok` says containment holds at `ρ(1−ε)`, `outer_fail`
//! says it fails at `ρ(1+ε)`, with `ε = 1e−3` and 2048 boundary samples.
//! Where the equations are transcendental the radius is the smallest positive
//! root bracketed on `(0, 1−1e−9)`; a missing root means the subordination
//! holds on the whole disk and the radius is 1.

use num::complex::Complex64;

use crate::constants;
use crate::error::{Error, Result};
use crate::geometry::contains_curve;
use crate::solve::{smallest_root, Interval, SolveConfig};

/// Probe offset: the coarsest value at which every sharp radius flips
/// between contained and not contained under the default sampling density.
pub const PROBE_EPSILON: f64 = 1e-3;
pub const PROBE_SAMPLES: usize = 2048;

/// A computed sharp radius with its defining-equation identifier and the
/// sharpness-probe record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiusResult {
    /// The radius, in `[0, 1]`.
    pub value: f64,
    /// Stable identifier of the defining formula or root equation.
    pub equation_id: &'static str,
    /// Containment holds at `value·(1−ε)`.
    pub inner_ok: bool,
    /// Containment fails at `value·(1+ε)`; only probed when `value < 1`.
    pub outer_fail: bool,
    /// The defining formula exceeded 1 and was capped.
    pub capped: bool,
    /// Whether sharpness is claimed for this radius.
    pub sharp: bool,
}

/// Class identifiers accepted by the CLI and the catalog export.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassId {
    Janowski,
    StarlikeAlpha,
    Exp,
    Sg,
    Lune,
    Cardioid,
    LAlpha,
    EAlpha,
    Bs,
    Cs,
    Limacon,
    ConvexAlpha,
    StarlikeWithin,
}

impl ClassId {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "janowski" => Self::Janowski,
            "starlike_alpha" => Self::StarlikeAlpha,
            "exp" => Self::Exp,
            "sg" => Self::Sg,
            "lune" => Self::Lune,
            "cardioid" => Self::Cardioid,
            "L_alpha" => Self::LAlpha,
            "e_alpha" => Self::EAlpha,
            "BS" => Self::Bs,
            "cs" => Self::Cs,
            "limacon" => Self::Limacon,
            "convex_alpha" => Self::ConvexAlpha,
            "starlike_within" => Self::StarlikeWithin,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Janowski => "janowski",
            Self::StarlikeAlpha => "starlike_alpha",
            Self::Exp => "exp",
            Self::Sg => "sg",
            Self::Lune => "lune",
            Self::Cardioid => "cardioid",
            Self::LAlpha => "L_alpha",
            Self::EAlpha => "e_alpha",
            Self::Bs => "BS",
            Self::Cs => "cs",
            Self::Limacon => "limacon",
            Self::ConvexAlpha => "convex_alpha",
            Self::StarlikeWithin => "starlike_within",
        }
    }

    pub const ALL: [ClassId; 13] = [
        Self::Janowski,
        Self::StarlikeAlpha,
        Self::Exp,
        Self::Sg,
        Self::Lune,
        Self::Cardioid,
        Self::LAlpha,
        Self::EAlpha,
        Self::Bs,
        Self::Cs,
        Self::Limacon,
        Self::ConvexAlpha,
        Self::StarlikeWithin,
    ];
}

fn circle(theta: f64) -> Complex64 {
    Complex64::new(theta.cos(), theta.sin())
}

/// Probe a curve-valued class: `curve(ρ, θ)` is the boundary of the image of
/// `𝔻_ρ` under the class majorant.
fn probe(curve: &dyn Fn(f64, f64) -> Complex64, value: f64) -> (bool, bool) {
    let sample = |rho: f64| -> Vec<Complex64> {
        (0..PROBE_SAMPLES)
            .map(|j| {
                let theta = 2.0 * std::f64::consts::PI * j as f64 / PROBE_SAMPLES as f64;
                curve(rho, theta)
            })
            .collect()
    };
    let inner = contains_curve(&sample(value * (1.0 - PROBE_EPSILON))).unwrap_or(false);
    let outer = if value < 1.0 {
        !contains_curve(&sample(value * (1.0 + PROBE_EPSILON))).unwrap_or(true)
    } else {
        false
    };
    (inner, outer)
}

fn disk_curve(center: impl Fn(f64) -> f64 + 'static, radius: impl Fn(f64) -> f64 + 'static) -> impl Fn(f64, f64) -> Complex64 {
    move |rho, theta| Complex64::new(center(rho), 0.0) + radius(rho) * circle(theta)
}

fn result_with_probe(
    value: f64,
    equation_id: &'static str,
    capped: bool,
    sharp: bool,
    curve: &dyn Fn(f64, f64) -> Complex64,
) -> RadiusResult {
    let (inner_ok, outer_fail) = probe(curve, value);
    RadiusResult {
        value,
        equation_id,
        inner_ok,
        outer_fail,
        capped,
        sharp,
    }
}

/// Root bracket used by every transcendental radius equation.
fn radius_root(f: impl Fn(f64) -> f64) -> Result<Option<f64>> {
    let iv = Interval::new(0.0, 1.0 - 1e-9)?;
    match smallest_root(f, iv, &SolveConfig::default()) {
        Ok(r) => Ok(Some(r)),
        Err(Error::NoRoot { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Janowski class `S*[A,B]`: the image of `𝔻_ρ` under `zf'/f` is dominated by
/// the disk with center `(1−ABρ²)/(1−B²ρ²)` and radius `(A−B)ρ/(1−B²ρ²)`.
///
/// For `B ≤ 0` the center stays at or right of 1 and only the right vertex of
/// the region binds (the `R₁` arm). For `B > 0` the center crosses `α₀` at
/// `R₀' = sqrt((1−α₀)/(B(A−α₀B)))`; the `R₁` arm applies while `R₁ ≤ R₀'`,
/// otherwise the left vertex binds (the `R₂` arm).
pub fn radius_janowski(a: f64, b: f64) -> Result<RadiusResult> {
    if !(-1.0 <= b && b < a && a <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "janowski range needs −1 ≤ B < A ≤ 1, got A = {a}, B = {b}"
        )));
    }
    let r0 = constants::r0();
    let m = constants::bean_min();
    // right-vertex root (R₀ − c(r) = rad(r)); non-binding when A ≤ R₀B
    let r1 = if a - r0 * b > 0.0 {
        ((r0 - 1.0) / (a - r0 * b)).min(1.0)
    } else {
        1.0
    };
    let (value, equation_id) = if b <= 0.0 {
        (r1, "janowski_r1")
    } else {
        let r0_prime = ((1.0 - constants::alpha0()) / (b * (a - constants::alpha0() * b))).sqrt();
        if r1 <= r0_prime {
            (r1, "janowski_r1")
        } else {
            // left-vertex root (c(r) − m = rad(r))
            let r2 = ((1.0 - m) / (a - m * b)).min(1.0);
            (r2, "janowski_r2")
        }
    };
    let curve = disk_curve(
        move |rho| (1.0 - a * b * rho * rho) / (1.0 - b * b * rho * rho),
        move |rho| (a - b) * rho / (1.0 - b * b * rho * rho),
    );
    Ok(result_with_probe(value, equation_id, false, true, &curve))
}

/// Starlike of order `α`: the Janowski case `A = 1 − 2α`, `B = −1`.
pub fn radius_starlike_alpha(alpha: f64) -> Result<RadiusResult> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} not in [0, 1)")));
    }
    radius_janowski(1.0 - 2.0 * alpha, -1.0)
}

/// Exponential class: `1 + log(sqrt(2/(1+e²))) = log R₀ ≈ 0.28311`.
pub fn radius_exp() -> RadiusResult {
    let value = 1.0 + constants::bean_min().ln();
    let curve = disk_curve(|_| 1.0, |rho| rho.exp() - 1.0);
    result_with_probe(value, "r_e_closed_form", false, true, &curve)
}

/// Sigmoid class: `−log(e^{−1} sqrt(2(1+e²)) − 1) ≈ 0.679492`. Probed on the
/// actual sigmoid image `2/(1+e^{−ρe^{iθ}})`, which touches the region at its
/// right vertex.
pub fn radius_sg() -> RadiusResult {
    let e = std::f64::consts::E;
    let value = -((2.0 * (1.0 + e * e)).sqrt() / e - 1.0).ln();
    let curve = |rho: f64, theta: f64| {
        let z = rho * circle(theta);
        Complex64::new(2.0, 0.0) / (Complex64::new(1.0, 0.0) + (-z).exp())
    };
    result_with_probe(value, "r_sg_closed_form", false, true, &curve)
}

/// Lune class: `(e²−1)/(2e sqrt(2(e²+1))) ≈ 0.2869`.
pub fn radius_lune() -> RadiusResult {
    let e = std::f64::consts::E;
    let value = (e * e - 1.0) / (2.0 * e * (2.0 * (e * e + 1.0)).sqrt());
    let curve = disk_curve(|_| 1.0, |rho| rho + (1.0 + rho * rho).sqrt() - 1.0);
    result_with_probe(value, "r_lune_closed_form", false, true, &curve)
}

/// Cardioid class: smallest positive root of
/// `sqrt(1+e²)(1 + ρe^ρ) = sqrt{2}e`, about 0.253877.
pub fn radius_cardioid() -> Result<RadiusResult> {
    let e = std::f64::consts::E;
    let root = radius_root(|r| {
        (1.0 + e * e).sqrt() * (1.0 + r * r.exp()) - 2.0f64.sqrt() * e
    })?;
    let value = root.unwrap_or(1.0);
    let curve = disk_curve(|_| 1.0, |rho| rho * rho.exp());
    Ok(result_with_probe(value, "r_rho_root", root.is_none(), true, &curve))
}

/// Khatter lemniscate family `α + (1−α)√(1+z)`:
/// `1 − ((sqrt(2/(1+e²)) − α)/(1−α))²`. The formula is finite and at most 1
/// for `0 ≤ α < sqrt(2/(1+e²))`, which is the implemented domain.
pub fn radius_l_alpha(alpha: f64) -> Result<RadiusResult> {
    if !(0.0..constants::bean_min()).contains(&alpha) {
        return Err(Error::InvalidParameter(format!(
            "L_alpha: alpha = {alpha} not in [0, {})",
            constants::bean_min()
        )));
    }
    let value = 1.0 - ((constants::bean_min() - alpha) / (1.0 - alpha)).powi(2);
    let curve = move |rho: f64, theta: f64| {
        let z = rho * circle(theta);
        Complex64::new(alpha, 0.0) + (1.0 - alpha) * (Complex64::new(1.0, 0.0) + z).sqrt()
    };
    Ok(result_with_probe(value, "r_l_alpha_closed_form", false, true, &curve))
}

/// Khatter exponential family `α + (1−α)e^z`:
/// `log((e sqrt(2/(1+e²)) − α)/(1−α))`, capped at 1 (the formula passes 1 at
/// `α = (e−R₀)/(e−1) ≈ 0.8096`).
pub fn radius_e_alpha(alpha: f64) -> Result<RadiusResult> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!("e_alpha: alpha = {alpha} not in [0, 1)")));
    }
    let raw = ((constants::r0() - alpha) / (1.0 - alpha)).ln();
    let capped = raw > 1.0;
    let value = raw.min(1.0);
    let curve = move |rho: f64, theta: f64| {
        let z = rho * circle(theta);
        Complex64::new(alpha, 0.0) + (1.0 - alpha) * z.exp()
    };
    Ok(result_with_probe(value, "r_e_alpha_closed_form", capped, true, &curve))
}

/// Kargar class `1 + z/(1−αz²)`: positive root of `αKρ² + ρ − K = 0` with
/// `K = R₀ − 1`; the `α → 0` limit is `K` itself.
pub fn radius_bs(alpha: f64) -> Result<RadiusResult> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!("BS: alpha = {alpha} not in [0, 1)")));
    }
    let k = constants::r0() - 1.0;
    let value = if alpha == 0.0 {
        k
    } else {
        ((1.0 + 4.0 * alpha * k * k).sqrt() - 1.0) / (2.0 * alpha * k)
    };
    let curve = disk_curve(|_| 1.0, move |rho| rho / (1.0 - alpha * rho * rho));
    Ok(result_with_probe(value, "r_bs_closed_form", false, true, &curve))
}

/// Masih class `1 + z/((1−z)(1+αz))`: smallest positive root of
/// `(1+e²)(1+αρ−αρ²)/((1−ρ)(1+αρ)) = e sqrt(2(1+e²))`.
pub fn radius_cs(alpha: f64) -> Result<RadiusResult> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!("cs: alpha = {alpha} not in [0, 1)")));
    }
    let e = std::f64::consts::E;
    let root = radius_root(move |r| {
        (1.0 + e * e) * (1.0 + alpha * r - alpha * r * r) / ((1.0 - r) * (1.0 + alpha * r))
            - e * (2.0 * (1.0 + e * e)).sqrt()
    })?;
    let value = root.unwrap_or(1.0);
    let curve = disk_curve(|_| 1.0, move |rho| rho / ((1.0 - rho) * (1.0 + alpha * rho)));
    Ok(result_with_probe(value, "r_cs_root", root.is_none(), true, &curve))
}

/// Limaçon class `(1+sz)²`: `min{1, ρ*}` with `ρ*` the smallest positive root
/// of `(1+e²)(1+|s|ρ)² = e sqrt(2(1+e²))`.
///
/// The image of `𝔻_ρ` under `(1+sz)²` is invariant under `s → −s` (compose
/// with `z → −z`), so the radius is even in `s`; the equation is solved with
/// `|s|` to honor that symmetry.
pub fn radius_limacon(s: f64) -> Result<RadiusResult> {
    if s == 0.0 || !(-1.0..=1.0).contains(&s) {
        return Err(Error::InvalidParameter(format!(
            "limacon: s = {s} not in [−1, 1] \\ {{0}}"
        )));
    }
    let e = std::f64::consts::E;
    let sa = s.abs();
    let root = radius_root(move |r| {
        (1.0 + e * e) * (1.0 + sa * r).powi(2) - e * (2.0 * (1.0 + e * e)).sqrt()
    })?;
    let value = root.unwrap_or(1.0).min(1.0);
    let curve = move |rho: f64, theta: f64| {
        let w = Complex64::new(1.0, 0.0) + s * rho * circle(theta);
        w * w
    };
    Ok(result_with_probe(value, "r_limacon_root", root.is_none(), true, &curve))
}

/// Which reading of the convexity-of-order-α equation to use: the equation as
/// printed carries `tan ρ`, while the derivation's `|tanh w|` chain suggests
/// `tanh ρ`. Neither is asserted as intended; both are computable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConvexityReading {
    #[default]
    TanAsPrinted,
    TanhVariant,
}

fn convexity_gauge(r: f64, reading: ConvexityReading) -> f64 {
    let t = match reading {
        ConvexityReading::TanAsPrinted => r.tan(),
        ConvexityReading::TanhVariant => r.tanh(),
    };
    (1.0 - r.tanh()).sqrt() - r * (1.0 + t) / (2.0 * (1.0 - r * r))
}

/// Convexity of order `α` for members of the bean class: smallest positive
/// root of `1 − tanh ρ = (α + ρ(1+tan ρ)/(2(1−ρ²)))²`; `α = 1` gives 0.
/// No sharpness is claimed; the probes certify the defining inequality only.
pub fn radius_convexity_alpha_with(alpha: f64, reading: ConvexityReading) -> Result<RadiusResult> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "convex_alpha: alpha = {alpha} not in (0, 1]"
        )));
    }
    let root = radius_root(move |r| {
        let t = match reading {
            ConvexityReading::TanAsPrinted => r.tan(),
            ConvexityReading::TanhVariant => r.tanh(),
        };
        (1.0 - r.tanh()) - (alpha + r * (1.0 + t) / (2.0 * (1.0 - r * r))).powi(2)
    })?;
    let value = root.unwrap_or(1.0);
    let equation_id = match reading {
        ConvexityReading::TanAsPrinted => "c_alpha_root_tan",
        ConvexityReading::TanhVariant => "c_alpha_root_tanh",
    };
    // inequality probe: the gauge is strictly decreasing from 1 at ρ = 0
    let inner_ok = if value == 0.0 {
        true
    } else {
        convexity_gauge(value * (1.0 - PROBE_EPSILON), reading) > alpha
    };
    let outer_probe = if value == 0.0 { PROBE_EPSILON } else { value * (1.0 + PROBE_EPSILON) };
    let outer_fail = value < 1.0 && convexity_gauge(outer_probe, reading) < alpha;
    Ok(RadiusResult {
        value,
        equation_id,
        inner_ok,
        outer_fail,
        capped: false,
        sharp: false,
    })
}

pub fn radius_convexity_alpha(alpha: f64) -> Result<RadiusResult> {
    radius_convexity_alpha_with(alpha, ConvexityReading::TanAsPrinted)
}

/// Starlikeness of order `α` inside `|z| < ½ log((2−α²)/α²)` for members of
/// the bean class; sharp for the extremal function.
pub fn radius_starlike_within(alpha: f64) -> Result<RadiusResult> {
    if !(alpha > constants::bean_min() && alpha < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "starlike_within: alpha = {alpha} not in ({}, 1)",
            constants::bean_min()
        )));
    }
    let value = 0.5 * ((2.0 - alpha * alpha) / (alpha * alpha)).ln();
    // Re 𝔅(−ρ) = sqrt(2/(1+e^{2ρ})) crosses α exactly at the radius
    let min_re = |rho: f64| (2.0 / (1.0 + (2.0 * rho).exp())).sqrt();
    let inner_ok = min_re(value * (1.0 - PROBE_EPSILON)) > alpha;
    let outer_fail = value < 1.0 && min_re(value * (1.0 + PROBE_EPSILON)) < alpha;
    Ok(RadiusResult {
        value,
        equation_id: "s_alpha_within_closed_form",
        inner_ok,
        outer_fail,
        capped: false,
        sharp: true,
    })
}

/// One record per class at representative parameters, for the catalog export.
pub fn catalog() -> Result<Vec<(ClassId, String, RadiusResult)>> {
    Ok(vec![
        (ClassId::Janowski, "A=1, B=-1".into(), radius_janowski(1.0, -1.0)?),
        (ClassId::StarlikeAlpha, "alpha=0".into(), radius_starlike_alpha(0.0)?),
        (ClassId::Exp, String::new(), radius_exp()),
        (ClassId::Sg, String::new(), radius_sg()),
        (ClassId::Lune, String::new(), radius_lune()),
        (ClassId::Cardioid, String::new(), radius_cardioid()?),
        (ClassId::LAlpha, "alpha=0".into(), radius_l_alpha(0.0)?),
        (ClassId::EAlpha, "alpha=0".into(), radius_e_alpha(0.0)?),
        (ClassId::Bs, "alpha=0".into(), radius_bs(0.0)?),
        (ClassId::Cs, "alpha=0".into(), radius_cs(0.0)?),
        (ClassId::Limacon, "s=1".into(), radius_limacon(1.0)?),
        (ClassId::ConvexAlpha, "alpha=0.5".into(), radius_convexity_alpha(0.5)?),
        (ClassId::StarlikeWithin, "alpha=0.7".into(), radius_starlike_within(0.7)?),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_probes(r: &RadiusResult) {
        assert!(r.inner_ok, "{}: inner probe failed at {}", r.equation_id, r.value);
        if r.sharp && r.value < 1.0 {
            assert!(r.outer_fail, "{}: outer probe passed at {}", r.equation_id, r.value);
        }
    }

    #[test]
    fn janowski_full_class() {
        let r = radius_janowski(1.0, -1.0).unwrap();
        assert!((r.value - 0.14061).abs() < 1e-5, "value = {}", r.value);
        assert_eq!(r.equation_id, "janowski_r1");
        assert_probes(&r);
    }

    #[test]
    fn janowski_starlike_quarter() {
        // corollary at α = 0.25: A = 0.5, B = −1
        let r = radius_janowski(0.5, -1.0).unwrap();
        assert!((r.value - 0.179094537).abs() < 1e-8, "value = {}", r.value);
        let r2 = radius_starlike_alpha(0.25).unwrap();
        assert_eq!(r.value, r2.value);
        assert_probes(&r);
    }

    #[test]
    fn janowski_r2_arm() {
        // A = 1, B = 0.5: R₁ ≈ 0.9729 > R₀' ≈ 0.5812, so the left vertex binds
        let r = radius_janowski(1.0, 0.5).unwrap();
        assert!((r.value - 0.6770139967).abs() < 1e-9, "value = {}", r.value);
        assert_eq!(r.equation_id, "janowski_r2");
        assert_probes(&r);
    }

    #[test]
    fn janowski_continuous_across_b_zero() {
        let at_zero = radius_janowski(0.25, 0.0).unwrap().value;
        let below = radius_janowski(0.25, -1e-9).unwrap().value;
        let above = radius_janowski(0.25, 1e-9).unwrap().value;
        assert!((at_zero - below).abs() < 1e-7);
        assert!((at_zero - above).abs() < 1e-7);
    }

    #[test]
    fn janowski_both_negative_parameters() {
        // B < A ≤ 0 keeps the disk right of its center; the R₁ arm applies
        let r = radius_janowski(-0.3, -0.6).unwrap();
        assert!(r.value < 1.0);
        assert_probes(&r);
    }

    #[test]
    fn janowski_radius_one_when_disk_never_escapes() {
        let r = radius_janowski(0.1, -0.05).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.inner_ok);
        assert!(!r.outer_fail);
    }

    #[test]
    fn exp_sg_lune_cardioid_values() {
        assert!((radius_exp().value - 0.28311).abs() < 1e-5);
        assert!((radius_sg().value - 0.679492).abs() < 1e-6);
        assert!((radius_lune().value - 0.2869).abs() < 1e-4);
        assert!((radius_cardioid().unwrap().value - 0.253877).abs() < 1e-6);
        assert_probes(&radius_exp());
        assert_probes(&radius_sg());
        assert_probes(&radius_lune());
        assert_probes(&radius_cardioid().unwrap());
    }

    #[test]
    fn l_alpha_values() {
        let r = radius_l_alpha(0.0).unwrap();
        assert!((r.value - 0.76159).abs() < 1e-5);
        let r = radius_l_alpha(0.3).unwrap();
        assert!((r.value - 0.92766).abs() < 1e-5);
        assert_probes(&r);
        // approaching the right end of the domain the radius tends to 1
        let r = radius_l_alpha(constants::bean_min() - 1e-6).unwrap();
        assert!(r.value > 1.0 - 1e-5);
        assert!(radius_l_alpha(0.5).is_err());
    }

    #[test]
    fn e_alpha_values() {
        let r = radius_e_alpha(0.0).unwrap();
        assert!((r.value - radius_exp().value).abs() < 1e-12);
        let r = radius_e_alpha(0.5).unwrap();
        assert!((r.value - 0.503499574).abs() < 1e-8);
        assert_probes(&r);
        // formula diverges as α → 1⁻, capped at 1
        let r = radius_e_alpha(0.9).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.capped);
        assert!(r.inner_ok);
    }

    #[test]
    fn bs_cs_limacon_values() {
        let r = radius_bs(0.0).unwrap();
        assert!((r.value - 0.32725).abs() < 1e-5);
        assert_probes(&r);
        let r = radius_bs(0.5).unwrap();
        assert!((r.value - 0.311385354).abs() < 1e-8);
        assert_probes(&r);
        let r = radius_cs(0.0).unwrap();
        assert!((r.value - 0.24656).abs() < 1e-5);
        assert_probes(&r);
        let r = radius_cs(0.5).unwrap();
        assert!((r.value - 0.27091323).abs() < 1e-7);
        assert_probes(&r);
        let r = radius_limacon(1.0).unwrap();
        assert!((r.value - 0.15206).abs() < 1e-5);
        assert_probes(&r);
        // even in s by the image symmetry
        let r_neg = radius_limacon(-1.0).unwrap();
        assert!((r_neg.value - r.value).abs() < 1e-12);
        assert_probes(&r_neg);
        // small s never exits the region
        let r = radius_limacon(0.1).unwrap();
        assert_eq!(r.value, 1.0);
        assert!(r.inner_ok);
        assert!(radius_limacon(0.0).is_err());
    }

    #[test]
    fn convexity_alpha_values() {
        // α = 1 is satisfied only at the origin
        let r = radius_convexity_alpha(1.0).unwrap();
        assert!(r.value.abs() < 1e-9, "value = {}", r.value);
        let r = radius_convexity_alpha(0.5).unwrap();
        assert!((r.value - 0.3733741272).abs() < 1e-8, "value = {}", r.value);
        assert_probes(&r);
        // gauge decreasing in ρ means the radius shrinks as α grows
        let lo = radius_convexity_alpha(0.25).unwrap().value;
        let hi = radius_convexity_alpha(0.75).unwrap().value;
        assert!((lo - 0.4878329811).abs() < 1e-8);
        assert!((hi - 0.215377913).abs() < 1e-8);
        assert!(lo > hi);
        // the tanh reading gives slightly different roots
        let r = radius_convexity_alpha_with(0.5, ConvexityReading::TanhVariant).unwrap();
        assert!((r.value - 0.3776046037).abs() < 1e-8);
    }

    #[test]
    fn starlike_within_values() {
        let r = radius_starlike_within(0.7).unwrap();
        assert!((r.value - 0.5627297694).abs() < 1e-9);
        assert_probes(&r);
        // endpoints: the radius tends to 1 at bean_min and to 0 at 1
        let r = radius_starlike_within(constants::bean_min() + 1e-9).unwrap();
        assert!((r.value - 1.0).abs() < 1e-7);
        let r = radius_starlike_within(1.0 - 1e-9).unwrap();
        assert!(r.value < 1e-8);
        assert!(radius_starlike_within(0.3).is_err());
    }

    #[test]
    fn alpha_monotonicity() {
        // 11-point grids in the direction each closed form implies
        let grid = |i: usize| i as f64 / 11.0;
        for i in 0..10 {
            let (a, b) = (grid(i), grid(i + 1));
            assert!(radius_l_alpha(a * 0.48).unwrap().value <= radius_l_alpha(b * 0.48).unwrap().value);
            assert!(radius_e_alpha(a).unwrap().value <= radius_e_alpha(b).unwrap().value);
            assert!(radius_bs(a).unwrap().value >= radius_bs(b).unwrap().value);
            assert!(radius_cs(a).unwrap().value <= radius_cs(b).unwrap().value);
            let (sa, sb) = (0.05 + a * 0.9, 0.05 + b * 0.9);
            assert!(radius_limacon(sa).unwrap().value >= radius_limacon(sb).unwrap().value);
        }
    }

    #[test]
    fn catalog_covers_every_class() {
        let cat = catalog().unwrap();
        assert_eq!(cat.len(), ClassId::ALL.len());
        for (id, _, r) in &cat {
            assert!(r.value >= 0.0 && r.value <= 1.0, "{}", id.name());
            assert!(r.inner_ok, "{}", id.name());
        }
    }
}
