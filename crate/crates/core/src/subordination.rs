//! Closed-form lower bounds on `|β|` for the differential subordinations
//! targeting Janowski powers, and a grid verifier for the proofs' sufficient
//! condition.
//!
//! The bounds answer: how large must `|β|` be so that
//! `(1−α)p + αp² + β zp'/p^k ≺ 𝔅` forces `p ≺ ((1+Az)/(1+Bz))^γ`
//! (the mixed family), or
//! `p^δ + β zp'/p^k ≺ 𝔅` forces the same (the power family).
//! The `√(1+z)` target has its own closed form.
//!
//! [`verify_sufficiency`] checks the sufficient condition the proofs reduce
//! to, namely `|𝔅⁻¹(h(e^{iθ}))| ≥ 1` on a boundary grid, where `h` is built
//! from the target `q` and the candidate `β`. It verifies that condition, not
//! the subordination conclusion itself. The bound formulas depend only on
//! `|β|`; the verifier accepts any complex `β` with positive real part.

use num::complex::Complex64;

use crate::bean::region_log;
use crate::constants;
use crate::error::{Error, Result};

/// `R₀ = e√(2/(1+e²)) ≈ 1.32725`, the admissibility threshold: a value with
/// modulus at least `R₀` cannot lie in the bean region on the real axis, and
/// the proofs push `h(e^{iθ})` past this modulus.
pub fn r0_constant() -> f64 {
    constants::r0()
}

/// The admissibility predicate `|log(w²/(2−w²))| ≥ 2` (equivalently
/// `|𝔅⁻¹(w)| ≥ 1`): `w` lies outside the open bean region.
pub fn r0_predicate(w: Complex64) -> Result<bool> {
    Ok(region_log(w)?.norm() >= 2.0)
}

/// Parameters of the subordination bounds.
///
/// `alpha ∈ [0,1]` weighs the linear against the squared term (mixed family);
/// `gamma ∈ (0,1]` is the Janowski exponent; `k` the power dividing `zp'`;
/// `delta ∈ {0,1}` selects the power-family variant; `(a, b)` are the
/// Janowski parameters `A`, `B` with `−1 < B < A ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaQuery {
    pub alpha: f64,
    pub gamma: f64,
    pub k: i32,
    pub delta: u8,
    pub a: f64,
    pub b: f64,
}

impl BetaQuery {
    fn check_janowski(&self) -> Result<()> {
        if !(-1.0 < self.b && self.b < self.a && self.a <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "janowski range needs −1 < B < A ≤ 1, got A = {}, B = {}",
                self.a, self.b
            )));
        }
        Ok(())
    }

    fn check_gamma(&self) -> Result<()> {
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "gamma = {} not in (0, 1]",
                self.gamma
            )));
        }
        Ok(())
    }

    fn check_alpha(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(Error::InvalidParameter(format!(
                "alpha = {} not in [0, 1]",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// Which left-hand side `h` is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundFamily {
    /// `(1−α)q + αq² + Q`
    Mixed,
    /// `q^δ + Q`
    Power,
}

fn janowski_factor(q: &BetaQuery) -> f64 {
    let s = q.gamma * (q.k as f64 - 1.0);
    (1.0 + q.a).powf(s + 1.0) / (1.0 + q.b).powf(s - 1.0)
}

/// Mixed-family bound:
/// `(1/(γ(A−B)))(R₀ + α C^{2γ} + (1−α) C^γ)·(1+A)^{γ(k−1)+1}/(1+B)^{γ(k−1)−1}`
/// with `C = (1+A)/(1+B)`. Defined for `k ∈ {−1, 0}`; the `k = 1` case is the
/// `√(1+z)` special case and routes to [`beta_bound_sqrt`] instead.
pub fn beta_bound_mixed(q: &BetaQuery) -> Result<f64> {
    if !(q.k == -1 || q.k == 0) {
        return Err(Error::InvalidParameter(format!(
            "beta_bound_mixed: k = {} not in {{−1, 0}}",
            q.k
        )));
    }
    q.check_janowski()?;
    q.check_gamma()?;
    q.check_alpha()?;
    let c = (1.0 + q.a) / (1.0 + q.b);
    let paren =
        constants::r0() + q.alpha * c.powf(2.0 * q.gamma) + (1.0 - q.alpha) * c.powf(q.gamma);
    Ok(paren * janowski_factor(q) / (q.gamma * (q.a - q.b)))
}

/// `√(1+z)`-target bound: `(R₀ + 2α + (1−α)√2)·2^{(k+3)/2}` for `k ∈ {−1,0,1}`.
pub fn beta_bound_sqrt(alpha: f64, k: i32) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} not in [0, 1]")));
    }
    if !(-1..=1).contains(&k) {
        return Err(Error::InvalidParameter(format!("k = {k} not in {{−1, 0, 1}}")));
    }
    let base = constants::r0() + 2.0 * alpha + (1.0 - alpha) * 2.0f64.sqrt();
    Ok(base * 2.0f64.powf((k as f64 + 3.0) / 2.0))
}

/// Power-family bound:
/// `(1/(γ(A−B)))(R₀ + C^{δγ})·(1+A)^{γ(k−1)+1}/(1+B)^{γ(k−1)−1}` for
/// `δ ∈ {0,1}` and `k ∈ {−1,0,1}`.
pub fn beta_bound_power(q: &BetaQuery) -> Result<f64> {
    if q.delta > 1 {
        return Err(Error::InvalidParameter(format!(
            "beta_bound_power: delta = {} not in {{0, 1}}",
            q.delta
        )));
    }
    if !(-1..=1).contains(&q.k) {
        return Err(Error::InvalidParameter(format!(
            "beta_bound_power: k = {} not in {{−1, 0, 1}}",
            q.k
        )));
    }
    q.check_janowski()?;
    q.check_gamma()?;
    let c = (1.0 + q.a) / (1.0 + q.b);
    let paren = constants::r0() + c.powf(q.delta as f64 * q.gamma);
    Ok(paren * janowski_factor(q) / (q.gamma * (q.a - q.b)))
}

/// `h(e^{iθ})` for one grid node.
fn h_at(theta: f64, beta: Complex64, q: &BetaQuery, family: BoundFamily) -> Complex64 {
    let z = Complex64::new(theta.cos(), theta.sin());
    let one = Complex64::new(1.0, 0.0);
    let target = ((one + q.a * z) / (one + q.b * z)).powf(q.gamma);
    let s = q.gamma * (q.k as f64 - 1.0);
    let big_q = beta
        * (q.gamma * (q.a - q.b))
        * z
        * (one + q.b * z).powf(s - 1.0)
        / (one + q.a * z).powf(s + 1.0);
    match family {
        BoundFamily::Mixed => (1.0 - q.alpha) * target + q.alpha * target * target + big_q,
        BoundFamily::Power => {
            let head = if q.delta == 0 { one } else { target };
            head + big_q
        }
    }
}

/// Grid check of the proofs' sufficient condition: `|𝔅⁻¹(h(e^{iθ}))| ≥ 1`
/// at every node of a uniform `grid` over `[0, 2π)`.
///
/// Nodes where `h` overflows to a non-finite value count as satisfied (the
/// predicate tends to `π ≥ 2` as `|h| → ∞`); nodes that hit `h = 0` or
/// `h² = 2` exactly are singular and error out.
pub fn verify_sufficiency(
    beta: Complex64,
    q: &BetaQuery,
    family: BoundFamily,
    grid: usize,
) -> Result<bool> {
    if beta.re <= 0.0 {
        return Err(Error::InvalidParameter("verify_sufficiency: Re β must be positive".into()));
    }
    if grid < 64 {
        return Err(Error::InvalidParameter(format!(
            "verify_sufficiency: grid = {grid} below 64"
        )));
    }
    q.check_janowski()?;
    q.check_gamma()?;
    if family == BoundFamily::Mixed {
        q.check_alpha()?;
    }
    for j in 0..grid {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / grid as f64;
        let h = h_at(theta, beta, q, family);
        if !h.re.is_finite() || !h.im.is_finite() {
            continue;
        }
        if !r0_predicate(h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Draw one parameter tuple from the region where the proofs' estimate chain
/// is pointwise valid: `A > B ≥ 0` and `γ(k−1)+1 ≥ 0` (so `k = −1` caps
/// `γ` at `½`). Outside that region the printed bounds can undershoot the
/// sufficient condition.
pub fn sample_admissible<R: rand::Rng>(rng: &mut R) -> (BetaQuery, BoundFamily) {
    let family = if rng.gen::<bool>() {
        BoundFamily::Mixed
    } else {
        BoundFamily::Power
    };
    let (alpha, delta, k) = match family {
        BoundFamily::Mixed => (rng.gen_range(0.0..=1.0), 0u8, *[-1, 0].get(rng.gen_range(0..2)).unwrap()),
        BoundFamily::Power => (
            0.0,
            rng.gen_range(0..=1u8),
            *[-1, 0, 1].get(rng.gen_range(0..3)).unwrap(),
        ),
    };
    let gamma_max = if k == -1 { 0.5 } else { 1.0 };
    let gamma = rng.gen_range(0.05..=gamma_max);
    let b = rng.gen_range(0.0..0.95);
    let lo = (b + 0.02f64).min(1.0);
    let a = rng.gen_range(lo..=1.0);
    (
        BetaQuery {
            alpha,
            gamma,
            k,
            delta,
            a,
            b,
        },
        family,
    )
}
