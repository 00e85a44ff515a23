//! C ABI over the bean-function numerics.
//!
//! Scalar results come back through out-pointers with a [`BeanStatus`] return
//! code; series objects are opaque handles created with [`bean_series_new`]
//! and released with [`bean_series_free`]. Strings returned by this library
//! point at static storage and must not be freed. The generated header lands
//! in `include/bean.h`.

use std::os::raw::c_char;

use bean_core::extremal::{
    covering_radius, f0_series, f0_value, growth_distortion, rotation_bound, Regime,
};
use bean_core::geometry::{self, boundary_point, sharp_bounds};
use bean_core::radii::{self, RadiusResult};
use bean_core::series::{bean_series, PowerSeries};
use bean_core::subordination::{self, BetaQuery};
use bean_core::{constants, Complex, Error};

/// Status codes shared by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BeanStatus {
    Ok = 0,
    DomainError = 1,
    Singularity = 2,
    NoRoot = 3,
    InvalidParameter = 4,
    NullPointer = 5,
    AccuracyError = 6,
}

fn status_of(e: &Error) -> BeanStatus {
    match e {
        Error::Domain(_) => BeanStatus::DomainError,
        Error::Singularity(_) => BeanStatus::Singularity,
        Error::NoRoot { .. } => BeanStatus::NoRoot,
        Error::InvalidParameter(_) => BeanStatus::InvalidParameter,
        Error::NonFinite(_) => BeanStatus::DomainError,
        Error::MultipleCriticalPoints { .. } => BeanStatus::AccuracyError,
        Error::SeriesAccuracy { .. } => BeanStatus::AccuracyError,
        Error::QuadratureNonConvergence { .. } => BeanStatus::AccuracyError,
    }
}

/// `R₀ = e·sqrt(2/(1+e²))`, the rightmost point of the bean region.
#[no_mangle]
pub extern "C" fn bean_r0() -> f64 {
    constants::r0()
}

/// `sqrt(2/(1+e²))`, the leftmost point of the bean region.
#[no_mangle]
pub extern "C" fn bean_min_value() -> f64 {
    constants::bean_min()
}

/// Center of the largest inscribed disk, `(1+e)/sqrt(2(1+e²))`.
#[no_mangle]
pub extern "C" fn bean_alpha0() -> f64 {
    constants::alpha0()
}

/// k-starlike inclusion threshold.
#[no_mangle]
pub extern "C" fn bean_kst_threshold() -> f64 {
    constants::kst_threshold()
}

/// Cassinian-oval inclusion threshold, `tanh 1`.
#[no_mangle]
pub extern "C" fn bean_cassinian_threshold() -> f64 {
    constants::cassinian_threshold()
}

/// Evaluate the bean function at `re + i·im` (`|z| ≤ 1`).
///
/// # Safety
/// `out_re` and `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn bean_eval(
    re: f64,
    im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> BeanStatus {
    if out_re.is_null() || out_im.is_null() {
        return BeanStatus::NullPointer;
    }
    match bean_core::eval_bean(Complex::new(re, im)) {
        Ok(w) => {
            *out_re = w.re;
            *out_im = w.im;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Inverse of the bean function, `½ log(w²/(2−w²))`.
///
/// # Safety
/// `out_re` and `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn bean_inverse(
    re: f64,
    im: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> BeanStatus {
    if out_re.is_null() || out_im.is_null() {
        return BeanStatus::NullPointer;
    }
    match bean_core::inverse_bean(Complex::new(re, im)) {
        Ok(z) => {
            *out_re = z.re;
            *out_im = z.im;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Whether `re + i·im` lies in the open bean region.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_region_contains(re: f64, im: f64, out: *mut bool) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match bean_core::in_bean_region(Complex::new(re, im)) {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// A boundary-curve point with its polar-form ingredients.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct BeanBoundaryPoint {
    pub theta: f64,
    pub m: f64,
    pub n: f64,
    pub t: f64,
    pub w_re: f64,
    pub w_im: f64,
}

/// Closed-form boundary point of the image of `|z| = r` at angle `theta`.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_boundary_point(
    r: f64,
    theta: f64,
    out: *mut BeanBoundaryPoint,
) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match boundary_point(r, theta) {
        Ok(p) => {
            *out = BeanBoundaryPoint {
                theta: p.theta,
                m: p.m,
                n: p.n,
                t: p.t,
                w_re: p.w.re,
                w_im: p.w.im,
            };
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The sharp extrema of the function on the unit circle.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct BeanSharpBounds {
    pub re_min: f64,
    pub re_max: f64,
    pub im_abs_max: f64,
    pub mod_min: f64,
    pub mod_max: f64,
    pub arg_abs_max: f64,
    pub theta_re: f64,
    pub theta_im: f64,
    pub theta_mod: f64,
}

/// Compute the sharp bounds on the unit circle.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_sharp_bounds(out: *mut BeanSharpBounds) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match sharp_bounds() {
        Ok(b) => {
            *out = BeanSharpBounds {
                re_min: b.re_min,
                re_max: b.re_max,
                im_abs_max: b.im_abs_max,
                mod_min: b.mod_min,
                mod_max: b.mod_max,
                arg_abs_max: b.arg_abs_max,
                theta_re: b.theta_re,
                theta_im: b.theta_im,
                theta_mod: b.theta_mod,
            };
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Radius of convexity of the bean function.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_convexity_radius(out: *mut f64) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match geometry::convexity_radius() {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Largest inscribed-disk radius at real center `alpha`.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_inscribed_radius(alpha: f64, out: *mut f64) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match geometry::inscribed_radius(alpha) {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Smallest enclosing-disk radius at real center `alpha`.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_enclosing_radius(alpha: f64, out: *mut f64) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match geometry::enclosing_radius(alpha) {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Exact subordination test for the Janowski circle.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_janowski_subordination(
    a: f64,
    b: f64,
    out: *mut bool,
) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match geometry::janowski_subordination_test(a, b) {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Radius-catalog classes. Parameter meaning per class: `p1` is `A`, `alpha`
/// or `s`; `p2` is `B`. Unused parameters are ignored.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BeanRadiusClass {
    Janowski = 0,
    StarlikeAlpha = 1,
    Exp = 2,
    Sg = 3,
    Lune = 4,
    Cardioid = 5,
    LAlpha = 6,
    EAlpha = 7,
    Bs = 8,
    Cs = 9,
    Limacon = 10,
    ConvexAlpha = 11,
    StarlikeWithin = 12,
}

/// A computed radius with its probe record. `equation_id` points at static
/// storage; do not free it.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct BeanRadiusResult {
    pub value: f64,
    pub inner_ok: bool,
    pub outer_fail: bool,
    pub capped: bool,
    pub sharp: bool,
    pub equation_id: *const c_char,
}

fn equation_cstr(id: &str) -> *const c_char {
    let bytes: &'static [u8] = match id {
        "janowski_r1" => b"janowski_r1\0",
        "janowski_r2" => b"janowski_r2\0",
        "r_e_closed_form" => b"r_e_closed_form\0",
        "r_sg_closed_form" => b"r_sg_closed_form\0",
        "r_lune_closed_form" => b"r_lune_closed_form\0",
        "r_rho_root" => b"r_rho_root\0",
        "r_l_alpha_closed_form" => b"r_l_alpha_closed_form\0",
        "r_e_alpha_closed_form" => b"r_e_alpha_closed_form\0",
        "r_bs_closed_form" => b"r_bs_closed_form\0",
        "r_cs_root" => b"r_cs_root\0",
        "r_limacon_root" => b"r_limacon_root\0",
        "c_alpha_root_tan" => b"c_alpha_root_tan\0",
        "c_alpha_root_tanh" => b"c_alpha_root_tanh\0",
        "s_alpha_within_closed_form" => b"s_alpha_within_closed_form\0",
        _ => b"unknown\0",
    };
    bytes.as_ptr() as *const c_char
}

fn fill_radius(out: *mut BeanRadiusResult, r: &RadiusResult) {
    unsafe {
        *out = BeanRadiusResult {
            value: r.value,
            inner_ok: r.inner_ok,
            outer_fail: r.outer_fail,
            capped: r.capped,
            sharp: r.sharp,
            equation_id: equation_cstr(r.equation_id),
        };
    }
}

/// Sharp radius for one catalog class.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_radius(
    class: BeanRadiusClass,
    p1: f64,
    p2: f64,
    out: *mut BeanRadiusResult,
) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    let result = match class {
        BeanRadiusClass::Janowski => radii::radius_janowski(p1, p2),
        BeanRadiusClass::StarlikeAlpha => radii::radius_starlike_alpha(p1),
        BeanRadiusClass::Exp => Ok(radii::radius_exp()),
        BeanRadiusClass::Sg => Ok(radii::radius_sg()),
        BeanRadiusClass::Lune => Ok(radii::radius_lune()),
        BeanRadiusClass::Cardioid => radii::radius_cardioid(),
        BeanRadiusClass::LAlpha => radii::radius_l_alpha(p1),
        BeanRadiusClass::EAlpha => radii::radius_e_alpha(p1),
        BeanRadiusClass::Bs => radii::radius_bs(p1),
        BeanRadiusClass::Cs => radii::radius_cs(p1),
        BeanRadiusClass::Limacon => radii::radius_limacon(p1),
        BeanRadiusClass::ConvexAlpha => radii::radius_convexity_alpha(p1),
        BeanRadiusClass::StarlikeWithin => radii::radius_starlike_within(p1),
    };
    match result {
        Ok(r) => {
            fill_radius(out, &r);
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Mixed-family lower bound on `|β|`.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_beta_bound_mixed(
    alpha: f64,
    gamma: f64,
    k: i32,
    a: f64,
    b: f64,
    out: *mut f64,
) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    let q = BetaQuery {
        alpha,
        gamma,
        k,
        delta: 0,
        a,
        b,
    };
    match subordination::beta_bound_mixed(&q) {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// `√(1+z)`-target lower bound on `|β|`.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_beta_bound_sqrt(alpha: f64, k: i32, out: *mut f64) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match subordination::beta_bound_sqrt(alpha, k) {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Power-family lower bound on `|β|`.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_beta_bound_power(
    delta: u8,
    gamma: f64,
    k: i32,
    a: f64,
    b: f64,
    out: *mut f64,
) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    let q = BetaQuery {
        alpha: 0.0,
        gamma,
        k,
        delta,
        a,
        b,
    };
    match subordination::beta_bound_power(&q) {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Extremal-function value on the real segment `[−1, 1]`.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_f0_value(x: f64, out: *mut f64) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match f0_value(x) {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Covering radius `−f₀(−1)`.
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_covering_radius(out: *mut f64) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match covering_radius() {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Growth and distortion bounds at radius `r`.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct BeanGrowthRecord {
    pub r: f64,
    pub lower: f64,
    pub upper: f64,
    pub d_lower: f64,
    pub d_upper: f64,
    pub above_r0: bool,
}

/// Growth/distortion record at radius `r` in (0, 1).
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_growth(r: f64, out: *mut BeanGrowthRecord) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match growth_distortion(r) {
        Ok(g) => {
            *out = BeanGrowthRecord {
                r: g.r,
                lower: g.lower,
                upper: g.upper,
                d_lower: g.d_lower,
                d_upper: g.d_upper,
                above_r0: g.regime == Regime::AboveR0,
            };
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Sharp rotation bound at radius `r` in (0, 0.95].
///
/// # Safety
/// `out` must be a valid writable pointer.
#[no_mangle]
pub unsafe extern "C" fn bean_rotation_bound(r: f64, out: *mut f64) -> BeanStatus {
    if out.is_null() {
        return BeanStatus::NullPointer;
    }
    match rotation_bound(r) {
        Ok(v) => {
            *out = v;
            BeanStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Which Taylor series an opaque handle holds.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BeanSeriesKind {
    BeanFunction = 0,
    ExtremalFunction = 1,
}

/// Opaque truncated Taylor series handle.
pub struct BeanSeries {
    inner: PowerSeries,
}

/// Allocate a series of the given kind and degree (≤ 64 for the bean
/// function, ≤ 65 for the extremal function whose degree is raised by one).
/// Returns null on invalid input; release with [`bean_series_free`].
#[no_mangle]
pub extern "C" fn bean_series_new(kind: BeanSeriesKind, degree: u32) -> *mut BeanSeries {
    let series = match kind {
        BeanSeriesKind::BeanFunction => bean_series(degree as usize),
        BeanSeriesKind::ExtremalFunction => f0_series(degree as usize),
    };
    match series {
        Ok(inner) => Box::into_raw(Box::new(BeanSeries { inner })),
        Err(_) => std::ptr::null_mut(),
    }
}

/// Truncation degree of the handle.
///
/// # Safety
/// `series` must be a live pointer from [`bean_series_new`].
#[no_mangle]
pub unsafe extern "C" fn bean_series_degree(series: *const BeanSeries) -> u32 {
    if series.is_null() {
        return 0;
    }
    (*series).inner.order() as u32
}

/// Coefficient of `z^n`.
///
/// # Safety
/// `series` must be a live pointer from [`bean_series_new`]; `out_re` and
/// `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn bean_series_coeff(
    series: *const BeanSeries,
    n: u32,
    out_re: *mut f64,
    out_im: *mut f64,
) -> BeanStatus {
    if series.is_null() || out_re.is_null() || out_im.is_null() {
        return BeanStatus::NullPointer;
    }
    let s = &(*series).inner;
    if n as usize > s.order() {
        return BeanStatus::InvalidParameter;
    }
    let c = s.coeff(n as usize);
    *out_re = c.re;
    *out_im = c.im;
    BeanStatus::Ok
}

/// Horner evaluation of the truncated series at `zre + i·zim`.
///
/// # Safety
/// `series` must be a live pointer from [`bean_series_new`]; `out_re` and
/// `out_im` must be valid writable pointers.
#[no_mangle]
pub unsafe extern "C" fn bean_series_eval(
    series: *const BeanSeries,
    zre: f64,
    zim: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> BeanStatus {
    if series.is_null() || out_re.is_null() || out_im.is_null() {
        return BeanStatus::NullPointer;
    }
    let w = (*series).inner.eval(Complex::new(zre, zim));
    *out_re = w.re;
    *out_im = w.im;
    BeanStatus::Ok
}

/// Release a handle from [`bean_series_new`]. Null is a no-op.
///
/// # Safety
/// `series` must be null or a live pointer from [`bean_series_new`], not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn bean_series_free(series: *mut BeanSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}
