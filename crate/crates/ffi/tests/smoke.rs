//! Exercise the C ABI from Rust: status codes, out-params, handle lifecycle,
//! and the generated header.

use bean_ffi::*;

#[test]
fn eval_and_inverse_round_trip() {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    unsafe {
        assert_eq!(bean_eval(1.0, 0.0, &mut re, &mut im), BeanStatus::Ok);
        assert!((re - bean_r0()).abs() < 1e-14);
        assert!(im.abs() < 1e-15);
        let (mut zre, mut zim) = (0.0f64, 0.0f64);
        assert_eq!(bean_inverse(re, im, &mut zre, &mut zim), BeanStatus::Ok);
        assert!((zre - 1.0).abs() < 1e-12);
        assert!(zim.abs() < 1e-12);
    }
}

#[test]
fn domain_and_singularity_statuses() {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    unsafe {
        assert_eq!(bean_eval(1.5, 0.0, &mut re, &mut im), BeanStatus::DomainError);
        assert_eq!(
            bean_inverse(0.0, 0.0, &mut re, &mut im),
            BeanStatus::Singularity
        );
        assert_eq!(
            bean_eval(1.0, 0.0, std::ptr::null_mut(), &mut im),
            BeanStatus::NullPointer
        );
    }
}

#[test]
fn region_predicate() {
    let mut inside = false;
    unsafe {
        assert_eq!(bean_region_contains(1.0, 0.0, &mut inside), BeanStatus::Ok);
        assert!(inside);
        assert_eq!(bean_region_contains(1.33, 0.0, &mut inside), BeanStatus::Ok);
        assert!(!inside);
    }
}

#[test]
fn boundary_point_struct() {
    let mut p = BeanBoundaryPoint {
        theta: 0.0,
        m: 0.0,
        n: 0.0,
        t: 0.0,
        w_re: 0.0,
        w_im: 0.0,
    };
    unsafe {
        assert_eq!(bean_boundary_point(1.0, 0.0, &mut p), BeanStatus::Ok);
    }
    let e2 = std::f64::consts::E * std::f64::consts::E;
    assert!((p.m - (e2 + 1.0)).abs() < 1e-12);
    assert_eq!(p.n, 0.0);
    assert!((p.w_re - 1.32725060028).abs() < 1e-10);
}

#[test]
fn sharp_bounds_struct() {
    let mut b = BeanSharpBounds {
        re_min: 0.0,
        re_max: 0.0,
        im_abs_max: 0.0,
        mod_min: 0.0,
        mod_max: 0.0,
        arg_abs_max: 0.0,
        theta_re: 0.0,
        theta_im: 0.0,
        theta_mod: 0.0,
    };
    unsafe {
        assert_eq!(bean_sharp_bounds(&mut b), BeanStatus::Ok);
    }
    assert!((b.re_max - 1.38846).abs() < 5e-5);
    assert!((b.im_abs_max - 0.69949).abs() < 5e-5);
}

#[test]
fn radius_results_and_equation_ids() {
    let mut r = BeanRadiusResult {
        value: 0.0,
        inner_ok: false,
        outer_fail: false,
        capped: false,
        sharp: false,
        equation_id: std::ptr::null(),
    };
    unsafe {
        assert_eq!(
            bean_radius(BeanRadiusClass::Exp, 0.0, 0.0, &mut r),
            BeanStatus::Ok
        );
        assert!((r.value - 0.28311).abs() < 1e-5);
        assert!(r.inner_ok && r.outer_fail);
        let id = std::ffi::CStr::from_ptr(r.equation_id).to_str().unwrap();
        assert_eq!(id, "r_e_closed_form");

        assert_eq!(
            bean_radius(BeanRadiusClass::Janowski, 1.0, -1.0, &mut r),
            BeanStatus::Ok
        );
        assert!((r.value - 0.140617).abs() < 1e-5);

        assert_eq!(
            bean_radius(BeanRadiusClass::LAlpha, 0.9, 0.0, &mut r),
            BeanStatus::InvalidParameter
        );
    }
}

#[test]
fn beta_bounds() {
    let mut v = 0.0f64;
    unsafe {
        assert_eq!(bean_beta_bound_sqrt(0.0, 1, &mut v), BeanStatus::Ok);
        assert!((v - 10.96586).abs() < 1e-5);
        assert_eq!(
            bean_beta_bound_mixed(0.0, 1.0, 0, 1.0, 0.0, &mut v),
            BeanStatus::Ok
        );
        assert!((v - 3.32725).abs() < 1e-5);
        assert_eq!(
            bean_beta_bound_mixed(0.0, 0.5, 1, 1.0, 0.0, &mut v),
            BeanStatus::InvalidParameter
        );
        assert_eq!(
            bean_beta_bound_power(1, 1.0, 0, 1.0, 0.0, &mut v),
            BeanStatus::Ok
        );
        assert!((v - 3.32725).abs() < 1e-5);
    }
}

#[test]
fn growth_and_scalars() {
    let mut g = BeanGrowthRecord {
        r: 0.0,
        lower: 0.0,
        upper: 0.0,
        d_lower: 0.0,
        d_upper: 0.0,
        above_r0: false,
    };
    unsafe {
        assert_eq!(bean_growth(0.8, &mut g), BeanStatus::Ok);
        assert!(g.above_r0);
        assert!(g.lower < g.upper);
        let mut v = 0.0f64;
        assert_eq!(bean_covering_radius(&mut v), BeanStatus::Ok);
        assert!((v - 0.5922186686).abs() < 1e-9);
        assert_eq!(bean_rotation_bound(0.5, &mut v), BeanStatus::Ok);
        assert!((v - 0.256505264).abs() < 1e-7);
        assert_eq!(bean_inscribed_radius(1.0, &mut v), BeanStatus::Ok);
        assert!((v - (bean_r0() - 1.0)).abs() < 1e-14);
        assert_eq!(bean_inscribed_radius(0.1, &mut v), BeanStatus::DomainError);
    }
}

#[test]
fn series_handle_lifecycle() {
    let handle = bean_series_new(BeanSeriesKind::ExtremalFunction, 5);
    assert!(!handle.is_null());
    unsafe {
        assert_eq!(bean_series_degree(handle), 6);
        let (mut re, mut im) = (0.0f64, 0.0f64);
        assert_eq!(bean_series_coeff(handle, 4, &mut re, &mut im), BeanStatus::Ok);
        assert!((re - (-13.0 / 288.0)).abs() < 1e-15);
        assert_eq!(im, 0.0);
        assert_eq!(
            bean_series_coeff(handle, 99, &mut re, &mut im),
            BeanStatus::InvalidParameter
        );
        assert_eq!(
            bean_series_eval(handle, 0.1, 0.0, &mut re, &mut im),
            BeanStatus::Ok
        );
        assert!((re - 0.105057900426278).abs() < 1e-9);
        bean_series_free(handle);
        bean_series_free(std::ptr::null_mut());
    }
    let bad = bean_series_new(BeanSeriesKind::BeanFunction, 1000);
    assert!(bad.is_null());
}

#[test]
fn generated_header_exists() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("bean.h");
    let text = std::fs::read_to_string(header).expect("cbindgen header present");
    assert!(text.contains("bean_eval"));
    assert!(text.contains("BeanStatus"));
    assert!(text.contains("struct BeanSeries"));
    assert!(text.contains("bean_series_free"));
}
