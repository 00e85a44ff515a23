//! Command-line front end: every catalog item, curve data, and the oracle
//! verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use serde_json::json;

use bean_core::extremal::{f0_series_rational, growth_distortion, rotation_bound, Regime};
use bean_core::radii::{self, ClassId, ConvexityReading, RadiusResult};
use bean_core::series::{bean_series_rational, rational_string};
use bean_core::verify::{run_suite, VerifyConfig};
use bean_core::{constants, geometry, subordination};

#[derive(Parser)]
#[command(name = "bean", version, about = "Constants, curves, radii and subordination bounds of the bean region")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CurveFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    Bean,
    F0,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Variant {
    #[default]
    Tan,
    Tanh,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print every named constant with its equation id.
    Constants {
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        /// Full-precision values instead of 6 significant digits.
        #[arg(long)]
        precision: bool,
    },
    /// Sharp bounds of the function on the unit circle.
    Bounds {
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
        #[arg(long)]
        precision: bool,
    },
    /// Boundary curve of the image of |z| ≤ r.
    Curve {
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = 256)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = CurveFormat::Csv)]
        format: CurveFormat,
    },
    /// Sharp radius for a class: one of janowski, starlike_alpha, exp, sg,
    /// lune, cardioid, L_alpha, e_alpha, BS, cs, limacon, convex_alpha,
    /// starlike_within, or `all` for the whole catalog.
    Radius {
        class_id: String,
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Option<f64>,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Option<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<f64>,
        /// Reading of the convexity-of-order-α equation.
        #[arg(long, value_enum, default_value_t)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Lower bound on |β| for a subordination family (mixed, sqrt, power).
    BetaBound {
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<f64>,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i32>,
        #[arg(long)]
        delta: Option<u8>,
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Option<f64>,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Option<f64>,
        /// Check the sufficient condition at bound·(1+1e−6) on a boundary grid.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = 1024)]
        grid: usize,
    },
    /// Exact subordination test for the Janowski circle (1+Az)/(1+Bz).
    CheckJanowski {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: f64,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: f64,
        /// Also sample the circle through the containment oracle.
        #[arg(long)]
        probe: bool,
    },
    /// Taylor coefficients of the bean function or the extremal function.
    Series {
        #[arg(long, value_enum, default_value_t = SeriesKind::Bean)]
        which: SeriesKind,
        #[arg(long, default_value_t = 8)]
        degree: usize,
        /// Print exact rationals only.
        #[arg(long)]
        rational: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Growth and distortion bounds at radius r.
    Growth {
        #[arg(long)]
        r: f64,
        /// Also print the sharp rotation bound at r.
        #[arg(long)]
        rotation: bool,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Run the full oracle suite; exit 0 iff every check passes.
    Verify {
        /// Sensitivity hook: offset the claimed R₀ before checking.
        #[arg(long, allow_hyphen_values = true, hide = true)]
        perturb_r0: Option<f64>,
    },
}

/// `digits` significant digits, fixed-point.
fn sig(x: f64, digits: i32) -> String {
    if x == 0.0 {
        return format!("{:.*}", (digits - 1) as usize, 0.0);
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn fmt_value(x: f64, precision: bool) -> String {
    if precision {
        format!("{x:.17e}")
    } else {
        sig(x, 6)
    }
}

struct Row {
    name: &'static str,
    value: f64,
    equation_id: &'static str,
}

fn constants_rows() -> Result<Vec<Row>, bean_core::Error> {
    let bounds = geometry::sharp_bounds()?;
    let incl = geometry::inclusion_thresholds()?;
    let (mm_center, mm_radius) = geometry::minimax_center()?;
    let rows = vec![
        Row { name: "bean_min", value: constants::bean_min(), equation_id: "bean_min_closed_form" },
        Row { name: "R0", value: constants::r0(), equation_id: "r0_closed_form" },
        Row { name: "alpha0", value: constants::alpha0(), equation_id: "alpha0_closed_form" },
        Row { name: "r_alpha0", value: constants::inscribed_radius_alpha0(), equation_id: "r_alpha_piecewise" },
        Row { name: "r_convex", value: geometry::convexity_radius()?, equation_id: "convexity_numerator_root" },
        Row { name: "re_max", value: bounds.re_max, equation_id: "sharp_re_extremum" },
        Row { name: "theta_re_max", value: bounds.theta_re, equation_id: "sharp_re_extremum" },
        Row { name: "im_abs_max", value: bounds.im_abs_max, equation_id: "sharp_im_extremum" },
        Row { name: "theta_im_max", value: bounds.theta_im, equation_id: "sharp_im_extremum" },
        Row { name: "mod_max", value: bounds.mod_max, equation_id: "sharp_mod_extremum" },
        Row { name: "theta_mod_max", value: bounds.theta_mod, equation_id: "sharp_mod_extremum" },
        Row { name: "arg_bound_beta", value: bounds.arg_abs_max / std::f64::consts::FRAC_PI_2, equation_id: "sharp_arg_extremum" },
        Row { name: "rho_parabolic", value: incl.parabolic_rho, equation_id: "parabolic_gauge_max" },
        Row { name: "theta_parabolic", value: incl.parabolic_theta, equation_id: "parabolic_gauge_max" },
        Row { name: "kst_k", value: incl.kst_k, equation_id: "kst_closed_form" },
        Row { name: "cassinian_c", value: incl.cassinian_c, equation_id: "cassinian_closed_form" },
        Row { name: "minimax_center", value: mm_center, equation_id: "minimax_enclosing_disk" },
        Row { name: "minimax_radius", value: mm_radius, equation_id: "minimax_enclosing_disk" },
        Row { name: "enclosing_radius_center1", value: geometry::enclosing_radius(1.0)?, equation_id: "distance_max_center1" },
        Row { name: "enclosing_radius_center1_at_im_angle", value: geometry::distance_sq_to_boundary(1.0, bounds.theta_im).sqrt(), equation_id: "distance_at_theta1_center1" },
        Row { name: "r0_distortion", value: distortion_transition(), equation_id: "modulus_critical_transition" },
        Row { name: "covering_radius", value: bean_core::extremal::covering_radius()?, equation_id: "minus_f0_at_minus_one" },
        Row { name: "bean_deriv_at_zero", value: 0.5, equation_id: "bean_series_c1" },
    ];
    Ok(rows)
}

fn distortion_transition() -> f64 {
    let (mut lo, mut hi) = (0.55, 0.72);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if geometry::modulus_extremum_angle(mid).map(|x| x.1).unwrap_or(false) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

fn print_rows(rows: &[Row], format: TableFormat, precision: bool) {
    match format {
        TableFormat::Text => {
            for r in rows {
                println!("{:<38} {:>22}  {}", r.name, fmt_value(r.value, precision), r.equation_id);
            }
        }
        TableFormat::Csv => {
            println!("name,value,equation_id");
            for r in rows {
                println!("{},{},{}", r.name, fmt_value(r.value, precision), r.equation_id);
            }
        }
        TableFormat::Json => {
            let mut map = serde_json::Map::new();
            for r in rows {
                map.insert(
                    r.name.to_string(),
                    json!({ "value": r.value, "equation_id": r.equation_id }),
                );
            }
            println!("{}", serde_json::Value::Object(map));
        }
    }
}

fn radius_rows(result: &RadiusResult) -> Vec<(&'static str, String)> {
    vec![
        ("value", sig(result.value, 6)),
        ("equation_id", result.equation_id.to_string()),
        ("inner_ok", result.inner_ok.to_string()),
        ("outer_fail", result.outer_fail.to_string()),
        ("capped", result.capped.to_string()),
        ("sharp", result.sharp.to_string()),
    ]
}

fn radius_json(result: &RadiusResult) -> serde_json::Value {
    json!({
        "value": result.value,
        "equation_id": result.equation_id,
        "inner_ok": result.inner_ok,
        "outer_fail": result.outer_fail,
        "capped": result.capped,
        "sharp": result.sharp,
    })
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn need(opt: Option<f64>, flag: &str) -> Result<f64, String> {
    opt.ok_or_else(|| format!("missing required flag --{flag}"))
}

fn run_radius(
    class_id: &str,
    a: Option<f64>,
    b: Option<f64>,
    alpha: Option<f64>,
    s: Option<f64>,
    variant: Variant,
    format: TableFormat,
) -> Result<(), String> {
    if class_id == "all" {
        let cat = radii::catalog().map_err(|e| e.to_string())?;
        match format {
            TableFormat::Json => {
                let items: Vec<_> = cat
                    .iter()
                    .map(|(id, params, r)| {
                        let mut v = radius_json(r);
                        v["class_id"] = json!(id.name());
                        v["parameters"] = json!(params);
                        v
                    })
                    .collect();
                println!("{}", serde_json::Value::Array(items));
            }
            _ => {
                for (id, params, r) in &cat {
                    println!(
                        "{:<16} {:<12} {:>10} {:<26} inner_ok={} outer_fail={}",
                        id.name(),
                        params,
                        sig(r.value, 6),
                        r.equation_id,
                        r.inner_ok,
                        r.outer_fail
                    );
                }
            }
        }
        return Ok(());
    }

    let id = ClassId::parse(class_id).ok_or_else(|| {
        format!(
            "unknown class id `{class_id}`; expected one of {} or all",
            ClassId::ALL.map(|c| c.name()).join(", ")
        )
    })?;
    let reading = match variant {
        Variant::Tan => ConvexityReading::TanAsPrinted,
        Variant::Tanh => ConvexityReading::TanhVariant,
    };
    let result = match id {
        ClassId::Janowski => radii::radius_janowski(need(a, "A")?, need(b, "B")?),
        ClassId::StarlikeAlpha => radii::radius_starlike_alpha(alpha.unwrap_or(0.0)),
        ClassId::Exp => Ok(radii::radius_exp()),
        ClassId::Sg => Ok(radii::radius_sg()),
        ClassId::Lune => Ok(radii::radius_lune()),
        ClassId::Cardioid => radii::radius_cardioid(),
        ClassId::LAlpha => radii::radius_l_alpha(alpha.unwrap_or(0.0)),
        ClassId::EAlpha => radii::radius_e_alpha(alpha.unwrap_or(0.0)),
        ClassId::Bs => radii::radius_bs(alpha.unwrap_or(0.0)),
        ClassId::Cs => radii::radius_cs(alpha.unwrap_or(0.0)),
        ClassId::Limacon => radii::radius_limacon(need(s, "s")?),
        ClassId::ConvexAlpha => {
            radii::radius_convexity_alpha_with(need(alpha, "alpha")?, reading)
        }
        ClassId::StarlikeWithin => radii::radius_starlike_within(need(alpha, "alpha")?),
    }
    .map_err(|e| e.to_string())?;

    // the convexity radius is reported under both equation readings
    let other = if id == ClassId::ConvexAlpha {
        let other_reading = match reading {
            ConvexityReading::TanAsPrinted => ConvexityReading::TanhVariant,
            ConvexityReading::TanhVariant => ConvexityReading::TanAsPrinted,
        };
        Some(
            radii::radius_convexity_alpha_with(need(alpha, "alpha")?, other_reading)
                .map_err(|e| e.to_string())?,
        )
    } else {
        None
    };

    match format {
        TableFormat::Json => {
            let mut v = radius_json(&result);
            v["class_id"] = json!(id.name());
            if let Some(o) = &other {
                v["other_reading"] = radius_json(o);
            }
            println!("{v}");
        }
        _ => {
            println!("class {}", id.name());
            for (k, val) in radius_rows(&result) {
                println!("{k} {val}");
            }
            if let Some(o) = &other {
                println!("other_reading_value {} ({})", sig(o.value, 6), o.equation_id);
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn run_beta_bound(
    family: &str,
    alpha: Option<f64>,
    gamma: Option<f64>,
    k: Option<i32>,
    delta: Option<u8>,
    a: Option<f64>,
    b: Option<f64>,
    verify: bool,
    grid: usize,
) -> Result<(), String> {
    use subordination::{BetaQuery, BoundFamily};
    let kk = k.ok_or("missing required flag --k")?;
    let (bound, query) = match family {
        "mixed" => {
            let q = BetaQuery {
                alpha: need(alpha, "alpha")?,
                gamma: need(gamma, "gamma")?,
                k: kk,
                delta: 0,
                a: need(a, "A")?,
                b: need(b, "B")?,
            };
            let v = subordination::beta_bound_mixed(&q).map_err(|e| e.to_string())?;
            (v, (q, BoundFamily::Mixed))
        }
        "sqrt" => {
            let al = need(alpha, "alpha")?;
            let v = subordination::beta_bound_sqrt(al, kk).map_err(|e| e.to_string())?;
            // the sqrt target is the mixed family at A = 1, B = 0, γ = ½
            let q = BetaQuery {
                alpha: al,
                gamma: 0.5,
                k: kk,
                delta: 0,
                a: 1.0,
                b: 0.0,
            };
            (v, (q, BoundFamily::Mixed))
        }
        "power" => {
            let q = BetaQuery {
                alpha: 0.0,
                gamma: need(gamma, "gamma")?,
                k: kk,
                delta: delta.ok_or("missing required flag --delta")?,
                a: need(a, "A")?,
                b: need(b, "B")?,
            };
            let v = subordination::beta_bound_power(&q).map_err(|e| e.to_string())?;
            (v, (q, BoundFamily::Power))
        }
        other => return Err(format!("unknown family `{other}`; expected mixed, sqrt or power")),
    };
    println!("{bound:.5}");
    if verify {
        let (q, fam) = &query;
        let ok = subordination::verify_sufficiency(
            Complex64::new(bound * (1.0 + 1e-6), 0.0),
            q,
            *fam,
            grid,
        )
        .map_err(|e| e.to_string())?;
        println!("sufficient_condition {ok}");
    }
    Ok(())
}

fn run_curve(r: f64, samples: usize, format: CurveFormat) -> Result<(), String> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(format!("curve: r = {r} not in (0, 1]"));
    }
    if samples < 1 {
        return Err("curve: need at least one sample".into());
    }
    let pts = geometry::curve_samples(r, samples).map_err(|e| e.to_string())?;
    match format {
        CurveFormat::Csv => {
            println!("theta,re,im");
            for (t, re, im) in &pts {
                println!("{t:.12},{re:.12},{im:.12}");
            }
        }
        CurveFormat::Json => {
            let arr: Vec<_> = pts.iter().map(|(t, re, im)| json!([t, re, im])).collect();
            println!("{}", serde_json::Value::Array(arr));
        }
        CurveFormat::Svg => {
            let (mut xmin, mut xmax, mut ymin, mut ymax) =
                (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
            for (_, re, im) in &pts {
                xmin = xmin.min(*re);
                xmax = xmax.max(*re);
                ymin = ymin.min(-*im);
                ymax = ymax.max(-*im);
            }
            let margin = 0.05 * (xmax - xmin).max(ymax - ymin).max(1e-9);
            let (x0, y0) = (xmin - margin, ymin - margin);
            let (w, h) = (xmax - xmin + 2.0 * margin, ymax - ymin + 2.0 * margin);
            let points: Vec<String> = pts
                .iter()
                .map(|(_, re, im)| format!("{:.6},{:.6}", re, -im))
                .collect();
            println!("<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
            println!(
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0:.6} {y0:.6} {w:.6} {h:.6}\" width=\"640\">"
            );
            println!(
                "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"{:.6}\" points=\"{}\"/>",
                0.004 * w.max(h),
                points.join(" ")
            );
            println!("</svg>");
        }
    }
    Ok(())
}

fn run_series(
    which: SeriesKind,
    degree: usize,
    rational_only: bool,
    format: TableFormat,
) -> Result<(), String> {
    let series = match which {
        SeriesKind::Bean => bean_series_rational(degree).map_err(|e| e.to_string())?,
        SeriesKind::F0 => f0_series_rational(degree).map_err(|e| e.to_string())?,
    };
    match format {
        TableFormat::Json => {
            let items: Vec<_> = series
                .coeffs()
                .iter()
                .map(|c| {
                    use num::traits::ToPrimitive;
                    if rational_only {
                        json!(rational_string(c))
                    } else {
                        json!({ "rational": rational_string(c), "float": c.to_f64() })
                    }
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
        _ => {
            use num::traits::ToPrimitive;
            for (k, c) in series.coeffs().iter().enumerate() {
                if rational_only {
                    println!("{k} {}", rational_string(c));
                } else {
                    println!("{k} {} {:.15e}", rational_string(c), c.to_f64().unwrap_or(f64::NAN));
                }
            }
        }
    }
    Ok(())
}

fn run_growth(r: f64, rotation: bool, format: TableFormat) -> Result<(), String> {
    let g = growth_distortion(r).map_err(|e| e.to_string())?;
    let regime = match g.regime {
        Regime::BelowR0 => "below_r0",
        Regime::AboveR0 => "above_r0",
    };
    let rot = if rotation {
        Some(rotation_bound(r).map_err(|e| e.to_string())?)
    } else {
        None
    };
    match format {
        TableFormat::Json => {
            let mut v = json!({
                "r": g.r,
                "lower": g.lower,
                "upper": g.upper,
                "d_lower": g.d_lower,
                "d_upper": g.d_upper,
                "regime": regime,
            });
            if let Some(rb) = rot {
                v["rotation_bound"] = json!(rb);
            }
            println!("{v}");
        }
        _ => {
            println!("r {}", sig(g.r, 6));
            println!("lower {}", sig(g.lower, 6));
            println!("upper {}", sig(g.upper, 6));
            println!("d_lower {}", sig(g.d_lower, 6));
            println!("d_upper {}", sig(g.d_upper, 6));
            println!("regime {regime}");
            if let Some(rb) = rot {
                println!("rotation_bound {}", sig(rb, 6));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Constants { format, precision } => match constants_rows() {
            Ok(rows) => {
                print_rows(&rows, format, precision);
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(&e.to_string()),
        },
        Cmd::Bounds { format, precision } => match geometry::sharp_bounds() {
            Ok(b) => {
                let rows = vec![
                    Row { name: "re_min", value: b.re_min, equation_id: "bean_min_closed_form" },
                    Row { name: "re_max", value: b.re_max, equation_id: "sharp_re_extremum" },
                    Row { name: "im_abs_max", value: b.im_abs_max, equation_id: "sharp_im_extremum" },
                    Row { name: "mod_min", value: b.mod_min, equation_id: "bean_min_closed_form" },
                    Row { name: "mod_max", value: b.mod_max, equation_id: "sharp_mod_extremum" },
                    Row { name: "arg_abs_max", value: b.arg_abs_max, equation_id: "sharp_arg_extremum" },
                    Row { name: "theta_re_max", value: b.theta_re, equation_id: "sharp_re_extremum" },
                    Row { name: "theta_im_max", value: b.theta_im, equation_id: "sharp_im_extremum" },
                    Row { name: "theta_mod_max", value: b.theta_mod, equation_id: "sharp_mod_extremum" },
                ];
                print_rows(&rows, format, precision);
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(&e.to_string()),
        },
        Cmd::Curve { r, samples, format } => match run_curve(r, samples, format) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(&e),
        },
        Cmd::Radius {
            class_id,
            a,
            b,
            alpha,
            s,
            variant,
            format,
        } => match run_radius(&class_id, a, b, alpha, s, variant, format) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(&e),
        },
        Cmd::BetaBound {
            family,
            alpha,
            gamma,
            k,
            delta,
            a,
            b,
            verify,
            grid,
        } => match run_beta_bound(&family, alpha, gamma, k, delta, a, b, verify, grid) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(&e),
        },
        Cmd::CheckJanowski { a, b, probe } => {
            match geometry::janowski_subordination_test(a, b) {
                Ok(ok) => {
                    println!("{ok}");
                    if probe {
                        let samples: Vec<Complex64> = (0..2048)
                            .map(|j| {
                                let t = 2.0 * std::f64::consts::PI * j as f64 / 2048.0;
                                let z = Complex64::new(t.cos(), t.sin());
                                (Complex64::new(1.0, 0.0) + a * z)
                                    / (Complex64::new(1.0, 0.0) + b * z)
                            })
                            .collect();
                        match geometry::contains_curve(&samples) {
                            Ok(contained) => println!("containment_oracle {contained}"),
                            Err(e) => return usage_error(&e.to_string()),
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e.to_string()),
            }
        }
        Cmd::Series {
            which,
            degree,
            rational,
            format,
        } => match run_series(which, degree, rational, format) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(&e),
        },
        Cmd::Growth { r, rotation, format } => match run_growth(r, rotation, format) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(&e),
        },
        Cmd::Verify { perturb_r0 } => {
            let cfg = VerifyConfig {
                r0_claimed: constants::r0() + perturb_r0.unwrap_or(0.0),
            };
            let results = run_suite(&cfg);
            let mut failures = 0usize;
            for r in &results {
                if r.passed {
                    println!("PASS {} — {}", r.name, r.detail);
                } else {
                    failures += 1;
                    println!("FAIL {} — {}", r.name, r.detail);
                }
            }
            println!("{} checks, {} failed", results.len(), failures);
            if failures == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
