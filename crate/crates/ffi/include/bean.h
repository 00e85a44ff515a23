#ifndef BEAN_H
#define BEAN_H

/* Generated by cbindgen from bean-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Radius-catalog classes. Parameter meaning per class: `p1` is `A`, `alpha`
// or `s`; `p2` is `B`. Unused parameters are ignored.
typedef enum BeanRadiusClass {
  BeanRadiusClass_Janowski = 0,
  BeanRadiusClass_StarlikeAlpha = 1,
  BeanRadiusClass_Exp = 2,
  BeanRadiusClass_Sg = 3,
  BeanRadiusClass_Lune = 4,
  BeanRadiusClass_Cardioid = 5,
  BeanRadiusClass_LAlpha = 6,
  BeanRadiusClass_EAlpha = 7,
  BeanRadiusClass_Bs = 8,
  BeanRadiusClass_Cs = 9,
  BeanRadiusClass_Limacon = 10,
  BeanRadiusClass_ConvexAlpha = 11,
  BeanRadiusClass_StarlikeWithin = 12,
} BeanRadiusClass;

// Which Taylor series an opaque handle holds.
typedef enum BeanSeriesKind {
  BeanSeriesKind_BeanFunction = 0,
  BeanSeriesKind_ExtremalFunction = 1,
} BeanSeriesKind;

// Status codes shared by every fallible entry point.
typedef enum BeanStatus {
  BeanStatus_Ok = 0,
  BeanStatus_DomainError = 1,
  BeanStatus_Singularity = 2,
  BeanStatus_NoRoot = 3,
  BeanStatus_InvalidParameter = 4,
  BeanStatus_NullPointer = 5,
  BeanStatus_AccuracyError = 6,
} BeanStatus;

// Opaque truncated Taylor series handle.
typedef struct BeanSeries BeanSeries;

// A boundary-curve point with its polar-form ingredients.
typedef struct BeanBoundaryPoint {
  double theta;
  double m;
  double n;
  double t;
  double w_re;
  double w_im;
} BeanBoundaryPoint;

// The sharp extrema of the function on the unit circle.
typedef struct BeanSharpBounds {
  double re_min;
  double re_max;
  double im_abs_max;
  double mod_min;
  double mod_max;
  double arg_abs_max;
  double theta_re;
  double theta_im;
  double theta_mod;
} BeanSharpBounds;

// A computed radius with its probe record. `equation_id` points at static
// storage; do not free it.
typedef struct BeanRadiusResult {
  double value;
  bool inner_ok;
  bool outer_fail;
  bool capped;
  bool sharp;
  const char *equation_id;
} BeanRadiusResult;

// Growth and distortion bounds at radius `r`.
typedef struct BeanGrowthRecord {
  double r;
  double lower;
  double upper;
  double d_lower;
  double d_upper;
  bool above_r0;
} BeanGrowthRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// `R₀ = e·sqrt(2/(1+e²))`, the rightmost point of the bean region.
double bean_r0(void);

// `sqrt(2/(1+e²))`, the leftmost point of the bean region.
double bean_min_value(void);

// Center of the largest inscribed disk, `(1+e)/sqrt(2(1+e²))`.
double bean_alpha0(void);

// k-starlike inclusion threshold.
double bean_kst_threshold(void);

// Cassinian-oval inclusion threshold, `tanh 1`.
double bean_cassinian_threshold(void);

// Evaluate the bean function at `re + i·im` (`|z| ≤ 1`).
//
// # Safety
// `out_re` and `out_im` must be valid writable pointers.
enum BeanStatus bean_eval(double re, double im, double *out_re, double *out_im);

// Inverse of the bean function, `½ log(w²/(2−w²))`.
//
// # Safety
// `out_re` and `out_im` must be valid writable pointers.
enum BeanStatus bean_inverse(double re, double im, double *out_re, double *out_im);

// Whether `re + i·im` lies in the open bean region.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_region_contains(double re, double im, bool *out);

// Closed-form boundary point of the image of `|z| = r` at angle `theta`.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_boundary_point(double r, double theta, struct BeanBoundaryPoint *out);

// Compute the sharp bounds on the unit circle.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_sharp_bounds(struct BeanSharpBounds *out);

// Radius of convexity of the bean function.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_convexity_radius(double *out);

// Largest inscribed-disk radius at real center `alpha`.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_inscribed_radius(double alpha, double *out);

// Smallest enclosing-disk radius at real center `alpha`.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_enclosing_radius(double alpha, double *out);

// Exact subordination test for the Janowski circle.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_janowski_subordination(double a, double b, bool *out);

// Sharp radius for one catalog class.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_radius(enum BeanRadiusClass class_,
                            double p1,
                            double p2,
                            struct BeanRadiusResult *out);

// Mixed-family lower bound on `|β|`.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_beta_bound_mixed(double alpha,
                                      double gamma,
                                      int32_t k,
                                      double a,
                                      double b,
                                      double *out);

// `√(1+z)`-target lower bound on `|β|`.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_beta_bound_sqrt(double alpha, int32_t k, double *out);

// Power-family lower bound on `|β|`.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_beta_bound_power(uint8_t delta,
                                      double gamma,
                                      int32_t k,
                                      double a,
                                      double b,
                                      double *out);

// Extremal-function value on the real segment `[−1, 1]`.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_f0_value(double x, double *out);

// Covering radius `−f₀(−1)`.
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_covering_radius(double *out);

// Growth/distortion record at radius `r` in (0, 1).
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_growth(double r, struct BeanGrowthRecord *out);

// Sharp rotation bound at radius `r` in (0, 0.95].
//
// # Safety
// `out` must be a valid writable pointer.
enum BeanStatus bean_rotation_bound(double r, double *out);

// Allocate a series of the given kind and degree (≤ 64 for the bean
// function, ≤ 65 for the extremal function whose degree is raised by one).
// Returns null on invalid input; release with [`bean_series_free`].
struct BeanSeries *bean_series_new(enum BeanSeriesKind kind, uint32_t degree);

// Truncation degree of the handle.
//
// # Safety
// `series` must be a live pointer from [`bean_series_new`].
uint32_t bean_series_degree(const struct BeanSeries *series);

// Coefficient of `z^n`.
//
// # Safety
// `series` must be a live pointer from [`bean_series_new`]; `out_re` and
// `out_im` must be valid writable pointers.
enum BeanStatus bean_series_coeff(const struct BeanSeries *series,
                                  uint32_t n,
                                  double *out_re,
                                  double *out_im);

// Horner evaluation of the truncated series at `zre + i·zim`.
//
// # Safety
// `series` must be a live pointer from [`bean_series_new`]; `out_re` and
// `out_im` must be valid writable pointers.
enum BeanStatus bean_series_eval(const struct BeanSeries *series,
                                 double zre,
                                 double zim,
                                 double *out_re,
                                 double *out_im);

// Release a handle from [`bean_series_new`]. Null is a no-op.
//
// # Safety
// `series` must be null or a live pointer from [`bean_series_new`], not yet
// freed.
void bean_series_free(struct BeanSeries *series);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* BEAN_H */
