#pragma once

#include <optional>
#include <string>

#include "hyperschrod/fields.hpp"

namespace hyperschrod {

// Result of an expanding-window improper integral.  `divergent` is decided
// by comparing the full-window value against the half-window value: growth
// beyond `growth_limit` (default 1.5) per doubling flags the integral as
// infinite for our purposes.  Both partial values are recorded with the
// decision.
struct IntegralResult {
  double value = 0.0;
  bool divergent = false;
  double window_full = 0.0;
  double window_half = 0.0;
  double growth = 0.0;
};

// Weighted L1 norm  c_polar * int |h(r)| Xi(r) e^{C r} delta(r) dr.
double l1c_norm(const RadialProfile& h, double growth_c, double growth_limit = 1.5);

// Double integral
//   int int |f(r)| |u(s)| Xi(r) Xi(s) e^{r s / (2 t0)} delta(r) delta(s) dr ds
// over expanding windows [0,R]^2, exponents accumulated in log space.  Node
// count per axis is strided down to at most 2501.
IntegralResult beurling_functional(const RadialProfile& f, const RadialProfile& u, double t0,
                                   double growth_limit = 1.5);

enum class GsCpMode { GS, CP };

struct GsCpParams {
  GsCpMode mode = GsCpMode::GS;
  double p = 2.0;  // GS: exponent in e^{(a^p/p) sigma^p}; CP: Lp exponent (<= 0 means sup)
  double q = 2.0;  // same role for the u side
  double a = 1.0;  // weight rate for f
  double b = 1.0;  // weight rate for u
  double growth_limit = 1.5;
};

struct GsCpReport {
  IntegralResult side_f;
  IntegralResult side_u;
  bool both_finite = false;
};

// GS mode: c_polar int |f| Xi e^{(a^p/p) sigma^p} delta dsigma per side
// (1 < p < infinity, 1/p + 1/q = 1).  CP mode: the weighted Lp norm
// [c_polar int (|f| e^{a sigma^2})^p delta dsigma]^{1/p}; p <= 0 stands for
// p = infinity and takes the weighted sup instead.
GsCpReport gs_cp_functionals(const RadialProfile& f, const RadialProfile& u, const GsCpParams& params);

// Fit log |f(r)| (optionally after dividing by psi^psi_power and r^poly_power)
// against log A - alpha r^2, uniform weights, on r in [window_lo, r_cut] where
// r_cut is the end of the last run with |f| >= 1e-12 (window_hi > 0 overrides
// r_cut).  FitError when fewer than 10 samples survive.
struct DecayFit {
  double alpha = 0.0;
  double log_amp = 0.0;
  double r2 = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  int npoints = 0;
};

DecayFit decay_fit(const RadialProfile& f, bool divide_psi, int psi_power = 1,
                   int poly_power = 0, double window_lo = 1.0, double window_hi = 0.0);

enum class Verdict { ForcesZero, Boundary, NoConclusion };

std::string verdict_name(Verdict v); // FORCES_ZERO / BOUNDARY / NO_CONCLUSION

// product = 16 alpha beta t0^2 against the sharp threshold 1:
//   > 1 + eps -> ForcesZero; |product - 1| <= eps -> Boundary; else
//   NoConclusion.
Verdict classify(double product, double eps = 0.05);

struct AuditReport {
  DecayFit alpha_fit;
  DecayFit beta_fit;
  double t0 = 0.0;
  double threshold_product = 0.0; // 16 alpha_hat beta_hat t0^2
  Verdict verdict = Verdict::NoConclusion;
  IntegralResult beurling;
  bool beurling_agrees = false; // finite iff product > 1 (boundary band exempt)
  std::optional<GsCpReport> gs;
  double gs_product = 0.0; // 2 t0 sqrt(2 alpha_hat) sqrt(2 beta_hat) when GS ran
  std::optional<GsCpReport> cp;
};

// Fits alpha from f and beta from u(t0) (psi prefactor on), classifies the
// threshold product, and cross-checks the Beurling functional.
AuditReport run_audit(const RadialProfile& f, const RadialProfile& u_t0, double t0,
                      double eps = 0.05, double growth_limit = 1.5);

} // namespace hyperschrod
