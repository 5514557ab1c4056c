#pragma once

#include <span>

#include "hyperschrod/fields.hpp"
#include "hyperschrod/space.hpp"

namespace hyperschrod {

// Meromorphic c-function as a product over the indivisible positive roots,
//
//   c(lambda) = c0 * prod_a  2^{-i la_a} G(i la_a)
//               / [ G(i la_a/2 + m_a/4 + 1/2) G(i la_a/2 + m_a/4 + m_2a/2) ],
//
// la_a = <lambda, a>/<a, a>, with c0 fixed by c(-i rho) = 1.  Everything is
// accumulated in log space through log_gamma.
class CFunction {
public:
  explicit CFunction(const SpaceDescriptor& X);

  // lambda: real spectral parameter, length = rank.  PoleError when some
  // la_a vanishes (identifies the factor).
  cplx value(std::span<const double> lambda) const;

  // Plancherel density |c(lambda)|^{-2}; continuous extension 0 where some
  // la_a vanishes.  Wraps internal pole failures as DensityUndefined.
  double density(std::span<const double> lambda) const;

  double log_c0() const { return log_c0_; }
  const SpaceDescriptor& descriptor() const { return *X_; }

  // Product at lambda = -i rho evaluated with an externally supplied c0
  // (e.g. a closed form), exercising the whole Gamma path; equals 1 when the
  // supplied constant is correct.
  double check_minus_i_rho(double c0) const;

private:
  const SpaceDescriptor* X_;
  double log_c0_ = 0.0;
};

const CFunction& c_function_for(SpaceTag tag); // cached

cplx c_function(const SpaceDescriptor& X, std::span<const double> lambda);
double plancherel_density(const SpaceDescriptor& X, std::span<const double> lambda);

// Closed-form normalizations c0 (Gamma-identity reductions), used by the
// self-checks: H2 sqrt2, H3 sqrt(pi), H4 2 sqrt2, H5 3 sqrt(pi), SL3C
// 2 pi^{3/2}.
double c0_closed_form(SpaceTag tag);

// Elementary spherical function at lambda = 0, evaluated on the radial ray
// (H^n: geodesic radius in the working gauge; SL3C: the rho-direction ray at
// Killing radius r).  H3 and SL3C use closed forms; H2, H4, H5 use the
// one-dimensional theta-integral with adaptive Gauss-Kronrod (XiAccuracyError
// on non-convergence).
double xi_radial(const SpaceDescriptor& X, double r);

// Xi at a general flat point (rank 1: Xi(|H|); SL3C: psi(H)).
double xi_flat(const SpaceDescriptor& X, std::span<const double> H);

// Frozen per-space constants for the upper envelope
//   Xi(exp H) <= C_X * e^{-rho(H)} (1 + |H|_Killing)^d.
// C = 1 for H2, H3, SL3C (exact); H4 and H5 need measured constants (the
// constant-free display of this classical estimate fails for multiplicities
// >= 3: sup ratios ~2.0 and ~4.0 on r <= 30).
double xi_upper_constant(SpaceTag tag);

struct XiBoundReport {
  std::size_t checked = 0;
  std::size_t lower_violations = 0;  // Xi >= e^{-rho(H)}
  std::size_t lemma_violations = 0;  // Xi * e^{|rho| sigma} >= 1
  std::size_t upper_violations = 0;  // against C_X e^{-rho(H)} (1+|H|_K)^d
  double max_upper_ratio = 0.0;      // sup Xi e^{rho(H)} / (1+|H|_K)^d
  double upper_constant = 1.0;
};

// Scans the sandwich bounds over r in (0, r_max] on the given radial grid.
XiBoundReport xi_bound_scan(const SpaceDescriptor& X, const RadialGrid& grid);

} // namespace hyperschrod
