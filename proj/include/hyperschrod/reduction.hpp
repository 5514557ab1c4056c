#pragma once

#include <optional>

#include "hyperschrod/fields.hpp"

namespace hyperschrod {

// Weyl-skew flat reduction g(H) = eta(H) f(|H|) of a radial profile on a
// complex space.  For rank 1 the grid holds g(x) = sinh(x) f(|x|) (odd);
// skew_defect is the measured max |g(-x) + g(x)| / max |g| over mirrored
// grid pairs (rank 2: evaluated through the construction formula at
// reflected points).
struct SkewFlatFunction {
  SpaceTag space = SpaceTag::H3;
  FlatField field;
  double skew_defect = 0.0;
  bool parity = false; // skew_defect <= 1e-10
};

SkewFlatFunction flat_reduce(const RadialProfile& f, const FlatGrid& grid = {1, 2048, 20.0});

// Chirped-Gaussian extremal family:
//   f(r)  = psi(r) e^{-(alpha + i sqrt(alpha beta)) r^2},
//   t0    = (16 alpha beta)^{-1/2},
//   u_env(r) = psi(r) e^{-beta r^2} e^{i r^2 / (4 t0)}   (global constant free).
struct ExtremalPair {
  RadialProfile f;
  RadialProfile u_envelope;
  double alpha = 0.0;
  double beta = 0.0;
  double t0 = 0.0;
};

ExtremalPair extremal_pair(SpaceTag tag, double alpha, double beta,
                           const RadialGrid& grid = RadialGrid::defaults());

// Least-squares certificate h(x) ~ P(x) e^{-a x^2} (a complex, Re a > 0) on
// the window where |e^{-a x^2}| >= 1e-12, P of degree <= degree.  Returns
// monomial coefficients of P and the relative L2 residual over the window.
struct PolyFit {
  std::vector<cplx> coeffs;
  double rel_residual = 0.0;
  int degree = 0;
  double window = 0.0;
};

PolyFit hardy_equality_fit(const FlatField& h, cplx a, int degree);

// Default certificate degree 2m, m the smallest integer with 2m >= number of
// positive roots.
int default_hardy_degree(SpaceTag tag);

} // namespace hyperschrod
