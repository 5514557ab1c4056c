#pragma once

#include <span>

#include "hyperschrod/fields.hpp"

namespace hyperschrod {

// Sampled Gaussian e^{-a |x|^2}, Re a > 0.
FlatField gaussian_field(const FlatGrid& grid, cplx a);

// Closed-form damped free evolution of the Gaussian:
//   u_t(x) = (1 + 4 i a t)^{-dim/2} e^{-i c t} e^{-a |x|^2 / (1 + 4 i a t)},
// principal branch, continuous in t from 0.
FlatField gaussian_oracle(const FlatGrid& grid, cplx a, double c, double t);

// Spectral multiplier path: DFT, multiply by e^{-i (|lambda|^2 + c) t},
// inverse DFT.  Physical frequencies lambda_k = pi k / L per axis.
FlatField propagate_multiplier(const FlatField& f, double t, double c);

// Chirp kernel gamma_{c,t}(x); KernelUndefined at t = 0.
cplx kernel_gamma(int dim, double c, double t, std::span<const double> x);

// Chirp-factorized path, u = gamma_{c,t} convolved with f in the measure
// convention dx / (2 pi)^{dim/2}:
//   u(t,x) = (2|t|)^{-dim/2} e^{-i c t} e^{-i pi sgn(t) dim/4}
//            e^{i |x|^2 / 4t} * T[e^{i |y|^2/4t} f(y)](x / 2t),
//   T g(xi) = (2 pi)^{-dim/2} Int g(y) e^{-i xi . y} dy,
// with the off-grid transform T evaluated by exact separable DTFT sums.
// Raises AliasWarning in u.warnings when |f| at the grid boundary exceeds
// 1e-12 * max |f|.
FlatField chirp_solution(const FlatField& f, double t, double c);

} // namespace hyperschrod
