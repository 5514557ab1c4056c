#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hyperschrod {

using cplx = std::complex<double>;

// Number of workers for a job of size njobs: hardware concurrency capped by
// the HYPERSCHROD_THREADS environment variable (and by njobs itself).
int worker_count(std::size_t njobs);

// Runs body(begin, end) over disjoint contiguous chunks of [0, n).  Each
// chunk writes only its own output slots, so results are bit-identical for
// any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

// Composite Simpson weight (1, 4, 2, ..., 4, 1) for node i of an odd-length
// grid; the caller multiplies by h/3.
inline double simpson_weight(std::size_t i, std::size_t n) {
  if (i == 0 || i + 1 == n) return 1.0;
  return (i % 2 == 1) ? 4.0 : 2.0;
}

double simpson(std::span<const double> y, double h);
cplx simpson(std::span<const cplx> y, double h);

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
  int evals = 0;
  bool converged = false;
};

// Adaptive Gauss-Kronrod (G7/K15) on [a, b].  `seeds` optionally pre-splits
// the interval (ascending interior breakpoints) so that sharply localized
// integrands are seen by the first pass.
QuadResult adaptive_gk(const std::function<double(double)>& f, double a, double b,
                       double abs_tol, double rel_tol,
                       std::span<const double> seeds = {}, int max_segments = 4000);

void require_all_finite(std::span<const cplx> v, const char* what);
void require_all_finite(std::span<const double> v, const char* what);

} // namespace hyperschrod
