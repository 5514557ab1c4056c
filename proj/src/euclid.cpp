#include "hyperschrod/euclid.hpp"

#include <cmath>

#include "hyperschrod/errors.hpp"
#include "hyperschrod/fft.hpp"

namespace hyperschrod {

namespace {

void check_grid(const FlatGrid& g) {
  if (g.dim != 1 && g.dim != 2) throw GridError("flat grid: dim must be 1 or 2");
  if (!is_pow2(g.n)) throw GridError("flat grid: N must be a power of two");
  if (!(g.extent > 0.0)) throw GridError("flat grid: extent must be positive");
}

double sq_radius_1d(double x) { return x * x; }

// frequency of DFT bin k: pi * k' / L with k' the signed index
double bin_freq(std::size_t k, std::size_t n, double extent) {
  double kk = static_cast<double>(k);
  if (k >= n / 2) kk -= static_cast<double>(n);
  return M_PI * kk / extent;
}

} // namespace

FlatField gaussian_field(const FlatGrid& grid, cplx a) {
  check_grid(grid);
  if (!(a.real() > 0.0)) throw DomainError("gaussian_field: Re(a) must be positive");
  FlatField f;
  f.grid = grid;
  f.v.resize(grid.size());
  if (grid.dim == 1) {
    for (std::size_t i = 0; i < grid.n; ++i) f.v[i] = std::exp(-a * sq_radius_1d(grid.x(i)));
  } else {
    for (std::size_t i = 0; i < grid.n; ++i)
      for (std::size_t j = 0; j < grid.n; ++j) {
        double r2 = sq_radius_1d(grid.x(i)) + sq_radius_1d(grid.x(j));
        f.at(i, j) = std::exp(-a * r2);
      }
  }
  return f;
}

FlatField gaussian_oracle(const FlatGrid& grid, cplx a, double c, double t) {
  check_grid(grid);
  if (!(a.real() > 0.0)) throw DomainError("gaussian_oracle: Re(a) must be positive");
  // w = 1 + 4iat never meets (-inf, 0] for Re a > 0, so the principal branch
  // is the branch continuous in t from w(0) = 1.
  const cplx w = 1.0 + cplx(0.0, 4.0 * t) * a;
  const cplx pref = std::pow(w, cplx(-0.5 * grid.dim, 0.0)) * std::exp(cplx(0.0, -c * t));
  const cplx aw = a / w;
  FlatField u;
  u.grid = grid;
  u.v.resize(grid.size());
  if (grid.dim == 1) {
    for (std::size_t i = 0; i < grid.n; ++i)
      u.v[i] = pref * std::exp(-aw * sq_radius_1d(grid.x(i)));
  } else {
    for (std::size_t i = 0; i < grid.n; ++i)
      for (std::size_t j = 0; j < grid.n; ++j) {
        double r2 = sq_radius_1d(grid.x(i)) + sq_radius_1d(grid.x(j));
        u.at(i, j) = pref * std::exp(-aw * r2);
      }
  }
  return u;
}

FlatField propagate_multiplier(const FlatField& f, double t, double c) {
  check_grid(f.grid);
  require_all_finite(f.v, "propagate_multiplier input");
  FlatField u = f;
  const std::size_t n = f.grid.n;
  if (f.grid.dim == 1) {
    fft(u.v, false);
    for (std::size_t k = 0; k < n; ++k) {
      double lam = bin_freq(k, n, f.grid.extent);
      u.v[k] *= std::exp(cplx(0.0, -(lam * lam + c) * t));
    }
    fft(u.v, true);
  } else {
    fft_2d(u.v, n, n, false);
    for (std::size_t k1 = 0; k1 < n; ++k1) {
      double l1 = bin_freq(k1, n, f.grid.extent);
      for (std::size_t k2 = 0; k2 < n; ++k2) {
        double l2 = bin_freq(k2, n, f.grid.extent);
        u.v[k1 * n + k2] *= std::exp(cplx(0.0, -(l1 * l1 + l2 * l2 + c) * t));
      }
    }
    fft_2d(u.v, n, n, true);
  }
  require_all_finite(u.v, "propagate_multiplier output");
  return u;
}

cplx kernel_gamma(int dim, double c, double t, std::span<const double> x) {
  if (t == 0.0) throw KernelUndefined("kernel_gamma: t = 0");
  if (dim != 1 && dim != 2) throw GridError("kernel_gamma: dim must be 1 or 2");
  double r2 = 0.0;
  for (double xi : x) r2 += xi * xi;
  double sgn = t > 0.0 ? 1.0 : -1.0;
  double amp = std::pow(2.0 * std::abs(t), -0.5 * dim);
  double phase = -c * t - M_PI * sgn * dim / 4.0 + r2 / (4.0 * t);
  return amp * std::exp(cplx(0.0, phase));
}

FlatField chirp_solution(const FlatField& f, double t, double c) {
  check_grid(f.grid);
  if (t == 0.0) throw KernelUndefined("chirp_solution: t = 0");
  require_all_finite(f.v, "chirp_solution input");
  const std::size_t n = f.grid.n;
  const int dim = f.grid.dim;
  const double dx = f.grid.spacing();

  FlatField u;
  u.grid = f.grid;
  u.warnings = f.warnings;
  u.v.assign(f.grid.size(), cplx(0.0, 0.0));

  // boundary decay check
  double fmax = 0.0;
  for (const cplx& z : f.v) fmax = std::max(fmax, std::abs(z));
  double edge = 0.0;
  if (dim == 1) {
    edge = std::max(std::abs(f.v[0]), std::abs(f.v[n - 1]));
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      edge = std::max({edge, std::abs(f.at(0, i)), std::abs(f.at(n - 1, i)),
                       std::abs(f.at(i, 0)), std::abs(f.at(i, n - 1))});
    }
  }
  if (edge > 1e-12 * fmax)
    u.warnings.push_back("AliasWarning: initial data above 1e-12 of max at the grid boundary");

  // h(y) = e^{i|y|^2/4t} f(y); evaluate T h at xi_i = x_i / 2t by exact
  // separable DTFT sums (the target points never sit on DFT bins).
  const double q = 1.0 / (4.0 * t);
  const double sgn = t > 0.0 ? 1.0 : -1.0;
  const cplx pref = std::pow(2.0 * std::abs(t), -0.5 * dim) *
                    std::exp(cplx(0.0, -c * t - M_PI * sgn * dim / 4.0));
  const double meas = dx / std::sqrt(2.0 * M_PI); // per-axis measure of T

  // per-axis phase table P[i][j] = e^{-i xi_i y_j}
  std::vector<cplx> phase(n * n);
  parallel_for(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      double xi = f.grid.x(i) / (2.0 * t);
      for (std::size_t j = 0; j < n; ++j)
        phase[i * n + j] = std::exp(cplx(0.0, -xi * f.grid.x(j)));
    }
  });

  if (dim == 1) {
    std::vector<cplx> h(n);
    for (std::size_t j = 0; j < n; ++j)
      h[j] = f.v[j] * std::exp(cplx(0.0, q * sq_radius_1d(f.grid.x(j))));
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        cplx acc(0.0, 0.0);
        const cplx* row = &phase[i * n];
        for (std::size_t j = 0; j < n; ++j) acc += row[j] * h[j];
        double x = f.grid.x(i);
        u.v[i] = pref * std::exp(cplx(0.0, q * x * x)) * (acc * meas);
      }
    });
  } else {
    std::vector<cplx> h(n * n);
    for (std::size_t j1 = 0; j1 < n; ++j1)
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        double r2 = sq_radius_1d(f.grid.x(j1)) + sq_radius_1d(f.grid.x(j2));
        h[j1 * n + j2] = f.at(j1, j2) * std::exp(cplx(0.0, q * r2));
      }
    // stage 1: transform the inner axis, S[j1][i2] = sum_j2 h[j1][j2] P[i2][j2]
    std::vector<cplx> stage(n * n);
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t j1 = lo; j1 < hi; ++j1)
        for (std::size_t i2 = 0; i2 < n; ++i2) {
          cplx acc(0.0, 0.0);
          const cplx* row = &phase[i2 * n];
          const cplx* hrow = &h[j1 * n];
          for (std::size_t j2 = 0; j2 < n; ++j2) acc += row[j2] * hrow[j2];
          stage[j1 * n + i2] = acc;
        }
    });
    // stage 2: outer axis
    parallel_for(n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i1 = lo; i1 < hi; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2) {
          cplx acc(0.0, 0.0);
          const cplx* row = &phase[i1 * n];
          for (std::size_t j1 = 0; j1 < n; ++j1) acc += row[j1] * stage[j1 * n + i2];
          double r2 = sq_radius_1d(f.grid.x(i1)) + sq_radius_1d(f.grid.x(i2));
          u.at(i1, i2) = pref * std::exp(cplx(0.0, q * r2)) * (acc * meas * meas);
        }
    });
  }
  require_all_finite(u.v, "chirp_solution output");
  return u;
}

} // namespace hyperschrod
