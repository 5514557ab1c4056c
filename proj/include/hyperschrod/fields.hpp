#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "hyperschrod/space.hpp"
#include "hyperschrod/util.hpp"

namespace hyperschrod {

// Uniform radial grid r_i = i * dr, i = 0..n-1.  n is kept odd so composite
// Simpson applies directly.
struct RadialGrid {
  double dr = 1e-3;
  std::size_t n = 20001;

  double r(std::size_t i) const { return dr * static_cast<double>(i); }
  double r_max() const { return r(n - 1); }
  bool operator==(const RadialGrid& o) const { return dr == o.dr && n == o.n; }
  bool operator!=(const RadialGrid& o) const { return !(*this == o); }
  static RadialGrid defaults() { return {}; }
};

struct RadialProfile {
  SpaceTag space = SpaceTag::H3;
  RadialGrid grid;
  std::vector<cplx> v;
  std::vector<std::string> warnings;
};

// Uniform spectral grid lambda_k = k * dl on [0, (n-1)*dl]; n odd.
struct SpectralGrid {
  double dl = 5e-3;
  std::size_t n = 8001;

  double lam(std::size_t k) const { return dl * static_cast<double>(k); }
  double lam_max() const { return lam(n - 1); }
  bool operator==(const SpectralGrid& o) const { return dl == o.dl && n == o.n; }
  bool operator!=(const SpectralGrid& o) const { return !(*this == o); }
  static SpectralGrid defaults() { return {}; }
};

struct SpectralProfile {
  SpaceTag space = SpaceTag::H3;
  SpectralGrid grid;
  std::vector<cplx> v;
  std::vector<std::string> warnings;
};

// Flat Cartesian grid over [-L, L)^dim with n samples per axis (power of
// two).  Row-major storage for dim = 2: value(i, j) at (x(i), x(j)).
struct FlatGrid {
  int dim = 1;
  std::size_t n = 1024;
  double extent = 15.0;

  double spacing() const { return 2.0 * extent / static_cast<double>(n); }
  double x(std::size_t i) const { return -extent + spacing() * static_cast<double>(i); }
  std::size_t size() const { return dim == 1 ? n : n * n; }
  bool operator==(const FlatGrid& o) const { return dim == o.dim && n == o.n && extent == o.extent; }
  bool operator!=(const FlatGrid& o) const { return !(*this == o); }
  static FlatGrid defaults_1d() { return {1, 1024, 15.0}; }
  static FlatGrid defaults_2d() { return {2, 256, 10.0}; }
};

struct FlatField {
  FlatGrid grid;
  std::vector<cplx> v;
  std::vector<std::string> warnings;

  cplx& at(std::size_t i, std::size_t j) { return v[i * grid.n + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return v[i * grid.n + j]; }
};

// L2 norm with the measure dx / (2 pi)^{dim/2} used throughout the flat
// pipeline.
double l2_norm(const FlatField& f);
double rel_l2_error(const FlatField& a, const FlatField& b);

} // namespace hyperschrod
