#include "hyperschrod/fields.hpp"

#include <cmath>

#include "hyperschrod/errors.hpp"

namespace hyperschrod {

double l2_norm(const FlatField& f) {
  double s = 0.0;
  for (const cplx& z : f.v) s += std::norm(z);
  double dx = f.grid.spacing();
  double meas = f.grid.dim == 1 ? dx : dx * dx;
  return std::sqrt(s * meas / std::pow(2.0 * M_PI, 0.5 * f.grid.dim));
}

double rel_l2_error(const FlatField& a, const FlatField& b) {
  if (a.grid != b.grid) throw GridError("rel_l2_error: flat grids differ");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    num += std::norm(a.v[i] - b.v[i]);
    den += std::norm(b.v[i]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return std::sqrt(num / den);
}

} // namespace hyperschrod
