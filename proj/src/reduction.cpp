#include "hyperschrod/reduction.hpp"

#include <cmath>

#include "hyperschrod/errors.hpp"

namespace hyperschrod {

namespace {

// 4-point Lagrange interpolation of a radial profile at radius r >= 0;
// zero beyond the grid (the profiles this sees have decayed there).
cplx sample_radial(const RadialProfile& f, double r) {
  const double dr = f.grid.dr;
  if (r < 0.0) r = -r;
  if (r > f.grid.r_max()) return {0.0, 0.0};
  double pos = r / dr;
  std::size_t i1 = static_cast<std::size_t>(pos);
  if (i1 + 2 >= f.grid.n) i1 = f.grid.n - 3;
  std::size_t i0 = i1 == 0 ? 0 : i1 - 1;
  if (i0 + 3 >= f.grid.n) i0 = f.grid.n - 4;
  double t = pos - static_cast<double>(i0);
  // nodes at offsets 0,1,2,3 from i0
  double l0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
  double l1 = t * (t - 2.0) * (t - 3.0) / 2.0;
  double l2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
  double l3 = t * (t - 1.0) * (t - 2.0) / 6.0;
  return f.v[i0] * l0 + f.v[i0 + 1] * l1 + f.v[i0 + 2] * l2 + f.v[i0 + 3] * l3;
}

double eta_at(const SpaceDescriptor& X, double h0, double h1) {
  double v[2] = {h0, h1};
  return eta(X, std::span<const double>(v, static_cast<std::size_t>(X.rank)));
}

} // namespace

SkewFlatFunction flat_reduce(const RadialProfile& f, const FlatGrid& grid) {
  const SpaceDescriptor& X = space(f.space);
  if (!X.complex_group)
    throw UnsupportedSpace("flat_reduce: defined for complex-group spaces only");
  if (grid.dim != X.rank)
    throw GridError("flat_reduce: flat grid dimension must equal the rank");

  SkewFlatFunction out;
  out.space = f.space;
  out.field.grid = grid;
  out.field.warnings = f.warnings;
  out.field.v.resize(grid.size());

  double gmax = 0.0;
  if (grid.dim == 1) {
    for (std::size_t i = 0; i < grid.n; ++i) {
      double x = grid.x(i);
      out.field.v[i] = std::sinh(x) * sample_radial(f, x);
      gmax = std::max(gmax, std::abs(out.field.v[i]));
    }
    // mirror pairs x <-> -x (index 0 has no mirror on the half-open grid)
    double defect = 0.0;
    for (std::size_t i = 1; i < grid.n; ++i) {
      std::size_t j = grid.n - i;
      if (j >= grid.n || j < i) break;
      defect = std::max(defect, std::abs(out.field.v[i] + out.field.v[j]));
    }
    out.skew_defect = gmax > 0.0 ? defect / gmax : 0.0;
  } else {
    for (std::size_t i = 0; i < grid.n; ++i)
      for (std::size_t j = 0; j < grid.n; ++j) {
        double h0 = grid.x(i), h1 = grid.x(j);
        double r = std::sqrt(h0 * h0 + h1 * h1);
        out.field.at(i, j) = eta_at(X, h0, h1) * sample_radial(f, r);
        gmax = std::max(gmax, std::abs(out.field.at(i, j)));
      }
    // simple-reflection defect through the construction formula on a
    // coarse sample (reflected points are generally off-grid)
    double defect = 0.0;
    const std::size_t stride = std::max<std::size_t>(1, grid.n / 32);
    for (const Root& g : {X.roots[0], X.roots[1]}) {
      double aa = g.a[0] * g.a[0] + g.a[1] * g.a[1];
      for (std::size_t i = 0; i < grid.n; i += stride)
        for (std::size_t j = 0; j < grid.n; j += stride) {
          double h0 = grid.x(i), h1 = grid.x(j);
          double c = 2.0 * (g.a[0] * h0 + g.a[1] * h1) / aa;
          double s0 = h0 - c * g.a[0], s1 = h1 - c * g.a[1];
          double r = std::sqrt(h0 * h0 + h1 * h1);
          cplx gv = eta_at(X, h0, h1) * sample_radial(f, r);
          cplx gs = eta_at(X, s0, s1) * sample_radial(f, std::sqrt(s0 * s0 + s1 * s1));
          defect = std::max(defect, std::abs(gv + gs));
        }
    }
    out.skew_defect = gmax > 0.0 ? defect / gmax : 0.0;
  }
  out.parity = out.skew_defect <= 1e-10;
  return out;
}

ExtremalPair extremal_pair(SpaceTag tag, double alpha, double beta, const RadialGrid& grid) {
  const SpaceDescriptor& X = space(tag);
  if (!X.complex_group)
    throw UnsupportedSpace("extremal_pair: the extremal family lives on complex-group spaces");
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw ParamError("extremal_pair: alpha and beta must be positive");

  ExtremalPair out;
  out.alpha = alpha;
  out.beta = beta;
  out.t0 = 1.0 / (4.0 * std::sqrt(alpha * beta)); // (16 alpha beta)^{-1/2}
  const double gamma = std::sqrt(alpha * beta);   // = 1/(4 t0)

  out.f.space = tag;
  out.f.grid = grid;
  out.f.v.resize(grid.n);
  out.u_envelope.space = tag;
  out.u_envelope.grid = grid;
  out.u_envelope.v.resize(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    double r = grid.r(i), r2 = r * r;
    double p = psi_radial(X, r);
    out.f.v[i] = p * std::exp(cplx(-alpha * r2, -gamma * r2));
    out.u_envelope.v[i] = p * std::exp(cplx(-beta * r2, gamma * r2));
  }
  return out;
}

int default_hardy_degree(SpaceTag tag) {
  int npos = space(tag).indivisible_count;
  int m = (npos + 1) / 2; // smallest m with 2m >= |Sigma^+|
  return 2 * m;
}

PolyFit hardy_equality_fit(const FlatField& h, cplx a, int degree) {
  if (h.grid.dim != 1) throw GridError("hardy_equality_fit: 1-d fields only");
  if (!(a.real() > 0.0)) throw ParamError("hardy_equality_fit: Re(a) must be positive");
  if (degree < 0) throw ParamError("hardy_equality_fit: negative degree");
  require_all_finite(h.v, "hardy_equality_fit input");

  // window where the model weight e^{-a x^2} is above 1e-12 in modulus
  const double cut = -std::log(1e-12) / a.real();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < h.grid.n; ++i)
    if (h.grid.x(i) * h.grid.x(i) <= cut) idx.push_back(i);
  const std::size_t m = idx.size();
  const std::size_t nc = static_cast<std::size_t>(degree) + 1;
  if (m < nc + 1) throw FitError("hardy_equality_fit: window too small for the degree");

  // least squares h ~ sum_j coef_j x^j e^{-a x^2} by modified Gram-Schmidt
  // (fitting in the original scale keeps edge noise from being amplified by
  // e^{+a x^2})
  std::vector<std::vector<cplx>> q(nc, std::vector<cplx>(m));
  std::vector<std::vector<cplx>> rmat(nc, std::vector<cplx>(nc, cplx(0.0, 0.0)));
  for (std::size_t j = 0; j < nc; ++j) {
    double nrm0 = 0.0;
    for (std::size_t s = 0; s < m; ++s) {
      double x = h.grid.x(idx[s]);
      q[j][s] = std::pow(x, static_cast<double>(j)) * std::exp(-a * (x * x));
      nrm0 += std::norm(q[j][s]);
    }
    nrm0 = std::sqrt(nrm0);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx d(0.0, 0.0);
        for (std::size_t s = 0; s < m; ++s) d += std::conj(q[k][s]) * q[j][s];
        rmat[k][j] += d;
        for (std::size_t s = 0; s < m; ++s) q[j][s] -= d * q[k][s];
      }
    }
    double nrm = 0.0;
    for (std::size_t s = 0; s < m; ++s) nrm += std::norm(q[j][s]);
    nrm = std::sqrt(nrm);
    // rank-revealing guard: the column must keep a nontrivial component
    // orthogonal to the previous ones
    if (!(nrm > 1e-12 * nrm0))
      throw FitError("hardy_equality_fit: ill-conditioned basis on this window");
    rmat[j][j] = nrm;
    for (std::size_t s = 0; s < m; ++s) q[j][s] /= nrm;
  }

  std::vector<cplx> qc(nc);
  for (std::size_t j = 0; j < nc; ++j) {
    cplx d(0.0, 0.0);
    for (std::size_t s = 0; s < m; ++s) d += std::conj(q[j][s]) * h.v[idx[s]];
    qc[j] = d;
  }
  // residual over the window
  double num = 0.0, den = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    cplx model(0.0, 0.0);
    for (std::size_t j = 0; j < nc; ++j) model += qc[j] * q[j][s];
    num += std::norm(h.v[idx[s]] - model);
    den += std::norm(h.v[idx[s]]);
  }
  PolyFit fit;
  fit.degree = degree;
  fit.window = std::sqrt(cut);
  fit.rel_residual = den > 0.0 ? std::sqrt(num / den) : 0.0;
  // back-substitute R coef = qc for the monomial coefficients
  fit.coeffs.assign(nc, cplx(0.0, 0.0));
  for (std::size_t jj = nc; jj-- > 0;) {
    cplx sum = qc[jj];
    for (std::size_t k = jj + 1; k < nc; ++k) sum -= rmat[jj][k] * fit.coeffs[k];
    fit.coeffs[jj] = sum / rmat[jj][jj];
  }
  return fit;
}

} // namespace hyperschrod
