#include "hyperschrod/audit.hpp"

#include <cmath>
#include <limits>

#include "hyperschrod/errors.hpp"
#include "hyperschrod/harish_chandra.hpp"
#include "hyperschrod/radial.hpp"

namespace hyperschrod {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// All audit functionals use the polar measure const * delta(r) dr.  The
// constant only scales values (finiteness is unaffected); it is the H3
// Plancherel constant where that is defined and 1 elsewhere.
double measure_constant(SpaceTag tag) {
  return tag == SpaceTag::H3 ? polar_constant(tag) : 1.0;
}

// Simpson over the leading odd-length window of y ending at index hi_incl
double window_simpson(std::span<const double> y, double h, std::size_t hi_incl) {
  std::size_t n = hi_incl + 1;
  if (n % 2 == 0) --n;
  return simpson(y.subspan(0, n), h);
}

IntegralResult classify_windows(std::span<const double> y, double h, double growth_limit) {
  IntegralResult res;
  std::size_t last = y.size() - 1;
  res.window_full = window_simpson(y, h, last);
  res.window_half = window_simpson(y, h, last / 2);
  bool overflow = !std::isfinite(res.window_full);
  if (res.window_half != 0.0)
    res.growth = res.window_full / res.window_half;
  else
    res.growth = res.window_full == 0.0 ? 1.0 : kInf;
  res.divergent = overflow || res.growth > growth_limit;
  res.value = res.divergent ? kInf : res.window_full;
  return res;
}

// log of |f_i| Xi(r_i) delta(r_i), -inf for vanishing samples
std::vector<double> log_weighted_modulus(const RadialProfile& f) {
  const SpaceDescriptor& X = space(f.space);
  std::vector<double> lw(f.grid.n, -kInf);
  for (std::size_t i = 0; i < f.grid.n; ++i) {
    double af = std::abs(f.v[i]);
    if (af == 0.0) continue;
    double r = f.grid.r(i);
    double dl = delta_radial(X, r);
    if (dl == 0.0) continue; // r = 0 cell
    lw[i] = std::log(af) + std::log(xi_radial(X, r)) + std::log(dl);
  }
  return lw;
}

} // namespace

double l1c_norm(const RadialProfile& h, double growth_c, double growth_limit) {
  if (growth_c < 0.0) throw ParamError("l1c_norm: C must be nonnegative");
  require_all_finite(h.v, "l1c_norm input");
  std::vector<double> lw = log_weighted_modulus(h);
  std::vector<double> y(h.grid.n, 0.0);
  for (std::size_t i = 0; i < h.grid.n; ++i)
    if (lw[i] != -kInf) y[i] = std::exp(lw[i] + growth_c * h.grid.r(i));
  IntegralResult res = classify_windows(std::span<const double>(y), h.grid.dr, growth_limit);
  return measure_constant(h.space) * res.value; // +inf when classified divergent
}

IntegralResult beurling_functional(const RadialProfile& f, const RadialProfile& u, double t0,
                                   double growth_limit) {
  if (f.space != u.space) throw GridError("beurling_functional: spaces differ");
  if (f.grid != u.grid) throw GridError("beurling_functional: grids differ");
  if (!(t0 > 0.0)) throw ParamError("beurling_functional: t0 must be positive");
  require_all_finite(f.v, "beurling_functional f");
  require_all_finite(u.v, "beurling_functional u");

  // stride the axes down to at most 2501 nodes, keeping an odd count
  std::size_t stride = 1 + (f.grid.n - 1) / 2500;
  std::size_t m = (f.grid.n - 1) / stride + 1;
  if (m % 2 == 0) --m;
  const double h = f.grid.dr * static_cast<double>(stride);

  std::vector<double> lf_full = log_weighted_modulus(f);
  std::vector<double> lu_full = log_weighted_modulus(u);
  std::vector<double> lf(m), lu(m), r(m);
  for (std::size_t i = 0; i < m; ++i) {
    lf[i] = lf_full[i * stride];
    lu[i] = lu_full[i * stride];
    r[i] = f.grid.r(i * stride);
  }

  const double c = measure_constant(f.space);
  const double inv2t0 = 0.5 / t0;
  // row sums over s for each r window are not needed; the window test acts on
  // the square [0,R]^2, so evaluate the two square partial sums directly.
  auto square_sum = [&](std::size_t mm) -> double {
    double total = 0.0;
    bool over = false;
    for (std::size_t i = 0; i < mm && !over; ++i) {
      if (lf[i] == -kInf) continue;
      double wi = simpson_weight(i, mm) * (h / 3.0);
      double row = 0.0;
      for (std::size_t j = 0; j < mm; ++j) {
        if (lu[j] == -kInf) continue;
        double e = lf[i] + lu[j] + r[i] * r[j] * inv2t0;
        if (e > 700.0) {
          over = true;
          break;
        }
        row += simpson_weight(j, mm) * (h / 3.0) * std::exp(e);
      }
      total += wi * row;
    }
    return over ? kInf : total;
  };

  IntegralResult res;
  std::size_t m_half = m / 2 + 1;
  if (m_half % 2 == 0) --m_half;
  res.window_full = c * c * square_sum(m);
  res.window_half = c * c * square_sum(m_half);
  bool overflow = !std::isfinite(res.window_full);
  if (res.window_half != 0.0)
    res.growth = res.window_full / res.window_half;
  else
    res.growth = res.window_full == 0.0 ? 1.0 : kInf;
  res.divergent = overflow || res.growth > growth_limit;
  res.value = res.divergent ? kInf : res.window_full;
  return res;
}

GsCpReport gs_cp_functionals(const RadialProfile& f, const RadialProfile& u,
                             const GsCpParams& params) {
  if (f.space != u.space) throw GridError("gs_cp_functionals: spaces differ");
  if (f.grid != u.grid) throw GridError("gs_cp_functionals: grids differ");

  const double c = measure_constant(f.space);
  GsCpReport rep;
  if (params.mode == GsCpMode::GS) {
    if (!(params.p > 1.0) || !std::isfinite(params.p) || !(params.q > 1.0) ||
        !std::isfinite(params.q))
      throw ParamError("gs_cp_functionals: GS mode needs 1 < p, q < infinity");
    if (std::abs(1.0 / params.p + 1.0 / params.q - 1.0) > 1e-9)
      throw ParamError("gs_cp_functionals: GS exponents must be conjugate");
    auto side = [&](const RadialProfile& g, double rate, double p) {
      std::vector<double> lw = log_weighted_modulus(g);
      std::vector<double> y(g.grid.n, 0.0);
      bool over = false;
      for (std::size_t i = 0; i < g.grid.n; ++i) {
        if (lw[i] == -kInf) continue;
        double e = lw[i] + std::pow(rate, p) / p * std::pow(g.grid.r(i), p);
        if (e > 700.0) over = true;
        y[i] = over ? kInf : std::exp(e);
      }
      IntegralResult res;
      if (over) {
        res.divergent = true;
        res.value = res.window_full = res.growth = kInf;
        return res;
      }
      res = classify_windows(std::span<const double>(y), g.grid.dr, params.growth_limit);
      res.value *= c;
      res.window_full *= c;
      res.window_half *= c;
      return res;
    };
    rep.side_f = side(f, params.a, params.p);
    rep.side_u = side(u, params.b, params.q);
  } else {
    const SpaceDescriptor& X = space(f.space);
    auto side = [&](const RadialProfile& g, double rate, double p) {
      IntegralResult res;
      if (p <= 0.0) { // sup norm, weighted
        double m_full = 0.0, m_half = 0.0;
        for (std::size_t i = 0; i < g.grid.n; ++i) {
          double af = std::abs(g.v[i]);
          if (af == 0.0) continue;
          double r = g.grid.r(i);
          double lv = std::log(af) + rate * r * r;
          double v = lv > 700.0 ? kInf : std::exp(lv);
          m_full = std::max(m_full, v);
          if (i <= (g.grid.n - 1) / 2) m_half = std::max(m_half, v);
        }
        res.window_full = m_full;
        res.window_half = m_half;
        res.growth = m_half > 0.0 ? m_full / m_half : (m_full == 0.0 ? 1.0 : kInf);
        res.divergent = !std::isfinite(m_full) || res.growth > params.growth_limit;
        res.value = res.divergent ? kInf : m_full;
        return res;
      }
      std::vector<double> y(g.grid.n, 0.0);
      bool over = false;
      for (std::size_t i = 0; i < g.grid.n; ++i) {
        double af = std::abs(g.v[i]);
        if (af == 0.0) continue;
        double r = g.grid.r(i);
        double dl = delta_radial(X, r);
        if (dl == 0.0) continue;
        double e = p * (std::log(af) + rate * r * r) + std::log(dl);
        if (e > 700.0) over = true;
        y[i] = over ? kInf : std::exp(e);
      }
      if (over) {
        res.divergent = true;
        res.value = res.window_full = res.growth = kInf;
        return res;
      }
      res = classify_windows(std::span<const double>(y), g.grid.dr, params.growth_limit);
      res.window_full *= c;
      res.window_half *= c;
      if (!res.divergent) res.value = std::pow(res.window_full, 1.0 / p);
      return res;
    };
    if ((params.p > 0.0 && params.p < 1.0) || (params.q > 0.0 && params.q < 1.0))
      throw ParamError("gs_cp_functionals: CP mode needs p, q in [1, infinity]");
    rep.side_f = side(f, params.a, params.p);
    rep.side_u = side(u, params.b, params.q);
  }
  rep.both_finite = !rep.side_f.divergent && !rep.side_u.divergent;
  return rep;
}

DecayFit decay_fit(const RadialProfile& f, bool divide_psi, int psi_power, int poly_power,
                   double window_lo, double window_hi) {
  require_all_finite(f.v, "decay_fit input");
  const SpaceDescriptor& X = space(f.space);
  double r_cut = window_hi;
  if (!(r_cut > 0.0)) {
    r_cut = 0.0;
    for (std::size_t i = f.grid.n; i-- > 0;) {
      if (std::abs(f.v[i]) >= 1e-12) {
        r_cut = f.grid.r(i);
        break;
      }
    }
  }
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < f.grid.n; ++i) {
    double r = f.grid.r(i);
    if (r < window_lo || r > r_cut) continue;
    double af = std::abs(f.v[i]);
    if (af <= 0.0) continue;
    double y = std::log(af);
    if (divide_psi) y -= psi_power * std::log(psi_radial(X, r));
    if (poly_power != 0) y -= poly_power * std::log(r);
    xs.push_back(r * r);
    ys.push_back(y);
  }
  if (xs.size() < 10) throw FitError("decay_fit: fewer than 10 samples in the window");

  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw FitError("decay_fit: degenerate window");
  double slope = sxy / sxx;

  DecayFit fit;
  fit.alpha = -slope;
  fit.log_amp = my - slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = ys[i] - (fit.log_amp + slope * xs[i]);
    ss_res += e * e;
  }
  fit.r2 = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  fit.window_lo = window_lo;
  fit.window_hi = r_cut;
  fit.npoints = static_cast<int>(n);
  return fit;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ForcesZero: return "FORCES_ZERO";
    case Verdict::Boundary: return "BOUNDARY";
    case Verdict::NoConclusion: return "NO_CONCLUSION";
  }
  return "NO_CONCLUSION";
}

Verdict classify(double product, double eps) {
  if (std::abs(product - 1.0) <= eps) return Verdict::Boundary;
  if (product > 1.0 + eps) return Verdict::ForcesZero;
  return Verdict::NoConclusion;
}

AuditReport run_audit(const RadialProfile& f, const RadialProfile& u_t0, double t0, double eps,
                      double growth_limit) {
  if (!(t0 > 0.0)) throw ParamError("run_audit: t0 must be positive");
  AuditReport rep;
  rep.t0 = t0;
  rep.alpha_fit = decay_fit(f, true);
  rep.beta_fit = decay_fit(u_t0, true);
  rep.threshold_product = 16.0 * rep.alpha_fit.alpha * rep.beta_fit.alpha * t0 * t0;
  rep.verdict = classify(rep.threshold_product, eps);
  rep.beurling = beurling_functional(f, u_t0, t0, growth_limit);
  // the double integral is finite exactly when the product clears 1
  if (rep.verdict == Verdict::Boundary)
    rep.beurling_agrees = true;
  else
    rep.beurling_agrees = rep.beurling.divergent == (rep.threshold_product < 1.0);
  rep.gs_product = 2.0 * t0 * std::sqrt(2.0 * rep.alpha_fit.alpha) *
                   std::sqrt(2.0 * rep.beta_fit.alpha);
  return rep;
}

} // namespace hyperschrod
