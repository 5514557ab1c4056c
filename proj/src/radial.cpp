#include "hyperschrod/radial.hpp"

#include <cmath>

#include "hyperschrod/errors.hpp"
#include "hyperschrod/harish_chandra.hpp"

namespace hyperschrod {

namespace {

double sinc(double x) {
  double ax = std::abs(x);
  if (ax < 1e-4) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double r_over_sinh(double r) {
  double ar = std::abs(r);
  if (ar < 1e-4) {
    double r2 = r * r;
    return 1.0 - r2 / 6.0 + 7.0 * r2 * r2 / 360.0;
  }
  return r / std::sinh(r);
}

void require_h3(SpaceTag tag, const char* op) {
  if (tag != SpaceTag::H3)
    throw UnsupportedSpace(std::string(op) + ": only H3 carries the closed-form transform");
}

void check_odd(std::size_t n, const char* what) {
  if (n < 3 || n % 2 == 0) throw GridError(std::string(what) + ": grid size must be odd and >= 3");
}

void tail_warning(std::vector<std::string>& sink, std::span<const cplx> v, const char* what) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  if (m > 0.0 && std::abs(v[v.size() - 1]) > 1e-10 * m)
    sink.push_back(std::string("TailWarning: ") + what + " above 1e-10 of max at the window end");
}

// Sine-moment sums against weighted samples g: for each requested frequency
// la, returns sum_i g_i sin(la * r_i), r_i = i*dr, by a stable two-term
// rotation recurrence (one sincos per frequency, O(n) per frequency).
cplx sine_moment(std::span<const double> gr, std::span<const double> gi, double dr, double la) {
  const double phi = la * dr;
  const double cp = std::cos(phi), sp = std::sin(phi);
  double s = 0.0, c = 1.0; // sin/cos of la * r_0 = 0
  double accr = 0.0, acci = 0.0;
  for (std::size_t i = 0; i < gr.size(); ++i) {
    accr += gr[i] * s;
    acci += gi[i] * s;
    double s2 = s * cp + c * sp;
    c = c * cp - s * sp;
    s = s2;
  }
  return {accr, acci};
}

// weighted samples for the forward transform: f(r) sinh(r) * simpson weight * dr/3
struct WeightedSamples {
  std::vector<double> re, im;
};

WeightedSamples bake(const RadialProfile& f, const std::function<double(std::size_t)>& factor) {
  WeightedSamples w;
  w.re.resize(f.grid.n);
  w.im.resize(f.grid.n);
  for (std::size_t i = 0; i < f.grid.n; ++i) {
    double wt = simpson_weight(i, f.grid.n) * (f.grid.dr / 3.0) * factor(i);
    w.re[i] = f.v[i].real() * wt;
    w.im[i] = f.v[i].imag() * wt;
  }
  return w;
}

} // namespace

double phi_lambda(double lambda, double r) {
  return sinc(lambda * r) * r_over_sinh(r);
}

double polar_constant(SpaceTag tag) {
  require_h3(tag, "polar_constant");
  return 2.0 / M_PI; // fixture; see calibrate_polar_constant
}

SpectralProfile spherical_transform(const RadialProfile& f, const SpectralGrid& out) {
  require_h3(f.space, "spherical_transform");
  check_odd(f.grid.n, "spherical_transform");
  check_odd(out.n, "spherical_transform spectral");
  require_all_finite(f.v, "spherical_transform input");

  SpectralProfile F;
  F.space = f.space;
  F.grid = out;
  F.warnings = f.warnings;
  tail_warning(F.warnings, f.v, "radial data");
  F.v.resize(out.n);

  const double cp = polar_constant(f.space);
  const double dr = f.grid.dr;
  WeightedSamples g = bake(f, [&](std::size_t i) { return std::sinh(f.grid.r(i)); });
  // lambda = 0: sin(la r)/la -> r
  {
    double accr = 0.0, acci = 0.0;
    for (std::size_t i = 0; i < f.grid.n; ++i) {
      accr += g.re[i] * f.grid.r(i);
      acci += g.im[i] * f.grid.r(i);
    }
    F.v[0] = cp * cplx(accr, acci);
  }
  parallel_for(out.n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = std::max<std::size_t>(lo, 1); k < hi; ++k) {
      double la = out.lam(k);
      F.v[k] = cp / la * sine_moment(g.re, g.im, dr, la);
    }
  });
  require_all_finite(F.v, "spherical_transform output");
  return F;
}

RadialProfile inverse_spherical(const SpectralProfile& F, const RadialGrid& out, int weyl_order) {
  require_h3(F.space, "inverse_spherical");
  check_odd(F.grid.n, "inverse_spherical spectral");
  check_odd(out.n, "inverse_spherical");
  if (weyl_order <= 0) throw ParamError("inverse_spherical: weyl_order must be positive");
  require_all_finite(F.v, "inverse_spherical input");

  RadialProfile f;
  f.space = F.space;
  f.grid = out;
  f.warnings = F.warnings;
  tail_warning(f.warnings, F.v, "spectral data");
  f.v.resize(out.n);

  const CFunction& cf = c_function_for(F.space);
  // weighted spectral samples: F(la) |c|^{-2} / la * simpson * dla/3
  // (the 1/la is the singular factor of phi_la; la = 0 contributes 0).
  SpectralProfile z = F;
  for (std::size_t k = 0; k < F.grid.n; ++k) {
    double la = F.grid.lam(k);
    double w = simpson_weight(k, F.grid.n) * (F.grid.dl / 3.0) * (2.0 / weyl_order);
    double dens_over_la = k == 0 ? 0.0 : cf.density(std::span<const double>(&la, 1)) / la;
    z.v[k] = F.v[k] * (w * dens_over_la);
  }
  std::vector<double> zr(F.grid.n), zi(F.grid.n);
  for (std::size_t k = 0; k < F.grid.n; ++k) {
    zr[k] = z.v[k].real();
    zi[k] = z.v[k].imag();
  }
  // f(r) = (1/sinh r) sum_k z_k sin(la_k r); at r = 0, phi_la(0) = 1 so the
  // integrand is F |c|^{-2} directly.
  {
    double accr = 0.0, acci = 0.0;
    for (std::size_t k = 0; k < F.grid.n; ++k) {
      double la = F.grid.lam(k);
      accr += zr[k] * la;
      acci += zi[k] * la;
    }
    f.v[0] = cplx(accr, acci);
  }
  parallel_for(out.n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = std::max<std::size_t>(lo, 1); i < hi; ++i) {
      double r = out.r(i);
      cplx acc = sine_moment(zr, zi, F.grid.dl, r); // sum z_k sin(r la_k)
      f.v[i] = acc / std::sinh(r);
    }
  });
  require_all_finite(f.v, "inverse_spherical output");
  return f;
}

double calibrate_polar_constant(SpaceTag tag) {
  require_h3(tag, "calibrate_polar_constant");
  // Plancherel on the reference Gaussian psi e^{-r^2}:
  //   c_polar = int |f|^2 delta dr / int |T1 f|^2 |c|^{-2} dla,
  // T1 the transform with unit polar constant.
  const SpaceDescriptor& X = space(tag);
  RadialGrid rg;
  SpectralGrid sg;
  std::vector<double> phys(rg.n);
  RadialProfile f;
  f.space = tag;
  f.grid = rg;
  f.v.resize(rg.n);
  for (std::size_t i = 0; i < rg.n; ++i) {
    double r = rg.r(i);
    f.v[i] = r_over_sinh(r) * std::exp(-r * r);
    phys[i] = std::norm(f.v[i]) * delta_radial(X, r);
  }
  SpectralProfile F1 = spherical_transform(f, sg); // carries c_polar
  const CFunction& cf = c_function_for(tag);
  std::vector<double> spec(sg.n);
  for (std::size_t k = 0; k < sg.n; ++k) {
    double la = sg.lam(k);
    spec[k] = std::norm(F1.v[k]) * cf.density(std::span<const double>(&la, 1));
  }
  double num = simpson(std::span<const double>(phys), rg.dr);
  double den = simpson(std::span<const double>(spec), sg.dl);
  // F1 = c_polar T1: strip the stored constant squared
  double cp = polar_constant(tag);
  return num / (den / (cp * cp));
}

RadialProfile propagate_radial(const RadialProfile& f, double t, const SpectralGrid& spec) {
  SpectralProfile F = spherical_transform(f, spec);
  const SpaceDescriptor& X = space(f.space);
  const double rho2 = X.rho_norm * X.rho_norm;
  for (std::size_t k = 0; k < F.grid.n; ++k) {
    double la = F.grid.lam(k);
    F.v[k] *= std::exp(cplx(0.0, -(la * la + rho2) * t));
  }
  return inverse_spherical(F, f.grid);
}

FlatField abel_transform(const RadialProfile& f, const FlatGrid& out, const SpectralGrid& spec) {
  require_h3(f.space, "abel_transform");
  if (out.dim != 1) throw GridError("abel_transform: output grid must be 1-d");
  SpectralProfile F = spherical_transform(f, spec);

  FlatField g;
  g.grid = out;
  g.warnings = F.warnings;
  tail_warning(g.warnings, F.v, "spectral data");
  g.v.resize(out.size());

  // Rf(s) = (2 pi)^{-1/2} Int_R F(la) e^{i la s} dla = sqrt(2/pi) Int_0^inf F cos(la s) dla
  std::vector<double> zr(spec.n), zi(spec.n);
  for (std::size_t k = 0; k < spec.n; ++k) {
    double w = simpson_weight(k, spec.n) * (spec.dl / 3.0);
    zr[k] = F.v[k].real() * w;
    zi[k] = F.v[k].imag() * w;
  }
  const double c0 = std::sqrt(2.0 / M_PI);
  parallel_for(out.n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      double s = std::abs(out.x(i));
      const double phi = s * spec.dl;
      const double cp = std::cos(phi), sp = std::sin(phi);
      double sn = 0.0, cs = 1.0;
      double accr = 0.0, acci = 0.0;
      for (std::size_t k = 0; k < spec.n; ++k) {
        accr += zr[k] * cs;
        acci += zi[k] * cs;
        double s2 = sn * cp + cs * sp;
        cs = cs * cp - sn * sp;
        sn = s2;
      }
      g.v[i] = c0 * cplx(accr, acci);
    }
  });
  require_all_finite(g.v, "abel_transform output");
  return g;
}

cplx fa_transform_at(const FlatField& g, double lambda) {
  if (g.grid.dim != 1) throw GridError("fa_transform_at: 1-d fields only");
  const double dx = g.grid.spacing();
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < g.grid.n; ++j)
    acc += g.v[j] * std::exp(cplx(0.0, -lambda * g.grid.x(j)));
  return acc * (dx / std::sqrt(2.0 * M_PI));
}

SpectralProfile fa_transform(const FlatField& g, const SpectralGrid& out) {
  SpectralProfile F;
  F.space = SpaceTag::H3;
  F.grid = out;
  F.warnings = g.warnings;
  F.v.resize(out.n);
  const double dx = g.grid.spacing();
  const double meas = dx / std::sqrt(2.0 * M_PI);
  parallel_for(out.n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      double la = out.lam(k);
      // rotation recurrence over the uniform x grid
      const double phi = -la * g.grid.spacing();
      const cplx step(std::cos(phi), std::sin(phi));
      cplx ph = std::exp(cplx(0.0, -la * g.grid.x(0)));
      cplx acc(0.0, 0.0);
      for (std::size_t j = 0; j < g.grid.n; ++j) {
        acc += g.v[j] * ph;
        ph *= step;
      }
      F.v[k] = acc * meas;
    }
  });
  return F;
}

RadialProfile radial_convolve(const RadialProfile& h, const RadialProfile& k,
                              const SpectralGrid& spec) {
  if (h.space != k.space) throw GridError("radial_convolve: spaces differ");
  if (h.grid != k.grid) throw GridError("radial_convolve: grids differ");
  SpectralProfile H = spherical_transform(h, spec);
  SpectralProfile K = spherical_transform(k, spec);
  for (std::size_t i = 0; i < H.v.size(); ++i) H.v[i] *= K.v[i];
  for (const std::string& w : K.warnings) H.warnings.push_back(w);
  return inverse_spherical(H, h.grid);
}

double l2_norm_radial(const RadialProfile& f) {
  require_h3(f.space, "l2_norm_radial");
  const SpaceDescriptor& X = space(f.space);
  std::vector<double> y(f.grid.n);
  for (std::size_t i = 0; i < f.grid.n; ++i)
    y[i] = std::norm(f.v[i]) * delta_radial(X, f.grid.r(i));
  return std::sqrt(polar_constant(f.space) * simpson(std::span<const double>(y), f.grid.dr));
}

double l2_norm_spectral(const SpectralProfile& F) {
  require_h3(F.space, "l2_norm_spectral");
  const CFunction& cf = c_function_for(F.space);
  std::vector<double> y(F.grid.n);
  for (std::size_t k = 0; k < F.grid.n; ++k) {
    double la = F.grid.lam(k);
    y[k] = std::norm(F.v[k]) * cf.density(std::span<const double>(&la, 1));
  }
  return std::sqrt(simpson(std::span<const double>(y), F.grid.dl));
}

} // namespace hyperschrod
