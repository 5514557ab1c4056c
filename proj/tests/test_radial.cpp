#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hyperschrod/audit.hpp"
#include "hyperschrod/errors.hpp"
#include "hyperschrod/fields.hpp"
#include "hyperschrod/radial.hpp"
#include "hyperschrod/space.hpp"
#include "hyperschrod/util.hpp"

using namespace hyperschrod;

namespace {

constexpr double kPi = 3.14159265358979323846;

// suite grids: half the default resolution in both variables, plenty for
// every tolerance below and four times faster per transform
const RadialGrid kGrid{2e-3, 10001};    // r <= 20
const SpectralGrid kSpec{1e-2, 4001};   // lambda <= 40

RadialProfile sample_radial(const std::function<cplx(double)>& fn,
                            const RadialGrid& grid = kGrid) {
  RadialProfile f;
  f.space = SpaceTag::H3;
  f.grid = grid;
  f.v.resize(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) f.v[i] = fn(grid.r(i));
  return f;
}

double psi3(double r) { return psi_radial(space(SpaceTag::H3), r); }

RadialProfile psi_gaussian(double a, double b = 0.0, const RadialGrid& grid = kGrid) {
  return sample_radial([a, b](double r) { return cplx(psi3(r) * std::exp(-a * r * r + b * r), 0.0); },
                       grid);
}

double rel_l2(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a[i] - b[i]);
    den += std::norm(b[i]);
  }
  return std::sqrt(num / den);
}

bool has_tail_warning(const std::vector<std::string>& w) {
  for (const std::string& s : w)
    if (s.find("TailWarning") != std::string::npos) return true;
  return false;
}

} // namespace

TEST_CASE("transform guards: space and grid shape") {
  RadialProfile f = psi_gaussian(1.0);
  f.space = SpaceTag::H2;
  CHECK_THROWS_AS(spherical_transform(f, kSpec), UnsupportedSpace);
  CHECK_THROWS_AS(polar_constant(SpaceTag::H4), UnsupportedSpace);
  RadialProfile g = psi_gaussian(1.0, 0.0, RadialGrid{2e-3, 10000}); // even count
  CHECK_THROWS_AS(spherical_transform(g, kSpec), GridError);
}

TEST_CASE("phi_lambda: closed form and the spectral ODE") {
  // phi_lambda(r) = sin(lambda r) / (lambda sinh r)
  CHECK(phi_lambda(2.0, 1.3) ==
        doctest::Approx(std::sin(2.6) / (2.0 * std::sinh(1.3))).epsilon(1e-14));
  CHECK(phi_lambda(0.7, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  // radial Laplace equation: phi'' + 2 coth(r) phi' + (lambda^2 + 1) phi = 0,
  // residual through fourth-order central differences
  const double h = 0.01;
  for (double lam : {0.5, 2.0}) {
    for (double r : {0.5, 1.0, 2.0}) {
      double fm2 = phi_lambda(lam, r - 2 * h), fm1 = phi_lambda(lam, r - h);
      double f0 = phi_lambda(lam, r);
      double fp1 = phi_lambda(lam, r + h), fp2 = phi_lambda(lam, r + 2 * h);
      double d2 = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h);
      double d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
      double res = d2 + 2.0 / std::tanh(r) * d1 + (lam * lam + 1.0) * f0;
      CHECK(std::abs(res) <= 1e-6 * (lam * lam + 1.0));
    }
  }
}

TEST_CASE("transform is linear") {
  RadialProfile f = psi_gaussian(1.0);
  RadialProfile g = psi_gaussian(2.0);
  RadialProfile mix = f;
  cplx w(0.7, -0.4);
  for (std::size_t i = 0; i < mix.v.size(); ++i) mix.v[i] = 2.0 * f.v[i] + w * g.v[i];
  SpectralProfile F = spherical_transform(f, kSpec);
  SpectralProfile G = spherical_transform(g, kSpec);
  SpectralProfile M = spherical_transform(mix, kSpec);
  double worst = 0.0;
  for (std::size_t k = 0; k < M.v.size(); k += 37)
    worst = std::max(worst, std::abs(M.v[k] - (2.0 * F.v[k] + w * G.v[k])));
  CHECK(worst <= 1e-12);
}

TEST_CASE("Gaussian transform closed form") {
  // f = psi e^{-r^2}  ->  F(lambda) = e^{-lambda^2/4} / (2 sqrt(pi))
  RadialProfile f = psi_gaussian(1.0);
  SpectralProfile F = spherical_transform(f, kSpec);
  for (double lam : {0.1, 1.0, 3.0, 10.0}) {
    std::size_t k = static_cast<std::size_t>(std::lround(lam / kSpec.dl));
    double expect = std::exp(-lam * lam / 4.0) / (2.0 * std::sqrt(kPi));
    CHECK(F.v[k].real() == doctest::Approx(expect).epsilon(1e-8));
    CHECK(std::abs(F.v[k].imag()) <= 1e-12);
  }
  // lambda = 0 by continuity
  CHECK(F.v[0].real() == doctest::Approx(1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-8));
}

TEST_CASE("narrow mollifier transforms to approximately 1") {
  const double eps = 0.05;
  RadialProfile n = sample_radial(
      [eps](double r) { return cplx(std::exp(-r * r / (eps * eps)), 0.0); });
  // normalize to unit mass in the polar measure
  std::vector<double> w(n.grid.n);
  for (std::size_t i = 0; i < n.grid.n; ++i) {
    double s = std::sinh(n.grid.r(i));
    w[i] = n.v[i].real() * s * s;
  }
  double mass = polar_constant(SpaceTag::H3) * simpson(std::span<const double>(w), n.grid.dr);
  for (cplx& z : n.v) z /= mass;
  SpectralProfile F = spherical_transform(n, kSpec);
  for (double lam : {0.0, 0.5, 1.0, 2.0}) {
    std::size_t k = static_cast<std::size_t>(std::lround(lam / kSpec.dl));
    CHECK(std::abs(F.v[k] - cplx(1.0, 0.0)) <= 1e-2);
  }
}

TEST_CASE("transform round trips") {
  for (double shift : {0.0, 0.3}) {
    RadialProfile f = psi_gaussian(1.0, shift);
    SpectralProfile F = spherical_transform(f, kSpec);
    RadialProfile back = inverse_spherical(F, kGrid);
    CHECK(rel_l2(back.v, f.v) <= 1e-4);
  }
  RadialProfile osc = sample_radial(
      [](double r) { return cplx(psi3(r) * std::exp(-r * r) * std::cos(2.0 * r), 0.0); });
  SpectralProfile F = spherical_transform(osc, kSpec);
  RadialProfile back = inverse_spherical(F, kGrid);
  CHECK(rel_l2(back.v, osc.v) <= 1e-4);
}

TEST_CASE("Plancherel isometry and unitary propagation") {
  for (double a : {0.5, 1.0, 2.0}) {
    RadialProfile f = psi_gaussian(a);
    double n_phys = l2_norm_radial(f);
    SpectralProfile F = spherical_transform(f, kSpec);
    CHECK(l2_norm_spectral(F) == doctest::Approx(n_phys).epsilon(1e-4));
    for (double t : {0.2, 1.0}) {
      RadialProfile u = propagate_radial(f, t, kSpec);
      CHECK(l2_norm_radial(u) == doctest::Approx(n_phys).epsilon(1e-4));
    }
  }
}

TEST_CASE("propagation composes in t") {
  RadialProfile f = psi_gaussian(1.0);
  RadialProfile two_steps = propagate_radial(propagate_radial(f, 0.2, kSpec), 0.2, kSpec);
  RadialProfile one_step = propagate_radial(f, 0.4, kSpec);
  CHECK(rel_l2(two_steps.v, one_step.v) <= 1e-4);
}

TEST_CASE("weyl_order scales the inversion") {
  RadialProfile f = psi_gaussian(1.0);
  SpectralProfile F = spherical_transform(f, kSpec);
  RadialProfile half = inverse_spherical(F, kGrid, 4);
  RadialProfile full = inverse_spherical(F, kGrid, 2);
  double worst = 0.0;
  for (std::size_t i = 0; i < full.v.size(); i += 53)
    worst = std::max(worst, std::abs(2.0 * half.v[i] - full.v[i]));
  CHECK(worst <= 1e-14);
  CHECK_THROWS_AS(inverse_spherical(F, kGrid, 0), ParamError);
}

TEST_CASE("numeric recalibration recovers the polar constant") {
  CHECK(calibrate_polar_constant(SpaceTag::H3) ==
        doctest::Approx(2.0 / kPi).epsilon(1e-6));
}

TEST_CASE("Abel projection: evenness and the Gaussian closed form") {
  RadialProfile f = psi_gaussian(1.0);
  FlatGrid out{1, 2048, 24.0};
  FlatField R = abel_transform(f, out, kSpec);
  // even in s: x(n - i) = -x(i)
  for (std::size_t i : {std::size_t(200), std::size_t(700), std::size_t(1000)}) {
    CHECK(std::abs(R.v[out.n - i] - R.v[i]) <= 1e-12);
  }
  // R f(s) = sqrt(2/pi) e^{-s^2} / 2
  for (std::size_t j : {std::size_t(1024), std::size_t(1045), std::size_t(1097),
                        std::size_t(1150)}) {
    double s = out.x(j);
    double expect = std::sqrt(2.0 / kPi) * std::exp(-s * s) / 2.0;
    CHECK(R.v[j].real() == doctest::Approx(expect).epsilon(1e-6));
    CHECK(std::abs(R.v[j].imag()) <= 1e-10);
  }
}

TEST_CASE("flat Fourier transform after Abel recovers the spherical transform") {
  const RadialProfile fs[] = {psi_gaussian(1.0), psi_gaussian(1.5), psi_gaussian(1.0, 0.3)};
  FlatGrid out{1, 2048, 24.0};
  for (const RadialProfile& f : fs) {
    FlatField R = abel_transform(f, out, kSpec);
    SpectralProfile F = spherical_transform(f, kSpec);
    for (double lam : {0.5, 1.0, 2.5}) {
      std::size_t k = static_cast<std::size_t>(std::lround(lam / kSpec.dl));
      cplx via_abel = fa_transform_at(R, lam);
      CHECK(std::abs(via_abel - F.v[k]) <= 1e-6 * std::abs(F.v[0]));
    }
  }
}

TEST_CASE("weighted L1 control of the Abel projection") {
  // int |Rf| e^{C|s|} ds / sqrt(2 pi)  <=  c_polar int |f| Xi e^{Cr} delta dr,
  // with equality at C = 0 for nonnegative f
  RadialProfile f = psi_gaussian(1.0);
  FlatGrid out{1, 2048, 24.0};
  FlatField R = abel_transform(f, out, kSpec);
  const double h = out.spacing();
  for (double C : {0.0, 0.5, 1.0}) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < out.n; ++j)
      lhs += std::abs(R.v[j]) * std::exp(C * std::abs(out.x(j)));
    lhs *= h / std::sqrt(2.0 * kPi);
    double rhs = l1c_norm(f, C);
    CHECK(lhs <= rhs * (1.0 + 1e-3));
    if (C == 0.0) CHECK(lhs == doctest::Approx(rhs).epsilon(1e-3));
  }
}

TEST_CASE("convolution is multiplicative on the transform side") {
  RadialProfile h = psi_gaussian(1.0);
  RadialProfile k = psi_gaussian(1.5);
  RadialProfile conv = radial_convolve(h, k, kSpec);
  SpectralProfile H = spherical_transform(h, kSpec);
  SpectralProfile K = spherical_transform(k, kSpec);
  SpectralProfile C = spherical_transform(conv, kSpec);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < C.v.size(); ++i) {
    num += std::norm(C.v[i] - H.v[i] * K.v[i]);
    den += std::norm(H.v[i] * K.v[i]);
  }
  CHECK(std::sqrt(num / den) <= 1e-5);
}

TEST_CASE("convolution against the geometric double integral") {
  auto hf = [](double r) { return psi3(r) * std::exp(-r * r); };
  auto kf = [](double r) { return psi3(r) * std::exp(-1.5 * r * r); };
  RadialProfile h = sample_radial([&](double r) { return cplx(hf(r), 0.0); });
  RadialProfile k = sample_radial([&](double r) { return cplx(kf(r), 0.0); });
  RadialProfile conv = radial_convolve(h, k, kSpec);

  auto geometric = [&](double r) {
    // c_polar int h(r1) [ (1/2) int k(d) sin t dt ] sinh^2 r1 dr1,
    // cosh d = cosh r1 cosh r - sinh r1 sinh r cos t
    const std::size_t n1 = 801, nt = 201;
    const double R1 = 8.0, h1 = R1 / static_cast<double>(n1 - 1);
    const double ht = kPi / static_cast<double>(nt - 1);
    std::vector<double> outer(n1);
    for (std::size_t i = 0; i < n1; ++i) {
      double r1 = h1 * static_cast<double>(i);
      std::vector<double> inner(nt);
      for (std::size_t j = 0; j < nt; ++j) {
        double t = ht * static_cast<double>(j);
        double ch = std::cosh(r1) * std::cosh(r) - std::sinh(r1) * std::sinh(r) * std::cos(t);
        double d = std::acosh(std::max(1.0, ch));
        inner[j] = kf(d) * std::sin(t);
      }
      double avg = 0.5 * simpson(std::span<const double>(inner), ht);
      double s1 = std::sinh(r1);
      outer[i] = hf(r1) * avg * s1 * s1;
    }
    return polar_constant(SpaceTag::H3) * simpson(std::span<const double>(outer), h1);
  };

  for (double r : {0.5, 1.5}) {
    std::size_t i = static_cast<std::size_t>(std::lround(r / kGrid.dr));
    double ref = geometric(r);
    CHECK(conv.v[i].real() == doctest::Approx(ref).epsilon(5e-4));
    CHECK(std::abs(conv.v[i].imag()) <= 1e-8 * std::abs(ref));
  }
}

TEST_CASE("convolving with zero gives zero") {
  RadialProfile h = psi_gaussian(1.0);
  RadialProfile z = h;
  for (cplx& v : z.v) v = 0.0;
  RadialProfile conv = radial_convolve(h, z, kSpec);
  double m = 0.0;
  for (const cplx& v : conv.v) m = std::max(m, std::abs(v));
  CHECK(m <= 1e-14);
}

TEST_CASE("tail mass at the window end is flagged") {
  RadialProfile slow = sample_radial(
      [](double r) { return cplx(psi3(r) * std::exp(-0.2 * r), 0.0); });
  SpectralProfile F = spherical_transform(slow, kSpec);
  CHECK(has_tail_warning(F.warnings));
  RadialProfile fast = psi_gaussian(1.0);
  SpectralProfile G = spherical_transform(fast, kSpec);
  CHECK_FALSE(has_tail_warning(G.warnings));
}

TEST_CASE("quadrature refinement: transform error drops at high order") {
  auto fn = [](double r) { return cplx(psi3(r) * std::exp(-r * r + 0.3 * r), 0.0); };
  SpectralGrid one{0.5, 3}; // lambda in {0, 0.5, 1}
  SpectralProfile ref = spherical_transform(sample_radial(fn, RadialGrid{1e-3, 20001}), one);
  SpectralProfile coarse = spherical_transform(sample_radial(fn, RadialGrid{1.6e-2, 1251}), one);
  SpectralProfile fine = spherical_transform(sample_radial(fn, RadialGrid{8e-3, 2501}), one);
  double e_coarse = std::abs(coarse.v[2] - ref.v[2]);
  double e_fine = std::abs(fine.v[2] - ref.v[2]);
  CHECK(e_fine < e_coarse);
  CHECK(e_coarse / e_fine >= 3.5); // fourth-order composite rule: expect ~16
}
