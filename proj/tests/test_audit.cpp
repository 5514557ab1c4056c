#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "hyperschrod/audit.hpp"
#include "hyperschrod/errors.hpp"
#include "hyperschrod/radial.hpp"
#include "hyperschrod/reduction.hpp"
#include "hyperschrod/space.hpp"
#include "hyperschrod/util.hpp"

using namespace hyperschrod;

namespace {

constexpr double kPi = 3.14159265358979323846;

const RadialGrid kGrid{2e-3, 10001}; // r <= 20

RadialProfile sample(const std::function<cplx(double)>& fn, const RadialGrid& grid = kGrid) {
  RadialProfile f;
  f.space = SpaceTag::H3;
  f.grid = grid;
  f.v.resize(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) f.v[i] = fn(grid.r(i));
  return f;
}

double psi3(double r) { return psi_radial(space(SpaceTag::H3), r); }

RadialProfile psi_gaussian(double a, const RadialGrid& grid = kGrid) {
  return sample([a](double r) { return cplx(psi3(r) * std::exp(-a * r * r), 0.0); }, grid);
}

} // namespace

TEST_CASE("weighted L1 norm: Gaussian closed form") {
  // |f| Xi delta = r^2 e^{-r^2} for f = psi e^{-r^2} on H3, so
  // l1c(f, 0) = (2/pi) * sqrt(pi)/4 = 1 / (2 sqrt(pi))
  RadialProfile f = psi_gaussian(1.0);
  CHECK(l1c_norm(f, 0.0) == doctest::Approx(1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-8));
}

TEST_CASE("weighted L1 norm: monotone in the growth rate, finite for Gaussians") {
  RadialProfile f = psi_gaussian(1.0);
  double v0 = l1c_norm(f, 0.0);
  double v1 = l1c_norm(f, 1.0);
  double v3 = l1c_norm(f, 3.0);
  CHECK(std::isfinite(v0));
  CHECK(std::isfinite(v1));
  CHECK(std::isfinite(v3));
  CHECK(v0 < v1);
  CHECK(v1 < v3);
}

TEST_CASE("weighted L1 norm dominates the plain polar integral") {
  // Xi e^{|rho| r} >= 1, so the C = |rho| norm controls c_polar int |f| delta
  RadialProfile f = psi_gaussian(1.0);
  std::vector<double> y(f.grid.n);
  for (std::size_t i = 0; i < f.grid.n; ++i) {
    double s = std::sinh(f.grid.r(i));
    y[i] = std::abs(f.v[i]) * s * s;
  }
  double plain =
      polar_constant(SpaceTag::H3) * simpson(std::span<const double>(y), f.grid.dr);
  CHECK(l1c_norm(f, 1.0) >= plain);
}

TEST_CASE("weighted L1 norm detects divergence") {
  // f = psi e^{-r}: weight e^{2r} gives integrand ~ r^2 e^{+r}
  RadialProfile f = sample([](double r) { return cplx(psi3(r) * std::exp(-r), 0.0); });
  CHECK(std::isinf(l1c_norm(f, 2.0)));
  CHECK_THROWS_AS(l1c_norm(f, -0.5), ParamError);
}

TEST_CASE("Beurling functional: divergent exactly below the sharp product") {
  const double t0 = 0.1;
  for (double P : {0.5, 0.9, 1.1, 2.0, 4.0}) {
    double a = 2.5 * std::sqrt(P); // 16 a^2 t0^2 = P
    RadialProfile f = psi_gaussian(a);
    IntegralResult res = beurling_functional(f, f, t0);
    CHECK(res.divergent == (P < 1.0));
    if (P > 1.0) {
      CHECK(std::isfinite(res.value));
      CHECK(res.value > 0.0);
    } else {
      CHECK(std::isinf(res.value));
    }
  }
}

TEST_CASE("Beurling functional: zero data, monotonicity, guards") {
  RadialProfile f = psi_gaussian(10.0);
  RadialProfile z = f;
  for (cplx& v : z.v) v = 0.0;
  IntegralResult rz = beurling_functional(f, z, 0.1);
  CHECK_FALSE(rz.divergent);
  CHECK(rz.value == 0.0);

  // smaller t0 means a stronger kernel e^{rs/2t0}: value grows
  RadialProfile g = psi_gaussian(5.0); // product at t0=0.1: 16*25*0.01 = 4
  IntegralResult tight = beurling_functional(g, g, 0.1);
  IntegralResult loose = beurling_functional(g, g, 0.12);
  REQUIRE_FALSE(tight.divergent);
  REQUIRE_FALSE(loose.divergent);
  CHECK(tight.value >= loose.value);

  RadialProfile other = psi_gaussian(5.0, RadialGrid{1e-3, 20001});
  CHECK_THROWS_AS(beurling_functional(g, other, 0.1), GridError);
  RadialProfile h2 = g;
  h2.space = SpaceTag::H2;
  CHECK_THROWS_AS(beurling_functional(g, h2, 0.1), GridError);
  CHECK_THROWS_AS(beurling_functional(g, g, 0.0), ParamError);
  CHECK_THROWS_AS(beurling_functional(g, g, -1.0), ParamError);
}

TEST_CASE("GS functionals on the extremal pair") {
  ExtremalPair pair = extremal_pair(SpaceTag::H3, 1.0, 1.0 / 16.0, kGrid);
  GsCpParams params;
  params.mode = GsCpMode::GS;
  params.p = params.q = 2.0;
  const double margin = 0.25;
  params.a = (1.0 - margin) * std::sqrt(2.0 * pair.alpha);
  params.b = (1.0 - margin) * std::sqrt(2.0 * pair.beta);
  GsCpReport inside = gs_cp_functionals(pair.f, pair.u_envelope, params);
  CHECK(inside.both_finite);
  CHECK(std::isfinite(inside.side_f.value));
  CHECK(std::isfinite(inside.side_u.value));

  // at the sharp rates the Gaussian weight exactly cancels the decay and the
  // integrand grows polynomially: correctly flagged divergent
  params.a = std::sqrt(2.0 * pair.alpha);
  params.b = std::sqrt(2.0 * pair.beta);
  GsCpReport sharp = gs_cp_functionals(pair.f, pair.u_envelope, params);
  CHECK_FALSE(sharp.both_finite);
  CHECK(sharp.side_u.divergent);
}

TEST_CASE("GS parameter validation") {
  RadialProfile f = psi_gaussian(1.0);
  GsCpParams params;
  params.mode = GsCpMode::GS;
  params.p = 1.0;
  params.q = 2.0;
  CHECK_THROWS_AS(gs_cp_functionals(f, f, params), ParamError);
  params.p = 2.0;
  params.q = 3.0; // not conjugate
  CHECK_THROWS_AS(gs_cp_functionals(f, f, params), ParamError);
  params.p = 3.0;
  params.q = 1.5; // conjugate pair other than (2, 2)
  CHECK_NOTHROW(gs_cp_functionals(f, f, params));
}

TEST_CASE("GS side with zero data is finite zero") {
  RadialProfile f = psi_gaussian(1.0);
  RadialProfile z = f;
  for (cplx& v : z.v) v = 0.0;
  GsCpParams params;
  params.mode = GsCpMode::GS;
  params.p = params.q = 2.0;
  params.a = params.b = 0.5;
  GsCpReport rep = gs_cp_functionals(z, f, params);
  CHECK_FALSE(rep.side_f.divergent);
  CHECK(rep.side_f.value == 0.0);
  CHECK(rep.both_finite);
}

TEST_CASE("CP functionals: synthetic pair passes, true propagated pair fails") {
  GsCpParams params;
  params.mode = GsCpMode::CP;
  params.p = params.q = 2.0;
  params.a = params.b = 0.3;

  RadialProfile f = psi_gaussian(1.0);
  GsCpReport synthetic = gs_cp_functionals(f, f, params);
  CHECK(synthetic.both_finite);

  // true evolution from the same datum: envelope rate drops to 1/17,
  // and the same weight e^{0.3 s^2} now overwhelms it
  SpectralGrid spec{1e-2, 4001};
  RadialProfile u = propagate_radial(f, 1.0, spec);
  GsCpReport truth = gs_cp_functionals(f, u, params);
  CHECK_FALSE(truth.both_finite);
  CHECK(truth.side_u.divergent);
  CHECK_FALSE(truth.side_f.divergent);
}

TEST_CASE("CP sup mode (p = infinity)") {
  RadialProfile f = psi_gaussian(1.0);
  GsCpParams params;
  params.mode = GsCpMode::CP;
  params.p = params.q = -1.0; // sup norm
  params.a = params.b = 0.5;
  GsCpReport rep = gs_cp_functionals(f, f, params);
  CHECK(rep.both_finite);
  // sup of psi e^{-r^2} e^{0.5 r^2} is attained at r = 0 with value 1
  CHECK(rep.side_f.value == doctest::Approx(1.0).epsilon(1e-6));

  params.a = 2.0; // e^{+r^2} growth against e^{-r^2} decay
  GsCpReport bad = gs_cp_functionals(f, f, params);
  CHECK(bad.side_f.divergent);

  params.a = 0.5;
  params.p = 0.5; // Lp with p in (0,1) is not a norm here
  CHECK_THROWS_AS(gs_cp_functionals(f, f, params), ParamError);
}

TEST_CASE("decay_fit: exact Gaussian rates") {
  RadialProfile g = sample([](double r) { return cplx(std::exp(-2.0 * r * r), 0.0); });
  DecayFit fit = decay_fit(g, false);
  CHECK(fit.alpha == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(fit.log_amp) <= 1e-10);
  // the window ends where the data drops below 1e-12: r ~ sqrt(ln(1e12)/2)
  CHECK(fit.window_hi == doctest::Approx(std::sqrt(std::log(1e12) / 2.0)).epsilon(1e-3));
  CHECK(fit.npoints > 100);

  RadialProfile h = psi_gaussian(1.0);
  DecayFit with_psi = decay_fit(h, true);
  CHECK(with_psi.alpha == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(with_psi.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("decay_fit: misspecified model shows up in alpha and r2") {
  // fitting psi e^{-r^2} without removing psi biases the rate upward
  // (log psi ~ -r + log 2r on the window) and depresses r2
  RadialProfile h = psi_gaussian(1.0);
  DecayFit raw = decay_fit(h, false);
  CHECK(raw.alpha > 1.0);
  CHECK(std::abs(raw.alpha - 1.0) < 0.15); // measured 1.107 on this window
  CHECK(raw.r2 < 1.0 - 1e-5);
  CHECK(raw.r2 > 0.999);
}

TEST_CASE("decay_fit: polynomial prefactor removal and window override") {
  RadialProfile g =
      sample([](double r) { return cplx(r * r * std::exp(-1.5 * r * r), 0.0); });
  DecayFit fit = decay_fit(g, false, 1, 2);
  CHECK(fit.alpha == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
  DecayFit clipped = decay_fit(g, false, 1, 2, 1.0, 3.0);
  CHECK(clipped.window_hi == 3.0);
  CHECK(clipped.alpha == doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("decay_fit: window starvation raises FitError") {
  // e^{-100 r^2} is below 1e-12 before the window even opens at r = 1
  RadialProfile g = sample([](double r) { return cplx(std::exp(-100.0 * r * r), 0.0); });
  CHECK_THROWS_AS(decay_fit(g, false), FitError);
}

TEST_CASE("classify: sharp threshold with a boundary band") {
  CHECK(classify(4.0) == Verdict::ForcesZero);
  CHECK(classify(1.0) == Verdict::Boundary);
  CHECK(classify(1.04) == Verdict::Boundary);
  CHECK(classify(1.06) == Verdict::ForcesZero);
  CHECK(classify(0.96) == Verdict::Boundary);
  CHECK(classify(0.64) == Verdict::NoConclusion);
  CHECK(classify(1.2, 0.3) == Verdict::Boundary);
  CHECK(verdict_name(Verdict::ForcesZero) == "FORCES_ZERO");
  CHECK(verdict_name(Verdict::Boundary) == "BOUNDARY");
  CHECK(verdict_name(Verdict::NoConclusion) == "NO_CONCLUSION");
}

TEST_CASE("run_audit on the extremal pair lands on the boundary") {
  ExtremalPair pair = extremal_pair(SpaceTag::H3, 1.0, 1.0 / 16.0);
  AuditReport rep = run_audit(pair.f, pair.u_envelope, pair.t0);
  CHECK(rep.alpha_fit.alpha == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rep.beta_fit.alpha == doctest::Approx(1.0 / 16.0).epsilon(1e-6));
  CHECK(rep.threshold_product == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(rep.verdict == Verdict::Boundary);
  CHECK(rep.beurling_agrees);
  CHECK(rep.gs_product == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("run_audit below threshold: no conclusion and a divergent functional") {
  double a = 2.5 * std::sqrt(0.5); // product 0.5 at t0 = 0.1
  RadialProfile f = psi_gaussian(a);
  AuditReport rep = run_audit(f, f, 0.1);
  CHECK(rep.threshold_product == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(rep.verdict == Verdict::NoConclusion);
  CHECK(rep.beurling.divergent);
  CHECK(rep.beurling_agrees);
  CHECK_THROWS_AS(run_audit(f, f, 0.0), ParamError);
}
