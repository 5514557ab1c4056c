#include "hyperschrod/space.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "hyperschrod/errors.hpp"

namespace hyperschrod {

namespace {

constexpr double kEll = 0.40824829046386301637; // 1/sqrt(6), A2 root length

double sinh_ratio(double x) {
  // x / sinh x, stable near 0
  double ax = std::abs(x);
  if (ax < 1e-4) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
  }
  return x / std::sinh(x);
}

} // namespace

SpaceTag parse_space(std::string_view name) {
  if (name == "H2") return SpaceTag::H2;
  if (name == "H3") return SpaceTag::H3;
  if (name == "H4") return SpaceTag::H4;
  if (name == "H5") return SpaceTag::H5;
  if (name == "SL3C") return SpaceTag::SL3C;
  throw UnsupportedSpace("unknown space '" + std::string(name) +
                         "' (supported: H2 H3 H4 H5 SL3C)");
}

std::string_view space_name(SpaceTag tag) {
  switch (tag) {
    case SpaceTag::H2: return "H2";
    case SpaceTag::H3: return "H3";
    case SpaceTag::H4: return "H4";
    case SpaceTag::H5: return "H5";
    case SpaceTag::SL3C: return "SL3C";
  }
  throw UnsupportedSpace("bad space tag");
}

double SpaceDescriptor::root_value(const Root& g, std::span<const double> H) const {
  double v = g.a[0] * H[0];
  if (H.size() > 1) v += g.a[1] * H[1];
  return v;
}

double SpaceDescriptor::rho_value(std::span<const double> H) const {
  double v = rho[0] * H[0];
  if (H.size() > 1) v += rho[1] * H[1];
  return v;
}

double SpaceDescriptor::norm_working(std::span<const double> H) const {
  double s = H[0] * H[0];
  if (H.size() > 1) s += H[1] * H[1];
  return std::sqrt(s);
}

double SpaceDescriptor::norm_killing(std::span<const double> H) const {
  return killing_scale * norm_working(H);
}

bool SpaceDescriptor::in_closed_chamber(std::span<const double> H) const {
  double tol = 1e-12 * (1.0 + norm_working(H));
  for (const Root& g : roots)
    if (root_value(g, H) < -tol) return false;
  return true;
}

std::array<double, 2> SpaceDescriptor::rho_direction() const {
  return {rho[0] / rho_norm, rho[1] / rho_norm};
}

SpaceDescriptor build_space(SpaceTag tag) {
  SpaceDescriptor X;
  X.tag = tag;
  X.name = std::string(space_name(tag));
  switch (tag) {
    case SpaceTag::H2:
    case SpaceTag::H3:
    case SpaceTag::H4:
    case SpaceTag::H5: {
      // H^n = SO0(n,1)/SO(n), curvature -1 gauge: alpha(H) = r, m_alpha = n-1.
      int n = 2 + (static_cast<int>(tag) - static_cast<int>(SpaceTag::H2));
      X.rank = 1;
      X.dim = n;
      X.indivisible_count = 1;
      X.complex_group = (n == 3); // H3 = SL(2,C)/SU(2)
      // Killing norm of H against the working coordinate: |H|_K^2 = 2(n-1) r^2.
      X.killing_scale = std::sqrt(2.0 * (n - 1));
      X.roots.push_back(Root{{1.0, 0.0}, n - 1, 0});
      X.rho = {0.5 * (n - 1), 0.0};
      X.rho_norm = 0.5 * (n - 1);
      break;
    }
    case SpaceTag::SL3C: {
      // SL(3,C)/SU(3): A2 root system, all multiplicities 2, flat coordinates
      // orthonormal for the Killing form (roots at length 1/sqrt 6).
      X.rank = 2;
      X.dim = 8;
      X.indivisible_count = 3;
      X.complex_group = true;
      X.killing_scale = 1.0;
      const double l = kEll;
      X.roots.push_back(Root{{l, 0.0}, 2, 0});
      X.roots.push_back(Root{{-0.5 * l, 0.5 * std::sqrt(3.0) * l}, 2, 0});
      X.roots.push_back(Root{{0.5 * l, 0.5 * std::sqrt(3.0) * l}, 2, 0});
      X.rho = {l, std::sqrt(3.0) * l};
      X.rho_norm = 2.0 * l;
      break;
    }
  }
  return X;
}

const SpaceDescriptor& space(SpaceTag tag) {
  static std::map<SpaceTag, SpaceDescriptor> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(tag);
  if (it == cache.end()) it = cache.emplace(tag, build_space(tag)).first;
  return it->second;
}

double delta_density(const SpaceDescriptor& X, std::span<const double> H) {
  if (!X.in_closed_chamber(H))
    throw DomainError("delta_density: point outside the closed positive chamber");
  double d = 1.0;
  for (const Root& g : X.roots) {
    double v = X.root_value(g, H);
    if (v < 0.0) v = 0.0; // chamber tolerance already enforced
    d *= std::pow(std::sinh(v), g.mult);
    if (g.mult_double) d *= std::pow(std::sinh(2.0 * v), g.mult_double);
  }
  return d;
}

double eta(const SpaceDescriptor& X, std::span<const double> H) {
  if (!X.complex_group)
    throw UnsupportedSpace("eta: defined for complex-group spaces only");
  double e = 1.0;
  for (const Root& g : X.roots) e *= std::sinh(X.root_value(g, H));
  return e;
}

double pi_poly(const SpaceDescriptor& X, std::span<const double> H) {
  if (!X.complex_group)
    throw UnsupportedSpace("pi_poly: defined for complex-group spaces only");
  double p = 1.0;
  for (const Root& g : X.roots) p *= X.root_value(g, H);
  return p;
}

double psi(const SpaceDescriptor& X, std::span<const double> H) {
  // prod over indivisible roots of (alpha(H)/sinh alpha(H))^{m_alpha/2};
  // for complex groups this is pi/eta, for H^n it is (r/sinh r)^{(n-1)/2}.
  double p = 1.0;
  for (const Root& g : X.roots)
    p *= std::pow(sinh_ratio(X.root_value(g, H)), 0.5 * g.mult);
  return p;
}

StructureValues structure_functions(const SpaceDescriptor& X, std::span<const double> H) {
  StructureValues s;
  s.psi = psi(X, H);
  if (X.complex_group) {
    s.eta = eta(X, H);
    s.pi = pi_poly(X, H);
  }
  return s;
}

bool condition_c(const SpaceDescriptor& X) {
  for (const Root& g : X.roots)
    if (g.mult == 1 && g.mult_double == 0) return false;
  return true;
}

namespace {

std::array<double, 2> radial_point(const SpaceDescriptor& X, double r) {
  if (X.rank == 1) return {r, 0.0};
  auto dir = X.rho_direction();
  return {r * dir[0], r * dir[1]};
}

} // namespace

double delta_radial(const SpaceDescriptor& X, double r) {
  if (r < 0.0) throw DomainError("delta_radial: negative radius");
  auto H = radial_point(X, r);
  return delta_density(X, std::span<const double>(H.data(), X.rank));
}

double psi_radial(const SpaceDescriptor& X, double r) {
  auto H = radial_point(X, std::abs(r));
  return psi(X, std::span<const double>(H.data(), X.rank));
}

} // namespace hyperschrod
