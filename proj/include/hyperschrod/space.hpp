#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperschrod/util.hpp"

namespace hyperschrod {

enum class SpaceTag { H2, H3, H4, H5, SL3C };

SpaceTag parse_space(std::string_view name); // throws UnsupportedSpace
std::string_view space_name(SpaceTag tag);

// One indivisible positive restricted root, as a covector on the flat in
// working coordinates: alpha(H) = a[0]*H[0] + a[1]*H[1].
struct Root {
  std::array<double, 2> a{0.0, 0.0};
  int mult = 0;        // m_alpha
  int mult_double = 0; // m_{2 alpha}
};

// Root datum of one supported space.
//
// Working coordinates: for the real hyperbolic spaces H^n the flat is
// one-dimensional with alpha(H) = r (unit-curvature gauge), so rho(H) =
// (n-1)/2 * r.  For SL3C the flat carries coordinates orthonormal for the
// Killing form, with the A2 roots at common length 1/sqrt(6).  The Killing
// norm of a working vector is killing_scale * |H| (Euclidean norm of the
// coordinates); ratios like <lambda,alpha>/<alpha,alpha> are scale-free and
// computed with the plain dot product.
struct SpaceDescriptor {
  SpaceTag tag{};
  std::string name;
  int rank = 1;
  int dim = 0; // dim G/K
  bool complex_group = false;
  int indivisible_count = 0; // d
  double killing_scale = 1.0;
  std::vector<Root> roots;
  std::array<double, 2> rho{0.0, 0.0};
  double rho_norm = 0.0; // |rho| in working coordinates

  double root_value(const Root& g, std::span<const double> H) const;
  double rho_value(std::span<const double> H) const;
  double norm_working(std::span<const double> H) const;
  double norm_killing(std::span<const double> H) const;
  bool in_closed_chamber(std::span<const double> H) const;
  // Unit vector (working coordinates) along rho; the radial ray used by the
  // rank-2 scans.
  std::array<double, 2> rho_direction() const;
};

SpaceDescriptor build_space(SpaceTag tag);
const SpaceDescriptor& space(SpaceTag tag); // cached, immutable

// delta(exp H) = prod sinh(alpha(H))^{m_alpha} on the closed positive
// chamber (DomainError outside).
double delta_density(const SpaceDescriptor& X, std::span<const double> H);

// Structure functions on the flat.  eta and pi are defined for the complex
// spaces only (UnsupportedSpace otherwise); psi is defined for every
// supported space.
double eta(const SpaceDescriptor& X, std::span<const double> H);
double pi_poly(const SpaceDescriptor& X, std::span<const double> H);
double psi(const SpaceDescriptor& X, std::span<const double> H);

struct StructureValues {
  double eta = 0.0;
  double pi = 0.0;
  double psi = 0.0;
};
StructureValues structure_functions(const SpaceDescriptor& X, std::span<const double> H);

// True when every indivisible positive root either has multiplicity != 1 or
// possesses a double root.
bool condition_c(const SpaceDescriptor& X);

// Rank-1 conveniences (radial coordinate r >= 0; SL3C: the rho-direction ray
// at Killing radius r).
double delta_radial(const SpaceDescriptor& X, double r);
double psi_radial(const SpaceDescriptor& X, double r);

} // namespace hyperschrod
