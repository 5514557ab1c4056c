#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>
#include <vector>

#include "hyperschrod/audit.hpp"
#include "hyperschrod/errors.hpp"
#include "hyperschrod/euclid.hpp"
#include "hyperschrod/harish_chandra.hpp"
#include "hyperschrod/radial.hpp"
#include "hyperschrod/reduction.hpp"
#include "hyperschrod/space.hpp"

namespace py = pybind11;
namespace hs = hyperschrod;

namespace {

using carr = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;
using darr = py::array_t<double, py::array::c_style | py::array::forcecast>;

py::array_t<std::complex<double>> to_numpy(const std::vector<hs::cplx>& v) {
  py::array_t<std::complex<double>> out(static_cast<py::ssize_t>(v.size()));
  std::memcpy(out.mutable_data(), v.data(), v.size() * sizeof(hs::cplx));
  return out;
}

std::vector<hs::cplx> from_numpy_1d(const carr& a) {
  if (a.ndim() != 1) throw hs::GridError("expected a one-dimensional array");
  std::vector<hs::cplx> v(static_cast<std::size_t>(a.shape(0)));
  std::memcpy(v.data(), a.data(), v.size() * sizeof(hs::cplx));
  return v;
}

hs::RadialProfile radial_from(const carr& values, double dr, const std::string& space) {
  hs::RadialProfile f;
  f.space = hs::parse_space(space);
  f.v = from_numpy_1d(values);
  if (f.v.size() < 3) throw hs::GridError("radial profile needs at least 3 samples");
  f.grid = hs::RadialGrid{dr, f.v.size()};
  return f;
}

hs::FlatField flat_from(const carr& values, double extent) {
  hs::FlatField f;
  if (values.ndim() == 1) {
    f.grid = hs::FlatGrid{1, static_cast<std::size_t>(values.shape(0)), extent};
    f.v = from_numpy_1d(values);
  } else if (values.ndim() == 2) {
    if (values.shape(0) != values.shape(1)) throw hs::GridError("2d field must be square");
    f.grid = hs::FlatGrid{2, static_cast<std::size_t>(values.shape(0)), extent};
    f.v.resize(f.grid.size());
    std::memcpy(f.v.data(), values.data(), f.v.size() * sizeof(hs::cplx));
  } else {
    throw hs::GridError("expected a 1d or 2d complex array");
  }
  return f;
}

py::array_t<std::complex<double>> flat_to_numpy(const hs::FlatField& f) {
  if (f.grid.dim == 1) return to_numpy(f.v);
  py::array_t<std::complex<double>> out({f.grid.n, f.grid.n});
  std::memcpy(out.mutable_data(), f.v.data(), f.v.size() * sizeof(hs::cplx));
  return out;
}

py::dict fit_dict(const hs::DecayFit& f) {
  py::dict d;
  d["alpha"] = f.alpha;
  d["log_amp"] = f.log_amp;
  d["r2"] = f.r2;
  d["window_lo"] = f.window_lo;
  d["window_hi"] = f.window_hi;
  d["npoints"] = f.npoints;
  return d;
}

py::dict integral_dict(const hs::IntegralResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["divergent"] = r.divergent;
  d["window_full"] = r.window_full;
  d["window_half"] = r.window_half;
  d["growth"] = r.growth;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spherical analysis and Schrodinger propagation on hyperbolic "
            "spaces and SL(3,C)/SU(3)";
  m.attr("__version__") = "1.0.0";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hs::Error& e) {
      if (e.kind() == hs::ErrorKind::Input)
        PyErr_SetString(PyExc_ValueError, e.what());
      else
        PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def(
      "space_info",
      [](const std::string& space) {
        const hs::SpaceDescriptor& X = hs::space(hs::parse_space(space));
        py::dict d;
        d["name"] = X.name;
        d["rank"] = X.rank;
        d["dim"] = X.dim;
        d["complex_group"] = X.complex_group;
        d["rho_norm"] = X.rho_norm;
        d["rho_norm_killing"] = X.rho_norm / X.killing_scale;
        d["condition_C"] = hs::condition_c(X);
        return d;
      },
      py::arg("space"));

  m.def(
      "xi",
      [](const std::string& space, double r) {
        return hs::xi_radial(hs::space(hs::parse_space(space)), r);
      },
      py::arg("space"), py::arg("r"));

  m.def(
      "psi",
      [](const std::string& space, double r) {
        return hs::psi_radial(hs::space(hs::parse_space(space)), r);
      },
      py::arg("space"), py::arg("r"));

  m.def("c0", [](const std::string& space) {
    return std::exp(hs::c_function_for(hs::parse_space(space)).log_c0());
  });
  m.def("c0_closed_form",
        [](const std::string& space) { return hs::c0_closed_form(hs::parse_space(space)); });
  m.def(
      "check_c_normalization",
      [](const std::string& space) {
        hs::SpaceTag tag = hs::parse_space(space);
        return hs::c_function_for(tag).check_minus_i_rho(hs::c0_closed_form(tag));
      },
      py::arg("space"));

  m.def(
      "plancherel_density",
      [](const std::string& space, const darr& lam) {
        const hs::SpaceDescriptor& X = hs::space(hs::parse_space(space));
        std::size_t n = static_cast<std::size_t>(lam.shape(0));
        py::array_t<double> out(static_cast<py::ssize_t>(n));
        double* o = out.mutable_data();
        if (lam.ndim() == 1) {
          if (X.rank != 1) throw hs::GridError("rank-2 space needs (n, 2) spectral points");
          for (std::size_t i = 0; i < n; ++i) {
            double l[1] = {lam.data()[i]};
            o[i] = hs::plancherel_density(X, l);
          }
        } else if (lam.ndim() == 2 && lam.shape(1) == X.rank) {
          for (std::size_t i = 0; i < n; ++i)
            o[i] = hs::plancherel_density(
                X, std::span<const double>(lam.data() + i * X.rank, X.rank));
        } else {
          throw hs::GridError("spectral points must be (n,) for rank 1 or (n, rank)");
        }
        return out;
      },
      py::arg("space"), py::arg("lam"));

  m.def(
      "propagate_euclid",
      [](const carr& values, double extent, double t, double c) {
        return flat_to_numpy(hs::propagate_multiplier(flat_from(values, extent), t, c));
      },
      py::arg("values"), py::arg("extent"), py::arg("t"), py::arg("c") = 0.0);

  m.def(
      "gaussian_oracle",
      [](int dim, std::size_t n, double extent, std::complex<double> a, double c, double t) {
        return flat_to_numpy(hs::gaussian_oracle(hs::FlatGrid{dim, n, extent}, a, c, t));
      },
      py::arg("dim"), py::arg("n"), py::arg("extent"), py::arg("a"), py::arg("c"), py::arg("t"));

  m.def(
      "gaussian_field",
      [](int dim, std::size_t n, double extent, std::complex<double> a) {
        return flat_to_numpy(hs::gaussian_field(hs::FlatGrid{dim, n, extent}, a));
      },
      py::arg("dim"), py::arg("n"), py::arg("extent"), py::arg("a"));

  m.def(
      "spherical_transform",
      [](const carr& values, double dr, const std::string& space) {
        hs::SpectralProfile F = hs::spherical_transform(radial_from(values, dr, space));
        py::dict d;
        d["values"] = to_numpy(F.v);
        d["dl"] = F.grid.dl;
        return d;
      },
      py::arg("values"), py::arg("dr"), py::arg("space") = "H3");

  m.def(
      "inverse_spherical",
      [](const carr& values, double dl, std::size_t n_out, double dr_out,
         const std::string& space) {
        hs::SpectralProfile F;
        F.space = hs::parse_space(space);
        F.v = from_numpy_1d(values);
        F.grid = hs::SpectralGrid{dl, F.v.size()};
        return to_numpy(hs::inverse_spherical(F, hs::RadialGrid{dr_out, n_out}).v);
      },
      py::arg("values"), py::arg("dl"), py::arg("n_out") = 20001, py::arg("dr_out") = 1e-3,
      py::arg("space") = "H3");

  m.def(
      "propagate_radial",
      [](const carr& values, double dr, double t, const std::string& space) {
        return to_numpy(hs::propagate_radial(radial_from(values, dr, space), t).v);
      },
      py::arg("values"), py::arg("dr"), py::arg("t"), py::arg("space") = "H3");

  m.def(
      "extremal",
      [](double alpha, double beta, const std::string& space) {
        hs::ExtremalPair p = hs::extremal_pair(hs::parse_space(space), alpha, beta);
        py::dict d;
        d["f"] = to_numpy(p.f.v);
        d["u_envelope"] = to_numpy(p.u_envelope.v);
        d["t0"] = p.t0;
        d["dr"] = p.f.grid.dr;
        return d;
      },
      py::arg("alpha"), py::arg("beta"), py::arg("space") = "H3");

  m.def(
      "decay_fit",
      [](const carr& values, double dr, bool divide_psi, const std::string& space) {
        return fit_dict(hs::decay_fit(radial_from(values, dr, space), divide_psi));
      },
      py::arg("values"), py::arg("dr"), py::arg("divide_psi") = true, py::arg("space") = "H3");

  m.def(
      "classify",
      [](double product, double eps) { return hs::verdict_name(hs::classify(product, eps)); },
      py::arg("product"), py::arg("eps") = 0.05);

  m.def(
      "beurling",
      [](const carr& f, const carr& u, double dr, double t0, const std::string& space) {
        return integral_dict(
            hs::beurling_functional(radial_from(f, dr, space), radial_from(u, dr, space), t0));
      },
      py::arg("f"), py::arg("u"), py::arg("dr"), py::arg("t0"), py::arg("space") = "H3");

  m.def(
      "run_audit",
      [](const carr& f, const carr& u, double dr, double t0, const std::string& space,
         double eps) {
        hs::AuditReport rep =
            hs::run_audit(radial_from(f, dr, space), radial_from(u, dr, space), t0, eps);
        py::dict d;
        d["alpha_fit"] = fit_dict(rep.alpha_fit);
        d["beta_fit"] = fit_dict(rep.beta_fit);
        d["t0"] = rep.t0;
        d["threshold_product"] = rep.threshold_product;
        d["verdict"] = hs::verdict_name(rep.verdict);
        d["beurling"] = integral_dict(rep.beurling);
        d["beurling_agrees"] = rep.beurling_agrees;
        d["gs_product"] = rep.gs_product;
        return d;
      },
      py::arg("f"), py::arg("u"), py::arg("dr"), py::arg("t0"), py::arg("space") = "H3",
      py::arg("eps") = 0.05);
}
