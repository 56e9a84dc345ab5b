#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinpair/concurrence.hpp"
#include "spinpair/error.hpp"
#include "spinpair/limits.hpp"
#include "spinpair/model.hpp"
#include "spinpair/sweep.hpp"
#include "spinpair/thermal.hpp"
#include "spinpair/verify.hpp"

namespace py = pybind11;
using namespace spinpair;

namespace {

py::array_t<std::complex<double>> to_numpy(const Matrix4& m) {
  py::array_t<std::complex<double>> out({4, 4});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t r = 0; r < 4; ++r)
    for (py::ssize_t c = 0; c < 4; ++c) view(r, c) = m(r, c);
  return out;
}

Matrix4 from_numpy(const py::array_t<std::complex<double>, py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != 4 || a.shape(1) != 4) {
    throw py::value_error("expected a 4x4 matrix");
  }
  auto view = a.unchecked<2>();
  Matrix4 m;
  for (py::ssize_t r = 0; r < 4; ++r)
    for (py::ssize_t c = 0; c < 4; ++c) m(r, c) = view(r, c);
  return m;
}

py::dict concurrence_dict(const ConcurrenceResult& c) {
  py::dict d;
  d["value"] = c.value;
  d["lambdas"] = c.lambdas;
  d["path"] = std::string(to_string(c.path));
  return d;
}

py::dict limit_dict(const limits::LimitValue& v) {
  py::dict d;
  d["value"] = v.value;
  d["formula"] = std::string(limits::to_string(v.formula));
  d["documented_discrepancy"] = v.documented_discrepancy;
  return d;
}

}  // namespace

PYBIND11_MODULE(_spinpair, m) {
  m.doc() = "Thermal entanglement of a two-qubit Heisenberg XXX chain with x-components "
            "of DM and KSEA interactions.";

  py::register_exception<Error>(m, "SpinpairError", PyExc_RuntimeError);

  m.def("build_hamiltonian",
        [](double j, double dx, double gx) { return to_numpy(build_hamiltonian({j, dx, gx})); },
        py::arg("j"), py::arg("dx"), py::arg("gx"));

  m.def(
      "analytic_spectrum",
      [](double j, double dx, double gx) {
        const Spectrum s = analytic_spectrum({j, dx, gx});
        py::array_t<std::complex<double>> vectors({4, 4});
        auto view = vectors.mutable_unchecked<2>();
        for (py::ssize_t k = 0; k < 4; ++k)
          for (py::ssize_t r = 0; r < 4; ++r) view(k, r) = s.eigenvectors[k][r];
        py::dict d;
        d["energies"] = s.energies;
        d["eta"] = s.eta;
        d["theta1"] = s.theta1;
        d["theta2"] = s.theta2;
        d["eigenvectors"] = vectors;  // one row per level
        return d;
      },
      py::arg("j"), py::arg("dx"), py::arg("gx"));

  m.def(
      "classify_ground_state",
      [](double j, double dx, double gx) {
        const GroundStateClass g = classify_ground_state({j, dx, gx});
        std::vector<std::string> levels;
        for (Level l : g.levels) levels.emplace_back(to_string(l));
        py::dict d;
        d["phase"] = std::string(to_string(g.phase));
        d["energy"] = g.energy;
        d["levels"] = levels;
        d["concurrence"] = ground_state_concurrence({j, dx, gx});
        return d;
      },
      py::arg("j"), py::arg("dx"), py::arg("gx"));

  m.def(
      "partition_function",
      [](double j, double dx, double gx, double temp) {
        return partition_function({j, dx, gx}, Temperature(temp));
      },
      py::arg("j"), py::arg("dx"), py::arg("gx"), py::arg("temp"));

  m.def(
      "thermal_state",
      [](double j, double dx, double gx, double temp, const std::string& method) {
        const ModelParams p{j, dx, gx};
        const Temperature t(temp);
        return to_numpy(parse_method(method) == Method::Analytic
                            ? thermal_state_analytic(p, t).rho
                            : thermal_state_oracle(p, t).rho);
      },
      py::arg("j"), py::arg("dx"), py::arg("gx"), py::arg("temp"),
      py::arg("method") = "analytic");

  m.def(
      "concurrence",
      [](double j, double dx, double gx, double temp, const std::string& method) {
        const ModelParams p{j, dx, gx};
        const Temperature t(temp);
        return concurrence_dict(parse_method(method) == Method::Analytic
                                    ? concurrence_analytic(p, t)
                                    : concurrence_oracle(p, t));
      },
      py::arg("j"), py::arg("dx"), py::arg("gx"), py::arg("temp"),
      py::arg("method") = "analytic");

  m.def(
      "concurrence_of_state",
      [](const py::array_t<std::complex<double>, py::array::forcecast>& rho) {
        return concurrence_dict(concurrence_of_state(from_numpy(rho)));
      },
      py::arg("rho"));

  m.def(
      "limit_high_temperature",
      [](double temp) { return limit_dict(limits::high_temperature(Temperature(temp))); },
      py::arg("temp"));
  m.def(
      "limit_strong_coupling",
      [](double j, double dx, double gx, double temp) {
        return limit_dict(limits::strong_coupling({j, dx, gx}, Temperature(temp)));
      },
      py::arg("j"), py::arg("dx"), py::arg("gx"), py::arg("temp"));
  m.def(
      "limit_strong_dm_ksea",
      [](double j, double dx, double gx, double temp) {
        return limit_dict(limits::strong_dm_ksea({j, dx, gx}, Temperature(temp)));
      },
      py::arg("j"), py::arg("dx"), py::arg("gx"), py::arg("temp"));

  m.def(
      "sweep_1d",
      [](const std::string& param, double lo, double hi, int steps, double j, double dx,
         double gx, double temp, const std::string& method, int threads) {
        const AxisSpec axis{parse_param(param), lo, hi, steps};
        SweepResult r;
        {
          py::gil_scoped_release release;
          r = sweep_1d(axis, {j, dx, gx}, Temperature(temp), parse_method(method), threads);
        }
        std::vector<double> grid(r.values.size());
        for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = axis.node(static_cast<int>(k));
        return py::make_tuple(py::array(py::cast(grid)), py::array(py::cast(r.values)));
      },
      py::arg("param"), py::arg("lo"), py::arg("hi"), py::arg("steps"), py::arg("j") = 1.0,
      py::arg("dx") = 1.0, py::arg("gx") = 1.0, py::arg("temp") = 1.0,
      py::arg("method") = "analytic", py::arg("threads") = 0);

  m.def(
      "phase_diagram",
      [](const std::string& x_param, double x_lo, double x_hi, int nx, const std::string& y_param,
         double y_lo, double y_hi, int ny, double j, double dx, double gx) {
        const PhaseRaster r = phase_diagram_raster({parse_param(x_param), x_lo, x_hi, nx},
                                                   {parse_param(y_param), y_lo, y_hi, ny},
                                                   {j, dx, gx});
        std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(ny));
        for (int iy = 0; iy < ny; ++iy)
          for (int ix = 0; ix < nx; ++ix)
            rows[iy].emplace_back(to_string(r.at(ix, iy).phase));
        return rows;
      },
      py::arg("x_param"), py::arg("x_lo"), py::arg("x_hi"), py::arg("nx"), py::arg("y_param"),
      py::arg("y_lo"), py::arg("y_hi"), py::arg("ny"), py::arg("j") = 1.0, py::arg("dx") = 0.0,
      py::arg("gx") = 0.0);

  m.def(
      "critical_temperature",
      [](double j, double dx, double gx, double t_max, double tol) {
        const CriticalTemperature tc = critical_temperature({j, dx, gx}, t_max, tol);
        py::dict d;
        d["tc"] = tc.tc;
        d["t_lo"] = tc.t_lo;
        d["t_hi"] = tc.t_hi;
        d["tolerance"] = tc.tolerance;
        return d;
      },
      py::arg("j"), py::arg("dx"), py::arg("gx"), py::arg("t_max") = 1e4,
      py::arg("tol") = 1e-6);

  m.def(
      "verify",
      [](std::size_t samples, std::uint64_t seed, double tol, int threads) {
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = run_verify(samples, seed, tol, threads);
        }
        py::dict d;
        d["samples"] = r.samples;
        d["seed"] = r.seed;
        d["tol"] = r.tol;
        d["max_abs_dev"] = r.max_abs_dev;
        d["failures"] = r.failures.size();
        return d;
      },
      py::arg("samples") = 10000, py::arg("seed") = 42, py::arg("tol") = 1e-9,
      py::arg("threads") = 0);
}
