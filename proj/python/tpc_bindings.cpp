#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tpc/critical_radius.hpp"
#include "tpc/eigensolver.hpp"
#include "tpc/errors.hpp"
#include "tpc/experiments.hpp"
#include "tpc/io.hpp"
#include "tpc/radial_profile.hpp"
#include "tpc/rearrangement.hpp"
#include "tpc/special_functions.hpp"

namespace py = pybind11;
using namespace tpc;

namespace {

VolumeSpec volume(Dimension dim, std::optional<double> fraction, std::optional<double> measure) {
  if (fraction && measure) throw std::invalid_argument("pass either fraction or measure, not both");
  if (fraction) return VolumeSpec::from_fraction(dim, *fraction);
  if (measure) return VolumeSpec(dim, *measure);
  throw std::invalid_argument("fraction or measure is required");
}

VolumeSpec volume_for(const RadialProfile& p, std::optional<double> fraction,
                      std::optional<double> measure) {
  if (!fraction && !measure) return VolumeSpec(p.dim(), p.high_measure());
  return volume(p.dim(), fraction, measure);
}

std::vector<std::pair<double, double>> intervals(const RadialSet& set) {
  std::vector<std::pair<double, double>> out;
  for (const Interval& iv : set.intervals()) out.emplace_back(iv.lo, iv.hi);
  return out;
}

RadialProfile make_profile(int dim, double alpha, double beta,
                           const std::vector<std::pair<double, std::string>>& layers) {
  std::vector<Layer> parsed;
  for (const auto& [r, material] : layers) parsed.push_back({r, material_from_string(material)});
  return RadialProfile(Dimension(dim), alpha, beta, std::move(parsed));
}

py::dict report_dict(const CounterexampleReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["fraction"] = r.fraction;
  d["alpha"] = r.alpha;
  d["beta"] = r.beta;
  d["rho"] = r.rho;
  d["rho_n"] = r.rho_n;
  d["lambda_ball"] = r.lambda_ball;
  d["lambda_improved"] = r.lambda_improved;
  d["gap"] = r.gap();
  d["improved_set"] = intervals(r.improved_set);
  d["y2_prime_at_1"] = r.y2_prime_at_1;
  d["y2_prime_at_rho"] = r.y2_prime_at_rho;
  d["y1_prime_at_rho"] = r.y1_prime_at_rho;
  d["z"] = r.z;
  d["psi_prime_at_rho"] = r.psi_prime_at_rho;
  d["psi_prime_at_1"] = r.psi_prime_at_1;
  d["d_n"] = r.d_n;
  d["set_changed"] = r.set_changed;
  d["verdict"] = to_string(r.verdict);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Principal eigenvalues and rearrangement optimization of two-phase radial conductors";

  py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);

  m.def("bessel_j", &special::bessel_j, py::arg("nu"), py::arg("x"));
  m.def("bessel_j_prime", &special::bessel_j_prime, py::arg("nu"), py::arg("x"));
  m.def("bessel_zero", &special::bessel_zero, py::arg("nu"), py::arg("m"));
  m.def("gamma_half", &special::gamma_half, py::arg("two_a"), "Gamma(two_a / 2)");
  m.def("unit_ball_volume", [](int n) { return unit_ball_volume(Dimension(n)); }, py::arg("n"));
  m.def("rho_n", [](int n) { return rho_n(Dimension(n)); }, py::arg("n"));
  m.def(
      "critical_point",
      [](int n) {
        const CriticalPoint cp = critical_point(Dimension(n));
        return py::dict(py::arg("rho") = cp.rho, py::arg("t_star") = cp.t_star, py::arg("mu") = cp.mu);
      },
      py::arg("n"));

  py::class_<RadialProfile>(m, "RadialProfile")
      .def(py::init(&make_profile), py::arg("dim"), py::arg("alpha"), py::arg("beta"), py::arg("layers"),
           "layers: list of (r_outer, 'low' | 'high') from the center outwards")
      .def_static("homogeneous",
                  [](int dim, double c) { return RadialProfile::homogeneous(Dimension(dim), c); },
                  py::arg("dim"), py::arg("conductivity"))
      .def_static(
          "ball",
          [](int dim, double alpha, double beta, std::optional<double> fraction, std::optional<double> measure) {
            const Dimension d(dim);
            return ball_profile(d, volume(d, fraction, measure), alpha, beta);
          },
          py::arg("dim"), py::arg("alpha"), py::arg("beta"), py::kw_only(), py::arg("fraction") = py::none(),
          py::arg("measure") = py::none())
      .def_static("from_json", [](const std::string& text) { return io::parse_profile(text); })
      .def("to_json", &io::serialize_profile)
      .def_property_readonly("dim", [](const RadialProfile& p) { return p.dim().value(); })
      .def_property_readonly("alpha", &RadialProfile::alpha)
      .def_property_readonly("beta", &RadialProfile::beta)
      .def_property_readonly("layers",
                             [](const RadialProfile& p) {
                               std::vector<std::pair<double, std::string>> out;
                               for (const Layer& l : p.layers())
                                 out.emplace_back(l.r_outer, std::string(to_string(l.material)));
                               return out;
                             })
      .def_property_readonly("interfaces", &RadialProfile::interfaces)
      .def_property_readonly("high_region", [](const RadialProfile& p) { return intervals(p.high_region()); })
      .def_property_readonly("high_measure", &RadialProfile::high_measure)
      .def("scaled", &RadialProfile::scaled, py::arg("c"))
      .def(py::self == py::self)
      .def("__repr__", [](const RadialProfile& p) { return "RadialProfile(" + io::profile_to_json(p).dump() + ")"; });

  py::class_<EigenSolution>(m, "EigenSolution")
      .def_readonly("lambda_", &EigenSolution::lambda)
      .def_readonly("profile", &EigenSolution::profile)
      .def("samples",
           [](const EigenSolution& s) {
             py::dict d;
             std::vector<double> r, y, dy, sigma;
             for (const EigenSample& e : s.samples()) {
               r.push_back(e.r);
               y.push_back(e.y);
               dy.push_back(e.y_prime);
               sigma.push_back(e.sigma);
             }
             d["r"] = r;
             d["y"] = y;
             d["y_prime"] = dy;
             d["sigma"] = sigma;
             return d;
           })
      .def("value", [](const EigenSolution& s, double r) { return s.curve.value(r); }, py::arg("r"))
      .def(
          "gradient_magnitude",
          [](const EigenSolution& s, double r, const std::string& side) {
            return gradient_magnitude(s, r, side == "right" ? Side::right : Side::left);
          },
          py::arg("r"), py::arg("side") = "left")
      .def("rayleigh_quotient", [](const EigenSolution& s) { return rayleigh_quotient(s.profile, s); })
      .def("l2_norm_squared", &l2_norm_squared);

  m.def("principal_eigenvalue", &principal_eigenvalue, py::arg("profile"), py::arg("tol") = kDefaultSolverTol,
        py::call_guard<py::gil_scoped_release>());

  m.def(
      "improve",
      [](const RadialProfile& p, std::optional<double> fraction, std::optional<double> measure, double tol) {
        const ImproveResult r = improve(p, volume_for(p, fraction, measure), tol);
        return py::dict(py::arg("profile") = r.profile, py::arg("lambda_before") = r.before.lambda,
                        py::arg("threshold") = r.threshold.t,
                        py::arg("high_region") = intervals(r.threshold.set));
      },
      py::arg("profile"), py::kw_only(), py::arg("fraction") = py::none(), py::arg("measure") = py::none(),
      py::arg("tol") = kDefaultSolverTol);

  m.def(
      "optimize",
      [](const RadialProfile& p, std::optional<double> fraction, std::optional<double> measure, int max_iter,
         double tol) {
        const ImprovementTrace t = optimize(p, volume_for(p, fraction, measure), max_iter, 1e-8, tol);
        std::vector<double> lambdas;
        std::vector<RadialProfile> profiles;
        for (const TraceStep& s : t.steps) {
          lambdas.push_back(s.lambda);
          profiles.push_back(s.profile);
        }
        return py::dict(py::arg("converged") = t.converged, py::arg("iterations") = t.iterations,
                        py::arg("lambdas") = lambdas, py::arg("profiles") = profiles,
                        py::arg("fixed_point") = t.fixed_point);
      },
      py::arg("profile"), py::kw_only(), py::arg("fraction") = py::none(), py::arg("measure") = py::none(),
      py::arg("max_iter") = 50, py::arg("tol") = kDefaultSolverTol);

  m.def(
      "low_contrast_optimizer",
      [](int n, std::optional<double> fraction, std::optional<double> measure) {
        const Dimension d(n);
        const VolumeSpec spec = volume(d, fraction, measure);
        const LowContrastResult r = low_contrast_optimizer(d, spec);
        return py::dict(py::arg("threshold") = r.threshold.t, py::arg("set") = intervals(r.threshold.set),
                        py::arg("shape") = to_string(r.shape), py::arg("rho_n") = r.rho_n,
                        py::arg("critical_ball_measure") = r.critical_ball_measure,
                        py::arg("contact_radius") = r.contact_radius,
                        py::arg("boundary_contact_measure") = r.boundary_contact_measure);
      },
      py::arg("n"), py::kw_only(), py::arg("fraction") = py::none(), py::arg("measure") = py::none());

  m.def(
      "check_counterexample",
      [](int n, double alpha, double beta, std::optional<double> fraction, std::optional<double> measure,
         double tol) {
        const Dimension d(n);
        return report_dict(check_counterexample(d, volume(d, fraction, measure), alpha, beta, tol));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::kw_only(), py::arg("fraction") = py::none(),
      py::arg("measure") = py::none(), py::arg("tol") = kDefaultSolverTol);

  m.def(
      "sweep",
      [](const std::vector<int>& dims, const std::vector<double>& fractions, const std::vector<double>& contrasts,
         double tol, unsigned threads) {
        std::vector<SweepRow> rows;
        {
          py::gil_scoped_release release;
          rows = sweep(dims, fractions, contrasts, tol, threads);
        }
        py::list out;
        for (const SweepRow& row : rows) {
          if (row.report) {
            out.append(report_dict(*row.report));
          } else {
            out.append(py::dict(py::arg("n") = row.n, py::arg("fraction") = row.fraction,
                                py::arg("alpha") = row.alpha, py::arg("beta") = row.beta,
                                py::arg("verdict") = "error", py::arg("error") = row.error));
          }
        }
        return out;
      },
      py::arg("dims"), py::arg("fractions"), py::arg("contrasts"), py::arg("tol") = kDefaultSolverTol,
      py::arg("threads") = 0);
}
