#include "tpc/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace tpc::io {

using nlohmann::json;

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double round15(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

json profile_to_json(const RadialProfile& profile) {
  json layers = json::array();
  for (const Layer& layer : profile.layers())
    layers.push_back({{"r_outer", layer.r_outer}, {"material", std::string(to_string(layer.material))}});
  return {{"dim", profile.dim().value()},
          {"alpha", profile.alpha()},
          {"beta", profile.beta()},
          {"layers", std::move(layers)}};
}

namespace {

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ProfileError(where + key + ": missing field");
  return *it;
}

double require_number(const json& obj, const std::string& key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) throw ProfileError(where + key + ": expected a number");
  return v.get<double>();
}

}  // namespace

RadialProfile profile_from_json(const json& doc) {
  if (!doc.is_object()) throw ProfileError("profile: expected a JSON object");
  const json& dim = require(doc, "dim", "");
  if (!dim.is_number_integer()) throw ProfileError("dim: expected an integer");
  const double alpha = require_number(doc, "alpha", "");
  const double beta = require_number(doc, "beta", "");
  const json& layers_doc = require(doc, "layers", "");
  if (!layers_doc.is_array()) throw ProfileError("layers: expected an array");

  std::vector<Layer> layers;
  for (std::size_t i = 0; i < layers_doc.size(); ++i) {
    const std::string where = "layers[" + std::to_string(i) + "].";
    const json& entry = layers_doc[i];
    if (!entry.is_object()) throw ProfileError("layers[" + std::to_string(i) + "]: expected an object");
    const double r = require_number(entry, "r_outer", where);
    const json& material = require(entry, "material", where);
    if (!material.is_string()) throw ProfileError(where + "material: expected a string");
    try {
      layers.push_back({r, material_from_string(material.get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw ProfileError(where + "material: " + e.what());
    }
  }
  try {
    return RadialProfile(Dimension(dim.get<int>()), alpha, beta, std::move(layers));
  } catch (const std::domain_error& e) {
    throw ProfileError(std::string("dim: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ProfileError(e.what());
  }
}

RadialProfile parse_profile(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ProfileError(std::string("profile document: ") + e.what());
  }
  return profile_from_json(doc);
}

std::string serialize_profile(const RadialProfile& profile) {
  return profile_to_json(profile).dump(2);
}

json radial_set_json(const RadialSet& set) {
  json out = json::array();
  for (const Interval& iv : set.intervals()) out.push_back({round15(iv.lo), round15(iv.hi)});
  return out;
}

std::string solution_csv(const EigenSolution& sol) {
  std::ostringstream os;
  os << "r,y,y_prime,sigma\n";
  for (const EigenSample& s : sol.samples())
    os << format_number(s.r) << ',' << format_number(s.y) << ',' << format_number(s.y_prime)
       << ',' << format_number(s.sigma) << '\n';
  return os.str();
}

json solution_json(const EigenSolution& sol) {
  json r = json::array(), y = json::array(), yp = json::array(), sigma = json::array();
  for (const EigenSample& s : sol.samples()) {
    r.push_back(round15(s.r));
    y.push_back(round15(s.y));
    yp.push_back(round15(s.y_prime));
    sigma.push_back(round15(s.sigma));
  }
  return {{"lambda", round15(sol.lambda)},
          {"profile", profile_to_json(sol.profile)},
          {"r", std::move(r)},
          {"y", std::move(y)},
          {"y_prime", std::move(yp)},
          {"sigma", std::move(sigma)}};
}

json trace_json(const ImprovementTrace& trace) {
  json steps = json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    steps.push_back({{"iteration", i},
                     {"lambda", round15(trace.steps[i].lambda)},
                     {"profile", profile_to_json(trace.steps[i].profile)}});
  return steps;
}

std::string trace_csv(const ImprovementTrace& trace) {
  std::ostringstream os;
  os << "iteration,lambda,interfaces\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    os << i << ',' << format_number(trace.steps[i].lambda) << ',';
    const std::vector<double> radii = trace.steps[i].profile.interfaces();
    for (std::size_t k = 0; k < radii.size(); ++k) os << (k ? ";" : "") << format_number(radii[k]);
    os << '\n';
  }
  return os.str();
}

json report_json(const CounterexampleReport& r) {
  return {{"n", r.n},
          {"A_fraction", round15(r.fraction)},
          {"alpha", round15(r.alpha)},
          {"beta", round15(r.beta)},
          {"rho", round15(r.rho)},
          {"rho_n", round15(r.rho_n)},
          {"lambda_ball", round15(r.lambda_ball)},
          {"lambda_improved", round15(r.lambda_improved)},
          {"gap", round15(r.gap())},
          {"y2p1", round15(r.y2_prime_at_1)},
          {"y2p_rho", round15(r.y2_prime_at_rho)},
          {"y1p_rho", round15(r.y1_prime_at_rho)},
          {"z", round15(r.z)},
          {"psi_prime_rho", round15(r.psi_prime_at_rho)},
          {"psi_prime_1", round15(r.psi_prime_at_1)},
          {"d_n", round15(r.d_n)},
          {"set_changed", r.set_changed},
          {"touches_boundary", r.improved_set.touches_boundary()},
          {"improved_set", radial_set_json(r.improved_set)},
          {"verdict", to_string(r.verdict)}};
}

json low_contrast_json(const LowContrastResult& result, const VolumeSpec& spec) {
  const double total = unit_ball_volume(spec.dim());
  return {{"n", spec.dim().value()},
          {"A_fraction", round15(spec.fraction())},
          {"threshold", round15(result.threshold.t)},
          {"set", radial_set_json(result.threshold.set)},
          {"achieved_measure", round15(result.threshold.achieved_measure)},
          {"shape", to_string(result.shape)},
          {"rho_n", round15(result.rho_n)},
          {"critical_ball_measure", round15(result.critical_ball_measure)},
          {"critical_ball_fraction", round15(result.critical_ball_measure / total)},
          {"contact_radius", round15(result.contact_radius)},
          {"boundary_contact_measure", round15(result.boundary_contact_measure)},
          {"boundary_contact_fraction", round15(result.boundary_contact_measure / total)}};
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "n,A_fraction,alpha,beta,rho,rho_n,lambda_ball,lambda_improved,gap,y2p1,z,verdict\n";
  for (const SweepRow& row : rows) {
    os << row.n << ',' << format_number(row.fraction) << ',' << format_number(row.alpha) << ','
       << format_number(row.beta) << ',';
    if (!row.report) {
      os << ",,,,,,,error\n";
      continue;
    }
    const CounterexampleReport& r = *row.report;
    os << format_number(r.rho) << ',' << format_number(r.rho_n) << ','
       << format_number(r.lambda_ball) << ',' << format_number(r.lambda_improved) << ','
       << format_number(r.gap()) << ',' << format_number(r.y2_prime_at_1) << ','
       << format_number(r.z) << ',' << to_string(r.verdict) << '\n';
  }
  return os.str();
}

json sweep_json(const std::vector<SweepRow>& rows) {
  json out = json::array();
  for (const SweepRow& row : rows) {
    if (row.report) {
      out.push_back(report_json(*row.report));
    } else {
      out.push_back({{"n", row.n},
                     {"A_fraction", round15(row.fraction)},
                     {"alpha", round15(row.alpha)},
                     {"beta", round15(row.beta)},
                     {"verdict", "error"},
                     {"error", row.error}});
    }
  }
  return out;
}

}  // namespace tpc::io
