#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tpc/eigensolver.hpp"
#include "tpc/experiments.hpp"
#include "tpc/radial_profile.hpp"
#include "tpc/rearrangement.hpp"

namespace tpc::io {

/// Malformed profile documents; the message names the offending field or
/// the parse position.
class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "%.15g" formatting; the C locale is never changed, so the decimal
/// separator is always ".".
std::string format_number(double v);
/// v rounded to 15 significant digits, for JSON reports.
double round15(double v);

/// {"dim", "alpha", "beta", "layers": [{"r_outer", "material"}]}, with
/// doubles written at full round-trip precision.
nlohmann::json profile_to_json(const RadialProfile& profile);
RadialProfile profile_from_json(const nlohmann::json& doc);
RadialProfile parse_profile(std::string_view text);
std::string serialize_profile(const RadialProfile& profile);

nlohmann::json radial_set_json(const RadialSet& set);

/// Columns r, y, y_prime, sigma.
std::string solution_csv(const EigenSolution& sol);
nlohmann::json solution_json(const EigenSolution& sol);

/// Array of {"iteration", "lambda", "profile"}.
nlohmann::json trace_json(const ImprovementTrace& trace);
/// Columns iteration, lambda, interfaces (radii separated by ';').
std::string trace_csv(const ImprovementTrace& trace);

nlohmann::json report_json(const CounterexampleReport& report);
nlohmann::json low_contrast_json(const LowContrastResult& result, const VolumeSpec& spec);

/// Columns n, A_fraction, alpha, beta, rho, rho_n, lambda_ball,
/// lambda_improved, gap, y2p1, z, verdict. Failed rows carry "error" as the
/// verdict and empty numeric fields after beta.
std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

}  // namespace tpc::io
