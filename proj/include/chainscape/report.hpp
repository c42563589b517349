#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "chainscape/convexify.hpp"
#include "chainscape/core.hpp"
#include "chainscape/moduli.hpp"

namespace chainscape {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "chainscape/1";

/// Finished report plus the process exit code the CLI should use.
/// Reports are deterministic: identical inputs and flags give identical bytes.
struct CommandResult {
  nlohmann::ordered_json report;
  int exit_code = 0;
};

/// Chain-length profile, per-eta component counts and per-(eps, eta)
/// chaining moduli for the space.
CommandResult cmd_analyze(const MetricSpace& space, std::vector<double> etas,
                          std::vector<double> epsilons);

/// Runs the convexification pipeline and embeds the stitched metric with its
/// sandwich certificates and a midpoint-convexity summary.
CommandResult cmd_convexify(const MetricSpace& space, const Modulus& alpha,
                            double R);

/// Property suites: hausdorff | chains | convexify | diagram1 | all.
/// Exit code 0 iff every property passes.
CommandResult cmd_verify(const MetricSpace& space, const std::string& suite);

/// Exploratory table: minimal chain-length bounds l*(eps, delta, eta) on
/// product-metric samples of increasing dimension, against Euclidean samples
/// of the same meshes. No pass/fail content.
CommandResult cmd_demo_normability(const std::vector<int>& dims, double eps,
                                   double delta, double eta);

/// Exit-code policy: 2 input errors, 3 precondition errors, 4 internal
/// certificate failures, 1 reserved for property failures.
int exit_code_for(const error& e);

/// Serialized report plus trailing newline.
std::string render_report(const nlohmann::ordered_json& report);

}  // namespace chainscape
