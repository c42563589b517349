#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chainscape/io.hpp"
#include "chainscape/report.hpp"

namespace {

using chainscape::CommandResult;

int write_out(const CommandResult& result, const std::string& out_path) {
  const std::string text = chainscape::render_report(result.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << text;
  }
  return result.exit_code;
}

std::optional<chainscape::InputFormat> parse_format(const std::string& format) {
  if (format.empty()) return std::nullopt;
  if (format == "csv") return chainscape::InputFormat::csv;
  if (format == "json") return chainscape::InputFormat::json;
  chainscape::fail(chainscape::errc::invalid_argument,
                   "--format must be csv or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chainscape: finite metric spaces, hyperspace distances, "
               "chain connectivity and metric convexification"};
  app.require_subcommand(1);

  std::string input, format, out_path, alpha_path, suite = "all";
  std::vector<double> etas, epsilons;
  std::vector<int> dims;
  double R = 1.0, eps = 2.0, delta = 0.6, eta = 0.3;
  int threads = 1;  // accepted for interface stability; output never depends on it

  auto* analyze = app.add_subcommand("analyze", "chain profiles and moduli");
  analyze->add_option("--input", input, "CSV matrix or point-cloud JSON")->required();
  analyze->add_option("--format", format, "csv|json (default: by extension)");
  analyze->add_option("--etas", etas, "chain step bounds")->delimiter(',')->required();
  analyze->add_option("--epsilons", epsilons, "diameter bounds")->delimiter(',');
  analyze->add_option("--out", out_path, "output path (default stdout)");
  analyze->add_option("--threads", threads, "must not affect output bytes");

  auto* convexify = app.add_subcommand("convexify", "stitched chain-cost metric");
  convexify->add_option("--input", input, "CSV matrix or point-cloud JSON")->required();
  convexify->add_option("--format", format, "csv|json (default: by extension)");
  convexify->add_option("--alpha", alpha_path, "modulus JSON path")->required();
  convexify->add_option("--R", R, "locality scale")->required();
  convexify->add_option("--out", out_path, "output path (default stdout)");
  convexify->add_option("--threads", threads, "must not affect output bytes");

  auto* verify = app.add_subcommand("verify", "property suites");
  verify->add_option("--input", input, "CSV matrix or point-cloud JSON")->required();
  verify->add_option("--format", format, "csv|json (default: by extension)");
  verify->add_option("--suite", suite, "hausdorff|chains|convexify|diagram1|all");
  verify->add_option("--out", out_path, "output path (default stdout)");
  verify->add_option("--threads", threads, "must not affect output bytes");

  auto* demo = app.add_subcommand("demo-normability",
                                  "chain-length growth across product dimensions");
  demo->add_option("--dims", dims, "dimensions, each in 1..8")->delimiter(',');
  demo->add_option("--epsilon", eps, "diameter bound");
  demo->add_option("--delta", delta, "pair distance bound");
  demo->add_option("--eta", eta, "chain step bound");
  demo->add_option("--out", out_path, "output path (default stdout)");
  demo->add_option("--threads", threads, "must not affect output bytes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto space = chainscape::load_space(input, parse_format(format));
      return write_out(chainscape::cmd_analyze(space, etas, epsilons), out_path);
    }
    if (convexify->parsed()) {
      const auto space = chainscape::load_space(input, parse_format(format));
      const auto alpha = chainscape::load_modulus_file(alpha_path);
      return write_out(chainscape::cmd_convexify(space, alpha, R), out_path);
    }
    if (verify->parsed()) {
      const auto space = chainscape::load_space(input, parse_format(format));
      return write_out(chainscape::cmd_verify(space, suite), out_path);
    }
    if (demo->parsed())
      return write_out(chainscape::cmd_demo_normability(dims, eps, delta, eta),
                       out_path);
  } catch (const chainscape::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return chainscape::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
