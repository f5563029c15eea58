#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quantinv/cartan.hpp"
#include "quantinv/rigidity.hpp"

namespace quantinv {

/// Process exit statuses.
enum ExitCode : int { kExitOk = 0, kExitParse = 1, kExitValidation = 2, kExitCheckFailed = 3 };

enum class OutputFormat { text, json };

struct Config {
  std::optional<LieType> algebra;
  RibbonChoice ribbon = RibbonChoice::snyder_tingley;
  OutputFormat output = OutputFormat::text;
  std::optional<std::filesystem::path> cache_dir;
};

/// Renders with increasing exponents, e.g. "q^-2 + 1 + q^2".
std::string render_ascending(const LaurentPoly& p);

int cmd_invariant(const Config& cfg, const std::string& tangle_path, bool both, std::ostream& out, std::ostream& err);
int cmd_rep(const Config& cfg, const std::string& weight, std::ostream& out, std::ostream& err);
/// `weights` is a ';'-separated list of weights.
int cmd_check(const Config& cfg, const std::string& suite, const std::string& weights, std::ostream& out,
              std::ostream& err);
int cmd_unknot_homology(const Config& cfg, int t_max, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argv[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quantinv
