#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace strata::cli {

enum class Command { StratifyComplex, StratifyNerve, Mapper, Delta };
enum class SheafKind { LocalHomology, MaxElements, Constant, VanishingPoly };
enum class OutputFormat { Json, Dot };

struct RunConfig {
  Command command = Command::StratifyComplex;
  std::vector<std::string> inputs;
  SheafKind sheaf = SheafKind::LocalHomology;
  std::string field = "2";
  double tolerance = 1e-8;
  bool exact = false;
  bool homogeneous = false;
  bool literal_cardinality = false;
  OutputFormat format = OutputFormat::Json;
  std::string output;     // empty: standard output
  std::string dot_output;  // optional extra DOT file
  int threads = 1;
  int max_degree = 2;
  std::string monomials_path;
  int max_dim = -1;  // nerve dimension cap; negative means no cap
  int function_column = -1;
  bool drop_function_column = false;
  std::vector<std::pair<double, double>> intervals;
  double radius = 0.0;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kInternalError = 3;

SheafKind parse_sheaf(const std::string& text);
// "lo:hi,lo:hi,..."
std::vector<std::pair<double, double>> parse_intervals(const std::string& text);

// The rendered result of a command (JSON or DOT text).
std::string cmd_stratify(const RunConfig& config);
std::string cmd_mapper(const RunConfig& config);
std::string cmd_delta(const RunConfig& config);

// Parses argv and runs the selected command. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace strata::cli
