#ifndef INFOPARITY_CLI_H_
#define INFOPARITY_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "infoparity/cohort.h"
#include "infoparity/error.h"
#include "infoparity/parity.h"

namespace infoparity::cli {

enum class Command { kBuild, kParity, kSweep, kCompare, kCohort, kSynth, kExport };

std::string_view ToString(Command command);
Command ParseCommand(std::string_view text);

// Bad command line. exit_code is 0 for --help, whose text is the message.
class UsageError : public Error {
 public:
  UsageError(const std::string& message, int exit_code = 2)
      : Error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

inline constexpr double kDefaultMeanDegree = 28.0;
inline constexpr double kDefaultExportCutoff = 0.25;
inline constexpr std::string_view kDefaultMeanDegreeGrid = "8:40:4";

struct RunConfig {
  Command command = Command::kParity;

  std::string graph_path;
  std::string labels_path;
  std::string corr_path;
  std::string series_path;
  std::string corr_a_path;
  std::string corr_b_path;
  std::string manifest_path;
  std::string partition_path;
  std::string parity_path;

  std::string output_path = "-";
  std::string labels_out_path;
  std::string corr_out_path;
  // "json" or "csv".
  std::string format = "json";

  std::vector<double> mean_degrees;
  std::optional<double> threshold;
  LogBase log_base = LogBase::kBits;
  std::vector<ClusterPair> cluster_pairs;
  double cutoff = kDefaultExportCutoff;
  bool giant_component = false;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  std::string subject_id = "subject";

  // synth parameters
  std::string model;
  std::size_t n = 0;
  double p = 0.0;
  double fraction = 0.0;
  std::vector<std::size_t> block_sizes;
  double within = 0.0;
  double between = 0.0;
  double jitter = 0.0;
  double amplitude = 0.0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json ToJson(const RunConfig& config);
RunConfig FromJson(const nlohmann::json& j);
// Configuration echoed into reports: ToJson without the worker count and
// output paths, none of which affect results.
nlohmann::json EchoJson(const RunConfig& config);

// "start:stop:step" (inclusive) or a comma-separated list.
std::vector<double> ParseMeanDegrees(std::string_view text);
// "a:b,c:d".
std::vector<ClusterPair> ParseClusterPairs(std::string_view text);

// argv[0] is the program name. Throws UsageError.
RunConfig ParseArgs(int argc, const char* const* argv);

// Executes a parsed configuration. Output files are written once, after all
// computation has finished; "-" writes to `out`. Throws Error on failure.
void Run(const RunConfig& config, std::ostream& out);

// ParseArgs + Run with error reporting on `err`. Returns the process exit
// code: 0 on success, 2 for usage errors, 1 for any other failure.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infoparity::cli

#endif  // INFOPARITY_CLI_H_
