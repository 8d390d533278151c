#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "hamcolor/constructions.hpp"
#include "hamcolor/hamilton.hpp"

namespace hamcolor::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCheckFailed = 2;

// report: command, version, status, input_digest, parameters, results, and
// either an error object or nothing; timing only when requested.
struct CommandOutcome {
  Json report;
  int exit_code = kExitPass;
};

std::string sha256_hex(std::string_view bytes);
// Throws IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

// Sidecar describing a construction's partition.
Json partition_json(const Construction& c);
// "<out without .ecg>.partition.json".
std::string sidecar_path(const std::string& ecg_path);

CommandOutcome cmd_gen(const ConstructionSpec& spec, const std::string& out_path);

CommandOutcome cmd_verify_balance(const std::string& graph_text, long long max_bias_scaled,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

// s defaults to default_matching_bound for the detected mode.
CommandOutcome cmd_analyze(const std::string& graph_text, int m = 1,
                           std::optional<int> s = std::nullopt);

struct SearchOptions {
  int n = 8;
  int r = 2;
  int min_degree = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  double edge_probability = 0.5;
  std::uint64_t node_budget = kDefaultNodeBudget;
  unsigned workers = 1;
  // Writes the most balanced sample here when set.
  std::optional<std::string> save_extremal;
};

CommandOutcome cmd_search(const SearchOptions& options);

CommandOutcome cmd_amplify(const std::string& graph_text, const std::string& bowtie_text,
                           Color k, const ExtensionOptions& extension = {});

struct BowtieListOptions {
  bool only_bad = false;
  std::optional<std::size_t> cap;
  bool packing = false;
};

CommandOutcome cmd_bowties(const std::string& graph_text, const BowtieListOptions& options);

// Runs a command body, turning library errors into an error report with
// exit code 1 and appending timing when asked.
CommandOutcome run_guarded(const std::string& command, const std::function<CommandOutcome()>& body,
                           bool timing = false);

// Compact-but-stable serialization used for every report.
std::string serialize(const Json& report);

}  // namespace hamcolor::cli
