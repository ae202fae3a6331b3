#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcover/io.hpp"

namespace qcover::cli {

inline constexpr const char* kVersion = "0.3.0";

// Process exit codes; together with the JSON report these are the tool's
// machine-readable contract.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNotStandardGraded = 10,
  kNotQuasiTree = 11,
  kDisagreement = 20,
};

/// Command-specific payload plus exit code. `report` wraps it in the common
/// envelope (version, command, input digest, timing).
struct Outcome {
  nlohmann::json result;
  int exit_code = kOk;
};

/// "sha256:<hex>" of the canonical JSON form of the complex.
std::string input_digest(const SimplicialComplex& complex);

/// Node budget for cycle searches: QCOVER_BUDGET if set, else the default.
std::uint64_t search_budget();

struct CheckOptions {
  bool all_smd = false;
  int k_max = 4;
};
Outcome cmd_check(const io::ParsedComplex& input, const CheckOptions& options);

struct CoversOptions {
  int k = 1;
  std::optional<std::filesystem::path> emit_golden;
};
Outcome cmd_covers(const io::ParsedComplex& input, const CoversOptions& options);

Outcome cmd_dmax(const io::ParsedComplex& input, int k_max);

struct VerifyOptions {
  int k_max = 4;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> artifact;
};
Outcome cmd_verify(const io::ParsedComplex& input, const VerifyOptions& options);

struct GenOptions {
  std::string family;  // delta-n | figure1 | random
  int n = 3;
  std::uint64_t seed = 0;
  int facets = 5;
  int max_size = 3;
  int max_vertices = 0;
};
SimplicialComplex cmd_gen(const GenOptions& options);

struct DotOptions {
  std::string rule = "smallest";
  std::uint64_t seed = 0;
  std::vector<int> order;  // facet ids; empty means the greedy leaf order
};
std::string cmd_dot(const io::ParsedComplex& input, const DotOptions& options);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcover::cli
