#pragma once

#include "qfp/sequences.hpp"
#include "qfp/verifier.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfp::cli {

enum class Command { compute, verify, table };
enum class Format { json, csv, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::verify;
  SequenceVariant sequence = SequenceVariant::fib_schur;
  std::int64_t n = 0;
  std::int64_t n_max = 200;
  std::int64_t p_max = 200;
  std::vector<Claim> claims;
  Format format = Format::text;
  std::optional<std::string> output_path;
  int jobs = 1;
  bool timing = true;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses argv (argv[0] is the program name). Throws UsageError. A help
// request returns nullopt after printing usage to `out`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

// Serializes reports in the configured format and returns the exit code for
// them: kExitOk when every report passed, kExitFailed otherwise.
int write_reports(std::span<const VerificationReport> reports, const RunConfig& config, std::ostream& out);

// Each writes to `out` and returns a process exit code.
int cmd_compute(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_table(const RunConfig& config, std::ostream& out);

/// Full front end: parse, dispatch, honor --output. Usage problems print to
/// `err` and return kExitUsage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfp::cli
