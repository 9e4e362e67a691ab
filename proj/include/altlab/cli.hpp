#pragma once

// Command-line front end. Each command returns its exit status and the text
// destined for stdout (the report) and stderr (progress, diagnostics).
//
// Exit codes: 0 pass, 1 property violation, 2 usage error, 3 inconclusive.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altlab/parallel.hpp"
#include "altlab/polynomial.hpp"

namespace altlab {

enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitUsage = 2, kExitInconclusive = 3 };

enum class Mode { Exact, Prime };
enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string command;
  int n = 2;
  int k = 1;
  BiDegree cutoff{3, 3};
  std::uint64_t seed = 1;
  int samples = -1;  // command default when negative
  Mode mode = Mode::Exact;
  std::uint32_t prime = 0;
  OutputFormat output = OutputFormat::Json;
  bool force = false;

  // command-specific
  int tuples = -1;
  int translates = 20;
  int trials = 3;
  std::optional<int> stratum;          // variety, sample
  std::optional<BiDegree> plant;       // freeness negative control
  BiDegree plant_shift{0, 1};
  bool with_bases = false;             // hilbert

  std::vector<std::string> command_line;

  /// Cost guard and argument sanity; throws UsageError.
  void validate() const;
};

struct CommandResult {
  int exit_code = kExitPass;
  std::string out;
  std::string err;
};

CommandResult cmd_hilbert(const RunConfig& cfg, const Parallelism& par);
CommandResult cmd_freeness(const RunConfig& cfg, const Parallelism& par);
CommandResult cmd_prop_ak(const RunConfig& cfg, const Parallelism& par);
CommandResult cmd_variety(const RunConfig& cfg, const Parallelism& par);
CommandResult cmd_sample(const RunConfig& cfg, const Parallelism& par);

/// Parses argv (without the program name) and dispatches.
CommandResult run_cli(const std::vector<std::string>& args, const Parallelism& par);

}  // namespace altlab
