#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbcap/channels.hpp"
#include "qbcap/io.hpp"
#include "qbcap/states.hpp"

namespace qbcap::cli {

/// Bad flags, missing flags, out-of-range values. Messages name the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Command { Capacity, Evolve, Sweep, Surface, Features, Verify };

struct CliConfig {
  Command command = Command::Capacity;
  StateKind state = StateKind::Ghz;
  std::optional<double> a;
  std::optional<ChannelKind> channel;
  std::optional<Topology> side;
  std::optional<double> p;
  std::pair<double, double> p_range{0.0, 1.0};
  std::pair<double, double> q_range{0.0, 1.0};
  std::optional<double> gamma;
  int n = 1;
  Energies eps = default_energies;
  int grid = 0;  // 0 = command default (1001 for sweep/features, 101 for surface)
  std::string out_path;  // empty = stdout
  OutputFormat format = OutputFormat::Csv;
  double zero_tol = 1e-6;
  double flat_tol = 1e-3;
};

/// Resolves argv into a full config with defaults, or throws UsageError.
CliConfig parse_and_validate(std::span<const std::string> args);

/// Parses and executes. Exit status: 0 success, 1 usage error,
/// 2 verification failure, 3 I/O failure.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qbcap::cli
