#include "qbcap/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "qbcap/capacity.hpp"
#include "qbcap/sweep.hpp"
#include "qbcap/verify.hpp"

namespace qbcap::cli {

namespace {

constexpr int kDefaultWindow = 10;
constexpr double kVerifyTolerance = 1e-9;

double parse_double(const std::string& value, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw UsageError(flag + ": malformed number '" + value + "'");
    return v;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(flag + ": malformed number '" + value + "'");
  }
}

int parse_int(const std::string& value, const std::string& flag) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw UsageError(flag + ": malformed integer '" + value + "'");
  return v;
}

double parse_unit(const std::string& value, const std::string& flag) {
  const double v = parse_double(value, flag);
  if (!(v >= 0.0 && v <= 1.0)) throw UsageError(flag + ": value must lie in [0,1]");
  return v;
}

std::pair<double, double> parse_range(const std::string& value, const std::string& flag) {
  const std::size_t colon = value.find(':');
  if (colon == std::string::npos) throw UsageError(flag + ": expected lo:hi");
  const double lo = parse_unit(value.substr(0, colon), flag);
  const double hi = parse_unit(value.substr(colon + 1), flag);
  if (lo > hi) throw UsageError(flag + ": lower bound exceeds upper bound");
  return {lo, hi};
}

Energies parse_eps(const std::string& value, const std::string& flag) {
  std::istringstream is(value);
  std::string part;
  std::vector<double> parts;
  while (std::getline(is, part, ',')) parts.push_back(parse_double(part, flag));
  if (parts.size() != 3) throw UsageError(flag + ": expected three values A,B,C");
  return Energies{parts[0], parts[1], parts[2]};
}

Command parse_command(const std::string& name) {
  if (name == "capacity") return Command::Capacity;
  if (name == "evolve") return Command::Evolve;
  if (name == "sweep") return Command::Sweep;
  if (name == "surface") return Command::Surface;
  if (name == "features") return Command::Features;
  if (name == "verify") return Command::Verify;
  throw UsageError("unknown command '" + name +
                   "' (expected capacity|evolve|sweep|surface|features|verify)");
}

StateSpec resolve_state(const CliConfig& cfg) {
  if (cfg.state == StateKind::Ghz) return StateSpec::ghz();
  if (!cfg.a) throw UsageError("--a: required when --state ghzlike");
  return StateSpec::ghz_like(*cfg.a);
}

ChannelScenario resolve_scenario(const CliConfig& cfg, bool needs_point_p) {
  if (!cfg.channel) throw UsageError("--channel: required for this command");
  if (!cfg.side) throw UsageError("--side: required for this command");
  ChannelScenario s;
  s.state = resolve_state(cfg);
  s.kind = *cfg.channel;
  s.topology = *cfg.side;
  s.n = cfg.n;
  if (s.topology == Topology::TriSide) {
    if (!cfg.gamma) throw UsageError("--gamma: required with --side tri");
    s.gamma = *cfg.gamma;
  }
  if (needs_point_p) {
    if (!cfg.p) throw UsageError("--p: required for this command");
    s.p = *cfg.p;
  }
  return s;
}

int write_output(const CliConfig& cfg, std::ostream& out, std::ostream& err,
                 const std::function<void(std::ostream&)>& writer) {
  if (cfg.out_path.empty()) {
    writer(out);
    return 0;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "cannot open output file '" << cfg.out_path << "'\n";
    return 3;
  }
  writer(file);
  file.flush();
  if (!file.good()) {
    err << "write failed for output file '" << cfg.out_path << "'\n";
    return 3;
  }
  return 0;
}

}  // namespace

CliConfig parse_and_validate(std::span<const std::string> args) {
  if (args.empty()) throw UsageError("missing command (capacity|evolve|sweep|surface|features|verify)");
  CliConfig cfg;
  cfg.command = parse_command(args[0]);

  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& flag = args[i];
    const auto next = [&]() -> const std::string& {
      if (i + 1 >= args.size()) throw UsageError(flag + ": missing value");
      return args[++i];
    };
    if (flag == "--state") {
      const std::string& v = next();
      if (v == "ghz")
        cfg.state = StateKind::Ghz;
      else if (v == "ghzlike")
        cfg.state = StateKind::GhzLike;
      else
        throw UsageError("--state: expected ghz or ghzlike, got '" + v + "'");
    } else if (flag == "--a") {
      cfg.a = parse_unit(next(), flag);
    } else if (flag == "--channel") {
      const std::string& v = next();
      const auto kind = parse_channel_kind(v);
      if (!kind) throw UsageError("--channel: expected bf|pf|bpf|dep|adc|dp, got '" + v + "'");
      cfg.channel = *kind;
    } else if (flag == "--side") {
      const std::string& v = next();
      if (v == "first")
        cfg.side = Topology::FirstOnly;
      else if (v == "all")
        cfg.side = Topology::ProductAllThree;
      else if (v == "tri")
        cfg.side = Topology::TriSide;
      else
        throw UsageError("--side: expected first|all|tri, got '" + v + "'");
    } else if (flag == "--p") {
      cfg.p = parse_unit(next(), flag);
    } else if (flag == "--p-range") {
      cfg.p_range = parse_range(next(), flag);
    } else if (flag == "--q-range") {
      cfg.q_range = parse_range(next(), flag);
    } else if (flag == "--gamma") {
      cfg.gamma = parse_unit(next(), flag);
    } else if (flag == "--n") {
      cfg.n = parse_int(next(), flag);
      if (cfg.n < 1) throw UsageError("--n: must be >= 1");
    } else if (flag == "--eps") {
      cfg.eps = parse_eps(next(), flag);
    } else if (flag == "--grid") {
      cfg.grid = parse_int(next(), flag);
      if (cfg.grid < 2) throw UsageError("--grid: must be >= 2");
    } else if (flag == "--out") {
      cfg.out_path = next();
    } else if (flag == "--format") {
      const std::string& v = next();
      if (v == "csv")
        cfg.format = OutputFormat::Csv;
      else if (v == "jsonl")
        cfg.format = OutputFormat::Jsonl;
      else
        throw UsageError("--format: expected csv or jsonl, got '" + v + "'");
    } else if (flag == "--zero-tol") {
      cfg.zero_tol = parse_double(next(), flag);
      if (!(cfg.zero_tol > 0.0)) throw UsageError("--zero-tol: must be positive");
    } else if (flag == "--flat-tol") {
      cfg.flat_tol = parse_double(next(), flag);
      if (!(cfg.flat_tol > 0.0)) throw UsageError("--flat-tol: must be positive");
    } else {
      throw UsageError("unknown flag '" + flag + "'");
    }
  }

  // command-level checks beyond individual flags
  switch (cfg.command) {
    case Command::Sweep:
    case Command::Features:
      if (cfg.side && *cfg.side == Topology::TriSide)
        throw UsageError("--side: tri-side surfaces are evaluated with the surface command");
      break;
    case Command::Surface:
      if (cfg.side && *cfg.side != Topology::TriSide)
        throw UsageError("--side: the surface command requires --side tri");
      break;
    case Command::Capacity:
    case Command::Evolve:
      if (cfg.side && *cfg.side == Topology::TriSide)
        throw UsageError("--side: single-point tri-side evaluation is not available; use surface");
      break;
    case Command::Verify:
      if (!cfg.eps.ordered())
        throw UsageError("--eps: verify requires 0 <= C <= B <= A");
      break;
  }
  return cfg;
}

namespace {

int run_capacity(const CliConfig& cfg, std::ostream& out) {
  const TripartiteHamiltonian h = tripartite_hamiltonian(cfg.eps);
  const DensityMatrix rho = cfg.channel ? run_scenario(resolve_scenario(cfg, true))
                                        : initial_state(resolve_state(cfg));
  out << format_number(battery_capacity(rho, h.op).capacity) << '\n';
  return 0;
}

int run_evolve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const DensityMatrix rho = cfg.channel ? run_scenario(resolve_scenario(cfg, true))
                                        : initial_state(resolve_state(cfg));
  return write_output(cfg, out, err, [&](std::ostream& os) { write_matrix(os, rho.matrix()); });
}

int run_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ChannelScenario scenario = resolve_scenario(cfg, false);
  const GridSpec grid{cfg.p_range.first, cfg.p_range.second, cfg.grid ? cfg.grid : 1001};
  const std::vector<SweepRecord> records = sweep_1d(scenario, grid, cfg.eps);
  return write_output(cfg, out, err,
                      [&](std::ostream& os) { write_records(os, records, cfg.format); });
}

int run_surface(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  CliConfig with_side = cfg;
  if (!with_side.side) with_side.side = Topology::TriSide;
  ChannelScenario scenario = resolve_scenario(with_side, false);
  const int count = cfg.grid ? cfg.grid : 101;
  const GridSpec p_grid{cfg.p_range.first, cfg.p_range.second, count};
  const GridSpec q_grid{cfg.q_range.first, cfg.q_range.second, count};
  const std::vector<SweepRecord> records = sweep_2d(scenario, p_grid, q_grid, cfg.eps);
  return write_output(cfg, out, err,
                      [&](std::ostream& os) { write_records(os, records, cfg.format); });
}

int run_features(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  ChannelScenario scenario = resolve_scenario(cfg, false);
  const GridSpec grid{cfg.p_range.first, cfg.p_range.second, cfg.grid ? cfg.grid : 1001};
  const FeatureReport report =
      scan_features(scenario, grid, cfg.eps, cfg.zero_tol, cfg.flat_tol, kDefaultWindow);
  return write_output(cfg, out, err,
                      [&](std::ostream& os) { write_feature_report(os, report, cfg.format); });
}

int run_verify(const CliConfig& cfg, std::ostream& out) {
  const VerificationReport report = run_verification(cfg.eps);
  for (const FamilyResult& r : report.results)
    out << r.family << " n=" << r.n << " points=" << r.points
        << " max_abs_err=" << format_number(r.max_abs_err) << '\n';
  const bool ok = report.pass(kVerifyTolerance);
  out << (ok ? "PASS" : "FAIL") << " max_abs_err=" << format_number(report.max_abs_err())
      << " tol=" << format_number(kVerifyTolerance) << '\n';
  return ok ? 0 : 2;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  try {
    const CliConfig cfg = parse_and_validate(args);
    if (!cfg.eps.ordered())
      err << "warning: --eps does not satisfy 0 <= C <= B <= A; "
             "closed-form reference values are unavailable\n";
    switch (cfg.command) {
      case Command::Capacity: return run_capacity(cfg, out);
      case Command::Evolve: return run_evolve(cfg, out, err);
      case Command::Sweep: return run_sweep(cfg, out, err);
      case Command::Surface: return run_surface(cfg, out, err);
      case Command::Features: return run_features(cfg, out, err);
      case Command::Verify: return run_verify(cfg, out);
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qbcap::cli
