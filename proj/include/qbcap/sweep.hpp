#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "qbcap/channels.hpp"
#include "qbcap/closed_forms.hpp"
#include "qbcap/states.hpp"

namespace qbcap {

/// Uniform grid over [lo, hi] with `count` points, endpoints included.
struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int count = 1001;

  double value(int i) const {
    return count < 2 ? lo : lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  }
};

struct SweepRecord {
  double p = 0.0;
  std::optional<double> q;
  int n = 1;
  double capacity_numeric = 0.0;
  std::optional<double> capacity_oracle;
  std::optional<double> abs_err;
};

/// Capacity along a strength grid; the scenario's p is replaced point by
/// point. The reference column is filled whenever a closed form covers the
/// scenario. Points evaluate in parallel, records stay in grid order.
std::vector<SweepRecord> sweep_1d(const ChannelScenario& scenario, const GridSpec& grid,
                                  const Energies& eps);

/// Row-major records over a (p, q) grid for a tri-side scenario.
std::vector<SweepRecord> sweep_2d(const ChannelScenario& scenario, const GridSpec& p_grid,
                                  const GridSpec& q_grid, const Energies& eps);

/// Numeric capacity as a function of the scenario's p, for detector
/// refinement.
std::function<double(double)> capacity_curve(const ChannelScenario& scenario,
                                             const Energies& eps);

/// Isolated zeros of a capacity curve: grid points at or below zero_tol with
/// the curve above zero_tol on both sides. When a curve callable is supplied
/// each zero is refined to 1e-9 in p by shrinking the bracketing interval
/// around the minimum.
std::vector<double> find_sudden_death(std::span<const SweepRecord> records, double zero_tol,
                                      const std::function<double(double)>& curve = {});

struct FrozenCapacity {
  double onset_p = 0.0;
  double frozen_value = 0.0;
};

/// Flat tail of a capacity curve: onset is the smallest p from which every
/// later capacity stays within flat_tol of the capacity at p_max. A tail
/// shorter than `window` records does not count as frozen.
std::optional<FrozenCapacity> detect_frozen(std::span<const SweepRecord> records,
                                            double flat_tol, int window);

/// Strength where the two largest eigenvalues of GHZ-like(a) under repeated
/// amplitude damping on the first subsystem cross, found by bisection to
/// `tol` in p and in eigenvalue gap. No crossing (a^2 >= 1/2) yields nullopt.
std::optional<double> find_crossing(double a, int n, double tol);

struct FeatureReport {
  std::vector<double> sudden_death_points;
  std::optional<double> frozen_onset;
  std::optional<double> frozen_value;
  std::optional<double> crossing_x;
};

/// Detectors over a fresh 1-D sweep of the scenario.
FeatureReport scan_features(const ChannelScenario& scenario, const GridSpec& grid,
                            const Energies& eps, double zero_tol, double flat_tol, int window);

}  // namespace qbcap
