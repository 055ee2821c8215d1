#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "qbcap/states.hpp"

namespace qbcap {

struct VerifyOptions {
  int grid_1d = 1001;
  int grid_2d = 101;
  std::vector<int> checkpoints = {1, 2, 3, 4, 10, 100};      // ascending
  std::vector<double> gammas = {0.25, 0.5, 0.75, 1.0};       // tri-side C strengths
  std::vector<double> amplitudes = {0.5, std::sqrt(0.75)};   // GHZ-like a values
  unsigned threads = 0;
};

struct FamilyResult {
  std::string family;
  int n = 1;
  double max_abs_err = 0.0;
  std::size_t points = 0;
};

struct VerificationReport {
  std::vector<FamilyResult> results;
  double max_abs_err() const;
  bool pass(double tol = 1e-9) const;
};

/// Replays every closed-form-covered scenario family over the default grids
/// and reports the worst numeric-vs-closed-form disagreement per family and
/// repetition count. Trajectories are walked once per grid point; capacities
/// are read off at each checkpoint.
VerificationReport run_verification(const Energies& eps = default_energies,
                                    const VerifyOptions& options = {});

}  // namespace qbcap
