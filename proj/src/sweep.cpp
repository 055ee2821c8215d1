#include "qbcap/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "qbcap/capacity.hpp"
#include "qbcap/parallel.hpp"

namespace qbcap {

namespace {

SweepRecord evaluate_point(const ChannelScenario& scenario, const Hamiltonian& h,
                           const Energies& eps, bool record_q) {
  SweepRecord rec;
  rec.p = scenario.p;
  if (record_q) rec.q = scenario.q;
  rec.n = scenario.n;
  rec.capacity_numeric = battery_capacity(run_scenario(scenario), h).capacity;
  if (auto reference = closed_form::capacity(scenario, eps)) {
    rec.capacity_oracle = *reference;
    rec.abs_err = std::abs(rec.capacity_numeric - *reference);
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> sweep_1d(const ChannelScenario& scenario, const GridSpec& grid,
                                  const Energies& eps) {
  if (grid.count < 2) throw std::invalid_argument("sweep_1d: grid needs at least two points");
  const TripartiteHamiltonian h = tripartite_hamiltonian(eps);
  const bool record_q = scenario.topology == Topology::TriSide;
  std::vector<SweepRecord> records(grid.count);
  parallel_for(records.size(), [&](std::size_t i) {
    ChannelScenario s = scenario;
    s.p = grid.value(static_cast<int>(i));
    records[i] = evaluate_point(s, h.op, eps, record_q);
  });
  return records;
}

std::vector<SweepRecord> sweep_2d(const ChannelScenario& scenario, const GridSpec& p_grid,
                                  const GridSpec& q_grid, const Energies& eps) {
  if (scenario.topology != Topology::TriSide)
    throw std::invalid_argument("sweep_2d: scenario must use the tri-side topology");
  if (p_grid.count < 2 || q_grid.count < 2)
    throw std::invalid_argument("sweep_2d: grids need at least two points");
  const TripartiteHamiltonian h = tripartite_hamiltonian(eps);
  std::vector<SweepRecord> records(static_cast<std::size_t>(p_grid.count) * q_grid.count);
  parallel_for(records.size(), [&](std::size_t idx) {
    ChannelScenario s = scenario;
    s.p = p_grid.value(static_cast<int>(idx) / q_grid.count);
    s.q = q_grid.value(static_cast<int>(idx) % q_grid.count);
    records[idx] = evaluate_point(s, h.op, eps, true);
  });
  return records;
}

std::function<double(double)> capacity_curve(const ChannelScenario& scenario,
                                             const Energies& eps) {
  const TripartiteHamiltonian h = tripartite_hamiltonian(eps);
  return [scenario, h](double p) {
    ChannelScenario s = scenario;
    s.p = p;
    return battery_capacity(run_scenario(s), h.op).capacity;
  };
}

namespace {

// Shrinks [lo, hi] around the minimum of a unimodal dip.
double shrink_to_minimum(const std::function<double(double)>& curve, double lo, double hi) {
  while (hi - lo > 1e-10) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (curve(m1) <= curve(m2))
      hi = m2;
    else
      lo = m1;
  }
  return 0.5 * (lo + hi);
}

// p where the curve crosses `level`, given curve(outside) > level >= curve(inside).
double bisect_crossing(const std::function<double(double)>& curve, double outside, double inside,
                       double level) {
  for (int it = 0; it < 80 && std::abs(outside - inside) > 1e-13; ++it) {
    const double mid = 0.5 * (outside + inside);
    (curve(mid) > level ? outside : inside) = mid;
  }
  return 0.5 * (outside + inside);
}

// Refines an isolated zero inside [lo, hi]. A zero the curve merely touches
// (value at the dip far below zero_tol) is located as the midpoint of the two
// crossings of a level chosen well above floating-point noise; the curvature
// at a quadratic touch point otherwise swamps a direct minimum search.
double refine_zero(const std::function<double(double)>& curve, double lo, double hi,
                   double zero_tol) {
  const double dip = shrink_to_minimum(curve, lo, hi);
  const double level = std::min(1e-10, zero_tol);
  if (curve(dip) > level) return dip;
  const double left = bisect_crossing(curve, lo, dip, level);
  const double right = bisect_crossing(curve, hi, dip, level);
  return 0.5 * (left + right);
}

}  // namespace

std::vector<double> find_sudden_death(std::span<const SweepRecord> records, double zero_tol,
                                      const std::function<double(double)>& curve) {
  if (records.empty()) throw std::invalid_argument("find_sudden_death: empty record list");
  std::vector<double> points;
  std::size_t i = 0;
  while (i < records.size()) {
    if (records[i].capacity_numeric > zero_tol) {
      ++i;
      continue;
    }
    std::size_t j = i;  // maximal run of grid points at or below zero_tol
    while (j + 1 < records.size() && records[j + 1].capacity_numeric <= zero_tol) ++j;
    if (i > 0 && j + 1 < records.size()) {
      if (curve) {
        points.push_back(refine_zero(curve, records[i - 1].p, records[j + 1].p, zero_tol));
      } else {
        std::size_t best = i;
        for (std::size_t k = i + 1; k <= j; ++k)
          if (records[k].capacity_numeric < records[best].capacity_numeric) best = k;
        points.push_back(records[best].p);
      }
    }
    i = j + 1;
  }
  return points;
}

std::optional<FrozenCapacity> detect_frozen(std::span<const SweepRecord> records,
                                            double flat_tol, int window) {
  if (records.size() < 2) throw std::invalid_argument("detect_frozen: need at least two records");
  if (window < 1 || static_cast<std::size_t>(window) >= records.size())
    throw std::invalid_argument("detect_frozen: window must be in [1, record count)");
  const double reference = records.back().capacity_numeric;
  std::size_t onset = records.size() - 1;
  while (onset > 0 &&
         std::abs(records[onset - 1].capacity_numeric - reference) <= flat_tol)
    --onset;
  if (records.size() - onset < static_cast<std::size_t>(window)) return std::nullopt;
  return FrozenCapacity{records[onset].p, reference};
}

std::optional<double> find_crossing(double a, int n, double tol) {
  if (n < 1) throw std::invalid_argument("find_crossing: repetition count n must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("find_crossing: tolerance must be positive");
  const auto gap = [a, n](double p) {
    const closed_form::AdcEigenvalues ev = closed_form::ghz_like_adc_eigenvalues(a, p, n);
    return ev.lambda5 - ev.lambda7;
  };
  double lo = 0.0, hi = 1.0;
  double g_lo = gap(lo), g_hi = gap(hi);
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  if ((g_lo < 0.0) == (g_hi < 0.0)) return std::nullopt;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = gap(mid);
    if (hi - lo <= tol && std::abs(g_mid) <= tol) return mid;
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

FeatureReport scan_features(const ChannelScenario& scenario, const GridSpec& grid,
                            const Energies& eps, double zero_tol, double flat_tol, int window) {
  const std::vector<SweepRecord> records = sweep_1d(scenario, grid, eps);
  FeatureReport report;
  report.sudden_death_points =
      find_sudden_death(records, zero_tol, capacity_curve(scenario, eps));
  if (auto frozen = detect_frozen(records, flat_tol, window)) {
    report.frozen_onset = frozen->onset_p;
    report.frozen_value = frozen->frozen_value;
  }
  if (scenario.state.kind() == StateKind::GhzLike &&
      scenario.kind == ChannelKind::AmplitudeDamping &&
      scenario.topology == Topology::FirstOnly &&
      scenario.state.a() * scenario.state.a() < 0.5) {
    report.crossing_x = find_crossing(scenario.state.a(), scenario.n, 1e-12);
  }
  return report;
}

}  // namespace qbcap
