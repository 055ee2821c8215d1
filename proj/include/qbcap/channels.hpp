#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qbcap/matrix.hpp"
#include "qbcap/states.hpp"

namespace qbcap {

enum class ChannelKind {
  BitFlip,          // bf
  PhaseFlip,        // pf
  BitPhaseFlip,     // bpf
  Depolarizing,     // dep
  AmplitudeDamping, // adc
  Dephasing,        // dp
};

std::string_view short_name(ChannelKind kind);
std::optional<ChannelKind> parse_channel_kind(std::string_view name);

/// A single-qubit channel as its Kraus operator list. Operator counts:
/// 2 for bf/pf/bpf/adc, 4 for dep, 3 for dp.
struct QubitChannel {
  ChannelKind kind;
  double p = 0.0;
  std::vector<ComplexMatrix> kraus;
};

/// Builds the Kraus list for `kind` at strength p in [0,1] (endpoints admitted
/// as limits). Rejects p outside [0,1].
QubitChannel make_channel(ChannelKind kind, double p);

/// max-norm of (sum_m E_m^dagger E_m - I); zero for a trace-preserving map.
double completeness_defect(const QubitChannel& ch);

/// sum_m E_m rho E_m^dagger on a one-qubit state.
DensityMatrix apply_single_qubit(const DensityMatrix& rho, const QubitChannel& ch);

/// Channel on one subsystem of a three-qubit state, identity on the others.
DensityMatrix apply_on_side(const DensityMatrix& rho, const QubitChannel& ch, Subsystem side);
DensityMatrix apply_on_first(const DensityMatrix& rho, const QubitChannel& ch);

/// Independent local channels on all three subsystems at once:
/// sum over every Kraus index combination of
/// (E_i x E_j x E_k) rho (E_i x E_j x E_k)^dagger.
DensityMatrix apply_product_channel(const DensityMatrix& rho, const QubitChannel& ch_a,
                                    const QubitChannel& ch_b, const QubitChannel& ch_c);

enum class Topology {
  FirstOnly,        // channel on subsystem A only
  ProductAllThree,  // same channel on all three subsystems
  TriSide,          // same kind, independent strengths p, q, gamma
};

std::string_view short_name(Topology t);

struct ChannelScenario {
  StateSpec state = StateSpec::ghz();
  Topology topology = Topology::ProductAllThree;
  ChannelKind kind = ChannelKind::PhaseFlip;
  double p = 0.0;
  double q = 0.0;      // TriSide only
  double gamma = 0.0;  // TriSide only
  int n = 1;           // repetition count, >= 1
};

/// Builds the scenario's initial state and applies its channel map n times by
/// literal repeated application.
DensityMatrix run_scenario(const ChannelScenario& scenario);

/// Step-by-step walk of a scenario's trajectory, reusing internal buffers.
/// The verification grids read capacities at several repetition counts from a
/// single walk; run_scenario is one walk to completion.
class ScenarioEngine {
public:
  explicit ScenarioEngine(const ChannelScenario& scenario);

  void reset();
  void step();
  int steps_done() const { return steps_; }
  DensityMatrix state() const { return DensityMatrix(rho_); }
  const ComplexMatrix& raw_state() const { return rho_; }

private:
  ChannelScenario scenario_;
  std::vector<ComplexMatrix> side_kraus_[3];  // per subsystem, index 0 = A
  ComplexMatrix rho_, buf_a_, buf_b_, buf_c_, buf_d_;
  int steps_ = 0;
};

}  // namespace qbcap
