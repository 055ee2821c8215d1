#pragma once

#include <optional>

#include "qbcap/channels.hpp"
#include "qbcap/states.hpp"

namespace qbcap::closed_form {

/// Closed-form capacity expressions for the scenario families that admit
/// them, used as ground truth against the numeric pipeline. All functions
/// require the strict level ordering 0 <= eps_c <= eps_b <= eps_a and reject
/// anything else; the numeric path has no such restriction.

/// GHZ through one pass of a channel: product over all three subsystems for
/// bf/pf/bpf/dep/dp, first subsystem only for adc.
double ghz_capacity(ChannelKind kind, double p, const Energies& eps);

/// GHZ through n passes: pf/dp product over all three subsystems, adc on the
/// first subsystem only.
double ghz_capacity_n(ChannelKind kind, double p, int n, const Energies& eps);

/// GHZ through n passes of independent phase flips with strengths p, q,
/// gamma on subsystems A, B, C.
double ghz_triside_pf_capacity(double p, double q, double gamma, int n, const Energies& eps);

/// GHZ-like(a) through n passes: pf/dp product over all three subsystems,
/// adc on the first subsystem only.
double ghz_like_capacity(ChannelKind kind, double a, double p, int n, const Energies& eps);

/// GHZ-like(a) through n passes of independent phase flips.
double ghz_like_triside_pf_capacity(double a, double p, double q, double gamma, int n,
                                    const Energies& eps);

/// Nonzero eigenvalues of the corner-form state with corner coefficient
/// c2 * c2_factor (pf/dp leave c1, c3 untouched and attenuate c2).
struct CornerEigenvalues {
  double lambda6 = 0.0;
  double lambda7 = 0.0;
};
CornerEigenvalues ghz_like_corner_eigenvalues(double a, double c2_factor);

/// Nonzero eigenvalues of GHZ-like(a) after n passes of adc on the first
/// subsystem. lambda5 grows with p while lambda7 decays; their crossing moves
/// the capacity between its two branch pairings.
struct AdcEigenvalues {
  double lambda5 = 0.0;
  double lambda6 = 0.0;
  double lambda7 = 0.0;
};
AdcEigenvalues ghz_like_adc_eigenvalues(double a, double p, int n);

/// Closed-form capacity for a scenario, or nullopt when no closed form
/// covers it (unsupported kind/topology combination, or unordered energies).
std::optional<double> capacity(const ChannelScenario& scenario, const Energies& eps);

}  // namespace qbcap::closed_form
