#pragma once

#include <span>

#include "qbcap/matrix.hpp"
#include "qbcap/states.hpp"

namespace qbcap {

struct CapacityResult {
  double capacity = 0.0;          // energy units
  Spectrum state_spectrum;        // ascending
  Spectrum energy_levels;         // ascending
};

/// Capacity from two ascending spectra: sum_i eps_i (lam_i - lam_{d-1-i}).
/// Depends only on the sorted sequences, so ties need no canonical order.
double capacity_from_spectra(std::span<const double> state_eigenvalues_ascending,
                             std::span<const double> energy_levels_ascending);

/// Spread between the most and least energetic arrangements of the state's
/// spectrum over the level sequence. Both algebraic pairings are evaluated and
/// cross-checked on every call; eigenvalues in [-1e-12, 0) are clamped to zero
/// before use as populations.
CapacityResult battery_capacity(const DensityMatrix& rho, const Hamiltonian& h);

/// Energy extractable by the best unitary: Tr(rho H) minus the passive-state
/// energy. Non-negative.
double ergotropy(const DensityMatrix& rho, const Hamiltonian& h);

/// Same spectrum as rho, rearranged so larger populations sit on lower
/// levels; the zero-ergotropy endpoint of the unitary orbit.
DensityMatrix passive_state(const DensityMatrix& rho, const Hamiltonian& h);

}  // namespace qbcap
