#include "qbcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qbcap {

namespace {

void clamp_tiny_negatives(std::vector<double>& values) {
  for (double& v : values)
    if (v < 0.0 && v >= -1e-12) v = 0.0;
}

Spectrum state_spectrum(const DensityMatrix& rho) {
  Spectrum s = hermitian_eigenvalues_ascending(rho.matrix(), 1e-9);
  clamp_tiny_negatives(s.values);
  return s;
}

}  // namespace

double capacity_from_spectra(std::span<const double> lam, std::span<const double> eps) {
  if (lam.size() != eps.size())
    throw std::invalid_argument("capacity_from_spectra: spectra sizes differ");
  const std::size_t d = lam.size();
  double c = 0.0;
  for (std::size_t i = 0; i < d; ++i) c += eps[i] * (lam[i] - lam[d - 1 - i]);
  return c;
}

CapacityResult battery_capacity(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != h.dim())
    throw std::invalid_argument("battery_capacity: state and operator dimensions differ");
  Spectrum lam = state_spectrum(rho);
  const std::vector<double>& eps = h.levels().values;

  const double by_level = capacity_from_spectra(lam.values, eps);
  const std::size_t d = eps.size();
  double by_population = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    by_population += lam.values[i] * (eps[i] - eps[d - 1 - i]);
  if (std::abs(by_level - by_population) > 1e-12)
    throw std::logic_error("battery_capacity: the two pairing forms disagree");

  return CapacityResult{by_level, std::move(lam), h.levels()};
}

DensityMatrix passive_state(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != h.dim())
    throw std::invalid_argument("passive_state: state and operator dimensions differ");
  Spectrum lam = state_spectrum(rho);

  const std::size_t d = h.dim();
  std::vector<std::size_t> order(d);  // basis indices by ascending energy
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h.diagonal()[a] < h.diagonal()[b];
  });

  ComplexMatrix out(d, d);
  for (std::size_t k = 0; k < d; ++k) out(order[k], order[k]) = lam.values[d - 1 - k];
  return DensityMatrix(std::move(out));
}

double ergotropy(const DensityMatrix& rho, const Hamiltonian& h) {
  const DensityMatrix passive = passive_state(rho, h);
  double e_state = 0.0, e_passive = 0.0;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    e_state += h.diagonal()[i] * rho.matrix()(i, i).real();
    e_passive += h.diagonal()[i] * passive.matrix()(i, i).real();
  }
  double w = e_state - e_passive;
  if (w < 0.0 && w >= -1e-12) w = 0.0;
  return w;
}

}  // namespace qbcap
