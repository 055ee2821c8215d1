#include "qbcap/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbcap {

Hamiltonian::Hamiltonian(std::vector<double> diagonal) : diagonal_(std::move(diagonal)) {
  if (diagonal_.empty()) throw std::invalid_argument("Hamiltonian: empty diagonal");
  levels_.values = diagonal_;
  std::sort(levels_.values.begin(), levels_.values.end());
}

ComplexMatrix Hamiltonian::matrix() const {
  ComplexMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m(i, i) = diagonal_[i];
  return m;
}

TripartiteHamiltonian tripartite_hamiltonian(const Energies& eps) {
  std::vector<double> diag(8);
  for (std::size_t i = 0; i < 8; ++i) {
    const double sa = (i & 4u) ? -1.0 : 1.0;
    const double sb = (i & 2u) ? -1.0 : 1.0;
    const double sc = (i & 1u) ? -1.0 : 1.0;
    diag[i] = sa * eps.eps_a + sb * eps.eps_b + sc * eps.eps_c;
  }
  return TripartiteHamiltonian{eps, eps.ordered(), Hamiltonian(std::move(diag))};
}

TripartiteHamiltonian tripartite_hamiltonian(double eps_a, double eps_b, double eps_c) {
  return tripartite_hamiltonian(Energies{eps_a, eps_b, eps_c});
}

Hamiltonian single_qubit_hamiltonian(double eps) {
  return Hamiltonian(std::vector<double>{eps, -eps});
}

StateSpec StateSpec::ghz() { return StateSpec(StateKind::Ghz, 1.0 / std::sqrt(2.0)); }

StateSpec StateSpec::ghz_like(double a) {
  if (!(a >= 0.0 && a <= 1.0))
    throw std::invalid_argument("StateSpec: amplitude a must lie in [0,1]");
  return StateSpec(StateKind::GhzLike, a);
}

double StateSpec::c2() const { return a_ * std::sqrt(1.0 - a_ * a_); }

namespace {

DensityMatrix corner_state(double c1, double c2, double c3) {
  ComplexMatrix m(8, 8);
  m(0, 0) = c1;
  m(0, 7) = c2;
  m(7, 0) = c2;
  m(7, 7) = c3;
  return DensityMatrix(std::move(m));
}

}  // namespace

DensityMatrix ghz_state() { return corner_state(0.5, 0.5, 0.5); }

DensityMatrix ghz_like_state(double a) {
  const StateSpec spec = StateSpec::ghz_like(a);
  return corner_state(spec.c1(), spec.c2(), spec.c3());
}

DensityMatrix initial_state(const StateSpec& spec) {
  if (spec.kind() == StateKind::Ghz) return ghz_state();
  return corner_state(spec.c1(), spec.c2(), spec.c3());
}

}  // namespace qbcap
