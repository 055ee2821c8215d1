#pragma once

#include <vector>

#include "qbcap/matrix.hpp"

namespace qbcap {

/// Energy splittings of the three qubits. The reference capacity expressions
/// assume 0 <= eps_c <= eps_b <= eps_a; the numeric path does not.
struct Energies {
  double eps_a = 0.5;
  double eps_b = 0.3;
  double eps_c = 0.1;

  bool ordered() const { return 0.0 <= eps_c && eps_c <= eps_b && eps_b <= eps_a; }
};

inline constexpr Energies default_energies{};

/// Operator that is diagonal in the computational basis, plus its sorted
/// level sequence. Covers both the three-qubit system operator and the
/// single-qubit operators of the reduced states.
class Hamiltonian {
public:
  explicit Hamiltonian(std::vector<double> diagonal);

  std::size_t dim() const { return diagonal_.size(); }
  const std::vector<double>& diagonal() const { return diagonal_; }
  const Spectrum& levels() const { return levels_; }
  ComplexMatrix matrix() const;

private:
  std::vector<double> diagonal_;
  Spectrum levels_;
};

struct TripartiteHamiltonian {
  Energies eps;
  bool ordered = true;  // warning flag; the level sort keeps everything valid
  Hamiltonian op;
};

/// eps_a sigma3 x I x I + eps_b I x sigma3 x I + eps_c I x I x sigma3.
TripartiteHamiltonian tripartite_hamiltonian(const Energies& eps);
TripartiteHamiltonian tripartite_hamiltonian(double eps_a, double eps_b, double eps_c);

/// eps * sigma3, for reduced one-qubit states.
Hamiltonian single_qubit_hamiltonian(double eps);

enum class StateKind { Ghz, GhzLike };

/// Which corner-form pure state to start from. For the GHZ-like family the
/// amplitude a fixes the corner coefficients c1 = a^2, c2 = a sqrt(1-a^2),
/// c3 = 1-a^2; a = 1/sqrt(2) recovers GHZ.
class StateSpec {
public:
  static StateSpec ghz();
  static StateSpec ghz_like(double a);  // rejects a outside [0,1]

  StateKind kind() const { return kind_; }
  double a() const { return a_; }
  double c1() const { return a_ * a_; }
  double c2() const;
  double c3() const { return 1.0 - a_ * a_; }

private:
  StateSpec(StateKind kind, double a) : kind_(kind), a_(a) {}
  StateKind kind_;
  double a_;
};

DensityMatrix ghz_state();
DensityMatrix ghz_like_state(double a);
DensityMatrix initial_state(const StateSpec& spec);

}  // namespace qbcap
