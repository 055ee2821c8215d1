#pragma once

#include <cmath>
#include <random>

#include "qbcap/channels.hpp"
#include "qbcap/matrix.hpp"

namespace qbcap::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex random_complex(Rng& rng) {
  return Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (Complex& e : m.entries()) e = random_complex(rng);
  return m;
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  ComplexMatrix g = random_matrix(rng, n, n);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

// Ginibre construction: G G^dagger normalized to unit trace.
inline DensityMatrix random_density(Rng& rng, std::size_t dim) {
  ComplexMatrix g = random_matrix(rng, dim, dim);
  ComplexMatrix rho = g * dagger(g);
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix(std::move(rho));
}

// 2x2 unitary from angles; columns orthonormal by construction.
inline ComplexMatrix random_qubit_unitary(Rng& rng) {
  const double theta = uniform(rng, 0.0, 2.0 * M_PI);
  const double phi = uniform(rng, 0.0, 2.0 * M_PI);
  const double psi = uniform(rng, 0.0, 2.0 * M_PI);
  const double c = std::cos(theta), s = std::sin(theta);
  ComplexMatrix u(2, 2);
  u(0, 0) = c * std::polar(1.0, phi);
  u(0, 1) = s * std::polar(1.0, psi);
  u(1, 0) = -s * std::polar(1.0, -psi);
  u(1, 1) = c * std::polar(1.0, -phi);
  return u;
}

inline ComplexMatrix random_local_unitary(Rng& rng) {
  return kron(random_qubit_unitary(rng), kron(random_qubit_unitary(rng), random_qubit_unitary(rng)));
}

// Reference multiplication, independent of ComplexMatrix::operator*.
inline ComplexMatrix naive_multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

// Damping channel built from the survival probability directly: the
// parametrization by p = 1 - keep rounds keep below ~1e-16 away, and the
// off-diagonal factor sqrt(keep) amplifies that loss above test tolerances.
inline QubitChannel adc_with_keep(double keep) {
  QubitChannel ch{ChannelKind::AmplitudeDamping, 1.0 - keep, {}};
  ch.kraus = {ComplexMatrix(2, 2, {1.0, 0.0, 0.0, std::sqrt(keep)}),
              ComplexMatrix(2, 2, {0.0, std::sqrt(std::max(0.0, 1.0 - keep)), 0.0, 0.0})};
  return ch;
}

// Reference one-sided channel application: embed each operator with explicit
// Kronecker products and multiply densely. Independent of the production
// contraction kernel.
inline ComplexMatrix embed_on_qubit(const ComplexMatrix& op, Subsystem side) {
  switch (side) {
    case Subsystem::A: return kron(op, kron(identity2(), identity2()));
    case Subsystem::B: return kron(identity2(), kron(op, identity2()));
    case Subsystem::C: return kron(identity2(), kron(identity2(), op));
  }
  return op;
}

inline ComplexMatrix apply_channel_embedded(const ComplexMatrix& rho, const QubitChannel& ch,
                                            Subsystem side) {
  ComplexMatrix out(8, 8);
  for (const ComplexMatrix& e : ch.kraus) {
    const ComplexMatrix m = embed_on_qubit(e, side);
    out += naive_multiply(naive_multiply(m, rho), dagger(m));
  }
  return out;
}

}  // namespace qbcap::test
