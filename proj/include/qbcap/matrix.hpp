#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qbcap {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Everything in this project is 2x2..8x8,
/// so values are cheap to copy and no storage cleverness is warranted.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<Complex> entries() { return entries_; }
  std::span<const Complex> entries() const { return entries_; }

  Complex trace() const;
  double max_abs() const;
  /// max |M(i,j) - conj(M(j,i))| over all entries.
  double hermiticity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& m);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity2();

/// Real values in ascending order.
struct Spectrum {
  std::vector<double> values;
};

/// Eigenvalues of a Hermitian matrix, ascending. The input is symmetrized as
/// (M + M^dagger)/2 before iterating; a Hermiticity defect above `tol` or a
/// non-square input is rejected. Cyclic complex Jacobi, eigenvalues only.
Spectrum hermitian_eigenvalues_ascending(const ComplexMatrix& m, double tol = 1e-9);

enum class Subsystem { A, B, C };

/// Hermitian unit-trace operator on 1..3 qubits (big-endian: subsystem A is
/// the most significant qubit). Construction checks the cheap invariants
/// (shape, Hermiticity, trace); positive semidefiniteness is a property of how
/// these are produced and is covered by the test suite.
class DensityMatrix {
public:
  explicit DensityMatrix(ComplexMatrix m, double tol = 1e-10);

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.rows(); }
  std::size_t qubit_count() const { return qubits_; }

private:
  ComplexMatrix mat_;
  std::size_t qubits_ = 0;
};

/// One-qubit reduced state of a three-qubit density matrix.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

}  // namespace qbcap
