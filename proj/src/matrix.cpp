#include "qbcap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbcap {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> entries)
    : rows_(rows), cols_(cols), entries_(entries) {
  if (entries_.size() != rows * cols)
    throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace: matrix must be square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  if (!is_square()) throw std::invalid_argument("hermiticity_defect: matrix must be square");
  double d = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("operator+=: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("operator-=: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix pauli_y() {
  return ComplexMatrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
}
ComplexMatrix pauli_z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }
ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

// One Jacobi rotation annihilating a(p,q). The complex phase of a(p,q) is
// folded into the rotation so the remaining 2x2 problem is real symmetric.
void jacobi_rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double beta = std::abs(apq);
  if (beta == 0.0) return;
  const Complex phase = apq / beta;
  const double alpha = a(p, p).real();
  const double delta = a(q, q).real();
  const double theta = (delta - alpha) / (2.0 * beta);
  const double sgn = theta >= 0.0 ? 1.0 : -1.0;
  const double t = sgn / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex upp = phase * c;
  const Complex upq = phase * s;
  const Complex uqp = -s;
  const Complex uqq = c;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {  // A <- A U
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * upp + akq * uqp;
    a(k, q) = akp * upq + akq * uqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // A <- U^dagger A
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

Spectrum hermitian_eigenvalues_ascending(const ComplexMatrix& m, double tol) {
  if (!m.is_square())
    throw std::invalid_argument("hermitian_eigenvalues_ascending: matrix must be square");
  if (m.hermiticity_defect() > tol)
    throw std::invalid_argument(
        "hermitian_eigenvalues_ascending: Hermiticity defect exceeds tolerance");

  const std::size_t n = m.rows();
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  double scale = std::max(1.0, a.max_abs());
  const double stop = 1e-15 * scale * static_cast<double>(n);
  const double skip = stop / static_cast<double>(n * n + 1);

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > skip) jacobi_rotate(a, p, q);
  }

  Spectrum s;
  s.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.values[i] = a(i, i).real();
  std::sort(s.values.begin(), s.values.end());
  return s;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : mat_(std::move(m)) {
  if (!mat_.is_square()) throw std::invalid_argument("DensityMatrix: matrix must be square");
  switch (mat_.rows()) {
    case 2: qubits_ = 1; break;
    case 4: qubits_ = 2; break;
    case 8: qubits_ = 3; break;
    default:
      throw std::invalid_argument("DensityMatrix: dimension must be 2, 4 or 8");
  }
  if (mat_.hermiticity_defect() > tol)
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  if (std::abs(mat_.trace() - Complex(1.0)) > tol)
    throw std::invalid_argument("DensityMatrix: trace differs from one");
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
  if (rho.dim() != 8)
    throw std::invalid_argument("partial_trace: expected a three-qubit state");
  // bit position of the kept qubit (A is the most significant)
  const std::size_t pos = keep == Subsystem::A ? 2 : keep == Subsystem::B ? 1 : 0;
  const std::size_t mask = std::size_t{1} << pos;
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(2, 2);
  for (std::size_t i = 0; i < 8; ++i) {
    const std::size_t a = (i >> pos) & 1u;
    for (std::size_t b = 0; b < 2; ++b) {
      const std::size_t j = (i & ~mask) | (b << pos);
      out(a, b) += m(i, j);
    }
  }
  return DensityMatrix(std::move(out));
}

}  // namespace qbcap
