#pragma once

#include <complex>
#include <vector>

#include "prodrange/errors.hpp"

namespace prodrange {

using Complex = std::complex<double>;

// Dense square complex matrix acting on a tensor-product space.  `dims` lists
// the factor dimensions (m1,...,mk); the matrix order is N = m1*...*mk and
// entries are stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::vector<int> dims, std::vector<Complex> entries);

  static ComplexMatrix zero(std::vector<int> dims);
  static ComplexMatrix identity(std::vector<int> dims);
  static ComplexMatrix diag(std::vector<Complex> diagonal, std::vector<int> dims);

  int size() const { return n_; }
  int factor_count() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<Complex>& entries() const { return entries_; }
  std::vector<Complex>& entries() { return entries_; }

  Complex operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double hermiticity_defect() const;  // ||X - X^dagger||_F
  bool is_hermitian(double rel_tol = 1e-10) const;

  // Overrides the factor structure without touching entries; product of the
  // new dims must equal the matrix order.
  ComplexMatrix with_dims(std::vector<int> dims) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  std::vector<Complex> apply(const std::vector<Complex>& v) const;

 private:
  std::vector<int> dims_;
  std::vector<Complex> entries_;
  int n_ = 0;
};

// Hermitian and anti-Hermitian parts, H(X) = (X+X^dagger)/2, S(X) = (X-X^dagger)/2.
ComplexMatrix hermitian_part(const ComplexMatrix& x);
ComplexMatrix antihermitian_part(const ComplexMatrix& x);

// <v|X|v> / <v|v>
Complex rayleigh_quotient(const ComplexMatrix& x, const std::vector<Complex>& v);

double vector_norm(const std::vector<Complex>& v);
Complex inner_product(const std::vector<Complex>& a, const std::vector<Complex>& b);  // <a|b>

// Rotates the global phase so the first component with modulus > 1e-12 is
// real positive; gives deterministic eigenvector and Schmidt-factor output.
void fix_phase(std::vector<Complex>& v);

}  // namespace prodrange
