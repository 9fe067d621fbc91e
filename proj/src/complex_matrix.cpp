#include "prodrange/complex_matrix.hpp"

#include <cmath>
#include <cstddef>

namespace prodrange {

namespace {
int checked_order(const std::vector<int>& dims) {
  if (dims.empty()) throw DimensionMismatch("matrix needs at least one tensor factor");
  long long n = 1;
  for (int m : dims) {
    if (m < 1) throw DimensionMismatch("factor dimension must be >= 1");
    n *= m;
    if (n > 4096) throw DimensionMismatch("matrix order beyond supported desk scale");
  }
  return static_cast<int>(n);
}
}  // namespace

ComplexMatrix::ComplexMatrix(std::vector<int> dims, std::vector<Complex> entries)
    : dims_(std::move(dims)), entries_(std::move(entries)) {
  n_ = checked_order(dims_);
  if (entries_.size() != static_cast<std::size_t>(n_) * n_)
    throw DimensionMismatch("entry count does not match N^2 for the given dims");
}

ComplexMatrix ComplexMatrix::zero(std::vector<int> dims) {
  int n = checked_order(dims);
  return ComplexMatrix(std::move(dims), std::vector<Complex>(static_cast<std::size_t>(n) * n));
}

ComplexMatrix ComplexMatrix::identity(std::vector<int> dims) {
  ComplexMatrix m = zero(std::move(dims));
  for (int i = 0; i < m.n_; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diag(std::vector<Complex> diagonal, std::vector<int> dims) {
  int n = checked_order(dims);
  if (diagonal.size() != static_cast<std::size_t>(n))
    throw DimensionMismatch("diagonal length does not match dims");
  ComplexMatrix m = zero(std::move(dims));
  for (int i = 0; i < n; ++i) m(i, i) = diagonal[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r = zero(dims_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += std::norm(e);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(s);
}

bool ComplexMatrix::is_hermitian(double rel_tol) const {
  return hermiticity_defect() <= rel_tol * (frobenius_norm() + 1e-300);
}

ComplexMatrix ComplexMatrix::with_dims(std::vector<int> dims) const {
  int n = checked_order(dims);
  if (n != n_) throw DimensionMismatch("new dims do not multiply to the matrix order");
  return ComplexMatrix(std::move(dims), entries_);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.n_ != n_) throw DimensionMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.n_ != n_) throw DimensionMismatch("matrix sizes differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch("matrix sizes differ");
  ComplexMatrix r = ComplexMatrix::zero(a.dims_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < a.n_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw DimensionMismatch("vector length differs");
  std::vector<Complex> r(n_);
  for (int i = 0; i < n_; ++i) {
    Complex s = 0.0;
    const Complex* row = entries_.data() + static_cast<std::size_t>(i) * n_;
    for (int j = 0; j < n_; ++j) s += row[j] * v[j];
    r[i] = s;
  }
  return r;
}

ComplexMatrix hermitian_part(const ComplexMatrix& x) {
  ComplexMatrix r = x;
  ComplexMatrix xd = x.adjoint();
  r += xd;
  r *= 0.5;
  return r;
}

ComplexMatrix antihermitian_part(const ComplexMatrix& x) {
  ComplexMatrix r = x;
  ComplexMatrix xd = x.adjoint();
  r -= xd;
  r *= 0.5;
  return r;
}

Complex rayleigh_quotient(const ComplexMatrix& x, const std::vector<Complex>& v) {
  Complex num = 0.0;
  double den = 0.0;
  std::vector<Complex> xv = x.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    num += std::conj(v[i]) * xv[i];
    den += std::norm(v[i]);
  }
  return num / den;
}

double vector_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

Complex inner_product(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

void fix_phase(std::vector<Complex>& v) {
  for (const auto& c : v) {
    double m = std::abs(c);
    if (m > 1e-12) {
      Complex phase = std::conj(c) / m;
      for (auto& e : v) e *= phase;
      return;
    }
  }
}

}  // namespace prodrange
