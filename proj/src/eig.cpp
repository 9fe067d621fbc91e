#include "prodrange/eig.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace prodrange {

std::vector<Complex> EigenDecomposition::eigenvector(int i) const {
  int n = eigenvectors.size();
  std::vector<Complex> v(n);
  for (int k = 0; k < n; ++k) v[k] = eigenvectors(k, i);
  return v;
}

namespace {

double offdiag_norm(int n, const std::vector<Complex>& a) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a[static_cast<std::size_t>(i) * n + j]);
  return std::sqrt(s);
}

// One Jacobi rotation zeroing a[p][q].  The 2x2 unitary is
//   [ c          -s e^{i phi} ]
//   [ s e^{-i phi}    c       ]
// with phi = arg a[p][q]; applied as A <- U^dagger A U, V <- V U.
void rotate(int n, std::vector<Complex>& a, std::vector<Complex>& v, int p, int q) {
  auto at = [&](std::vector<Complex>& m, int i, int j) -> Complex& {
    return m[static_cast<std::size_t>(i) * n + j];
  };
  Complex apq = at(a, p, q);
  double r = std::abs(apq);
  if (r == 0.0) return;
  Complex phase = apq / r;  // e^{i phi}
  double alpha = at(a, p, p).real();
  double gamma = at(a, q, q).real();
  // tan(theta) solves t^2 - 2 tau t - 1 = 0; take the root of smaller modulus
  double tau = (gamma - alpha) / (2.0 * r);
  double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                          : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  double c = 1.0 / std::sqrt(1.0 + t * t);
  double s = t * c;
  Complex sp = s * phase;             // s e^{i phi}
  Complex spc = s * std::conj(phase); // s e^{-i phi}

  // column update: A <- A U
  for (int k = 0; k < n; ++k) {
    Complex akp = at(a, k, p);
    Complex akq = at(a, k, q);
    at(a, k, p) = c * akp + spc * akq;
    at(a, k, q) = -sp * akp + c * akq;
  }
  // row update: A <- U^dagger A
  for (int k = 0; k < n; ++k) {
    Complex apk = at(a, p, k);
    Complex aqk = at(a, q, k);
    at(a, p, k) = c * apk + sp * aqk;
    at(a, q, k) = -spc * apk + c * aqk;
  }
  // pivot block analytically, keeping the diagonal real
  at(a, p, p) = alpha * c * c + gamma * s * s + 2.0 * r * s * c;
  at(a, q, q) = alpha * s * s + gamma * c * c - 2.0 * r * s * c;
  at(a, p, q) = 0.0;
  at(a, q, p) = 0.0;

  for (int k = 0; k < n; ++k) {
    Complex vkp = at(v, k, p);
    Complex vkq = at(v, k, q);
    at(v, k, p) = c * vkp + spc * vkq;
    at(v, k, q) = -sp * vkp + c * vkq;
  }
}

bool lex_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& x) {
  double norm = x.frobenius_norm();
  if (x.hermiticity_defect() > 1e-10 * (norm + 1e-300))
    throw NotHermitian("matrix exceeds the relative Hermiticity tolerance");

  int n = x.size();
  // work on the symmetrized copy so the defect below tolerance cannot drift
  std::vector<Complex> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i) * n + j] = 0.5 * (x(i, j) + std::conj(x(j, i)));
  std::vector<Complex> v(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  const double stop = 1e-13 * norm;
  const int max_sweeps = 100;
  bool converged = offdiag_norm(n, a) <= stop;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(a[static_cast<std::size_t>(p) * n + q]) > stop / (n * n + 1.0))
          rotate(n, a, v, p, q);
    converged = offdiag_norm(n, a) <= stop;
  }
  if (!converged) throw NoConvergence("Jacobi sweep cap exceeded");

  std::vector<double> vals(n);
  std::vector<std::vector<Complex>> vecs(n, std::vector<Complex>(n));
  for (int i = 0; i < n; ++i) {
    vals[i] = a[static_cast<std::size_t>(i) * n + i].real();
    for (int k = 0; k < n; ++k) vecs[i][k] = v[static_cast<std::size_t>(k) * n + i];
    fix_phase(vecs[i]);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return vals[i] < vals[j]; });
  // deterministic basis inside degenerate eigenspaces: lexicographic tie-break
  double tie_tol = 1e-12 * (1.0 + (n ? std::max(std::abs(vals[order.front()]),
                                                std::abs(vals[order.back()]))
                                     : 0.0));
  for (int i = 0; i + 1 < n;) {
    int j = i + 1;
    while (j < n && vals[order[j]] - vals[order[i]] <= tie_tol) ++j;
    if (j - i > 1)
      std::sort(order.begin() + i, order.begin() + j,
                [&](int p, int q) { return lex_less(vecs[p], vecs[q]); });
    i = j;
  }

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix::zero({n});
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[i] = vals[order[i]];
    for (int k = 0; k < n; ++k) out.eigenvectors(k, i) = vecs[order[i]][k];
  }
  return out;
}

RectSvd svd_rect(int rows, int cols, const std::vector<Complex>& a) {
  if (rows < 1 || cols < 1 || a.size() != static_cast<std::size_t>(rows) * cols)
    throw DimensionMismatch("svd_rect: data size does not match rows*cols");
  auto at = [&](int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; };

  // Gram matrix A^dagger A, then one Hermitian eigensolve.
  ComplexMatrix gram = ComplexMatrix::zero({cols});
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < rows; ++k) s += std::conj(at(k, i)) * at(k, j);
      gram(i, j) = s;
    }
  // symmetrize roundoff before the Hermiticity gate
  gram = hermitian_part(gram);
  EigenDecomposition eig = eig_hermitian(gram);

  int r = std::min(rows, cols);
  RectSvd out;
  out.sigma.resize(r);
  out.u.assign(r, std::vector<Complex>(rows));
  out.v.assign(r, std::vector<Complex>(cols));

  // eigenvalues ascending; singular values descend
  double smax = std::sqrt(std::max(0.0, eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back()));
  double cutoff = 1e-13 * (smax + 1e-300);
  for (int i = 0; i < r; ++i) {
    int src = cols - 1 - i;
    out.sigma[i] = std::sqrt(std::max(0.0, eig.eigenvalues[src]));
    out.v[i] = eig.eigenvector(src);
  }
  // u_i = A v_i / sigma_i for the numerically nonzero part
  int rank = 0;
  for (int i = 0; i < r; ++i) {
    if (out.sigma[i] <= cutoff) break;
    for (int k = 0; k < rows; ++k) {
      Complex s = 0.0;
      for (int j = 0; j < cols; ++j) s += at(k, j) * out.v[i][j];
      out.u[i][k] = s / out.sigma[i];
    }
    rank = i + 1;
  }
  // re-orthonormalize the computed left factors (two MGS passes)
  for (int pass = 0; pass < 2; ++pass)
    for (int i = 0; i < rank; ++i) {
      for (int j = 0; j < i; ++j) {
        Complex c = inner_product(out.u[j], out.u[i]);
        for (int k = 0; k < rows; ++k) out.u[i][k] -= c * out.u[j][k];
      }
      double nrm = vector_norm(out.u[i]);
      for (auto& c : out.u[i]) c /= nrm;
    }
  // complete the null-space columns from the standard basis
  for (int i = rank; i < r; ++i) {
    for (int cand = 0; cand < rows; ++cand) {
      std::vector<Complex> w(rows, 0.0);
      w[cand] = 1.0;
      for (int j = 0; j < i; ++j) {
        Complex c = inner_product(out.u[j], w);
        for (int k = 0; k < rows; ++k) w[k] -= c * out.u[j][k];
      }
      double nrm = vector_norm(w);
      if (nrm > 1e-6) {
        for (auto& c : w) c /= nrm;
        out.u[i] = std::move(w);
        break;
      }
    }
  }
  // phase convention lives on u; v absorbs the compensating phase so that
  // sum sigma_i u_i v_i^dagger still reconstructs A
  for (int i = 0; i < rank; ++i) {
    std::vector<Complex> before = out.u[i];
    fix_phase(out.u[i]);
    for (int k = 0; k < rows; ++k) {
      if (std::abs(before[k]) > 1e-12) {
        Complex phase = out.u[i][k] / before[k];
        // v_i -> v_i * conj(phase)^{-1}: u v^dagger invariant under joint phase
        for (auto& c : out.v[i]) c *= phase;
        break;
      }
    }
  }
  return out;
}

}  // namespace prodrange
