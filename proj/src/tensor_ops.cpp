#include "prodrange/tensor_ops.hpp"

#include <cmath>
#include <cstddef>

#include "prodrange/rng.hpp"

namespace prodrange {

namespace {

// strides[r] = product of dims after r, so flat = sum idx[r]*strides[r]
std::vector<int> make_strides(const std::vector<int>& dims) {
  std::vector<int> s(dims.size());
  int acc = 1;
  for (int r = static_cast<int>(dims.size()) - 1; r >= 0; --r) {
    s[r] = acc;
    acc *= dims[r];
  }
  return s;
}

}  // namespace

ProductStateTuple::ProductStateTuple(std::vector<std::vector<Complex>> f) : factors(std::move(f)) {
  if (factors.empty()) throw DimensionMismatch("product state needs at least one factor");
  for (const auto& v : factors)
    if (v.empty()) throw DimensionMismatch("empty factor in product state");
}

std::vector<int> ProductStateTuple::dims() const {
  std::vector<int> d;
  d.reserve(factors.size());
  for (const auto& v : factors) d.push_back(static_cast<int>(v.size()));
  return d;
}

std::vector<Complex> ProductStateTuple::assemble() const {
  std::vector<Complex> out{1.0};
  for (const auto& f : factors) {
    std::vector<Complex> next(out.size() * f.size());
    std::size_t idx = 0;
    for (const auto& a : out)
      for (const auto& b : f) next[idx++] = a * b;
    out = std::move(next);
  }
  return out;
}

void ProductStateTuple::check_unit(double tol) const {
  for (const auto& f : factors)
    if (std::abs(vector_norm(f) - 1.0) > tol)
      throw InvalidArgument("product state factor is not normalized");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  int na = a.size(), nb = b.size();
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  ComplexMatrix r = ComplexMatrix::zero(dims);
  for (int i = 0; i < na; ++i)
    for (int ip = 0; ip < na; ++ip) {
      Complex aei = a(i, ip);
      if (aei == 0.0) continue;
      for (int j = 0; j < nb; ++j)
        for (int jp = 0; jp < nb; ++jp) r(i * nb + j, ip * nb + jp) = aei * b(j, jp);
    }
  return r;
}

ComplexMatrix kron_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix left = kron(a, ComplexMatrix::identity(b.dims()));
  ComplexMatrix right = kron(ComplexMatrix::identity(a.dims()), b);
  return left + right;
}

ComplexMatrix partial_trace(const ComplexMatrix& x, int which_factor) {
  const auto& dims = x.dims();
  int k = static_cast<int>(dims.size());
  if (k < 2) throw BadFactorIndex("partial trace needs at least two factors");
  if (which_factor < 0 || which_factor >= k) throw BadFactorIndex("factor index out of range");

  std::vector<int> rdims;
  for (int r = 0; r < k; ++r)
    if (r != which_factor) rdims.push_back(dims[r]);
  ComplexMatrix out = ComplexMatrix::zero(rdims);

  auto strides = make_strides(dims);
  auto rstrides = make_strides(rdims);
  int rn = out.size();
  int m = dims[which_factor];
  // map a reduced flat index to the full-space flat index with slot t in the
  // traced position
  auto lift = [&](int flat, int t) {
    int full = t * strides[which_factor];
    for (int r = 0, rr = 0; r < k; ++r) {
      if (r == which_factor) continue;
      int idx = (flat / rstrides[rr]) % rdims[rr];
      full += idx * strides[r];
      ++rr;
    }
    return full;
  };
  for (int i = 0; i < rn; ++i)
    for (int j = 0; j < rn; ++j) {
      Complex s = 0.0;
      for (int t = 0; t < m; ++t) s += x(lift(i, t), lift(j, t));
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix reduce_to_factor(const ComplexMatrix& x, int which_factor) {
  const auto& dims = x.dims();
  if (which_factor < 0 || which_factor >= static_cast<int>(dims.size()))
    throw BadFactorIndex("factor index out of range");
  ComplexMatrix cur = x;
  int target = which_factor;
  while (cur.factor_count() > 1) {
    int drop = (target == 0) ? 1 : 0;
    cur = partial_trace(cur, drop);
    if (drop < target) --target;
  }
  return cur;
}

ComplexMatrix reshuffle(const ComplexMatrix& x) {
  const auto& dims = x.dims();
  if (dims.size() != 2) throw InvalidArgument("reshuffle expects a bipartite matrix");
  if (dims[0] != dims[1])
    throw InvalidArgument("square reshuffle expects equal factors; use reshuffle_rect");
  int kdim = dims[0];
  ComplexMatrix out = ComplexMatrix::zero(dims);
  for (int i = 0; i < kdim; ++i)
    for (int j = 0; j < kdim; ++j)
      for (int ip = 0; ip < kdim; ++ip)
        for (int jp = 0; jp < kdim; ++jp)
          out(i * kdim + j, ip * kdim + jp) = x(i * kdim + ip, j * kdim + jp);
  return out;
}

std::vector<Complex> reshuffle_rect(const ComplexMatrix& x, int& rows, int& cols) {
  const auto& dims = x.dims();
  if (dims.size() != 2) throw InvalidArgument("reshuffle expects a bipartite matrix");
  int kdim = dims[0], mdim = dims[1];
  rows = kdim * kdim;
  cols = mdim * mdim;
  std::vector<Complex> out(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < kdim; ++i)
    for (int ip = 0; ip < kdim; ++ip)
      for (int j = 0; j < mdim; ++j)
        for (int jp = 0; jp < mdim; ++jp)
          out[static_cast<std::size_t>(i * kdim + ip) * cols + (j * mdim + jp)] =
              x(i * mdim + j, ip * mdim + jp);
  return out;
}

ComplexMatrix apply_local_unitary(const ComplexMatrix& x, const std::vector<ComplexMatrix>& us) {
  const auto& dims = x.dims();
  if (us.size() != dims.size()) throw DimensionMismatch("one unitary per tensor factor required");
  for (std::size_t r = 0; r < us.size(); ++r) {
    if (us[r].size() != dims[r]) throw DimensionMismatch("unitary size does not match factor");
    ComplexMatrix gram = us[r].adjoint() * us[r];
    gram -= ComplexMatrix::identity(us[r].dims());
    if (gram.frobenius_norm() > 1e-8 * us[r].size())
      throw NotUnitary("local transformation is not unitary");
  }
  ComplexMatrix u = us[0];
  for (std::size_t r = 1; r < us.size(); ++r) u = kron(u, us[r]);
  u = u.with_dims(dims);
  return (u * x) * u.adjoint();
}

ComplexMatrix contract_all_but(const ComplexMatrix& x,
                               const std::vector<std::vector<Complex>>& factors, int keep) {
  const auto& dims = x.dims();
  int k = static_cast<int>(dims.size());
  if (static_cast<int>(factors.size()) != k)
    throw DimensionMismatch("one factor vector per tensor slot required");
  if (keep < 0 || keep >= k) throw BadFactorIndex("kept factor index out of range");

  auto strides = make_strides(dims);
  int m = dims[keep];
  int rest = x.size() / m;
  // flat index of the environment (all slots except `keep`)
  std::vector<int> env_dims;
  std::vector<int> env_slots;
  for (int r = 0; r < k; ++r)
    if (r != keep) {
      env_dims.push_back(dims[r]);
      env_slots.push_back(r);
    }
  auto env_strides = make_strides(env_dims);
  auto lift = [&](int env_flat, int own) {
    int full = own * strides[keep];
    for (std::size_t r = 0; r < env_slots.size(); ++r) {
      int idx = (env_flat / env_strides[r]) % env_dims[r];
      full += idx * strides[env_slots[r]];
    }
    return full;
  };
  auto env_amp = [&](int env_flat) {
    Complex a = 1.0;
    for (std::size_t r = 0; r < env_slots.size(); ++r) {
      int idx = (env_flat / env_strides[r]) % env_dims[r];
      a *= factors[env_slots[r]][idx];
    }
    return a;
  };
  std::vector<Complex> amp(rest);
  for (int e = 0; e < rest; ++e) amp[e] = env_amp(e);

  ComplexMatrix out = ComplexMatrix::zero({m});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Complex s = 0.0;
      for (int e = 0; e < rest; ++e)
        for (int f = 0; f < rest; ++f) s += std::conj(amp[e]) * x(lift(e, i), lift(f, j)) * amp[f];
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix contract_last_factor(const ComplexMatrix& x, const std::vector<Complex>& psi) {
  const auto& dims = x.dims();
  int k = static_cast<int>(dims.size());
  if (k < 2) throw BadFactorIndex("contract_last_factor needs at least two factors");
  int m = dims.back();
  if (static_cast<int>(psi.size()) != m) throw DimensionMismatch("vector does not match last factor");
  std::vector<int> rdims(dims.begin(), dims.end() - 1);
  ComplexMatrix out = ComplexMatrix::zero(rdims);
  int rn = out.size();
  for (int i = 0; i < rn; ++i)
    for (int j = 0; j < rn; ++j) {
      Complex s = 0.0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) s += std::conj(psi[a]) * x(i * m + a, j * m + b) * psi[b];
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix haar_unitary(int n, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  std::vector<std::vector<Complex>> cols(n);
  for (auto& c : cols) c = rng.unit_vector(n);
  for (int i = 0; i < n; ++i) {
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < i; ++j) {
        Complex ov = inner_product(cols[j], cols[i]);
        for (int k = 0; k < n; ++k) cols[i][k] -= ov * cols[j][k];
      }
    double nrm = vector_norm(cols[i]);
    for (auto& v : cols[i]) v /= nrm;
  }
  ComplexMatrix u = ComplexMatrix::zero({n});
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) u(i, j) = cols[j][i];
  return u;
}

}  // namespace prodrange
