#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace prodrange {

using Complex = std::complex<double>;

// Counter-based generator: the i-th variate of stream (seed, stream) is a pure
// function of (seed, stream, i).  Parallel work items each own a stream, so
// results do not depend on scheduling or thread count.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) {
    key_ = mix(mix(seed + 0x9e3779b97f4a7c15ull) ^ mix(stream + 0xbf58476d1ce4e5b9ull));
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller, one pair per two calls
  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    // avoid log(0)
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Complex complex_gauss() {
    double re = gauss();
    double im = gauss();
    return {re, im};
  }

  // Haar-distributed unit vector on the complex sphere.
  std::vector<Complex> unit_vector(int dim) {
    std::vector<Complex> v(dim);
    double norm2 = 0.0;
    for (auto& c : v) {
      c = complex_gauss();
      norm2 += std::norm(c);
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : v) c *= inv;
    return v;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace prodrange
