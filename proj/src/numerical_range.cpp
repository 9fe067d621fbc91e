#include "prodrange/numerical_range.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>

#include "prodrange/eig.hpp"

namespace prodrange {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

struct SweepState {
  // angle -> sample, kept sorted; multimap not needed since angles are unique
  std::map<double, kernels::AngleSample> samples;
};

RangeBoundary assemble(const ComplexMatrix& x, SweepState& st, int distinct_angles) {
  RangeBoundary b;
  b.scale = x.frobenius_norm();
  b.angles = distinct_angles;
  for (auto& [theta, s] : st.samples) {
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      b.theta.push_back(theta);
      b.support.push_back(s.support);
      b.points.push_back(s.points[i]);
      b.witnesses.push_back(s.witnesses[i]);
    }
  }
  b.hull = convex_hull(b.points);
  b.hull_source.resize(b.hull.size());
  for (std::size_t v = 0; v < b.hull.size(); ++v) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < b.points.size(); ++i) {
      double d = std::abs(b.points[i] - b.hull[v]);
      if (d < best) {
        best = d;
        b.hull_source[v] = static_cast<int>(i);
      }
    }
  }
  return b;
}

}  // namespace

RangeBoundary numerical_range_boundary(const ComplexMatrix& x, int n_angles) {
  if (n_angles < 3) throw InvalidArgument("numerical range sweep needs at least 3 angles");

  std::vector<double> thetas(n_angles);
  for (int i = 0; i < n_angles; ++i) thetas[i] = kTau * i / n_angles;
  auto samples = kernels::support_sweep(x, thetas);

  SweepState st;
  for (auto& s : samples) st.samples.emplace(s.theta, std::move(s));

  // adaptive bisection of angle gaps whose boundary points are far apart
  double gap_limit = x.frobenius_norm() / 64.0;
  double min_angle = kTau / 8192.0;
  int budget = 3 * n_angles;
  while (budget > 0) {
    std::vector<double> splits;
    const auto& m = st.samples;
    for (auto it = m.begin(); it != m.end(); ++it) {
      auto next = std::next(it);
      double t0 = it->first;
      double t1 = (next == m.end()) ? m.begin()->first + kTau : next->first;
      const auto& s0 = it->second;
      const auto& s1 = (next == m.end()) ? m.begin()->second : next->second;
      if (t1 - t0 <= min_angle) continue;
      if (std::abs(s0.points.back() - s1.points.front()) > gap_limit)
        splits.push_back(0.5 * (t0 + t1));
    }
    if (splits.empty()) break;
    if (static_cast<int>(splits.size()) > budget) splits.resize(budget);
    budget -= static_cast<int>(splits.size());
    auto extra = kernels::support_sweep(x, splits);
    for (auto& s : extra) st.samples.emplace(s.theta, std::move(s));
  }
  return assemble(x, st, static_cast<int>(st.samples.size()));
}

Membership contains(const RangeBoundary& boundary, Complex z, double tol) {
  if (boundary.angles < 16)
    throw InvalidArgument("membership test needs a boundary from at least 16 angles");
  double area = polygon_area(boundary.hull);
  if (area < tol * tol) {
    // segment test path
    Complex a = boundary.hull.front();
    Complex b = a;
    double best = 0.0;
    for (auto p : boundary.hull)
      for (auto q : boundary.hull)
        if (std::abs(p - q) > best) {
          best = std::abs(p - q);
          a = p;
          b = q;
        }
    if (segment_distance(a, b, z) <= tol) return Membership::boundary;
    throw DegenerateBoundary("zero-area numerical range and query off its segment");
  }
  double sd = signed_distance(boundary.hull, z);
  if (std::abs(sd) <= tol) return Membership::boundary;
  return sd > 0 ? Membership::inside : Membership::outside;
}

// --------------------------------------------------------------------------
// attainment

namespace {

// minimize |<c|Y|c> - target| over unit c = (cos t, e^{i phi} sin t) by coarse
// scan plus shrinking-window refinement; returns the best c
std::pair<double, std::array<Complex, 2>> solve_2x2(const Complex y[2][2], Complex target,
                                                    int coarse) {
  auto value = [&](double t, double phi) {
    double ct = std::cos(t), s = std::sin(t);
    Complex e = std::polar(1.0, phi);
    // <c|Y|c> with c = (ct, e s)
    return ct * ct * y[0][0] + s * s * y[1][1] + ct * s * (e * y[0][1] + std::conj(e) * y[1][0]);
  };
  double bt = 0.0, bp = 0.0, best = std::abs(value(0.0, 0.0) - target);
  for (int i = 0; i <= coarse; ++i) {
    double t = (0.5 * kTau / 2.0) * i / coarse;  // [0, pi/2]
    for (int j = 0; j < coarse; ++j) {
      double phi = kTau * j / coarse;
      double d = std::abs(value(t, phi) - target);
      if (d < best) {
        best = d;
        bt = t;
        bp = phi;
      }
    }
  }
  double wt = (0.5 * kTau / 2.0) / coarse, wp = kTau / coarse;
  for (int round = 0; round < 60; ++round) {
    double nbt = bt, nbp = bp;
    for (int i = -6; i <= 6; ++i)
      for (int j = -6; j <= 6; ++j) {
        double t = bt + wt * i / 6.0;
        double phi = bp + wp * j / 6.0;
        double d = std::abs(value(t, phi) - target);
        if (d < best) {
          best = d;
          nbt = t;
          nbp = phi;
        }
      }
    bt = nbt;
    bp = nbp;
    wt *= 0.5;
    wp *= 0.5;
    if (wt < 1e-17 && wp < 1e-17) break;
  }
  return {best, {std::cos(bt), std::polar(1.0, bp) * std::sin(bt)}};
}

}  // namespace

bool attain_in_span(const ComplexMatrix& x, const std::vector<Complex>& u,
                    const std::vector<Complex>& w, Complex target, std::vector<Complex>& out) {
  int n = x.size();
  std::vector<Complex> e1 = u;
  double n1 = vector_norm(e1);
  for (auto& c : e1) c /= n1;
  std::vector<Complex> e2 = w;
  Complex ov = inner_product(e1, e2);
  for (int k = 0; k < n; ++k) e2[k] -= ov * e1[k];
  double n2 = vector_norm(e2);
  if (n2 < 1e-9) {
    // span collapsed to a line; only the single Rayleigh value is reachable
    Complex zu = rayleigh_quotient(x, e1);
    if (std::abs(zu - target) <= 1e-8 * (1.0 + x.frobenius_norm())) {
      out = e1;
      fix_phase(out);
      return true;
    }
    return false;
  }
  for (auto& c : e2) c /= n2;

  Complex y[2][2];
  auto xe1 = x.apply(e1);
  auto xe2 = x.apply(e2);
  y[0][0] = inner_product(e1, xe1);
  y[0][1] = inner_product(e1, xe2);
  y[1][0] = inner_product(e2, xe1);
  y[1][1] = inner_product(e2, xe2);

  double tol = 1e-8 * (1.0 + x.frobenius_norm());
  auto [dist, c] = solve_2x2(y, target, 96);
  if (dist > tol) {
    auto retry = solve_2x2(y, target, 512);
    dist = retry.first;
    c = retry.second;
    if (dist > tol) return false;
  }
  out.assign(n, 0.0);
  for (int k = 0; k < n; ++k) out[k] = c[0] * e1[k] + c[1] * e2[k];
  double nrm = vector_norm(out);
  for (auto& v : out) v /= nrm;
  fix_phase(out);
  return true;
}

std::vector<Complex> attain_value(const ComplexMatrix& x, Complex z) {
  RangeBoundary b = numerical_range_boundary(x, 256);
  double scale = 1.0 + x.frobenius_norm();
  double tol_in = 1e-9 * scale;

  Membership verdict;
  try {
    verdict = contains(b, z, tol_in);
  } catch (const DegenerateBoundary&) {
    throw ValueOutsideRange("value lies off the degenerate numerical range segment");
  }
  if (verdict == Membership::outside)
    throw ValueOutsideRange("value lies outside the numerical range");

  // direct hit on a sweep point
  std::size_t nearest = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < b.points.size(); ++i) {
    double d = std::abs(b.points[i] - z);
    if (d < best) {
      best = d;
      nearest = i;
    }
  }
  if (best <= 1e-10 * scale) return b.witnesses[nearest];

  double area = polygon_area(b.hull);
  std::vector<Complex> v;

  if (area < tol_in * tol_in) {
    // segment: attain inside the span of the two extreme witnesses
    std::size_t ia = 0, ib = 0;
    double far = -1.0;
    for (std::size_t i = 0; i < b.points.size(); ++i)
      for (std::size_t j = i; j < b.points.size(); ++j)
        if (std::abs(b.points[i] - b.points[j]) > far) {
          far = std::abs(b.points[i] - b.points[j]);
          ia = i;
          ib = j;
        }
    if (attain_in_span(x, b.witnesses[ia], b.witnesses[ib], z, v)) return v;
    throw AttainFailure("segment attainment failed");
  }

  int nv = static_cast<int>(b.hull.size());
  // on-edge queries reduce to a single two-dimensional solve
  for (int i = 0; i < nv; ++i) {
    Complex p = b.hull[i], q = b.hull[(i + 1) % nv];
    if (segment_distance(p, q, z) <= tol_in) {
      if (attain_in_span(x, b.witnesses[b.hull_source[i]],
                         b.witnesses[b.hull_source[(i + 1) % nv]], z, v))
        return v;
    }
  }

  // interior: fan triangles (0, i, i+1); line from the apex value through z
  // meets the opposite chord inside the hull
  const auto& apex_w = b.witnesses[b.hull_source[0]];
  Complex za = b.points[b.hull_source[0]];
  for (int i = 1; i + 1 < nv; ++i) {
    Complex zu = b.points[b.hull_source[i]];
    Complex zw = b.points[b.hull_source[i + 1]];
    // solve za + t (z - za) = zu + s (zw - zu)
    double a11 = (z - za).real(), a12 = -(zw - zu).real();
    double a21 = (z - za).imag(), a22 = -(zw - zu).imag();
    double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-30) continue;
    double rhs1 = (zu - za).real(), rhs2 = (zu - za).imag();
    double t = (rhs1 * a22 - a12 * rhs2) / det;
    double s = (a11 * rhs2 - rhs1 * a21) / det;
    if (s < -1e-12 || s > 1.0 + 1e-12 || t < 1.0 - 1e-9) continue;
    Complex z1 = zu + std::min(1.0, std::max(0.0, s)) * (zw - zu);
    std::vector<Complex> v1;
    if (!attain_in_span(x, b.witnesses[b.hull_source[i]], b.witnesses[b.hull_source[i + 1]], z1,
                        v1))
      continue;
    if (attain_in_span(x, apex_w, v1, z, v)) return v;
  }
  // fallback: try every chord pair through nearest boundary witnesses
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      Complex zu = b.points[b.hull_source[i]];
      Complex zw = b.points[b.hull_source[j]];
      if (segment_distance(zu, zw, z) > 0.05 * scale) continue;
      if (attain_in_span(x, b.witnesses[b.hull_source[i]], b.witnesses[b.hull_source[j]], z, v))
        return v;
    }
  throw AttainFailure("triangle reduction did not converge to the requested value");
}

std::vector<Complex> support_polygon(const RangeBoundary& boundary) {
  // dedupe angles (facets repeat theta)
  std::vector<std::pair<double, double>> lines;  // (theta, support)
  for (std::size_t i = 0; i < boundary.theta.size(); ++i)
    if (lines.empty() || boundary.theta[i] != lines.back().first)
      lines.emplace_back(boundary.theta[i], boundary.support[i]);
  int n = static_cast<int>(lines.size());
  std::vector<Complex> verts;
  double tol = 1e-6 * (1.0 + boundary.scale);
  for (int i = 0; i < n; ++i) {
    auto [t1, s1] = lines[i];
    auto [t2, s2] = lines[(i + 1) % n];
    double det = std::cos(t1) * std::sin(t2) - std::sin(t1) * std::cos(t2);
    if (std::abs(det) < 1e-14) continue;
    double px = (s1 * std::sin(t2) - s2 * std::sin(t1)) / det;
    double py = (std::cos(t1) * s2 - std::cos(t2) * s1) / det;
    Complex p(px, py);
    bool ok = true;
    for (auto [t, s] : lines)
      if (std::cos(t) * px + std::sin(t) * py > s + tol) {
        ok = false;
        break;
      }
    if (ok) verts.push_back(p);
  }
  return convex_hull(verts);
}

double numerical_radius_upper(const RangeBoundary& boundary) {
  auto poly = support_polygon(boundary);
  double r = 0.0;
  for (auto p : poly) r = std::max(r, std::abs(p));
  if (poly.empty())
    for (auto p : boundary.points) r = std::max(r, std::abs(p));
  return r;
}

}  // namespace prodrange
