#pragma once

#include <vector>

#include "prodrange/complex_matrix.hpp"
#include "prodrange/kernels.hpp"
#include "prodrange/planar_region.hpp"

namespace prodrange {

// Support-function sweep of the numerical range W(X).  Boundary points are
// Rayleigh quotients of the sweep witnesses, so each one attains its support
// line; flat facets contribute both endpoints at the same angle.
struct RangeBoundary {
  std::vector<double> theta;     // ascending, duplicated on facets
  std::vector<double> support;   // max eigenvalue of Re(e^{-i theta} X)
  std::vector<Complex> points;   // <v|X|v>
  std::vector<std::vector<Complex>> witnesses;
  double scale = 0.0;            // ||X||_F at sweep time
  int angles = 0;                // distinct sweep angles used

  std::vector<Complex> hull;     // CCW convex polygon of the points
  std::vector<int> hull_source;  // index into points/witnesses per hull vertex
};

enum class Membership { inside, boundary, outside };

// Uniform sweep of n_angles support directions plus adaptive bisection where
// adjacent boundary points are farther apart than ||X||_F / 64.
RangeBoundary numerical_range_boundary(const ComplexMatrix& x, int n_angles = 256);

// Point-in-convex-polygon with a signed-distance tolerance.  A boundary whose
// polygon area is below tol^2 degenerates to the segment test; off-segment
// queries raise DegenerateBoundary.
Membership contains(const RangeBoundary& boundary, Complex z, double tol);

// Unit vector v with |<v|X|v> - z| <= 1e-8 (1 + ||X||).  Constructive
// Toeplitz-Hausdorff: bracket z in a triangle of sweep witnesses, then reduce
// twice through two-dimensional compressions, whose numerical range is an
// ellipse solvable by direct search.
std::vector<Complex> attain_value(const ComplexMatrix& x, Complex z);

// Outer polygon cut out by the sweep's support half-planes; contains W(X).
std::vector<Complex> support_polygon(const RangeBoundary& boundary);

// max |z| over the support polygon: a certified upper bound on the numerical
// radius given eigensolver accuracy.
double numerical_radius_upper(const RangeBoundary& boundary);

// Attainment inside span{u, w}: returns a unit vector whose Rayleigh quotient
// hits `target` if it lies in the compressed 2x2 numerical range.
bool attain_in_span(const ComplexMatrix& x, const std::vector<Complex>& u,
                    const std::vector<Complex>& w, Complex target, std::vector<Complex>& out);

}  // namespace prodrange
