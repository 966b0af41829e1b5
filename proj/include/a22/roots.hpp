#pragma once

// Durand–Kerner simultaneous root iteration for monic polynomials with
// rational coefficients. Numeric; used only to cross-check critical points.

#include "a22/poly.hpp"

#include <complex>
#include <vector>

namespace a22 {

using Complex = std::complex<long double>;

struct RootResult {
  std::vector<Complex> roots;
  int iterations = 0;
  long double last_step = 0;  // largest relative correction of the final sweep
};

/// Starts from points on the circle of radius 1 + max|coeff| and iterates
/// until every relative correction drops below `tolerance`. Throws
/// RootFinderError after `max_iterations` sweeps.
RootResult durand_kerner(const QPoly& p, double tolerance = 1e-10, int max_iterations = 500);

}  // namespace a22
