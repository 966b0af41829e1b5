#include "a22/roots.hpp"

#include "a22/generation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace a22 {

namespace {

long double to_ld(const Rat& q) {
  // mpq → double loses nothing we care about at these magnitudes; the
  // quotient is formed in long double to keep the extra bits.
  return static_cast<long double>(q.get_num().get_d()) / static_cast<long double>(q.get_den().get_d());
}

Complex horner(const std::vector<long double>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

RootResult durand_kerner(const QPoly& p, double tolerance, int max_iterations) {
  if (!p.is_monic()) throw std::invalid_argument("durand_kerner: polynomial must be monic");
  const int n = p.degree();
  RootResult out;
  if (n <= 0) return out;

  std::vector<long double> c;
  c.reserve(p.size());
  long double bound = 0;
  for (const auto& q : p.coeffs()) {
    c.push_back(to_ld(q));
    bound = std::max(bound, std::fabs(c.back()));
  }
  const long double radius = 1 + bound;
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    long double theta = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
  }

  auto sweep = [&]() {
    long double worst = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      Complex denom = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) denom *= z[k] - z[j];
      Complex step = horner(c, z[k]) / denom;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
    }
    return worst;
  };

  for (int it = 1; it <= max_iterations; ++it) {
    out.last_step = sweep();
    out.iterations = it;
    if (!std::isfinite(out.last_step)) break;
    if (out.last_step < tolerance) {
      // Quadratic convergence: two more sweeps reach working precision.
      sweep();
      sweep();
      out.roots = z;
      return out;
    }
  }
  std::ostringstream msg;
  msg << "Durand-Kerner did not converge: degree " << n << ", " << out.iterations
      << " iterations, last relative step " << static_cast<double>(out.last_step);
  throw RootFinderError(msg.str());
}

}  // namespace a22
