#pragma once

// Generation of pairs of polynomials representing critical points of the
// two-colour master function, starting from (1, 1) and applying Wronskian
// steps along alternating direction words.

#include "a22/linsolve.hpp"
#include "a22/ratfunc.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace a22 {

/// Raised when a Wronskian equation has no polynomial solution.
class InfertileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DegreeVector {
  long k0 = 0;
  long k1 = 0;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// (4k₁+1−k₀, k₁) for j = 0; (k₀, k₀+1−k₁) for j = 1.
DegreeVector degree_transform(DegreeVector k, int j);

/// An alternating word over {0, 1}: a prefix of 0101… or 1010….
class BasicSequence {
 public:
  BasicSequence() = default;
  /// Throws std::invalid_argument for entries outside {0,1} or repeats.
  explicit BasicSequence(std::vector<int> entries);
  /// Parses "0,1,0"; the empty string is the empty word.
  static BasicSequence parse(std::string_view text);
  /// The alternating word of length m starting with `first`.
  static BasicSequence alternating(int first, int m);

  const std::vector<int>& entries() const { return j_; }
  int size() const { return static_cast<int>(j_.size()); }
  bool empty() const { return j_.empty(); }
  int operator[](int i) const { return j_[static_cast<std::size_t>(i)]; }
  int back() const { return j_.back(); }
  BasicSequence prefix(int len) const;
  std::string to_string() const;

  friend bool operator==(const BasicSequence&, const BasicSequence&) = default;

 private:
  std::vector<int> j_;
};

DegreeVector degree_vector(const BasicSequence& J);
/// k^∅, k^{J₁}, …, k^J.
std::vector<DegreeVector> degree_sequence(const BasicSequence& J);

template <CoeffRing R>
struct PolyPair {
  Poly<R> y0 = Poly<R>::constant(R(1));
  Poly<R> y1 = Poly<R>::constant(R(1));

  const Poly<R>& operator[](int j) const { return j == 0 ? y0 : y1; }
  Poly<R>& operator[](int j) { return j == 0 ? y0 : y1; }
  DegreeVector degrees() const { return {y0.degree(), y1.degree()}; }
  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

using QPair = PolyPair<Rat>;
using DPair = PolyPair<Dual>;

/// Right-hand side ∏_{i≠j} y_i^{−a_{i,j}} of the Wronskian equation in direction j.
template <CoeffRing R>
Poly<R> wronskian_rhs(const PolyPair<R>& p, int j) {
  return j == 0 ? p.y1.pow(4) : p.y0;
}

template <CoeffRing R>
struct WronskianSolution {
  R a;
  Poly<R> base;
};

/// Finds the monic y_base of degree target_degree whose x^zero_coeff_index
/// coefficient vanishes and Wr(y, y_base) = a·rhs. Returns nullopt when no
/// polynomial solution exists.
template <CoeffRing R>
std::optional<WronskianSolution<R>> wronskian_solve(const Poly<R>& y, const Poly<R>& rhs, int target_degree,
                                                     int zero_coeff_index) {
  const int d = y.degree();
  const int n = target_degree;
  if (y.is_zero() || rhs.is_zero()) throw std::invalid_argument("wronskian_solve: zero polynomial");
  if (n <= d) throw std::invalid_argument("wronskian_solve: generation is not degree increasing");
  if (zero_coeff_index < 0 || zero_coeff_index >= n)
    throw std::invalid_argument("wronskian_solve: zero coefficient index out of range");
  // deg Wr(y, x^n + …) = d + n − 1 with leading coefficient (n − d)·lc(y).
  if (rhs.degree() != d + n - 1) return std::nullopt;
  R a = R(n - d) * y.lead() * inverse(rhs.lead());

  const Poly<R> target = rhs * a - wronskian(y, Poly<R>::monomial(n));
  const int rows = d + n;
  std::vector<int> unknowns;
  for (int i = 0; i < n; ++i)
    if (i != zero_coeff_index) unknowns.push_back(i);

  Matrix<R> m(static_cast<std::size_t>(rows), std::vector<R>(unknowns.size(), R(0)));
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    Poly<R> w = wronskian(y, Poly<R>::monomial(unknowns[col]));
    for (int row = 0; row <= w.degree(); ++row) m[static_cast<std::size_t>(row)][col] = w.coeff(row);
  }
  std::vector<R> b(static_cast<std::size_t>(rows), R(0));
  for (int row = 0; row < rows; ++row) b[static_cast<std::size_t>(row)] = target.coeff(row);

  auto sol = solve_linear(std::move(m), std::move(b));
  if (!sol) return std::nullopt;
  std::vector<R> coeffs(static_cast<std::size_t>(n) + 1, R(0));
  coeffs.back() = R(1);
  for (std::size_t col = 0; col < unknowns.size(); ++col)
    coeffs[static_cast<std::size_t>(unknowns[col])] = (*sol)[col];
  return WronskianSolution<R>{std::move(a), Poly<R>(std::move(coeffs))};
}

template <CoeffRing R>
struct StepResult {
  PolyPair<R> pair;
  R a;            // Wr(y_j, y_{j,0}) = a · rhs
  Poly<R> base;   // y_{j,0}
};

/// One normalized generation step: y_j ↦ y_{j,0} + c·y_j.
template <CoeffRing R>
StepResult<R> generate_step(const PolyPair<R>& p, int j, const R& c) {
  if (j != 0 && j != 1) throw std::invalid_argument("generate_step: direction must be 0 or 1");
  if (!p.y0.is_monic() || !p.y1.is_monic()) throw std::invalid_argument("generate_step: pair is not monic");
  const DegreeVector k = p.degrees();
  const DegreeVector next = degree_transform(k, j);
  const long current = j == 0 ? k.k0 : k.k1;
  const long target = j == 0 ? next.k0 : next.k1;
  if (target <= current) throw std::invalid_argument("generate_step: direction is not degree increasing");

  auto sol = wronskian_solve(p[j], wronskian_rhs(p, j), static_cast<int>(target), static_cast<int>(current));
  if (!sol) throw InfertileError("pair is not fertile in direction " + std::to_string(j));
  StepResult<R> out{p, sol->a, sol->base};
  out.pair[j] = sol->base + p[j] * c;
  return out;
}

template <CoeffRing R>
struct GenerationTrace {
  BasicSequence J;
  std::vector<R> c;
  std::vector<PolyPair<R>> pairs;  // y^∅, Y^{J₁}(c₁), …, Y^J(c)
  std::vector<RatFunc<R>> gs;      // g₁ … g_m
  std::vector<R> a;                // normalization constant of each step

  const PolyPair<R>& final_pair() const { return pairs.back(); }
  int length() const { return J.size(); }
};

using QTrace = GenerationTrace<Rat>;
using DTrace = GenerationTrace<Dual>;

template <CoeffRing R>
GenerationTrace<R> generate_multistep(const BasicSequence& J, const std::vector<R>& c) {
  if (static_cast<int>(c.size()) != J.size())
    throw std::invalid_argument("generate_multistep: need one parameter per step");
  GenerationTrace<R> t{J, c, {PolyPair<R>{}}, {}, {}};
  for (int l = 0; l < J.size(); ++l) {
    const int j = J[l];
    const PolyPair<R>& prev = t.pairs.back();
    StepResult<R> step = generate_step(prev, j, c[static_cast<std::size_t>(l)]);
    t.gs.push_back(log_derivative(step.pair[j]) - log_derivative(prev[j]));
    t.a.push_back(std::move(step.a));
    t.pairs.push_back(std::move(step.pair));
  }
  return t;
}

/// Square-free components with no common root.
bool is_generic(const QPair& p);
/// Both Wronskian equations Wr(y_j, ỹ_j) = ∏ y_i^{−a_{i,j}} have polynomial solutions.
bool is_fertile(const QPair& p);

struct BetheReport {
  double max_residual = 0.0;
  bool passed = false;
  int iterations = 0;  // root-finder iterations, summed over both polynomials
};

/// Raised when the numeric root finder fails to converge.
class RootFinderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates the critical-point equations at numerically computed roots.
BetheReport bethe_residuals(const QPair& p, double tolerance);

}  // namespace a22
