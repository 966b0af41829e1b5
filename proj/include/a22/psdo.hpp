#pragma once

// Truncated formal pseudodifferential operators Σ a_i ∂^i with rational
// function coefficients, fractional powers of ∂³ + u₁∂ + u₀, the KdV flows,
// and the cross-check of mKdV against KdV through the Miura maps.

#include "a22/flows.hpp"
#include "a22/miura.hpp"

#include <limits>
#include <map>
#include <optional>
#include <utility>

namespace a22 {

class PsDO {
 public:
  /// Floor value marking an operator with no truncation (all omitted orders
  /// are exactly zero).
  static constexpr int kExact = std::numeric_limits<int>::min() / 4;

  PsDO() = default;
  explicit PsDO(std::map<int, QRatFunc> terms, int floor = kExact);

  /// ∂^order
  static PsDO d(int order, int floor = kExact);
  static PsDO scalar(const QRatFunc& u);
  static PsDO from(const DiffOp3& L);

  /// Coefficients at orders ≥ floor() are exact; lower orders are unknown.
  int floor() const { return floor_; }
  bool exact() const { return floor_ <= kExact; }
  /// Highest order with a nonzero coefficient; kExact for the zero operator.
  int top() const { return terms_.empty() ? kExact : terms_.rbegin()->first; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, QRatFunc>& terms() const { return terms_; }
  QRatFunc coeff(int order) const;

  /// Keeps orders ≥ 0; the result is an exact differential operator.
  PsDO plus() const;
  /// Drops all orders below f and raises the floor to f.
  PsDO truncated(int f) const;

  PsDO operator-() const;
  friend PsDO operator+(const PsDO& a, const PsDO& b);
  friend PsDO operator-(const PsDO& a, const PsDO& b);

  /// Coefficientwise equality at orders ≥ max of both floors.
  bool agrees_with(const PsDO& o) const;
  friend bool operator==(const PsDO& a, const PsDO& b) { return a.floor_ == b.floor_ && a.terms_ == b.terms_; }

 private:
  void add_term(int order, const QRatFunc& c);
  std::map<int, QRatFunc> terms_;
  int floor_ = kExact;
};

/// Composition a∘b. The result floor is the highest order above which both
/// inputs' truncations cannot reach, raised to `cap` when given. An exact
/// product that would be an infinite series requires `cap`.
PsDO psdo_mul(const PsDO& a, const PsDO& b, std::optional<int> cap = std::nullopt);

/// L^{1/3} = ∂ + a₀ + a₋₁∂⁻¹ + … + a_{1−depth}∂^{1−depth}; floor 1 − depth.
PsDO cube_root(const DiffOp3& L, int depth);

/// Truncation depth that makes every nonnegative order of L^{r/3} exact.
int default_depth(int r);

/// (L^{r/3})⁺ computed from cube_root(L, depth); r must not be divisible by 3.
PsDO frac_power_plus(const DiffOp3& L, int r, std::optional<int> depth = std::nullopt);

/// Recomputes (L^{r/3})⁺ at depth + 2 and compares.
bool depth_stable(const DiffOp3& L, int r, int depth);

/// [L, (L^{r/3})⁺] as (∂¹ coefficient, ∂⁰ coefficient).
std::pair<QRatFunc, QRatFunc> kdv_field(const DiffOp3& L, int r, std::optional<int> depth = std::nullopt);

/// Full commutator [L, (L^{r/3})⁺] as an operator (for order checks).
PsDO kdv_commutator(const DiffOp3& L, int r, std::optional<int> depth = std::nullopt);

class TruncationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ConsistencyResult {
  bool ok = false;
  DiffOp3 mkdv_side;  // dm_i applied to the mKdV field
  DiffOp3 kdv_side;   // KdV field at m_i(μ)
  /// 1 or 0: the ∂-order whose coefficients differ, when !ok.
  std::optional<int> witness_order;
};

/// Compares dm_i(∂μ/∂t_r) with [L_i, (L_i^{r/3})⁺] at μ = μ^J(c).
ConsistencyResult consistency_check(const QTrace& t, int r, int i, std::optional<int> depth = std::nullopt);

}  // namespace a22
