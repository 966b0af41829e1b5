#pragma once

// mKdV vector fields of type A₂⁽²⁾ evaluated on the generated families of
// Miura opers, the family tangents ∂μ/∂c_i, and the decomposition of the
// former in terms of the latter.

#include "a22/miura.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace a22 {

/// A tangent to the space of A₂⁽²⁾ Miura opers: x_component · h₀.
struct TangentVector {
  QRatFunc x_component;
  friend bool operator==(const TangentVector&, const TangentVector&) = default;
};

class ClosureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Dressing {
  LaurentMat p;
  LaurentMat pinv;
};

/// P = E(g_m, j_m)⋯E(g₁, j₁) and its inverse as the reversed product of
/// E(−g_ℓ, j_ℓ).
Dressing dressing_product(const QTrace& t);

/// −d/dx of the degree-0 part of P·Λ_r·P⁻¹, in the h₀ coordinate.
TangentVector mkdv_field(const QTrace& t, int r);

/// ∂μ^J/∂c_i for every i, computed exactly by dual-number generation.
std::vector<TangentVector> family_tangents(const BasicSequence& J, const std::vector<Rat>& c);

/// The last tangent in closed form: a·y₁⁴/y₀² (j_m = 0) or −2a·y₀/y₁² (j_m = 1),
/// with y_{j_m} taken after the last step and the other factor before it.
TangentVector last_tangent_closed_form(const QTrace& t);

struct FlowDecomposition {
  std::vector<Rat> gamma;
  bool residual_zero = false;
  /// On failure: the lowest power of x at which the cleared system is
  /// inconsistent.
  std::optional<int> witness_power;
};

/// Solves field = Σ γ_i tangent_i for rational γ after clearing denominators.
FlowDecomposition decompose_flow(const TangentVector& field, const std::vector<TangentVector>& tangents);

/// The constant γ with residual = γ·last, read off the leading Laurent
/// coefficients at x = ∞; throws if the two are not proportional.
Rat proportionality_constant(const TangentVector& residual, const TangentVector& last);

/// True where the field is known to vanish identically.
bool vanishing_threshold(const BasicSequence& J, int r);

struct FlowSample {
  BasicSequence J;
  std::vector<Rat> c;
  int r = 1;
  TangentVector field;
  std::vector<Rat> gamma;
  bool residual_zero = false;
};

FlowSample flow_sample(const BasicSequence& J, const std::vector<Rat>& c, int r);

}  // namespace a22
