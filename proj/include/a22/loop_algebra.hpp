#pragma once

// The λ-realization of the affine algebra of type A₂⁽¹⁾ as sl₃[λ, λ⁻¹], with
// the twisted A₂⁽²⁾ sitting inside it. Matrix entries are Laurent
// polynomials in λ whose coefficients are rational functions of x.
//
// Rows and columns are 0-based in code; e_{k,l} in comments is 1-based.

#include "a22/ratfunc.hpp"

#include <array>
#include <map>
#include <vector>

namespace a22 {

/// Cartan data of type A₂⁽²⁾ and the diagonal images of h₀, h₁.
struct CartanData {
  static constexpr std::array<std::array<int, 2>, 2> a{{{2, -1}, {-4, 2}}};
  static constexpr std::array<int, 3> h0_diag{1, 0, -1};
  static constexpr std::array<int, 3> h1_diag{-2, 0, 2};

  /// ⟨α_j, h_i⟩ = a_{i,j}
  static constexpr int pairing(int alpha, int h) { return a[static_cast<std::size_t>(h)][static_cast<std::size_t>(alpha)]; }
  /// h_j as a multiple of h₀ (h₁ = −2h₀).
  static constexpr int h_in_h0(int j) { return j == 0 ? 1 : -2; }
};

using LaurentPoly = std::map<int, QRatFunc>;

/// Traceless diagonal matrix diag(d1, −d1−d3, d3).
struct DiagTraceless {
  QRatFunc d1;
  QRatFunc d3;
  QRatFunc d2() const { return -(d1 + d3); }
  friend bool operator==(const DiagTraceless&, const DiagTraceless&) = default;
};

class LaurentMat {
 public:
  LaurentMat() = default;

  static LaurentMat identity();
  static LaurentMat diagonal(const std::array<QRatFunc, 3>& d);
  static LaurentMat unit(int row, int col, int lambda_exp, QRatFunc coeff);

  const LaurentPoly& entry(int row, int col) const { return e_[idx(row)][idx(col)]; }
  QRatFunc coeff(int row, int col, int lambda_exp) const;
  void add_term(int row, int col, int lambda_exp, const QRatFunc& coeff);

  bool is_zero() const;
  /// Smallest and largest λ-exponents present (0, 0 for the zero matrix).
  std::pair<int, int> lambda_range() const;

  LaurentMat derivative() const;  // entrywise d/dx

  LaurentMat operator-() const;
  friend LaurentMat operator+(const LaurentMat& a, const LaurentMat& b);
  friend LaurentMat operator-(const LaurentMat& a, const LaurentMat& b);
  friend LaurentMat operator*(const LaurentMat& a, const LaurentMat& b);
  friend LaurentMat operator*(const QRatFunc& s, const LaurentMat& a);
  friend bool operator==(const LaurentMat& a, const LaurentMat& b) { return a.e_ == b.e_; }
  friend bool operator!=(const LaurentMat& a, const LaurentMat& b) { return !(a == b); }

  /// Calls f(row, col, lambda_exp, coeff) for every nonzero term.
  template <class F>
  void for_each_term(F&& f) const {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (const auto& [m, c] : e_[idx(i)][idx(j)]) f(i, j, m, c);
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
  std::array<std::array<LaurentPoly, 3>, 3> e_{};
};

/// Principal grading of λ^m e_{k,l}: 3m + k − l.
constexpr int grade_of(int row, int col, int lambda_exp) { return 3 * lambda_exp + row - col; }

/// (Λ⁽¹⁾)^r with Λ⁽¹⁾ = e₂₁ + e₃₂ + λe₁₃; any integer r.
LaurentMat lambda_power(int r);

/// Λ_r of the A₂⁽²⁾ hierarchy; r must be ≡ 1, 5 (mod 6).
LaurentMat lambda_r(int r);
bool admissible_flow_index(int r);

/// exp(g f_j) with f₀ ↦ λ⁻¹e₃₁ and f₁ ↦ 2e₁₂ + 2e₂₃.
LaurentMat exp_dressing(const QRatFunc& g, int j);

LaurentMat grade_project(const LaurentMat& m, int d);
/// The λ⁰ diagonal of a degree-0 matrix; throws if it is not traceless.
DiagTraceless as_diag_traceless(const LaurentMat& degree_zero);

/// P·M·Pinv, after checking P·Pinv = 1.
LaurentMat conjugate(const LaurentMat& p, const LaurentMat& m, const LaurentMat& pinv);

/// The potential of P(∂ + M)P⁻¹ − ∂, i.e. P·M·Pinv + P·Pinv′.
LaurentMat conjugate_oper(const LaurentMat& p, const LaurentMat& m, const LaurentMat& pinv);

/// Diagonal coefficients b_j with M = Σ b_j (Λ⁽¹⁾)^j.
std::map<int, std::array<QRatFunc, 3>> lambda_decompose(const LaurentMat& m);
LaurentMat lambda_reconstruct(const std::map<int, std::array<QRatFunc, 3>>& parts);

}  // namespace a22
