#pragma once

// Miura opers ∂ + Λ + v·h₀ of type A₂⁽²⁾, their deformations, and the three
// Miura maps to scalar operators ∂³ + u₁∂ + u₀.

#include "a22/generation.hpp"
#include "a22/loop_algebra.hpp"

#include <stdexcept>

namespace a22 {

/// ∂ + Λ + v·h₀
template <CoeffRing R>
struct MiuraOper {
  RatFunc<R> v;
  friend bool operator==(const MiuraOper&, const MiuraOper&) = default;
};

using QMiura = MiuraOper<Rat>;

/// ∂ + Λ⁽¹⁾ + diag(v1, v2, v3) with v1 + v2 + v3 = 0.
struct MiuraOperA1 {
  QRatFunc v1, v2, v3;
  friend bool operator==(const MiuraOperA1&, const MiuraOperA1&) = default;
};

/// ∂³ + u₁∂ + u₀
struct DiffOp3 {
  QRatFunc u1, u0;
  friend bool operator==(const DiffOp3&, const DiffOp3&) = default;
};

/// Thrown when a Ricatti precondition fails.
class RicattiViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// v = ln′(y₁²/y₀)
template <CoeffRing R>
MiuraOper<R> miura_from_pair(const PolyPair<R>& p) {
  return {log_derivative(p.y1) * RatFunc<R>::constant(R(2)) - log_derivative(p.y0)};
}

/// v = −Σ g_ℓ · (h_{j_ℓ} in units of h₀)
template <CoeffRing R>
MiuraOper<R> miura_from_trace(const GenerationTrace<R>& t) {
  RatFunc<R> v;
  for (int l = 0; l < t.length(); ++l)
    v -= t.gs[static_cast<std::size_t>(l)] * RatFunc<R>::constant(R(CartanData::h_in_h0(t.J[l])));
  return {v};
}

/// ⟨α_j, v·h₀⟩
template <CoeffRing R>
RatFunc<R> alpha_pairing(int j, const MiuraOper<R>& L) {
  if (j != 0 && j != 1) throw std::invalid_argument("alpha_pairing: direction must be 0 or 1");
  return L.v * RatFunc<R>::constant(R(CartanData::pairing(j, 0)));
}

/// g′ − ⟨α_j, V⟩g + g²
template <CoeffRing R>
RatFunc<R> ricatti_defect(const MiuraOper<R>& L, const RatFunc<R>& g, int j) {
  return g.derivative() - alpha_pairing(j, L) * g + g * g;
}

template <CoeffRing R>
bool ricatti_check(const MiuraOper<R>& L, const RatFunc<R>& g, int j) {
  return ricatti_defect(L, g, j).is_zero();
}

/// exp(ad g f_j) applied to L, which is again a Miura oper when g solves the
/// Ricatti equation.
template <CoeffRing R>
MiuraOper<R> gauge_step(const MiuraOper<R>& L, const RatFunc<R>& g, int j) {
  if (!ricatti_check(L, g, j)) throw RicattiViolation("gauge_step: g does not solve the Ricatti equation");
  return {L.v - g * RatFunc<R>::constant(R(CartanData::h_in_h0(j)))};
}

/// The potential v·h₀ as an sl₃[λ, λ⁻¹] matrix.
LaurentMat potential_matrix(const QMiura& L);

MiuraOperA1 embed_a1(const QMiura& L);

/// L₀ = (∂−v₃)(∂−v₂)(∂−v₁), L₁ = (∂−v₁)(∂−v₃)(∂−v₂), L₂ = (∂−v₂)(∂−v₁)(∂−v₃).
DiffOp3 miura_map(int i, const MiuraOperA1& L);

/// Linearization of miura_map at L in the diagonal direction (X1, X2, X3).
DiffOp3 d_miura_map_a1(int i, const MiuraOperA1& L, const MiuraOperA1& tangent);

/// Linearization of m_i restricted to A₂⁽²⁾ opers, in the direction X·h₀;
/// i ∈ {0, 1, 2}.
DiffOp3 d_miura_map(int i, const QMiura& L, const QRatFunc& X);

}  // namespace a22
