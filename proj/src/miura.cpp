#include "a22/miura.hpp"

namespace a22 {

namespace {

// (∂−a)(∂−b)(∂−c) = ∂³ + (p−a)∂² + (p′+q−ap)∂ + (q′−aq) with
// p = −(b+c), q = bc − c′.
struct Factors {
  QRatFunc a, b, c;
};

Factors ordered_factors(int i, const MiuraOperA1& L) {
  switch (i) {
    case 0:
      return {L.v3, L.v2, L.v1};
    case 1:
      return {L.v1, L.v3, L.v2};
    case 2:
      return {L.v2, L.v1, L.v3};
    default:
      throw std::invalid_argument("miura map index must be 0, 1 or 2");
  }
}

}  // namespace

LaurentMat potential_matrix(const QMiura& L) {
  return LaurentMat::diagonal({L.v, QRatFunc(), -L.v});
}

MiuraOperA1 embed_a1(const QMiura& L) { return {L.v, QRatFunc(), -L.v}; }

DiffOp3 miura_map(int i, const MiuraOperA1& L) {
  const auto [a, b, c] = ordered_factors(i, L);
  const QRatFunc p = -(b + c);
  const QRatFunc q = b * c - c.derivative();
  if (!(p - a).is_zero()) throw std::logic_error("miura_map: nonzero second-order coefficient (trace of V is not zero)");
  return {p.derivative() + q - a * p, q.derivative() - a * q};
}

DiffOp3 d_miura_map_a1(int i, const MiuraOperA1& L, const MiuraOperA1& tangent) {
  const auto [a, b, c] = ordered_factors(i, L);
  const auto [da, db, dc] = ordered_factors(i, tangent);
  const QRatFunc p = -(b + c);
  const QRatFunc q = b * c - c.derivative();
  const QRatFunc dp = -(db + dc);
  const QRatFunc dq = db * c + b * dc - dc.derivative();
  return {dp.derivative() + dq - da * p - a * dp, dq.derivative() - da * q - a * dq};
}

DiffOp3 d_miura_map(int i, const QMiura& L, const QRatFunc& X) {
  return d_miura_map_a1(i, embed_a1(L), MiuraOperA1{X, QRatFunc(), -X});
}

}  // namespace a22
