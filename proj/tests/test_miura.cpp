#include "a22/harness.hpp"
#include "a22/sampling.hpp"

#include <doctest.h>

using namespace a22;

namespace {

const QPoly X = QPoly::x();
QPoly lin(const Rat& c) { return QPoly::linear(c); }
QPoly one() { return QPoly::constant(Rat(1)); }
QRatFunc k(long v) { return QRatFunc::constant(Rat(v)); }
QRatFunc pole(const Rat& c, long coeff = 1) { return QRatFunc(QPoly::constant(Rat(coeff)), lin(c)); }
QRatFunc pole_pow(const Rat& c, int p, long coeff) { return QRatFunc(QPoly::constant(Rat(coeff)), lin(c).pow(p)); }

// Closed forms of the Miura maps and their derivatives on A₂⁽²⁾ opers,
// written out independently of the product expansion.
DiffOp3 m0_closed(const QRatFunc& v) {
  const QRatFunc vp = v.derivative();
  return {-(vp * Rat(2) + v * v), -(vp.derivative() + v * vp)};
}
DiffOp3 m1_closed(const QRatFunc& v) { return {v.derivative() - v * v, QRatFunc()}; }
DiffOp3 dm0_closed(const QRatFunc& v, const QRatFunc& x) {
  const QRatFunc xp = x.derivative();
  return {-(xp * Rat(2) + v * x * Rat(2)), -(xp.derivative() + v * xp + v.derivative() * x)};
}
DiffOp3 dm1_closed(const QRatFunc& v, const QRatFunc& x) { return {x.derivative() - v * x * Rat(2), QRatFunc()}; }

}  // namespace

TEST_CASE("miura_from_pair examples") {
  const Rat c = frac(3, 2);
  CHECK(miura_from_pair(QPair{}).v.is_zero());
  CHECK(miura_from_pair(QPair{lin(c), one()}).v == -pole(c));
  CHECK(miura_from_pair(QPair{one(), lin(c)}).v == pole(c, 2));
}

TEST_CASE("miura_from_trace examples") {
  const Rat c = frac(-7, 3);
  CHECK(miura_from_trace(generate_multistep(BasicSequence::parse("0"), std::vector<Rat>{c})).v == -pole(c));
  CHECK(miura_from_trace(generate_multistep(BasicSequence::parse("1"), std::vector<Rat>{c})).v == pole(c, 2));
  const QTrace t = generate_multistep(BasicSequence::parse("0,1"), std::vector<Rat>{frac(1, 2), Rat(4)});
  CHECK(miura_from_trace(t) == miura_from_pair(t.final_pair()));
}

TEST_CASE("alpha_pairing examples") {
  const Rat c(5);
  CHECK(alpha_pairing(0, QMiura{}).is_zero());
  const QMiura L = miura_from_pair(QPair{lin(c), one()});
  CHECK(alpha_pairing(0, L) == -pole(c, 2));
  CHECK(alpha_pairing(0, L) == log_derivative(lin(c).pow(2)) * Rat(-1));
  CHECK(alpha_pairing(1, L) == pole(c));
}

TEST_CASE("ricatti_check examples") {
  const Rat c(2);
  CHECK(ricatti_check(QMiura{}, pole(c), 0));
  CHECK(ricatti_check(QMiura{pole(c, 3)}, QRatFunc(), 1));
  CHECK(ricatti_check(QMiura{}, QRatFunc(one(), X), 1));
  CHECK_FALSE(ricatti_check(QMiura{}, pole(c, 2), 0));
}

TEST_CASE("gauge_step examples") {
  const Rat c = frac(1, 3);
  CHECK(gauge_step(QMiura{}, pole(c), 0).v == -pole(c));
  CHECK(gauge_step(QMiura{pole(c)}, QRatFunc(), 1) == QMiura{pole(c)});
  CHECK_THROWS_AS(gauge_step(QMiura{}, pole(c, 2), 0), RicattiViolation);
  const QTrace t = generate_multistep(BasicSequence::parse("1,0,1"), std::vector<Rat>{Rat(1), Rat(-2), frac(3, 4)});
  QMiura L;
  for (int l = 0; l < t.length(); ++l) L = gauge_step(L, t.gs[static_cast<std::size_t>(l)], t.J[l]);
  CHECK(L == miura_from_trace(t));
}

TEST_CASE("embed_a1 examples") {
  const Rat c(4);
  CHECK(embed_a1(QMiura{}) == MiuraOperA1{});
  CHECK(embed_a1(QMiura{-pole(c)}) == MiuraOperA1{-pole(c), QRatFunc(), pole(c)});
  const QMiura L = miura_from_trace(generate_multistep(BasicSequence::parse("1"), std::vector<Rat>{c}));
  CHECK(embed_a1(L) == MiuraOperA1{pole(c, 2), QRatFunc(), pole(c, -2)});
}

TEST_CASE("miura_map examples") {
  const Rat c = frac(-3, 5);
  CHECK(miura_map(0, MiuraOperA1{}) == DiffOp3{});
  const QMiura L{-pole(c)};
  CHECK(miura_map(1, embed_a1(L)) == DiffOp3{});
  CHECK(miura_map(0, embed_a1(L)) == DiffOp3{pole_pow(c, 2, -3), pole_pow(c, 3, 3)});
  CHECK_THROWS(miura_map(0, MiuraOperA1{k(1), k(0), k(0)}));
  CHECK_THROWS(miura_map(3, MiuraOperA1{}));
}

TEST_CASE("property: Miura maps agree with their closed forms") {
  RatSampler s(21);
  for (int trial = 0; trial < 20; ++trial) {
    const QRatFunc v = random_ratfunc(s, 2, 2);
    const QRatFunc x = random_ratfunc(s, 2, 2);
    const QMiura L{v};
    CHECK(miura_map(0, embed_a1(L)) == m0_closed(v));
    CHECK(miura_map(1, embed_a1(L)) == m1_closed(v));
    CHECK(d_miura_map(0, L, x) == dm0_closed(v, x));
    CHECK(d_miura_map(1, L, x) == dm1_closed(v, x));
  }
}

TEST_CASE("property: derivative of the general Miura map is its linear term") {
  // m_i(V + tX) is a cubic polynomial in t, so its t-derivative at 0 is
  // (8(f(1) − f(−1)) − (f(2) − f(−2)))/12 exactly.
  RatSampler s(22);
  for (int trial = 0; trial < 10; ++trial) {
    const QRatFunc v1 = random_ratfunc(s, 2, 1), v2 = random_ratfunc(s, 2, 1);
    const QRatFunc x1 = random_ratfunc(s, 1, 1), x2 = random_ratfunc(s, 1, 1);
    const MiuraOperA1 L{v1, v2, -(v1 + v2)};
    const MiuraOperA1 T{x1, x2, -(x1 + x2)};
    for (int i = 0; i < 3; ++i) {
      auto at = [&](long t) {
        const Rat q(t);
        return miura_map(i, MiuraOperA1{v1 + x1 * q, v2 + x2 * q, -(v1 + v2) - (x1 + x2) * q});
      };
      const DiffOp3 p1 = at(1), m1 = at(-1), p2 = at(2), m2 = at(-2);
      auto slope = [](const QRatFunc& f1, const QRatFunc& fm1, const QRatFunc& f2, const QRatFunc& fm2) {
        return ((f1 - fm1) * Rat(8) - (f2 - fm2)) * frac(1, 12);
      };
      const DiffOp3 d = d_miura_map_a1(i, L, T);
      CHECK(d.u1 == slope(p1.u1, m1.u1, p2.u1, m2.u1));
      CHECK(d.u0 == slope(p1.u0, m1.u0, p2.u0, m2.u0));
    }
  }
}

TEST_CASE("property: opers, Ricatti equations, kernels and gauge collapse on traces") {
  RatSampler s(23);
  for (int first = 0; first < 2; ++first)
    for (int m = 1; m <= 4; ++m) {
      const BasicSequence J = BasicSequence::alternating(first, m);
      for (int sample = 0; sample < 2; ++sample) {
        const QTrace t = sample_trace(J, s);
        CHECK(check_opers(t).empty());
        CHECK(check_kernel(t.final_pair()).empty());
        const std::vector<Rat> c_tilde(t.c.begin(), t.c.end() - 1);
        CHECK(check_gauge_collapse(J, c_tilde, t.c.back(), t.c.back() + frac(5, 3)) == "");
      }
    }
}

TEST_CASE("property: kernels of dm0 and dm1 are one-dimensional") {
  // The kernel of dm₁ is X' = 2vX, solved by y₁⁴/y₀²; any other tangent
  // with X'/X ≠ 2v is not in it. Check a multiple is, a perturbation is not.
  RatSampler s(24);
  const QTrace t = sample_trace(BasicSequence::parse("0,1,0"), s);
  const QPair& p = t.final_pair();
  const QMiura L = miura_from_pair(p);
  const QRatFunc k0(p.y0, p.y1 * p.y1), k1(p.y1.pow(4), p.y0 * p.y0);
  CHECK(d_miura_map(0, L, k0 * frac(-7, 3)) == DiffOp3{});
  CHECK(d_miura_map(1, L, k1 * Rat(5)) == DiffOp3{});
  CHECK_FALSE(d_miura_map(0, L, k0 + k(1)) == DiffOp3{});
  CHECK_FALSE(d_miura_map(1, L, k1 * QRatFunc(X)) == DiffOp3{});
}

TEST_CASE("potential matrix is v·h0") {
  const QRatFunc v = pole(Rat(2), 3);
  CHECK(potential_matrix(QMiura{v}) == LaurentMat::diagonal({v, QRatFunc(), -v}));
}
