#include "a22/linsolve.hpp"
#include "a22/ratfunc.hpp"
#include "a22/sampling.hpp"

#include <doctest.h>

using namespace a22;

namespace {

QPoly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(std::move(v));
}

const QPoly X = QPoly::x();

}  // namespace

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rat("6/4") == frac(3, 2));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(to_string(frac(3, 2)) == "3/2");
  CHECK(to_string(frac(-4, 2)) == "-2");
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("abc"));
}

TEST_CASE("wronskian examples") {
  CHECK(wronskian(P({1}), X) == P({1}));
  const QPoly f = P({1, 2, 3});
  CHECK(wronskian(f, f).is_zero());
  CHECK(wronskian(X, X * X) == X * X);
}

TEST_CASE("log_derivative examples") {
  CHECK(log_derivative(P({3, 1})) == QRatFunc(P({1}), P({3, 1})));
  CHECK(log_derivative(P({1})).is_zero());
  const QPoly sq = P({1, 1}).pow(2);
  CHECK(log_derivative(sq) == QRatFunc(P({2}), P({1, 1})));
  CHECK_THROWS(log_derivative(QPoly()));
}

TEST_CASE("laurent_at_infinity examples") {
  const Rat c = frac(5, 3);
  const QRatFunc f(P({1}), QPoly::linear(c));
  CHECK(laurent_at_infinity(f, 3) == std::vector<Rat>{1, -c, c * c});
  CHECK(laurent_at_infinity(QRatFunc(), 2) == std::vector<Rat>{0, 0});
  CHECK(laurent_at_infinity(QRatFunc(X, P({1, 0, 1})), 4) == std::vector<Rat>{1, 0, -1, 0});
}

TEST_CASE("solve_linear examples") {
  Matrix<Rat> id{{1, 0}, {0, 1}};
  CHECK(solve_linear(id, {Rat(3), frac(-1, 2)}) == std::vector<Rat>{3, frac(-1, 2)});
  CHECK_FALSE(solve_linear(Matrix<Rat>{{1, 1}, {2, 2}}, {Rat(1), Rat(3)}).has_value());
  CHECK(solve_linear(Matrix<Rat>{{2}}, {Rat(5)}) == std::vector<Rat>{frac(5, 2)});
}

TEST_CASE("polynomial division and gcd") {
  const QPoly a = P({1, 1}) * P({-2, 1}) * P({3, 1});
  const QPoly b = P({1, 1}) * P({5, 1});
  CHECK(gcd(a, b) == P({1, 1}));
  auto [q, r] = a.divmod(b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(to_string(P({5, 4, 1})) == "x^2 + 4*x + 5");
}

TEST_CASE("dual numbers differentiate exactly") {
  for (int k = -5; k <= 5; ++k) {
    const Rat c = frac(k, 3);
    const Dual d = Dual::variable(c);
    CHECK((d * d).eps() == 2 * c);
    if (k != 0) CHECK((Dual(1) / d).eps() == -1 / (c * c));
  }
  CHECK_THROWS_AS(Dual(1) / Dual(Rat(0), Rat(1)), DegenerateDivision);
}

TEST_CASE("dual rational functions carry exact tangents") {
  // d/dc of 1/(x + c) is −1/(x + c)².
  const Rat c = frac(7, 2);
  const DPoly lin{Dual::variable(c), Dual(1)};
  const DRatFunc f = log_derivative(lin);
  CHECK(f.re() == QRatFunc(P({1}), QPoly::linear(c)));
  CHECK(f.eps() == QRatFunc(P({-1}), QPoly::linear(c).pow(2)));
}

TEST_CASE("property: ring laws for Rat, Dual, Poly and RatFunc") {
  RatSampler s(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Rat a = s.next(), b = s.next(), c = s.next();
    CHECK((a + b) * c == a * c + b * c);
    const Dual da(a, b), db(c, a), dc(b, c);
    CHECK((da * db) * dc == da * (db * dc));
    CHECK((da + db) * dc == da * dc + db * dc);
    CHECK(da - da == Dual(0));

    const QPoly p = random_poly(s, 4), q = random_poly(s, 4), r = random_poly(s, 3);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p - p).is_zero());

    const QRatFunc f = random_ratfunc(s, 3, 2), g = random_ratfunc(s, 3, 2), h = random_ratfunc(s, 2, 2);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f + g) * h == f * h + g * h);
    CHECK((f - f).is_zero());
    CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    if (!g.is_zero()) CHECK((f / g) * g == f);
  }
}

TEST_CASE("property: reduced form is canonical") {
  RatSampler s(202);
  for (int trial = 0; trial < 30; ++trial) {
    const QRatFunc f = random_ratfunc(s, 3, 3);
    CHECK(f.den().is_monic());
    CHECK(gcd(f.num(), f.den()).degree() <= 0);
  }
}

TEST_CASE("property: wronskian antisymmetry and log-derivative additivity") {
  RatSampler s(303);
  for (int trial = 0; trial < 30; ++trial) {
    const QPoly f = random_poly(s, 4), g = random_poly(s, 4);
    CHECK(wronskian(f, g) == -wronskian(g, f));
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(log_derivative(f * g) == log_derivative(f) + log_derivative(g));
  }
}

TEST_CASE("property: Laurent expansion of p'/p starts with the degree") {
  RatSampler s(404);
  for (int trial = 0; trial < 20; ++trial) {
    QPoly p = random_poly(s, 5);
    if (p.degree() < 1) continue;
    p = p.monic();
    CHECK(laurent_at_infinity(log_derivative(p), 1).front() == Rat(p.degree()));
  }
}

TEST_CASE("property: solve_linear solutions satisfy the system") {
  RatSampler s(505);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix<Rat> a(4, std::vector<Rat>(3));
    std::vector<Rat> x{s.next(), s.next(), s.next()};
    std::vector<Rat> b(4);
    for (auto& row : a)
      for (auto& e : row) e = s.next();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) b[i] += a[i][j] * x[j];
    auto sol = solve_linear(a, b);
    REQUIRE(sol.has_value());
    for (std::size_t i = 0; i < 4; ++i) {
      Rat acc;
      for (std::size_t j = 0; j < 3; ++j) acc += a[i][j] * (*sol)[j];
      CHECK(acc == b[i]);
    }
  }
}
