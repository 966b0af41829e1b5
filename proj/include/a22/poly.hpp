#pragma once

// Dense univariate polynomials in x over a coefficient ring.

#include "a22/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace a22 {

template <CoeffRing R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
  static Poly x() { return Poly(std::vector<R>{R(0), R(1)}); }
  static Poly monomial(int degree, R coeff = R(1)) {
    std::vector<R> c(static_cast<std::size_t>(degree) + 1, R(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
  }
  /// x + a
  static Poly linear(R a) { return Poly(std::vector<R>{std::move(a), R(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^i (zero outside the stored range).
  R coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return R(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const R& lead() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == R(1); }

  Poly monic() const {
    if (c_.empty()) throw std::logic_error("monic() of zero polynomial");
    return *this * inverse(c_.back());
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * R(static_cast<int>(i));
    return Poly(std::move(d));
  }

  R operator()(const R& at) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly operator-() const {
    std::vector<R> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const R& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> d(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a22::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(d));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned e) const {
    Poly result = constant(R(1));
    Poly base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Quotient and remainder; the divisor's leading coefficient must be invertible.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw DegenerateDivision("polynomial division by zero");
    R inv_lead = inverse(d.lead());
    std::vector<R> rem = c_;
    int dd = d.degree();
    int qdeg = degree() - dd;
    if (qdeg < 0) return {Poly(), *this};
    std::vector<R> q(static_cast<std::size_t>(qdeg) + 1, R(0));
    for (int k = qdeg; k >= 0; --k) {
      R& top = rem[static_cast<std::size_t>(k + dd)];
      if (a22::is_zero(top)) continue;
      R f = top * inv_lead;
      for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= f * d.c_[static_cast<std::size_t>(i)];
      q[static_cast<std::size_t>(k)] = std::move(f);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

  /// Exact division; throws if the remainder is nonzero.
  Poly exact_div(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
  }

 private:
  void trim() {
    while (!c_.empty() && a22::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

using QPoly = Poly<Rat>;
using DPoly = Poly<Dual>;

/// Wr(f, g) = f g' − f' g
template <CoeffRing R>
Poly<R> wronskian(const Poly<R>& f, const Poly<R>& g) {
  return f * g.derivative() - f.derivative() * g;
}

/// Monic gcd over a field; gcd(0, 0) = 0.
inline QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

/// Splits a dual polynomial p = p₀ + ε p₁ into (p₀, p₁).
inline std::pair<QPoly, QPoly> split(const DPoly& p) {
  std::vector<Rat> re, eps;
  re.reserve(p.size());
  eps.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    re.push_back(c.re());
    eps.push_back(c.eps());
  }
  return {QPoly(std::move(re)), QPoly(std::move(eps))};
}

inline DPoly make_dual(const QPoly& re, const QPoly& eps = {}) {
  std::size_t n = std::max(re.size(), eps.size());
  std::vector<Dual> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.emplace_back(re.coeff(static_cast<int>(i)), eps.coeff(static_cast<int>(i)));
  return DPoly(std::move(c));
}

inline QPoly real_part(const QPoly& p) { return p; }
inline QPoly real_part(const DPoly& p) { return split(p).first; }

std::string to_string(const QPoly& p);

}  // namespace a22
