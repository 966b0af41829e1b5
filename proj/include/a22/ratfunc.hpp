#pragma once

// Rational functions of x. Over Q they are kept reduced with a monic
// denominator. Over the dual numbers they are stored as value + ε·tangent,
// each a reduced rational function over Q, which keeps every intermediate
// as small as its ε = 0 counterpart.

#include "a22/poly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace a22 {

template <CoeffRing R>
class RatFunc;

template <>
class RatFunc<Rat> {
 public:
  RatFunc() : num_(), den_(QPoly::constant(Rat(1))) {}
  RatFunc(QPoly num)  // NOLINT(google-explicit-constructor)
      : num_(std::move(num)), den_(QPoly::constant(Rat(1))) {}
  RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  static RatFunc constant(Rat v) { return RatFunc(QPoly::constant(std::move(v))); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc derivative() const {
    if (num_.is_zero()) return {};
    // (n/d)' = (n'd − nd')/d²; the only possible common factor sits in d.
    QPoly top = num_.derivative() * den_ - num_ * den_.derivative();
    return RatFunc(std::move(top), den_ * den_);
  }

  RatFunc operator-() const { return RatFunc(-num_, den_, Reduced{}); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly g1 = gcd(a.num_, b.den_);
    QPoly g2 = gcd(b.num_, a.den_);
    QPoly n = a.num_.exact_div(g1) * b.num_.exact_div(g2);
    QPoly d = a.den_.exact_div(g2) * b.den_.exact_div(g1);
    return RatFunc(std::move(n), std::move(d), Reduced{});
  }
  friend RatFunc operator*(const RatFunc& a, const Rat& s) {
    if (is_zero_rat(s)) return {};
    return RatFunc(a.num_ * s, a.den_, Reduced{});
  }
  friend RatFunc operator*(const Rat& s, const RatFunc& a) { return a * s; }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DegenerateDivision("division by zero rational function");
    return a * RatFunc(b.den_, b.num_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Value at a rational point; the point must not be a pole.
  Rat operator()(const Rat& at) const {
    Rat d = den_(at);
    if (sgn(d) == 0) throw DegenerateDivision("evaluation at a pole");
    return num_(at) / d;
  }

 private:
  struct Reduced {};
  RatFunc(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = QPoly::constant(Rat(1));
  }

  static bool is_zero_rat(const Rat& q) { return sgn(q) == 0; }

  static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    if (a.den_ == b.den_) {
      QPoly n = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
      if (a.den_.degree() == 0) return RatFunc(std::move(n), a.den_, Reduced{});
      return RatFunc(std::move(n), a.den_);
    }
    QPoly g = gcd(a.den_, b.den_);
    QPoly ad = a.den_.exact_div(g);
    QPoly bd = b.den_.exact_div(g);
    QPoly n = subtract ? a.num_ * bd - b.num_ * ad : a.num_ * bd + b.num_ * ad;
    if (g.degree() == 0) return RatFunc(std::move(n), ad * b.den_, Reduced{});
    // Any cancellation divides g.
    QPoly h = gcd(n, g);
    if (h.degree() > 0) {
      n = n.exact_div(h);
      g = g.exact_div(h);
    }
    return RatFunc(std::move(n), ad * bd * g, Reduced{});
  }

  void reduce() {
    if (den_.is_zero()) throw DegenerateDivision("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = QPoly::constant(Rat(1));
      return;
    }
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    if (!den_.is_monic()) {
      Rat inv = Rat(1) / den_.lead();
      num_ *= inv;
      den_ *= inv;
    }
  }

  QPoly num_;
  QPoly den_;
};

using QRatFunc = RatFunc<Rat>;

template <>
class RatFunc<Dual> {
 public:
  RatFunc() = default;
  RatFunc(QRatFunc re, QRatFunc eps = {}) : re_(std::move(re)), eps_(std::move(eps)) {}  // NOLINT
  RatFunc(const DPoly& num)  // NOLINT(google-explicit-constructor)
      : RatFunc(num, DPoly::constant(Dual(1))) {}
  RatFunc(const DPoly& num, const DPoly& den) {
    auto [n0, n1] = split(num);
    auto [d0, d1] = split(den);
    if (d0.is_zero()) throw DegenerateDivision("dual rational function with zero real denominator");
    re_ = QRatFunc(n0, d0);
    // (n₀ + εn₁)/(d₀ + εd₁) = n₀/d₀ + ε (n₁d₀ − n₀d₁)/d₀²
    eps_ = QRatFunc(n1 * d0 - n0 * d1, d0 * d0);
  }

  static RatFunc constant(Dual v) {
    return RatFunc(QRatFunc::constant(v.re()), QRatFunc::constant(v.eps()));
  }

  const QRatFunc& re() const { return re_; }
  const QRatFunc& eps() const { return eps_; }
  bool is_zero() const { return re_.is_zero() && eps_.is_zero(); }

  RatFunc derivative() const { return RatFunc(re_.derivative(), eps_.derivative()); }

  RatFunc operator-() const { return RatFunc(-re_, -eps_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return RatFunc(a.re_ + b.re_, a.eps_ + b.eps_); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return RatFunc(a.re_ - b.re_, a.eps_ - b.eps_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.re_ * b.re_, a.re_ * b.eps_ + a.eps_ * b.re_);
  }
  friend RatFunc operator*(const RatFunc& a, const Dual& s) { return a * constant(s); }
  friend RatFunc operator*(const Dual& s, const RatFunc& a) { return a * constant(s); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.re_.is_zero()) throw DegenerateDivision("division by a dual rational function with zero real part");
    QRatFunc q = a.re_ / b.re_;
    return RatFunc(q, (a.eps_ - q * b.eps_) / b.re_);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.re_ == b.re_ && a.eps_ == b.eps_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  QRatFunc re_;
  QRatFunc eps_;
};

using DRatFunc = RatFunc<Dual>;

/// Reduced p'/p.
template <CoeffRing R>
RatFunc<R> log_derivative(const Poly<R>& p) {
  if (p.is_zero()) throw std::invalid_argument("log_derivative of the zero polynomial");
  return RatFunc<R>(p.derivative(), p);
}

/// First n coefficients B₁..Bₙ of the expansion Σ Bᵢ x^{−i} at x = ∞.
/// Requires deg(num) < deg(den).
std::vector<Rat> laurent_at_infinity(const QRatFunc& r, int n);

std::string to_string(const QRatFunc& r);

}  // namespace a22
