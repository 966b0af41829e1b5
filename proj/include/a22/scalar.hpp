#pragma once

// Scalar coefficient rings: exact rationals and first-order dual numbers
// over the rationals.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace a22 {

using Rat = mpq_class;

/// Raised when an operation needs to invert a non-invertible ring element
/// (a Dual with zero real part, or a zero rational).
class DegenerateDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// n/d in lowest terms. mpq_class(n, d) does not canonicalize on its own.
inline Rat frac(long n, long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

Rat parse_rat(std::string_view text);
std::string to_string(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_invertible(const Rat& q) { return sgn(q) != 0; }

inline Rat inverse(const Rat& q) {
  if (is_zero(q)) throw DegenerateDivision("division by zero rational");
  return Rat(1) / q;
}

/// a + b·ε with ε² = 0. The ε part carries an exact first derivative with
/// respect to one seeded parameter.
class Dual {
 public:
  Dual() = default;
  Dual(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Dual(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Dual(Rat re, Rat eps) : re_(std::move(re)), eps_(std::move(eps)) {}

  static Dual variable(Rat value) { return Dual(std::move(value), Rat(1)); }

  const Rat& re() const { return re_; }
  const Rat& eps() const { return eps_; }

  Dual operator-() const { return Dual(Rat(-re_), Rat(-eps_)); }

  Dual& operator+=(const Dual& o) {
    re_ += o.re_;
    eps_ += o.eps_;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    re_ -= o.re_;
    eps_ -= o.eps_;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    Rat e = re_ * o.eps_ + eps_ * o.re_;
    re_ *= o.re_;
    eps_ = std::move(e);
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    if (sgn(o.re_) == 0) throw DegenerateDivision("division by a dual number with zero real part");
    Rat e = (eps_ * o.re_ - re_ * o.eps_) / (o.re_ * o.re_);
    re_ /= o.re_;
    eps_ = std::move(e);
    return *this;
  }

  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
  friend Dual operator/(Dual a, const Dual& b) { return a /= b; }

  friend bool operator==(const Dual& a, const Dual& b) { return a.re_ == b.re_ && a.eps_ == b.eps_; }
  friend bool operator!=(const Dual& a, const Dual& b) { return !(a == b); }

 private:
  Rat re_{0};
  Rat eps_{0};
};

inline bool is_zero(const Dual& d) { return is_zero(d.re()) && is_zero(d.eps()); }
inline bool is_invertible(const Dual& d) { return is_invertible(d.re()); }
inline Dual inverse(const Dual& d) { return Dual(1) / d; }
std::string to_string(const Dual& d);

template <class R>
concept CoeffRing = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { is_invertible(a) } -> std::convertible_to<bool>;
  { inverse(a) } -> std::convertible_to<R>;
  R(1);
};

/// The Rat-valued part of a ring element that survives at ε = 0.
inline const Rat& real_part(const Rat& q) { return q; }
inline const Rat& real_part(const Dual& d) { return d.re(); }

}  // namespace a22
