#include "a22/ratfunc.hpp"

#include <sstream>

namespace a22 {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (s.find('/') != std::string::npos && sgn(q.get_den()) == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const Dual& d) { return to_string(d.re()) + "+" + to_string(d.eps()) + "e"; }

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat c = p.coeff(i);
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    out << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = mag == 1 && i > 0;
    if (!unit) out << mag.get_str();
    if (i > 0) out << (unit ? "" : "*") << "x";
    if (i > 1) out << "^" << i;
    first = false;
  }
  return out.str();
}

std::string to_string(const QRatFunc& r) {
  if (r.den().degree() == 0) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

std::vector<Rat> laurent_at_infinity(const QRatFunc& r, int n) {
  std::vector<Rat> out(static_cast<std::size_t>(std::max(n, 0)), Rat(0));
  if (r.is_zero()) return out;
  const QPoly& num = r.num();
  const QPoly& den = r.den();
  const int dd = den.degree();
  if (num.degree() >= dd) throw std::invalid_argument("laurent_at_infinity: polynomial part present");
  // num = den · Σ_{k≥1} B_k x^{−k}; compare coefficients of x^{dd−k}.
  for (int k = 1; k <= n; ++k) {
    Rat acc = num.coeff(dd - k);
    for (int i = 1; i < k && i <= dd; ++i) acc -= den.coeff(dd - i) * out[static_cast<std::size_t>(k - i - 1)];
    out[static_cast<std::size_t>(k - 1)] = acc / den.lead();
  }
  return out;
}

}  // namespace a22
