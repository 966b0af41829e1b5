#include "a22/generation.hpp"

#include "a22/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace a22 {

DegreeVector degree_transform(DegreeVector k, int j) {
  switch (j) {
    case 0:
      return {4 * k.k1 + 1 - k.k0, k.k1};
    case 1:
      return {k.k0, k.k0 + 1 - k.k1};
    default:
      throw std::invalid_argument("degree_transform: direction must be 0 or 1");
  }
}

BasicSequence::BasicSequence(std::vector<int> entries) : j_(std::move(entries)) {
  for (std::size_t i = 0; i < j_.size(); ++i) {
    if (j_[i] != 0 && j_[i] != 1) throw std::invalid_argument("sequence entries must be 0 or 1");
    if (i > 0 && j_[i] == j_[i - 1]) throw std::invalid_argument("sequence is not basic (repeated direction)");
  }
}

BasicSequence BasicSequence::parse(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (item == "0") {
      out.push_back(0);
    } else if (item == "1") {
      out.push_back(1);
    } else {
      throw std::invalid_argument("malformed direction '" + item + "'");
    }
  }
  return BasicSequence(std::move(out));
}

BasicSequence BasicSequence::alternating(int first, int m) {
  std::vector<int> out;
  for (int i = 0; i < m; ++i) out.push_back((first + i) % 2);
  return BasicSequence(std::move(out));
}

BasicSequence BasicSequence::prefix(int len) const {
  return BasicSequence(std::vector<int>(j_.begin(), j_.begin() + len));
}

std::string BasicSequence::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < j_.size(); ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + j_[i]);
  }
  return s;
}

std::vector<DegreeVector> degree_sequence(const BasicSequence& J) {
  std::vector<DegreeVector> out{{0, 0}};
  for (int j : J.entries()) out.push_back(degree_transform(out.back(), j));
  return out;
}

DegreeVector degree_vector(const BasicSequence& J) { return degree_sequence(J).back(); }

bool is_generic(const QPair& p) {
  auto square_free = [](const QPoly& y) { return y.degree() <= 0 || gcd(y, y.derivative()).degree() == 0; };
  if (!square_free(p.y0) || !square_free(p.y1)) return false;
  if (p.y0.is_zero() || p.y1.is_zero()) return false;
  return gcd(p.y0, p.y1).degree() == 0;
}

namespace {

// Does Wr(y, ỹ) = rhs have a polynomial solution ỹ? Any solution has degree
// deg y or deg rhs + 1 − deg y, so unknowns up to the larger one suffice.
bool wronskian_solvable(const QPoly& y, const QPoly& rhs) {
  if (y.is_zero()) return false;
  const int d = y.degree();
  const int top = std::max(d, rhs.degree() + 1 - d);
  if (top < 0) return rhs.is_zero();
  const int rows = std::max(rhs.degree() + 1, d + top);
  Matrix<Rat> m(static_cast<std::size_t>(rows), std::vector<Rat>(static_cast<std::size_t>(top) + 1, Rat(0)));
  for (int i = 0; i <= top; ++i) {
    QPoly w = wronskian(y, QPoly::monomial(i));
    for (int r = 0; r <= w.degree(); ++r) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = w.coeff(r);
  }
  std::vector<Rat> b(static_cast<std::size_t>(rows), Rat(0));
  for (int r = 0; r <= rhs.degree(); ++r) b[static_cast<std::size_t>(r)] = rhs.coeff(r);
  return solve_linear(std::move(m), std::move(b)).has_value();
}

}  // namespace

bool is_fertile(const QPair& p) {
  return wronskian_solvable(p.y0, wronskian_rhs(p, 0)) && wronskian_solvable(p.y1, wronskian_rhs(p, 1));
}

BetheReport bethe_residuals(const QPair& p, double tolerance) {
  BetheReport report;
  std::vector<Complex> u0, u1;
  if (p.y0.degree() > 0) {
    RootResult r = durand_kerner(p.y0.monic());
    u0 = std::move(r.roots);
    report.iterations += r.iterations;
  }
  if (p.y1.degree() > 0) {
    RootResult r = durand_kerner(p.y1.monic());
    u1 = std::move(r.roots);
    report.iterations += r.iterations;
  }

  long double worst = 0;
  // Σ_{i'≠i} 2/(u⁰_i − u⁰_{i'}) − Σ 4/(u⁰_i − u¹_{i'})
  for (std::size_t i = 0; i < u0.size(); ++i) {
    Complex s = 0;
    for (std::size_t k = 0; k < u0.size(); ++k)
      if (k != i) s += 2.0L / (u0[i] - u0[k]);
    for (const auto& w : u1) s -= 4.0L / (u0[i] - w);
    worst = std::max(worst, std::abs(s));
  }
  // Σ_{i'≠i} 8/(u¹_i − u¹_{i'}) − Σ 4/(u¹_i − u⁰_{i'})
  for (std::size_t i = 0; i < u1.size(); ++i) {
    Complex s = 0;
    for (std::size_t k = 0; k < u1.size(); ++k)
      if (k != i) s += 8.0L / (u1[i] - u1[k]);
    for (const auto& w : u0) s -= 4.0L / (u1[i] - w);
    worst = std::max(worst, std::abs(s));
  }
  report.max_residual = static_cast<double>(worst);
  report.passed = std::isfinite(report.max_residual) && report.max_residual < tolerance;
  return report;
}

}  // namespace a22
