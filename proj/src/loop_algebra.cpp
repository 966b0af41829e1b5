#include "a22/loop_algebra.hpp"

#include <stdexcept>
#include <string>

namespace a22 {

namespace {

int mod3(int v) { return ((v % 3) + 3) % 3; }

void accumulate(LaurentPoly& into, int m, const QRatFunc& c) {
  if (c.is_zero()) return;
  auto it = into.find(m);
  if (it == into.end()) {
    into.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

}  // namespace

LaurentMat LaurentMat::identity() {
  LaurentMat out;
  for (int i = 0; i < 3; ++i) out.add_term(i, i, 0, QRatFunc::constant(Rat(1)));
  return out;
}

LaurentMat LaurentMat::diagonal(const std::array<QRatFunc, 3>& d) {
  LaurentMat out;
  for (int i = 0; i < 3; ++i) out.add_term(i, i, 0, d[static_cast<std::size_t>(i)]);
  return out;
}

LaurentMat LaurentMat::unit(int row, int col, int lambda_exp, QRatFunc coeff) {
  LaurentMat out;
  out.add_term(row, col, lambda_exp, coeff);
  return out;
}

QRatFunc LaurentMat::coeff(int row, int col, int lambda_exp) const {
  const auto& p = entry(row, col);
  auto it = p.find(lambda_exp);
  return it == p.end() ? QRatFunc() : it->second;
}

void LaurentMat::add_term(int row, int col, int lambda_exp, const QRatFunc& coeff) {
  if (row < 0 || row > 2 || col < 0 || col > 2) throw std::out_of_range("LaurentMat index");
  accumulate(e_[idx(row)][idx(col)], lambda_exp, coeff);
}

bool LaurentMat::is_zero() const {
  for (const auto& row : e_)
    for (const auto& p : row)
      if (!p.empty()) return false;
  return true;
}

std::pair<int, int> LaurentMat::lambda_range() const {
  bool any = false;
  int lo = 0, hi = 0;
  for_each_term([&](int, int, int m, const QRatFunc&) {
    if (!any) {
      lo = hi = m;
      any = true;
    }
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  });
  return {lo, hi};
}

LaurentMat LaurentMat::derivative() const {
  LaurentMat out;
  for_each_term([&](int i, int j, int m, const QRatFunc& c) { out.add_term(i, j, m, c.derivative()); });
  return out;
}

LaurentMat LaurentMat::operator-() const {
  LaurentMat out;
  for_each_term([&](int i, int j, int m, const QRatFunc& c) { out.add_term(i, j, m, -c); });
  return out;
}

LaurentMat operator+(const LaurentMat& a, const LaurentMat& b) {
  LaurentMat out = a;
  b.for_each_term([&](int i, int j, int m, const QRatFunc& c) { out.add_term(i, j, m, c); });
  return out;
}

LaurentMat operator-(const LaurentMat& a, const LaurentMat& b) {
  LaurentMat out = a;
  b.for_each_term([&](int i, int j, int m, const QRatFunc& c) { out.add_term(i, j, m, -c); });
  return out;
}

LaurentMat operator*(const LaurentMat& a, const LaurentMat& b) {
  LaurentMat out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      LaurentPoly acc;
      for (int k = 0; k < 3; ++k) {
        const auto& left = a.entry(i, k);
        const auto& right = b.entry(k, j);
        if (left.empty() || right.empty()) continue;
        for (const auto& [ml, cl] : left)
          for (const auto& [mr, cr] : right) accumulate(acc, ml + mr, cl * cr);
      }
      out.e_[LaurentMat::idx(i)][LaurentMat::idx(j)] = std::move(acc);
    }
  return out;
}

LaurentMat operator*(const QRatFunc& s, const LaurentMat& a) {
  LaurentMat out;
  if (s.is_zero()) return out;
  a.for_each_term([&](int i, int j, int m, const QRatFunc& c) { out.add_term(i, j, m, s * c); });
  return out;
}

LaurentMat lambda_power(int r) {
  // Row k of Λ^r has its single entry in the column l with k − l ≡ r (mod 3),
  // at the λ-exponent m fixed by 3m + k − l = r.
  LaurentMat out;
  for (int k = 0; k < 3; ++k) {
    int l = mod3(k - r);
    int m = (r - k + l) / 3;
    out.add_term(k, l, m, QRatFunc::constant(Rat(1)));
  }
  return out;
}

bool admissible_flow_index(int r) {
  int s = ((r % 6) + 6) % 6;
  return s == 1 || s == 5;
}

LaurentMat lambda_r(int r) {
  if (!admissible_flow_index(r))
    throw std::invalid_argument("Lambda_r requires r = 1, 5 (mod 6); got " + std::to_string(r));
  return lambda_power(r);
}

LaurentMat exp_dressing(const QRatFunc& g, int j) {
  LaurentMat out = LaurentMat::identity();
  if (j == 0) {
    // 1 + g e₃₃ Λ⁻¹ = 1 + g λ⁻¹ e₃₁
    out.add_term(2, 0, -1, g);
  } else if (j == 1) {
    // 1 + 2g (e₁₁ + e₂₂) Λ⁻¹ + 2g² e₁₁ Λ⁻² = 1 + 2g (e₁₂ + e₂₃) + 2g² e₁₃
    QRatFunc two_g = g * Rat(2);
    out.add_term(0, 1, 0, two_g);
    out.add_term(1, 2, 0, two_g);
    out.add_term(0, 2, 0, g * g * Rat(2));
  } else {
    throw std::invalid_argument("exp_dressing: direction must be 0 or 1");
  }
  return out;
}

LaurentMat grade_project(const LaurentMat& m, int d) {
  LaurentMat out;
  m.for_each_term([&](int i, int j, int e, const QRatFunc& c) {
    if (grade_of(i, j, e) == d) out.add_term(i, j, e, c);
  });
  return out;
}

DiagTraceless as_diag_traceless(const LaurentMat& degree_zero) {
  degree_zero.for_each_term([](int i, int j, int e, const QRatFunc&) {
    if (i != j || e != 0) throw std::invalid_argument("as_diag_traceless: matrix is not λ⁰-diagonal");
  });
  QRatFunc d1 = degree_zero.coeff(0, 0, 0);
  QRatFunc d2 = degree_zero.coeff(1, 1, 0);
  QRatFunc d3 = degree_zero.coeff(2, 2, 0);
  if (!(d1 + d2 + d3).is_zero()) throw std::invalid_argument("as_diag_traceless: nonzero trace");
  return {d1, d3};
}

LaurentMat conjugate(const LaurentMat& p, const LaurentMat& m, const LaurentMat& pinv) {
  if (p * pinv != LaurentMat::identity()) throw std::invalid_argument("conjugate: Pinv is not the inverse of P");
  return p * m * pinv;
}

LaurentMat conjugate_oper(const LaurentMat& p, const LaurentMat& m, const LaurentMat& pinv) {
  return conjugate(p, m, pinv) + p * pinv.derivative();
}

std::map<int, std::array<QRatFunc, 3>> lambda_decompose(const LaurentMat& m) {
  // λ^e e_{k,l} lies in exactly one b_j Λ^j, namely j = 3e + k − l, in slot k.
  std::map<int, std::array<QRatFunc, 3>> out;
  m.for_each_term([&](int k, int l, int e, const QRatFunc& c) {
    out[grade_of(k, l, e)][static_cast<std::size_t>(k)] += c;
  });
  return out;
}

LaurentMat lambda_reconstruct(const std::map<int, std::array<QRatFunc, 3>>& parts) {
  LaurentMat out;
  for (const auto& [j, b] : parts) out = out + LaurentMat::diagonal(b) * lambda_power(j);
  return out;
}

}  // namespace a22
