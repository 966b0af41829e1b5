#include "a22/flows.hpp"

#include <string>

namespace a22 {

Dressing dressing_product(const QTrace& t) {
  Dressing d{LaurentMat::identity(), LaurentMat::identity()};
  for (int l = 0; l < t.length(); ++l) {
    const QRatFunc& g = t.gs[static_cast<std::size_t>(l)];
    d.p = exp_dressing(g, t.J[l]) * d.p;
    d.pinv = d.pinv * exp_dressing(-g, t.J[l]);
  }
  return d;
}

namespace {

// λ⁰-diagonal of A·B; the degree-0 part of a product whose factors mix
// degrees only ever lands there for diagonal entries.
std::array<QRatFunc, 3> degree_zero_diagonal(const LaurentMat& a, const LaurentMat& b) {
  std::array<QRatFunc, 3> out;
  for (int k = 0; k < 3; ++k) {
    QRatFunc acc;
    for (int l = 0; l < 3; ++l) {
      const auto& right = b.entry(l, k);
      if (right.empty()) continue;
      for (const auto& [m, c] : a.entry(k, l)) {
        auto it = right.find(-m);
        if (it != right.end()) acc += c * it->second;
      }
    }
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return out;
}

}  // namespace

TangentVector mkdv_field(const QTrace& t, int r) {
  if (r <= 0) throw std::invalid_argument("mkdv_field: r must be positive");
  const LaurentMat lam = lambda_r(r);
  const Dressing d = dressing_product(t);
  const auto diag = degree_zero_diagonal(d.p * lam, d.pinv);
  if (!diag[1].is_zero())
    throw ClosureViolation("mkdv_field: middle diagonal entry is nonzero (r = " + std::to_string(r) + ")");
  if (!(diag[0] + diag[2]).is_zero()) throw ClosureViolation("mkdv_field: (3,3) entry is not −(1,1) entry");
  return {-diag[0].derivative()};
}

std::vector<TangentVector> family_tangents(const BasicSequence& J, const std::vector<Rat>& c) {
  if (static_cast<int>(c.size()) != J.size()) throw std::invalid_argument("family_tangents: need one parameter per step");
  std::vector<TangentVector> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<Dual> seeded(c.begin(), c.end());
    seeded[i] = Dual::variable(c[i]);
    const DTrace t = generate_multistep(J, seeded);
    out.push_back({miura_from_trace(t).v.eps()});
  }
  return out;
}

TangentVector last_tangent_closed_form(const QTrace& t) {
  const int m = t.length();
  if (m == 0) throw std::invalid_argument("last_tangent_closed_form: empty trace");
  const QPair& before = t.pairs[static_cast<std::size_t>(m - 1)];
  const QPair& after = t.pairs[static_cast<std::size_t>(m)];
  const Rat& a = t.a.back();
  if (t.J.back() == 0) return {QRatFunc(before.y1.pow(4) * a, after.y0 * after.y0)};
  return {QRatFunc(before.y0 * Rat(-2 * a), after.y1 * after.y1)};
}

namespace {

QPoly lcm(const QPoly& a, const QPoly& b) { return (a * b).exact_div(gcd(a, b)).monic(); }

struct ClearedSystem {
  Matrix<Rat> m;
  std::vector<Rat> b;
};

ClearedSystem clear_denominators(const TangentVector& field, const std::vector<TangentVector>& tangents) {
  QPoly common = field.x_component.den();
  for (const auto& t : tangents) common = lcm(common, t.x_component.den());
  auto lifted = [&](const QRatFunc& f) { return f.num() * common.exact_div(f.den()); };

  std::vector<QPoly> cols;
  int rows = 0;
  for (const auto& t : tangents) {
    cols.push_back(lifted(t.x_component));
    rows = std::max(rows, cols.back().degree() + 1);
  }
  QPoly rhs = lifted(field.x_component);
  rows = std::max(rows, rhs.degree() + 1);

  ClearedSystem s;
  s.m.assign(static_cast<std::size_t>(rows), std::vector<Rat>(cols.size(), Rat(0)));
  s.b.assign(static_cast<std::size_t>(rows), Rat(0));
  for (int r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) s.m[static_cast<std::size_t>(r)][k] = cols[k].coeff(r);
    s.b[static_cast<std::size_t>(r)] = rhs.coeff(r);
  }
  return s;
}

}  // namespace

FlowDecomposition decompose_flow(const TangentVector& field, const std::vector<TangentVector>& tangents) {
  if (tangents.empty()) throw std::invalid_argument("decompose_flow: no tangents");
  FlowDecomposition out;
  ClearedSystem s = clear_denominators(field, tangents);
  auto sol = solve_linear(s.m, s.b);
  if (sol) {
    QRatFunc combo;
    for (std::size_t i = 0; i < tangents.size(); ++i) combo += tangents[i].x_component * (*sol)[i];
    out.gamma = std::move(*sol);
    out.residual_zero = combo == field.x_component;
    return out;
  }
  // Smallest prefix of coefficient equations that is already inconsistent.
  for (std::size_t k = 1; k <= s.m.size(); ++k) {
    Matrix<Rat> sub(s.m.begin(), s.m.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Rat> rhs(s.b.begin(), s.b.begin() + static_cast<std::ptrdiff_t>(k));
    if (!solve_linear(std::move(sub), std::move(rhs))) {
      out.witness_power = static_cast<int>(k - 1);
      break;
    }
  }
  return out;
}

Rat proportionality_constant(const TangentVector& residual, const TangentVector& last) {
  if (last.x_component.is_zero()) throw std::invalid_argument("proportionality_constant: zero reference tangent");
  if (residual.x_component.is_zero()) return Rat(0);
  const QRatFunc& ref = last.x_component;
  const int n = ref.den().degree() - ref.num().degree();
  const std::vector<Rat> b_ref = laurent_at_infinity(ref, n);
  const std::vector<Rat> b_res = laurent_at_infinity(residual.x_component, n);
  Rat gamma = b_res.back() / b_ref.back();
  if (residual.x_component != ref * gamma) throw std::invalid_argument("proportionality_constant: not proportional");
  return gamma;
}

bool vanishing_threshold(const BasicSequence& J, int r) {
  if (r <= 0 || !admissible_flow_index(r)) throw std::invalid_argument("vanishing_threshold: r must be positive and 1, 5 mod 6");
  const int m = J.size();
  if (m % 2 == 0) return r > 3 * m;
  return J[0] == 0 ? r > 3 * m - 2 : r > 3 * m + 1;
}

FlowSample flow_sample(const BasicSequence& J, const std::vector<Rat>& c, int r) {
  if (r <= 0 || !admissible_flow_index(r)) throw std::invalid_argument("flow index must be positive and 1, 5 mod 6");
  const QTrace t = generate_multistep(J, c);
  FlowSample s{J, c, r, mkdv_field(t, r), {}, false};
  if (J.empty()) {
    s.residual_zero = s.field.x_component.is_zero();
    return s;
  }
  FlowDecomposition d = decompose_flow(s.field, family_tangents(J, c));
  s.gamma = std::move(d.gamma);
  s.residual_zero = d.residual_zero;
  return s;
}

}  // namespace a22
