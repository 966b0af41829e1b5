#include "a22/psdo.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace a22 {

PsDO::PsDO(std::map<int, QRatFunc> terms, int floor) : floor_(floor) {
  for (auto& [k, c] : terms)
    if (!c.is_zero() && k >= floor_) terms_.emplace(k, std::move(c));
}

PsDO PsDO::d(int order, int floor) { return PsDO({{order, QRatFunc::constant(Rat(1))}}, floor); }

PsDO PsDO::scalar(const QRatFunc& u) { return PsDO({{0, u}}); }

PsDO PsDO::from(const DiffOp3& L) {
  return PsDO({{3, QRatFunc::constant(Rat(1))}, {1, L.u1}, {0, L.u0}});
}

QRatFunc PsDO::coeff(int order) const {
  auto it = terms_.find(order);
  return it == terms_.end() ? QRatFunc() : it->second;
}

void PsDO::add_term(int order, const QRatFunc& c) {
  if (order < floor_ || c.is_zero()) return;
  auto it = terms_.find(order);
  if (it == terms_.end()) {
    terms_.emplace(order, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PsDO PsDO::plus() const {
  if (floor_ > 0) throw TruncationError("plus(): order-0 coefficient is not known exactly");
  std::map<int, QRatFunc> t;
  for (const auto& [k, c] : terms_)
    if (k >= 0) t.emplace(k, c);
  return PsDO(std::move(t));
}

PsDO PsDO::truncated(int f) const {
  std::map<int, QRatFunc> t;
  for (const auto& [k, c] : terms_)
    if (k >= f) t.emplace(k, c);
  return PsDO(std::move(t), std::max(f, floor_));
}

PsDO PsDO::operator-() const {
  PsDO out;
  out.floor_ = floor_;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

PsDO operator+(const PsDO& a, const PsDO& b) {
  PsDO out = a.truncated(std::max(a.floor_, b.floor_));
  for (const auto& [k, c] : b.terms_) out.add_term(k, c);
  return out;
}

PsDO operator-(const PsDO& a, const PsDO& b) { return a + (-b); }

bool PsDO::agrees_with(const PsDO& o) const {
  const int f = std::max(floor_, o.floor_);
  return truncated(f).terms_ == o.truncated(f).terms_;
}

namespace {

// Generalized binomial coefficient C(i, k) for any integer i.
Rat binomial(int i, int k) {
  Rat out(1);
  for (int t = 0; t < k; ++t) out = out * Rat(i - t) / Rat(t + 1);
  return out;
}

int effective_top(const PsDO& p) { return std::max(p.top(), p.floor() - 1); }

}  // namespace

PsDO psdo_mul(const PsDO& a, const PsDO& b, std::optional<int> cap) {
  // Only inexact factors bound the product from below.
  int f = PsDO::kExact;
  if (!a.exact()) f = std::max(f, a.floor() + effective_top(b));
  if (!b.exact()) f = std::max(f, b.floor() + effective_top(a));
  if (cap) f = std::max(f, *cap);
  const bool unbounded = f <= PsDO::kExact;

  std::map<int, QRatFunc> out;
  auto add = [&](int order, const QRatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.try_emplace(order, c);
    if (!fresh) it->second += c;
  };

  for (const auto& [j, bj] : b.terms()) {
    // Derivatives of b_j are shared by every term of a.
    std::vector<QRatFunc> derivs{bj};
    auto derivative = [&](int k) -> const QRatFunc& {
      while (static_cast<int>(derivs.size()) <= k) derivs.push_back(derivs.back().derivative());
      return derivs[static_cast<std::size_t>(k)];
    };
    for (const auto& [i, ai] : a.terms()) {
      // ∂^i b_j = Σ_k C(i,k) b_j^{(k)} ∂^{i−k}
      for (int k = 0;; ++k) {
        if (i >= 0 && k > i) break;
        const int order = i + j - k;
        if (!unbounded && order < f) break;
        const QRatFunc& dk = derivative(k);
        if (dk.is_zero()) break;
        if (unbounded && i < 0 && k > 0 && bj.den().degree() > 0)
          throw std::invalid_argument("psdo_mul: infinite expansion needs a truncation floor");
        add(order, ai * dk * binomial(i, k));
      }
    }
  }
  return PsDO(std::move(out), f);
}

PsDO cube_root(const DiffOp3& L, int depth) {
  if (depth < 1) throw std::invalid_argument("cube_root: depth must be at least 1");
  const PsDO target = PsDO::from(L);
  std::map<int, QRatFunc> coeffs{{1, QRatFunc::constant(Rat(1))}};
  for (int n = 0; n < depth; ++n) {
    // With a_{−n} still unknown (taken as 0), S³ is exact down to order 2 − n
    // and its true coefficient there is the computed one plus 3a_{−n}.
    const PsDO s(coeffs, -n);
    const PsDO cube = psdo_mul(psdo_mul(s, s), s);
    const QRatFunc a = (target.coeff(2 - n) - cube.coeff(2 - n)) * frac(1, 3);
    if (!a.is_zero()) coeffs[-n] = a;
  }
  return PsDO(std::move(coeffs), 1 - depth);
}

int default_depth(int r) { return r + 2; }

PsDO frac_power_plus(const DiffOp3& L, int r, std::optional<int> depth) {
  if (r <= 0) throw std::invalid_argument("frac_power_plus: r must be positive");
  if (r % 3 == 0) throw std::invalid_argument("frac_power_plus: r divisible by 3 gives a power of L");
  const int dep = depth.value_or(default_depth(r));
  const PsDO root = cube_root(L, dep);
  PsDO power = root;
  for (int k = 1; k < r; ++k) power = psdo_mul(power, root);
  if (power.top() != r) throw std::logic_error("frac_power_plus: unexpected leading order");
  return power.plus();
}

bool depth_stable(const DiffOp3& L, int r, int depth) {
  return frac_power_plus(L, r, depth) == frac_power_plus(L, r, depth + 2);
}

PsDO kdv_commutator(const DiffOp3& L, int r, std::optional<int> depth) {
  const PsDO l = PsDO::from(L);
  const PsDO p = frac_power_plus(L, r, depth);
  return psdo_mul(l, p) - psdo_mul(p, l);
}

std::pair<QRatFunc, QRatFunc> kdv_field(const DiffOp3& L, int r, std::optional<int> depth) {
  const PsDO c = kdv_commutator(L, r, depth);
  if (c.top() > 1)
    throw TruncationError("kdv_field: commutator has order " + std::to_string(c.top()) + " > 1");
  return {c.coeff(1), c.coeff(0)};
}

ConsistencyResult consistency_check(const QTrace& t, int r, int i, std::optional<int> depth) {
  if (r <= 0 || !admissible_flow_index(r)) throw std::invalid_argument("consistency_check: r must be positive and 1, 5 mod 6");
  const QMiura mu = miura_from_trace(t);
  const TangentVector field = mkdv_field(t, r);
  ConsistencyResult out;
  out.mkdv_side = d_miura_map(i, mu, field.x_component);
  auto [u1dot, u0dot] = kdv_field(miura_map(i, embed_a1(mu)), r, depth);
  out.kdv_side = {u1dot, u0dot};
  out.ok = out.mkdv_side == out.kdv_side;
  if (!out.ok) out.witness_order = out.mkdv_side.u1 != out.kdv_side.u1 ? 1 : 0;
  return out;
}

}  // namespace a22
