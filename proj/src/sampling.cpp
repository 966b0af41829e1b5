#include "a22/sampling.hpp"

#include "a22/flows.hpp"

#include <stdexcept>

namespace a22 {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RatSampler::RatSampler(std::uint64_t seed, std::uint64_t stream) : rng_(splitmix64(seed ^ splitmix64(stream))) {}

// Plain modulo keeps the mapping identical across standard libraries; the
// bias is irrelevant at these ranges.
long RatSampler::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Rat RatSampler::next() {
  Rat q(uniform(-9, 9), uniform(1, 4));
  q.canonicalize();
  return q;
}

std::vector<Rat> RatSampler::vector(int m) {
  std::vector<Rat> out;
  for (int i = 0; i < m; ++i) out.push_back(next());
  return out;
}

std::vector<Rat> sample_parameters(RatSampler& s, int m, const std::function<bool(const std::vector<Rat>&)>& accept,
                                   int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Rat> c = s.vector(m);
    try {
      if (accept(c)) return c;
    } catch (const DegenerateDivision&) {
    } catch (const InfertileError&) {
    }
  }
  throw std::runtime_error("sample_parameters: no acceptable sample in " + std::to_string(max_attempts) + " draws");
}

QTrace sample_trace(const BasicSequence& J, RatSampler& s) {
  QTrace out;
  sample_parameters(s, J.size(), [&](const std::vector<Rat>& c) {
    QTrace t = generate_multistep(J, c);
    if (!is_generic(t.final_pair())) return false;
    family_tangents(J, c);  // throws DegenerateDivision where a tangent is undefined
    out = std::move(t);
    return true;
  });
  return out;
}

}  // namespace a22

namespace a22 {

QPoly random_poly(RatSampler& s, int max_degree) {
  const int d = static_cast<int>(s.next_u64() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<Rat> c;
  for (int i = 0; i <= d; ++i) c.push_back(s.next());
  return QPoly(std::move(c));
}

QRatFunc random_ratfunc(RatSampler& s, int max_num_degree, int max_den_degree) {
  QPoly den;
  while (den.is_zero()) den = random_poly(s, max_den_degree);
  return QRatFunc(random_poly(s, max_num_degree), den);
}

}  // namespace a22
