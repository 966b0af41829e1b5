#include "a22/harness.hpp"

#include "a22/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace a22 {

bool SuiteReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"degrees", "generation", "miura", "flows",
                                              "kdv",     "loop-algebra", "bethe", "all"};
  return names;
}

std::string check_gauge_collapse(const BasicSequence& J, const std::vector<Rat>& c_tilde, const Rat& cm1,
                                 const Rat& cm2) {
  const int m = J.size();
  if (m == 0 || static_cast<int>(c_tilde.size()) != m - 1) throw std::invalid_argument("check_gauge_collapse: bad sizes");
  const int i = J.back() == 0 ? 1 : 0;
  auto image = [&](const BasicSequence& word, std::vector<Rat> c) {
    return miura_map(i, embed_a1(miura_from_pair(generate_multistep(word, c).final_pair())));
  };
  std::vector<Rat> c1 = c_tilde, c2 = c_tilde;
  c1.push_back(cm1);
  c2.push_back(cm2);
  const DiffOp3 a = image(J, c1);
  const DiffOp3 b = image(J, c2);
  const DiffOp3 base = image(J.prefix(m - 1), c_tilde);
  if (!(a == b)) return "m" + std::to_string(i) + " image depends on the last parameter";
  if (!(a == base)) return "m" + std::to_string(i) + " image differs from the shorter word";
  return {};
}

std::string check_kernel(const QPair& p) {
  const QMiura mu = miura_from_pair(p);
  const DiffOp3 zero{};
  if (!(d_miura_map(0, mu, QRatFunc(p.y0, p.y1 * p.y1)) == zero)) return "dm0(y0/y1^2) != 0";
  if (!(d_miura_map(1, mu, QRatFunc(p.y1.pow(4), p.y0 * p.y0)) == zero)) return "dm1(y1^4/y0^2) != 0";
  return {};
}

std::string check_opers(const QTrace& t) {
  QMiura running;
  for (int l = 0; l < t.length(); ++l) {
    const QRatFunc& g = t.gs[static_cast<std::size_t>(l)];
    if (!ricatti_check(running, g, t.J[l])) return "g_" + std::to_string(l + 1) + " fails the Ricatti equation";
    running = gauge_step(running, g, t.J[l]);
    if (!(running == miura_from_pair(t.pairs[static_cast<std::size_t>(l) + 1])))
      return "oper after step " + std::to_string(l + 1) + " differs from the pair's oper";
  }
  if (!(miura_from_trace(t) == miura_from_pair(t.final_pair()))) return "product formula differs from ln'(y1^2/y0)";
  return {};
}

std::string check_flow(const QTrace& t, int r) {
  const TangentVector field = mkdv_field(t, r);
  if (vanishing_threshold(t.J, r) && !field.x_component.is_zero()) return "field nonzero past the vanishing threshold";
  if (t.length() == 0) return field.x_component.is_zero() ? std::string{} : "nonzero field on the trivial oper";

  const std::vector<TangentVector> tangents = family_tangents(t.J, t.c);
  const FlowDecomposition d = decompose_flow(field, tangents);
  if (!d.residual_zero) {
    std::string w = d.witness_power ? " (inconsistent at x^" + std::to_string(*d.witness_power) + ")" : "";
    return "field is not in the span of the family tangents" + w;
  }
  if (!(tangents.back() == last_tangent_closed_form(t))) return "last tangent differs from its closed form";

  QRatFunc residual = field.x_component;
  for (std::size_t i = 0; i + 1 < tangents.size(); ++i) residual -= tangents[i].x_component * d.gamma[i];
  if (proportionality_constant({residual}, tangents.back()) != d.gamma.back())
    return "last coefficient differs from the leading-coefficient ratio";
  return {};
}

namespace {

using CaseFn = std::function<std::string()>;

struct PendingCase {
  std::string name;
  CaseFn run;
};

std::vector<CaseResult> execute(std::vector<PendingCase> cases, unsigned threads) {
  std::vector<CaseResult> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      CaseResult& res = out[k];
      res.name = cases[k].name;
      try {
        res.detail = cases[k].run();
        res.passed = res.detail.empty();
      } catch (const std::exception& e) {
        res.passed = false;
        res.detail = std::string("exception: ") + e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::sort(out.begin(), out.end(), [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  return out;
}

std::string fail_unless(bool ok, const std::string& what) { return ok ? std::string{} : what; }

std::vector<BasicSequence> words(int min_len, int max_len) {
  std::vector<BasicSequence> out;
  for (int m = min_len; m <= max_len; ++m)
    for (int first = 0; first < 2; ++first) {
      out.push_back(BasicSequence::alternating(first, m));
      if (m == 0) break;
    }
  return out;
}

std::string label(const BasicSequence& J) { return "J=(" + J.to_string() + ")"; }

// Stream ids keep every case's random draws independent of scheduling.
std::uint64_t stream_id(const BasicSequence& J, int sample, int salt = 0) {
  std::uint64_t id = static_cast<std::uint64_t>(salt) * 1000003u + static_cast<std::uint64_t>(sample) * 101u;
  for (int j : J.entries()) id = id * 3 + static_cast<std::uint64_t>(j + 1);
  return id;
}

void add_degrees(std::vector<PendingCase>& cases) {
  cases.push_back({"degrees/table-from-0", []() -> std::string {
                     const std::vector<DegreeVector> want{{0, 0}, {1, 0}, {1, 2}, {8, 2}, {8, 7}, {21, 7}, {21, 15}};
                     return fail_unless(degree_sequence(BasicSequence::alternating(0, 6)) == want, "table mismatch");
                   }});
  cases.push_back({"degrees/table-from-1", []() -> std::string {
                     const std::vector<DegreeVector> want{{0, 0}, {0, 1}, {5, 1}, {5, 5}, {16, 5}, {16, 12}, {33, 12}};
                     return fail_unless(degree_sequence(BasicSequence::alternating(1, 6)) == want, "table mismatch");
                   }});
  for (long n = 1; n <= 5; ++n) {
    cases.push_back({"degrees/closed-form-n=" + std::to_string(n), [n]() -> std::string {
                       const DegreeVector even = degree_vector(BasicSequence::alternating(0, static_cast<int>(2 * n)));
                       const DegreeVector odd = degree_vector(BasicSequence::alternating(1, static_cast<int>(2 * n + 1)));
                       if (!(even == DegreeVector{3 * n * n - 2 * n, (3 * n * n + n) / 2})) return std::string("0101 word");
                       if (!(odd == DegreeVector{3 * n * n + 2 * n, (3 * n * n + 5 * n + 2) / 2})) return std::string("1010 word");
                       return std::string{};
                     }});
  }
}

void add_generation(std::vector<PendingCase>& cases, const RunConfig& cfg) {
  for (const BasicSequence& J : words(1, 4))
    for (int s = 0; s < cfg.samples; ++s)
      cases.push_back({"generation/" + label(J) + "/sample-" + std::to_string(s), [J, s, cfg]() -> std::string {
                         RatSampler rng(cfg.seed, stream_id(J, s, 1));
                         const QTrace t = sample_trace(J, rng);
                         for (int l = 0; l < t.length(); ++l) {
                           const QPair& before = t.pairs[static_cast<std::size_t>(l)];
                           const QPair& after = t.pairs[static_cast<std::size_t>(l) + 1];
                           const int j = t.J[l];
                           if (!after.y0.is_monic() || !after.y1.is_monic()) return "lost monicity";
                           if (after[1 - j] != before[1 - j]) return "inactive component changed";
                           if (wronskian(before[j], after[j]) != wronskian_rhs(before, j) * t.a[static_cast<std::size_t>(l)])
                             return "Wronskian equation fails at step " + std::to_string(l + 1);
                         }
                         if (!(t.final_pair().degrees() == degree_vector(J))) return "degree vector mismatch";
                         if (!is_fertile(t.final_pair())) return "final pair not fertile";
                         if (!is_generic(t.final_pair())) return "final pair not generic";
                         std::vector<Rat> other = t.c;
                         other.back() += 1;
                         if (generate_multistep(J, other).final_pair() == t.final_pair()) return "not injective in c_m";
                         return {};
                       }});
}

void add_miura(std::vector<PendingCase>& cases, const RunConfig& cfg) {
  for (const BasicSequence& J : words(1, 4))
    for (int s = 0; s < cfg.samples; ++s)
      cases.push_back({"miura/" + label(J) + "/sample-" + std::to_string(s), [J, s, cfg]() -> std::string {
                         RatSampler rng(cfg.seed, stream_id(J, s, 2));
                         const QTrace t = sample_trace(J, rng);
                         if (auto e = check_opers(t); !e.empty()) return e;
                         if (auto e = check_kernel(t.final_pair()); !e.empty()) return e;
                         // miura_map throws if a ∂² coefficient survives.
                         for (int i = 0; i < 3; ++i) miura_map(i, embed_a1(miura_from_trace(t)));
                         std::vector<Rat> c_tilde(t.c.begin(), t.c.end() - 1);
                         return check_gauge_collapse(J, c_tilde, t.c.back(), t.c.back() + frac(3, 2));
                       }});
}

void add_flows(std::vector<PendingCase>& cases, const RunConfig& cfg) {
  for (const BasicSequence& J : words(1, 4))
    for (int s = 0; s < cfg.samples; ++s)
      for (int r : {1, 5, 7, 11, 13})
        cases.push_back({"flows/" + label(J) + "/r=" + std::to_string(r) + "/sample-" + std::to_string(s),
                         [J, s, r, cfg]() -> std::string {
                           RatSampler rng(cfg.seed, stream_id(J, s, 3));
                           return check_flow(sample_trace(J, rng), r);
                         }});
}

void add_kdv(std::vector<PendingCase>& cases, const RunConfig& cfg) {
  for (const BasicSequence& J : words(1, 3))
    for (int s = 0; s < cfg.samples; ++s)
      for (int r : {1, 5})
        cases.push_back({"kdv/" + label(J) + "/r=" + std::to_string(r) + "/sample-" + std::to_string(s),
                         [J, s, r, cfg]() -> std::string {
                           RatSampler rng(cfg.seed, stream_id(J, s, 4));
                           const QTrace t = sample_trace(J, rng);
                           for (int i = 0; i < 3; ++i) {
                             const ConsistencyResult res = consistency_check(t, r, i, cfg.depth);
                             if (!res.ok)
                               return "m" + std::to_string(i) + ": sides differ at order " +
                                      std::to_string(res.witness_order.value_or(-1));
                             const DiffOp3 L = miura_map(i, embed_a1(miura_from_trace(t)));
                             if (!depth_stable(L, r, cfg.depth.value_or(default_depth(r))))
                               return "m" + std::to_string(i) + ": positive part not stable under deeper truncation";
                           }
                           return {};
                         }});
}

void add_loop_algebra(std::vector<PendingCase>& cases, const RunConfig& cfg) {
  cases.push_back({"loop-algebra/group-law", []() -> std::string {
                     for (int r = -6; r <= 6; ++r)
                       for (int s = -6; s <= 6; ++s)
                         if (lambda_power(r) * lambda_power(s) != lambda_power(r + s))
                           return "Λ^" + std::to_string(r) + "·Λ^" + std::to_string(s);
                     return std::string{};
                   }});
  cases.push_back({"loop-algebra/B-generators", []() -> std::string {
                     for (int m = -2; m <= 2; ++m)
                       for (int sgn : {-1, 1}) {
                         const int r = 6 * m + sgn;
                         LaurentMat power = LaurentMat::identity();
                         const LaurentMat step = lambda_power(r < 0 ? -1 : 1);
                         for (int k = 0; k < std::abs(r); ++k) power = power * step;
                         if (power != lambda_power(r)) return "B_" + std::to_string(r);
                       }
                     return std::string{};
                   }});
  cases.push_back({"loop-algebra/idempotent-shift", []() -> std::string {
                     const LaurentMat L = lambda_power(1), Li = lambda_power(-1);
                     for (int i = 0; i < 3; ++i) {
                       const LaurentMat e = LaurentMat::unit(i, i, 0, QRatFunc::constant(Rat(1)));
                       const LaurentMat e_next = LaurentMat::unit((i + 1) % 3, (i + 1) % 3, 0, QRatFunc::constant(Rat(1)));
                       if (e_next * L != L * e) return "e_{i+1}Λ = Λe_i fails";
                       if (e * Li != Li * e_next) return "e_iΛ⁻¹ = Λ⁻¹e_{i+1} fails";
                     }
                     return std::string{};
                   }});
  for (int s = 0; s < cfg.samples; ++s) {
    cases.push_back({"loop-algebra/random-" + std::to_string(s), [s, cfg]() -> std::string {
                       RatSampler rng(cfg.seed, 9000 + static_cast<std::uint64_t>(s));
                       for (int j = 0; j < 2; ++j) {
                         const QRatFunc g = random_ratfunc(rng, 2, 2);
                         if (exp_dressing(g, j) * exp_dressing(-g, j) != LaurentMat::identity()) return "dressing inverse";
                       }
                       LaurentMat m;
                       for (int k = 0; k < 12; ++k) {
                         const int row = static_cast<int>(rng.next_u64() % 3), col = static_cast<int>(rng.next_u64() % 3);
                         const int grade = static_cast<int>(rng.next_u64() % 13) - 6;
                         if ((grade - row + col) % 3 != 0) continue;
                         m.add_term(row, col, (grade - row + col) / 3, random_ratfunc(rng, 2, 1));
                       }
                       const auto parts = lambda_decompose(m);
                       if (lambda_reconstruct(parts) != m) return "decompose/reconstruct round trip";
                       const LaurentMat b0 = parts.count(0) ? LaurentMat::diagonal(parts.at(0)) : LaurentMat();
                       if (b0 != grade_project(m, 0)) return "b0 differs from the degree-0 projection";
                       LaurentMat sum;
                       for (int d = -6; d <= 6; ++d) sum = sum + grade_project(m, d);
                       if (sum != m) return "grading does not exhaust the matrix";
                       return {};
                     }});
  }
}

void add_bethe(std::vector<PendingCase>& cases, const RunConfig& cfg) {
  std::vector<BasicSequence> js;
  for (int m = 1; m <= 4; ++m) js.push_back(BasicSequence::alternating(0, m));
  for (int m = 1; m <= 3; ++m) js.push_back(BasicSequence::alternating(1, m));
  for (const BasicSequence& J : js)
    for (int s = 0; s < cfg.samples; ++s)
      cases.push_back({"bethe/" + label(J) + "/sample-" + std::to_string(s), [J, s, cfg]() -> std::string {
                         RatSampler rng(cfg.seed, stream_id(J, s, 5));
                         const QTrace t = sample_trace(J, rng);
                         const BetheReport rep = bethe_residuals(t.final_pair(), cfg.tolerance);
                         std::ostringstream os;
                         os << "max residual " << rep.max_residual;
                         return rep.passed ? std::string{} : os.str();
                       }});
}

}  // namespace

SuiteReport run_suite(std::string_view name, const RunConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (cfg.depth && *cfg.depth < 1) throw std::invalid_argument("depth must be at least 1");
  std::vector<PendingCase> cases;
  const bool all = name == "all";
  bool known = all;
  auto want = [&](std::string_view s) {
    if (all || name == s) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("degrees")) add_degrees(cases);
  if (want("generation")) add_generation(cases, cfg);
  if (want("miura")) add_miura(cases, cfg);
  if (want("flows")) add_flows(cases, cfg);
  if (want("kdv")) add_kdv(cases, cfg);
  if (want("loop-algebra")) add_loop_algebra(cases, cfg);
  if (want("bethe")) add_bethe(cases, cfg);
  if (!known) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return {std::string(name), cfg, execute(std::move(cases), cfg.threads)};
}

Json to_json(const SuiteReport& r) {
  Json cases = Json::array();
  for (const CaseResult& c : r.cases) {
    Json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    cases.push_back(std::move(j));
  }
  Json depth = r.config.depth ? Json(*r.config.depth) : Json(nullptr);
  return Json{{"suite", r.suite},
              {"seed", r.config.seed},
              {"samples", r.config.samples},
              {"depth", depth},
              {"tolerance", r.config.tolerance},
              {"passed", r.passed()},
              {"cases", cases}};
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const CaseResult& c : r.cases) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
    failed += c.passed ? 0 : 1;
  }
  os << (failed == 0 ? "PASS" : "FAIL") << " suite " << r.suite << ": " << r.cases.size() - failed << "/"
     << r.cases.size() << " cases, seed " << r.config.seed << '\n';
  return os.str();
}

}  // namespace a22
