#pragma once

// Verification suites behind `a22cli verify`. Every case is an independent
// pure computation; cases run on worker threads and are reported in name
// order, so output depends only on the configuration.

#include "a22/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace a22 {

struct RunConfig {
  std::uint64_t seed = 7;
  int samples = 3;
  std::optional<int> depth;  // PsDO truncation depth; default r + 2
  double tolerance = 1e-8;   // numeric Bethe residuals only
  unsigned threads = 0;      // 0: hardware concurrency
};

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  RunConfig config;
  std::vector<CaseResult> cases;
  bool passed() const;
};

/// degrees, generation, miura, flows, kdv, loop-algebra, bethe, all
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const RunConfig& cfg);

Json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

/// Gauge collapse along J: m₁ (J ends in 0) or m₀ (J ends in 1) of μ^J is
/// the same at c̃ with two different last parameters, and equals the image
/// of μ^{J̃}(c̃). Returns an empty string on success, else a description.
std::string check_gauge_collapse(const BasicSequence& J, const std::vector<Rat>& c_tilde, const Rat& cm1,
                                 const Rat& cm2);

/// dm₀ kills (y₀/y₁²)h₀ and dm₁ kills (y₁⁴/y₀²)h₀ at the oper of the pair.
std::string check_kernel(const QPair& p);

/// Flow decomposition check at one point: exact decomposition, threshold
/// vanishing, the closed-form last tangent and the proportionality constant.
std::string check_flow(const QTrace& t, int r);

/// Every g_ℓ solves the Ricatti equation of the previous oper and the
/// product formula reproduces the oper of the final pair.
std::string check_opers(const QTrace& t);

}  // namespace a22
