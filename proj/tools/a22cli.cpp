// Command-line front end: degree tables, generation traces, flow samples,
// Miura images, KdV cross-checks and the verification suites.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include "a22/harness.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace a22;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::vector<Rat> parse_params(const std::string& text) {
  std::vector<Rat> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rat(item));
  return out;
}

QTrace trace_from(const std::string& j_text, const std::string& c_text) {
  const BasicSequence J = BasicSequence::parse(j_text);
  const std::vector<Rat> c = parse_params(c_text);
  if (static_cast<int>(c.size()) != J.size())
    throw std::invalid_argument("expected " + std::to_string(J.size()) + " parameters, got " + std::to_string(c.size()));
  return generate_multistep(J, c);
}

void check_flow_index(int r) {
  if (r <= 0 || !admissible_flow_index(r)) throw std::invalid_argument("flow index r must be positive and 1 or 5 mod 6");
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mKdV/KdV computations on generated critical points of type A2(2)"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "JSON output");

  std::string j_text, c_text;
  int r = 1;
  int map_index = -1;
  RunConfig cfg;
  int depth = 0;
  std::string suite;

  auto* degrees = app.add_subcommand("degrees", "Degree vectors along a basic sequence");
  degrees->add_option("J", j_text, "Basic sequence, e.g. 0,1,0");

  auto* generate = app.add_subcommand("generate", "Generation trace Y^J(c)");
  generate->add_option("J", j_text, "Basic sequence");
  generate->add_option("c", c_text, "Parameters, e.g. 2,5 or 1/2,-3");

  auto* flow = app.add_subcommand("flow", "mKdV field at mu^J(c) and its decomposition");
  flow->add_option("J", j_text, "Basic sequence")->required();
  flow->add_option("c", c_text, "Parameters")->required();
  flow->add_option("r", r, "Flow index (1 or 5 mod 6)")->required();

  auto* miura = app.add_subcommand("miura", "Miura oper of Y^J(c) and its images under the Miura maps");
  miura->add_option("J", j_text, "Basic sequence");
  miura->add_option("c", c_text, "Parameters");
  miura->add_option("--map", map_index, "Only this Miura map (0, 1 or 2)")->check(CLI::Range(0, 2));

  auto* kdv = app.add_subcommand("kdv-check", "Compare the mKdV field with the KdV field through the Miura maps");
  kdv->add_option("J", j_text, "Basic sequence")->required();
  kdv->add_option("c", c_text, "Parameters")->required();
  kdv->add_option("r", r, "Flow index (1 or 5 mod 6)")->required();
  kdv->add_option("--depth", depth, "Cube-root truncation depth (default r+2)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "degrees|generation|miura|flows|kdv|loop-algebra|bethe|all")->required();
  verify->add_option("--seed", cfg.seed, "Sampling seed");
  verify->add_option("--samples", cfg.samples, "Samples per case")->check(CLI::PositiveNumber);
  verify->add_option("--depth", depth, "Cube-root truncation depth (default r+2)")->check(CLI::PositiveNumber);
  verify->add_option("--tolerance", cfg.tolerance, "Numeric tolerance for Bethe residuals")->check(CLI::PositiveNumber);
  verify->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (degrees->parsed()) {
      const auto seq = degree_sequence(BasicSequence::parse(j_text));
      if (json) {
        Json out = Json::array();
        for (const auto& k : seq) out.push_back(to_json(k));
        print(out);
      } else {
        for (const auto& k : seq) std::cout << "(" << k.k0 << "," << k.k1 << ")\n";
      }
      return kPass;
    }

    if (generate->parsed()) {
      const QTrace t = trace_from(j_text, c_text);
      if (json) {
        print(to_json(t));
      } else {
        const QPair& p = t.final_pair();
        std::cout << "y0 = " << to_string(p.y0) << "\ny1 = " << to_string(p.y1) << '\n';
      }
      return kPass;
    }

    if (flow->parsed()) {
      check_flow_index(r);
      const QTrace t = trace_from(j_text, c_text);
      const FlowSample s = flow_sample(t.J, t.c, r);
      if (json) {
        print(to_json(s));
      } else {
        std::cout << "field = " << to_string(s.field.x_component) << "\ngamma =";
        for (const Rat& g : s.gamma) std::cout << ' ' << to_string(g);
        std::cout << "\nresidual_zero = " << (s.residual_zero ? "true" : "false") << '\n';
      }
      return s.residual_zero ? kPass : kFail;
    }

    if (miura->parsed()) {
      const QTrace t = trace_from(j_text, c_text);
      const QMiura mu = miura_from_trace(t);
      Json out{{"oper", to_json(mu)}, {"images", Json::object()}};
      for (int i = 0; i < 3; ++i) {
        if (map_index >= 0 && i != map_index) continue;
        out["images"]["m" + std::to_string(i)] = to_json(miura_map(i, embed_a1(mu)));
      }
      if (json) {
        print(out);
      } else {
        std::cout << "v = " << to_string(mu.v) << '\n';
        for (int i = 0; i < 3; ++i) {
          if (map_index >= 0 && i != map_index) continue;
          const DiffOp3 L = miura_map(i, embed_a1(mu));
          std::cout << "m" << i << ": u1 = " << to_string(L.u1) << ", u0 = " << to_string(L.u0) << '\n';
        }
      }
      return kPass;
    }

    if (kdv->parsed()) {
      check_flow_index(r);
      const QTrace t = trace_from(j_text, c_text);
      const std::optional<int> d = depth > 0 ? std::optional<int>(depth) : std::nullopt;
      bool all_ok = true;
      Json out = Json::array();
      for (int i = 0; i < 3; ++i) {
        const ConsistencyResult res = consistency_check(t, r, i, d);
        all_ok = all_ok && res.ok;
        Json row{{"map", i}, {"ok", res.ok}, {"mkdv_side", to_json(res.mkdv_side)}, {"kdv_side", to_json(res.kdv_side)}};
        if (res.witness_order) row["witness_order"] = *res.witness_order;
        out.push_back(std::move(row));
        if (!json) std::cout << (res.ok ? "PASS" : "FAIL") << " m" << i << '\n';
      }
      if (json) print(out);
      return all_ok ? kPass : kFail;
    }

    if (verify->parsed()) {
      if (depth > 0) cfg.depth = depth;
      const SuiteReport rep = run_suite(suite, cfg);
      if (json)
        print(to_json(rep));
      else
        std::cout << to_text(rep);
      return rep.passed() ? kPass : kFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
