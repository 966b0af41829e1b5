#include "a22/serialize.hpp"

namespace a22 {

Json to_json(const Rat& q) { return to_string(q); }

Json to_json(const QPoly& p) {
  Json out = Json::array();
  for (const Rat& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const QRatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const LaurentMat& m) {
  Json out = Json::array();
  m.for_each_term([&](int row, int col, int e, const QRatFunc& c) {
    out.push_back({{"row", row + 1}, {"col", col + 1}, {"lambda_exp", e}, {"ratfunc", to_json(c)}});
  });
  return out;
}

Json to_json(const DegreeVector& k) { return Json::array({k.k0, k.k1}); }

Json to_json(const QTrace& t) {
  Json c = Json::array(), pairs = Json::array(), gs = Json::array(), degrees = Json::array();
  for (const Rat& q : t.c) c.push_back(to_json(q));
  for (const QPair& p : t.pairs) {
    pairs.push_back(Json::array({to_json(p.y0), to_json(p.y1)}));
    degrees.push_back(to_json(p.degrees()));
  }
  for (const QRatFunc& g : t.gs) gs.push_back(to_json(g));
  return Json{{"J", t.J.entries()}, {"c", c}, {"pairs", pairs}, {"gs", gs}, {"degrees", degrees}};
}

Json to_json(const QMiura& L) { return Json{{"v", to_json(L.v)}}; }

Json to_json(const DiffOp3& L) { return Json{{"u1", to_json(L.u1)}, {"u0", to_json(L.u0)}}; }

Json to_json(const FlowSample& s) {
  Json c = Json::array(), gamma = Json::array();
  for (const Rat& q : s.c) c.push_back(to_json(q));
  for (const Rat& q : s.gamma) gamma.push_back(to_json(q));
  return Json{{"J", s.J.entries()},      {"c", c},         {"r", s.r}, {"field", to_json(s.field.x_component)},
              {"gamma", gamma}, {"residual_zero", s.residual_zero}};
}

Json to_json(const PsDO& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"order", it->first}, {"num", to_json(it->second.num())}, {"den", to_json(it->second.den())}});
  Json floor = p.exact() ? Json(nullptr) : Json(p.floor());
  return Json{{"floor", floor}, {"terms", terms}};
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  return parse_rat(j.get<std::string>());
}

QPoly poly_from_json(const Json& j) {
  std::vector<Rat> coeffs;
  for (const Json& c : j) coeffs.push_back(rat_from_json(c));
  return QPoly(std::move(coeffs));
}

QRatFunc ratfunc_from_json(const Json& j) { return QRatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

}  // namespace a22
