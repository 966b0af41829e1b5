#pragma once

// JSON encodings. Rationals are "p/q" strings ("p" when q = 1), polynomials
// are arrays of rationals in ascending degree, rational functions are
// {num, den}. Matrix indices are 1-based in JSON.

#include "a22/psdo.hpp"

#include <json.hpp>

namespace a22 {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& q);
Json to_json(const QPoly& p);
Json to_json(const QRatFunc& f);
Json to_json(const LaurentMat& m);
Json to_json(const QTrace& t);
Json to_json(const QMiura& L);
Json to_json(const DiffOp3& L);
Json to_json(const FlowSample& s);
Json to_json(const PsDO& p);
Json to_json(const DegreeVector& k);

Rat rat_from_json(const Json& j);
QPoly poly_from_json(const Json& j);
QRatFunc ratfunc_from_json(const Json& j);

}  // namespace a22
