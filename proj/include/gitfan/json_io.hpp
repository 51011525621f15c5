#pragma once

// JSON forms of every toolkit value. Integers and rationals are always
// strings ("-3", "5/2"), never JSON numbers.

#include <json.hpp>

#include "gitfan/polycone.hpp"
#include "gitfan/quotient.hpp"
#include "gitfan/res2.hpp"

namespace gitfan::json_io {

using json = nlohmann::ordered_json;

json to_json(const Integer& v);
json to_json(const Rational& v);
json to_json(const ratlin::IntVector& v);
json to_json(const IntMatrix& m);
json to_json(const polycone::Cone& c);
json to_json(const polycone::Fan& f, const polycone::FanReport& report);

/// {"rows","cols","entries"}; throws InputError("invalid_matrix").
IntMatrix matrix_from_json(const json& j);
/// A JSON string or integer holding "p/q"; throws InputError("invalid_rational").
Rational rational_from_json(const json& j);

json to_json(const WeightSystem& w);
/// {"labels": [...], "A": <matrix>}; throws InputError("invalid_weights").
WeightSystem weights_from_json(const json& j);

json to_json(const Character& chi);
json supports_to_json(const WeightSystem& w, const std::vector<SupportSet>& sets);
json to_json(const WeightSystem& w, const Chamber& ch);
json to_json(const WeightSystem& w, const Monomial& m);
json to_json(const WeightSystem& w, const StratumUnion& u);
json to_json(const WeightSystem& w, const WallCrossing& wc);

json to_json(const res2::BranchCurve& c);
/// {"a": {"20": "p/q", ...}}; absent labels are zero. Throws
/// InputError("invalid_curve").
res2::BranchCurve curve_from_json(const json& j);
json to_json(const res2::WInvariants& w);
json j_to_json(const std::optional<Rational>& j);
json to_json(const res2::GroupElement& g);

}  // namespace gitfan::json_io
