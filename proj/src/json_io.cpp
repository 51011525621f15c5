#include "gitfan/json_io.hpp"

#include "gitfan/error.hpp"

namespace gitfan::json_io {

namespace {

json labels_json(const WeightSystem& w, const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(w.labels().at(i));
  return out;
}

json vectors_json(const std::vector<ratlin::IntVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

json to_json(const Integer& v) { return v.get_str(); }

json to_json(const Rational& v) { return ratlin::to_string(v); }

json to_json(const ratlin::IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json to_json(const IntMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) entries.push_back(to_json(m.row(r)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const polycone::Cone& c) {
  return {{"dim", c.ambient_dim()},
          {"rays", vectors_json(c.rays())},
          {"facets", vectors_json(c.facets())},
          {"lineality", vectors_json(c.lineality())},
          {"equations", vectors_json(c.equations())},
          {"simplicial", polycone::is_simplicial(c)}};
}

json to_json(const polycone::Fan& f, const polycone::FanReport& report) {
  json cones = json::array();
  for (const auto& [label, cone] : f.maximal_cones) {
    json entry = {{"label", label}};
    entry.update(to_json(cone));
    cones.push_back(std::move(entry));
  }
  json checks = {{"pairwise_faces", report.pairwise_faces},
                 {"all_simplicial", report.all_simplicial},
                 {"complete", report.complete ? json(*report.complete) : json("not-applicable")},
                 {"completeness_criterion", report.completeness_criterion},
                 {"ridges", report.ridge_count},
                 {"unmatched_ridges", report.unmatched_ridges}};
  return {{"dim", f.ambient_dim}, {"cones", cones}, {"checks", checks}};
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return ratlin::parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw InputError("invalid_rational", "expected a rational string, got " + j.dump());
}

IntMatrix matrix_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("entries")) {
      throw InputError("invalid_matrix", "matrix must be an object with \"entries\"");
    }
    const auto& e = j.at("entries");
    const std::size_t rows = j.contains("rows") ? j.at("rows").get<std::size_t>() : e.size();
    const std::size_t cols = j.contains("cols") ? j.at("cols").get<std::size_t>()
                                                : (e.empty() ? 0 : e.at(0).size());
    if (!e.is_array() || e.size() != rows) {
      throw InputError("invalid_matrix", "\"entries\" must have \"rows\" rows");
    }
    std::vector<ratlin::IntVector> out;
    for (const auto& row : e) {
      if (!row.is_array() || row.size() != cols) {
        throw InputError("invalid_matrix", "every row must have \"cols\" entries");
      }
      ratlin::IntVector v;
      for (const auto& x : row) {
        if (x.is_string()) v.push_back(ratlin::parse_integer(x.get<std::string>()));
        else if (x.is_number_integer()) v.push_back(Integer(x.dump()));
        else throw InputError("invalid_matrix", "matrix entries must be integers");
      }
      out.push_back(std::move(v));
    }
    return IntMatrix::from_rows(out, cols);
  } catch (const json::exception& ex) {
    throw InputError("invalid_matrix", ex.what());
  }
}

json to_json(const WeightSystem& w) { return {{"labels", w.labels()}, {"A", to_json(w.matrix())}}; }

WeightSystem weights_from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("labels") || !j.contains("A")) {
      throw InputError("invalid_weights", "weight system needs \"labels\" and \"A\"");
    }
    return WeightSystem(j.at("labels").get<std::vector<std::string>>(),
                        matrix_from_json(j.at("A")));
  } catch (const json::exception& ex) {
    throw InputError("invalid_weights", ex.what());
  }
}

json to_json(const Character& chi) {
  return {{"alpha", {to_json(chi.alpha(0)), to_json(chi.alpha(1)), to_json(chi.alpha(2))}},
          {"point", {to_json(chi.bc()[0]), to_json(chi.bc()[1])}}};
}

json supports_to_json(const WeightSystem& w, const std::vector<SupportSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s.labels(w));
  return out;
}

json to_json(const WeightSystem& w, const Chamber& ch) {
  json out = {{"representative", {to_json(ch.representative[0]), to_json(ch.representative[1])}},
              {"dimension", ch.dimension},
              {"empty", ch.empty()},
              {"supports", supports_to_json(w, ch.fingerprint)}};
  if (!ch.polygon.empty()) {
    json poly = json::array();
    for (const auto& p : ch.polygon) poly.push_back({to_json(p.x), to_json(p.y)});
    out["polygon"] = poly;
  }
  return out;
}

json to_json(const WeightSystem& w, const Monomial& m) {
  json exps = json::object();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (m.exponents[i] != 0) exps[w.labels()[i]] = to_json(m.exponents[i]);
  return {{"degree", to_json(m.degree)}, {"exponents", exps}};
}

json to_json(const WeightSystem& w, const StratumUnion& u) {
  auto strata = [&](const std::vector<Stratum>& v) {
    json out = json::array();
    for (const auto& s : v)
      out.push_back({{"zero", labels_json(w, s.zero)}, {"nonzero", labels_json(w, s.nonzero)}});
    return out;
  };
  return {{"components", strata(u.components)}, {"disjoint", strata(u.disjoint)}};
}

json to_json(const WeightSystem& w, const WallCrossing& wc) {
  json relations = json::array();
  for (const auto& r : wc.relations) {
    json coeffs = json::object();
    for (std::size_t k = 0; k < r.labels.size(); ++k)
      coeffs[w.labels()[r.labels[k]]] = to_json(r.coefficients[k]);
    relations.push_back({{"degenerate", r.degenerate.labels(w)},
                         {"relation", coeffs},
                         {"J_minus", labels_json(w, r.j_minus)},
                         {"J_zero", labels_json(w, r.j_zero)},
                         {"J_plus", labels_json(w, r.j_plus)},
                         {"plus_fan_cones", supports_to_json(w, r.plus_fan_cones)},
                         {"minus_fan_cones", supports_to_json(w, r.minus_fan_cones)}});
  }
  return {{"wall", to_json(wc.wall)},
          {"side_a", to_json(wc.side_a)},
          {"side_b", to_json(wc.side_b)},
          {"degenerate_supports", supports_to_json(w, wc.degenerate_supports)},
          {"relations", relations},
          {"replaced_cones",
           {{"side_a", supports_to_json(w, wc.only_side_a)},
            {"side_b", supports_to_json(w, wc.only_side_b)}}}};
}

json to_json(const res2::BranchCurve& c) {
  json a = json::object();
  for (const auto& l : res2::labels())
    if (c[l] != 0) a[l] = to_json(c[l]);
  if (c["21"] != 0) a["21"] = to_json(c["21"]);
  return {{"a", a}};
}

res2::BranchCurve curve_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.at("a").is_object()) {
    throw InputError("invalid_curve", "curve must be {\"a\": {label: \"p/q\", ...}}");
  }
  res2::BranchCurve c;
  for (const auto& [label, value] : j.at("a").items()) c.set(label, rational_from_json(value));
  return c;
}

json to_json(const res2::WInvariants& w) {
  json vals = json::object();
  json grading = json::object();
  for (const auto& l : res2::invariant_labels()) {
    const auto& v = w.w.at(l);
    vals[l] = v ? to_json(*v) : json(nullptr);
    grading[l] = w.grading.at(l);
  }
  return {{"w", vals}, {"grading", grading}};
}

json j_to_json(const std::optional<Rational>& j) { return j ? to_json(*j) : json("infinity"); }

json to_json(const res2::GroupElement& g) {
  json out = {{"kind", g.kind() == res2::GroupElement::Kind::full ? "full" : "residual"},
              {"r", to_json(g.r())},
              {"s", to_json(g.s())},
              {"t", to_json(g.t())}};
  if (g.kind() == res2::GroupElement::Kind::residual) out["eps"] = g.eps();
  return out;
}

}  // namespace gitfan::json_io
