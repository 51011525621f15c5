#include "gitfan/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "gitfan/quotient.hpp"
#include "gitfan/res2.hpp"

namespace gitfan::fixtures {

namespace {

using Labels = std::vector<std::string>;

std::vector<std::string> q_without(const Labels& drop) {
  std::vector<std::string> out;
  for (const auto& l : res2::labels())
    if (std::find(drop.begin(), drop.end(), l) == drop.end()) out.push_back(l);
  return out;
}

std::vector<SupportSet> sets(const WeightSystem& w, const std::vector<Labels>& ls) {
  std::vector<SupportSet> out;
  for (const auto& l : ls) out.push_back(support_from_labels(w, l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Labels> family(const Labels& fixed, const Labels& drop) {
  std::vector<Labels> out;
  for (const auto& l : q_without(drop)) {
    Labels s = fixed;
    s.push_back(l);
    out.push_back(s);
  }
  return out;
}

std::vector<Labels> concat(std::initializer_list<std::vector<Labels>> parts) {
  std::vector<Labels> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<Labels> red_list() {
  return concat({family({"04", "20"}, {"04", "12", "20"}), family({"04", "12"}, {"04", "12", "20"})});
}

std::vector<Labels> blue_list() {
  return concat({family({"04", "20"}, {"04", "12", "20"}),
                 family({"04", "12"}, {"04", "12", "13", "14", "20"}),
                 family({"12", "13"}, {"04", "12", "13", "14"}),
                 family({"12", "14"}, {"04", "12", "13", "14"})});
}

std::vector<Labels> wall_list() {
  return concat({{{"12", "13"}, {"12", "14"}},
                 family({"04", "20"}, {"04", "12", "20"}),
                 family({"04", "12"}, {"04", "12", "13", "14", "20"})});
}

Outcome compare_sets(const WeightSystem& w, std::vector<SupportSet> got,
                     const std::vector<Labels>& expected) {
  std::sort(got.begin(), got.end());
  const auto want = sets(w, expected);
  std::ostringstream os;
  os << got.size() << " sets, expected " << want.size();
  return {got == want, os.str()};
}

Outcome supports_at(const Character& chi, const std::vector<Labels>& expected) {
  const auto w = res2::weights();
  return compare_sets(w, minimal_support_sets(w, chi), expected);
}

// Drops every set containing another one, leaving the minimal hitting-set
// form of a union of coordinate strata.
std::vector<std::vector<std::size_t>> hitting_form(const WeightSystem& w,
                                                    const std::vector<Labels>& ls) {
  const auto all = sets(w, ls);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : all) {
    const bool redundant = std::any_of(all.begin(), all.end(), [&](const SupportSet& t) {
      return !(t == s) && t.subset_of(s);
    });
    if (!redundant) out.push_back(s.members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Outcome locus_at(const Character& chi, const std::vector<Labels>& expected) {
  const auto w = res2::weights();
  const auto u = unstable_locus(w, chi);
  std::vector<std::vector<std::size_t>> got;
  for (const auto& c : u.components) got.push_back(c.zero);
  std::sort(got.begin(), got.end());
  std::ostringstream os;
  const auto want = hitting_form(w, expected);
  os << got.size() << " components; the " << expected.size() << " listed reduce to "
     << want.size();
  return {got == want, os.str()};
}

bool inside_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& q) {
  const int o = sgn(arrangement::orient(a, b, c));
  return sgn(arrangement::orient(a, b, q)) == o && sgn(arrangement::orient(b, c, q)) == o &&
         sgn(arrangement::orient(c, a, q)) == o;
}

Outcome kernel_fixture() {
  const auto& A = res2::weight_matrix();
  const auto& B = res2::kernel_matrix();
  const bool zero = (A * B.transpose()).is_zero();
  const bool equal = ratlin::lattices_equal(ratlin::kernel_lattice_basis(A), B);
  return {zero && equal, std::string("A B^T = 0: ") + (zero ? "yes" : "no") +
                             ", lattice equal: " + (equal ? "yes" : "no")};
}

Outcome red_fan_fixture() {
  const auto w = res2::weights();
  const auto fan = quotient_fan(w, res2::kernel_matrix(), res2::red_character());
  const auto rep = polycone::fan_check(fan);
  const auto charts = res2::minimal_chart_cones();
  std::size_t matched = 0;
  for (const auto& [label, cone] : charts) {
    const auto I = support_from_labels(w, {"04", "20", label});
    if (dual(support_cone(w, res2::kernel_matrix(), I)) == cone) ++matched;
  }
  std::ostringstream os;
  os << fan.maximal_cones.size() << " cones in dim " << fan.ambient_dim
     << "; pairwise faces " << rep.pairwise_faces << ", simplicial " << rep.all_simplicial
     << ", complete " << rep.complete.value_or(false) << "; " << matched
     << "/9 duals equal chart cones";
  const bool ok = fan.maximal_cones.size() == 18 && fan.ambient_dim == 9 && rep.pairwise_faces &&
                  rep.all_simplicial && rep.complete.value_or(false) && charts.size() == 9 &&
                  matched == 9;
  return {ok, os.str()};
}

Outcome blue_fan_fixture() {
  const auto w = res2::weights();
  const auto fan = quotient_fan(w, res2::kernel_matrix(), res2::blue_character());
  const auto rep = polycone::fan_check(fan);
  std::ostringstream os;
  os << fan.maximal_cones.size() << " cones; complete " << rep.complete.value_or(false);
  return {fan.maximal_cones.size() == 32 && rep.pairwise_faces && rep.all_simplicial &&
              rep.complete.value_or(false),
          os.str()};
}

// Non-simplicial in the sense that the generating columns B_l, l outside I,
// are linearly dependent. The extreme-ray count is reported alongside.
Outcome wall_fan_fixture() {
  const auto w = res2::weights();
  const auto& B = res2::kernel_matrix();
  bool ok = true;
  std::ostringstream os;
  for (const Labels& l : {Labels{"12", "13"}, Labels{"12", "14"}}) {
    const auto I = support_from_labels(w, l);
    std::vector<ratlin::IntVector> gens;
    for (std::size_t c = 0; c < w.size(); ++c)
      if (!std::binary_search(I.members.begin(), I.members.end(), c)) gens.push_back(B.column(c));
    const auto rank = ratlin::rank(gens, B.rows());
    const auto cone = support_cone(w, B, I);
    os << "{" << l[0] << "," << l[1] << "}: " << gens.size() << " generators of rank " << rank
       << ", " << cone.rays().size() << " extreme rays; ";
    ok = ok && gens.size() == 10 && rank == 9;
  }
  return {ok, os.str()};
}

Outcome wall_relation_fixture() {
  const auto w = res2::weights();
  const auto wc = wall_crossing(w, res2::kernel_matrix(), res2::wall_character(),
                                res2::red_character(), res2::blue_character());
  const std::map<std::string, int> want{{"20", 1},  {"04", -1}, {"14", 0}, {"22", 1},
                                        {"23", 1},  {"24", 1},  {"31", 2}, {"32", 2},
                                        {"33", 2},  {"34", 2}};
  auto it = std::find_if(wc.relations.begin(), wc.relations.end(), [&](const WallRelation& r) {
    return r.degenerate == support_from_labels(w, {"12", "13"});
  });
  if (it == wc.relations.end()) return {false, "no relation for {12,13}"};
  bool ok = it->labels.size() == want.size();
  for (std::size_t k = 0; ok && k < it->labels.size(); ++k)
    ok = it->coefficients[k] == want.at(w.labels()[it->labels[k]]);
  auto idx = [&](const Labels& l) { return support_from_labels(w, l).members; };
  ok = ok && it->j_minus == idx({"04"}) && it->j_zero == idx({"14"}) &&
       it->j_plus == idx(q_without({"04", "12", "13", "14"}));
  return {ok, ok ? "relation and sign partition match" : "relation differs"};
}

Outcome flip_fixture() {
  const auto w = res2::weights();
  const auto wc = wall_crossing(w, res2::kernel_matrix(), res2::wall_character(),
                                res2::red_character(), res2::blue_character());
  auto a = wc.only_side_a, b = wc.only_side_b;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const bool ok = a == sets(w, {{"04", "12", "13"}, {"04", "12", "14"}}) &&
                  b == sets(w, concat({family({"12", "13"}, {"04", "12", "13", "14"}),
                                       family({"12", "14"}, {"04", "12", "13", "14"})}));
  std::ostringstream os;
  os << a.size() << " red-only cones replaced by " << b.size() << " blue-only cones";
  return {ok, os.str()};
}

Outcome chambers_fixture() {
  const auto w = res2::weights();
  const auto chambers = enumerate_chambers(w);
  const auto red = sets(w, red_list());
  const auto blue = sets(w, blue_list());
  const auto prop = support_from_labels(w, {"04", "20", "31", "34"});
  bool red_found = false, blue_found = false, prop_ok = true;
  for (const auto& ch : chambers) {
    auto fp = ch.fingerprint;
    std::sort(fp.begin(), fp.end());
    const Point2 q{ch.representative[0], ch.representative[1]};
    if (fp == red && inside_triangle({0, 4}, {1, 2}, {1, 3}, q)) red_found = true;
    if (fp == blue && inside_triangle({1, 2}, {1, 3}, {Rational(6, 5), Rational(12, 5)}, q))
      blue_found = true;
    if (std::none_of(fp.begin(), fp.end(), [&](const SupportSet& s) { return s.subset_of(prop); }))
      prop_ok = false;
  }
  std::ostringstream os;
  os << chambers.size() << " two-dimensional chambers; red " << red_found << ", blue "
     << blue_found << ", every chamber has a support inside {04,20,31,34} " << prop_ok;
  return {red_found && blue_found && prop_ok, os.str()};
}

Outcome chart_table_fixture() {
  // Rows of the chart table: (generator, twelve, thirteen, dropped labels).
  struct Row {
    Labels factors;
    bool twelve, thirteen;
    Labels dropped;
  };
  std::vector<Row> rows;
  for (const char* j : {"22", "23", "24"}) rows.push_back({{j}, true, true, {j}});
  rows.push_back({{"12", "13"}, false, false, {}});
  const Labels five{"14", "31", "32", "33", "34"};
  for (const auto& ij : five) rows.push_back({{"12", ij}, false, true, {ij}});
  rows.push_back({{"12", "13", "13"}, true, false, {}});
  for (const auto& ij : five) rows.push_back({{"12", "13", ij}, true, false, {ij}});
  for (std::size_t a = 0; a < five.size(); ++a)
    for (std::size_t b = a; b < five.size(); ++b)
      rows.push_back({{"12", five[a], five[b]}, true, true,
                      a == b ? Labels{five[a]} : Labels{five[a], five[b]}});

  std::size_t matched = 0;
  const auto gens = res2::monoid_generators();
  for (const auto& row : rows) {
    std::vector<long> n(res2::invariant_labels().size(), 0);
    for (const auto& f : row.factors) {
      const auto& il = res2::invariant_labels();
      ++n[static_cast<std::size_t>(std::find(il.begin(), il.end(), f) - il.begin())];
    }
    auto g = std::find_if(gens.begin(), gens.end(),
                          [&](const res2::MonoidGenerator& x) { return x.exponents == n; });
    if (g == gens.end()) continue;
    const auto got = res2::chart_row(*g);
    Labels positive;
    for (const auto& l : res2::kernel_coordinates())
      if (l != "12" && std::find(row.dropped.begin(), row.dropped.end(), l) == row.dropped.end())
        positive.push_back(l);
    if (got.twelve == row.twelve && got.thirteen == row.thirteen && got.positive == positive)
      ++matched;
  }
  const auto minimal = res2::minimal_chart_cones();
  std::ostringstream os;
  os << matched << "/" << rows.size() << " table rows reproduced; " << minimal.size()
     << " minimal chart cones";
  return {matched == rows.size() && rows.size() == 30 && minimal.size() == 9, os.str()};
}

Outcome monoid_fixture() {
  const auto gens = res2::monoid_generators();
  bool ok = gens.size() == 31;
  for (const auto& g : gens) {
    long d = 0;
    for (std::size_t k = 0; k < g.exponents.size(); ++k)
      d += g.exponents[k] * res2::degree(res2::invariant_labels()[k]);
    ok = ok && d == g.degree && res2::in_monoid(g.exponents);
    if (g.name == "w12") ok = ok && g.degree == 0;
  }
  return {ok, std::to_string(gens.size()) + " generators"};
}

Outcome j_fixture() {
  const bool ok = res2::j_invariant(0) == Rational(1) && !res2::j_invariant(2) &&
                  !res2::j_invariant(-2) && res2::j_invariant(1) == Rational(8, 9) &&
                  res2::j_invariant(4) == Rational(13, 9);
  return {ok, "J(0)=1, J(1)=8/9, J(4)=13/9, J(+-2)=infinity"};
}

}  // namespace

const std::vector<Fixture>& all() {
  static const std::vector<Fixture> list{
      {"kernel-basis", "kernel lattice of A equals the row lattice of B", kernel_fixture},
      {"red-supports", "18 minimal support sets in the red chamber",
       [] { return supports_at(res2::red_character(), red_list()); }},
      {"blue-supports", "32 minimal support sets in the blue chamber",
       [] { return supports_at(res2::blue_character(), blue_list()); }},
      {"wall-supports", "18 minimal support sets on the wall",
       [] { return supports_at(res2::wall_character(), wall_list()); }},
      {"red-fan", "red quotient fan is simplicial and complete; duals are the chart cones",
       red_fan_fixture},
      {"blue-fan", "blue quotient fan is simplicial and complete", blue_fan_fixture},
      {"wall-fan", "sigma_{12,13} and sigma_{12,14} have 10 dependent generators in dim 9", wall_fan_fixture},
      {"red-unstable", "unstable locus of the red chamber",
       [] {
         return locus_at(res2::red_character(),
                         {{"04"}, {"12", "20"}, q_without({"04", "12", "20"})});
       }},
      {"blue-unstable", "unstable locus of the blue chamber",
       [] {
         Labels z4{"04"}, z20{"20"}, z1314{"13", "14"};
         for (const auto& l : q_without({"04", "12", "13", "14"})) z4.push_back(l);
         for (const auto& l : q_without({"04", "12", "13", "14", "20"})) {
           z20.push_back(l);
           z1314.push_back(l);
         }
         return locus_at(res2::blue_character(),
                         {{"04", "12"}, {"12", "20"}, {"04", "13", "14"}, z4, z20, z1314});
       }},
      {"wall-relation", "relation among B-columns outside {12,13} and its sign partition",
       wall_relation_fixture},
      {"wall-flip", "cones replaced when crossing from red to blue", flip_fixture},
      {"chambers", "red and blue chambers in the arrangement; support inside {04,20,31,34}",
       chambers_fixture},
      {"chart-table", "chart cone table and the nine minimal chart cones", chart_table_fixture},
      {"monoid-generators", "generators of N, their degrees and the ten inequalities",
       monoid_fixture},
      {"j-invariant", "J-invariant of the double fiber", j_fixture},
  };
  return list;
}

}  // namespace gitfan::fixtures
