// One line per acceptance criterion. Expected lists are written out by hand.
// The exit status counts failures that are not recorded as known deviations.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gitfan/polycone.hpp"
#include "gitfan/quotient.hpp"
#include "gitfan/ratlin.hpp"
#include "gitfan/res2.hpp"

using namespace gitfan;
using Labels = std::vector<std::string>;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Verdict()> check;
  // Why the criterion cannot hold as worded, when that is the case.
  std::string known_deviation;
};

std::set<Labels> as_label_sets(const WeightSystem& w, const std::vector<SupportSet>& s) {
  std::set<Labels> out;
  for (const auto& x : s) {
    auto l = x.labels(w);
    std::sort(l.begin(), l.end());
    out.insert(l);
  }
  return out;
}

std::set<Labels> sorted_sets(std::vector<Labels> ls) {
  std::set<Labels> out;
  for (auto& l : ls) {
    std::sort(l.begin(), l.end());
    out.insert(l);
  }
  return out;
}

Verdict compare(const std::vector<SupportSet>& got, const std::vector<Labels>& want) {
  const auto w = res2::weights();
  const auto g = as_label_sets(w, got);
  const auto e = sorted_sets(want);
  std::ostringstream os;
  os << got.size() << " sets, " << e.size() << " expected";
  return {g == e && got.size() == e.size(), os.str()};
}

const std::vector<Labels> kRed{
    {"04", "20", "13"}, {"04", "20", "14"}, {"04", "20", "22"}, {"04", "20", "23"}, {"04", "20", "24"},
    {"04", "20", "31"}, {"04", "20", "32"}, {"04", "20", "33"}, {"04", "20", "34"}, {"04", "12", "13"},
    {"04", "12", "14"}, {"04", "12", "22"}, {"04", "12", "23"}, {"04", "12", "24"}, {"04", "12", "31"},
    {"04", "12", "32"}, {"04", "12", "33"}, {"04", "12", "34"}};

const std::vector<Labels> kBlue{
    {"04", "20", "13"}, {"04", "20", "14"}, {"04", "20", "22"}, {"04", "20", "23"}, {"04", "20", "24"},
    {"04", "20", "31"}, {"04", "20", "32"}, {"04", "20", "33"}, {"04", "20", "34"},
    {"04", "12", "22"}, {"04", "12", "23"}, {"04", "12", "24"}, {"04", "12", "31"}, {"04", "12", "32"},
    {"04", "12", "33"}, {"04", "12", "34"},
    {"12", "13", "20"}, {"12", "13", "22"}, {"12", "13", "23"}, {"12", "13", "24"}, {"12", "13", "31"},
    {"12", "13", "32"}, {"12", "13", "33"}, {"12", "13", "34"},
    {"12", "14", "20"}, {"12", "14", "22"}, {"12", "14", "23"}, {"12", "14", "24"}, {"12", "14", "31"},
    {"12", "14", "32"}, {"12", "14", "33"}, {"12", "14", "34"}};

const std::vector<Labels> kWall{
    {"12", "13"},       {"12", "14"},       {"04", "20", "13"}, {"04", "20", "14"}, {"04", "20", "22"},
    {"04", "20", "23"}, {"04", "20", "24"}, {"04", "20", "31"}, {"04", "20", "32"}, {"04", "20", "33"},
    {"04", "20", "34"}, {"04", "12", "22"}, {"04", "12", "23"}, {"04", "12", "24"}, {"04", "12", "31"},
    {"04", "12", "32"}, {"04", "12", "33"}, {"04", "12", "34"}};

Verdict ac1() {
  const auto& A = res2::weight_matrix();
  const auto& B = res2::kernel_matrix();
  const auto K = ratlin::kernel_lattice_basis(A);
  const bool eq = ratlin::lattices_equal(K, B);
  const bool zero = (A * B.transpose()).is_zero();
  return {eq && zero, std::string("lattice-equal ") + (eq ? "yes" : "no") + ", A*B^T = 0 " + (zero ? "yes" : "no")};
}

Verdict ac2() { return compare(minimal_support_sets(res2::weights(), res2::red_character()), kRed); }
Verdict ac3() { return compare(minimal_support_sets(res2::weights(), res2::blue_character()), kBlue); }
Verdict ac4() { return compare(minimal_support_sets(res2::weights(), res2::wall_character()), kWall); }

Verdict ac5() {
  const auto w = res2::weights();
  const auto fan = quotient_fan(w, res2::kernel_matrix(), res2::red_character());
  const auto rep = polycone::fan_check(fan);
  std::size_t matched = 0;
  const auto charts = res2::minimal_chart_cones();
  for (const char* ij : {"13", "14", "22", "23", "24", "31", "32", "33", "34"}) {
    const auto sigma = support_cone(w, res2::kernel_matrix(), support_from_labels(w, {"04", "20", ij}));
    for (const auto& [label, cone] : charts)
      if (label == ij && dual(sigma) == cone) ++matched;
  }
  std::ostringstream os;
  os << fan.maximal_cones.size() << " cones in dim " << fan.ambient_dim << ", pairwise faces "
     << rep.pairwise_faces << ", simplicial " << rep.all_simplicial << ", complete "
     << rep.complete.value_or(false) << ", " << matched << "/9 duals equal chart cones";
  return {fan.maximal_cones.size() == 18 && fan.ambient_dim == 9 && rep.pairwise_faces && rep.all_simplicial &&
              rep.complete.value_or(false) && matched == 9 && charts.size() == 9,
          os.str()};
}

Verdict ac6() {
  const auto w = res2::weights();
  const auto& B = res2::kernel_matrix();
  bool dependent = true, ten_rays = true;
  std::ostringstream os;
  for (const Labels& I : {Labels{"12", "13"}, Labels{"12", "14"}}) {
    const auto S = support_from_labels(w, I);
    std::vector<ratlin::IntVector> gens;
    for (std::size_t l = 0; l < w.size(); ++l)
      if (!std::binary_search(S.members.begin(), S.members.end(), l)) gens.push_back(B.column(l));
    const auto cone = support_cone(w, B, S);
    const auto rank = ratlin::rank(gens, 9);
    dependent = dependent && gens.size() == 10 && rank == 9;
    ten_rays = ten_rays && cone.rays().size() == 10 && !polycone::is_simplicial(cone);
    os << "{" << I[0] << "," << I[1] << "}: " << gens.size() << " generators, rank " << rank << ", "
       << cone.rays().size() << " extreme rays; ";
  }
  os << "generators dependent " << (dependent ? "yes" : "no");
  return {dependent && ten_rays, os.str()};
}

Verdict ac7() {
  const auto w = res2::weights();
  auto zeros = [&](const Character& chi) {
    std::set<Labels> out;
    for (const auto& c : unstable_locus(w, chi).components) {
      Labels l;
      for (auto i : c.zero) l.push_back(w.labels()[i]);
      std::sort(l.begin(), l.end());
      out.insert(l);
    }
    return out;
  };
  const auto red = zeros(res2::red_character());
  const bool red_ok =
      red == sorted_sets({{"04"}, {"12", "20"}, {"13", "14", "22", "23", "24", "31", "32", "33", "34"}});
  // The six published blue components, each as its vanishing set. The fourth
  // contains the fifth, so the minimal form has five members.
  const std::vector<Labels> blue_listed{
      {"04", "12"},
      {"12", "20"},
      {"04", "13", "14"},
      {"04", "20", "22", "23", "24", "31", "32", "33", "34"},
      {"20", "22", "23", "24", "31", "32", "33", "34"},
      {"13", "14", "22", "23", "24", "31", "32", "33", "34"}};
  std::set<Labels> blue_min;
  for (const auto& s : sorted_sets(blue_listed)) {
    bool redundant = false;
    for (const auto& t : sorted_sets(blue_listed))
      if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) redundant = true;
    if (!redundant) blue_min.insert(s);
  }
  const auto blue = zeros(res2::blue_character());
  const bool blue_ok = blue == blue_min;

  std::size_t agree = 0;
  for (const auto& chi : {res2::red_character(), res2::blue_character(), res2::wall_character()}) {
    const auto u = unstable_locus(w, chi);
    const auto supports = minimal_support_sets(w, chi);
    for (unsigned mask = 0; mask < 1U << 12; ++mask) {
      std::vector<bool> p(12);
      for (std::size_t i = 0; i < 12; ++i) p[i] = mask >> i & 1U;
      const bool unstable = std::any_of(u.components.begin(), u.components.end(), [&](const Stratum& c) {
        return std::none_of(c.zero.begin(), c.zero.end(), [&](std::size_t l) { return p[l]; });
      });
      if (unstable != semistable_pattern_test(supports, p)) ++agree;
    }
  }
  std::ostringstream os;
  os << "red " << red.size() << " components, blue " << blue.size() << " (6 listed, " << blue_min.size()
     << " minimal), " << agree << "/12288 patterns agree";
  return {red_ok && blue_ok && agree == 3 * 4096, os.str()};
}

Verdict ac8() {
  const auto w = res2::weights();
  const auto wc = wall_crossing(w, res2::kernel_matrix(), res2::wall_character(), res2::red_character(),
                                res2::blue_character());
  const std::map<std::string, long> want{{"20", 1}, {"04", -1}, {"14", 0}, {"22", 1}, {"23", 1},
                                         {"24", 1}, {"31", 2},  {"32", 2}, {"33", 2}, {"34", 2}};
  bool rel_ok = false, part_ok = false;
  for (const auto& r : wc.relations) {
    if (r.degenerate.labels(w) != Labels{"12", "13"}) continue;
    rel_ok = r.labels.size() == want.size();
    for (std::size_t k = 0; rel_ok && k < r.labels.size(); ++k)
      rel_ok = r.coefficients[k] == want.at(w.labels()[r.labels[k]]);
    auto names = [&](const std::vector<std::size_t>& v) {
      Labels l;
      for (auto i : v) l.push_back(w.labels()[i]);
      std::sort(l.begin(), l.end());
      return l;
    };
    part_ok = names(r.j_minus) == Labels{"04"} && names(r.j_zero) == Labels{"14"} &&
              names(r.j_plus) == Labels{"20", "22", "23", "24", "31", "32", "33", "34"};
  }
  const auto a = as_label_sets(w, wc.only_side_a);
  const auto b = as_label_sets(w, wc.only_side_b);
  const bool flip_ok = a == sorted_sets({{"04", "12", "13"}, {"04", "12", "14"}}) &&
                       b == sorted_sets({{"12", "13", "20"}, {"12", "13", "22"}, {"12", "13", "23"},
                                         {"12", "13", "24"}, {"12", "13", "31"}, {"12", "13", "32"},
                                         {"12", "13", "33"}, {"12", "13", "34"}, {"12", "14", "20"},
                                         {"12", "14", "22"}, {"12", "14", "23"}, {"12", "14", "24"},
                                         {"12", "14", "31"}, {"12", "14", "32"}, {"12", "14", "33"},
                                         {"12", "14", "34"}});
  std::ostringstream os;
  os << "relation " << (rel_ok ? "matches" : "differs") << ", partition " << (part_ok ? "matches" : "differs")
     << ", " << a.size() << " cones replaced by " << b.size();
  return {rel_ok && part_ok && flip_ok, os.str()};
}

bool inside_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& q) {
  const auto s = [](const Rational& x) { return sgn(x); };
  const int o = s(arrangement::orient(a, b, c));
  return s(arrangement::orient(a, b, q)) == o && s(arrangement::orient(b, c, q)) == o &&
         s(arrangement::orient(c, a, q)) == o;
}

Verdict ac9() {
  const auto w = res2::weights();
  const auto chambers = enumerate_chambers(w);
  const auto corner = support_from_labels(w, {"04", "20", "31", "34"});
  bool red = false, blue = false, prop = true;
  for (const auto& ch : chambers) {
    const auto fp = as_label_sets(w, ch.fingerprint);
    const Point2 q{ch.representative[0], ch.representative[1]};
    if (fp == sorted_sets(kRed) && inside_triangle({0, 4}, {1, 2}, {1, 3}, q)) red = true;
    if (fp == sorted_sets(kBlue) && inside_triangle({1, 2}, {1, 3}, {Rational(6, 5), Rational(12, 5)}, q))
      blue = true;
    if (std::none_of(ch.fingerprint.begin(), ch.fingerprint.end(),
                     [&](const SupportSet& s) { return s.subset_of(corner); }))
      prop = false;
  }
  std::ostringstream os;
  os << chambers.size() << " chambers; red " << red << ", blue " << blue << ", corner support everywhere " << prop;
  return {red && blue && prop, os.str()};
}

std::mt19937_64& rng() {
  static std::mt19937_64 g(7);
  return g;
}
long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

Verdict ac10() {
  const auto w = res2::weights();
  // (a) and (b): random rational points, inside and outside the hull.
  std::size_t inside = 0, outside = 0;
  bool size_ok = true, empty_ok = true;
  const std::vector<Point2> hull{{0, 4}, {2, 0}, {3, 1}, {3, 4}};
  std::vector<Point2> all;
  for (const auto& p : w.points()) all.push_back(p);
  while (inside < 500 || outside < 100) {
    const long den = uniform(1, 15);
    Rational b(uniform(-den, 4 * den), den), c(uniform(-den, 5 * den), den);
    b.canonicalize();
    c.canonicalize();
    const auto sets = minimal_support_sets(w, Character::from_point(b, c));
    for (const auto& s : sets) size_ok = size_ok && s.members.size() <= 3;
    // Closed hull: non-strict membership via the four hull edges.
    bool in = true;
    for (std::size_t i = 0; i < hull.size(); ++i)
      if (arrangement::orient(hull[i], hull[(i + 1) % hull.size()], {b, c}) < 0) in = false;
    empty_ok = empty_ok && sets.empty() == !in;
    (in ? inside : outside) += 1;
  }
  // (c): random small cones.
  bool cones_ok = true;
  for (int t = 0; t < 200; ++t) {
    const auto dim = static_cast<std::size_t>(uniform(2, 4));
    std::vector<ratlin::IntVector> rays;
    while (rays.size() < static_cast<std::size_t>(uniform(1, 6))) {
      ratlin::IntVector v(dim);
      for (auto& x : v) x = uniform(-3, 3);
      if (!ratlin::is_zero(v)) rays.push_back(v);
    }
    const auto c = polycone::Cone::from_rays(dim, rays);
    cones_ok = cones_ok && dual(dual(c)) == c;
    for (const auto& n : c.facets())
      for (const auto& r : c.rays()) cones_ok = cones_ok && ratlin::dot(n, r) >= 0;
    cones_ok = cones_ok && polycone::Cone::from_inequalities(dim, c.facets(), c.equations()) == c;
  }
  // (d): ten random pairs of interior points per chamber.
  bool stable = true;
  std::size_t pairs = 0;
  for (const auto& ch : enumerate_chambers(w)) {
    for (int k = 0; k < 10; ++k) {
      std::vector<Character> two;
      for (int side = 0; side < 2; ++side) {
        Rational x = 0, y = 0, total = 0;
        for (const auto& v : ch.polygon) {
          const Rational r = uniform(1, 9);
          x += r * v.x;
          y += r * v.y;
          total += r;
        }
        two.push_back(Character::from_point(x / total, y / total));
      }
      stable = stable && minimal_support_sets(w, two[0]) == minimal_support_sets(w, two[1]);
      ++pairs;
    }
  }
  std::ostringstream os;
  os << inside << " inside / " << outside << " outside points; size bound " << size_ok << ", emptiness "
     << empty_ok << "; 200 cones " << cones_ok << "; " << pairs << " chamber pairs stable " << stable;
  return {size_ok && empty_ok && cones_ok && stable, os.str()};
}

Rational rnd() {
  Rational r(uniform(-9, 9), uniform(1, 5));
  r.canonicalize();
  return r;
}

Verdict ac11() {
  using namespace res2;
  // eliminate_a21 against a direct expansion of each row under y -> y + g x.
  bool shear_ok = true;
  const Labels free{"20", "04", "12", "13", "14", "21", "22", "23", "24", "31", "32", "33", "34"};
  for (int t = 0; t < 100; ++t) {
    BranchCurve c;
    for (const auto& l : free) c.set(l, rnd());
    while (c["20"] == 0) c.set("20", rnd());
    const Rational g = -c["21"] / (4 * c["20"]);
    const auto e = eliminate_a21(c);
    for (int i = 0; i <= 3; ++i) {
      std::vector<Rational> out(5, 0);
      for (int j = 0; j < 5; ++j) {
        const std::string l = std::to_string(i) + std::to_string(j);
        if (!BranchCurve::allowed_label(l)) continue;
        std::vector<Rational> poly{1};
        for (int k = 0; k < 4 - j; ++k) {
          std::vector<Rational> next(poly.size() + 1, 0);
          for (std::size_t m = 0; m < poly.size(); ++m) {
            next[m] += poly[m];
            next[m + 1] += poly[m] * g;
          }
          poly = next;
        }
        for (std::size_t m = 0; m < poly.size(); ++m) out[j + m] += c[l] * poly[m];
      }
      for (int j = 0; j < 5; ++j) {
        const std::string l = std::to_string(i) + std::to_string(j);
        const Rational got = BranchCurve::allowed_label(l) ? e[l] : Rational(0);
        shear_ok = shear_ok && got == out[j];
      }
    }
    shear_ok = shear_ok && e["21"] == 0 && eliminate_a21(e) == e;
  }
  // Residual elements fix w12 and the degree-zero monomial w13^2 / w22.
  bool residual_ok = true;
  for (int t = 0; t < 100; ++t) {
    BranchCurve c;
    for (const auto& l : free)
      if (l != "21") c.set(l, rnd());
    c.set("20", 1);
    c.set("04", 1);
    while (c["12"] == 0) c.set("12", rnd());
    while (c["22"] == 0) c.set("22", rnd());
    Rational s = rnd();
    while (s == 0) s = rnd();
    const auto moved = act(GroupElement::residual(s, uniform(0, 1) ? 1 : -1), c);
    const auto a = w_invariants(scale_normalize(c)), b = w_invariants(scale_normalize(moved));
    const auto ratio = [](const WInvariants& w) -> Rational { return *w.w.at("13") * *w.w.at("13") / *w.w.at("22"); };
    residual_ok = residual_ok && *a.w.at("12") == *b.w.at("12") && ratio(a) == ratio(b);
  }
  bool j_ok = j_invariant(0) == Rational(1) && !j_invariant(2) && !j_invariant(-2);
  for (int t = 0; t < 50; ++t) {
    const Rational x = rnd();
    j_ok = j_ok && j_invariant(x) == j_invariant(-x);
  }
  bool degrees_ok = true;
  for (const auto& g : monoid_generators()) {
    long d = 0;
    for (std::size_t k = 0; k < g.exponents.size(); ++k) {
      const auto& l = invariant_labels()[k];
      d += g.exponents[k] * (2 * (l[0] - '0') + (l[1] - '0') - 4);
    }
    degrees_ok = degrees_ok && d == g.degree;
  }
  // The chart table, row by row: generator, then (twelve, thirteen, labels
  // without a sign condition besides 12).
  struct Row {
    Labels factors;
    bool twelve, thirteen;
    Labels unsigned_labels;
  };
  const std::vector<Row> table{
      {{"22"}, true, true, {"22"}},
      {{"23"}, true, true, {"23"}},
      {{"24"}, true, true, {"24"}},
      {{"12", "13"}, false, false, {}},
      {{"12", "14"}, false, true, {"14"}},
      {{"12", "31"}, false, true, {"31"}},
      {{"12", "32"}, false, true, {"32"}},
      {{"12", "33"}, false, true, {"33"}},
      {{"12", "34"}, false, true, {"34"}},
      {{"12", "13", "13"}, true, false, {}},
      {{"12", "13", "14"}, true, false, {"14"}},
      {{"12", "13", "31"}, true, false, {"31"}},
      {{"12", "13", "32"}, true, false, {"32"}},
      {{"12", "13", "33"}, true, false, {"33"}},
      {{"12", "13", "34"}, true, false, {"34"}},
      {{"12", "14", "14"}, true, true, {"14"}},
      {{"12", "14", "31"}, true, true, {"14", "31"}},
      {{"12", "14", "32"}, true, true, {"14", "32"}},
      {{"12", "14", "33"}, true, true, {"14", "33"}},
      {{"12", "14", "34"}, true, true, {"14", "34"}},
      {{"12", "31", "31"}, true, true, {"31"}},
      {{"12", "31", "32"}, true, true, {"31", "32"}},
      {{"12", "31", "33"}, true, true, {"31", "33"}},
      {{"12", "31", "34"}, true, true, {"31", "34"}},
      {{"12", "32", "32"}, true, true, {"32"}},
      {{"12", "32", "33"}, true, true, {"32", "33"}},
      {{"12", "32", "34"}, true, true, {"32", "34"}},
      {{"12", "33", "33"}, true, true, {"33"}},
      {{"12", "33", "34"}, true, true, {"33", "34"}},
      {{"12", "34", "34"}, true, true, {"34"}}};
  std::size_t rows_ok = 0;
  const auto gens = monoid_generators();
  for (const auto& row : table) {
    std::vector<long> n(invariant_labels().size(), 0);
    for (const auto& f : row.factors)
      ++n[static_cast<std::size_t>(std::find(invariant_labels().begin(), invariant_labels().end(), f) -
                                   invariant_labels().begin())];
    const auto g = std::find_if(gens.begin(), gens.end(), [&](const MonoidGenerator& x) { return x.exponents == n; });
    if (g == gens.end()) continue;
    const auto got = chart_row(*g);
    Labels positive;
    for (const auto& l : {"14", "22", "23", "24", "31", "32", "33", "34"})
      if (std::find(row.unsigned_labels.begin(), row.unsigned_labels.end(), l) == row.unsigned_labels.end())
        positive.push_back(l);
    if (got.twelve == row.twelve && got.thirteen == row.thirteen && got.positive == positive) ++rows_ok;
  }
  std::ostringstream os;
  os << "shear oracle " << shear_ok << ", residual invariance " << residual_ok << ", J " << j_ok << ", degrees "
     << degrees_ok << ", chart table " << rows_ok << "/" << table.size() << " rows";
  return {shear_ok && residual_ok && j_ok && degrees_ok && rows_ok == table.size(), os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "kernel lattice of A equals B", ac1, ""},
      {"AC2", "red chamber support sets", ac2, ""},
      {"AC3", "blue chamber support sets", ac3, ""},
      {"AC4", "wall support sets", ac4, ""},
      {"AC5", "red quotient fan and chart duality", ac5, ""},
      {"AC6", "wall cones non-simplicial with 10 extreme rays", ac6,
       "B04 = B20 + B22 + B23 + B24 + 2(B31 + B32 + B33 + B34), so B04 is not extreme: each wall "
       "cone has 10 dependent generators but only 9 extreme rays"},
      {"AC7", "unstable loci and the 2^12 pattern oracle", ac7, ""},
      {"AC8", "wall relation, sign partition and flip", ac8, ""},
      {"AC9", "chamber enumeration", ac9, ""},
      {"AC10", "property suites", ac10, ""},
      {"AC11", "res2 suite", ac11, ""},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << v.detail << " ("
              << ms.count() << " ms)";
    if (!v.pass && !c.known_deviation.empty()) std::cout << " [known deviation: " << c.known_deviation << "]";
    std::cout << "\n";
    if (!v.pass && c.known_deviation.empty()) ++unexpected;
    if (v.pass && !c.known_deviation.empty()) {
      std::cout << "  note: " << c.id << " passed although recorded as a known deviation\n";
    }
  }
  return unexpected == 0 ? 0 : 1;
}
