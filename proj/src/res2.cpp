#include "gitfan/res2.hpp"

#include <algorithm>
#include <set>

#include "gitfan/error.hpp"

namespace gitfan::res2 {

using ratlin::IntVector;

namespace {

int row_of(const std::string& label) { return label.at(0) - '0'; }
int col_of(const std::string& label) { return label.at(1) - '0'; }

Rational power(const Rational& x, long e) {
  Rational out = 1;
  const Rational base = e < 0 ? Rational(1) / x : x;
  for (long k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string label_of(int i, int j) { return std::to_string(i) + std::to_string(j); }

bool is_odd_row(const std::string& label) { return row_of(label) % 2 == 1; }

}  // namespace

// --- constants -------------------------------------------------------------

const std::vector<std::string>& labels() {
  static const std::vector<std::string> q{"20", "04", "12", "13", "14", "22",
                                          "23", "24", "31", "32", "33", "34"};
  return q;
}

const IntMatrix& weight_matrix() {
  static const IntMatrix a = [] {
    std::vector<IntVector> cols;
    for (const auto& l : labels()) cols.push_back({1, row_of(l), col_of(l)});
    return IntMatrix::from_columns(cols, 3);
  }();
  return a;
}

const IntMatrix& kernel_matrix() {
  static const IntMatrix b = IntMatrix::from_rows({
      {-1, -1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 1, -2, 1, 0, 0, 0, 0, 0, 0, 0},
      {-1, 0, 2, -2, 0, 1, 0, 0, 0, 0, 0, 0},
      {-1, 0, 3, -3, 0, 0, 1, 0, 0, 0, 0, 0},
      {-1, 0, 4, -4, 0, 0, 0, 1, 0, 0, 0, 0},
      {-1, 1, 2, -3, 0, 0, 0, 0, 1, 0, 0, 0},
      {-1, 1, 3, -4, 0, 0, 0, 0, 0, 1, 0, 0},
      {-1, 1, 4, -5, 0, 0, 0, 0, 0, 0, 1, 0},
      {-1, 1, 5, -6, 0, 0, 0, 0, 0, 0, 0, 1},
  });
  return b;
}

const std::vector<std::string>& kernel_coordinates() {
  static const std::vector<std::string> k{"12", "14", "22", "23", "24",
                                          "31", "32", "33", "34"};
  return k;
}

WeightSystem weights() { return WeightSystem(labels(), weight_matrix()); }

IntVector kernel_column(const std::string& label) {
  const auto& q = labels();
  auto it = std::find(q.begin(), q.end(), label);
  if (it == q.end()) throw InputError("unknown_label", "unknown label '" + label + "'");
  return kernel_matrix().column(static_cast<std::size_t>(it - q.begin()));
}

Character red_character() { return Character::from_point(Rational(2, 3), Rational(3)); }
Character blue_character() { return Character::from_point(Rational(16, 15), Rational(37, 15)); }
Character wall_character() { return Character::from_point(Rational(1), Rational(5, 2)); }

// --- branch curves ---------------------------------------------------------

bool BranchCurve::allowed_label(const std::string& label) {
  if (label == "21") return true;
  const auto& q = labels();
  return std::find(q.begin(), q.end(), label) != q.end();
}

BranchCurve::BranchCurve(const std::map<std::string, Rational>& coefficients) {
  for (const auto& [label, value] : coefficients) set(label, value);
}

Rational BranchCurve::operator[](const std::string& label) const {
  auto it = a_.find(label);
  return it == a_.end() ? Rational(0) : it->second;
}

void BranchCurve::set(const std::string& label, const Rational& value) {
  if (!allowed_label(label)) {
    throw InputError("invalid_curve", "coefficient a" + label +
                                          " is zero in normal form and cannot be set");
  }
  Rational v = value;
  v.canonicalize();
  if (v == 0) {
    a_.erase(label);
  } else {
    a_[label] = v;
  }
}

GroupElement GroupElement::full(const Rational& r, const Rational& s, const Rational& t) {
  if (r == 0 || s == 0 || t == 0) {
    throw InputError("invalid_group_element", "torus coordinates must be nonzero");
  }
  GroupElement g;
  g.r_ = r;
  g.s_ = s;
  g.t_ = t;
  return g;
}

GroupElement GroupElement::residual(const Rational& t, int eps) {
  if (t == 0 || (eps != 1 && eps != -1)) {
    throw InputError("invalid_group_element", "need t != 0 and eps = +-1");
  }
  GroupElement g = full(power(t, -4), eps * t * t, t);
  g.kind_ = Kind::residual;
  g.eps_ = eps;
  return g;
}

BranchCurve act(const GroupElement& g, const BranchCurve& c) {
  BranchCurve out;
  for (const auto& [label, a] : c.coefficients()) {
    out.set(label, g.r() * power(g.s(), row_of(label)) * power(g.t(), col_of(label)) * a);
  }
  return out;
}

BranchCurve eliminate_a21(const BranchCurve& c) {
  if (c["20"] == 0) throw InputError("not_allowable", "a20 must be nonzero");
  const Rational gamma = -c["21"] / (4 * c["20"]);
  if (gamma == 0) return c;
  // y^(4-j) -> (y + gamma x)^(4-j) sends a_ij into a_i(j+k).
  std::map<std::string, Rational> acc;
  for (const auto& [label, a] : c.coefficients()) {
    const int i = row_of(label), j = col_of(label);
    Rational g = 1;
    for (int k = 0; k <= 4 - j; ++k) {
      acc[label_of(i, j + k)] += Rational(binomial(4 - j, k)) * g * a;
      g *= gamma;
    }
  }
  BranchCurve out;
  for (const auto& [label, a] : acc) {
    if (label == "21") continue;  // cancels exactly by the choice of gamma
    out.set(label, a);
  }
  return out;
}

bool allowability_necessary(const BranchCurve& c) { return c["20"] != 0 && c["04"] != 0; }

Normalized scale_normalize(const BranchCurve& c) {
  if (!allowability_necessary(c)) {
    throw InputError("not_allowable", "a20 and a04 must both be nonzero");
  }
  Normalized n;
  const Rational r = 1 / c["04"];
  const Rational s2 = c["04"] / c["20"];
  const bool square = sgn(s2) > 0 && mpz_perfect_square_p(s2.get_num_mpz_t()) &&
                      mpz_perfect_square_p(s2.get_den_mpz_t());
  if (square) {
    const Rational s(sqrt(s2.get_num()), sqrt(s2.get_den()));
    n.witness = GroupElement::full(r, s, 1);
    n.curve = act(*n.witness, c);
    return n;
  }
  // Write s = sqrt(D); then r s^i a_ij = r D^(i/2) a_ij for even i and
  // r D^((i-1)/2) a_ij * sqrt(D) for odd i.
  n.radicand = s2;
  n.extension_required = true;
  for (const auto& [label, a] : c.coefficients()) {
    n.curve.set(label, r * power(s2, row_of(label) / 2) * a);
  }
  return n;
}

// --- Z/2 invariants --------------------------------------------------------

const std::vector<std::string>& invariant_labels() {
  static const std::vector<std::string> l{"12", "13", "14", "22", "23",
                                          "24", "31", "32", "33", "34"};
  return l;
}

int degree(const std::string& label) { return 2 * row_of(label) + col_of(label) - 4; }

namespace {

WInvariants graded() {
  WInvariants out;
  for (const auto& l : invariant_labels()) out.grading[l] = degree(l);
  return out;
}

}  // namespace

WInvariants w_invariants(const Normalized& n) {
  WInvariants out = graded();
  const BranchCurve& c = n.curve;
  // a12 = c12 sqrt(D), so a12^2 = c12^2 D and a_ij / a12 = c_ij / c12.
  out.w["12"] = c["12"] * c["12"] * n.radicand;
  for (const auto& l : invariant_labels()) {
    if (l == "12") continue;
    if (is_odd_row(l)) {
      out.w[l] = c["12"] == 0 ? std::nullopt : std::optional<Rational>(c[l] / c["12"]);
    } else {
      out.w[l] = c[l];
    }
  }
  return out;
}

WInvariants w_invariants_direct(const BranchCurve& c) {
  if (!allowability_necessary(c)) {
    throw InputError("not_allowable", "a20 and a04 must both be nonzero");
  }
  WInvariants out = graded();
  const Rational s2 = c["04"] / c["20"];
  const Rational a12 = c["12"];
  out.w["12"] = a12 * a12 / (c["20"] * c["04"]);
  for (const auto& l : invariant_labels()) {
    if (l == "12") continue;
    if (is_odd_row(l)) {
      out.w[l] = a12 == 0 ? std::nullopt
                          : std::optional<Rational>(power(s2, (row_of(l) - 1) / 2) * c[l] / a12);
    } else {
      out.w[l] = power(s2, row_of(l) / 2) * c[l] / c["04"];
    }
  }
  return out;
}

std::optional<Rational> j_invariant(const Rational& w12) {
  Rational sq = w12 * w12;
  sq.canonicalize();
  if (sq == 4) return std::nullopt;
  return Rational(4, 3) * (3 - sq) / (4 - sq);
}

// --- the monoid N and its charts ------------------------------------------

namespace {

std::size_t invariant_index(const std::string& label) {
  const auto& l = invariant_labels();
  return static_cast<std::size_t>(std::find(l.begin(), l.end(), label) - l.begin());
}

MonoidGenerator make_generator(const std::vector<std::string>& factors) {
  MonoidGenerator g;
  g.exponents.assign(invariant_labels().size(), 0);
  for (const auto& f : factors) {
    ++g.exponents[invariant_index(f)];
    g.degree += degree(f);
  }
  for (std::size_t k = 0; k < factors.size();) {
    std::size_t e = 1;
    while (k + e < factors.size() && factors[k + e] == factors[k]) ++e;
    if (!g.name.empty()) g.name += "*";
    g.name += "w" + factors[k];
    if (e > 1) g.name += "^" + std::to_string(e);
    k += e;
  }
  return g;
}

}  // namespace

std::vector<MonoidGenerator> monoid_generators() {
  const std::vector<std::string> odd{"13", "14", "31", "32", "33", "34"};
  std::vector<MonoidGenerator> out;
  for (const char* l : {"22", "23", "24", "12"}) out.push_back(make_generator({l}));
  for (const auto& ij : odd) out.push_back(make_generator({"12", ij}));
  for (std::size_t a = 0; a < odd.size(); ++a)
    for (std::size_t b = a; b < odd.size(); ++b)
      out.push_back(make_generator({"12", odd[a], odd[b]}));
  return out;
}

std::vector<IntVector> monoid_inequalities() {
  const std::size_t n = invariant_labels().size();
  std::vector<IntVector> out;
  IntVector first(n, 0);
  for (const auto& l : invariant_labels()) {
    if (l == "12") first[invariant_index(l)] = 2;
    else if (is_odd_row(l)) first[invariant_index(l)] = -1;
  }
  out.push_back(first);
  for (const auto& l : invariant_labels()) {
    if (l == "12") continue;
    IntVector e(n, 0);
    e[invariant_index(l)] = 1;
    out.push_back(e);
  }
  return out;
}

polycone::Cone monoid_cone() {
  return polycone::Cone::from_inequalities(invariant_labels().size(), monoid_inequalities());
}

bool in_monoid(const std::vector<long>& exponents) {
  IntVector v(exponents.begin(), exponents.end());
  for (const auto& ineq : monoid_inequalities())
    if (ratlin::dot(ineq, v) < 0) return false;
  return true;
}

IntVector twelve_inequality() { return {2, 1, 2, 3, 4, 2, 3, 4, 5}; }

IntVector thirteen_inequality() { return {0, -2, -2, -3, -4, -3, -4, -5, -6}; }

ChartRow chart_row(const MonoidGenerator& g) {
  if (g.degree <= 0) {
    throw InputError("degree_zero_generator",
                     g.name + " has degree zero; it is a unit in every chart");
  }
  auto n = [&](const std::string& l) { return g.exponents[invariant_index(l)]; };
  long odd_sum = 0;
  for (const auto& l : invariant_labels())
    if (l != "12" && is_odd_row(l)) odd_sum += n(l);
  ChartRow row;
  row.twelve = 2 * n("12") == odd_sum;
  row.thirteen = n("13") == 0;
  for (const auto& l : kernel_coordinates())
    if (l != "12" && n(l) == 0) row.positive.push_back(l);
  return row;
}

polycone::Cone chart_cone(const ChartRow& row) {
  const auto& coords = kernel_coordinates();
  std::vector<IntVector> normals;
  if (row.twelve) normals.push_back(twelve_inequality());
  if (row.thirteen) normals.push_back(thirteen_inequality());
  for (const auto& l : row.positive) {
    IntVector e(coords.size(), 0);
    e[static_cast<std::size_t>(std::find(coords.begin(), coords.end(), l) - coords.begin())] = 1;
    normals.push_back(e);
  }
  return polycone::Cone::from_inequalities(coords.size(), normals);
}

polycone::Cone chart_cone(const MonoidGenerator& g) { return chart_cone(chart_row(g)); }

std::vector<std::pair<std::string, polycone::Cone>> minimal_chart_cones() {
  std::vector<std::pair<ChartRow, polycone::Cone>> all;
  for (const auto& g : monoid_generators()) {
    if (g.degree <= 0) continue;
    const ChartRow row = chart_row(g);
    polycone::Cone c = chart_cone(row);
    const bool seen = std::any_of(all.begin(), all.end(),
                                  [&](const auto& rc) { return rc.second == c; });
    if (!seen) all.emplace_back(row, std::move(c));
  }
  std::vector<std::pair<std::string, polycone::Cone>> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < all.size() && minimal; ++j)
      if (i != j && polycone::contains(all[i].second, all[j].second)) minimal = false;
    if (!minimal) continue;
    // The label is the single coordinate dropped from the sign conditions;
    // C_13 keeps all of them.
    std::string label = "13";
    for (const auto& l : kernel_coordinates()) {
      const auto& pos = all[i].first.positive;
      if (l != "12" && std::find(pos.begin(), pos.end(), l) == pos.end()) label = l;
    }
    out.emplace_back(label, all[i].second);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace gitfan::res2
