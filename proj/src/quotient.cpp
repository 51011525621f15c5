#include "gitfan/quotient.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gitfan/error.hpp"

namespace gitfan {

using arrangement::on_segment;
using arrangement::orient;
using ratlin::IntVector;

// --- WeightSystem / Character ----------------------------------------------

WeightSystem::WeightSystem(std::vector<std::string> labels, IntMatrix A)
    : labels_(std::move(labels)), A_(std::move(A)) {
  if (A_.rows() != 3) {
    throw InputError("invalid_weights", "weight matrix must have exactly three rows");
  }
  if (A_.cols() == 0 || A_.cols() != labels_.size()) {
    throw InputError("invalid_weights", "need one label per weight-matrix column");
  }
  for (std::size_t c = 0; c < A_.cols(); ++c) {
    if (A_(0, c) != 1) {
      throw InputError("invalid_weights", "first row of the weight matrix must be all ones");
    }
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw InputError("invalid_weights", "labels must be distinct");
  }
  for (std::size_t c = 0; c < A_.cols(); ++c) {
    points_.push_back({Rational(A_(1, c)), Rational(A_(2, c))});
  }
}

std::size_t WeightSystem::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown_label", "unknown label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Character::Character(Integer a1, Integer a2, Integer a3)
    : alpha_{std::move(a1), std::move(a2), std::move(a3)} {
  if (alpha_[0] <= 0) {
    throw InputError("invalid_character", "alpha1 must be positive");
  }
  bc_ = RatVector({ratlin::make_rational(alpha_[1], alpha_[0]),
                   ratlin::make_rational(alpha_[2], alpha_[0])});
}

Character Character::from_point(const Rational& b, const Rational& c) {
  const Integer l = lcm(b.get_den(), c.get_den());
  return Character(l, b.get_num() * (l / b.get_den()), c.get_num() * (l / c.get_den()));
}

std::vector<std::string> SupportSet::labels(const WeightSystem& w) const {
  std::vector<std::string> out;
  for (auto i : members) out.push_back(w.labels().at(i));
  return out;
}

bool SupportSet::subset_of(const SupportSet& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(),
                       members.end());
}

SupportSet support_from_labels(const WeightSystem& w,
                               const std::vector<std::string>& labels) {
  SupportSet s;
  for (const auto& l : labels) s.members.push_back(w.index_of(l));
  std::sort(s.members.begin(), s.members.end());
  s.members.erase(std::unique(s.members.begin(), s.members.end()), s.members.end());
  if (s.members.empty()) throw InputError("invalid_support", "support set must be nonempty");
  return s;
}

std::string support_label(const WeightSystem& w, const SupportSet& I) {
  std::string out;
  for (auto i : I.members) {
    if (!out.empty()) out += ",";
    out += w.labels().at(i);
  }
  return out;
}

// --- strict convex hulls ---------------------------------------------------

namespace {

bool in_open_segment(const Point2& a, const Point2& b, const Point2& q) {
  return !(q == a) && !(q == b) && on_segment(a, b, q);
}

int sign(const Rational& x) { return sgn(x); }

}  // namespace

std::optional<std::vector<Rational>> strictly_positive_weights(
    const std::vector<Point2>& points, const Point2& q) {
  // Variables s_1..s_k, t >= 0 with r_i = s_i + t; maximize t.
  const std::size_t k = points.size();
  if (k == 0) return std::nullopt;
  std::vector<std::vector<Rational>> A(3, std::vector<Rational>(k + 1));
  Rational sx = 0, sy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    A[0][i] = 1;
    A[1][i] = points[i].x;
    A[2][i] = points[i].y;
    sx += points[i].x;
    sy += points[i].y;
  }
  A[0][k] = static_cast<long>(k);
  A[1][k] = sx;
  A[2][k] = sy;
  std::vector<Rational> c(k + 1, 0);
  c[k] = 1;
  const auto res = ratlin::maximize(A, {Rational(1), q.x, q.y}, c);
  if (res.status != ratlin::LpStatus::optimal || res.value <= 0) return std::nullopt;
  std::vector<Rational> r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = res.x[i] + res.x[k];
  return r;
}

bool strict_hull_membership_lp(const std::vector<Point2>& points, const Point2& q) {
  return strictly_positive_weights(points, q).has_value();
}

bool strict_hull_membership(const std::vector<Point2>& points, const Point2& q) {
  std::vector<Point2> p = points;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  switch (p.size()) {
    case 0:
      return false;
    case 1:
      return p[0] == q;
    case 2:
      return in_open_segment(p[0], p[1], q);
    case 3: {
      const int o = sign(orient(p[0], p[1], p[2]));
      if (o == 0) return in_open_segment(p.front(), p.back(), q);  // sorted along the line
      return sign(orient(p[0], p[1], q)) == o && sign(orient(p[1], p[2], q)) == o &&
             sign(orient(p[2], p[0], q)) == o;
    }
    default:
      return strict_hull_membership_lp(p, q);
  }
}

// --- support sets ----------------------------------------------------------

std::vector<SupportSet> minimal_support_sets(const WeightSystem& w, const Character& chi) {
  const auto& pts = w.points();
  const Point2 q = chi.point();
  const std::size_t n = w.size();
  std::vector<SupportSet> kept;
  auto consider = [&](std::vector<std::size_t> members) {
    SupportSet s{std::move(members)};
    for (const auto& k : kept)
      if (k.subset_of(s)) return;
    std::vector<Point2> sub;
    for (auto i : s.members) sub.push_back(pts[i]);
    if (strict_hull_membership(sub, q)) kept.push_back(std::move(s));
  };
  for (std::size_t i = 0; i < n; ++i) consider({i});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) consider({i, j});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) consider({i, j, k});
  return kept;
}

Monomial certify_support(const WeightSystem& w, const Character& chi, const SupportSet& I,
                         const Integer& degree_bound) {
  std::vector<Point2> sub;
  for (auto i : I.members) sub.push_back(w.points().at(i));
  const auto r = strictly_positive_weights(sub, chi.point());
  if (!r) {
    throw InputError("not_a_support",
                     "{" + support_label(w, I) + "} is not a support set at this character");
  }
  std::vector<Rational> scaled;
  Integer d = 1;
  for (const auto& ri : *r) {
    scaled.push_back(Rational(chi.alpha(0)) * ri);
    d = lcm(d, scaled.back().get_den());
  }
  if (d > degree_bound) {
    throw InputError("certification_failed",
                     "certificate needs degree " + d.get_str() + " > bound " +
                         degree_bound.get_str() + "; raise the bound");
  }
  Monomial m;
  m.degree = d;
  m.exponents.assign(w.size(), 0);
  for (std::size_t k = 0; k < I.members.size(); ++k) {
    m.exponents[I.members[k]] = scaled[k].get_num() * (d / scaled[k].get_den());
  }
  if (!verify_monomial(w, chi, m)) {
    throw std::logic_error("certificate does not satisfy A m = d alpha");
  }
  return m;
}

bool verify_monomial(const WeightSystem& w, const Character& chi, const Monomial& m) {
  if (m.exponents.size() != w.size()) return false;
  for (const auto& e : m.exponents)
    if (e < 0) return false;
  for (std::size_t r = 0; r < 3; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < w.size(); ++c) s += w.matrix()(r, c) * m.exponents[c];
    if (s != m.degree * chi.alpha(r)) return false;
  }
  return true;
}

// --- chambers -------------------------------------------------------------

Chamber chamber_of(const WeightSystem& w, const Character& chi) {
  Chamber ch;
  ch.representative = chi.bc();
  ch.fingerprint = minimal_support_sets(w, chi);
  if (ch.fingerprint.empty()) return ch;  // outside the hull

  const Point2 q = chi.point();
  const auto& pts = w.points();
  if (std::find(pts.begin(), pts.end(), q) != pts.end()) {
    ch.dimension = 0;
    return ch;
  }
  std::set<IntVector> directions;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (!in_open_segment(pts[i], pts[j], q)) continue;
      auto d = ratlin::primitive(std::vector<Rational>{pts[j].x - pts[i].x, pts[j].y - pts[i].y});
      if (d[0] < 0 || (d[0] == 0 && d[1] < 0)) d = ratlin::negate(d);
      directions.insert(d);
    }
  ch.dimension = directions.empty() ? 2 : (directions.size() == 1 ? 1 : 0);
  return ch;
}

std::vector<Chamber> enumerate_chambers(const WeightSystem& w) {
  const auto& pts = w.points();
  std::vector<std::pair<Point2, Point2>> segments;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) segments.emplace_back(pts[i], pts[j]);
  const auto dcel = arrangement::Dcel::build(segments);

  std::vector<Chamber> out;
  for (auto& poly : dcel.bounded_faces()) {
    Rational x = 0, y = 0;
    for (const auto& p : poly) {
      x += p.x;
      y += p.y;
    }
    const Rational k(static_cast<long>(poly.size()));
    Chamber ch = chamber_of(w, Character::from_point(x / k, y / k));
    if (ch.dimension != 2) {
      throw std::logic_error("arrangement face representative is not generic");
    }
    ch.polygon = std::move(poly);
    out.push_back(std::move(ch));
  }
  std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) {
    return Point2{a.representative[0], a.representative[1]} <
           Point2{b.representative[0], b.representative[1]};
  });
  return out;
}

std::vector<std::pair<Point2, Point2>> configuration_lines(const WeightSystem& w) {
  const auto& pts = w.points();
  // Line a x + b y = c with (a, b, c) primitive and (a, b) sign-normalized.
  std::map<IntVector, std::vector<Point2>> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) continue;
      const Rational a = pts[j].y - pts[i].y;
      const Rational b = pts[i].x - pts[j].x;
      const Rational c = a * pts[i].x + b * pts[i].y;
      auto key = ratlin::primitive(std::vector<Rational>{a, b, c});
      if (key[0] < 0 || (key[0] == 0 && key[1] < 0)) key = ratlin::negate(key);
      auto& on = lines[key];
      on.push_back(pts[i]);
      on.push_back(pts[j]);
    }
  std::vector<std::pair<Point2, Point2>> out;
  for (auto& [key, on] : lines) {
    const auto [lo, hi] = std::minmax_element(on.begin(), on.end());
    out.emplace_back(*lo, *hi);
  }
  return out;
}

// --- quotient fans ---------------------------------------------------------

polycone::Cone support_cone(const WeightSystem& w, const IntMatrix& B, const SupportSet& I) {
  std::vector<IntVector> rays;
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (std::binary_search(I.members.begin(), I.members.end(), c)) continue;
    auto col = B.column(c);
    if (!ratlin::is_zero(col)) rays.push_back(std::move(col));
  }
  return polycone::Cone::from_rays(B.rows(), rays);
}

namespace {

void require_kernel_basis(const WeightSystem& w, const IntMatrix& B) {
  if (B.cols() != w.size() ||
      !ratlin::lattices_equal(B, ratlin::kernel_lattice_basis(w.matrix()))) {
    throw InputError("non_kernel_basis",
                     "rows of B do not form a basis of the kernel lattice of A");
  }
}

}  // namespace

polycone::Fan quotient_fan(const WeightSystem& w, const IntMatrix& B, const Character& chi) {
  require_kernel_basis(w, B);
  polycone::Fan fan;
  fan.ambient_dim = B.rows();
  for (const auto& I : minimal_support_sets(w, chi)) {
    fan.maximal_cones.emplace_back(support_label(w, I), support_cone(w, B, I));
  }
  return fan;
}

// --- unstable loci ---------------------------------------------------------

std::vector<std::vector<std::size_t>> minimal_hitting_sets(
    const std::vector<SupportSet>& family, std::size_t universe) {
  using Set = std::vector<std::size_t>;
  auto hits = [](const Set& t, const SupportSet& e) {
    for (auto x : e.members)
      if (std::binary_search(t.begin(), t.end(), x)) return true;
    return false;
  };
  std::vector<Set> current{Set{}};
  for (const auto& e : family) {
    for (auto x : e.members)
      if (x >= universe) throw InputError("invalid_support", "support member out of range");
    std::set<Set> next;
    for (const auto& t : current) {
      if (hits(t, e)) {
        next.insert(t);
        continue;
      }
      for (auto x : e.members) {
        Set u = t;
        u.insert(std::lower_bound(u.begin(), u.end(), x), x);
        next.insert(std::move(u));
      }
    }
    current.clear();
    for (const auto& t : next) {
      bool minimal = true;
      for (const auto& o : next)
        if (o != t && o.size() < t.size() &&
            std::includes(t.begin(), t.end(), o.begin(), o.end())) {
          minimal = false;
          break;
        }
      if (minimal) current.push_back(t);
    }
  }
  std::sort(current.begin(), current.end(), [](const Set& a, const Set& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return current;
}

namespace {

using Set = std::vector<std::size_t>;

bool contains_index(const Set& s, std::size_t x) {
  return std::binary_search(s.begin(), s.end(), x);
}

void insert_sorted(Set& s, std::size_t x) {
  if (!contains_index(s, x)) s.insert(std::lower_bound(s.begin(), s.end(), x), x);
}

// Splits {zero = 0, nonzero != 0} into disjoint pieces lying outside every
// V(avoid[k]) for k >= next.
void refine(Set zero, Set nonzero, const std::vector<Set>& avoid, std::size_t next,
            std::vector<Stratum>& out) {
  if (next == avoid.size()) {
    out.push_back({std::move(zero), std::move(nonzero)});
    return;
  }
  const Set& h = avoid[next];
  for (auto x : h)
    if (contains_index(nonzero, x)) return refine(std::move(zero), std::move(nonzero), avoid, next + 1, out);
  Set free;
  for (auto x : h)
    if (!contains_index(zero, x)) free.push_back(x);
  for (std::size_t k = 0; k < free.size(); ++k) {
    Set z = zero, nz = nonzero;
    for (std::size_t j = 0; j < k; ++j) insert_sorted(z, free[j]);
    insert_sorted(nz, free[k]);
    refine(std::move(z), std::move(nz), avoid, next + 1, out);
  }
}

}  // namespace

StratumUnion unstable_locus(const WeightSystem& w, const Character& chi) {
  const auto hitting = minimal_hitting_sets(minimal_support_sets(w, chi), w.size());
  StratumUnion u;
  for (const auto& h : hitting) u.components.push_back({h, {}});
  for (std::size_t i = 0; i < hitting.size(); ++i) {
    const std::vector<Set> earlier(hitting.begin(), hitting.begin() + static_cast<std::ptrdiff_t>(i));
    refine(hitting[i], {}, earlier, 0, u.disjoint);
  }
  std::stable_sort(u.disjoint.begin(), u.disjoint.end(), [](const Stratum& a, const Stratum& b) {
    return a.zero.size() < b.zero.size();
  });
  return u;
}

bool semistable_pattern_test(const std::vector<SupportSet>& supports,
                             const std::vector<bool>& pattern) {
  for (const auto& s : supports) {
    bool all_nonzero = true;
    for (auto i : s.members)
      if (!pattern.at(i)) {
        all_nonzero = false;
        break;
      }
    if (all_nonzero) return true;
  }
  return false;
}

bool semistable_pattern_test(const WeightSystem& w, const Character& chi,
                             const std::vector<bool>& pattern) {
  if (pattern.size() != w.size()) {
    throw InputError("invalid_pattern", "pattern must cover every label");
  }
  return semistable_pattern_test(minimal_support_sets(w, chi), pattern);
}

// --- wall crossing ---------------------------------------------------------

WallCrossing wall_crossing(const WeightSystem& w, const IntMatrix& B, const Character& wall,
                           const Character& side_a, const Character& side_b) {
  require_kernel_basis(w, B);
  const Chamber at_wall = chamber_of(w, wall);
  if (at_wall.dimension != 1) {
    throw InputError("invalid_wall", "wall character does not lie on a one-dimensional chamber");
  }
  const Chamber ca = chamber_of(w, side_a);
  const Chamber cb = chamber_of(w, side_b);
  if (ca.dimension != 2 || cb.dimension != 2) {
    throw InputError("invalid_wall", "side characters must lie in two-dimensional chambers");
  }

  WallCrossing wc{wall, side_a, side_b, {}, {}, {}, {}};
  for (const auto& s : at_wall.fingerprint)
    if (s.members.size() == 2) wc.degenerate_supports.push_back(s);

  const auto& pts = w.points();
  const auto& first = wc.degenerate_supports.front().members;
  const int sa = sgn(orient(pts[first[0]], pts[first[1]], side_a.point()));
  const int sb = sgn(orient(pts[first[0]], pts[first[1]], side_b.point()));
  if (sa == 0 || sb == 0 || sa == sb) {
    throw InputError("invalid_wall", "side characters are not on opposite sides of the wall");
  }

  for (const auto& I : wc.degenerate_supports) {
    WallRelation rel;
    rel.degenerate = I;
    for (std::size_t c = 0; c < w.size(); ++c)
      if (!std::binary_search(I.members.begin(), I.members.end(), c)) rel.labels.push_back(c);
    const auto kernel = ratlin::kernel_lattice_basis(B.select_columns(rel.labels));
    if (kernel.rows() != 1) {
      throw InputError("invalid_wall", "generators outside {" + support_label(w, I) +
                                           "} do not satisfy a unique relation");
    }
    rel.coefficients = kernel.row(0);
    auto lead = std::find_if(rel.coefficients.begin(), rel.coefficients.end(),
                             [](const Integer& x) { return x != 0; });
    if (lead != rel.coefficients.end() && *lead < 0) rel.coefficients = ratlin::negate(rel.coefficients);
    for (std::size_t k = 0; k < rel.labels.size(); ++k) {
      const int s = sgn(rel.coefficients[k]);
      (s < 0 ? rel.j_minus : s == 0 ? rel.j_zero : rel.j_plus).push_back(rel.labels[k]);
    }
    auto extend = [&](std::size_t j) {
      SupportSet s = I;
      s.members.insert(std::lower_bound(s.members.begin(), s.members.end(), j), j);
      return s;
    };
    for (auto j : rel.j_minus) rel.plus_fan_cones.push_back(extend(j));
    for (auto j : rel.j_plus) rel.minus_fan_cones.push_back(extend(j));
    wc.relations.push_back(std::move(rel));
  }

  for (const auto& s : ca.fingerprint)
    if (std::find(cb.fingerprint.begin(), cb.fingerprint.end(), s) == cb.fingerprint.end())
      wc.only_side_a.push_back(s);
  for (const auto& s : cb.fingerprint)
    if (std::find(ca.fingerprint.begin(), ca.fingerprint.end(), s) == ca.fingerprint.end())
      wc.only_side_b.push_back(s);
  return wc;
}

}  // namespace gitfan
