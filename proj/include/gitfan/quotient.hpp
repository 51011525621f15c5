#pragma once

// Toric GIT quotients of affine space by a diagonal torus whose weight
// matrix has three rows, the first all ones. The columns (1, i, j) become a
// planar point configuration, and a character (a1, a2, a3) with a1 > 0 is
// represented by the point (a2/a1, a3/a1). Support sets of invariant
// monomials are exactly the subsets whose strict convex hull contains that
// point; minimal ones have at most three elements.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gitfan/arrangement.hpp"
#include "gitfan/polycone.hpp"
#include "gitfan/ratlin.hpp"

namespace gitfan {

using arrangement::Point2;
using ratlin::IntMatrix;
using ratlin::Integer;
using ratlin::Rational;
using ratlin::RatVector;

class WeightSystem {
 public:
  /// Throws InputError("invalid_weights") unless A has three rows, a first
  /// row of ones, and one distinct label per column.
  WeightSystem(std::vector<std::string> labels, IntMatrix A);

  const std::vector<std::string>& labels() const { return labels_; }
  const IntMatrix& matrix() const { return A_; }
  const std::vector<Point2>& points() const { return points_; }
  std::size_t size() const { return labels_.size(); }

  /// Position of a label; throws InputError("unknown_label").
  std::size_t index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  IntMatrix A_;
  std::vector<Point2> points_;
};

class Character {
 public:
  /// Throws InputError("invalid_character") when alpha1 <= 0.
  Character(Integer a1, Integer a2, Integer a3);
  /// Smallest integral character with the given normalized point.
  static Character from_point(const Rational& b, const Rational& c);

  const Integer& alpha(std::size_t i) const { return alpha_[i]; }
  const RatVector& bc() const { return bc_; }
  Point2 point() const { return {bc_[0], bc_[1]}; }

 private:
  Integer alpha_[3];
  RatVector bc_;
};

// Indices into WeightSystem::labels(), strictly increasing.
struct SupportSet {
  std::vector<std::size_t> members;

  std::vector<std::string> labels(const WeightSystem& w) const;
  bool subset_of(const SupportSet& other) const;
  friend bool operator==(const SupportSet&, const SupportSet&) = default;
  friend bool operator<(const SupportSet& a, const SupportSet& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  }
};

SupportSet support_from_labels(const WeightSystem& w,
                               const std::vector<std::string>& labels);

struct Monomial {
  std::vector<Integer> exponents;  // one per label
  Integer degree;
};

struct Chamber {
  RatVector representative;
  std::vector<SupportSet> fingerprint;
  int dimension = -1;  // -1 marks the empty chamber (outside the hull)
  std::vector<Point2> polygon;  // filled in by enumerate_chambers
  bool empty() const { return dimension < 0; }
};

struct Stratum {
  std::vector<std::size_t> zero;     // a_l = 0 for these
  std::vector<std::size_t> nonzero;  // a_l != 0 for these
};

struct StratumUnion {
  std::vector<Stratum> components;  // minimal hitting sets, zero-only
  std::vector<Stratum> disjoint;    // same union, pairwise disjoint pieces
};

struct WallRelation {
  SupportSet degenerate;                    // size-2 support at the wall
  std::vector<std::size_t> labels;          // labels outside `degenerate`
  std::vector<Integer> coefficients;        // relation among B-columns
  std::vector<std::size_t> j_minus, j_zero, j_plus;
  std::vector<SupportSet> plus_fan_cones;   // maximal cones of the + fan
  std::vector<SupportSet> minus_fan_cones;  // maximal cones of the - fan
};

struct WallCrossing {
  Character wall;
  Character side_a;
  Character side_b;
  std::vector<SupportSet> degenerate_supports;
  std::vector<WallRelation> relations;
  std::vector<SupportSet> only_side_a;  // cones present only on side a
  std::vector<SupportSet> only_side_b;
};

/// q = sum r_i p_i with every r_i > 0 and sum r_i = 1. Exact case analysis
/// for up to three points, exact LP otherwise.
bool strict_hull_membership(const std::vector<Point2>& points, const Point2& q);
/// The same predicate, always decided by the rational simplex.
bool strict_hull_membership_lp(const std::vector<Point2>& points, const Point2& q);
/// Strictly positive barycentric weights, when they exist.
std::optional<std::vector<Rational>> strictly_positive_weights(
    const std::vector<Point2>& points, const Point2& q);

std::vector<SupportSet> minimal_support_sets(const WeightSystem& w,
                                             const Character& chi);

/// Invariant monomial with support exactly I, from a strictly positive convex
/// combination with cleared denominators. Throws
/// InputError("certification_failed") when its degree exceeds degree_bound.
Monomial certify_support(const WeightSystem& w, const Character& chi,
                         const SupportSet& I, const Integer& degree_bound);
/// A m = d alpha, exactly.
bool verify_monomial(const WeightSystem& w, const Character& chi,
                     const Monomial& m);

Chamber chamber_of(const WeightSystem& w, const Character& chi);
std::vector<Chamber> enumerate_chambers(const WeightSystem& w);
/// Maximal collinear segments through two or more configuration points.
std::vector<std::pair<Point2, Point2>> configuration_lines(const WeightSystem& w);

/// Rejects B with InputError("non_kernel_basis") unless its rows span the
/// kernel lattice of w's weight matrix.
polycone::Fan quotient_fan(const WeightSystem& w, const IntMatrix& B,
                           const Character& chi);
polycone::Cone support_cone(const WeightSystem& w, const IntMatrix& B,
                            const SupportSet& I);
std::string support_label(const WeightSystem& w, const SupportSet& I);

std::vector<std::vector<std::size_t>> minimal_hitting_sets(
    const std::vector<SupportSet>& family, std::size_t universe);
StratumUnion unstable_locus(const WeightSystem& w, const Character& chi);
/// pattern[l] true means a_l != 0.
bool semistable_pattern_test(const WeightSystem& w, const Character& chi,
                             const std::vector<bool>& pattern);
bool semistable_pattern_test(const std::vector<SupportSet>& supports,
                             const std::vector<bool>& pattern);

WallCrossing wall_crossing(const WeightSystem& w, const IntMatrix& B,
                           const Character& wall, const Character& side_a,
                           const Character& side_b);

}  // namespace gitfan
