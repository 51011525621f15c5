#pragma once

// The worked instance: branch curves of bidegree (4,3) in tacnode normal
// form, the G_m^3 action on their twelve free coefficients, the residual
// G_m x Z/2 action, and the Z/2-invariant monoid with its chart cones.
//
// A curve is f = sum a_ij u^i x^j v^(3-i) y^(4-j). Coefficients are keyed by
// the two-digit label "ij"; only labels in Q and "21" may carry values.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gitfan/polycone.hpp"
#include "gitfan/quotient.hpp"
#include "gitfan/ratlin.hpp"

namespace gitfan::res2 {

// --- constants -------------------------------------------------------------

/// Q = 20,04,12,13,14,22,23,24,31,32,33,34 in this order.
const std::vector<std::string>& labels();
/// Columns (1, i, j) for ij in Q.
const IntMatrix& weight_matrix();
/// The fixed 9 x 12 kernel basis; rows are indexed by kernel_coordinates().
const IntMatrix& kernel_matrix();
/// 12,14,22,23,24,31,32,33,34: the coordinates p_ij of the chart cones.
const std::vector<std::string>& kernel_coordinates();
WeightSystem weights();
/// kernel_matrix() column for a label of Q.
ratlin::IntVector kernel_column(const std::string& label);

/// Interior points of the two triangles next to the wall, and the wall
/// point between them.
Character red_character();   // (2/3, 3)
Character blue_character();  // (16/15, 37/15)
Character wall_character();  // (1, 5/2)

// --- branch curves ---------------------------------------------------------

class BranchCurve {
 public:
  BranchCurve() = default;
  /// Throws InputError("invalid_curve") for a label outside Q and "21".
  explicit BranchCurve(const std::map<std::string, Rational>& coefficients);

  static bool allowed_label(const std::string& label);

  Rational operator[](const std::string& label) const;
  void set(const std::string& label, const Rational& value);
  /// Nonzero coefficients only.
  const std::map<std::string, Rational>& coefficients() const { return a_; }

  friend bool operator==(const BranchCurve&, const BranchCurve&) = default;

 private:
  std::map<std::string, Rational> a_;
};

class GroupElement {
 public:
  enum class Kind { full, residual };

  /// (r, s, t) in G_m^3; throws InputError("invalid_group_element") on a
  /// zero entry.
  static GroupElement full(const Rational& r, const Rational& s, const Rational& t);
  /// (t, eps) acting as (t^-4, eps t^2, t); eps must be +1 or -1.
  static GroupElement residual(const Rational& t, int eps);
  static GroupElement identity() { return full(1, 1, 1); }

  Kind kind() const { return kind_; }
  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }
  const Rational& t() const { return t_; }
  int eps() const { return eps_; }

 private:
  Kind kind_ = Kind::full;
  Rational r_ = 1, s_ = 1, t_ = 1;
  int eps_ = 1;
};

/// a_ij -> r s^i t^j a_ij.
BranchCurve act(const GroupElement& g, const BranchCurve& c);

/// The shear y -> y + gamma x with gamma = -a21 / (4 a20), which clears a21
/// and fixes every a_0j. Throws InputError("not_allowable") when a20 = 0.
BranchCurve eliminate_a21(const BranchCurve& c);

/// a20 != 0 and a04 != 0. Necessary for allowability, not sufficient: the
/// singularity conditions are not checked.
bool allowability_necessary(const BranchCurve& c);

// Result of scaling a20 and a04 to one with t = 1, r = 1/a04 and
// s^2 = a04/a20. When s^2 is not a rational square the normalized curve
// lives over Q(sqrt(radicand)); `curve` then holds rational parts, the true
// coefficient of an odd-i label being curve[ij] * sqrt(radicand).
struct Normalized {
  BranchCurve curve;
  Rational radicand = 1;
  bool extension_required = false;
  std::optional<GroupElement> witness;  // absent when extension_required
};

/// Throws InputError("not_allowable") unless allowability_necessary(c).
Normalized scale_normalize(const BranchCurve& c);

// --- Z/2 invariants --------------------------------------------------------

/// 12,13,14,22,23,24,31,32,33,34.
const std::vector<std::string>& invariant_labels();
/// 2i + j - 4.
int degree(const std::string& label);

struct WInvariants {
  // w12 is always present; the ratios a_ij / a12 are absent when a12 = 0.
  std::map<std::string, std::optional<Rational>> w;
  std::map<std::string, int> grading;
};

/// w12 = a12^2, w_ij = a_ij / a12 for odd i, w_ij = a_ij for 22, 23, 24.
WInvariants w_invariants(const Normalized& n);
/// The same values straight from an unnormalized allowable curve, with no
/// square roots involved (w12 = a12^2 / (a20 a04), and so on).
WInvariants w_invariants_direct(const BranchCurve& c);

/// J of the reduced double fiber, (4/3)(3 - w12^2)/(4 - w12^2). Here eta is
/// the affine coordinate on the second exceptional curve with branch points
/// 0, infinity and the roots of eta^2 + w12 eta + 1. Absent (infinity) at
/// w12 = +-2, where the double fiber is of type I_n.
std::optional<Rational> j_invariant(const Rational& w12);

// --- the monoid N and its charts ------------------------------------------

struct MonoidGenerator {
  std::string name;                 // e.g. "w12*w13^2"
  std::vector<long> exponents;      // n_ij over invariant_labels()
  long degree = 0;
};

/// w22, w23, w24, w12, w12*w_ij and w12*w_ij*w_kl (ij <= kl) for
/// ij, kl in {13,14,31,32,33,34}.
std::vector<MonoidGenerator> monoid_generators();
/// The ten inequalities n.x >= 0 defining N, over invariant_labels().
std::vector<ratlin::IntVector> monoid_inequalities();
polycone::Cone monoid_cone();
bool in_monoid(const std::vector<long>& exponents);

/// Inequality vectors over kernel_coordinates() for the two special
/// conditions: 2p12 + p14 + 2p22 + ... >= 0, and 2p14 + 2p22 + ... <= 0
/// written as a ">= 0" normal.
ratlin::IntVector twelve_inequality();
ratlin::IntVector thirteen_inequality();

struct ChartRow {
  bool twelve = false;                 // the p12-weighted inequality applies
  bool thirteen = false;               // the p14-weighted one applies
  std::vector<std::string> positive;   // labels with p_kl >= 0
};

/// Which defining inequalities apply after inverting g. Throws
/// InputError("degree_zero_generator") for w12, which lies in every chart.
ChartRow chart_row(const MonoidGenerator& g);
polycone::Cone chart_cone(const MonoidGenerator& g);
polycone::Cone chart_cone(const ChartRow& row);

/// C_13 and C_ij for ij in {14,22,23,24,31,32,33,34}, labelled "13", "14",
/// ... and found by deduplicating all chart cones and keeping the minimal
/// ones under containment.
std::vector<std::pair<std::string, polycone::Cone>> minimal_chart_cones();

}  // namespace gitfan::res2
