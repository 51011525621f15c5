#pragma once

// Rational polyhedral cones and fans.
//
// A Cone stores both descriptions in canonical form:
//   - rays:       primitive extreme rays, orthogonal to the lineality space,
//                 sorted lexicographically;
//   - lineality:  canonical basis of the lineality space;
//   - facets:     primitive facet normals n (meaning n.x >= 0), orthogonal
//                 to the equation space, sorted lexicographically;
//   - equations:  canonical basis of span(cone)^perp.
// Two cones are equal iff their canonical forms are equal. Conversions use
// the double description method over exact integers.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gitfan/ratlin.hpp"

namespace gitfan::polycone {

using ratlin::IntVector;
using ratlin::RatVector;

struct Generators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

/// Extreme rays and lineality of {x : a.x >= 0 for all a in inequalities}.
/// Rays are returned unnormalized (primitive, but not projected).
Generators double_description(std::size_t dim,
                              const std::vector<IntVector>& inequalities);

class Cone {
 public:
  /// Cone generated by `rays` plus the linear span of `lineality`.
  /// A zero vector among the rays is rejected ("zero_ray").
  static Cone from_rays(std::size_t dim, const std::vector<IntVector>& rays,
                        const std::vector<IntVector>& lineality = {});
  /// {x : n.x >= 0 for n in normals, e.x = 0 for e in equations}.
  static Cone from_inequalities(std::size_t dim,
                                const std::vector<IntVector>& normals,
                                const std::vector<IntVector>& equations = {});

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  std::size_t lineality_dim() const { return lineality_.size(); }
  std::size_t dim() const { return dim_ - equations_.size(); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ &&
           a.lineality_ == b.lineality_;
  }

  friend Cone dual(const Cone& c);

 private:
  Cone() = default;
  static Cone assemble(std::size_t dim, std::vector<IntVector> rays,
                       std::vector<IntVector> lineality,
                       std::vector<IntVector> facets,
                       std::vector<IntVector> equations);

  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

/// The dual cone {y : y.x >= 0 for all x in c}; swaps the two descriptions.
Cone dual(const Cone& c);

/// Extreme rays (together with a lineality basis) are linearly independent.
bool is_simplicial(const Cone& c);

/// Membership; strict means relative interior.
bool contains(const Cone& c, const RatVector& v, bool strict);
bool contains(const Cone& c, const IntVector& v, bool strict = false);
/// outer contains inner as point sets.
bool contains(const Cone& outer, const Cone& inner);

Cone intersect(const Cone& a, const Cone& b);
/// `face` is a face of `c` (assumes face is a subset of c).
bool is_face(const Cone& face, const Cone& c);
/// c1 and c2 intersect in a common face of each.
bool common_face_check(const Cone& c1, const Cone& c2);

struct Fan {
  std::size_t ambient_dim = 0;
  std::vector<std::pair<std::string, Cone>> maximal_cones;
};

struct FanReport {
  bool pairwise_faces = true;
  bool all_simplicial = true;
  // Absent when the fan is not made of full-dimensional pointed cones.
  std::optional<bool> complete;
  std::string completeness_criterion;
  std::size_t ridge_count = 0;
  std::size_t unmatched_ridges = 0;
};

/// Pairwise face intersections, simpliciality, and completeness by the
/// ridge criterion: every facet of every maximal cone is shared by exactly
/// two maximal cones and the facet-adjacency graph is connected.
FanReport fan_check(const Fan& f);

}  // namespace gitfan::polycone
