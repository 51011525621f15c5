#pragma once

// Exact planar arrangement of line segments, stored as a doubly connected
// edge list. Used to enumerate the 2-dimensional chambers of a planar point
// configuration.

#include <cstddef>
#include <utility>
#include <vector>

#include "gitfan/ratlin.hpp"

namespace gitfan::arrangement {

using ratlin::Rational;

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// Twice the signed area of (a, b, c): positive for a left turn.
Rational orient(const Point2& a, const Point2& b, const Point2& c);

/// c lies on the closed segment [a, b].
bool on_segment(const Point2& a, const Point2& b, const Point2& c);

struct HalfEdge {
  std::size_t origin;
  std::size_t twin;
  std::size_t next;
  std::size_t face;
};

struct Face {
  std::size_t edge;               // one half-edge on the boundary
  std::vector<std::size_t> cycle;  // vertex ids, counter-clockwise
  Rational twice_area;            // signed; negative for the outer face
};

class Dcel {
 public:
  /// Splits every segment at all intersection points and links the
  /// resulting edges. Degenerate (zero-length) segments are ignored.
  static Dcel build(const std::vector<std::pair<Point2, Point2>>& segments);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t edge_count() const { return half_edges_.size() / 2; }

  /// Faces with positive area, as counter-clockwise vertex polygons.
  std::vector<std::vector<Point2>> bounded_faces() const;

 private:
  std::vector<Point2> vertices_;
  std::vector<HalfEdge> half_edges_;
  std::vector<Face> faces_;
};

}  // namespace gitfan::arrangement
