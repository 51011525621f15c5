#pragma once

// Deterministic SVG drawing of the chamber arrangement.

#include <string>
#include <vector>

#include "gitfan/quotient.hpp"

namespace gitfan::svg {

struct Highlight {
  std::string name;  // "red", "blue" or anything else (drawn grey)
  std::vector<Point2> polygon;
};

/// Fixed view box [-0.5, 3.6] x [-0.5, 4.6] in (b, c) coordinates, one line
/// per maximal collinear segment of the configuration, configuration points
/// as dots, highlighted polygons filled. Byte-stable for equal inputs.
std::string chamber_svg(const WeightSystem& w, const std::vector<Highlight>& highlights,
                        const std::vector<Point2>& marks = {});

/// Fixed-point decimal with six places, rounded half away from zero.
std::string decimal(const Rational& x);

}  // namespace gitfan::svg
