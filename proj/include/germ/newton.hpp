#pragma once

// Newton polytopes at the origin and the lct sandwich they give.

#include "germ/divisor.hpp"
#include "germ/poly2.hpp"
#include "germ/rational.hpp"

#include <string>
#include <vector>

namespace germ {

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

enum class FaceKind { Vertex, CompactEdge, UnboundedEdge };

struct MainFace {
  FaceKind kind = FaceKind::Vertex;
  Point2 p;        // vertex, left endpoint, or the end vertex of the ray
  Point2 q;        // right endpoint of a compact edge
  char axis = 0;   // unbounded edge: 'x' for the vertical ray x = offset, 'y' for y = offset
  Rational offset;
};

struct NewtonData {
  std::vector<Point2> vertices;  // left to right along the compact boundary
  bool open_vertical = true;     // ray upward from the first vertex
  bool open_horizontal = true;   // ray rightward from the last vertex
  Rational nd;
  MainFace main_face;
  Rational nm;
};

NewtonData newton_data(const Poly2& f);
// Minkowski sum of coeff * NP(part); requires an effective, nonzero divisor.
NewtonData newton_data(const GermDivisor& d);
// Newton data of the Minkowski sum of the given boundaries with weights.
NewtonData minkowski_sum(const std::vector<std::pair<Rational, NewtonData>>& terms);

struct LctBounds {
  Rational lower;
  Rational upper;
  bool exact = false;  // nd * nm <= 1, so the value is upper
};

LctBounds lct_newton_bounds(const NewtonData& n);
LctBounds lct_newton_bounds(const Poly2& f);

struct NdNmReport {
  Rational product;     // nd * nm
  bool within_two = true;
  bool side_condition_checked = false;
  bool side_condition_holds = true;
};

// Checks nd * nm <= 2, and when nd * nm > 1 that the main face is a compact
// edge with one edge-vector component equal to nm. Throws InternalError on
// failure.
NdNmReport check_ndnm_inequality(const NewtonData& n);

std::string to_string(FaceKind k);

}  // namespace germ
