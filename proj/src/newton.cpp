#include "germ/newton.hpp"

#include "germ/errors.hpp"

#include <algorithm>

namespace germ {

std::string to_string(FaceKind k) {
  switch (k) {
    case FaceKind::Vertex: return "vertex";
    case FaceKind::CompactEdge: return "compact_edge";
    case FaceKind::UnboundedEdge: return "unbounded_edge";
  }
  return "?";
}

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point2> lower_left_boundary(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::vector<Point2> hull;
  for (const auto& p : pts) {
    if (!hull.empty() && hull.back().x == p.x) continue;  // keep lowest y per column
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  // The chain descends to its lowest point and then climbs; keep the descent.
  std::size_t k = 0;
  while (k + 1 < hull.size() && hull[k + 1].y < hull[k].y) ++k;
  hull.resize(k + 1);
  return hull;
}

void fill_invariants(NewtonData& n) {
  const auto& v = n.vertices;
  auto g = [](const Point2& p) { return p.y - p.x; };
  Rational u;
  MainFace face;
  if (g(v.front()) <= 0) {
    u = v.front().x;
    face.p = v.front();
    if (g(v.front()) == 0) {
      face.kind = FaceKind::Vertex;
    } else {
      face.kind = FaceKind::UnboundedEdge;
      face.axis = 'x';
      face.offset = v.front().x;
    }
  } else if (g(v.back()) >= 0) {
    u = v.back().y;
    face.p = v.back();
    if (g(v.back()) == 0) {
      face.kind = FaceKind::Vertex;
    } else {
      face.kind = FaceKind::UnboundedEdge;
      face.axis = 'y';
      face.offset = v.back().y;
    }
  } else {
    std::size_t k = 1;
    while (g(v[k]) > 0) ++k;
    if (g(v[k]) == 0) {
      u = v[k].x;
      face.kind = FaceKind::Vertex;
      face.p = v[k];
    } else {
      const Point2& a = v[k - 1];
      const Point2& b = v[k];
      Rational lambda = g(a) / (g(a) - g(b));
      u = a.x + lambda * (b.x - a.x);
      face.kind = FaceKind::CompactEdge;
      face.p = a;
      face.q = b;
    }
  }
  if (u <= 0) throw InputError("Newton polytope contains the origin (unit)", "unit");
  n.nd = 1 / u;
  n.main_face = face;
  if (face.kind == FaceKind::CompactEdge) {
    n.nm = rational_gcd(face.q.x - face.p.x, face.p.y - face.q.y);
  } else {
    n.nm = u;
  }
}

}  // namespace

NewtonData newton_data(const Poly2& f) {
  if (f.is_zero()) throw InputError("Newton polytope of the zero polynomial");
  if (!f.vanishes_at_origin()) throw InputError("Newton polytope of a unit", "unit");
  std::vector<Point2> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(Point2{e.first, e.second});
  NewtonData n;
  n.vertices = lower_left_boundary(std::move(pts));
  fill_invariants(n);
  return n;
}

NewtonData minkowski_sum(const std::vector<std::pair<Rational, NewtonData>>& terms) {
  if (terms.empty()) throw InputError("Newton polytope of the zero divisor");
  Point2 start{0, 0};
  std::vector<Point2> edges;
  for (const auto& [c, n] : terms) {
    if (c <= 0) throw InputError("Newton polytope needs positive coefficients");
    start.x += c * n.vertices.front().x;
    start.y += c * n.vertices.front().y;
    for (std::size_t i = 0; i + 1 < n.vertices.size(); ++i) {
      edges.push_back(Point2{c * (n.vertices[i + 1].x - n.vertices[i].x),
                             c * (n.vertices[i + 1].y - n.vertices[i].y)});
    }
  }
  // Steepest descent first.
  std::stable_sort(edges.begin(), edges.end(), [](const Point2& a, const Point2& b) {
    return a.y * b.x < b.y * a.x;
  });
  NewtonData out;
  out.vertices.push_back(start);
  for (std::size_t i = 0; i < edges.size();) {
    Point2 e = edges[i];
    std::size_t j = i + 1;
    while (j < edges.size() && edges[j].y * e.x == e.y * edges[j].x) {
      e.x += edges[j].x;
      e.y += edges[j].y;
      ++j;
    }
    const Point2& last = out.vertices.back();
    out.vertices.push_back(Point2{last.x + e.x, last.y + e.y});
    i = j;
  }
  fill_invariants(out);
  return out;
}

NewtonData newton_data(const GermDivisor& d) {
  if (d.empty()) throw InputError("Newton polytope of the zero divisor");
  std::vector<std::pair<Rational, NewtonData>> terms;
  for (const auto& p : d.parts()) {
    if (p.coeff <= 0) throw InputError("Newton polytope needs an effective divisor");
    terms.emplace_back(p.coeff, newton_data(p.poly));
  }
  return minkowski_sum(terms);
}

LctBounds lct_newton_bounds(const NewtonData& n) {
  LctBounds b;
  b.upper = n.nd;
  b.lower = min(1 / n.nm, n.nd);
  b.exact = n.nd * n.nm <= 1;
  if (b.exact) b.lower = n.nd;
  return b;
}

LctBounds lct_newton_bounds(const Poly2& f) { return lct_newton_bounds(newton_data(f)); }

NdNmReport check_ndnm_inequality(const NewtonData& n) {
  NdNmReport r;
  r.product = n.nd * n.nm;
  if (r.product > 2) {
    throw InternalError("nd*nm = " + to_string(r.product) + " exceeds 2");
  }
  if (r.product > 1) {
    r.side_condition_checked = true;
    const MainFace& f = n.main_face;
    r.side_condition_holds = f.kind == FaceKind::CompactEdge &&
                             (f.q.x - f.p.x == n.nm || f.p.y - f.q.y == n.nm);
    if (!r.side_condition_holds) {
      throw InternalError("nd*nm > 1 but the main face is not a compact edge with a side equal to nm");
    }
  }
  return r;
}

}  // namespace germ
