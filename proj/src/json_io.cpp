#include "germ/json_io.hpp"

#include "germ/errors.hpp"

namespace germ {

Json rational_json(const Rational& q) { return to_string(q); }

Json integer_json(long v) { return std::to_string(v) + "/1"; }

GermDivisor divisor_from_json(const Json& j, int degree_cap) {
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array()) {
    throw InputError("divisor JSON must be an object with a \"parts\" array", "schema");
  }
  std::vector<DivisorPart> raw;
  for (const auto& p : j["parts"]) {
    if (!p.is_object() || !p.contains("coeff") || !p.contains("poly")) {
      throw InputError("each divisor part needs \"coeff\" and \"poly\"", "schema");
    }
    Rational c;
    const auto& cj = p["coeff"];
    if (cj.is_string()) c = parse_rational(cj.get<std::string>());
    else if (cj.is_number_integer()) c = Rational(cj.get<long>());
    else throw InputError("coefficient must be an \"a/b\" string or an integer", "schema");
    if (!p["poly"].is_string()) throw InputError("\"poly\" must be a string", "schema");
    raw.push_back(DivisorPart{c, parse_poly(p["poly"].get<std::string>())});
  }
  return GermDivisor(raw, degree_cap);
}

Json divisor_to_json(const GermDivisor& d) {
  Json parts = Json::array();
  for (const auto& p : d.parts()) {
    parts.push_back(Json{{"coeff", rational_json(p.coeff)}, {"poly", p.poly.to_string()}});
  }
  return Json{{"parts", parts}};
}

Json to_json(const Witness& w) {
  Json j{{"label", w.label}, {"node", integer_json(w.node)}};
  if (w.node != 0) {
    j["kE"] = integer_json(w.k);
    Json ord = Json::array();
    for (long o : w.ord) ord.push_back(integer_json(o));
    j["ord"] = ord;
  }
  return j;
}

Json to_json(const LctResult& r) {
  return Json{{"value", rational_json(r.value)}, {"kind", to_string(r.kind)}, {"witness", to_json(r.witness)}};
}

Json to_json(const MldResult& r) {
  return Json{{"value", rational_json(r.value)}, {"kind", to_string(r.kind)}, {"witness", to_json(r.witness)}};
}

Json to_json(const FiberResult& r) {
  return Json{{"value", rational_json(r.value)},
              {"kind", to_string(r.kind)},
              {"witness", to_json(r.witness)},
              {"point", integer_json(static_cast<long>(r.point))},
              {"fiber_coefficient", rational_json(r.fiber_coefficient)},
              {"generic_fiber_effective", r.generic_fiber_effective}};
}

namespace {

Json point_json(const Point2& p) { return Json::array({rational_json(p.x), rational_json(p.y)}); }

}  // namespace

Json to_json(const NewtonData& n) {
  Json verts = Json::array();
  for (const auto& v : n.vertices) verts.push_back(point_json(v));
  Json face{{"kind", to_string(n.main_face.kind)}};
  switch (n.main_face.kind) {
    case FaceKind::Vertex: face["point"] = point_json(n.main_face.p); break;
    case FaceKind::CompactEdge:
      face["from"] = point_json(n.main_face.p);
      face["to"] = point_json(n.main_face.q);
      break;
    case FaceKind::UnboundedEdge:
      face["axis"] = std::string(1, n.main_face.axis);
      face["offset"] = rational_json(n.main_face.offset);
      face["from"] = point_json(n.main_face.p);
      break;
  }
  return Json{{"vertices", verts},
              {"open_rays", Json{{"vertical", n.open_vertical}, {"horizontal", n.open_horizontal}}},
              {"nd", rational_json(n.nd)},
              {"main_face", face},
              {"nm", rational_json(n.nm)}};
}

Json to_json(const LctBounds& b) {
  return Json{{"lct_lower", rational_json(b.lower)}, {"lct_upper", rational_json(b.upper)}, {"exact", b.exact}};
}

Json to_json(const WeightedBlowupData& d) {
  Json parts = Json::array();
  for (const auto& p : d.parts) {
    parts.push_back(Json{{"ord_E", integer_json(p.ord)},
                         {"s", integer_json(p.s)},
                         {"t", integer_json(p.t)},
                         {"d", integer_json(p.d)},
                         {"h", p.h.to_string()}});
  }
  Json g = Json::array();
  for (const auto& [f, c] : d.g) g.push_back(Json{{"factor", f.to_string()}, {"coeff", rational_json(c)}});
  return Json{{"weight", Json::array({integer_json(d.weight.a1), integer_json(d.weight.a2)})},
              {"k_E", integer_json(d.k_E)},
              {"parts", parts},
              {"ord_E", rational_json(d.total_ord)},
              {"a_E", rational_json(d.log_discrepancy)},
              {"restriction", Json{{"P1", rational_json(d.p1)}, {"P2", rational_json(d.p2)}, {"G", g}}}};
}

Json to_json(const WeightLct& w) {
  return Json{{"value", rational_json(w.result.value)},
              {"kind", to_string(w.result.kind)},
              {"hypothesis",
               Json{{"holds", w.hypothesis},
                    {"axis_x", rational_json(w.axis_x)},
                    {"axis_y", rational_json(w.axis_y)},
                    {"g_max", rational_json(w.g_max)}}}};
}

Json to_json(const PuiseuxPair& p) {
  return Json{{"m", integer_json(p.m)}, {"n", p.n ? integer_json(*p.n) : Json("inf")}};
}

Json to_json(const Certificate& c) {
  Json verts = Json::array();
  for (const auto& v : c.vertices) {
    Json pt = Json::array();
    for (const auto& x : v.point) pt.push_back(rational_json(x));
    verts.push_back(Json{{"point", pt}, {"case", v.label}, {"value", rational_json(v.value)}});
  }
  return Json{{"value", rational_json(c.value)}, {"target", rational_json(c.target)}, {"vertices", verts}};
}

Json to_json(const ResolutionTree& t) {
  Json parts = Json::array();
  for (const auto& p : t.parts) parts.push_back(p.to_string());
  Json exc = Json::array();
  for (const auto& e : t.exceptionals) {
    Json ord = Json::array(), mult = Json::array(), through = Json::array();
    for (long o : e.ord) ord.push_back(integer_json(o));
    for (int m : e.mult) mult.push_back(integer_json(m));
    for (int x : e.through) through.push_back(integer_json(x));
    exc.push_back(Json{{"id", integer_json(e.id)},
                       {"parent", integer_json(e.parent)},
                       {"kE", integer_json(e.k)},
                       {"ord", ord},
                       {"mult", mult},
                       {"through", through},
                       {"degree", integer_json(static_cast<long>(e.degree))}});
  }
  Json term = Json::array();
  for (const auto& t2 : t.terminals) {
    Json tp = Json::array(), te = Json::array();
    for (int i : t2.parts) tp.push_back(integer_json(i));
    for (int i : t2.exceptionals) te.push_back(integer_json(i));
    term.push_back(Json{{"parent", integer_json(t2.parent)},
                        {"parts", tp},
                        {"exceptionals", te},
                        {"degree", integer_json(static_cast<long>(t2.degree))}});
  }
  return Json{{"parts", parts}, {"exceptionals", exc}, {"terminals", term}};
}

}  // namespace germ
