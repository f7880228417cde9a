#pragma once

#include "dngon/analysis.hpp"

#include <json.hpp>

#include <sstream>

namespace dngon {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const FieldElement& x) {
  ordered_json a = ordered_json::array();
  for (const mpq_class& q : x.coeffs()) a.push_back(q.get_str());
  return a;
}

inline ordered_json to_json(const QuadExtElement& x) {
  return ordered_json{{"a", to_json(x.a())}, {"b", to_json(x.b())}};
}

inline ordered_json bits_json(const Gf2Poly& p, int d) {
  ordered_json a = ordered_json::array();
  for (int k = 0; k < d; ++k) a.push_back(p.get(k) ? 1 : 0);
  return a;
}

/// Parse "p/q,p/q,..." in the lambda-power basis (degree-checked).
inline FieldElement parse_field_element(const FieldContext& F, const std::string& text) {
  std::vector<mpq_class> coeffs;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty coefficient in '" + text + "'");
    mpq_class q;
    if (q.set_str(item, 10) != 0)
      throw std::invalid_argument("bad rational '" + item + "' in '" + text + "'");
    q.canonicalize();
    coeffs.push_back(q);
  }
  if (coeffs.empty()) throw std::invalid_argument("empty field-element literal");
  if (static_cast<int>(coeffs.size()) > F.d)
    throw std::invalid_argument("literal '" + text + "' has more than d = " + std::to_string(F.d) +
                                " coefficients");
  return FieldElement(F, std::move(coeffs));
}

inline ordered_json to_json(const Certificate& cert) {
  const int d = cert.direction.x.ctx().d;
  ordered_json j;
  j["n"] = cert.n;
  j["direction"] = ordered_json::array({to_json(cert.direction.x), to_json(cert.direction.y)});
  if (cert.cls) {
    j["mod2"] = ordered_json::array({bits_json(cert.cls->x(), d), bits_json(cert.cls->y(), d)});
  } else {
    j["mod2"] = nullptr;
  }
  j["orbit_size"] = cert.orbit_size.get_si();
  j["p1_size"] = cert.p1_size.get_str();
  j["verdict"] = to_string(cert.verdict);
  return j;
}

inline std::string to_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os << "n,orbit_size,p1_size,verdict\n";
  for (const SurveyRow& r : rows)
    os << r.n << "," << r.orbit_size << "," << r.p1_size.get_str() << "," << to_string(r.verdict)
       << "\n";
  return os.str();
}

inline ordered_json to_json(const std::vector<SurveyRow>& rows) {
  ordered_json a = ordered_json::array();
  for (const SurveyRow& r : rows)
    a.push_back(ordered_json{{"n", r.n},
                             {"orbit_size", r.orbit_size},
                             {"p1_size", r.p1_size.get_str()},
                             {"verdict", to_string(r.verdict)}});
  return a;
}

inline ordered_json to_json(const OrbitSet& orbit, const Mod2Context& M) {
  ordered_json a = ordered_json::array();
  for (size_t i = 0; i < orbit.classes.size(); ++i)
    a.push_back(ordered_json{{"x", bits_json(orbit.classes[i].x(), M.d)},
                             {"y", bits_json(orbit.classes[i].y(), M.d)},
                             {"generation", orbit.generation[i]}});
  return a;
}

inline ordered_json vec_json(const Vec2Q& v) {
  return ordered_json{{"x", to_json(v.x)},
                      {"y", to_json(v.y)},
                      {"approx", ordered_json::array({approx(v.x), approx(v.y)})}};
}

inline ordered_json to_json(const TraceResult& r, const FlatSurface& S) {
  ordered_json ev = ordered_json::array();
  for (const TraceEvent& e : r.events) {
    const char* kind = e.kind == EventKind::Crossing       ? "crossing"
                       : e.kind == EventKind::VertexHit    ? "vertex"
                                                           : "marked";
    ordered_json je{{"kind", kind}, {"poly", e.poly}, {"index", e.index}, {"pos", vec_json(e.pos)}};
    if (e.kind == EventKind::MarkedHit) je["label"] = S.marked[e.index].label;
    ev.push_back(je);
  }
  const char* term = r.termination == TraceTermination::VertexHit   ? "singularity"
                     : r.termination == TraceTermination::MarkedHit ? "marked_point"
                                                                    : "budget";
  ordered_json j{{"crossings", r.crossings}, {"termination", term}, {"events", ev}};
  if (r.length2) j["length2"] = to_json(*r.length2);
  return j;
}

inline ordered_json to_json(const FlatSurface& S) {
  ordered_json polys = ordered_json::array();
  for (const Polygon& p : S.polys) {
    ordered_json verts = ordered_json::array();
    for (const Vec2Q& v : p.verts) verts.push_back(vec_json(v));
    polys.push_back(ordered_json{{"vertices", verts}});
  }
  ordered_json gl = ordered_json::array();
  for (const Gluing& g : S.gluings)
    gl.push_back(ordered_json{
        {"pa", g.pa}, {"ea", g.ea}, {"pb", g.pb}, {"eb", g.eb}, {"vec", vec_json(g.vec)}});
  ordered_json mk = ordered_json::array();
  for (const MarkedPoint& m : S.marked)
    mk.push_back(ordered_json{{"poly", m.poly}, {"pos", vec_json(m.pos)}, {"label", m.label}});
  return ordered_json{{"polygons", polys}, {"gluings", gl}, {"marked_points", mk}};
}

inline ordered_json to_json(const WitnessResult& w, const Mod2Context& M) {
  ordered_json moves = ordered_json::array();
  for (Move m : w.path.moves) moves.push_back(to_string(m));
  ordered_json j;
  j["start"] = ordered_json::array({to_json(w.path.start.x), to_json(w.path.start.y)});
  j["denominator"] = w.path.denominator.get_str();
  j["moves"] = moves;
  j["witness"] = ordered_json::array({to_json(w.path.witness.x), to_json(w.path.witness.y)});
  j["mod2_pair"] = ordered_json::array({bits_json(w.path.u_bar, M.d), bits_json(w.path.v_bar, M.d)});
  j["states_explored"] = w.states_explored;
  j["certificate"] = to_json(w.certificate);
  return j;
}

inline ordered_json to_json(const OrbitModPResult& r) {
  return ordered_json{{"orbit_size", r.orbit_size}, {"p1_size", r.p1_size}};
}

}  // namespace dngon
