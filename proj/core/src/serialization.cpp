#include "orientlat/serialization.hpp"

#include <string>

#include "orientlat/errors.hpp"

namespace orientlat {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("JSON object is missing \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<std::pair<Vertex, Vertex>> read_pairs(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of vertex pairs");
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw InputError("expected a pair of integer vertices");
    }
    out.emplace_back(item[0].get<Vertex>(), item[1].get<Vertex>());
  }
  return out;
}

Json pairs(const std::vector<std::pair<Vertex, Vertex>>& ps) {
  Json out = Json::array();
  for (auto [a, b] : ps) out.push_back({a, b});
  return out;
}

}  // namespace

Json serialize(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const Edge& e : g.edges()) es.emplace_back(e.lo, e.hi);
  Json out;
  out["n"] = g.n();
  out["edges"] = pairs(es);
  return out;
}

Json serialize(const Orientation& o) {
  Json out;
  out["edges"] = pairs(o.arcs());
  return out;
}

Json serialize(const FiringSequence& f) {
  Json out;
  out["start"] = serialize(f.start);
  out["fires"] = f.fires;
  return out;
}

Json serialize(const Point& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(to_string(c));
  Json out;
  out["coords"] = std::move(coords);
  return out;
}

Json serialize(const Graph& g, const RegionSignature& s) {
  Json out = Json::object();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out[std::to_string(ed.lo) + "-" + std::to_string(ed.hi)] = s.slabs.at(e);
  }
  return out;
}

Json serialize(const CubeAnchor& a) { return a.floors; }

Json serialize(const Poset& p) {
  Json elements = Json::array();
  for (const auto& o : p.elements()) elements.push_back(serialize(o));
  Json covers = Json::array();
  for (const Cover& c : p.covers()) covers.push_back({c.lower, c.upper});
  Json out;
  out["elements"] = std::move(elements);
  out["covers"] = std::move(covers);
  return out;
}

Json serialize(const std::vector<Component>& cs) {
  Json out = Json::array();
  for (const Component& c : cs) {
    Json covers = Json::array();
    for (const Cover& cv : c.covers) covers.push_back({cv.lower, cv.upper});
    Json item;
    item["size"] = c.size();
    item["members"] = c.members;
    item["covers"] = std::move(covers);
    out.push_back(std::move(item));
  }
  return out;
}

Json serialize(const std::vector<ZigzagStep>& steps) {
  Json out = Json::array();
  for (const ZigzagStep& s : steps) {
    Json item;
    item["direction"] = s.direction == StepDirection::Up ? "up" : "down";
    item["vertex"] = s.vertex;
    item["to"] = serialize(s.to);
    out.push_back(std::move(item));
  }
  return out;
}

Json serialize(const ChromaticPolynomial& p) { return p.coefficients; }

Json serialize(const LatticeReport& r) {
  Json comps = Json::array();
  for (const ComponentReport& c : r.components) {
    Json item;
    item["size"] = c.size;
    item["is_lattice"] = c.is_lattice;
    item["is_distributive"] = c.is_distributive;
    item["minimum"] = c.minimum ? serialize(*c.minimum) : Json(nullptr);
    item["minimum_unique_sink_zero"] = c.minimum_unique_sink_zero;
    item["minimum_is_only_unique_sink"] = c.minimum_is_only_unique_sink;
    item["geometric_agrees"] = c.geometric_agrees;
    item["pairs_checked"] = c.pairs_checked;
    item["mismatches"] = c.mismatches;
    item["failures"] = c.failures;
    item["pass"] = c.pass();
    comps.push_back(std::move(item));
  }
  Json out;
  out["graph"] = serialize(r.graph);
  out["poset_size"] = r.poset_size;
  out["components"] = r.component_count;
  out["greene_zaslavsky"] = r.greene_zaslavsky;
  out["unique_sink_count"] = r.unique_sink_count;
  out["non_cover_firings"] = r.non_cover_firings;
  out["counts_match"] = r.counts_match;
  out["component_reports"] = std::move(comps);
  out["failures"] = r.failures;
  out["pass"] = r.pass;
  return out;
}

Json serialize(const PropertyTally& t) {
  Json out;
  out["name"] = t.name;
  out["checks"] = t.checks;
  out["violations"] = t.violations;
  out["examples"] = t.examples;
  out["pass"] = t.pass();
  return out;
}

Graph parse_graph(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) throw InputError("\"n\" must be an integer");
  return Graph::from_edges(n.get<int>(), read_pairs(field(j, "edges")));
}

Orientation parse_orientation(const Graph& g, const Json& j) {
  return Orientation::from_arcs(g, read_pairs(field(j, "edges")));
}

FiringSequence parse_firing_sequence(const Graph& g, const Json& j) {
  FiringSequence f{parse_orientation(g, field(j, "start")), {}};
  const Json& fires = field(j, "fires");
  if (!fires.is_array()) throw InputError("\"fires\" must be an array");
  for (const auto& v : fires) {
    if (!v.is_number_integer()) throw InputError("fired vertices must be integers");
    f.fires.push_back(v.get<Vertex>());
  }
  return f;
}

Point parse_point(const Json& j) {
  const Json& coords = field(j, "coords");
  if (!coords.is_array()) throw InputError("\"coords\" must be an array");
  std::vector<Rational> values;
  for (const auto& c : coords) {
    if (!c.is_string()) throw InputError("coordinates must be strings of the form \"p/q\"");
    values.push_back(parse_rational(c.get<std::string>()));
  }
  try {
    return Point(std::move(values));
  } catch (const GeometryError& e) {
    throw InputError(e.what());
  }
}

}  // namespace orientlat
