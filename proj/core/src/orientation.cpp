#include "orientlat/orientation.hpp"

#include <algorithm>
#include <string>

#include "orientlat/errors.hpp"

namespace orientlat {

namespace {

std::string vname(Vertex v) { return std::to_string(v); }

std::vector<bool> code_bits(std::size_t edges, std::uint64_t code) {
  std::vector<bool> bits(edges);
  for (std::size_t e = 0; e < edges; ++e) bits[e] = (code >> e) & 1U;
  return bits;
}

void require_enumerable(const Graph& g) {
  if (g.edge_count() > 40) {
    throw OrientationError("exhaustive enumeration limited to 40 edges");
  }
}

bool flips_all_at(const Orientation& o, Vertex i, bool into) {
  for (std::size_t e : o.graph().incident_edges(i)) {
    if ((o.head(e) == i) != into) return false;
  }
  return true;
}

std::vector<bool> reversed_at(const Orientation& o, Vertex i) {
  auto bits = o.directions();
  for (std::size_t e : o.graph().incident_edges(i)) bits[e] = !bits[e];
  return bits;
}

}  // namespace

Orientation::Orientation(Graph graph, std::vector<bool> lo_to_hi)
    : graph_(std::move(graph)), lo_to_hi_(std::move(lo_to_hi)) {
  if (lo_to_hi_.size() != graph_.edge_count()) {
    throw OrientationError("expected " + std::to_string(graph_.edge_count()) +
                           " edge directions, got " + std::to_string(lo_to_hi_.size()));
  }
  if (!is_acyclic(graph_, lo_to_hi_)) {
    throw OrientationError("orientation contains a directed cycle");
  }
}

Orientation Orientation::from_arcs(Graph graph,
                                   const std::vector<std::pair<Vertex, Vertex>>& arcs) {
  std::vector<bool> bits(graph.edge_count());
  std::vector<bool> seen(graph.edge_count(), false);
  for (auto [tail, head] : arcs) {
    auto e = graph.edge_index(tail, head);
    if (!e) {
      throw OrientationError("arc " + vname(tail) + "->" + vname(head) + " is not an edge");
    }
    if (seen[*e]) {
      throw OrientationError("edge " + vname(tail) + "-" + vname(head) + " oriented twice");
    }
    seen[*e] = true;
    bits[*e] = tail < head;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw OrientationError("every edge must be oriented exactly once");
  }
  return Orientation(std::move(graph), std::move(bits));
}

Orientation Orientation::from_encoding(Graph graph, std::uint64_t code) {
  const std::size_t m = graph.edge_count();
  if (m > 64 || (m < 64 && (code >> m) != 0)) {
    throw OrientationError("encoding " + std::to_string(code) + " out of range for " +
                           std::to_string(m) + " edges");
  }
  auto bits = code_bits(m, code);
  return Orientation(std::move(graph), std::move(bits));
}

Vertex Orientation::head(std::size_t edge) const {
  const Edge& ed = graph_.edge(edge);
  return lo_to_hi_[edge] ? ed.hi : ed.lo;
}

Vertex Orientation::tail(std::size_t edge) const {
  const Edge& ed = graph_.edge(edge);
  return lo_to_hi_[edge] ? ed.lo : ed.hi;
}

std::vector<std::pair<Vertex, Vertex>> Orientation::arcs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(lo_to_hi_.size());
  for (std::size_t e = 0; e < lo_to_hi_.size(); ++e) out.emplace_back(tail(e), head(e));
  return out;
}

bool Orientation::is_source(Vertex v) const { return flips_all_at(*this, v, false); }

bool Orientation::is_sink(Vertex v) const { return flips_all_at(*this, v, true); }

std::uint64_t Orientation::encoding() const {
  if (lo_to_hi_.size() > 64) throw OrientationError("encoding needs at most 64 edges");
  std::uint64_t code = 0;
  for (std::size_t e = 0; e < lo_to_hi_.size(); ++e)
    if (lo_to_hi_[e]) code |= std::uint64_t{1} << e;
  return code;
}

VertexRoles vertex_roles(const Orientation& o) {
  VertexRoles roles;
  for (Vertex v = 0; v <= o.graph().n(); ++v) {
    if (o.is_source(v)) roles.sources.push_back(v);
    if (o.is_sink(v)) roles.sinks.push_back(v);
  }
  return roles;
}

Orientation fire(const Orientation& o, Vertex i) {
  if (!o.graph().contains(i)) throw OrientationError("vertex " + vname(i) + " out of range");
  if (!o.is_source(i)) throw OrientationError("vertex " + vname(i) + " is not a source");
  // Reversing the edges at a source cannot create a cycle: every cycle
  // through i would need an outgoing edge at the new sink.
  return Orientation(Orientation::Trusted{}, o.graph(), reversed_at(o, i));
}

Orientation unfire(const Orientation& o, Vertex i) {
  if (!o.graph().contains(i)) throw OrientationError("vertex " + vname(i) + " out of range");
  if (!o.is_sink(i)) throw OrientationError("vertex " + vname(i) + " is not a sink");
  return Orientation(Orientation::Trusted{}, o.graph(), reversed_at(o, i));
}

bool is_acyclic(const Graph& g, const std::vector<bool>& lo_to_hi) {
  if (lo_to_hi.size() != g.edge_count()) return false;
  const int nv = g.vertex_count();
  std::vector<int> indegree(nv, 0);
  std::vector<std::vector<Vertex>> out(nv);
  for (std::size_t e = 0; e < lo_to_hi.size(); ++e) {
    const Edge& ed = g.edge(e);
    Vertex tail = lo_to_hi[e] ? ed.lo : ed.hi;
    Vertex head = lo_to_hi[e] ? ed.hi : ed.lo;
    out[tail].push_back(head);
    ++indegree[head];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < nv; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int visited = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++visited;
    for (Vertex w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return visited == nv;
}

std::vector<Orientation> enumerate_acyclic(const Graph& g) {
  require_enumerable(g);
  const std::size_t m = g.edge_count();
  std::vector<Orientation> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    auto bits = code_bits(m, code);
    if (is_acyclic(g, bits)) out.push_back(Orientation(Orientation::Trusted{}, g, std::move(bits)));
  }
  return out;
}

std::vector<Orientation> enumerate_sink_zero(const Graph& g) {
  require_enumerable(g);
  const std::size_t m = g.edge_count();
  // Edges at the root have lo == 0, so "into 0" means the bit is clear.
  std::uint64_t root_mask = 0;
  for (std::size_t e : g.incident_edges(0)) root_mask |= std::uint64_t{1} << e;
  std::vector<Orientation> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    if (code & root_mask) continue;
    auto bits = code_bits(m, code);
    if (is_acyclic(g, bits)) out.push_back(Orientation(Orientation::Trusted{}, g, std::move(bits)));
  }
  return out;
}

std::vector<int> FiringSequence::counts() const {
  std::vector<int> c(start.graph().vertex_count(), 0);
  for (Vertex v : fires) {
    if (!start.graph().contains(v)) throw OrientationError("vertex " + vname(v) + " out of range");
    ++c[v];
  }
  return c;
}

FiringReport validate_firing_sequence(const FiringSequence& seq, FiringMode mode) {
  const Graph& g = seq.start.graph();
  const bool rooted = mode == FiringMode::RootedPoset;
  if (rooted && !seq.start.is_sink(0)) {
    throw FiringError(0, "start orientation does not have 0 as a sink");
  }

  Orientation current = seq.start;
  for (std::size_t step = 0; step < seq.fires.size(); ++step) {
    const Vertex v = seq.fires[step];
    const std::size_t at = step + 1;
    if (!g.contains(v)) throw FiringError(at, "step " + std::to_string(at) + ": vertex " + vname(v) + " out of range");
    if (rooted && (v == 0 || g.adjacent(0, v))) {
      throw FiringError(at, "step " + std::to_string(at) + ": vertex " + vname(v) +
                                " is the root or a neighbour of the root");
    }
    if (!current.is_source(v)) {
      throw FiringError(at, "step " + std::to_string(at) + ": vertex " + vname(v) +
                                " is not a source");
    }
    current = fire(current, v);
  }

  FiringReport report{current, seq.counts()};
  report.lemma1_ok = true;
  for (const Edge& e : g.edges()) {
    if (report.counts[e.lo] > report.counts[e.hi] + 1 ||
        report.counts[e.hi] > report.counts[e.lo] + 1) {
      report.lemma1_ok = false;
    }
  }

  report.bound_ok = true;
  if (rooted) {
    const auto dist = distances_from_root(g);
    long total = 0;
    for (Vertex v = 1; v <= g.n(); ++v) {
      report.length_bound += dist[v] - 1;
      total += report.counts[v];
      if (report.counts[v] > dist[v] - 1) report.bound_ok = false;
    }
    if (report.counts[0] != 0 || total > report.length_bound) report.bound_ok = false;
  }
  return report;
}

}  // namespace orientlat
