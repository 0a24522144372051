#include "orientlat/firing_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "orientlat/errors.hpp"

namespace orientlat {

namespace {

std::vector<bool> bfs_reach(const std::vector<std::vector<Move>>& up, std::size_t from) {
  std::vector<bool> seen(up.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const Move& m : up[v]) {
      if (!seen[m.target]) {
        seen[m.target] = true;
        stack.push_back(m.target);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<Vertex> allowed_firings_p0(const Orientation& o) {
  if (!o.is_sink(0)) throw OrientationError("vertex 0 is not a sink");
  const Graph& g = o.graph();
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (!g.adjacent(0, v) && o.is_source(v)) out.push_back(v);
  }
  return out;
}

Poset Poset::build(const Graph& g) {
  Poset p;
  p.graph_ = g;
  p.elements_ = enumerate_sink_zero(g);
  const std::size_t count = p.elements_.size();

  std::map<std::vector<bool>, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index.emplace(p.elements_[i].directions(), i);

  p.up_.resize(count);
  p.down_.resize(count);
  for (std::size_t a = 0; a < count; ++a) {
    for (Vertex v : allowed_firings_p0(p.elements_[a])) {
      const std::size_t b = index.at(fire(p.elements_[a], v).directions());
      p.covers_.push_back({a, b, v});
      p.up_[a].push_back({b, v});
      p.down_[b].push_back({a, v});
    }
  }
  for (auto& moves : p.down_) {
    std::sort(moves.begin(), moves.end(),
              [](const Move& x, const Move& y) { return x.vertex < y.vertex; });
  }

  p.reach_.reserve(count);
  for (std::size_t a = 0; a < count; ++a) p.reach_.push_back(bfs_reach(p.up_, a));

  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a + 1; b < count; ++b) {
      if (p.reach_[a][b] && p.reach_[b][a]) {
        throw CounterexampleError("antisymmetry fails between elements " + std::to_string(a) +
                                  " and " + std::to_string(b));
      }
    }
  }
  return p;
}

std::optional<std::size_t> Poset::find(const Orientation& o) const {
  if (!(o.graph() == graph_)) return std::nullopt;
  // Elements are sorted by encoding, which is numeric order on the bits.
  auto less = [](const Orientation& x, const Orientation& y) {
    const auto& a = x.directions();
    const auto& b = y.directions();
    for (std::size_t e = a.size(); e-- > 0;) {
      if (a[e] != b[e]) return b[e];
    }
    return false;
  };
  auto it = std::lower_bound(elements_.begin(), elements_.end(), o, less);
  if (it == elements_.end() || !(*it == o)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t Poset::index_of(const Orientation& o) const {
  auto i = find(o);
  if (!i) throw OrientationError("orientation is not an element of the rooted poset");
  return *i;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::hasse() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t count = size();
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b || !reach_[a][b]) continue;
      bool covered = true;
      for (std::size_t c = 0; c < count && covered; ++c) {
        if (c != a && c != b && reach_[a][c] && reach_[c][b]) covered = false;
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Cover> Poset::non_cover_firings() const {
  const auto reduction = hasse();
  std::vector<Cover> out;
  for (const Cover& c : covers_) {
    if (!std::binary_search(reduction.begin(), reduction.end(),
                            std::pair{c.lower, c.upper})) {
      out.push_back(c);
    }
  }
  return out;
}

bool Component::contains(std::size_t element) const {
  return std::binary_search(members.begin(), members.end(), element);
}

bool Component::contains(const Orientation& o) const {
  auto i = poset->find(o);
  return i && contains(*i);
}

std::vector<Component> components(const Poset& p) {
  const std::size_t count = p.size();
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Cover& c : p.covers()) {
    auto a = root(c.lower), b = root(c.upper);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<Component> out;
  std::vector<std::size_t> slot(count, count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto r = root(i);
    if (slot[r] == count) {
      slot[r] = out.size();
      out.push_back(Component{&p, {}, {}});
    }
    out[slot[r]].members.push_back(i);
  }
  for (const Cover& c : p.covers()) out[slot[root(c.lower)]].covers.push_back(c);
  return out;
}

FiringSequence cover_path(const Poset& p, const Orientation& a, const Orientation& b) {
  const std::size_t from = p.index_of(a);
  const std::size_t to = p.index_of(b);
  if (!p.leq(from, to)) throw OrientationError("no firing sequence leads from a to b");

  std::vector<std::optional<Move>> via(p.size());
  std::vector<bool> seen(p.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(from);
  seen[from] = true;
  while (!frontier.empty() && !seen[to]) {
    auto v = frontier.front();
    frontier.pop();
    for (const Move& m : p.up(v)) {
      if (seen[m.target] || !p.leq(m.target, to)) continue;
      seen[m.target] = true;
      via[m.target] = Move{v, m.vertex};
      frontier.push(m.target);
    }
  }

  FiringSequence seq{a, {}};
  for (std::size_t v = to; v != from; v = via[v]->target) seq.fires.push_back(via[v]->vertex);
  std::reverse(seq.fires.begin(), seq.fires.end());
  return seq;
}

std::vector<ZigzagStep> zigzag_path(const Component& c, const Orientation& a,
                                    const Orientation& b) {
  const Poset& p = *c.poset;
  const auto from = p.find(a);
  const auto to = p.find(b);
  if (!from || !to || !c.contains(*from) || !c.contains(*to)) {
    throw OrientationError("zigzag endpoints must lie in the same component");
  }

  struct Parent {
    std::size_t prev;
    StepDirection direction;
    Vertex vertex;
  };
  std::vector<std::optional<Parent>> via(p.size());
  std::vector<bool> seen(p.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(*from);
  seen[*from] = true;
  while (!frontier.empty() && !seen[*to]) {
    const auto v = frontier.front();
    frontier.pop();
    // A vertex is either a source or a sink, never both, so merging the
    // two move lists by vertex gives a total order on neighbours.
    std::vector<std::pair<Move, StepDirection>> moves;
    for (const Move& m : p.up(v)) moves.emplace_back(m, StepDirection::Up);
    for (const Move& m : p.down(v)) moves.emplace_back(m, StepDirection::Down);
    std::sort(moves.begin(), moves.end(),
              [](const auto& x, const auto& y) { return x.first.vertex < y.first.vertex; });
    for (const auto& [m, dir] : moves) {
      if (seen[m.target]) continue;
      seen[m.target] = true;
      via[m.target] = Parent{v, dir, m.vertex};
      frontier.push(m.target);
    }
  }

  std::vector<ZigzagStep> steps;
  for (std::size_t v = *to; v != *from; v = via[v]->prev) {
    steps.push_back({via[v]->direction, via[v]->vertex, p.element(v)});
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

std::string to_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph P0 {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  n" << i << " [label=\"" << p.element(i).encoding() << "\"];\n";
  }
  for (auto [a, b] : p.hasse()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace orientlat
