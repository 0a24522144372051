#include "orientlat/chromatic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "orientlat/errors.hpp"
#include "orientlat/orientation.hpp"

namespace orientlat {

namespace {

using Poly = std::vector<std::int64_t>;

struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // lo < hi, sorted, no duplicates
  bool has_loop = false;
};

void normalise(Multigraph& m) {
  for (auto& [a, b] : m.edges) {
    if (a == b) m.has_loop = true;
    if (a > b) std::swap(a, b);
  }
  std::erase_if(m.edges, [](const auto& e) { return e.first == e.second; });
  std::sort(m.edges.begin(), m.edges.end());
  m.edges.erase(std::unique(m.edges.begin(), m.edges.end()), m.edges.end());
}

// Relabels vertices by (degree, sorted neighbour degrees, old label) and
// returns the resulting edge list. Equal keys imply isomorphic graphs, which
// is all memoisation needs; unequal keys for isomorphic graphs only cost a
// cache miss.
std::vector<int> certificate(const Multigraph& m) {
  std::vector<int> degree(m.vertices, 0);
  std::vector<std::vector<int>> adj(m.vertices);
  for (auto [a, b] : m.edges) {
    ++degree[a];
    ++degree[b];
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<int>> profile(m.vertices);
  for (int v = 0; v < m.vertices; ++v) {
    for (int w : adj[v]) profile[v].push_back(degree[w]);
    std::sort(profile[v].begin(), profile[v].end());
  }
  std::vector<int> order(m.vertices);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::tie(degree[x], profile[x], x) < std::tie(degree[y], profile[y], y);
  });
  std::vector<int> label(m.vertices);
  for (int k = 0; k < m.vertices; ++k) label[order[k]] = k;

  std::vector<std::pair<int, int>> relabelled;
  for (auto [a, b] : m.edges) {
    relabelled.emplace_back(std::min(label[a], label[b]), std::max(label[a], label[b]));
  }
  std::sort(relabelled.begin(), relabelled.end());
  std::vector<int> key{m.vertices};
  for (auto [a, b] : relabelled) {
    key.push_back(a);
    key.push_back(b);
  }
  return key;
}

class DeletionContraction {
 public:
  Poly solve(const Multigraph& m) {
    if (m.has_loop) return Poly(m.vertices + 1, 0);
    if (m.edges.empty()) {
      Poly p(m.vertices + 1, 0);
      p[m.vertices] = 1;
      return p;
    }
    auto key = certificate(m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto [lo, hi] = m.edges.back();

    Multigraph deleted = m;
    deleted.edges.pop_back();

    Multigraph contracted;
    contracted.vertices = m.vertices - 1;
    for (auto [a, b] : m.edges) {
      auto merge = [&](int v) { return v == hi ? lo : (v > hi ? v - 1 : v); };
      if (std::pair{a, b} == std::pair{lo, hi}) continue;
      contracted.edges.emplace_back(merge(a), merge(b));
    }
    normalise(contracted);

    Poly result = solve(deleted);
    const Poly minus = solve(contracted);
    for (std::size_t k = 0; k < minus.size(); ++k) result[k] -= minus[k];
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::vector<int>, Poly> memo_;
};

}  // namespace

std::int64_t ChromaticPolynomial::evaluate(std::int64_t t) const {
  std::int64_t value = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * t + *it;
  return value;
}

ChromaticPolynomial chromatic_polynomial(const Graph& g) {
  Multigraph m;
  m.vertices = g.vertex_count();
  for (const Edge& e : g.edges()) m.edges.emplace_back(e.lo, e.hi);
  normalise(m);
  DeletionContraction dc;
  return {dc.solve(m)};
}

std::int64_t greene_zaslavsky_count(const Graph& g) {
  const std::int64_t linear = chromatic_polynomial(g).linear();
  const std::int64_t count = g.n() % 2 == 0 ? linear : -linear;
  if (count < 0) {
    throw CounterexampleError("signed linear chromatic coefficient is negative: " +
                              std::to_string(count));
  }
  return count;
}

std::size_t count_unique_sink_zero(const Graph& g) {
  std::size_t count = 0;
  for (const Orientation& o : enumerate_sink_zero(g)) {
    if (vertex_roles(o).sinks == std::vector<Vertex>{0}) ++count;
  }
  return count;
}

}  // namespace orientlat
