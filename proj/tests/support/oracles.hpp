#pragma once

// Brute-force reference computations that share no code path with the
// library beyond the Graph type itself.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "orientlat/graph.hpp"

namespace orientlat::oracle {

struct RawOrientation {
  std::vector<std::pair<int, int>> arcs;  // (tail, head) per edge index
};

inline std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.lo, e.hi);
  return out;
}

inline std::vector<std::pair<int, int>> decode(const Graph& g, std::uint64_t code) {
  auto es = edge_pairs(g);
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t e = 0; e < es.size(); ++e) {
    if (code >> e & 1U) arcs.emplace_back(es[e].first, es[e].second);
    else arcs.emplace_back(es[e].second, es[e].first);
  }
  return arcs;
}

/// Cycle detection by three-colour DFS.
inline bool acyclic(int nv, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(nv);
  for (auto [t, h] : arcs) out[t].push_back(h);
  std::vector<int> colour(nv, 0);
  std::function<bool(int)> dfs = [&](int v) {
    colour[v] = 1;
    for (int w : out[v]) {
      if (colour[w] == 1) return false;
      if (colour[w] == 0 && !dfs(w)) return false;
    }
    colour[v] = 2;
    return true;
  };
  for (int v = 0; v < nv; ++v)
    if (colour[v] == 0 && !dfs(v)) return false;
  return true;
}

inline std::set<int> sinks(int nv, const std::vector<std::pair<int, int>>& arcs) {
  std::set<int> s;
  for (int v = 0; v < nv; ++v) s.insert(v);
  for (auto [t, h] : arcs) s.erase(t);
  return s;
}

inline std::size_t count_acyclic(const Graph& g) {
  std::size_t c = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.edge_count()); ++code)
    c += acyclic(g.vertex_count(), decode(g, code));
  return c;
}

inline std::size_t count_unique_sink_zero(const Graph& g) {
  std::size_t c = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << g.edge_count()); ++code) {
    auto a = decode(g, code);
    if (acyclic(g.vertex_count(), a) && sinks(g.vertex_count(), a) == std::set<int>{0}) ++c;
  }
  return c;
}

/// Sink-zero orientations (by code) and the sizes of the weakly connected
/// classes of the legal-firing graph.
inline std::multiset<std::size_t> component_sizes(const Graph& g) {
  const int nv = g.vertex_count();
  const auto es = edge_pairs(g);
  std::vector<std::uint64_t> elems;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << es.size()); ++code) {
    auto a = decode(g, code);
    if (acyclic(nv, a) && sinks(nv, a).count(0)) elems.push_back(code);
  }
  std::map<std::uint64_t, std::uint64_t> parent;
  for (auto c : elems) parent[c] = c;
  std::function<std::uint64_t(std::uint64_t)> root = [&](std::uint64_t c) {
    return parent[c] == c ? c : parent[c] = root(parent[c]);
  };
  for (auto code : elems) {
    auto a = decode(g, code);
    for (int v = 1; v < nv; ++v) {
      if (g.adjacent(0, v)) continue;
      bool source = true;
      for (auto [t, h] : a) source = source && h != v;
      if (!source) continue;
      std::uint64_t next = code;
      for (std::size_t e = 0; e < es.size(); ++e)
        if (es[e].first == v || es[e].second == v) next ^= std::uint64_t{1} << e;
      parent[root(code)] = root(next);
    }
  }
  std::map<std::uint64_t, std::size_t> sizes;
  for (auto c : elems) ++sizes[root(c)];
  std::multiset<std::size_t> out;
  for (auto [r, s] : sizes) out.insert(s);
  return out;
}

/// Proper colourings with k colours, by exhaustive assignment.
inline std::int64_t colourings(const Graph& g, int k) {
  const int nv = g.vertex_count();
  std::vector<int> colour(nv, 0);
  std::int64_t total = 0;
  std::function<void(int)> go = [&](int v) {
    if (v == nv) {
      ++total;
      return;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (w < v && colour[w] == c) ok = false;
      if (!ok) continue;
      colour[v] = c;
      go(v + 1);
    }
  };
  go(0);
  return total;
}

/// Chromatic coefficients by Lagrange interpolation through k = 0..nv.
inline std::vector<std::int64_t> chromatic_by_interpolation(const Graph& g) {
  const int nv = g.vertex_count();
  std::vector<mpq_class> coeff(nv + 1, 0);
  for (int k = 0; k <= nv; ++k) {
    // basis polynomial prod_{m != k} (t - m) / (k - m)
    std::vector<mpq_class> basis{1};
    mpq_class scale = 1;
    for (int m = 0; m <= nv; ++m) {
      if (m == k) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * m;
      }
      basis = next;
      scale *= (k - m);
    }
    const mpq_class y = colourings(g, k);
    for (std::size_t i = 0; i < basis.size(); ++i) coeff[i] += y * basis[i] / scale;
  }
  std::vector<std::int64_t> out;
  for (auto& c : coeff) {
    c.canonicalize();
    out.push_back(c.get_num().get_si());
  }
  return out;
}

}  // namespace orientlat::oracle
