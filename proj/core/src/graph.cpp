#include "orientlat/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <sstream>
#include <string>

#include "orientlat/errors.hpp"

namespace orientlat {

struct Graph::Data {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> adjacency;
  std::vector<std::vector<std::size_t>> incidence;
};

namespace {

std::string edge_name(Vertex a, Vertex b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<Vertex, Vertex>> raw) {
  if (n < 0) throw GraphError("vertex count must be nonnegative");
  auto data = std::make_shared<Data>();
  data->n = n;
  data->edges.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (a < 0 || b < 0 || a > n || b > n) {
      throw GraphError("edge " + edge_name(a, b) + " references a vertex outside 0.." +
                       std::to_string(n));
    }
    if (a == b) throw GraphError("loop edge at vertex " + std::to_string(a));
    data->edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(data->edges.begin(), data->edges.end());
  auto dup = std::adjacent_find(data->edges.begin(), data->edges.end());
  if (dup != data->edges.end()) {
    throw GraphError("duplicate edge " + edge_name(dup->lo, dup->hi));
  }

  data->adjacency.resize(n + 1);
  data->incidence.resize(n + 1);
  for (std::size_t e = 0; e < data->edges.size(); ++e) {
    const auto [lo, hi] = data->edges[e];
    data->adjacency[lo].push_back(hi);
    data->adjacency[hi].push_back(lo);
    data->incidence[lo].push_back(e);
    data->incidence[hi].push_back(e);
  }
  for (auto& adj : data->adjacency) std::sort(adj.begin(), adj.end());

  if (n > 0) {
    for (Vertex v = 0; v <= n; ++v) {
      if (data->adjacency[v].empty()) {
        throw GraphError("isolated vertex " + std::to_string(v));
      }
    }
  }

  std::vector<bool> seen(n + 1, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : data->adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw GraphError("graph is disconnected");
  }
  return Graph(std::move(data));
}

Graph Graph::from_edges(std::vector<std::pair<Vertex, Vertex>> raw) {
  if (raw.empty()) throw GraphError("no edges: vertex 0 absent");
  Vertex top = 0;
  bool has_root = false;
  for (auto [a, b] : raw) {
    top = std::max({top, a, b});
    has_root = has_root || a == 0 || b == 0;
  }
  if (!has_root) throw GraphError("vertex 0 absent");
  return from_edges(top, std::move(raw));
}

int Graph::n() const noexcept { return data_->n; }

std::size_t Graph::edge_count() const noexcept { return data_->edges.size(); }

std::span<const Edge> Graph::edges() const noexcept { return data_->edges; }

const Edge& Graph::edge(std::size_t index) const {
  if (index >= data_->edges.size()) throw GraphError("edge index out of range");
  return data_->edges[index];
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return std::nullopt;
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(data_->edges.begin(), data_->edges.end(), key);
  if (it == data_->edges.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - data_->edges.begin());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return data_->adjacency[v];
}

std::span<const std::size_t> Graph::incident_edges(Vertex v) const {
  if (!contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return data_->incidence[v];
}

bool operator==(const Graph& a, const Graph& b) {
  return a.data_ == b.data_ || (a.n() == b.n() && a.data_->edges == b.data_->edges);
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() != 2) {
      throw GraphError("line " + std::to_string(line_no) + ": expected two vertices");
    }
    Vertex ends[2];
    for (int k = 0; k < 2; ++k) {
      const auto& w = words[k];
      auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), ends[k]);
      if (ec != std::errc{} || ptr != w.data() + w.size() || ends[k] < 0) {
        throw GraphError("line " + std::to_string(line_no) + ": '" + w +
                         "' is not a nonnegative integer");
      }
    }
    edges.emplace_back(ends[0], ends[1]);
  }
  return Graph::from_edges(std::move(edges));
}

Graph load_edge_list(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_edge_list(buf.str());
}

std::vector<int> distances_from_root(const Graph& g) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> frontier;
  dist[0] = 0;
  frontier.push(0);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

}  // namespace orientlat
