#include "zdiv/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace zdiv {

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  index_.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    if (!index_.emplace(labels_[v], v).second) throw GraphError("duplicate vertex label '" + labels_[v] + "'");
  adjacency_.resize(n);
  matrix_.assign(n * n, false);
}

Graph Graph::with_order(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return Graph(std::move(labels));
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) throw GraphError("edge references an unknown vertex");
  if (u == v) throw GraphError("loop at vertex '" + labels_[u] + "'");
  if (adjacent(u, v)) return;
  matrix_[u * order() + v] = matrix_[v * order() + u] = true;
  adjacency_[u].insert(std::upper_bound(adjacency_[u].begin(), adjacency_[u].end(), v), v);
  adjacency_[v].insert(std::upper_bound(adjacency_[v].begin(), adjacency_[v].end(), u), u);
  ++edge_count_;
}

void Graph::add_edge(std::string_view u, std::string_view v) { add_edge(at(u), at(v)); }

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::at(std::string_view label) const {
  auto v = find(label);
  if (!v) throw GraphError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(std::vector<std::string> vertices,
                  std::span<const std::pair<std::string, std::string>> edges) {
  Graph g(std::move(vertices));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.labels());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> keep(subset.begin(), subset.end());
  for (Vertex v : keep)
    if (v >= g.order()) throw GraphError("induced_subgraph: unknown vertex");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Vertex v : keep) labels.push_back(g.label(v));
  Graph out(std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(i, j);
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const std::string> subset) {
  std::vector<Vertex> vs;
  vs.reserve(subset.size());
  for (const auto& label : subset) vs.push_back(g.at(label));
  return induced_subgraph(g, vs);
}

bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
  if (e.image.size() != pattern.order()) return false;
  std::vector<bool> used(host.order(), false);
  for (Vertex h : e.image) {
    if (h >= host.order() || used[h]) return false;
    used[h] = true;
  }
  for (Vertex u = 0; u < pattern.order(); ++u)
    for (Vertex v = u + 1; v < pattern.order(); ++v)
      if (pattern.adjacent(u, v) != host.adjacent(e.image[u], e.image[v])) return false;
  return true;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host, std::size_t budget)
      : pattern_(pattern), host_(host), budget_(budget), image_(pattern.order(), 0),
        used_(host.order(), false) {
    order_.resize(pattern.order());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      if (pattern.degree(a) != pattern.degree(b)) return pattern.degree(a) > pattern.degree(b);
      return pattern.label(a) < pattern.label(b);
    });
  }

  std::optional<Embedding> run() {
    if (pattern_.order() > host_.order()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return Embedding{image_};
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    const std::size_t p_deg = pattern_.degree(p);
    const std::size_t p_non = pattern_.order() - 1 - p_deg;
    for (Vertex h = 0; h < host_.order(); ++h) {
      if (used_[h]) continue;
      if (host_.degree(h) < p_deg || host_.order() - 1 - host_.degree(h) < p_non) continue;
      if (budget_ && ++nodes_ > budget_) return false;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Vertex q = order_[k];
        consistent = pattern_.adjacent(p, q) == host_.adjacent(h, image_[q]);
      }
      if (!consistent) continue;
      image_[p] = h;
      used_[h] = true;
      if (extend(depth + 1)) return true;
      used_[h] = false;
      if (budget_ && nodes_ > budget_) return false;
    }
    return false;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u))
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host,
                                                std::size_t node_budget) {
  return EmbeddingSearch(pattern, host, node_budget).run();
}

Diameter diameter(const Graph& g) {
  if (g.order() == 0) throw GraphError("diameter of the empty graph is undefined");
  Diameter out;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == static_cast<std::size_t>(-1)) return Diameter{false, 0};
      out.value = std::max(out.value, d);
    }
  }
  return out;
}

std::optional<Bipartition> is_complete_bipartite(const Graph& g) {
  if (g.order() < 2) return std::nullopt;
  Bipartition parts;
  for (Vertex v = 0; v < g.order(); ++v) (v == 0 || !g.adjacent(0, v) ? parts.first : parts.second).push_back(v);
  if (parts.second.empty()) return std::nullopt;
  for (std::size_t i = 0; i < parts.first.size(); ++i)
    for (std::size_t j = i + 1; j < parts.first.size(); ++j)
      if (g.adjacent(parts.first[i], parts.first[j])) return std::nullopt;
  for (std::size_t i = 0; i < parts.second.size(); ++i)
    for (std::size_t j = i + 1; j < parts.second.size(); ++j)
      if (g.adjacent(parts.second[i], parts.second[j])) return std::nullopt;
  for (Vertex a : parts.first)
    for (Vertex b : parts.second)
      if (!g.adjacent(a, b)) return std::nullopt;
  if (parts.second.size() < parts.first.size()) std::swap(parts.first, parts.second);
  return parts;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < g.order(); ++v)
      if (dist[v] != static_cast<std::size_t>(-1)) {
        seen[v] = true;
        comp.push_back(v);
      }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

}  // namespace zdiv
