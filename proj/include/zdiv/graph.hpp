#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zdiv/error.hpp"

namespace zdiv {

using Vertex = std::size_t;

class GraphError : public Error {
 public:
  using Error::Error;
};

/// Finite simple undirected graph. Vertices are 0..order-1, each with a unique label.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on the given labels. Throws GraphError on duplicates.
  explicit Graph(std::vector<std::string> labels);
  /// Edgeless graph on vertices labelled "0".."n-1".
  static Graph with_order(std::size_t n);

  /// Adds {u,v}; repeated edges are ignored. Throws GraphError on loops.
  void add_edge(Vertex u, Vertex v);
  void add_edge(std::string_view u, std::string_view v);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const { return matrix_[u * order() + v]; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  const std::string& label(Vertex v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Vertex> find(std::string_view label) const;
  Vertex at(std::string_view label) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<bool> matrix_;
  std::size_t edge_count_ = 0;
};

Graph build_graph(std::vector<std::string> vertices,
                  std::span<const std::pair<std::string, std::string>> edges);

Graph complement(const Graph& g);

/// Subgraph induced on `subset`, keeping the host's vertex order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);
Graph induced_subgraph(const Graph& g, std::span<const std::string> subset);

/// image[i] is the host vertex that pattern vertex i maps to.
struct Embedding {
  std::vector<Vertex> image;
};

/// Injective, and preserves both adjacency and non-adjacency.
bool is_induced_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

/// First induced copy of `pattern` in `host` under a fixed search order, or none.
/// `node_budget` bounds the number of partial assignments tried; when exhausted the
/// search gives up and returns none (0 = unbounded).
std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host,
                                                std::size_t node_budget = 0);

struct Diameter {
  bool connected = true;
  std::size_t value = 0;  // meaningful only when connected

  friend bool operator==(const Diameter&, const Diameter&) = default;
};

/// Throws GraphError on the empty graph.
Diameter diameter(const Graph& g);

struct Bipartition {
  std::vector<Vertex> first;  // the smaller part (ties: the part holding vertex 0)
  std::vector<Vertex> second;
};

/// The bipartition when g is K_{m,n} with m, n >= 1.
std::optional<Bipartition> is_complete_bipartite(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

}  // namespace zdiv
