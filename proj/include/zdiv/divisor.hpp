#pragma once

// Divisor graphs: a graph is one iff it has an orientation in which every
// non-isolated vertex is a transmitter, a receiver, or transitive. Equivalently
// the oriented digraph is a transitive relation.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zdiv/graph.hpp"

namespace zdiv {

using Label = boost::multiprecision::cpp_int;

class OrientationError : public Error {
 public:
  using Error::Error;
};

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// One arc per edge of an underlying graph.
struct Orientation {
  std::vector<Arc> arcs;

  std::vector<std::pair<Vertex, Vertex>> pairs() const;
};

enum class VertexRole { Transmitter, Receiver, Transitive, Isolated, Invalid };

std::string to_string(VertexRole role);

/// label[v] is the integer assigned to vertex v.
struct DivisorLabeling {
  std::vector<Label> label;
};

/// Vertices labelled by the decimal values, in the given order.
/// Throws Error on non-positive or repeated entries.
Graph divisor_graph_of_set(std::span<const Label> values);

/// Throws OrientationError unless D covers E(G) exactly once per edge.
void check_covers(const Graph& g, const Orientation& d);

std::vector<VertexRole> classify_roles(const Graph& g, const Orientation& d);

/// True iff no vertex is Invalid. Throws OrientationError if D does not cover E(G).
bool validate_orientation(const Graph& g, const Orientation& d);

/// True iff u->t and t->v always imply u->v (the relation is transitive).
bool is_transitive_digraph(std::size_t order, std::span<const Arc> arcs);
bool is_acyclic(std::size_t order, std::span<const Arc> arcs);

struct RecognizeOptions {
  std::size_t max_vertices = 64;
  /// Try to embed the seven-vertex forbidden pattern before searching (|V| >= 7).
  bool forbidden_pattern_first = true;
};

struct Recognition {
  std::optional<Orientation> orientation;
  std::optional<Embedding> forbidden_pattern;  // set when refuted by the pattern
  std::uint64_t search_nodes = 0;
};

/// Backtracking over edge directions with transitivity propagation.
/// Throws CapExceeded above `max_vertices`.
Recognition recognize_detailed(const Graph& g, const RecognizeOptions& options = {});

inline std::optional<Orientation> recognize(const Graph& g, const RecognizeOptions& options = {}) {
  return recognize_detailed(g, options).orientation;
}

struct BruteForceResult {
  std::optional<Orientation> orientation;
  std::uint64_t scanned = 0;
};

/// Scans all 2^|E| orientations in Gray-code order. Throws CapExceeded above `max_edges`.
BruteForceResult brute_force_recognize(const Graph& g, std::size_t max_edges = 20);

/// Orientation induced by the bipartition: every edge points from `from_part` outward.
Orientation cross_orientation(const Graph& g, std::span<const Vertex> from_part);

/// label(v) = product of the primes of every vertex that reaches v (v included).
/// The i-th vertex gets the i-th prime. Throws OrientationError on an invalid D.
DivisorLabeling synthesize_labeling(const Graph& g, const Orientation& d);

struct LabelingViolation {
  enum class Reason { Collision, NonPositive, DivisibleNonEdge, EdgeWithoutDivisibility };
  Reason reason;
  Vertex u = 0;
  Vertex v = 0;
};

std::string to_string(LabelingViolation::Reason reason);

struct LabelingCheck {
  bool valid = true;
  std::optional<LabelingViolation> violation;  // the first one in (u, v) pair order
};

LabelingCheck validate_labeling(const Graph& g, const DivisorLabeling& f);

/// First n primes (2, 3, 5, ...).
std::vector<std::uint64_t> first_primes(std::size_t n);
bool is_prime(std::uint64_t n);

}  // namespace zdiv
