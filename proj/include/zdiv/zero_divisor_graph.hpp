#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zdiv/divisor.hpp"
#include "zdiv/finite_ring.hpp"
#include "zdiv/graph.hpp"

namespace zdiv {

/// A graph whose vertices are ring elements. Vertex labels are element renderings.
struct RingGraph {
  Graph graph;
  std::vector<Index> element;                 // vertex -> element
  std::vector<std::optional<Vertex>> vertex;  // element -> vertex

  std::optional<Vertex> vertex_of(Index a) const { return a < vertex.size() ? vertex[a] : std::nullopt; }
};

/// Gamma(R): nonzero zero divisors, adjacent when the product is zero.
RingGraph gamma(const FiniteRing& ring);
/// Complement of Gamma(R): same vertices, adjacent when the product is nonzero.
RingGraph gamma_complement(const FiniteRing& ring);

/// Diameter of Gamma(R) with the empty graph (domains) kept distinct from 0.
struct GammaDiameter {
  enum class Kind { Empty, Finite, Infinite };
  Kind kind = Kind::Empty;
  std::size_t value = 0;

  bool is(std::size_t d) const { return kind == Kind::Finite && value == d; }
  bool empty() const { return kind == Kind::Empty; }
  std::string to_string() const;
};

GammaDiameter gamma_diameter(const FiniteRing& ring);

/// The seven-vertex forbidden pattern A..G (13 edges).
Graph figure1_pattern();

/// For adjacent m1 = u_i a^j, m2 = u_k a^l: lower exponent first, then lower unit rank.
/// Arcs refer to gamma_complement(ring). Throws RingError unless R is a local PIR.
Orientation local_orientation(const FiniteRing& ring);

/// R = R1 x R2, R1 a field, Z(R2) = {0, a}:
///   (0,a) -> 2, (0,v_i) -> 2 p^i, (u_j,a) -> p^j, (u_j,0) -> q p^j
/// with 1-based canonical unit ranks. Validity is not implied; run validate_labeling.
DivisorLabeling fig3_labeling(const FiniteRing& ring, std::uint64_t p, std::uint64_t q);

/// How the loosely specified symbols of the four-class labeling are read.
///   (0,x_i)   -> p_i
///   (u_j,x_i) -> 3^N(j,i),            N(j,i) = (j-1) k + i
///   (0,v_s)   -> 3^N_top * prod_i p_i, N_top = m k + 1 (shared by all s)
///   (u_j,0)   -> 3^N_top * prod_i S(j,i)
/// p_1..p_k and then S(1,1)..S(m,k) are consecutive primes starting at `first_prime`.
struct Fig4Interpretation {
  std::uint64_t first_prime = 5;
};

/// R = R1 x R2 with R1 a field and Gamma(R2) of diameter 1. Throws RingError otherwise.
DivisorLabeling fig4_labeling(const FiniteRing& ring, const Fig4Interpretation& interpretation = {});

/// R = R1 x R2 with R1 a field and R2 a local PIR whose Gamma has diameter 2.
/// Throws RingError otherwise. Arcs refer to gamma_complement(ring).
Orientation thm26_orientation(const FiniteRing& ring);

struct RoleCensus {
  std::map<VertexRole, std::vector<Vertex>> members;

  std::size_t count(VertexRole role) const;
  bool has(VertexRole role, Vertex v) const;
};

RoleCensus role_census(const Graph& g, const Orientation& d);

}  // namespace zdiv
