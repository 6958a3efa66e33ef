#pragma once

// Polynomials over a finite ring and bounded-degree fragments of R[x].

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zdiv/divisor.hpp"
#include "zdiv/finite_ring.hpp"
#include "zdiv/graph.hpp"

namespace zdiv {

class PolyError : public Error {
 public:
  using Error::Error;
};

/// Coefficients low degree first, trailing zeros stripped; zero is the empty vector.
class Poly {
 public:
  Poly(FiniteRing ring, std::vector<Index> coeffs);
  static Poly constant(const FiniteRing& ring, Index c) { return Poly(ring, {c}); }

  const FiniteRing& ring() const { return ring_; }
  const std::vector<Index>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Index coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_; }

 private:
  FiniteRing ring_;
  std::vector<Index> coeffs_;
};

Poly operator+(const Poly& f, const Poly& g);
Poly operator*(const Poly& f, const Poly& g);
Poly scale(Index c, const Poly& f);

/// e.g. "2x^2+3x+1"; coefficients that are not plain integers are bracketed: "[(1,2)]x".
std::string render(const Poly& f);
/// Inverse of render. Integer coefficients are read through Z -> R. Throws ParseError.
Poly parse_poly(const FiniteRing& ring, std::string_view text);

/// Canonical encoding of polynomials of degree <= d: sum of coeff_i * |R|^i.
std::uint64_t encode(const Poly& f);
Poly decode(const FiniteRing& ring, std::uint64_t code, unsigned degree_bound);

/// Smallest-index nonzero c with c f = 0, or none when f is regular. Throws on f = 0.
std::optional<Index> mccoy_witness(const Poly& f);

/// f = content * cofactor with the cofactor regular.
struct ContentDecomposition {
  Index content = 0;
  Poly cofactor;
};

/// Decomposes over local principal ideal rings and products of them. Holds the
/// per-factor local structure so repeated decompositions over one ring are cheap.
class ContentDecomposer {
 public:
  /// Throws PolyError when the ring is not a local PIR or a product of local PIRs.
  explicit ContentDecomposer(const FiniteRing& ring);

  /// Throws PolyError on f = 0 or a failed internal check.
  ContentDecomposition operator()(const Poly& f) const;

 private:
  struct Node {
    FiniteRing ring;
    std::optional<LocalStructure> local;  // leaves only
    std::vector<Node> children;
  };
  static Node make_node(const FiniteRing& ring);
  static std::pair<Index, std::vector<Index>> decompose(const Node& node, const std::vector<Index>& coeffs);

  FiniteRing ring_;
  Node root_;
};

ContentDecomposition content_decompose(const Poly& f);

inline constexpr std::uint64_t kDefaultFragmentCap = 4096;

/// Nonzero zero-divisor polynomials of degree <= d, ascending by encoding, joined
/// when their (untruncated) product is nonzero.
struct Fragment {
  unsigned degree_bound = 0;
  std::vector<Poly> members;
  std::vector<ContentDecomposition> content;  // filled when the ring shape allows it
  Graph graph;
};

/// Throws CapExceeded when |R|^(d+1) exceeds `cap`.
Fragment zero_divisor_fragment(const FiniteRing& ring, unsigned degree_bound,
                               std::uint64_t cap = kDefaultFragmentCap, bool with_content = true);

inline Graph zero_divisor_fragment_graph(const FiniteRing& ring, unsigned degree_bound,
                                         std::uint64_t cap = kDefaultFragmentCap) {
  return zero_divisor_fragment(ring, degree_bound, cap, false).graph;
}

struct CorollaryBudget {
  bool exhaustive = true;
  std::uint64_t samples = 0;  // pairs drawn when not exhaustive
  std::uint64_t seed = 1;
};

struct CorollaryResult {
  std::size_t zero_divisors = 0;
  std::uint64_t pairs_checked = 0;     // unordered pairs of distinct polynomials
  std::uint64_t diagonal_checked = 0;  // f paired with itself
  bool holds = true;
  std::optional<std::pair<Poly, Poly>> counterexample;
};

/// fg = 0 iff c_f c_g = 0 over the fragment's zero-divisor polynomials.
CorollaryResult corollary_check(const FiniteRing& ring, unsigned degree_bound, const CorollaryBudget& budget = {},
                                std::uint64_t cap = kDefaultFragmentCap);

/// Orients the fragment by the contents: f -> g when c_f -> c_g in `base`, which
/// must be a valid orientation of gamma_complement(ring). Polynomials with equal
/// content are ordered by encoding. Arcs refer to `fragment.graph`.
Orientation lift_orientation(const FiniteRing& ring, const Orientation& base, const Fragment& fragment);

}  // namespace zdiv
