#pragma once

// Finite commutative rings with unity, encoded as indices 0..order-1.
//
// Index 0 is always the additive identity. The multiplicative identity is
// ring-dependent (index 1 for residue and quotient rings, the mixed-radix
// encoding of (1,...,1) for products).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zdiv/error.hpp"

namespace zdiv {

using Index = std::uint32_t;

/// Hard limit on the order of any ring we are willing to build.
inline constexpr Index kMaxRingOrder = 4096;

class RingError : public Error {
 public:
  using Error::Error;
};

struct RingSpec;

struct ZnSpec {
  Index n = 0;
};

/// GF(p)[x]/(modulus); coefficients stored low degree first.
struct QuotientPolySpec {
  Index p = 0;
  std::vector<Index> modulus;
};

struct ProductSpec {
  std::vector<RingSpec> factors;
};

/// Explicit Cayley tables. Element 0 must be the additive identity.
struct TableSpec {
  Index order = 0;
  std::vector<std::vector<Index>> add;
  std::vector<std::vector<Index>> mul;
};

struct RingSpec {
  std::variant<ZnSpec, QuotientPolySpec, ProductSpec, TableSpec> kind;
};

/// Canonical spec text, e.g. "Z2xGF(2)[x]/(x^2)". Parses back to an equal spec.
std::string to_string(const RingSpec& spec);

/// Element of a specific ring. `ring` is the owning ring's identity token.
struct Elem {
  std::uint64_t ring = 0;
  Index index = 0;

  friend bool operator==(const Elem&, const Elem&) = default;
};

class FiniteRing {
 public:
  /// Builds the ring described by `spec`, validating it. Throws RingError.
  static FiniteRing build(const RingSpec& spec);

  Index order() const;
  Index zero() const { return 0; }
  Index one() const;
  const RingSpec& spec() const;
  std::string name() const { return to_string(spec()); }

  /// Identity token shared by all copies of this ring.
  std::uint64_t token() const;

  Index add(Index a, Index b) const;
  Index mul(Index a, Index b) const;
  Index neg(Index a) const;
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  Index pow(Index a, unsigned e) const;
  /// The image of the integer `k` under Z -> R.
  Index from_integer(long long k) const;

  Elem elem(Index i) const;
  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;

  bool is_unit(Index a) const;
  bool is_zero_divisor(Index a) const;  // nonzero zero divisors only
  /// Units, ascending by index.
  const std::vector<Index>& units() const;
  /// Nonzero zero divisors, ascending by index.
  const std::vector<Index>& nonzero_zero_divisors() const;

  std::string render(Index a) const;
  /// Parses an element in the rendering syntax. Throws ParseError.
  Index parse_element(std::string_view text) const;

  /// Direct-product structure; empty for non-product rings.
  std::span<const FiniteRing> factors() const;
  bool is_product() const { return !factors().empty(); }
  Index project(Index a, std::size_t factor) const;
  Index combine(std::span<const Index> components) const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.impl_ == b.impl_; }

  struct Impl;

 private:
  explicit FiniteRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check_index(Index a) const;
  void check_same(Elem a) const;

  std::shared_ptr<const Impl> impl_;
};

inline FiniteRing build_ring(const RingSpec& spec) { return FiniteRing::build(spec); }

/// Explicit subset of a ring that has been checked to be an ideal.
class IdealSet {
 public:
  /// Throws RingError unless `members` is an ideal of `ring`.
  static IdealSet from_members(const FiniteRing& ring, std::vector<Index> members);

  bool contains(Index a) const { return a < mask_.size() && mask_[a]; }
  const std::vector<Index>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_zero() const { return members_.size() == 1; }
  bool is_whole_ring() const { return members_.size() == mask_.size(); }

  friend bool operator==(const IdealSet& a, const IdealSet& b) { return a.members_ == b.members_; }
  friend bool operator<(const IdealSet& a, const IdealSet& b) { return a.members_ < b.members_; }

 private:
  IdealSet(std::vector<Index> members, std::vector<bool> mask)
      : members_(std::move(members)), mask_(std::move(mask)) {}

  std::vector<Index> members_;
  std::vector<bool> mask_;
};

bool is_ideal(const FiniteRing& ring, std::span<const Index> subset);
IdealSet intersect(const FiniteRing& ring, const IdealSet& a, const IdealSet& b);
/// The principal ideal aR.
IdealSet principal_ideal(const FiniteRing& ring, Index a);

std::vector<Index> units_of(const FiniteRing& ring);
std::vector<Index> zero_divisors_of(const FiniteRing& ring, bool include_zero);
/// A finite ring is a domain iff it has no nonzero zero divisors (so it is a field).
bool is_domain(const FiniteRing& ring);

/// m = unit * generator^exponent, with the largest exponent and then the smallest unit.
struct PowerForm {
  std::size_t unit_rank = 0;  // 0-based position in canonical_units
  Index unit = 0;
  unsigned exponent = 0;
};

struct LocalStructure {
  enum class Kind { NotLocal, PrincipalLocal, NonPrincipalLocal };

  Kind kind = Kind::NotLocal;
  std::optional<IdealSet> maximal_ideal;
  Index generator = 0;
  unsigned nilpotency = 0;  // least n with generator^n = 0
  std::vector<Index> canonical_units;
  /// Indexed by element; populated for nonzero members of the maximal ideal.
  std::vector<std::optional<PowerForm>> power_form;

  bool is_local() const { return kind != Kind::NotLocal; }
  bool is_principal() const { return kind == Kind::PrincipalLocal; }
  /// Generator-adic valuation: 0 for units, `nilpotency` for zero.
  unsigned valuation(Index a) const;
  const PowerForm& form(Index a) const;
};

LocalStructure local_structure(const FiniteRing& ring);

IdealSet annihilator(const FiniteRing& ring, Index x);
/// Throws RingError if `ideal` is the whole ring.
bool is_prime_ideal(const FiniteRing& ring, const IdealSet& ideal);
/// Deduplicated prime annihilators of nonzero elements, sorted by member list.
std::vector<IdealSet> associated_primes(const FiniteRing& ring);
bool is_von_neumann_regular(const FiniteRing& ring, Index a);

}  // namespace zdiv
