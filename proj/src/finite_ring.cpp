#include "zdiv/finite_ring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "text_cursor.hpp"

namespace zdiv {

namespace {

// Rings up to this order keep full Cayley tables; larger ones compute structurally.
constexpr Index kTableOrderLimit = 1024;

std::atomic<std::uint64_t> next_token{1};

bool is_prime(Index n) {
  if (n < 2) return false;
  for (Index d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string render_zp_poly(const std::vector<Index>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    Index c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_string(const RingSpec& spec) {
  struct Visitor {
    std::string operator()(const ZnSpec& z) const { return "Z" + std::to_string(z.n); }
    std::string operator()(const QuotientPolySpec& q) const {
      return "GF(" + std::to_string(q.p) + ")[x]/(" + render_zp_poly(q.modulus) + ")";
    }
    std::string operator()(const ProductSpec& p) const {
      std::string out;
      for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i) out += 'x';
        std::string inner = to_string(p.factors[i]);
        if (std::holds_alternative<ProductSpec>(p.factors[i].kind)) inner = "(" + inner + ")";
        out += inner;
      }
      return out;
    }
    std::string operator()(const TableSpec& t) const { return "Table(" + std::to_string(t.order) + ")"; }
  };
  return std::visit(Visitor{}, spec.kind);
}

struct FiniteRing::Impl {
  enum class Kind { Zn, Quotient, Product, Table };

  RingSpec spec;
  std::uint64_t token = 0;
  Kind kind = Kind::Zn;
  Index order = 0;
  Index one = 1;

  Index p = 0;
  std::vector<Index> modulus;  // monic, low degree first
  unsigned degree = 0;

  std::vector<FiniteRing> factors;
  std::vector<Index> weights;  // mixed radix, first factor most significant

  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<Index> neg_table;

  std::vector<Index> units;
  std::vector<Index> zero_divisors;
  std::vector<bool> unit_mask;
  std::vector<bool> zd_mask;

  bool tabled() const { return !mul_table.empty(); }

  std::vector<Index> decode_poly(Index a) const {
    std::vector<Index> c(degree);
    for (unsigned i = 0; i < degree; ++i) {
      c[i] = a % p;
      a /= p;
    }
    return c;
  }
  Index encode_poly(const std::vector<Index>& c) const {
    Index a = 0;
    for (unsigned i = degree; i-- > 0;) a = a * p + c[i];
    return a;
  }

  Index raw_add(Index a, Index b) const {
    switch (kind) {
      case Kind::Zn:
        return (a + b) % order;
      case Kind::Quotient: {
        auto x = decode_poly(a), y = decode_poly(b);
        for (unsigned i = 0; i < degree; ++i) x[i] = (x[i] + y[i]) % p;
        return encode_poly(x);
      }
      case Kind::Product: {
        Index out = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) {
          Index ca = (a / weights[f]) % factors[f].order();
          Index cb = (b / weights[f]) % factors[f].order();
          out += factors[f].add(ca, cb) * weights[f];
        }
        return out;
      }
      case Kind::Table:
        return add_table[static_cast<std::size_t>(a) * order + b];
    }
    return 0;
  }

  Index raw_mul(Index a, Index b) const {
    switch (kind) {
      case Kind::Zn:
        return static_cast<Index>((static_cast<std::uint64_t>(a) * b) % order);
      case Kind::Quotient: {
        auto x = decode_poly(a), y = decode_poly(b);
        std::vector<Index> prod(2 * degree - 1, 0);
        for (unsigned i = 0; i < degree; ++i)
          for (unsigned j = 0; j < degree; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        for (std::size_t i = prod.size(); i-- > degree;) {
          Index c = prod[i];
          if (c == 0) continue;
          // subtract c * x^(i-degree) * modulus; modulus is monic
          for (unsigned t = 0; t <= degree; ++t) {
            std::size_t k = i - degree + t;
            prod[k] = (prod[k] + p * p - (c * modulus[t]) % p) % p;
          }
        }
        prod.resize(degree);
        return encode_poly(prod);
      }
      case Kind::Product: {
        Index out = 0;
        for (std::size_t f = 0; f < factors.size(); ++f) {
          Index ca = (a / weights[f]) % factors[f].order();
          Index cb = (b / weights[f]) % factors[f].order();
          out += factors[f].mul(ca, cb) * weights[f];
        }
        return out;
      }
      case Kind::Table:
        return mul_table[static_cast<std::size_t>(a) * order + b];
    }
    return 0;
  }

  Index raw_neg(Index a) const {
    switch (kind) {
      case Kind::Zn:
        return (order - a) % order;
      case Kind::Quotient: {
        auto x = decode_poly(a);
        for (auto& c : x) c = (p - c) % p;
        return encode_poly(x);
      }
      case Kind::Product: {
        Index out = 0;
        for (std::size_t f = 0; f < factors.size(); ++f)
          out += factors[f].neg((a / weights[f]) % factors[f].order()) * weights[f];
        return out;
      }
      case Kind::Table:
        return neg_table[a];
    }
    return 0;
  }

  Index add(Index a, Index b) const {
    return tabled() ? add_table[static_cast<std::size_t>(a) * order + b] : raw_add(a, b);
  }
  Index mul(Index a, Index b) const {
    return tabled() ? mul_table[static_cast<std::size_t>(a) * order + b] : raw_mul(a, b);
  }

  void build_tables() {
    if (kind == Kind::Table) return;  // validated tables already installed
    neg_table.resize(order);
    for (Index a = 0; a < order; ++a) neg_table[a] = raw_neg(a);
    if (order > kTableOrderLimit) return;
    std::vector<std::uint16_t> at(static_cast<std::size_t>(order) * order);
    std::vector<std::uint16_t> mt(at.size());
    for (Index a = 0; a < order; ++a)
      for (Index b = 0; b < order; ++b) {
        at[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint16_t>(raw_add(a, b));
        mt[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint16_t>(raw_mul(a, b));
      }
    add_table = std::move(at);
    mul_table = std::move(mt);
  }

  void classify_elements() {
    unit_mask.assign(order, false);
    zd_mask.assign(order, false);
    for (Index a = 0; a < order; ++a) {
      for (Index b = 0; b < order; ++b) {
        Index prod = mul(a, b);
        if (prod == one) unit_mask[a] = true;
        if (a != 0 && b != 0 && prod == 0) zd_mask[a] = true;
        if (unit_mask[a] || zd_mask[a]) break;  // a unit is never a zero divisor
      }
    }
    for (Index a = 0; a < order; ++a) {
      if (unit_mask[a]) units.push_back(a);
      if (zd_mask[a]) zero_divisors.push_back(a);
    }
  }
};

namespace {

void validate_table(const TableSpec& t, Index& one, std::vector<Index>& neg) {
  const Index n = t.order;
  if (n < 2) throw RingError("table ring must have at least two elements");
  if (n > kMaxRingOrder) throw CapExceeded("table ring order " + std::to_string(n) + " exceeds cap");
  auto check_shape = [n](const std::vector<std::vector<Index>>& tab, const char* what) {
    if (tab.size() != n) throw RingError(std::string(what) + " table has wrong row count");
    for (const auto& row : tab) {
      if (row.size() != n) throw RingError(std::string(what) + " table has wrong column count");
      for (Index v : row)
        if (v >= n) throw RingError(std::string(what) + " table entry out of range");
    }
  };
  check_shape(t.add, "add");
  check_shape(t.mul, "mul");
  const auto& A = t.add;
  const auto& M = t.mul;
  for (Index a = 0; a < n; ++a)
    if (A[0][a] != a) throw RingError("element 0 is not the additive identity");
  neg.assign(n, n);
  std::optional<Index> unity;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (A[a][b] != A[b][a]) throw RingError("addition is not commutative");
      if (M[a][b] != M[b][a]) throw RingError("multiplication is not commutative");
      if (A[a][b] == 0) neg[a] = b;
    }
    if (neg[a] == n) throw RingError("element " + std::to_string(a) + " has no additive inverse");
    if (!unity && std::all_of(M[a].begin(), M[a].end(), [&, i = Index{0}](Index v) mutable { return v == i++; }))
      unity = a;
  }
  if (!unity || *unity == 0) throw RingError("multiplication has no identity distinct from zero");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        if (A[A[a][b]][c] != A[a][A[b][c]]) throw RingError("addition is not associative");
        if (M[M[a][b]][c] != M[a][M[b][c]]) throw RingError("multiplication is not associative");
        if (M[a][A[b][c]] != A[M[a][b]][M[a][c]]) throw RingError("multiplication does not distribute");
      }
  one = *unity;
}

std::shared_ptr<FiniteRing::Impl> make_impl(const RingSpec& spec) {
  auto impl = std::make_shared<FiniteRing::Impl>();
  impl->spec = spec;
  impl->token = next_token.fetch_add(1);
  using Kind = FiniteRing::Impl::Kind;

  if (const auto* z = std::get_if<ZnSpec>(&spec.kind)) {
    if (z->n < 2) throw RingError("Z<n> requires n >= 2");
    if (z->n > kMaxRingOrder) throw CapExceeded("ring order " + std::to_string(z->n) + " exceeds cap");
    impl->kind = Kind::Zn;
    impl->order = z->n;
    impl->one = 1;
  } else if (const auto* q = std::get_if<QuotientPolySpec>(&spec.kind)) {
    if (!is_prime(q->p)) throw RingError("GF(" + std::to_string(q->p) + "): modulus is not prime");
    if (q->modulus.size() < 2) throw RingError("quotient modulus must have degree >= 1");
    for (Index c : q->modulus)
      if (c >= q->p) throw RingError("modulus coefficient not reduced mod p");
    if (q->modulus.back() != 1) throw RingError("quotient modulus must be monic");
    impl->kind = Kind::Quotient;
    impl->p = q->p;
    impl->modulus = q->modulus;
    impl->degree = static_cast<unsigned>(q->modulus.size() - 1);
    std::uint64_t order = 1;
    for (unsigned i = 0; i < impl->degree; ++i) {
      order *= q->p;
      if (order > kMaxRingOrder) throw CapExceeded("ring order exceeds cap");
    }
    impl->order = static_cast<Index>(order);
    impl->one = 1;
  } else if (const auto* pr = std::get_if<ProductSpec>(&spec.kind)) {
    if (pr->factors.size() < 2) throw RingError("product needs at least two factors");
    impl->kind = Kind::Product;
    std::uint64_t order = 1;
    for (const auto& f : pr->factors) {
      impl->factors.push_back(FiniteRing::build(f));
      order *= impl->factors.back().order();
      if (order > kMaxRingOrder) throw CapExceeded("ring order exceeds cap");
    }
    impl->order = static_cast<Index>(order);
    impl->weights.assign(impl->factors.size(), 1);
    for (std::size_t f = impl->factors.size() - 1; f-- > 0;)
      impl->weights[f] = impl->weights[f + 1] * impl->factors[f + 1].order();
    impl->one = 0;
    for (std::size_t f = 0; f < impl->factors.size(); ++f) impl->one += impl->factors[f].one() * impl->weights[f];
  } else {
    const auto& t = std::get<TableSpec>(spec.kind);
    impl->kind = Kind::Table;
    impl->order = t.order;
    validate_table(t, impl->one, impl->neg_table);
    const std::size_t n = t.order;
    impl->add_table.resize(n * n);
    impl->mul_table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        impl->add_table[a * n + b] = static_cast<std::uint16_t>(t.add[a][b]);
        impl->mul_table[a * n + b] = static_cast<std::uint16_t>(t.mul[a][b]);
      }
  }
  impl->build_tables();
  impl->classify_elements();
  return impl;
}

}  // namespace

FiniteRing FiniteRing::build(const RingSpec& spec) { return FiniteRing(make_impl(spec)); }

Index FiniteRing::order() const { return impl_->order; }
Index FiniteRing::one() const { return impl_->one; }
const RingSpec& FiniteRing::spec() const { return impl_->spec; }
std::uint64_t FiniteRing::token() const { return impl_->token; }

void FiniteRing::check_index(Index a) const {
  if (a >= impl_->order)
    throw RingError("element index " + std::to_string(a) + " out of range for " + name());
}

void FiniteRing::check_same(Elem a) const {
  if (a.ring != impl_->token) throw RingError("operands belong to different rings");
  check_index(a.index);
}

Index FiniteRing::add(Index a, Index b) const { return impl_->add(a, b); }
Index FiniteRing::mul(Index a, Index b) const { return impl_->mul(a, b); }
Index FiniteRing::neg(Index a) const { return impl_->neg_table[a]; }

Index FiniteRing::pow(Index a, unsigned e) const {
  Index result = one();
  Index base = a;
  while (e) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Index FiniteRing::from_integer(long long k) const {
  unsigned long long m = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Index result = 0;
  Index base = one();
  while (m) {
    if (m & 1ULL) result = add(result, base);
    base = add(base, base);
    m >>= 1ULL;
  }
  return k < 0 ? neg(result) : result;
}

Elem FiniteRing::elem(Index i) const {
  check_index(i);
  return Elem{impl_->token, i};
}

Elem FiniteRing::add(Elem a, Elem b) const {
  check_same(a);
  check_same(b);
  return Elem{impl_->token, add(a.index, b.index)};
}

Elem FiniteRing::mul(Elem a, Elem b) const {
  check_same(a);
  check_same(b);
  return Elem{impl_->token, mul(a.index, b.index)};
}

Elem FiniteRing::neg(Elem a) const {
  check_same(a);
  return Elem{impl_->token, neg(a.index)};
}

bool FiniteRing::is_unit(Index a) const { return impl_->unit_mask.at(a); }
bool FiniteRing::is_zero_divisor(Index a) const { return impl_->zd_mask.at(a); }
const std::vector<Index>& FiniteRing::units() const { return impl_->units; }
const std::vector<Index>& FiniteRing::nonzero_zero_divisors() const { return impl_->zero_divisors; }

std::span<const FiniteRing> FiniteRing::factors() const { return impl_->factors; }

Index FiniteRing::project(Index a, std::size_t factor) const {
  if (factor >= impl_->factors.size()) throw RingError("factor index out of range");
  return (a / impl_->weights[factor]) % impl_->factors[factor].order();
}

Index FiniteRing::combine(std::span<const Index> components) const {
  if (components.size() != impl_->factors.size()) throw RingError("component count mismatch");
  Index out = 0;
  for (std::size_t f = 0; f < components.size(); ++f) {
    impl_->factors[f].check_index(components[f]);
    out += components[f] * impl_->weights[f];
  }
  return out;
}

std::string FiniteRing::render(Index a) const {
  check_index(a);
  switch (impl_->kind) {
    case Impl::Kind::Zn:
    case Impl::Kind::Table:
      return std::to_string(a);
    case Impl::Kind::Quotient:
      return render_zp_poly(impl_->decode_poly(a));
    case Impl::Kind::Product: {
      std::string out = "(";
      for (std::size_t f = 0; f < impl_->factors.size(); ++f) {
        if (f) out += ',';
        out += impl_->factors[f].render(project(a, f));
      }
      return out + ")";
    }
  }
  return {};
}

namespace {

Index parse_element_at(const FiniteRing& ring, detail::Cursor& cur);

Index parse_component(const FiniteRing& ring, detail::Cursor& cur) {
  // Component text runs to the next top-level ',' or ')'.
  std::size_t start = cur.pos();
  std::size_t depth = 0;
  std::size_t end = start;
  auto text = cur.text();
  while (end < text.size()) {
    char c = text[end];
    if (c == '(') ++depth;
    if ((c == ',' || c == ')') && depth == 0) break;
    if (c == ')') --depth;
    ++end;
  }
  detail::Cursor sub(text.substr(start, end - start), cur.offset());
  Index value = parse_element_at(ring, sub);
  if (!sub.at_end()) sub.fail("unexpected trailing characters in element");
  while (cur.pos() < end) cur.accept(text[cur.pos()]);
  return value;
}

Index parse_element_at(const FiniteRing& ring, detail::Cursor& cur) {
  const auto& spec = ring.spec();
  if (ring.is_product()) {
    cur.expect('(');
    std::vector<Index> comps;
    for (std::size_t f = 0; f < ring.factors().size(); ++f) {
      if (f) cur.expect(',');
      comps.push_back(parse_component(ring.factors()[f], cur));
    }
    cur.expect(')');
    return ring.combine(comps);
  }
  if (const auto* q = std::get_if<QuotientPolySpec>(&spec.kind)) {
    auto coeffs = detail::parse_integer_poly(cur);
    const std::size_t degree = q->modulus.size() - 1;
    // reduce through ring arithmetic so x^k with k >= degree is handled
    Index x = degree >= 2 ? q->p : ring.from_integer(-static_cast<long long>(q->modulus[0]));
    Index result = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      result = ring.mul(result, x);
      result = ring.add(result, ring.from_integer(coeffs[i]));
    }
    return result;
  }
  long long sign = cur.accept('-') ? -1 : 1;
  auto value = static_cast<long long>(cur.parse_uint());
  if (std::holds_alternative<TableSpec>(spec.kind)) {
    if (sign < 0 || value >= ring.order()) cur.fail("table element out of range");
    return static_cast<Index>(value);
  }
  return ring.from_integer(sign * value);
}

}  // namespace

Index FiniteRing::parse_element(std::string_view text) const {
  detail::Cursor cur(text);
  Index value = parse_element_at(*this, cur);
  if (!cur.at_end()) cur.fail("unexpected trailing characters in element");
  return value;
}

// ---------------------------------------------------------------------------
// Ideals

bool is_ideal(const FiniteRing& ring, std::span<const Index> subset) {
  std::vector<bool> mask(ring.order(), false);
  for (Index a : subset) {
    if (a >= ring.order()) return false;
    mask[a] = true;
  }
  if (!mask[0]) return false;
  for (Index a : subset) {
    for (Index b : subset)
      if (!mask[ring.add(a, b)]) return false;
    for (Index r = 0; r < ring.order(); ++r)
      if (!mask[ring.mul(r, a)]) return false;
  }
  return true;
}

IdealSet IdealSet::from_members(const FiniteRing& ring, std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_ideal(ring, members)) throw RingError("subset is not an ideal of " + ring.name());
  std::vector<bool> mask(ring.order(), false);
  for (Index a : members) mask[a] = true;
  return IdealSet(std::move(members), std::move(mask));
}

IdealSet intersect(const FiniteRing& ring, const IdealSet& a, const IdealSet& b) {
  std::vector<Index> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(common));
  return IdealSet::from_members(ring, std::move(common));
}

IdealSet principal_ideal(const FiniteRing& ring, Index a) {
  std::vector<Index> members;
  members.reserve(ring.order());
  for (Index r = 0; r < ring.order(); ++r) members.push_back(ring.mul(a, r));
  return IdealSet::from_members(ring, std::move(members));
}

std::vector<Index> units_of(const FiniteRing& ring) { return ring.units(); }

std::vector<Index> zero_divisors_of(const FiniteRing& ring, bool include_zero) {
  std::vector<Index> out;
  if (include_zero) out.push_back(0);
  const auto& zd = ring.nonzero_zero_divisors();
  out.insert(out.end(), zd.begin(), zd.end());
  return out;
}

bool is_domain(const FiniteRing& ring) { return ring.nonzero_zero_divisors().empty(); }

unsigned LocalStructure::valuation(Index a) const {
  if (a == 0) return nilpotency;
  if (a < power_form.size() && power_form[a]) return power_form[a]->exponent;
  return 0;
}

const PowerForm& LocalStructure::form(Index a) const {
  if (a >= power_form.size() || !power_form[a])
    throw RingError("element " + std::to_string(a) + " has no power form");
  return *power_form[a];
}

LocalStructure local_structure(const FiniteRing& ring) {
  LocalStructure out;
  std::vector<Index> non_units;
  for (Index a = 0; a < ring.order(); ++a)
    if (!ring.is_unit(a)) non_units.push_back(a);
  std::vector<bool> is_non_unit(ring.order(), false);
  for (Index a : non_units) is_non_unit[a] = true;
  for (Index a : non_units)
    for (Index b : non_units)
      if (!is_non_unit[ring.add(a, b)]) return out;  // not local

  out.maximal_ideal = IdealSet::from_members(ring, non_units);
  out.canonical_units = ring.units();
  out.kind = LocalStructure::Kind::NonPrincipalLocal;

  if (non_units.size() == 1) {  // field: M = (0)
    out.kind = LocalStructure::Kind::PrincipalLocal;
    out.generator = 0;
    out.nilpotency = 1;
    out.power_form.assign(ring.order(), std::nullopt);
    return out;
  }

  for (Index a : non_units) {
    if (a == 0) continue;
    if (principal_ideal(ring, a).size() != non_units.size()) continue;
    out.kind = LocalStructure::Kind::PrincipalLocal;
    out.generator = a;
    break;
  }
  if (!out.is_principal()) return out;

  unsigned n = 1;
  for (Index power = out.generator; power != 0; power = ring.mul(power, out.generator)) ++n;
  out.nilpotency = n;

  out.power_form.assign(ring.order(), std::nullopt);
  for (unsigned j = n - 1; j >= 1; --j) {
    Index aj = ring.pow(out.generator, j);
    for (std::size_t rank = 0; rank < out.canonical_units.size(); ++rank) {
      Index u = out.canonical_units[rank];
      Index m = ring.mul(u, aj);
      if (!out.power_form[m]) out.power_form[m] = PowerForm{rank, u, j};
    }
  }
  return out;
}

IdealSet annihilator(const FiniteRing& ring, Index x) {
  std::vector<Index> members;
  for (Index r = 0; r < ring.order(); ++r)
    if (ring.mul(r, x) == 0) members.push_back(r);
  return IdealSet::from_members(ring, std::move(members));
}

bool is_prime_ideal(const FiniteRing& ring, const IdealSet& ideal) {
  if (ideal.is_whole_ring()) throw RingError("the whole ring is not a proper ideal");
  for (Index a = 0; a < ring.order(); ++a) {
    if (ideal.contains(a)) continue;
    for (Index b = a; b < ring.order(); ++b)
      if (!ideal.contains(b) && ideal.contains(ring.mul(a, b))) return false;
  }
  return true;
}

std::vector<IdealSet> associated_primes(const FiniteRing& ring) {
  std::vector<IdealSet> out;
  for (Index x = 1; x < ring.order(); ++x) {
    IdealSet ann = annihilator(ring, x);
    if (std::find(out.begin(), out.end(), ann) != out.end()) continue;
    if (is_prime_ideal(ring, ann)) out.push_back(std::move(ann));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_von_neumann_regular(const FiniteRing& ring, Index a) {
  Index sq = ring.mul(a, a);
  for (Index b = 0; b < ring.order(); ++b)
    if (ring.mul(sq, b) == a) return true;
  return false;
}

}  // namespace zdiv
