#include "zdiv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "text_cursor.hpp"
#include "zdiv/zero_divisor_graph.hpp"

namespace zdiv {

Poly::Poly(FiniteRing ring, std::vector<Index> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (Index c : coeffs_)
    if (c >= ring_.order()) throw PolyError("coefficient out of range for " + ring_.name());
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

namespace {

void require_same_ring(const Poly& f, const Poly& g) {
  if (!(f.ring() == g.ring())) throw PolyError("polynomials over different rings");
}

std::vector<Index> multiply(const FiniteRing& ring, const std::vector<Index>& a, const std::vector<Index>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Index> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
  }
  return out;
}

bool is_zero_product(const FiniteRing& ring, const std::vector<Index>& a, const std::vector<Index>& b) {
  for (std::size_t k = 0; k + 1 < a.size() + b.size(); ++k) {
    Index acc = 0;
    for (std::size_t i = (k + 1 > b.size() ? k + 1 - b.size() : 0); i < a.size() && i <= k; ++i)
      acc = ring.add(acc, ring.mul(a[i], b[k - i]));
    if (acc != 0) return false;
  }
  return true;
}

bool integer_rendering(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Poly operator+(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  std::vector<Index> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.ring().add(f.coeff(i), g.coeff(i));
  return Poly(f.ring(), std::move(out));
}

Poly operator*(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  return Poly(f.ring(), multiply(f.ring(), f.coeffs(), g.coeffs()));
}

Poly scale(Index c, const Poly& f) {
  std::vector<Index> out(f.coeffs());
  for (Index& x : out) x = f.ring().mul(c, x);
  return Poly(f.ring(), std::move(out));
}

std::string render(const Poly& f) {
  const FiniteRing& ring = f.ring();
  std::string out;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const Index c = f.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c != ring.one()) {
      std::string text = ring.render(c);
      out += integer_rendering(text) ? text : "[" + text + "]";
    }
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Poly parse_poly(const FiniteRing& ring, std::string_view text) {
  detail::Cursor cur(text);
  std::vector<Index> coeffs;
  bool first = true;
  while (true) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!first && !cur.accept('+')) {
      break;
    }
    first = false;
    Index coef = ring.one();
    bool have_coef = false;
    if (cur.accept('[')) {
      std::size_t offset = cur.offset();
      std::string_view inner = cur.until_matching('[', ']');
      try {
        coef = ring.parse_element(inner);
      } catch (const ParseError& e) {
        throw ParseError(std::string("bad coefficient: ") + e.what(), offset + e.offset());
      }
      have_coef = true;
    } else if (cur.at_digit()) {
      coef = ring.from_integer(static_cast<long long>(cur.parse_uint()));
      have_coef = true;
    }
    if (have_coef) cur.accept('*');
    std::size_t degree = 0;
    if (cur.accept('x')) {
      degree = 1;
      if (cur.accept('^')) degree = static_cast<std::size_t>(cur.parse_uint());
    } else if (!have_coef) {
      cur.fail("expected a coefficient or 'x'");
    }
    if (degree > 64) cur.fail("degree too large");
    if (negative) coef = ring.neg(coef);
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] = ring.add(coeffs[degree], coef);
  }
  if (!cur.at_end()) cur.fail("unexpected trailing characters in polynomial");
  return Poly(ring, std::move(coeffs));
}

std::uint64_t encode(const Poly& f) {
  std::uint64_t code = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) code = code * f.ring().order() + f.coeffs()[i];
  return code;
}

Poly decode(const FiniteRing& ring, std::uint64_t code, unsigned degree_bound) {
  std::vector<Index> coeffs(degree_bound + 1, 0);
  for (auto& c : coeffs) {
    c = static_cast<Index>(code % ring.order());
    code /= ring.order();
  }
  return Poly(ring, std::move(coeffs));
}

std::optional<Index> mccoy_witness(const Poly& f) {
  if (f.is_zero()) throw PolyError("mccoy_witness: zero polynomial");
  const FiniteRing& ring = f.ring();
  for (Index c = 1; c < ring.order(); ++c) {
    bool kills = std::all_of(f.coeffs().begin(), f.coeffs().end(), [&](Index x) { return ring.mul(c, x) == 0; });
    if (kills) return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Content decomposition

ContentDecomposer::Node ContentDecomposer::make_node(const FiniteRing& ring) {
  Node node{ring, std::nullopt, {}};
  if (ring.is_product()) {
    for (const auto& factor : ring.factors()) node.children.push_back(make_node(factor));
    return node;
  }
  LocalStructure ls = local_structure(ring);
  if (!ls.is_principal())
    throw PolyError("content decomposition needs a local principal ideal ring or a product of them; got " +
                    ring.name());
  node.local = std::move(ls);
  return node;
}

ContentDecomposer::ContentDecomposer(const FiniteRing& ring) : ring_(ring), root_(make_node(ring)) {}

std::pair<Index, std::vector<Index>> ContentDecomposer::decompose(const Node& node, const std::vector<Index>& coeffs) {
  const FiniteRing& ring = node.ring;
  if (!node.local) {
    const std::size_t nf = node.children.size();
    std::vector<Index> content(nf);
    std::vector<std::vector<Index>> parts(nf);
    std::size_t length = 0;
    for (std::size_t t = 0; t < nf; ++t) {
      std::vector<Index> proj(coeffs.size());
      for (std::size_t i = 0; i < coeffs.size(); ++i) proj[i] = ring.project(coeffs[i], t);
      while (!proj.empty() && proj.back() == 0) proj.pop_back();
      if (proj.empty()) {
        content[t] = 0;
        parts[t] = {node.children[t].ring.one()};  // 0 = 0 * 1
      } else {
        std::tie(content[t], parts[t]) = decompose(node.children[t], proj);
      }
      length = std::max(length, parts[t].size());
    }
    std::vector<Index> cofactor(length);
    std::vector<Index> comp(nf);
    for (std::size_t i = 0; i < length; ++i) {
      for (std::size_t t = 0; t < nf; ++t) comp[t] = i < parts[t].size() ? parts[t][i] : 0;
      cofactor[i] = ring.combine(comp);
    }
    return {ring.combine(content), std::move(cofactor)};
  }

  const LocalStructure& ls = *node.local;
  unsigned w = ls.nilpotency;
  for (Index c : coeffs)
    if (c != 0) w = std::min(w, ls.valuation(c));
  std::vector<Index> cofactor(coeffs.size(), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Index c = coeffs[i];
    if (c == 0) continue;
    if (ring.is_unit(c)) {
      cofactor[i] = c;
    } else {
      const PowerForm& f = ls.form(c);
      cofactor[i] = ring.mul(f.unit, ring.pow(ls.generator, f.exponent - w));
    }
  }
  return {ring.pow(ls.generator, w), std::move(cofactor)};
}

ContentDecomposition ContentDecomposer::operator()(const Poly& f) const {
  if (f.is_zero()) throw PolyError("content decomposition of the zero polynomial");
  if (!(f.ring() == ring_)) throw PolyError("polynomial over a different ring");
  auto [content, cofactor_coeffs] = decompose(root_, f.coeffs());
  Poly cofactor(ring_, std::move(cofactor_coeffs));
  if (!(scale(content, cofactor) == f)) throw PolyError("content decomposition failed to reproduce " + render(f));
  if (mccoy_witness(cofactor)) throw PolyError("content cofactor of " + render(f) + " is a zero divisor");
  return {content, std::move(cofactor)};
}

ContentDecomposition content_decompose(const Poly& f) { return ContentDecomposer(f.ring())(f); }

// ---------------------------------------------------------------------------
// Fragments

Fragment zero_divisor_fragment(const FiniteRing& ring, unsigned degree_bound, std::uint64_t cap, bool with_content) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i <= degree_bound; ++i) {
    total *= ring.order();
    if (total > cap)
      throw CapExceeded("fragment of " + ring.name() + " with degree <= " + std::to_string(degree_bound) +
                        " exceeds cap of " + std::to_string(cap) + " polynomials");
  }
  Fragment out;
  out.degree_bound = degree_bound;
  for (std::uint64_t code = 1; code < total; ++code) {
    Poly f = decode(ring, code, degree_bound);
    if (mccoy_witness(f)) out.members.push_back(std::move(f));
  }
  std::vector<std::string> labels;
  labels.reserve(out.members.size());
  for (const auto& f : out.members) labels.push_back(render(f));
  out.graph = Graph(std::move(labels));
  for (Vertex u = 0; u < out.members.size(); ++u)
    for (Vertex v = u + 1; v < out.members.size(); ++v)
      if (!is_zero_product(ring, out.members[u].coeffs(), out.members[v].coeffs())) out.graph.add_edge(u, v);
  if (with_content) {
    ContentDecomposer decompose(ring);
    out.content.reserve(out.members.size());
    for (const auto& f : out.members) out.content.push_back(decompose(f));
  }
  return out;
}

CorollaryResult corollary_check(const FiniteRing& ring, unsigned degree_bound, const CorollaryBudget& budget,
                                std::uint64_t cap) {
  const Fragment frag = zero_divisor_fragment(ring, degree_bound, cap, true);
  CorollaryResult result;
  result.zero_divisors = frag.members.size();
  auto check = [&](std::size_t i, std::size_t j) {
    const bool product_zero = is_zero_product(ring, frag.members[i].coeffs(), frag.members[j].coeffs());
    const bool content_zero = ring.mul(frag.content[i].content, frag.content[j].content) == 0;
    if (product_zero != content_zero && result.holds) {
      result.holds = false;
      result.counterexample = std::make_pair(frag.members[i], frag.members[j]);
    }
  };
  const std::size_t n = frag.members.size();
  if (budget.exhaustive) {
    for (std::size_t i = 0; i < n; ++i) {
      check(i, i);
      ++result.diagonal_checked;
      for (std::size_t j = i + 1; j < n; ++j) {
        check(i, j);
        ++result.pairs_checked;
      }
    }
  } else if (n >= 2) {
    std::mt19937_64 rng(budget.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < budget.samples; ++s) {
      std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      check(i, j);
      ++(i == j ? result.diagonal_checked : result.pairs_checked);
    }
  }
  return result;
}

Orientation lift_orientation(const FiniteRing& ring, const Orientation& base, const Fragment& fragment) {
  const RingGraph gc = gamma_complement(ring);
  if (!validate_orientation(gc.graph, base)) throw OrientationError("lift_orientation: base orientation is invalid");
  if (fragment.content.size() != fragment.members.size())
    throw PolyError("lift_orientation: fragment was built without content decompositions");
  const std::size_t n = gc.graph.order();
  std::vector<bool> arc(n * n, false);
  for (const auto& a : base.arcs) arc[a.from * n + a.to] = true;

  Orientation out;
  for (const auto& [f, g] : fragment.graph.edges()) {
    const Index cf = fragment.content[f].content;
    const Index cg = fragment.content[g].content;
    if (cf == cg) {
      out.arcs.push_back(Arc{f, g});  // vertices are already in encoding order
      continue;
    }
    const auto vf = gc.vertex_of(cf);
    const auto vg = gc.vertex_of(cg);
    if (!vf || !vg) throw PolyError("content of a zero-divisor polynomial is not a zero divisor");
    if (arc[*vf * n + *vg]) {
      out.arcs.push_back(Arc{f, g});
    } else if (arc[*vg * n + *vf]) {
      out.arcs.push_back(Arc{g, f});
    } else {
      throw PolyError("adjacent polynomials " + render(fragment.members[f]) + ", " + render(fragment.members[g]) +
                      " have non-adjacent contents");
    }
  }
  return out;
}

}  // namespace zdiv
