#include "zdiv/zero_divisor_graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace zdiv {

namespace {

RingGraph ring_graph(const FiniteRing& ring, bool product_is_zero) {
  RingGraph out;
  out.element = ring.nonzero_zero_divisors();
  out.vertex.assign(ring.order(), std::nullopt);
  std::vector<std::string> labels;
  labels.reserve(out.element.size());
  for (Vertex v = 0; v < out.element.size(); ++v) {
    out.vertex[out.element[v]] = v;
    labels.push_back(ring.render(out.element[v]));
  }
  out.graph = Graph(std::move(labels));
  for (Vertex u = 0; u < out.element.size(); ++u)
    for (Vertex v = u + 1; v < out.element.size(); ++v)
      if ((ring.mul(out.element[u], out.element[v]) == 0) == product_is_zero) out.graph.add_edge(u, v);
  return out;
}

std::size_t unit_rank(const FiniteRing& ring, Index u) {
  const auto& units = ring.units();
  auto it = std::lower_bound(units.begin(), units.end(), u);
  if (it == units.end() || *it != u) throw RingError("element " + ring.render(u) + " is not a unit");
  return static_cast<std::size_t>(it - units.begin());
}

struct TwoFactors {
  FiniteRing first;
  FiniteRing second;
};

TwoFactors require_two_factors(const FiniteRing& ring, const char* what) {
  if (ring.factors().size() != 2)
    throw RingError(std::string(what) + ": " + ring.name() + " is not a product of two rings");
  return {ring.factors()[0], ring.factors()[1]};
}

Label power(std::uint64_t base, std::size_t exp) {
  Label out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

RingGraph gamma(const FiniteRing& ring) { return ring_graph(ring, true); }
RingGraph gamma_complement(const FiniteRing& ring) { return ring_graph(ring, false); }

std::string GammaDiameter::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Infinite: return "infinite";
    case Kind::Finite: return std::to_string(value);
  }
  return "?";
}

GammaDiameter gamma_diameter(const FiniteRing& ring) {
  RingGraph g = gamma(ring);
  if (g.graph.order() == 0) return {};
  Diameter d = diameter(g.graph);
  if (!d.connected) return {GammaDiameter::Kind::Infinite, 0};
  return {GammaDiameter::Kind::Finite, d.value};
}

Graph figure1_pattern() {
  Graph g({"A", "B", "C", "D", "E", "F", "G"});
  for (const char* e : {"AC", "AD", "AE", "AF", "AG", "BD", "BE", "CE", "CF", "CG", "DE", "DG", "EG"})
    g.add_edge(std::string(1, e[0]), std::string(1, e[1]));
  return g;
}

Orientation local_orientation(const FiniteRing& ring) {
  const LocalStructure ls = local_structure(ring);
  if (!ls.is_local()) throw RingError("local_orientation: " + ring.name() + " is not local");
  if (!ls.is_principal()) throw RingError("local_orientation: maximal ideal of " + ring.name() + " is not principal");
  const RingGraph g = gamma_complement(ring);
  Orientation d;
  for (const auto& [u, v] : g.graph.edges()) {
    const PowerForm& fu = ls.form(g.element[u]);
    const PowerForm& fv = ls.form(g.element[v]);
    const bool forward = std::tie(fu.exponent, fu.unit_rank) < std::tie(fv.exponent, fv.unit_rank);
    d.arcs.push_back(forward ? Arc{u, v} : Arc{v, u});
  }
  return d;
}

DivisorLabeling fig3_labeling(const FiniteRing& ring, std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || q == 2 || p == q)
    throw Error("fig3_labeling: p and q must be distinct odd primes");
  const auto [r1, r2] = require_two_factors(ring, "fig3_labeling");
  if (!is_domain(r1)) throw RingError("fig3_labeling: first factor " + r1.name() + " is not a domain");
  if (r2.nonzero_zero_divisors().size() != 1)
    throw RingError("fig3_labeling: second factor " + r2.name() + " must have exactly one nonzero zero divisor");
  const Index a = r2.nonzero_zero_divisors().front();
  const RingGraph g = gamma_complement(ring);
  DivisorLabeling f;
  f.label.resize(g.element.size());
  for (Vertex v = 0; v < g.element.size(); ++v) {
    const Index x = ring.project(g.element[v], 0);
    const Index y = ring.project(g.element[v], 1);
    if (x == 0) {
      f.label[v] = y == a ? Label(2) : 2 * power(p, unit_rank(r2, y) + 1);
    } else {
      const Label pj = power(p, unit_rank(r1, x) + 1);
      f.label[v] = y == a ? pj : q * pj;
    }
  }
  return f;
}

DivisorLabeling fig4_labeling(const FiniteRing& ring, const Fig4Interpretation& interpretation) {
  const auto [r1, r2] = require_two_factors(ring, "fig4_labeling");
  if (!is_domain(r1)) throw RingError("fig4_labeling: first factor " + r1.name() + " is not a domain");
  if (!gamma_diameter(r2).is(1)) throw RingError("fig4_labeling: Gamma(" + r2.name() + ") does not have diameter 1");

  const auto& zd = r2.nonzero_zero_divisors();
  const std::size_t k = zd.size();
  const std::size_t m = r1.units().size();
  std::vector<std::uint64_t> primes;
  for (std::uint64_t c = interpretation.first_prime; primes.size() < k + m * k; ++c)
    if (is_prime(c)) primes.push_back(c);
  auto p_i = [&](std::size_t i) { return primes[i - 1]; };
  auto s_ji = [&](std::size_t j, std::size_t i) { return primes[k + (j - 1) * k + (i - 1)]; };
  const std::size_t n_top = m * k + 1;

  auto zd_rank = [&](Index y) {
    return static_cast<std::size_t>(std::lower_bound(zd.begin(), zd.end(), y) - zd.begin()) + 1;
  };

  const RingGraph g = gamma_complement(ring);
  DivisorLabeling f;
  f.label.resize(g.element.size());
  for (Vertex v = 0; v < g.element.size(); ++v) {
    const Index x = ring.project(g.element[v], 0);
    const Index y = ring.project(g.element[v], 1);
    Label value;
    if (x == 0 && r2.is_zero_divisor(y)) {
      value = p_i(zd_rank(y));
    } else if (x == 0) {
      value = power(3, n_top);
      for (std::size_t i = 1; i <= k; ++i) value *= p_i(i);
    } else if (y != 0) {
      const std::size_t j = unit_rank(r1, x) + 1;
      value = power(3, (j - 1) * k + zd_rank(y));
    } else {
      const std::size_t j = unit_rank(r1, x) + 1;
      value = power(3, n_top);
      for (std::size_t i = 1; i <= k; ++i) value *= s_ji(j, i);
    }
    f.label[v] = std::move(value);
  }
  return f;
}

Orientation thm26_orientation(const FiniteRing& ring) {
  const auto [r1, r2] = require_two_factors(ring, "thm26_orientation");
  if (!is_domain(r1)) throw RingError("thm26_orientation: first factor " + r1.name() + " is not a domain");
  const LocalStructure ls = local_structure(r2);
  if (!ls.is_principal()) throw RingError("thm26_orientation: " + r2.name() + " is not a local principal ideal ring");
  if (!gamma_diameter(r2).is(2)) throw RingError("thm26_orientation: Gamma(" + r2.name() + ") does not have diameter 2");

  // Linear order: (u, m != 0) by ascending valuation, then (u, 0), then (0, m != 0)
  // by descending valuation, then (0, unit). Every edge points forward.
  using Key = std::tuple<int, long, long, long>;
  const RingGraph g = gamma_complement(ring);
  std::vector<Key> key(g.element.size());
  for (Vertex v = 0; v < g.element.size(); ++v) {
    const Index x = ring.project(g.element[v], 0);
    const Index y = ring.project(g.element[v], 1);
    if (x != 0 && y != 0) {
      const PowerForm& f = ls.form(y);
      key[v] = {0, static_cast<long>(f.exponent), -static_cast<long>(f.unit_rank), static_cast<long>(unit_rank(r1, x))};
    } else if (x != 0) {
      key[v] = {1, static_cast<long>(unit_rank(r1, x)), 0, 0};
    } else if (r2.is_unit(y)) {
      key[v] = {3, static_cast<long>(unit_rank(r2, y)), 0, 0};
    } else {
      const PowerForm& f = ls.form(y);
      key[v] = {2, -static_cast<long>(f.exponent), static_cast<long>(f.unit_rank), 0};
    }
  }
  Orientation d;
  for (const auto& [u, v] : g.graph.edges()) d.arcs.push_back(key[u] < key[v] ? Arc{u, v} : Arc{v, u});
  return d;
}

std::size_t RoleCensus::count(VertexRole role) const {
  auto it = members.find(role);
  return it == members.end() ? 0 : it->second.size();
}

bool RoleCensus::has(VertexRole role, Vertex v) const {
  auto it = members.find(role);
  return it != members.end() && std::find(it->second.begin(), it->second.end(), v) != it->second.end();
}

RoleCensus role_census(const Graph& g, const Orientation& d) {
  RoleCensus census;
  for (VertexRole r : {VertexRole::Transmitter, VertexRole::Receiver, VertexRole::Transitive, VertexRole::Isolated,
                       VertexRole::Invalid})
    census.members[r];
  const auto roles = classify_roles(g, d);
  for (Vertex v = 0; v < roles.size(); ++v) census.members[roles[v]].push_back(v);
  return census;
}

}  // namespace zdiv
