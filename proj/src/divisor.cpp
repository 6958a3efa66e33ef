#include "zdiv/divisor.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "zdiv/zero_divisor_graph.hpp"

namespace zdiv {

std::vector<std::pair<Vertex, Vertex>> Orientation::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(arcs.size());
  for (const auto& a : arcs) out.emplace_back(a.from, a.to);
  return out;
}

std::string to_string(VertexRole role) {
  switch (role) {
    case VertexRole::Transmitter: return "transmitter";
    case VertexRole::Receiver: return "receiver";
    case VertexRole::Transitive: return "transitive";
    case VertexRole::Isolated: return "isolated";
    case VertexRole::Invalid: return "invalid";
  }
  return "?";
}

std::string to_string(LabelingViolation::Reason reason) {
  switch (reason) {
    case LabelingViolation::Reason::Collision: return "collision";
    case LabelingViolation::Reason::NonPositive: return "non-positive label";
    case LabelingViolation::Reason::DivisibleNonEdge: return "divisibility on a non-edge";
    case LabelingViolation::Reason::EdgeWithoutDivisibility: return "edge without divisibility";
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> first_primes(std::size_t n) {
  std::vector<std::uint64_t> out;
  out.reserve(n);
  for (std::uint64_t k = 2; out.size() < n; ++k)
    if (is_prime(k)) out.push_back(k);
  return out;
}

Graph divisor_graph_of_set(std::span<const Label> values) {
  std::vector<std::string> labels;
  labels.reserve(values.size());
  for (const auto& v : values) {
    if (v <= 0) throw Error("divisor graph needs positive integers, got " + v.str());
    labels.push_back(v.str());
  }
  Graph g(std::move(labels));  // rejects duplicates
  for (Vertex u = 0; u < values.size(); ++u)
    for (Vertex v = u + 1; v < values.size(); ++v)
      if (values[v] % values[u] == 0 || values[u] % values[v] == 0) g.add_edge(u, v);
  return g;
}

namespace {

// dir[u*n+v] = +1 for u->v, -1 for v->u, 0 when absent.
std::vector<signed char> direction_matrix(const Graph& g, const Orientation& d) {
  const std::size_t n = g.order();
  std::vector<signed char> dir(n * n, 0);
  for (const auto& a : d.arcs) {
    if (a.from >= n || a.to >= n) throw OrientationError("arc references an unknown vertex");
    if (!g.adjacent(a.from, a.to)) throw OrientationError("arc " + g.label(a.from) + "->" + g.label(a.to) + " is not an edge");
    if (dir[a.from * n + a.to] != 0) throw OrientationError("edge " + g.label(a.from) + "-" + g.label(a.to) + " oriented twice");
    dir[a.from * n + a.to] = 1;
    dir[a.to * n + a.from] = -1;
  }
  if (d.arcs.size() != g.size()) throw OrientationError("orientation does not cover every edge");
  return dir;
}

}  // namespace

void check_covers(const Graph& g, const Orientation& d) { (void)direction_matrix(g, d); }

std::vector<VertexRole> classify_roles(const Graph& g, const Orientation& d) {
  const std::size_t n = g.order();
  const auto dir = direction_matrix(g, d);
  std::vector<VertexRole> roles(n, VertexRole::Isolated);
  for (Vertex t = 0; t < n; ++t) {
    std::vector<Vertex> in, out;
    for (Vertex w : g.neighbors(t)) (dir[w * n + t] == 1 ? in : out).push_back(w);
    if (in.empty() && out.empty()) continue;
    if (in.empty()) {
      roles[t] = VertexRole::Transmitter;
    } else if (out.empty()) {
      roles[t] = VertexRole::Receiver;
    } else {
      bool closed = true;
      for (Vertex u : in)
        for (Vertex v : out) closed = closed && dir[u * n + v] == 1;
      roles[t] = closed ? VertexRole::Transitive : VertexRole::Invalid;
    }
  }
  return roles;
}

bool validate_orientation(const Graph& g, const Orientation& d) {
  auto roles = classify_roles(g, d);
  return std::none_of(roles.begin(), roles.end(), [](VertexRole r) { return r == VertexRole::Invalid; });
}

bool is_transitive_digraph(std::size_t order, std::span<const Arc> arcs) {
  std::vector<bool> rel(order * order, false);
  for (const auto& a : arcs) rel[a.from * order + a.to] = true;
  for (const auto& a : arcs)
    for (const auto& b : arcs)
      if (a.to == b.from && !rel[a.from * order + b.to]) return false;
  return true;
}

bool is_acyclic(std::size_t order, std::span<const Arc> arcs) {
  std::vector<std::size_t> indeg(order, 0);
  std::vector<std::vector<Vertex>> out(order);
  for (const auto& a : arcs) {
    out[a.from].push_back(a.to);
    ++indeg[a.to];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < order; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (Vertex w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return removed == order;
}

// ---------------------------------------------------------------------------
// Recognition by propagation + backtracking

namespace {

class OrientationSearch {
 public:
  explicit OrientationSearch(const Graph& g) : g_(g), n_(g.order()), dir_(n_ * n_, 0), edges_(g.edges()) {}

  std::optional<Orientation> run() {
    // Failed-literal probing at the root: an edge whose two directions both
    // conflict proves there is no transitive orientation.
    for (const auto& [u, v] : edges_) {
      if (dir_[u * n_ + v] != 0) continue;
      const std::size_t mark = trail_.size();
      bool forward_ok = assign(u, v);
      undo(mark);
      bool backward_ok = assign(v, u);
      undo(mark);
      ++nodes_;
      if (!forward_ok && !backward_ok) return std::nullopt;
      if (!forward_ok || !backward_ok) {
        bool ok = forward_ok ? assign(u, v) : assign(v, u);
        if (!ok) return std::nullopt;
      }
    }
    if (!search(0)) return std::nullopt;
    Orientation out;
    out.arcs.reserve(edges_.size());
    for (const auto& [u, v] : edges_) out.arcs.push_back(dir_[u * n_ + v] == 1 ? Arc{u, v} : Arc{v, u});
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool search(std::size_t next) {
    while (next < edges_.size() && dir_[edges_[next].first * n_ + edges_[next].second] != 0) ++next;
    if (next == edges_.size()) return true;
    const auto [u, v] = edges_[next];
    for (int attempt = 0; attempt < 2; ++attempt) {
      ++nodes_;
      const std::size_t mark = trail_.size();
      bool ok = attempt == 0 ? assign(u, v) : assign(v, u);
      if (ok && search(next + 1)) return true;
      undo(mark);
    }
    return false;
  }

  bool assign(Vertex a, Vertex b) {
    queue_.clear();
    if (!set_arc(a, b)) return false;
    while (!queue_.empty()) {
      auto [x, y] = queue_.back();
      queue_.pop_back();
      if (!propagate(x, y)) return false;
    }
    return true;
  }

  bool set_arc(Vertex a, Vertex b) {
    if (!g_.adjacent(a, b)) return false;
    signed char& cell = dir_[a * n_ + b];
    if (cell == 1) return true;
    if (cell == -1) return false;
    cell = 1;
    dir_[b * n_ + a] = -1;
    trail_.emplace_back(a, b);
    queue_.emplace_back(a, b);
    return true;
  }

  // Consequences of a->b under transitivity of the final relation.
  bool propagate(Vertex a, Vertex b) {
    for (Vertex w : g_.neighbors(b)) {
      if (w == a) continue;
      signed char bw = dir_[b * n_ + w];
      if (bw == 1) {
        if (!set_arc(a, w)) return false;  // a->b->w
      } else if (bw == 0 && !g_.adjacent(a, w)) {
        if (!set_arc(w, b)) return false;  // b->w would need a~w
      }
    }
    for (Vertex w : g_.neighbors(a)) {
      if (w == b) continue;
      signed char wa = dir_[w * n_ + a];
      if (wa == 1) {
        if (!set_arc(w, b)) return false;  // w->a->b
      } else if (wa == 0 && !g_.adjacent(w, b)) {
        if (!set_arc(a, w)) return false;  // w->a would need w~b
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [a, b] = trail_.back();
      trail_.pop_back();
      dir_[a * n_ + b] = 0;
      dir_[b * n_ + a] = 0;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<signed char> dir_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::pair<Vertex, Vertex>> trail_;
  std::vector<std::pair<Vertex, Vertex>> queue_;
  std::uint64_t nodes_ = 0;
};

constexpr std::size_t kPatternNodeBudget = 200000;

}  // namespace

Recognition recognize_detailed(const Graph& g, const RecognizeOptions& options) {
  if (g.order() > options.max_vertices)
    throw CapExceeded("recognize: " + std::to_string(g.order()) + " vertices exceeds cap of " +
                      std::to_string(options.max_vertices));
  Recognition out;
  if (options.forbidden_pattern_first && g.order() >= 7) {
    if (auto e = find_induced_embedding(figure1_pattern(), g, kPatternNodeBudget)) {
      out.forbidden_pattern = std::move(e);
      return out;
    }
  }
  OrientationSearch search(g);
  out.orientation = search.run();
  out.search_nodes = search.nodes();
  return out;
}

BruteForceResult brute_force_recognize(const Graph& g, std::size_t max_edges) {
  const auto edges = g.edges();
  if (edges.size() > max_edges)
    throw CapExceeded("brute force: " + std::to_string(edges.size()) + " edges exceeds cap of " +
                      std::to_string(max_edges));
  // compact the non-isolated vertices into 64-bit masks
  std::vector<int> slot(g.order(), -1);
  int used = 0;
  for (const auto& [u, v] : edges) {
    if (slot[u] < 0) slot[u] = used++;
    if (slot[v] < 0) slot[v] = used++;
  }
  std::vector<std::uint64_t> out_mask(static_cast<std::size_t>(used), 0), in_mask(static_cast<std::size_t>(used), 0);
  auto flip = [&](std::size_t e, bool reversed) {
    auto a = static_cast<std::size_t>(slot[edges[e].first]);
    auto b = static_cast<std::size_t>(slot[edges[e].second]);
    if (reversed) std::swap(a, b);
    out_mask[a] |= 1ULL << b;
    in_mask[b] |= 1ULL << a;
    out_mask[b] &= ~(1ULL << a);
    in_mask[a] &= ~(1ULL << b);
  };
  auto roles_ok = [&] {
    for (std::size_t t = 0; t < out_mask.size(); ++t) {
      if (!in_mask[t] || !out_mask[t]) continue;  // transmitter, receiver, isolated
      for (std::uint64_t in = in_mask[t]; in; in &= in - 1) {
        auto u = static_cast<std::size_t>(std::countr_zero(in));
        if ((out_mask[u] & out_mask[t]) != out_mask[t]) return false;
      }
    }
    return true;
  };

  for (std::size_t e = 0; e < edges.size(); ++e) flip(e, false);
  BruteForceResult result;
  const std::uint64_t total = 1ULL << edges.size();
  std::uint64_t gray = 0;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (k > 0) {
      // Gray-code step: exactly one edge changes direction
      auto e = static_cast<std::size_t>(std::countr_zero(k));
      gray ^= 1ULL << e;
      flip(e, (gray >> e) & 1ULL);
    }
    ++result.scanned;
    if (roles_ok()) {
      Orientation d;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        d.arcs.push_back((gray >> i) & 1ULL ? Arc{v, u} : Arc{u, v});
      }
      result.orientation = std::move(d);
      return result;
    }
  }
  return result;
}

Orientation cross_orientation(const Graph& g, std::span<const Vertex> from_part) {
  std::vector<bool> source(g.order(), false);
  for (Vertex v : from_part) source.at(v) = true;
  Orientation d;
  for (const auto& [u, v] : g.edges()) {
    if (source[u] == source[v]) throw OrientationError("edge inside one side of the bipartition");
    d.arcs.push_back(source[u] ? Arc{u, v} : Arc{v, u});
  }
  return d;
}

DivisorLabeling synthesize_labeling(const Graph& g, const Orientation& d) {
  if (!validate_orientation(g, d)) throw OrientationError("cannot label an invalid orientation");
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> preds(n);
  for (const auto& a : d.arcs) preds[a.to].push_back(a.from);
  const auto primes = first_primes(n);
  DivisorLabeling f;
  f.label.resize(n);
  std::vector<char> mark(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(mark.begin(), mark.end(), 0);
    std::vector<Vertex> stack{v};
    mark[v] = 1;
    Label value = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      value *= primes[x];
      for (Vertex u : preds[x])
        if (!mark[u]) {
          mark[u] = 1;
          stack.push_back(u);
        }
    }
    f.label[v] = std::move(value);
  }
  return f;
}

LabelingCheck validate_labeling(const Graph& g, const DivisorLabeling& f) {
  if (f.label.size() != g.order()) throw Error("labeling does not cover every vertex");
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v)
    if (f.label[v] <= 0) return {false, LabelingViolation{LabelingViolation::Reason::NonPositive, v, v}};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const Label& a = f.label[u];
      const Label& b = f.label[v];
      if (a == b) return {false, LabelingViolation{LabelingViolation::Reason::Collision, u, v}};
      const bool divides = (b % a == 0) || (a % b == 0);
      if (divides && !g.adjacent(u, v))
        return {false, LabelingViolation{LabelingViolation::Reason::DivisibleNonEdge, u, v}};
      if (!divides && g.adjacent(u, v))
        return {false, LabelingViolation{LabelingViolation::Reason::EdgeWithoutDivisibility, u, v}};
    }
  return {};
}

}  // namespace zdiv
