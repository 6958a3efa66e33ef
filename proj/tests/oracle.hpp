#pragma once

// Independent reference computations used as test oracles. Nothing here calls
// into the library's algorithms; graphs are plain adjacency matrices.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using ArcList = std::vector<std::pair<std::size_t, std::size_t>>;

inline Matrix empty_matrix(std::size_t n) { return Matrix(n, std::vector<bool>(n, false)); }

inline std::size_t edge_count(const Matrix& m) {
  std::size_t c = 0;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v) c += m[u][v];
  return c;
}

/// Elements of GF(p)[x]/(x^k) as coefficient tuples, index = sum c_i p^i.
struct TruncatedPoly {
  unsigned p;
  unsigned k;

  unsigned order() const {
    unsigned o = 1;
    for (unsigned i = 0; i < k; ++i) o *= p;
    return o;
  }
  std::vector<unsigned> digits(unsigned a) const {
    std::vector<unsigned> d(k);
    for (auto& x : d) {
      x = a % p;
      a /= p;
    }
    return d;
  }
  unsigned mul(unsigned a, unsigned b) const {
    const auto da = digits(a), db = digits(b);
    std::vector<unsigned> out(k, 0);
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; i + j < k; ++j) out[i + j] = (out[i + j] + da[i] * db[j]) % p;
    unsigned idx = 0;
    for (unsigned i = k; i-- > 0;) idx = idx * p + out[i];
    return idx;
  }
};

/// Role condition straight from the definitions: every vertex with both in- and
/// out-arcs must have u -> v for each u -> t -> v.
inline bool valid_orientation(std::size_t n, const ArcList& arcs) {
  Matrix a = empty_matrix(n);
  for (auto [u, v] : arcs) a[u][v] = true;
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (a[u][t] && a[t][v] && (u == v || !a[u][v])) return false;
  return true;
}

/// Exhaustive search over all orientations.
inline bool has_valid_orientation(const Matrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v)
      if (m[u][v]) edges.emplace_back(u, v);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    ArcList arcs;
    for (std::size_t e = 0; e < edges.size(); ++e)
      arcs.push_back((mask >> e) & 1 ? std::make_pair(edges[e].second, edges[e].first) : edges[e]);
    if (valid_orientation(m.size(), arcs)) return true;
  }
  return false;
}

/// Reference graph6 encoder for n <= 62.
inline std::string graph6(const Matrix& m) {
  std::string out(1, static_cast<char>(63 + m.size()));
  std::vector<int> bits;
  for (std::size_t v = 1; v < m.size(); ++v)
    for (std::size_t u = 0; u < v; ++u) bits.push_back(m[u][v] ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int x = 0;
    for (int j = 0; j < 6; ++j) x = (x << 1) | bits[i + j];
    out += static_cast<char>(63 + x);
  }
  return out;
}

/// Floyd-Warshall; returns -1 when disconnected.
inline long diameter(const Matrix& m) {
  const std::size_t n = m.size();
  const long inf = 1 << 20;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) d[u][v] = u == v ? 0 : (m[u][v] ? 1 : inf);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  long best = 0;
  for (auto& row : d)
    for (long x : row) best = std::max(best, x);
  return best >= inf ? -1 : best;
}

/// Tries every 2-colouring; true iff some split makes m complete bipartite with both sides nonempty.
inline bool complete_bipartite(const Matrix& m) {
  const std::size_t n = m.size();
  if (n < 2) return false;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v)
        ok = m[u][v] == (((mask >> u) & 1) != ((mask >> v) & 1));
    if (ok) return true;
  }
  return false;
}

inline Matrix random_matrix(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Matrix m = empty_matrix(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) m[u][v] = m[v][u] = coin(rng);
  return m;
}

/// Polynomial product over Z_n, coefficients low first, untrimmed.
inline std::vector<unsigned> poly_mul_mod(const std::vector<unsigned>& a, const std::vector<unsigned>& b, unsigned n) {
  std::vector<unsigned> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % n;
  return out;
}

inline bool all_zero(const std::vector<unsigned>& v) {
  return std::all_of(v.begin(), v.end(), [](unsigned x) { return x == 0; });
}

/// Coefficient vectors of length d+1 over Z_n, in base-n order of their codes.
inline std::vector<std::vector<unsigned>> all_polys(unsigned n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i <= d; ++i) total *= n;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<unsigned> c(d + 1);
    std::uint64_t x = code;
    for (auto& ci : c) {
      ci = static_cast<unsigned>(x % n);
      x /= n;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace oracle
