#include "zdiv/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace zdiv {

namespace {

constexpr std::size_t kGraph6Limit = 258047;

std::string quote(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

bool is_label_char(char c) { return !std::isspace(static_cast<unsigned char>(c)) && c != '#'; }

}  // namespace

std::string to_edge_list(const Graph& g) {
  const auto edges = g.edges();
  // first-appearance order if we only write edges and trailing isolated vertices
  std::vector<Vertex> appearance;
  std::vector<bool> seen(g.order(), false);
  auto note = [&](Vertex v) {
    if (!seen[v]) {
      seen[v] = true;
      appearance.push_back(v);
    }
  };
  for (const auto& [u, v] : edges) {
    note(u);
    note(v);
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) note(v);
  bool in_order = true;
  for (std::size_t i = 0; i < appearance.size(); ++i) in_order = in_order && appearance[i] == i;

  std::string out;
  if (!in_order) {
    for (Vertex v = 0; v < g.order(); ++v) out += g.label(v) + '\n';
  }
  for (const auto& [u, v] : edges) out += g.label(u) + ' ' + g.label(v) + '\n';
  if (in_order) {
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.degree(v) == 0) out += g.label(v) + '\n';
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> edge_offsets;
  std::unordered_map<std::string, std::size_t> index;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = index.emplace(label, labels.size());
    if (fresh) labels.push_back(label);
    return it->second;
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::pair<std::string, std::size_t>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && !is_label_char(line[i])) ++i;
      std::size_t start = i;
      while (i < line.size() && is_label_char(line[i])) ++i;
      if (i > start) tokens.emplace_back(std::string(line.substr(start, i - start)), pos + start);
    }
    if (tokens.size() > 2) throw ParseError("edge-list line has more than two vertices", tokens[2].second);
    if (tokens.size() == 1) intern(tokens[0].first);
    if (tokens.size() == 2) {
      if (tokens[0].first == tokens[1].first) throw ParseError("loop edge", tokens[0].second);
      auto u = intern(tokens[0].first);
      auto v = intern(tokens[1].first);
      edges.emplace_back(u, v);
    }
    pos = end + 1;
  }
  Graph g(std::move(labels));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6Limit) throw GraphError("graph6 encoder supports at most 258047 vertices");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    out += static_cast<char>(63 + ((n >> 12) & 0x3f));
    out += static_cast<char>(63 + ((n >> 6) & 0x3f));
    out += static_cast<char>(63 + (n & 0x3f));
  }
  int acc = 0;
  int nbits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(pos, kHeader.size()) == kHeader) pos += kHeader.size();
  auto next_value = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6 data truncated", pos);
    char c = text[pos];
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", pos);
    ++pos;
    return c - 63;
  };
  std::size_t n = 0;
  if (pos < text.size() && text[pos] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~') throw ParseError("graph6 8-byte size form not supported", pos);
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::size_t>(next_value());
  } else {
    n = static_cast<std::size_t>(next_value());
  }
  Graph g = Graph::with_order(n);
  int acc = 0;
  int remaining = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (remaining == 0) {
        acc = next_value();
        remaining = 6;
      }
      --remaining;
      if ((acc >> remaining) & 1) g.add_edge(i, j);
    }
  if (remaining > 0 && (acc & ((1 << remaining) - 1)) != 0)
    throw ParseError("graph6 padding bits must be zero", pos - 1);
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after graph6 data", pos);
  return g;
}

std::string to_dot(const Graph& g) {
  std::string out = "graph {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + quote(g.label(v)) + ";\n";
  for (const auto& [u, v] : g.edges()) out += "  " + quote(g.label(u)) + " -- " + quote(g.label(v)) + ";\n";
  return out + "}\n";
}

std::string to_dot(const Graph& g, std::span<const std::pair<Vertex, Vertex>> arcs) {
  std::string out = "digraph {\n";
  for (Vertex v = 0; v < g.order(); ++v) out += "  " + quote(g.label(v)) + ";\n";
  for (const auto& [u, v] : arcs) out += "  " + quote(g.label(u)) + " -> " + quote(g.label(v)) + ";\n";
  return out + "}\n";
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const bool graph6 = path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0;
  return graph6 ? parse_graph6(buffer.str()) : parse_edge_list(buffer.str());
}

}  // namespace zdiv
