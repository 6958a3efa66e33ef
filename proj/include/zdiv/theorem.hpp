#pragma once

// Machine-checked verification of the divisor-graph results over a ring suite.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zdiv/divisor.hpp"
#include "zdiv/graph.hpp"
#include "zdiv/zero_divisor_graph.hpp"

namespace zdiv {

enum class Verdict { Divisor, NotDivisor, Holds, Violated };
enum class Status { Pass, Fail, Inapplicable };

std::string to_string(Verdict v);
std::string to_string(Status s);
/// Accepts "divisor", "not-divisor", "holds", "violated". Throws Error otherwise.
Verdict parse_verdict(std::string_view text);

/// Every key understood by verify_theorem, in report order.
const std::vector<std::string>& theorem_keys();
bool is_theorem_key(std::string_view key);

struct TheoremCheck {
  std::string key;
  std::string ring;  // ring spec text; empty for lemma-fig1
  unsigned degree = 0;  // poly-corollary and poly-lift only
  std::optional<Verdict> expected;
};

struct HarnessOptions {
  std::size_t cap_vertices = 64;  // recognize search limit
  std::size_t cap_edges = 20;     // brute-force limit
  std::uint64_t fragment_cap = 4096;
  std::size_t embedding_budget = 50000000;  // pattern search nodes; 0 means unbounded
};

struct Hypothesis {
  std::string name;
  std::string observed;
  bool ok = true;
  bool required = true;  // informational facts (e.g. which side of an iff) are not required
};

struct Evidence {
  std::string graph_name;  // which graph the evidence refers to
  std::vector<std::string> vertices;
  std::size_t edge_count = 0;
  std::string orientation_source;
  std::optional<Orientation> orientation;
  std::optional<DivisorLabeling> labeling;
  std::optional<bool> labeling_reproduces_graph;
  std::optional<Embedding> embedding;
  std::vector<std::string> pattern_vertices;
  std::optional<std::string> refutation;
  std::optional<RoleCensus> role_census;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

struct Report {
  std::string check;
  std::string ring;
  std::optional<unsigned> degree;
  std::vector<Hypothesis> hypotheses;
  std::optional<Verdict> verdict;
  std::optional<Verdict> expected;
  Status status = Status::Fail;
  std::string reason;
  Evidence evidence;
  std::vector<std::string> paper_conformance;
  bool cap_exceeded = false;
  double wall_time_ms = 0;

  nlohmann::ordered_json to_json(bool with_time = true) const;
};

/// Checks hypotheses, derives a verdict with evidence, re-validates the evidence.
/// Never throws for ring-level problems; they end up in the report.
Report verify_theorem(const TheoremCheck& check, const HarnessOptions& options = {});

/// Reports sorted by (key, ring, degree).
std::vector<Report> verify_all(const std::vector<TheoremCheck>& checks, const HarnessOptions& options = {});

/// Suite file: {"checks": [{"key": ..., "rings": [...], "degrees": [...], "expected": {...}}]}.
/// "expected" maps ring spec to verdict; "degrees" expands poly keys. Throws Error.
std::vector<TheoremCheck> parse_suite(std::string_view json_text);
std::vector<TheoremCheck> load_suite(const std::string& path);

}  // namespace zdiv
