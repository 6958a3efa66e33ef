// zdiv: zero-divisor graphs and divisor-graph recognition from the command line.
//
// Exit codes: 0 divisor graph / check passed, 1 not a divisor graph / check failed,
// 2 usage, parse or I/O error, 3 cap exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zdiv/divisor.hpp"
#include "zdiv/graph_io.hpp"
#include "zdiv/poly.hpp"
#include "zdiv/ring_spec.hpp"
#include "zdiv/theorem.hpp"
#include "zdiv/zero_divisor_graph.hpp"

#ifndef ZDIV_DEFAULT_SUITE
#define ZDIV_DEFAULT_SUITE "data/suite.json"
#endif

namespace {

using json = nlohmann::ordered_json;
using namespace zdiv;

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kCap = 3 };

struct Options {
  std::string ring;
  std::string graph;
  bool complement = false;
  unsigned degree = 1;
  bool json_out = false;
  bool dot = false;
  bool graph6 = false;
  std::string emit;
  std::size_t cap_vertices = 64;
  std::size_t cap_edges = 20;
  std::uint64_t seed = 1;
  std::uint64_t samples = 0;
  std::string fig3;
  bool fig4 = false;
  std::string decompose;
  std::string mccoy;
  bool corollary = false;
  std::string suite;
  std::vector<std::string> keys;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

json arcs_json(const Graph& g, const Orientation& d) {
  json arcs = json::array();
  for (const auto& a : d.arcs) arcs.push_back(json::array({g.label(a.from), g.label(a.to)}));
  return arcs;
}

json labeling_json(const Graph& g, const DivisorLabeling& f) {
  json out = json::object();
  for (Vertex v = 0; v < g.order(); ++v) out[g.label(v)] = f.label[v].str();
  return out;
}

std::string labeling_text(const Graph& g, const DivisorLabeling& f) {
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v) out += g.label(v) + " " + f.label[v].str() + "\n";
  return out;
}

std::string emit_graph(const Graph& g, const Options& o) {
  if (o.dot) return to_dot(g);
  if (o.graph6) return to_graph6(g) + "\n";
  return to_edge_list(g);
}

Graph input_graph(const Options& o) {
  if (!o.ring.empty() == !o.graph.empty()) throw UsageError("give exactly one of --ring and --graph");
  if (!o.graph.empty()) return read_graph_file(o.graph);
  const FiniteRing r = parse_ring(o.ring);
  return o.complement ? gamma_complement(r).graph : gamma(r).graph;
}

FiniteRing input_ring(const Options& o) {
  if (o.ring.empty()) throw UsageError("--ring is required");
  return parse_ring(o.ring);
}

int cmd_ring(const Options& o) {
  const FiniteRing r = input_ring(o);
  const LocalStructure ls = local_structure(r);
  std::vector<std::string> units, zds;
  for (Index u : r.units()) units.push_back(r.render(u));
  for (Index z : r.nonzero_zero_divisors()) zds.push_back(r.render(z));
  const std::size_t ass = associated_primes(r).size();
  const std::string diam = gamma_diameter(r).to_string();
  if (o.json_out) {
    json out;
    out["ring"] = r.name();
    out["order"] = r.order();
    out["units"] = units;
    out["zero_divisors"] = zds;
    out["local"] = ls.is_local();
    out["principal"] = ls.is_principal();
    if (ls.is_principal()) {
      out["generator"] = r.render(ls.generator);
      out["nilpotency"] = ls.nilpotency;
    }
    out["associated_primes"] = ass;
    out["gamma_diameter"] = diam;
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
    return s;
  };
  std::cout << "ring " << r.name() << "\norder " << r.order() << "\nunits " << join(units)
            << "\nzero divisors " << join(zds) << "\nlocal " << (ls.is_local() ? "yes" : "no");
  if (ls.is_principal())
    std::cout << ", principal, generator " << r.render(ls.generator) << ", nilpotency " << ls.nilpotency;
  std::cout << "\nassociated primes " << ass << "\ndiam(Gamma) " << diam << "\n";
  return kOk;
}

int cmd_zdg(const Options& o) {
  const FiniteRing r = input_ring(o);
  std::string what = o.emit.empty() ? (o.complement ? "complement" : "gamma") : o.emit;
  if (what != "gamma" && what != "complement") throw UsageError("--emit must be gamma or complement");
  const Graph g = what == "gamma" ? gamma(r).graph : gamma_complement(r).graph;
  if (o.json_out) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({g.label(u), g.label(v)}));
    std::cout << json{{"ring", r.name()}, {"graph", what}, {"vertices", g.labels()}, {"edges", edges}}.dump(2)
              << "\n";
  } else {
    std::cout << emit_graph(g, o);
  }
  return kOk;
}

int cmd_recognize(const Options& o) {
  const Graph g = input_graph(o);
  RecognizeOptions ro;
  ro.max_vertices = o.cap_vertices;
  const Recognition rec = recognize_detailed(g, ro);
  json out;
  out["vertices"] = g.order();
  out["edges"] = g.size();
  if (rec.orientation) {
    const DivisorLabeling f = synthesize_labeling(g, *rec.orientation);
    const bool valid = validate_labeling(g, f).valid;
    if (o.json_out) {
      out["verdict"] = "divisor";
      out["orientation"] = arcs_json(g, *rec.orientation);
      out["labeling"] = labeling_json(g, f);
      out["labeling_valid"] = valid;
      std::cout << out.dump(2) << "\n";
    } else if (o.dot) {
      const auto pairs = rec.orientation->pairs();
      std::cout << to_dot(g, pairs);
    } else {
      std::cout << "divisor graph\n" << labeling_text(g, f);
    }
    return valid ? kOk : kNo;
  }
  std::string refutation;
  const Graph pattern = figure1_pattern();
  if (rec.forbidden_pattern) {
    refutation = "forbidden pattern";
  } else if (g.size() <= o.cap_edges) {
    refutation = brute_force_recognize(g, o.cap_edges).orientation ? "inconsistent" : "exhaustive-2^" + std::to_string(g.size());
  } else {
    refutation = "backtracking search exhausted after " + std::to_string(rec.search_nodes) + " nodes";
  }
  if (o.json_out) {
    out["verdict"] = "not-divisor";
    out["refutation"] = refutation;
    if (rec.forbidden_pattern) {
      json emb = json::object();
      for (Vertex i = 0; i < pattern.order(); ++i) emb[pattern.label(i)] = g.label(rec.forbidden_pattern->image[i]);
      out["embedding"] = std::move(emb);
    }
    std::cout << out.dump(2) << "\n";
  } else if (o.dot) {
    std::cout << to_dot(g);
  } else {
    std::cout << "not a divisor graph (" << refutation << ")\n";
    if (rec.forbidden_pattern)
      for (Vertex i = 0; i < pattern.order(); ++i)
        std::cout << pattern.label(i) << " " << g.label(rec.forbidden_pattern->image[i]) << "\n";
  }
  return kNo;
}

int cmd_label(const Options& o) {
  if (!o.fig3.empty() || o.fig4) {
    const FiniteRing r = input_ring(o);
    const Graph g = gamma_complement(r).graph;
    DivisorLabeling f;
    if (o.fig4) {
      f = fig4_labeling(r);
    } else {
      unsigned long long p = 0, q = 0;
      char comma = 0;
      std::istringstream in(o.fig3);
      if (!(in >> p >> comma >> q) || comma != ',' || !in.eof()) throw UsageError("--fig3 expects P,Q");
      f = fig3_labeling(r, p, q);
    }
    const LabelingCheck check = validate_labeling(g, f);
    if (o.json_out) {
      json out{{"ring", r.name()}, {"labeling", labeling_json(g, f)}, {"valid", check.valid}};
      if (check.violation)
        out["violation"] = {{"reason", to_string(check.violation->reason)},
                            {"pair", json::array({g.label(check.violation->u), g.label(check.violation->v)})}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << labeling_text(g, f) << (check.valid ? "valid" : "invalid");
      if (check.violation)
        std::cout << " (" << to_string(check.violation->reason) << " at " << g.label(check.violation->u) << ", "
                  << g.label(check.violation->v) << ")";
      std::cout << "\n";
    }
    return check.valid ? kOk : kNo;
  }
  const Graph g = input_graph(o);
  RecognizeOptions ro;
  ro.max_vertices = o.cap_vertices;
  const auto d = recognize(g, ro);
  if (!d) {
    if (o.json_out) std::cout << json{{"verdict", "not-divisor"}}.dump(2) << "\n";
    else std::cout << "not a divisor graph\n";
    return kNo;
  }
  const DivisorLabeling f = synthesize_labeling(g, *d);
  const bool valid = validate_labeling(g, f).valid;
  if (o.json_out) std::cout << json{{"labeling", labeling_json(g, f)}, {"valid", valid}}.dump(2) << "\n";
  else std::cout << labeling_text(g, f);
  return valid ? kOk : kNo;
}

int cmd_verify(const Options& o) {
  if (o.keys.empty()) throw UsageError("verify needs theorem keys or 'all'");
  for (const auto& k : o.keys)
    if (k != "all" && !is_theorem_key(k)) throw UsageError("unknown theorem key '" + k + "'");
  const bool all = std::find(o.keys.begin(), o.keys.end(), "all") != o.keys.end();

  std::vector<TheoremCheck> checks;
  if (!o.ring.empty()) {
    if (all) throw UsageError("--ring needs explicit theorem keys");
    for (const auto& k : o.keys) checks.push_back({k, o.ring, o.degree, std::nullopt});
  } else {
    std::string path = o.suite;
    if (path.empty()) {
      const char* env = std::getenv("ZDIV_SUITE");
      path = env ? env : ZDIV_DEFAULT_SUITE;
    }
    for (auto& c : load_suite(path))
      if (all || std::find(o.keys.begin(), o.keys.end(), c.key) != o.keys.end()) checks.push_back(std::move(c));
  }

  HarnessOptions ho;
  ho.cap_vertices = o.cap_vertices;
  ho.cap_edges = o.cap_edges;
  const auto reports = verify_all(checks, ho);

  std::size_t pass = 0, fail = 0, inapplicable = 0;
  bool cap = false;
  for (const auto& r : reports) {
    cap = cap || r.cap_exceeded;
    if (r.status == Status::Pass) ++pass;
    else if (r.status == Status::Fail) ++fail;
    else ++inapplicable;
  }
  if (o.json_out) {
    json out;
    out["reports"] = json::array();
    for (const auto& r : reports) out["reports"].push_back(r.to_json());
    out["summary"] = {{"checks", reports.size()}, {"pass", pass}, {"fail", fail}, {"inapplicable", inapplicable}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << r.check << " " << (r.ring.empty() ? "-" : r.ring);
      if (r.degree) std::cout << " d=" << *r.degree;
      if (r.status == Status::Inapplicable) {
        std::cout << ": " << r.reason << "\n";
        continue;
      }
      std::cout << ": " << to_string(r.status);
      if (r.verdict) std::cout << " (" << to_string(*r.verdict) << ")";
      if (!r.reason.empty()) std::cout << " " << r.reason;
      std::cout << "\n";
    }
    std::cout << "\nchecks " << reports.size() << "  pass " << pass << "  fail " << fail << "  inapplicable "
              << inapplicable << "\n";
  }
  if (cap) return kCap;
  return fail == 0 ? kOk : kNo;
}

int cmd_poly(const Options& o) {
  const FiniteRing r = input_ring(o);
  if (!o.decompose.empty()) {
    const Poly f = parse_poly(r, o.decompose);
    const ContentDecomposition cd = content_decompose(f);
    if (o.json_out)
      std::cout << json{{"f", render(f)}, {"content", r.render(cd.content)}, {"cofactor", render(cd.cofactor)}}.dump(2)
                << "\n";
    else
      std::cout << "c_f = " << r.render(cd.content) << ", f1 = " << render(cd.cofactor) << "\n";
    return kOk;
  }
  if (!o.mccoy.empty()) {
    const Poly f = parse_poly(r, o.mccoy);
    const auto c = mccoy_witness(f);
    if (o.json_out)
      std::cout << json{{"f", render(f)}, {"witness", c ? json(r.render(*c)) : json(nullptr)}}.dump(2) << "\n";
    else
      std::cout << (c ? "c = " + r.render(*c) : std::string("regular")) << "\n";
    return kOk;
  }
  if (o.corollary) {
    CorollaryBudget budget;
    if (o.samples > 0) budget = {false, o.samples, o.seed};
    const CorollaryResult res = corollary_check(r, o.degree, budget);
    if (o.json_out) {
      json out{{"ring", r.name()},
               {"degree", o.degree},
               {"zero_divisors", res.zero_divisors},
               {"pairs_checked", res.pairs_checked},
               {"diagonal_checked", res.diagonal_checked},
               {"verdict", res.holds ? "holds" : "violated"}};
      if (res.counterexample)
        out["counterexample"] = json::array({render(res.counterexample->first), render(res.counterexample->second)});
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << (res.holds ? "holds" : "violated") << " over " << res.pairs_checked << " pairs and "
                << res.diagonal_checked << " squares of " << res.zero_divisors << " zero divisors\n";
      if (res.counterexample)
        std::cout << "counterexample " << render(res.counterexample->first) << ", "
                  << render(res.counterexample->second) << "\n";
    }
    return res.holds ? kOk : kNo;
  }
  if (!o.emit.empty() && o.emit != "fragment") throw UsageError("poly --emit supports only 'fragment'");
  const Graph g = zero_divisor_fragment_graph(r, o.degree);
  if (o.json_out) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({g.label(u), g.label(v)}));
    std::cout << json{{"ring", r.name()}, {"degree", o.degree}, {"vertices", g.labels()}, {"edges", edges}}.dump(2)
              << "\n";
  } else {
    std::cout << emit_graph(g, o);
  }
  return kOk;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--ring", o.ring, "ring spec, e.g. Z8, Z2xZ4, GF(2)[x]/(x^2)");
  app->add_flag("--json", o.json_out, "emit one JSON document");
  app->add_option("--cap-vertices", o.cap_vertices, "vertex cap for recognition")->envname("ZDIV_CAP_VERTICES");
  app->add_option("--cap-edges", o.cap_edges, "edge cap for brute force")->envname("ZDIV_CAP_EDGES");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs and divisor-graph recognition"};
  app.require_subcommand(1);
  Options o;

  auto* ring = app.add_subcommand("ring", "describe a ring");
  add_common(ring, o);

  auto* zdg = app.add_subcommand("zdg", "emit the zero-divisor graph or its complement");
  add_common(zdg, o);
  zdg->add_flag("--complement", o.complement, "use the complement");
  zdg->add_option("--emit", o.emit, "gamma or complement");
  auto* zdg_dot = zdg->add_flag("--dot", o.dot, "DOT output");
  zdg->add_flag("--graph6", o.graph6, "graph6 output")->excludes(zdg_dot);

  auto* rec = app.add_subcommand("recognize", "decide whether a graph is a divisor graph");
  add_common(rec, o);
  rec->add_option("--graph", o.graph, "edge list or .g6 file");
  rec->add_flag("--complement", o.complement, "use the complement of Gamma(R)");
  rec->add_flag("--dot", o.dot, "DOT output");

  auto* label = app.add_subcommand("label", "divisor labeling of a graph");
  add_common(label, o);
  label->add_option("--graph", o.graph, "edge list or .g6 file");
  label->add_flag("--complement", o.complement, "use the complement of Gamma(R)");
  auto* fig3 = label->add_option("--fig3", o.fig3, "explicit labeling with primes P,Q (R1 field, |Z(R2)| = 2)");
  label->add_flag("--fig4", o.fig4, "explicit labeling for R1 field, diam(Gamma(R2)) = 1")->excludes(fig3);

  auto* verify = app.add_subcommand("verify", "check theorems over the ring suite");
  add_common(verify, o);
  verify->add_option("keys", o.keys, "theorem keys or 'all'");
  verify->add_option("--degree", o.degree, "degree bound for poly keys");
  verify->add_option("--suite", o.suite, "suite file")->envname("ZDIV_SUITE");

  auto* poly = app.add_subcommand("poly", "polynomial fragments over a ring");
  add_common(poly, o);
  poly->add_option("--degree", o.degree, "degree bound");
  poly->add_option("--emit", o.emit, "fragment");
  auto* poly_dot = poly->add_flag("--dot", o.dot, "DOT output");
  poly->add_flag("--graph6", o.graph6, "graph6 output")->excludes(poly_dot);
  poly->add_option("--decompose", o.decompose, "content decomposition of a polynomial");
  poly->add_option("--mccoy", o.mccoy, "McCoy witness of a polynomial");
  poly->add_flag("--corollary", o.corollary, "check fg = 0 iff c_f c_g = 0 over the fragment");
  poly->add_option("--samples", o.samples, "sample this many pairs instead of all");
  poly->add_option("--seed", o.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ring) return cmd_ring(o);
    if (*zdg) return cmd_zdg(o);
    if (*rec) return cmd_recognize(o);
    if (*label) return cmd_label(o);
    if (*verify) return cmd_verify(o);
    return cmd_poly(o);
  } catch (const CapExceeded& e) {
    std::cerr << "zdiv: " << e.what() << "\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "zdiv: " << e.what() << "\n";
    return kUsage;
  }
}
