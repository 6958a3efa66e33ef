// Acceptance checks, one line per criterion. Usage: acceptance <path-to-zdiv-cli>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "oracle.hpp"
#include "zdiv/divisor.hpp"
#include "zdiv/poly.hpp"
#include "zdiv/ring_spec.hpp"
#include "zdiv/theorem.hpp"
#include "zdiv/zero_divisor_graph.hpp"

using namespace zdiv;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Graph from_matrix(const oracle::Matrix& m) {
  Graph g = Graph::with_order(m.size());
  for (Vertex u = 0; u < m.size(); ++u)
    for (Vertex v = u + 1; v < m.size(); ++v)
      if (m[u][v]) g.add_edge(u, v);
  return g;
}

oracle::Matrix to_matrix(const Graph& g) {
  oracle::Matrix m = oracle::empty_matrix(g.order());
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

Graph cycle(std::size_t n) {
  Graph g = Graph::with_order(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

/// Synthesized labeling validates and its divisor graph has the same adjacency by index.
bool labeling_sound(const Graph& g, const Orientation& d) {
  const DivisorLabeling f = synthesize_labeling(g, d);
  if (!validate_labeling(g, f).valid) return false;
  const Graph h = divisor_graph_of_set(f.label);
  return to_matrix(h) == to_matrix(g);
}

Report check(const std::string& key, const std::string& ring, Verdict expected, unsigned degree = 0) {
  return verify_theorem(TheoremCheck{key, ring, degree, expected});
}

std::string describe(const Report& r) { return r.check + " " + r.ring + ": " + to_string(r.status) + " " + r.reason; }

Outcome c1() {
  Outcome o;
  const Graph g = figure1_pattern();
  o.require(g.order() == 7 && g.size() == 13, "pattern shape");
  const BruteForceResult b = brute_force_recognize(g);
  o.require(b.scanned == 8192, "scanned " + std::to_string(b.scanned));
  o.require(!b.orientation, "brute force found an orientation");
  RecognizeOptions opts;
  opts.forbidden_pattern_first = false;
  o.require(!recognize(g, opts), "recognize accepted the pattern");
  o.require(!oracle::has_valid_orientation(to_matrix(g)), "oracle accepted the pattern");
  o.detail = o.ok ? "8192 orientations scanned, none valid" : o.detail;
  return o;
}

const std::vector<std::string> kLocal = {"Z4",  "Z8",  "Z9",  "Z16", "Z25", "Z27", "GF(2)[x]/(x^2)",
                                         "GF(3)[x]/(x^2)", "GF(2)[x]/(x^3)"};

Outcome c2() {
  Outcome o;
  for (const auto& text : kLocal) {
    const FiniteRing r = parse_ring(text);
    const Graph g = gamma_complement(r).graph;
    const auto d = recognize(g);
    o.require(d.has_value(), text + " not recognized");
    if (!d) continue;
    const Orientation local = local_orientation(r);
    o.require(validate_orientation(g, local), text + " local orientation invalid");
    o.require(labeling_sound(g, local) && labeling_sound(g, *d), text + " labeling unsound");
    const Report rep = check("local", text, Verdict::Divisor);
    o.require(rep.status == Status::Pass, describe(rep));
  }
  if (o.ok) o.detail = std::to_string(kLocal.size()) + " local rings";
  return o;
}

void product_case(Outcome& o, const std::string& key, const std::string& ring, Verdict expected) {
  const Report rep = check(key, ring, expected);
  o.require(rep.status == Status::Pass, describe(rep));
  const Graph g = gamma_complement(parse_ring(ring)).graph;
  if (expected == Verdict::NotDivisor) {
    o.require(rep.evidence.embedding.has_value(), ring + " missing embedding");
    if (rep.evidence.embedding)
      o.require(is_induced_embedding(figure1_pattern(), g, *rep.evidence.embedding), ring + " bad embedding");
    o.require(!recognize(g, RecognizeOptions{64, false}), ring + " search accepted");
  } else {
    const auto d = recognize(g);
    o.require(d && validate_orientation(g, *d) && labeling_sound(g, *d), ring + " not a sound divisor graph");
  }
}

Outcome c3() {
  Outcome o;
  for (const char* r : {"Z2xZ4", "Z3xZ4", "Z2xGF(2)[x]/(x^2)"}) product_case(o, "prod-diam00", r, Verdict::Divisor);
  for (const char* r : {"Z4xZ4", "Z4xGF(2)[x]/(x^2)", "GF(2)[x]/(x^2)xGF(2)[x]/(x^2)"})
    product_case(o, "prod-diam00", r, Verdict::NotDivisor);
  if (o.ok) o.detail = "3 divisor, 3 refuted by embedding";
  return o;
}

Outcome c4() {
  Outcome o;
  for (const char* r : {"Z2xZ9", "Z3xZ9", "Z2xGF(3)[x]/(x^2)"}) product_case(o, "prod-diam01", r, Verdict::Divisor);
  product_case(o, "prod-diam01", "Z4xZ9", Verdict::NotDivisor);
  if (o.ok) o.detail = "3 divisor, Z4xZ9 refuted by embedding";
  return o;
}

Outcome c5() {
  Outcome o;
  product_case(o, "prod-diam11", "Z9xZ9", Verdict::NotDivisor);
  product_case(o, "prod-diam12or22", "Z9xZ8", Verdict::NotDivisor);
  product_case(o, "prod-diam12or22", "Z8xZ8", Verdict::NotDivisor);
  if (o.ok) o.detail = "Z9xZ9, Z9xZ8, Z8xZ8 refuted by embedding";
  return o;
}

Outcome c6() {
  Outcome o;
  for (const char* text : {"Z2xZ8", "Z3xZ8", "Z2xZ27"}) {
    const Report rep = check("prod-diam02", text, Verdict::Divisor);
    o.require(rep.status == Status::Pass, describe(rep));
    const FiniteRing r = parse_ring(text);
    const Graph g = gamma_complement(r).graph;
    const Orientation d = thm26_orientation(r);
    o.require(validate_orientation(g, d), std::string(text) + " orientation invalid");
    const RoleCensus c = role_census(g, d);
    const Index vn = r.combine(std::vector<Index>{0, r.factors()[1].units().back()});
    const Index um = r.combine(std::vector<Index>{r.factors()[0].units().back(), 0});
    o.require(c.has(VertexRole::Receiver, g.at(r.render(vn))), std::string(text) + " (0,v_n) not a receiver");
    o.require(c.has(VertexRole::Receiver, g.at(r.render(um))), std::string(text) + " (u_m,0) not a receiver");
  }
  if (o.ok) o.detail = "orientations valid, named receivers present";
  return o;
}

Outcome c7() {
  Outcome o;
  const std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> cases = {
      {"Z6", {1, 2}}, {"Z10", {1, 4}}, {"Z15", {2, 4}}};
  for (const auto& [text, parts] : cases) {
    const FiniteRing r = parse_ring(text);
    const auto ass = associated_primes(r);
    o.require(ass.size() == 2, text + " |Ass| != 2");
    if (ass.size() == 2) o.require(intersect(r, ass[0], ass[1]).is_zero(), text + " primes meet");
    const Graph g = gamma(r).graph;
    const oracle::Matrix m = to_matrix(g);
    o.require(oracle::complete_bipartite(m), text + " oracle: not complete bipartite");
    o.require(is_complete_bipartite(g).has_value(), text + " library: not complete bipartite");
    const std::size_t a = g.order() - g.degree(0), b = g.degree(0);
    o.require(std::minmax(a, b) == std::minmax(parts.first, parts.second), text + " wrong part sizes");
    o.require(oracle::edge_count(m) == parts.first * parts.second, text + " wrong edge count");
    const Graph gc = gamma_complement(r).graph;
    const auto dg = recognize(g), dc = recognize(gc);
    o.require(dg && labeling_sound(g, *dg), text + " gamma not divisor");
    o.require(dc && labeling_sound(gc, *dc), text + " complement not divisor");
    const auto comps = connected_components(gc);
    bool cliques = comps.size() == 2;
    for (const auto& c : comps) cliques = cliques && is_clique(gc, c);
    o.require(cliques, text + " complement is not two cliques");
    for (const char* key : {"compl-complete-bipartite", "ass2-gamma", "ass2-complement"}) {
      const Report rep = check(key, text, Verdict::Divisor);
      o.require(rep.status == Status::Pass, describe(rep));
    }
  }
  if (o.ok) o.detail = "K_{1,2}, K_{1,4}, K_{2,4}; both graphs divisor; two cliques";
  return o;
}

Outcome c8() {
  Outcome o;
  int agree = 0;
  for (unsigned mask = 0; mask < 1024; ++mask) {
    oracle::Matrix m = oracle::empty_matrix(5);
    unsigned bit = 0;
    for (std::size_t u = 0; u < 5; ++u)
      for (std::size_t v = u + 1; v < 5; ++v, ++bit) m[u][v] = m[v][u] = (mask >> bit) & 1;
    const Graph g = from_matrix(m);
    const bool r = recognize(g).has_value();
    const bool b = brute_force_recognize(g).orientation.has_value();
    o.require(r == b, "5-vertex mask " + std::to_string(mask));
    agree += r == b;
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    oracle::Matrix m;
    do {
      m = oracle::random_matrix(8, 0.45, rng);
    } while (oracle::edge_count(m) > 20);
    const Graph g = from_matrix(m);
    const bool r = recognize(g).has_value();
    o.require(r == brute_force_recognize(g).orientation.has_value(), "8-vertex sample " + std::to_string(i));
    agree += 1;
  }
  o.require(!recognize(cycle(5)) && !recognize(cycle(7)), "odd cycle accepted");
  std::mt19937_64 brng(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + i % 11;
    std::vector<int> side(n);
    for (auto& s : side) s = static_cast<int>(brng() & 1);
    oracle::Matrix m = oracle::random_matrix(n, 0.6, brng);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (side[u] == side[v]) m[u][v] = false;
    o.require(recognize(from_matrix(m)).has_value(), "bipartite graph rejected");
  }
  if (o.ok) o.detail = "1024 + 200 graphs agree; C5, C7 rejected; 300 bipartite accepted";
  return o;
}

Outcome c9(std::string& fig3_note) {
  Outcome o;
  std::size_t checked = 0;
  const auto consider = [&](const Graph& g, const std::string& name) {
    if (g.order() > RecognizeOptions{}.max_vertices) return;
    const auto d = recognize(g);
    if (!d) return;
    o.require(labeling_sound(g, *d), name + " labeling unsound");
    ++checked;
  };
  for (const auto& rep : verify_all(load_suite(ZDIV_TEST_SUITE))) {
    if (rep.verdict != Verdict::Divisor) continue;
    const std::string name = rep.check + " " + rep.ring;
    o.require(rep.evidence.labeling_reproduces_graph == true, name + " report labeling does not reproduce graph");
    const FiniteRing r = parse_ring(rep.ring);
    Graph g;
    if (rep.check == "poly-lift")
      g = zero_divisor_fragment(r, rep.degree.value_or(0)).graph;
    else
      g = rep.evidence.graph_name == "gamma" ? gamma(r).graph : gamma_complement(r).graph;
    o.require(rep.evidence.orientation && labeling_sound(g, *rep.evidence.orientation),
              name + " report orientation unsound");
    ++checked;
    consider(g, name);
  }
  for (unsigned mask = 0; mask < 1024; ++mask) {
    oracle::Matrix m = oracle::empty_matrix(5);
    unsigned bit = 0;
    for (std::size_t u = 0; u < 5; ++u)
      for (std::size_t v = u + 1; v < 5; ++v, ++bit) m[u][v] = m[v][u] = (mask >> bit) & 1;
    consider(from_matrix(m), "5-vertex mask " + std::to_string(mask));
  }

  const FiniteRing z24 = parse_ring("Z2xZ4");
  const Graph g24 = gamma_complement(z24).graph;
  const DivisorLabeling f24 = fig3_labeling(z24, 3, 5);
  o.require(validate_labeling(g24, f24).valid, "fig3 Z2xZ4 invalid");
  o.require(to_matrix(divisor_graph_of_set(f24.label)) == to_matrix(g24), "fig3 Z2xZ4 graph mismatch");

  const FiniteRing z34 = parse_ring("Z3xZ4");
  const Graph g34 = gamma_complement(z34).graph;
  const LabelingCheck v34 = validate_labeling(g34, fig3_labeling(z34, 3, 5));
  fig3_note = v34.valid ? "valid" : "invalid (" + to_string(v34.violation->reason) + " at " +
                                        g34.label(v34.violation->u) + ", " + g34.label(v34.violation->v) + ")";
  if (o.ok) o.detail = std::to_string(checked) + " accepted graphs sound; fig3 Z2xZ4 exact; fig3 Z3xZ4 recorded";
  return o;
}

Outcome c10() {
  Outcome o;
  std::size_t lifts = 0;
  for (const char* text : {"Z4", "Z8", "Z9"}) {
    const FiniteRing r = parse_ring(text);
    for (unsigned d = 0; d <= 2; ++d) {
      const std::string tag = std::string(text) + " d=" + std::to_string(d);
      const CorollaryResult res = corollary_check(r, d);
      o.require(res.holds, tag + " corollary violated");
      const Fragment frag = zero_divisor_fragment(r, d);
      o.require(frag.content.size() == frag.members.size(), tag + " contents missing");
      for (std::size_t i = 0; i < frag.content.size() && i < frag.members.size(); ++i) {
        const auto& cd = frag.content[i];
        o.require(scale(cd.content, cd.cofactor) == frag.members[i], tag + " decomposition does not re-multiply");
        o.require(!mccoy_witness(cd.cofactor).has_value(), tag + " cofactor not regular");
      }
      const Orientation lifted = lift_orientation(r, local_orientation(r), frag);
      o.require(validate_orientation(frag.graph, lifted), tag + " lifted orientation invalid");
      o.require(labeling_sound(frag.graph, lifted), tag + " lifted labeling unsound");
      ++lifts;
    }
  }
  if (o.ok) o.detail = std::to_string(lifts) + " fragments: corollary, decompositions, lifts";
  return o;
}

Outcome c11(const std::string& cli) {
  Outcome o;
  const std::string cmd = "\"" + cli + "\" verify all --json";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    o.require(false, "could not start " + cli);
    return o;
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.require(code == 0, "exit code " + std::to_string(code));
  const auto doc = nlohmann::json::parse(out, nullptr, false);
  o.require(!doc.is_discarded() && doc.contains("reports"), "output is not a report document");
  if (o.ok) o.detail = std::to_string(doc["reports"].size()) + " reports, exit 0";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <zdiv-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  std::string fig3_note;

  struct Criterion {
    int id;
    double limit_s;  // 0 means no timing bound
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 1.0, c1},   {2, 5.0, c2},  {3, 0, c3},   {4, 0, c4},
      {5, 0, c5},     {6, 0, c6},    {7, 0, c7},   {8, 0, c8},
      {9, 0, [&] { return c9(fig3_note); }},       {10, 30.0, c10},
      {11, 120.0, [&] { return c11(cli); }}};

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s";
    }
    std::ostringstream line;
    line.precision(3);
    line << "C" << c.id << " " << (o.ok ? "PASS" : "FAIL") << " [" << std::fixed << secs << " s] " << o.detail;
    std::cout << line.str() << "\n";
    failures += !o.ok;
  }
  std::cout << "note: fig3 labeling for Z3xZ4 with (p,q) = (3,5) is " << fig3_note << "\n";
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
