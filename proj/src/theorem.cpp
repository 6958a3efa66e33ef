#include "zdiv/theorem.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <tuple>

#include "zdiv/poly.hpp"
#include "zdiv/ring_spec.hpp"

namespace zdiv {

using json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Divisor: return "divisor";
    case Verdict::NotDivisor: return "not-divisor";
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inapplicable: return "inapplicable";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::Divisor, Verdict::NotDivisor, Verdict::Holds, Verdict::Violated})
    if (text == to_string(v)) return v;
  throw Error("unknown verdict '" + std::string(text) + "'");
}

const std::vector<std::string>& theorem_keys() {
  static const std::vector<std::string> keys = {
      "local",         "lemma-fig1",       "prod-diam00",  "prod-diam01",
      "prod-diam11",   "prod-diam02",      "prod-diam12or22", "compl-complete-bipartite",
      "ass2-gamma",    "ass2-complement",  "poly-corollary", "poly-lift"};
  return keys;
}

bool is_theorem_key(std::string_view key) {
  const auto& keys = theorem_keys();
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

bool zero_or_empty(const GammaDiameter& d) { return d.empty() || d.is(0); }

bool same_structure(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = u + 1; v < a.order(); ++v)
      if (a.adjacent(u, v) != b.adjacent(u, v)) return false;
  return true;
}

std::string census_text(const RoleCensus& c) {
  return "transmitters " + std::to_string(c.count(VertexRole::Transmitter)) + ", receivers " +
         std::to_string(c.count(VertexRole::Receiver)) + ", transitive " +
         std::to_string(c.count(VertexRole::Transitive)) + ", isolated " +
         std::to_string(c.count(VertexRole::Isolated));
}

std::string violation_text(const Graph& g, const LabelingCheck& check) {
  if (check.valid) return "valid";
  const auto& v = *check.violation;
  return "invalid (" + to_string(v.reason) + " at " + g.label(v.u) + ", " + g.label(v.v) + ")";
}

class Run {
 public:
  Run(const TheoremCheck& check, const HarnessOptions& options, Report& report)
      : check_(check), options_(options), report_(report) {}

  void execute();

 private:
  void hypothesis(std::string name, std::string observed, bool ok, bool required = true) {
    report_.hypotheses.push_back({std::move(name), std::move(observed), ok, required});
  }
  bool applicable() const {
    return std::all_of(report_.hypotheses.begin(), report_.hypotheses.end(),
                       [](const Hypothesis& h) { return h.ok || !h.required; });
  }
  void note(std::string text) { report_.paper_conformance.push_back(std::move(text)); }
  void failure(std::string text) { failures_.push_back(std::move(text)); }

  FiniteRing ring() const { return parse_ring(check_.ring); }
  std::optional<std::pair<FiniteRing, FiniteRing>> two_factors(const FiniteRing& r);

  void use_graph(std::string name, Graph g);
  void decide();
  void attach_labeling();
  void revalidate_embedding();
  void two_clique_note(const Graph& complement_graph);

  void run_local();
  void run_lemma();
  void run_product(const std::string& key);
  void run_complete_bipartite();
  void run_ass2(bool complement_graph);
  void run_poly_corollary();
  void run_poly_lift();

  const TheoremCheck& check_;
  const HarnessOptions& options_;
  Report& report_;
  Graph graph_;
  std::optional<Verdict> predicted_;
  std::vector<std::string> failures_;
};

std::optional<std::pair<FiniteRing, FiniteRing>> Run::two_factors(const FiniteRing& r) {
  const bool ok = r.factors().size() == 2;
  hypothesis("product of two rings", yes_no(ok), ok);
  if (!ok) return std::nullopt;
  return std::make_pair(r.factors()[0], r.factors()[1]);
}

void Run::use_graph(std::string name, Graph g) {
  graph_ = std::move(g);
  report_.evidence.graph_name = std::move(name);
  report_.evidence.vertices = graph_.labels();
  report_.evidence.edge_count = graph_.size();
}

// Verdict for graph_: pattern certificate first, then search, with brute force as
// the refutation when the edge count allows it.
void Run::decide() {
  Evidence& ev = report_.evidence;
  if (graph_.order() >= 7) {
    if (auto e = find_induced_embedding(figure1_pattern(), graph_, options_.embedding_budget)) {
      ev.embedding = std::move(e);
      ev.pattern_vertices = figure1_pattern().labels();
      report_.verdict = Verdict::NotDivisor;
      return;
    }
  }
  RecognizeOptions ro;
  ro.max_vertices = options_.cap_vertices;
  ro.forbidden_pattern_first = false;
  Recognition rec = recognize_detailed(graph_, ro);
  ev.extra["search_nodes"] = rec.search_nodes;
  if (rec.orientation) {
    ev.orientation = std::move(rec.orientation);
    ev.orientation_source = "search";
    report_.verdict = Verdict::Divisor;
    return;
  }
  report_.verdict = Verdict::NotDivisor;
  if (graph_.size() <= options_.cap_edges) {
    BruteForceResult bf = brute_force_recognize(graph_, options_.cap_edges);
    if (bf.orientation) failure("brute force found an orientation the search missed");
    ev.refutation = "exhaustive-2^" + std::to_string(graph_.size());
  } else {
    ev.refutation = "backtracking search exhausted after " + std::to_string(rec.search_nodes) + " nodes";
  }
}

void Run::attach_labeling() {
  Evidence& ev = report_.evidence;
  if (!ev.orientation) return;
  if (!validate_orientation(graph_, *ev.orientation)) {
    failure("evidence orientation does not validate");
    return;
  }
  if (!ev.role_census) ev.role_census = role_census(graph_, *ev.orientation);
  ev.labeling = synthesize_labeling(graph_, *ev.orientation);
  const LabelingCheck lc = validate_labeling(graph_, *ev.labeling);
  if (!lc.valid) failure("synthesized labeling " + violation_text(graph_, lc));
  ev.labeling_reproduces_graph = same_structure(divisor_graph_of_set(ev.labeling->label), graph_);
  if (!*ev.labeling_reproduces_graph) failure("divisor graph of the label set differs from the graph");
}

void Run::revalidate_embedding() {
  const Evidence& ev = report_.evidence;
  if (ev.embedding && !is_induced_embedding(figure1_pattern(), graph_, *ev.embedding))
    failure("embedding certificate does not re-validate");
}

void Run::two_clique_note(const Graph& g) {
  const auto comps = connected_components(g);
  const bool ok = comps.size() == 2 && std::all_of(comps.begin(), comps.end(), [&](const auto& c) {
                    return is_clique(g, c);
                  });
  note("complement splits into two cliques: " + yes_no(ok));
  if (!ok) failure("complement of the complete bipartite graph is not two cliques");
}

void Run::run_local() {
  const FiniteRing r = ring();
  const LocalStructure ls = local_structure(r);
  hypothesis("local", yes_no(ls.is_local()), ls.is_local());
  const std::size_t zd = r.nonzero_zero_divisors().size();
  hypothesis("nonzero zero divisors", std::to_string(zd), zd > 0);
  if (!applicable()) return;
  predicted_ = Verdict::Divisor;
  use_graph("complement", gamma_complement(r).graph);
  decide();
  if (!ls.is_principal()) {
    note("maximal ideal is not principal; the explicit orientation does not apply");
    return;
  }
  Orientation d = local_orientation(r);
  const bool valid = validate_orientation(graph_, d);
  note(std::string("local orientation: ") + (valid ? "valid" : "invalid"));
  if (!valid) {
    failure("local orientation does not validate");
    return;
  }
  RoleCensus census = role_census(graph_, d);
  note("local orientation census: " + census_text(census));
  report_.evidence.orientation = std::move(d);
  report_.evidence.orientation_source = "local orientation";
  report_.evidence.role_census = std::move(census);
}

void Run::run_lemma() {
  predicted_ = Verdict::NotDivisor;
  use_graph("figure1", figure1_pattern());
  BruteForceResult bf = brute_force_recognize(graph_, options_.cap_edges);
  RecognizeOptions ro;
  ro.max_vertices = options_.cap_vertices;
  ro.forbidden_pattern_first = false;
  Recognition rec = recognize_detailed(graph_, ro);
  if (bf.orientation.has_value() != rec.orientation.has_value())
    failure("brute force and recognize disagree");
  report_.verdict = bf.orientation ? Verdict::Divisor : Verdict::NotDivisor;
  report_.evidence.extra["scanned"] = bf.scanned;
  report_.evidence.extra["search_nodes"] = rec.search_nodes;
  if (!bf.orientation) {
    report_.evidence.refutation = "exhaustive-2^" + std::to_string(graph_.size());
  } else {
    report_.evidence.orientation = std::move(bf.orientation);
    report_.evidence.orientation_source = "brute force";
  }
}

void Run::run_product(const std::string& key) {
  const FiniteRing r = ring();
  auto factors = two_factors(r);
  if (!factors) return;
  const auto& [r1, r2] = *factors;
  const GammaDiameter d1 = gamma_diameter(r1);
  const GammaDiameter d2 = gamma_diameter(r2);
  const bool dom1 = is_domain(r1);
  const bool dom2 = is_domain(r2);
  auto local_hyps = [&] {
    hypothesis("R1 local", yes_no(local_structure(r1).is_local()), local_structure(r1).is_local());
    hypothesis("R2 local", yes_no(local_structure(r2).is_local()), local_structure(r2).is_local());
  };

  if (key == "prod-diam00") {
    hypothesis("diam(Gamma(R1))", d1.to_string(), zero_or_empty(d1));
    hypothesis("diam(Gamma(R2))", d2.to_string(), zero_or_empty(d2));
    hypothesis("R1 domain", yes_no(dom1), true, false);
    hypothesis("R2 domain", yes_no(dom2), true, false);
    if (!applicable()) return;
    predicted_ = dom1 || dom2 ? Verdict::Divisor : Verdict::NotDivisor;
  } else if (key == "prod-diam01") {
    hypothesis("diam(Gamma(R1))", d1.to_string(), zero_or_empty(d1));
    hypothesis("diam(Gamma(R2))", d2.to_string(), d2.is(1));
    hypothesis("R1 domain", yes_no(dom1), true, false);
    if (!applicable()) return;
    predicted_ = dom1 ? Verdict::Divisor : Verdict::NotDivisor;
  } else if (key == "prod-diam11") {
    hypothesis("diam(Gamma(R1))", d1.to_string(), d1.is(1));
    hypothesis("diam(Gamma(R2))", d2.to_string(), d2.is(1));
    if (!applicable()) return;
    predicted_ = Verdict::NotDivisor;
  } else if (key == "prod-diam02") {
    local_hyps();
    hypothesis("diam(Gamma(R1))", d1.to_string(), zero_or_empty(d1));
    hypothesis("diam(Gamma(R2))", d2.to_string(), d2.is(2));
    hypothesis("R1 domain", yes_no(dom1), true, false);
    if (!applicable()) return;
    predicted_ = dom1 ? Verdict::Divisor : Verdict::NotDivisor;
  } else {
    local_hyps();
    hypothesis("diam(Gamma(R1))", d1.to_string(), d1.is(1) || d1.is(2));
    hypothesis("diam(Gamma(R2))", d2.to_string(), d2.is(2));
    if (!applicable()) return;
    predicted_ = Verdict::NotDivisor;
  }

  use_graph("complement", gamma_complement(r).graph);
  decide();

  if (key == "prod-diam00") {
    if (dom1 && dom2) {
      two_clique_note(graph_);
    } else if (dom1) {
      const DivisorLabeling f = fig3_labeling(r, 3, 5);
      note("fig3 labeling (p=3, q=5): " + violation_text(graph_, validate_labeling(graph_, f)));
    } else if (!dom2) {
      // the seven vertices named in the converse argument
      const Index b = r1.nonzero_zero_divisors().front();
      const Index a = r2.nonzero_zero_divisors().front();
      const auto& u = r1.units();
      const auto& v = r2.units();
      if (u.size() >= 2 && v.size() >= 2) {
        const RingGraph rg = gamma_complement(r);
        const std::vector<std::pair<Index, Index>> named = {{0, a}, {0, v[0]}, {b, 0}, {b, a},
                                                            {b, v[1]}, {u[0], 0}, {u[1], a}};
        std::vector<Vertex> picked;
        for (const auto& [x, y] : named) picked.push_back(*rg.vertex_of(r.combine(std::vector<Index>{x, y})));
        std::sort(picked.begin(), picked.end());
        const bool found = find_induced_embedding(figure1_pattern(), induced_subgraph(graph_, picked)).has_value();
        note("named seven vertices induce the forbidden pattern: " + yes_no(found));
      }
    }
  } else if (key == "prod-diam01" && dom1) {
    const DivisorLabeling f = fig4_labeling(r);
    note("fig4 labeling (first prime 5, N(j,i) = (j-1)k+i, shared exponent mk+1): " +
         violation_text(graph_, validate_labeling(graph_, f)));
  } else if (key == "prod-diam02" && dom1 && local_structure(r2).is_principal()) {
    Orientation d = thm26_orientation(r);
    const bool valid = validate_orientation(graph_, d);
    note(std::string("product orientation: ") + (valid ? "valid" : "invalid"));
    if (!valid) {
      failure("product orientation does not validate");
      return;
    }
    RoleCensus census = role_census(graph_, d);
    const RingGraph rg = gamma_complement(r);
    const Index vn = r.combine(std::vector<Index>{0, r2.units().back()});
    const Index um = r.combine(std::vector<Index>{r1.units().back(), 0});
    for (Index e : {vn, um}) {
      const bool receiver = census.has(VertexRole::Receiver, *rg.vertex_of(e));
      note("named receiver " + r.render(e) + ": " + yes_no(receiver));
      if (!receiver) failure(r.render(e) + " is not a receiver");
    }
    note("product orientation census: " + census_text(census));
    report_.evidence.orientation = std::move(d);
    report_.evidence.orientation_source = "product orientation";
    report_.evidence.role_census = std::move(census);
  }
}

void Run::run_complete_bipartite() {
  const FiniteRing r = ring();
  const Graph g = gamma(r).graph;
  const auto bip = is_complete_bipartite(g);
  hypothesis("Gamma(R) complete bipartite",
             bip ? "K_{" + std::to_string(bip->first.size()) + "," + std::to_string(bip->second.size()) + "}" : "no",
             bip.has_value());
  if (!applicable()) return;
  predicted_ = Verdict::Divisor;
  use_graph("complement", gamma_complement(r).graph);
  decide();
  two_clique_note(graph_);
}

void Run::run_ass2(bool complement_graph) {
  const FiniteRing r = ring();
  const auto ass = associated_primes(r);
  hypothesis("|Ass|", std::to_string(ass.size()), ass.size() == 2);
  if (ass.size() == 2) {
    const IdealSet meet = intersect(r, ass[0], ass[1]);
    hypothesis("p1 intersect p2", meet.is_zero() ? "{0}" : std::to_string(meet.size()) + " elements",
               meet.is_zero());
  }
  if (!applicable()) return;
  predicted_ = Verdict::Divisor;
  const Graph g = gamma(r).graph;
  const auto bip = is_complete_bipartite(g);
  note(std::string("Gamma(R) complete bipartite: ") +
       (bip ? "K_{" + std::to_string(bip->first.size()) + "," + std::to_string(bip->second.size()) + "}" : "no"));
  if (!bip) failure("Gamma(R) is not complete bipartite");

  if (!complement_graph) {
    use_graph("gamma", g);
    decide();
    if (bip && report_.verdict == Verdict::Divisor) {
      report_.evidence.orientation = cross_orientation(graph_, bip->first);
      report_.evidence.orientation_source = "cross orientation";
    }
  } else {
    use_graph("complement", gamma_complement(r).graph);
    decide();
    if (bip) two_clique_note(graph_);
  }
}

void Run::run_poly_corollary() {
  const FiniteRing r = ring();
  bool supported = true;
  try {
    ContentDecomposer probe(r);
  } catch (const PolyError&) {
    supported = false;
  }
  hypothesis("product of local principal ideal rings", yes_no(supported), supported);
  if (!applicable()) return;
  predicted_ = Verdict::Holds;
  const CorollaryResult res = corollary_check(r, check_.degree, {}, options_.fragment_cap);
  report_.verdict = res.holds ? Verdict::Holds : Verdict::Violated;
  Evidence& ev = report_.evidence;
  ev.graph_name = "fragment";
  ev.extra["zero_divisors"] = res.zero_divisors;
  ev.extra["pairs_checked"] = res.pairs_checked;
  ev.extra["diagonal_checked"] = res.diagonal_checked;
  if (res.counterexample)
    ev.extra["counterexample"] = json::array({render(res.counterexample->first), render(res.counterexample->second)});
}

void Run::run_poly_lift() {
  const FiniteRing r = ring();
  bool supported = true;
  try {
    ContentDecomposer probe(r);
  } catch (const PolyError&) {
    supported = false;
  }
  hypothesis("product of local principal ideal rings", yes_no(supported), supported);
  if (!applicable()) return;

  const Graph base_graph = gamma_complement(r).graph;
  RecognizeOptions ro;
  ro.max_vertices = options_.cap_vertices;
  const auto base = recognize(base_graph, ro);
  hypothesis("Gamma-bar(R) divisor graph", yes_no(base.has_value()), base.has_value());
  if (!applicable()) return;
  predicted_ = Verdict::Divisor;

  const Fragment frag = zero_divisor_fragment(r, check_.degree, options_.fragment_cap);
  use_graph("fragment", frag.graph);
  try {
    report_.evidence.orientation = lift_orientation(r, *base, frag);
    report_.evidence.orientation_source = "lifted";
  } catch (const PolyError& e) {
    failure(e.what());
    return;
  }
  report_.verdict = validate_orientation(graph_, *report_.evidence.orientation) ? Verdict::Divisor
                                                                                 : Verdict::NotDivisor;
}

void Run::execute() {
  const std::string& key = check_.key;
  if (key == "local") {
    run_local();
  } else if (key == "lemma-fig1") {
    run_lemma();
  } else if (key.rfind("prod-", 0) == 0) {
    run_product(key);
  } else if (key == "compl-complete-bipartite") {
    run_complete_bipartite();
  } else if (key == "ass2-gamma" || key == "ass2-complement") {
    run_ass2(key == "ass2-complement");
  } else if (key == "poly-corollary") {
    run_poly_corollary();
  } else {
    run_poly_lift();
  }

  if (!applicable()) {
    report_.status = Status::Inapplicable;
    std::string reason;
    for (const auto& h : report_.hypotheses) {
      if (h.ok || !h.required) continue;
      reason += (reason.empty() ? "" : ", ") + h.name + " = " + h.observed;
    }
    report_.reason = "inapplicable: " + reason;
    return;
  }

  if (report_.verdict == Verdict::Divisor) attach_labeling();
  revalidate_embedding();

  if (!failures_.empty()) {
    report_.status = Status::Fail;
    for (const auto& f : failures_) report_.reason += (report_.reason.empty() ? "" : "; ") + f;
  } else if (!report_.verdict) {
    report_.status = Status::Fail;
    report_.reason = "no verdict";
  } else if (report_.verdict != predicted_) {
    report_.status = Status::Fail;
    report_.reason = "verdict " + to_string(*report_.verdict) + " contradicts the predicted " + to_string(*predicted_);
  } else if (report_.expected && report_.verdict != report_.expected) {
    report_.status = Status::Fail;
    report_.reason = "verdict " + to_string(*report_.verdict) + " differs from the expected " +
                     to_string(*report_.expected);
  } else {
    report_.status = Status::Pass;
  }
}

json orientation_json(const std::vector<std::string>& names, const Orientation& d) {
  json arcs = json::array();
  for (const auto& a : d.arcs) arcs.push_back(json::array({names[a.from], names[a.to]}));
  return arcs;
}

}  // namespace

json Report::to_json(bool with_time) const {
  json out;
  out["check"] = check;
  out["ring"] = ring;
  if (degree) out["degree"] = *degree;
  json hyps = json::object();
  for (const auto& h : hypotheses) hyps[h.name] = {{"observed", h.observed}, {"ok", h.ok}, {"required", h.required}};
  out["hypotheses"] = std::move(hyps);
  out["verdict"] = verdict ? json(to_string(*verdict)) : json(nullptr);
  out["expected"] = expected ? json(to_string(*expected)) : json(nullptr);
  out["status"] = to_string(status);
  out["reason"] = reason;

  const auto& names = evidence.vertices;
  json ev = json::object();
  if (!evidence.graph_name.empty()) {
    ev["graph"] = evidence.graph_name;
    ev["vertices"] = evidence.vertices;
    ev["edges"] = evidence.edge_count;
  }
  if (evidence.orientation) {
    ev["orientation"] = {{"source", evidence.orientation_source},
                         {"arcs", orientation_json(names, *evidence.orientation)}};
  }
  if (evidence.labeling) {
    json lab = json::object();
    for (Vertex v = 0; v < evidence.labeling->label.size(); ++v) lab[names[v]] = evidence.labeling->label[v].str();
    ev["labeling"] = std::move(lab);
  }
  if (evidence.labeling_reproduces_graph) ev["labeling_reproduces_graph"] = *evidence.labeling_reproduces_graph;
  if (evidence.embedding) {
    json emb = json::object();
    for (std::size_t i = 0; i < evidence.embedding->image.size(); ++i)
      emb[evidence.pattern_vertices[i]] = names[evidence.embedding->image[i]];
    ev["embedding"] = std::move(emb);
  }
  if (evidence.refutation) ev["refutation"] = *evidence.refutation;
  if (evidence.role_census) {
    json census = json::object();
    for (const auto& [role, members] : evidence.role_census->members) {
      json list = json::array();
      for (Vertex v : members) list.push_back(names[v]);
      census[to_string(role)] = std::move(list);
    }
    ev["role_census"] = std::move(census);
  }
  for (const auto& [k, v] : evidence.extra.items()) ev[k] = v;
  out["evidence"] = std::move(ev);
  out["paper_conformance"] = paper_conformance;
  if (with_time) out["wall_time_ms"] = wall_time_ms;
  return out;
}

Report verify_theorem(const TheoremCheck& check, const HarnessOptions& options) {
  if (!is_theorem_key(check.key)) throw Error("unknown theorem key '" + check.key + "'");
  Report report;
  report.check = check.key;
  report.ring = check.ring;
  report.expected = check.expected;
  if (check.key.rfind("poly-", 0) == 0) report.degree = check.degree;
  const auto start = std::chrono::steady_clock::now();
  try {
    Run(check, options, report).execute();
  } catch (const CapExceeded& e) {
    report.status = Status::Fail;
    report.cap_exceeded = true;
    report.reason = std::string("cap exceeded: ") + e.what();
  } catch (const Error& e) {
    report.status = Status::Fail;
    report.reason = e.what();
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Report> verify_all(const std::vector<TheoremCheck>& checks, const HarnessOptions& options) {
  std::vector<Report> out;
  out.reserve(checks.size());
  for (const auto& c : checks) out.push_back(verify_theorem(c, options));
  std::stable_sort(out.begin(), out.end(), [](const Report& a, const Report& b) {
    return std::tie(a.check, a.ring, a.degree) < std::tie(b.check, b.ring, b.degree);
  });
  return out;
}

std::vector<TheoremCheck> parse_suite(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(std::string("suite: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("checks") || !doc["checks"].is_array())
    throw Error("suite: expected an object with a \"checks\" array");
  std::vector<TheoremCheck> out;
  try {
    for (const auto& entry : doc["checks"]) {
      const std::string key = entry.at("key").get<std::string>();
      if (!is_theorem_key(key)) throw Error("suite: unknown theorem key '" + key + "'");
      std::vector<std::string> rings{""};
      if (entry.contains("rings")) rings = entry["rings"].get<std::vector<std::string>>();
      std::vector<unsigned> degrees{0};
      if (entry.contains("degrees")) degrees = entry["degrees"].get<std::vector<unsigned>>();
      for (const auto& ring : rings) {
        std::optional<Verdict> expected;
        if (entry.contains("expected")) {
          const auto& e = entry["expected"];
          if (e.is_string()) {
            expected = parse_verdict(e.get<std::string>());
          } else if (e.contains(ring)) {
            expected = parse_verdict(e[ring].get<std::string>());
          }
        }
        for (unsigned d : degrees) out.push_back({key, ring, d, expected});
      }
    }
  } catch (const json::exception& e) {
    throw Error(std::string("suite: ") + e.what());
  }
  return out;
}

std::vector<TheoremCheck> load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read suite file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_suite(buf.str());
}

}  // namespace zdiv
