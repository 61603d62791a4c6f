#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>
#include <vector>

#include "spg/invariants.hpp"

namespace spg::cli {

bool parse_seeds(const std::string& s, std::uint64_t& a, std::uint64_t& b) {
  auto num = [](const std::string& t, std::uint64_t& v) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit)) return false;
    try {
      v = std::stoull(t);
    } catch (...) {
      return false;
    }
    return true;
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) return num(s, a) && num(s, b);
  return num(s.substr(0, dots), a) && num(s.substr(dots + 2), b);
}

TwistParameters parse_twists(const std::string& s) {
  TwistParameters n{};
  std::stringstream ss(s);
  std::string tok;
  int k = 0;
  while (std::getline(ss, tok, ',')) {
    if (k == 9) throw InputError("--twists takes nine integers");
    try {
      size_t used = 0;
      n[k] = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("");
    } catch (...) {
      throw InputError("bad twist value '" + tok + "'");
    }
    ++k;
  }
  if (k != 9) throw InputError("--twists takes nine integers");
  return n;
}

namespace {

struct Trial {
  std::string text;
  std::vector<std::pair<std::string, bool>> results;  // suite, pass
};

// runs fn over [0, count) on a pool; results come back in index order
std::vector<Trial> run_pool(std::uint64_t count, int jobs, const std::function<Trial(std::uint64_t)>& fn) {
  std::vector<Trial> out(count);
  std::atomic<std::uint64_t> next{0};
  int n = jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<int>(std::min<std::uint64_t>(n, std::max<std::uint64_t>(count, 1)));
  auto work = [&] {
    for (std::uint64_t i; (i = next++) < count;) out[i] = fn(i);
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Embedding load_embedding(const RunConfig& c) {
  if (!c.embedding_file.empty()) {
    Embedding em = embedding_from_text(read_file(c.embedding_file), named_graph);
    if (auto why = embedding_defect(em)) throw InputError(c.embedding_file + ": " + *why);
    return em;
  }
  if (c.twists) return h_embedding(*c.twists);
  throw InputError("need --embedding FILE or --twists");
}

bool is_k6(const Graph& g) { return g.name == "K6"; }
bool is_k331(const Graph& g) { return g.name == "K331" && g.apex >= 0; }
bool is_k33(const Graph& g) { return g.name == "K33"; }

std::vector<IdentityReport> run_suites(const Diagram& d, const std::optional<TwistParameters>& twists) {
  const Graph& g = *d.graph;
  std::vector<IdentityReport> out;
  if (is_k6(g)) {
    out.push_back(conway_gordon_check(d));
    out.push_back(nikkuni_k6_check(d));
  } else if (is_k331(g)) {
    out.push_back(k331_check(d));
    out.push_back(wu_decomposition_check(d));
    if (twists) out.push_back(calibration_check(d, *twists));
  } else if (is_k33(g)) {
    out.push_back(alpha_check(d));
  }
  out.push_back(main_theorem_check(d));
  return out;
}

Trial trial_of(const Embedding& em, std::uint64_t seed, const std::optional<TwistParameters>& twists) {
  Trial t;
  std::ostringstream os;
  try {
    Diagram d = project(em);
    for (auto& r : run_suites(d, twists)) {
      os << report_line(r, seed);
      if (!r.note.empty()) os << " note=\"" << r.note << '"';
      os << '\n';
      if (!r.pass)
        for (auto& term : r.terms) os << "  " << term.name << ' ' << term.value << '\n';
      t.results.push_back({r.name, r.pass});
    }
  } catch (const GeometryError& e) {
    os << "error seed=" << seed << ' ' << e.what() << '\n';
    t.results.push_back({"geometry", false});
  }
  t.text = os.str();
  return t;
}

int summarize(const std::vector<Trial>& trials, std::ostream& os) {
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, int>> tally;
  for (auto& t : trials) {
    os << t.text;
    for (auto& [name, pass] : t.results) {
      if (!tally.count(name)) order.push_back(name);
      auto& [n, f] = tally[name];
      ++n;
      if (!pass) ++f;
    }
  }
  bool ok = true;
  for (auto& name : order) {
    auto [n, f] = tally[name];
    os << "suite " << name << " trials=" << n << " failures=" << f << '\n';
    ok = ok && f == 0;
  }
  return ok ? kPass : kFail;
}

std::uint64_t seed_count(const RunConfig& c) {
  if (!c.have_seeds || c.seed_last < c.seed_first) return 0;
  return c.seed_last - c.seed_first + 1;
}

}  // namespace

int cmd_verify(const RunConfig& c, std::ostream& os) {
  if (!c.embedding_file.empty() || c.twists) {
    Embedding em = load_embedding(c);
    if (!c.graph.empty() && c.graph != em.graph->name)
      throw InputError("--graph " + c.graph + " does not match the embedding's " + em.graph->name);
    return summarize({trial_of(em, 0, c.twists)}, os);
  }
  if (c.graph.empty()) throw InputError("verify needs --graph, --embedding or --twists");
  GraphPtr g = named_graph(c.graph);
  I64 bound = c.bound.value_or(100);
  std::uint64_t count = c.have_seeds ? seed_count(c) : 1;
  std::uint64_t first = c.have_seeds ? c.seed_first : 1;
  auto trials = run_pool(count, c.jobs, [&](std::uint64_t i) {
    std::uint64_t seed = first + i;
    try {
      return trial_of(random_linear_embedding(g, bound, seed), seed, std::nullopt);
    } catch (const GeometryError& e) {
      Trial t;
      t.text = "error seed=" + std::to_string(seed) + ' ' + e.what() + '\n';
      t.results.push_back({"geometry", false});
      return t;
    }
  });
  return summarize(trials, os);
}

int cmd_invariants(const RunConfig& c, std::ostream& os) {
  Embedding em = load_embedding(c);
  Diagram d = project(em);
  const Graph& g = *d.graph;
  os << "graph " << g.name << '\n';
  os << "direction " << d.direction[0] << ' ' << d.direction[1] << ' ' << d.direction[2] << '\n';
  os << "crossings " << d.crossings.size() << '\n';
  LinkProfile p = link_profile(d);
  for (auto& [l, v] : p.links) os << "lk " << pattern_text(g, l) << ' ' << v << '\n';
  os << "ca_linked " << (p.ca_linked ? "true" : "false") << '\n';
  os << "sum_lk2 " << p.sum_lk2 << '\n';
  auto cycles = c.scope == Scope::Theorem ? theorem_cycles(g) : enumerate_cycles(g);
  for (auto& cy : cycles) os << "a2 " << cycle_text(g, cy) << ' ' << a2_of_cycle(d, cy) << '\n';
  if (!wu_basis(g).empty()) {
    auto lat = coboundary_lattice(em.graph);
    os << wu_class_to_text(wu_class(wu_cochain(d), lat), lat);
  }
  auto restriction = [&](const K33Model& m) {
    os << "restriction " << m.name << '\n';
    os << "wu_k33 " << wu_k33(d, m) << '\n';
    os << "alpha " << alpha_k33(d, m) << '\n';
  };
  if (is_k33(g)) restriction(identity_k33_model(g));
  if (is_k331(g)) {
    auto sub = k331_subgraphs(g);
    restriction(sub.K);
    for (auto& m : sub.G) restriction(m);
    for (auto& m : sub.H) restriction(m);
  }
  return kPass;
}

int cmd_search(const RunConfig& c, std::ostream& os) {
  if (!c.graph.empty() && c.graph != "K6") throw InputError("search runs on K6 only");
  SearchConfig cfg;
  if (c.bound) cfg.bound = *c.bound;
  auto trials = run_pool(seed_count(c), c.jobs, [&](std::uint64_t i) {
    Trial t;
    std::uint64_t seed = c.seed_first + i;
    std::optional<SearchHit> hit;
    try {
      hit = search_one(seed, cfg);
    } catch (const GeometryError&) {
    }
    if (!hit) return t;
    const Graph& g = *hit->embedding.graph;
    std::ostringstream b;
    b << "# seed " << seed << '\n';
    b << "# certificate " << cycle_text(g, hit->certificate.cycle) << " a2 " << hit->certificate.a2 << '\n';
    for (auto& [l, v] : hit->profile.links)
      if (v) b << "# link " << pattern_text(g, l) << " lk " << v << '\n';
    b << embedding_to_text(hit->embedding) << '\n';
    t.text = b.str();
    return t;
  });
  for (auto& t : trials) os << t.text;
  return kPass;
}

int cmd_catalog(const RunConfig&, std::ostream& os) {
  const auto& cat = petersen_family();
  os << "catalog " << cat.entries.size() << '\n';
  for (auto& e : cat.entries) {
    WuRank r = wu_rank_both(e.graph);
    os << e.graph->name << " rank " << r.matrix << " vertices " << e.graph->nv() << " edges " << e.graph->ne();
    if (r.matrix != r.closed_form) os << " closed_form " << r.closed_form;
    os << '\n';
  }
  for (auto& a : cat.arrows) {
    const Graph& p = *cat.entries[a.parent].graph;
    os << "delta_y " << p.name << " -> " << cat.entries[a.child].graph->name << " triangle "
       << p.vertices[a.triangle[0]] << '-' << p.vertices[a.triangle[1]] << '-' << p.vertices[a.triangle[2]]
       << '\n';
  }
  return kPass;
}

int cmd_enumerate(const RunConfig& c, std::ostream& os) {
  if (c.graph.empty()) throw InputError("enumerate needs --graph");
  GraphPtr gp = named_graph(c.graph);
  const Graph& g = *gp;
  auto cycles = c.scope == Scope::Theorem ? theorem_cycles(g) : enumerate_cycles(g);
  auto pats = is_k331(g) && c.scope == Scope::Theorem ? enumerate_link_patterns(g, 3, 4)
                                                      : enumerate_link_patterns(g);
  std::map<int, int> by_len;
  for (auto& cy : cycles) {
    os << "cycle " << cycle_text(g, cy) << '\n';
    ++by_len[cy.size()];
  }
  for (auto& l : pats) os << "pattern " << pattern_text(g, l) << '\n';
  for (auto [len, n] : by_len) os << "count length " << len << ' ' << n << '\n';
  os << "count cycles " << cycles.size() << '\n';
  os << "count patterns " << pats.size() << '\n';
  return kPass;
}

}  // namespace spg::cli
