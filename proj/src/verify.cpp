#include "spg/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "spg/invariants.hpp"

namespace spg {

namespace {

// enumeration results reused across trials on the same graph
template <class T>
class ByGraph {
 public:
  template <class F>
  std::shared_ptr<const T> get(const Graph& g, F make) {
    std::string key = graph_to_text(g);
    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto v = std::make_shared<const T>(make(g));
    cache_.emplace(key, v);
    return v;
  }

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const T>> cache_;
};

ByGraph<std::vector<Cycle>> all_cycles_cache, theorem_cycles_cache;
ByGraph<std::vector<LinkPattern>> patterns_cache, k331_patterns_cache;

std::shared_ptr<const std::vector<Cycle>> all_cycles(const Graph& g) {
  return all_cycles_cache.get(g, [](const Graph& h) { return enumerate_cycles(h); });
}

std::shared_ptr<const std::vector<LinkPattern>> all_patterns(const Graph& g) {
  return patterns_cache.get(g, [](const Graph& h) { return enumerate_link_patterns(h); });
}

bool is_k6(const Graph& g) { return g.nv() == 6 && g.ne() == 15; }
bool is_k331(const Graph& g) { return g.nv() == 7 && g.ne() == 15 && g.apex >= 0; }

std::vector<Cycle> by_length(const std::vector<Cycle>& cs, int len) {
  std::vector<Cycle> out;
  for (auto& c : cs)
    if (c.size() == len) out.push_back(c);
  return out;
}

IdentityReport make_report(std::string name, long long lhs, long long rhs) {
  IdentityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.pass = lhs == rhs;
  return r;
}

}  // namespace

LinkProfile link_profile(const Diagram& d) {
  LinkProfile p;
  auto pats = all_patterns(*d.graph);
  int big = 0;
  for (auto& l : *pats) {
    long long v = lk_of_pattern(d, l);
    p.links.push_back({l, v});
    p.sum_lk2 += v * v;
    if (v != 0) ++p.nonzero;
    if (v >= 2 || v <= -2) ++big;
  }
  p.ca_linked = big > 0 || p.nonzero >= 2;
  return p;
}

IdentityReport conway_gordon_check(const Diagram& d) {
  if (!is_k6(*d.graph)) throw InputError("conway_gordon_check needs K6");
  long long sum = 0;
  std::vector<Term> terms;
  for (auto& l : *all_patterns(*d.graph)) {
    long long v = lk_of_pattern(d, l);
    sum += v;
    terms.push_back({pattern_text(*d.graph, l), v});
  }
  IdentityReport r = make_report("conway_gordon", ((sum % 2) + 2) % 2, 1);
  r.terms = std::move(terms);
  r.note = "sum_lk " + std::to_string(sum);
  return r;
}

IdentityReport nikkuni_k6_check(const Diagram& d) {
  const Graph& g = *d.graph;
  if (!is_k6(g)) throw InputError("nikkuni_k6_check needs K6");
  std::vector<Term> terms;
  long long lhs = 0;
  for (auto& l : *all_patterns(g)) {
    long long v = lk_of_pattern(d, l);
    lhs += v * v;
    terms.push_back({"lk " + pattern_text(g, l), v});
  }
  auto cyc = all_cycles(g);
  long long ham = 0, pent = 0;
  for (auto& c : by_length(*cyc, 6)) {
    long long v = a2_of_cycle(d, c);
    ham += v;
    if (v) terms.push_back({"a2 " + cycle_text(g, c), v});
  }
  for (auto& c : by_length(*cyc, 5)) {
    long long v = a2_of_cycle(d, c);
    pent += v;
    if (v) terms.push_back({"a2 " + cycle_text(g, c), v});
  }
  IdentityReport r = make_report("nikkuni_k6", lhs, 2 * (ham - pent) + 1);
  r.terms = std::move(terms);
  return r;
}

IdentityReport k331_check(const Diagram& d) {
  const Graph& g = *d.graph;
  if (!is_k331(g)) throw InputError("k331_check needs K331 with its apex marked");
  std::vector<Term> terms;
  long long lhs = 0;
  auto pats = k331_patterns_cache.get(g, [](const Graph& h) { return enumerate_link_patterns(h, 3, 4); });
  for (auto& l : *pats) {
    long long v = lk_of_pattern(d, l);
    lhs += v * v;
    terms.push_back({"lk " + pattern_text(g, l), v});
  }
  auto cyc = all_cycles(g);
  long long ham = 0, six = 0, five = 0;
  for (auto& c : *cyc) {
    bool a = c.has_vertex(g.apex);
    long long* acc = nullptr;
    if (c.size() == 7)
      acc = &ham;
    else if (c.size() == 6 && !a)
      acc = &six;
    else if (c.size() == 5 && a)
      acc = &five;
    if (!acc) continue;
    long long v = a2_of_cycle(d, c);
    *acc += v;
    if (v) terms.push_back({"a2 " + cycle_text(g, c), v});
  }
  IdentityReport r = make_report("k331", lhs, 2 * (ham - 2 * six - five) + 1);
  r.terms = std::move(terms);
  return r;
}

IdentityReport wu_decomposition_check(const Diagram& d) {
  const Graph& g = *d.graph;
  if (!is_k331(g)) throw InputError("wu_decomposition_check needs K331 with its apex marked");
  auto sub = k331_subgraphs(g);
  std::vector<Term> terms;
  long long num = 0;
  for (auto& m : sub.G) {
    long long w = wu_k33(d, m);
    num += w * w;
    terms.push_back({"wu " + m.name, w});
  }
  for (auto& m : sub.H) {
    long long w = wu_k33(d, m);
    num -= w * w;
    terms.push_back({"wu " + m.name, w});
  }
  long long wk = wu_k33(d, sub.K);
  num -= 4 * wk * wk;
  terms.push_back({"wu K", wk});
  long long lhs = 0;
  auto pats = k331_patterns_cache.get(g, [](const Graph& h) { return enumerate_link_patterns(h, 3, 4); });
  for (auto& l : *pats) {
    long long v = lk_of_pattern(d, l);
    lhs += v * v;
  }
  IdentityReport r = make_report("wu_decomposition", lhs, num / 8);
  if (num % 8 != 0) {
    r.pass = false;
    r.note = "non-integer right side " + std::to_string(num) + "/8";
  }
  r.terms = std::move(terms);
  return r;
}

std::vector<Cycle> theorem_cycles(const Graph& g) {
  auto cyc = all_cycles(g);
  std::vector<Cycle> out;
  for (auto& c : *cyc) {
    bool keep = true;
    if (is_k6(g)) {
      keep = c.size() >= 5;
    } else if (is_k331(g)) {
      bool a = c.has_vertex(g.apex);
      keep = c.size() == 7 || (c.size() == 6 && !a) || (c.size() == 5 && a);
    }
    if (keep) out.push_back(c);
  }
  return out;
}

std::optional<Certificate> knot_certificate(const Diagram& d, Scope scope) {
  auto cached = theorem_cycles_cache.get(*d.graph, [](const Graph& g) { return theorem_cycles(g); });
  const std::vector<Cycle>& cs = scope == Scope::All ? *all_cycles(*d.graph) : *cached;
  for (auto& c : cs) {
    long long v = a2_of_cycle(d, c);
    if (v != 0) return Certificate{c, v};
  }
  return std::nullopt;
}

IdentityReport main_theorem_check(const Diagram& d) {
  LinkProfile p = link_profile(d);
  std::optional<Certificate> cert;
  if (p.ca_linked) cert = knot_certificate(d, Scope::All);
  IdentityReport r = make_report("main_theorem", p.ca_linked ? 1 : 0, (p.ca_linked && cert) ? 1 : 0);
  if (!p.ca_linked)
    r.note = "not CA-linked; vacuous";
  else if (cert)
    r.terms.push_back({"certificate " + cycle_text(*d.graph, cert->cycle), cert->a2});
  else
    r.note = "CA-linked but no a2 certificate; a2 = 0 does not prove unknotting";
  return r;
}

IdentityReport alpha_check(const Diagram& d, const K33Model& m) {
  long long w = wu_k33(d, m), a = alpha_k33(d, m);
  IdentityReport r = make_report("alpha", a, (w * w - 1) / 8);
  r.terms.push_back({"wu_k33 " + m.name, w});
  if ((w * w - 1) % 8 != 0) {
    r.pass = false;
    r.note = "wu^2 - 1 not divisible by 8";
  }
  return r;
}

IdentityReport alpha_check(const Diagram& d) { return alpha_check(d, identity_k33_model(*d.graph)); }

namespace {

int box(int k) { return ((k - 1) % 9 + 9) % 9; }  // 1-based index mod 9 -> 0..8

int sum_boxes(const TwistParameters& n, int i, std::initializer_list<int> offsets) {
  int s = 0;
  for (int o : offsets) s += n[box(3 * i + o)];
  return s;
}

}  // namespace

std::array<int, 18> g_formula(const TwistParameters& n) {
  std::array<int, 18> out{};
  for (int i = 1; i <= 18; ++i) {
    int v;
    if (i <= 3)
      v = 2 * sum_boxes(n, i, {1, 6, 8, 9}) + 1;
    else if (i <= 6)
      v = 2 * sum_boxes(n, i, {4, 5, 6, 7}) + 1;
    else if (i <= 9)
      v = 2 * sum_boxes(n, i, {1, 6, 7, 8}) + 1;
    else if (i <= 12)
      v = 2 * sum_boxes(n, i, {3, 4, 5, 6}) + 1;
    else if (i <= 15)
      v = 2 * sum_boxes(n, i, {1, 2, 3, 4, 5, 6, 8}) + 3;
    else
      v = 2 * sum_boxes(n, i, {1, 2, 4, 5, 6, 8, 9}) + 3;
    out[i - 1] = v;
  }
  return out;
}

std::array<int, 6> h_formula(const TwistParameters& n) {
  std::array<int, 6> out{};
  for (int i = 1; i <= 6; ++i)
    out[i - 1] = i <= 3 ? 2 * sum_boxes(n, i, {1, 6, 8}) + 1 : 2 * sum_boxes(n, i, {4, 5, 6}) + 1;
  return out;
}

int k_formula(const TwistParameters& n) {
  int s = 0;
  for (int v : n) s += v;
  return 2 * s + 3;
}

std::array<long long, 9> link_formula(const TwistParameters& n) {
  static const Graph g = k331();
  static const std::vector<LinkPattern> pats = enumerate_link_patterns(g, 3, 4);
  std::array<long long, 9> out{};
  for (size_t i = 0; i < pats.size(); ++i) {
    const Cycle& tri = pats[i].a.size() == 3 ? pats[i].a : pats[i].b;
    std::vector<int> pq;
    for (int v : tri.verts)
      if (v != g.apex) pq.push_back(v);
    std::string lab = g.edges[g.edge_between(pq[0], pq[1])].label;
    // c_j carries a single box; b_j carries four plus the template crossing
    static const std::map<std::string, int> cbox = {{"c1", 1}, {"c2", 3}, {"c3", 7},
                                                    {"c4", 9}, {"c5", 4}, {"c6", 6}};
    long long v;
    if (lab[0] == 'c')
      v = n[cbox.at(lab) - 1];
    else if (lab == "b1")
      v = n[1] + n[2] + n[3] + n[4] + 1;
    else if (lab == "b2")
      v = n[7] + n[8] + n[0] + n[1] + 1;
    else
      v = n[4] + n[5] + n[6] + n[7] + 1;
    out[i] = v;
  }
  return out;
}

IdentityReport calibration_check(const Diagram& d, const TwistParameters& n) {
  const Graph& g = *d.graph;
  auto sub = k331_subgraphs(g);
  auto G = g_formula(n);
  auto H = h_formula(n);
  auto L = link_formula(n);
  long long ok = 0;
  std::vector<Term> bad;
  auto cmp = [&](const std::string& name, long long got, long long want) {
    if (got == want)
      ++ok;
    else
      bad.push_back({name + " want " + std::to_string(want), got});
  };
  for (int i = 0; i < 18; ++i) cmp("wu " + sub.G[i].name, wu_k33(d, sub.G[i]), G[i]);
  for (int i = 0; i < 6; ++i) cmp("wu " + sub.H[i].name, wu_k33(d, sub.H[i]), H[i]);
  cmp("wu K", wu_k33(d, sub.K), k_formula(n));
  auto pats = k331_patterns_cache.get(g, [](const Graph& h) { return enumerate_link_patterns(h, 3, 4); });
  // link values carry the orientation of each pattern; only the square is fixed
  for (int i = 0; i < 9; ++i) {
    long long v = lk_of_pattern(d, (*pats)[i]);
    cmp("lk^2 " + pattern_text(g, (*pats)[i]), v * v, L[i] * L[i]);
  }
  IdentityReport r = make_report("calibration", ok, 34);
  r.terms = std::move(bad);
  return r;
}

Embedding search_sample(std::uint64_t seed, const SearchConfig& cfg) {
  static const GraphPtr g = std::make_shared<const Graph>(k6());
  return random_polygonal_embedding(g, cfg.bound, cfg.bends, seed);
}

std::optional<SearchHit> search_one(std::uint64_t seed, const SearchConfig& cfg) {
  Embedding em = search_sample(seed, cfg);
  Diagram d = project(em);
  LinkProfile p = link_profile(d);
  if (p.sum_lk2 != 1 || p.nonzero != 1) return std::nullopt;
  auto cert = knot_certificate(d, Scope::All);
  if (!cert) return std::nullopt;
  return SearchHit{seed, std::move(em), std::move(p), *cert};
}

std::vector<SearchHit> search_single_link_knotted(std::uint64_t first, std::uint64_t last,
                                                  const SearchConfig& cfg) {
  std::vector<SearchHit> out;
  for (std::uint64_t s = first; s <= last && s >= first; ++s)
    if (auto h = search_one(s, cfg)) out.push_back(std::move(*h));
  return out;
}

namespace {

// does [a,b] meet triangle pqr anywhere other than a shared corner?
bool meets_beyond_corner(P3 a, P3 b, const P3& p, const P3& q, const P3& r) {
  auto corner = [&](const P3& x) { return x == p || x == q || x == r; };
  if (corner(b)) std::swap(a, b);
  if (!corner(a)) return segment_meets_triangle(a, b, p, q, r);
  if (corner(b)) return true;
  const I64 N = 1 << 16;
  P3 a2 = a * N + (b - a);
  return segment_meets_triangle(a2, b * N, p * N, q * N, r * N);
}

}  // namespace

TriangleFromY triangle_from_y(const Embedding& child, GraphPtr parent, const YMove& m) {
  const Graph& pg = *parent;
  P3 y = child.pos[m.y];
  for (int attempt = 0; attempt < 4; ++attempt) {
    I64 scale = I64(1) << (8 + 2 * attempt);
    Embedding em;
    em.graph = parent;
    em.pos.resize(pg.nv());
    for (int v = 0; v < pg.nv(); ++v) em.pos[v] = child.pos[v] * scale;
    P3 Y = y * scale;
    em.bends.assign(pg.ne(), {});
    for (int e = 0; e < pg.ne(); ++e) {
      int ce = m.parent_to_child_edge[e];
      if (ce >= 0 && !child.bends.empty())
        for (auto& b : child.bends[ce]) em.bends[e].push_back(b * scale);
    }
    // bend of e_i inside the angle t_i y t_{i+1}, in its plane; the six
    // sweep triangles then form a disk bounded by the new triangle
    std::array<P3, 3> tip;
    for (int i = 0; i < 3; ++i) {
      tip[i] = Y + (child.pos[m.t[i]] - y) + (child.pos[m.t[(i + 1) % 3]] - y);
      em.bends[m.e[i]] = {tip[i]};
    }
    if (embedding_defect(em)) continue;

    bool clear = true;
    for (int i = 0; i < 3 && clear; ++i) {
      P3 ti = em.pos[m.t[i]], tj = em.pos[m.t[(i + 1) % 3]];
      for (int e = 0; e < pg.ne() && clear; ++e) {
        if (m.parent_to_child_edge[e] < 0) continue;
        auto pl = em.polyline(e);
        for (size_t s = 0; s + 1 < pl.size() && clear; ++s)
          if (meets_beyond_corner(pl[s], pl[s + 1], ti, Y, tip[i]) ||
              meets_beyond_corner(pl[s], pl[s + 1], Y, tip[i], tj))
            clear = false;
      }
    }
    if (!clear) continue;
    return {std::move(em), scale};
  }
  throw GeometryError("could not open the Y into a clean triangle");
}

namespace {

// +1 if b runs through the cyclic sequence a in the same direction, -1 if reversed
int direction_between(const std::vector<int>& a, const std::vector<int>& b) {
  size_t k = a.size();
  auto at = std::find(b.begin(), b.end(), a[0]);
  if (k < 3 || b.size() != k || at == b.end()) return 1;
  size_t j = at - b.begin();
  return b[(j + 1) % k] == a[1] ? 1 : -1;
}

std::vector<int> without(const std::vector<int>& vs, int y) {
  std::vector<int> out;
  for (int v : vs)
    if (v != y) out.push_back(v);
  return out;
}

}  // namespace

TransportReport delta_y_transport(const Embedding& child, GraphPtr parent, const YMove& m) {
  TransportReport rep;
  const Graph& pg = *parent;
  const Graph& cg = *child.graph;
  TriangleFromY tf = triangle_from_y(child, parent, m);
  Diagram dc = project(child);
  Diagram dp = project(tf.parent);
  for (auto& c : *all_cycles(pg)) {
    if (c.has_edge(m.e[0]) && c.has_edge(m.e[1]) && c.has_edge(m.e[2])) continue;
    Cycle img = phi_cycle_map(pg, cg, c, m);
    long long a = a2_of_cycle(dp, c), b = a2_of_cycle(dc, img);
    ++rep.cycles;
    if (a != b && rep.pass) {
      rep.pass = false;
      rep.failure = "a2 " + cycle_text(pg, c) + " = " + std::to_string(a) + " but phi image " +
                    cycle_text(cg, img) + " has " + std::to_string(b);
    }
  }
  for (auto& l : *all_patterns(cg)) {
    LinkPattern pre = psi_link_map(cg, pg, l, m);
    auto sa = without(l.a.verts, m.y), sb = without(l.b.verts, m.y);
    if (std::find(pre.a.verts.begin(), pre.a.verts.end(), sa[0]) == pre.a.verts.end())
      std::swap(pre.a, pre.b);
    int orient = direction_between(sa, pre.a.verts) * direction_between(sb, pre.b.verts);
    long long a = lk_of_pattern(dc, l), b = orient * lk_of_pattern(dp, pre);
    ++rep.links;
    if (a != b && rep.pass) {
      rep.pass = false;
      rep.failure = "lk " + pattern_text(cg, l) + " = " + std::to_string(a) + " but psi image has " +
                    std::to_string(b);
    }
  }
  rep.parent_certificate = knot_certificate(dp, Scope::All);
  if (rep.parent_certificate) {
    Cycle img = phi_cycle_map(pg, cg, rep.parent_certificate->cycle, m);
    rep.image_a2 = a2_of_cycle(dc, img);
    if (rep.image_a2 != rep.parent_certificate->a2 && rep.pass) {
      rep.pass = false;
      rep.failure = "certificate a2 not preserved";
    }
  }
  return rep;
}

std::string report_line(const IdentityReport& r, std::uint64_t seed) {
  return "check " + r.name + " seed=" + std::to_string(seed) + " lhs=" + std::to_string(r.lhs) +
         " rhs=" + std::to_string(r.rhs) + " pass=" + (r.pass ? "true" : "false");
}

}  // namespace spg
