#include "spg/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace spg {

int Graph::add_vertex(const std::string& label) {
  vertices.push_back(label);
  return nv() - 1;
}

int Graph::add_edge(int tail, int head, const std::string& label) {
  edges.push_back({tail, head, label});
  return ne() - 1;
}

int Graph::vertex_index(const std::string& label) const {
  for (int i = 0; i < nv(); ++i)
    if (vertices[i] == label) return i;
  return -1;
}

int Graph::edge_index(const std::string& label) const {
  for (int i = 0; i < ne(); ++i)
    if (edges[i].label == label) return i;
  return -1;
}

int Graph::edge_between(int u, int v) const {
  for (int i = 0; i < ne(); ++i) {
    const Edge& e = edges[i];
    if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) return i;
  }
  return -1;
}

int Graph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges) d += (e.tail == v) + (e.head == v);
  return d;
}

std::vector<std::vector<int>> Graph::neighbours() const {
  std::vector<std::vector<int>> nb(nv());
  for (const Edge& e : edges) {
    nb[e.tail].push_back(e.head);
    nb[e.head].push_back(e.tail);
  }
  for (auto& l : nb) std::sort(l.begin(), l.end());
  return nb;
}

bool Graph::edges_disjoint(int e1, int e2) const {
  const Edge& a = edges[e1];
  const Edge& b = edges[e2];
  return a.tail != b.tail && a.tail != b.head && a.head != b.tail && a.head != b.head;
}

void Graph::validate() const {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.tail < 0 || e.head < 0 || e.tail >= nv() || e.head >= nv())
      throw InputError("edge " + e.label + " has an unknown endpoint");
    if (e.tail == e.head) throw InputError("loop at edge " + e.label);
    auto key = std::minmax(e.tail, e.head);
    if (!seen.insert(key).second) throw InputError("repeated vertex pair at edge " + e.label);
  }
}

bool Cycle::has_vertex(int v) const {
  return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool Cycle::has_edge(int e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

bool Cycle::operator<(const Cycle& o) const {
  if (size() != o.size()) return size() < o.size();
  return verts < o.verts;
}

bool LinkPattern::operator<(const LinkPattern& o) const {
  if (a == o.a) return b < o.b;
  return a < o.a;
}

Cycle cycle_as_walk(const Graph& g, const std::vector<int>& verts) {
  Cycle c;
  c.verts = verts;
  int k = static_cast<int>(verts.size());
  if (k < 3) throw InputError("cycle needs at least 3 vertices");
  for (int i = 0; i < k; ++i) {
    int u = verts[i], v = verts[(i + 1) % k];
    int e = g.edge_between(u, v);
    if (e < 0) throw InputError("not a cycle: missing edge");
    c.edges.push_back(e);
    c.fwd.push_back(g.edges[e].tail == u);
  }
  return c;
}

Cycle make_cycle(const Graph& g, std::vector<int> verts) {
  int k = static_cast<int>(verts.size());
  if (k < 3) throw InputError("cycle needs at least 3 vertices");
  auto mn = std::min_element(verts.begin(), verts.end());
  std::rotate(verts.begin(), mn, verts.end());
  if (verts[1] > verts.back()) std::reverse(verts.begin() + 1, verts.end());
  return cycle_as_walk(g, verts);
}

std::string cycle_text(const Graph& g, const Cycle& c) {
  std::string s;
  for (size_t i = 0; i < c.verts.size(); ++i) {
    if (i) s += '-';
    s += g.vertices[c.verts[i]];
  }
  return s;
}

std::string pattern_text(const Graph& g, const LinkPattern& p) {
  return cycle_text(g, p.a) + "/" + cycle_text(g, p.b);
}

std::vector<Cycle> enumerate_cycles(const Graph& g, CycleFilter f) {
  auto nb = g.neighbours();
  int n = g.nv();
  std::vector<std::vector<int>> found;
  std::vector<int> path;
  std::vector<char> on(n, 0);
  std::function<void(int, int)> dfs = [&](int s, int u) {
    for (int w : nb[u]) {
      if (w == s && path.size() >= 3 && path[1] < path.back()) found.push_back(path);
      if (w <= s || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(s, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[s] = 1;
    dfs(s, s);
    on[s] = 0;
  }
  std::vector<Cycle> out;
  for (auto& vs : found) {
    int k = static_cast<int>(vs.size());
    bool keep = true;
    switch (f.kind) {
      case CycleFilter::All: break;
      case CycleFilter::Hamiltonian: keep = (k == n); break;
      case CycleFilter::Length: keep = (k == f.value); break;
      case CycleFilter::Contains:
        keep = std::find(vs.begin(), vs.end(), f.value) != vs.end();
        break;
      case CycleFilter::Avoids:
        keep = std::find(vs.begin(), vs.end(), f.value) == vs.end();
        break;
    }
    if (keep) out.push_back(make_cycle(g, vs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinkPattern> enumerate_link_patterns(const Graph& g, int s, int t) {
  auto cyc = enumerate_cycles(g);
  std::vector<LinkPattern> out;
  for (size_t i = 0; i < cyc.size(); ++i) {
    for (size_t j = i + 1; j < cyc.size(); ++j) {
      const Cycle& a = cyc[i];
      const Cycle& b = cyc[j];
      if (s || t) {
        bool ok = (a.size() == s && b.size() == t) || (a.size() == t && b.size() == s);
        if (!ok) continue;
      }
      bool disjoint = std::none_of(a.verts.begin(), a.verts.end(),
                                   [&](int v) { return b.has_vertex(v); });
      if (disjoint) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_triangle(const Graph& g, int a, int b, int c) {
  if (a == b || b == c || a == c) return false;
  return g.edge_between(a, b) >= 0 && g.edge_between(b, c) >= 0 && g.edge_between(a, c) >= 0;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.nv(); ++a)
    for (int b = a + 1; b < g.nv(); ++b)
      for (int c = b + 1; c < g.nv(); ++c)
        if (is_triangle(g, a, b, c)) out.push_back({a, b, c});
  return out;
}

YResult triangle_y_move(const Graph& g, std::array<int, 3> t) {
  for (int v : t)
    if (v < 0 || v >= g.nv()) throw InputError("triangle vertex out of range");
  if (!is_triangle(g, t[0], t[1], t[2])) throw InputError("vertices do not span a triangle");
  YResult r;
  YMove& m = r.move;
  m.t = t;
  for (int i = 0; i < 3; ++i) m.e[i] = g.edge_between(t[i], t[(i + 1) % 3]);

  Graph& c = r.child;
  c.name = g.name + "-Y";
  c.vertices = g.vertices;
  std::string ylabel = "y";
  for (int v : t) ylabel += g.vertices[v];
  while (c.vertex_index(ylabel) >= 0) ylabel += "'";
  m.y = c.add_vertex(ylabel);

  m.parent_to_child_edge.assign(g.ne(), -1);
  for (int i = 0; i < g.ne(); ++i) {
    if (i == m.e[0] || i == m.e[1] || i == m.e[2]) continue;
    m.parent_to_child_edge[i] = c.add_edge(g.edges[i].tail, g.edges[i].head, g.edges[i].label);
  }
  for (int i = 0; i < 3; ++i) m.f[i] = c.add_edge(m.y, t[i], ylabel + "_" + g.vertices[t[i]]);
  m.child_to_parent_edge.assign(c.ne(), -1);
  for (int i = 0; i < g.ne(); ++i)
    if (m.parent_to_child_edge[i] >= 0) m.child_to_parent_edge[m.parent_to_child_edge[i]] = i;
  return r;
}

Cycle phi_cycle_map(const Graph& parent, const Graph& child, const Cycle& c, const YMove& m) {
  (void)parent;
  int used = 0;
  for (int e : m.e) used += c.has_edge(e);
  if (used == 3) throw InputError("phi is undefined on the moved triangle");
  auto in_t = [&](int v) { return v == m.t[0] || v == m.t[1] || v == m.t[2]; };
  std::vector<int> vs = c.verts;
  int k = static_cast<int>(vs.size());
  std::vector<int> out;
  if (used == 2) {
    // the middle vertex of the two-edge run is replaced by y
    for (int i = 0; i < k; ++i) {
      int prev = vs[(i + k - 1) % k], next = vs[(i + 1) % k];
      if (in_t(vs[i]) && in_t(prev) && in_t(next))
        out.push_back(m.y);
      else
        out.push_back(vs[i]);
    }
  } else {
    for (int i = 0; i < k; ++i) {
      out.push_back(vs[i]);
      int next = vs[(i + 1) % k];
      if (used == 1 && in_t(vs[i]) && in_t(next)) out.push_back(m.y);
    }
  }
  return make_cycle(child, out);
}

LinkPattern psi_link_map(const Graph& child, const Graph& parent, const LinkPattern& l,
                         const YMove& m) {
  (void)child;
  auto drop_y = [&](const Cycle& c) {
    std::vector<int> vs;
    for (int v : c.verts)
      if (v != m.y) vs.push_back(v);
    return make_cycle(parent, vs);
  };
  LinkPattern p{drop_y(l.a), drop_y(l.b)};
  if (p.b < p.a) std::swap(p.a, p.b);
  return p;
}

bool isomorphic(const Graph& a, const Graph& b) {
  int n = a.nv();
  if (n != b.nv() || a.ne() != b.ne()) return false;
  std::vector<std::vector<char>> A(n, std::vector<char>(n, 0)), B = A;
  for (const Edge& e : a.edges) A[e.tail][e.head] = A[e.head][e.tail] = 1;
  for (const Edge& e : b.edges) B[e.tail][e.head] = B[e.head][e.tail] = 1;
  std::vector<int> da(n), db(n);
  for (int i = 0; i < n; ++i) da[i] = a.degree(i), db[i] = b.degree(i);
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> go = [&](int i) {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || db[j] != da[i]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) ok = (A[i][k] == B[j][map[k]]);
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (go(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return go(0);
}

bool three_connected(const Graph& g) {
  int n = g.nv();
  if (n < 4) return false;
  auto nb = g.neighbours();
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      std::vector<char> seen(n, 0);
      seen[x] = seen[y] = 1;
      int start = 0;
      while (seen[start]) ++start;
      std::vector<int> stack{start};
      seen[start] = 1;
      int count = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : nb[u])
          if (!seen[w]) seen[w] = 1, ++count, stack.push_back(w);
      }
      if (count != n - (x == y ? 1 : 2)) return false;
    }
  }
  return true;
}

Graph complete_graph(int n) {
  Graph g;
  g.name = "K" + std::to_string(n);
  for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, g.vertices[i] + g.vertices[j]);
  return g;
}

Graph k6() { return complete_graph(6); }

const std::array<std::pair<int, int>, 9> kK33Edges = {{
    {0, 3}, {2, 5}, {4, 1},                          // b1 b2 b3
    {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},  // c1..c6
}};
const std::array<const char*, 9> kK33Labels = {"b1", "b2", "b3", "c1", "c2",
                                               "c3", "c4", "c5", "c6"};

int k33_epsilon(int la, int lb) {
  auto [a0, a1] = kK33Edges[la];
  auto [b0, b1] = kK33Edges[lb];
  if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return 0;
  auto lo = std::min(la, lb), hi = std::max(la, lb);
  // (b2,c1), (b3,c3), (b1,c5)
  if ((lo == 1 && hi == 3) || (lo == 2 && hi == 5) || (lo == 0 && hi == 7)) return -1;
  return 1;
}

Graph k33() {
  Graph g;
  g.name = "K33";
  for (int i = 1; i <= 6; ++i) g.add_vertex(std::to_string(i));
  for (int l = 0; l < 9; ++l) g.add_edge(kK33Edges[l].first, kK33Edges[l].second, kK33Labels[l]);
  g.part = {0, 1, 0, 1, 0, 1};
  return g;
}

Graph k331() {
  Graph g;
  g.name = "K331";
  for (int i = 1; i <= 6; ++i) g.add_vertex(std::to_string(i));
  int A = g.add_vertex("A");
  for (int i = 0; i < 6; ++i) {
    std::string lab = "a" + std::to_string(i + 1);
    if (i % 2 == 0)
      g.add_edge(A, i, lab);
    else
      g.add_edge(i, A, lab);
  }
  for (int l = 0; l < 9; ++l) g.add_edge(kK33Edges[l].first, kK33Edges[l].second, kK33Labels[l]);
  g.apex = A;
  g.part = {0, 1, 0, 1, 0, 1, 2};
  return g;
}

int PetersenCatalog::find(const std::string& name) const {
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].graph->name == name) return static_cast<int>(i);
  return -1;
}

namespace {

bool triangle_free(const Graph& g) { return triangles(g).empty(); }

std::string family_name(const Graph& g) {
  int maxdeg = 0;
  for (int v = 0; v < g.nv(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
  switch (g.nv()) {
    case 6: return "K6";
    case 7: return maxdeg == 6 ? "K331" : "G7";
    case 8: return triangle_free(g) ? "K44e" : "G8";
    case 9: return "G9";
    case 10: return "P10";
  }
  return "G" + std::to_string(g.nv());
}

PetersenCatalog build_catalog() {
  PetersenCatalog cat;
  auto push = [&](Graph g, int parent, std::array<int, 3> t) {
    g.name = family_name(g);
    cat.entries.push_back({std::make_shared<const Graph>(std::move(g)), parent, t});
  };
  push(k6(), -1, {});
  push(k331(), -1, {});
  for (size_t i = 0; i < cat.entries.size(); ++i) {
    GraphPtr g = cat.entries[i].graph;
    for (auto t : triangles(*g)) {
      YResult r = triangle_y_move(*g, t);
      int cls = -1;
      for (size_t j = 0; j < cat.entries.size(); ++j)
        if (isomorphic(*cat.entries[j].graph, r.child)) cls = static_cast<int>(j);
      if (cls < 0) {
        push(r.child, static_cast<int>(i), t);
        cls = static_cast<int>(cat.entries.size()) - 1;
      }
      bool seen = false;
      for (auto& a : cat.arrows) seen |= (a.parent == static_cast<int>(i) && a.child == cls);
      if (!seen) cat.arrows.push_back({static_cast<int>(i), cls, t});
    }
  }
  return cat;
}

}  // namespace

const PetersenCatalog& petersen_family() {
  static const PetersenCatalog cat = build_catalog();
  return cat;
}

std::vector<int> K33Model::host_edges() const {
  std::vector<int> out;
  for (auto& p : paths)
    for (auto& [e, f] : p) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, int> K33Model::label_of(int host_edge) const {
  for (int l = 0; l < 9; ++l)
    for (auto& [e, f] : paths[l])
      if (e == host_edge) return {l, f ? 1 : -1};
  return {-1, 0};
}

Cycle K33Model::pattern_cycle(const Graph& host, const std::vector<int>& pv) const {
  std::vector<int> hv;
  int k = static_cast<int>(pv.size());
  for (int i = 0; i < k; ++i) {
    int p = pv[i], q = pv[(i + 1) % k];
    int l = -1;
    bool forward = true;
    for (int j = 0; j < 9; ++j) {
      if (kK33Edges[j] == std::make_pair(p, q)) l = j, forward = true;
      if (kK33Edges[j] == std::make_pair(q, p)) l = j, forward = false;
    }
    if (l < 0) throw InputError("pattern vertices are not adjacent in K33");
    // host vertex walk along the path, from branch[p]
    std::vector<int> walk{branch[kK33Edges[l].first]};
    for (auto& [e, f] : paths[l]) walk.push_back(f ? host.edges[e].head : host.edges[e].tail);
    if (!forward) std::reverse(walk.begin(), walk.end());
    hv.insert(hv.end(), walk.begin(), walk.end() - 1);
  }
  return make_cycle(host, hv);
}

K33Model identity_k33_model(const Graph& g) {
  K33Model m;
  m.name = "K";
  for (int p = 0; p < 6; ++p) {
    m.branch[p] = g.vertex_index(std::to_string(p + 1));
    if (m.branch[p] < 0) throw InputError("graph lacks K33 vertex labels");
  }
  for (int l = 0; l < 9; ++l) {
    int e = g.edge_index(kK33Labels[l]);
    if (e < 0) throw InputError("graph lacks K33 edge labels");
    const Edge& E = g.edges[e];
    if (E.tail != m.branch[kK33Edges[l].first] || E.head != m.branch[kK33Edges[l].second])
      throw InputError("edge " + E.label + " does not match the K33 pattern");
    m.paths[l] = {{e, true}};
  }
  return m;
}

namespace {

// host path through vertices hv, oriented from hv.front() to hv.back()
std::vector<std::pair<int, bool>> host_path(const Graph& g, const std::vector<int>& hv) {
  std::vector<std::pair<int, bool>> out;
  for (size_t i = 0; i + 1 < hv.size(); ++i) {
    int e = g.edge_between(hv[i], hv[i + 1]);
    if (e < 0) throw InputError("host path is broken");
    out.push_back({e, g.edges[e].tail == hv[i]});
  }
  return out;
}

// A takes the role of pattern vertex v; kept[z] says whether the A-z edge
// replaces v-z directly; other neighbours of v are reached through v itself
K33Model apex_model(const Graph& g, int v, const std::vector<int>& direct, const std::string& name) {
  int A = g.apex;
  K33Model m;
  m.name = name;
  for (int p = 0; p < 6; ++p) m.branch[p] = p;
  m.branch[v] = A;
  for (int l = 0; l < 9; ++l) {
    auto [p, q] = kK33Edges[l];
    std::vector<int> hv;
    if (p == v || q == v) {
      int z = (p == v) ? q : p;
      bool d = std::find(direct.begin(), direct.end(), z) != direct.end();
      hv = d ? std::vector<int>{A, z} : std::vector<int>{A, v, z};
      if (q == v) std::reverse(hv.begin(), hv.end());
    } else {
      hv = {p, q};
    }
    m.paths[l] = host_path(g, hv);
  }
  return m;
}

// Index tables fixing the G_i / H_i order. Entry: pattern vertex v (0-based)
// and the two neighbours whose edges to v are deleted.
struct GIndex {
  int v, u, w;
};

}  // namespace

GraphPtr named_graph(const std::string& name) {
  const auto& cat = petersen_family();
  int i = cat.find(name);
  if (i >= 0) return cat.entries[i].graph;
  if (name == "K33") {
    static const GraphPtr g = std::make_shared<const Graph>(k33());
    return g;
  }
  if (name.size() == 2 && name[0] == 'K' && name[1] >= '1' && name[1] <= '9')
    return std::make_shared<const Graph>(complete_graph(name[1] - '0'));
  throw InputError("unknown graph " + name);
}

K331Subgraphs k331_subgraphs(const Graph& g) {
  if (g.nv() != 7 || g.ne() != 15 || g.apex < 0 || g.vertex_index("A") != g.apex)
    throw InputError("k331_subgraphs needs the labeled K331");
  for (int l = 0; l < 9; ++l)
    if (g.edge_index(kK33Labels[l]) < 0) throw InputError("k331_subgraphs needs the labeled K331");
  K331Subgraphs out;
  auto nbrs = [](int v) {
    std::vector<int> r;
    for (auto [p, q] : kK33Edges) {
      if (p == v) r.push_back(q);
      if (q == v) r.push_back(p);
    }
    std::sort(r.begin(), r.end());
    return r;
  };
  static const GIndex gi[18] = {{1, 0, 4}, {5, 2, 4}, {3, 0, 2}, {0, 3, 5}, {4, 1, 3}, {2, 1, 5},
                                {1, 2, 4}, {5, 0, 2}, {3, 0, 4}, {0, 1, 3}, {4, 1, 5}, {2, 3, 5},
                                {1, 0, 2}, {5, 0, 4}, {3, 2, 4}, {0, 1, 5}, {4, 3, 5}, {2, 1, 3}};
  static const int hv[6] = {1, 5, 3, 0, 4, 2};
  for (int i = 0; i < 18; ++i)
    out.G.push_back(apex_model(g, gi[i].v, {gi[i].u, gi[i].w}, "G" + std::to_string(i + 1)));
  for (int i = 0; i < 6; ++i)
    out.H.push_back(apex_model(g, hv[i], nbrs(hv[i]), "H" + std::to_string(i + 1)));
  out.K = identity_k33_model(g);
  return out;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream os;
  os << "graph " << g.name << ' ' << g.nv() << ' ' << g.ne() << '\n';
  for (auto& v : g.vertices) os << "vertex " << v << '\n';
  for (auto& e : g.edges)
    os << "edge " << e.label << ' ' << g.vertices[e.tail] << ' ' << g.vertices[e.head] << '\n';
  if (g.apex >= 0) os << "apex " << g.vertices[g.apex] << '\n';
  for (size_t i = 0; i < g.part.size(); ++i) os << "part " << g.vertices[i] << ' ' << g.part[i] << '\n';
  return os.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Graph g;
  int lineno = 0, want_v = -1, want_e = -1;
  bool header = false;
  auto fail = [&](const std::string& why) {
    throw InputError("line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "graph") {
      if (!(ls >> g.name >> want_v >> want_e)) fail("bad graph header");
      header = true;
      continue;
    }
    if (!header) fail("missing graph header");
    if (kw == "vertex") {
      std::string v;
      if (!(ls >> v)) fail("bad vertex line");
      if (g.vertex_index(v) >= 0) fail("duplicate vertex " + v);
      g.add_vertex(v);
    } else if (kw == "edge") {
      std::string lab, t, h;
      if (!(ls >> lab >> t >> h)) fail("bad edge line");
      int ti = g.vertex_index(t), hi = g.vertex_index(h);
      if (ti < 0 || hi < 0) fail("edge with unknown vertex");
      g.add_edge(ti, hi, lab);
    } else if (kw == "apex") {
      std::string v;
      if (!(ls >> v) || g.vertex_index(v) < 0) fail("bad apex line");
      g.apex = g.vertex_index(v);
    } else if (kw == "part") {
      std::string v;
      int p;
      if (!(ls >> v >> p) || g.vertex_index(v) < 0) fail("bad part line");
      if (g.part.empty()) g.part.assign(g.nv(), -1);
      g.part[g.vertex_index(v)] = p;
    } else {
      fail("unknown keyword " + kw);
    }
  }
  if (!header) throw InputError("empty graph file");
  if (g.nv() != want_v || g.ne() != want_e) throw InputError("vertex/edge counts disagree with header");
  g.validate();
  return g;
}

}  // namespace spg
