#include "spg/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace spg {

RestrictedDiagram restrict_diagram(const Diagram& d, std::vector<int> edges) {
  const Graph& g = *d.graph;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (int e : edges)
    if (e < 0 || e >= g.ne()) throw InputError("restrict: edge not in the diagram's graph");

  RestrictedDiagram r;
  std::vector<int> vmap(g.nv(), -1), emap(g.ne(), -1);
  for (int e : edges) vmap[g.edges[e].tail] = vmap[g.edges[e].head] = 0;
  auto sub = std::make_shared<Graph>();
  sub->name = g.name + "|sub";
  for (int v = 0; v < g.nv(); ++v)
    if (vmap[v] == 0) {
      vmap[v] = sub->add_vertex(g.vertices[v]);
      r.host_vertex.push_back(v);
    }
  if (g.apex >= 0 && vmap[g.apex] >= 0) sub->apex = vmap[g.apex];
  for (int e : edges) {
    emap[e] = sub->add_edge(vmap[g.edges[e].tail], vmap[g.edges[e].head], g.edges[e].label);
    r.host_edge.push_back(e);
  }
  r.dia.graph = sub;
  r.dia.direction = d.direction;
  std::vector<int> cmap(d.crossings.size(), -1);
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    Crossing c = d.crossings[i];
    if (emap[c.edge[0]] < 0 || emap[c.edge[1]] < 0) continue;
    c.edge = {emap[c.edge[0]], emap[c.edge[1]]};
    cmap[i] = static_cast<int>(r.dia.crossings.size());
    r.dia.crossings.push_back(c);
  }
  r.dia.passes.assign(sub->ne(), {});
  for (int e : edges)
    for (auto [cid, s] : d.passes[e])
      if (cmap[cid] >= 0) r.dia.passes[emap[e]].push_back({cmap[cid], s});
  return r;
}

RestrictedDiagram restrict_diagram(const Diagram& d, const Cycle& c) {
  return restrict_diagram(d, c.edges);
}

RestrictedDiagram restrict_diagram(const Diagram& d, const LinkPattern& l) {
  std::vector<int> es = l.a.edges;
  es.insert(es.end(), l.b.edges.begin(), l.b.edges.end());
  return restrict_diagram(d, es);
}

K33Model remap_model(const K33Model& m, const RestrictedDiagram& r) {
  K33Model out = m;
  auto find_in = [](const std::vector<int>& v, int x) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw InputError("model is not contained in the restriction");
    return static_cast<int>(it - v.begin());
  };
  for (auto& b : out.branch) b = find_in(r.host_vertex, b);
  for (auto& p : out.paths)
    for (auto& [e, f] : p) e = find_in(r.host_edge, e);
  return out;
}

bool GToken::operator<(const GToken& o) const {
  if (id != o.id) return id < o.id;
  if (over != o.over) return over;  // O sorts first
  return sign < o.sign;
}

int GaussCode::crossing_count() const {
  int n = 0;
  for (auto& c : comps) n += static_cast<int>(c.size());
  return n / 2;
}

namespace {

using Comps = std::vector<std::vector<GToken>>;

Comps relabel(const Comps& in) {
  std::map<int, int> ids;
  Comps out = in;
  for (auto& comp : out)
    for (auto& t : comp) {
      auto it = ids.find(t.id);
      if (it == ids.end()) it = ids.emplace(t.id, static_cast<int>(ids.size()) + 1).first;
      t.id = it->second;
    }
  return out;
}

void rotations(const Comps& order, size_t k, Comps& cur, Comps& best, bool& have) {
  if (k == order.size()) {
    Comps cand = relabel(cur);
    if (!have || cand < best) best = std::move(cand), have = true;
    return;
  }
  const auto& comp = order[k];
  size_t n = std::max<size_t>(comp.size(), 1);
  for (size_t r = 0; r < n; ++r) {
    cur[k] = comp;
    if (!comp.empty()) std::rotate(cur[k].begin(), cur[k].begin() + r, cur[k].end());
    rotations(order, k + 1, cur, best, have);
  }
}

}  // namespace

GaussCode canonical(const GaussCode& c) {
  std::vector<int> perm(c.comps.size());
  std::iota(perm.begin(), perm.end(), 0);
  Comps best;
  bool have = false;
  do {
    Comps order;
    for (int i : perm) order.push_back(c.comps[i]);
    Comps cur(order.size());
    rotations(order, 0, cur, best, have);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best};
}

std::string to_text(const GaussCode& c) {
  std::string s;
  for (size_t k = 0; k < c.comps.size(); ++k) {
    if (k) s += " | ";
    if (c.comps[k].empty()) s += "()";
    for (size_t i = 0; i < c.comps[k].size(); ++i) {
      const GToken& t = c.comps[k][i];
      if (i) s += ',';
      s += (t.sign > 0 ? '+' : '-');
      s += std::to_string(t.id);
      s += (t.over ? 'O' : 'U');
    }
  }
  return s;
}

GaussCode parse_gauss(const std::string& text) {
  GaussCode g;
  std::stringstream ss(text);
  std::string part;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(ss, part, '|')) {
    part = trim(part);
    std::vector<GToken> comp;
    if (!part.empty() && part != "()") {
      std::stringstream ts(part);
      std::string tok;
      while (std::getline(ts, tok, ',')) {
        tok = trim(tok);
        if (tok.size() < 3 || (tok[0] != '+' && tok[0] != '-') ||
            (tok.back() != 'O' && tok.back() != 'U'))
          throw InputError("bad Gauss token '" + tok + "'");
        GToken t;
        t.sign = tok[0] == '+' ? 1 : -1;
        t.over = tok.back() == 'O';
        try {
          t.id = std::stoi(tok.substr(1, tok.size() - 2));
        } catch (...) {
          throw InputError("bad Gauss token '" + tok + "'");
        }
        comp.push_back(t);
      }
    }
    g.comps.push_back(comp);
  }
  if (text.empty()) g.comps.push_back({});
  check_gauss(g);
  return g;
}

void check_gauss(const GaussCode& c) {
  std::map<int, std::vector<GToken>> seen;
  for (auto& comp : c.comps)
    for (auto& t : comp) seen[t.id].push_back(t);
  for (auto& [id, ts] : seen) {
    if (ts.size() != 2 || ts[0].over == ts[1].over || ts[0].sign != ts[1].sign)
      throw InputError("crossing " + std::to_string(id) + " is malformed in the Gauss code");
  }
}

namespace {

std::vector<GToken> walk(const Diagram& d, const Cycle& c, const std::vector<int>& dir) {
  std::vector<GToken> out;
  for (size_t i = 0; i < c.edges.size(); ++i) {
    int e = c.edges[i];
    auto ps = d.passes[e];
    if (!c.fwd[i]) std::reverse(ps.begin(), ps.end());
    for (auto [cid, s] : ps) {
      const Crossing& x = d.crossings[cid];
      int d0 = dir[x.edge[0]], d1 = dir[x.edge[1]];
      if (!d0 || !d1) continue;
      out.push_back({cid, x.over == s, x.sign * d0 * d1});
    }
  }
  return out;
}

std::vector<int> directions(const Diagram& d, std::initializer_list<const Cycle*> cs) {
  std::vector<int> dir(d.graph->ne(), 0);
  for (const Cycle* c : cs)
    for (size_t i = 0; i < c->edges.size(); ++i) dir[c->edges[i]] = c->fwd[i] ? 1 : -1;
  return dir;
}

}  // namespace

GaussCode cycle_code(const Diagram& d, const Cycle& c) {
  auto dir = directions(d, {&c});
  return {{walk(d, c, dir)}};
}

GaussCode link_code(const Diagram& d, const LinkPattern& l) {
  auto dir = directions(d, {&l.a, &l.b});
  return {{walk(d, l.a, dir), walk(d, l.b, dir)}};
}

GaussCode cycle_diagram(const Diagram& d, const Cycle& c) { return canonical(cycle_code(d, c)); }
GaussCode link_diagram(const Diagram& d, const LinkPattern& l) { return canonical(link_code(d, l)); }

GaussCode switch_raw(const GaussCode& c, int id) {
  GaussCode out = c;
  int hits = 0;
  for (auto& comp : out.comps)
    for (auto& t : comp)
      if (t.id == id) t.over = !t.over, t.sign = -t.sign, ++hits;
  if (hits != 2) throw InputError("crossing " + std::to_string(id) + " is not in the code");
  return out;
}

GaussCode smooth_raw(const GaussCode& c, int id) {
  std::vector<std::pair<size_t, size_t>> at;
  for (size_t k = 0; k < c.comps.size(); ++k)
    for (size_t i = 0; i < c.comps[k].size(); ++i)
      if (c.comps[k][i].id == id) at.push_back({k, i});
  if (at.size() != 2) throw InputError("crossing " + std::to_string(id) + " is not in the code");
  GaussCode out = c;
  auto [k1, p] = at[0];
  auto [k2, q] = at[1];
  if (k1 == k2) {
    const auto& comp = c.comps[k1];
    std::vector<GToken> X(comp.begin() + p + 1, comp.begin() + q);
    std::vector<GToken> Y(comp.begin() + q + 1, comp.end());
    Y.insert(Y.end(), comp.begin(), comp.begin() + p);
    out.comps[k1] = X;
    out.comps.insert(out.comps.begin() + k1 + 1, Y);
  } else {
    const auto& A = c.comps[k1];
    const auto& B = c.comps[k2];
    std::vector<GToken> M(A.begin() + p + 1, A.end());
    M.insert(M.end(), A.begin(), A.begin() + p);
    M.insert(M.end(), B.begin() + q + 1, B.end());
    M.insert(M.end(), B.begin(), B.begin() + q);
    out.comps[k1] = M;
    out.comps.erase(out.comps.begin() + k2);
  }
  return out;
}

GaussCode switch_crossing(const GaussCode& c, int id) { return canonical(switch_raw(c, id)); }
GaussCode smooth_crossing(const GaussCode& c, int id) { return canonical(smooth_raw(c, id)); }

bool is_inter(const GaussCode& c, int id) {
  int first = -1;
  for (size_t k = 0; k < c.comps.size(); ++k)
    for (auto& t : c.comps[k])
      if (t.id == id) {
        if (first < 0)
          first = static_cast<int>(k);
        else
          return first != static_cast<int>(k);
      }
  return false;
}

}  // namespace spg
