#include "spg/invariants.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "spg/rng.hpp"

namespace spg {

long long linking_number(const GaussCode& code) {
  if (code.comps.size() != 2) throw InputError("linking number needs exactly 2 components");
  std::map<int, int> first;  // id -> component of first sighting
  long long sum = 0;
  for (int k = 0; k < 2; ++k)
    for (auto& t : code.comps[k]) {
      auto it = first.find(t.id);
      if (it == first.end())
        first[t.id] = k;
      else if (it->second != k)
        sum += t.sign;
    }
  if (sum % 2 != 0) throw ConsistencyError("odd inter-component sign sum");
  return sum / 2;
}

namespace {

using Knot = std::vector<GToken>;

std::shared_mutex memo_mu;
std::unordered_map<std::string, long long> memo;

// index into k of the first crossing met first as an under-pass, or -1
int first_bad(const Knot& k) {
  std::vector<int> seen;
  for (size_t i = 0; i < k.size(); ++i) {
    int id = k[i].id;
    if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
    if (!k[i].over) return static_cast<int>(i);
    seen.push_back(id);
  }
  return -1;
}

std::vector<int> all_bad(const Knot& k) {
  std::vector<int> seen, out;
  for (size_t i = 0; i < k.size(); ++i) {
    int id = k[i].id;
    if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
    seen.push_back(id);
    if (!k[i].over) out.push_back(static_cast<int>(i));
  }
  return out;
}

long long smoothing_lk(const Knot& k, int id) {
  GaussCode s = smooth_raw(GaussCode{{k}}, id);
  return linking_number(s);
}

Knot one_component(const GaussCode& c) {
  if (c.comps.size() != 1) throw InputError("a2 needs a one-component code");
  return c.comps[0];
}

}  // namespace

long long a2(const GaussCode& code) {
  Knot cur = one_component(code);
  std::vector<std::string> keys;
  std::vector<long long> partial;
  long long total = 0, base = 0;
  while (!cur.empty()) {
    std::string key = to_text(canonical(GaussCode{{cur}}));
    {
      std::shared_lock lock(memo_mu);
      auto it = memo.find(key);
      if (it != memo.end()) {
        base = it->second;
        break;
      }
    }
    keys.push_back(key);
    partial.push_back(total);
    int b = first_bad(cur);
    if (b < 0) break;  // descending from the basepoint: unknot
    const GToken& t = cur[b];
    total += t.sign * smoothing_lk(cur, t.id);
    cur = switch_raw(GaussCode{{cur}}, t.id).comps[0];
  }
  long long result = total + base;
  std::unique_lock lock(memo_mu);
  for (size_t i = 0; i < keys.size(); ++i) memo.emplace(keys[i], result - partial[i]);
  return result;
}

long long a2_randomized(const GaussCode& code, std::uint64_t seed) {
  Knot cur = one_component(code);
  if (cur.empty()) return 0;
  Rng rng(sub_seed(seed, seed_tag::strategy));
  std::rotate(cur.begin(), cur.begin() + rng.range(0, static_cast<std::int64_t>(cur.size()) - 1), cur.end());
  long long total = 0;
  for (;;) {
    auto bad = all_bad(cur);
    if (bad.empty()) return total;
    const GToken t = cur[bad[rng.range(0, static_cast<std::int64_t>(bad.size()) - 1)]];
    total += t.sign * smoothing_lk(cur, t.id);
    cur = switch_raw(GaussCode{{cur}}, t.id).comps[0];
  }
}

std::size_t a2_cache_size() {
  std::shared_lock lock(memo_mu);
  return memo.size();
}

void a2_cache_clear() {
  std::unique_lock lock(memo_mu);
  memo.clear();
}

std::vector<std::pair<std::string, long long>> a2_cache_dump() {
  std::shared_lock lock(memo_mu);
  std::vector<std::pair<std::string, long long>> out(memo.begin(), memo.end());
  std::sort(out.begin(), out.end());
  return out;
}

long long a2_of_cycle(const Diagram& d, const Cycle& c) { return a2(cycle_code(d, c)); }

long long lk_of_pattern(const Diagram& d, const LinkPattern& l) {
  return linking_number(link_code(d, l));
}

std::vector<std::pair<int, int>> wu_basis(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < g.ne(); ++i)
    for (int j = i + 1; j < g.ne(); ++j)
      if (g.edges_disjoint(i, j)) out.push_back({i, j});
  return out;
}

WuCochain wu_cochain(const Diagram& d) {
  WuCochain c;
  c.graph = d.graph;
  c.basis = wu_basis(*d.graph);
  c.value.assign(c.basis.size(), 0);
  std::map<std::pair<int, int>, int> pos;
  for (size_t i = 0; i < c.basis.size(); ++i) pos[c.basis[i]] = static_cast<int>(i);
  for (auto& x : d.crossings) {
    auto key = std::minmax(x.edge[0], x.edge[1]);
    auto it = pos.find({key.first, key.second});
    if (it != pos.end()) c.value[it->second] += x.sign;
  }
  return c;
}

int CoboundaryLattice::basis_pos(int e1, int e2) const {
  auto key = std::make_pair(std::min(e1, e2), std::max(e1, e2));
  auto it = std::lower_bound(basis.begin(), basis.end(), key);
  if (it == basis.end() || *it != key) return -1;
  return static_cast<int>(it - basis.begin());
}

int CoboundaryLattice::row_of(int edge, int vertex) const {
  for (size_t i = 0; i < row_index.size(); ++i)
    if (row_index[i] == std::make_pair(edge, vertex)) return static_cast<int>(i);
  return -1;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void row_hnf(std::vector<std::vector<BigInt>>& a, std::vector<int>& pivots) {
  size_t m = a.size(), n = m ? a[0].size() : 0, r = 0;
  pivots.clear();
  for (size_t col = 0; col < n && r < m; ++col) {
    for (;;) {
      size_t p = m;
      for (size_t i = r; i < m; ++i)
        if (a[i][col] != 0 && (p == m || abs(a[i][col]) < abs(a[p][col]))) p = i;
      if (p == m) break;
      std::swap(a[p], a[r]);
      bool clean = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        BigInt q = a[i][col] / a[r][col];
        for (size_t j = col; j < n; ++j) a[i][j] -= q * a[r][j];
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= m || a[r][col] == 0) continue;
    if (a[r][col] < 0)
      for (size_t j = col; j < n; ++j) a[r][j] = -a[r][j];
    for (size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(a[i][col], a[r][col]);
      if (q != 0)
        for (size_t j = col; j < n; ++j) a[i][j] -= q * a[r][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  a.resize(r);
}

}  // namespace

CoboundaryLattice coboundary_lattice(GraphPtr gp) {
  const Graph& g = *gp;
  CoboundaryLattice lat;
  lat.graph = gp;
  lat.basis = wu_basis(g);
  for (int i = 0; i < g.ne(); ++i) {
    for (int v = 0; v < g.nv(); ++v) {
      if (g.incident(i, v)) continue;
      std::vector<int> row(lat.basis.size(), 0);
      for (int j = 0; j < g.ne(); ++j) {
        if (!g.edges_disjoint(i, j)) continue;
        int s = (g.edges[j].tail == v) - (g.edges[j].head == v);
        if (s) row[lat.basis_pos(i, j)] += s;
      }
      lat.rows.push_back(row);
      lat.row_index.push_back({i, v});
    }
  }
  for (auto& r : lat.rows) lat.hnf.emplace_back(r.begin(), r.end());
  row_hnf(lat.hnf, lat.pivots);
  return lat;
}

WuClass wu_class(const WuCochain& c, const CoboundaryLattice& lat) {
  if (c.basis != lat.basis) throw InputError("cochain and lattice belong to different graphs");
  WuClass w;
  w.rep.assign(c.value.begin(), c.value.end());
  for (size_t i = 0; i < lat.pivots.size(); ++i) {
    int p = lat.pivots[i];
    BigInt q = floor_div(w.rep[p], lat.hnf[i][p]);
    if (q == 0) continue;
    for (size_t j = p; j < w.rep.size(); ++j) w.rep[j] -= q * lat.hnf[i][j];
  }
  return w;
}

bool wu_class_equal(const WuCochain& a, const WuCochain& b, const CoboundaryLattice& lat) {
  return wu_class(a, lat) == wu_class(b, lat);
}

WuRank wu_rank_both(GraphPtr g) {
  CoboundaryLattice lat = coboundary_lattice(g);
  WuRank r;
  r.matrix = static_cast<int>(lat.basis.size() - lat.pivots.size());
  long long E = g->ne(), V = g->nv(), b1 = E - V + 1, sq = 0;
  for (int v = 0; v < g->nv(); ++v) sq += static_cast<long long>(g->degree(v)) * g->degree(v);
  r.closed_form = static_cast<int>((b1 * b1 + b1 + 4 * E - sq) / 2);
  return r;
}

int wu_rank(GraphPtr g) {
  WuRank r = wu_rank_both(g);
  if (r.matrix != r.closed_form)
    throw ConsistencyError("wu rank mismatch on " + g->name + ": matrix " +
                           std::to_string(r.matrix) + ", closed form " +
                           std::to_string(r.closed_form));
  return r.matrix;
}

int wu_k33(const Diagram& d, const K33Model& m) {
  std::vector<std::pair<int, int>> lab(d.graph->ne(), {-1, 0});
  for (int l = 0; l < 9; ++l)
    for (auto& [e, f] : m.paths[l]) {
      if (e < 0 || e >= d.graph->ne()) throw InputError("model edge outside the diagram");
      lab[e] = {l, f ? 1 : -1};
    }
  int sum = 0;
  for (auto& x : d.crossings) {
    auto [la, oa] = lab[x.edge[0]];
    auto [lb, ob] = lab[x.edge[1]];
    if (la < 0 || lb < 0 || la == lb) continue;
    sum += k33_epsilon(la, lb) * oa * ob * x.sign;
  }
  return sum;
}

int wu_k33(const Diagram& d) { return wu_k33(d, identity_k33_model(*d.graph)); }

long long alpha_k33(const Diagram& d, const K33Model& m) {
  static const Graph pattern = k33();
  static const std::vector<Cycle> ham = enumerate_cycles(pattern, CycleFilter::hamiltonian());
  static const std::vector<Cycle> sq = enumerate_cycles(pattern, CycleFilter::length(4));
  long long s = 0;
  for (auto& c : ham) s += a2_of_cycle(d, m.pattern_cycle(*d.graph, c.verts));
  for (auto& c : sq) s -= a2_of_cycle(d, m.pattern_cycle(*d.graph, c.verts));
  return s;
}

long long alpha_k33(const Diagram& d) { return alpha_k33(d, identity_k33_model(*d.graph)); }

std::string wu_to_text(const WuCochain& c) {
  std::ostringstream os;
  os << "wu " << c.graph->name << '\n';
  for (size_t i = 0; i < c.basis.size(); ++i)
    if (c.value[i] != 0)
      os << "pair " << c.basis[i].first + 1 << ' ' << c.basis[i].second + 1 << ' ' << c.value[i]
         << '\n';
  return os.str();
}

std::string wu_class_to_text(const WuClass& w, const CoboundaryLattice& lat) {
  std::ostringstream os;
  os << "wu " << lat.graph->name << '\n';
  for (size_t i = 0; i < lat.basis.size(); ++i)
    if (w.rep[i] != 0)
      os << "pair " << lat.basis[i].first + 1 << ' ' << lat.basis[i].second + 1 << ' ' << w.rep[i]
         << '\n';
  return os.str();
}

}  // namespace spg
