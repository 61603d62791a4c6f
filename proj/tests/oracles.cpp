#include "oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>

#include "spg/geometry.hpp"

namespace oracle {

using spg::BigInt;
using spg::GaussCode;
using Rational = boost::multiprecision::cpp_rational;

namespace {

BigInt det_bareiss(std::vector<std::vector<BigInt>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

long long alexander_a2(const GaussCode& code) {
  if (code.comps.size() != 1) throw std::invalid_argument("alexander_a2 takes a knot code");
  const auto& w = code.comps[0];
  int n = static_cast<int>(w.size()) / 2;
  if (n == 0) return 0;
  std::map<int, int> idx;
  for (auto& t : w)
    if (!idx.count(t.id)) idx.emplace(t.id, static_cast<int>(idx.size()));
  // arcs run from one under-pass to the next; the arc through the start wraps
  std::vector<int> over(n), in(n), out(n), sign(n);
  int cur = 0;
  for (auto& t : w) {
    int c = idx[t.id];
    sign[c] = t.sign;
    if (t.over) {
      over[c] = cur % n;
    } else {
      in[c] = cur % n;
      ++cur;
      out[c] = cur % n;
    }
  }
  // D(t) has degree < n; sample it at t = 2..n+1 and interpolate
  std::vector<Rational> xs, ys;
  for (int s = 0; s < n; ++s) {
    BigInt t = s + 2;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
    for (int c = 0; c < n; ++c) {
      m[c][over[c]] += 1 - t;
      if (sign[c] > 0) {
        m[c][in[c]] += t;
        m[c][out[c]] -= 1;
      } else {
        m[c][out[c]] += t;
        m[c][in[c]] -= 1;
      }
    }
    m.pop_back();
    for (auto& row : m) row.pop_back();
    xs.push_back(Rational(t));
    ys.push_back(Rational(det_bareiss(m)));
  }
  // Newton divided differences, then expand to monomial coefficients
  std::vector<Rational> dd = ys;
  for (int j = 1; j < n; ++j)
    for (int i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rational> poly(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    // poly = poly * (x - xs[i]) + dd[i]
    std::vector<Rational> next(n, 0);
    for (int k = 0; k < n; ++k) {
      if (poly[k] == 0) continue;
      if (k + 1 < n) next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[i];
    }
    next[0] += dd[i];
    poly = next;
  }
  int lo = -1, hi = -1;
  BigInt at1 = 0;
  std::vector<BigInt> c(n);
  for (int k = 0; k < n; ++k) {
    if (denominator(poly[k]) != 1) throw std::logic_error("non-integral Alexander coefficient");
    c[k] = numerator(poly[k]);
    at1 += c[k];
    if (c[k] != 0) {
      if (lo < 0) lo = k;
      hi = k;
    }
  }
  if (at1 != 1 && at1 != -1) throw std::logic_error("Alexander polynomial with |D(1)| != 1");
  if ((hi - lo) % 2) throw std::logic_error("odd Alexander span");
  BigInt sum = 0;
  for (int k = lo; k <= hi; ++k) sum += c[k] * (2 * k - lo - hi) * (2 * k - lo - hi);
  sum *= at1;  // normalize so Delta(1) = 1
  // Delta''(1) = sum_k c_k m^2 with m = k - centre; a2 = Delta''(1) / 2
  if (sum % 8 != 0) throw std::logic_error("Alexander second moment not divisible by 8");
  return static_cast<long long>(sum / 8);
}

namespace {

std::vector<BigInt> poly_add(std::vector<BigInt> a, const std::vector<BigInt>& b, int shift, int sgn) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += sgn * b[i];
  return a;
}

std::vector<BigInt> skein(const GaussCode& c) {
  // last crossing that is first met from below, walking the components in order
  std::map<int, bool> seen;
  int bad = -1, bad_sign = 0;
  for (auto& comp : c.comps)
    for (auto& t : comp) {
      if (seen.count(t.id)) continue;
      seen[t.id] = true;
      if (!t.over) bad = t.id, bad_sign = t.sign;
    }
  if (bad < 0) return {c.comps.size() == 1 ? BigInt(1) : BigInt(0)};
  auto sw = skein(spg::switch_raw(c, bad));
  auto sm = skein(spg::smooth_raw(c, bad));
  // D+ = D- + z D0
  return poly_add(sw, sm, 1, bad_sign);
}

}  // namespace

std::vector<BigInt> conway_polynomial(const GaussCode& code) {
  auto p = skein(code);
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

long long skein_a2(const GaussCode& code) {
  auto p = conway_polynomial(code);
  return p.size() > 2 ? static_cast<long long>(p[2]) : 0;
}

std::vector<std::set<int>> brute_cycles(const spg::Graph& g) {
  int m = g.ne();
  if (m > 24) throw std::invalid_argument("too many edges for subset search");
  std::vector<std::set<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> deg(g.nv(), 0);
    std::vector<int> es;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1) {
        ++deg[g.edges[e].tail];
        ++deg[g.edges[e].head];
        es.push_back(e);
      }
    bool ok = es.size() >= 3;
    for (int d : deg)
      if (d != 0 && d != 2) ok = false;
    if (!ok) continue;
    // connected: flood from one endpoint along chosen edges
    std::vector<bool> reached(g.nv(), false);
    std::vector<int> stack{g.edges[es[0]].tail};
    reached[stack[0]] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : es) {
        int w = g.edges[e].tail == v ? g.edges[e].head : g.edges[e].head == v ? g.edges[e].tail : -1;
        if (w >= 0 && !reached[w]) reached[w] = true, stack.push_back(w);
      }
    }
    for (int v = 0; v < g.nv(); ++v)
      if (deg[v] && !reached[v]) ok = false;
    if (ok) out.emplace_back(es.begin(), es.end());
  }
  return out;
}

std::vector<std::pair<std::set<int>, std::set<int>>> brute_patterns(const spg::Graph& g) {
  auto cs = brute_cycles(g);
  auto verts = [&](const std::set<int>& es) {
    std::set<int> v;
    for (int e : es) v.insert(g.edges[e].tail), v.insert(g.edges[e].head);
    return v;
  };
  std::vector<std::pair<std::set<int>, std::set<int>>> out;
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j) {
      auto a = verts(cs[i]), b = verts(cs[j]);
      bool disjoint = true;
      for (int v : a)
        if (b.count(v)) disjoint = false;
      if (disjoint) out.push_back({cs[i], cs[j]});
    }
  return out;
}

GaussCode braid_closure(int strands, const std::vector<int>& word) {
  // generator +-(i+1) swaps positions i, i+1; on +, the strand at i goes over
  std::vector<std::vector<spg::GToken>> rows(strands);
  std::vector<int> at(strands);  // position -> strand starting there
  for (int p = 0; p < strands; ++p) at[p] = p;
  std::vector<int> top(strands);
  for (size_t k = 0; k < word.size(); ++k) {
    int i = std::abs(word[k]) - 1, sg = word[k] > 0 ? 1 : -1;
    int id = static_cast<int>(k) + 1;
    bool left_over = sg > 0;
    rows[at[i]].push_back({id, left_over, sg});
    rows[at[i + 1]].push_back({id, !left_over, sg});
    std::swap(at[i], at[i + 1]);
  }
  for (int p = 0; p < strands; ++p) top[at[p]] = p;  // strand -> exit position
  GaussCode out;
  std::vector<bool> used(strands, false);
  for (int s0 = 0; s0 < strands; ++s0) {
    if (used[s0]) continue;
    std::vector<spg::GToken> comp;
    for (int s = s0; !used[s]; s = top[s]) {
      used[s] = true;
      comp.insert(comp.end(), rows[s].begin(), rows[s].end());
    }
    out.comps.push_back(comp);
  }
  return out;
}

std::vector<GaussCode> random_knot_codes(int count, int max_crossings, std::uint64_t seed) {
  auto tri = std::make_shared<const spg::Graph>(spg::complete_graph(3));
  spg::Cycle c = spg::enumerate_cycles(*tri).at(0);
  std::vector<GaussCode> out;
  std::mt19937_64 gen(seed);
  for (std::uint64_t s = seed; static_cast<int>(out.size()) < count; ++s) {
    if (s % 2) {
      int bends = 1 + static_cast<int>(s % 4);
      auto em = spg::random_polygonal_embedding(tri, 6, bends, s);
      GaussCode k = spg::cycle_code(spg::project(em), c);
      if (k.crossing_count() <= max_crossings) out.push_back(k);
    } else {
      int strands = 3 + static_cast<int>(gen() % 2);
      int len = 1 + static_cast<int>(gen() % max_crossings);
      std::vector<int> w;
      for (int k = 0; k < len; ++k) {
        int g = 1 + static_cast<int>(gen() % (strands - 1));
        w.push_back(gen() % 2 ? g : -g);
      }
      GaussCode k = braid_closure(strands, w);
      if (k.comps.size() == 1) out.push_back(k);
    }
  }
  return out;
}

}  // namespace oracle
