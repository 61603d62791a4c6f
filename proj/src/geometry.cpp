#include "spg/geometry.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <sstream>
#include <tuple>
#include <variant>

#include "spg/rng.hpp"

namespace spg {

namespace {

using Big = boost::multiprecision::checked_int256_t;

struct V2 {
  Big x, y;
};

Big cross2(const V2& a, const V2& b) { return a.x * b.y - a.y * b.x; }
V2 sub2(const V2& a, const V2& b) { return {a.x - b.x, a.y - b.y}; }
Big dot2(const V2& a, const V2& b) { return a.x * b.x + a.y * b.y; }

struct B3 {
  Big x, y, z;
};
B3 big(const P3& p) { return {p.x, p.y, p.z}; }
B3 sub3(const B3& a, const B3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
B3 cross3(const B3& a, const B3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Big dot3(const B3& a, const B3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
bool zero3(const B3& a) { return a.x == 0 && a.y == 0 && a.z == 0; }
Big coord(const B3& a, int k) { return k == 0 ? a.x : (k == 1 ? a.y : a.z); }

enum class Rel { Disjoint, Proper, Degenerate };

struct Hit {
  Rel rel = Rel::Disjoint;
  Big tn, un, den;  // den > 0 for Proper
};

// closed-segment relation in the plane
Hit rel2d(const V2& a1, const V2& a2, const V2& b1, const V2& b2) {
  Hit h;
  // bounding boxes first
  auto lo = [](const Big& p, const Big& q) { return p < q ? p : q; };
  auto hi = [](const Big& p, const Big& q) { return p < q ? q : p; };
  if (hi(a1.x, a2.x) < lo(b1.x, b2.x) || hi(b1.x, b2.x) < lo(a1.x, a2.x) ||
      hi(a1.y, a2.y) < lo(b1.y, b2.y) || hi(b1.y, b2.y) < lo(a1.y, a2.y))
    return h;
  V2 r = sub2(a2, a1), s = sub2(b2, b1), qp = sub2(b1, a1);
  Big den = cross2(r, s);
  if (den != 0) {
    Big tn = cross2(qp, s), un = cross2(qp, r);
    if (den < 0) den = -den, tn = -tn, un = -un;
    if (tn < 0 || tn > den || un < 0 || un > den) return h;
    h.rel = (tn > 0 && tn < den && un > 0 && un < den) ? Rel::Proper : Rel::Degenerate;
    h.tn = tn, h.un = un, h.den = den;
    return h;
  }
  if (cross2(qp, r) != 0) return h;  // parallel, distinct lines
  Big rr = dot2(r, r);
  Big p1 = dot2(qp, r), p2 = dot2(sub2(b2, a1), r);
  if (hi(p1, p2) < 0 || lo(p1, p2) > rr) return h;
  h.rel = Rel::Degenerate;
  return h;
}

bool seg3_intersect(const B3& a1, const B3& a2, const B3& b1, const B3& b2) {
  B3 r = sub3(a2, a1);
  if (dot3(cross3(r, sub3(b1, a1)), sub3(b2, a1)) != 0) return false;
  B3 n = cross3(r, sub3(b1, a1));
  if (zero3(n)) n = cross3(r, sub3(b2, a1));
  if (zero3(n)) {
    int k = r.x != 0 ? 0 : (r.y != 0 ? 1 : 2);
    Big x1 = coord(a1, k), x2 = coord(a2, k), y1 = coord(b1, k), y2 = coord(b2, k);
    return !(std::max(x1, x2) < std::min(y1, y2) || std::max(y1, y2) < std::min(x1, x2));
  }
  Big ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  int drop = (ax >= ay && ax >= az) ? 0 : (ay >= az ? 1 : 2);
  auto flat = [drop](const B3& p) {
    if (drop == 0) return V2{p.y, p.z};
    if (drop == 1) return V2{p.x, p.z};
    return V2{p.x, p.y};
  };
  return rel2d(flat(a1), flat(a2), flat(b1), flat(b2)).rel != Rel::Disjoint;
}

struct Seg {
  int edge = 0, idx = 0;
  int pa = 0, pb = 0;  // point ids
  P3 A, B;
};

std::vector<Seg> segments(const Embedding& em) {
  std::vector<Seg> out;
  int next_id = em.graph->nv();
  for (int e = 0; e < em.graph->ne(); ++e) {
    auto pl = em.polyline(e);
    std::vector<int> ids;
    ids.push_back(em.graph->edges[e].tail);
    for (size_t i = 1; i + 1 < pl.size(); ++i) ids.push_back(next_id++);
    ids.push_back(em.graph->edges[e].head);
    for (size_t i = 0; i + 1 < pl.size(); ++i)
      out.push_back({e, static_cast<int>(i), ids[i], ids[i + 1], pl[i], pl[i + 1]});
  }
  return out;
}

int shared_point(const Seg& s, const Seg& t) {
  if (s.pa == t.pa || s.pa == t.pb) return s.pa;
  if (s.pb == t.pa || s.pb == t.pb) return s.pb;
  return -1;
}

std::string seg_name(const Embedding& em, const Seg& s) {
  return em.graph->edges[s.edge].label + "#" + std::to_string(s.idx);
}

}  // namespace

std::vector<P3> Embedding::polyline(int e) const {
  std::vector<P3> pl;
  pl.push_back(pos[graph->edges[e].tail]);
  if (!bends.empty()) pl.insert(pl.end(), bends[e].begin(), bends[e].end());
  pl.push_back(pos[graph->edges[e].head]);
  return pl;
}

bool Embedding::linear() const {
  return std::all_of(bends.begin(), bends.end(), [](auto& b) { return b.empty(); });
}

std::optional<std::string> embedding_defect(const Embedding& em) {
  if (static_cast<int>(em.pos.size()) != em.graph->nv()) return "vertex count mismatch";
  if (!em.bends.empty() && static_cast<int>(em.bends.size()) != em.graph->ne())
    return "bend list count mismatch";
  auto segs = segments(em);
  std::set<std::tuple<I64, I64, I64>> pts;
  size_t npts = em.pos.size();
  for (auto& p : em.pos) pts.insert({p.x, p.y, p.z});
  for (auto& b : em.bends)
    for (auto& p : b) pts.insert({p.x, p.y, p.z}), ++npts;
  if (pts.size() != npts) return "two points coincide";
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      const Seg &s = segs[i], &t = segs[j];
      int sp = shared_point(s, t);
      if (sp >= 0) {
        P3 P = (s.pa == sp) ? s.A : s.B;
        P3 A = (s.pa == sp) ? s.B : s.A;
        P3 B = (t.pa == sp) ? t.B : t.A;
        B3 u = sub3(big(A), big(P)), v = sub3(big(B), big(P));
        if (zero3(cross3(u, v)) && dot3(u, v) > 0)
          return "segments " + seg_name(em, s) + " and " + seg_name(em, t) + " overlap";
      } else if (seg3_intersect(big(s.A), big(s.B), big(t.A), big(t.B))) {
        return "segments " + seg_name(em, s) + " and " + seg_name(em, t) + " meet";
      }
    }
  }
  return std::nullopt;
}

Embedding random_linear_embedding(GraphPtr g, I64 bound, std::uint64_t seed) {
  return random_polygonal_embedding(std::move(g), bound, 0, seed);
}

Embedding random_polygonal_embedding(GraphPtr g, I64 bound, int bends, std::uint64_t seed) {
  if (bound < 1) throw InputError("bound must be positive");
  Rng rng(sub_seed(seed, seed_tag::embedding));
  auto draw = [&] { return P3{rng.range(-bound, bound), rng.range(-bound, bound), rng.range(-bound, bound)}; };
  Embedding em;
  em.graph = g;
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    em.pos.assign(g->nv(), {});
    for (auto& p : em.pos) p = draw();
    em.bends.assign(bends > 0 ? g->ne() : 0, {});
    for (auto& b : em.bends)
      for (int k = 0; k < bends; ++k) b.push_back(draw());
    if (!embedding_defect(em)) return em;
  }
  throw GeometryError("no valid embedding of " + g->name + " after " +
                      std::to_string(kResampleLimit) + " samples; bound " + std::to_string(bound) +
                      " is too small");
}

namespace {

Big orient3(const B3& a, const B3& b, const B3& c, const B3& d) {
  return dot3(cross3(sub3(b, a), sub3(c, a)), sub3(d, a));
}

int sgn(const Big& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

bool segment_meets_triangle(const P3& a0, const P3& b0, const P3& p0, const P3& q0, const P3& r0) {
  B3 a = big(a0), b = big(b0), p = big(p0), q = big(q0), r = big(r0);
  B3 n = cross3(sub3(q, p), sub3(r, p));
  if (zero3(n)) return true;  // degenerate triangle: refuse
  Big ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  int drop = (ax >= ay && ax >= az) ? 0 : (ay >= az ? 1 : 2);
  auto flat = [drop](const B3& v) {
    if (drop == 0) return V2{v.y, v.z};
    if (drop == 1) return V2{v.x, v.z};
    return V2{v.x, v.y};
  };
  V2 P = flat(p), Q = flat(q), R = flat(r);
  auto inside = [&](const B3& v) {
    V2 X = flat(v);
    int s1 = sgn(cross2(sub2(Q, P), sub2(X, P)));
    int s2 = sgn(cross2(sub2(R, Q), sub2(X, Q)));
    int s3 = sgn(cross2(sub2(P, R), sub2(X, R)));
    return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
  };
  int oa = sgn(dot3(n, sub3(a, p))), ob = sgn(dot3(n, sub3(b, p)));
  if (oa == 0 && ob == 0) {
    if (inside(a) || inside(b)) return true;
    V2 A = flat(a), B = flat(b);
    return rel2d(A, B, P, Q).rel != Rel::Disjoint || rel2d(A, B, Q, R).rel != Rel::Disjoint ||
           rel2d(A, B, R, P).rel != Rel::Disjoint;
  }
  if (oa * ob > 0) return false;
  if (oa == 0) return inside(a);
  if (ob == 0) return inside(b);
  int s1 = sgn(orient3(a, b, p, q)), s2 = sgn(orient3(a, b, q, r)), s3 = sgn(orient3(a, b, r, p));
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

P3 direction_candidate(int k) {
  if (k == 0) return {0, 0, 1};
  return {1, k, static_cast<I64>(k) * k};
}

namespace {

struct RawCrossing {
  int s, t;  // segment indices
  Big tn, un, den;
};

// Diagram on success, witness text on failure
std::variant<Diagram, std::string> try_project(const Embedding& em, const std::vector<Seg>& segs,
                                               const P3& d) {
  B3 D = big(d);
  if (zero3(D)) return std::string("zero direction");
  // basis of the plane orthogonal to d
  I64 ax = std::llabs(d.x), ay = std::llabs(d.y), az = std::llabs(d.z);
  B3 e = (ax <= ay && ax <= az) ? B3{1, 0, 0} : (ay <= az ? B3{0, 1, 0} : B3{0, 0, 1});
  B3 u = cross3(D, e);
  B3 w = cross3(D, u);
  auto proj = [&](const P3& p) { return V2{dot3(u, big(p)), dot3(w, big(p))}; };
  std::vector<V2> A2(segs.size()), B2(segs.size());
  for (size_t i = 0; i < segs.size(); ++i) {
    A2[i] = proj(segs[i].A);
    B2[i] = proj(segs[i].B);
    if (A2[i].x == B2[i].x && A2[i].y == B2[i].y)
      return "segment " + seg_name(em, segs[i]) + " is parallel to the direction";
  }
  std::vector<RawCrossing> raw;
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      int sp = shared_point(segs[i], segs[j]);
      if (sp >= 0) {
        V2 P = segs[i].pa == sp ? A2[i] : B2[i];
        V2 a = segs[i].pa == sp ? B2[i] : A2[i];
        V2 b = segs[j].pa == sp ? B2[j] : A2[j];
        V2 da = sub2(a, P), db = sub2(b, P);
        if (cross2(da, db) == 0 && dot2(da, db) > 0)
          return "projections of " + seg_name(em, segs[i]) + " and " + seg_name(em, segs[j]) +
                 " overlap";
        continue;
      }
      Hit h = rel2d(A2[i], B2[i], A2[j], B2[j]);
      if (h.rel == Rel::Degenerate)
        return "projections of " + seg_name(em, segs[i]) + " and " + seg_name(em, segs[j]) +
               " touch";
      if (h.rel == Rel::Proper)
        raw.push_back({static_cast<int>(i), static_cast<int>(j), h.tn, h.un, h.den});
    }
  }
  Diagram dia;
  dia.graph = em.graph;
  dia.direction = {d.x, d.y, d.z};
  struct Key {
    int seg;
    Big num, den;
    int cid, strand;
  };
  std::vector<std::vector<Key>> along(em.graph->ne());
  for (auto& rc : raw) {
    const Seg &s = segs[rc.s], &t = segs[rc.t];
    Big ds1 = dot3(big(s.A), D), ds2 = dot3(big(s.B), D);
    Big dt1 = dot3(big(t.A), D), dt2 = dot3(big(t.B), D);
    Big depth_s = ds1 * rc.den + rc.tn * (ds2 - ds1);
    Big depth_t = dt1 * rc.den + rc.un * (dt2 - dt1);
    if (depth_s == depth_t)
      throw GeometryError("segments " + seg_name(em, s) + " and " + seg_name(em, t) + " meet");
    Crossing c;
    c.edge = {s.edge, t.edge};
    c.seg = {s.idx, t.idx};
    c.over = depth_s > depth_t ? 0 : 1;
    B3 vs = sub3(big(s.B), big(s.A)), vt = sub3(big(t.B), big(t.A));
    Big det = c.over == 0 ? dot3(cross3(vs, vt), D) : dot3(cross3(vt, vs), D);
    c.sign = det > 0 ? 1 : -1;
    int cid = static_cast<int>(dia.crossings.size());
    dia.crossings.push_back(c);
    along[s.edge].push_back({s.idx, rc.tn, rc.den, cid, 0});
    along[t.edge].push_back({t.idx, rc.un, rc.den, cid, 1});
  }
  dia.passes.assign(em.graph->ne(), {});
  for (int e = 0; e < em.graph->ne(); ++e) {
    auto& ks = along[e];
    auto less = [](const Key& a, const Key& b) {
      if (a.seg != b.seg) return a.seg < b.seg;
      return a.num * b.den < b.num * a.den;
    };
    std::sort(ks.begin(), ks.end(), less);
    for (size_t i = 0; i + 1 < ks.size(); ++i)
      if (!less(ks[i], ks[i + 1]))
        return "triple point on edge " + em.graph->edges[e].label;
    for (auto& k : ks) dia.passes[e].push_back({k.cid, k.strand});
  }
  return dia;
}

}  // namespace

Diagram project(const Embedding& em, std::optional<P3> dir) {
  if (auto defect = embedding_defect(em)) throw GeometryError("not an embedding: " + *defect);
  auto segs = segments(em);
  if (dir) {
    auto r = try_project(em, segs, *dir);
    if (auto* w = std::get_if<std::string>(&r)) throw NonGenericDirection(*w);
    return std::get<Diagram>(std::move(r));
  }
  for (int k = 0; k < 60; ++k) {
    auto r = try_project(em, segs, direction_candidate(k));
    if (auto* dia = std::get_if<Diagram>(&r)) return std::move(*dia);
  }
  throw GeometryError("no generic direction among the first 60 candidates");
}

std::string embedding_to_text(const Embedding& em) {
  std::ostringstream os;
  os << "embedding " << em.graph->name << '\n';
  for (int v = 0; v < em.graph->nv(); ++v)
    os << "vertex " << em.graph->vertices[v] << ' ' << em.pos[v].x << ' ' << em.pos[v].y << ' '
       << em.pos[v].z << '\n';
  for (size_t e = 0; e < em.bends.size(); ++e)
    for (auto& p : em.bends[e])
      os << "bend " << em.graph->edges[e].label << ' ' << p.x << ' ' << p.y << ' ' << p.z << '\n';
  return os.str();
}

Embedding embedding_from_text(const std::string& text, GraphPtr (*resolve)(const std::string&)) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  Embedding em;
  std::vector<char> have;
  auto fail = [&](const std::string& why) {
    throw InputError("line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    if (kw == "embedding") {
      std::string name;
      if (em.graph) fail("second embedding header");
      if (!(ls >> name)) fail("bad embedding header");
      em.graph = resolve(name);
      if (!em.graph) fail("unknown graph " + name);
      em.pos.assign(em.graph->nv(), {});
      have.assign(em.graph->nv(), 0);
      continue;
    }
    if (!em.graph) fail("missing embedding header");
    std::string label;
    P3 p;
    if (!(ls >> label >> p.x >> p.y >> p.z)) fail("expected <label> <x> <y> <z>");
    std::string extra;
    if (ls >> extra) fail("trailing text");
    if (kw == "vertex") {
      int v = em.graph->vertex_index(label);
      if (v < 0) fail("unknown vertex " + label);
      if (have[v]) fail("vertex " + label + " given twice");
      have[v] = 1;
      em.pos[v] = p;
    } else if (kw == "bend") {
      int e = em.graph->edge_index(label);
      if (e < 0) fail("unknown edge " + label);
      if (em.bends.empty()) em.bends.assign(em.graph->ne(), {});
      em.bends[e].push_back(p);
    } else {
      fail("unknown keyword " + kw);
    }
  }
  if (!em.graph) throw InputError("empty embedding file");
  for (int v = 0; v < em.graph->nv(); ++v)
    if (!have[v]) throw InputError("vertex " + em.graph->vertices[v] + " has no coordinates");
  return em;
}

}  // namespace spg
