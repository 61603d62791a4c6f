// Twist-parameterized K331 embedding. The K33 part is a hexagon in z=0 whose
// three diameters weave near the centre; A sits high above the centre. Box k
// is a finger of edge x that wraps |n_k| full turns around edge y.
#include <cstdlib>

#include "spg/geometry.hpp"

namespace spg {

GraphPtr k331_graph() {
  static const GraphPtr g = std::make_shared<const Graph>(k331());
  return g;
}

namespace {

struct Box {
  const char* x;  // finger owner
  const char* y;  // wrapped edge
  int px, py;     // per mille along the straight chord of x and y
};

// pairs b2c1 b1b2 b1c2 b1c5 b1b3 b3c6 b3c3 b2b3 b2c4
constexpr Box kBoxes[9] = {
    {"b2", "c1", 850, 400}, {"b1", "b2", 750, 200}, {"b1", "c2", 200, 300},
    {"b1", "c5", 250, 700}, {"b3", "b1", 150, 850}, {"b3", "c6", 850, 500},
    {"b3", "c3", 750, 500}, {"b2", "b3", 750, 250}, {"b2", "c4", 150, 500},
};

// z at the two inner bends of b1, b2, b3
constexpr int kWeave[3][2] = {{3, -3}, {3, -3}, {3, -3}};

constexpr I64 kHex[6][2] = {{600, 0}, {300, 520}, {-300, 520}, {-600, 0}, {-300, -520}, {300, -520}};
constexpr I64 kApexHeight = 600;
constexpr I64 kRadius = 6;     // helix radius around y
constexpr I64 kApproach = 24;  // finger meets y's side at this distance
constexpr I64 kPitch = 3;      // advance along y per quarter turn
constexpr I64 kLift = 12;      // horizontal run of the finger's first rise

I64 isqrt(I64 v) {
  I64 r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// 2D vector of length about len along (dx, dy)
P3 scaled(I64 dx, I64 dy, I64 len) {
  I64 n = isqrt(dx * dx + dy * dy);
  return {dx * len / n, dy * len / n, 0};
}

P3 chord_point(const P3& a, const P3& b, int permille) {
  return {a.x + (b.x - a.x) * permille / 1000, a.y + (b.y - a.y) * permille / 1000, 0};
}

struct Inserted {
  int permille;
  std::vector<P3> pts;
};

}  // namespace

Embedding h_embedding(const TwistParameters& n) {
  GraphPtr g = k331_graph();
  Embedding em;
  em.graph = g;
  em.pos.resize(7);
  for (int k = 0; k < 6; ++k) em.pos[k] = {kHex[k][0], kHex[k][1], 0};
  em.pos[6] = {17, 11, kApexHeight};
  em.bends.assign(g->ne(), {});

  auto tail = [&](int e) { return em.pos[g->edges[e].tail]; };
  auto head = [&](int e) { return em.pos[g->edges[e].head]; };

  // points inserted along each K33 edge, keyed by chord position
  std::vector<std::vector<Inserted>> ins(g->ne());

  for (int b = 0; b < 3; ++b) {
    int e = g->edge_index(kK33Labels[b]);
    P3 T = tail(e), H = head(e);
    P3 off = scaled(-(H.y - T.y), H.x - T.x, 12);
    P3 ra = chord_point(T, H, 450) + off, rb = chord_point(T, H, 550) + off;
    ra.z = kWeave[b][0];
    rb.z = kWeave[b][1];
    ins[e].push_back({350, {chord_point(T, H, 350)}});
    ins[e].push_back({500, {ra, rb}});
    ins[e].push_back({650, {chord_point(T, H, 650)}});
  }

  for (int k = 0; k < 9; ++k) {
    int twists = n[k];
    if (twists == 0) continue;
    const Box& bx = kBoxes[k];
    int xe = g->edge_index(bx.x), ye = g->edge_index(bx.y);
    P3 xT = tail(xe), xH = head(xe), yT = tail(ye), yH = head(ye);
    P3 X0 = chord_point(xT, xH, bx.px);
    P3 xstep = scaled(xH.x - xT.x, xH.y - xT.y, 8);
    P3 X0b = X0 + xstep;
    P3 Y0 = chord_point(yT, yH, bx.py);
    P3 ydir{yH.x - yT.x, yH.y - yT.y, 0};
    P3 t = scaled(ydir.x, ydir.y, kPitch);
    // side of y facing the finger
    P3 nrm = scaled(-ydir.y, ydir.x, kRadius);
    P3 far = scaled(-ydir.y, ydir.x, kApproach);
    if (nrm.x * (X0.x - Y0.x) + nrm.y * (X0.y - Y0.y) < 0) nrm = nrm * -1, far = far * -1;

    int eps = k33_epsilon(g->edge_index(bx.x) - 6, g->edge_index(bx.y) - 6);
    int want = (twists > 0 ? 1 : -1) * eps;
    // crossing sign when the finger passes over y going from +nrm to -nrm
    I64 c = (-nrm.x) * ydir.y - (-nrm.y) * ydir.x;
    bool top_first = (c > 0 ? 1 : -1) == want;

    I64 h = 40 + 20 * k;
    std::vector<P3> pts;
    P3 F = Y0 + far;
    P3 lift = X0 + scaled(F.x - X0.x, F.y - X0.y, kLift);
    lift.z = h;
    pts.push_back(lift);
    F.z = h;
    pts.push_back(F);
    int quarters = 4 * std::abs(twists);
    for (int q = 0; q <= quarters; ++q) {
      // corner q: sides +,-,-,+ ; levels top,top,bottom,bottom (top_first)
      int ph = q % 4;
      bool plus_side = (ph == 0 || ph == 3);
      bool top = top_first ? (ph <= 1) : (ph >= 2);
      P3 p = Y0 + t * q + (plus_side ? nrm : nrm * -1);
      p.z = top ? kRadius : -kRadius;
      pts.push_back(p);
    }
    P3 Fb = Y0 + t * quarters + far;
    Fb.z = h + 10;
    pts.push_back(Fb);
    P3 liftb = X0b + scaled(Fb.x - X0b.x, Fb.y - X0b.y, kLift);
    liftb.z = h + 10;
    pts.push_back(liftb);
    std::vector<P3> all{X0};
    all.insert(all.end(), pts.begin(), pts.end());
    all.push_back(X0b);
    ins[xe].push_back({bx.px, all});
  }

  for (int e = 6; e < 15; ++e) {
    auto& v = ins[e];
    std::sort(v.begin(), v.end(), [](const Inserted& a, const Inserted& b) { return a.permille < b.permille; });
    for (auto& i : v) em.bends[e].insert(em.bends[e].end(), i.pts.begin(), i.pts.end());
  }

  // umbrella: each A-edge climbs outside the hexagon, then runs in to A
  for (int k = 0; k < 6; ++k) {
    P3 V = em.pos[k];
    P3 P{V.x * 3 / 2 - V.y / 8, V.y * 3 / 2 + V.x / 8, kApexHeight};
    em.bends[k] = {P};
  }
  return em;
}

Diagram build_h_embedding(const TwistParameters& n) { return project(h_embedding(n)); }

}  // namespace spg
