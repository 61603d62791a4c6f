#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "spg/geometry.hpp"
#include "spg/invariants.hpp"
#include "spg/rng.hpp"

using namespace spg;

namespace {

const char* kTrefoil = "+1O,+2U,+3O,+1U,+2O,+3U";

GaussCode reversed(GaussCode c) {
  for (auto& comp : c.comps) std::reverse(comp.begin(), comp.end());
  return c;
}

// same diagram, different encoding: rotate components, shuffle their order, relabel ids
GaussCode reencode(const GaussCode& c, std::uint64_t seed) {
  Rng rng(seed);
  GaussCode out = c;
  for (auto& comp : out.comps)
    if (!comp.empty()) std::rotate(comp.begin(), comp.begin() + rng.range(0, comp.size() - 1), comp.end());
  for (size_t i = out.comps.size(); i > 1; --i) std::swap(out.comps[i - 1], out.comps[rng.range(0, i - 1)]);
  std::vector<int> ids;
  for (auto& comp : out.comps)
    for (auto& t : comp) ids.push_back(t.id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<int> to = ids;
  for (size_t i = to.size(); i > 1; --i) std::swap(to[i - 1], to[rng.range(0, i - 1)]);
  for (auto& comp : out.comps)
    for (auto& t : comp) t.id = 100 + to[std::lower_bound(ids.begin(), ids.end(), t.id) - ids.begin()];
  return out;
}

}  // namespace

TEST_CASE("gauss text") {
  GaussCode t = parse_gauss(kTrefoil);
  CHECK(t.comps.size() == 1);
  CHECK(t.crossing_count() == 3);
  CHECK(to_text(t) == kTrefoil);
  CHECK(to_text(parse_gauss("()")) == "()");
  CHECK_THROWS_AS(parse_gauss("+1O,+1O"), InputError);
  CHECK_THROWS_AS(parse_gauss("+1O,-1U"), InputError);
  CHECK_THROWS_AS(parse_gauss("+1X"), InputError);
}

TEST_CASE("braid closures give the battery codes") {
  CHECK(canonical(oracle::braid_closure(2, {1, 1, 1})) == canonical(parse_gauss(kTrefoil)));
  auto hopf = oracle::braid_closure(2, {1, 1});
  CHECK(hopf.comps.size() == 2);
}

TEST_CASE("canonical form") {
  GaussCode t = parse_gauss(kTrefoil);
  CHECK(canonical(reversed(t)) == canonical(t));
  auto codes = oracle::random_knot_codes(40, 8, 5);
  for (size_t i = 0; i < codes.size(); ++i) {
    auto c = canonical(codes[i]);
    CHECK(canonical(reencode(codes[i], i)) == c);
    CHECK(canonical(c) == c);
  }
  GaussCode link = parse_gauss("+1O,-3O,-3U | +1U,+2O,+2U");
  GaussCode swapped{{link.comps[1], link.comps[0]}};
  CHECK(canonical(swapped) == canonical(link));
}

TEST_CASE("switch and smooth") {
  GaussCode t = canonical(parse_gauss(kTrefoil));
  for (auto& tok : t.comps[0]) CHECK(switch_raw(switch_raw(t, tok.id), tok.id) == t);
  GaussCode kink = parse_gauss("+1O,+1U");
  GaussCode s = smooth_crossing(kink, 1);
  CHECK(s.comps.size() == 2);
  CHECK(s.crossing_count() == 0);
  GaussCode hopf = parse_gauss("+1O,+2U | +1U,+2O");
  CHECK(is_inter(hopf, 1));
  CHECK(smooth_crossing(hopf, 1).comps.size() == 1);
  for (auto& c : oracle::random_knot_codes(30, 6, 9))
    for (auto& tok : c.comps[0]) {
      CHECK(smooth_crossing(c, tok.id).comps.size() == 2);
      CHECK(switch_crossing(c, tok.id).crossing_count() == c.crossing_count());
    }
  CHECK_THROWS_AS(switch_crossing(t, 99), InputError);
  CHECK_THROWS_AS(smooth_crossing(t, 99), InputError);
}

TEST_CASE("cycle and link codes from a diagram") {
  auto g = std::make_shared<const Graph>(k6());
  for (std::uint64_t s = 1; s <= 20; ++s) {
    Diagram d = project(random_linear_embedding(g, 50, s));
    for (auto& c : enumerate_cycles(*g)) {
      // crossing count equals the crossings with both strands on the cycle
      int n = 0;
      for (auto& x : d.crossings) n += c.has_edge(x.edge[0]) && c.has_edge(x.edge[1]);
      CHECK(cycle_diagram(d, c).crossing_count() == n);
      if (c.size() == 3) CHECK(cycle_diagram(d, c).crossing_count() == 0);
    }
    for (auto& l : enumerate_link_patterns(*g)) {
      GaussCode code = link_diagram(d, l);
      CHECK(code.comps.size() == 2);
      int inter = 0;
      for (auto& t : code.comps[0]) inter += is_inter(code, t.id) ? 1 : 0;
      if (inter == 0) CHECK(linking_number(code) == 0);
    }
  }
}

TEST_CASE("restriction") {
  auto g = std::make_shared<const Graph>(k6());
  Diagram d = project(random_linear_embedding(g, 50, 3));
  auto r = restrict_diagram(d, std::vector<int>{0});
  CHECK(r.dia.crossings.empty());
  CHECK(r.dia.graph->ne() == 1);

  Diagram h = build_h_embedding({});
  auto sub = k331_subgraphs(*h.graph);
  auto rk = restrict_diagram(h, sub.K.host_edges());
  CHECK(wu_k33(rk.dia, remap_model(sub.K, rk)) == 3);
  auto rh = restrict_diagram(h, sub.H[0].host_edges());
  CHECK(wu_k33(rh.dia, remap_model(sub.H[0], rh)) == 1);
}

TEST_CASE("hopf-type restriction of the twist template") {
  Diagram h = build_h_embedding({});
  int seen = 0;
  for (auto& l : enumerate_link_patterns(*h.graph, 3, 4)) {
    if (lk_of_pattern(h, l) == 0) continue;
    GaussCode code = link_diagram(h, l);
    std::vector<int> signs;
    for (auto& t : code.comps[0])
      if (is_inter(code, t.id)) signs.push_back(t.sign);
    int sum = 0;
    for (int x : signs) sum += x;
    CHECK(signs.size() % 2 == 0);
    CHECK(sum == 2 * lk_of_pattern(h, l));
    ++seen;
  }
  CHECK(seen == 3);
}
