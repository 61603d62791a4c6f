#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spg/diagram.hpp"
#include "spg/geometry.hpp"
#include "spg/graph.hpp"

namespace spg {

struct Term {
  std::string name;
  long long value = 0;
};

struct IdentityReport {
  std::string name;
  long long lhs = 0, rhs = 0;
  bool pass = false;
  std::vector<Term> terms;
  std::string note;
};

struct LinkProfile {
  std::vector<std::pair<LinkPattern, long long>> links;
  bool ca_linked = false;
  long long sum_lk2 = 0;
  int nonzero = 0;
};

LinkProfile link_profile(const Diagram& d);

IdentityReport conway_gordon_check(const Diagram& d);
IdentityReport nikkuni_k6_check(const Diagram& d);
IdentityReport k331_check(const Diagram& d);
IdentityReport wu_decomposition_check(const Diagram& d);
IdentityReport main_theorem_check(const Diagram& d);
// alpha against (wu^2 - 1)/8 on a K33 model, or on a graph labeled as K33
IdentityReport alpha_check(const Diagram& d, const K33Model& m);
IdentityReport alpha_check(const Diagram& d);

enum class Scope { All, Theorem };

struct Certificate {
  Cycle cycle;
  long long a2 = 0;
};

// the cycle families the K6 / K331 identities sum over; all cycles otherwise
std::vector<Cycle> theorem_cycles(const Graph& g);
std::optional<Certificate> knot_certificate(const Diagram& d, Scope scope);

// closed forms for the h-family, in the G_i / H_i order of k331_subgraphs
std::array<int, 18> g_formula(const TwistParameters& n);
std::array<int, 6> h_formula(const TwistParameters& n);
int k_formula(const TwistParameters& n);
// linking numbers of the nine (3,4)-patterns, in enumerate_link_patterns order
std::array<long long, 9> link_formula(const TwistParameters& n);
// h(n) against all 34 closed forms; lhs counts matches, rhs = 34
IdentityReport calibration_check(const Diagram& d, const TwistParameters& n);

struct SearchHit {
  std::uint64_t seed = 0;
  Embedding embedding;
  LinkProfile profile;
  Certificate certificate;
};

struct SearchConfig {
  I64 bound = 12;
  int bends = 2;  // interior points per edge
};

Embedding search_sample(std::uint64_t seed, const SearchConfig& cfg);
std::optional<SearchHit> search_one(std::uint64_t seed, const SearchConfig& cfg);
std::vector<SearchHit> search_single_link_knotted(std::uint64_t first, std::uint64_t last,
                                                  const SearchConfig& cfg = {});

// Parent embedding obtained from a child embedding by opening the Y into a
// triangle that hugs it: e_i runs t_i -> a point near y -> t_{i+1}.
struct TriangleFromY {
  Embedding parent;
  I64 scale = 1;
};
TriangleFromY triangle_from_y(const Embedding& child, GraphPtr parent, const YMove& m);

struct TransportReport {
  bool pass = true;
  int links = 0;
  int cycles = 0;
  std::string failure;
  std::optional<Certificate> parent_certificate;
  long long image_a2 = 0;  // a2 of phi(certificate) in the child
};

TransportReport delta_y_transport(const Embedding& child, GraphPtr parent, const YMove& m);

std::string report_line(const IdentityReport& r, std::uint64_t seed);

}  // namespace spg
