#pragma once

#include <array>
#include <string>
#include <vector>

#include "spg/graph.hpp"

namespace spg {

struct Crossing {
  std::array<int, 2> edge{};  // the two strands; may be the same edge
  std::array<int, 2> seg{};   // segment index along each strand's edge
  int over = 0;               // which strand (0 or 1) is over
  int sign = 0;               // w.r.t. the edge orientations
};

struct Diagram {
  GraphPtr graph;
  std::vector<Crossing> crossings;
  // per edge, in the edge's direction: (crossing id, strand 0/1)
  std::vector<std::vector<std::pair<int, int>>> passes;
  std::array<long long, 3> direction{0, 0, 1};
};

struct RestrictedDiagram {
  Diagram dia;
  std::vector<int> host_edge;  // sub edge -> host edge
  std::vector<int> host_vertex;
};

// keep only the listed host edges (and their endpoints)
RestrictedDiagram restrict_diagram(const Diagram& d, std::vector<int> edges);
RestrictedDiagram restrict_diagram(const Diagram& d, const Cycle& c);
RestrictedDiagram restrict_diagram(const Diagram& d, const LinkPattern& l);
K33Model remap_model(const K33Model& m, const RestrictedDiagram& r);

struct GToken {
  int id = 0;
  bool over = false;
  int sign = 0;
  bool operator==(const GToken& o) const { return id == o.id && over == o.over && sign == o.sign; }
  bool operator<(const GToken& o) const;
};

struct GaussCode {
  std::vector<std::vector<GToken>> comps;
  bool operator==(const GaussCode& o) const { return comps == o.comps; }
  int crossing_count() const;
};

GaussCode canonical(const GaussCode& c);
std::string to_text(const GaussCode& c);
GaussCode parse_gauss(const std::string& text);
// throws InputError unless each id appears exactly twice, once O once U,
// with matching signs
void check_gauss(const GaussCode& c);

// raw codes with the basepoint at the start of the cycle
GaussCode cycle_code(const Diagram& d, const Cycle& c);
GaussCode link_code(const Diagram& d, const LinkPattern& l);
// canonical forms
GaussCode cycle_diagram(const Diagram& d, const Cycle& c);
GaussCode link_diagram(const Diagram& d, const LinkPattern& l);

// raw variants keep token order and basepoints
GaussCode switch_raw(const GaussCode& c, int id);
GaussCode smooth_raw(const GaussCode& c, int id);
GaussCode switch_crossing(const GaussCode& c, int id);
GaussCode smooth_crossing(const GaussCode& c, int id);

// inter-component crossing ids of a 2-component code
bool is_inter(const GaussCode& c, int id);

}  // namespace spg
