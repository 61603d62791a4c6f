#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace spg {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  int tail = -1;
  int head = -1;
  std::string label;
};

// Simple graph with a fixed edge order and orientation.
class Graph {
 public:
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  int apex = -1;          // K331 only
  std::vector<int> part;  // partite index per vertex, or empty

  int nv() const { return static_cast<int>(vertices.size()); }
  int ne() const { return static_cast<int>(edges.size()); }

  int add_vertex(const std::string& label);
  int add_edge(int tail, int head, const std::string& label);

  int vertex_index(const std::string& label) const;  // -1 if absent
  int edge_index(const std::string& label) const;
  int edge_between(int u, int v) const;  // -1 if none
  int degree(int v) const;
  std::vector<std::vector<int>> neighbours() const;
  bool edges_disjoint(int e1, int e2) const;
  bool incident(int e, int v) const { return edges[e].tail == v || edges[e].head == v; }

  // throws InputError on loops or repeated pairs
  void validate() const;
};

using GraphPtr = std::shared_ptr<const Graph>;

// Vertex sequence v0..v_{k-1}; edges[i] joins verts[i] and verts[i+1 mod k];
// fwd[i] says whether the traversal follows the edge's orientation.
struct Cycle {
  std::vector<int> verts;
  std::vector<int> edges;
  std::vector<bool> fwd;

  int size() const { return static_cast<int>(verts.size()); }
  bool has_vertex(int v) const;
  bool has_edge(int e) const;
  bool operator==(const Cycle& o) const { return verts == o.verts; }
  bool operator<(const Cycle& o) const;
};

struct LinkPattern {
  Cycle a, b;
  bool operator==(const LinkPattern& o) const { return a == o.a && b == o.b; }
  bool operator<(const LinkPattern& o) const;
};

// rotation/reflection-minimal vertex sequence, then edges resolved
Cycle make_cycle(const Graph& g, std::vector<int> verts);
// same cycle traversed exactly as given (no canonicalization)
Cycle cycle_as_walk(const Graph& g, const std::vector<int>& verts);
std::string cycle_text(const Graph& g, const Cycle& c);
std::string pattern_text(const Graph& g, const LinkPattern& p);

struct CycleFilter {
  enum Kind { All, Hamiltonian, Length, Contains, Avoids } kind = All;
  int value = 0;  // length or vertex
  static CycleFilter all() { return {}; }
  static CycleFilter hamiltonian() { return {Hamiltonian, 0}; }
  static CycleFilter length(int m) { return {Length, m}; }
  static CycleFilter contains(int v) { return {Contains, v}; }
  static CycleFilter avoids(int v) { return {Avoids, v}; }
};

std::vector<Cycle> enumerate_cycles(const Graph& g, CycleFilter f = {});
// s = t = 0 means all sizes
std::vector<LinkPattern> enumerate_link_patterns(const Graph& g, int s = 0, int t = 0);

bool is_triangle(const Graph& g, int a, int b, int c);
std::vector<std::array<int, 3>> triangles(const Graph& g);

struct YMove {
  std::array<int, 3> t{};  // triangle vertices in the parent
  std::array<int, 3> e{};  // parent edges, e[i] joins t[i], t[i+1]
  int y = -1;              // new vertex in the child
  std::array<int, 3> f{};  // child edges, f[i] joins y, t[i]
  std::vector<int> parent_to_child_edge;  // -1 for the e's
  std::vector<int> child_to_parent_edge;  // -1 for the f's
};

struct YResult {
  Graph child;
  YMove move;
};

YResult triangle_y_move(const Graph& g, std::array<int, 3> t);

Cycle phi_cycle_map(const Graph& parent, const Graph& child, const Cycle& c, const YMove& m);
LinkPattern psi_link_map(const Graph& child, const Graph& parent, const LinkPattern& l,
                         const YMove& m);

bool isomorphic(const Graph& a, const Graph& b);
bool three_connected(const Graph& g);

// named graphs
Graph complete_graph(int n);
Graph k6();
Graph k33();
Graph k331();

struct CatalogEntry {
  GraphPtr graph;
  int parent = -1;  // index into the catalog, -1 for roots
  std::array<int, 3> triangle{};
};

// a Delta-Y arrow between catalog classes
struct CatalogArrow {
  int parent = -1;
  int child = -1;
  std::array<int, 3> triangle{};
};

struct PetersenCatalog {
  std::vector<CatalogEntry> entries;
  std::vector<CatalogArrow> arrows;
  int find(const std::string& name) const;
};

const PetersenCatalog& petersen_family();

// catalog names, K33, or Kn (n <= 9); throws InputError otherwise
GraphPtr named_graph(const std::string& name);

// K_{3,3} subdivision inside a host graph. Pattern edge order b1 b2 b3 c1..c6
// on pattern vertices 1..6 (indices 0..5) with the fixed K33 orientation.
struct K33Model {
  std::string name;
  std::array<int, 6> branch{};  // host vertex for each pattern vertex
  std::array<std::vector<std::pair<int, bool>>, 9> paths;  // host edge, forward

  std::vector<int> host_edges() const;
  // pattern label (0..8) and orientation sign of a host edge, or {-1,0}
  std::pair<int, int> label_of(int host_edge) const;
  Cycle pattern_cycle(const Graph& host, const std::vector<int>& pattern_verts) const;
};

extern const std::array<std::pair<int, int>, 9> kK33Edges;  // pattern tail, head
extern const std::array<const char*, 9> kK33Labels;
int k33_epsilon(int la, int lb);  // 0 for adjacent pairs

K33Model identity_k33_model(const Graph& k33graph);

struct K331Subgraphs {
  std::vector<K33Model> G;  // 18
  std::vector<K33Model> H;  // 6
  K33Model K;
};

K331Subgraphs k331_subgraphs(const Graph& g);

// text format
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

}  // namespace spg
