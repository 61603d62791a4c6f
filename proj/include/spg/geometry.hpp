#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spg/diagram.hpp"
#include "spg/graph.hpp"

namespace spg {

using I64 = std::int64_t;

struct P3 {
  I64 x = 0, y = 0, z = 0;
  bool operator==(const P3& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const P3& o) const { return !(*this == o); }
  P3 operator+(const P3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  P3 operator-(const P3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  P3 operator*(I64 k) const { return {x * k, y * k, z * k}; }
};

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// explicit projection direction is not generic; what() names the defect
struct NonGenericDirection : GeometryError {
  using GeometryError::GeometryError;
};

// PL spatial graph: vertex positions plus optional bend points per edge,
// listed from tail to head. A linear embedding has no bends.
struct Embedding {
  GraphPtr graph;
  std::vector<P3> pos;
  std::vector<std::vector<P3>> bends;

  std::vector<P3> polyline(int e) const;
  bool linear() const;
};

// nullopt when the straight segments realize an embedding
std::optional<std::string> embedding_defect(const Embedding& e);

Embedding random_linear_embedding(GraphPtr g, I64 bound, std::uint64_t seed);
// every edge gets `bends` interior points, all drawn from the cube
Embedding random_polygonal_embedding(GraphPtr g, I64 bound, int bends, std::uint64_t seed);

constexpr int kResampleLimit = 1000;

// closed segment [a,b] against the closed triangle pqr
bool segment_meets_triangle(const P3& a, const P3& b, const P3& p, const P3& q, const P3& r);

P3 direction_candidate(int k);  // (0,0,1), then (1,k,k^2)
// throws NonGenericDirection for an explicit non-generic direction,
// GeometryError if the embedding itself is invalid
Diagram project(const Embedding& e, std::optional<P3> dir = std::nullopt);

using TwistParameters = std::array<int, 9>;
Embedding h_embedding(const TwistParameters& n);
Diagram build_h_embedding(const TwistParameters& n);
GraphPtr k331_graph();  // shared labeled K331 instance

std::string embedding_to_text(const Embedding& e);
// resolver maps a graph name to a graph; throws InputError with line numbers
Embedding embedding_from_text(const std::string& text, GraphPtr (*resolve)(const std::string&));

}  // namespace spg
