#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spg/diagram.hpp"
#include "spg/graph.hpp"

namespace spg {

using BigInt = boost::multiprecision::cpp_int;

struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long long linking_number(const GaussCode& code);

// a2 of a one-component code, memoized on the canonical text
long long a2(const GaussCode& code);
// same recursion with a random basepoint and random choice among the bad
// crossings; no cache
long long a2_randomized(const GaussCode& code, std::uint64_t seed);
std::size_t a2_cache_size();
void a2_cache_clear();
std::vector<std::pair<std::string, long long>> a2_cache_dump();

long long a2_of_cycle(const Diagram& d, const Cycle& c);
long long lk_of_pattern(const Diagram& d, const LinkPattern& l);

// disjoint edge pairs (i<j) in lexicographic order
std::vector<std::pair<int, int>> wu_basis(const Graph& g);

struct WuCochain {
  GraphPtr graph;
  std::vector<std::pair<int, int>> basis;
  std::vector<long long> value;
};

WuCochain wu_cochain(const Diagram& d);

struct CoboundaryLattice {
  GraphPtr graph;
  std::vector<std::pair<int, int>> basis;
  std::vector<std::pair<int, int>> row_index;  // (edge, vertex) of each row
  std::vector<std::vector<int>> rows;
  // row Hermite normal form
  std::vector<std::vector<BigInt>> hnf;
  std::vector<int> pivots;

  int basis_pos(int e1, int e2) const;  // -1 if not a basis pair
  int row_of(int edge, int vertex) const;
};

CoboundaryLattice coboundary_lattice(GraphPtr g);

struct WuClass {
  std::vector<BigInt> rep;
  bool operator==(const WuClass& o) const { return rep == o.rep; }
};

WuClass wu_class(const WuCochain& c, const CoboundaryLattice& lat);
bool wu_class_equal(const WuCochain& a, const WuCochain& b, const CoboundaryLattice& lat);

struct WuRank {
  int matrix = 0;
  int closed_form = 0;
};
// throws ConsistencyError when the two computations differ
int wu_rank(GraphPtr g);
WuRank wu_rank_both(GraphPtr g);

int wu_k33(const Diagram& d, const K33Model& m);
int wu_k33(const Diagram& d);  // graph labeled as K33
long long alpha_k33(const Diagram& d, const K33Model& m);
long long alpha_k33(const Diagram& d);

std::string wu_to_text(const WuCochain& c);
std::string wu_class_to_text(const WuClass& w, const CoboundaryLattice& lat);

}  // namespace spg
