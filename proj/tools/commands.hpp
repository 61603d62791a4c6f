#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "spg/geometry.hpp"
#include "spg/verify.hpp"

namespace spg::cli {

struct RunConfig {
  std::string command;
  std::string graph;
  std::uint64_t seed_first = 1, seed_last = 0;  // empty unless set
  bool have_seeds = false;
  std::optional<I64> bound;
  std::optional<TwistParameters> twists;
  std::string embedding_file;
  Scope scope = Scope::All;
  std::string out;
  int jobs = 0;  // 0 = hardware threads
};

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

// "A..B" or a single "A"
bool parse_seeds(const std::string& s, std::uint64_t& a, std::uint64_t& b);
TwistParameters parse_twists(const std::string& s);  // throws InputError

int cmd_verify(const RunConfig& c, std::ostream& os);
int cmd_invariants(const RunConfig& c, std::ostream& os);
int cmd_search(const RunConfig& c, std::ostream& os);
int cmd_catalog(const RunConfig& c, std::ostream& os);
int cmd_enumerate(const RunConfig& c, std::ostream& os);

}  // namespace spg::cli
