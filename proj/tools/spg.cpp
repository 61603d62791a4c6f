#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"

using namespace spg;
using namespace spg::cli;

int main(int argc, char** argv) {
  CLI::App app{"spatial graph invariant checker"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string seeds, twists, scope = "all";
  I64 bound = 0;

  auto common = [&](CLI::App* s) {
    s->add_option("--graph", cfg.graph, "graph name (K6, K331, G7, G8, K44e, G9, P10, K33, Kn)");
    s->add_option("--seeds", seeds, "seed range A..B");
    s->add_option("--bound", bound, "coordinate bound");
    s->add_option("--twists", twists, "n1,...,n9 for the K331 twist family");
    s->add_option("--embedding", cfg.embedding_file, "embedding file");
    s->add_option("--scope", scope, "all|theorem")->check(CLI::IsMember({"all", "theorem"}));
    s->add_option("--out", cfg.out, "write the report here");
    s->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
  };
  for (const char* name : {"verify", "invariants", "search", "catalog", "enumerate"}) common(app.add_subcommand(name));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!seeds.empty()) {
      if (!parse_seeds(seeds, cfg.seed_first, cfg.seed_last)) throw InputError("bad --seeds " + seeds);
      cfg.have_seeds = true;
    }
    if (app.get_subcommands().front()->count("--bound")) {
      if (bound < 1) throw InputError("--bound must be positive");
      cfg.bound = bound;
    }
    if (!twists.empty()) cfg.twists = parse_twists(twists);
    cfg.scope = scope == "theorem" ? Scope::Theorem : Scope::All;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) throw InputError("cannot write " + cfg.out);
      os = &file;
    }
    int rc = kPass;
    if (cfg.command == "verify")
      rc = cmd_verify(cfg, *os);
    else if (cfg.command == "invariants")
      rc = cmd_invariants(cfg, *os);
    else if (cfg.command == "search")
      rc = cmd_search(cfg, *os);
    else if (cfg.command == "catalog")
      rc = cmd_catalog(cfg, *os);
    else
      rc = cmd_enumerate(cfg, *os);
    os->flush();
    return rc;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonGenericDirection& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
