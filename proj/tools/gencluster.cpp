// Command-line front end: mutate | orbit | fpoly | verify.
#include <iostream>

#include <CLI11.hpp>

#include "gencluster/commands.hpp"

namespace {

int emit(const gencluster::CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mutation engine for generalized cluster seeds"};
  app.require_subcommand(1);

  gencluster::MutateRequest mutate;
  auto* m = app.add_subcommand("mutate", "Apply a mutation word and print the resulting seed");
  m->add_option("--seed", mutate.seed_path, "Seed document (JSON)")->required();
  m->add_option("--word", mutate.word, "Mutation word, 1-based, e.g. \"1 2 1\"");
  m->add_option("--epsilon", mutate.epsilon, "Sign convention, +1 or -1");
  m->add_option("--format", mutate.format, "text or json");

  gencluster::OrbitRequest orbit;
  auto* o = app.add_subcommand("orbit", "Explore the exchange graph breadth-first");
  o->add_option("--seed", orbit.seed_path, "Seed document (JSON)")->required();
  o->add_option("--max-depth", orbit.max_depth, "Maximal BFS depth");
  o->add_option("--mode", orbit.mode, "labeled or unlabeled");
  o->add_option("--format", orbit.format, "text, dot, csv or json");
  o->add_option("--epsilon", orbit.epsilon, "Sign convention, +1 or -1");
  o->add_option("--threads", orbit.threads, "Worker threads (output is independent of this)");
  o->add_option("--max-nodes", orbit.max_nodes, "Stop after this many seeds");

  gencluster::FpolyRequest fpoly;
  auto* f = app.add_subcommand("fpoly", "F-polynomials, c- and g-vectors along a word");
  f->add_option("--seed", fpoly.seed_path, "Seed document (JSON)")->required();
  f->add_option("--word", fpoly.word, "Mutation word, 1-based");
  f->add_option("--epsilon", fpoly.epsilon, "Sign convention, +1 or -1");
  f->add_option("--format", fpoly.format, "text or csv");

  gencluster::VerifyRequest verify;
  auto* v = app.add_subcommand("verify", "Run verification suites and report key=value lines");
  v->add_option("--seed", verify.seed_path, "Seed document (JSON)")->required();
  v->add_option("--suite", verify.suite, "all, involution, epsilon, laurent, separation or coherence");
  v->add_option("--max-depth,--budget", verify.budget, "Word-length budget (0 = suite default)");
  v->add_option("--epsilon", verify.epsilon, "Sign convention, +1 or -1");
  v->add_option("--hat-y", verify.hat_y, "column, or row as a negative control");
  std::string verify_format = "text";
  v->add_option("--format", verify_format, "text (key=value lines)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (m->parsed()) return emit(gencluster::cmd_mutate(mutate));
  if (o->parsed()) return emit(gencluster::cmd_orbit(orbit));
  if (f->parsed()) return emit(gencluster::cmd_fpoly(fpoly));
  if (verify_format != "text") {
    std::cerr << "error: verify supports --format text only\n";
    return 2;
  }
  return emit(gencluster::cmd_verify(verify));
}
