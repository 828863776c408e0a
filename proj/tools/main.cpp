// Copyright 2026 The domgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the domgame library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "domgame/adversary.hpp"
#include "domgame/error.hpp"
#include "domgame/forest.hpp"
#include "domgame/generate.hpp"
#include "domgame/solver.hpp"
#include "domgame/strategy.hpp"
#include "domgame/verify.hpp"

namespace {

using namespace domgame;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

RootedForest read_forest(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    buf << in.rdbuf();
  }
  const std::string text = buf.str();
  const RootSpec spec =
      declares_roots(text) ? RootSpec{RootPolicy::kGiven, 0, {}} : RootSpec::min_index();
  return parse_forest(text, spec);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const std::string& path) {
  const RootedForest f = read_forest(path);
  const ClassFlags c = classify(f);
  std::cout << "n: " << f.size() << '\n'
            << "components: " << f.component_count() << '\n'
            << "leaf paths of length 4: " << f.p5_paths().size() << '\n'
            << "weakly S(K1,3)-free: " << yes_no(c.weakly_sk13_free) << '\n'
            << "no leaves at distance 4: " << yes_no(c.no_leaves_at_distance4) << '\n'
            << "disjoint union of edges: " << yes_no(c.disjoint_union_of_edges) << '\n';
  return 0;
}

int cmd_solve(const std::string& path, const std::string& game, int cap) {
  const RootedForest f = read_forest(path);
  const GameType g = parse_game_type(game);
  ExactSolver solver(f, cap);
  const SolveResult r = solver.solve(StateKey{0, first_player(g)});
  std::cout << (g == GameType::kDGame ? "gamma_g" : "gamma_g'") << ": " << r.value << '\n';
  if (r.principal_move) std::cout << "best first move: " << *r.principal_move << '\n';
  std::cout << "states: " << r.nodes << '\n';
  return 0;
}

struct TraceArgs {
  std::string path;
  std::string dominator = "breaking-p5";
  std::string staller = "greedy-min";
  std::string game = "d";
  std::uint64_t seed = 0;
  std::string tie_rule = "smaller";
  bool additional_on_white = false;
  std::string out;
};

StrategyConfig strategy_config(const std::string& dominator, const std::string& game,
                               const std::string& tie_rule, bool additional_on_white) {
  StrategyConfig c;
  c.policy = parse_dominator_policy(dominator);
  c.game = parse_game_type(game);
  if (tie_rule == "smaller") c.tie_rule = ChildTieRule::kSmallerIndex;
  else if (tie_rule == "larger") c.tie_rule = ChildTieRule::kLargerIndex;
  else throw InputError("unknown tie rule: " + tie_rule);
  c.additional_on_white = additional_on_white;
  return c;
}

int cmd_trace(const TraceArgs& a) {
  const RootedForest f = read_forest(a.path);
  const StrategyConfig c = strategy_config(a.dominator, a.game, a.tie_rule, a.additional_on_white);
  std::vector<TurnRecord> trace;
  std::vector<Violation> violations;
  if (a.staller == "exhaustive") {
    ExhaustiveResult r = exhaustive_worst(f, c);
    trace = std::move(r.worst_trace);
    violations = std::move(r.violations);
  } else {
    PlayoutResult r = play_out(f, c, {parse_adversary(a.staller), a.seed});
    trace = std::move(r.trace);
    violations = std::move(r.violations);
  }
  if (a.out.empty()) {
    write_trace(std::cout, trace);
  } else {
    std::ofstream os(a.out);
    if (!os) throw InputError("cannot write " + a.out);
    write_trace(os, trace);
  }
  for (const auto& v : violations) {
    std::cerr << "violation at turn " << v.turn << ": " << v.check << ": " << v.detail << '\n';
  }
  return violations.empty() ? 0 : kExitViolation;
}

int cmd_generate(const std::string& family, const std::string& params, const std::string& out) {
  const std::string spec = params.empty() ? family : family + ":" + params;
  const RootedForest f = generate_family(parse_family(spec));
  const std::string text = format_forest(f);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out);
    if (!os) throw InputError("cannot write " + out);
    os << text;
  }
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> sources;
  std::string filter = "weakly-free";
  std::vector<std::string> games{"d"};
  std::string dominator = "breaking-p5";
  std::string adversary = "exhaustive";
  std::string roots = "default";
  std::string format = "csv";
  std::string tie_rule = "smaller";
  bool additional_on_white = false;
  std::uint64_t seed = 0;
  int threads = 0;
  int solver_cap = 20;
  std::uint64_t node_cap = 200'000'000;
  bool no_gamma = false;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  BatchConfig c;
  c.sources = a.sources;
  c.filter = parse_class_filter(a.filter);
  c.games.clear();
  for (const auto& g : a.games) c.games.push_back(parse_game_type(g));
  c.strategy = strategy_config(a.dominator, "d", a.tie_rule, a.additional_on_white);
  c.adversary = parse_batch_adversary(a.adversary);
  c.roots = parse_root_options(a.roots);
  c.seed = a.seed;
  c.threads = a.threads;
  c.solver_cap = a.solver_cap;
  c.node_cap = a.node_cap;
  c.compute_gamma = !a.no_gamma;
  const ReportFormat fmt = parse_report_format(a.format);
  const VerificationReport report = run_batch(c);
  if (a.out.empty()) {
    write_report(std::cout, report, fmt);
  } else {
    std::ofstream os(a.out);
    if (!os) throw InputError("cannot write " + a.out);
    write_report(os, report, fmt);
  }
  return report.exit_code();
}

int cmd_play(const std::string& path, const std::string& side, const std::string& game,
             const std::string& dominator, const std::string& staller, std::uint64_t seed) {
  const RootedForest f = read_forest(path);
  Player human;
  if (side == "staller") human = Player::kStaller;
  else if (side == "dominator") human = Player::kDominator;
  else throw InputError("--as must be staller or dominator");
  const StrategyConfig c = strategy_config(dominator, game, "smaller", false);
  play_interactive(f, human, c, {parse_adversary(staller), seed}, std::cin, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domination game on forests: strategies, exact values, verification"};
  app.require_subcommand(1);

  std::string path;
  auto* classify_cmd = app.add_subcommand("classify", "Report class membership of a forest");
  classify_cmd->add_option("file", path, "Forest file ('-' for stdin)")->required();

  std::string game = "d";
  int cap = kDefaultSolverCap;
  auto* solve_cmd = app.add_subcommand("solve", "Exact game domination number");
  solve_cmd->add_option("file", path, "Forest file")->required();
  solve_cmd->add_option("--game", game, "d or s");
  solve_cmd->add_option("--cap", cap, "Largest order accepted by the solver");

  TraceArgs ta;
  auto* trace_cmd = app.add_subcommand("trace", "Play one strategy game and emit a JSONL trace");
  trace_cmd->add_option("file", ta.path, "Forest file")->required();
  trace_cmd->add_option("--dominator", ta.dominator, "greedy or breaking-p5");
  trace_cmd->add_option("--staller", ta.staller,
                        "random, greedy-min, minimax, anti-weighting or exhaustive");
  trace_cmd->add_option("--game", ta.game, "d or s");
  trace_cmd->add_option("--seed", ta.seed, "Seed for the random Staller");
  trace_cmd->add_option("--tie-rule", ta.tie_rule, "smaller or larger");
  trace_cmd->add_flag("--additional-on-white", ta.additional_on_white,
                      "Extend the additional weighting process to white-to-red transitions");
  trace_cmd->add_option("--out", ta.out, "Output file");

  std::string family, params, gen_out;
  auto* gen_cmd = app.add_subcommand("generate", "Write a forest from a named family");
  gen_cmd->add_option("--family", family,
                      "fig2a, fig2b, path, star, double-star, spider, random, weakly-free")
      ->required();
  gen_cmd->add_option("--params", params, "Family parameters, e.g. 3 or 2,2,1 or 20:7");
  gen_cmd->add_option("--out", gen_out, "Output file");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Batch verification sweep");
  verify_cmd
      ->add_option("--source", va.sources,
                   "enum:N, enum:A-B, pairs:N, files:a,b, family:SPEC, random:COUNT:NMAX:SEED, "
                   "random-wf:COUNT:NMAX:SEED")
      ->required();
  verify_cmd->add_option("--class", va.filter, "weakly-free, no-dist4 or all");
  verify_cmd->add_option("--game", va.games, "d and/or s")->delimiter(',');
  verify_cmd->add_option("--dominator", va.dominator, "greedy or breaking-p5");
  verify_cmd->add_option("--adversary", va.adversary,
                         "exhaustive, or random|greedy-min|minimax|anti-weighting[:PLAYOUTS]");
  verify_cmd->add_option("--roots", va.roots, "default, sweep or random:K");
  verify_cmd->add_option("--format", va.format, "csv or jsonl");
  verify_cmd->add_option("--tie-rule", va.tie_rule, "smaller or larger");
  verify_cmd->add_flag("--additional-on-white", va.additional_on_white,
                       "Extend the additional weighting process to white-to-red transitions");
  verify_cmd->add_option("--seed", va.seed, "Base seed");
  verify_cmd->add_option("--threads", va.threads, "Worker threads (0: all cores)");
  verify_cmd->add_option("--solver-cap", va.solver_cap, "Largest order for exact values");
  verify_cmd->add_option("--node-cap", va.node_cap, "Exhaustive traversal budget per row");
  verify_cmd->add_flag("--no-gamma", va.no_gamma, "Skip exact values");
  verify_cmd->add_option("--out", va.out, "Output file");

  std::string side, play_dom = "breaking-p5", play_stal = "greedy-min";
  std::uint64_t play_seed = 0;
  auto* play_cmd = app.add_subcommand("play", "Play interactively against the engine");
  play_cmd->add_option("file", path, "Forest file")->required();
  play_cmd->add_option("--as", side, "staller or dominator")->required();
  play_cmd->add_option("--game", game, "d or s");
  play_cmd->add_option("--dominator", play_dom, "Engine Dominator policy");
  play_cmd->add_option("--staller", play_stal, "Engine Staller policy");
  play_cmd->add_option("--seed", play_seed, "Seed for the random Staller");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(path);
    if (*solve_cmd) return cmd_solve(path, game, cap);
    if (*trace_cmd) return cmd_trace(ta);
    if (*gen_cmd) return cmd_generate(family, params, gen_out);
    if (*verify_cmd) return cmd_verify(va);
    if (*play_cmd) return cmd_play(path, side, game, play_dom, play_stal, play_seed);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return 0;
}
