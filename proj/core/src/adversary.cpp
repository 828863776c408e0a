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

#include "domgame/adversary.hpp"

#include <algorithm>
#include <limits>
#include <memory>

#include "domgame/error.hpp"

namespace domgame {

std::string adversary_name(StallerKind k) {
  switch (k) {
    case StallerKind::kRandom: return "random";
    case StallerKind::kGreedyMin: return "greedy_min";
    case StallerKind::kMinimax: return "minimax";
    case StallerKind::kAntiWeighting: return "anti_weighting";
  }
  return "?";
}

StallerKind parse_adversary(const std::string& name) {
  if (name == "random") return StallerKind::kRandom;
  if (name == "greedy_min" || name == "greedy-min") return StallerKind::kGreedyMin;
  if (name == "minimax") return StallerKind::kMinimax;
  if (name == "anti_weighting" || name == "anti-weighting") return StallerKind::kAntiWeighting;
  throw InputError("unknown adversary: " + name);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vertex pick_random(const GameState& s, std::uint64_t seed) {
  std::uint64_t h = splitmix64(seed);
  for (const auto& e : s.history()) h = splitmix64(h ^ static_cast<std::uint64_t>(e.vertex + 1));
  const auto moves = s.legal_moves();
  return moves[h % moves.size()];
}

Vertex pick_greedy_min(const GameState& s) {
  Vertex best = kNoVertex;
  int best_gain = std::numeric_limits<int>::max();
  for (Vertex v : s.legal_moves()) {
    const int g = s.preview(v).points;
    if (g < best_gain) {
      best_gain = g;
      best = v;
    }
  }
  return best;
}

// Targets the moves that feed the weighting bookkeeping: P5-children of
// highlighted centers first, then the highlighted centers themselves.
Vertex pick_anti_weighting(const GameState& s, const StrategyLedger& ledger) {
  const auto hs = ledger.highlighted_set();
  auto first_legal = [&](auto&& want) -> Vertex {
    for (Vertex d : hs) {
      const Vertex c = ledger.p5_child_of(d);
      if (c == kNoVertex) continue;
      const Vertex v = want(d, c);
      if (v != kNoVertex && s.is_legal(v)) return v;
    }
    return kNoVertex;
  };
  const auto tiers = {
      +[](const GameState& st, Vertex, Vertex c) { return st.color(c) == Color::kWhite ? c : kNoVertex; },
      +[](const GameState& st, Vertex, Vertex c) { return st.color(c) == Color::kBlue ? c : kNoVertex; },
      +[](const GameState& st, Vertex d, Vertex c) { return st.color(c) == Color::kWhite ? d : kNoVertex; },
      +[](const GameState& st, Vertex d, Vertex c) { return st.color(c) == Color::kBlue ? d : kNoVertex; },
      +[](const GameState& st, Vertex d, Vertex c) { return st.color(c) == Color::kRed ? d : kNoVertex; },
  };
  for (auto tier : tiers) {
    const Vertex v = first_legal([&](Vertex d, Vertex c) { return tier(s, d, c); });
    if (v != kNoVertex) return v;
  }
  return pick_greedy_min(s);
}

}  // namespace

Vertex staller_pick(const GameState& s, const StrategyLedger& ledger,
                    const AdversaryPolicy& policy, ExactSolver* solver) {
  if (s.over()) throw GameError("game is over");
  switch (policy.kind) {
    case StallerKind::kRandom: return pick_random(s, policy.seed);
    case StallerKind::kGreedyMin: return pick_greedy_min(s);
    case StallerKind::kMinimax:
      if (solver == nullptr) throw GameError("minimax adversary needs a solver");
      return *solver->solve(s).principal_move;
    case StallerKind::kAntiWeighting: return pick_anti_weighting(s, ledger);
  }
  throw GameError("unknown adversary");
}

PlayoutResult play_out(const RootedForest& f, const StrategyConfig& config,
                       const AdversaryPolicy& adversary, bool checks, ExactSolver* solver) {
  std::unique_ptr<ExactSolver> owned;
  if (adversary.kind == StallerKind::kMinimax && solver == nullptr) {
    owned = std::make_unique<ExactSolver>(f);
    solver = owned.get();
  }
  GameState s(f, first_player(config.game));
  StrategyContext ctx(f, config, checks);
  while (!s.over()) {
    if (s.to_move() == Player::kDominator) {
      dominator_turn(s, ctx);
    } else {
      staller_turn(s, ctx, staller_pick(s, ctx.ledger, adversary, solver));
    }
  }
  PlayoutResult r;
  r.summary = summarize(s, ctx);
  r.violations = ctx.monitor.take_violations();
  r.trace = std::move(ctx.records);
  return r;
}

namespace {

class Explorer {
 public:
  Explorer(const ExhaustiveOptions& opt, ExhaustiveResult& out) : opt_(opt), out_(out) {}

  void visit(GameState& s, StrategyContext& ctx) {
    if (++out_.nodes > opt_.max_nodes) {
      throw CapacityError("exhaustive search exceeded " + std::to_string(opt_.max_nodes) +
                          " nodes");
    }
    if (s.over()) {
      leaf(s, ctx);
      return;
    }
    if (s.to_move() == Player::kDominator) {
      const TurnOutcome o = dominator_turn(s, ctx);
      harvest(ctx);
      visit(s, ctx);
      s.undo(o);
      return;
    }
    for (Vertex v : s.legal_moves()) {
      StrategyContext child = ctx;
      const TurnOutcome o = staller_turn(s, child, v);
      harvest(child);
      visit(s, child);
      s.undo(o);
    }
  }

 private:
  void harvest(StrategyContext& ctx) {
    for (auto& v : ctx.monitor.take_violations()) {
      ++out_.violation_count;
      if (out_.violations.size() < opt_.max_violations_kept) out_.violations.push_back(std::move(v));
    }
  }

  void leaf(const GameState& s, const StrategyContext& ctx) {
    ++out_.leaves;
    const PlayoutSummary sum = summarize(s, ctx);
    out_.max_c_star2 = std::max(out_.max_c_star2, sum.c_star2);
    const int slack = 5 * sum.moves - (3 * sum.n - sum.bonus_sum + sum.c_star2);
    out_.worst_slack = std::max(out_.worst_slack, slack);
    if (sum.moves > out_.max_length || out_.leaves == 1) {
      out_.max_length = sum.moves;
      out_.worst_trace = ctx.records;
      out_.worst_summary = sum;
    }
  }

  const ExhaustiveOptions& opt_;
  ExhaustiveResult& out_;
};

}  // namespace

ExhaustiveResult exhaustive_worst(const RootedForest& f, const StrategyConfig& config,
                                  const ExhaustiveOptions& options) {
  ExhaustiveResult out;
  GameState s(f, first_player(config.game));
  StrategyContext ctx(f, config, options.checks);
  Explorer(options, out).visit(s, ctx);
  return out;
}

}  // namespace domgame
