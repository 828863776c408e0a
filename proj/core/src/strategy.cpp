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

#include "domgame/strategy.hpp"

#include <algorithm>

#include "domgame/error.hpp"

namespace domgame {

std::string phase_name(Phase p) {
  switch (p) {
    case Phase::kP1_0: return "P1.0";
    case Phase::kP1_1: return "P1.1";
    case Phase::kP1: return "P1";
    case Phase::kP2: return "P2";
    case Phase::kP3: return "P3";
    case Phase::kP4: return "P4";
    case Phase::kDone: return "done";
  }
  return "?";
}

std::string policy_name(DominatorPolicy p) {
  return p == DominatorPolicy::kGreedy ? "greedy" : "breaking-p5";
}

std::string weight_case_name(WeightCase c) {
  switch (c) {
    case WeightCase::kNone: return "-";
    case WeightCase::kDominator: return "dominator";
    case WeightCase::kOpening: return "opening";
    case WeightCase::kA: return "A";
    case WeightCase::kB: return "B";
    case WeightCase::kC: return "C";
    case WeightCase::kD: return "D";
    case WeightCase::kEa: return "E.a";
    case WeightCase::kEb: return "E.b";
    case WeightCase::kEc: return "E.c";
  }
  return "?";
}

// -- Position queries --------------------------------------------------------

namespace {

// Neighbors u of `center` with color `mid` that own a white leaf of F.
int white_leaf_arms(const GameState& s, Vertex center, Color mid) {
  const auto& f = s.forest();
  int arms = 0;
  for (Vertex u : f.neighbors(center)) {
    if (s.color(u) != mid) continue;
    for (Vertex l : f.neighbors(u)) {
      if (l != center && f.is_leaf(l) && s.color(l) == Color::kWhite) {
        ++arms;
        break;
      }
    }
  }
  return arms;
}

}  // namespace

std::vector<Vertex> dangerous_centers(const GameState& s) {
  std::vector<Vertex> out;
  for (Vertex d = 0; d < s.size(); ++d) {
    if (s.color(d) == Color::kWhite && white_leaf_arms(s, d, Color::kWhite) >= 2) {
      out.push_back(d);
    }
  }
  return out;
}

std::vector<Vertex> critical_centers(const GameState& s) {
  // A white vertex keeps its whole neighborhood in the residual forest, so
  // a white end is a residual leaf exactly when it is a leaf of F, and the
  // blue-white edges of the path survive.
  std::vector<Vertex> out;
  for (Vertex c = 0; c < s.size(); ++c) {
    if (s.color(c) == Color::kBlue && white_leaf_arms(s, c, Color::kWhite) >= 2) {
      out.push_back(c);
    }
  }
  return out;
}

SubtreePartition subtree_partition(const GameState& s, Vertex u) {
  if (s.color(u) == Color::kRed) {
    throw GameError("subtree partition of red vertex " + std::to_string(u));
  }
  const auto& f = s.forest();
  const int hu = f.height(u);
  auto flood = [&](bool upward_only) {
    std::vector<char> seen(s.size(), 0);
    std::vector<Vertex> out{u};
    seen[u] = 1;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (Vertex y : f.neighbors(out[i])) {
        if (seen[y] || s.color(y) == Color::kRed) continue;
        if (upward_only && f.height(y) < hu) continue;
        seen[y] = 1;
        out.push_back(y);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  SubtreePartition p;
  p.c = flood(false);
  p.c_plus = flood(true);
  std::set_difference(p.c.begin(), p.c.end(), p.c_plus.begin(), p.c_plus.end(),
                      std::back_inserter(p.c_minus));
  return p;
}

// -- Ledger ----------------------------------------------------------------------

StrategyLedger::StrategyLedger(const RootedForest& f, StrategyConfig config)
    : config_(config),
      flags_(classify(f)),
      phase_(config.policy == DominatorPolicy::kBreakingP5 ? Phase::kP1_0 : Phase::kP1),
      highlighted_(f.size(), 0),
      p5_child_(f.size(), kNoVertex),
      weight_(f.size(), -1) {
  for (const auto& p : f.p5_paths()) dangerous_.push_back(p.center());
  std::sort(dangerous_.begin(), dangerous_.end());
  dangerous_.erase(std::unique(dangerous_.begin(), dangerous_.end()), dangerous_.end());
}

bool StrategyLedger::is_dangerous(Vertex v) const {
  return std::binary_search(dangerous_.begin(), dangerous_.end(), v);
}

std::vector<Vertex> StrategyLedger::highlighted_set() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(highlighted_.size()); ++v) {
    if (highlighted_[v]) out.push_back(v);
  }
  return out;
}

std::optional<int> StrategyLedger::weight(Vertex v) const {
  if (weight_[v] < 0) return std::nullopt;
  return weight_[v];
}

std::vector<std::pair<Vertex, int>> StrategyLedger::weights() const {
  std::vector<std::pair<Vertex, int>> out;
  for (Vertex v = 0; v < static_cast<Vertex>(weight_.size()); ++v) {
    if (weight_[v] >= 0) out.emplace_back(v, weight_[v]);
  }
  return out;
}

int StrategyLedger::e_star2() const {
  if (config_.game == GameType::kSGame && !bonuses_.empty()) return bonus_sum_ - bonuses_.front();
  return bonus_sum_;
}

std::optional<int> StrategyLedger::opening_bonus() const {
  if (config_.game != GameType::kSGame || bonuses_.empty()) return std::nullopt;
  return bonuses_.front();
}

void StrategyLedger::force_weight(Vertex v, int w) {
  if (weight_[v] >= 0) weight_sum_ -= weight_[v];
  weight_[v] = static_cast<std::int8_t>(w);
  if (w >= 0) weight_sum_ += w;
}

namespace {

struct Candidate {
  Vertex v;
  MovePreview pv;
};

// Prefers larger gain, then smaller index.
template <class Pred>
std::optional<Vertex> best_where(const std::vector<Candidate>& cands, Pred pred) {
  const Candidate* best = nullptr;
  for (const auto& c : cands) {
    if (!pred(c)) continue;
    if (!best || c.pv.points > best->pv.points) best = &c;
  }
  if (!best) return std::nullopt;
  return best->v;
}

bool white_stem_with_white_leaf(const GameState& s, Vertex v) {
  if (s.color(v) != Color::kWhite) return false;
  const auto& f = s.forest();
  for (Vertex l : f.neighbors(v)) {
    if (f.is_leaf(l) && s.color(l) == Color::kWhite) return true;
  }
  return false;
}

}  // namespace

DominatorChoice next_dominator_move(const GameState& s, StrategyLedger& ledger) {
  if (s.over()) throw GameError("game is over");
  if (s.to_move() != Player::kDominator) throw GameError("not Dominator's turn");
  auto& L = ledger;
  const auto& f = s.forest();

  std::vector<Candidate> cands;
  for (Vertex v : s.legal_moves()) cands.push_back({v, s.preview(v)});

  // The era closes when the pointer leaves P1.0 (breaking-P5) or P1 (greedy).
  auto advance = [&](Phase next) {
    const bool era_phase = L.phase_ == Phase::kP1_0 || L.phase_ == Phase::kP1;
    if (era_phase && L.era_open()) {
      L.k_star2_ = s.turn();
      L.c_star2_ = static_cast<int>(critical_centers(s).size());
    }
    L.phase_ = next;
  };

  for (;;) {
    switch (L.phase_) {
      case Phase::kP1_0: {
        if (L.config_.policy == DominatorPolicy::kBreakingP5 && !L.dangerous_.empty()) {
          Vertex d = L.dangerous_.front();
          for (Vertex c : L.dangerous_) {
            if (f.height(c) > f.height(d)) d = c;
          }
          DangerousPair pair = dangerous_pair(f, d, L.config_.tie_rule);
          return {pair.related, d, Phase::kP1_0, pair.tie_broken};
        }
        advance(Phase::kP1_1);
        break;
      }
      case Phase::kP1_1:
      case Phase::kP1: {
        auto v = best_where(cands, [](const Candidate& c) {
          return c.pv.points >= 7 && c.pv.new_reds >= 2;
        });
        if (v) return {*v, std::nullopt, L.phase_, false};
        advance(Phase::kP2);
        break;
      }
      case Phase::kP2: {
        auto v = best_where(cands, [](const Candidate& c) { return c.pv.points >= 7; });
        if (v) return {*v, std::nullopt, Phase::kP2, false};
        L.phase_ = Phase::kP3;
        break;
      }
      case Phase::kP3: {
        int top = 0;
        for (const auto& c : cands) top = std::max(top, c.pv.points);
        if (top >= 6) {
          auto stem = best_where(cands, [&](const Candidate& c) {
            return c.pv.points == top && white_stem_with_white_leaf(s, c.v);
          });
          if (stem) return {*stem, std::nullopt, Phase::kP3, false};
          auto v = best_where(cands, [&](const Candidate& c) { return c.pv.points == top; });
          return {*v, std::nullopt, Phase::kP3, false};
        }
        L.phase_ = Phase::kP4;
        break;
      }
      case Phase::kP4: {
        auto v = best_where(cands, [](const Candidate& c) { return c.pv.points >= 3; });
        if (!v) throw GameError("no legal move");
        return {*v, std::nullopt, Phase::kP4, false};
      }
      case Phase::kDone:
        throw GameError("strategy already finished");
    }
  }
}

void ledger_update(StrategyLedger& ledger, const GameState& after, const TurnOutcome& out,
                   std::optional<Vertex> elected) {
  auto& L = ledger;
  const auto& hist = after.history();
  if (hist.empty() || hist.back().vertex != out.vertex || hist.back().player != out.player) {
    throw StrategyError("mover inconsistent with history");
  }
  if (elected && out.player != Player::kDominator) {
    throw StrategyError("only Dominator elects");
  }
  const auto& f = after.forest();
  const int k = after.turn();
  auto before = [&](Vertex x) { return out.color_before(x, after.color(x)); };

  if (L.era_open()) {
    const std::vector<char> h_prev = L.highlighted_;
    auto set_new_blues = [&](int w) {
      for (Vertex b : out.new_blues) L.weight_[b] = static_cast<std::int8_t>(w);
    };
    WeightCase wc = WeightCase::kDominator;
    int bonus = 0;

    if (out.player == Player::kDominator) {
      bonus = out.points - 7;
      set_new_blues(1);
      if (elected) {
        const Vertex d = *elected;
        if (!L.is_dangerous(d)) {
          throw StrategyError("elected vertex " + std::to_string(d) + " is not a dangerous center");
        }
        if (after.color(d) != Color::kBlue) {
          throw StrategyError("elected center " + std::to_string(d) + " did not turn blue");
        }
        DangerousPair pair = dangerous_pair(f, d, L.config_.tie_rule);
        L.highlighted_[d] = 1;
        L.ever_highlighted_.push_back(d);
        L.p5_child_[d] = pair.p5_child;
        L.elected_[k] = d;
        if (pair.tie_broken) L.tie_turns_.push_back(k);
        L.weight_[d] = 0;
      }
    } else if (L.config_.game == GameType::kSGame && k == 1) {
      wc = WeightCase::kOpening;
      bonus = out.points - 5;
      set_new_blues(1);
    } else {
      bonus = out.points - 3;
      const Vertex v = out.vertex;
      // Highlighted vertex whose P5-child is v (the parent of v, if any).
      Vertex owner = kNoVertex;
      for (Vertex d : L.ever_highlighted_) {
        if (h_prev[d] && L.p5_child_[d] == v) owner = d;
      }
      if (before(v) == Color::kWhite) {
        if (owner != kNoVertex) {
          wc = WeightCase::kB;
          set_new_blues(0);
          L.weight_[owner] = 1;
        } else {
          wc = WeightCase::kA;
          set_new_blues(1);
        }
      } else if (h_prev[v]) {
        const Vertex a2 = L.p5_child_[v];
        switch (before(a2)) {
          case Color::kWhite:
            wc = WeightCase::kEa;
            set_new_blues(1);
            if (after.color(a2) == Color::kBlue) L.weight_[a2] = 0;
            break;
          case Color::kBlue:
            wc = WeightCase::kEb;
            set_new_blues(1);
            if (after.color(a2) == Color::kBlue) L.weight_[a2] = 0;
            break;
          case Color::kRed:
            wc = WeightCase::kEc;
            set_new_blues(1);
            break;
        }
      } else if (owner != kNoVertex) {
        wc = WeightCase::kD;
        set_new_blues(0);
        L.weight_[owner] = 1;
      } else {
        wc = WeightCase::kC;
        if (L.weight_[v] < 0) {
          throw StrategyError("blue vertex " + std::to_string(v) + " has no weight");
        }
        set_new_blues(L.weight_[v]);
      }
    }

    // Additional process: a P5-child of a highlighted vertex that went red
    // without being played gives its highlighter weight 1.
    for (Vertex d : L.ever_highlighted_) {
      if (!h_prev[d]) continue;
      const Vertex a2 = L.p5_child_[d];
      if (a2 == out.vertex || after.color(a2) != Color::kRed) continue;
      const Color from = before(a2);
      if (from == Color::kBlue || (L.config_.additional_on_white && from == Color::kWhite)) {
        L.weight_[d] = 1;
      }
    }

    int sum = 0;
    for (Vertex x = 0; x < after.size(); ++x) {
      if (after.color(x) != Color::kBlue) {
        L.weight_[x] = -1;
        L.highlighted_[x] = 0;
      } else if (L.weight_[x] > 0) {
        sum += L.weight_[x];
      }
    }
    L.weight_sum_ = sum;
    L.bonuses_.push_back(bonus);
    L.bonus_sum_ += bonus;
    L.last_case_ = wc;
    if (after.over()) {
      L.k_star2_ = k;
      L.c_star2_ = 0;
    }
  } else {
    L.last_case_ = WeightCase::kNone;
  }
  L.dangerous_ = dangerous_centers(after);
  if (after.over()) L.phase_ = Phase::kDone;
}

// -- Invariants ------------------------------------------------------------------

namespace {

bool sorted_contains(const std::vector<Vertex>& xs, Vertex v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

bool intersects(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

std::string vs(Vertex v) { return std::to_string(v); }

}  // namespace

std::vector<Violation> check_invariants(const StrategyLedger& ledger, const GameState& s) {
  std::vector<Violation> out;
  const int k = s.turn();
  auto add = [&](std::string check, std::string detail) {
    out.push_back({k, std::move(check), std::move(detail)});
  };
  const auto& f = s.forest();

  if (auto msg = s.audit(); !msg.empty()) add("state-audit", msg);

  for (Vertex v = 0; v < s.size(); ++v) {
    const Color c = s.color(v);
    if (c == Color::kRed) continue;
    const int rd = s.residual_degree(v);
    if (c == Color::kWhite && rd != f.degree(v)) {
      add("white-neighborhood", "white " + vs(v) + " lost residual neighbors");
    }
    if (rd == 0) add("residual-isolated", "residual vertex " + vs(v) + " is isolated");
    if (c == Color::kWhite && rd == 1 && !f.is_leaf(v)) {
      add("no-new-white-leaf", "white residual leaf " + vs(v) + " is not a leaf of F");
    }
  }

  const auto& cfg = ledger.config();
  if (cfg.policy != DominatorPolicy::kBreakingP5) return out;

  const auto& D = ledger.dangerous();
  for (Vertex d : ledger.ever_highlighted()) {
    if (s.color(d) == Color::kRed) continue;
    if (intersects(subtree_partition(s, d).c_plus, D)) {
      add("highlighted-subtree-dangerous", "C+(" + vs(d) + ") meets the dangerous set");
    }
  }

  if (!ledger.flags().weakly_sk13_free || !ledger.in_era(k)) return out;

  int sum = 0;
  for (Vertex v = 0; v < s.size(); ++v) {
    const bool blue = s.color(v) == Color::kBlue;
    if (ledger.highlighted(v) && !blue) add("ledger-H-in-B", vs(v) + " highlighted but not blue");
    if (blue != ledger.weight(v).has_value()) {
      add("ledger-weight-domain", "weight domain differs from blue set at " + vs(v));
    }
    if (auto w = ledger.weight(v)) sum += *w;
  }
  if (sum != ledger.weight_sum()) add("ledger-K", "K does not match the weight sum");

  const int slack = cfg.game == GameType::kSGame ? 2 : 0;
  if (ledger.weight_sum() > ledger.bonus_sum() + slack) {
    add("invariant-I", "K=" + std::to_string(ledger.weight_sum()) +
                       " exceeds S=" + std::to_string(ledger.bonus_sum()) +
                       (slack ? "+2" : ""));
  }

  const auto crit = critical_centers(s);
  for (Vertex v = 0; v < s.size(); ++v) {
    if (s.color(v) != Color::kBlue || ledger.weight(v) != 0) continue;
    if (!ledger.highlighted(v)) {
      auto part = subtree_partition(s, v);
      if (!part.c_minus.empty()) add("invariant-II", "C-(" + vs(v) + ") is not empty");
      if (intersects(part.c_plus, D)) add("invariant-II", "C+(" + vs(v) + ") meets the dangerous set");
    }
    if (sorted_contains(crit, v)) add("invariant-III", "weight-0 vertex " + vs(v) + " is critical");
  }
  return out;
}

InvariantMonitor::InvariantMonitor(const RootedForest& f, const StrategyConfig& config)
    : forest_(&f), config_(config), settled_noncritical_(f.size(), 0) {
  for (const auto& p : f.p5_paths()) prev_dangerous_.push_back(p.center());
  std::sort(prev_dangerous_.begin(), prev_dangerous_.end());
  prev_dangerous_.erase(std::unique(prev_dangerous_.begin(), prev_dangerous_.end()),
                        prev_dangerous_.end());
}

void InvariantMonitor::add(int turn, std::string check, std::string detail) {
  violations_.push_back({turn, std::move(check), std::move(detail)});
}

std::vector<Violation> InvariantMonitor::take_violations() {
  std::vector<Violation> out;
  out.swap(violations_);
  return out;
}

void InvariantMonitor::after_turn(const GameState& s, const StrategyLedger& ledger,
                                  const TurnOutcome& out,
                                  const std::optional<DominatorChoice>& choice) {
  const int k = s.turn();
  total_points_ += out.points;
  if (out.points < 3) add(k, "move-gain", "move seized fewer than 3 points");

  if (choice) {
    const int pts = out.points;
    const int reds = static_cast<int>(out.new_reds.size());
    bool ok = true;
    switch (choice->phase) {
      case Phase::kP1_0:
      case Phase::kP1_1:
      case Phase::kP1: ok = pts >= 7 && reds >= 2; break;
      case Phase::kP2: ok = pts >= 7; break;
      case Phase::kP3: ok = pts >= 6; break;
      case Phase::kP4: ok = pts >= 3; break;
      case Phase::kDone: ok = false; break;
    }
    if (!ok) {
      add(k, "phase-threshold", phase_name(choice->phase) + " move seized " + std::to_string(pts) +
                                    " points with " + std::to_string(reds) + " new reds");
    }
  }

  const auto& D = ledger.dangerous();
  if (!std::includes(prev_dangerous_.begin(), prev_dangerous_.end(), D.begin(), D.end())) {
    add(k, "dangerous-monotone", "a new dangerous center appeared");
  }

  const auto crit = critical_centers(s);
  for (Vertex c : crit) {
    if (settled_noncritical_[c]) {
      add(k, "critical-reappeared", "blue " + vs(c) + " became critical after being non-critical");
    }
  }
  for (Vertex v = 0; v < s.size(); ++v) {
    if (s.color(v) == Color::kBlue && !sorted_contains(crit, v)) settled_noncritical_[v] = 1;
  }
  if (auto ks = ledger.k_star2(); ks && k > *ks) {
    if (!std::includes(prev_critical_.begin(), prev_critical_.end(), crit.begin(), crit.end())) {
      add(k, "no-new-critical-after-era", "new critical center after turn " + std::to_string(*ks));
    }
  }

  if (config_.policy == DominatorPolicy::kBreakingP5 && choice) {
    if (choice->elected) {
      const Vertex d = *choice->elected;
      const Vertex a2 = ledger.p5_child_of(d);
      if (a2 == kNoVertex || s.color(a2) != Color::kWhite) {
        add(k, "p5-child-color", "P5-child of newly highlighted " + vs(d) + " is not white");
      }
      for (Vertex e : ledger.ever_highlighted()) {
        if (e == d) continue;
        if (ledger.p5_child_of(e) == d || ledger.p5_child_of(d) == e) {
          add(k, "highlighted-parent-child", "highlighted " + vs(d) + " and " + vs(e) + " are parent/P5-child");
        }
      }
    }
    if (choice->phase == Phase::kP1_0) {
      for (Vertex e : ledger.ever_highlighted()) {
        const Vertex a2 = ledger.p5_child_of(e);
        if (out.color_before(a2, s.color(a2)) != s.color(a2)) {
          add(k, "p5-child-color", "Dominator changed the color of P5-child " + vs(a2));
        }
      }
    }
  }

  for (auto& v : check_invariants(ledger, s)) violations_.push_back(std::move(v));
  prev_dangerous_ = D;
  prev_critical_ = crit;
}

void InvariantMonitor::at_end(const GameState& s, const StrategyLedger& ledger) {
  const int k = s.turn();
  const int n = forest_->size();
  if (total_points_ != 3 * n) {
    add(k, "points-sum", "points sum to " + std::to_string(total_points_) + ", expected " +
                             std::to_string(3 * n));
  }
  const int S = ledger.bonus_sum();
  const int c = ledger.c_star2();
  if (5 * k > 3 * n - S + c) {
    add(k, "bound-arithmetic", std::to_string(k) + " moves exceed (3n - " + std::to_string(S) +
                                   " + " + std::to_string(c) + ")/5");
  }
  if (config_.policy == DominatorPolicy::kBreakingP5 && ledger.flags().weakly_sk13_free) {
    const int slack = config_.game == GameType::kSGame ? 2 : 0;
    if (c > S + slack) {
      add(k, "critical-vs-bonus", "c**=" + std::to_string(c) + " exceeds bonus " +
                                      std::to_string(S) + (slack ? "+2" : ""));
    }
  }
  if (ledger.flags().no_leaves_at_distance4 && c != 0) {
    add(k, "no-dist4-critical", "critical centers on a forest without leaves at distance 4");
  }
}

// -- Driving a game -----------------------------------------------------------------

StrategyContext::StrategyContext(const RootedForest& f, StrategyConfig config, bool run_checks)
    : ledger(f, config), monitor(f, config), checks(run_checks) {}

namespace {

TurnRecord make_record(const GameState& s, const StrategyLedger& L, const TurnOutcome& out,
                       const std::optional<DominatorChoice>& choice) {
  TurnRecord r;
  r.k = s.turn();
  r.player = out.player;
  r.vertex = out.vertex;
  r.points = out.points;
  if (choice) {
    r.elected = choice->elected;
    r.tie_broken = choice->tie_broken;
    r.phase = choice->phase;
  } else {
    r.phase = L.phase();
  }
  if (L.in_era(r.k) && static_cast<int>(L.bonuses().size()) >= r.k) r.bonus = L.bonuses()[r.k - 1];
  r.weight_case = L.last_case();
  r.dangerous = static_cast<int>(L.dangerous().size());
  // The ledger is frozen after the era; only K and S carry over.
  if (L.in_era(r.k)) {
    r.highlighted = L.highlighted_set();
    r.weights = L.weights();
  }
  r.weight_sum = L.weight_sum();
  r.bonus_sum = L.bonus_sum();
  r.critical = static_cast<int>(critical_centers(s).size());
  for (Color c : s.colors()) {
    if (c == Color::kWhite) ++r.whites;
    else if (c == Color::kBlue) ++r.blues;
    else ++r.reds;
  }
  return r;
}

void after_move(GameState& s, StrategyContext& ctx, const TurnOutcome& out,
                const std::optional<DominatorChoice>& choice) {
  ledger_update(ctx.ledger, s, out, choice ? choice->elected : std::nullopt);
  if (ctx.checks) ctx.monitor.after_turn(s, ctx.ledger, out, choice);
  ctx.records.push_back(make_record(s, ctx.ledger, out, choice));
  if (s.over()) finish_game(s, ctx);
}

}  // namespace

TurnOutcome dominator_turn(GameState& s, StrategyContext& ctx) {
  DominatorChoice choice = next_dominator_move(s, ctx.ledger);
  TurnOutcome out = s.apply_move(choice.vertex);
  after_move(s, ctx, out, choice);
  return out;
}

TurnOutcome staller_turn(GameState& s, StrategyContext& ctx, Vertex v) {
  if (s.to_move() != Player::kStaller) throw GameError("not Staller's turn");
  TurnOutcome out = s.apply_move(v);
  after_move(s, ctx, out, std::nullopt);
  return out;
}

void finish_game(const GameState& s, StrategyContext& ctx) {
  if (ctx.checks) ctx.monitor.at_end(s, ctx.ledger);
}

PlayoutSummary summarize(const GameState& s, const StrategyContext& ctx) {
  PlayoutSummary p;
  p.n = s.size();
  p.game = ctx.ledger.config().game;
  p.moves = s.turn();
  for (const auto& r : ctx.records) p.total_points += r.points;
  p.k_star2 = ctx.ledger.k_star2().value_or(s.turn());
  p.c_star2 = ctx.ledger.c_star2();
  p.e_star2 = ctx.ledger.e_star2();
  p.bonus_sum = ctx.ledger.bonus_sum();
  p.opening_bonus = ctx.ledger.opening_bonus();
  return p;
}

}  // namespace domgame
