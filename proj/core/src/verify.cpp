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

#include "domgame/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <functional>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "domgame/error.hpp"
#include "domgame/generate.hpp"
#include "domgame/solver.hpp"

namespace domgame {

using ordered_json = nlohmann::ordered_json;

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_string(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

long long to_int(std::string_view tok, const std::string& what) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty()) {
    throw InputError("bad " + what + " '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto cut = s.find(sep, start);
    out.emplace_back(s.substr(start, cut - start));
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return out;
}

std::string join_roots(const RootedForest& f) {
  std::string out;
  for (Vertex r : f.roots()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(r);
  }
  return out;
}

}  // namespace

// -- Option parsing ---------------------------------------------------------------

ClassFilter parse_class_filter(const std::string& s) {
  if (s == "all") return ClassFilter::kAll;
  if (s == "weakly-free" || s == "weakly_free") return ClassFilter::kWeaklyFree;
  if (s == "no-dist4" || s == "no_dist4") return ClassFilter::kNoDist4;
  throw InputError("unknown class filter: " + s);
}

std::string class_filter_name(ClassFilter c) {
  switch (c) {
    case ClassFilter::kAll: return "all";
    case ClassFilter::kWeaklyFree: return "weakly-free";
    case ClassFilter::kNoDist4: return "no-dist4";
  }
  return "?";
}

RootOptions parse_root_options(const std::string& s) {
  RootOptions r;
  if (s == "default") return r;
  if (s == "sweep") {
    r.mode = RootMode::kSweep;
    return r;
  }
  if (s.rfind("random:", 0) == 0) {
    r.mode = RootMode::kRandom;
    r.count = static_cast<int>(to_int(std::string_view(s).substr(7), "root count"));
    if (r.count < 1) throw InputError("root count must be positive");
    return r;
  }
  throw InputError("unknown root mode: " + s);
}

BatchAdversary parse_batch_adversary(const std::string& s) {
  BatchAdversary a;
  if (s == "exhaustive") return a;
  a.exhaustive = false;
  auto parts = split(s, ':');
  a.kind = parse_adversary(parts[0]);
  if (parts.size() > 2) throw InputError("bad adversary: " + s);
  if (parts.size() == 2) {
    a.playouts = static_cast<int>(to_int(parts[1], "playout count"));
    if (a.playouts < 1) throw InputError("playout count must be positive");
  }
  return a;
}

GameType parse_game_type(const std::string& s) {
  if (s == "d" || s == "D") return GameType::kDGame;
  if (s == "s" || s == "S") return GameType::kSGame;
  throw InputError("unknown game type: " + s);
}

std::string game_type_name(GameType g) { return g == GameType::kDGame ? "D" : "S"; }

DominatorPolicy parse_dominator_policy(const std::string& s) {
  if (s == "greedy") return DominatorPolicy::kGreedy;
  if (s == "breaking-p5" || s == "breaking_p5") return DominatorPolicy::kBreakingP5;
  throw InputError("unknown dominator policy: " + s);
}

ReportFormat parse_report_format(const std::string& s) {
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "jsonl") return ReportFormat::kJsonl;
  throw InputError("unknown report format: " + s);
}

int class_bound(int n, GameType g, DominatorPolicy policy, const ClassFlags& flags,
                ClassFilter filter) {
  if (g == GameType::kDGame) return 3 * n / 5;
  if (policy == DominatorPolicy::kGreedy && filter == ClassFilter::kNoDist4 &&
      flags.no_leaves_at_distance4) {
    return (3 * n + 1) / 5;
  }
  return (3 * n + 2) / 5;
}

std::string flags_string(const ClassFlags& flags) {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ';';
    s += name;
  };
  add(flags.weakly_sk13_free, "weakly-free");
  add(flags.no_leaves_at_distance4, "no-dist4");
  add(flags.disjoint_union_of_edges, "edges");
  return s.empty() ? "-" : s;
}

// -- Sources ------------------------------------------------------------------------

std::vector<BatchItem> expand_sources(const BatchConfig& config) {
  std::vector<BatchItem> items;
  for (const auto& src : config.sources) {
    auto colon = src.find(':');
    if (colon == std::string::npos) throw InputError("bad source: " + src);
    const std::string kind = src.substr(0, colon);
    const std::string arg = src.substr(colon + 1);
    if (kind == "enum") {
      int lo = 2, hi = 0;
      if (auto dash = arg.find('-'); dash != std::string::npos) {
        lo = static_cast<int>(to_int(std::string_view(arg).substr(0, dash), "order"));
        hi = static_cast<int>(to_int(std::string_view(arg).substr(dash + 1), "order"));
      } else {
        hi = static_cast<int>(to_int(arg, "order"));
      }
      lo = std::max(lo, 2);
      if (hi > kMaxEnumerationOrder) throw InputError("enumeration order too large: " + arg);
      for (int n = lo; n <= hi; ++n) {
        FreeTreeEnumerator en(n);
        int i = 0;
        while (auto t = en.next()) {
          items.push_back({"enum:" + std::to_string(n) + "#" + std::to_string(i++), std::move(*t)});
        }
      }
    } else if (kind == "pairs") {
      const int total = static_cast<int>(to_int(arg, "order"));
      if (total > kMaxEnumerationOrder) throw InputError("pair order too large: " + arg);
      std::vector<std::vector<RootedForest>> trees(std::max(total - 1, 0));
      for (int n = 2; n <= total - 2; ++n) trees[n] = enumerate_trees(n);
      for (int a = 2; 2 * a <= total; ++a) {
        for (int b = a; a + b <= total; ++b) {
          for (std::size_t i = 0; i < trees[a].size(); ++i) {
            for (std::size_t j = (a == b ? i : 0); j < trees[b].size(); ++j) {
              std::vector<Edge> edges = trees[a][i].edges();
              for (auto [u, v] : trees[b][j].edges()) edges.emplace_back(u + a, v + a);
              items.push_back({"pairs:" + std::to_string(a) + "#" + std::to_string(i) + "+" +
                                   std::to_string(b) + "#" + std::to_string(j),
                               RootedForest::build(a + b, std::move(edges))});
            }
          }
        }
      }
    } else if (kind == "files") {
      for (const auto& path : split(arg, ',')) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        try {
          const RootSpec spec = declares_roots(text) ? RootSpec{RootPolicy::kGiven, 0, {}}
                                                     : RootSpec::min_index();
          items.push_back({path, parse_forest(text, spec)});
        } catch (const InputError& e) {
          throw InputError(path + ": " + e.what());
        }
      }
    } else if (kind == "family") {
      items.push_back({src, generate_family(parse_family(arg))});
    } else if (kind == "random" || kind == "random-wf") {
      auto parts = split(arg, ':');
      if (parts.size() != 3) throw InputError("expected " + kind + ":COUNT:NMAX:SEED");
      const long long count = to_int(parts[0], "count");
      const long long nmax = to_int(parts[1], "order");
      const auto seed = static_cast<std::uint64_t>(to_int(parts[2], "seed"));
      if (count < 0 || nmax < 2 || nmax > 64) throw InputError("bad random source: " + src);
      for (long long i = 0; i < count; ++i) {
        const std::uint64_t s = mix(seed * 0x100000001b3ULL + static_cast<std::uint64_t>(i));
        const int n = 2 + static_cast<int>(s % static_cast<std::uint64_t>(nmax - 1));
        RootedForest f = kind == "random" ? random_tree(n, s) : random_weakly_free_tree(n, s);
        items.push_back({kind + ":" + parts[2] + "#" + std::to_string(i) + "/seed=" +
                             std::to_string(s),
                         std::move(f)});
      }
    } else {
      throw InputError("unknown source kind: " + kind);
    }
  }
  return items;
}

// -- Batch ----------------------------------------------------------------------------

namespace {

bool row_in_class(const ClassFlags& flags, ClassFilter filter) {
  switch (filter) {
    case ClassFilter::kNoDist4: return flags.no_leaves_at_distance4;
    case ClassFilter::kAll:
    case ClassFilter::kWeaklyFree: return flags.weakly_sk13_free;
  }
  return false;
}

std::vector<RootedForest> root_choices(const BatchItem& item, const BatchConfig& config) {
  const RootedForest& f = item.forest;
  std::vector<RootedForest> out;
  const std::uint64_t base = mix(config.seed ^ hash_string(item.id));
  switch (config.roots.mode) {
    case RootMode::kDefault:
      out.push_back(f);
      break;
    case RootMode::kSweep: {
      std::vector<Vertex> pivots;
      if (f.size() <= config.roots.sweep_threshold) {
        for (Vertex v = 0; v < f.size(); ++v) pivots.push_back(v);
      } else {
        for (int i = 0; i < config.roots.sweep_sample; ++i) {
          pivots.push_back(static_cast<Vertex>(mix(base + i) % f.size()));
        }
        std::sort(pivots.begin(), pivots.end());
        pivots.erase(std::unique(pivots.begin(), pivots.end()), pivots.end());
      }
      for (Vertex p : pivots) {
        std::vector<Vertex> roots = f.roots();
        roots[f.component_of(p)] = p;
        out.push_back(f.with_roots(RootSpec::given(roots)));
      }
      break;
    }
    case RootMode::kRandom:
      for (int i = 0; i < config.roots.count; ++i) {
        out.push_back(f.with_roots(RootSpec::random(mix(base + 1000003ULL * i))));
      }
      break;
  }
  return out;
}

void keep(ReportRow& row, std::vector<Violation> vs, std::size_t cap = 16) {
  for (auto& v : vs) {
    ++row.violation_count;
    if (row.violations.size() < cap) row.violations.push_back(std::move(v));
  }
}

void run_rooted(ReportRow& row, const RootedForest& f, const BatchConfig& config,
                std::uint64_t seed) {
  StrategyConfig sc = config.strategy;
  sc.game = row.game;
  PlayoutSummary worst;
  int worst_len = -1;
  if (config.adversary.exhaustive) {
    ExhaustiveOptions opt;
    opt.max_nodes = config.node_cap;
    ExhaustiveResult r = exhaustive_worst(f, sc, opt);
    worst_len = r.max_length;
    worst = r.worst_summary;
    row.playouts = r.leaves;
    row.violation_count += r.violation_count - std::min<std::uint64_t>(r.violation_count, r.violations.size());
    keep(row, std::move(r.violations));
  } else {
    std::unique_ptr<ExactSolver> solver;
    if (config.adversary.kind == StallerKind::kMinimax) {
      solver = std::make_unique<ExactSolver>(f, config.solver_cap);
    }
    for (int i = 0; i < config.adversary.playouts; ++i) {
      AdversaryPolicy ap{config.adversary.kind, mix(seed + static_cast<std::uint64_t>(i))};
      PlayoutResult r = play_out(f, sc, ap, true, solver.get());
      ++row.playouts;
      keep(row, std::move(r.violations));
      if (r.summary.moves > worst_len) {
        worst_len = r.summary.moves;
        worst = r.summary;
      }
    }
  }
  row.strategy_worst = worst_len;
  row.e_star2 = worst.e_star2;
  row.c_star2 = worst.c_star2;
  row.k_star2 = worst.k_star2;
  if (row.gamma && config.adversary.exhaustive && *row.gamma > worst_len) {
    keep(row, {{0, "gamma-vs-worst",
                 "exact value " + std::to_string(*row.gamma) + " exceeds strategy worst " +
                     std::to_string(worst_len)}});
  }
}

std::vector<ReportRow> run_job(const BatchItem& item, GameType g, const BatchConfig& config) {
  const RootedForest& f = item.forest;
  const ClassFlags flags = classify(f);
  std::optional<int> gamma;
  std::string gamma_note;
  if (config.compute_gamma) {
    if (f.size() <= config.solver_cap) {
      gamma = game_value(f, g, config.solver_cap);
    } else {
      gamma_note = "solver cap";
    }
  }
  std::vector<ReportRow> rows;
  const auto rooted = root_choices(item, config);
  for (std::size_t i = 0; i < rooted.size(); ++i) {
    const RootedForest& fr = rooted[i];
    ReportRow row;
    row.forest_id = item.id;
    row.roots = join_roots(fr);
    row.n = f.size();
    row.flags = flags;
    row.game = g;
    row.in_class = row_in_class(flags, config.filter);
    row.gamma = gamma;
    row.bound = class_bound(row.n, g, config.strategy.policy, flags, config.filter);
    if (!row.in_class) {
      row.skipped = "out-of-class";
      row.holds = !gamma || *gamma <= row.bound;
      rows.push_back(std::move(row));
      continue;
    }
    const std::uint64_t seed = mix(config.seed ^ hash_string(item.id) ^ (i * 0x9e37ULL) ^
                                   (g == GameType::kSGame ? 0x5555ULL : 0));
    try {
      run_rooted(row, fr, config, seed);
      row.holds = row.strategy_worst && *row.strategy_worst <= row.bound &&
                  row.violation_count == 0;
    } catch (const CapacityError& e) {
      row.skipped = std::string("capacity: ") + e.what();
      row.holds = true;
    } catch (const StrategyError& e) {
      keep(row, {{0, "strategy-error", e.what()}});
      row.holds = false;
    }
    if (!gamma_note.empty() && row.skipped.empty()) row.skipped = gamma_note;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int VerificationReport::exit_code() const {
  for (const auto& r : rows) {
    if (r.in_class && (!r.holds || r.violation_count > 0)) return 1;
  }
  return 0;
}

std::uint64_t VerificationReport::total_playouts() const {
  std::uint64_t t = 0;
  for (const auto& r : rows) t += r.playouts;
  return t;
}

VerificationReport run_batch(const BatchConfig& config) {
  return run_batch(config, expand_sources(config));
}

VerificationReport run_batch(const BatchConfig& config, const std::vector<BatchItem>& items) {
  struct Job {
    const BatchItem* item;
    GameType game;
  };
  std::vector<Job> jobs;
  for (const auto& it : items) {
    for (GameType g : config.games) jobs.push_back({&it, g});
  }
  std::vector<std::vector<ReportRow>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        slots[i] = run_job(*jobs[i].item, jobs[i].game, config);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(jobs.size());
      }
    }
  };
  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  VerificationReport report;
  for (auto& s : slots) {
    for (auto& r : s) report.rows.push_back(std::move(r));
  }
  return report;
}

// -- Output ---------------------------------------------------------------------------

void write_report(std::ostream& os, const VerificationReport& report, ReportFormat format) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  if (format == ReportFormat::kCsv) {
    os << "forest_id,n,flags,gamma,bound,strategy_worst,e_star2,c_star2,k_star2,holds,"
          "game,roots,in_class,status,violations\n";
    for (const auto& r : report.rows) {
      os << r.forest_id << ',' << r.n << ',' << flags_string(r.flags) << ',' << opt(r.gamma)
         << ',' << r.bound << ',' << opt(r.strategy_worst) << ',' << r.e_star2 << ','
         << r.c_star2 << ',' << r.k_star2 << ',' << (r.holds ? "true" : "false") << ','
         << game_type_name(r.game) << ',' << r.roots << ',' << (r.in_class ? 1 : 0) << ','
         << (r.skipped.empty() ? "ok" : r.skipped) << ',' << r.violation_count << '\n';
    }
    return;
  }
  for (const auto& r : report.rows) {
    ordered_json j;
    j["forest_id"] = r.forest_id;
    j["n"] = r.n;
    j["flags"] = {{"weakly_free", r.flags.weakly_sk13_free},
                  {"no_dist4", r.flags.no_leaves_at_distance4},
                  {"edges", r.flags.disjoint_union_of_edges}};
    j["gamma"] = r.gamma ? ordered_json(*r.gamma) : ordered_json(nullptr);
    j["bound"] = r.bound;
    j["strategy_worst"] = r.strategy_worst ? ordered_json(*r.strategy_worst) : ordered_json(nullptr);
    j["e_star2"] = r.e_star2;
    j["c_star2"] = r.c_star2;
    j["k_star2"] = r.k_star2;
    j["holds"] = r.holds;
    j["game"] = game_type_name(r.game);
    j["roots"] = r.roots;
    j["in_class"] = r.in_class;
    j["status"] = r.skipped.empty() ? "ok" : r.skipped;
    j["playouts"] = r.playouts;
    j["violation_count"] = r.violation_count;
    ordered_json vs = ordered_json::array();
    for (const auto& v : r.violations) {
      vs.push_back({{"turn", v.turn}, {"check", v.check}, {"detail", v.detail}});
    }
    j["violations"] = std::move(vs);
    os << j.dump() << '\n';
  }
}

std::string trace_line(const TurnRecord& r) {
  ordered_json j;
  j["schema"] = kTraceSchemaVersion;
  j["k"] = r.k;
  j["player"] = r.player == Player::kDominator ? "dominator" : "staller";
  j["vertex"] = r.vertex;
  j["elected"] = r.elected ? ordered_json(*r.elected) : ordered_json(nullptr);
  j["tie_broken"] = r.tie_broken;
  j["points"] = r.points;
  j["e_k"] = r.bonus ? ordered_json(*r.bonus) : ordered_json(nullptr);
  j["phase"] = phase_name(r.phase);
  j["weight_case"] = weight_case_name(r.weight_case);
  j["D"] = r.dangerous;
  j["H"] = r.highlighted;
  ordered_json w = ordered_json::array();
  for (auto [v, x] : r.weights) w.push_back({v, x});
  j["weights"] = std::move(w);
  j["K"] = r.weight_sum;
  j["S"] = r.bonus_sum;
  j["critical"] = r.critical;
  j["colors"] = {{"W", r.whites}, {"B", r.blues}, {"R", r.reds}};
  return j.dump();
}

void write_trace(std::ostream& os, const std::vector<TurnRecord>& trace) {
  for (const auto& r : trace) os << trace_line(r) << '\n';
  if (!os) throw InputError("trace sink unwritable");
}

// -- Interactive play --------------------------------------------------------------------

namespace {

void show_colors(const GameState& s, std::ostream& out) {
  out << "colors:";
  for (Vertex v = 0; v < s.size(); ++v) out << ' ' << v << color_char(s.color(v));
  out << '\n';
}

}  // namespace

GameState play_interactive(const RootedForest& f, Player human, const StrategyConfig& engine,
                           const AdversaryPolicy& engine_staller, std::istream& in,
                           std::ostream& out) {
  GameState s(f, first_player(engine.game));
  StrategyContext ctx(f, engine, false);
  std::unique_ptr<ExactSolver> solver;
  if (human == Player::kDominator && engine_staller.kind == StallerKind::kMinimax) {
    solver = std::make_unique<ExactSolver>(f);
  }
  const int n = f.size();
  const int bound = engine.game == GameType::kDGame ? 3 * n / 5 : (3 * n + 2) / 5;
  out << "n=" << n << ", " << game_type_name(engine.game) << "-game, you play "
      << player_name(human) << '\n';

  while (!s.over()) {
    show_colors(s, out);
    const int k = s.turn() + 1;
    if (s.to_move() != human) {
      if (s.to_move() == Player::kDominator) {
        const TurnOutcome o = dominator_turn(s, ctx);
        const TurnRecord& r = ctx.records.back();
        out << "k=" << k << " Dominator [" << phase_name(r.phase) << "]: ";
        if (r.elected) out << "elected " << *r.elected << ", played " << o.vertex;
        else out << "played " << o.vertex;
        out << " (+" << o.points << ")\n";
      } else {
        const Vertex v = staller_pick(s, ctx.ledger, engine_staller, solver.get());
        const TurnOutcome o = s.apply_move(v);
        out << "k=" << k << " Staller: played " << v << " (+" << o.points << ")\n";
      }
      continue;
    }
    out << "move " << k << " (" << player_name(human) << ")> " << std::flush;
    std::string line;
    if (!std::getline(in, line)) {
      out << "\naborted: end of input\n";
      return s;
    }
    long long v = 0;
    try {
      const auto b = line.find_first_not_of(" \t\r");
      const auto e = line.find_last_not_of(" \t\r");
      v = to_int(b == std::string::npos ? std::string_view{}
                                        : std::string_view(line).substr(b, e - b + 1),
                 "vertex");
    } catch (const InputError& err) {
      out << err.what() << '\n';
      continue;
    }
    if (v < 0 || v >= n) {
      out << "illegal: vertex " << v << " out of range\n";
      continue;
    }
    const auto vx = static_cast<Vertex>(v);
    if (!s.is_legal(vx)) {
      out << "illegal: no new vertex dominated by " << vx << '\n';
      continue;
    }
    if (human == Player::kStaller) {
      const TurnOutcome o = staller_turn(s, ctx, vx);
      out << "k=" << k << " Staller: played " << vx << " (+" << o.points << ")\n";
    } else {
      const TurnOutcome o = s.apply_move(vx);
      out << "k=" << k << " Dominator: played " << vx << " (+" << o.points << ")\n";
    }
  }
  out << "game over: " << s.turn() << " moves, bound " << bound << " ("
      << (engine.game == GameType::kDGame ? "floor(3n/5)" : "floor((3n+2)/5)") << "): "
      << (s.turn() <= bound ? "within bound" : "exceeds bound") << '\n';
  return s;
}

}  // namespace domgame
