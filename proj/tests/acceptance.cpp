// Copyright 2026 The simplegames Authors
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

// Acceptance gate: one line per criterion. Two criteria cannot pass because
// the reference table itself is inconsistent; for those the gate checks that
// the failure is exactly the pinned discrepancy and nothing else.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "simplegames/catalog.hpp"
#include "simplegames/decomposition.hpp"
#include "simplegames/quota_lp.hpp"
#include "simplegames/search.hpp"
#include "simplegames/table.hpp"

namespace {

using sg::Game;

enum class Verdict { pass, fail, known_fail };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

sg::SearchOptions g_opts;

std::string cli(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), {"--threads", std::to_string(g_opts.threads)});
  std::ostringstream out, err;
  const int c = sgcli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

Outcome fail(std::string why) { return {Verdict::fail, std::move(why)}; }

Outcome c1_wtable() {
  int code = 0;
  const std::string out = cli({"wtable", "--max", "6"}, &code);
  if (code != 0) return fail("wtable exited with " + std::to_string(code));
  if (out.rfind("W: 0,0,1,2,3,3\n", 0) != 0) return fail("got " + out);
  return {Verdict::pass, "W(1..6) = 0,0,1,2,3,3"};
}

Outcome c2_closure() {
  std::string counts;
  for (int n = 1; n <= 6; ++n) {
    const auto expected = oracle::self_dual_functions(n);
    for (auto kind : {sg::ClosureKind::median, sg::ClosureKind::chi}) {
      const auto u = sg::shared_closure(kind, n, -1, g_opts);
      std::set<oracle::Table> got;
      for (const auto& layer : u->layers) {
        for (const Game& g : layer) got.insert(oracle::from_game(g));
      }
      if (got != expected) return fail(std::string(sg::to_string(kind)) + " closure differs at n=" + std::to_string(n));
    }
    counts += (n > 1 ? "," : "") + std::to_string(expected.size());
  }
  return {Verdict::pass, "median and choice closures equal the oracle sets, sizes " + counts};
}

Outcome c3_census() {
  int code = 0;
  const std::string out = cli({"census", "--powerful-max", "6"}, &code);
  if (code != 0) return fail("census exited with " + std::to_string(code));
  if (out.find("classes: 1 0 1 1 4 23 (total 30)") == std::string::npos) return fail("census summary mismatch");
  return {Verdict::pass, "30 classes, 1 0 1 1 4 23"};
}

// Rows whose stated expression or depth does not hold, and the two classes
// the table never lists (its S_{6,22} and S_{6,25} repeat other rows).
const std::set<int> kPinnedFailingRows{6, 20, 22, 25, 28, 35, 36};
const std::set<std::string> kPinnedMissing{"6:EEEAEAC8ECA8A888", "6:FEE8EAC8ECA8E880"};

Outcome c4_table() {
  sg::VerifyOptions vo;
  vo.search = g_opts;
  const auto report = sg::verify_table({}, vo);
  std::set<int> failing;
  for (const auto& r : report.rows) {
    if (!r.passed()) failing.insert(r.row);
  }
  if (!report.coverage) return fail("no coverage report");
  std::set<std::string> missing;
  for (const Game& g : report.coverage->missing) missing.insert(sg::describe_game(g));
  if (failing.empty() && missing.empty()) return {Verdict::pass, "all rows verified"};
  std::string rows;
  for (int r : failing) rows += (rows.empty() ? "" : ",") + std::to_string(r);
  const std::string summary = "failing rows " + rows + "; coverage " + std::to_string(report.coverage->found) +
                              "/" + std::to_string(report.coverage->expected);
  if (failing == kPinnedFailingRows && missing == kPinnedMissing) {
    return {Verdict::known_fail, summary + " (inconsistencies in the table data, pinned)"};
  }
  return fail(summary + " (differs from the pinned discrepancy)\n" + sg::format_report(report));
}

Outcome c5_identities() {
  std::vector<Game> universe;
  for (int n = 1; n <= 5; ++n) {
    for (const Game& g : sg::enumerate_ipsodual(n)) universe.push_back(g);
  }
  std::size_t checked = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto games = sg::enumerate_ipsodual(n);
    for (const Game& s : games) {
      for (const Game& t : games) {
        for (int a = 1; a <= n; ++a) {
          if (sg::chi(a, s, t) != sg::median(s, t, Game::dictator(n, a))) return fail("choice identity");
        }
        for (const Game& u : games) {
          if (sg::dual(sg::median(s, t, u)) != sg::median(sg::dual(s), sg::dual(t), sg::dual(u))) {
            return fail("dual commutation");
          }
          ++checked;
        }
      }
      if (std::popcount(sg::powerful_voters(s)) >= 3) {
        const auto parts = sg::median_decompose(s);
        if (sg::median(parts[0], parts[1], parts[2]) != s) return fail("median recombination");
        const int d = oracle::dummies(oracle::from_game(s));
        for (const Game& p : parts) {
          if (oracle::dummies(oracle::from_game(p)) <= d) return fail("no dummy growth");
        }
      }
      bool comparable = false;
      for (int x = 1; x <= n; ++x) {
        for (int y = 1; y <= n; ++y) comparable = comparable || (x != y && sg::influence_geq(s, x, y));
      }
      if (comparable) {
        const auto split = sg::chi_decompose(s);
        if (sg::chi(split.voter, split.joined, split.opposed) != s) return fail("choice recombination");
      }
    }
  }
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    sg::QuotaGame q;
    int total = 0;
    for (int i = 0; i < n; ++i) {
      q.weights.push_back(static_cast<int>(rng() % 10));
      total += q.weights.back();
    }
    q.quota = 1 + static_cast<int>(rng() % std::max(total, 1));
    const auto split = sg::quota_split(q);
    const Game s = sg::compile(q);
    const int first = split.order.front() + 1, last = split.order.back() + 1;
    if (sg::relabel(sg::compile(split.joined), split.order) != sg::substitute(s, last, first) ||
        sg::relabel(sg::compile(split.opposed), split.order) != sg::oppose(s, last, first)) {
      return fail("quota split disagrees for " + sg::format_quota(q));
    }
  }
  return {Verdict::pass, std::to_string(universe.size()) + " games, " + std::to_string(checked) +
                             " median triples, 1000 quota splits"};
}

Outcome c6_depth_laws() {
  std::size_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Game& s : sg::enumerate_ipsodual(n)) {
      const int w = sg::weight(s, g_opts), d = sg::depth(s, g_opts);
      if (w > d || d > (1 << w) - 1) return fail("law broken at " + sg::describe_game(s));
      ++checked;
    }
  }
  const Game dem = sg::dem3_power(2);
  const int w = sg::weight(dem, g_opts), d = sg::depth(dem, g_opts);
  if (w != 2 || d != 3) return fail("Dem3^2 has weight " + std::to_string(w) + ", depth " + std::to_string(d));
  return {Verdict::pass, std::to_string(checked) + " games; Dem3^2 weight 2, depth 3"};
}

Outcome c7_influence() {
  const std::string chain = cli({"influence", "s6.23"});
  if (chain != "1 > 2~3 > 4~5 > 6\n") return fail("s6.23 influence: " + chain);
  const Game ico = sg::icosahedral_game();
  for (int x = 1; x <= 6; ++x) {
    for (int y = 1; y <= 6; ++y) {
      if (x != y && sg::influence_geq(ico, x, y)) return fail("icosahedral voters comparable");
    }
  }
  if (cli({"is-quota", "icosa"}).rfind("no", 0) != 0 || sg::is_quota_game(ico)) {
    return fail("icosahedral game reported as weighted");
  }
  const std::string s23 = cli({"is-quota", "s6.23"});
  const auto q = sg::is_quota_game(sg::s6(23));
  if (s23.rfind("no", 0) == 0 && !q) return {Verdict::pass, "chain 1 > 2~3 > 4~5 > 6; both games not weighted"};
  if (q && sg::format_quota(*q) == "(433221)_8" && sg::compile(*q) == sg::s6(23)) {
    return {Verdict::known_fail, "s6.23 as defined equals (433221)_8, so it is weighted; the other parts hold"};
  }
  return fail("unexpected is-quota result: " + s23);
}

Outcome c8_tree_round_trip() {
  std::size_t exhaustive = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const Game& s : sg::enumerate_ipsodual(n)) {
      if (sg::win_type(sg::realize_game_tree(s), n) != s) return fail("round trip at " + sg::describe_game(s));
      ++exhaustive;
    }
  }
  std::mt19937 rng(42);
  for (int n = 5; n <= 6; ++n) {
    const auto games = sg::enumerate_ipsodual(n);
    for (int i = 0; i < 200; ++i) {
      const Game& s = games[rng() % games.size()];
      if (sg::win_type(sg::realize_game_tree(s), n) != s) return fail("round trip at " + sg::describe_game(s));
    }
  }
  return {Verdict::pass, std::to_string(exhaustive) + " games exhaustive, 200 sampled at n=5 and n=6"};
}

Outcome c9_quota_weight() {
  std::size_t quota_games = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Game& s : sg::enumerate_ipsodual(n)) {
      const int k = std::popcount(sg::powerful_voters(s));
      if (k < 3 || !sg::is_quota_game(s)) continue;
      ++quota_games;
      const int w = sg::weight(s, g_opts);
      if (w > k - 2) return fail(sg::describe_game(s) + " has weight " + std::to_string(w));
    }
  }
  return {Verdict::pass, std::to_string(quota_games) + " weighted games with at least 3 powerful voters"};
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--threads") g_opts.threads = std::max(1, std::atoi(argv[i + 1]));
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 largest weight table", c1_wtable},
      {"2 closure equals enumeration", c2_closure},
      {"3 isomorphism census", c3_census},
      {"4 table verification", c4_table},
      {"5 identity suite", c5_identities},
      {"6 depth laws", c6_depth_laws},
      {"7 influence and quota recognition", c7_influence},
      {"8 game tree round trip", c8_tree_round_trip},
      {"9 weight of weighted games", c9_quota_weight},
  };
  int unexpected = 0, known = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = o.verdict == Verdict::pass ? "PASS" : "FAIL";
    std::printf("%s  %-36s %6.1fs  %s\n", tag, name, secs, o.detail.c_str());
    std::fflush(stdout);
    if (o.verdict == Verdict::fail) ++unexpected;
    if (o.verdict == Verdict::known_fail) ++known;
  }
  std::printf("%d unexpected failure(s), %d failure(s) matching the pinned table inconsistencies\n", unexpected, known);
  return unexpected == 0 ? 0 : 1;
}
