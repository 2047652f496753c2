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

#pragma once

#include <cstdio>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "placement.hpp"
#include "quota_lp.hpp"
#include "search.hpp"
#include "table_data.hpp"

namespace sg {

enum class CheckStatus { pass, fail, skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct RowReport {
  int row = 0;
  int n = 0;
  std::string label;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
  }
};

/// Isomorphism classes with at most six powerful voters that the table's
/// rows cover, compared with the exhaustive census.
struct CoverageReport {
  std::size_t expected = 0;
  std::size_t found = 0;
  std::vector<Game> missing;

  bool passed() const { return missing.empty() && found == expected; }
};

struct TableReport {
  std::vector<RowReport> rows;
  std::optional<CoverageReport> coverage;

  bool passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const RowReport& r) { return r.passed(); }) &&
           (!coverage || coverage->passed());
  }
};

struct VerifyOptions {
  SearchOptions search;
  std::uint64_t placement_budget = 2'000'000'000;
};

/// Quota notation when the game has a quota representation, hex otherwise.
inline std::string describe_game(const Game& g) {
  if (g.voters() <= kMaxQuotaVoters) {
    if (auto q = is_quota_game(g)) return format_quota(*q);
  }
  return std::to_string(g.voters()) + ":" + g.hex();
}

namespace detail {

struct ExprOutcome {
  CheckStatus status = CheckStatus::fail;
  std::string detail;
  /// Expression that provably evaluates to the row's game (possibly after
  /// relabeling leaves or swapping a catalog leaf); its structure bounds
  /// weight or depth.
  std::optional<GameExpr> witness;
};

inline bool has_named_leaf(const GameExpr& e) {
  if (e.kind() == GameExpr::Kind::named) return true;
  return std::any_of(e.args().begin(), e.args().end(), [](const GameExpr& a) { return has_named_leaf(a); });
}

inline std::optional<int> outer_mover(const GameExpr& e) {
  if (e.kind() == GameExpr::Kind::chi) return e.voter();
  return std::nullopt;
}

inline std::string format_placement(const PlacementSolution& s) {
  std::string out;
  for (const auto& leaf : s.leaves) {
    if (!out.empty()) out += "; ";
    out += leaf.text + " on ";
    std::string voters;
    for (const auto& [from, to] : leaf.image) {
      if (!voters.empty()) voters += ',';
      voters += std::to_string(from + 1) + "->" + std::to_string(to + 1);
    }
    out += voters;
  }
  return out;
}

// Searches placements against the reference and, when the expression's
// root is a choice, against the reference with the mover swapped with each
// other voter.
inline std::optional<std::pair<PlacementSolution, int>> place_up_to_mover(const GameExpr& e, const Game& ref,
                                                                          const VerifyOptions& opts,
                                                                          bool relabel_quota) {
  const int n = ref.voters();
  if (auto s = solve_placement(e, ref, resolve_catalog, opts.placement_budget, relabel_quota)) {
    return std::pair{*s, 0};
  }
  const auto m = outer_mover(e);
  if (!m) return std::nullopt;
  for (int b = 1; b <= n; ++b) {
    if (b == *m) continue;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
    std::swap(perm[static_cast<std::size_t>(*m - 1)], perm[static_cast<std::size_t>(b - 1)]);
    if (auto s = solve_placement(e, relabel(ref, perm), resolve_catalog, opts.placement_budget, relabel_quota)) {
      return std::pair{*s, b};
    }
  }
  return std::nullopt;
}

inline GameExpr rename_leaf(const GameExpr& e, const std::string& from, const std::string& to) {
  using K = GameExpr::Kind;
  if (e.kind() == K::named) return e.name() == from ? GameExpr::named(to, e.primes()) : e;
  if (e.is_leaf()) return e;
  std::vector<GameExpr> args;
  for (const auto& a : e.args()) args.push_back(rename_leaf(a, from, to));
  switch (e.kind()) {
    case K::median: return GameExpr::median(args[0], args[1], args[2]);
    case K::chi: return GameExpr::chi(e.voter(), args[0], args[1]);
    case K::conj: return GameExpr::conj(args[0], args[1]);
    case K::disj: return GameExpr::disj(args[0], args[1]);
    case K::compound: return GameExpr::compound(args[0], std::vector<GameExpr>(args.begin() + 1, args.end()));
    default: return e;
  }
}

inline void collect_names(const GameExpr& e, std::set<std::string>& out) {
  if (e.kind() == GameExpr::Kind::named) out.insert(e.name());
  for (const auto& a : e.args()) collect_names(a, out);
}

// Tries each other six-voter catalog game in place of one named leaf.
inline std::optional<std::pair<GameExpr, std::string>> substitute_catalog_leaf(const GameExpr& e, const Game& ref,
                                                                               const VerifyOptions& opts) {
  std::set<std::string> names;
  collect_names(e, names);
  for (const std::string& name : names) {
    const auto base = catalog_game(name);
    if (!base || base->voters() != 6) continue;
    for (int k = 21; k <= 30; ++k) {
      if (s6(k) == *base) continue;
      const std::string alt = "S_{6," + std::to_string(k) + "}";
      const GameExpr candidate = rename_leaf(e, name, alt);
      if (place_up_to_mover(candidate, ref, opts, false)) return std::pair{candidate, alt + " in place of " + name};
    }
  }
  return std::nullopt;
}

// A two-argument m(X,Y) cannot be a median; try it as a choice by each voter.
inline std::optional<std::pair<GameExpr, int>> read_binary_median(std::string_view text, const Game& ref) {
  const std::string norm = normalize_expr_text(text);
  if (norm.rfind("m(", 0) != 0) return std::nullopt;
  for (int a = 1; a <= ref.voters(); ++a) {
    try {
      const GameExpr e = GameExpr::parse("chi_" + std::to_string(a) + norm.substr(1));
      const Game g = evaluate(e, ref.voters(), resolve_catalog);
      if (is_isomorphic(g, ref)) return std::pair{e, a};
    } catch (const game_error&) {
    }
  }
  return std::nullopt;
}

inline ExprOutcome match_expression(std::string_view text, const Game& ref, const VerifyOptions& opts) {
  ExprOutcome out;
  const int n = ref.voters();
  std::optional<GameExpr> parsed;
  try {
    parsed = GameExpr::parse(text);
  } catch (const game_error& err) {
    if (auto alt = read_binary_median(text, ref)) {
      out.status = CheckStatus::pass;
      out.detail = "two-argument m read as chi_" + std::to_string(alt->second) + "; isomorphic";
      out.witness = alt->first;
      return out;
    }
    out.detail = std::string("does not parse: ") + err.what();
    return out;
  }
  const GameExpr& e = *parsed;
  std::optional<Game> evaluated;
  try {
    evaluated = evaluate(e, n, resolve_catalog);
  } catch (const game_error& err) {
    out.detail = std::string("does not evaluate: ") + err.what();
    return out;
  }
  const Game& literal = *evaluated;
  if (!is_ipsodual(literal) && !has_named_leaf(e)) {
    out.detail = "evaluates to " + describe_game(literal) + ", which is not ipsodual";
    return out;
  }
  if (literal == ref) {
    out = {CheckStatus::pass, "bit-equal", e};
    return out;
  }
  if (is_ipsodual(literal) && is_isomorphic(literal, ref)) {
    out = {CheckStatus::pass, "isomorphic", e};
    return out;
  }
  try {
    if (has_named_leaf(e)) {
      if (auto s = place_up_to_mover(e, ref, opts, false)) {
        out = {CheckStatus::pass, std::string(s->second == 0 ? "bit-equal" : "isomorphic") + " with " +
                                      format_placement(s->first),
               e};
        return out;
      }
      out.detail = "no placement of its catalog leaves yields the row's game";
    } else {
      out.detail = "evaluates to " + describe_game(literal) + ", not isomorphic to the row's game";
    }
    if (auto s = place_up_to_mover(e, ref, opts, true)) {
      out.detail += "; relabeling its leaves repairs it (" + format_placement(s->first) + ")";
      out.witness = e;
    } else if (has_named_leaf(e)) {
      if (auto alt = substitute_catalog_leaf(e, ref, opts)) {
        out.detail += "; it holds with " + alt->second;
        out.witness = alt->first;
      }
    }
  } catch (const game_error& err) {
    out.detail += std::string("; placement search stopped: ") + err.what();
  }
  return out;
}

// Upper bound on the layer of any game `e` evaluates to, from its shape:
// one more than the largest bound among the operands of a `kind` node.
inline std::optional<int> structural_bound(const GameExpr& e, ClosureKind kind, const SearchOptions& opts) {
  using K = GameExpr::Kind;
  if (e.kind() == K::quota || e.kind() == K::named || e.kind() == K::dict) {
    const Game leaf = evaluate(e, resolve_catalog);
    if (!is_ipsodual(leaf)) return std::nullopt;
    return measure_bounds(kind, leaf, opts).upper;
  }
  const bool matches = (kind == ClosureKind::median && e.kind() == K::median) ||
                       (kind == ClosureKind::chi && e.kind() == K::chi);
  if (!matches) return std::nullopt;
  int best = 0;
  for (const auto& a : e.args()) {
    const auto b = structural_bound(a, kind, opts);
    if (!b) return std::nullopt;
    best = std::max(best, *b);
  }
  return best + 1;
}

inline CheckResult check_measure(const char* name, ClosureKind kind, const Game& ref, int claim, bool uncertain,
                                 const ExprOutcome& expr, const VerifyOptions& opts) {
  CheckResult r{name, CheckStatus::fail, {}};
  try {
    MeasureBounds b = measure_bounds(kind, ref, opts.search);
    std::optional<int> from_expr;
    if (expr.witness) from_expr = structural_bound(*expr.witness, kind, opts.search);
    auto upper = [&]() -> std::optional<int> {
      if (b.upper && from_expr) return std::min(*b.upper, *from_expr);
      return b.upper ? b.upper : from_expr;
    };
    if (!b.exact() && !(from_expr && *from_expr == b.lower)) {
      SearchOptions certify = opts.search;
      certify.certify_third_layer = true;
      try {
        b = measure_bounds(kind, ref, certify);
      } catch (const game_error& err) {
        if (err.code() != errc::budget_exceeded) throw;
      }
    }
    const auto u = upper();
    const std::string shown = std::to_string(claim) + (uncertain ? "?" : "");
    if (u && *u == b.lower) {
      const int v = b.lower;
      const bool ok = uncertain ? v <= claim : v == claim;
      r.status = ok ? CheckStatus::pass : CheckStatus::fail;
      r.detail = "computed " + std::to_string(v) + ", table " + shown;
      if (uncertain && ok) r.detail += " (upper bound holds)";
      return r;
    }
    r.detail = "lower bound " + std::to_string(b.lower) + ", upper bound " + (u ? std::to_string(*u) : "unverified") +
               ", table " + shown;
    const bool ok = uncertain ? (u && *u <= claim && b.lower <= claim) : false;
    r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  } catch (const game_error& err) {
    r.detail = err.what();
  }
  return r;
}

inline std::optional<Game> resolve_label(std::string_view label) {
  if (label.empty()) return std::nullopt;
  if (label.front() == '(') return compile(parse_quota(label));
  const auto eq = label.find('=');
  return catalog_game(label.substr(0, eq));
}

}  // namespace detail

/// Re-derives each requested table row (all rows when `rows` is empty).
/// Failures are recorded per check; nothing throws for a bad row.
inline TableReport verify_table(std::span<const int> rows = {}, const VerifyOptions& opts = {}) {
  TableReport report;
  std::vector<std::pair<int, Game>> seen;
  std::set<Game> classes;
  for (const Table1Row& row : kTable1) {
    const bool wanted = rows.empty() || std::find(rows.begin(), rows.end(), row.row) != rows.end();
    RowReport rr{row.row, row.n, std::string(row.label), {}};
    auto add = [&](std::string name, CheckStatus st, std::string detail) {
      rr.checks.push_back(CheckResult{std::move(name), st, std::move(detail)});
    };
    std::optional<Game> ref;
    try {
      ref = detail::resolve_label(row.label);
      if (!ref && !row.median_expr.empty()) ref = evaluate(GameExpr::parse(row.median_expr), row.n, resolve_catalog);
    } catch (const game_error& err) {
      add("reference", CheckStatus::fail, err.what());
    }
    if (!ref) {
      if (wanted) report.rows.push_back(std::move(rr));
      continue;
    }
    if (row.n <= kMaxEnumerationVoters) classes.insert(canonical_form(strip_dummies(*ref).game));
    int twin = 0;
    for (const auto& [r, g] : seen) {
      if (g.voters() == ref->voters() && is_isomorphic(g, *ref)) {
        twin = r;
        break;
      }
    }
    seen.emplace_back(row.row, *ref);
    if (!wanted) continue;

    // (c) label
    if (row.label.empty()) {
      add("label", CheckStatus::skip, "unnamed row");
    } else {
      const auto powerful = std::popcount(powerful_voters(*ref));
      std::string detail = describe_game(*ref);
      bool ok = is_ipsodual(*ref) && powerful == row.n;
      if (const auto eq = row.label.find('='); eq != std::string_view::npos) {
        const auto other = catalog_game(row.label.substr(eq + 1));
        const bool same = other && is_isomorphic(*other, *ref);
        ok = ok && same;
        detail += same ? ", isomorphic to " + std::string(row.label.substr(eq + 1))
                       : ", not isomorphic to " + std::string(row.label.substr(eq + 1));
      }
      if (!ok && powerful != row.n) detail += ", " + std::to_string(powerful) + " powerful voters";
      add("label", ok ? CheckStatus::pass : CheckStatus::fail, detail);
    }

    // (a) median decomposition, (b) choice decomposition
    detail::ExprOutcome med, cho;
    if (row.median_expr.empty()) {
      add("median_expr", CheckStatus::skip, "none given");
    } else {
      med = detail::match_expression(row.median_expr, *ref, opts);
      add("median_expr", med.status, med.detail);
    }
    if (row.chi_expr.empty()) {
      add("chi_expr", CheckStatus::skip, "none given");
    } else {
      cho = detail::match_expression(row.chi_expr, *ref, opts);
      add("chi_expr", cho.status, cho.detail);
    }

    // (d)/(f) weight and depth
    if (row.n == 1) {
      const bool ok = row.w == 0 && row.d == 0 && ref->voters() == 1;
      add("weight", ok ? CheckStatus::pass : CheckStatus::fail, "dictatorship: 0");
      add("depth", ok ? CheckStatus::pass : CheckStatus::fail, "dictatorship: 0");
    } else {
      rr.checks.push_back(detail::check_measure("weight", ClosureKind::median, *ref, row.w,
                                                row.has(Table1Row::kWeightQ), med, opts));
      rr.checks.push_back(detail::check_measure("depth", ClosureKind::chi, *ref, row.d,
                                                row.has(Table1Row::kDepthQ), cho, opts));
    }

    // (e) transitivity
    if (row.has(Table1Row::kHeart)) {
      const bool t = has_transitive_automorphism_group(*ref);
      add("transitive", t ? CheckStatus::pass : CheckStatus::fail, t ? "automorphisms act transitively" : "not transitive");
    } else {
      add("transitive", CheckStatus::skip, "not marked");
    }

    add("distinct", twin == 0 ? CheckStatus::pass : CheckStatus::fail,
        twin == 0 ? "no earlier row is isomorphic" : "isomorphic to row " + std::to_string(twin));
    report.rows.push_back(std::move(rr));
  }
  if (rows.empty()) {
    CoverageReport cov;
    for (const auto& [k, games] : iso_census(kMaxEnumerationVoters)) {
      cov.expected += games.size();
      for (const Game& g : games) {
        if (classes.count(g)) {
          ++cov.found;
        } else {
          cov.missing.push_back(g);
        }
      }
    }
    report.coverage = std::move(cov);
  }
  return report;
}

/// Plain-text rendering: one line per row, failing and informative checks
/// indented beneath it, and the census coverage when present.
inline std::string format_report(const TableReport& report, bool verbose = false) {
  std::string out;
  for (const RowReport& r : report.rows) {
    std::string label = r.label.empty() ? "(unnamed)" : r.label;
    char head[96];
    std::snprintf(head, sizeof head, "row %2d  n=%d  %-14s %s\n", r.row, r.n, label.c_str(), r.passed() ? "pass" : "FAIL");
    out += head;
    for (const CheckResult& c : r.checks) {
      if (!verbose && c.status != CheckStatus::fail) continue;
      char line[64];
      std::snprintf(line, sizeof line, "    %-12s %-4s  ", c.name.c_str(), to_string(c.status));
      out += line + c.detail + "\n";
    }
  }
  if (report.coverage) {
    const auto& c = *report.coverage;
    out += "coverage: " + std::to_string(c.found) + " of " + std::to_string(c.expected) +
           " classes with at most 6 powerful voters\n";
    for (const Game& g : c.missing) out += "    missing " + describe_game(g) + "\n";
  }
  return out;
}

}  // namespace sg
