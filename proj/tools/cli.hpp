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

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "simplegames/catalog.hpp"
#include "simplegames/decomposition.hpp"
#include "simplegames/quota_lp.hpp"
#include "simplegames/search.hpp"
#include "simplegames/table.hpp"

namespace sgcli {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Quota string, `n:HEX`, catalog name, or expression.
inline sg::Game parse_spec(const std::string& text) {
  if (text.empty()) throw UsageError("empty game spec");
  if (const auto colon = text.find(':'); colon != std::string::npos && colon > 0 &&
                                         std::all_of(text.begin(), text.begin() + static_cast<long>(colon),
                                                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return sg::Game::from_hex(std::stoi(text.substr(0, colon)), text.substr(colon + 1));
  }
  if (auto g = sg::catalog_game(text)) return *g;
  return sg::evaluate(sg::GameExpr::parse(text), sg::resolve_catalog);
}

inline json game_json(const sg::Game& g) {
  json j{{"n", g.voters()}, {"mask_hex", g.hex()}, {"quota", nullptr}};
  if (g.voters() <= sg::kMaxQuotaVoters) {
    if (auto q = sg::is_quota_game(g)) j["quota"] = json{{"weights", q->weights}, {"quota", q->quota}};
  }
  return j;
}

inline json bounds_json(const sg::MeasureBounds& b) {
  json j{{"lower", b.lower}, {"upper", nullptr}, {"exact", b.exact()}};
  if (b.upper) j["upper"] = *b.upper;
  return j;
}

inline std::string bounds_text(const sg::MeasureBounds& b) {
  if (b.exact()) return std::to_string(b.lower);
  return "at least " + std::to_string(b.lower) + (b.upper ? ", at most " + std::to_string(*b.upper) : "");
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "'");
    }
  }
  return out;
}

inline json census_record(const sg::Game& g, const sg::SearchOptions& opts) {
  json j{{"mask_hex", g.hex()}, {"n", g.voters()}};
  j["weight"] = sg::weight(g, opts);
  j["depth"] = sg::depth(g, opts);
  auto q = sg::is_quota_game(g);
  j["quota"] = q ? json{{"weights", q->weights}, {"quota", q->quota}} : json(nullptr);
  j["transitive"] = sg::has_transitive_automorphism_group(g);
  j["canonical"] = sg::canonical_form(g) == g;
  return j;
}

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 verification or domain failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple games: median and choice algebra, weight, depth, census"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t budget = 0;
  int threads = 1;
  bool certify = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_option("--budget", budget, "Search budget (0 = default)");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--certify", certify, "Exhaustive third-layer search for 7 to 9 powerful voters");

  std::vector<std::string> specs;
  auto* classify = app.add_subcommand("classify", "Duality class, powerful voters and dummies");
  classify->add_option("spec", specs)->required()->expected(1);
  auto* median = app.add_subcommand("median", "Median of three games");
  median->add_option("specs", specs)->required()->expected(3);
  int by = 0;
  auto* chi = app.add_subcommand("chi", "Choice by a voter between two games");
  chi->add_option("--by", by)->required();
  chi->add_option("specs", specs)->required()->expected(2);
  auto* compound = app.add_subcommand("compound", "Outer game over inner games");
  compound->add_option("specs", specs)->required()->expected(2, 1 << 10);
  std::string map_text;
  int codomain = 0;
  auto* quotient = app.add_subcommand("quotient", "Image of a game under a voter map");
  quotient->add_option("spec", specs)->required()->expected(1);
  quotient->add_option("--map", map_text, "Pairs from:to, e.g. 1:1,2:1,3:2")->required();
  quotient->add_option("--voters", codomain, "Voters of the image (default: largest target)");
  std::string method = "median";
  auto* decompose = app.add_subcommand("decompose", "Decompose a game");
  decompose->add_option("spec", specs)->required()->expected(1);
  decompose->add_option("--method", method)->check(CLI::IsMember({"median", "chi", "quota", "tree", "dnf"}));
  auto* weight = app.add_subcommand("weight", "Median iterations from dictatorships");
  weight->add_option("spec", specs)->required()->expected(1);
  auto* depth = app.add_subcommand("depth", "Choice iterations from dictatorships");
  depth->add_option("spec", specs)->required()->expected(1);
  auto* influence = app.add_subcommand("influence", "Influence pre-order");
  influence->add_option("spec", specs)->required()->expected(1);
  auto* is_quota = app.add_subcommand("is-quota", "Quota representation, if any");
  is_quota->add_option("spec", specs)->required()->expected(1);
  int voters = 0;
  bool iso = false;
  auto* enumerate = app.add_subcommand("enumerate", "All ipsodual games on n labeled voters");
  enumerate->add_option("--voters", voters)->required()->check(CLI::Range(1, sg::kMaxEnumerationVoters));
  enumerate->add_flag("--iso", iso, "One canonical game per isomorphism class");
  int max_n = 0;
  auto* wtable = app.add_subcommand("wtable", "Largest weight and depth per voter count");
  wtable->add_option("--max", max_n)->required()->check(CLI::Range(1, sg::kMaxClosureVoters));
  std::string rows_text;
  bool all_rows = false;
  auto* verify = app.add_subcommand("verify-table", "Re-derive the classification table");
  verify->add_option("--rows", rows_text, "Comma-separated row numbers");
  verify->add_flag("--all", all_rows, "Every row (default)");
  int powerful_max = 0;
  auto* census = app.add_subcommand("census", "Isomorphism classes by powerful voters");
  census->add_option("--powerful-max", powerful_max)->required()->check(CLI::Range(1, sg::kMaxEnumerationVoters));

  std::vector<std::string> argv_store{"simplegames"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  sg::SearchOptions opts;
  opts.threads = threads;
  opts.budget = budget;
  opts.certify_third_layer = certify;
  auto emit_game = [&](const sg::Game& g) {
    if (as_json) {
      out << game_json(g).dump() << "\n";
    } else {
      out << sg::describe_game(g) << "\n";
    }
  };

  try {
    std::vector<sg::Game> games;
    for (const auto& s : specs) games.push_back(parse_spec(s));

    if (classify->parsed()) {
      const auto c = sg::classify(games[0]);
      if (as_json) {
        json j = game_json(games[0]);
        j["simple"] = c.is_simple;
        j["strong"] = c.is_strong;
        j["ipsodual"] = c.is_ipsodual;
        j["powerful"] = sg::voters_of(c.powerful);
        j["dummies"] = sg::voters_of(c.dummies);
        out << j.dump() << "\n";
      } else {
        out << "game      " << sg::describe_game(games[0]) << "\n";
        out << "type      " << (c.is_ipsodual ? "ipsodual" : c.is_simple ? "simple" : c.is_strong ? "strong" : "neither")
            << "\n";
        out << "powerful  " << sg::format_coalition(c.powerful) << "\n";
        out << "dummies   " << sg::format_coalition(c.dummies) << "\n";
      }
      return 0;
    }
    if (median->parsed() || chi->parsed()) {
      int n = 0;
      for (const auto& g : games) n = std::max(n, g.voters());
      if (chi->parsed()) n = std::max(n, by);
      for (auto& g : games) g = sg::with_voters(g, n);
      emit_game(median->parsed() ? sg::median(games[0], games[1], games[2]) : sg::chi(by, games[0], games[1]));
      return 0;
    }
    if (compound->parsed()) {
      std::vector<sg::Game> inner(games.begin() + 1, games.end());
      int n = 0;
      for (const auto& g : inner) n = std::max(n, g.voters());
      for (auto& g : inner) g = sg::with_voters(g, n);
      emit_game(sg::compound(games[0], inner));
      return 0;
    }
    if (quotient->parsed()) {
      std::vector<int> image(static_cast<std::size_t>(games[0].voters()), -1);
      std::stringstream ss(map_text);
      std::string pair;
      int top = 0;
      while (std::getline(ss, pair, ',')) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos) throw UsageError("map entry '" + pair + "' is not from:to");
        const int from = std::stoi(pair.substr(0, colon)), to = std::stoi(pair.substr(colon + 1));
        if (from < 1 || from > games[0].voters() || to < 1) throw UsageError("map entry '" + pair + "' out of range");
        image[static_cast<std::size_t>(from - 1)] = to - 1;
        top = std::max(top, to);
      }
      if (std::find(image.begin(), image.end(), -1) != image.end()) throw UsageError("map must cover every voter");
      emit_game(sg::quotient(games[0], sg::VoterMap(codomain > 0 ? codomain : top, image)));
      return 0;
    }
    if (decompose->parsed()) {
      const sg::Game& s = games[0];
      json j{{"method", method}};
      std::string text;
      if (method == "median") {
        const auto parts = sg::median_decompose_general(s);
        j["parts"] = json::array();
        for (const auto& p : parts) {
          j["parts"].push_back(game_json(p));
          text += (text.empty() ? "" : "\n") + sg::describe_game(p);
        }
      } else if (method == "chi") {
        const auto split = sg::chi_decompose(s);
        j["voter"] = split.voter;
        j["partner"] = split.partner;
        j["joined"] = game_json(split.joined);
        j["opposed"] = game_json(split.opposed);
        text = "chi_" + std::to_string(split.voter) + "(" + sg::describe_game(split.joined) + ", " +
               sg::describe_game(split.opposed) + ")  [partner " + std::to_string(split.partner) + "]";
      } else if (method == "quota") {
        auto q = s.voters() <= sg::kMaxQuotaVoters ? sg::is_quota_game(s) : std::nullopt;
        if (!q) {
          err << "not a quota game\n";
          return 1;
        }
        const auto split = sg::quota_split(*q);
        j["order"] = split.order;
        j["joined"] = json{{"weights", split.joined.weights}, {"quota", split.joined.quota}};
        j["opposed"] = json{{"weights", split.opposed.weights}, {"quota", split.opposed.quota}};
        text = "quota   " + sg::format_quota(*q) + "\njoined  " + sg::format_quota(split.joined) + "\nopposed " +
               sg::format_quota(split.opposed);
      } else if (method == "tree") {
        const auto tree = sg::realize_game_tree(s);
        j["tree"] = tree.format();
        j["height"] = tree.height();
        text = tree.format() + "\nheight " + std::to_string(tree.height());
      } else {
        const auto e = sg::dnf_expression(s);
        j["expr"] = e.format();
        text = e.format();
      }
      out << (as_json ? j.dump() : text) << "\n";
      return 0;
    }
    if (weight->parsed() || depth->parsed()) {
      const bool w = weight->parsed();
      const auto b = w ? sg::weight_bounds(games[0], opts) : sg::depth_bounds(games[0], opts);
      if (as_json) {
        out << bounds_json(b).dump() << "\n";
      } else {
        out << bounds_text(b) << "\n";
      }
      return b.exact() ? 0 : 1;
    }
    if (influence->parsed()) {
      const auto geq = sg::influence_preorder(games[0]);
      if (as_json) {
        json j{{"order", sg::format_influence(games[0])}, {"geq", json::array()}};
        for (const auto& row : geq) j["geq"].push_back(std::vector<bool>(row.begin(), row.end()));
        out << j.dump() << "\n";
      } else {
        out << sg::format_influence(games[0]) << "\n";
      }
      return 0;
    }
    if (is_quota->parsed()) {
      const auto q = sg::is_quota_game(games[0]);
      if (as_json) {
        out << (q ? json{{"quota", json{{"weights", q->weights}, {"quota", q->quota}}}} : json{{"quota", nullptr}}).dump()
            << "\n";
      } else if (q) {
        out << "yes " << sg::format_quota(*q) << "\n";
      } else {
        out << "no (the separating system is infeasible in exact arithmetic)\n";
      }
      return 0;
    }
    if (enumerate->parsed()) {
      std::vector<sg::Game> list = sg::enumerate_ipsodual(voters);
      if (iso) {
        std::set<sg::Game> classes;
        for (const auto& g : list) classes.insert(sg::canonical_form(g));
        list.assign(classes.begin(), classes.end());
      }
      for (const auto& g : list) {
        if (as_json) {
          out << json{{"mask_hex", g.hex()}, {"n", g.voters()}}.dump() << "\n";
        } else {
          out << g.hex() << "\n";
        }
      }
      if (!as_json) err << list.size() << (iso ? " classes\n" : " games\n");
      return 0;
    }
    if (wtable->parsed()) {
      const auto w = sg::W_table(max_n, opts), d = sg::D_table(max_n, opts);
      if (as_json) {
        out << json{{"W", w}, {"D", d}}.dump() << "\n";
      } else {
        auto join = [](const std::vector<int>& v) {
          std::string s;
          for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
          return s;
        };
        out << "W: " << join(w) << "\nD: " << join(d) << "\n";
      }
      return 0;
    }
    if (verify->parsed()) {
      std::vector<int> rows;
      if (!rows_text.empty()) {
        if (all_rows) throw UsageError("--rows and --all are exclusive");
        rows = parse_int_list(rows_text);
        for (int r : rows) {
          if (r < 1 || r > static_cast<int>(sg::kTable1.size())) throw UsageError("no table row " + std::to_string(r));
        }
      }
      sg::VerifyOptions vo;
      vo.search = opts;
      if (budget) vo.placement_budget = budget;
      const auto report = sg::verify_table(rows, vo);
      if (as_json) {
        for (const auto& r : report.rows) {
          json j{{"row", r.row}, {"checks", json::array()}};
          for (const auto& c : r.checks) {
            j["checks"].push_back(json{{"name", c.name}, {"status", sg::to_string(c.status)}, {"detail", c.detail}});
          }
          out << j.dump() << "\n";
        }
        if (report.coverage) {
          json miss = json::array();
          for (const auto& g : report.coverage->missing) miss.push_back(game_json(g));
          out << json{{"coverage", json{{"expected", report.coverage->expected},
                                        {"found", report.coverage->found},
                                        {"missing", miss}}}}
                     .dump()
              << "\n";
        }
      } else {
        out << sg::format_report(report);
      }
      return report.passed() ? 0 : 1;
    }
    if (census->parsed()) {
      const auto classes = sg::iso_census(powerful_max);
      std::size_t total = 0;
      for (const auto& [k, list] : classes) {
        total += list.size();
        for (const auto& g : list) {
          if (as_json) {
            out << census_record(g, opts).dump() << "\n";
          } else {
            auto q = sg::is_quota_game(g);
            out << k << "  " << (q ? sg::format_quota(*q) : g.hex()) << "  w=" << sg::weight(g, opts)
                << " d=" << sg::depth(g, opts) << (sg::has_transitive_automorphism_group(g) ? "  transitive" : "") << "\n";
          }
        }
      }
      if (!as_json) {
        out << "classes:";
        for (const auto& [k, list] : classes) out << " " << list.size();
        out << " (total " << total << ")\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const sg::game_error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == sg::errc::parse_error ? 2 : 1;
  }
  return 2;
}

}  // namespace sgcli
