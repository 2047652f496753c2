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

#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "algebra.hpp"
#include "expr.hpp"
#include "game_tree.hpp"
#include "quota.hpp"

namespace sg {

namespace detail {

inline int dummy_count(const Game& s) { return s.voters() - std::popcount(powerful_voters(s)); }

inline void check_dummy_growth(const Game& s, const std::array<Game, 3>& parts) {
  const int before = dummy_count(s);
  for (const Game& p : parts) {
    if (dummy_count(p) <= before) throw std::logic_error("median component without extra dummy");
  }
}

inline std::array<Game, 3> substitution_triple(const Game& s, Coalition powerful) {
  const int x = std::countr_zero(powerful) + 1;
  powerful &= powerful - 1;
  const int y = std::countr_zero(powerful) + 1;
  powerful &= powerful - 1;
  const int z = std::countr_zero(powerful) + 1;
  return {substitute(s, x, y), substitute(s, y, z), substitute(s, z, x)};
}

}  // namespace detail

/// Splits an ipsodual game with at least three powerful voters x<y<z (the
/// smallest three) into (S_xy, S_yz, S_zx); the median of the three is S.
inline std::array<Game, 3> median_decompose(const Game& s) {
  if (!is_ipsodual(s)) throw game_error(errc::not_ipsodual, "median decomposition needs an ipsodual game");
  const Coalition powerful = powerful_voters(s);
  if (std::popcount(powerful) < 3) {
    throw game_error(errc::too_few_powerful, "needs three powerful voters, found " +
                                                 std::to_string(std::popcount(powerful)));
  }
  auto parts = detail::substitution_triple(s, powerful);
  detail::check_dummy_growth(s, parts);
  return parts;
}

/// Any game with at least two powerful voters as a median of three games of
/// the same type, each with more dummies. With exactly two powerful voters
/// x, y the game is x AND y = m(x, y, ĥ0) or x OR y = m(x, y, ĥ1).
inline std::array<Game, 3> median_decompose_general(const Game& s) {
  const Coalition powerful = powerful_voters(s);
  const int k = std::popcount(powerful);
  if (k < 2) throw game_error(errc::too_few_powerful, "needs two powerful voters, found " + std::to_string(k));
  std::array<Game, 3> parts = k >= 3 ? detail::substitution_triple(s, powerful)
                                     : [&] {
                                         const int x = std::countr_zero(powerful) + 1;
                                         const int y = std::countr_zero(powerful & (powerful - 1)) + 1;
                                         const int n = s.voters();
                                         const bool both = !s.wins(voter_bit(x - 1));
                                         return std::array<Game, 3>{Game::dictator(n, x), Game::dictator(n, y),
                                                                    both ? Game::hat0(n) : Game::hat1(n)};
                                       }();
  detail::check_dummy_growth(s, parts);
  return parts;
}

struct ChiSplit {
  int voter;    ///< i, the mover
  int partner;  ///< j, with i ≤_S j
  Game joined;  ///< S_{ij}
  Game opposed; ///< S_{i/j}
};

/// S = χ_i(S_{ij}, S_{i/j}) for the first pair (i, j) in lexicographic order
/// with j at least as influential as i, preferring a strict relation.
inline ChiSplit chi_decompose(const Game& s) {
  if (!is_ipsodual(s)) throw game_error(errc::not_ipsodual, "choice decomposition needs an ipsodual game");
  const int n = s.voters();
  const auto geq = influence_preorder(s);
  std::optional<std::pair<int, int>> tied;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !geq[j][i]) continue;
      if (!geq[i][j]) return {i + 1, j + 1, substitute(s, i + 1, j + 1), oppose(s, i + 1, j + 1)};
      if (!tied) tied = std::pair{i, j};
    }
  }
  if (!tied) throw game_error(errc::trivial_influence, "no two distinct voters are comparable by influence");
  const auto [i, j] = *tied;
  return {i + 1, j + 1, substitute(s, i + 1, j + 1), oppose(s, i + 1, j + 1)};
}

struct QuotaSplit {
  QuotaGame joined;        ///< (w1+wn, w2, ..., w(n-1), 0)_q
  QuotaGame opposed;       ///< (w1-wn, w2, ..., w(n-1), 0)_(q-wn)
  std::vector<int> order;  ///< order[k] = original 0-based voter at sorted position k
};

/// Weight-level substitution and opposition of the last voter against the
/// first after sorting weights into descending order.
inline QuotaSplit quota_split(const QuotaGame& q) {
  const int n = static_cast<int>(q.weights.size());
  if (n < 2) throw game_error(errc::single_voter, "quota split needs at least two voters");
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return q.weights[a] > q.weights[b]; });
  std::vector<int> w;
  for (int v : order) w.push_back(q.weights[static_cast<std::size_t>(v)]);
  const int first = w.front(), last = w.back();
  QuotaSplit out;
  out.order = order;
  out.joined.weights = w;
  out.joined.weights.front() = first + last;
  out.joined.weights.back() = 0;
  out.joined.quota = q.quota;
  out.opposed.weights = w;
  out.opposed.weights.front() = first - last;
  out.opposed.weights.back() = 0;
  out.opposed.quota = std::max(0, q.quota - last);
  return out;
}

/// Median-only expression over dictatorships (plus ĥ0/ĥ1 for games that are
/// not ipsodual), built by repeated median_decompose_general.
inline GameExpr full_median_basis(const Game& s) {
  std::unordered_map<Game, GameExpr> memo;
  auto go = [&](auto&& self, const Game& g) -> GameExpr {
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    const Coalition powerful = powerful_voters(g);
    GameExpr e = [&] {
      switch (std::popcount(powerful)) {
        case 0: return g.wins(0) ? GameExpr::hat1() : GameExpr::hat0();
        case 1: return GameExpr::dict(std::countr_zero(powerful) + 1);
        default: {
          const auto parts = median_decompose_general(g);
          return GameExpr::median(self(self, parts[0]), self(self, parts[1]), self(self, parts[2]));
        }
      }
    }();
    memo.emplace(g, e);
    return e;
  };
  return go(go, s);
}

/// Disjunction over the minimal winning coalitions of the conjunction of
/// their members.
inline GameExpr dnf_expression(const Game& s) {
  const auto family = min_winning(s);
  if (family.empty()) return GameExpr::hat0();
  auto term = [](Coalition c) {
    if (c == 0) return GameExpr::hat1();
    const auto members = voters_of(c);
    GameExpr acc = GameExpr::dict(members.back());
    for (std::size_t i = members.size() - 1; i-- > 0;) acc = GameExpr::conj(GameExpr::dict(members[i]), acc);
    return acc;
  };
  GameExpr acc = term(family.back());
  for (std::size_t i = family.size() - 1; i-- > 0;) acc = GameExpr::disj(term(family[i]), acc);
  return acc;
}

/// Elimination game: players in increasing order keep exactly one of the
/// surviving minimal winning coalitions that contain them; the smallest
/// member of the last survivor wins.
inline GameTree realize_game_tree(const Game& s) {
  if (!is_ipsodual(s)) throw game_error(errc::not_ipsodual, "only ipsodual games are win-types");
  const int n = s.voters();
  const auto family = min_winning(s);
  const std::size_t words = (family.size() + 63) / 64;
  using Remaining = std::vector<std::uint64_t>;
  std::map<std::pair<int, Remaining>, GameTree::NodePtr> memo;

  auto go = [&](auto&& self, int player, const Remaining& rem) -> GameTree::NodePtr {
    const auto key = std::pair{player, rem};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    GameTree::NodePtr result;
    if (player == n) {
      int survivor = -1;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if ((rem[i >> 6] >> (i & 63)) & 1u) {
          if (survivor >= 0) throw std::logic_error("elimination left two coalitions");
          survivor = static_cast<int>(i);
        }
      }
      if (survivor < 0) throw std::logic_error("elimination left no coalition");
      result = GameTree::make_leaf(std::countr_zero(family[static_cast<std::size_t>(survivor)]) + 1);
    } else {
      std::vector<std::size_t> mine;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (((rem[i >> 6] >> (i & 63)) & 1u) && (family[i] & voter_bit(player))) mine.push_back(i);
      }
      if (mine.size() <= 1) {
        result = self(self, player + 1, rem);
      } else {
        std::vector<GameTree::NodePtr> options;
        for (std::size_t keep : mine) {
          Remaining next = rem;
          for (std::size_t i : mine) {
            if (i != keep) next[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
          }
          options.push_back(self(self, player + 1, next));
        }
        result = GameTree::make_binary_choice(player + 1, options);
      }
    }
    memo.emplace(key, result);
    return result;
  };

  Remaining all(words, 0);
  for (std::size_t i = 0; i < family.size(); ++i) all[i >> 6] |= std::uint64_t{1} << (i & 63);
  return GameTree(go(go, 0, all));
}

}  // namespace sg
