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

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "game.hpp"

namespace sg {

namespace detail {

inline void check_permutation_size(const Game& s) {
  if (s.voters() > kMaxPermutationVoters) {
    throw game_error(errc::too_large, std::to_string(s.voters()) + " voters exceeds the permutation cap of " +
                                          std::to_string(kMaxPermutationVoters));
  }
}

inline Coalition map_coalition(Coalition a, std::span<const int> perm) {
  Coalition image = 0;
  for (; a != 0; a &= a - 1) image |= voter_bit(perm[static_cast<std::size_t>(std::countr_zero(a))]);
  return image;
}

// Per-voter count of minimal winning coalitions by size; isomorphisms
// preserve it.
inline std::vector<std::vector<int>> voter_signatures(int n, const std::vector<Coalition>& family) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n + 1), 0));
  for (Coalition c : family) {
    const int size = std::popcount(c);
    for (Coalition rest = c; rest != 0; rest &= rest - 1) ++sig[std::countr_zero(rest)][size];
  }
  return sig;
}

// Backtracking search for perm with perm(S) = T, matching minimal winning
// families. `fixed_first` pins the image of voter 0.
inline std::optional<std::vector<int>> search_isomorphism(const Game& s, const Game& t,
                                                           std::optional<int> fixed_first = std::nullopt) {
  const int n = s.voters();
  if (n != t.voters() || s.winning_count() != t.winning_count()) return std::nullopt;
  auto ms = min_winning(s);
  auto mt = min_winning(t);
  if (ms.size() != mt.size()) return std::nullopt;
  std::sort(mt.begin(), mt.end());
  const auto sig_s = voter_signatures(n, ms);
  const auto sig_t = voter_signatures(n, mt);
  {
    auto a = sig_s, b = sig_t;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Coalitions grouped by their highest voter, checked once that voter is placed.
  std::vector<std::vector<Coalition>> by_top(static_cast<std::size_t>(n));
  for (Coalition c : ms) {
    if (c != 0) by_top[static_cast<std::size_t>(31 - std::countl_zero(c))].push_back(c);
  }
  std::vector<int> perm(static_cast<std::size_t>(n), -1);
  Coalition used = 0;
  auto recurse = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int target = 0; target < n; ++target) {
      if (used & voter_bit(target)) continue;
      if (v == 0 && fixed_first && target != *fixed_first) continue;
      if (sig_s[v] != sig_t[target]) continue;
      perm[v] = target;
      bool ok = true;
      for (Coalition c : by_top[v]) {
        if (!std::binary_search(mt.begin(), mt.end(), map_coalition(c, perm))) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used |= voter_bit(target);
        if (self(self, v + 1)) return true;
        used &= ~voter_bit(target);
      }
    }
    perm[v] = -1;
    return false;
  };
  if (!recurse(recurse, 0)) return std::nullopt;
  return perm;
}

}  // namespace detail

/// Lexicographically smallest mask (read as an integer) over all voter
/// permutations.
inline Game canonical_form(const Game& s) {
  detail::check_permutation_size(s);
  const int n = s.voters();
  std::vector<Coalition> winning;
  for (Coalition a = 0; a < static_cast<Coalition>(s.coalition_count()); ++a) {
    if (s.wins(a)) winning.push_back(a);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best(s.words().begin(), s.words().end());
  std::vector<std::uint64_t> words(best.size());
  do {
    std::fill(words.begin(), words.end(), 0);
    for (Coalition a : winning) {
      const Coalition image = detail::map_coalition(a, perm);
      words[image >> 6] |= std::uint64_t{1} << (image & 63);
    }
    if (std::lexicographical_compare(words.rbegin(), words.rend(), best.rbegin(), best.rend())) best = words;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return detail::make_game(n, std::move(best));
}

/// Some perm (0-based, voter v -> perm[v]) with relabel(s, perm) == t.
inline std::optional<std::vector<int>> find_isomorphism(const Game& s, const Game& t) {
  detail::check_permutation_size(s);
  return detail::search_isomorphism(s, t);
}

inline bool is_isomorphic(const Game& s, const Game& t) { return find_isomorphism(s, t).has_value(); }

/// Every voter can be carried to every other by an automorphism.
inline bool has_transitive_automorphism_group(const Game& s) {
  detail::check_permutation_size(s);
  for (int j = 1; j < s.voters(); ++j) {
    if (!detail::search_isomorphism(s, s, j)) return false;
  }
  return true;
}

}  // namespace sg
