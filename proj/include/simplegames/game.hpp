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
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "config.hpp"
#include "error.hpp"

namespace sg {

class Game;

namespace detail {

inline std::size_t word_count(int n) { return n <= 6 ? 1 : std::size_t{1} << (n - 6); }

inline Coalition full_coalition(int n) { return (Coalition{1} << n) - 1; }

// Bits of the single word in use when n < 6.
inline std::uint64_t used_bits(int n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n)) - 1;
}

Game make_game(int n, std::vector<std::uint64_t> words);

inline void check_voter_count(int n, int limit = kMaxVoters) {
  if (n < 1 || n > limit) {
    throw game_error(n < 1 ? errc::voter_out_of_range : errc::too_large,
                     "voter count " + std::to_string(n) + " outside 1.." + std::to_string(limit));
  }
}

}  // namespace detail

inline Coalition voter_bit(int voter) { return Coalition{1} << voter; }

/// Coalition from 1-based voter labels.
inline Coalition coalition_of(std::initializer_list<int> voters) {
  Coalition c = 0;
  for (int v : voters) c |= voter_bit(v - 1);
  return c;
}

/// 1-based voter labels of `c`, ascending.
inline std::vector<int> voters_of(Coalition c) {
  std::vector<int> out;
  for (int v = 0; c != 0; ++v, c >>= 1) {
    if (c & 1u) out.push_back(v + 1);
  }
  return out;
}

inline std::string format_coalition(Coalition c) {
  std::string out = "{";
  bool first = true;
  for (int v : voters_of(c)) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

/// A monotone family of winning coalitions over n voters, stored as a
/// 2^n-bit mask. Immutable once built.
class Game {
 public:
  using word_type = std::uint64_t;

  /// Validating constructor: `words` is the raw mask (bit i = coalition i).
  static Game from_words(int n, std::vector<word_type> words);

  /// The exact winning set; rejects non-monotone input rather than repairing it.
  static Game from_coalitions(int n, std::span<const Coalition> winning);

  /// Smallest game containing every generator.
  static Game upward_closure(int n, std::span<const Coalition> generators);

  /// Builds the mask from a predicate over coalitions and validates it.
  template <class Pred>
  static Game from_predicate(int n, Pred&& wins);

  static Game from_hex(int n, std::string_view hex);

  static Game hat0(int n);
  static Game hat1(int n);
  /// Dictatorship by `voter` (1-based).
  static Game dictator(int n, int voter);

  int voters() const noexcept { return n_; }
  std::size_t coalition_count() const noexcept { return std::size_t{1} << n_; }
  bool wins(Coalition c) const noexcept { return (words_[c >> 6] >> (c & 63)) & 1u; }
  std::size_t winning_count() const noexcept;
  std::span<const word_type> words() const noexcept { return words_; }
  std::string hex() const;

  friend bool operator==(const Game&, const Game&) = default;

  /// Orders by voter count, then by the mask read as an unsigned integer.
  friend std::strong_ordering operator<=>(const Game& a, const Game& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  Game(int n, std::vector<word_type> words) : n_(n), words_(std::move(words)) {}
  friend Game detail::make_game(int, std::vector<std::uint64_t>);

  int n_;
  std::vector<word_type> words_;
};

namespace detail {

inline Game make_game(int n, std::vector<std::uint64_t> words) { return Game(n, std::move(words)); }

/// Unvalidated build; callers guarantee monotonicity.
template <class Pred>
Game build(int n, Pred&& wins) {
  std::vector<std::uint64_t> words(word_count(n), 0);
  const Coalition count = Coalition{1} << n;
  for (Coalition a = 0; a < count; ++a) {
    if (wins(a)) words[a >> 6] |= std::uint64_t{1} << (a & 63);
  }
  return make_game(n, std::move(words));
}

/// First (coalition, voter) with coalition winning and coalition+voter losing.
template <class Pred>
std::optional<std::pair<Coalition, int>> find_violation(int n, Pred&& wins) {
  const Coalition count = Coalition{1} << n;
  for (Coalition a = 0; a < count; ++a) {
    if (!wins(a)) continue;
    for (int v = 0; v < n; ++v) {
      if (!(a & voter_bit(v)) && !wins(a | voter_bit(v))) return std::pair{a, v};
    }
  }
  return std::nullopt;
}

[[noreturn]] inline void throw_violation(Coalition a, int v) {
  throw monotonicity_error(a, v,
                           "coalition " + format_coalition(a) + " wins but " +
                               format_coalition(a | voter_bit(v)) + " loses");
}

}  // namespace detail

template <class Pred>
Game Game::from_predicate(int n, Pred&& wins) {
  detail::check_voter_count(n);
  Game g = detail::build(n, wins);
  if (auto bad = detail::find_violation(n, [&](Coalition a) { return g.wins(a); })) {
    detail::throw_violation(bad->first, bad->second);
  }
  return g;
}

inline Game Game::from_words(int n, std::vector<word_type> words) {
  detail::check_voter_count(n);
  if (words.size() != detail::word_count(n)) {
    throw game_error(errc::parse_error, "mask has wrong length for " + std::to_string(n) + " voters");
  }
  if (words[0] & ~detail::used_bits(n)) {
    throw game_error(errc::parse_error, "mask has bits beyond 2^n");
  }
  Game g(n, std::move(words));
  if (auto bad = detail::find_violation(n, [&](Coalition a) { return g.wins(a); })) {
    detail::throw_violation(bad->first, bad->second);
  }
  return g;
}

inline Game Game::from_coalitions(int n, std::span<const Coalition> winning) {
  detail::check_voter_count(n);
  std::vector<word_type> words(detail::word_count(n), 0);
  for (Coalition c : winning) {
    if (c > detail::full_coalition(n)) {
      throw game_error(errc::voter_out_of_range, "coalition " + format_coalition(c) +
                                                     " names a voter above " + std::to_string(n));
    }
    words[c >> 6] |= word_type{1} << (c & 63);
  }
  return from_words(n, std::move(words));
}

inline Game Game::upward_closure(int n, std::span<const Coalition> generators) {
  detail::check_voter_count(n);
  for (Coalition c : generators) {
    if (c > detail::full_coalition(n)) {
      throw game_error(errc::voter_out_of_range, "generator " + format_coalition(c) + " out of range");
    }
  }
  return detail::build(n, [&](Coalition a) {
    return std::any_of(generators.begin(), generators.end(), [a](Coalition g) { return (g & ~a) == 0; });
  });
}

inline Game Game::hat0(int n) {
  detail::check_voter_count(n);
  return Game(n, std::vector<word_type>(detail::word_count(n), 0));
}

inline Game Game::hat1(int n) {
  detail::check_voter_count(n);
  std::vector<word_type> words(detail::word_count(n), ~word_type{0});
  words[0] &= detail::used_bits(n);
  return Game(n, std::move(words));
}

inline Game Game::dictator(int n, int voter) {
  detail::check_voter_count(n);
  if (voter < 1 || voter > n) {
    throw game_error(errc::voter_out_of_range, "dictator " + std::to_string(voter) + " not in 1.." + std::to_string(n));
  }
  const Coalition bit = voter_bit(voter - 1);
  return detail::build(n, [bit](Coalition a) { return (a & bit) != 0; });
}

inline std::size_t Game::winning_count() const noexcept {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

inline std::string Game::hex() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  const std::size_t bits = coalition_count();
  const std::size_t digits = bits < 4 ? 1 : bits / 4;
  std::string out;
  out.reserve(digits);
  for (std::size_t d = digits; d-- > 0;) {
    const std::size_t bit = d * 4;
    out += kDigits[(words_[bit >> 6] >> (bit & 63)) & 0xF];
  }
  return out;
}

inline Game Game::from_hex(int n, std::string_view hex) {
  detail::check_voter_count(n);
  const std::size_t bits = std::size_t{1} << n;
  const std::size_t digits = bits < 4 ? 1 : bits / 4;
  if (hex.size() != digits) {
    throw game_error(errc::parse_error, "expected " + std::to_string(digits) + " hex digits for " +
                                            std::to_string(n) + " voters, got '" + std::string(hex) + "'");
  }
  std::vector<word_type> words(detail::word_count(n), 0);
  for (std::size_t i = 0; i < digits; ++i) {
    const char ch = hex[i];
    word_type value;
    if (ch >= '0' && ch <= '9') value = static_cast<word_type>(ch - '0');
    else if (ch >= 'A' && ch <= 'F') value = static_cast<word_type>(ch - 'A' + 10);
    else if (ch >= 'a' && ch <= 'f') value = static_cast<word_type>(ch - 'a' + 10);
    else throw game_error(errc::parse_error, "bad hex digit in '" + std::string(hex) + "'");
    const std::size_t bit = (digits - 1 - i) * 4;
    words[bit >> 6] |= value << (bit & 63);
  }
  return from_words(n, std::move(words));
}

// ---------------------------------------------------------------------------
// Duality and classification

/// Blocking dual: A wins in S* iff the complement of A loses in S.
inline Game dual(const Game& s) {
  const Coalition full = detail::full_coalition(s.voters());
  return detail::build(s.voters(), [&](Coalition a) { return !s.wins(full ^ a); });
}

inline std::vector<Coalition> min_winning(const Game& s) {
  std::vector<Coalition> out;
  const Coalition count = static_cast<Coalition>(s.coalition_count());
  for (Coalition a = 0; a < count; ++a) {
    if (!s.wins(a)) continue;
    bool minimal = true;
    for (Coalition rest = a; rest != 0 && minimal; rest &= rest - 1) {
      if (s.wins(a & ~(rest & -rest))) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

inline std::vector<Coalition> max_losing(const Game& s) {
  std::vector<Coalition> out;
  const Coalition full = detail::full_coalition(s.voters());
  const Coalition count = static_cast<Coalition>(s.coalition_count());
  for (Coalition a = 0; a < count; ++a) {
    if (s.wins(a)) continue;
    bool maximal = true;
    for (Coalition rest = full & ~a; rest != 0 && maximal; rest &= rest - 1) {
      if (!s.wins(a | (rest & -rest))) maximal = false;
    }
    if (maximal) out.push_back(a);
  }
  return out;
}

/// Voters appearing in some minimal winning coalition.
inline Coalition powerful_voters(const Game& s) {
  Coalition out = 0;
  for (Coalition c : min_winning(s)) out |= c;
  return out;
}

struct Classification {
  bool is_game = true;
  bool is_simple = false;
  bool is_strong = false;
  bool is_ipsodual = false;
  Coalition dummies = 0;
  Coalition powerful = 0;
};

inline Classification classify(const Game& s) {
  const Game d = dual(s);
  Classification c;
  bool subset = true;
  bool superset = true;
  for (std::size_t i = 0; i < s.words().size(); ++i) {
    if (s.words()[i] & ~d.words()[i]) subset = false;
    if (d.words()[i] & ~s.words()[i]) superset = false;
  }
  c.is_simple = subset;
  c.is_strong = superset;
  c.is_ipsodual = subset && superset;
  c.powerful = powerful_voters(s);
  c.dummies = detail::full_coalition(s.voters()) & ~c.powerful;
  return c;
}

inline bool is_ipsodual(const Game& s) { return s == dual(s); }

// ---------------------------------------------------------------------------
// Voter-set changes

/// Appends a powerless voter n+1.
inline Game add_dummy(const Game& s) {
  const int n = s.voters();
  detail::check_voter_count(n + 1);
  const Coalition low = detail::full_coalition(n);
  return detail::build(n + 1, [&](Coalition a) { return s.wins(a & low); });
}

/// Pads `s` with trailing dummies up to `n` voters.
inline Game with_voters(const Game& s, int n) {
  if (n < s.voters()) {
    throw game_error(errc::mismatched_voter_count,
                     "cannot shrink a " + std::to_string(s.voters()) + "-voter game to " + std::to_string(n));
  }
  detail::check_voter_count(n);
  if (n == s.voters()) return s;
  const Coalition low = detail::full_coalition(s.voters());
  return detail::build(n, [&](Coalition a) { return s.wins(a & low); });
}

/// Relabels voters: voter v (0-based) becomes perm[v].
inline Game relabel(const Game& s, std::span<const int> perm) {
  const int n = s.voters();
  if (static_cast<int>(perm.size()) != n) {
    throw game_error(errc::map_size_mismatch, "permutation size differs from voter count");
  }
  Coalition seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & voter_bit(p))) {
      throw game_error(errc::map_size_mismatch, "relabeling is not a permutation");
    }
    seen |= voter_bit(p);
  }
  std::vector<std::uint64_t> words(detail::word_count(n), 0);
  const Coalition count = static_cast<Coalition>(s.coalition_count());
  for (Coalition a = 0; a < count; ++a) {
    if (!s.wins(a)) continue;
    Coalition image = 0;
    for (Coalition rest = a; rest != 0; rest &= rest - 1) image |= voter_bit(perm[std::countr_zero(rest)]);
    words[image >> 6] |= std::uint64_t{1} << (image & 63);
  }
  return detail::make_game(n, std::move(words));
}

/// The game restricted to its powerful voters, plus the original (0-based)
/// label of each retained voter. A game with no powerful voter keeps one
/// voter so that the result is still a valid game.
struct CoreGame {
  Game game;
  std::vector<int> original;
};

inline CoreGame strip_dummies(const Game& s) {
  const Coalition powerful = powerful_voters(s);
  std::vector<int> original = voters_of(powerful);
  for (int& v : original) --v;
  if (original.empty()) original.push_back(0);
  const int k = static_cast<int>(original.size());
  Game core = detail::build(k, [&](Coalition b) {
    Coalition a = 0;
    for (int i = 0; i < k; ++i) {
      if (b & voter_bit(i)) a |= voter_bit(original[i]);
    }
    return s.wins(a);
  });
  return {std::move(core), std::move(original)};
}

}  // namespace sg

template <>
struct std::hash<sg::Game> {
  std::size_t operator()(const sg::Game& g) const noexcept {
    std::size_t h = static_cast<std::size_t>(g.voters()) * 0x9E3779B97F4A7C15ull;
    for (std::uint64_t w : g.words()) h = (h ^ w) * 0x100000001B3ull + (h >> 29);
    return h;
  }
};
