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

#include <span>
#include <string>
#include <vector>

#include "game.hpp"

namespace sg {

/// Assignment of offices (the domain voters) to voters of a new game.
class VoterMap {
 public:
  /// `image[o]` is the 0-based voter holding office o.
  VoterMap(int codomain, std::vector<int> image) : codomain_(codomain), image_(std::move(image)) {
    detail::check_voter_count(codomain);
    detail::check_voter_count(domain());
    for (int v : image_) {
      if (v < 0 || v >= codomain_) {
        throw game_error(errc::voter_out_of_range, "office mapped to voter " + std::to_string(v + 1) +
                                                       " outside 1.." + std::to_string(codomain_));
      }
    }
  }

  static VoterMap identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i;
    return VoterMap(n, std::move(image));
  }

  int domain() const noexcept { return static_cast<int>(image_.size()); }
  int codomain() const noexcept { return codomain_; }
  int operator()(int office) const { return image_[static_cast<std::size_t>(office)]; }
  std::span<const int> image() const noexcept { return image_; }

  friend bool operator==(const VoterMap&, const VoterMap&) = default;

 private:
  int codomain_;
  std::vector<int> image_;
};

namespace detail {

inline void require_same_voters(const Game& a, const Game& b) {
  if (a.voters() != b.voters()) {
    throw game_error(errc::mismatched_voter_count,
                     std::to_string(a.voters()) + " vs " + std::to_string(b.voters()) + " voters");
  }
}

inline void require_voter(const Game& s, int voter) {
  if (voter < 1 || voter > s.voters()) {
    throw game_error(errc::voter_out_of_range,
                     "voter " + std::to_string(voter) + " not in 1.." + std::to_string(s.voters()));
  }
}

}  // namespace detail

/// Coalitions winning in at least two of the three games.
inline Game median(const Game& s, const Game& t, const Game& u) {
  detail::require_same_voters(s, t);
  detail::require_same_voters(s, u);
  std::vector<std::uint64_t> words(s.words().size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto a = s.words()[i], b = t.words()[i], c = u.words()[i];
    words[i] = (a & b) | (a & c) | (b & c);
  }
  return detail::make_game(s.voters(), std::move(words));
}

/// Generalized composition: the voters play each inner game, and the outer
/// game judges the vector of outcomes.
inline Game compound(const Game& outer, std::span<const Game> inner) {
  if (static_cast<int>(inner.size()) != outer.voters()) {
    throw game_error(errc::arity_mismatch, "outer game has " + std::to_string(outer.voters()) +
                                               " voters but " + std::to_string(inner.size()) + " inner games");
  }
  for (const Game& g : inner) detail::require_same_voters(inner.front(), g);
  const int n = inner.front().voters();
  return detail::build(n, [&](Coalition a) {
    Coalition signature = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i].wins(a)) signature |= voter_bit(static_cast<int>(i));
    }
    return outer.wins(signature);
  });
}

/// f(S) = {A : f^{-1}(A) in S}.
inline Game quotient(const Game& s, const VoterMap& f) {
  if (f.domain() != s.voters()) {
    throw game_error(errc::map_size_mismatch, "map domain " + std::to_string(f.domain()) +
                                                  " differs from voter count " + std::to_string(s.voters()));
  }
  const int m = f.codomain();
  std::vector<Coalition> offices(static_cast<std::size_t>(m), 0);
  for (int o = 0; o < f.domain(); ++o) offices[static_cast<std::size_t>(f(o))] |= voter_bit(o);
  const std::size_t count = std::size_t{1} << m;
  std::vector<Coalition> preimage(count, 0);
  std::vector<std::uint64_t> words(detail::word_count(m), 0);
  for (std::size_t a = 0; a < count; ++a) {
    if (a != 0) {
      const int low = std::countr_zero(a);
      preimage[a] = preimage[a & (a - 1)] | offices[static_cast<std::size_t>(low)];
    }
    if (s.wins(preimage[a])) words[a >> 6] |= std::uint64_t{1} << (a & 63);
  }
  return detail::make_game(m, std::move(words));
}

/// Choice by `mover` (1-based) between s1 and s2:
/// (S1 ∩ S2) ∪ {A ∈ S1 ∪ S2 : mover ∈ A}.
inline Game chi(int mover, const Game& s1, const Game& s2) {
  detail::require_same_voters(s1, s2);
  detail::require_voter(s1, mover);
  const Coalition bit = voter_bit(mover - 1);
  return detail::build(s1.voters(), [&](Coalition a) {
    const bool w1 = s1.wins(a), w2 = s2.wins(a);
    return (w1 && w2) || ((a & bit) && (w1 || w2));
  });
}

/// S_{xy}: x leaves the room and votes as y does. Equal to the quotient by
/// the map fixing every voter except x, which goes to y.
inline Game substitute(const Game& s, int x, int y) {
  detail::require_voter(s, x);
  detail::require_voter(s, y);
  if (x == y) throw game_error(errc::same_voter, "substitution needs two distinct voters");
  VoterMap f = VoterMap::identity(s.voters());
  std::vector<int> image(f.image().begin(), f.image().end());
  image[static_cast<std::size_t>(x - 1)] = y - 1;
  return quotient(s, VoterMap(s.voters(), std::move(image)));
}

/// S_{x/y}: x leaves the room and votes against y. A game exactly when
/// x ≤_S y; otherwise throws monotonicity_error carrying the witness.
inline Game oppose(const Game& s, int x, int y) {
  detail::require_voter(s, x);
  detail::require_voter(s, y);
  if (x == y) throw game_error(errc::same_voter, "opposition needs two distinct voters");
  const Coalition xb = voter_bit(x - 1), yb = voter_bit(y - 1);
  auto wins = [&](Coalition a) {
    const Coalition b = a & ~xb;
    return (b & yb) ? s.wins(b) : s.wins(b | xb);
  };
  if (auto bad = detail::find_violation(s.voters(), wins)) detail::throw_violation(bad->first, bad->second);
  return detail::build(s.voters(), wins);
}

/// x ≥_S y: swapping y out for x never turns a winning coalition into a loser.
inline bool influence_geq(const Game& s, int x, int y) {
  detail::require_voter(s, x);
  detail::require_voter(s, y);
  const Coalition xb = voter_bit(x - 1), yb = voter_bit(y - 1);
  const Coalition count = static_cast<Coalition>(s.coalition_count());
  for (Coalition a = 0; a < count; ++a) {
    if ((a & yb) && !(a & xb) && s.wins(a) && !s.wins(a ^ yb ^ xb)) return false;
  }
  return true;
}

/// geq[x][y] for 0-based voters.
inline std::vector<std::vector<bool>> influence_preorder(const Game& s) {
  const int n = s.voters();
  std::vector<std::vector<bool>> geq(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) geq[x][y] = influence_geq(s, x + 1, y + 1);
  }
  return geq;
}

/// Renders the pre-order as a chain like "1 > 2~3 > 4" when it is total,
/// otherwise lists the strict and tied pairs.
inline std::string format_influence(const Game& s) {
  const auto geq = influence_preorder(s);
  const int n = s.voters();
  bool total = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!geq[x][y] && !geq[y][x]) total = false;
    }
  }
  std::string out;
  if (total) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return geq[a][b] && !geq[b][a]; });
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0) out += geq[order[i - 1]][order[i]] && geq[order[i]][order[i - 1]] ? "~" : " > ";
      out += std::to_string(order[i] + 1);
    }
    return out;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!geq[x][y] && !geq[y][x]) continue;
      if (!out.empty()) out += ", ";
      const char* rel = geq[x][y] && geq[y][x] ? "~" : (geq[x][y] ? " > " : " < ");
      out += std::to_string(x + 1) + rel + std::to_string(y + 1);
    }
  }
  return out.empty() ? "trivial" : out;
}

}  // namespace sg
